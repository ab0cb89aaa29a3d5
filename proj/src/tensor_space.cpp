#include "affschur/tensor_space.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affschur {

namespace {

LaurentPoly vpow(int k) { return LaurentPoly::v(k); }

int residue(int s, int n) { return mod1(s, n); }

int rank_of(const TensorElement& x) {
    for (const auto& [i, c] : x) return static_cast<int>(i.size());
    return 0;
}

// Applies a map basis -> element linearly.
template <class F>
TensorElement linear(const TensorElement& x, F&& f) {
    TensorElement out;
    for (const auto& [i, c] : x)
        for (const auto& [j, d] : f(i)) out.add(j, c * d);
    return out;
}

// omega_i T_k for i in I(n, r)
TensorElement tk_on_fundamental_box(const TensorIndex& i, int k) {
    std::size_t a = static_cast<std::size_t>(k - 1), b = a + 1;
    TensorElement out;
    if (i[a] == i[b]) {
        out.add(i, vpow(2));
        return out;
    }
    TensorIndex s = i;
    std::swap(s[a], s[b]);
    out.add(s, vpow(1));
    if (i[b] < i[a]) out.add(i, vpow(2) - LaurentPoly(1));
    return out;
}

// omega_j Y_k^{e1} Y_{k+1}^{e2} (Y = X^{-1}) with the other slots shifted by m.
TensorIndex shifted(TensorIndex j, int n, const std::vector<int>& m) {
    for (std::size_t t = 0; t < j.size(); ++t) j[t] += n * m[t];
    return j;
}

TensorElement tk_basis(const TensorIndex& i, int n, int k) {
    int r = static_cast<int>(i.size());
    if (k < 1 || k >= r) throw std::invalid_argument("T_k needs 1 <= k < r");
    TensorIndex j(i.size());
    std::vector<int> m(i.size());
    for (std::size_t t = 0; t < i.size(); ++t) {
        j[t] = residue(i[t], n);
        m[t] = (i[t] - j[t]) / n;
    }
    std::size_t ka = static_cast<std::size_t>(k - 1), kb = ka + 1;
    int a = m[ka], b = m[kb];
    TensorElement out;
    // f T_k = T_k (s f) + (1 - v^2) Y_k (s f - f) / (Y_k - Y_{k+1}) for f a Laurent monomial in Y
    std::vector<int> sm = m;
    std::swap(sm[ka], sm[kb]);
    for (const auto& [p, c] : tk_on_fundamental_box(j, k)) out.add(shifted(p, n, sm), c);
    if (a != b) {
        int lo = std::min(a, b), len = std::abs(a - b);
        LaurentPoly coeff = LaurentPoly(1) - vpow(2);
        if (a > b) coeff = -coeff;
        for (int p = 0; p < len; ++p) {
            std::vector<int> e = m;
            e[ka] = lo + p + 1;
            e[kb] = lo + len - 1 - p;
            out.add(shifted(j, n, e), coeff);
        }
    }
    return out;
}

}  // namespace

TensorElement tensor_basis(const TensorIndex& i) { return TensorElement(i); }

TensorElement act_Xt_inv(const TensorElement& x, int n, int t) {
    return linear(x, [&](const TensorIndex& i) {
        TensorIndex j = i;
        j.at(static_cast<std::size_t>(t - 1)) += n;
        return TensorElement(j);
    });
}

TensorElement act_Xt(const TensorElement& x, int n, int t) {
    return linear(x, [&](const TensorIndex& i) {
        TensorIndex j = i;
        j.at(static_cast<std::size_t>(t - 1)) -= n;
        return TensorElement(j);
    });
}

TensorElement act_Tk(const TensorElement& x, int n, int k) {
    return linear(x, [&](const TensorIndex& i) { return tk_basis(i, n, k); });
}

TensorElement act_Tk_inv(const TensorElement& x, int n, int k) {
    // T^{-1} = v^{-2} T - (1 - v^{-2})
    return act_Tk(x, n, k) * vpow(-2) - x * (LaurentPoly(1) - vpow(-2));
}

TensorElement act_Trho(const TensorElement& x, int n) {
    int r = rank_of(x);
    if (r == 0) return x;
    TensorElement y = act_Xt_inv(x, n, 1);
    for (int k = 1; k < r; ++k) y = act_Tk_inv(y, n, k);
    return y * vpow(r - 1);
}

TensorElement act_Trho_inv(const TensorElement& x, int n) {
    int r = rank_of(x);
    if (r == 0) return x;
    TensorElement y = x;
    for (int k = r - 1; k >= 1; --k) y = act_Tk(y, n, k);
    return act_Xt(y, n, 1) * vpow(1 - r);
}

TensorElement act_Ts(const TensorElement& x, int n, int k) {
    int r = rank_of(x);
    if (r == 0) return x;
    if (r < 2) throw std::invalid_argument("no simple reflections for r < 2");
    int k0 = mod1(k, r);
    if (k0 < r) return act_Tk(x, n, k0);
    // s_r = rho s_{r-1} rho^{-1}
    return act_Trho_inv(act_Tk(act_Trho(x, n), n, r - 1), n);
}

TensorElement act_hecke(const TensorElement& x, int n, const HeckeElement& h) {
    TensorElement out;
    for (const auto& [w, c] : h) {
        auto [a, word] = reduced_word(w);
        TensorElement y = x;
        for (int s = 0; s < std::abs(a); ++s) y = a > 0 ? act_Trho(y, n) : act_Trho_inv(y, n);
        for (int k : word) y = act_Ts(y, n, k);
        out += y * c;
    }
    return out;
}

// ---- left actions ----

namespace {

// exponent of K~_i = K_i K_{i+1}^{-1} on omega_s
int ktilde_exp(int n, int i, int s) {
    int sb = residue(s, n);
    return (sb == residue(i, n)) - (sb == residue(i + 1, n));
}

}  // namespace

TensorElement act_E(const TensorElement& x, int n, int i) {
    return linear(x, [&](const TensorIndex& idx) {
        TensorElement out;
        std::size_t r = idx.size();
        for (std::size_t t = 0; t < r; ++t) {
            if (residue(idx[t], n) != residue(i + 1, n)) continue;
            int e = 0;
            for (std::size_t s = t + 1; s < r; ++s) e += ktilde_exp(n, i, idx[s]);
            TensorIndex j = idx;
            --j[t];
            out.add(j, vpow(e));
        }
        return out;
    });
}

TensorElement act_F(const TensorElement& x, int n, int i) {
    return linear(x, [&](const TensorIndex& idx) {
        TensorElement out;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (residue(idx[t], n) != residue(i, n)) continue;
            int e = 0;
            for (std::size_t s = 0; s < t; ++s) e -= ktilde_exp(n, i, idx[s]);
            TensorIndex j = idx;
            ++j[t];
            out.add(j, vpow(e));
        }
        return out;
    });
}

TensorElement act_K(const TensorElement& x, int n, int i, int power) {
    return linear(x, [&](const TensorIndex& idx) {
        int e = 0;
        for (int s : idx) e += residue(s, n) == residue(i, n);
        return TensorElement(idx, vpow(power * e));
    });
}

TensorElement act_z(const TensorElement& x, int n, Sign s, int t) {
    int shift = (s == Sign::Plus ? -1 : 1) * t * n;
    return linear(x, [&](const TensorIndex& idx) {
        TensorElement out;
        for (std::size_t p = 0; p < idx.size(); ++p) {
            TensorIndex j = idx;
            j[p] += shift;
            out.add(j, LaurentPoly(1));
        }
        return out;
    });
}

TensorElement act_semisimple(const TensorElement& x, int n, Sign s, const DimVector& a) {
    if (static_cast<int>(a.size()) != n) throw DimMismatch("semisimple generator has the wrong length");
    int total = sigma(a);
    return linear(x, [&](const TensorIndex& idx) {
        TensorElement out;
        int r = static_cast<int>(idx.size());
        if (total > r) return out;
        std::vector<DimVector> e;
        for (int p : idx) e.push_back(unit_vector(n, p));
        // the vertex removed (Plus) or added (Minus) at each slot
        std::vector<int> vert(static_cast<std::size_t>(r));
        for (int p = 0; p < r; ++p) vert[static_cast<std::size_t>(p)] = residue(idx[static_cast<std::size_t>(p)] - (s == Sign::Plus ? 1 : 0), n);
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            if (__builtin_popcount(mask) != total) continue;
            DimVector got(static_cast<std::size_t>(n), 0);
            for (int p = 0; p < r; ++p)
                if (mask >> p & 1) ++got[static_cast<std::size_t>(vert[static_cast<std::size_t>(p)] - 1)];
            if (got != a) continue;
            int ex = 0;
            for (int q = 0; q < r; ++q)      // t
                for (int p = q + 1; p < r; ++p) {  // s > t
                    int mt = mask >> q & 1, ms = mask >> p & 1;
                    int f = s == Sign::Plus ? mt * (ms - 1) : ms * (mt - 1);
                    if (f) ex += f * euler_form(e[static_cast<std::size_t>(p)], e[static_cast<std::size_t>(q)]);
                }
            TensorIndex j = idx;
            for (int p = 0; p < r; ++p)
                if (mask >> p & 1) j[static_cast<std::size_t>(p)] += s == Sign::Plus ? -1 : 1;
            out.add(j, vpow(ex));
        }
        return out;
    });
}

TensorElement act_gen_left(const LeftGenerator& g, int n, const TensorElement& x) {
    using K = LeftGenerator::Kind;
    switch (g.kind) {
        case K::E: return act_E(x, n, g.index);
        case K::F: return act_F(x, n, g.index);
        case K::K: return act_K(x, n, g.index, 1);
        case K::Kinv: return act_K(x, n, g.index, -1);
        case K::ZPlus: return act_z(x, n, Sign::Plus, g.index);
        case K::ZMinus: return act_z(x, n, Sign::Minus, g.index);
        case K::SemisimplePlus: return act_semisimple(x, n, Sign::Plus, g.a);
        case K::SemisimpleMinus: return act_semisimple(x, n, Sign::Minus, g.a);
    }
    throw std::invalid_argument("unknown generator");
}

// ---- comparison with the Schur algebra ----

TensorIndex fundamental_index(const DimVector& lambda) {
    TensorIndex out;
    for (std::size_t m = 0; m < lambda.size(); ++m)
        for (int c = 0; c < lambda[m]; ++c) out.push_back(static_cast<int>(m) + 1);
    return out;
}

TensorElement tensor_of_matrix_basis(const TensorIndex& j, int n) {
    int r = static_cast<int>(j.size());
    DimVector lambda(static_cast<std::size_t>(n), 0);
    for (int x : j) ++lambda[static_cast<std::size_t>(residue(x, n) - 1)];
    // w with j = i_lambda w, minimal in S_lambda w: within a residue class, the slots k take
    // increasing offsets in the order of k - c_k r, where j_k lies in period c_k.
    std::vector<int> start(static_cast<std::size_t>(n), 1);
    for (int m = 1; m < n; ++m) start[static_cast<std::size_t>(m)] = start[static_cast<std::size_t>(m - 1)] + lambda[static_cast<std::size_t>(m - 1)];
    std::vector<std::vector<std::pair<int, int>>> classes(static_cast<std::size_t>(n));  // (key, k)
    for (int k = 1; k <= r; ++k) {
        int val = j[static_cast<std::size_t>(k - 1)], m0 = residue(val, n), c = (val - m0) / n;
        classes[static_cast<std::size_t>(m0 - 1)].emplace_back(k - c * r, k);
    }
    std::vector<int> window(static_cast<std::size_t>(r));
    for (int m0 = 1; m0 <= n; ++m0) {
        auto& cl = classes[static_cast<std::size_t>(m0 - 1)];
        std::sort(cl.begin(), cl.end());
        for (std::size_t o = 0; o < cl.size(); ++o) {
            int k = cl[o].second, c = (j[static_cast<std::size_t>(k - 1)] - m0) / n;
            window[static_cast<std::size_t>(k - 1)] = c * r + start[static_cast<std::size_t>(m0 - 1)] + static_cast<int>(o);
        }
    }
    AffinePerm w(window);
    TensorElement base = tensor_basis(fundamental_index(lambda));
    return act_hecke(base, n, hecke_basis(w)) * vpow(-length(w));
}

namespace {

// Embedding of n x r (or n x n) periodic data into N x N periodic matrices.
int embed_row(int k, int n, int N) {
    int k0 = mod1(k, n);
    return k0 + (k - k0) / n * N;
}

PeriodicMatrix embed_square(const PeriodicMatrix& B, int N) {
    int n = B.n();
    PeriodicMatrix out(N);
    for (const auto& e : B.entries()) out.add(embed_row(e.i, n, N), embed_row(e.j, n, N), e.a);
    return out;
}

PeriodicMatrix matrix_of_index(const TensorIndex& j, int n, int N) {
    PeriodicMatrix out(N);
    for (std::size_t l = 0; l < j.size(); ++l) out.add(embed_row(j[l], n, N), static_cast<int>(l) + 1, 1);
    return out;
}

TensorIndex index_of_matrix(const PeriodicMatrix& C, int n, int r) {
    int N = C.n();
    TensorIndex j(static_cast<std::size_t>(r), 0);
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (const auto& e : C.entries()) {
        int l0 = mod1(e.j, N), b = (e.j - l0) / N;
        if (l0 > r || e.a != 1) throw InternalInconsistency("not a tensor space basis matrix");
        int row = e.i - b * N, i0 = mod1(row, N), c = (row - i0) / N;
        if (i0 > n) throw InternalInconsistency("row outside the embedded range");
        j[static_cast<std::size_t>(l0 - 1)] = i0 + c * n;
        seen[static_cast<std::size_t>(l0 - 1)] = true;
    }
    for (bool s : seen)
        if (!s) throw InternalInconsistency("column without an entry");
    return j;
}

}  // namespace

TensorElement schur_act(const SchurElement& s, int n, const TensorElement& x) {
    TensorElement out;
    SchurElement big;
    int r = rank_of(x), N = std::max(n, r);
    for (const auto& [B, c] : s) {
        if (B.n() != n) throw DimMismatch("Schur element has the wrong n");
        big.add(embed_square(B, N), c);
    }
    for (const auto& [j, c] : x) {
        TensorIndex j0(j.size());
        for (std::size_t t = 0; t < j.size(); ++t) j0[t] = residue(j[t], n);
        SchurElement prod = mul_oracle(big, bracket(matrix_of_index(j0, n, N)));
        TensorElement y;
        for (const auto& [C, d] : prod) y += tensor_of_matrix_basis(index_of_matrix(C, n, r), n) * d;
        // omega_j = omega_{j0} X^{-m}
        for (std::size_t t = 0; t < j.size(); ++t) {
            int m = (j[t] - j0[t]) / n;
            for (int q = 0; q < std::abs(m); ++q)
                y = m > 0 ? act_Xt_inv(y, n, static_cast<int>(t) + 1) : act_Xt(y, n, static_cast<int>(t) + 1);
        }
        out += y * c;
    }
    return out;
}

std::string tensor_to_string(const TensorElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : x.sorted()) {
        os << (first ? "" : " + ") << '(' << c.to_string() << ")*w(";
        for (std::size_t t = 0; t < i.size(); ++t) os << (t ? "," : "") << i[t];
        os << ')';
        first = false;
    }
    return os.str();
}

}  // namespace affschur
