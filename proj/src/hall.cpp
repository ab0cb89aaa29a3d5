#include "affschur/hall.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace affschur {

namespace {

std::atomic<int> g_cap{5};

int mod_inv(int x, int p) {
    long r = 1, b = x % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<int>(r);
}

bool is_prime(int x) {
    if (x < 2) return false;
    for (int d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

int next_prime(int x) {
    do ++x;
    while (!is_prime(x));
    return x;
}

// Enumerates all subspaces of F_p^d in reduced row echelon form.
std::vector<FqModule::Rows> make_subspaces(int d, int p) {
    std::vector<FqModule::Rows> out;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<int> piv;
        for (int c = 0; c < d; ++c)
            if (mask & (1 << c)) piv.push_back(c);
        std::vector<std::pair<int, int>> free;
        for (std::size_t t = 0; t < piv.size(); ++t)
            for (int c = piv[t] + 1; c < d; ++c)
                if (!(mask & (1 << c))) free.emplace_back(static_cast<int>(t), c);
        long total = 1;
        for (std::size_t k = 0; k < free.size(); ++k) total *= p;
        for (long code = 0; code < total; ++code) {
            FqModule::Rows rows(piv.size(), std::vector<int>(static_cast<std::size_t>(d), 0));
            for (std::size_t t = 0; t < piv.size(); ++t) rows[t][static_cast<std::size_t>(piv[t])] = 1;
            long c = code;
            for (const auto& [t, col] : free) {
                rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(col)] = static_cast<int>(c % p);
                c /= p;
            }
            out.push_back(std::move(rows));
        }
    }
    return out;
}

std::mutex g_subspace_mutex;
std::map<std::pair<int, int>, std::vector<FqModule::Rows>> g_subspaces;

const std::vector<FqModule::Rows>& rref_subspaces(int d, int p) {
    {
        std::lock_guard<std::mutex> lock(g_subspace_mutex);
        auto it = g_subspaces.find({d, p});
        if (it != g_subspaces.end()) return it->second;
    }
    auto v = make_subspaces(d, p);
    std::lock_guard<std::mutex> lock(g_subspace_mutex);
    return g_subspaces.emplace(std::make_pair(d, p), std::move(v)).first->second;
}

std::mutex g_theta_mutex;
std::map<DimVector, std::vector<PeriodicMatrix>> g_theta;

const std::vector<PeriodicMatrix>& theta_cached(const DimVector& d) {
    {
        std::lock_guard<std::mutex> lock(g_theta_mutex);
        auto it = g_theta.find(d);
        if (it != g_theta.end()) return it->second;
    }
    auto v = theta_plus_with_dim(d);
    std::lock_guard<std::mutex> lock(g_theta_mutex);
    return g_theta.emplace(d, std::move(v)).first->second;
}

void require_same_n(const PeriodicMatrix& A, const PeriodicMatrix& B) {
    if (A.n() != B.n()) throw DimMismatch("matrices have different n");
}

}  // namespace

void set_dimension_cap(int cap) { g_cap = cap; }
int dimension_cap() { return g_cap; }

void check_dimension_cap(const PeriodicMatrix& C) {
    int d = total_dim(C);
    if (d > g_cap)
        throw BoundExceeded("module dimension " + std::to_string(d) + " exceeds the cap " + std::to_string(g_cap.load()));
}

// ---- FqModule ----

FqModule::FqModule(const PeriodicMatrix& C, int p) : p_(p), n_(C.n()) {
    dims_.assign(static_cast<std::size_t>(n_), 0);
    next_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& s : segments(C)) {
        int pk = -1, pidx = -1;
        for (int t = 0; t < s.l; ++t) {
            int k = mod1(s.i + t, n_) - 1;
            int idx = dims_[static_cast<std::size_t>(k)]++;
            next_[static_cast<std::size_t>(k)].push_back(-1);
            if (pk >= 0) next_[static_cast<std::size_t>(pk)][static_cast<std::size_t>(pidx)] = idx;
            pk = k;
            pidx = idx;
        }
        maxlen_ = std::max(maxlen_, s.l);
    }
    path_.resize(static_cast<std::size_t>(maxlen_) + 1);
    path_[0].resize(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) {
        auto& v = path_[0][static_cast<std::size_t>(k)];
        v.resize(static_cast<std::size_t>(dims_[static_cast<std::size_t>(k)]));
        std::iota(v.begin(), v.end(), 0);
    }
    for (int l = 1; l <= maxlen_; ++l) {
        path_[static_cast<std::size_t>(l)].resize(static_cast<std::size_t>(n_));
        for (int k = 0; k < n_; ++k) {
            const auto& prev = path_[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(k)];
            int mid = (k + l - 1) % n_;
            std::vector<int> cur(prev.size(), -1);
            for (std::size_t idx = 0; idx < prev.size(); ++idx)
                if (prev[idx] >= 0) cur[idx] = next_[static_cast<std::size_t>(mid)][static_cast<std::size_t>(prev[idx])];
            path_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = std::move(cur);
        }
    }
}

int FqModule::path(int k, int l, int idx) const {
    if (l > maxlen_) return -1;
    return path_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)][static_cast<std::size_t>(idx)];
}

const std::vector<FqModule::Rows>& FqModule::subspaces(int d) const { return rref_subspaces(d, p_); }

bool FqModule::contains(const Rows& U, std::vector<int> x) const {
    for (const auto& row : U) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        int f = x[c];
        if (f == 0) continue;
        for (std::size_t k = c; k < x.size(); ++k) x[k] = static_cast<int>(((x[k] - static_cast<long>(f) * row[k]) % p_ + p_) % p_);
    }
    return std::all_of(x.begin(), x.end(), [](int a) { return a == 0; });
}

int FqModule::rank(Rows M) const {
    if (M.empty()) return 0;
    std::size_t cols = M[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
        std::size_t piv = r;
        while (piv < M.size() && M[piv][c] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[r]);
        long inv = mod_inv(M[r][c], p_);
        for (std::size_t i = r + 1; i < M.size(); ++i) {
            long f = M[i][c] * inv % p_;
            if (f == 0) continue;
            for (std::size_t k = c; k < cols; ++k) M[i][k] = static_cast<int>(((M[i][k] - f * M[r][k]) % p_ + p_) % p_);
        }
        ++r;
    }
    return static_cast<int>(r);
}

void FqModule::visit_rec(int k, Graded& U, const std::function<void(const Graded&)>& visit) const {
    // Image of U_{k-1} under the arrow, as vectors at vertex k (or at vertex 0 when closing up).
    auto images = [&](int from) {
        int to = (from + 1) % n_;
        Rows out;
        for (const auto& row : U[static_cast<std::size_t>(from)]) {
            std::vector<int> y(static_cast<std::size_t>(dims_[static_cast<std::size_t>(to)]), 0);
            bool nz = false;
            for (std::size_t idx = 0; idx < row.size(); ++idx) {
                int j = next_[static_cast<std::size_t>(from)][idx];
                if (j >= 0 && row[idx] != 0) {
                    y[static_cast<std::size_t>(j)] = row[idx];
                    nz = true;
                }
            }
            if (nz) out.push_back(std::move(y));
        }
        return out;
    };
    if (k == n_) {
        for (const auto& y : images(n_ - 1))
            if (!contains(U[0], y)) return;
        visit(U);
        return;
    }
    Rows need;
    if (k > 0) need = images(k - 1);
    for (const auto& S : subspaces(dims_[static_cast<std::size_t>(k)])) {
        bool ok = true;
        for (const auto& y : need)
            if (!contains(S, y)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        U[static_cast<std::size_t>(k)] = S;
        visit_rec(k + 1, U, visit);
    }
    U[static_cast<std::size_t>(k)].clear();
}

std::vector<std::vector<int>> FqModule::sub_ranks(const Graded& U) const {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(maxlen_) + 1, 0));
    for (int k = 0; k < n_; ++k) {
        const auto& Uk = U[static_cast<std::size_t>(k)];
        r[static_cast<std::size_t>(k)][0] = static_cast<int>(Uk.size());
        for (int l = 1; l < maxlen_ && !Uk.empty(); ++l) {
            int to = (k + l) % n_;
            Rows M;
            for (const auto& row : Uk) {
                std::vector<int> y(static_cast<std::size_t>(dims_[static_cast<std::size_t>(to)]), 0);
                for (std::size_t idx = 0; idx < row.size(); ++idx) {
                    int j = path(k, l, static_cast<int>(idx));
                    if (j >= 0) y[static_cast<std::size_t>(j)] = row[idx];
                }
                M.push_back(std::move(y));
            }
            r[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = rank(std::move(M));
        }
    }
    return r;
}

std::vector<std::vector<int>> FqModule::quotient_ranks(const Graded& U) const {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(maxlen_) + 1, 0));
    for (int k = 0; k < n_; ++k) {
        for (int l = 0; l < maxlen_; ++l) {
            int to = (k + l) % n_;
            const auto& Ut = U[static_cast<std::size_t>(to)];
            // rank(f^l V_k + U_{k+l}) - dim U_{k+l}; the image of f^l is a coordinate subspace.
            std::vector<bool> in_image(static_cast<std::size_t>(dims_[static_cast<std::size_t>(to)]), false);
            int img = 0;
            for (int idx = 0; idx < dims_[static_cast<std::size_t>(k)]; ++idx) {
                int j = path(k, l, idx);
                if (j >= 0) {
                    in_image[static_cast<std::size_t>(j)] = true;
                    ++img;
                }
            }
            Rows M = Ut;
            for (auto& row : M)
                for (std::size_t c = 0; c < row.size(); ++c)
                    if (in_image[c]) row[c] = 0;
            r[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = img + rank(std::move(M)) - static_cast<int>(Ut.size());
        }
    }
    return r;
}

std::vector<std::vector<int>> FqModule::ranks() const {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(maxlen_) + 1, 0));
    for (int k = 0; k < n_; ++k)
        for (int l = 0; l < maxlen_; ++l) {
            int c = 0;
            for (int idx = 0; idx < dims_[static_cast<std::size_t>(k)]; ++idx)
                if (path(k, l, idx) >= 0) ++c;
            r[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = c;
        }
    return r;
}

PeriodicMatrix FqModule::type_from_ranks(int n, const std::vector<std::vector<int>>& r) {
    // Q(k, l) = r(k, l) - r(k, l+1) counts segments of length > l whose socle sits at k + l.
    int L = r.empty() ? 0 : static_cast<int>(r[0].size());
    auto R = [&](int k, int l) {
        if (l >= L) return 0;
        return r[static_cast<std::size_t>(mod1(k + 1, n) - 1)][static_cast<std::size_t>(l)];
    };
    auto Q = [&](int k, int l) { return R(k, l) - R(k, l + 1); };
    PeriodicMatrix A(n);
    for (int j = 0; j < n; ++j)
        for (int m = 1; m <= L; ++m) {
            int t = Q(j - m + 1, m - 1) - Q(j - m, m);
            if (t < 0) throw InternalInconsistency("rank invariants are not realizable");
            if (t > 0) {
                int top = mod1(j - m + 2, n);  // 1-based top vertex
                A.add(top, top + m, t);
            }
        }
    return A;
}

// ---- filtration counting ----

namespace {

std::mutex g_count_mutex;
std::map<std::pair<PeriodicMatrix, int>, CountTable> g_counts;

CountTable compute_counts(const PeriodicMatrix& C, int p) {
    FqModule M(C, p);
    std::unordered_map<std::vector<int>, long, VecHash> tally;
    M.for_each_submodule([&](const FqModule::Graded& U) {
        std::vector<int> key;
        for (const auto& row : M.quotient_ranks(U)) key.insert(key.end(), row.begin(), row.end());
        key.push_back(-1);
        for (const auto& row : M.sub_ranks(U)) key.insert(key.end(), row.begin(), row.end());
        ++tally[key];
    });
    CountTable out;
    int n = C.n();
    std::size_t width = static_cast<std::size_t>(M.max_length()) + 1;
    for (const auto& [key, cnt] : tally) {
        std::vector<std::vector<int>> rq(static_cast<std::size_t>(n)), rs(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
            rq[k].assign(key.begin() + static_cast<long>(k * width), key.begin() + static_cast<long>((k + 1) * width));
            std::size_t off = static_cast<std::size_t>(n) * width + 1;
            rs[k].assign(key.begin() + static_cast<long>(off + k * width), key.begin() + static_cast<long>(off + (k + 1) * width));
        }
        out[PairKey{FqModule::type_from_ranks(n, rq), FqModule::type_from_ranks(n, rs)}] += cnt;
    }
    return out;
}

}  // namespace

const CountTable& filtration_table(const PeriodicMatrix& C, int p) {
    check_dimension_cap(C);
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    {
        std::lock_guard<std::mutex> lock(g_count_mutex);
        auto it = g_counts.find({C, p});
        if (it != g_counts.end()) return it->second;
    }
    CountTable t = compute_counts(C, p);
    std::lock_guard<std::mutex> lock(g_count_mutex);
    return g_counts.emplace(std::make_pair(C, p), std::move(t)).first->second;
}

long count_filtrations(const PeriodicMatrix& C, const std::vector<PeriodicMatrix>& parts, int p) {
    DimVector total(static_cast<std::size_t>(C.n()), 0);
    for (const auto& P : parts) {
        require_same_n(C, P);
        total = total + dim_vector(P);
    }
    if (total != dim_vector(C)) throw DimMismatch("part dimensions do not add up to dim C");
    if (parts.empty()) return C.is_zero() ? 1 : 0;
    if (parts.size() == 1) return C == parts[0] ? 1 : 0;
    std::vector<PeriodicMatrix> rest(parts.begin() + 1, parts.end());
    long s = 0;
    for (const auto& [key, cnt] : filtration_table(C, p))
        if (key.A == parts[0]) s += cnt * count_filtrations(key.B, rest, p);
    return s;
}

// ---- interpolation ----

namespace {

struct HallEntry {
    HallTable table;
    std::vector<int> primes;
};

std::mutex g_hall_mutex;
std::map<PeriodicMatrix, HallEntry> g_hall;

// Fits a polynomial through (x_0, y_0), ..., (x_D, y_D) and returns its integer coefficients
// in q, or false when some coefficient is not an integer.
bool newton_fit(const std::vector<long>& x, const std::vector<long>& y, int D, std::vector<mpz_class>& coeffs) {
    std::vector<mpq_class> c(static_cast<std::size_t>(D) + 1);
    for (int i = 0; i <= D; ++i) c[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)];
    for (int j = 1; j <= D; ++j)
        for (int i = D; i >= j; --i)
            c[static_cast<std::size_t>(i)] = (c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i - 1)]) /
                                             mpq_class(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i - j)]);
    std::vector<mpq_class> poly{c[static_cast<std::size_t>(D)]};
    for (int i = D - 1; i >= 0; --i) {
        std::vector<mpq_class> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * x[static_cast<std::size_t>(i)];
        }
        next[0] += c[static_cast<std::size_t>(i)];
        poly = std::move(next);
    }
    coeffs.clear();
    for (auto& a : poly) {
        a.canonicalize();
        if (a.get_den() != 1) return false;
        coeffs.push_back(a.get_num());
    }
    return true;
}

HallEntry compute_hall(const PeriodicMatrix& C) {
    check_dimension_cap(C);
    int d = total_dim(C);
    int bound = std::max(d * d, 0);
    HallEntry e;
    std::vector<const CountTable*> tabs;
    std::vector<PairKey> keys;
    std::unordered_set<PairKey, PairKeyHash> seen, resolved;
    int p = 1;
    for (;;) {
        p = next_prime(p);
        e.primes.push_back(p);
        tabs.push_back(&filtration_table(C, p));
        for (const auto& [k, cnt] : *tabs.back())
            if (seen.insert(k).second) keys.push_back(k);
        int N = static_cast<int>(e.primes.size());
        if (N < 3) continue;
        int D = N - 3;
        std::vector<long> xs(e.primes.begin(), e.primes.end());
        for (const auto& k : keys) {
            if (resolved.count(k)) continue;
            std::vector<long> ys;
            for (const auto* t : tabs) {
                auto it = t->find(k);
                ys.push_back(it == t->end() ? 0 : it->second);
            }
            std::vector<mpz_class> co;
            if (!newton_fit(xs, ys, D, co)) continue;
            bool ok = true;
            for (int i = D + 1; i < N && ok; ++i) {
                mpz_class val = 0, pw = 1;
                for (const auto& a : co) {
                    val += a * pw;
                    pw *= xs[static_cast<std::size_t>(i)];
                }
                ok = (val == ys[static_cast<std::size_t>(i)]);
            }
            if (!ok) continue;
            resolved.insert(k);
            LaurentPoly f;
            for (std::size_t i = 0; i < co.size(); ++i)
                if (co[i] != 0) f += LaurentPoly::monomial(2 * static_cast<int>(i), co[i]);
            if (!f.is_zero()) e.table.emplace(k, std::move(f));
        }
        if (resolved.size() == keys.size()) break;
        if (D > bound)
            throw InterpolationUnstable("Hall polynomial fit for " + C.to_string() + " did not stabilize within degree " +
                                        std::to_string(bound));
    }
    return e;
}

const HallEntry& hall_entry(const PeriodicMatrix& C) {
    {
        std::lock_guard<std::mutex> lock(g_hall_mutex);
        auto it = g_hall.find(C);
        if (it != g_hall.end()) return it->second;
    }
    HallEntry e = compute_hall(C);
    std::lock_guard<std::mutex> lock(g_hall_mutex);
    return g_hall.emplace(C, std::move(e)).first->second;
}

}  // namespace

const HallTable& hall_table(const PeriodicMatrix& C) { return hall_entry(C).table; }
std::vector<int> hall_primes_used(const PeriodicMatrix& C) { return hall_entry(C).primes; }

LaurentPoly hall_poly(const PeriodicMatrix& C, const PeriodicMatrix& A, const PeriodicMatrix& B) {
    require_same_n(C, A);
    require_same_n(C, B);
    if (dim_vector(A) + dim_vector(B) != dim_vector(C)) throw DimMismatch("d(A) + d(B) != d(C)");
    const auto& t = hall_table(C);
    auto it = t.find(PairKey{A, B});
    return it == t.end() ? LaurentPoly() : it->second;
}

LaurentPoly hall_poly_multi(const PeriodicMatrix& C, const std::vector<PeriodicMatrix>& parts) {
    DimVector total(static_cast<std::size_t>(C.n()), 0);
    for (const auto& P : parts) {
        require_same_n(C, P);
        total = total + dim_vector(P);
    }
    if (total != dim_vector(C)) throw DimMismatch("part dimensions do not add up to dim C");
    if (parts.empty()) return C.is_zero() ? 1 : 0;
    if (parts.size() == 1) return C == parts[0] ? 1 : 0;
    if (parts.size() == 2) return hall_poly(C, parts[0], parts[1]);
    std::vector<PeriodicMatrix> rest(parts.begin() + 1, parts.end());
    LaurentPoly s;
    for (const auto& [key, f] : hall_table(C))
        if (key.A == parts[0]) s += f * hall_poly_multi(key.B, rest);
    return s;
}

mpz_class eval_at_q(const LaurentPoly& f, long q) {
    mpz_class s = 0;
    for (const auto& [e, c] : f.terms()) {
        if (e % 2 != 0 || e < 0) throw std::invalid_argument("not a polynomial in q = v^2");
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(q).get_mpz_t(), static_cast<unsigned long>(e / 2));
        s += c * pw;
    }
    return s;
}

std::string q_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (e % 2 != 0) throw std::invalid_argument("not a polynomial in q = v^2");
        mpz_class a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        int k = e / 2;
        if (k == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << "q";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

// ---- Hall algebra ----

HallElement hall_unit(int n) { return HallElement(PeriodicMatrix(n)); }
HallElement hall_basis(const PeriodicMatrix& A) { return HallElement(A); }
HallElement u_simple(int n, int i) { return HallElement(PeriodicMatrix::elementary(n, i, i + 1)); }

namespace {
std::mutex g_prod_mutex;
std::map<std::pair<PeriodicMatrix, PeriodicMatrix>, HallElement> g_prod;
}  // namespace

const HallElement& hall_basis_product(const PeriodicMatrix& A, const PeriodicMatrix& B) {
    require_same_n(A, B);
    {
        std::lock_guard<std::mutex> lock(g_prod_mutex);
        auto it = g_prod.find({A, B});
        if (it != g_prod.end()) return it->second;
    }
    HallElement out;
    DimVector dA = dim_vector(A), dB = dim_vector(B);
    if (A.is_zero()) {
        out = HallElement(B);
    } else if (B.is_zero()) {
        out = HallElement(A);
    } else {
        int e = euler_form(dA, dB);
        for (const auto& C : theta_cached(dA + dB)) out.add_scaled(C, hall_poly(C, A, B), e);
    }
    std::lock_guard<std::mutex> lock(g_prod_mutex);
    return g_prod.emplace(std::make_pair(A, B), std::move(out)).first->second;
}

HallElement hall_mul(const HallElement& x, const HallElement& y) {
    HallElement out;
    for (const auto& [A, a] : x)
        for (const auto& [B, b] : y) {
            LaurentPoly ab = a * b;
            for (const auto& [C, c] : hall_basis_product(A, B)) out.add(C, ab * c);
        }
    return out;
}

HallElement hall_pow(const HallElement& x, int m, int n) {
    HallElement r = hall_unit(n);
    for (int k = 0; k < m; ++k) r = hall_mul(r, x);
    return r;
}

HallElement divided_power(int n, int i, int m) {
    if (m == 0) return hall_unit(n);
    return HallElement(PeriodicMatrix::elementary(n, i, i + 1, m), LaurentPoly::v(m * (m - 1)));
}

PeriodicMatrix generic_ext(const PeriodicMatrix& A, const PeriodicMatrix& B) {
    if (A.is_zero()) return B;
    if (B.is_zero()) return A;
    std::vector<PeriodicMatrix> support;
    for (const auto& [C, c] : hall_basis_product(A, B)) support.push_back(C);
    std::vector<PeriodicMatrix> maximal;
    for (const auto& C : support) {
        bool dominated = std::any_of(support.begin(), support.end(), [&](const PeriodicMatrix& D) { return prec(C, D); });
        if (!dominated) maximal.push_back(C);
    }
    if (maximal.size() != 1) throw NotUnique("generic extension is not unique for " + A.to_string() + " * " + B.to_string());
    return maximal[0];
}

std::vector<WordLetter> monomial_word(const PeriodicMatrix& A0) {
    if (!A0.nonneg() || !A0.is_upper()) throw WrongShape("monomial_word expects a matrix in Theta^+");
    if (!is_aperiodic(A0)) throw NotAperiodic("matrix is not aperiodic");
    int n = A0.n();
    std::vector<WordLetter> w;
    PeriodicMatrix A = A0;
    while (!A.is_zero()) {
        int l = A.bandwidth();
        int i1 = -1;
        for (int i = 1; i <= n; ++i)
            if (A.at(i, i + l) != 0 && A.at(i + 1, i + 1 + l) == 0) {
                i1 = i;
                break;
            }
        if (i1 < 0) throw InternalInconsistency("monomial word algorithm stalled");
        int p = 0;
        for (int j = i1 + l; j > i1 + 1; --j)
            if (A.at(i1 + 1, j) != 0) {
                p = j - (i1 + 1);
                break;
            }
        int t = 0;
        PeriodicMatrix B = A;
        for (int j = i1 + 1 + p; j <= i1 + l; ++j) {
            int a = A.at(i1, j);
            if (a == 0) continue;
            t += a;
            B.add(i1, j, -a);
            if (j > i1 + 1) B.add(i1 + 1, j, a);
        }
        w.push_back({i1, t});
        A = B;
    }
    return w;
}

std::string word_string(const std::vector<WordLetter>& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) os << ' ';
        os << w[k].i << '^' << w[k].t;
    }
    return os.str();
}

HallElement monomial_element(const PeriodicMatrix& A) {
    HallElement r = hall_unit(A.n());
    for (const auto& [i, t] : monomial_word(A)) r = hall_mul(r, divided_power(A.n(), i, t));
    return r;
}

std::vector<int> periodic_multiplicities(const PeriodicMatrix& A) {
    int n = A.n();
    std::vector<int> m;
    for (int s = 1; s <= A.bandwidth(); ++s) {
        int mn = A.at(1, 1 + s);
        for (int i = 2; i <= n; ++i) mn = std::min(mn, A.at(i, i + s));
        m.push_back(mn);
    }
    return m;
}

PeriodicMatrix aperiodic_part(const PeriodicMatrix& A) {
    PeriodicMatrix B = A;
    auto m = periodic_multiplicities(A);
    for (std::size_t s = 0; s < m.size(); ++s)
        if (m[s] > 0)
            for (int i = 1; i <= A.n(); ++i) B.add(i, i + static_cast<int>(s) + 1, -m[s]);
    return B;
}

int d_prime(const PeriodicMatrix& A) { return end_dim(A) - total_dim(A); }
HallElement tilde_u(const PeriodicMatrix& A) { return HallElement(A, LaurentPoly::v(d_prime(A))); }

// ---- central elements ----

HallElement central_c(int n, int m) {
    if (m * n > g_cap) throw BoundExceeded("central element degree exceeds the cap");
    HallElement c;
    for (const auto& A : theta_cached(scaled(delta_vector(n), m))) {
        if (!is_socle_squarefree(A)) continue;
        LaurentPoly a = aut_poly(A);
        if ((m + end_dim(A)) % 2 != 0) a = -a;
        c.add_scaled(A, a, -2 * n * m);
    }
    return c;
}

ScaledHall central_pi(int n, int m) {
    // pi_m = N_m / (m! (v - v^-1)) with N_m built from the recursion.
    std::vector<HallElement> N(static_cast<std::size_t>(m) + 1), c(static_cast<std::size_t>(m) + 1);
    for (int s = 1; s <= m; ++s) c[static_cast<std::size_t>(s)] = central_c(n, s);
    auto fact = [](int k) {
        mpz_class f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (int k = 1; k <= m; ++k) {
        HallElement x = c[static_cast<std::size_t>(k)] * LaurentPoly::monomial(n * k, fact(k));
        for (int s = 1; s < k; ++s) {
            mpz_class w = s * fact(k - 1) / fact(s);
            x -= hall_mul(N[static_cast<std::size_t>(s)], c[static_cast<std::size_t>(k - s)]) *
                 LaurentPoly::monomial((k - s) * n, w);
        }
        N[static_cast<std::size_t>(k)] = x;
    }
    LaurentPoly den = (LaurentPoly::v(1) - LaurentPoly::v(-1)) * LaurentPoly(fact(m));
    return {N[static_cast<std::size_t>(m)], den};
}

HallElement central_z(int n, int m) {
    ScaledHall pi = central_pi(n, m);
    mpz_class f = 1;
    for (int i = 2; i < m; ++i) f *= i;
    LaurentPoly den = qint_sym(m) * (LaurentPoly::v(1) - LaurentPoly::v(-1)) * LaurentPoly(f);
    HallElement z;
    for (const auto& [A, a] : pi.num) {
        LaurentPoly q;
        if (!try_exact_div(a, den, q)) throw InternalInconsistency("z_m has a non-integral coefficient");
        z.add(A, q);
    }
    return z;
}

// ---- extended Hall algebras ----

DimVector tilde_K_exponent(const DimVector& alpha) {
    std::size_t n = alpha.size();
    DimVector r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = alpha[k] - alpha[(k + n - 1) % n];
    return r;
}

ExtHallElement ext_basis(const PeriodicMatrix& A, const DimVector& alpha) {
    if (static_cast<int>(alpha.size()) != A.n()) throw DimMismatch("K exponent has wrong length");
    return ExtHallElement(ExtKey{A, alpha});
}

ExtHallElement ext_K(const DimVector& alpha) {
    return ExtHallElement(ExtKey{PeriodicMatrix(static_cast<int>(alpha.size())), alpha});
}

ExtHallElement ext_embed(const HallElement& x) {
    ExtHallElement r;
    for (const auto& [A, c] : x) r.add(ExtKey{A, DimVector(static_cast<std::size_t>(A.n()), 0)}, c);
    return r;
}

namespace {

// Product of two basis elements of H^{>=0} or H^{<=0}.
void mul_basis_into(Sign s, const ExtKey& x, const ExtKey& y, const LaurentPoly& c, ExtHallElement& out) {
    DimVector dx = dim_vector(x.A), dy = dim_vector(y.A);
    DimVector a = x.alpha + y.alpha;
    if (s == Sign::Plus) {
        // u_A K_alpha u_B K_beta = v^{<d(B), alpha>} u_A u_B K_{alpha+beta}
        int e = euler_form(dy, x.alpha);
        for (const auto& [C, f] : hall_basis_product(x.A, y.A)) out.add_scaled(ExtKey{C, a}, c * f, e);
    } else {
        // K_alpha u_A K_beta u_B = v^{<d(A), beta>} K_{alpha+beta} u_A u_B and u_A^- u_B^- mirrors u_B^+ u_A^+
        int e = euler_form(dx, y.alpha);
        for (const auto& [C, f] : hall_basis_product(y.A, x.A)) out.add_scaled(ExtKey{C, a}, c * f, e);
    }
}

// a_A a_B phi^C_{A,B} / a_C
LaurentPoly green_factor(const PeriodicMatrix& C, const PeriodicMatrix& A, const PeriodicMatrix& B, const LaurentPoly& phi) {
    return exact_div(aut_poly(A) * aut_poly(B) * phi, aut_poly(C));
}

enum class ChainOrder { Reversed, Forward };

// sum_{m>=1} (-1)^m sum_{C_1..C_m nonzero} (prod a_{C_i} / a_C) phi^C_{C_1..C_m} X_D u_D where X_D is
// phi^D_{C_m..C_1} (Reversed) or v^{2 sum_{i<j} <d(C_i),d(C_j)>} phi^D_{C_1..C_m} (Forward).
std::mutex g_chain_mutex;
std::map<std::pair<PeriodicMatrix, int>, HallElement> g_chain;

void chain_rec(const PeriodicMatrix& X, const LaurentPoly& w, int m, const DimVector& used, const HallElement& P,
               ChainOrder order, HallElement& acc) {
    if (X.is_zero()) {
        LaurentPoly sw = (m % 2 == 0) ? w : -w;
        for (const auto& [D, c] : P) acc.add(D, sw * c);
        return;
    }
    for (const auto& [key, phi] : hall_table(X)) {
        const PeriodicMatrix& A = key.A;
        if (A.is_zero()) continue;
        DimVector dA = dim_vector(A);
        LaurentPoly w2 = w * aut_poly(A) * phi;
        HallElement P2;
        for (const auto& [F, c] : P) {
            if (order == ChainOrder::Reversed) {
                // untwisted [A][F]
                int e = euler_form(dA, dim_vector(F));
                for (const auto& [E, f] : hall_basis_product(A, F)) P2.add_scaled(E, c * f, -e);
            } else {
                // v^{2<used, d(A)>} [F][A], with the twist of u_F u_A removed
                int e = euler_form(dim_vector(F), dA);
                int extra = 2 * euler_form(used, dA);
                for (const auto& [E, f] : hall_basis_product(F, A)) P2.add_scaled(E, c * f, extra - e);
            }
        }
        chain_rec(key.B, w2, m + 1, used + dA, P2, order, acc);
    }
}

const HallElement& chain_sum(const PeriodicMatrix& C, ChainOrder order) {
    int tag = order == ChainOrder::Reversed ? 0 : 1;
    {
        std::lock_guard<std::mutex> lock(g_chain_mutex);
        auto it = g_chain.find({C, tag});
        if (it != g_chain.end()) return it->second;
    }
    HallElement acc;
    int n = C.n();
    if (C.is_zero()) {
        acc = hall_unit(n);
    } else {
        HallElement raw;
        chain_rec(C, LaurentPoly(1), 0, DimVector(static_cast<std::size_t>(n), 0), hall_unit(n), order, raw);
        LaurentPoly aC = aut_poly(C);
        for (const auto& [D, c] : raw) acc.add(D, exact_div(c, aC));
    }
    std::lock_guard<std::mutex> lock(g_chain_mutex);
    return g_chain.emplace(std::make_pair(C, tag), std::move(acc)).first->second;
}

std::mutex g_sinv_mutex;
std::map<PeriodicMatrix, ExtHallElement> g_sinv_minus;

// sigma^{-1}(u_C^-) from the antipode identity of the co-opposite Hopf algebra:
// sigma^{-1}(u_C^-) = - sum_{A != 0} coeff_{A,B} u_A^- sigma^{-1}(u_B^-) K~_{d(A)}.
const ExtHallElement& antipode_inverse_minus(const PeriodicMatrix& C) {
    {
        std::lock_guard<std::mutex> lock(g_sinv_mutex);
        auto it = g_sinv_minus.find(C);
        if (it != g_sinv_minus.end()) return it->second;
    }
    int n = C.n();
    DimVector zero(static_cast<std::size_t>(n), 0);
    ExtHallElement r;
    if (C.is_zero()) {
        r = ext_K(zero);
    } else {
        for (const auto& [key, phi] : hall_table(C)) {
            const PeriodicMatrix &A = key.A, &B = key.B;
            if (A.is_zero()) continue;
            DimVector dA = dim_vector(A), dB = dim_vector(B);
            LaurentPoly coeff = green_factor(C, A, B, phi).shifted(-euler_form(dB, dA));
            ExtHallElement t = ext_mul(Sign::Minus, ext_basis(A, zero), antipode_inverse_minus(B));
            t = ext_mul(Sign::Minus, t, ext_K(tilde_K_exponent(dA)));
            r -= t * coeff;
        }
    }
    std::lock_guard<std::mutex> lock(g_sinv_mutex);
    return g_sinv_minus.emplace(C, std::move(r)).first->second;
}

}  // namespace

ExtHallElement ext_mul(Sign s, const ExtHallElement& x, const ExtHallElement& y) {
    ExtHallElement out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) mul_basis_into(s, kx, ky, cx * cy, out);
    return out;
}

ExtTensor comult(Sign s, const ExtHallElement& x) {
    ExtTensor out;
    for (const auto& [k, c] : x) {
        const PeriodicMatrix& C = k.A;
        for (const auto& [key, phi] : hall_table(C)) {
            const PeriodicMatrix &A = key.A, &B = key.B;
            DimVector dA = dim_vector(A), dB = dim_vector(B);
            LaurentPoly g = green_factor(C, A, B, phi);
            if (s == Sign::Plus) {
                // u_B K_alpha (x) u_A K~_{d(B)} K_alpha
                TensorKey t{ExtKey{B, k.alpha}, ExtKey{A, k.alpha + tilde_K_exponent(dB)}};
                out.add_scaled(t, c * g, euler_form(dA, dB));
            } else {
                // K_alpha K~_{-d(A)} u_B (x) K_alpha u_A
                TensorKey t{ExtKey{B, k.alpha - tilde_K_exponent(dA)}, ExtKey{A, k.alpha}};
                out.add_scaled(t, c * g, -euler_form(dB, dA));
            }
        }
    }
    return out;
}

LaurentPoly counit(const ExtHallElement& x) {
    LaurentPoly s;
    for (const auto& [k, c] : x)
        if (k.A.is_zero()) s += c;
    return s;
}

ExtHallElement antipode(Sign s, const ExtHallElement& x) {
    ExtHallElement out;
    for (const auto& [k, c] : x) {
        const PeriodicMatrix& C = k.A;
        DimVector neg = scaled(k.alpha, -1);
        DimVector tC = tilde_K_exponent(dim_vector(C));
        if (s == Sign::Plus) {
            // K_{-alpha} sum_D a_D u_D K~_{-d(C)}
            for (const auto& [D, a] : chain_sum(C, ChainOrder::Reversed))
                out.add_scaled(ExtKey{D, neg - tC}, c * a, euler_form(dim_vector(D), neg));
        } else {
            // sum_D a_D K~_{d(C)} u_D K_{-alpha}
            for (const auto& [D, a] : chain_sum(C, ChainOrder::Forward))
                out.add_scaled(ExtKey{D, tC + neg}, c * a, euler_form(dim_vector(D), neg));
        }
    }
    return out;
}

ExtHallElement antipode_inverse(Sign s, const ExtHallElement& x) {
    ExtHallElement out;
    for (const auto& [k, c] : x) {
        const PeriodicMatrix& C = k.A;
        DimVector neg = scaled(k.alpha, -1);
        if (s == Sign::Plus) {
            // K_{-alpha} K~_{-d(C)} sum_D b_D u_D
            DimVector beta = neg - tilde_K_exponent(dim_vector(C));
            for (const auto& [D, b] : chain_sum(C, ChainOrder::Forward))
                out.add_scaled(ExtKey{D, beta}, c * b, euler_form(dim_vector(D), beta));
        } else {
            out += ext_mul(Sign::Minus, antipode_inverse_minus(C), ext_K(neg)) * c;
        }
    }
    return out;
}

ExtTensor tensor_pure(const ExtHallElement& a, const ExtHallElement& b) {
    ExtTensor out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add(TensorKey{ka, kb}, ca * cb);
    return out;
}

ExtTensor tensor_mul(Sign s, const ExtTensor& x, const ExtTensor& y) {
    ExtTensor out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            ExtHallElement l, r;
            mul_basis_into(s, kx.left, ky.left, LaurentPoly(1), l);
            mul_basis_into(s, kx.right, ky.right, LaurentPoly(1), r);
            LaurentPoly c = cx * cy;
            for (const auto& [a, ca] : l)
                for (const auto& [b, cb] : r) out.add(TensorKey{a, b}, c * ca * cb);
        }
    return out;
}

ExtTensor tensor_flip(const ExtTensor& x) {
    ExtTensor out;
    for (const auto& [k, c] : x) out.add(TensorKey{k.right, k.left}, c);
    return out;
}

ExtTriple comult_left(Sign s, const ExtTensor& x) {
    ExtTriple out;
    for (const auto& [k, c] : x)
        for (const auto& [t, ct] : comult(s, ExtHallElement(k.left))) out.add(TripleKey{t.left, t.right, k.right}, c * ct);
    return out;
}

ExtTriple comult_right(Sign s, const ExtTensor& x) {
    ExtTriple out;
    for (const auto& [k, c] : x)
        for (const auto& [t, ct] : comult(s, ExtHallElement(k.right))) out.add(TripleKey{k.left, t.left, t.right}, c * ct);
    return out;
}

ExtHallElement antipode_left_check(Sign s, const ExtHallElement& x) {
    ExtHallElement out;
    for (const auto& [k, c] : comult(s, x))
        out += ext_mul(s, antipode(s, ExtHallElement(k.left)), ExtHallElement(k.right)) * c;
    return out;
}

ExtHallElement antipode_right_check(Sign s, const ExtHallElement& x) {
    ExtHallElement out;
    for (const auto& [k, c] : comult(s, x))
        out += ext_mul(s, ExtHallElement(k.left), antipode(s, ExtHallElement(k.right))) * c;
    return out;
}

// ---- pairing ----

RationalLaurent pairing(const ExtHallElement& a, const ExtHallElement& b) {
    std::map<PeriodicMatrix, LaurentPoly> by_A;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            if (ka.A != kb.A) continue;
            DimVector d = dim_vector(ka.A);
            int e = dot(ka.alpha, kb.alpha) - euler_form(d, d + ka.alpha) + 2 * total_dim(ka.A);
            by_A[ka.A].add_scaled(ca * cb, e);
        }
    RationalLaurent s;
    for (const auto& [A, c] : by_A) s += RationalLaurent(c, aut_poly(A));
    return s;
}

RationalLaurent pairing(const ExtTensor& a, const ExtTensor& b) {
    RationalLaurent s;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            RationalLaurent l = pairing(ExtHallElement(ka.left), ExtHallElement(kb.left));
            if (l.is_zero()) continue;
            RationalLaurent r = pairing(ExtHallElement(ka.right), ExtHallElement(kb.right));
            if (r.is_zero()) continue;
            s += RationalLaurent(ca * cb) * l * r;
        }
    return s;
}

std::string hall_to_string(const HallElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [A, c] : x.sorted()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*u[" << multisegment_string(A) << "]";
    }
    return os.str();
}

}  // namespace affschur
