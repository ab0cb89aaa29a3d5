#include "affschur/classical.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace affschur {

namespace {

mpz_class factorial(int a) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a));
    return f;
}

mpz_class binom(long a, int t) {
    if (t < 0 || a < t) return 0;
    mpz_class b;
    mpz_bin_ui(b.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(t));
    return b;
}

// lambda^j with 0^0 = 1
mpz_class power_product(const DimVector& lambda, const DimVector& j) {
    mpz_class p = 1;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), mpz_class(lambda[k]).get_mpz_t(), static_cast<unsigned long>(j[k]));
        p *= f;
    }
    return p;
}

mpz_class entry_factorials(const PeriodicMatrix& A) {
    mpz_class f = 1;
    for (const auto& e : A.entries()) f *= factorial(e.a);
    return f;
}

int jcomp(const DimVector& j, int i) { return j[static_cast<std::size_t>(mod1(i, static_cast<int>(j.size())) - 1)]; }

// Entries (row, column, value) of row `row` of A, for any integer row.
std::vector<PeriodicMatrix::Entry> row_entries(const PeriodicMatrix& A, int row) {
    int n = A.n();
    int shift = row - mod1(row, n);
    std::vector<PeriodicMatrix::Entry> out;
    for (const auto& e : A.entries())
        if (e.i == mod1(row, n)) out.push_back({row, e.j + shift, e.a});
    return out;
}

}  // namespace

// ---- ClassicalElement ----

void ClassicalElement::add(const PeriodicMatrix& A, const mpq_class& c) {
    if (c == 0) return;
    auto it = terms_.find(A);
    if (it == terms_.end()) {
        terms_.emplace(A, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

mpq_class ClassicalElement::coeff(const PeriodicMatrix& A) const {
    auto it = terms_.find(A);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::vector<std::pair<PeriodicMatrix, mpq_class>> ClassicalElement::sorted() const {
    std::vector<std::pair<PeriodicMatrix, mpq_class>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

ClassicalElement& ClassicalElement::operator+=(const ClassicalElement& o) {
    for (const auto& [A, c] : o.terms_) add(A, c);
    return *this;
}

ClassicalElement& ClassicalElement::operator-=(const ClassicalElement& o) {
    for (const auto& [A, c] : o.terms_) add(A, -c);
    return *this;
}

ClassicalElement& ClassicalElement::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [A, x] : terms_) x *= c;
    return *this;
}

std::string classical_to_string(const ClassicalElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [A, c] : x.sorted()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str() << ")" << A.to_string();
    }
    return os.str();
}

// ---- products ----

ClassicalElement specialize(const SchurElement& x) {
    ClassicalElement out;
    for (const auto& [A, c] : x) out.add(A, c.specialize_v1());
    return out;
}

ClassicalElement count_product(const PeriodicMatrix& A, const PeriodicMatrix& B) {
    if (A.n() != B.n()) throw DimMismatch("classical basis elements with different n");
    if (A.sum() != B.sum()) throw DimMismatch("classical basis elements with different r");
    if (A.co() != B.ro()) return {};
    int n = A.n();
    // Fix (i, k) in the orbit of A: slot p carries the pair (i_p, k_p) with 1 <= i_p <= n.
    std::vector<std::pair<int, int>> slots;
    for (const auto& e : A.entries())
        for (int c = 0; c < e.a; ++c) slots.emplace_back(e.i, e.j);
    std::vector<PeriodicMatrix::Entry> bent = B.entries();
    std::vector<int> left;
    for (const auto& e : bent) left.push_back(e.a);

    // Enumerate j with (k, j) in the orbit of B; each j determines C = matrix of (i, j).
    std::map<PeriodicMatrix, long> hits;
    std::vector<int> jv(slots.size());
    auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == slots.size()) {
            PeriodicMatrix C(n);
            for (std::size_t q = 0; q < slots.size(); ++q) C.add(slots[q].first, jv[q], 1);
            ++hits[C];
            return;
        }
        int k = slots[p].second;
        for (std::size_t b = 0; b < bent.size(); ++b) {
            if (left[b] == 0 || bent[b].i != mod1(k, n)) continue;
            --left[b];
            jv[p] = bent[b].j + (k - bent[b].i);
            self(self, p + 1);
            ++left[b];
        }
    };
    rec(rec, 0);

    // The count for fixed (i, j) in C is hits * |Stab(i, j)| / |Stab(i, k)|.
    ClassicalElement out;
    mpz_class fa = entry_factorials(A);
    for (const auto& [C, h] : hits) {
        mpz_class num = mpz_class(h) * entry_factorials(C);
        if (num % fa != 0) throw InternalInconsistency("orbit count not integral for " + C.to_string());
        out.add(C, mpq_class(mpz_class(num / fa)));
    }
    return out;
}

ClassicalElement mul1(const ClassicalElement& x, const ClassicalElement& y) {
    std::map<DimVector, std::vector<std::pair<PeriodicMatrix, mpq_class>>> by_row;
    for (const auto& [B, c] : y.terms()) by_row[B.ro()].emplace_back(B, c);
    ClassicalElement out;
    for (const auto& [A, a] : x.terms()) {
        auto it = by_row.find(A.co());
        if (it == by_row.end()) continue;
        for (const auto& [B, b] : it->second) {
            mpq_class ab = a * b;
            ClassicalElement prod = count_product(A, B);
            for (const auto& [C, c] : prod.terms()) out.add(C, ab * c);
        }
    }
    return out;
}

// ---- A[j, r] ----

ClassicalElement abr(const PeriodicMatrix& A, const DimVector& j, int r) {
    if (!A.is_offdiag()) throw WrongShape("A[j, r] needs a matrix with zero diagonal");
    if (static_cast<int>(j.size()) != A.n()) throw DimMismatch("exponent vector has the wrong length");
    if (!A.nonneg() || A.sum() > r) return {};
    ClassicalElement out;
    for (const auto& lambda : compositions(A.n(), r - A.sum()))
        out.add(A + PeriodicMatrix::diag(lambda), mpq_class(power_product(lambda, j)));
    return out;
}

std::string ClassicalGenerator::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Diagonal: os << "0[e_" << h << "]"; break;
        case Kind::Simple: os << "E_{" << h << "," << h + step << "}[0]"; break;
        case Kind::Homogeneous: os << "E_{" << h << "," << h << (step > 0 ? "+" : "") << step << "n}[0]"; break;
    }
    return os.str();
}

ClassicalGenerator gen_diagonal(int t) { return {ClassicalGenerator::Kind::Diagonal, t, 0}; }

ClassicalGenerator gen_simple(int h, int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("epsilon must be 1 or -1");
    return {ClassicalGenerator::Kind::Simple, h, eps};
}

ClassicalGenerator gen_homogeneous(int h, int m) {
    if (m == 0) throw std::invalid_argument("m must be nonzero");
    return {ClassicalGenerator::Kind::Homogeneous, h, m};
}

ClassicalElement generator_image(const ClassicalGenerator& g, int n, int r) {
    DimVector zero(static_cast<std::size_t>(n), 0);
    switch (g.kind) {
        case ClassicalGenerator::Kind::Diagonal: return abr(PeriodicMatrix(n), unit_vector(n, g.h), r);
        case ClassicalGenerator::Kind::Simple: return abr(PeriodicMatrix::elementary(n, g.h, g.h + g.step), zero, r);
        case ClassicalGenerator::Kind::Homogeneous:
            return abr(PeriodicMatrix::elementary(n, g.h, g.h + g.step * n), zero, r);
    }
    return {};
}

// ---- multiplication formulas ----

ClassicalElement mf1(int t, const PeriodicMatrix& A, const DimVector& j, int r) {
    int n = A.n();
    ClassicalElement out = abr(A, j + unit_vector(n, t), r);
    out += abr(A, j, r) * mpq_class(A.ro()[static_cast<std::size_t>(mod1(t, n) - 1)]);
    return out;
}

ClassicalElement mf2(int h, int eps, const PeriodicMatrix& A, const DimVector& j, int r) {
    int n = A.n();
    int he = h + eps;
    ClassicalElement out;
    for (const auto& e : row_entries(A, he)) {
        if (e.j == h || e.j == he) continue;
        out += abr(A.plus(h, e.j, 1).plus(he, e.j, -1), j, r) * mpq_class(A.at(h, e.j) + 1);
    }
    PeriodicMatrix Ah = A.plus(he, h, -1);
    for (int i = 0; i <= jcomp(j, h); ++i) {
        mpq_class c(binom(jcomp(j, h), i) * (i % 2 ? -1 : 1));
        out += abr(Ah, j + scaled(unit_vector(n, h), 1 - i), r) * c;
    }
    PeriodicMatrix Ahe = A.plus(h, he, 1);
    mpq_class lead(A.at(h, he) + 1);
    for (int i = 0; i <= jcomp(j, he); ++i)
        out += abr(Ahe, j - scaled(unit_vector(n, he), i), r) * (lead * mpq_class(binom(jcomp(j, he), i)));
    return out;
}

ClassicalElement mf3(int h, int m, const PeriodicMatrix& A, const DimVector& j, int r) {
    int n = A.n();
    int mn = m * n;
    ClassicalElement out;
    for (const auto& e : row_entries(A, h)) {
        int s = e.j;
        if (s == h || s == h - mn) continue;
        out += abr(A.plus(h, s + mn, 1).plus(h, s, -1), j, r) * mpq_class(A.at(h, s + mn) + 1);
    }
    int jh = jcomp(j, h);
    PeriodicMatrix Aup = A.plus(h, h + mn, 1);
    mpq_class lead(A.at(h, h + mn) + 1);
    for (int t = 0; t <= jh; ++t)
        out += abr(Aup, j - scaled(unit_vector(n, h), t), r) * (lead * mpq_class(binom(jh, t)));
    PeriodicMatrix Adown = A.plus(h, h - mn, -1);
    for (int t = 0; t <= jh; ++t) {
        mpq_class c(binom(jh, t) * (t % 2 ? -1 : 1));
        out += abr(Adown, j + scaled(unit_vector(n, h), 1 - t), r) * c;
    }
    return out;
}

ClassicalElement mf(const ClassicalGenerator& g, const PeriodicMatrix& A, const DimVector& j, int r) {
    switch (g.kind) {
        case ClassicalGenerator::Kind::Diagonal: return mf1(g.h, A, j, r);
        case ClassicalGenerator::Kind::Simple: return mf2(g.h, g.step, A, j, r);
        case ClassicalGenerator::Kind::Homogeneous: return mf3(g.h, g.step, A, j, r);
    }
    return {};
}

// ---- single basis elements ----

namespace {

void check_row_at_least(const DimVector& lambda, int i, const char* what) {
    if (lambda[static_cast<std::size_t>(mod1(i, static_cast<int>(lambda.size())) - 1)] < 1)
        throw PreconditionViolated(what);
}

}  // namespace

ClassicalElement sbe1_lhs(int h, int eps, const PeriodicMatrix& B) {
    int n = B.n();
    DimVector lambda = B.ro();
    check_row_at_least(lambda, h + eps, "ro(B) must dominate e_{h+eps}");
    PeriodicMatrix L = PeriodicMatrix::elementary(n, h, h + eps) + PeriodicMatrix::diag(lambda - unit_vector(n, h + eps));
    return count_product(L, B);
}

ClassicalElement sbe2_lhs(int h, int m, const PeriodicMatrix& B) {
    int n = B.n();
    DimVector lambda = B.ro();
    check_row_at_least(lambda, h, "ro(B) must dominate e_h");
    PeriodicMatrix L = PeriodicMatrix::elementary(n, h, h + m * n) + PeriodicMatrix::diag(lambda - unit_vector(n, h));
    return count_product(L, B);
}

ClassicalElement sbe1(int h, int eps, const PeriodicMatrix& B) {
    check_row_at_least(B.ro(), h + eps, "ro(B) must dominate e_{h+eps}");
    ClassicalElement out;
    for (const auto& e : row_entries(B, h + eps))
        out.add(B.plus(h, e.j, 1).plus(h + eps, e.j, -1), mpq_class(B.at(h, e.j) + 1));
    return out;
}

ClassicalElement sbe2(int h, int m, const PeriodicMatrix& B) {
    check_row_at_least(B.ro(), h, "ro(B) must dominate e_h");
    int mn = m * B.n();
    ClassicalElement out;
    for (const auto& e : row_entries(B, h))
        out.add(B.plus(h, e.j + mn, 1).plus(h, e.j, -1), mpq_class(B.at(h, e.j + mn) + 1));
    return out;
}

// ---- loop algebra images ----

ClassicalElement eta_E(int n, int i, int j, int r) {
    int i0 = mod1(i, n);
    int j0 = j + (i0 - i);
    if (i0 == j0) {
        ClassicalElement out;
        for (const auto& lambda : compositions(n, r))
            out.add(PeriodicMatrix::diag(lambda), mpq_class(lambda[static_cast<std::size_t>(i0 - 1)]));
        return out;
    }
    return specialize(blm(PeriodicMatrix::elementary(n, i0, j0), DimVector(static_cast<std::size_t>(n), 0), r));
}

ClassicalElement eta_binom(int n, int i, int t, int r) {
    ClassicalElement out;
    for (const auto& lambda : compositions(n, r))
        out.add(PeriodicMatrix::diag(lambda), mpq_class(binom(lambda[static_cast<std::size_t>(mod1(i, n) - 1)], t)));
    return out;
}

std::pair<ClassicalElement, ClassicalElement> eta_bracket_sides(int n, int i, int j, int k, int l, int r) {
    ClassicalElement x = eta_E(n, i, j, r), y = eta_E(n, k, l, r);
    ClassicalElement lhs = mul1(x, y) - mul1(y, x);
    ClassicalElement rhs;
    if (mod1(j, n) == mod1(k, n)) rhs += eta_E(n, i, l + j - k, r);
    if (mod1(l, n) == mod1(i, n)) rhs -= eta_E(n, k, j + l - i, r);
    return {lhs, rhs};
}

// ---- structure constants ----

namespace {

// Gaussian elimination over Q. Returns the rank; `solution` is filled when the system is
// consistent (free variables set to zero).
struct Solve {
    long rank = 0;
    std::optional<std::vector<mpq_class>> solution;
};

Solve solve(std::vector<std::vector<mpq_class>> rows, std::vector<mpq_class> rhs, std::size_t cols) {
    Solve out;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows.size(); ++c) {
        std::size_t p = row;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[row]);
        std::swap(rhs[p], rhs[row]);
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == row || rows[q][c] == 0) continue;
            mpq_class f = rows[q][c] / rows[row][c];
            for (std::size_t k = c; k < cols; ++k) rows[q][k] -= f * rows[row][k];
            rhs[q] -= f * rhs[row];
        }
        pivot_col.push_back(c);
        ++row;
    }
    out.rank = static_cast<long>(row);
    for (std::size_t q = row; q < rows.size(); ++q)
        if (rhs[q] != 0) return out;
    std::vector<mpq_class> x(cols, 0);
    for (std::size_t q = 0; q < row; ++q) x[pivot_col[q]] = rhs[q] / rows[q][pivot_col[q]];
    out.solution = std::move(x);
    return out;
}

}  // namespace

RealizationReport realization_check(const PeriodicMatrix& A, const DimVector& j, const ClassicalGenerator& g,
                                    const std::vector<int>& r_list) {
    int n = A.n();
    if (r_list.size() < 3) throw PreconditionViolated("realization_check needs at least three values of r");
    for (int r : r_list)
        if (r < A.sum() + sigma(j) + 1) throw PreconditionViolated("r too small for realization_check");

    // products[r][B] = the function mu |-> coefficient of [B + diag(mu)]_1
    std::vector<ClassicalElement> products;
    std::map<PeriodicMatrix, bool> offparts;
    for (int r : r_list) {
        products.push_back(mul1(generator_image(g, n, r), abr(A, j, r)));
        for (const auto& [C, c] : products.back().terms()) offparts[C.offdiag()] = true;
    }
    std::vector<DimVector> exps = exponent_vectors(n, sigma(j) + 1);

    RealizationReport rep;
    for (const auto& [B, unused] : offparts) {
        (void)unused;
        std::vector<std::vector<mpq_class>> rows;
        std::vector<mpq_class> rhs;
        std::optional<std::vector<mpq_class>> last;
        bool failed = false;
        for (std::size_t t = 0; t < r_list.size() && !failed; ++t) {
            int r = r_list[t];
            if (B.sum() > r) continue;
            for (const auto& mu : compositions(n, r - B.sum())) {
                std::vector<mpq_class> row;
                for (const auto& e : exps) row.emplace_back(power_product(mu, e));
                rows.push_back(std::move(row));
                rhs.push_back(products[t].coeff(B + PeriodicMatrix::diag(mu)));
            }
            Solve s = solve(rows, rhs, exps.size());
            if (!s.solution) {
                std::ostringstream os;
                os << "(B=" << B.to_string() << ", j'=";
                bool first = true;
                if (last)
                    for (std::size_t k = 0; k < exps.size(); ++k)
                        if ((*last)[k] != 0) {
                            os << (first ? "" : "|") << to_string(exps[k]);
                            first = false;
                        }
                if (first) os << "none";
                os << ", r=" << r << ")";
                rep.offending.push_back(os.str());
                rep.ok = false;
                failed = true;
                break;
            }
            if (t + 1 == r_list.size() && s.rank < static_cast<long>(exps.size())) rep.unique = false;
            last = s.solution;
        }
        if (failed || !last) continue;
        for (std::size_t k = 0; k < exps.size(); ++k)
            if ((*last)[k] != 0) rep.constants[{B, exps[k]}] = (*last)[k];
    }
    return rep;
}

std::string constants_csv(const RealizationReport& rep) {
    std::ostringstream os;
    os << "B,j,value\n";
    for (const auto& [key, c] : rep.constants)
        os << '"' << key.first.to_string() << "\",\"" << to_string(key.second) << "\"," << c.get_str() << "\n";
    return os.str();
}

// ---- basis property ----

std::vector<PeriodicMatrix> offdiag_matrices(int n, int max_sigma, int bandwidth) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= n; ++i)
        for (int j = i - bandwidth; j <= i + bandwidth; ++j)
            if (j != i) pos.emplace_back(i, j);
    std::vector<PeriodicMatrix> out;
    PeriodicMatrix cur(n);
    auto rec = [&](auto&& self, std::size_t p, int left) -> void {
        if (p == pos.size()) {
            out.push_back(cur);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            if (a > 0) cur.add(pos[p].first, pos[p].second, 1);
            self(self, p + 1, left - a);
        }
        int a = left;
        if (a > 0) cur.add(pos[p].first, pos[p].second, -a);
    };
    rec(rec, 0, max_sigma);
    return out;
}

std::vector<DimVector> exponent_vectors(int n, int max_degree) {
    std::vector<DimVector> out;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& c : compositions(n, d)) out.push_back(c);
    return out;
}

BasisCheck classical_basis_check(int n, int r, int bandwidth, int i0) {
    BasisCheck out;
    std::vector<ClassicalElement> elems;
    for (const auto& A : offdiag_matrices(n, r, bandwidth)) {
        out.dimension += static_cast<long>(compositions(n, r - A.sum()).size());
        for (const auto& j : exponent_vectors(n, r - A.sum()))
            if (j[static_cast<std::size_t>(mod1(i0, n) - 1)] == 0) elems.push_back(abr(A, j, r));
    }
    out.count = static_cast<long>(elems.size());
    std::map<PeriodicMatrix, std::size_t> index;
    for (const auto& x : elems)
        for (const auto& [C, c] : x.terms()) index.emplace(C, index.size());
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& x : elems) {
        std::vector<mpq_class> row(index.size(), 0);
        for (const auto& [C, c] : x.terms()) row[index.at(C)] = c;
        rows.push_back(std::move(row));
    }
    out.rank = solve(rows, std::vector<mpq_class>(rows.size(), 0), index.size()).rank;
    return out;
}

}  // namespace affschur
