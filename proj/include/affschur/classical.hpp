#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "affschur/schur.hpp"

namespace affschur {

struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element of the classical affine Schur algebra over Q, in the basis {[A]_1}. As with
// SchurElement, n and r are implicit in the keys.
class ClassicalElement {
public:
    ClassicalElement() = default;
    ClassicalElement(const PeriodicMatrix& A, const mpq_class& c) { add(A, c); }

    void add(const PeriodicMatrix& A, const mpq_class& c);
    mpq_class coeff(const PeriodicMatrix& A) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::unordered_map<PeriodicMatrix, mpq_class>& terms() const { return terms_; }
    std::vector<std::pair<PeriodicMatrix, mpq_class>> sorted() const;

    ClassicalElement& operator+=(const ClassicalElement& o);
    ClassicalElement& operator-=(const ClassicalElement& o);
    ClassicalElement& operator*=(const mpq_class& c);
    friend ClassicalElement operator+(ClassicalElement a, const ClassicalElement& b) { return a += b; }
    friend ClassicalElement operator-(ClassicalElement a, const ClassicalElement& b) { return a -= b; }
    friend ClassicalElement operator*(ClassicalElement a, const mpq_class& c) { return a *= c; }
    friend ClassicalElement operator*(const mpq_class& c, ClassicalElement a) { return a *= c; }
    friend bool operator==(const ClassicalElement& a, const ClassicalElement& b) { return a.terms_ == b.terms_; }

private:
    std::unordered_map<PeriodicMatrix, mpq_class> terms_;
};

std::string classical_to_string(const ClassicalElement& x);

// Coefficientwise evaluation at v = 1.
ClassicalElement specialize(const SchurElement& x);
// [A]_1 [B]_1 by counting: the coefficient of [C]_1 is the number of k in Z^r with
// (i, k) in the orbit of A and (k, j) in the orbit of B, for a fixed (i, j) in the orbit of C.
ClassicalElement count_product(const PeriodicMatrix& A, const PeriodicMatrix& B);
ClassicalElement mul1(const ClassicalElement& x, const ClassicalElement& y);

// A[j, r] = sum_{lambda in Lambda(n, r - sigma(A))} lambda^j [A + diag(lambda)]_1, with 0^0 = 1.
// Zero when sigma(A) > r or an off-diagonal entry of A is negative.
ClassicalElement abr(const PeriodicMatrix& A, const DimVector& j, int r);

// Generators appearing on the left of the multiplication formulas.
struct ClassicalGenerator {
    enum class Kind { Diagonal, Simple, Homogeneous };
    Kind kind;
    int h = 1;  // t for 0[e_t], h otherwise
    int step = 1;  // epsilon for E_{h,h+epsilon}, m for E_{h,h+mn}
    std::string to_string() const;
};

ClassicalGenerator gen_diagonal(int t);
ClassicalGenerator gen_simple(int h, int eps);
ClassicalGenerator gen_homogeneous(int h, int m);
// 0[e_t, r], E_{h,h+eps}[0, r] or E_{h,h+mn}[0, r].
ClassicalElement generator_image(const ClassicalGenerator& g, int n, int r);

// Closed-form right-hand sides for g * A[j, r].
ClassicalElement mf1(int t, const PeriodicMatrix& A, const DimVector& j, int r);
ClassicalElement mf2(int h, int eps, const PeriodicMatrix& A, const DimVector& j, int r);
ClassicalElement mf3(int h, int m, const PeriodicMatrix& A, const DimVector& j, int r);
ClassicalElement mf(const ClassicalGenerator& g, const PeriodicMatrix& A, const DimVector& j, int r);

// Products with a single basis element B, lambda = ro(B):
// [E_{h,h+eps} + diag(lambda - e_{h+eps})]_1 [B]_1 and [E_{h,h+mn} + diag(lambda - e_h)]_1 [B]_1.
ClassicalElement sbe1_lhs(int h, int eps, const PeriodicMatrix& B);
ClassicalElement sbe2_lhs(int h, int m, const PeriodicMatrix& B);
ClassicalElement sbe1(int h, int eps, const PeriodicMatrix& B);
ClassicalElement sbe2(int h, int m, const PeriodicMatrix& B);

// Images of loop algebra elements under the natural action on the tensor space.
// E_{i,j} for i != j maps to E_{i,j}(0, r)_1, E_{i,i} to sum_lambda lambda_i [diag(lambda)]_1
// and the divided element binom(E_{i,i}, t) to sum_lambda binom(lambda_i, t) [diag(lambda)]_1.
// Indices i, j are arbitrary integers; E_{i,j} = E_{i+n,j+n}.
ClassicalElement eta_E(int n, int i, int j, int r);
ClassicalElement eta_binom(int n, int i, int t, int r);
// Both sides of [E_{i,j}, E_{k,l}] = delta_{j,k mod n} E_{i,l+j-k} - delta_{l,i mod n} E_{k,j+l-i}.
std::pair<ClassicalElement, ClassicalElement> eta_bracket_sides(int n, int i, int j, int k, int l, int r);

// Structure constants f^{B,j'} with g * A[j, r] = sum f^{B,j'} B[j', r], fitted jointly over
// several r with deg j' <= sigma(j) + 1. The fit succeeds only when one set of constants
// reproduces the product for every r in the list.
struct RealizationReport {
    bool ok = true;
    bool unique = true;  // the constants are determined by the data
    std::map<std::pair<PeriodicMatrix, DimVector>, mpq_class> constants;
    std::vector<std::string> offending;  // "(B, j', r)" where the fit fails
};
RealizationReport realization_check(const PeriodicMatrix& A, const DimVector& j, const ClassicalGenerator& g,
                                    const std::vector<int>& r_list);
// One line per constant: "B,j',value".
std::string constants_csv(const RealizationReport& rep);

// Rank of {A[j, r] : j_{i0} = 0, sigma(A) + sigma(j) <= r, A off-diagonal of bandwidth <= b}
// together with the number of such elements and the dimension of the span of the [C]_1
// whose off-diagonal part has bandwidth <= b.
struct BasisCheck {
    long rank = 0;
    long count = 0;
    long dimension = 0;
};
BasisCheck classical_basis_check(int n, int r, int bandwidth, int i0);

// Off-diagonal matrices with nonnegative entries, sigma <= max_sigma and bandwidth <= b.
std::vector<PeriodicMatrix> offdiag_matrices(int n, int max_sigma, int bandwidth);
std::vector<DimVector> exponent_vectors(int n, int max_degree);  // all j in N^n with sigma(j) <= d

}  // namespace affschur
