#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affschur {

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Z[v, v^-1]. Terms are kept sorted by exponent with no zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<int, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: implicit constant
    LaurentPoly(const mpz_class& c);  // NOLINT

    static LaurentPoly monomial(int exp, const mpz_class& c = 1);
    static LaurentPoly v(int exp = 1) { return monomial(exp, 1); }
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::vector<Term>& terms() const { return terms_; }
    mpz_class coeff(int exp) const;
    int min_exp() const;
    int max_exp() const;
    // True when the polynomial is c*v^k for a single term.
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const mpz_class& c);
    // In-place this += c * v^k * o.
    void add_scaled(const LaurentPoly& o, int k, const mpz_class& c = 1);
    LaurentPoly operator-() const;
    LaurentPoly shifted(int k) const;  // multiply by v^k

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    // Bar involution v -> v^-1.
    LaurentPoly bar() const;
    // Substitute v -> v^k.
    LaurentPoly substitute_power(int k) const;
    mpq_class eval(const mpq_class& x) const;
    mpq_class specialize_v1() const;

    std::string to_string() const;
    static LaurentPoly parse(const std::string& s);
    std::size_t hash() const;

private:
    std::vector<Term> terms_;
    void normalize();
};

LaurentPoly pow(const LaurentPoly& p, unsigned e);
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);
// Returns true and stores the quotient when q divides p exactly.
bool try_exact_div(const LaurentPoly& p, const LaurentPoly& q, LaurentPoly& out);

// Symmetric quantum integer [m] = (v^m - v^-m)/(v - v^-1).
LaurentPoly qint_sym(int m);
// [[m]] = 1 + v^2 + ... + v^{2(m-1)} for m >= 0.
LaurentPoly qint_q(int m);
LaurentPoly qfact_q(int m);
LaurentPoly qfact_sym(int m);
// Symmetric Gaussian binomial [N over t]; N may be negative.
LaurentPoly gauss_sym(int N, int t);
// Gaussian binomial in v^2: [[N over t]] = v^{t(N-t)} [N over t].
LaurentPoly gauss_q(int N, int t);
// bar [[a+1 over 1]] = 1 + v^-2 + ... + v^-2a.
LaurentPoly bar_qint_q(int m);

// Quotient of two Laurent polynomials, used only for intermediate values.
class RationalLaurent {
public:
    RationalLaurent() : num_(0), den_(1) {}
    RationalLaurent(const LaurentPoly& n) : num_(n), den_(1) {}  // NOLINT
    RationalLaurent(LaurentPoly n, LaurentPoly d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalLaurent& operator+=(const RationalLaurent& o);
    RationalLaurent& operator-=(const RationalLaurent& o);
    RationalLaurent& operator*=(const RationalLaurent& o);
    RationalLaurent& operator/=(const RationalLaurent& o);
    friend RationalLaurent operator+(RationalLaurent a, const RationalLaurent& b) { return a += b; }
    friend RationalLaurent operator-(RationalLaurent a, const RationalLaurent& b) { return a -= b; }
    friend RationalLaurent operator*(RationalLaurent a, const RationalLaurent& b) { return a *= b; }
    friend RationalLaurent operator/(RationalLaurent a, const RationalLaurent& b) { return a /= b; }
    friend bool operator==(const RationalLaurent& a, const RationalLaurent& b);
    friend bool operator!=(const RationalLaurent& a, const RationalLaurent& b) { return !(a == b); }

    // Throws NotDivisible when the quotient is not a Laurent polynomial.
    LaurentPoly to_laurent() const;
    std::string to_string() const;

private:
    LaurentPoly num_, den_;
    void simplify();
};

}  // namespace affschur

template <>
struct std::hash<affschur::LaurentPoly> {
    std::size_t operator()(const affschur::LaurentPoly& p) const { return p.hash(); }
};
