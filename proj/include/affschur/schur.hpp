#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "affschur/affine_weyl.hpp"
#include "affschur/hall.hpp"
#include "affschur/hecke.hpp"

namespace affschur {

struct InconsistentCoset : std::logic_error {
    using std::logic_error::logic_error;
};

// Element of the affine quantum Schur algebra, stored in the basis {[A]}. Every key A has
// nonnegative entries; r = sigma(A) is implicit.
using SchurElement = LinComb<PeriodicMatrix>;

// d_A = sum over 1 <= i <= n, i >= k, j < l of a_{i,j} a_{k,l}
long d_A(const PeriodicMatrix& A);
SchurElement bracket(const PeriodicMatrix& A);  // [A]
SchurElement e_basis(const PeriodicMatrix& A);  // e_A = v^{d_A} [A]
// [A] -> [tA], an algebra anti-involution
SchurElement tau(const SchurElement& x);

// e_A e_B = sum_C p_{A,B,C} e_C, computed inside the affine Hecke algebra through
// A = jmath(lambda, d, mu) |-> phi^d_{lambda,mu}. Cached.
const SchurElement& e_product(const PeriodicMatrix& A, const PeriodicMatrix& B);
// Product in the [A] basis.
SchurElement mul_oracle(const SchurElement& x, const SchurElement& y);
SchurElement schur_pow(const SchurElement& x, int m, int n, int r);

std::vector<PeriodicMatrix> diagonal_matrices(int n, int r);
SchurElement schur_one(int n, int r);
SchurElement idempotent(const DimVector& lambda);  // 1_lambda = [diag(lambda)]

// ---- BLM elements ----

// A(j, r) for A with zero diagonal; zero if an off-diagonal entry is negative or sigma(A) > r.
SchurElement blm(const PeriodicMatrix& A, const DimVector& j, int r);
// 0(j, r) A(j', r) and A(j', r) 0(j, r) by the closed formulas.
SchurElement blm_mul_zero(const DimVector& j, const PeriodicMatrix& A, const DimVector& jp, int r);
SchurElement blm_mul_zero_right(const PeriodicMatrix& A, const DimVector& jp, const DimVector& j, int r);
// E_{h,h+1}(0, r) A(j, r) for sign = +1 and E_{h+1,h}(0, r) A(j, r) for sign = -1.
SchurElement blm_mul_simple(int h, int sign, const PeriodicMatrix& A, const DimVector& j, int r);

// k_i = 0(e_i, r); k_i^{-1} = 0(-e_i, r); [k_i; 0 over t] = sum_lambda [lambda_i over t] 1_lambda.
SchurElement kk(int n, int i, int r);
SchurElement kk_inv(int n, int i, int r);
SchurElement bracket_K_binom(int n, int i, int t, int r);
// [k_i; m]! = (k_i - 1)(k_i - v) ... (k_i - v^{m-1})
SchurElement kk_factorial(int n, int i, int m, int r);

// ---- images of the double Ringel-Hall algebra ----

// zeta^+ : u~_A |-> A(0, r); zeta^- : u~_A |-> tA(0, r). Hall elements are in the u_A basis.
SchurElement zeta(Sign s, const HallElement& x, int r);
SchurElement xi_E(int n, int i, int r);
SchurElement xi_F(int n, int i, int r);
SchurElement xi_K(const DimVector& j, int r);  // 0(j, r)
SchurElement xi_z(Sign s, int n, int m, int r);  // p_m for Plus, q_m for Minus

// ---- triangular decomposition ----

DimVector hook_sum(const PeriodicMatrix& A);
SchurElement triangular_p(const PeriodicMatrix& A);
// True when x - [A] is supported on matrices B with B strictly below A.
bool is_triangular(const SchurElement& x, const PeriodicMatrix& A);

// ---- polynomial identity ----

LaurentPoly poly_P(const DimVector& lambda, const DimVector& mu);
LaurentPoly poly_Pprime(const DimVector& lambda, const DimVector& mu);

// ---- relation checks ----

struct RelationResult {
    std::string name;
    bool ok;
};

// Both sides of the commutator relation for u_{A_lambda}^+ and u_{A_mu}^- under xi_r.
struct CommutatorSides {
    SchurElement lhs, rhs;
};
CommutatorSides commutator_sides(const DimVector& lambda, const DimVector& mu, int r);
bool commutator_check(const DimVector& lambda, const DimVector& mu, int r);

std::vector<RelationResult> presentation_suite(int n, int r);
std::vector<RelationResult> rho_suite(int r);

// rho = sum_{sigma(a) = r} e_a and rho^{-1} = sum f_a, for n >= r.
SchurElement schur_rho(int n, int r);
SchurElement schur_rho_inv(int n, int r);
// Elementary symmetric elements sigma_s of the p_m via Newton's identities.
SchurElement schur_sigma(int n, int s, int r);

std::string schur_to_string(const SchurElement& x);

}  // namespace affschur
