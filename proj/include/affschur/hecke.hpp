#pragma once

#include <vector>

#include "affschur/affine_weyl.hpp"
#include "affschur/lincomb.hpp"

namespace affschur {

// Element of the extended affine Hecke algebra in the basis {T_w}.
using HeckeElement = LinComb<AffinePerm>;

HeckeElement hecke_basis(const AffinePerm& w);
HeckeElement hecke_one(int r);

// x T_{s_k}, with T_s^2 = (v^2 - 1) T_s + v^2.
HeckeElement mul_gen_right(const HeckeElement& x, int k);
// T_{s_k} x
HeckeElement mul_gen_left(int k, const HeckeElement& x);
// x T_rho^a
HeckeElement mul_rho_right(const HeckeElement& x, int a);
HeckeElement mul(const HeckeElement& x, const HeckeElement& y);
// Inverse of T_w as a combination of basis elements.
HeckeElement hecke_inverse(const AffinePerm& w);

// x_lambda = sum_{w in S_lambda} T_w
HeckeElement x_lambda(const Composition& lambda);
// Sum of T_w over the double coset S_lambda d S_mu.
HeckeElement double_coset_sum(const Composition& lambda, const AffinePerm& d, const Composition& mu);

// Coefficients evaluated at v = 1 (the group algebra).
HeckeElement specialize_v1(const HeckeElement& x);
// Product in the group algebra Z[affine symmetric group].
HeckeElement group_mul(const HeckeElement& x, const HeckeElement& y);

std::string hecke_to_string(const HeckeElement& x);

}  // namespace affschur
