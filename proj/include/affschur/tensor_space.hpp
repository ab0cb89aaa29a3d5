#pragma once

#include <vector>

#include "affschur/hecke.hpp"
#include "affschur/lincomb.hpp"
#include "affschur/schur.hpp"

namespace affschur {

// omega_i = omega_{i_1} (x) ... (x) omega_{i_r} for i in Z^r.
using TensorIndex = std::vector<int>;
using TensorElement = LinComb<TensorIndex, VecHash>;

TensorElement tensor_basis(const TensorIndex& i);

// ---- right action of the affine Hecke algebra ----

// omega_i X_t^{-1} = omega_{i + n e_t}; X_t shifts slot t by -n.
TensorElement act_Xt_inv(const TensorElement& x, int n, int t);
TensorElement act_Xt(const TensorElement& x, int n, int t);
// omega_i T_k for 1 <= k < r. On I(n, r) by the three-case rule; in general by writing
// omega_i = omega_j X^{-m} with j in I(n, r) and commuting T_k past the X-monomial.
TensorElement act_Tk(const TensorElement& x, int n, int k);
TensorElement act_Tk_inv(const TensorElement& x, int n, int k);
// T_rho = v^{r-1} X_1^{-1} T_1^{-1} ... T_{r-1}^{-1}
TensorElement act_Trho(const TensorElement& x, int n);
TensorElement act_Trho_inv(const TensorElement& x, int n);
// T_{s_k} for any k (k = r mod r is the affine generator).
TensorElement act_Ts(const TensorElement& x, int n, int k);
// Action of a general element of the affine Hecke algebra.
TensorElement act_hecke(const TensorElement& x, int n, const HeckeElement& h);

// ---- left action of the double Ringel-Hall algebra ----

struct LeftGenerator {
    enum class Kind { E, F, K, Kinv, ZPlus, ZMinus, SemisimplePlus, SemisimpleMinus };
    Kind kind;
    int index = 1;  // i for E_i, F_i, K_i; t for z_t
    DimVector a;  // semisimple generators u~_a
};

TensorElement act_E(const TensorElement& x, int n, int i);
TensorElement act_F(const TensorElement& x, int n, int i);
TensorElement act_K(const TensorElement& x, int n, int i, int power = 1);
// z_t^+ lowers one slot by tn, z_t^- raises one slot by tn.
TensorElement act_z(const TensorElement& x, int n, Sign s, int t);
// u~_a^{+-} acting through the iterated comultiplication.
TensorElement act_semisimple(const TensorElement& x, int n, Sign s, const DimVector& a);
TensorElement act_gen_left(const LeftGenerator& g, int n, const TensorElement& x);

// ---- comparison with the Schur algebra ----

// i_lambda = (1^{lambda_1}, ..., n^{lambda_n})
TensorIndex fundamental_index(const DimVector& lambda);
// Image of [A^j] under the Hecke-module isomorphism sending [A^{i_lambda}] to omega_{i_lambda}.
TensorElement tensor_of_matrix_basis(const TensorIndex& j, int n);
// Action of an element of S(n, r) on the tensor space, computed by the product oracle
// in S(max(n, r), r).
TensorElement schur_act(const SchurElement& s, int n, const TensorElement& x);

std::string tensor_to_string(const TensorElement& x);

}  // namespace affschur
