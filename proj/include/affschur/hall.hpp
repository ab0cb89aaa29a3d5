#pragma once

#include <cstddef>
#include <functional>
#include <unordered_map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "affschur/laurent.hpp"
#include "affschur/lincomb.hpp"
#include "affschur/quiver_rep.hpp"

namespace affschur {

struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InterpolationUnstable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAperiodic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotUnique : std::logic_error {
    using std::logic_error::logic_error;
};

// Largest frak d(C) for which Hall numbers are counted (default 5).
void set_dimension_cap(int cap);
int dimension_cap();
void check_dimension_cap(const PeriodicMatrix& C);

// ---- explicit modules over F_p ----

// M(C) over F_p with its standard basis: every arrow sends a basis vector to a basis vector
// or to zero. Graded subspaces are handled in reduced row echelon form.
class FqModule {
public:
    FqModule(const PeriodicMatrix& C, int p);

    int p() const { return p_; }
    int n() const { return n_; }
    const DimVector& dims() const { return dims_; }
    // Image index at vertex k+l of basis vector idx at vertex k under f^l, or -1.
    int path(int k, int l, int idx) const;
    int max_length() const { return maxlen_; }

    // A graded subspace: one RREF basis (list of rows) per vertex.
    using Rows = std::vector<std::vector<int>>;
    using Graded = std::vector<Rows>;

    // Calls visit(U) for every arrow-stable graded subspace U.
    template <class F>
    void for_each_submodule(F&& visit) const;

    // Rank invariants: r[k][l] = rank of f^l restricted to U_k (sub) or induced on V_k/U_k (quotient),
    // for l = 0..max_length.
    std::vector<std::vector<int>> sub_ranks(const Graded& U) const;
    std::vector<std::vector<int>> quotient_ranks(const Graded& U) const;
    // Rank invariants of the whole module.
    std::vector<std::vector<int>> ranks() const;

    // Multisegment type from rank invariants.
    static PeriodicMatrix type_from_ranks(int n, const std::vector<std::vector<int>>& r);

    // All subspaces of F_p^d in RREF.
    const std::vector<Rows>& subspaces(int d) const;

    bool contains(const Rows& U, std::vector<int> x) const;
    int rank(Rows M) const;

private:
    int p_, n_, maxlen_ = 0;
    DimVector dims_;
    // next_[k][idx]: image of basis vector idx at vertex k under one arrow
    std::vector<std::vector<int>> next_;
    // path_[l][k][idx]
    std::vector<std::vector<std::vector<int>>> path_;

    void visit_rec(int k, Graded& U, const std::function<void(const Graded&)>& visit) const;
};

template <class F>
void FqModule::for_each_submodule(F&& visit) const {
    Graded U(static_cast<std::size_t>(n_));
    std::function<void(const Graded&)> fn = visit;
    visit_rec(0, U, fn);
}

// Number of submodules N of M(C) over F_p with N ~ M(B) and M(C)/N ~ M(A), tabulated
// for all pairs (A, B).
struct PairKey {
    PeriodicMatrix A, B;
    friend bool operator==(const PairKey&, const PairKey&) = default;
};
struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        std::size_t h = k.A.hash();
        hash_combine(h, k.B.hash());
        return h;
    }
};
using CountTable = std::unordered_map<PairKey, long, PairKeyHash>;
using HallTable = std::unordered_map<PairKey, LaurentPoly, PairKeyHash>;

const CountTable& filtration_table(const PeriodicMatrix& C, int p);
// Filtrations M(C) = M_0 > M_1 > ... > M_m = 0 with M_{k-1}/M_k ~ M(parts[k-1]).
long count_filtrations(const PeriodicMatrix& C, const std::vector<PeriodicMatrix>& parts, int p);

// All nonzero Hall polynomials phi^C_{A,B} (in v, even powers only) for a fixed C.
const HallTable& hall_table(const PeriodicMatrix& C);
// Primes that were needed to stabilize the interpolation for C.
std::vector<int> hall_primes_used(const PeriodicMatrix& C);
LaurentPoly hall_poly(const PeriodicMatrix& C, const PeriodicMatrix& A, const PeriodicMatrix& B);
LaurentPoly hall_poly_multi(const PeriodicMatrix& C, const std::vector<PeriodicMatrix>& parts);
// Evaluates an even Laurent polynomial (a polynomial in q = v^2) at q.
mpz_class eval_at_q(const LaurentPoly& f, long q);
// Writes a polynomial in v^2 as a polynomial in q, e.g. "1 + q".
std::string q_string(const LaurentPoly& f);

// ---- the generic Ringel-Hall algebra ----

using HallElement = LinComb<PeriodicMatrix>;

HallElement hall_unit(int n);
HallElement hall_basis(const PeriodicMatrix& A);
HallElement u_simple(int n, int i);
// u_A u_B = v^{<d(A),d(B)>} sum_C phi^C_{A,B} u_C
const HallElement& hall_basis_product(const PeriodicMatrix& A, const PeriodicMatrix& B);
HallElement hall_mul(const HallElement& x, const HallElement& y);
HallElement hall_pow(const HallElement& x, int m, int n);
// u_i^{(m)} = v^{m(m-1)} u_{[m S_i]}
HallElement divided_power(int n, int i, int m);
PeriodicMatrix generic_ext(const PeriodicMatrix& A, const PeriodicMatrix& B);

struct WordLetter {
    int i, t;
    friend bool operator==(const WordLetter&, const WordLetter&) = default;
};
std::vector<WordLetter> monomial_word(const PeriodicMatrix& A);
std::string word_string(const std::vector<WordLetter>& w);
HallElement monomial_element(const PeriodicMatrix& A);
// m_s(A) and the aperiodic part A'.
std::vector<int> periodic_multiplicities(const PeriodicMatrix& A);
PeriodicMatrix aperiodic_part(const PeriodicMatrix& A);

int d_prime(const PeriodicMatrix& A);
HallElement tilde_u(const PeriodicMatrix& A);

// Central elements c_m, pi_m and z_m. z_m^+ and z_m^- share coefficients.
HallElement central_c(int n, int m);
struct ScaledHall {
    HallElement num;
    LaurentPoly den;  // element = num / den
};
ScaledHall central_pi(int n, int m);
HallElement central_z(int n, int m);

// ---- extended Hall algebras H^{>=0} and H^{<=0} ----

enum class Sign { Plus, Minus };

// Key (A, alpha): u_A^+ K_alpha in the positive part, K_alpha u_A^- in the negative part.
struct ExtKey {
    PeriodicMatrix A;
    DimVector alpha;
    friend bool operator==(const ExtKey&, const ExtKey&) = default;
    friend bool operator<(const ExtKey& a, const ExtKey& b) {
        if (a.A != b.A) return a.A < b.A;
        return a.alpha < b.alpha;
    }
};
struct ExtKeyHash {
    std::size_t operator()(const ExtKey& k) const {
        std::size_t h = k.A.hash();
        hash_combine(h, VecHash()(k.alpha));
        return h;
    }
};
using ExtHallElement = LinComb<ExtKey, ExtKeyHash>;

struct TensorKey {
    ExtKey left, right;
    friend bool operator==(const TensorKey&, const TensorKey&) = default;
    friend bool operator<(const TensorKey& a, const TensorKey& b) {
        if (!(a.left == b.left)) return a.left < b.left;
        return a.right < b.right;
    }
};
struct TensorKeyHash {
    std::size_t operator()(const TensorKey& k) const {
        std::size_t h = ExtKeyHash()(k.left);
        hash_combine(h, ExtKeyHash()(k.right));
        return h;
    }
};
using ExtTensor = LinComb<TensorKey, TensorKeyHash>;

ExtHallElement ext_basis(const PeriodicMatrix& A, const DimVector& alpha);
ExtHallElement ext_K(const DimVector& alpha);
ExtHallElement ext_embed(const HallElement& x);  // x with alpha = 0
// K~_alpha = K_{alpha - tau alpha}
DimVector tilde_K_exponent(const DimVector& alpha);

ExtHallElement ext_mul(Sign s, const ExtHallElement& x, const ExtHallElement& y);
ExtTensor comult(Sign s, const ExtHallElement& x);
LaurentPoly counit(const ExtHallElement& x);
ExtHallElement antipode(Sign s, const ExtHallElement& x);
ExtHallElement antipode_inverse(Sign s, const ExtHallElement& x);

ExtTensor tensor_mul(Sign s, const ExtTensor& x, const ExtTensor& y);
ExtTensor tensor_flip(const ExtTensor& x);
ExtTensor tensor_pure(const ExtHallElement& a, const ExtHallElement& b);
// Maps used for Hopf axioms: (Delta (x) id), (id (x) Delta) flattened into triple tensors.
using TripleKey = std::vector<ExtKey>;
struct TripleKeyHash {
    std::size_t operator()(const TripleKey& k) const {
        std::size_t h = k.size();
        for (const auto& e : k) hash_combine(h, ExtKeyHash()(e));
        return h;
    }
};
using ExtTriple = LinComb<TripleKey, TripleKeyHash>;
ExtTriple comult_left(Sign s, const ExtTensor& x);
ExtTriple comult_right(Sign s, const ExtTensor& x);
// mu (S (x) id) Delta and mu (id (x) S) Delta
ExtHallElement antipode_left_check(Sign s, const ExtHallElement& x);
ExtHallElement antipode_right_check(Sign s, const ExtHallElement& x);

// Skew-Hopf pairing psi(a, b) with a in H^{>=0} and b in H^{<=0}.
RationalLaurent pairing(const ExtHallElement& a, const ExtHallElement& b);
// psi(a (x) a', b (x) b') = psi(a, b) psi(a', b')
RationalLaurent pairing(const ExtTensor& a, const ExtTensor& b);

// JSON-facing text helpers.
std::string hall_to_string(const HallElement& x);

}  // namespace affschur
