#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "affschur/quiver_rep.hpp"

namespace affschur {

struct NotMinimalRep : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotInCoset : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element of the extended affine symmetric group: a bijection w of Z with w(i+r) = w(i)+r,
// stored by its window (w(1), ..., w(r)).
class AffinePerm {
public:
    AffinePerm() = default;
    explicit AffinePerm(std::vector<int> window);  // validates bijectivity
    static AffinePerm identity(int r);
    static AffinePerm rho(int r, int k = 1);       // j -> j + k
    static AffinePerm s(int r, int i);             // simple reflection s_i, i taken mod r
    static AffinePerm epsilon(int r, int k);       // i -> i + r at i = k
    static AffinePerm from_finite(const std::vector<int>& perm);  // permutation of 1..r

    int r() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& window() const { return w_; }
    int operator()(int i) const;
    int rho_power() const;  // sum(w(i) - i) / r
    bool is_identity() const;

    AffinePerm operator*(const AffinePerm& o) const;  // composition (this o o)
    AffinePerm inverse() const;

    friend bool operator==(const AffinePerm&, const AffinePerm&) = default;
    friend bool operator<(const AffinePerm& a, const AffinePerm& b) { return a.w_ < b.w_; }
    std::size_t hash() const;
    std::string to_string() const;  // "[w1,w2,...,wr]"
    static AffinePerm parse(const std::string& s);

private:
    std::vector<int> w_;
};

// |Inv(w)| = #{(s,t) : 1 <= s <= r, s < t, w(s) > w(t)}
int length(const AffinePerm& w);
// Sum over i < j of |floor((w(j) - w(i)) / r)|.
int length_formula(const AffinePerm& w);
// Reduced expression w = rho^a s_{i_1} ... s_{i_m}; returns (a, [i_1..i_m]).
std::pair<int, std::vector<int>> reduced_word(const AffinePerm& w);

// ---- compositions ----

using Composition = std::vector<int>;

std::vector<Composition> compositions(int n, int r);  // Lambda(n, r), deterministic order
std::string composition_string(const Composition& c);
// Index k in Z of the block R^lambda_k containing position s.
int block_of(const Composition& lambda, int s);
// First and last position of R^lambda_k.
std::pair<int, int> block_range(const Composition& lambda, int k);

// Young subgroup S_lambda of the finite symmetric group on 1..r (zeros allowed in lambda).
std::vector<AffinePerm> young_subgroup(const Composition& lambda);
bool in_young_subgroup(const AffinePerm& w, const Composition& lambda);
AffinePerm longest_element(const Composition& lambda);
long young_order(const Composition& lambda);

// d in D_lambda (minimal in S_lambda d) and D_{lambda,mu} = D_lambda cap D_mu^{-1}.
bool is_min_left(const AffinePerm& d, const Composition& lambda);
bool is_min_rep(const AffinePerm& d, const Composition& lambda, const Composition& mu);
AffinePerm min_coset_rep(const Composition& lambda, const AffinePerm& w, const Composition& mu);

// jmath(lambda, d, mu) = A with a_{k,l} = |R^lambda_k cap d R^mu_l|.
PeriodicMatrix jmath_matrix(const Composition& lambda, const AffinePerm& w, const Composition& mu);
PeriodicMatrix jmath(const Composition& lambda, const AffinePerm& d, const Composition& mu);
struct CosetTriple {
    Composition lambda;
    AffinePerm d;
    Composition mu;
};
CosetTriple jmath_inv(const PeriodicMatrix& A, int r);

// Nonzero entries of the rows of A: S_nu = S_lambda cap d S_mu d^{-1}.
Composition coset_intersection_left(const Composition& lambda, const AffinePerm& d, const Composition& mu);
// Nonzero entries of the columns of A: S_nu = d^{-1} S_lambda d cap S_mu.
Composition coset_intersection(const Composition& lambda, const AffinePerm& d, const Composition& mu);

// Elements of S_lambda d S_mu, each once, as w1 d w2 with w1 in S_lambda, w2 in D_nu cap S_mu.
std::vector<AffinePerm> double_coset_elements(const Composition& lambda, const AffinePerm& d, const Composition& mu);
struct Decomposition {
    AffinePerm w1, d, w2;
};
Decomposition decompose(const AffinePerm& w, const Composition& lambda, const Composition& mu);
Decomposition decompose(const AffinePerm& w, const Composition& lambda, const AffinePerm& d, const Composition& mu);

}  // namespace affschur

template <>
struct std::hash<affschur::AffinePerm> {
    std::size_t operator()(const affschur::AffinePerm& w) const { return w.hash(); }
};
