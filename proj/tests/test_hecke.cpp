#include <doctest.h>

#include <random>

#include "affschur/hecke.hpp"

using namespace affschur;

namespace {

LaurentPoly v(int k) { return LaurentPoly::v(k); }

AffinePerm random_perm(std::mt19937& rng, int r, int spread) {
    std::vector<int> w(static_cast<std::size_t>(r));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    std::uniform_int_distribution<int> shift(-spread, spread);
    for (auto& x : w) x += r * shift(rng);
    return AffinePerm(w);
}

HeckeElement T(const AffinePerm& w) { return hecke_basis(w); }
HeckeElement Ts(int r, int i) { return T(AffinePerm::s(r, i)); }

}  // namespace

TEST_CASE("quadratic and braid relations") {
    for (int r = 2; r <= 4; ++r) {
        HeckeElement one = hecke_one(r);
        for (int k = 1; k <= r; ++k) {
            CHECK(mul_gen_right(one, k) == Ts(r, k));
            HeckeElement sq = mul(Ts(r, k), Ts(r, k));
            CHECK(sq == Ts(r, k) * (v(2) - LaurentPoly(1)) + one * v(2));
            CHECK(mul_gen_left(k, Ts(r, k)) == sq);
            if (r >= 3) {
                int j = k + 1;
                CHECK(mul(mul(Ts(r, k), Ts(r, j)), Ts(r, k)) == mul(mul(Ts(r, j), Ts(r, k)), Ts(r, j)));
                if (r >= 4) CHECK(mul(Ts(r, k), Ts(r, k + 2)) == mul(Ts(r, k + 2), Ts(r, k)));
            }
            // T_rho T_{s_i} T_rho^{-1} = T_{s_{i+1}}
            HeckeElement rho = T(AffinePerm::rho(r)), rhoinv = T(AffinePerm::rho(r, -1));
            CHECK(mul(mul(rho, Ts(r, k)), rhoinv) == Ts(r, k + 1));
            CHECK(mul(rho, rhoinv) == one);
        }
    }
}

TEST_CASE("products of basis elements") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 2 + trial % 2;
        AffinePerm a = random_perm(rng, r, 1), b = random_perm(rng, r, 1), c = random_perm(rng, r, 1);
        HeckeElement x = mul(T(a), T(b));
        CHECK(mul(x, T(c)) == mul(T(a), mul(T(b), T(c))));
        if (length(a * b) == length(a) + length(b)) CHECK(x == T(a * b));
        CHECK(specialize_v1(x) == T(a * b));
        CHECK(mul(T(a), hecke_inverse(a)) == hecke_one(r));
        CHECK(mul(hecke_inverse(a), T(a)) == hecke_one(r));
    }
}

TEST_CASE("x_lambda") {
    CHECK(x_lambda({1, 1, 1}) == hecke_one(3));
    CHECK(x_lambda({2}) == hecke_one(2) + Ts(2, 1));
    for (int r = 1; r <= 4; ++r)
        for (const auto& la : compositions(2, r)) {
            HeckeElement x = x_lambda(la);
            LaurentPoly poincare;
            for (const auto& w : young_subgroup(la)) poincare += v(2 * length(w));
            CHECK(mul(x, x) == x * poincare);
            // x_lambda T_d for d minimal is the sum over S_lambda d
            for (const auto& mu : compositions(2, r)) {
                std::mt19937 rng(static_cast<unsigned>(r));
                AffinePerm d = min_coset_rep(la, random_perm(rng, r, 1), mu);
                HeckeElement expect;
                for (const auto& w1 : young_subgroup(la)) expect.add(w1 * d, LaurentPoly(1));
                CHECK(mul(x, T(d)) == expect);
            }
        }
    AffinePerm w = AffinePerm::parse("[3,-1,4]");
    CHECK(specialize_v1(T(w) * (v(2) + v(-4))) == T(w) * LaurentPoly(2));
}
