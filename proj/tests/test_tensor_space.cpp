#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "affschur/tensor_space.hpp"

using namespace affschur;

namespace {

LaurentPoly v(int k) { return LaurentPoly::v(k); }

TensorElement w(std::initializer_list<int> i) { return tensor_basis(TensorIndex(i)); }

TensorElement random_vector(std::mt19937& rng, int n, int r, int terms = 2) {
    std::uniform_int_distribution<int> entry(-n, 2 * n), coeff(-2, 2);
    TensorElement x;
    for (int t = 0; t < terms; ++t) {
        TensorIndex i(static_cast<std::size_t>(r));
        for (auto& s : i) s = entry(rng);
        x.add(i, v(coeff(rng)) * LaurentPoly(t + 1));
    }
    return x;
}

std::vector<LeftGenerator> generators(int n, int r) {
    using K = LeftGenerator::Kind;
    std::vector<LeftGenerator> out;
    for (int i = 1; i <= n; ++i) {
        out.push_back({K::E, i, {}});
        out.push_back({K::F, i, {}});
        out.push_back({K::K, i, {}});
        out.push_back({K::Kinv, i, {}});
    }
    for (int t = 1; t <= 2; ++t) {
        out.push_back({K::ZPlus, t, {}});
        out.push_back({K::ZMinus, t, {}});
    }
    for (const auto& a : compositions(n, std::min(r, 2))) {
        out.push_back({K::SemisimplePlus, 1, a});
        out.push_back({K::SemisimpleMinus, 1, a});
    }
    return out;
}

}  // namespace

TEST_CASE("right action examples") {
    CHECK(act_Tk(w({1, 2}), 2, 1) == w({2, 1}) * v(1));
    CHECK(act_Tk(w({2, 2}), 2, 1) == w({2, 2}) * v(2));
    CHECK(act_Tk(w({2, 1}), 2, 1) == w({1, 2}) * v(1) + w({2, 1}) * (v(2) - LaurentPoly(1)));
    CHECK(act_Xt_inv(w({1, 2}), 2, 2) == w({1, 4}));
    CHECK(act_Xt(act_Xt_inv(w({1, 2, 0}), 3, 3), 3, 3) == w({1, 2, 0}));
    // outside I(n, r): omega_{(1,3)} = omega_{(1,1)} X_2^{-1}
    CHECK(act_Tk(w({1, 3}), 2, 1) == w({3, 1}));
    CHECK(act_Trho(w({1}), 2) == w({3}));
}

TEST_CASE("Hecke relations on the tensor space") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 2, r = 2 + (trial / 2) % 2;
        TensorElement x = random_vector(rng, n, r);
        for (int k = 1; k < r; ++k) {
            TensorElement t = act_Tk(x, n, k);
            CHECK(act_Tk(t, n, k) == t * (v(2) - LaurentPoly(1)) + x * v(2));
            CHECK(act_Tk_inv(t, n, k) == x);
            // T_k X_k T_k = v^2 X_{k+1}
            CHECK(act_Tk(act_Xt(t, n, k), n, k) == act_Xt(x, n, k + 1) * v(2));
            for (int j = 1; j <= r; ++j)
                if (j != k && j != k + 1) CHECK(act_Xt(t, n, j) == act_Tk(act_Xt(x, n, j), n, k));
            if (k + 1 < r)
                CHECK(act_Tk(act_Tk(act_Tk(x, n, k), n, k + 1), n, k) ==
                      act_Tk(act_Tk(act_Tk(x, n, k + 1), n, k), n, k + 1));
        }
        CHECK(act_Trho_inv(act_Trho(x, n), n) == x);
        for (int k = 1; k <= r; ++k)
            CHECK(act_Trho_inv(act_Ts(act_Trho(x, n), n, k), n) == act_Ts(x, n, k + 1));
        CHECK(act_Ts(act_Ts(x, n, r), n, r) == act_Ts(x, n, r) * (v(2) - LaurentPoly(1)) + x * v(2));
    }
    // module structure over the whole affine Hecke algebra
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 2, r = 2 + (trial / 2) % 2;
        std::vector<int> win(static_cast<std::size_t>(r));
        std::iota(win.begin(), win.end(), 1);
        std::shuffle(win.begin(), win.end(), rng);
        for (auto& s : win) s += r * std::uniform_int_distribution<int>(-1, 1)(rng);
        AffinePerm a(win);
        std::shuffle(win.begin(), win.end(), rng);
        AffinePerm b(win);
        TensorElement x = random_vector(rng, n, r, 1);
        HeckeElement ha = hecke_basis(a), hb = hecke_basis(b);
        CHECK(act_hecke(act_hecke(x, n, ha), n, hb) == act_hecke(x, n, mul(ha, hb)));
    }
}

TEST_CASE("rank one and generator actions") {
    // u~_A^+ omega_s = omega_t for A = E_{t,s}, t < s; zero for decomposable M(A)
    for (int n = 2; n <= 3; ++n)
        for (int s = -n; s <= 2 * n; ++s) {
            for (int i = 1; i <= n; ++i) {
                CHECK(act_E(w({s}), n, i) == (mod1(s, n) == mod1(i + 1, n) ? w({s - 1}) : TensorElement()));
                CHECK(act_K(w({s}), n, i) == w({s}) * v(mod1(s, n) == i ? 1 : 0));
            }
            CHECK(act_z(w({s}), n, Sign::Plus, 1) == w({s - n}));
            DimVector two(static_cast<std::size_t>(n), 0);
            two[0] = 2;
            CHECK(act_semisimple(w({s}), n, Sign::Plus, two).is_zero());
        }
    // z_t^+ omega_i = sum_s omega_{i - tn e_s}
    CHECK(act_z(w({1, 2}), 2, Sign::Plus, 2) == w({-3, 2}) + w({1, -2}));
    CHECK(act_z(w({1, 2}), 2, Sign::Minus, 1) == w({3, 2}) + w({1, 4}));
    // semisimple generators of a simple module are E_i and F_i
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 2, r = 1 + trial % 3;
        TensorElement x = random_vector(rng, n, r);
        for (int i = 1; i <= n; ++i) {
            DimVector e = unit_vector(n, i);
            CHECK(act_semisimple(x, n, Sign::Plus, e) == act_E(x, n, i));
            CHECK(act_semisimple(x, n, Sign::Minus, e) == act_F(x, n, i));
        }
        CHECK(act_semisimple(x, n, Sign::Plus, DimVector(static_cast<std::size_t>(n), r)).is_zero());
    }
}

TEST_CASE("bimodule commutation") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 2, r = 2 + (trial / 2) % 2;
        TensorElement x = random_vector(rng, n, r);
        for (const auto& g : generators(n, r)) {
            TensorElement gx = act_gen_left(g, n, x);
            for (int k = 1; k < r; ++k) CHECK(act_gen_left(g, n, act_Tk(x, n, k)) == act_Tk(gx, n, k));
            for (int t = 1; t <= r; ++t) {
                CHECK(act_gen_left(g, n, act_Xt(x, n, t)) == act_Xt(gx, n, t));
                CHECK(act_gen_left(g, n, act_Xt_inv(x, n, t)) == act_Xt_inv(gx, n, t));
            }
        }
    }
}

TEST_CASE("agreement with the Schur algebra") {
    CHECK(fundamental_index({2, 0, 1}) == TensorIndex{1, 1, 3});
    CHECK(tensor_of_matrix_basis({2, 1}, 2) == w({2, 1}));
    std::mt19937 rng(41);
    for (int trial = 0; trial < 24; ++trial) {
        int n = 2 + trial % 2, r = 2 + (trial / 2) % 2;
        TensorElement x = random_vector(rng, n, r);
        for (int i = 1; i <= n; ++i) {
            CHECK(schur_act(xi_E(n, i, r), n, x) == act_E(x, n, i));
            CHECK(schur_act(xi_F(n, i, r), n, x) == act_F(x, n, i));
            CHECK(schur_act(kk(n, i, r), n, x) == act_K(x, n, i));
        }
        if (n == 2) {
            CHECK(schur_act(xi_z(Sign::Plus, n, 1, r), n, x) == act_z(x, n, Sign::Plus, 1));
            CHECK(schur_act(xi_z(Sign::Minus, n, 1, r), n, x) == act_z(x, n, Sign::Minus, 1));
        }
        for (const auto& a : compositions(n, 2)) {
            HallElement u = tilde_u(semisimple(a));
            CHECK(schur_act(zeta(Sign::Plus, u, r), n, x) == act_semisimple(x, n, Sign::Plus, a));
            CHECK(schur_act(zeta(Sign::Minus, u, r), n, x) == act_semisimple(x, n, Sign::Minus, a));
        }
    }
}
