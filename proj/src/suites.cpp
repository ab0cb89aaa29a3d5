#include "affschur/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "affschur/classical.hpp"
#include "affschur/tensor_space.hpp"

namespace affschur {

void SuiteReport::check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok) failures.push_back(describe());
}

namespace {

using Pairs = std::vector<std::pair<int, int>>;

LaurentPoly v(int k) { return LaurentPoly::v(k); }

std::vector<int> ns_or(const SuiteConfig& cfg, std::vector<int> dflt) {
    return cfg.n ? std::vector<int>{cfg.n} : dflt;
}

std::vector<int> rs_or(const SuiteConfig& cfg, std::vector<int> dflt) {
    return cfg.r ? std::vector<int>{cfg.r} : dflt;
}

Pairs pairs_or(const SuiteConfig& cfg, const Pairs& dflt) {
    if (!cfg.n && !cfg.r) return dflt;
    Pairs out;
    for (auto [n, r] : dflt)
        if ((!cfg.n || n == cfg.n) && (!cfg.r || r == cfg.r)) out.emplace_back(n, r);
    if (out.empty()) out.emplace_back(cfg.n ? cfg.n : dflt.front().first, cfg.r ? cfg.r : dflt.front().second);
    return out;
}

int or_default(int x, int dflt) { return x ? x : dflt; }

std::vector<PeriodicMatrix> schur_basis(int n, int r, int b) {
    std::vector<PeriodicMatrix> out;
    for (const auto& A : offdiag_matrices(n, r, b))
        for (const auto& la : compositions(n, r - A.sum())) out.push_back(A + PeriodicMatrix::diag(la));
    return out;
}

// All vectors in [lo, hi]^n.
std::vector<DimVector> box(int n, int lo, int hi) {
    std::vector<DimVector> out{DimVector{}};
    for (int k = 0; k < n; ++k) {
        std::vector<DimVector> next;
        for (const auto& p : out)
            for (int x = lo; x <= hi; ++x) {
                DimVector q = p;
                q.push_back(x);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

DimVector zero_vec(int n) { return DimVector(static_cast<std::size_t>(n), 0); }

std::string str(const DimVector& a) { return to_string(a); }

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

LaurentPoly gauss_q_or_zero(int N, int t) {
    if (t < 0 || t > N) return LaurentPoly();
    return gauss_q(N, t);
}

// ---- gauss ----

SuiteReport gauss_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"gauss"};
    int top = or_default(cfg.max, 8);
    for (int N = 0; N <= top; ++N) {
        mpz_class b = 1;
        for (int t = 0; t <= N; ++t) {
            LaurentPoly g = gauss_sym(N, t);
            auto at = [N, t] { return "N=" + std::to_string(N) + " t=" + std::to_string(t); };
            rep.check(g.bar() == g, [&] { return "bar invariance " + at(); });
            rep.check(g.specialize_v1() == b, [&] { return "value at v=1 " + at(); });
            rep.check(gauss_q(N, t) == g.shifted(t * (N - t)), [&] { return "v^2 form " + at(); });
            if (N >= 1 && t >= 1)
                rep.check(g == gauss_sym(N - 1, t - 1).shifted(N - t) + gauss_sym(N - 1, t).shifted(-t),
                          [&] { return "Pascal recurrence " + at(); });
            b = b * (N - t) / (t + 1);
        }
    }
    return rep;
}

// ---- Hall algebra ----

SuiteReport hall_assoc_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"hall-assoc"};
    int D = or_default(cfg.max, 4);
    for (int n : ns_or(cfg, {2, 3})) {
        // associativity in terms of Hall polynomials
        auto all = theta_plus_up_to(n, D - 2);
        for (const auto& A : all)
            for (const auto& B : all)
                for (const auto& C : all) {
                    if (total_dim(A) + total_dim(B) + total_dim(C) > D) continue;
                    DimVector dE = dim_vector(A) + dim_vector(B) + dim_vector(C);
                    for (const auto& E : theta_plus_with_dim(dE)) {
                        LaurentPoly l, r;
                        for (const auto& M : theta_plus_with_dim(dim_vector(A) + dim_vector(B)))
                            l += hall_poly(M, A, B) * hall_poly(E, M, C);
                        for (const auto& M : theta_plus_with_dim(dim_vector(B) + dim_vector(C)))
                            r += hall_poly(E, A, M) * hall_poly(M, B, C);
                        rep.check(l == r, [&] {
                            return "associativity A=" + A.to_string() + " B=" + B.to_string() + " C=" + C.to_string() +
                                   " E=" + E.to_string();
                        });
                    }
                }
        // the interpolated polynomials reproduce the counts at primes not used in the fit
        for (const auto& C : theta_plus_up_to(n, D)) {
            const HallTable& tab = hall_table(C);
            // the configured primes plus the first prime the interpolation did not look at
            std::vector<int> used = hall_primes_used(C), primes = cfg.primes;
            int fresh = used.empty() ? 2 : used.back() + 1;
            while (std::find(used.begin(), used.end(), fresh) != used.end() || !is_prime(fresh)) ++fresh;
            primes.push_back(fresh);
            for (int p : primes) {
                const CountTable& counts = filtration_table(C, p);
                for (const auto& [key, cnt] : counts)
                    rep.check(eval_at_q(hall_poly(C, key.A, key.B), p) == cnt, [&] {
                        return "stability C=" + C.to_string() + " A=" + key.A.to_string() + " B=" + key.B.to_string() +
                               " p=" + std::to_string(p);
                    });
                for (const auto& [key, f] : tab)
                    rep.check(counts.count(key) > 0, [&] {
                        return "stability C=" + C.to_string() + " missing count p=" + std::to_string(p);
                    });
            }
        }
        // products of two semisimple modules
        std::vector<DimVector> vecs;
        for (const auto& A : theta_plus_up_to(n, D, true))
            if (A.bandwidth() <= 1) vecs.push_back(dim_vector(A));
        for (const auto& al : vecs)
            for (const auto& be : vecs) {
                if (sigma(al) + sigma(be) > D) continue;
                HallElement lhs = hall_mul(hall_basis(semisimple(al)), hall_basis(semisimple(be)));
                HallElement rhs;
                int e = 0;
                DimVector ga(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    std::size_t k = static_cast<std::size_t>(i), k1 = static_cast<std::size_t>((i + 1) % n);
                    e += al[k] * (be[k] - be[k1]);
                    ga[k] = std::min(al[k], be[k1]);
                }
                for (const auto& la : box(n, 0, *std::max_element(ga.begin(), ga.end()))) {
                    if (!leq(la, ga)) continue;
                    PeriodicMatrix C(n);
                    LaurentPoly coeff(1);
                    for (int i = 0; i < n; ++i) {
                        std::size_t k = static_cast<std::size_t>(i), km = static_cast<std::size_t>((i + n - 1) % n);
                        int top = al[k] + be[k] - la[k] - la[km];
                        C.add(i + 1, i + 2, top);
                        C.add(i + 1, i + 3, la[k]);
                        coeff *= gauss_q_or_zero(top, be[k] - la[km]);
                    }
                    rep.check(hall_poly(C, semisimple(al), semisimple(be)) == coeff,
                              [&] { return "semisimple Hall polynomial " + str(al) + " * " + str(be) + " at " + C.to_string(); });
                    rhs.add_scaled(C, coeff, e);
                }
                rep.check(lhs == rhs, [&] { return "semisimple product " + str(al) + " * " + str(be); });
            }
    }
    return rep;
}

SuiteReport central_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"central"};
    auto ns = ns_or(cfg, {2, 3});
    auto has = [&](int n) { return std::find(ns.begin(), ns.end(), n) != ns.end(); };
    if (has(2)) {
        HallElement u1 = u_simple(2, 1), u2 = u_simple(2, 2);
        HallElement z = hall_mul(u1, u2) + hall_mul(u2, u1) - hall_basis(semisimple(delta_vector(2))) * (v(1) + v(-1));
        rep.check(central_z(2, 1) == z, [] { return "closed form of z_1 for n = 2"; });
    }
    if (has(3)) {
        HallElement a = u_simple(3, 1), b = u_simple(3, 2), c = u_simple(3, 3);
        auto m3 = [](const HallElement& x, const HallElement& y, const HallElement& w) { return hall_mul(hall_mul(x, y), w); };
        HallElement z = m3(a, b, c) + m3(b, c, a) + m3(c, a, b) - (m3(a, c, b) + m3(b, a, c) + m3(c, b, a)) * (v(1) + v(-1)) +
                        hall_basis(semisimple(delta_vector(3))) * (v(2) + LaurentPoly(1) + v(-2));
        rep.check(central_z(3, 1) == z, [] { return "closed form of z_1 for n = 3"; });
    }
    for (int n : ns) {
        ScaledHall pi = central_pi(n, 1);
        HallElement c1 = central_c(n, 1);
        std::string tag = " for n = " + std::to_string(n);
        rep.check(pi.den == v(1) - v(-1), [&] { return "denominator of pi_1" + tag; });
        rep.check(pi.num == c1 * v(n), [&] { return "recursion for pi_1" + tag; });
        rep.check(central_z(n, 1) * (v(1) - v(-1)) == c1 * v(n), [&] { return "z_1 against c_1" + tag; });
        // c_1 commutes with every monomial in the u_i of total degree <= 4
        std::vector<std::vector<int>> words{{}};
        for (int len = 1; n + len <= 4; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& w : words)
                if (static_cast<int>(w.size()) == len - 1)
                    for (int i = 1; i <= n; ++i) {
                        auto w2 = w;
                        w2.push_back(i);
                        next.push_back(w2);
                    }
            words.insert(words.end(), next.begin(), next.end());
        }
        for (const auto& w : words) {
            if (w.empty()) continue;
            HallElement x = hall_unit(n);
            for (int i : w) x = hall_mul(x, u_simple(n, i));
            rep.check(hall_mul(c1, x) == hall_mul(x, c1), [&] {
                std::string s;
                for (int i : w) s += "u" + std::to_string(i);
                return "c_1 does not commute with " + s + tag;
            });
        }
    }
    return rep;
}

SuiteReport hopf_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"hopf"};
    int D = or_default(cfg.max, 3);
    for (Sign s : {Sign::Plus, Sign::Minus})
        for (int n : ns_or(cfg, {2, 3})) {
            std::string tag = std::string(s == Sign::Plus ? " (+)" : " (-)") + " n=" + std::to_string(n);
            for (const auto& A : theta_plus_up_to(n, D, true))
                for (const auto& al : {zero_vec(n), unit_vector(n, 1)}) {
                    ExtHallElement x = ext_basis(A, al);
                    auto at = [&] { return A.to_string() + " K" + str(al) + tag; };
                    ExtTensor d = comult(s, x);
                    rep.check(comult_left(s, d) == comult_right(s, d), [&] { return "coassociativity " + at(); });
                    ExtHallElement l, r;
                    for (const auto& [k, c] : d) {
                        if (k.left.A.is_zero()) l.add(k.right, c);
                        if (k.right.A.is_zero()) r.add(k.left, c);
                    }
                    rep.check(l == x && r == x, [&] { return "counit " + at(); });
                    if (total_dim(A) > 2) continue;
                    ExtHallElement eps = ext_K(zero_vec(n)) * counit(x);
                    rep.check(antipode_left_check(s, x) == eps, [&] { return "antipode (left) " + at(); });
                    rep.check(antipode_right_check(s, x) == eps, [&] { return "antipode (right) " + at(); });
                    rep.check(antipode(s, antipode_inverse(s, x)) == x, [&] { return "antipode inverse " + at(); });
                }
            auto small = theta_plus_up_to(n, 1, true);
            for (const auto& A : small)
                for (const auto& B : small) {
                    ExtHallElement x = ext_basis(A, unit_vector(n, 2)), y = ext_basis(B, zero_vec(n));
                    rep.check(comult(s, ext_mul(s, x, y)) == tensor_mul(s, comult(s, x), comult(s, y)),
                              [&] { return "comultiplication is multiplicative " + A.to_string() + " " + B.to_string() + tag; });
                }
        }
    return rep;
}

SuiteReport pairing_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"pairing"};
    for (int n : ns_or(cfg, {2, 3})) {
        DimVector z = zero_vec(n);
        std::vector<ExtHallElement> gens;
        std::vector<std::string> names;
        for (const auto& A : theta_plus_up_to(n, 2, true))
            for (const auto& al : {z, unit_vector(n, 1)}) {
                gens.push_back(ext_basis(A, al));
                names.push_back(A.to_string() + "K" + str(al));
            }
        ExtHallElement one = ext_K(z);
        for (std::size_t a = 0; a < gens.size(); ++a) {
            rep.check(pairing(one, gens[a]) == RationalLaurent(counit(gens[a])) &&
                          pairing(gens[a], one) == RationalLaurent(counit(gens[a])),
                      [&] { return "HP1 " + names[a]; });
        }
        auto deg = [&](std::size_t k) { return total_dim(gens[k].begin()->first.A); };
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = 0; b < gens.size(); ++b)
                for (std::size_t c = 0; c < gens.size(); ++c) {
                    if (deg(b) + deg(c) > 2 || deg(a) > 2) continue;
                    rep.check(pairing(gens[a], ext_mul(Sign::Minus, gens[b], gens[c])) ==
                                  pairing(comult(Sign::Plus, gens[a]), tensor_pure(gens[b], gens[c])),
                              [&] { return "HP2 " + names[a] + " | " + names[b] + " " + names[c]; });
                    rep.check(pairing(ext_mul(Sign::Plus, gens[b], gens[c]), gens[a]) ==
                                  pairing(tensor_pure(gens[b], gens[c]), tensor_flip(comult(Sign::Minus, gens[a]))),
                              [&] { return "HP3 " + names[b] + " " + names[c] + " | " + names[a]; });
                }
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = 0; b < gens.size(); ++b)
                rep.check(pairing(antipode(Sign::Plus, gens[a]), gens[b]) ==
                              pairing(gens[a], antipode_inverse(Sign::Minus, gens[b])),
                          [&] { return "HP4 " + names[a] + " | " + names[b]; });
    }
    return rep;
}

// ---- affine quantum Schur algebras ----

SuiteReport oracle_vs_blm_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"oracle-vs-blm"};
    int jmax = or_default(cfg.max, 2);
    for (int n : ns_or(cfg, {2, 3}))
        for (int r : rs_or(cfg, {2, 3})) {
            int b = or_default(cfg.bandwidth, n);
            auto js = box(n, -jmax, jmax);
            struct Gen {
                std::string name;
                SchurElement x;
                int kind;  // 0: E, 1: F, 2: 0(j0) on the left, 3: 0(j0) on the right
                int h;
                DimVector j0;
            };
            std::vector<Gen> gens;
            for (int h = 1; h <= n; ++h) {
                gens.push_back({"E" + std::to_string(h), xi_E(n, h, r), 0, h, {}});
                gens.push_back({"F" + std::to_string(h), xi_F(n, h, r), 1, h, {}});
                for (int s : {1, -1}) {
                    DimVector j0 = scaled(unit_vector(n, h), s);
                    gens.push_back({"0(" + str(j0) + ")", xi_K(j0, r), 2, h, j0});
                    gens.push_back({"0(" + str(j0) + ")", xi_K(j0, r), 3, h, j0});
                }
            }
            for (const auto& A : offdiag_matrices(n, r, b)) {
                auto lams = compositions(n, r - A.sum());
                for (const auto& g : gens) {
                    // the oracle product with each [A + diag(lambda)], combined linearly over j
                    std::vector<SchurElement> parts;
                    for (const auto& la : lams) {
                        SchurElement t = bracket(A + PeriodicMatrix::diag(la));
                        parts.push_back(g.kind == 3 ? mul_oracle(t, g.x) : mul_oracle(g.x, t));
                    }
                    for (const auto& j : js) {
                        SchurElement oracle;
                        for (std::size_t k = 0; k < lams.size(); ++k) {
                            int e = dot(lams[k], j);
                            for (const auto& [C, c] : parts[k]) oracle.add_scaled(C, c, e);
                        }
                        SchurElement formula;
                        switch (g.kind) {
                            case 0: formula = blm_mul_simple(g.h, 1, A, j, r); break;
                            case 1: formula = blm_mul_simple(g.h, -1, A, j, r); break;
                            case 2: formula = blm_mul_zero(g.j0, A, j, r); break;
                            default: formula = blm_mul_zero_right(A, j, g.j0, r); break;
                        }
                        rep.check(oracle == formula, [&] {
                            std::string side = g.kind == 3 ? "A(j,r)*" + g.name : g.name + "*A(j,r)";
                            return side + " A=" + A.to_string() + " j=" + str(j) + " n=" + std::to_string(n) +
                                   " r=" + std::to_string(r);
                        });
                    }
                }
            }
        }
    return rep;
}

SuiteReport pbw_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"pbw"};
    int b = or_default(cfg.bandwidth, 2);
    for (auto [n, r] : pairs_or(cfg, {{2, 2}, {2, 3}}))
        for (const auto& A : schur_basis(n, r, b))
            rep.check(is_triangular(triangular_p(A), A), [&] { return "not triangular at A=" + A.to_string(); });
    return rep;
}

SuiteReport polyidentity_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"polyidentity"};
    int top = or_default(cfg.max, 2);
    for (int n : ns_or(cfg, {2, 3, 4})) {
        auto vs = box(n, 0, top);
        for (const auto& la : vs)
            for (const auto& mu : vs)
                rep.check(poly_P(la, mu) == poly_Pprime(la, mu),
                          [&] { return "P != P' at lambda=" + str(la) + " mu=" + str(mu); });
    }
    return rep;
}

SuiteReport commutator_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"commutator"};
    for (int n : ns_or(cfg, {2}))
        for (int r : rs_or(cfg, {2, 3})) {
            auto vs = box(n, 0, 1);
            for (const auto& la : vs)
                for (const auto& mu : vs) {
                    auto s = commutator_sides(la, mu, r);
                    rep.check(s.lhs == s.rhs, [&] {
                        return "lambda=" + str(la) + " mu=" + str(mu) + " r=" + std::to_string(r);
                    });
                }
        }
    return rep;
}

SuiteReport presentation_suite_report(const SuiteConfig& cfg) {
    SuiteReport rep{"presentation"};
    for (auto [n, r] : pairs_or(cfg, {{2, 2}, {3, 2}, {2, 3}, {3, 3}}))
        for (const auto& res : presentation_suite(n, r))
            rep.check(res.ok, [&] { return res.name + " fails for n=" + std::to_string(n) + " r=" + std::to_string(r); });
    return rep;
}

SuiteReport rho_suite_report(const SuiteConfig& cfg) {
    SuiteReport rep{"rho-nr"};
    for (int r : rs_or(cfg, {cfg.n ? cfg.n : 2}))
        for (const auto& res : rho_suite(r))
            rep.check(res.ok, [&] { return res.name + " fails for n=r=" + std::to_string(r); });
    return rep;
}

// ---- tensor space ----

SuiteReport tensor_bimodule_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"tensor-bimodule"};
    std::mt19937 rng(cfg.seed);
    using K = LeftGenerator::Kind;
    for (int trial = 0; trial < cfg.samples; ++trial) {
        int n = cfg.n ? cfg.n : 2 + trial % 2;
        int r = cfg.r ? cfg.r : 1 + (trial / 2) % 3;
        std::uniform_int_distribution<int> entry(-n, 2 * n), coeff(-2, 2);
        TensorElement x;
        for (int t = 0; t < 2; ++t) {
            TensorIndex i(static_cast<std::size_t>(r));
            for (auto& s : i) s = entry(rng);
            x.add(i, v(coeff(rng)) * LaurentPoly(t + 1));
        }
        std::vector<LeftGenerator> gens;
        for (int i = 1; i <= n; ++i)
            for (K k : {K::E, K::F, K::K, K::Kinv}) gens.push_back({k, i, {}});
        for (int t = 1; t <= 2; ++t) {
            gens.push_back({K::ZPlus, t, {}});
            gens.push_back({K::ZMinus, t, {}});
        }
        for (int s = 1; s <= 2; ++s)
            for (const auto& a : compositions(n, s)) {
                gens.push_back({K::SemisimplePlus, 1, a});
                gens.push_back({K::SemisimpleMinus, 1, a});
            }
        for (const auto& g : gens) {
            TensorElement gx = act_gen_left(g, n, x);
            auto at = [&](const std::string& right) {
                return "generator kind " + std::to_string(static_cast<int>(g.kind)) + " index " + std::to_string(g.index) +
                       " a=" + str(g.a) + " vs " + right + " on " + tensor_to_string(x);
            };
            for (int k = 1; k < r; ++k)
                rep.check(act_gen_left(g, n, act_Tk(x, n, k)) == act_Tk(gx, n, k), [&] { return at("T_" + std::to_string(k)); });
            for (int t = 1; t <= r; ++t) {
                rep.check(act_gen_left(g, n, act_Xt(x, n, t)) == act_Xt(gx, n, t), [&] { return at("X_" + std::to_string(t)); });
                rep.check(act_gen_left(g, n, act_Xt_inv(x, n, t)) == act_Xt_inv(gx, n, t),
                          [&] { return at("X_" + std::to_string(t) + "^-1"); });
            }
        }
    }
    return rep;
}

// ---- classical case ----

SuiteReport classical_mf_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"classical-mf"};
    int jdeg = or_default(cfg.max, 2);
    for (int n : ns_or(cfg, {2, 3}))
        for (int r = 1; r <= or_default(cfg.r, 4); ++r) {
            int b = or_default(cfg.bandwidth, 2 * n);
            std::vector<ClassicalGenerator> gens;
            for (int h = 1; h <= n; ++h) {
                gens.push_back(gen_diagonal(h));
                gens.push_back(gen_simple(h, 1));
                gens.push_back(gen_simple(h, -1));
                for (int m : {1, -1, 2}) gens.push_back(gen_homogeneous(h, m));
            }
            std::vector<ClassicalElement> images;
            for (const auto& g : gens) images.push_back(generator_image(g, n, r));
            auto js = exponent_vectors(n, jdeg);
            for (const auto& A : offdiag_matrices(n, r, b)) {
                auto lams = compositions(n, r - A.sum());
                for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                    std::vector<ClassicalElement> parts;
                    for (const auto& la : lams)
                        parts.push_back(mul1(images[gi], ClassicalElement(A + PeriodicMatrix::diag(la), 1)));
                    for (const auto& j : js) {
                        ClassicalElement lhs;
                        for (std::size_t k = 0; k < lams.size(); ++k) {
                            mpz_class w = 1;
                            for (std::size_t c = 0; c < lams[k].size(); ++c) {
                                mpz_class f;
                                mpz_pow_ui(f.get_mpz_t(), mpz_class(lams[k][c]).get_mpz_t(), static_cast<unsigned long>(j[c]));
                                w *= f;
                            }
                            lhs += parts[k] * mpq_class(w);
                        }
                        rep.check(lhs == mf(gens[gi], A, j, r), [&] {
                            return gens[gi].to_string() + " * A[j,r] A=" + A.to_string() + " j=" + str(j) +
                                   " r=" + std::to_string(r);
                        });
                    }
                }
            }
            for (const auto& B : schur_basis(n, r, b)) {
                DimVector la = B.ro();
                for (int h = 1; h <= n; ++h) {
                    for (int e : {1, -1})
                        if (la[static_cast<std::size_t>(mod1(h + e, n) - 1)] >= 1)
                            rep.check(sbe1_lhs(h, e, B) == sbe1(h, e, B), [&] {
                                return "sbe1 h=" + std::to_string(h) + " eps=" + std::to_string(e) + " B=" + B.to_string();
                            });
                    if (la[static_cast<std::size_t>(h - 1)] >= 1)
                        for (int m : {1, -1, 2})
                            rep.check(sbe2_lhs(h, m, B) == sbe2(h, m, B), [&] {
                                return "sbe2 h=" + std::to_string(h) + " m=" + std::to_string(m) + " B=" + B.to_string();
                            });
                }
            }
        }
    return rep;
}

SuiteReport classical_realization_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"classical-realization"};
    for (int n : ns_or(cfg, {2, 3})) {
        int b = or_default(cfg.bandwidth, n);
        int smax = n == 2 ? 2 : 1;
        std::vector<ClassicalGenerator> gens;
        for (int h = 1; h <= n; ++h) {
            gens.push_back(gen_diagonal(h));
            gens.push_back(gen_simple(h, 1));
            gens.push_back(gen_simple(h, -1));
            gens.push_back(gen_homogeneous(h, 1));
            gens.push_back(gen_homogeneous(h, -1));
        }
        for (const auto& A : offdiag_matrices(n, smax, b))
            for (const auto& j : exponent_vectors(n, 1))
                for (const auto& g : gens) {
                    int s = A.sum() + sigma(j);
                    RealizationReport rr = realization_check(A, j, g, {s + 1, s + 2, s + 3});
                    rep.check(rr.ok, [&] {
                        std::string msg = g.to_string() + " * A[j] A=" + A.to_string() + " j=" + str(j);
                        for (const auto& o : rr.offending) msg += " " + o;
                        return msg;
                    });
                }
        // the loop algebra bracket on the images
        for (int r = 1; r <= or_default(cfg.r, 3); ++r)
            for (int i = 1; i <= n; ++i)
                for (int j = i - 2 * n; j <= i + 2 * n; ++j)
                    for (int k = 1 - n; k <= 2 * n; ++k)
                        for (int l = k - 2 * n; l <= k + 2 * n; ++l) {
                            auto [lhs, rhs] = eta_bracket_sides(n, i, j, k, l, r);
                            rep.check(lhs == rhs, [&] {
                                std::ostringstream os;
                                os << "[E_{" << i << "," << j << "}, E_{" << k << "," << l << "}] r=" << r;
                                return os.str();
                            });
                        }
        for (int r = 1; r <= 3; ++r) {
            BasisCheck bc = classical_basis_check(n, r, 2, n);
            rep.check(bc.rank == bc.count && bc.count == bc.dimension,
                      [&] { return "A[j,r] basis n=" + std::to_string(n) + " r=" + std::to_string(r); });
        }
    }
    return rep;
}

}  // namespace

// ---- worked examples ----

SuiteReport examples_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"examples"};
    // the finite upper triangular example, placed in a cyclic quiver with an empty vertex
    auto E = [](int i, int j, int a) { return PeriodicMatrix::elementary(6, i, j, a); };
    PeriodicMatrix A = E(1, 2, 1) + E(1, 3, 2) + E(1, 4, 3) + E(1, 5, 4) + E(2, 3, 5) + E(3, 4, 6) + E(4, 5, 7);
    std::string w = word_string(monomial_word(A));
    rep.check(w == "1^9 2^7 3^4 4^11 3^9 2^7 1^1", [&] { return "monomial word " + w; });

    // d_A for A = A^i equals the number of inversions of i
    std::mt19937 rng(cfg.seed);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + trial % 2, r = 2 + trial % 3, N = std::max(n, r);
        std::uniform_int_distribution<int> pick(-n, 2 * n);
        std::vector<int> idx(static_cast<std::size_t>(r));
        for (auto& x : idx) x = pick(rng);
        auto i_of = [&](int s) {
            int s0 = mod1(s, r);
            return idx[static_cast<std::size_t>(s0 - 1)] + (s - s0) / r * n;
        };
        long inv = 0;
        for (int s = 1; s <= r; ++s)
            for (int t = s + 1; t <= s + r * (3 * n + 2); ++t)
                if (i_of(s) >= i_of(t)) ++inv;
        PeriodicMatrix T(N);
        for (int l = 1; l <= r; ++l) {
            int k = i_of(l), k0 = mod1(k, n), a = (k - k0) / n;
            T.add(k0 + a * N, l, 1);
        }
        rep.check(d_A(T) == inv, [&] {
            std::ostringstream os;
            os << "d_i != |Inv(i)| for n=" << n << " i=(";
            for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
            os << ")";
            return os.str();
        });
    }

    // the expression of rho in terms of E_1, E_2 and K when n = r = 2
    for (const auto& res : rho_suite(2))
        if (res.name == "rho formula" || res.name == "rho^-1 formula")
            rep.check(res.ok, [&] { return res.name; });
    return rep;
}

namespace {

const std::map<std::string, SuiteReport (*)(const SuiteConfig&)>& registry() {
    static const std::map<std::string, SuiteReport (*)(const SuiteConfig&)> m{
        {"gauss", gauss_suite},
        {"hall-assoc", hall_assoc_suite},
        {"central", central_suite},
        {"hopf", hopf_suite},
        {"pairing", pairing_suite},
        {"oracle-vs-blm", oracle_vs_blm_suite},
        {"pbw", pbw_suite},
        {"commutator", commutator_suite},
        {"polyidentity", polyidentity_suite},
        {"presentation", presentation_suite_report},
        {"rho-nr", rho_suite_report},
        {"tensor-bimodule", tensor_bimodule_suite},
        {"classical-mf", classical_mf_suite},
        {"classical-realization", classical_realization_suite},
        {"examples", examples_suite},
    };
    return m;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, f] : registry()) out.push_back(name);
    return out;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    auto it = registry().find(name);
    if (it == registry().end()) throw UnknownSuite("unknown suite: " + name);
    return it->second(cfg);
}

}  // namespace affschur
