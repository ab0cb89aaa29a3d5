#include "affschur/hecke.hpp"

#include <sstream>

namespace affschur {

namespace {
const LaurentPoly& q_minus_one() {
    static const LaurentPoly c = LaurentPoly::v(2) - LaurentPoly(1);
    return c;
}
}  // namespace

HeckeElement hecke_basis(const AffinePerm& w) { return HeckeElement(w); }

HeckeElement hecke_one(int r) { return HeckeElement(AffinePerm::identity(r)); }

HeckeElement mul_gen_right(const HeckeElement& x, int k) {
    HeckeElement out;
    for (const auto& [w, c] : x) {
        int r = w.r();
        AffinePerm ws = w * AffinePerm::s(r, k);
        if (w(k) < w(k + 1)) {
            out.add(ws, c);
        } else {
            out.add(w, c * q_minus_one());
            out.add_scaled(ws, c, 2);
        }
    }
    return out;
}

HeckeElement mul_gen_left(int k, const HeckeElement& x) {
    HeckeElement out;
    for (const auto& [w, c] : x) {
        int r = w.r();
        AffinePerm sw = AffinePerm::s(r, k) * w;
        AffinePerm winv = w.inverse();
        if (winv(k) < winv(k + 1)) {
            out.add(sw, c);
        } else {
            out.add(w, c * q_minus_one());
            out.add_scaled(sw, c, 2);
        }
    }
    return out;
}

HeckeElement mul_rho_right(const HeckeElement& x, int a) {
    HeckeElement out;
    for (const auto& [w, c] : x) out.add(w * AffinePerm::rho(w.r(), a), c);
    return out;
}

HeckeElement mul(const HeckeElement& x, const HeckeElement& y) {
    HeckeElement out;
    for (const auto& [u, c] : y) {
        auto [a, word] = reduced_word(u);
        HeckeElement t = mul_rho_right(x, a);
        for (int k : word) t = mul_gen_right(t, k);
        out += t * c;
    }
    return out;
}

HeckeElement hecke_inverse(const AffinePerm& w) {
    // T_s^{-1} = v^{-2} T_s - (1 - v^{-2}), and T_w^{-1} = T_{s_m}^{-1} ... T_{s_1}^{-1} T_rho^{-a}.
    int r = w.r();
    auto [a, word] = reduced_word(w);
    HeckeElement out = hecke_one(r);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        HeckeElement t = mul_gen_right(out, *it) * LaurentPoly::v(-2);
        out = t - out * (LaurentPoly(1) - LaurentPoly::v(-2));
    }
    return mul_rho_right(out, -a);
}

HeckeElement x_lambda(const Composition& lambda) {
    HeckeElement out;
    for (const auto& w : young_subgroup(lambda)) out.add(w, LaurentPoly(1));
    return out;
}

HeckeElement double_coset_sum(const Composition& lambda, const AffinePerm& d, const Composition& mu) {
    HeckeElement out;
    for (const auto& w : double_coset_elements(lambda, d, mu)) out.add(w, LaurentPoly(1));
    return out;
}

HeckeElement specialize_v1(const HeckeElement& x) {
    HeckeElement out;
    for (const auto& [w, c] : x) out.add(w, LaurentPoly(mpz_class(c.specialize_v1())));
    return out;
}

HeckeElement group_mul(const HeckeElement& x, const HeckeElement& y) {
    HeckeElement out;
    for (const auto& [u, c] : x)
        for (const auto& [w, d] : y) out.add(u * w, c * d);
    return out;
}

std::string hecke_to_string(const HeckeElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x.sorted()) {
        os << (first ? "" : " + ") << '(' << c.to_string() << ")*T" << w.to_string();
        first = false;
    }
    return os.str();
}

}  // namespace affschur
