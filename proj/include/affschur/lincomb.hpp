#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affschur/laurent.hpp"

namespace affschur {

// Finite Z[v, v^-1]-linear combination of basis keys, without zero coefficients.
template <class Key, class Hash = std::hash<Key>>
class LinComb {
public:
    using Map = std::unordered_map<Key, LaurentPoly, Hash>;

    LinComb() = default;
    explicit LinComb(const Key& k, LaurentPoly c = LaurentPoly(1)) { add(k, c); }

    void add(const Key& k, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    // this += c * v^shift * (basis element k)
    void add_scaled(const Key& k, const LaurentPoly& c, int shift, const mpz_class& m = 1) {
        if (c.is_zero() || m == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            LaurentPoly x = c.shifted(shift);
            if (m != 1) x *= m;
            terms_.emplace(k, std::move(x));
        } else {
            it->second.add_scaled(c, shift, m);
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinComb& operator*=(const LaurentPoly& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const LaurentPoly& s) { return a *= s; }
    friend LinComb operator*(const LaurentPoly& s, LinComb a) { return a *= s; }
    LinComb operator-() const {
        LinComb r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    // Terms sorted by key, for deterministic output.
    std::vector<std::pair<Key, LaurentPoly>> sorted() const {
        std::vector<std::pair<Key, LaurentPoly>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    // Applies a linear map given on basis elements.
    template <class Key2, class Hash2 = std::hash<Key2>, class F>
    LinComb<Key2, Hash2> map_linear(F&& f) const {
        LinComb<Key2, Hash2> out;
        for (const auto& [k, c] : terms_) {
            LinComb<Key2, Hash2> img = f(k);
            for (const auto& [k2, c2] : img) out.add(k2, c * c2);
        }
        return out;
    }

private:
    Map terms_;
};

inline void hash_combine(std::size_t& seed, std::size_t h) {
    seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) hash_combine(h, std::hash<int>()(x));
        return h;
    }
};

}  // namespace affschur
