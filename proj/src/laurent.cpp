#include "affschur/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace affschur {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace_back(0, mpz_class(c));
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(exp, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : out)
        if (t.second != 0) terms_.push_back(std::move(t));
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

mpz_class LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.back().first;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, int k, const mpz_class& c) {
    if (o.terms_.empty() || c == 0) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first + k)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == terms_.end() || b->first + k < a->first) {
            out.emplace_back(b->first + k, b->second * c);
            ++b;
        } else {
            mpz_class s = a->second + b->second * c;
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    add_scaled(o, 0, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    add_scaled(o, 0, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (a.terms_.size() == 1) {
        LaurentPoly r = b.shifted(a.terms_[0].first);
        if (a.terms_[0].second != 1)
            for (auto& t : r.terms_) t.second *= a.terms_[0].second;
        return r;
    }
    if (b.terms_.size() == 1) return b * a;
    int lo = a.min_exp() + b.min_exp();
    int hi = a.max_exp() + b.max_exp();
    std::vector<mpz_class> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            dense[static_cast<std::size_t>(x.first + y.first - lo)] += x.second * y.second;
    LaurentPoly r;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) r.terms_.emplace_back(static_cast<int>(i) + lo, std::move(dense[i]));
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
    std::vector<Term> t;
    for (const auto& x : terms_) t.emplace_back(x.first * k, x.second);
    return from_terms(std::move(t));
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
    if (x == 0) throw std::domain_error("evaluation of a Laurent polynomial at 0");
    mpq_class s = 0;
    for (const auto& t : terms_) {
        mpq_class p = 1;
        mpq_class base = t.first >= 0 ? x : mpq_class(1) / x;
        for (int i = 0; i < std::abs(t.first); ++i) p *= base;
        s += p * t.second;
    }
    return s;
}

mpq_class LaurentPoly::specialize_v1() const {
    mpz_class s = 0;
    for (const auto& t : terms_) s += t.second;
    return mpq_class(s);
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class c = t.second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        if (t.first == 0)
            os << c.get_str();
        else
            os << c.get_str() << "*v^" << t.first;
    }
    return os.str();
}

namespace {

// Parses terms of the form c, c*v^k, v^k, -v, c*v in a +/- separated list.
struct TermParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    std::string digits() {
        skip();
        std::size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(st, pos - st);
    }
    long signed_int() {
        skip();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        std::string d = digits();
        if (d.empty()) throw std::invalid_argument("expected integer in '" + s + "'");
        long x = std::stol(d);
        return neg ? -x : x;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s) {
    TermParser p{s};
    std::vector<Term> out;
    p.skip();
    if (p.pos >= s.size()) throw std::invalid_argument("empty Laurent polynomial");
    bool first = true;
    while (true) {
        p.skip();
        if (p.pos >= s.size()) break;
        int sign = 1;
        if (s[p.pos] == '+' || s[p.pos] == '-') {
            sign = s[p.pos] == '-' ? -1 : 1;
            ++p.pos;
        } else if (!first) {
            throw std::invalid_argument("expected + or - in '" + s + "'");
        }
        first = false;
        std::string d = p.digits();
        mpz_class c = d.empty() ? mpz_class(1) : mpz_class(d);
        int e = 0;
        if (!d.empty() && p.peek('*')) ++p.pos;
        if (p.peek('v')) {
            ++p.pos;
            e = 1;
            if (p.peek('^')) {
                ++p.pos;
                bool paren = p.peek('(');
                if (paren) ++p.pos;
                e = static_cast<int>(p.signed_int());
                if (paren) {
                    if (!p.peek(')')) throw std::invalid_argument("unbalanced parenthesis in '" + s + "'");
                    ++p.pos;
                }
            }
        } else if (d.empty()) {
            throw std::invalid_argument("bad term in '" + s + "'");
        }
        out.emplace_back(e, sign * c);
    }
    return from_terms(std::move(out));
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& t : terms_) {
        h ^= std::hash<int>()(t.first) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<long>()(mpz_get_si(t.second.get_mpz_t())) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

LaurentPoly pow(const LaurentPoly& p, unsigned e) {
    LaurentPoly r(1);
    LaurentPoly b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

bool try_exact_div(const LaurentPoly& p, const LaurentPoly& q, LaurentPoly& out) {
    if (q.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (p.is_zero()) {
        out = LaurentPoly();
        return true;
    }
    if (q.is_monomial()) {
        const auto& qt = q.terms()[0];
        std::vector<LaurentPoly::Term> t;
        for (const auto& x : p.terms()) {
            if (!mpz_divisible_p(x.second.get_mpz_t(), qt.second.get_mpz_t())) return false;
            t.emplace_back(x.first - qt.first, x.second / qt.second);
        }
        out = LaurentPoly::from_terms(std::move(t));
        return true;
    }
    // Dense long division of ordinary polynomials after shifting both to start at exponent 0.
    int pmin = p.min_exp(), qmin = q.min_exp();
    int pdeg = p.max_exp() - pmin, qdeg = q.max_exp() - qmin;
    if (pdeg < qdeg) return false;
    std::vector<mpz_class> r(static_cast<std::size_t>(pdeg + 1));
    for (const auto& t : p.terms()) r[static_cast<std::size_t>(t.first - pmin)] = t.second;
    std::vector<mpz_class> qq(static_cast<std::size_t>(qdeg + 1));
    for (const auto& t : q.terms()) qq[static_cast<std::size_t>(t.first - qmin)] = t.second;
    const mpz_class& lead = qq[static_cast<std::size_t>(qdeg)];
    std::vector<mpz_class> h(static_cast<std::size_t>(pdeg - qdeg + 1));
    for (int k = pdeg - qdeg; k >= 0; --k) {
        mpz_class& top = r[static_cast<std::size_t>(k + qdeg)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_class c = top / lead;
        h[static_cast<std::size_t>(k)] = c;
        for (int i = 0; i <= qdeg; ++i) r[static_cast<std::size_t>(k + i)] -= c * qq[static_cast<std::size_t>(i)];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    std::vector<LaurentPoly::Term> t;
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] != 0) t.emplace_back(static_cast<int>(i) + pmin - qmin, h[i]);
    out = LaurentPoly::from_terms(std::move(t));
    return true;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out;
    if (!try_exact_div(p, q, out))
        throw NotDivisible("(" + p.to_string() + ") is not divisible by (" + q.to_string() + ")");
    return out;
}

LaurentPoly qint_sym(int m) {
    if (m == 0) return {};
    if (m < 0) return -qint_sym(-m);
    std::vector<LaurentPoly::Term> t;
    for (int k = -(m - 1); k <= m - 1; k += 2) t.emplace_back(k, 1);
    return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly qint_q(int m) {
    if (m < 0) throw std::invalid_argument("qint_q requires m >= 0");
    std::vector<LaurentPoly::Term> t;
    for (int k = 0; k < m; ++k) t.emplace_back(2 * k, 1);
    return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly bar_qint_q(int m) { return qint_q(m).bar(); }

LaurentPoly qfact_q(int m) {
    LaurentPoly r(1);
    for (int k = 1; k <= m; ++k) r *= qint_q(k);
    return r;
}

LaurentPoly qfact_sym(int m) {
    LaurentPoly r(1);
    for (int k = 1; k <= m; ++k) r *= qint_sym(k);
    return r;
}

LaurentPoly gauss_sym(int N, int t) {
    if (t < 0) throw std::invalid_argument("gauss_sym requires t >= 0");
    LaurentPoly num(1), den(1);
    for (int i = 1; i <= t; ++i) {
        int a = N - i + 1;
        num *= LaurentPoly::v(a) - LaurentPoly::v(-a);
        den *= LaurentPoly::v(i) - LaurentPoly::v(-i);
    }
    return exact_div(num, den);
}

LaurentPoly gauss_q(int N, int t) { return gauss_sym(N, t).shifted(t * (N - t)); }

RationalLaurent::RationalLaurent(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    simplify();
}

void RationalLaurent::simplify() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly q;
    if (!den_.is_one() && try_exact_div(num_, den_, q)) {
        num_ = std::move(q);
        den_ = LaurentPoly(1);
    }
}

RationalLaurent& RationalLaurent::operator+=(const RationalLaurent& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    simplify();
    return *this;
}

RationalLaurent& RationalLaurent::operator-=(const RationalLaurent& o) {
    RationalLaurent neg(-o.num_, o.den_);
    return *this += neg;
}

RationalLaurent& RationalLaurent::operator*=(const RationalLaurent& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    simplify();
    return *this;
}

RationalLaurent& RationalLaurent::operator/=(const RationalLaurent& o) {
    if (o.num_.is_zero()) throw std::domain_error("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    simplify();
    return *this;
}

bool operator==(const RationalLaurent& a, const RationalLaurent& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

LaurentPoly RationalLaurent::to_laurent() const { return exact_div(num_, den_); }

std::string RationalLaurent::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace affschur
