#include "affschur/quiver_rep.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace affschur {

// ---- dimension vectors ----

DimVector unit_vector(int n, int i) {
    DimVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(mod1(i, n) - 1)] = 1;
    return e;
}

DimVector delta_vector(int n) { return DimVector(static_cast<std::size_t>(n), 1); }

int sigma(const DimVector& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw DimMismatch("dimension vectors of different length");
    DimVector c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
    return c;
}

DimVector operator-(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw DimMismatch("dimension vectors of different length");
    DimVector c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
    return c;
}

DimVector scaled(const DimVector& a, int c) {
    DimVector r = a;
    for (int& x : r) x *= c;
    return r;
}

int dot(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw DimMismatch("dimension vectors of different length");
    int s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

bool leq(const DimVector& a, const DimVector& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

std::string to_string(const DimVector& a) {
    std::string s = "(";
    for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
    return s + ")";
}

// ---- periodic matrices ----

PeriodicMatrix::PeriodicMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
}

PeriodicMatrix PeriodicMatrix::from_entries(int n, const std::vector<Entry>& entries) {
    PeriodicMatrix m(n);
    for (const auto& e : entries) m.add(e.i, e.j, e.a);
    return m;
}

PeriodicMatrix PeriodicMatrix::diag(const DimVector& lambda) {
    PeriodicMatrix m(static_cast<int>(lambda.size()));
    for (std::size_t k = 0; k < lambda.size(); ++k) m.add(static_cast<int>(k) + 1, static_cast<int>(k) + 1, lambda[k]);
    return m;
}

PeriodicMatrix PeriodicMatrix::elementary(int n, int i, int j, int a) {
    PeriodicMatrix m(n);
    m.add(i, j, a);
    return m;
}

int PeriodicMatrix::at(int i, int j) const {
    int i0 = mod1(i, n_);
    int j0 = j - (i - i0);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{i0, j0},
                               [](const Entry& e, const std::pair<int, int>& k) {
                                   return e.i != k.first ? e.i < k.first : e.j < k.second;
                               });
    if (it != entries_.end() && it->i == i0 && it->j == j0) return it->a;
    return 0;
}

void PeriodicMatrix::add(int i, int j, int a) {
    if (a == 0) return;
    int i0 = mod1(i, n_);
    int j0 = j - (i - i0);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{i0, j0},
                               [](const Entry& e, const std::pair<int, int>& k) {
                                   return e.i != k.first ? e.i < k.first : e.j < k.second;
                               });
    if (it != entries_.end() && it->i == i0 && it->j == j0) {
        it->a += a;
        if (it->a == 0) entries_.erase(it);
    } else {
        entries_.insert(it, Entry{i0, j0, a});
    }
}

DimVector PeriodicMatrix::ro() const {
    DimVector r(static_cast<std::size_t>(n_), 0);
    for (const auto& e : entries_) r[static_cast<std::size_t>(e.i - 1)] += e.a;
    return r;
}

DimVector PeriodicMatrix::co() const {
    DimVector c(static_cast<std::size_t>(n_), 0);
    for (const auto& e : entries_) c[static_cast<std::size_t>(mod1(e.j, n_) - 1)] += e.a;
    return c;
}

int PeriodicMatrix::sum() const {
    int s = 0;
    for (const auto& e : entries_) s += e.a;
    return s;
}

int PeriodicMatrix::bandwidth() const {
    int b = 0;
    for (const auto& e : entries_) b = std::max(b, std::abs(e.j - e.i));
    return b;
}

bool PeriodicMatrix::nonneg() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.a >= 0; });
}

bool PeriodicMatrix::is_upper() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.j > e.i; });
}

bool PeriodicMatrix::is_lower() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.j < e.i; });
}

bool PeriodicMatrix::is_offdiag() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.j != e.i; });
}

bool PeriodicMatrix::is_diagonal() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.j == e.i; });
}

PeriodicMatrix PeriodicMatrix::transpose() const {
    PeriodicMatrix m(n_);
    for (const auto& e : entries_) m.add(e.j, e.i, e.a);
    return m;
}

PeriodicMatrix PeriodicMatrix::upper() const {
    PeriodicMatrix m(n_);
    for (const auto& e : entries_)
        if (e.j > e.i) m.entries_.push_back(e);
    return m;
}

PeriodicMatrix PeriodicMatrix::lower() const {
    PeriodicMatrix m(n_);
    for (const auto& e : entries_)
        if (e.j < e.i) m.entries_.push_back(e);
    return m;
}

PeriodicMatrix PeriodicMatrix::offdiag() const {
    PeriodicMatrix m(n_);
    for (const auto& e : entries_)
        if (e.j != e.i) m.entries_.push_back(e);
    return m;
}

DimVector PeriodicMatrix::diagonal() const {
    DimVector d(static_cast<std::size_t>(n_), 0);
    for (const auto& e : entries_)
        if (e.j == e.i) d[static_cast<std::size_t>(e.i - 1)] = e.a;
    return d;
}

PeriodicMatrix PeriodicMatrix::operator+(const PeriodicMatrix& o) const {
    if (o.n_ != n_) throw DimMismatch("matrices with different n");
    PeriodicMatrix m = *this;
    for (const auto& e : o.entries_) m.add(e.i, e.j, e.a);
    return m;
}

PeriodicMatrix PeriodicMatrix::operator-(const PeriodicMatrix& o) const { return *this + o.scaled(-1); }

PeriodicMatrix PeriodicMatrix::scaled(int c) const {
    PeriodicMatrix m(n_);
    if (c == 0) return m;
    m.entries_ = entries_;
    for (auto& e : m.entries_) e.a *= c;
    return m;
}

bool operator<(const PeriodicMatrix& a, const PeriodicMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                                        [](const PeriodicMatrix::Entry& x, const PeriodicMatrix::Entry& y) {
                                            if (x.i != y.i) return x.i < y.i;
                                            if (x.j != y.j) return x.j < y.j;
                                            return x.a < y.a;
                                        });
}

std::size_t PeriodicMatrix::hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
    for (const auto& e : entries_) {
        std::size_t k = (static_cast<std::size_t>(e.i) * 1000003u) ^ (static_cast<std::size_t>(e.j + 4096) * 8191u) ^
                        (static_cast<std::size_t>(e.a) << 40);
        h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::string PeriodicMatrix::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) os << ",";
        first = false;
        os << "(" << e.i << "," << e.j << "):" << e.a;
    }
    os << "}";
    return os.str();
}

PeriodicMatrix PeriodicMatrix::parse(int n, const std::string& s) {
    PeriodicMatrix m(n);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= s.size() || s[pos] != c)
            throw std::invalid_argument(std::string("expected '") + c + "' in matrix '" + s + "'");
        ++pos;
    };
    auto integer = [&] {
        skip();
        std::size_t st = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos || (pos == st + 1 && !std::isdigit(static_cast<unsigned char>(s[st]))))
            throw std::invalid_argument("expected integer in matrix '" + s + "'");
        return std::stoi(s.substr(st, pos - st));
    };
    expect('{');
    skip();
    if (pos < s.size() && s[pos] == '}') return m;
    while (true) {
        expect('(');
        int i = integer();
        expect(',');
        int j = integer();
        expect(')');
        expect(':');
        int a = integer();
        m.add(i, j, a);
        skip();
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        expect('}');
        break;
    }
    return m;
}

// ---- representations ----

namespace {

void require_upper(const PeriodicMatrix& A) {
    if (!A.is_upper() || !A.nonneg()) throw WrongShape("expected a matrix in Theta^+ : " + A.to_string());
}

}  // namespace

std::vector<Segment> segments(const PeriodicMatrix& A) {
    require_upper(A);
    std::vector<Segment> s;
    for (const auto& e : A.entries())
        for (int k = 0; k < e.a; ++k) s.push_back({e.i, e.j - e.i});
    return s;
}

PeriodicMatrix from_segments(int n, const std::vector<Segment>& segs) {
    PeriodicMatrix m(n);
    for (const auto& s : segs) {
        if (s.l < 1) throw WrongShape("segment length must be positive");
        m.add(s.i, s.i + s.l, 1);
    }
    return m;
}

PeriodicMatrix semisimple(const DimVector& lambda) {
    int n = static_cast<int>(lambda.size());
    PeriodicMatrix m(n);
    for (int i = 1; i <= n; ++i) m.add(i, i + 1, lambda[static_cast<std::size_t>(i - 1)]);
    return m;
}

DimVector dim_vector(const PeriodicMatrix& A) {
    require_upper(A);
    int n = A.n();
    DimVector d(static_cast<std::size_t>(n), 0);
    for (const auto& e : A.entries())
        for (int k = e.i; k < e.j; ++k) d[static_cast<std::size_t>(mod1(k, n) - 1)] += e.a;
    return d;
}

int total_dim(const PeriodicMatrix& A) {
    require_upper(A);
    int s = 0;
    for (const auto& e : A.entries()) s += e.a * (e.j - e.i);
    return s;
}

int euler_form(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw DimMismatch("dimension vectors of different length");
    std::size_t n = a.size();
    int s = 0;
    for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k] - a[k] * b[(k + 1) % n];
    return s;
}

int sym_euler(const DimVector& a, const DimVector& b) { return euler_form(a, b) + euler_form(b, a); }

int hom_dim_indec(int n, int i, int l, int j, int m) {
    // A map S_i[l] -> S_j[m] is determined by the image of the top generator, which must lie
    // in the submodule of S_j[m] killed by l arrows and sit at vertex i. Counting these
    // positions gives #{k in [1, min(l,m)] : k = j + m - i mod n}.
    int target = ((j + m - i) % n + n) % n;
    int c = 0;
    for (int k = 1; k <= std::min(l, m); ++k)
        if (k % n == target) ++c;
    return c;
}

int hom_dim(const PeriodicMatrix& A, const PeriodicMatrix& B) {
    require_upper(A);
    require_upper(B);
    if (A.n() != B.n()) throw DimMismatch("matrices with different n");
    int s = 0;
    for (const auto& x : A.entries())
        for (const auto& y : B.entries()) s += x.a * y.a * hom_dim_indec(A.n(), x.i, x.j - x.i, y.i, y.j - y.i);
    return s;
}

int end_dim(const PeriodicMatrix& A) { return hom_dim(A, A); }

int ext_dim(const PeriodicMatrix& A, const PeriodicMatrix& B) {
    int e = hom_dim(A, B) - euler_form(dim_vector(A), dim_vector(B));
    if (e < 0) throw InternalInconsistency("negative Ext dimension");
    return e;
}

LaurentPoly aut_poly(const PeriodicMatrix& A) {
    require_upper(A);
    int sq = 0;
    LaurentPoly p(1);
    for (const auto& e : A.entries()) {
        sq += e.a * e.a;
        for (int s = 0; s < e.a; ++s) p *= LaurentPoly::v(2 * e.a) - LaurentPoly::v(2 * s);
    }
    return p.shifted(2 * (end_dim(A) - sq));
}

DimVector socle(const PeriodicMatrix& A) {
    require_upper(A);
    DimVector s(static_cast<std::size_t>(A.n()), 0);
    for (const auto& e : A.entries()) s[static_cast<std::size_t>(mod1(e.j - 1, A.n()) - 1)] += e.a;
    return s;
}

bool is_socle_squarefree(const PeriodicMatrix& A) {
    for (int x : socle(A))
        if (x > 1) return false;
    return true;
}

PeriodicMatrix ar_translate(const PeriodicMatrix& A) {
    require_upper(A);
    PeriodicMatrix m(A.n());
    for (const auto& e : A.entries()) m.add(e.i + 1, e.j + 1, e.a);
    return m;
}

long sigma_ij(const PeriodicMatrix& A, int i, int j) {
    if (i == j) throw std::invalid_argument("sigma_ij requires i != j");
    int n = A.n();
    long s = 0;
    for (const auto& e : A.entries()) {
        int lo, hi;
        if (i < j) {
            // Copies (e.i + cn, e.j + cn) with row <= i and column >= j.
            lo = ceildiv(j - e.j, n);
            hi = floordiv(i - e.i, n);
        } else {
            lo = ceildiv(i - e.i, n);
            hi = floordiv(j - e.j, n);
        }
        if (hi >= lo) s += static_cast<long>(e.a) * (hi - lo + 1);
    }
    return s;
}

namespace {

// Compares sigma_{i,j} over one period of i; beyond the bandwidth both sides vanish.
int compare_sigma(const PeriodicMatrix& B, const PeriodicMatrix& A, bool& strict) {
    if (A.n() != B.n()) throw DimMismatch("matrices with different n");
    int n = A.n();
    int w = std::max(A.bandwidth(), B.bandwidth());
    strict = false;
    for (int i = 1; i <= n; ++i)
        for (int j = i - w; j <= i + w; ++j) {
            if (j == i) continue;
            long b = sigma_ij(B, i, j), a = sigma_ij(A, i, j);
            if (b > a) return 1;
            if (b < a) strict = true;
        }
    return 0;
}

}  // namespace

bool preceq(const PeriodicMatrix& B, const PeriodicMatrix& A) {
    bool strict;
    return compare_sigma(B, A, strict) == 0;
}

bool prec(const PeriodicMatrix& B, const PeriodicMatrix& A) {
    bool strict;
    return compare_sigma(B, A, strict) == 0 && strict;
}

bool deg_leq(const PeriodicMatrix& B, const PeriodicMatrix& A) {
    if (dim_vector(A) != dim_vector(B)) throw DimMismatch("deg_leq requires equal dimension vectors");
    int n = A.n();
    int d = total_dim(A);
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= d; ++l) {
            PeriodicMatrix X = PeriodicMatrix::elementary(n, i, i + l);
            if (hom_dim(X, B) < hom_dim(X, A)) return false;
        }
    return true;
}

bool is_aperiodic(const PeriodicMatrix& A) {
    require_upper(A);
    int n = A.n();
    int w = A.bandwidth();
    for (int l = 1; l <= w; ++l) {
        bool some_zero = false;
        for (int i = 1; i <= n; ++i)
            if (A.at(i, i + l) == 0) some_zero = true;
        if (!some_zero) return false;
    }
    return true;
}

std::string multisegment_string(const PeriodicMatrix& A) {
    require_upper(A);
    if (A.is_zero()) return "0";
    std::string s;
    for (const auto& e : A.entries()) {
        std::string seg = "[" + std::to_string(e.i) + ";" + std::to_string(e.j - e.i) + ")";
        if (!s.empty()) s += "+";
        s += e.a == 1 ? seg : std::to_string(e.a) + seg;
    }
    return s;
}

PeriodicMatrix parse_multisegment(int n, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    PeriodicMatrix m(n);
    if (s == "0") return m;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        int mult = pos > st ? std::stoi(s.substr(st, pos - st)) : 1;
        if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("bad multisegment '" + text + "'");
        std::size_t semi = s.find(';', pos), close = s.find(')', pos);
        if (semi == std::string::npos || close == std::string::npos || semi > close)
            throw std::invalid_argument("bad multisegment '" + text + "'");
        int i = std::stoi(s.substr(pos + 1, semi - pos - 1));
        int l = std::stoi(s.substr(semi + 1, close - semi - 1));
        if (l < 1 || i < 1 || i > n) throw std::invalid_argument("bad segment in '" + text + "'");
        m.add(i, i + l, mult);
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != '+') throw std::invalid_argument("bad multisegment '" + text + "'");
            ++pos;
        }
    }
    return m;
}

namespace {

void enum_dim(int n, const std::vector<Segment>& segs, std::size_t k, DimVector& rest, PeriodicMatrix& cur,
              std::vector<PeriodicMatrix>& out) {
    if (sigma(rest) == 0) {
        out.push_back(cur);
        return;
    }
    if (k == segs.size()) return;
    const Segment& s = segs[k];
    // A segment may wrap around and meet a vertex several times.
    DimVector need(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < s.l; ++t) need[static_cast<std::size_t>(mod1(s.i + t, n) - 1)]++;
    int mult = 0;
    while (true) {
        enum_dim(n, segs, k + 1, rest, cur, out);
        if (!leq(need, rest)) break;
        rest = rest - need;
        cur.add(s.i, s.i + s.l, 1);
        ++mult;
    }
    rest = rest + scaled(need, mult);
    if (mult > 0) cur.add(s.i, s.i + s.l, -mult);
}

}  // namespace

std::vector<PeriodicMatrix> theta_plus_with_dim(const DimVector& d) {
    int n = static_cast<int>(d.size());
    int total = sigma(d);
    std::vector<Segment> segs;
    for (int l = total; l >= 1; --l)
        for (int i = 1; i <= n; ++i) segs.push_back({i, l});
    std::vector<PeriodicMatrix> out;
    DimVector rest = d;
    PeriodicMatrix cur(n);
    enum_dim(n, segs, 0, rest, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PeriodicMatrix> theta_plus_up_to(int n, int max_dim, bool include_zero) {
    std::vector<PeriodicMatrix> out;
    if (include_zero) out.emplace_back(n);
    // Enumerate dimension vectors by total size.
    for (int t = 1; t <= max_dim; ++t) {
        DimVector d(static_cast<std::size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int k, int left) {
            if (k == n - 1) {
                d[static_cast<std::size_t>(k)] = left;
                auto v = theta_plus_with_dim(d);
                out.insert(out.end(), v.begin(), v.end());
                return;
            }
            for (int x = 0; x <= left; ++x) {
                d[static_cast<std::size_t>(k)] = x;
                rec(k + 1, left - x);
            }
        };
        rec(0, t);
    }
    return out;
}

}  // namespace affschur
