#include "affschur/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "affschur/lincomb.hpp"

namespace affschur {

AffinePerm::AffinePerm(std::vector<int> window) : w_(std::move(window)) {
    int r = this->r();
    if (r == 0) throw std::invalid_argument("empty window");
    std::vector<bool> hit(static_cast<std::size_t>(r), false);
    for (int x : w_) {
        int res = mod1(x, r) - 1;
        if (hit[static_cast<std::size_t>(res)]) throw std::invalid_argument("window residues are not a permutation");
        hit[static_cast<std::size_t>(res)] = true;
    }
}

AffinePerm AffinePerm::identity(int r) {
    std::vector<int> w(static_cast<std::size_t>(r));
    std::iota(w.begin(), w.end(), 1);
    return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::rho(int r, int k) {
    std::vector<int> w(static_cast<std::size_t>(r));
    std::iota(w.begin(), w.end(), 1 + k);
    return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::s(int r, int i) {
    i = mod1(i, r);
    std::vector<int> w(static_cast<std::size_t>(r));
    std::iota(w.begin(), w.end(), 1);
    if (r == 1) return AffinePerm(std::move(w));
    if (i < r) {
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    } else {
        // s_r swaps r and r+1, hence 1 and 0
        w[0] = 0;
        w[static_cast<std::size_t>(r - 1)] = r + 1;
    }
    return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::epsilon(int r, int k) {
    auto w = identity(r).w_;
    w[static_cast<std::size_t>(k - 1)] += r;
    return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::from_finite(const std::vector<int>& perm) { return AffinePerm(perm); }

int AffinePerm::operator()(int i) const {
    int r = this->r();
    int k = floordiv(i - 1, r);
    return w_[static_cast<std::size_t>(i - 1 - k * r)] + k * r;
}

int AffinePerm::rho_power() const {
    long s = 0;
    for (int i = 0; i < r(); ++i) s += w_[static_cast<std::size_t>(i)] - (i + 1);
    return static_cast<int>(s / r());
}

bool AffinePerm::is_identity() const {
    for (int i = 0; i < r(); ++i)
        if (w_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

AffinePerm AffinePerm::operator*(const AffinePerm& o) const {
    if (r() != o.r()) throw DimMismatch("affine permutations of different rank");
    std::vector<int> w(static_cast<std::size_t>(r()));
    for (int i = 1; i <= r(); ++i) w[static_cast<std::size_t>(i - 1)] = (*this)(o(i));
    AffinePerm p;
    p.w_ = std::move(w);
    return p;
}

AffinePerm AffinePerm::inverse() const {
    int r = this->r();
    std::vector<int> w(static_cast<std::size_t>(r));
    for (int j = 1; j <= r; ++j) {
        int m = w_[static_cast<std::size_t>(j - 1)];
        int k = floordiv(m - 1, r);
        w[static_cast<std::size_t>(m - k * r - 1)] = j - k * r;
    }
    AffinePerm p;
    p.w_ = std::move(w);
    return p;
}

std::size_t AffinePerm::hash() const { return VecHash()(w_); }

std::string AffinePerm::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? "," : "") << w_[i];
    os << ']';
    return os.str();
}

AffinePerm AffinePerm::parse(const std::string& s) {
    std::vector<int> w;
    std::string cur;
    for (char c : s) {
        if (c == '[' || c == ' ') continue;
        if (c == ',' || c == ']') {
            if (!cur.empty()) w.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) w.push_back(std::stoi(cur));
    return AffinePerm(std::move(w));
}

int length(const AffinePerm& w) {
    int r = w.r(), count = 0;
    for (int s = 1; s <= r; ++s) {
        int ws = w(s);
        // w(t) grows by r per period, so only finitely many t > s can satisfy w(t) < w(s)
        int lo = w.window()[0];
        for (int x : w.window()) lo = std::min(lo, x);
        for (int t = s + 1;; ++t) {
            int k = floordiv(t - 1, r);
            if (lo + k * r > ws) break;
            if (w(t) < ws) ++count;
        }
    }
    return count;
}

int length_formula(const AffinePerm& w) {
    int r = w.r(), s = 0;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) s += std::abs(floordiv(w(j) - w(i), r));
    return s;
}

namespace {
std::mutex g_word_mutex;
std::map<AffinePerm, std::pair<int, std::vector<int>>> g_words;
}  // namespace

std::pair<int, std::vector<int>> reduced_word(const AffinePerm& w0) {
    {
        std::lock_guard<std::mutex> lock(g_word_mutex);
        auto it = g_words.find(w0);
        if (it != g_words.end()) return it->second;
    }
    int r = w0.r();
    AffinePerm w = w0;
    std::vector<int> rev;
    for (bool found = true; found;) {
        found = false;
        for (int k = 1; k <= r; ++k)
            if (w(k) > w(k + 1)) {
                w = w * AffinePerm::s(r, k);
                rev.push_back(k);
                found = true;
                break;
            }
    }
    std::pair<int, std::vector<int>> out{w.rho_power(), std::vector<int>(rev.rbegin(), rev.rend())};
    std::lock_guard<std::mutex> lock(g_word_mutex);
    g_words.emplace(w0, out);
    return out;
}

// ---- compositions ----

std::vector<Composition> compositions(int n, int r) {
    std::vector<Composition> out;
    Composition c(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            c[static_cast<std::size_t>(i)] = left;
            out.push_back(c);
            return;
        }
        for (int a = left; a >= 0; --a) {
            c[static_cast<std::size_t>(i)] = a;
            rec(i + 1, left - a);
        }
    };
    if (n > 0) rec(0, r);
    return out;
}

std::string composition_string(const Composition& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

int block_of(const Composition& lambda, int s) {
    int n = static_cast<int>(lambda.size());
    int r = std::accumulate(lambda.begin(), lambda.end(), 0);
    int k = floordiv(s - 1, r);
    int t = s - k * r, acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += lambda[static_cast<std::size_t>(i)];
        if (t <= acc) return i + 1 + k * n;
    }
    throw InternalInconsistency("position outside all blocks");
}

std::pair<int, int> block_range(const Composition& lambda, int k) {
    int n = static_cast<int>(lambda.size());
    int r = std::accumulate(lambda.begin(), lambda.end(), 0);
    int m = floordiv(k - 1, n), i = k - m * n;
    int start = m * r;
    for (int t = 0; t < i - 1; ++t) start += lambda[static_cast<std::size_t>(t)];
    return {start + 1, start + lambda[static_cast<std::size_t>(i - 1)]};
}

std::vector<AffinePerm> young_subgroup(const Composition& lambda) {
    int r = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::vector<std::vector<int>> out{AffinePerm::identity(r).window()};
    int start = 0;
    for (int len : lambda) {
        std::vector<std::vector<int>> next;
        std::vector<int> block(static_cast<std::size_t>(len));
        std::iota(block.begin(), block.end(), start + 1);
        for (const auto& w : out) {
            std::vector<int> b = block;
            do {
                auto w2 = w;
                for (int t = 0; t < len; ++t) w2[static_cast<std::size_t>(start + t)] = b[static_cast<std::size_t>(t)];
                next.push_back(std::move(w2));
            } while (std::next_permutation(b.begin(), b.end()));
        }
        out = std::move(next);
        start += len;
    }
    std::vector<AffinePerm> res;
    res.reserve(out.size());
    for (auto& w : out) res.emplace_back(std::move(w));
    return res;
}

bool in_young_subgroup(const AffinePerm& w, const Composition& lambda) {
    for (int s = 1; s <= w.r(); ++s)
        if (block_of(lambda, w(s)) != block_of(lambda, s)) return false;
    return true;
}

AffinePerm longest_element(const Composition& lambda) {
    int r = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::vector<int> w(static_cast<std::size_t>(r));
    int start = 0;
    for (int len : lambda) {
        for (int t = 0; t < len; ++t) w[static_cast<std::size_t>(start + t)] = start + len - t;
        start += len;
    }
    return AffinePerm(std::move(w));
}

long young_order(const Composition& lambda) {
    long o = 1;
    for (int len : lambda)
        for (int k = 2; k <= len; ++k) o *= k;
    return o;
}

namespace {
// w increasing on every block of lambda inside [1, r].
bool increasing_on_blocks(const AffinePerm& w, const Composition& lambda) {
    int start = 0;
    for (int len : lambda) {
        for (int t = start + 1; t < start + len; ++t)
            if (w(t) > w(t + 1)) return false;
        start += len;
    }
    return true;
}
}  // namespace

bool is_min_left(const AffinePerm& d, const Composition& lambda) { return increasing_on_blocks(d.inverse(), lambda); }

bool is_min_rep(const AffinePerm& d, const Composition& lambda, const Composition& mu) {
    return increasing_on_blocks(d.inverse(), lambda) && increasing_on_blocks(d, mu);
}

PeriodicMatrix jmath_matrix(const Composition& lambda, const AffinePerm& w, const Composition& mu) {
    int n = static_cast<int>(lambda.size());
    if (mu.size() != lambda.size()) throw DimMismatch("lambda and mu have different lengths");
    int r = w.r();
    if (std::accumulate(lambda.begin(), lambda.end(), 0) != r || std::accumulate(mu.begin(), mu.end(), 0) != r)
        throw DimMismatch("compositions do not sum to r");
    AffinePerm winv = w.inverse();
    PeriodicMatrix A(n);
    for (int s = 1; s <= r; ++s) A.add(block_of(lambda, s), block_of(mu, winv(s)), 1);
    return A;
}

PeriodicMatrix jmath(const Composition& lambda, const AffinePerm& d, const Composition& mu) {
    if (!is_min_rep(d, lambda, mu)) throw NotMinimalRep("d is not a minimal double coset representative");
    return jmath_matrix(lambda, d, mu);
}

CosetTriple jmath_inv(const PeriodicMatrix& A, int r) {
    if (!A.nonneg()) throw WrongShape("jmath_inv expects a nonnegative matrix");
    int n = A.n();
    Composition lambda = A.ro(), mu = A.co();
    if (sigma(lambda) != r) throw DimMismatch("sigma(A) != r");
    // Row k = k0 + m n of A is row k0 shifted by m n columns.
    std::vector<int> w(static_cast<std::size_t>(r));
    for (int l = 1; l <= n; ++l) {
        int pos = block_range(mu, l).first;
        // rows k with a_{k,l} != 0 in increasing order
        std::vector<std::pair<int, int>> rows;
        for (const auto& e : A.entries()) {
            // entry (i, j) gives a_{i + m n, l} when j + m n == l
            int diff = l - e.j;
            if (diff % n != 0) continue;
            rows.emplace_back(e.i + diff, e.a);
        }
        std::sort(rows.begin(), rows.end());
        for (const auto& [k, a] : rows) {
            // offset of the (k, l) group inside R^lambda_k: sum of a_{k, l'} for l' < l
            int off = 0;
            int diff = k - mod1(k, n);
            for (const auto& e : A.entries())
                if (e.i == mod1(k, n) && e.j + diff < l) off += e.a;
            int start = block_range(lambda, k).first + off;
            for (int t = 0; t < a; ++t) w[static_cast<std::size_t>(pos - 1 + t)] = start + t;
            pos += a;
        }
    }
    return {lambda, AffinePerm(std::move(w)), mu};
}

AffinePerm min_coset_rep(const Composition& lambda, const AffinePerm& w, const Composition& mu) {
    return jmath_inv(jmath_matrix(lambda, w, mu), w.r()).d;
}

Composition coset_intersection_left(const Composition& lambda, const AffinePerm& d, const Composition& mu) {
    PeriodicMatrix A = jmath_matrix(lambda, d, mu);
    Composition nu;
    for (const auto& e : A.entries()) nu.push_back(e.a);  // entries are sorted by (row, column)
    return nu;
}

Composition coset_intersection(const Composition& lambda, const AffinePerm& d, const Composition& mu) {
    return coset_intersection_left(mu, d.inverse(), lambda);
}

std::vector<AffinePerm> double_coset_elements(const Composition& lambda, const AffinePerm& d, const Composition& mu) {
    Composition nu = coset_intersection(lambda, d, mu);
    std::vector<AffinePerm> right;
    for (const auto& w2 : young_subgroup(mu))
        if (is_min_left(w2, nu)) right.push_back(w2);
    std::vector<AffinePerm> out;
    for (const auto& w1 : young_subgroup(lambda)) {
        AffinePerm w1d = w1 * d;
        for (const auto& w2 : right) out.push_back(w1d * w2);
    }
    return out;
}

Decomposition decompose(const AffinePerm& w, const Composition& lambda, const AffinePerm& d, const Composition& mu) {
    Composition nu = coset_intersection(lambda, d, mu);
    AffinePerm dinv = d.inverse();
    for (const auto& w2 : young_subgroup(mu)) {
        if (!is_min_left(w2, nu)) continue;
        AffinePerm w1 = w * w2.inverse() * dinv;
        if (in_young_subgroup(w1, lambda)) return {w1, d, w2};
    }
    throw NotInCoset("element is not in the double coset");
}

Decomposition decompose(const AffinePerm& w, const Composition& lambda, const Composition& mu) {
    return decompose(w, lambda, min_coset_rep(lambda, w, mu), mu);
}

}  // namespace affschur
