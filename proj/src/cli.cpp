#include "affschur/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "affschur/suites.hpp"

namespace affschur {

using nlohmann::json;

std::string kind_name(ElementKind k) {
    switch (k) {
        case ElementKind::Schur: return "schur";
        case ElementKind::Hall: return "hall";
        case ElementKind::Hecke: return "hecke";
        default: return "classical";
    }
}

bool operator==(const Element& a, const Element& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ElementKind::Hecke: return a.r == b.r && a.hecke == b.hecke;
        case ElementKind::Hall: return a.n == b.n && a.mat == b.mat;
        case ElementKind::Classical: return a.n == b.n && a.r == b.r && a.classical == b.classical;
        default: return a.n == b.n && a.r == b.r && a.mat == b.mat;
    }
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n"), b = s.find_last_not_of(" \t\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int x = std::stoi(strip(s), &used);
        if (used != strip(s).size()) throw std::invalid_argument(s);
        return x;
    } catch (const std::exception&) {
        throw ParseError("expected an integer for " + what + ", got '" + s + "'");
    }
}

bool is_open(char c) { return c == '(' || c == '[' || c == '{'; }
bool is_close(char c) { return c == ')' || c == ']' || c == '}'; }

// Splits at separator characters outside all brackets.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (is_open(c)) ++depth;
        if (is_close(c)) --depth;
        if (depth < 0) throw ParseError("unbalanced brackets in '" + s + "'");
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in '" + s + "'");
    out.push_back(cur);
    return out;
}

// Index of the bracket matching the one at position `open`.
std::size_t matching(const std::string& s, std::size_t open) {
    int depth = 0;
    for (std::size_t k = open; k < s.size(); ++k) {
        if (is_open(s[k])) ++depth;
        if (is_close(s[k]) && --depth == 0) return k;
    }
    throw ParseError("unbalanced brackets in '" + s + "'");
}

// Index of the bracket matching the closing one at position `close`.
std::size_t matching_back(const std::string& s, std::size_t close) {
    int depth = 0;
    for (std::size_t k = close + 1; k-- > 0;) {
        if (is_close(s[k])) ++depth;
        if (is_open(s[k]) && --depth == 0) return k;
    }
    throw ParseError("unbalanced brackets in '" + s + "'");
}

std::vector<int> int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    if (strip(s).empty()) return out;
    for (const auto& part : split_top(s, ',')) out.push_back(to_int(part, what));
    return out;
}

std::string matrix_text(const PeriodicMatrix& A) {
    if (A.is_diagonal() && !A.entries().empty()) {
        std::string s = "diag(";
        DimVector d = A.diagonal();
        for (std::size_t k = 0; k < d.size(); ++k) s += (k ? "," : "") + std::to_string(d[k]);
        return s + ")";
    }
    return A.to_string();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

// ---- matrices and modules ----

PeriodicMatrix parse_matrix(const std::string& text, int n) {
    PeriodicMatrix M(n);
    static const std::regex elem(R"(^(-?\d+)?\*?E(?:(\d)(\d)|\((-?\d+),(-?\d+)\))$)");
    for (const auto& raw : split_top(text, '+')) {
        std::string t = strip(raw);
        std::smatch m;
        if (t == "0") continue;
        if (!t.empty() && t.front() == '{') {
            try {
                M = M + PeriodicMatrix::parse(n, t);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        } else if (t.rfind("diag(", 0) == 0 && t.back() == ')') {
            DimVector d = int_list(t.substr(5, t.size() - 6), "diag");
            if (static_cast<int>(d.size()) != n)
                throw DimensionMismatch(t + " has " + std::to_string(d.size()) + " entries but n = " + std::to_string(n));
            M = M + PeriodicMatrix::diag(d);
        } else if (std::regex_match(t, m, elem)) {
            int a = m[1].matched ? std::stoi(m[1]) : 1;
            int i = std::stoi(m[2].matched ? m[2].str() : m[4].str());
            int j = std::stoi(m[3].matched ? m[3].str() : m[5].str());
            M.add(i, j, a);
        } else {
            throw ParseError("cannot read matrix term '" + t + "'");
        }
    }
    return M;
}

PeriodicMatrix parse_module(const std::string& text, int n) {
    std::string t = strip(text);
    if (!t.empty() && t.front() == '[') {
        try {
            return parse_multisegment(n, t);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    PeriodicMatrix M(n);
    static const std::regex seg(R"(^(\d+)?\*?S(\d+)(?:\[(\d+)\])?$)");
    for (const auto& raw : split_top(t, '+')) {
        std::string p = strip(raw);
        std::smatch m;
        if (p == "0") continue;
        if (!p.empty() && p.front() == '{') {
            M = M + parse_matrix(p, n);
        } else if (std::regex_match(p, m, seg)) {
            int a = m[1].matched ? std::stoi(m[1]) : 1;
            int i = std::stoi(m[2]), l = m[3].matched ? std::stoi(m[3]) : 1;
            if (i < 1 || i > n) throw ParseError("vertex out of range in '" + p + "'");
            if (l < 1) throw ParseError("segment length must be positive in '" + p + "'");
            M.add(i, i + l, a);
        } else {
            throw ParseError("cannot read module term '" + p + "'");
        }
    }
    if (!M.is_upper() || !M.nonneg()) throw ParseError("'" + text + "' is not a nilpotent representation");
    return M;
}

std::string module_string(const PeriodicMatrix& A) {
    if (A.entries().empty()) return "0";
    std::string s;
    for (const auto& e : A.entries()) {
        if (!s.empty()) s += "+";
        if (e.a != 1) s += std::to_string(e.a);
        s += "S" + std::to_string(e.i);
        if (e.j - e.i != 1) s += "[" + std::to_string(e.j - e.i) + "]";
    }
    return s;
}

std::string pretty_laurent(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    auto terms = f.terms();
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string s;
    for (const auto& [k, c0] : terms) {
        mpz_class c = c0;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        c = abs(c);
        if (k == 0) {
            s += c.get_str();
            continue;
        }
        if (c != 1) s += c.get_str() + "*";
        s += k == 1 ? "v" : "v^" + std::to_string(k);
    }
    return s;
}

// ---- element expressions ----

namespace {

struct Atom {
    ElementKind kind;
    LinComb<PeriodicMatrix> mat;
    HeckeElement hecke;
    ClassicalElement classical;
};

DimVector parse_j(const std::string& text, int n) {
    std::string t = strip(text);
    static const std::regex unit(R"(^(-?)e(\d+)$)");
    std::smatch m;
    if (t == "0") return DimVector(static_cast<std::size_t>(n), 0);
    if (std::regex_match(t, m, unit)) {
        int i = std::stoi(m[2]);
        if (i < 1 || i > n) throw ParseError("index out of range in '" + t + "'");
        DimVector d = unit_vector(n, i);
        return m[1].length() ? scaled(d, -1) : d;
    }
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        DimVector d = int_list(t.substr(1, t.size() - 2), "j");
        if (static_cast<int>(d.size()) != n)
            throw DimensionMismatch("j = " + t + " has " + std::to_string(d.size()) + " entries but n = " + std::to_string(n));
        return d;
    }
    throw ParseError("cannot read the vector '" + t + "'");
}

int parse_r(const std::string& text, const ParseContext& ctx) {
    std::string t = strip(text);
    if (t == "r") return ctx.r;
    int r = to_int(t, "r");
    if (r < 1) throw ParseError("r must be positive");
    return r;
}

void require_sigma(const PeriodicMatrix& A, const ParseContext& ctx) {
    if (A.sum() != ctx.r)
        throw DimensionMismatch("matrix " + A.to_string() + " has entry sum " + std::to_string(A.sum()) +
                                " but r = " + std::to_string(ctx.r));
}

Atom schur_atom(const SchurElement& x) { return {ElementKind::Schur, x, {}, {}}; }

Atom generator_atom(const std::string& name, const ParseContext& ctx) {
    static const std::regex re(R"(^(E|F|K|Kinv|u)(\d+)$)");
    static const std::regex zre(R"(^z(\d+)([+-])$)");
    int n = ctx.n, r = ctx.r;
    std::smatch m;
    if (std::regex_match(name, m, re)) {
        int i = std::stoi(m[2]);
        if (i < 1 || i > n) throw ParseError("generator index out of range: " + name);
        std::string g = m[1];
        if (g == "u") return {ElementKind::Hall, u_simple(n, i), {}, {}};
        if (g == "E") return schur_atom(xi_E(n, i, r));
        if (g == "F") return schur_atom(xi_F(n, i, r));
        if (g == "K") return schur_atom(kk(n, i, r));
        return schur_atom(kk_inv(n, i, r));
    }
    if (std::regex_match(name, m, zre))
        return schur_atom(xi_z(m[2] == "+" ? Sign::Plus : Sign::Minus, n, std::stoi(m[1]), r));
    if (name == "rho") return schur_atom(schur_rho(n, r));
    if (name == "rhoinv") return schur_atom(schur_rho_inv(n, r));
    if (name == "one") return schur_atom(schur_one(n, r));
    throw ParseError("unknown generator 'gen:" + name + "'");
}

Atom parse_atom(const std::string& t, const ParseContext& ctx) {
    static const std::regex simple(R"(^(?:T_\{)?s(\d+)\}?$)");
    static const std::regex rho(R"(^(?:T_\{)?rho(?:\^(-?\d+))?\}?$)");
    std::smatch m;
    if (t.rfind("gen:", 0) == 0) return generator_atom(t.substr(4), ctx);
    if (std::regex_match(t, m, simple)) {
        int i = std::stoi(m[1]);
        if (i < 0 || i > ctx.r) throw ParseError("simple reflection out of range: " + t);
        return {ElementKind::Hecke, {}, hecke_basis(AffinePerm::s(ctx.r, i)), {}};
    }
    if (std::regex_match(t, m, rho)) {
        int k = m[1].matched ? std::stoi(m[1]) : 1;
        return {ElementKind::Hecke, {}, hecke_basis(AffinePerm::rho(ctx.r, k)), {}};
    }
    if (t.back() == ']') {
        std::size_t open = matching_back(t, t.size() - 1);
        std::string head = t.substr(0, open), body = t.substr(open + 1, t.size() - open - 2);
        if (head.empty() || head == "br") {
            PeriodicMatrix A = parse_matrix(body, ctx.n);
            require_sigma(A, ctx);
            return schur_atom(bracket(A));
        }
        if (head == "e") {
            PeriodicMatrix A = parse_matrix(body, ctx.n);
            require_sigma(A, ctx);
            return schur_atom(e_basis(A));
        }
        if (head == "c") {
            PeriodicMatrix A = parse_matrix(body, ctx.n);
            require_sigma(A, ctx);
            return {ElementKind::Classical, {}, {}, ClassicalElement(A, 1)};
        }
        if (head == "u") return {ElementKind::Hall, hall_basis(parse_module(body, ctx.n)), {}, {}};
        if (head == "T" || head == "Tw") {
            try {
                AffinePerm w = AffinePerm::parse("[" + body + "]");
                if (w.r() != ctx.r) throw DimensionMismatch("window " + t + " has length " + std::to_string(w.r()) + " but r = " + std::to_string(ctx.r));
                return {ElementKind::Hecke, {}, hecke_basis(w), {}};
            } catch (const DimensionMismatch&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        // A[j, r]
        auto parts = split_top(body, ',');
        if (parts.size() != 2) throw ParseError("expected A[j,r] in '" + t + "'");
        PeriodicMatrix A = parse_matrix(head, ctx.n);
        return {ElementKind::Classical, {}, {}, abr(A, parse_j(parts[0], ctx.n), parse_r(parts[1], ctx))};
    }
    if (t.back() == ')') {
        // A(j, r)
        std::size_t open = matching_back(t, t.size() - 1);
        std::string head = t.substr(0, open);
        auto parts = split_top(t.substr(open + 1, t.size() - open - 2), ',');
        if (head.empty() || parts.size() != 2) throw ParseError("cannot read '" + t + "'");
        PeriodicMatrix A = parse_matrix(head, ctx.n);
        try {
            return schur_atom(blm(A, parse_j(parts[0], ctx.n), parse_r(parts[1], ctx)));
        } catch (const WrongShape& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("cannot read '" + t + "'");
}

Element identity(ElementKind kind, const ParseContext& ctx) {
    Element e;
    e.kind = kind;
    e.n = ctx.n;
    e.r = ctx.r;
    switch (kind) {
        case ElementKind::Schur: e.mat = schur_one(ctx.n, ctx.r); break;
        case ElementKind::Hall: e.mat = hall_unit(ctx.n); break;
        case ElementKind::Hecke: e.hecke = hecke_one(ctx.r); break;
        default: e.classical = specialize(schur_one(ctx.n, ctx.r)); break;
    }
    return e;
}

Element from_json(const json& doc, const ParseContext& ctx) {
    Element e;
    std::string kind = doc.at("kind").get<std::string>();
    std::map<std::string, ElementKind> kinds{{"schur", ElementKind::Schur},
                                             {"hall", ElementKind::Hall},
                                             {"hecke", ElementKind::Hecke},
                                             {"classical", ElementKind::Classical}};
    if (!kinds.count(kind)) throw ParseError("unknown element kind '" + kind + "'");
    e.kind = kinds[kind];
    e.n = doc.value("n", ctx.n);
    e.r = doc.value("r", ctx.r);
    for (const auto& term : doc.at("terms")) {
        std::string coeff = term.at("coeff").get<std::string>();
        if (e.kind == ElementKind::Hecke) {
            e.hecke.add(AffinePerm::parse(term.at("perm").get<std::string>()), LaurentPoly::parse(coeff));
            continue;
        }
        PeriodicMatrix A = PeriodicMatrix::parse(e.n, term.at("matrix").get<std::string>());
        if (e.kind == ElementKind::Classical)
            e.classical.add(A, mpq_class(coeff));
        else
            e.mat.add(A, LaurentPoly::parse(coeff));
    }
    return e;
}

bool looks_like_json(const std::string& t) {
    static const std::regex re(R"(^\s*(\{\s*"|\[\s*(\{\s*"|\])))");
    return std::regex_search(t, re);
}

}  // namespace

Element parse_element(const std::string& text, const ParseContext& ctx) {
    if (looks_like_json(text)) {
        try {
            return from_json(json::parse(text), ctx);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad JSON element: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad JSON element: ") + e.what());
        }
    }
    // split into signed terms at top-level '+' and '-' (not after '^' or '*')
    std::vector<std::pair<int, std::string>> terms;
    {
        int depth = 0, sign = 1;
        std::string cur;
        auto flush = [&] {
            if (!strip(cur).empty()) terms.emplace_back(sign, strip(cur));
            else if (!terms.empty() || sign != 1) throw ParseError("empty term in '" + text + "'");
            cur.clear();
        };
        for (std::size_t k = 0; k < text.size(); ++k) {
            char c = text[k];
            if (is_open(c)) ++depth;
            if (is_close(c)) --depth;
            std::string before = strip(cur);
            static const std::regex zgen(R"(gen:z\d+$)");
            bool exponent = c == '-' && !before.empty() && (before.back() == '^' || before.back() == '*');
            bool binary = depth == 0 && (c == '+' || c == '-') && !exponent && !std::regex_search(before, zgen);
            if (binary) {
                if (!before.empty()) flush();
                sign = c == '-' ? -sign : 1;
                if (before.empty() && c == '+') sign = 1;
                continue;
            }
            cur += c;
        }
        if (depth != 0) throw ParseError("unbalanced brackets in '" + text + "'");
        if (strip(cur).empty()) throw ParseError("empty expression");
        flush();
    }

    static const std::regex scalar(R"(^(\d+(?:/\d+)?|(?:\d+\*)?v(?:\^-?\d+)?)$)");
    static const std::regex lead(R"(^(\d+(?:/\d+)?|(?:\d+\*)?v(?:\^-?\d+)?)\*(.+)$)");
    struct Parsed {
        std::string coeff;
        std::optional<Atom> atom;
    };
    std::vector<std::pair<int, Parsed>> parsed;
    std::optional<ElementKind> kind = ctx.kind;
    for (const auto& [sign, t] : terms) {
        Parsed p{"1", std::nullopt};
        std::string rest = t;
        std::smatch m;
        if (rest.front() == '(') {
            std::size_t close = matching(rest, 0);
            p.coeff = rest.substr(1, close - 1);
            rest = strip(rest.substr(close + 1));
            if (!rest.empty() && rest.front() == '*') rest = strip(rest.substr(1));
        } else if (std::regex_match(rest, m, scalar)) {
            p.coeff = rest;
            rest.clear();
        } else if (std::regex_match(rest, m, lead)) {
            p.coeff = m[1];
            rest = strip(m[2]);
        }
        if (!rest.empty()) {
            p.atom = parse_atom(rest, ctx);
            if (kind && *kind != p.atom->kind)
                throw DimensionMismatch("cannot mix " + kind_name(*kind) + " and " + kind_name(p.atom->kind) + " terms");
            kind = p.atom->kind;
        }
        parsed.emplace_back(sign, p);
    }
    if (!kind) throw ParseError("cannot tell which algebra '" + text + "' lives in");

    Element out;
    out.kind = *kind;
    out.n = ctx.n;
    out.r = ctx.r;
    for (const auto& [sign, p] : parsed) {
        Atom a = p.atom ? *p.atom : Atom{*kind, {}, {}, {}};
        if (!p.atom) {
            Element one = identity(*kind, ctx);
            a.mat = one.mat;
            a.hecke = one.hecke;
            a.classical = one.classical;
        }
        try {
            if (*kind == ElementKind::Classical) {
                mpq_class c(p.coeff);
                c.canonicalize();
                out.classical += a.classical * mpq_class(c * sign);
            } else {
                LaurentPoly c = LaurentPoly::parse(p.coeff) * LaurentPoly(sign);
                if (*kind == ElementKind::Hecke)
                    out.hecke += a.hecke * c;
                else
                    out.mat += a.mat * c;
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError("cannot read coefficient '" + p.coeff + "': " + e.what());
        }
    }
    return out;
}

Element multiply(const Element& a, const Element& b) {
    if (a.kind != b.kind) throw DimensionMismatch("cannot multiply " + kind_name(a.kind) + " by " + kind_name(b.kind));
    bool needs_n = a.kind != ElementKind::Hecke, needs_r = a.kind != ElementKind::Hall;
    if ((needs_n && a.n != b.n) || (needs_r && a.r != b.r)) throw DimensionMismatch("operands have different n or r");
    Element out = a;
    switch (a.kind) {
        case ElementKind::Schur: out.mat = mul_oracle(a.mat, b.mat); break;
        case ElementKind::Hall: out.mat = hall_mul(a.mat, b.mat); break;
        case ElementKind::Hecke: out.hecke = mul(a.hecke, b.hecke); break;
        default: out.classical = mul1(a.classical, b.classical); break;
    }
    return out;
}

// ---- output ----

namespace {

std::string perm_text(const AffinePerm& w) {
    int r = w.r();
    if (w.is_identity()) return "";
    for (int i = 0; i < r; ++i)
        if (w == AffinePerm::s(r, i)) return "T_{s" + std::to_string(i == 0 ? r : i) + "}";
    int k = w.rho_power();
    if (w == AffinePerm::rho(r, k)) return k == 1 ? "T_{rho}" : "T_{rho^" + std::to_string(k) + "}";
    return "T" + w.to_string();
}

// "c*atom", "(c)atom" or the bare coefficient when the atom is empty.
std::string join_term(bool first, const std::string& coeff, bool negative, const std::string& atom) {
    std::string s = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (atom.empty()) return s + coeff;
    if (coeff == "1") return s + atom;
    bool simple = coeff.find_first_of(" ") == std::string::npos;
    return s + (simple ? coeff + "*" : "(" + coeff + ")") + atom;
}

// Splits off a global sign so that single-term negative coefficients print as " - ".
std::pair<bool, std::string> signed_laurent(const LaurentPoly& c) {
    if (c.is_monomial() && c.terms().front().second < 0) return {true, pretty_laurent(-c)};
    return {false, pretty_laurent(c)};
}

}  // namespace

std::string element_text(const Element& x) {
    std::string s;
    switch (x.kind) {
        case ElementKind::Hecke: {
            auto terms = x.hecke.sorted();
            std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
                return !a.first.is_identity() && b.first.is_identity();
            });
            for (const auto& [w, c] : terms) {
                auto [neg, cs] = signed_laurent(c);
                std::string atom = perm_text(w);
                if (atom.empty() && !cs.empty() && cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
                s += join_term(s.empty(), cs, neg, atom);
            }
            break;
        }
        case ElementKind::Classical:
            for (const auto& [A, c] : x.classical.sorted()) {
                mpq_class a = abs(c);
                s += join_term(s.empty(), a.get_str(), c < 0, "c[" + matrix_text(A) + "]");
            }
            break;
        default:
            for (const auto& [A, c] : x.mat.sorted()) {
                auto [neg, cs] = signed_laurent(c);
                std::string atom = x.kind == ElementKind::Hall ? "u[" + module_string(A) + "]" : "[" + matrix_text(A) + "]";
                s += join_term(s.empty(), cs, neg, atom);
            }
    }
    return s.empty() ? "0" : s;
}

std::string element_json(const Element& x) {
    json doc;
    doc["kind"] = kind_name(x.kind);
    if (x.kind != ElementKind::Hecke) doc["n"] = x.n;
    if (x.kind != ElementKind::Hall) doc["r"] = x.r;
    json terms = json::array();
    switch (x.kind) {
        case ElementKind::Hecke:
            for (const auto& [w, c] : x.hecke.sorted()) terms.push_back({{"perm", w.to_string()}, {"coeff", c.to_string()}});
            break;
        case ElementKind::Classical:
            for (const auto& [A, c] : x.classical.sorted()) terms.push_back({{"matrix", A.to_string()}, {"coeff", c.get_str()}});
            break;
        default:
            for (const auto& [A, c] : x.mat.sorted()) terms.push_back({{"matrix", A.to_string()}, {"coeff", c.to_string()}});
    }
    doc["terms"] = terms;
    return doc.dump();
}

std::string element_csv(const Element& x) {
    std::ostringstream os;
    if (x.kind == ElementKind::Hecke) {
        os << "perm,coeff\n";
        for (const auto& [w, c] : x.hecke.sorted()) os << csv_field(w.to_string()) << "," << csv_field(c.to_string()) << "\n";
    } else if (x.kind == ElementKind::Classical) {
        os << "matrix,coeff\n";
        for (const auto& [A, c] : x.classical.sorted()) os << csv_field(A.to_string()) << "," << c.get_str() << "\n";
    } else {
        os << "matrix,coeff\n";
        for (const auto& [A, c] : x.mat.sorted()) os << csv_field(A.to_string()) << "," << csv_field(c.to_string()) << "\n";
    }
    return os.str();
}

// ---- command line ----

namespace {

const char* kGrammar = R"(Element expressions (mult):
  A sum of terms separated by + or -. A term is an optional coefficient followed by a
  basis element or generator. Coefficients are integers, v^k, or any Laurent polynomial
  in parentheses, e.g. (v^2 - 1)T_{s1}. Classical coefficients are rationals such as 3/2.
  A bare coefficient is that multiple of the identity.

  Schur algebra S(n,r):
    [A] or br[A]   the basis element [A]
    e[A]           the basis element e_A = v^{d_A}[A]
    A(j,r)         the element A(j,r); j is 0, (j1,...,jn), e3 or -e3; r is r or an integer
    gen:E1 gen:F1 gen:K1 gen:Kinv1 gen:z1+ gen:z1- gen:rho gen:rhoinv gen:one
  Classical algebra (v = 1):
    c[A]           the basis element [A]_1
    A[j,r]         the element A[j,r]
  Hecke algebra of the extended affine symmetric group on r letters:
    T[w1,...,wr] or Tw[...]   T_w for the window (w(1),...,w(r))
    s1, T_{s1}                T_{s_1};  rho, rho^k, T_{rho}: powers of T_rho
  Hall algebra of the cyclic quiver with n vertices:
    u[M]           the basis element u_M for a module M;  gen:u1 is u_1

Matrices A: a sum of {(i,j):a,...}, diag(a1,...,an), E12 or E(i,j) with an optional
multiplier such as 2E13, and 0.
Modules M: a sum of S1, S2[3] (top 2, length 3), 2S1, a matrix in braces, a multisegment
such as [1;2)+[2;1), or 0.

JSON output of mult is accepted wherever an element is expected.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
The environment variable AFFSCHUR_CAP overrides --cap.)";

struct Options {
    int n = 0;
    int r = 0;
    int bandwidth = 0;
    int cap = 0;
    int max = 0;
    int samples = 200;
    unsigned seed = 1;
    std::vector<int> primes;
    std::string format = "text";
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.n, "number of vertices of the cyclic quiver (n >= 2)")->check(CLI::Range(2, 1000));
    sub->add_option("--r", o.r, "tensor degree (r >= 1)")->check(CLI::Range(1, 1000));
    sub->add_option("--bandwidth", o.bandwidth, "bound on |j - i| for nonzero entries in suites")->check(CLI::Range(1, 1000));
    sub->add_option("--cap", o.cap, "largest module dimension for finite-field counting (at most 6)")->check(CLI::Range(1, 6));
    sub->add_option("--primes", o.primes, "primes for the Hall polynomial stability check")->delimiter(',');
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

void apply_cap(const Options& o) {
    int cap = o.cap;
    if (const char* env = std::getenv("AFFSCHUR_CAP")) {
        cap = to_int(env, "AFFSCHUR_CAP");
        if (cap < 1 || cap > 6) throw ParseError("AFFSCHUR_CAP must lie in [1, 6]");
    }
    if (cap) set_dimension_cap(cap);
}

int cmd_mult(const Options& o, const std::string& x, const std::string& y, std::ostream& out) {
    ParseContext ctx;
    ctx.n = o.n ? o.n : 2;
    ctx.r = o.r ? o.r : 2;
    Element p = multiply(parse_element(x, ctx), parse_element(y, ctx));
    if (o.format == "json")
        out << element_json(p) << "\n";
    else if (o.format == "csv")
        out << element_csv(p);
    else
        out << element_text(p) << "\n";
    return 0;
}

int cmd_hallpoly(const Options& o, const std::vector<std::string>& mods, std::ostream& out, std::ostream& err) {
    int n = o.n ? o.n : 2;
    if (mods.size() != 1 && mods.size() != 3) throw CLI::ValidationError("hallpoly expects C or C A B");
    PeriodicMatrix C = parse_module(mods[0], n);
    std::vector<std::array<PeriodicMatrix, 2>> pairs;
    if (mods.size() == 3) {
        pairs.push_back({parse_module(mods[1], n), parse_module(mods[2], n)});
    } else {
        for (const auto& [key, f] : hall_table(C)) pairs.push_back({key.A, key.B});
        std::sort(pairs.begin(), pairs.end());
    }
    int status = 0;
    json rows = json::array();
    if (o.format == "csv") out << "C,A,B,phi\n";
    for (const auto& [A, B] : pairs) {
        LaurentPoly f = hall_poly(C, A, B);
        for (int p : o.primes) {
            const CountTable& counts = filtration_table(C, p);
            auto it = counts.find(PairKey{A, B});
            long cnt = it == counts.end() ? 0 : it->second;
            if (eval_at_q(f, p) != cnt) {
                err << "count at q = " << p << " is " << cnt << " but the polynomial gives " << eval_at_q(f, p) << "\n";
                status = 1;
            }
        }
        std::string cs = module_string(C), as = module_string(A), bs = module_string(B), fs = q_string(f);
        if (o.format == "json")
            rows.push_back({{"C", cs}, {"A", as}, {"B", bs}, {"phi", fs}});
        else if (o.format == "csv")
            out << csv_field(cs) << "," << csv_field(as) << "," << csv_field(bs) << "," << csv_field(fs) << "\n";
        else if (mods.size() == 3)
            out << fs << "\n";
        else
            out << as << " , " << bs << " : " << fs << "\n";
    }
    if (o.format == "json") out << (mods.size() == 3 ? rows[0].dump() : rows.dump()) << "\n";
    return status;
}

int cmd_verify(const Options& o, const std::string& name, std::ostream& out) {
    SuiteConfig cfg;
    cfg.n = o.n;
    cfg.r = o.r;
    cfg.bandwidth = o.bandwidth;
    cfg.max = o.max;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    if (!o.primes.empty()) cfg.primes = o.primes;
    std::vector<std::string> names = name == "all" ? suite_names() : std::vector<std::string>{name};
    bool ok = true;
    json reports = json::array();
    if (o.format == "csv") out << "suite,checked,failures,status\n";
    for (const auto& s : names) {
        SuiteReport rep = run_suite(s, cfg);
        ok = ok && rep.passed();
        std::string status = rep.passed() ? "pass" : "fail";
        if (o.format == "json") {
            reports.push_back({{"suite", rep.name}, {"checked", rep.checked}, {"status", status}, {"failures", rep.failures}});
        } else if (o.format == "csv") {
            out << rep.name << "," << rep.checked << "," << rep.failures.size() << "," << status << "\n";
        } else {
            out << rep.name << ": " << status << " (" << rep.checked << " checks, " << rep.failures.size() << " failures)\n";
            for (const auto& f : rep.failures) out << "  " << f << "\n";
        }
    }
    if (o.format == "json") out << (names.size() == 1 ? reports[0].dump() : reports.dump()) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in affine quantum Schur algebras and Hall algebras of cyclic quivers"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    Options o;
    std::string x, y, suite;
    std::vector<std::string> mods;

    auto* mult = app.add_subcommand("mult", "multiply two elements (Schur, Hall, Hecke or classical)");
    add_common(mult, o);
    mult->add_option("x", x, "left factor")->required();
    mult->add_option("y", y, "right factor")->required();
    mult->footer(kGrammar);

    auto* hp = app.add_subcommand("hallpoly", "Hall polynomial phi^C_{A,B} in q, or the full table for C");
    add_common(hp, o);
    hp->add_option("modules", mods, "C [A B]")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite (or all)");
    add_common(verify, o);
    verify->add_option("--max", o.max, "bound on components or degrees used by the suite")->check(CLI::Range(1, 100));
    verify->add_option("--samples", o.samples, "number of random samples")->check(CLI::Range(1, 1000000));
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    verify->add_option("suite", suite, "one of: " + CLI::detail::join(allowed, ", "))->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        apply_cap(o);
        if (mult->parsed()) return cmd_mult(o, x, y, out);
        if (hp->parsed()) return cmd_hallpoly(o, mods, out, err);
        return cmd_verify(o, suite, out);
    } catch (const UnknownSuite& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace affschur
