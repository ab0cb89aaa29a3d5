#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "affschur/classical.hpp"
#include "affschur/hall.hpp"
#include "affschur/hecke.hpp"
#include "affschur/schur.hpp"

namespace affschur {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class ElementKind { Schur, Hall, Hecke, Classical };

std::string kind_name(ElementKind k);

// An element of one of the algebras reachable from the command line. Schur and Hall elements
// share the matrix-keyed combination `mat`.
struct Element {
    ElementKind kind = ElementKind::Schur;
    int n = 2;
    int r = 2;
    LinComb<PeriodicMatrix> mat;
    HeckeElement hecke;
    ClassicalElement classical;

    friend bool operator==(const Element& a, const Element& b);
};

struct ParseContext {
    int n = 2;
    int r = 2;
    // Kind used for terms without a basis element (a bare scalar is a multiple of the identity).
    std::optional<ElementKind> kind;
};

// Matrices: a '+'-separated sum of {(i,j):a,...}, diag(a1,...,an), Eij or E(i,j) with an
// optional integer multiplier, and 0.
PeriodicMatrix parse_matrix(const std::string& s, int n);
// Modules of the cyclic quiver: a '+'-separated sum of S_i[l] (S_i = S_i[1]) with optional
// multiplicities, a matrix in braces, a multisegment such as [1;2)+2[2;1), or 0.
PeriodicMatrix parse_module(const std::string& s, int n);
std::string module_string(const PeriodicMatrix& A);

// Element expressions and JSON documents produced by element_json.
Element parse_element(const std::string& s, const ParseContext& ctx);
Element multiply(const Element& a, const Element& b);

std::string element_text(const Element& x);
std::string element_json(const Element& x);
std::string element_csv(const Element& x);

// Descending form such as "v^2 - 1" accepted by LaurentPoly::parse.
std::string pretty_laurent(const LaurentPoly& f);

// Runs the command line (without the program name). Exit codes: 0 success, 1 verification
// failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affschur
