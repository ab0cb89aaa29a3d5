#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affschur/laurent.hpp"

namespace affschur {

struct WrongShape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// Residue of i in [1, n].
inline int mod1(int i, int n) { return ((i - 1) % n + n) % n + 1; }
// Floor division for possibly negative numerators.
inline int floordiv(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline int ceildiv(int a, int b) { return -floordiv(-a, b); }

// n-periodic vector (lambda_1, ..., lambda_n); stored 0-based, index k holds lambda_{k+1}.
using DimVector = std::vector<int>;

DimVector unit_vector(int n, int i);  // e_i with i taken mod n
DimVector delta_vector(int n);
int sigma(const DimVector& a);
DimVector operator+(const DimVector& a, const DimVector& b);
DimVector operator-(const DimVector& a, const DimVector& b);
DimVector scaled(const DimVector& a, int c);
int dot(const DimVector& a, const DimVector& b);
bool leq(const DimVector& a, const DimVector& b);  // componentwise
std::string to_string(const DimVector& a);

// Integer matrix (a_{i,j})_{i,j in Z} with a_{i+n,j+n} = a_{i,j}. Entries are stored for
// rows 1..n only, sorted by (row, column), with zero entries dropped.
class PeriodicMatrix {
public:
    struct Entry {
        int i, j, a;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    PeriodicMatrix() : n_(1) {}
    explicit PeriodicMatrix(int n);
    static PeriodicMatrix from_entries(int n, const std::vector<Entry>& entries);
    static PeriodicMatrix diag(const DimVector& lambda);
    // E^{periodic}_{i,j}.
    static PeriodicMatrix elementary(int n, int i, int j, int a = 1);

    int n() const { return n_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    int at(int i, int j) const;
    void add(int i, int j, int a);
    PeriodicMatrix plus(int i, int j, int a) const {
        PeriodicMatrix m = *this;
        m.add(i, j, a);
        return m;
    }

    DimVector ro() const;
    DimVector co() const;
    int sum() const;  // sigma(A)
    int bandwidth() const;  // max |j - i| over nonzero entries
    bool nonneg() const;
    bool is_upper() const;  // strictly upper triangular
    bool is_lower() const;
    bool is_offdiag() const;  // zero diagonal
    bool is_diagonal() const;
    PeriodicMatrix transpose() const;
    PeriodicMatrix upper() const;  // A^+
    PeriodicMatrix lower() const;  // A^-
    PeriodicMatrix offdiag() const;  // A^+ + A^-
    DimVector diagonal() const;
    PeriodicMatrix operator+(const PeriodicMatrix& o) const;
    PeriodicMatrix operator-(const PeriodicMatrix& o) const;
    PeriodicMatrix scaled(int c) const;

    friend bool operator==(const PeriodicMatrix& a, const PeriodicMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const PeriodicMatrix& a, const PeriodicMatrix& b) { return !(a == b); }
    friend bool operator<(const PeriodicMatrix& a, const PeriodicMatrix& b);
    std::size_t hash() const;

    // Text form "{(i,j):a,...}" and the n x (column window) display used in reports.
    std::string to_string() const;
    static PeriodicMatrix parse(int n, const std::string& s);

private:
    int n_;
    std::vector<Entry> entries_;
};

}  // namespace affschur

template <>
struct std::hash<affschur::PeriodicMatrix> {
    std::size_t operator()(const affschur::PeriodicMatrix& m) const { return m.hash(); }
};

namespace affschur {

// ---- nilpotent representations of the cyclic quiver ----

struct Segment {
    int i;  // top vertex in [1, n]
    int l;  // length >= 1
};

DimVector dim_vector(const PeriodicMatrix& A);
int total_dim(const PeriodicMatrix& A);  // frak d(A)
int euler_form(const DimVector& a, const DimVector& b);
int sym_euler(const DimVector& a, const DimVector& b);

// dim Hom(S_i[l], S_j[m]).
int hom_dim_indec(int n, int i, int l, int j, int m);
int hom_dim(const PeriodicMatrix& A, const PeriodicMatrix& B);
int end_dim(const PeriodicMatrix& A);
int ext_dim(const PeriodicMatrix& A, const PeriodicMatrix& B);
LaurentPoly aut_poly(const PeriodicMatrix& A);
DimVector socle(const PeriodicMatrix& A);
bool is_socle_squarefree(const PeriodicMatrix& A);
PeriodicMatrix ar_translate(const PeriodicMatrix& A);

long sigma_ij(const PeriodicMatrix& A, int i, int j);
bool preceq(const PeriodicMatrix& B, const PeriodicMatrix& A);
bool prec(const PeriodicMatrix& B, const PeriodicMatrix& A);  // strict version
bool deg_leq(const PeriodicMatrix& B, const PeriodicMatrix& A);
bool is_aperiodic(const PeriodicMatrix& A);

std::vector<Segment> segments(const PeriodicMatrix& A);
PeriodicMatrix from_segments(int n, const std::vector<Segment>& segs);
PeriodicMatrix semisimple(const DimVector& lambda);  // A_lambda = sum lambda_i E_{i,i+1}
std::string multisegment_string(const PeriodicMatrix& A);
PeriodicMatrix parse_multisegment(int n, const std::string& s);

// All A in Theta^+ with the given dimension vector, in a deterministic order.
std::vector<PeriodicMatrix> theta_plus_with_dim(const DimVector& d);
// All A in Theta^+ with 1 <= frak d(A) <= max_dim (and 0 when include_zero).
std::vector<PeriodicMatrix> theta_plus_up_to(int n, int max_dim, bool include_zero = false);

}  // namespace affschur
