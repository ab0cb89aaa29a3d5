#pragma once
// Independent reference computations used only by the test suite.

#include <gmpxx.h>

#include <vector>

#include "affschur/quiver_rep.hpp"

namespace oracle {

using affschur::PeriodicMatrix;

// Explicit representation: for each vertex k (0-based) a list of basis vector ids, and the
// arrow as a map from basis id to basis id (or -1 for zero).
struct ExplicitRep {
    int n = 0;
    std::vector<std::vector<int>> basis;  // basis[k] = ids at vertex k
    std::vector<int> vertex;              // vertex of id
    std::vector<int> next;                // arrow image of id, -1 if zero
};

inline ExplicitRep build_rep(const PeriodicMatrix& A) {
    ExplicitRep R;
    R.n = A.n();
    R.basis.assign(static_cast<std::size_t>(R.n), {});
    for (const auto& s : affschur::segments(A)) {
        int first = static_cast<int>(R.vertex.size());
        for (int t = 0; t < s.l; ++t) {
            int k = affschur::mod1(s.i + t, R.n) - 1;
            R.basis[static_cast<std::size_t>(k)].push_back(first + t);
            R.vertex.push_back(k);
            R.next.push_back(t + 1 < s.l ? first + t + 1 : -1);
        }
    }
    return R;
}

// Rank of a rational matrix by Gaussian elimination.
inline int rank_q(std::vector<std::vector<mpq_class>> M) {
    int rows = static_cast<int>(M.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(M[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M[static_cast<std::size_t>(p)], M[static_cast<std::size_t>(r)]);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            mpq_class f = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                          M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int k = c; k < cols; ++k)
                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -=
                    f * M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        }
        ++r;
    }
    return r;
}

// Linear equations phi_{k+1} f_k = g_k phi_k for a graded map phi: M -> N.
// Unknowns are phi entries (target id, source id) with equal vertices.
struct HomSystem {
    std::vector<std::pair<int, int>> unknowns;
    std::vector<std::vector<mpq_class>> equations;
};

inline HomSystem hom_system(const ExplicitRep& M, const ExplicitRep& N) {
    HomSystem S;
    std::vector<std::vector<int>> idx(M.vertex.size(), std::vector<int>(N.vertex.size(), -1));
    for (std::size_t a = 0; a < M.vertex.size(); ++a)
        for (std::size_t b = 0; b < N.vertex.size(); ++b)
            if (M.vertex[a] == N.vertex[b]) {
                idx[a][b] = static_cast<int>(S.unknowns.size());
                S.unknowns.emplace_back(static_cast<int>(b), static_cast<int>(a));
            }
    // For each source basis vector a and each target vector c at the next vertex,
    // (phi f)(a)_c - (g phi)(a)_c = 0.
    for (std::size_t a = 0; a < M.vertex.size(); ++a) {
        int nv = (M.vertex[a] + 1) % M.n;
        for (int c : N.basis[static_cast<std::size_t>(nv)]) {
            std::vector<mpq_class> row(S.unknowns.size(), 0);
            if (M.next[a] >= 0) {
                int u = idx[static_cast<std::size_t>(M.next[a])][static_cast<std::size_t>(c)];
                if (u >= 0) row[static_cast<std::size_t>(u)] += 1;
            }
            for (std::size_t b = 0; b < N.vertex.size(); ++b)
                if (N.next[b] == c && idx[a][b] >= 0) row[static_cast<std::size_t>(idx[a][b])] -= 1;
            S.equations.push_back(std::move(row));
        }
    }
    return S;
}

inline int hom_dim_solver(const PeriodicMatrix& A, const PeriodicMatrix& B) {
    ExplicitRep M = build_rep(A), N = build_rep(B);
    HomSystem S = hom_system(M, N);
    if (S.unknowns.empty()) return 0;
    return static_cast<int>(S.unknowns.size()) - rank_q(S.equations);
}

// Socle dimension vector: kernel of the arrow at each vertex.
inline affschur::DimVector socle_explicit(const PeriodicMatrix& A) {
    ExplicitRep M = build_rep(A);
    affschur::DimVector s(static_cast<std::size_t>(A.n()), 0);
    for (std::size_t a = 0; a < M.vertex.size(); ++a)
        if (M.next[a] < 0) s[static_cast<std::size_t>(M.vertex[a])]++;
    return s;
}

// Number of automorphisms of M(A) over F_p, by enumerating the endomorphism space.
inline long count_automorphisms(const PeriodicMatrix& A, int p) {
    ExplicitRep M = build_rep(A);
    HomSystem S = hom_system(M, M);
    int nu = static_cast<int>(S.unknowns.size());
    // Row-reduce mod p to get a basis of the solution space.
    std::vector<std::vector<long>> E;
    for (auto& row : S.equations) {
        std::vector<long> r(static_cast<std::size_t>(nu));
        for (int k = 0; k < nu; ++k) r[static_cast<std::size_t>(k)] = ((row[static_cast<std::size_t>(k)].get_num().get_si() % p) + p) % p;
        E.push_back(r);
    }
    auto inv = [p](long x) {
        long r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivcol;
    int rr = 0;
    for (int c = 0; c < nu && rr < static_cast<int>(E.size()); ++c) {
        int piv = -1;
        for (int i = rr; i < static_cast<int>(E.size()); ++i)
            if (E[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(E[static_cast<std::size_t>(piv)], E[static_cast<std::size_t>(rr)]);
        long iv = inv(E[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)]);
        for (auto& x : E[static_cast<std::size_t>(rr)]) x = x * iv % p;
        for (int i = 0; i < static_cast<int>(E.size()); ++i) {
            if (i == rr) continue;
            long f = E[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (!f) continue;
            for (int k = 0; k < nu; ++k)
                E[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    ((E[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] - f * E[static_cast<std::size_t>(rr)][static_cast<std::size_t>(k)]) % p + p) % p;
        }
        pivcol.push_back(c);
        ++rr;
    }
    std::vector<int> freecols;
    for (int c = 0; c < nu; ++c)
        if (std::find(pivcol.begin(), pivcol.end(), c) == pivcol.end()) freecols.push_back(c);
    long total = 1;
    for (std::size_t k = 0; k < freecols.size(); ++k) total *= p;
    long count = 0;
    int dimM = static_cast<int>(M.vertex.size());
    for (long code = 0; code < total; ++code) {
        std::vector<long> x(static_cast<std::size_t>(nu), 0);
        long c = code;
        for (int f : freecols) {
            x[static_cast<std::size_t>(f)] = c % p;
            c /= p;
        }
        for (int i = rr - 1; i >= 0; --i) {
            long s = 0;
            for (int f : freecols) s += E[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)] * x[static_cast<std::size_t>(f)];
            x[static_cast<std::size_t>(pivcol[static_cast<std::size_t>(i)])] = ((-s) % p + p) % p;
        }
        // Assemble the full matrix and test invertibility by the determinant mod p.
        std::vector<std::vector<long>> Mat(static_cast<std::size_t>(dimM), std::vector<long>(static_cast<std::size_t>(dimM), 0));
        for (int u = 0; u < nu; ++u) {
            auto [b, a] = S.unknowns[static_cast<std::size_t>(u)];
            Mat[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = x[static_cast<std::size_t>(u)];
        }
        bool ok = true;
        for (int col = 0; col < dimM && ok; ++col) {
            int piv = -1;
            for (int i = col; i < dimM; ++i)
                if (Mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]) {
                    piv = i;
                    break;
                }
            if (piv < 0) {
                ok = false;
                break;
            }
            std::swap(Mat[static_cast<std::size_t>(piv)], Mat[static_cast<std::size_t>(col)]);
            long iv = inv(Mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)]);
            for (int i = col + 1; i < dimM; ++i) {
                long f = Mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] * iv % p;
                if (!f) continue;
                for (int k = col; k < dimM; ++k)
                    Mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                        ((Mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] - f * Mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)]) % p + p) % p;
            }
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace oracle
