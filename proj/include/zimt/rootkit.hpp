#pragma once

// Abstract (possibly non-reduced) root systems with exact integer arithmetic.
//
// Coordinates follow the classical models: A_l lives in Z^{l+1} as e_i - e_j,
// B/C/D/BC_n in Z^n, G2 in the sum-zero slice of Z^3.  E6/E7/E8 and F4 use the
// standard integral/half-integral models scaled by 2 so every coordinate stays
// an integer.  The Gram form is the standard inner product on the ambient
// lattice (a positive rescaling of the Killing-induced form, which is all the
// combinatorics ever needs).

#include "zimt/common.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace zimt::rootkit {

enum class TypeLabel { A, B, C, D, E6, E7, E8, F4, G2, BC };

std::string to_string(TypeLabel t);

struct RootSystem {
    TypeLabel type;
    int rank = 0;
    int ambient_dim = 0;
    Mat gram;                   // symmetric positive definite, integer entries
    std::vector<Vec> roots;     // all roots, sorted lexicographically
    std::vector<Vec> simple;    // ordered list Pi, per the classical enumeration

    // Aligned with `roots`:
    std::vector<Vec> coords;              // expansion in the simple basis
    std::vector<Int> heights;             // sum of simple coefficients
    std::vector<std::uint64_t> supports;  // bitmask of simple indices used

    std::vector<int> positive;  // indices into `roots`, ht-descending, lex-descending ties

    // Coarse proportionality classes: indices of the indivisible representatives
    // (lex order) and, aligned with them, the index of the doubled member or -1.
    std::vector<int> class_reps;
    std::vector<int> class_doubles;

    std::map<Vec, int, LexLess> index_of;
    bool gram_is_identity = false;

    bool contains(const Vec& v) const { return index_of.count(v) != 0; }
    int index(const Vec& v) const;  // throws DomainError if not a root
    Int dot(const Vec& a, const Vec& b) const {
        if (gram_is_identity) return a.dot(b);
        return (a.transpose() * gram * b)(0, 0);
    }
    Int sqnorm(const Vec& a) const { return dot(a, a); }
    Vec reflect(const Vec& alpha, const Vec& beta) const;  // sigma_alpha(beta)
};

// Shared immutable handle; systems are cached by (type, rank).
using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(TypeLabel type, int rank);

Int height(const RootSystem& rs, const Vec& beta);

// Positive roots sorted by non-increasing height (ties: lexicographically
// larger coordinate vector first).
std::vector<Vec> positive_roots_by_height(const RootSystem& rs);

// Root-level form of the statement that each u_k is an ideal of n: for
// beta_i (i <= k) and beta_j positive, beta_i + beta_j in Sigma implies
// beta_i + beta_j in {beta_1, ..., beta_k}.
bool filtration_is_ideal(const RootSystem& rs, int k);

struct CoarseClass {
    Vec representative;       // the indivisible member (rep/2 is not a root)
    std::vector<Vec> members; // {rep} or {rep, 2 rep}
};

// Partition of all roots into R_+-proportionality classes, keyed by the
// indivisible representative; deterministic order (representatives lex-sorted).
std::vector<CoarseClass> coarse_classes(const RootSystem& rs);

struct RootSubspace {
    std::vector<Vec> basis;  // linearly independent over Q
    int dimension = 0;
};

RootSubspace make_subspace(std::vector<Vec> basis);  // validates independence

// Rank of span(Sigma \ (W u W-perp)).  Requires rs irreducible and W nontrivial.
int span_complement_rank(const RootSystem& rs, const RootSubspace& w);

// Dynkin adjacency between simple roots i and j (0-based): <a_i, a_j> < 0.
bool simple_adjacent(const RootSystem& rs, int i, int j);

}  // namespace zimt::rootkit
