#pragma once

// Standard parabolic subgroups as subsets Pi_Q of the simple roots, and the
// invariants built from them: dim G/Q, v(G), r(G), r0([beta]), r0(Q), r0(G).
//
// A subset is passed as 1-based simple-root indices (matching the classical
// enumeration alpha_1..alpha_l) or as a bitmask with bit i-1 for alpha_i.

#include "zimt/catalogue.hpp"
#include "zimt/common.hpp"
#include "zimt/rootkit.hpp"

#include <vector>

namespace zimt::flagcalc {

using catalogue::GroupDescriptor;

std::uint64_t mask_from_indices(const std::vector<int>& indices_1based, int rank);
std::vector<int> indices_from_mask(std::uint64_t mask, int rank);

struct ParabolicSubset {
    std::uint64_t pi_mask = 0;
    std::vector<int> sigma_q;          // root indices with g_beta inside Lie(Q)
    std::vector<int> missing_roots;    // root indices of Sigma \ Sigma_Q (all negative)
    std::vector<Vec> missing_classes;  // indivisible representatives of missing coarse classes
};

ParabolicSubset parabolic(const GroupDescriptor& d, std::uint64_t pi_mask);
ParabolicSubset parabolic(const GroupDescriptor& d, const std::vector<int>& pi_q_1based);

// dim G/Q: total multiplicity over the missing roots.
Int flag_codimension(const GroupDescriptor& d, const ParabolicSubset& pq);

// Minimal codimension of a proper parabolic; the minimum over the rank-many
// maximal subsets Pi \ {alpha} (equal to the minimum over all proper subsets
// by monotonicity, which the test suite checks exhaustively at low rank).
Int v_of_group(const GroupDescriptor& d);

// Minimal resonant codimension: min |coarse classes outside Sigma_Q|.
Int r_of_group(const GroupDescriptor& d);

// 1 if dim g_{[beta]} = 1, else 2.
Int r0_of_class(const GroupDescriptor& d, const rootkit::CoarseClass& c);

Int r0_of_parabolic(const GroupDescriptor& d, const ParabolicSubset& pq);

Int r0_of_group(const GroupDescriptor& d);

// Connected components of the Dynkin graph restricted to pi_Q, each listed as
// ascending 1-based indices; components ordered by smallest index.
std::vector<std::vector<int>> dynkin_components(const GroupDescriptor& d, std::uint64_t pi_mask);
std::vector<std::vector<int>> dynkin_components(const GroupDescriptor& d,
                                                const std::vector<int>& pi_q_1based);

}  // namespace zimt::flagcalc
