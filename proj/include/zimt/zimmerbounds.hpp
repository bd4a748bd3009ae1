#pragma once

// The combined lower bound s_lower(G): for every proper subset Pi_Q of the
// simple roots, the best of the r0 count, the per-component superrigidity
// bounds |Pi \ Delta| n(g_Delta), and the refined n(g_Delta) + 1 bound; then
// the minimum over subsets.  Also the closed forms these reproduce and the
// parameter ranges they certify.

#include "zimt/catalogue.hpp"
#include "zimt/common.hpp"
#include "zimt/flagcalc.hpp"
#include "zimt/repdim.hpp"

#include <optional>
#include <vector>

namespace zimt::zimmerbounds {

using catalogue::GroupDescriptor;
using catalogue::GroupSpec;

inline constexpr int kMaxEnumerationRank = 20;  // full 2^rank subset sweep beyond this is refused

struct ComponentBound {
    std::vector<int> delta;  // 1-based simple indices, ascending
    std::optional<Int> value;  // |Pi \ Delta| * n(g_Delta); nullopt when |Delta| < 2
    std::string identified;
};

struct SubsetRow {
    std::uint64_t pi_mask = 0;
    Int r0 = 0;
    std::vector<ComponentBound> superrigidity;
    std::optional<Int> refined;
    Int effective = 0;
};

struct BoundReport {
    Int s_lower = 0;
    std::vector<std::uint64_t> argmin;  // subsets attaining s_lower, ascending
    std::vector<SubsetRow> rows;        // filled only when requested
};

// |Pi \ Delta| * n(g_Delta) for a connected component Delta of pi_Q with
// |Delta| >= 2; nullopt for singleton components.  DomainError if Delta is
// not a component of pi_Q.
std::optional<Int> superrigidity_bound(const GroupDescriptor& d, std::uint64_t pi_mask,
                                       const std::vector<int>& delta);

// n(g_Delta) + 1, applicable exactly for SU(m,n) (m>=n>=3, (m,n) != (3,3)),
// Sp(m,n) (m>=n>=3) and SO*(2N) (N>=7) when pi_Q = {alpha_2..alpha_n}.
std::optional<Int> refined_bound(const GroupDescriptor& d, std::uint64_t pi_mask);

BoundReport s_lower(const GroupDescriptor& d, bool keep_rows = false);

// True iff every coarse class has total multiplicity <= 2.
bool small_multiplicity_check(const GroupDescriptor& d);

// The proven closed form for the s(G) lower bound, where one exists: the five
// classical real families, complex simple groups (= v(G)) and EII (= v(G)).
std::optional<Int> s_closed_form(const GroupSpec& spec,
                                 const catalogue::Store& store = catalogue::default_store());

enum class TheoremCase { SL_H, SOplus, SU, SOstar, Sp_v_minus_2 };

struct ParamPoint {
    Int m = 0;  // 0 for one-parameter families
    Int n = 0;
    bool operator==(const ParamPoint&) const = default;
};

// Parameters within the case's grid (two-parameter families: n <= m <= max;
// one-parameter: n <= max) where s_lower(G) >= v(G), or >= v(G) - 2 for the
// Sp variant.  Evaluated via the closed forms plus the computed v(G).
std::vector<ParamPoint> theorem_range(TheoremCase tc, Int max_param,
                                      const catalogue::Store& store = catalogue::default_store());

}  // namespace zimt::zimmerbounds
