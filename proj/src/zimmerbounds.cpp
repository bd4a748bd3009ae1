#include "zimt/zimmerbounds.hpp"

#include <algorithm>
#include <map>

namespace zimt::zimmerbounds {

using catalogue::Family;
using rootkit::RootSystem;

namespace {

// Everything the subset sweep needs, precomputed once per descriptor.
struct Profile {
    int rank = 0;
    std::uint64_t full = 0;
    // Negative coarse classes: support mask of the representative and r0 value.
    std::vector<std::pair<std::uint64_t, Int>> neg_classes;
    std::vector<std::uint64_t> adjacency;  // Dynkin neighbours per node
    std::optional<std::uint64_t> refined_mask;  // pi_Q = {alpha_2..alpha_n} when applicable
    Int refined_value = 0;
};

bool refined_family_applies(const GroupDescriptor& d) {
    const auto& s = d.spec;
    switch (s.family) {
        case Family::SU:
            return s.params[0] >= 3 && s.params[1] >= 3 && !(s.params[0] == 3 && s.params[1] == 3);
        case Family::Sp_pq: return s.params[0] >= 3 && s.params[1] >= 3;
        case Family::SOstar: return s.params[0] >= 7;  // SO*(2N), N = m+n with m in {n, n+1}, (3,3) excluded
        default: return false;
    }
}

Profile make_profile(const GroupDescriptor& d, const catalogue::Store& store) {
    const RootSystem& rs = *d.restricted;
    Profile p;
    p.rank = rs.rank;
    p.full = (std::uint64_t{1} << rs.rank) - 1;
    for (const auto& c : rootkit::coarse_classes(rs)) {
        const int idx = rs.index(c.representative);
        if (rs.heights[static_cast<std::size_t>(idx)] > 0) continue;
        Int dim = 0;
        for (const Vec& m : c.members) dim += d.mult(m);
        p.neg_classes.emplace_back(rs.supports[static_cast<std::size_t>(idx)], dim == 1 ? 1 : 2);
    }
    p.adjacency.assign(static_cast<std::size_t>(rs.rank), 0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j)
            if (i != j && rootkit::simple_adjacent(rs, i, j))
                p.adjacency[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    if (refined_family_applies(d)) {
        p.refined_mask = p.full & ~std::uint64_t{1};
        std::vector<int> delta;
        for (int i = 2; i <= rs.rank; ++i) delta.push_back(i);
        p.refined_value = repdim::n_of_subalgebra(d, delta, store).n + 1;
    }
    return p;
}

Int r0_for_mask(const Profile& p, std::uint64_t mask) {
    Int total = 0;
    for (const auto& [support, r0] : p.neg_classes)
        if ((support & ~mask) != 0) total += r0;
    return total;
}

std::vector<std::uint64_t> components_of(const Profile& p, std::uint64_t mask) {
    std::vector<std::uint64_t> comps;
    std::uint64_t remaining = mask;
    while (remaining) {
        std::uint64_t seed = remaining & (~remaining + 1);
        std::uint64_t comp = seed, frontier = seed;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= p.adjacency[static_cast<std::size_t>(v)] & mask & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        remaining &= ~comp;
    }
    std::sort(comps.begin(), comps.end(),
              [](std::uint64_t a, std::uint64_t b) { return __builtin_ctzll(a) < __builtin_ctzll(b); });
    return comps;
}

}  // namespace

std::optional<Int> superrigidity_bound(const GroupDescriptor& d, std::uint64_t pi_mask,
                                       const std::vector<int>& delta) {
    const auto comps = flagcalc::dynkin_components(d, pi_mask);
    std::vector<int> sorted = delta;
    std::sort(sorted.begin(), sorted.end());
    bool is_component = false;
    for (const auto& c : comps)
        if (c == sorted) {
            is_component = true;
            break;
        }
    if (!is_component) throw DomainError("Delta is not a connected component of pi_Q");
    if (sorted.size() < 2) return std::nullopt;
    const Int outside = d.restricted->rank - static_cast<Int>(sorted.size());
    return outside * repdim::n_of_subalgebra(d, sorted).n;
}

std::optional<Int> refined_bound(const GroupDescriptor& d, std::uint64_t pi_mask) {
    if (!refined_family_applies(d)) return std::nullopt;
    const std::uint64_t want = ((std::uint64_t{1} << d.restricted->rank) - 1) & ~std::uint64_t{1};
    if (pi_mask != want) return std::nullopt;
    std::vector<int> delta;
    for (int i = 2; i <= d.restricted->rank; ++i) delta.push_back(i);
    return repdim::n_of_subalgebra(d, delta).n + 1;
}

BoundReport s_lower(const GroupDescriptor& d, bool keep_rows) {
    const RootSystem& rs = *d.restricted;
    if (rs.rank > kMaxEnumerationRank)
        throw DomainError("s_lower: rank " + std::to_string(rs.rank) + " exceeds the enumeration cap " +
                          std::to_string(kMaxEnumerationRank));
    const catalogue::Store& store = catalogue::default_store();
    const Profile p = make_profile(d, store);

    // n(g_Delta) per component mask, resolved lazily and cached.
    std::map<std::uint64_t, Int> n_cache;
    auto n_for_component = [&](std::uint64_t comp) -> Int {
        auto it = n_cache.find(comp);
        if (it != n_cache.end()) return it->second;
        std::vector<int> delta;
        for (int i = 0; i < p.rank; ++i)
            if (comp & (std::uint64_t{1} << i)) delta.push_back(i + 1);
        Int n = repdim::n_of_subalgebra(d, delta, store).n;
        n_cache.emplace(comp, n);
        return n;
    };

    BoundReport report;
    bool first = true;
    for (std::uint64_t mask = 0; mask < p.full; ++mask) {
        const Int r0 = r0_for_mask(p, mask);
        Int effective = r0;
        SubsetRow row;
        if (keep_rows) {
            row.pi_mask = mask;
            row.r0 = r0;
        }
        for (std::uint64_t comp : components_of(p, mask)) {
            const int size = __builtin_popcountll(comp);
            std::optional<Int> value;
            if (size >= 2) {
                value = (p.rank - size) * n_for_component(comp);
                effective = std::max(effective, *value);
            }
            if (keep_rows) {
                ComponentBound cb;
                for (int i = 0; i < p.rank; ++i)
                    if (comp & (std::uint64_t{1} << i)) cb.delta.push_back(i + 1);
                cb.value = value;
                if (size >= 2) {
                    std::vector<int> delta = cb.delta;
                    cb.identified = repdim::n_of_subalgebra(d, delta, store).description;
                }
                row.superrigidity.push_back(std::move(cb));
            }
        }
        if (p.refined_mask && mask == *p.refined_mask) {
            effective = std::max(effective, p.refined_value);
            if (keep_rows) row.refined = p.refined_value;
        }
        if (keep_rows) {
            row.effective = effective;
            report.rows.push_back(std::move(row));
        }
        if (first || effective < report.s_lower) {
            report.s_lower = effective;
            report.argmin = {mask};
            first = false;
        } else if (effective == report.s_lower) {
            report.argmin.push_back(mask);
        }
    }
    return report;
}

bool small_multiplicity_check(const GroupDescriptor& d) {
    for (const auto& c : rootkit::coarse_classes(*d.restricted))
        if (d.class_dim(c) > 2) return false;
    return true;
}

std::optional<Int> s_closed_form(const GroupSpec& spec, const catalogue::Store& store) {
    auto v_engine = [&]() { return flagcalc::v_of_group(catalogue::describe(spec, store)); };
    switch (spec.family) {
        case Family::SL_C:
        case Family::Sp_C:
        case Family::SO_C:
        case Family::E6:
        case Family::E7:
        case Family::E8:
        case Family::F4:
        case Family::G2:
        case Family::EII:
            return v_engine();  // s(G) = v(G) for complex groups and EII
        case Family::SL_H: {
            const Int n = spec.params[0];
            if (n >= 5) return 4 * n - 4;
            return n == 4 ? Int{8} : Int{4};
        }
        case Family::SOplus: {
            const Int m = spec.params[0], n = spec.params[1];
            if (m <= n + 1) return v_engine();  // split forms: r0 already reaches v
            if (n >= 3) return std::min(m + n - 2, n * (n + 3) / 2);
            return Int{4};  // n = 2, m >= 4
        }
        case Family::SU: {
            const Int m = spec.params[0], n = spec.params[1];
            if (m == 2 && n == 2) return Int{4};
            if (m == n) return std::min(4 * n - 3, n * n);
            return std::min(2 * m + 2 * n - 3, n * (n + 1));
        }
        case Family::Sp_pq: {
            const Int m = spec.params[0], n = spec.params[1];
            return std::min(4 * m + 4 * n - 7, n * (n + 1));
        }
        case Family::SOstar: {
            const Int n = spec.params[0];  // SO*(2n)
            return std::min(4 * n - 7, (n * n) / 4);
        }
    }
    return std::nullopt;
}

std::vector<ParamPoint> theorem_range(TheoremCase tc, Int max_param,
                                      const catalogue::Store& store) {
    std::vector<ParamPoint> out;
    auto admit = [&](const GroupSpec& spec, ParamPoint pt, Int slack) {
        auto s = s_closed_form(spec, store);
        if (!s) return;
        const Int v = flagcalc::v_of_group(catalogue::describe(spec, store));
        if (*s >= v - slack) out.push_back(pt);
    };
    switch (tc) {
        case TheoremCase::SL_H:
            for (Int n = 3; n <= max_param; ++n) admit({Family::SL_H, {n}}, {0, n}, 0);
            break;
        case TheoremCase::SOplus:
            // n = 2 row (side condition m >= 4), then 3 <= n < m.
            for (Int m = 4; m <= max_param; ++m) admit({Family::SOplus, {m, 2}}, {m, 2}, 0);
            for (Int n = 3; n <= max_param; ++n)
                for (Int m = n + 1; m <= max_param; ++m)
                    admit({Family::SOplus, {m, n}}, {m, n}, 0);
            break;
        case TheoremCase::SU:
            for (Int n = 2; n <= max_param; ++n)
                for (Int m = n; m <= max_param; ++m) admit({Family::SU, {m, n}}, {m, n}, 0);
            break;
        case TheoremCase::SOstar:
            for (Int n = 4; n <= max_param; ++n) admit({Family::SOstar, {n}}, {0, n}, 0);
            break;
        case TheoremCase::Sp_v_minus_2:
            for (Int n = 2; n <= max_param; ++n)
                for (Int m = n; m <= max_param; ++m) admit({Family::Sp_pq, {m, n}}, {m, n}, 2);
            break;
    }
    return out;
}

}  // namespace zimt::zimmerbounds
