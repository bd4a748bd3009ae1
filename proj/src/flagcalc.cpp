#include "zimt/flagcalc.hpp"

#include <algorithm>

namespace zimt::flagcalc {

using rootkit::RootSystem;

std::uint64_t mask_from_indices(const std::vector<int>& indices_1based, int rank) {
    std::uint64_t mask = 0;
    for (int i : indices_1based) {
        if (i < 1 || i > rank) throw DomainError("simple-root index out of range");
        mask |= std::uint64_t{1} << (i - 1);
    }
    return mask;
}

std::vector<int> indices_from_mask(std::uint64_t mask, int rank) {
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
        if (mask & (std::uint64_t{1} << i)) out.push_back(i + 1);
    return out;
}

namespace {

void check_mask(const RootSystem& rs, std::uint64_t mask) {
    if (rs.rank < 64 && (mask >> rs.rank) != 0)
        throw DomainError("simple-root index out of range");
}

// A root lies in span(Pi_Q) exactly when its simple-basis support is inside
// pi_Q (the support of a root is connected to its expansion signs, so no
// rational span test is needed beyond this).
bool in_span(const RootSystem& rs, int root_index, std::uint64_t mask) {
    return (rs.supports[static_cast<std::size_t>(root_index)] & ~mask) == 0;
}

}  // namespace

ParabolicSubset parabolic(const GroupDescriptor& d, std::uint64_t pi_mask) {
    const RootSystem& rs = *d.restricted;
    check_mask(rs, pi_mask);
    ParabolicSubset pq;
    pq.pi_mask = pi_mask;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        const int idx = static_cast<int>(i);
        if (rs.heights[i] > 0 || in_span(rs, idx, pi_mask)) pq.sigma_q.push_back(idx);
        else pq.missing_roots.push_back(idx);
    }
    // Class members share support and sign, so the representative decides.
    for (int rep : rs.class_reps)
        if (rs.heights[static_cast<std::size_t>(rep)] < 0 && !in_span(rs, rep, pi_mask))
            pq.missing_classes.push_back(rs.roots[static_cast<std::size_t>(rep)]);
    return pq;
}

ParabolicSubset parabolic(const GroupDescriptor& d, const std::vector<int>& pi_q_1based) {
    return parabolic(d, mask_from_indices(pi_q_1based, d.restricted->rank));
}

Int flag_codimension(const GroupDescriptor& d, const ParabolicSubset& pq) {
    Int total = 0;
    for (int i : pq.missing_roots) total += d.mult(d.restricted->roots[static_cast<std::size_t>(i)]);
    return total;
}

namespace {

template <typename F>
Int min_over_maximal_subsets(const GroupDescriptor& d, F&& value) {
    const int rank = d.restricted->rank;
    const std::uint64_t full = rank == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1;
    Int best = 0;
    bool first = true;
    for (int i = 0; i < rank; ++i) {
        Int v = value(full & ~(std::uint64_t{1} << i));
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

}  // namespace

Int v_of_group(const GroupDescriptor& d) {
    return min_over_maximal_subsets(
        d, [&](std::uint64_t mask) { return flag_codimension(d, parabolic(d, mask)); });
}

Int r_of_group(const GroupDescriptor& d) {
    return min_over_maximal_subsets(d, [&](std::uint64_t mask) {
        return static_cast<Int>(parabolic(d, mask).missing_classes.size());
    });
}

Int r0_of_class(const GroupDescriptor& d, const rootkit::CoarseClass& c) {
    return d.class_dim(c) == 1 ? 1 : 2;
}

Int r0_of_parabolic(const GroupDescriptor& d, const ParabolicSubset& pq) {
    const RootSystem& rs = *d.restricted;
    Int total = 0;
    for (const Vec& rep : pq.missing_classes) {
        rootkit::CoarseClass c;
        c.representative = rep;
        c.members.push_back(rep);
        if (rs.contains(Vec(2 * rep))) c.members.push_back(2 * rep);
        total += r0_of_class(d, c);
    }
    return total;
}

Int r0_of_group(const GroupDescriptor& d) {
    return min_over_maximal_subsets(
        d, [&](std::uint64_t mask) { return r0_of_parabolic(d, parabolic(d, mask)); });
}

std::vector<std::vector<int>> dynkin_components(const GroupDescriptor& d, std::uint64_t pi_mask) {
    const RootSystem& rs = *d.restricted;
    check_mask(rs, pi_mask);
    const int rank = rs.rank;
    std::vector<int> nodes;
    for (int i = 0; i < rank; ++i)
        if (pi_mask & (std::uint64_t{1} << i)) nodes.push_back(i);
    std::vector<char> visited(static_cast<std::size_t>(rank), 0);
    std::vector<std::vector<int>> components;
    for (int start : nodes) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        visited[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v + 1);
            for (int u : nodes)
                if (!visited[static_cast<std::size_t>(u)] && rootkit::simple_adjacent(rs, v, u)) {
                    visited[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

std::vector<std::vector<int>> dynkin_components(const GroupDescriptor& d,
                                                const std::vector<int>& pi_q_1based) {
    return dynkin_components(d, mask_from_indices(pi_q_1based, d.restricted->rank));
}

}  // namespace zimt::flagcalc
