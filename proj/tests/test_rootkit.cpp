#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zimt/exactlin.hpp"
#include "zimt/rootkit.hpp"

#include <set>

using namespace zimt;
using rootkit::TypeLabel;

namespace {

Vec ev(std::initializer_list<Int> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (Int x : xs) v[i++] = x;
    return v;
}

std::vector<rootkit::RootSystemPtr> small_systems() {
    std::vector<rootkit::RootSystemPtr> out;
    for (int r = 1; r <= 5; ++r) out.push_back(rootkit::build_root_system(TypeLabel::A, r));
    for (int r = 2; r <= 5; ++r) {
        out.push_back(rootkit::build_root_system(TypeLabel::B, r));
        out.push_back(rootkit::build_root_system(TypeLabel::C, r));
    }
    for (int r = 3; r <= 5; ++r) out.push_back(rootkit::build_root_system(TypeLabel::D, r));
    for (int r = 1; r <= 4; ++r) out.push_back(rootkit::build_root_system(TypeLabel::BC, r));
    out.push_back(rootkit::build_root_system(TypeLabel::G2, 2));
    out.push_back(rootkit::build_root_system(TypeLabel::F4, 4));
    out.push_back(rootkit::build_root_system(TypeLabel::E6, 6));
    out.push_back(rootkit::build_root_system(TypeLabel::E7, 7));
    out.push_back(rootkit::build_root_system(TypeLabel::E8, 8));
    return out;
}

std::size_t expected_count(const rootkit::RootSystem& rs) {
    const std::size_t r = static_cast<std::size_t>(rs.rank);
    switch (rs.type) {
        case TypeLabel::A: return r * (r + 1);
        case TypeLabel::B:
        case TypeLabel::C: return 2 * r * r;
        case TypeLabel::BC: return 2 * r * r + 2 * r;
        case TypeLabel::D: return 2 * r * (r - 1);
        case TypeLabel::G2: return 12;
        case TypeLabel::F4: return 48;
        case TypeLabel::E6: return 72;
        case TypeLabel::E7: return 126;
        case TypeLabel::E8: return 240;
    }
    return 0;
}

}  // namespace

TEST_CASE("root counts per type") {
    for (const auto& rs : small_systems()) {
        CAPTURE(rootkit::to_string(rs->type));
        CAPTURE(rs->rank);
        CHECK(rs->roots.size() == expected_count(*rs));
    }
    CHECK(rootkit::build_root_system(TypeLabel::A, 2)->roots.size() == 6);
    CHECK(rootkit::build_root_system(TypeLabel::BC, 2)->roots.size() == 12);
    CHECK(rootkit::build_root_system(TypeLabel::B, 3)->roots.size() == 18);
}

TEST_CASE("invalid type/rank combinations are rejected") {
    CHECK_THROWS_AS(rootkit::build_root_system(TypeLabel::D, 2), ConstructionError);
    CHECK_THROWS_AS(rootkit::build_root_system(TypeLabel::B, 1), ConstructionError);
    CHECK_THROWS_AS(rootkit::build_root_system(TypeLabel::BC, 0), ConstructionError);
    CHECK_THROWS_AS(rootkit::build_root_system(TypeLabel::G2, 3), ConstructionError);
    CHECK_THROWS_AS(rootkit::build_root_system(TypeLabel::E6, 5), ConstructionError);
}

TEST_CASE("structural invariants") {
    for (const auto& rsp : small_systems()) {
        const auto& rs = *rsp;
        CAPTURE(rootkit::to_string(rs.type));
        CAPTURE(rs.rank);

        // Closed under negation.
        for (const Vec& r : rs.roots) CHECK(rs.contains(Vec(-r)));

        // Reflection closure, exact.
        for (const Vec& a : rs.roots)
            for (const Vec& b : rs.roots) CHECK(rs.contains(rs.reflect(a, b)));

        // Doubling pattern: 2b is a root only in BC, and only for the short e_i.
        for (const Vec& r : rs.roots) {
            const bool doubled = rs.contains(Vec(2 * r));
            if (rs.type != TypeLabel::BC) CHECK_FALSE(doubled);
            else CHECK(doubled == (rs.sqnorm(r) == 1));
        }

        // Height additivity where the sum is a root.
        for (const Vec& a : rs.roots)
            for (const Vec& b : rs.roots) {
                Vec sum = a + b;
                if (rs.contains(sum))
                    CHECK(rootkit::height(rs, sum) ==
                          rootkit::height(rs, a) + rootkit::height(rs, b));
            }
    }
}

TEST_CASE("height examples") {
    const auto a2 = rootkit::build_root_system(TypeLabel::A, 2);
    CHECK(rootkit::height(*a2, ev({1, 0, -1})) == 2);  // a1 + a2
    for (const Vec& s : a2->simple) CHECK(rootkit::height(*a2, s) == 1);

    const auto c3 = rootkit::build_root_system(TypeLabel::C, 3);
    CHECK(rootkit::height(*c3, ev({2, 0, 0})) == 5);  // 2a1 + 2a2 + a3
    CHECK_THROWS_AS(rootkit::height(*c3, ev({3, 0, 0})), DomainError);
}

TEST_CASE("positive roots ordered by height") {
    const auto a2 = rootkit::build_root_system(TypeLabel::A, 2);
    const auto order = rootkit::positive_roots_by_height(*a2);
    REQUIRE(order.size() == 3);
    CHECK(order[0] == ev({1, 0, -1}));   // a1 + a2
    CHECK(order[1] == ev({1, -1, 0}));   // a1
    CHECK(order[2] == ev({0, 1, -1}));   // a2

    const auto a3 = rootkit::build_root_system(TypeLabel::A, 3);
    std::vector<Int> hts;
    for (const Vec& r : rootkit::positive_roots_by_height(*a3))
        hts.push_back(rootkit::height(*a3, r));
    CHECK(hts == std::vector<Int>{3, 2, 2, 1, 1, 1});

    const auto bc2 = rootkit::build_root_system(TypeLabel::BC, 2);
    const auto pos = rootkit::positive_roots_by_height(*bc2);
    CHECK(pos.size() == 6);
    CHECK(pos[0] == ev({2, 0}));  // 2e1 has the maximal height
    CHECK(rootkit::height(*bc2, pos[0]) == 4);

    // Non-increasing heights in every system.
    for (const auto& rs : small_systems()) {
        const auto order2 = rootkit::positive_roots_by_height(*rs);
        for (std::size_t i = 1; i < order2.size(); ++i)
            CHECK(rootkit::height(*rs, order2[i - 1]) >= rootkit::height(*rs, order2[i]));
    }
}

TEST_CASE("height filtration gives ideals") {
    const auto a2 = rootkit::build_root_system(TypeLabel::A, 2);
    CHECK(rootkit::filtration_is_ideal(*a2, 0));
    CHECK(rootkit::filtration_is_ideal(*a2, 1));
    CHECK_THROWS_AS(rootkit::filtration_is_ideal(*a2, 17), DomainError);

    const auto f4 = rootkit::build_root_system(TypeLabel::F4, 4);
    for (int k = 0; k <= 24; ++k) CHECK(rootkit::filtration_is_ideal(*f4, k));

    for (const auto& rs : small_systems())
        for (int k = 0; k <= static_cast<int>(rs->positive.size()); ++k)
            CHECK(rootkit::filtration_is_ideal(*rs, k));
}

TEST_CASE("coarse classes") {
    const auto a2 = rootkit::build_root_system(TypeLabel::A, 2);
    CHECK(rootkit::coarse_classes(*a2).size() == 6);

    const auto bc2 = rootkit::build_root_system(TypeLabel::BC, 2);
    const auto classes = rootkit::coarse_classes(*bc2);
    CHECK(classes.size() == 8);
    int doubles = 0;
    for (const auto& c : classes)
        if (c.members.size() == 2) ++doubles;
    CHECK(doubles == 4);  // [e1], [e2] and their negatives

    const auto c3 = rootkit::build_root_system(TypeLabel::C, 3);
    CHECK(rootkit::coarse_classes(*c3).size() == 18);  // 2 n^2 singletons

    for (const auto& rs : small_systems()) {
        std::size_t covered = 0;
        std::set<Vec, LexLess> reps;
        for (const auto& c : rootkit::coarse_classes(*rs)) {
            CHECK(c.members.size() <= 2);
            // Members are exactly the roots on the positive ray of the representative.
            for (const Vec& r : rs->roots) {
                bool proportional = false;
                for (Int k = 1; k <= 2; ++k)
                    if (r == Vec(k * c.representative)) proportional = true;
                const bool member =
                    std::find(c.members.begin(), c.members.end(), r) != c.members.end();
                CHECK(member == proportional);
            }
            // Mirror class of the negated representative exists.
            CHECK(rs->contains(Vec(-c.representative)));
            covered += c.members.size();
            reps.insert(c.representative);
        }
        CHECK(covered == rs->roots.size());
        CHECK(reps.size() == rootkit::coarse_classes(*rs).size());
    }
}

TEST_CASE("span complement rank") {
    const auto a2 = rootkit::build_root_system(TypeLabel::A, 2);
    CHECK(rootkit::span_complement_rank(*a2, rootkit::make_subspace({ev({1, -1, 0})})) == 2);

    const auto b3 = rootkit::build_root_system(TypeLabel::B, 3);
    CHECK(rootkit::span_complement_rank(*b3, rootkit::make_subspace({ev({1, 0, 0})})) == 3);

    CHECK_THROWS_AS(rootkit::span_complement_rank(*a2, rootkit::RootSubspace{}), DomainError);
    CHECK_THROWS_AS(rootkit::make_subspace({ev({1, -1, 0}), ev({2, -2, 0})}), ConstructionError);
}

TEST_CASE("span of roots off W and W-perp is everything (low rank, all simple subsets)") {
    std::vector<rootkit::RootSystemPtr> systems;
    for (int r = 2; r <= 3; ++r) {
        systems.push_back(rootkit::build_root_system(TypeLabel::A, r));
        systems.push_back(rootkit::build_root_system(TypeLabel::B, r));
        systems.push_back(rootkit::build_root_system(TypeLabel::BC, r));
    }
    systems.push_back(rootkit::build_root_system(TypeLabel::G2, 2));
    for (const auto& rs : systems) {
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << rs->rank); ++mask) {
            std::vector<Vec> basis;
            for (int i = 0; i < rs->rank; ++i)
                if (mask & (std::uint64_t{1} << i)) basis.push_back(rs->simple[static_cast<std::size_t>(i)]);
            CHECK(rootkit::span_complement_rank(*rs, rootkit::make_subspace(basis)) == rs->rank);
        }
    }
}

TEST_CASE("exact linear algebra helpers") {
    Mat m(3, 3);
    m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
    CHECK(exactlin::rank_of(m) == 2);
    CHECK(exactlin::in_row_span({ev({1, 0, 1}), ev({0, 1, 1})}, ev({2, 3, 5})));
    CHECK_FALSE(exactlin::in_row_span({ev({1, 0, 1})}, ev({1, 1, 1})));
}
