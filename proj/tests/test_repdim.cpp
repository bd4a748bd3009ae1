#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zimt/repdim.hpp"

using namespace zimt;
using catalogue::Family;
using catalogue::GroupSpec;
using repdim::DominantWeight;
using rootkit::TypeLabel;

namespace {

DominantWeight fw(int rank, std::initializer_list<std::pair<int, Int>> pairs) {
    DominantWeight w;
    w.coeffs.assign(static_cast<std::size_t>(rank), 0);
    for (auto [i, k] : pairs) w.coeffs[static_cast<std::size_t>(i - 1)] = k;
    return w;
}

BigInt wd(TypeLabel t, int rank, std::initializer_list<std::pair<int, Int>> pairs) {
    return repdim::weyl_dim(t, rank, fw(rank, pairs));
}

}  // namespace

TEST_CASE("weyl dimension formula: frozen values") {
    CHECK(wd(TypeLabel::A, 4, {{2, 1}}) == 10);
    CHECK(wd(TypeLabel::C, 4, {{1, 1}}) == 8);
    CHECK(wd(TypeLabel::D, 5, {{4, 1}}) == 16);
    CHECK(wd(TypeLabel::A, 2, {{1, 1}, {2, 1}}) == 8);  // adjoint of A2
    CHECK(wd(TypeLabel::C, 3, {{2, 1}}) == 14);
    CHECK(wd(TypeLabel::G2, 2, {{1, 1}}) == 7);
    CHECK(wd(TypeLabel::G2, 2, {{2, 1}}) == 14);
    CHECK(wd(TypeLabel::B, 2, {{2, 1}}) == 4);   // spin representation of so(5)
    CHECK(wd(TypeLabel::E6, 6, {{1, 1}}) == 27);
    CHECK(wd(TypeLabel::E7, 7, {{7, 1}}) == 56);
    CHECK(wd(TypeLabel::E8, 8, {{8, 1}}) == 248);
    CHECK(wd(TypeLabel::F4, 4, {{4, 1}}) == 26);
    for (Int l = 4; l <= 8; ++l)
        CHECK(wd(TypeLabel::A, static_cast<int>(l), {{1, 1}, {static_cast<int>(l), 1}}) ==
              l * (l + 2));
    // Trivial weight.
    for (TypeLabel t : {TypeLabel::A, TypeLabel::C, TypeLabel::D})
        CHECK(repdim::weyl_dim(t, 4, DominantWeight{{0, 0, 0, 0}}) == 1);
}

TEST_CASE("weyl dimension formula: domain errors") {
    CHECK_THROWS_AS(repdim::weyl_dim(TypeLabel::A, 3, DominantWeight{{1, -1, 0}}), DomainError);
    CHECK_THROWS_AS(repdim::weyl_dim(TypeLabel::A, 3, DominantWeight{{1, 0}}), DomainError);
    CHECK_THROWS_AS(repdim::weyl_dim(TypeLabel::BC, 3, DominantWeight{{1, 0, 0}}), DomainError);
}

TEST_CASE("freudenthal oracle equals the product formula") {
    CHECK(repdim::freudenthal_dim(TypeLabel::A, 2, fw(2, {{1, 1}, {2, 1}})) == 8);
    CHECK(repdim::freudenthal_dim(TypeLabel::C, 3, fw(3, {{2, 1}})) == 14);
    CHECK(repdim::freudenthal_dim(TypeLabel::A, 3, fw(3, {})) == 1);

    for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C}) {
        for (int rank = 2; rank <= 3; ++rank) {
            for (Int k1 = 0; k1 <= 2; ++k1)
                for (Int k2 = 0; k2 <= 2 - k1; ++k2) {
                    DominantWeight w;
                    w.coeffs.assign(static_cast<std::size_t>(rank), 0);
                    w.coeffs[0] = k1;
                    w.coeffs[1] = k2;
                    CAPTURE(rootkit::to_string(t) + std::to_string(rank));
                    CAPTURE(k1);
                    CAPTURE(k2);
                    CHECK(repdim::weyl_dim(t, rank, w) == repdim::freudenthal_dim(t, rank, w));
                }
        }
    }
    CHECK(repdim::weyl_dim(TypeLabel::G2, 2, fw(2, {{1, 1}, {2, 1}})) ==
          repdim::freudenthal_dim(TypeLabel::G2, 2, fw(2, {{1, 1}, {2, 1}})));
    CHECK(repdim::weyl_dim(TypeLabel::D, 4, fw(4, {{2, 1}})) ==
          repdim::freudenthal_dim(TypeLabel::D, 4, fw(4, {{2, 1}})));

    // Scale guard.
    CHECK_THROWS_AS(repdim::freudenthal_dim(TypeLabel::A, 5, fw(5, {{3, 3}}), 100), DomainError);
    CHECK_THROWS_AS(repdim::freudenthal_dim(TypeLabel::E7, 7, fw(7, {{1, 1}})), DomainError);
}

TEST_CASE("minimal nontrivial complex dimensions") {
    for (int l = 2; l <= 8; ++l) {
        auto r = repdim::min_nontrivial_complex_dim(TypeLabel::A, l);
        CHECK(r.dimension == l + 1);
        REQUIRE(r.minimizers.size() == (l == 1 ? 1u : 2u));
    }
    for (int l = 2; l <= 8; ++l) {
        auto r = repdim::min_nontrivial_complex_dim(TypeLabel::C, l);
        CHECK(r.dimension == 2 * l);
        CHECK(r.minimizers.size() == 1);
        CHECK(r.minimizers[0].coeffs[0] == 1);
    }
    for (int n = 5; n <= 8; ++n) {
        auto r = repdim::min_nontrivial_complex_dim(TypeLabel::D, n);
        CHECK(r.dimension == 2 * n);
        CHECK(r.minimizers.size() == 1);
    }
    // D4 triality: vector and both spin representations share dimension 8.
    auto d4 = repdim::min_nontrivial_complex_dim(TypeLabel::D, 4);
    CHECK(d4.dimension == 8);
    CHECK(d4.minimizers.size() == 3);
    // B2: the spin representation undercuts the vector one.
    auto b2 = repdim::min_nontrivial_complex_dim(TypeLabel::B, 2);
    CHECK(b2.dimension == 4);
    // Exceptional types.
    CHECK(repdim::min_nontrivial_complex_dim(TypeLabel::E6, 6).dimension == 27);
    CHECK(repdim::min_nontrivial_complex_dim(TypeLabel::E7, 7).dimension == 56);
    CHECK(repdim::min_nontrivial_complex_dim(TypeLabel::E8, 8).dimension == 248);
    CHECK(repdim::min_nontrivial_complex_dim(TypeLabel::F4, 4).dimension == 26);
    CHECK(repdim::min_nontrivial_complex_dim(TypeLabel::G2, 2).dimension == 7);
}

TEST_CASE("classifiers: s0 and the Cartan index") {
    auto sp = repdim::classifier_for({Family::Sp_pq, {3, 2}});
    CHECK(sp.complex_type == TypeLabel::C);
    CHECK(sp.rank == 5);
    for (int i = 1; i <= 5; ++i) CHECK(sp.s0[static_cast<std::size_t>(i - 1)] == i);
    REQUIRE(sp.eps_indices.has_value());
    CHECK(*sp.eps_indices == std::vector<int>{1, 3, 5});
    CHECK(sp.eps(fw(5, {{1, 1}})) == -1);
    CHECK(sp.eps(fw(5, {{2, 1}})) == 1);
    CHECK(sp.eps(fw(5, {{1, 2}})) == 1);

    auto so_even = repdim::classifier_for({Family::SOstar, {6}});  // SO*(12), D6
    for (int i = 1; i <= 6; ++i) CHECK(so_even.s0[static_cast<std::size_t>(i - 1)] == i);
    CHECK(*so_even.eps_indices == std::vector<int>{1, 3, 5});

    auto so_odd = repdim::classifier_for({Family::SOstar, {5}});  // SO*(10), D5
    CHECK(so_odd.s0 == std::vector<int>{1, 2, 3, 5, 4});
    CHECK(*so_odd.eps_indices == std::vector<int>{1, 3});
    CHECK_FALSE(so_odd.s0_fixes(fw(5, {{4, 1}})));
    CHECK(so_odd.s0_fixes(fw(5, {{4, 1}, {5, 1}})));

    auto su = repdim::classifier_for({Family::SU, {4, 3}});  // A6
    CHECK(su.s0 == std::vector<int>{6, 5, 4, 3, 2, 1});
    CHECK_FALSE(su.eps_indices.has_value());
    CHECK_THROWS_AS(su.eps(fw(6, {{1, 1}, {6, 1}})), DomainError);

    CHECK_THROWS_AS(repdim::classifier_for({Family::SU, {2, 2}}), DomainError);
    CHECK_THROWS_AS(repdim::classifier_for({Family::SOstar, {4}}), DomainError);
    CHECK_THROWS_AS(repdim::classifier_for({Family::SL_H, {4}}), DomainError);
}

TEST_CASE("classifier invariants: involution, diagram automorphism, homomorphism") {
    for (const GroupSpec s : {GroupSpec{Family::SU, {5, 3}}, GroupSpec{Family::Sp_pq, {3, 3}},
                              GroupSpec{Family::SOstar, {5}}, GroupSpec{Family::SOstar, {6}}}) {
        const auto cl = repdim::classifier_for(s);
        const auto rs = rootkit::build_root_system(cl.complex_type, cl.rank);
        // Involution.
        for (int i = 1; i <= cl.rank; ++i)
            CHECK(cl.s0[static_cast<std::size_t>(cl.s0[static_cast<std::size_t>(i - 1)] - 1)] == i);
        // Dynkin diagram automorphism: adjacency and lengths preserved.
        for (int i = 0; i < cl.rank; ++i)
            for (int j = 0; j < cl.rank; ++j) {
                const int si = cl.s0[static_cast<std::size_t>(i)] - 1;
                const int sj = cl.s0[static_cast<std::size_t>(j)] - 1;
                CHECK(rs->dot(rs->simple[static_cast<std::size_t>(i)],
                              rs->simple[static_cast<std::size_t>(j)]) ==
                      rs->dot(rs->simple[static_cast<std::size_t>(si)],
                              rs->simple[static_cast<std::size_t>(sj)]));
            }
        // eps is a homomorphism on s0-fixed weights.
        if (cl.eps_indices) {
            std::vector<DominantWeight> fixed;
            for (int i = 1; i <= cl.rank; ++i) {
                DominantWeight w = fw(cl.rank, {{i, 1}});
                w.coeffs[static_cast<std::size_t>(cl.s0[static_cast<std::size_t>(i - 1)] - 1)] = 1;
                if (cl.s0_fixes(w)) fixed.push_back(w);
            }
            for (const auto& a : fixed)
                for (const auto& b : fixed) {
                    DominantWeight sum = a;
                    for (int i = 0; i < cl.rank; ++i)
                        sum.coeffs[static_cast<std::size_t>(i)] += b.coeffs[static_cast<std::size_t>(i)];
                    CHECK(cl.eps(sum) == cl.eps(a) * cl.eps(b));
                }
        }
        // Dimension is s0-symmetric.
        for (int i = 1; i <= cl.rank; ++i) {
            DominantWeight w = fw(cl.rank, {{i, 1}});
            DominantWeight sw = fw(cl.rank, {{cl.s0[static_cast<std::size_t>(i - 1)], 1}});
            CHECK(repdim::weyl_dim(cl.complex_type, cl.rank, w) ==
                  repdim::weyl_dim(cl.complex_type, cl.rank, sw));
        }
    }
}

TEST_CASE("minimal real representations") {
    for (Int n = 2; n <= 4; ++n)
        for (Int m = n; m <= 6; ++m) {
            if (m == 2 && n == 2) continue;
            auto r = repdim::min_real_rep({Family::SU, {m, n}});
            CHECK(r.value == 2 * (m + n));
            CHECK(r.from_classifier);
            CHECK(r.unique_up_to_s0);
        }
    for (Int n = 2; n <= 4; ++n)
        for (Int m = n; m <= 6; ++m) {
            auto r = repdim::min_real_rep({Family::Sp_pq, {m, n}});
            CHECK(r.value == 4 * (m + n));
            CHECK(r.unique_up_to_s0);
        }
    for (Int n = 5; n <= 9; ++n) {
        auto r = repdim::min_real_rep({Family::SOstar, {n}});
        CHECK(r.value == 4 * n);
        CHECK(r.from_classifier);
        CHECK(r.unique_up_to_s0);
    }
    // Catalogue-driven forms.
    auto su22 = repdim::min_real_rep({Family::SU, {2, 2}});
    CHECK(su22.value == 6);
    CHECK_FALSE(su22.from_classifier);
    auto so8 = repdim::min_real_rep({Family::SOstar, {4}});
    CHECK(so8.value == 8);
    CHECK_FALSE(so8.from_classifier);
    CHECK(repdim::min_real_rep({Family::SL_H, {4}}).value == 16);
    CHECK(repdim::min_real_rep({Family::SOplus, {5, 3}}).value == 8);
    CHECK_THROWS_AS(repdim::min_real_rep({Family::EII, {}}), DomainError);
}

TEST_CASE("self-conjugate minima stay strictly above the doubled bound") {
    // The C_l computation behind sp(m,n): min over ker(eps) exceeds 4l.
    for (Int l = 4; l <= 8; ++l) {
        const int rank = static_cast<int>(l);
        BigInt bound = std::min({wd(TypeLabel::C, rank, {{1, 2}}), wd(TypeLabel::C, rank, {{2, 1}}),
                                 wd(TypeLabel::C, rank, {{3, 1}})});
        CHECK(bound > 4 * l);
    }
}

TEST_CASE("subalgebra identification") {
    // BC chains in SU(m,n) drop to su(m-k, n-k).
    const auto su54 = catalogue::describe({Family::SU, {5, 4}});
    auto id = repdim::n_of_subalgebra(su54, {2, 3, 4});
    CHECK(id.description == "su(4,3)");
    CHECK(id.n == 14);
    id = repdim::n_of_subalgebra(su54, {3, 4});
    CHECK(id.description == "su(3,2)");
    CHECK(id.n == 10);
    // The A-type part of SU gives complex sl.
    id = repdim::n_of_subalgebra(su54, {1, 2, 3});
    CHECK(id.description == "sl(4,C)");
    CHECK(id.n == 8);

    // SL(n,H) chains.
    const auto slh = catalogue::describe({Family::SL_H, {6}});
    id = repdim::n_of_subalgebra(slh, {2, 3, 4});
    CHECK(id.description == "sl(4,H)");
    CHECK(id.n == 16);

    // SO+(m,n) end chains give so(m-k, n-k); A-type parts give split sl.
    const auto so73 = catalogue::describe({Family::SOplus, {7, 3}});
    id = repdim::n_of_subalgebra(so73, {2, 3});
    CHECK(id.description == "so(6,2)");
    CHECK(id.n == 8);
    id = repdim::n_of_subalgebra(so73, {1, 2});
    CHECK(id.description == "sl(3,R)");
    CHECK(id.n == 3);

    // Split D end inside SO+(n,n).
    const auto so55 = catalogue::describe({Family::SOplus, {5, 5}});
    id = repdim::n_of_subalgebra(so55, {2, 3, 4, 5});
    CHECK(id.description == "so(4,4)");
    CHECK(id.n == 8);

    // Sp and SO* chains.
    const auto sp33 = catalogue::describe({Family::Sp_pq, {3, 3}});
    id = repdim::n_of_subalgebra(sp33, {2, 3});
    CHECK(id.description == "sp(2,2)");
    CHECK(id.n == 16);
    const auto so16 = catalogue::describe({Family::SOstar, {8}});  // SO*(16), C4
    id = repdim::n_of_subalgebra(so16, {2, 3, 4});
    CHECK(id.description == "so*(12)");
    CHECK(id.n == 24);
    id = repdim::n_of_subalgebra(so16, {3, 4});
    // Rank-2 readings of C2 coincide: so(6,2) and so*(8) are the same algebra.
    CHECK((id.description == "so(6,2)" || id.description == "so*(8)"));
    CHECK(id.n == 8);
    const auto so14 = catalogue::describe({Family::SOstar, {7}});  // SO*(14), BC3
    id = repdim::n_of_subalgebra(so14, {2, 3});
    CHECK(id.description == "so*(10)");
    CHECK(id.n == 20);

    // EII components on the F4 diagram.
    const auto eii = catalogue::describe({Family::EII, {}});
    id = repdim::n_of_subalgebra(eii, {1, 2});
    CHECK(id.description == "sl(3,R)");
    CHECK(id.n == 3);
    id = repdim::n_of_subalgebra(eii, {3, 4});
    CHECK(id.description == "sl(3,C)");
    CHECK(id.n == 6);
    id = repdim::n_of_subalgebra(eii, {2, 3});
    CHECK(id.description == "so(4,2)");
    CHECK(id.n == 6);
    id = repdim::n_of_subalgebra(eii, {2, 3, 4});
    CHECK(id.description == "su(3,3)");
    CHECK(id.n == 12);
    id = repdim::n_of_subalgebra(eii, {1, 2, 3});
    CHECK(id.description == "so(5,3)");
    CHECK(id.n == 8);

    // Complex parents: components stay complex.
    const auto e8 = catalogue::describe({Family::E8, {}});
    id = repdim::n_of_subalgebra(e8, {1, 2, 3, 4, 5, 6, 7});
    CHECK(id.description == "e7(C)");
    CHECK(id.n == 112);
    const auto so13 = catalogue::describe({Family::SO_C, {13}});
    id = repdim::n_of_subalgebra(so13, {5, 6});  // B2 tail of B6
    CHECK(id.description == "so(5,C)");
    CHECK(id.n == 8);

    // Preconditions.
    CHECK_THROWS_AS(repdim::n_of_subalgebra(su54, {2}), DomainError);
    CHECK_THROWS_AS(repdim::n_of_subalgebra(su54, {1, 3}), DomainError);

    // Unmatched signature: a doctored multiplicity has no real form behind it.
    auto doctored = su54;
    for (auto& [q, m] : doctored.mult_by_sqnorm) m = 5;
    CHECK_THROWS_AS(repdim::n_of_subalgebra(doctored, {1, 2}), IdentificationError);
}

TEST_CASE("strict monotonicity in every fundamental direction (spot)") {
    for (TypeLabel t : {TypeLabel::A, TypeLabel::C, TypeLabel::D}) {
        const int rank = 5;
        for (int i = 1; i <= rank; ++i) {
            CHECK(wd(t, rank, {{i, 1}}) < wd(t, rank, {{i, 2}}));
            for (int j = 1; j <= rank; ++j)
                if (j != i) CHECK(wd(t, rank, {{i, 1}}) < wd(t, rank, {{i, 1}, {j, 1}}));
        }
    }
}
