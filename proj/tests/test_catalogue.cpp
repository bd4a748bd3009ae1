#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zimt/catalogue.hpp"
#include "zimt/repdim.hpp"

#include <cstdio>
#include <fstream>

using namespace zimt;
using catalogue::Family;
using catalogue::GroupSpec;
using catalogue::Invariant;
using rootkit::TypeLabel;

TEST_CASE("parse/print round-trip on canonical forms") {
    const std::vector<std::string> canonical = {
        "SL(3,C)", "SL(12,C)", "Sp(6,C)",  "Sp(24,C)", "SO(7,C)",  "SO(12,C)", "SL(3,H)",
        "SL(9,H)", "SO+(7,3)", "SO+(4,4)", "SU(4,2)",  "SU(2,2)",  "Sp(3,2)",  "Sp(2,2)",
        "SO*(8)",  "SO*(14)",  "E6",       "E7",       "E8",       "F4",       "G2",
        "EII"};
    for (const std::string& text : canonical) {
        CAPTURE(text);
        CHECK(catalogue::to_string(catalogue::parse_group_spec(text)) == text);
    }
}

TEST_CASE("parser tolerates case and whitespace") {
    CHECK(catalogue::parse_group_spec("sl(5, h)") == GroupSpec{Family::SL_H, {5}});
    CHECK(catalogue::parse_group_spec("  su( 4 ,2)  ") == GroupSpec{Family::SU, {4, 2}});
    CHECK(catalogue::parse_group_spec("so*( 12 )") == GroupSpec{Family::SOstar, {6}});
    CHECK(catalogue::parse_group_spec("eii") == GroupSpec{Family::EII, {}});
    CHECK(catalogue::parse_group_spec("sp(8,c)") == GroupSpec{Family::Sp_C, {4}});
}

TEST_CASE("parser rejects with distinguishable error kinds") {
    using Kind = SpecParseError::Kind;
    auto kind_of = [](const std::string& text) {
        try {
            catalogue::parse_group_spec(text);
        } catch (const SpecParseError& e) {
            return e.kind;
        }
        throw std::runtime_error("expected a parse error for: " + text);
    };
    CHECK(kind_of("Q8") == Kind::UnknownFamily);
    CHECK(kind_of("SO*(13)") == Kind::RangeViolation);
    CHECK(kind_of("SO*(6)") == Kind::RangeViolation);
    CHECK(kind_of("SU(2,4)") == Kind::RangeViolation);
    CHECK(kind_of("SU(4,1)") == Kind::RangeViolation);
    CHECK(kind_of("SL(2,C)") == Kind::RangeViolation);
    CHECK(kind_of("SU(4)") == Kind::ArityMismatch);
    CHECK(kind_of("E6(3)") == Kind::ArityMismatch);
    CHECK(kind_of("SO(7,3)") == Kind::ArityMismatch);
    CHECK(kind_of("SU(4,2)x") == Kind::Syntax);
    CHECK(kind_of("SU(4;2)") == Kind::Syntax);

    // Byte offsets point at the offending token.
    try {
        catalogue::parse_group_spec("  SU(4;2)");
        CHECK(false);
    } catch (const SpecParseError& e) {
        CHECK(e.offset == 6);
    }
    try {
        catalogue::parse_group_spec("Q8");
        CHECK(false);
    } catch (const SpecParseError& e) {
        CHECK(e.offset == 0);
        CHECK(!e.expected.empty());
    }
}

namespace {

std::map<std::string, Int> mults_by_class(const catalogue::GroupDescriptor& d) {
    // Reverse the norm-ascending naming used by the catalogue.
    std::map<std::string, Int> out;
    std::vector<Int> norms;
    for (const auto& [q, m] : d.mult_by_sqnorm) norms.push_back(q);
    const auto t = d.restricted->type;
    std::vector<std::string> names;
    if (t == TypeLabel::B) names = {"ei", "eiej"};
    else if (t == TypeLabel::C) names = {"eiej", "2ei"};
    else if (t == TypeLabel::BC) names = {"ei", "eiej", "2ei"};
    else if (t == TypeLabel::F4 || t == TypeLabel::G2) names = {"short", "long"};
    else names = {"all"};
    if (names.size() == 1) {
        out["all"] = d.mult_by_sqnorm.begin()->second;
        return out;
    }
    REQUIRE(norms.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = d.mult_by_sqnorm.at(norms[i]);
    return out;
}

}  // namespace

TEST_CASE("describe: restricted types and multiplicities") {
    auto d = catalogue::describe({Family::SU, {4, 2}});
    CHECK(d.restricted->type == TypeLabel::BC);
    CHECK(d.restricted->rank == 2);
    auto m = mults_by_class(d);
    CHECK(m["eiej"] == 2);
    CHECK(m["ei"] == 4);
    CHECK(m["2ei"] == 1);
    CHECK(d.eps_G == 2);

    d = catalogue::describe({Family::Sp_pq, {3, 3}});
    CHECK(d.restricted->type == TypeLabel::C);
    CHECK(d.restricted->rank == 3);
    m = mults_by_class(d);
    CHECK(m["eiej"] == 4);
    CHECK(m["2ei"] == 3);
    CHECK(d.eps_G == 4);

    d = catalogue::describe({Family::SL_C, {4}});
    CHECK(d.restricted->type == TypeLabel::A);
    CHECK(d.restricted->rank == 3);
    CHECK(mults_by_class(d)["all"] == 2);

    d = catalogue::describe({Family::SL_H, {5}});
    CHECK(d.restricted->type == TypeLabel::A);
    CHECK(mults_by_class(d)["all"] == 4);

    d = catalogue::describe({Family::SOplus, {7, 3}});
    CHECK(d.restricted->type == TypeLabel::B);
    m = mults_by_class(d);
    CHECK(m["eiej"] == 1);
    CHECK(m["ei"] == 4);

    d = catalogue::describe({Family::SOplus, {4, 4}});
    CHECK(d.restricted->type == TypeLabel::D);
    CHECK(mults_by_class(d)["all"] == 1);

    d = catalogue::describe({Family::SOstar, {6}});  // SO*(12)
    CHECK(d.restricted->type == TypeLabel::C);
    m = mults_by_class(d);
    CHECK(m["eiej"] == 4);
    CHECK(m["2ei"] == 1);

    d = catalogue::describe({Family::SOstar, {5}});  // SO*(10)
    CHECK(d.restricted->type == TypeLabel::BC);
    m = mults_by_class(d);
    CHECK(m["eiej"] == 4);
    CHECK(m["ei"] == 4);
    CHECK(m["2ei"] == 1);

    d = catalogue::describe({Family::EII, {}});
    CHECK(d.restricted->type == TypeLabel::F4);
    m = mults_by_class(d);
    CHECK(m["long"] == 1);
    CHECK(m["short"] == 2);

    d = catalogue::describe({Family::SO_C, {9}});
    CHECK(d.restricted->type == TypeLabel::B);
    CHECK(d.restricted->rank == 4);
    d = catalogue::describe({Family::SO_C, {10}});
    CHECK(d.restricted->type == TypeLabel::D);
    CHECK(d.restricted->rank == 5);
}

TEST_CASE("restricted multiplicity lists over a parameter sweep") {
    // C_n / BC_n families: the class multiplicities are (eps_G, eps_G(m-n), t).
    for (Int n = 2; n <= 6; ++n)
        for (Int m = n; m <= 8; ++m) {
            auto su = catalogue::describe({Family::SU, {m, n}});
            auto msu = mults_by_class(su);
            CHECK(msu["eiej"] == 2);
            CHECK(msu["2ei"] == 1);
            if (m > n) CHECK(msu["ei"] == 2 * (m - n));

            auto sp = catalogue::describe({Family::Sp_pq, {m, n}});
            auto msp = mults_by_class(sp);
            CHECK(msp["eiej"] == 4);
            CHECK(msp["2ei"] == 3);
            if (m > n) CHECK(msp["ei"] == 4 * (m - n));
        }
    for (Int n = 4; n <= 12; ++n) {
        auto d = catalogue::describe({Family::SOstar, {n}});
        auto m = mults_by_class(d);
        CHECK(m["eiej"] == 4);
        CHECK(m["2ei"] == 1);
        if (n % 2 == 1) CHECK(m["ei"] == 4);
    }
}

TEST_CASE("tabulated invariants") {
    CHECK(catalogue::tabulated_invariant({Family::SU, {2, 2}}, Invariant::n_G) == 6);
    CHECK(catalogue::tabulated_invariant({Family::SL_C, {4}}, Invariant::v_cpt) == 5);
    CHECK(catalogue::tabulated_invariant({Family::SOstar, {4}}, Invariant::n_G) == 8);
    CHECK(catalogue::tabulated_invariant({Family::SOstar, {7}}, Invariant::n_G) == 28);
    CHECK(catalogue::tabulated_invariant({Family::E8, {}}, Invariant::n_G) == 496);
    CHECK_THROWS_AS(catalogue::tabulated_invariant({Family::EII, {}}, Invariant::n_G), DomainError);
    CHECK_THROWS_AS(catalogue::tabulated_invariant({Family::SU, {1, 1}}, Invariant::n_G),
                    DomainError);
    CHECK_FALSE(catalogue::has_tabulated({Family::EII, {}}, Invariant::v_cpt));
    CHECK_FALSE(catalogue::has_tabulated({Family::SO_C, {5}}, Invariant::n_G));
    CHECK(catalogue::has_tabulated({Family::SO_C, {7}}, Invariant::n_G));
}

TEST_CASE("catalogue loading and schema errors") {
    const auto& store = catalogue::default_store();
    CHECK(store.size() == 14);
    for (Family f : catalogue::all_families()) CHECK(store.has(f));

    CHECK_THROWS_AS(catalogue::Store::from_json_text("{\"families\": []}"), SchemaError);
    CHECK_THROWS_AS(catalogue::Store::from_json_text("not json at all"), SchemaError);
    CHECK_THROWS_AS(catalogue::Store::from_json_text("{}"), SchemaError);

    // Unknown family key, with the field path in the message.
    try {
        catalogue::Store::from_json_text(R"({"families": [{
            "family": "Sp_R", "params": [], "constraints": [],
            "restricted_type": [{"type": "A", "rank": "2"}],
            "mult": [{"classes": {"all": "2"}}], "provenance": "x"}]})");
        CHECK(false);
    } catch (const SchemaError& e) {
        CHECK(e.path == "families[0].family");
    }

    // Missing field.
    try {
        catalogue::Store::from_json_text(R"({"families": [{
            "family": "G2", "params": [], "constraints": [],
            "mult": [{"classes": {"all": "2"}}], "provenance": "x"}]})");
        CHECK(false);
    } catch (const SchemaError& e) {
        CHECK(e.path == "families[0].restricted_type");
    }

    // Non-integer bound in a constraint expression.
    CHECK_THROWS_AS(catalogue::Store::from_json_text(R"({"families": [{
        "family": "G2", "params": [], "constraints": ["n>=2.5"],
        "restricted_type": [{"type": "G2", "rank": "2"}],
        "mult": [{"classes": {"all": "2"}}], "provenance": "x"}]})"),
                    SchemaError);

    // Multiplicity omitted for a length class is reported with the class name.
    auto broken = catalogue::Store::from_json_text(R"({"families": [{
        "family": "SU", "params": ["m","n"], "constraints": ["m>=n","n>=2"],
        "restricted_type": [{"if": "m>n", "type": "BC", "rank": "n"},
                            {"type": "C", "rank": "n"}],
        "mult": [{"if": "m>n", "classes": {"eiej": "2", "2ei": "1"}},
                 {"classes": {"eiej": "2", "2ei": "1"}}],
        "provenance": "x"}]})");
    try {
        catalogue::describe({Family::SU, {4, 2}}, broken);
        CHECK(false);
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("'ei'") != std::string::npos);
    }

    // Loading from a file path, and the empty-file error.
    {
        const char* path = "zimt_test_catalogue_empty.json";
        std::ofstream(path) << "\n";
        CHECK_THROWS_AS(catalogue::load_catalogue(path), SchemaError);
        std::remove(path);
    }
}

TEST_CASE("catalogue n(G) agrees with the computed minimal real representation") {
    // su / sp / so* with complex rank <= 8, wherever the classifier applies.
    for (Int n = 2; n <= 4; ++n)
        for (Int m = n; m + n <= 9; ++m) {
            if (m == 2 && n == 2) continue;
            GroupSpec s{Family::SU, {m, n}};
            CHECK(repdim::min_real_rep(s).value ==
                  catalogue::tabulated_invariant(s, Invariant::n_G));
            CHECK(repdim::min_real_rep(s).from_classifier);
        }
    for (Int n = 2; n <= 4; ++n)
        for (Int m = n; m + n <= 8; ++m) {
            GroupSpec s{Family::Sp_pq, {m, n}};
            CHECK(repdim::min_real_rep(s).value ==
                  catalogue::tabulated_invariant(s, Invariant::n_G));
        }
    for (Int n = 5; n <= 8; ++n) {
        GroupSpec s{Family::SOstar, {n}};
        CHECK(repdim::min_real_rep(s).value == catalogue::tabulated_invariant(s, Invariant::n_G));
    }
}
