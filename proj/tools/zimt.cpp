// zimt: exact invariants of restricted root systems and parabolic subgroups.
//
// Subcommands: invariants, table, parabolics, verify, weyl-dim, min-rep.
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error.  Data goes to stdout, diagnostics to stderr.

#include "zimt/flagcalc.hpp"
#include "zimt/render.hpp"
#include "zimt/repdim.hpp"
#include "zimt/verify.hpp"
#include "zimt/zimmerbounds.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>

namespace {

using namespace zimt;

struct RangeOpt {
    Int lo = 0, hi = -1;
    bool given = false;
};

RangeOpt parse_range(const std::string& text) {
    RangeOpt r;
    r.given = true;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, dots));
            r.hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO..HI, got '" + text + "'");
    }
    if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + text + "'");
    return r;
}

render::Format parse_format(const std::string& f) {
    if (f == "csv") return render::Format::csv;
    if (f == "md") return render::Format::md;
    throw CLI::ValidationError("--format", "expected csv or md");
}

// Smallest parameters with a Table row (or, for EII, with defined invariants).
catalogue::GroupSpec smallest_valid(catalogue::Family f) {
    using catalogue::Family;
    switch (f) {
        case Family::SL_C: return {f, {3}};
        case Family::Sp_C: return {f, {3}};
        case Family::SO_C: return {f, {7}};
        case Family::SL_H: return {f, {3}};
        case Family::SOplus: return {f, {3, 2}};
        case Family::SU: return {f, {2, 2}};
        case Family::Sp_pq: return {f, {2, 2}};
        case Family::SOstar: return {f, {4}};
        default: return {f, {}};
    }
}

std::string weight_name(const repdim::DominantWeight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
        for (Int k = 0; k < w.coeffs[i]; ++k) {
            if (!out.empty()) out += "+";
            out += "w" + std::to_string(i + 1);
        }
    }
    return out.empty() ? "0" : out;
}

int cmd_invariants(const std::string& spec_text, render::Format format,
                   const catalogue::Store& store) {
    auto spec = catalogue::parse_group_spec(spec_text);
    std::cout << render::render_table({render::make_row(spec, store)}, format);
    return 0;
}

int cmd_table(const std::vector<std::string>& families, const RangeOpt& m_range,
              const RangeOpt& n_range, render::Format format, const catalogue::Store& store) {
    std::vector<catalogue::Family> wanted;
    if (families.empty()) {
        wanted = catalogue::all_families();
    } else {
        for (const std::string& name : families) {
            bool found = false;
            for (catalogue::Family f : catalogue::all_families()) {
                if (catalogue::family_name(f) == name ||
                    catalogue::to_string(smallest_valid(f)).substr(0, name.size()) == name) {
                    wanted.push_back(f);
                    found = true;
                    break;
                }
            }
            if (!found) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
        }
    }
    std::vector<render::TableRow> rows;
    for (catalogue::Family f : wanted) {
        const auto base = smallest_valid(f);
        std::vector<catalogue::GroupSpec> specs;
        if (base.params.empty()) {
            if (!m_range.given && !n_range.given) specs.push_back(base);
        } else if (base.params.size() == 1) {
            if (!n_range.given) {
                specs.push_back(base);
            } else {
                for (Int n = n_range.lo; n <= n_range.hi; ++n)
                    if (catalogue::spec_valid({f, {n}})) specs.push_back({f, {n}});
            }
        } else {
            if (!m_range.given && !n_range.given) {
                specs.push_back(base);
            } else {
                RangeOpt mr = m_range.given ? m_range : RangeOpt{2, 40, true};
                RangeOpt nr = n_range.given ? n_range : RangeOpt{2, 40, true};
                for (Int n = nr.lo; n <= nr.hi; ++n)
                    for (Int m = mr.lo; m <= mr.hi; ++m)
                        if (catalogue::spec_valid({f, {m, n}})) specs.push_back({f, {m, n}});
            }
        }
        std::sort(specs.begin(), specs.end());
        for (const auto& s : specs) rows.push_back(render::make_row(s, store));
    }
    std::cout << render::render_table(rows, format);
    return 0;
}

int cmd_parabolics(const std::string& spec_text, const catalogue::Store& store) {
    auto spec = catalogue::parse_group_spec(spec_text);
    const auto d = catalogue::describe(spec, store);
    if (d.restricted->rank > zimmerbounds::kMaxEnumerationRank) {
        std::cerr << "error: rank " << d.restricted->rank << " exceeds the enumeration cap "
                  << zimmerbounds::kMaxEnumerationRank << "\n";
        return 2;
    }
    const auto report = zimmerbounds::s_lower(d, /*keep_rows=*/true);
    auto subset_str = [&](std::uint64_t mask) {
        std::string s = "{";
        bool first = true;
        for (int i : flagcalc::indices_from_mask(mask, d.restricted->rank)) {
            if (!first) s += ",";
            s += "a" + std::to_string(i);
            first = false;
        }
        return s + "}";
    };
    std::cout << "group " << d.name << " rank " << d.restricted->rank << "\n";
    for (const auto& row : report.rows) {
        std::cout << "pi_Q=" << subset_str(row.pi_mask) << " r0=" << row.r0;
        for (const auto& cb : row.superrigidity) {
            if (!cb.value) continue;
            std::uint64_t cmask = 0;
            for (int i : cb.delta) cmask |= std::uint64_t{1} << (i - 1);
            std::cout << " sr[" << subset_str(cmask) << "=" << cb.identified << ":" << *cb.value
                      << "]";
        }
        if (row.refined) std::cout << " refined=" << *row.refined;
        std::cout << " effective=" << row.effective << "\n";
    }
    std::cout << "s_lower=" << report.s_lower << " argmin=[";
    for (std::size_t i = 0; i < report.argmin.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << subset_str(report.argmin[i]);
    }
    std::cout << "]\n";
    return 0;
}

int cmd_verify(const std::string& check, std::optional<Int> max, std::optional<int> max_rank,
               bool quiet) {
    std::vector<std::string> to_run;
    if (check == "all") to_run = verify::check_names();
    else to_run.push_back(check);
    bool all_pass = true;
    for (const std::string& name : to_run) {
        auto result = verify::run_named(name, max, max_rank);
        if (!result) {
            std::cerr << "error: unknown check '" << name << "' (expected one of:";
            for (const auto& n : verify::check_names()) std::cerr << " " << n;
            std::cerr << " all)\n";
            return 2;
        }
        if (!quiet)
            for (const auto& f : result->failures) std::cout << "FAIL " << name << ": " << f << "\n";
        std::cout << (result->pass() ? "PASS " : "FAIL ") << name << " (" << result->instances
                  << " instances, " << result->failures.size() << " failures)\n";
        all_pass = all_pass && result->pass();
    }
    return all_pass ? 0 : 1;
}

int cmd_weyl_dim(const std::string& type_text, const std::string& coeff_text) {
    std::string letters;
    std::size_t i = 0;
    while (i < type_text.size() && std::isalpha(static_cast<unsigned char>(type_text[i])))
        letters += static_cast<char>(std::toupper(static_cast<unsigned char>(type_text[i++])));
    using rootkit::TypeLabel;
    static const std::map<std::string, TypeLabel> types = {
        {"A", TypeLabel::A}, {"B", TypeLabel::B}, {"C", TypeLabel::C}, {"D", TypeLabel::D},
        {"E", TypeLabel::E6 /* adjusted below */}, {"F", TypeLabel::F4}, {"G", TypeLabel::G2}};
    auto it = types.find(letters);
    if (it == types.end()) {
        std::cerr << "error: unknown type '" << type_text << "'\n";
        return 2;
    }
    int rank = 0;
    try {
        rank = std::stoi(type_text.substr(i));
    } catch (const std::exception&) {
        std::cerr << "error: type needs a rank, e.g. A4\n";
        return 2;
    }
    TypeLabel t = it->second;
    if (letters == "E") t = rank == 6 ? TypeLabel::E6 : rank == 7 ? TypeLabel::E7 : TypeLabel::E8;
    repdim::DominantWeight w;
    std::size_t start = 0;
    while (start <= coeff_text.size()) {
        std::size_t comma = coeff_text.find(',', start);
        std::string cell = coeff_text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        w.coeffs.push_back(std::stoll(cell));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    std::cout << repdim::weyl_dim(t, rank, w) << "\n";
    return 0;
}

int cmd_min_rep(const std::string& spec_text, const catalogue::Store& store) {
    auto spec = catalogue::parse_group_spec(spec_text);
    const auto result = repdim::min_real_rep(spec, store);
    std::cout << "n(" << catalogue::to_string(spec) << ") = " << result.value << " ["
              << (result.from_classifier ? "computed" : "catalogue") << "]\n";
    if (result.from_classifier) {
        std::cout << "complex minimizers:";
        for (const auto& w : result.minimizers) std::cout << " " << weight_name(w);
        std::cout << (result.unique_up_to_s0 ? " (unique up to s0)" : "") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lie-theoretic invariants: restricted root systems, parabolic\n"
                 "codimensions v(G), resonant codimensions r(G), coarse bounds r0(G),\n"
                 "minimal real representation dimensions n(G), and the combined lower\n"
                 "bound s_lower(G)"};
    app.require_subcommand(1);
    std::string catalogue_path;
    app.add_option("--catalogue", catalogue_path,
                   "catalogue data file (default: bundled copy of data/catalogue.json)");
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress per-instance detail lines");

    std::string format_text = "md";
    std::string spec_text, check_name, type_text, coeff_text;
    std::string m_text, n_text;
    std::vector<std::string> family_filters;
    std::optional<Int> opt_max;
    std::optional<int> opt_max_rank;

    auto* inv = app.add_subcommand("invariants", "one table row for a group spec");
    inv->add_option("spec", spec_text, "group spec, e.g. SU(4,2) or SL(5,H)")->required();
    inv->add_option("--format", format_text, "csv or md (default md)");

    auto* tab = app.add_subcommand("table", "invariant table over families and parameter ranges");
    tab->add_option("--family", family_filters, "family filter (repeatable), e.g. SU or SO*");
    tab->add_option("--m", m_text, "m range, e.g. 4..8");
    tab->add_option("--n", n_text, "n range, e.g. 4..8");
    tab->add_option("--format", format_text, "csv or md (default md)");

    auto* par = app.add_subcommand("parabolics", "per-subset bound listing and s_lower");
    par->add_option("spec", spec_text, "group spec")->required();

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    ver->add_option("check", check_name,
                    "table1 | s-formulas | theorem1 | theoremSp | sandwich | ideals | rootspan | "
                    "weyl-oracle | monotonicity | weyl-monotone | all")
        ->required();
    Int max_val = -1;
    int max_rank_val = -1;
    ver->add_option("--max", max_val, "parameter grid bound");
    ver->add_option("--max-rank", max_rank_val, "rank bound for property suites");

    auto* wd = app.add_subcommand("weyl-dim", "irreducible dimension for a dominant weight");
    wd->add_option("type", type_text, "complex type with rank, e.g. A4, C3, E7")->required();
    wd->add_option("weight", coeff_text, "comma-separated fundamental-weight coefficients")
        ->required();

    auto* mr = app.add_subcommand("min-rep", "minimal nontrivial real representation dimension");
    mr->add_option("spec", spec_text, "group spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::optional<catalogue::Store> loaded;
        if (!catalogue_path.empty()) loaded = catalogue::load_catalogue(catalogue_path);
        const catalogue::Store& store = loaded ? *loaded : catalogue::default_store();

        if (max_val >= 0) opt_max = max_val;
        if (max_rank_val >= 0) opt_max_rank = max_rank_val;

        if (inv->parsed()) return cmd_invariants(spec_text, parse_format(format_text), store);
        if (tab->parsed()) {
            RangeOpt mr_opt, nr_opt;
            if (!m_text.empty()) mr_opt = parse_range(m_text);
            if (!n_text.empty()) nr_opt = parse_range(n_text);
            return cmd_table(family_filters, mr_opt, nr_opt, parse_format(format_text), store);
        }
        if (par->parsed()) return cmd_parabolics(spec_text, store);
        if (ver->parsed()) return cmd_verify(check_name, opt_max, opt_max_rank, quiet);
        if (wd->parsed()) return cmd_weyl_dim(type_text, coeff_text);
        if (mr->parsed()) return cmd_min_rep(spec_text, store);
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << " (offset " << e.offset << ")";
        if (!e.expected.empty()) {
            std::cerr << "; expected:";
            for (const auto& t : e.expected) std::cerr << " " << t;
        }
        std::cerr << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
