#include "zimt/render.hpp"

#include "zimt/flagcalc.hpp"
#include "zimt/zimmerbounds.hpp"

#include <sstream>

namespace zimt::render {

using catalogue::Family;
using catalogue::GroupSpec;
using catalogue::Invariant;

TableRow make_row(const GroupSpec& spec, const catalogue::Store& store) {
    const auto d = catalogue::describe(spec, store);
    TableRow row;
    row.spec = spec;
    row.v = flagcalc::v_of_group(d);
    row.r = flagcalc::r_of_group(d);
    row.r0 = flagcalc::r0_of_group(d);
    row.s_lower = zimmerbounds::s_lower(d).s_lower;
    if (catalogue::has_tabulated(spec, Invariant::v_cpt, store))
        row.v_cpt = catalogue::tabulated_invariant(spec, Invariant::v_cpt, store);
    if (catalogue::has_tabulated(spec, Invariant::n_G, store))
        row.n = catalogue::tabulated_invariant(spec, Invariant::n_G, store);
    return row;
}

namespace {

constexpr const char* kProvenance =
    "v=computed;v_cpt=catalogue;nG=catalogue;r=computed;r0=computed;s_lower=computed";

// One- vs two-parameter families share the (m, n) columns: two-parameter rows
// fill both, one-parameter rows put their n and leave m empty.
std::pair<std::string, std::string> param_cells(const GroupSpec& s) {
    if (s.params.size() == 2)
        return {std::to_string(s.params[0]), std::to_string(s.params[1])};
    if (s.params.size() == 1) return {"", std::to_string(s.params[0])};
    return {"", ""};
}

std::string opt_cell(const std::optional<Int>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, Format format) {
    std::ostringstream os;
    if (format == Format::csv) {
        os << "family,m,n,v,v_cpt,nG,r,r0,s_lower,provenance\n";
        for (const TableRow& row : rows) {
            auto [m, n] = param_cells(row.spec);
            os << catalogue::family_name(row.spec.family) << ',' << m << ',' << n << ',' << row.v
               << ',' << opt_cell(row.v_cpt) << ',' << opt_cell(row.n) << ',' << row.r << ','
               << row.r0 << ',' << row.s_lower << ',' << kProvenance << '\n';
        }
        return os.str();
    }
    os << "| group | v | v_cpt | n | r | r0 | s_lower |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const TableRow& row : rows) {
        auto dash = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : "-"; };
        os << "| " << catalogue::to_string(row.spec) << " | " << row.v << " | " << dash(row.v_cpt)
           << " | " << dash(row.n) << " | " << row.r << " | " << row.r0 << " | " << row.s_lower
           << " |\n";
    }
    os << "\ncolumns v, r, r0, s_lower computed; v_cpt, n from the catalogue\n";
    return os.str();
}

std::vector<TableRow> parse_csv_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "family,m,n,v,v_cpt,nG,r,r0,s_lower,provenance")
        throw DomainError("csv: unexpected header");
    std::vector<TableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                cells.push_back(line.substr(start));
                break;
            }
            cells.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (cells.size() != 10) throw DomainError("csv: expected 10 fields");
        TableRow row;
        Family fam = [&] {
            for (Family f : catalogue::all_families())
                if (catalogue::family_name(f) == cells[0]) return f;
            throw DomainError("csv: unknown family '" + cells[0] + "'");
        }();
        row.spec.family = fam;
        auto to_int = [](const std::string& s) { return static_cast<Int>(std::stoll(s)); };
        if (!cells[1].empty()) row.spec.params = {to_int(cells[1]), to_int(cells[2])};
        else if (!cells[2].empty()) row.spec.params = {to_int(cells[2])};
        row.v = to_int(cells[3]);
        if (!cells[4].empty()) row.v_cpt = to_int(cells[4]);
        if (!cells[5].empty()) row.n = to_int(cells[5]);
        row.r = to_int(cells[6]);
        row.r0 = to_int(cells[7]);
        row.s_lower = to_int(cells[8]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace zimt::render
