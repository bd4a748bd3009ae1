#pragma once

// Invariant table rows and their CSV / Markdown renderings.  Output is
// deterministic and byte-stable: fixed column order, LF line endings, no
// quoting (family keys and integers only).

#include "zimt/catalogue.hpp"
#include "zimt/common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zimt::render {

struct TableRow {
    catalogue::GroupSpec spec;
    Int v = 0;
    std::optional<Int> v_cpt;  // catalogue; absent for EII
    std::optional<Int> n;      // catalogue; absent for EII
    Int r = 0;
    Int r0 = 0;
    Int s_lower = 0;

    bool operator==(const TableRow&) const = default;
};

// Computes one row (v, r, r0, s_lower computed; v_cpt, n from the catalogue).
TableRow make_row(const catalogue::GroupSpec& spec,
                  const catalogue::Store& store = catalogue::default_store());

enum class Format { csv, md };

// Columns: family, m, n, v, v_cpt, nG, r, r0, s_lower, provenance.
std::string render_table(const std::vector<TableRow>& rows, Format format);

// Inverse of the CSV rendering (header + rows); DomainError on malformed input.
std::vector<TableRow> parse_csv_table(const std::string& text);

}  // namespace zimt::render
