#pragma once

// Descriptors for the real and complex simple Lie groups the computations
// cover: restricted root system, root-space dimensions, and the tabulated
// invariants n(G) and v(G_cpt).  Tabulated data comes from a structured
// catalogue file (see docs/catalogue-schema.md); restricted types and
// multiplicities are evaluated from the same records.

#include "zimt/common.hpp"
#include "zimt/rootkit.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace zimt::catalogue {

enum class Family { SL_C, Sp_C, SO_C, SL_H, SOplus, SU, Sp_pq, SOstar, E6, E7, E8, F4, G2, EII };

// Table-order list of all families.
const std::vector<Family>& all_families();

std::string family_name(Family f);

struct GroupSpec {
    Family family;
    std::vector<Int> params;  // () for exceptional, (n), or (m, n)

    bool operator==(const GroupSpec&) const = default;
    bool operator<(const GroupSpec& o) const {
        if (family != o.family) return family < o.family;
        return params < o.params;
    }
};

// Canonical text form, e.g. SU(4,2), SL(5,H), Sp(6,C), SO*(12), EII.
std::string to_string(const GroupSpec& spec);

// Case-insensitive, whitespace-tolerant parse; throws SpecParseError with the
// byte offset and expected-token list on failure.
GroupSpec parse_group_spec(std::string_view text);

// ---------------------------------------------------------------------------
// Catalogue store

struct PiecewiseExpr;  // opaque; defined in catalogue.cpp

struct FamilyRecord {
    Family family;
    std::vector<std::string> param_names;
    std::shared_ptr<const PiecewiseExpr> constraints;      // boolean
    std::shared_ptr<const PiecewiseExpr> restricted_type;  // yields (label, rank)
    std::shared_ptr<const PiecewiseExpr> mult;             // yields class -> value
    std::optional<Int> eps_G;
    std::shared_ptr<const PiecewiseExpr> n_G;    // may be null (EII)
    std::shared_ptr<const PiecewiseExpr> v_cpt;  // may be null (EII)
    std::string provenance;
};

class Store {
  public:
    const FamilyRecord& record(Family f) const;
    bool has(Family f) const { return records_.count(f) != 0; }
    std::size_t size() const { return records_.size(); }

    static Store from_json_text(const std::string& text);

  private:
    std::map<Family, FamilyRecord> records_;
};

// Parses a catalogue file; SchemaError on violations (field path included).
Store load_catalogue(const std::string& path);

// The catalogue bundled into the library (same content as data/catalogue.json).
const Store& default_store();

// ---------------------------------------------------------------------------
// Descriptors

struct GroupDescriptor {
    GroupSpec spec;
    std::string name;  // canonical text form
    rootkit::RootSystemPtr restricted;
    std::map<Int, Int> mult_by_sqnorm;  // dim g_beta keyed by squared root length
    std::optional<Int> eps_G;

    Int mult(const Vec& root) const;
    // dim g_{[beta]}: total multiplicity over the members of the coarse class.
    Int class_dim(const rootkit::CoarseClass& c) const;
};

GroupDescriptor describe(const GroupSpec& spec, const Store& store = default_store());

enum class Invariant { n_G, v_cpt };

// Evaluates the stored closed form; DomainError when the field is absent
// (e.g. EII) or the parameters violate the record constraints.
Int tabulated_invariant(const GroupSpec& spec, Invariant which, const Store& store = default_store());
bool has_tabulated(const GroupSpec& spec, Invariant which, const Store& store = default_store());

// Validity check used by grid enumerations.
bool spec_valid(const GroupSpec& spec);

}  // namespace zimt::catalogue
