#pragma once

// Irreducible representation dimensions via the Weyl dimension formula (exact,
// arbitrary precision), a Freudenthal-recursion oracle for the same quantity,
// and the s0 / Cartan-index classification of minimal real representations.

#include "zimt/catalogue.hpp"
#include "zimt/common.hpp"
#include "zimt/rootkit.hpp"

#include <optional>
#include <vector>

namespace zimt::repdim {

struct DominantWeight {
    std::vector<Int> coeffs;  // k_1..k_l on the fundamental weights
};

// d_lambda as an exact positive integer; DomainError on negative coefficients
// or a non-semisimple type label (BC).
BigInt weyl_dim(rootkit::TypeLabel type, int rank, const DominantWeight& lambda);

// Independent oracle: total dimension as the sum of weight multiplicities from
// the Freudenthal recursion.  Guarded to rank <= 6 and dimension <= dim_cap.
BigInt freudenthal_dim(rootkit::TypeLabel type, int rank, const DominantWeight& lambda,
                       Int dim_cap = 1000000);

struct MinComplexDim {
    BigInt dimension;
    std::vector<DominantWeight> minimizers;
};

// Minimum of d_lambda over nonzero dominant weights, searched over the box
// sum(k_i) <= 2 (valid by strict coordinate monotonicity of d_lambda, which
// the test suite asserts).
MinComplexDim min_nontrivial_complex_dim(rootkit::TypeLabel type, int rank);

struct RealRepClassifier {
    rootkit::TypeLabel complex_type;
    int rank = 0;
    std::vector<int> s0;               // permutation of {1..rank}, 1-based
    std::optional<std::vector<int>> eps_indices;  // S with eps(l) = (-1)^{sum_{i in S} k_i}

    bool s0_fixes(const DominantWeight& lambda) const;
    // Cartan index on Lambda^{s0}; DomainError if eps is not available.
    int eps(const DominantWeight& lambda) const;
};

// Classifier for su(m,n) (m>=n>=2, (m,n) != (2,2)), sp(m,n) (m>=n>=2) and
// so*(2n) (n>=5); DomainError outside those forms.
RealRepClassifier classifier_for(const catalogue::GroupSpec& real_form);

struct MinRealRep {
    Int value = 0;
    bool from_classifier = false;  // false: catalogue formula
    std::vector<DominantWeight> minimizers;  // complex minimizers (classifier route only)
    bool unique_up_to_s0 = false;
};

// Minimal dimension of a nontrivial real representation.  Uses the classifier
// where it applies, the catalogue closed form otherwise.
MinRealRep min_real_rep(const catalogue::GroupSpec& real_form,
                        const catalogue::Store& store = catalogue::default_store());

struct SubalgebraId {
    std::string description;  // identified real form, e.g. "su(3,2)" or "sl(4,R)"
    Int n = 0;                // its minimal nontrivial real representation dimension
};

// Identifies the simple subalgebra generated by the root spaces over a
// connected subset Delta (1-based simple indices, |Delta| >= 2) by matching
// the restricted subsystem and its multiplicities, then returns its n value.
SubalgebraId n_of_subalgebra(const catalogue::GroupDescriptor& d, const std::vector<int>& delta,
                             const catalogue::Store& store = catalogue::default_store());

}  // namespace zimt::repdim
