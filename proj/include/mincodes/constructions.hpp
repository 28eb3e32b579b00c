#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincodes/bounds.hpp"
#include "mincodes/codes.hpp"
#include "mincodes/rm.hpp"

namespace mincodes {

struct NamedBound {
    std::string name;
    long long value = 0;
};

// A constructed code together with the minimum-distance bounds the theory
// attaches to it and a minimality verdict. measured_distance is filled
// whenever enumeration fits the budget; it must dominate every claimed bound.
struct ConstructionResult {
    LinearCode code;
    std::vector<NamedBound> claimed_bounds;
    MinimalityReport minimality;
    std::string provenance;
    std::optional<long long> measured_distance;
    // false when the AI precondition failed: the code is still returned but
    // carries no minimality claim
    bool ai_precondition_met = true;
};

// C(D) = {(Tr(a x))_{x in D}}: an [|D|, m] code, minimal with
// d >= sum_{i=0}^{t-2} C(m-1, i) when t = AI(D u {0}) >= 3.
ConstructionResult code_C_of_D(const FieldSpec& field, const SupportSet& D);

// C([h; delta]) with the interval AI supplied in closed form; requires the
// interval parameter t in [3, m]. Bounds: the AI binomial term and the
// Gauss-log term, the max being the claimed bound.
ConstructionResult code_interval(const FieldSpec& field, std::int64_t h, std::uint64_t delta);

// The [m(m+1)/2, m] prefix code on powers of beta = alpha^e; always minimal
// (interval parameter t = 3). Requires m >= 5.
ConstructionResult code_half_pascal(const FieldSpec& field, std::uint32_t beta_exponent = 1);

// Largest eps in [0, m(m-1)/2) such that the length-(m(m+1)/2 - eps) prefix
// trace code on powers of alpha^e stays minimal; by direct pairwise checks,
// no monotonicity assumed.
int epsilon_max(const FieldSpec& field, std::uint32_t beta_exponent = 1);

// Weight criteria for the prefix codes ending at exponent m(m+1)/2 - offset
// (offset 2 or 3): offset 2 is minimal iff wt(g*) != 2^{m-2}; offset 3 iff
// both wt(g*) and wt((1+X) g*) exceed 2^{m-2}.
struct WeightCriterion {
    bool minimal = false;
    long long wt_gstar = 0;
    long long wt_gstar_times_1px = 0;
    std::uint64_t prefix_length = 0;
};
WeightCriterion check_weight_criteria(const FieldSpec& field, int offset,
                                      std::uint32_t beta_exponent = 1);

enum class QuadVariant { OddPure, Mixed };

// The quadratic codes punctured to the first delta cyclic coordinates;
// requires the interval parameter t in [5, m]. Dimension m(m-1)/2 preserved.
ConstructionResult punctured_quad_code(const FieldSpec& field, std::uint64_t delta,
                                       QuadVariant variant);

// Span of the component functions of F, full 2^m coordinates.
LinearCode span_code(const VectorialFunction& F);

// C + Span(F) on the nonzero points, for a minimal base code inside
// RM(ell, m) given by its functions; requires k > 1 and AI(F) >= 2 ell + 1.
// Minimality is certified exactly when k + r fits the pairwise budget and
// claimed from the theory otherwise.
ConstructionResult direct_sum_code(const FieldSpec& field,
                                   const std::vector<BooleanFunction>& base_funcs, int base_order,
                                   const VectorialFunction& F);

// Simplex + span{f} with Supp(f) = [0; delta]; requires the no-zero interval
// parameter t in [3, m-3]. Dimension m + 1.
ConstructionResult code_single_f(const FieldSpec& field, std::uint64_t delta);

// Tr(a alpha_i) followed by Tr(a (alpha_i + alpha_j)), i < j, over the power
// basis: the [m(m+1)/2, m] comparison code with minimum distance m.
LinearCode reference_pairsum_code(const FieldSpec& field);

// Simplex code functions Tr(alpha^i x), i < m.
std::vector<BooleanFunction> simplex_functions(const FieldSpec& field);

// Equal-block partition function used with the Simplex direct sum:
// first block of size 2^{m-r} containing 0, the rest of size 2^{m-r}.
VectorialFunction vecfun_equal_blocks(const FieldSpec& field, int r);

// m^2 + m + 2 <= 2^{m-r+1}: the feasibility gate for pairing the equal-block
// function with the Simplex code.
bool simplex_vecfun_gate(int m, int r);

// Builds the two interval-support functions of the worked vectorial example
// (blocks of 32 on GF(2^7)).
VectorialFunction example_vectorial_function(const FieldSpec& field);

}  // namespace mincodes
