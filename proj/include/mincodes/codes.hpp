#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mincodes/bitvec.hpp"
#include "mincodes/boolfun.hpp"
#include "mincodes/errors.hpp"

namespace mincodes {

// Binary linear [n, k] code given by k independent generator rows.
struct LinearCode {
    int n = 0;
    int k = 0;
    std::vector<BitVec> rows;  // k rows of length n, linearly independent
    // field point value behind each column, for puncture bookkeeping
    // (empty when the code has no field attached)
    std::vector<std::uint32_t> coordinate_labels;
    // construction inputs were dependent and were reduced to the true rank
    bool rank_collapsed = false;
};

struct WeightDistribution {
    std::map<int, std::uint64_t> counts;  // weight -> number of codewords

    std::uint64_t total() const;
    int min_nonzero_weight() const;  // w_min
    int max_weight() const;          // w_max
};

enum class Verdict { Minimal, NotMinimal, Unknown };
enum class Method { ExactPairwise, AshikhminBarg, AnnihilatorCriterion };

struct MinimalityReport {
    Verdict verdict = Verdict::Unknown;
    Method method = Method::ExactPairwise;
    // for a NotMinimal verdict: codewords with Supp(first) strictly inside
    // Supp(second); absent for the annihilator criterion when the only
    // failure is a dimension collapse
    std::optional<std::pair<BitVec, BitVec>> witness;
    // only meaningful for the annihilator criterion on punctured codes
    bool dimension_preserved = true;
};

const char* to_string(Verdict v);
const char* to_string(Method m);

// Row space rank of arbitrary vectors.
int gf2_rank(const std::vector<BitVec>& vectors);
// Greedily keeps input rows that are independent of the previous ones.
std::vector<BitVec> independent_subset(const std::vector<BitVec>& vectors);
bool row_space_contains(const std::vector<BitVec>& rows, const BitVec& v);

// Restriction of a length-2^m table to the columns selected by mask,
// in ascending point order.
BitVec restrict_to_mask(const BitVec& table, const BitVec& mask);

// Evaluation code: row i = truth table of funcs[i] restricted to coords
// (all points when coords is null). Dependent inputs are reduced to the
// true rank and flagged via rank_collapsed.
LinearCode code_from_functions(const FieldSpec& field, const std::vector<BooleanFunction>& funcs,
                               const SupportSet* coords = nullptr);

// Visits every codeword in Gray-code order (the zero word first);
// fn(codeword) is called 2^k times.
template <class Fn>
void enumerate_codewords(const LinearCode& c, Fn&& fn) {
    BitVec cw(std::size_t(c.n));
    fn(const_cast<const BitVec&>(cw));
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << c.k); ++i) {
        cw ^= c.rows[std::size_t(std::countr_zero(i))];
        fn(const_cast<const BitVec&>(cw));
    }
}

inline constexpr int kWeightEnumBudget = 26;  // max k for 2^k weight sweeps
inline constexpr int kPairwiseBudget = 16;    // max k for 2^{2k} pair sweeps

// Exact distribution by enumeration of all 2^k codewords; k <= 26.
WeightDistribution weight_distribution(const LinearCode& c);
int min_distance(const LinearCode& c);

// Checks every pair of distinct nonzero codewords for support containment;
// k <= 16.
MinimalityReport is_minimal_exact(const LinearCode& c);

// Sufficient condition 2 w_min > w_max; Unknown when it fails.
MinimalityReport is_minimal_ab(const LinearCode& c);

// Verdict on the code punctured to the coordinates D, for funcs spanning a
// minimal code: minimal with dimension preserved iff no product of two
// nonzero span members (the diagonal included) vanishes on D.
MinimalityReport annihilator_minimality_criterion(const FieldSpec& field,
                                                  const std::vector<BooleanFunction>& funcs,
                                                  const SupportSet& D);

// keep/drop are masks over the current columns.
LinearCode puncture(const LinearCode& c, const BitVec& keep);
LinearCode shorten(const LinearCode& c, const BitVec& drop);
// column mask of the coordinates whose labels lie in the point set
BitVec columns_for_points(const LinearCode& c, const SupportSet& points);

}  // namespace mincodes
