#include "mincodes/codes.hpp"

#include <algorithm>
#include <string>

namespace mincodes {

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (auto& [w, c] : counts) t += c;
    return t;
}

int WeightDistribution::min_nonzero_weight() const {
    for (auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    throw Error("code has no nonzero codeword");
}

int WeightDistribution::max_weight() const {
    if (counts.empty()) throw Error("empty weight distribution");
    return counts.rbegin()->first;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Minimal: return "minimal";
        case Verdict::NotMinimal: return "not-minimal";
        default: return "unknown";
    }
}

const char* to_string(Method m) {
    switch (m) {
        case Method::ExactPairwise: return "exact-pairwise";
        case Method::AshikhminBarg: return "ashikhmin-barg";
        default: return "annihilator-criterion";
    }
}

namespace {

// incremental echelon basis keyed by leading bit index
struct Echelon {
    std::vector<std::pair<std::size_t, BitVec>> rows;  // (lead, reduced row)

    // reduces v against the basis; returns the residue
    BitVec reduce(BitVec v) const {
        for (const auto& [lead, row] : rows)
            if (v.get(lead)) v ^= row;
        return v;
    }
    // returns false if v was dependent
    bool insert(const BitVec& v) {
        BitVec r = reduce(v);
        if (r.none()) return false;
        const std::size_t lead = r.first_set();
        rows.emplace_back(lead, std::move(r));
        return true;
    }
};

}  // namespace

int gf2_rank(const std::vector<BitVec>& vectors) {
    Echelon e;
    int rank = 0;
    for (const BitVec& v : vectors)
        if (e.insert(v)) ++rank;
    return rank;
}

std::vector<BitVec> independent_subset(const std::vector<BitVec>& vectors) {
    Echelon e;
    std::vector<BitVec> kept;
    for (const BitVec& v : vectors)
        if (e.insert(v)) kept.push_back(v);
    return kept;
}

bool row_space_contains(const std::vector<BitVec>& rows, const BitVec& v) {
    Echelon e;
    for (const BitVec& r : rows) e.insert(r);
    return e.reduce(v).none();
}

BitVec restrict_to_mask(const BitVec& table, const BitVec& mask) {
    BitVec out(mask.count());
    std::size_t col = 0;
    mask.for_each_set([&](std::size_t j) {
        if (table.get(j)) out.set(col);
        ++col;
    });
    return out;
}

LinearCode code_from_functions(const FieldSpec& field, const std::vector<BooleanFunction>& funcs,
                               const SupportSet* coords) {
    BitVec keep = coords ? coords->mask : BitVec(field.field_size()).complement();
    LinearCode c;
    c.n = int(keep.count());
    keep.for_each_set([&](std::size_t j) { c.coordinate_labels.push_back(field.point(j)); });

    std::vector<BitVec> restricted;
    restricted.reserve(funcs.size());
    for (const BooleanFunction& f : funcs) restricted.push_back(restrict_to_mask(f.tt, keep));

    c.rows = independent_subset(restricted);
    c.k = int(c.rows.size());
    c.rank_collapsed = c.rows.size() != funcs.size();
    return c;
}

WeightDistribution weight_distribution(const LinearCode& c) {
    if (c.k > kWeightEnumBudget)
        throw TooLarge("weight enumeration needs k <= " + std::to_string(kWeightEnumBudget));
    std::vector<std::uint64_t> byw(std::size_t(c.n) + 1, 0);
    enumerate_codewords(c, [&](const BitVec& cw) { ++byw[cw.count()]; });
    WeightDistribution d;
    for (std::size_t w = 0; w < byw.size(); ++w)
        if (byw[w]) d.counts[int(w)] = byw[w];
    return d;
}

int min_distance(const LinearCode& c) {
    if (c.k > kWeightEnumBudget)
        throw TooLarge("weight enumeration needs k <= " + std::to_string(kWeightEnumBudget));
    if (c.k == 0) throw Error("zero code has no minimum distance");
    std::size_t best = std::size_t(c.n) + 1;
    bool first = true;
    enumerate_codewords(c, [&](const BitVec& cw) {
        if (first) {  // skip the zero word
            first = false;
            return;
        }
        best = std::min(best, cw.count());
    });
    return int(best);
}

MinimalityReport is_minimal_exact(const LinearCode& c) {
    if (c.k > kPairwiseBudget)
        throw TooLarge("pairwise check needs k <= " + std::to_string(kPairwiseBudget));
    std::vector<BitVec> words;
    words.reserve(std::size_t(1) << c.k);
    enumerate_codewords(c, [&](const BitVec& cw) { words.push_back(cw); });

    MinimalityReport rep;
    rep.method = Method::ExactPairwise;
    for (std::size_t i = 1; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (words[i].is_subset_of(words[j])) {
                rep.verdict = Verdict::NotMinimal;
                rep.witness = {words[i], words[j]};
                return rep;
            }
            if (words[j].is_subset_of(words[i])) {
                rep.verdict = Verdict::NotMinimal;
                rep.witness = {words[j], words[i]};
                return rep;
            }
        }
    }
    rep.verdict = Verdict::Minimal;
    return rep;
}

MinimalityReport is_minimal_ab(const LinearCode& c) {
    const WeightDistribution d = weight_distribution(c);
    MinimalityReport rep;
    rep.method = Method::AshikhminBarg;
    rep.verdict = 2 * d.min_nonzero_weight() > d.max_weight() ? Verdict::Minimal : Verdict::Unknown;
    return rep;
}

MinimalityReport annihilator_minimality_criterion(const FieldSpec& field,
                                                  const std::vector<BooleanFunction>& funcs,
                                                  const SupportSet& D) {
    const int k = int(funcs.size());
    if (k > kPairwiseBudget)
        throw TooLarge("annihilator criterion needs k <= " + std::to_string(kPairwiseBudget));

    // D-masked tables of all nonzero span members; the product f1 f2 vanishes
    // on D exactly when the masked tables do not intersect
    std::vector<BitVec> masked;
    masked.reserve((std::size_t(1) << k) - 1);
    BitVec cur(field.field_size());
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << k); ++i) {
        cur ^= funcs[std::size_t(std::countr_zero(i))].tt;
        masked.push_back(cur & D.mask);
    }

    MinimalityReport rep;
    rep.method = Method::AnnihilatorCriterion;
    rep.verdict = Verdict::Minimal;
    for (const BitVec& t : masked) {
        if (t.none()) {  // f itself annihilates D: the punctured code drops rank
            rep.verdict = Verdict::NotMinimal;
            rep.dimension_preserved = false;
        }
    }
    for (std::size_t i = 0; i < masked.size() && !rep.witness; ++i) {
        for (std::size_t j = i + 1; j < masked.size(); ++j) {
            if (masked[i].intersects(masked[j])) continue;
            rep.verdict = Verdict::NotMinimal;
            if (masked[i].any() && masked[j].any()) {
                // Supp(f1|D) is strictly inside Supp((f1+f2)|D)
                rep.witness = {restrict_to_mask(masked[i], D.mask),
                               restrict_to_mask(masked[i] | masked[j], D.mask)};
                break;
            }
        }
    }
    return rep;
}

LinearCode puncture(const LinearCode& c, const BitVec& keep) {
    if (keep.none()) throw EmptyKeepSet("puncturing must keep at least one coordinate");
    LinearCode out;
    out.n = int(keep.count());
    std::vector<BitVec> restricted;
    restricted.reserve(c.rows.size());
    for (const BitVec& r : c.rows) restricted.push_back(restrict_to_mask(r, keep));
    out.rows = independent_subset(restricted);
    out.k = int(out.rows.size());
    out.rank_collapsed = out.rows.size() != c.rows.size();
    if (!c.coordinate_labels.empty()) {
        keep.for_each_set(
            [&](std::size_t j) { out.coordinate_labels.push_back(c.coordinate_labels[j]); });
    }
    return out;
}

LinearCode shorten(const LinearCode& c, const BitVec& drop) {
    // message combinations x with (x G)|drop = 0: kernel of the |drop| x k
    // matrix mat[j][i] = rows[i][dropped_j]
    const std::vector<std::size_t> dropped = drop.set_bits();
    const std::size_t k = c.rows.size();
    std::vector<BitVec> mat;
    mat.reserve(dropped.size());
    for (std::size_t j : dropped) {
        BitVec row(k);
        for (std::size_t i = 0; i < k; ++i)
            if (c.rows[i].get(j)) row.set(i);
        mat.push_back(std::move(row));
    }
    // kernel of mat (|drop| x k) = messages vanishing on dropped columns
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < mat.size(); ++col) {
        std::size_t pr = rank;
        while (pr < mat.size() && !mat[pr].get(col)) ++pr;
        if (pr == mat.size()) continue;
        std::swap(mat[rank], mat[pr]);
        for (std::size_t r2 = 0; r2 < mat.size(); ++r2)
            if (r2 != rank && mat[r2].get(col)) mat[r2] ^= mat[rank];
        pivots.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(k, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    const BitVec keep = drop.complement();
    LinearCode out;
    out.n = int(keep.count());
    for (std::size_t col = 0; col < k; ++col) {
        if (is_pivot[col]) continue;
        BitVec word(std::size_t(c.n));
        word ^= c.rows[col];
        for (std::size_t r2 = 0; r2 < rank; ++r2)
            if (mat[r2].get(col)) word ^= c.rows[pivots[r2]];
        out.rows.push_back(restrict_to_mask(word, keep));
    }
    out.rows = independent_subset(out.rows);
    out.k = int(out.rows.size());
    if (!c.coordinate_labels.empty()) {
        keep.for_each_set(
            [&](std::size_t j) { out.coordinate_labels.push_back(c.coordinate_labels[j]); });
    }
    return out;
}

BitVec columns_for_points(const LinearCode& c, const SupportSet& points) {
    BitVec mask(std::size_t(c.n));
    for (std::size_t col = 0; col < c.coordinate_labels.size(); ++col) {
        const std::uint32_t v = c.coordinate_labels[col];
        if (points.mask.get(points.field->point_index(v))) mask.set(col);
    }
    return mask;
}

}  // namespace mincodes
