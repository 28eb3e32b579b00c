#include "mincodes/boolfun.hpp"

#include <algorithm>
#include <bit>

#include "mincodes/bounds.hpp"

namespace mincodes {

namespace {

bool same_field(const FieldSpec& a, const FieldSpec& b) {
    return a.m() == b.m() && a.primitive_poly_mask() == b.primitive_poly_mask();
}

}  // namespace

BooleanFunction VectorialFunction::component_combination(std::uint32_t v) const {
    BooleanFunction g = zero_function(*field);
    for (int i = 0; i < r(); ++i)
        if ((v >> i) & 1) g.tt ^= components[std::size_t(i)].tt;
    return g;
}

SupportSet VectorialFunction::preimage(std::uint32_t y) const {
    BitVec mask = BitVec(field->field_size()).complement();
    for (int i = 0; i < r(); ++i) {
        const BitVec& ci = components[std::size_t(i)].tt;
        mask &= ((y >> i) & 1) ? ci : ci.complement();
    }
    return {field, mask};
}

SupportSet support_of(const BooleanFunction& f) { return {f.field, f.tt}; }

SupportSet support_from_values(const FieldSpec& field, const std::vector<std::uint32_t>& values) {
    SupportSet s{&field, BitVec(field.field_size())};
    for (std::uint32_t v : values) s.mask.set(field.point_index(v));
    return s;
}

SupportSet interval_support(const FieldSpec& field, std::int64_t h, std::uint64_t delta) {
    const std::uint64_t n = field.group_order();
    if (delta < 1 || delta > n) throw BadSize("interval size must be in [1, 2^m - 1]");
    SupportSet s{&field, BitVec(field.field_size())};
    const std::uint64_t h0 = std::uint64_t(((h % std::int64_t(n)) + std::int64_t(n)) % std::int64_t(n));
    for (std::uint64_t i = 0; i < delta; ++i)
        s.mask.set(std::size_t((h0 + i) % n) + 1);  // point index of alpha^{h+i}
    return s;
}

BooleanFunction zero_function(const FieldSpec& field) {
    return {&field, BitVec(field.field_size())};
}

BooleanFunction trace_function(const FieldSpec& field, std::uint32_t a) {
    BooleanFunction f = zero_function(field);
    if (a == 0) return f;
    const std::uint32_t la = field.log(a);
    const std::uint32_t n = field.group_order();
    for (std::uint32_t e = 0; e < n; ++e)
        if (field.trace_of_exponent(la + e)) f.tt.set(std::size_t(e) + 1);
    return f;
}

void mobius_transform(BitVec& a) {
    // a[v] ^= a[v ^ 2^i] for every v with bit i set; in-word for i < 6,
    // word-block for i >= 6
    static constexpr std::uint64_t kLowMask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    const std::size_t nw = a.word_count();
    for (int i = 0; std::size_t(1) << i < a.size(); ++i) {
        if (i < 6) {
            for (std::size_t w = 0; w < nw; ++w)
                a.word(w) ^= (a.word(w) & kLowMask[i]) << (1u << i);
        } else {
            const std::size_t stride = std::size_t(1) << (i - 6);
            for (std::size_t base = 0; base < nw; base += 2 * stride)
                for (std::size_t j = 0; j < stride; ++j)
                    a.word(base + stride + j) ^= a.word(base + j);
        }
    }
}

BitVec value_indexed_table(const BooleanFunction& f) {
    const FieldSpec& fd = *f.field;
    BitVec vt(fd.field_size());
    f.tt.for_each_set([&](std::size_t j) { vt.set(fd.point(j)); });
    return vt;
}

BooleanFunction from_value_indexed(const FieldSpec& field, const BitVec& values) {
    BooleanFunction f = zero_function(field);
    values.for_each_set([&](std::size_t v) { f.tt.set(field.point_index(std::uint32_t(v))); });
    return f;
}

std::optional<int> algebraic_degree(const BooleanFunction& f) {
    if (f.is_zero()) return std::nullopt;
    BitVec anf = value_indexed_table(f);
    mobius_transform(anf);
    int deg = 0;
    anf.for_each_set([&](std::size_t mask) { deg = std::max(deg, std::popcount(std::uint64_t(mask))); });
    return deg;
}

namespace {

// monomial masks with popcount <= t, ordered by (degree, mask)
std::vector<std::uint32_t> monomials_up_to(int m, int t) {
    std::vector<std::uint32_t> mono;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << m); ++s)
        if (std::popcount(s) <= t) mono.push_back(s);
    std::stable_sort(mono.begin(), mono.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return mono;
}

// kernel of the rows-by-cols GF(2) matrix, deterministic basis
std::vector<BitVec> gf2_kernel(std::vector<BitVec> rows, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pr = rank;
        while (pr < rows.size() && !rows[pr].get(c)) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<BitVec> kernel;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        BitVec k(cols);
        k.set(c);
        for (std::size_t r = 0; r < rank; ++r)
            if (rows[r].get(c)) k.set(pivot_cols[r]);
        kernel.push_back(std::move(k));
    }
    return kernel;
}

}  // namespace

AnnihilatorBasis annihilator_space(const SupportSet& D, int degree_bound) {
    const FieldSpec& field = *D.field;
    const int m = field.m();
    if (degree_bound < 0 || degree_bound > m) throw BadParams("degree bound must be in [0, m]");

    const std::vector<std::uint32_t> mono = monomials_up_to(m, degree_bound);
    const std::size_t cols = mono.size();

    std::vector<BitVec> rows;
    rows.reserve(D.size());
    D.mask.for_each_set([&](std::size_t j) {
        const std::uint32_t v = field.point(j);
        BitVec row(cols);
        for (std::size_t c = 0; c < cols; ++c)
            if ((v & mono[c]) == mono[c]) row.set(c);
        rows.push_back(std::move(row));
    });

    AnnihilatorBasis out;
    out.degree_bound = degree_bound;
    for (const BitVec& k : gf2_kernel(std::move(rows), cols)) {
        BitVec anf(field.field_size());
        k.for_each_set([&](std::size_t c) { anf.set(mono[c]); });
        mobius_transform(anf);  // ANF -> value table (involution)
        BooleanFunction g = from_value_indexed(field, anf);
        if (g.tt.intersects(D.mask)) throw Error("annihilator fails to vanish on D");
        out.basis.push_back(std::move(g));
    }
    return out;
}

AiValue ai_of_set(const SupportSet& D) {
    if (D.mask.none()) return AiValue::neg_inf();
    if (D.mask.count() == D.mask.size()) return AiValue::pos_inf();
    for (int t = 0; t <= D.field->m(); ++t)
        if (annihilator_space(D, t).dimension() > 0) return AiValue::finite(t);
    throw Error("nonfull set with no annihilator of degree <= m");
}

int ai_of_interval(int m, std::uint64_t delta, bool include_zero) {
    const std::uint64_t n = (std::uint64_t(1) << m) - 1;
    if (delta < 1 || delta > n) throw BadSize("interval size must be in [1, 2^m - 1]");
    if (include_zero) return interval_t_parameter(m, delta);
    return interval_t_parameter_no_zero(m, delta);
}

int ai_of_function(const BooleanFunction& f) {
    if (f.is_constant()) throw ConstantFunction("AI of a constant function is undefined");
    const AiValue a = ai_of_set(support_of(f));
    const AiValue b = ai_of_set(support_of(f.complement()));
    return std::min(a, b).finite_value();
}

AiValue ai_of_vectorial(const VectorialFunction& F) {
    AiValue best = AiValue::pos_inf();
    for (std::uint32_t y = 0; y < (std::uint32_t(1) << F.r()); ++y)
        best = std::min(best, ai_of_set(F.preimage(y)));
    return best;
}

AiValue pairwise_preimage_ai_bound_check(const VectorialFunction& F, std::uint32_t v1,
                                         std::uint32_t v2, int eps1, int eps2) {
    if (v1 == 0 || v2 == 0 || v1 == v2)
        throw DependentMasks("component masks must be distinct and nonzero");
    const BitVec b1 = F.component_combination(v1).tt;
    const BitVec b2 = F.component_combination(v2).tt;
    SupportSet D{F.field, (eps1 ? b1 : b1.complement()) & (eps2 ? b2 : b2.complement())};
    const AiValue ai_d = ai_of_set(D);
    if (ai_d < ai_of_vectorial(F)) throw Error("pairwise preimage AI fell below AI(F)");
    return ai_d;
}

VectorialFunction partition_vectorial(const FieldSpec& field,
                                      const std::vector<std::uint32_t>& breakpoints,
                                      const std::vector<std::uint32_t>& labels) {
    const std::size_t blocks = breakpoints.empty() ? 0 : breakpoints.size() - 1;
    if (blocks < 2 || (blocks & (blocks - 1)) != 0)
        throw BadBreakpoints("need 2^r + 1 breakpoints with r >= 1");
    const int r = std::countr_zero(blocks);
    if (breakpoints.front() != 0 || breakpoints.back() != field.group_order())
        throw BadBreakpoints("breakpoints must start at 0 and end at 2^m - 1");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (breakpoints[i] >= breakpoints[i + 1])
            throw BadBreakpoints("breakpoints must be strictly increasing");

    if (labels.size() != blocks || labels[0] != 0)
        throw BadParams("labels must enumerate GF(2)^r starting with the zero vector");
    std::vector<bool> seen(blocks, false);
    for (std::uint32_t y : labels) {
        if (y >= blocks || seen[y]) throw BadParams("labels must be a permutation of GF(2)^r");
        seen[y] = true;
    }

    VectorialFunction F{&field, {}};
    for (int c = 0; c < r; ++c) F.components.push_back(zero_function(field));
    for (std::size_t i = 0; i < blocks; ++i) {
        for (std::uint32_t j = breakpoints[i]; j < breakpoints[i + 1]; ++j)
            for (int c = 0; c < r; ++c)
                if ((labels[i] >> c) & 1) F.components[std::size_t(c)].tt.set(std::size_t(j) + 1);
    }
    return F;  // F(0) = labels[0] = 0 comes out automatically
}

VectorialFunction partition_vectorial(const FieldSpec& field,
                                      const std::vector<std::uint32_t>& breakpoints) {
    std::vector<std::uint32_t> labels(breakpoints.size() - 1);
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = std::uint32_t(i);
    return partition_vectorial(field, breakpoints, labels);
}

int partition_ai_formula(int m, const std::vector<std::uint32_t>& breakpoints) {
    const std::uint64_t first_gap = breakpoints[1] - breakpoints[0];
    std::uint64_t min_other = ~std::uint64_t(0);
    for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i)
        min_other = std::min<std::uint64_t>(min_other, breakpoints[i + 1] - breakpoints[i]);
    int t = 1;
    while (t + 1 <= m + 1 && binomial_sum(m, 1, t) <= first_gap &&
           binomial_sum(m, 0, t) <= min_other)
        ++t;
    return t;
}

std::size_t hamming_distance(const BooleanFunction& f, const BooleanFunction& g) {
    if (!same_field(*f.field, *g.field))
        throw FieldMismatch("functions live on different fields");
    return (f.tt ^ g.tt).count();
}

}  // namespace mincodes
