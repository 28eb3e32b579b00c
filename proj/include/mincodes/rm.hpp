#pragma once

#include <cstdint>
#include <vector>

#include "mincodes/codes.hpp"
#include "mincodes/field.hpp"
#include "mincodes/gf2poly.hpp"

namespace mincodes {

// Reed-Muller family over the point enumeration P_0 = 0, P_j = alpha^{j-1}.
// The punctured and shortened codes PRM/SRM drop the P_0 coordinate and are
// cyclic of length 2^m - 1 with respect to the chosen primitive element.
//
// Every builder takes beta_exponent: the primitive element actually used is
// beta = alpha^e, which must be primitive (gcd(e, 2^m - 1) = 1). Conjugate
// exponents give identical codes, so sweeps iterate one representative per
// conjugacy class.

// Generator polynomial of PRM(ell, m): product of (X - beta^s) over the
// exponents s of 2-weight 1..m-1-ell, expanded over GF(2^m); every
// coefficient is checked to land in GF(2).
BinaryPolynomial prm_generator_poly(const FieldSpec& field, int ell, std::uint32_t beta_exponent = 1);

// Generator polynomial of SRM(ell, m): (X - 1) * prm_generator_poly.
BinaryPolynomial srm_generator_poly(const FieldSpec& field, int ell, std::uint32_t beta_exponent = 1);

// The epsilon-dimensional cyclic-shift subcode of SRM(2, m) with rows
// X^i * g*(X) mod (X^n - 1), i = 0..epsilon-1; 1 <= epsilon < m(m-1)/2.
LinearCode subcode_c_epsilon(const FieldSpec& field, int epsilon, std::uint32_t beta_exponent = 1);

// f(x) = Tr(a x^{2^i+1}) on all 2^m points.
BooleanFunction gold_function(const FieldSpec& field, int i, std::uint32_t a);
// f(x) = Tr^{m/2}_1(a x^{2^{m/2}+1}) for even m; a must lie in GF(2^{m/2}).
BooleanFunction gold_function_subfield(const FieldSpec& field, std::uint32_t a);

// Generators of the pure quadratic cyclic subcode of SRM(2,m) for odd m:
// Tr(a x^{2^i+1}), 1 <= i <= (m-1)/2, a over the power basis.
std::vector<BooleanFunction> quad_odd_functions(const FieldSpec& field);
// Generators of the quadratic+linear subcode, any m >= 3:
// Tr(a x^{2^i+1}) for 2 <= i <= m/2 (subfield coefficients at i = m/2 for
// even m) plus the linear forms Tr(b x).
std::vector<BooleanFunction> quad_mixed_functions(const FieldSpec& field);

// The codes above evaluated on GF(2^m)*, dimension m(m-1)/2 (rank-checked).
// quad_code_odd refuses even m: the construction is not minimal there.
LinearCode quad_code_odd(const FieldSpec& field);
LinearCode quad_code_mixed(const FieldSpec& field);

// RM(ell, m) on all 2^m points, rows = coordinate monomials of degree <= ell.
LinearCode rm_code(const FieldSpec& field, int ell);
std::vector<BooleanFunction> rm_monomial_functions(const FieldSpec& field, int ell);
// puncture / shorten of RM(ell, m) at P_0
LinearCode prm_code(const FieldSpec& field, int ell);
LinearCode srm_code(const FieldSpec& field, int ell);

// Basis of SRM(2, m) as quadratic trace forms plus linear forms (the unique
// f(0) = 0 representation); used to cross-check the cyclic construction.
std::vector<BooleanFunction> srm2_trace_form_basis(const FieldSpec& field);

// The nonzero points in cyclic order alpha^0, alpha^1, ...
SupportSet nonzero_points(const FieldSpec& field);

}  // namespace mincodes
