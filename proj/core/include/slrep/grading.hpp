#ifndef SLREP_GRADING_HPP
#define SLREP_GRADING_HPP

#include <map>
#include <vector>

#include "slrep/ratfunc.hpp"

namespace slrep {

/// Homogeneous degree-d component of a rational function (or zero).
/// Substituting x_i -> y x_i multiplies the value by y^d.
struct GradedSlice {
    int degree = 0;
    RatFunc value;
};

/// The degree valuation: v(f) = deg(den) - deg(num) on top homogeneous
/// parts, so v(x_i) = -1 and v(fg) = v(f) + v(g). Zero input is a domain
/// error.
int degree_valuation(const RatFunc& f);

/// Exact degree-d homogeneous component of the graded Laurent expansion:
/// the denominator's top part is inverted degree by degree, to exactly the
/// depth the requested degree needs. Zero input yields the zero slice.
GradedSlice project_degree(const RatFunc& f, int d);

/// Scaling test for homogeneity of degree d, via a fresh variable.
bool is_homogeneous_of_degree(const RatFunc& f, int d);

/// Additivity, V_0-linearity for a degree-0 homogeneous c, and equivariance
/// of the projection under every adjacent transposition; c not degree-0
/// homogeneous is a domain error.
bool check_v0_linearity(const RatFunc& f, const RatFunc& g, const RatFunc& c, int d);

/// Write f = sum_S c_S prod_{t in S} x_t with every c_S in the subfield
/// generated by squares: each variable occurs with even exponents in the
/// normalized numerator and denominator of c_S. Keys are the sorted odd-
/// parity supports. Denominators with more than 12 variables exceed the
/// rationalization cap (a resource error).
std::map<std::vector<int>, RatFunc> square_subfield_decompose(const RatFunc& f);

/// Even-parity check backing the decomposition's postcondition.
bool has_even_parity(const RatFunc& f);

} // namespace slrep

#endif
