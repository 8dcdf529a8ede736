#pragma once

// Families Y^m_{k,l}: general projections to P^r, r = d - 2g + 1 + k, of the
// general scroll of H^m_{d,g,l}, compared against the components they could
// fall into.

#include "hilbscroll/series.hpp"

namespace hilbscroll {

struct ProjectionParams {
  Int d = 0;
  Int g = 0;
  Int l = 0;  ///< source speciality
  Int k = 0;  ///< target speciality, 0 <= k < l
  Int m = 0;
  Int r = 0;  ///< target ambient dimension
};

/// Validates 0 <= k < l, r >= 3 and that (d, g, l, m) is a general-moduli
/// component tuple.
ProjectionParams make_projection(Int d, Int g, Int l, Int k, Int m);

/// Lower bound
/// 5g-5 + (r+1)^2 - chi(N - L) - l(m-g+l+1) + (l-k)(r+1), chi(N - L) = d-2m+1-g.
Int y_dim_lower_bound(const ProjectionParams& pp);

/// (l-k)(d-m-g+1-k-l), a lower bound for dim Y - dim H^m_{d,g,k}. Requires
/// k > 0, or k = 0 with l > 1 ("projection-case-out-of-range").
Int y_vs_target_difference(const ProjectionParams& pp);

/// l(d-g-l+1-m) - (g-1+d-2m): the bound minus dim H_{d,g} for k = 0.
Int y_vs_nonspecial_difference(const ProjectionParams& pp);

enum class ProjectionCase {
  SpecialTarget,     ///< k > 0
  NonSpecialTarget,  ///< k = 0, l > 1
  Divisor,           ///< k = 0, l = 1, m = 2g - 2
};

const char* to_string(ProjectionCase c);

struct ProjectionVerdict {
  ProjectionCase which = ProjectionCase::SpecialTarget;
  Int y_dim = 0;
  bool y_dim_exact = false;  ///< only the divisor case is exact
  /// Certified that Y lies in a component other than the candidate targets.
  bool new_component = false;
  /// Case (i): whether the gate k < l <= g/4 holds.
  bool gate_holds = false;
  Int difference = 0;
};

ProjectionVerdict projection_verdict(const ProjectionParams& pp);

struct DivisorCase {
  Int h_dim = 0;  ///< dim H_{d,g} = 7(g-1) + (r+1)^2, r = d - 2g + 1
  Int y_dim = 0;  ///< h_dim - 1
};

/// Y^{2g-2}_{0,1}, a divisor in the non-special component H_{d,g}.
DivisorCase divisor_case(Int d, Int g);

}  // namespace hilbscroll
