#include "hilbscroll/projections.hpp"

#include <string>

#include "hilbscroll/error.hpp"
#include "hilbscroll/scroll.hpp"

namespace hilbscroll {

namespace {

std::string str(Int v) { return std::to_string(v); }

}  // namespace

ProjectionParams make_projection(Int d, Int g, Int l, Int k, Int m) {
  const ScrollParams source = make_scroll(d, g, l);
  if (k < 0 || k >= l) {
    throw InputError("target-speciality-out-of-range",
                     "0 <= k < l required (got k=" + str(k) + ", l=" + str(l) + ")");
  }
  const Int r = d - 2 * g + 1 + k;
  if (r < 3) throw InputError("ambient-too-small", "r = d - 2g + 1 + k = " + str(r));
  check_component_tuple(source, m, Moduli::General);
  return ProjectionParams{d, g, l, k, m, r};
}

Int y_dim_lower_bound(const ProjectionParams& pp) {
  const Int r1 = pp.r + 1;
  const Int chi_NL = pp.d - 2 * pp.m + 1 - pp.g;
  return 5 * pp.g - 5 + r1 * r1 - chi_NL - pp.l * (pp.m - pp.g + pp.l + 1) + (pp.l - pp.k) * r1;
}

Int y_vs_target_difference(const ProjectionParams& pp) {
  if (pp.k == 0 && pp.l <= 1) {
    throw InputError("projection-case-out-of-range",
                     "k > 0, or k = 0 with l > 1, required (the l=1, k=0 case is the divisor "
                     "case)");
  }
  return (pp.l - pp.k) * (pp.d - pp.m - pp.g + 1 - pp.k - pp.l);
}

Int y_vs_nonspecial_difference(const ProjectionParams& pp) {
  return pp.l * (pp.d - pp.g - pp.l + 1 - pp.m) - (pp.g - 1 + pp.d - 2 * pp.m);
}

const char* to_string(ProjectionCase c) {
  switch (c) {
    case ProjectionCase::SpecialTarget:
      return "special-target";
    case ProjectionCase::NonSpecialTarget:
      return "nonspecial-target";
    case ProjectionCase::Divisor:
      return "divisor";
  }
  return "special-target";
}

ProjectionVerdict projection_verdict(const ProjectionParams& pp) {
  ProjectionVerdict v;
  v.y_dim = y_dim_lower_bound(pp);
  if (pp.k > 0) {
    v.which = ProjectionCase::SpecialTarget;
    v.gate_holds = 4 * pp.l <= pp.g;
    v.difference = y_vs_target_difference(pp);
    v.new_component = v.gate_holds && v.difference > 0;
  } else if (pp.l > 1) {
    v.which = ProjectionCase::NonSpecialTarget;
    v.gate_holds = true;
    v.difference = y_vs_nonspecial_difference(pp);
    v.new_component = v.difference >= 0;
  } else {
    if (pp.m != 2 * pp.g - 2) {
      throw InputError("projection-case-out-of-range",
                       "l = 1, k = 0 is only described for m = 2g-2 (got m=" + str(pp.m) + ")");
    }
    const DivisorCase dc = divisor_case(pp.d, pp.g);
    v.which = ProjectionCase::Divisor;
    v.gate_holds = true;
    v.y_dim = dc.y_dim;
    v.y_dim_exact = true;
    v.difference = dc.y_dim - dc.h_dim;
    v.new_component = false;
  }
  return v;
}

DivisorCase divisor_case(Int d, Int g) {
  const ScrollParams source = make_scroll(d, g, 1);
  const Int threshold = min_degree_threshold(g, 1);
  if (d < threshold) {
    throw InputError("degree-below-threshold",
                     "d >= " + str(threshold) + " required (got d=" + str(d) + ")");
  }
  const Int r = source.d - 2 * source.g + 1;
  const Int h_dim = 7 * (g - 1) + (r + 1) * (r + 1);
  return DivisorCase{h_dim, h_dim - 1};
}

}  // namespace hilbscroll
