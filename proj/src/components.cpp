#include "hilbscroll/components.hpp"

#include <algorithm>
#include <string>

#include "hilbscroll/error.hpp"
#include "hilbscroll/gonal.hpp"

namespace hilbscroll {

namespace {

std::string str(Int v) { return std::to_string(v); }

std::string h_name(Int m) { return "H^" + str(m); }

std::string z_name(Int t, Int l) { return "Z_{" + str(t) + "," + str(l) + "}"; }

std::optional<BundleClass> certified_bundle_class(const ScrollParams& p, Int m, Moduli moduli) {
  try {
    return stability_class(p, m, moduli);
  } catch (const InputError& e) {
    if (e.code() == "nonnegative-self-intersection") return std::nullopt;
    throw;
  }
}

void add_general_moduli(ClassificationReport& r, const DegreeRange& range) {
  const ScrollParams& p = r.params;
  const Int canonical = 2 * p.g - 2;
  // for h1 = 1 the smaller m are subloci of H^{2g-2}, not components
  const Int first = p.h1 == 1 ? range.hi : range.lo;
  for (Int m = first; m <= range.hi; ++m) {
    ComponentRecord c;
    c.kind = ComponentKind::GeneralModuli;
    c.d = p.d;
    c.g = p.g;
    c.h1 = p.h1;
    c.m = m;
    c.dim = component_dimension(p, m);
    c.generically_smooth = true;
    c.bundle_class = certified_bundle_class(p, m, Moduli::General);
    const std::size_t idx = r.components.size();
    r.components.push_back(c);
    if (!c.bundle_class) {
      r.notes.push_back({"boundary",
                         h_name(m) + ": Gamma^2 = 2m - d = " + str(2 * m - p.d) +
                             " >= 0, uniqueness of the special section and bundle class not "
                             "certified at this degree",
                         idx});
    }
  }

  if (p.h1 == 1) {
    for (Int m = range.lo; m < canonical; ++m) {
      r.notes.push_back({"sublocus",
                         "scrolls with special section of degree m=" + str(m) +
                             " fill an irreducible sublocus of " + h_name(canonical) +
                             " of codimension " + str(sublocus_codim_h1_1(p.g, m)),
                         0});
    }
    if (range.lo < canonical) {
      r.notes.push_back({"containment",
                         "every H^m with m < " + str(canonical) + " lies in the closure of " +
                             h_name(canonical),
                         0});
    }
    r.notes.push_back({"connectivity", "H_{d,g,1} is connected", std::nullopt});
  }

  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const Int m = r.components[i].m;
    if (2 * p.g - 3 - m < 0) {
      r.notes.push_back({"singular-points",
                         h_name(m) + ": 2g-3-m < 0, no singular points from base points of |K - L|",
                         i});
    } else if (singular_point_predicate(p.g, p.h1, m)) {
      r.notes.push_back({"singular-points",
                         h_name(m) + " contains singular points of the Hilbert scheme: scrolls "
                                     "whose residual series |K - L| has base points",
                         i});
    }
    std::string inner;
    for (std::size_t j = 0; j < i; ++j) {
      const Int n = r.components[j].m;
      if (singular_by_smaller_section(p.g, p.h1, m, n)) {
        inner += (inner.empty() ? "" : ",") + str(n);
      }
    }
    if (!inner.empty()) {
      r.notes.push_back({"singular-points",
                         h_name(m) + ": scrolls whose special section has degree n in {" + inner +
                             "} also lie on H^n and are singular points",
                         i});
    }
  }
}

void add_gonal(ClassificationReport& r, const std::vector<GonalParams>& gonal) {
  const ScrollParams& p = r.params;
  bool any_l2 = false;
  for (const GonalParams& gp : gonal) {
    ComponentRecord c;
    c.kind = ComponentKind::Gonal;
    c.d = p.d;
    c.g = p.g;
    c.h1 = p.h1;
    c.m = gp.m;
    c.t = gp.t;
    c.l = gp.l;
    c.dim = z_component_dimension(gp);
    c.bundle_class = certified_bundle_class(p, gp.m, Moduli::Special);
    const std::size_t idx = r.components.size();
    r.components.push_back(c);
    const Int diff = z_vs_h_difference(gp);
    if (gp.l >= 3 && diff >= 0) {
      r.notes.push_back({"non-containment",
                         z_name(gp.t, gp.l) + " is not contained in any H^m (dim Z - dim " +
                             h_name(gp.m) + " = " + str(diff) + " >= 0)",
                         idx});
    }
    any_l2 = any_l2 || gp.l == 2;
  }
  if (any_l2) {
    r.notes.push_back({"completeness",
                       "every component of Hilb(d,g,2) is an H^m or a Z_{t,2}; all have the "
                       "same dimension",
                       std::nullopt});
  }
}

}  // namespace

const char* to_string(ComponentKind k) {
  return k == ComponentKind::GeneralModuli ? "GeneralModuli" : "Gonal";
}

std::vector<Int> admissible_m_range(Int g, Int h1) {
  const auto range = general_section_degrees(g, h1);
  if (!range) {
    throw InputError("BN1-violated", "g < 4*h1 (g=" + str(g) + ", h1=" + str(h1) +
                                         "); only special-moduli components can exist");
  }
  std::vector<Int> out;
  for (Int m = range->lo; m <= range->hi; ++m) out.push_back(m);
  return out;
}

Int component_dimension_formula(const ScrollParams& p, Int m) {
  const Int r1 = p.R + 1;
  return 7 * (p.g - 1) + r1 * (r1 - p.h1) + (p.d - m - p.g + 1) * p.h1 -
         (p.d - 2 * m + p.g - 1);
}

Int component_dimension(const ScrollParams& p, Int m) {
  check_component_tuple(p, m, Moduli::General);
  return component_dimension_formula(p, m);
}

Int component_dimension_h1_1(Int d, Int g) {
  const ScrollParams p = make_scroll(d, g, 1);
  const Int threshold = min_degree_threshold(g, 1);
  if (d < threshold) {
    throw InputError("degree-below-threshold",
                     "d >= " + str(threshold) + " required (got d=" + str(d) + ")");
  }
  const Int s = p.d - 2 * p.g + 3;
  return 7 * (p.g - 1) + s * s - s;
}

Int sublocus_codim_h1_1(Int g, Int m) {
  if (m >= 2 * g - 2) {
    throw InputError("m-not-below-canonical",
                     "m < 2g-2 = " + str(2 * g - 2) + " required (got m=" + str(m) + ")");
  }
  return 2 * g - 2 - m;
}

bool singular_point_predicate(Int g, Int h1, Int m) {
  if (2 * g - 3 - m < 0) return false;
  return g * (h1 + 1) >= h1 * (m + h1 + 2);
}

bool singular_by_smaller_section(Int /*g*/, Int /*h1*/, Int m_outer, Int m_inner) {
  return m_inner < m_outer;
}

ClassificationReport classify(const ScrollParams& p, bool include_gonal) {
  const Int threshold = min_degree_threshold(p.g, p.h1);
  if (p.d < threshold) {
    throw InputError("degree-below-threshold",
                     "d >= " + str(threshold) + " required (got d=" + str(p.d) + ")");
  }
  const auto range = general_section_degrees(p.g, p.h1);
  std::vector<GonalParams> gonal;
  if (include_gonal) gonal = gonal_components(p.d, p.g, p.h1);
  if (!range && gonal.empty()) {
    throw InputError("BN1-violated",
                     "g < 4*h1 (g=" + str(p.g) + ", h1=" + str(p.h1) +
                         ") and no special-moduli component was requested or found");
  }

  ClassificationReport r;
  r.params = p;
  if (range) {
    add_general_moduli(r, *range);
  } else {
    r.notes.push_back({"special-moduli",
                       "g < 4*h1: no component has general moduli", std::nullopt});
  }
  add_gonal(r, gonal);

  if (include_gonal && p.h1 >= 2 && p.d < 6 * p.g - 5) {
    r.notes.push_back({"gonal-range",
                       "no Z_{t,l} family is constructed below d = 6g-5 = " + str(6 * p.g - 5),
                       std::nullopt});
  }
  r.complete = p.h1 == 1 || (p.h1 == 2 && include_gonal);
  if (include_gonal && p.h1 >= 3) {
    r.notes.push_back({"completeness",
                       "component list not known to be exhaustive for h1 >= 3", std::nullopt});
  }

  r.reducible = r.components.size() > 1;
  r.equidimensional = std::all_of(r.components.begin(), r.components.end(),
                                  [&](const ComponentRecord& c) {
                                    return c.dim == r.components.front().dim;
                                  });
  return r;
}

}  // namespace hilbscroll
