#include "hilbscroll/scroll.hpp"

#include <algorithm>
#include <string>

#include "hilbscroll/error.hpp"

namespace hilbscroll {

namespace {

std::string str(Int v) { return std::to_string(v); }

std::string triple(const ScrollParams& p) {
  return "(d=" + str(p.d) + ", g=" + str(p.g) + ", h1=" + str(p.h1) + ")";
}

}  // namespace

ScrollParams make_scroll(Int d, Int g, Int h1) {
  if (g < 3) throw InputError("genus-too-small", "g >= 3 required (got g=" + str(g) + ")");
  if (h1 <= 0 || h1 >= g) {
    throw InputError("speciality-out-of-range",
                     "0 < h1 < g required (got h1=" + str(h1) + ", g=" + str(g) + ")");
  }
  if (d < 2 * g + 2) {
    throw InputError("degree-too-small",
                     "d >= 2g+2 = " + str(2 * g + 2) + " required (got d=" + str(d) + ")");
  }
  const Int R = d - 2 * g + 1 + h1;
  if (R < 3) {
    throw InputError("ambient-too-small",
                     "R = d - 2g + 1 + h1 = " + str(R) + " must be at least 3");
  }
  return ScrollParams{d, g, h1, R};
}

Int cone_speciality_bound(Int g, bool detF_special) {
  if (detF_special) {
    throw InputError("strongly-special-unsupported",
                     "the bound h1 <= g is only available when det F is non-special");
  }
  return g;
}

Int min_degree_threshold(Int g, Int h1) {
  if (g < 3) throw InputError("genus-too-small", "g >= 3 required (got g=" + str(g) + ")");
  if (h1 <= 0 || h1 >= g) {
    throw InputError("speciality-out-of-range",
                     "0 < h1 < g required (got h1=" + str(h1) + ", g=" + str(g) + ")");
  }
  if (h1 == 2) return 4 * g - 3;
  return general_moduli_degree_threshold(g, h1);
}

void check_component_tuple(const ScrollParams& p, Int m, Moduli moduli) {
  const Int threshold = min_degree_threshold(p.g, p.h1);
  if (p.d < threshold) {
    throw InputError("degree-below-threshold",
                     "d >= " + str(threshold) + " required for " + triple(p));
  }
  const Int h = m - p.g + p.h1;
  if (moduli == Moduli::General) {
    const auto range = general_section_degrees(p.g, p.h1);
    if (!range) {
      throw InputError("m-out-of-range",
                       "no general-moduli section degree exists: BN1-violated (g < 4*h1) for " +
                           triple(p));
    }
    if (m < range->lo || m > range->hi) {
      throw InputError("m-out-of-range", "m=" + str(m) + " outside [" + str(range->lo) + ", " +
                                             str(range->hi) + "] for " + triple(p));
    }
  } else if (m < 2 * h) {
    throw InputError("m-out-of-range", "Clifford bound 2h <= m fails for m=" + str(m) +
                                           ", h=" + str(h) + " on " + triple(p));
  }
  if (h < 2) {
    throw InputError("not-a-section",
                     "h = m - g + h1 = " + str(h) + " < 2 for m=" + str(m) + " on " + triple(p));
  }
}

Int general_bundle_h0(Int g, Int e) { return std::max<Int>(0, e - g + 1); }

Int general_bundle_h1(Int g, Int e) { return general_bundle_h0(g, e) - e + g - 1; }

SectionData section_data(const ScrollParams& p, Int m, bool general_N, Moduli moduli) {
  check_component_tuple(p, m, moduli);
  SectionData s;
  s.m = m;
  s.h = m - p.g + p.h1;
  s.gamma_sq = 2 * m - p.d;
  s.degN = p.d - m;
  if (s.gamma_sq >= 0) {
    throw InputError("nonnegative-self-intersection",
                     "Gamma^2 = 2m - d = " + str(s.gamma_sq) + " for m=" + str(m) + " on " +
                         triple(p) + "; the special section is not certified unique");
  }
  const Int e = p.d - 2 * m;  // deg(N - L)
  if (general_N || e >= 2 * p.g - 1) s.t_ext = general_bundle_h1(p.g, e);
  s.basepoints_residual = 0;
  return s;
}

const char* to_string(BundleClass c) {
  switch (c) {
    case BundleClass::Unstable:
      return "Unstable";
    case BundleClass::UnstableDecomposable:
      return "UnstableDecomposable";
  }
  return "Unstable";
}

BundleClass stability_class(const ScrollParams& p, Int m, Moduli moduli) {
  const SectionData s = section_data(p, m, /*general_N=*/true, moduli);
  if (p.d >= 6 * p.g - 5 || s.t_ext == Int{0}) return BundleClass::UnstableDecomposable;
  return BundleClass::Unstable;
}

CohomologyTriple normal_bundle_cohomology(const ScrollParams& p, Int m, Int t_basepoints,
                                          Moduli moduli) {
  check_component_tuple(p, m, moduli);
  if (t_basepoints < 0) {
    throw InputError("negative-basepoints", "t=" + str(t_basepoints));
  }
  const Int r1 = p.R + 1;
  CohomologyTriple c;
  c.chi = 7 * (p.g - 1) + r1 * (r1 - p.h1);
  c.h1n = p.h1 * (p.d - m - p.g + 1) - (p.d - 2 * m + p.g - 1) + t_basepoints;
  if (c.h1n < 0) {
    throw InputError("negative-h1", "h^1(N_S) evaluates to " + str(c.h1n) + " at m=" + str(m) +
                                        " on " + triple(p));
  }
  c.h0 = c.chi + c.h1n;
  c.h2 = 0;
  return c;
}

Int h0_explicit(const ScrollParams& p, Int m, Moduli moduli) {
  check_component_tuple(p, m, moduli);
  const Int r1 = p.R + 1;
  const Int h0L = m - p.g + 1 + p.h1;
  const Int chi_NL = (p.d - 2 * m) + 1 - p.g;
  return 5 * (p.g - 1) + r1 * r1 - p.h1 * h0L - chi_NL;
}

Int aut_dimension(const ScrollParams& p, Int m, bool decomposable, Moduli moduli) {
  check_component_tuple(p, m, moduli);
  return general_bundle_h0(p.g, p.d - 2 * m) + (decomposable ? 1 : 0);
}

}  // namespace hilbscroll
