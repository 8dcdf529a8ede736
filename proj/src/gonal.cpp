#include "hilbscroll/gonal.hpp"

#include <string>

#include "hilbscroll/error.hpp"

namespace hilbscroll {

namespace {

std::string str(Int v) { return std::to_string(v); }

Int kk_slack(Int g, Int t, Int l) {
  return (2 * g - (t - 1) - t * (t - 1)) - l * t * (t - 1);
}

}  // namespace

Int ballico_a(Int g, Int t) {
  if (t < 3) throw InputError("gonality-too-small", "t >= 3 required (got t=" + str(t) + ")");
  if (g <= t - 1) {
    throw InputError("no-valid-a", "need g > t-1 for some a >= 3 (got g=" + str(g) +
                                       ", t=" + str(t) + ")");
  }
  return (g + t - 2) / (t - 1) + 1;
}

SeriesSpec special_residual_series(Int g, Int t, Int r) {
  const Int a = ballico_a(g, t);
  if (r < 1 || r > a - 2) {
    throw InputError("r-out-of-range",
                     "1 <= r <= a-2 = " + str(a - 2) + " required (got r=" + str(r) + ")");
  }
  return make_series(g, 2 * g - 2 - r * t, r + 1);
}

bool kk_very_ample(Int g, Int t, Int l) { return kk_slack(g, t, l) >= 0; }

bool kk_equality(Int g, Int t, Int l) { return kk_slack(g, t, l) == 0; }

Int gonal_locus_dimension(Int g, Int t) {
  const Int gamma = gonality_general(g);
  if (t < 3) throw InputError("gonality-too-small", "t >= 3 required (got t=" + str(t) + ")");
  if (t >= gamma) {
    throw InputError("not-proper-gonal-locus",
                     "t=" + str(t) + " >= gonality " + str(gamma) + " of a general genus-" +
                         str(g) + " curve; M^1_{g,t} is all of M_g");
  }
  return 2 * g + 2 * t - 5;
}

GonalParams make_gonal(Int g, Int t, Int l, Int d) {
  if (g < 3) throw InputError("genus-too-small", "g >= 3 required (got g=" + str(g) + ")");
  const Int gamma = gonality_general(g);
  if (t <= 2 || t >= gamma) {
    throw InputError("gonality-out-of-range", "2 < t < " + str(gamma) + " required (got t=" +
                                                  str(t) + ")");
  }
  const Int a = ballico_a(g, t);
  if (l < 2 || l > a - 1) {
    throw InputError("l-out-of-range",
                     "2 <= l <= a-1 = " + str(a - 1) + " required (got l=" + str(l) + ")");
  }
  if (!kk_very_ample(g, t, l)) {
    throw InputError("not-very-ample", "l t(t-1) <= 2g - (t-1) - t(t-1) fails for g=" + str(g) +
                                           ", t=" + str(t) + ", l=" + str(l));
  }
  if (d < 6 * g - 5) {
    throw InputError("degree-too-small",
                     "d >= 6g-5 = " + str(6 * g - 5) + " required (got d=" + str(d) + ")");
  }
  return GonalParams{g, t, l, d, a, 2 * g - 2 - (l - 1) * t};
}

Int z_component_dimension(const GonalParams& gp) {
  const Int r1 = gp.R() + 1;
  return r1 * r1 + 8 * (gp.g - 1) - 4 - gp.d - 2 * gp.t * (gp.l - 2);
}

HmlDimension h_component_dimension_at_gonal_m(const GonalParams& gp) {
  const Int r1 = gp.R() + 1;
  const Int l = gp.l;
  const Int value =
      (10 - l) * (gp.g - 1) - gp.d - l * l + gp.t * (l - 1) * (l - 2) + r1 * r1;
  return HmlDimension{value, gp.g >= 4 * l};
}

Int h_component_dimension_checked(const GonalParams& gp) {
  const HmlDimension h = h_component_dimension_at_gonal_m(gp);
  if (!h.component_exists) {
    throw InputError("no-general-moduli-component",
                     "g >= 4l required (got g=" + str(gp.g) + ", l=" + str(gp.l) + ")");
  }
  return h.value;
}

Int z_vs_h_difference(const GonalParams& gp) {
  return (gp.l - 2) * (gp.g + 1 + gp.l - gp.t * (gp.l + 1));
}

GonalParams rem19608_family(Int l) {
  if (l <= 4) throw InputError("l-out-of-range", "l > 4 required (got l=" + str(l) + ")");
  const Int g = 3 * l + 4;
  return make_gonal(g, 3, l, 6 * g - 5);
}

std::vector<GonalParams> gonal_components(Int d, Int g, Int l) {
  std::vector<GonalParams> out;
  if (g < 3 || d < 6 * g - 5 || l < 2) return out;
  const Int gamma = gonality_general(g);
  for (Int t = 3; t < gamma; ++t) {
    if (g <= t - 1) continue;
    const Int a = ballico_a(g, t);
    if (l > a - 1 || !kk_very_ample(g, t, l)) continue;
    out.push_back(make_gonal(g, t, l, d));
  }
  return out;
}

}  // namespace hilbscroll
