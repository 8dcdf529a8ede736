#pragma once

// Special-moduli components Z_{t,l}: scrolls over a general t-gonal curve C
// whose special section is embedded by L = K_C - (l-1)D, |D| the g^1_t.

#include <vector>

#include "hilbscroll/series.hpp"

namespace hilbscroll {

struct GonalParams {
  Int g = 0;
  Int t = 0;
  Int l = 0;
  Int d = 0;
  Int a = 0;  ///< unique a >= 3 with (a-2)(t-1) < g <= (a-1)(t-1)
  Int m = 0;  ///< 2g - 2 - (l-1)t

  /// Ambient dimension R = d - 2g + 1 + l.
  Int R() const { return d - 2 * g + 1 + l; }

  friend bool operator==(const GonalParams&, const GonalParams&) = default;
};

/// a = ceil(g/(t-1)) + 1. Throws "gonality-too-small" for t < 3 and
/// "no-valid-a" when g <= t-1.
Int ballico_a(Int g, Int t);

/// L_r = K - rD: degree 2g-2-rt, speciality r+1, h^0 = g - r(t-1).
/// Requires 1 <= r <= a - 2 ("r-out-of-range").
SeriesSpec special_residual_series(Int g, Int t, Int r);

/// l t (t-1) <= 2g - (t-1) - t(t-1), the very-ampleness gate for L.
bool kk_very_ample(Int g, Int t, Int l);

/// True when the very-ampleness gate holds with equality.
bool kk_equality(Int g, Int t, Int l);

/// dim M^1_{g,t} = 2g + 2t - 5 for 3 <= t < gonality_general(g).
/// Throws "not-proper-gonal-locus" when t >= gonality_general(g).
Int gonal_locus_dimension(Int g, Int t);

/// Validates and assembles GonalParams. Checks, in order: genus, gonality
/// range (2 < t < gamma), a, l range (2 <= l <= a-1), very ampleness,
/// d >= 6g - 5.
GonalParams make_gonal(Int g, Int t, Int l, Int d);

/// dim Z_{t,l} = (R+1)^2 + 8(g-1) - 4 - d - 2t(l-2).
Int z_component_dimension(const GonalParams& gp);

struct HmlDimension {
  Int value = 0;
  bool component_exists = false;  ///< g >= 4l
};

/// Closed form for dim H^m_{d,g,l} at m = 2g-2-(l-1)t:
/// (10-l)(g-1) - d - l^2 + t(l-1)(l-2) + (R+1)^2. Evaluated even when g < 4l.
HmlDimension h_component_dimension_at_gonal_m(const GonalParams& gp);

/// Same value, but throws "no-general-moduli-component" when g < 4l.
Int h_component_dimension_checked(const GonalParams& gp);

/// dim Z - dim H^m = (l-2)(g+1+l - t(l+1)).
Int z_vs_h_difference(const GonalParams& gp);

/// The family t = 3, g = 3l + 4, d = 6g - 5 for l > 4 ("l-out-of-range"
/// otherwise). No general-moduli component exists there (g < 4l).
GonalParams rem19608_family(Int l);

/// All valid Z_{t,l} for fixed (d, g, l), ordered by t.
std::vector<GonalParams> gonal_components(Int d, Int g, Int l);

}  // namespace hilbscroll
