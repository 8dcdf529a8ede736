#include "hilbscroll/series.hpp"

#include <string>

#include "hilbscroll/error.hpp"

namespace hilbscroll {

namespace {

std::string str(Int v) { return std::to_string(v); }

void require_genus_at_least_3(Int g) {
  if (g < 3) throw InputError("genus-too-small", "g >= 3 required (got g=" + str(g) + ")");
}

}  // namespace

SeriesSpec make_series(Int g, Int m, Int i) {
  if (i < 0) throw InputError("negative-speciality", "i=" + str(i));
  const Int h = m - g + i;
  if (h < 0) {
    throw InputError("negative-dimension",
                     "h = m - g + i = " + str(h) + " for g=" + str(g) + ", m=" + str(m) +
                         ", i=" + str(i));
  }
  return SeriesSpec{g, m, h, i};
}

Int riemann_roch_h0(Int g, Int deg, Int h1) {
  const Int h0 = deg - g + 1 + h1;
  if (h0 < 0) {
    throw InputError("negative-h0", "deg - g + 1 + h1 = " + str(h0) +
                                        " is inconsistent with speciality h1=" + str(h1));
  }
  return h0;
}

Int brill_noether_rho(Int g, Int r, Int m) { return g - (r + 1) * (g - m + r); }

Int brill_noether_rho(const SeriesSpec& s) { return brill_noether_rho(s.g, s.h, s.m); }

Int rho_of_bundle(Int g, Int h0, Int h1) { return g - h0 * h1; }

Int genus_parity(Int g) { return g % 2 == 0 ? 0 : 1; }

Int clifford_index_general(Int g) {
  require_genus_at_least_3(g);
  return (g - 1) / 2;
}

Int gonality_general(Int g) {
  require_genus_at_least_3(g);
  return g % 2 == 0 ? (g + 2) / 2 : (g + 3) / 2;
}

MaxSpecialDegree max_special_degree(Int g, Int h1) {
  if (h1 <= 0 || h1 >= g) {
    throw InputError("speciality-out-of-range",
                     "0 < h1 < g required (got h1=" + str(h1) + ", g=" + str(g) + ")");
  }
  // floor(g/h1 - 1) with positive operands
  const Int hbar = g / h1 - 1;
  return MaxSpecialDegree{hbar, hbar + g - h1};
}

Int clifford_degree_threshold(Int g, Int h1) {
  return 4 * g - 2 * h1 - clifford_index_general(g) + 1;
}

Int general_moduli_degree_threshold(Int g, Int h1) {
  require_genus_at_least_3(g);
  // 7g - epsilon is always even
  return (7 * g - genus_parity(g)) / 2 - 2 * h1 + 2;
}

std::optional<DegreeRange> general_section_degrees(Int g, Int h1) {
  if (g == 3 && h1 == 1) return DegreeRange{4, 4};
  if (h1 <= 0 || g < 4 * h1) return std::nullopt;
  return DegreeRange{g + 3 - h1, max_special_degree(g, h1).mbar};
}

}  // namespace hilbscroll
