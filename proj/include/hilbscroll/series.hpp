#pragma once

// Integer bookkeeping for complete linear series on smooth curves.

#include <cstdint>
#include <optional>

namespace hilbscroll {

using Int = std::int64_t;

/// A complete linear series g^h_m of speciality i on a curve of genus g.
/// Riemann-Roch holds by construction: h = m - g + i.
struct SeriesSpec {
  Int g = 0;
  Int m = 0;
  Int h = 0;
  Int i = 0;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// Builds the series of degree `m` and speciality `i`; throws InputError
/// ("negative-speciality", "negative-dimension") when h or i would be < 0.
SeriesSpec make_series(Int g, Int m, Int i);

/// h^0 = deg - g + 1 + h1. Throws "negative-h0" when that is negative.
Int riemann_roch_h0(Int g, Int deg, Int h1);

/// rho(g, r, m) = g - (r+1)(g - m + r). Not clamped; negative values mean
/// no such series on a general curve.
Int brill_noether_rho(Int g, Int r, Int m);
Int brill_noether_rho(const SeriesSpec& s);

/// rho(g, L) = g - h^0(L) h^1(L).
Int rho_of_bundle(Int g, Int h0, Int h1);

/// Parity flag epsilon in {0, 1}, epsilon = g mod 2.
Int genus_parity(Int g);

/// Clifford index of a general curve, floor((g-1)/2). Defined for g >= 3.
Int clifford_index_general(Int g);

/// Gonality of a general curve: (g+2)/2 for even g, (g+3)/2 for odd g.
Int gonality_general(Int g);

struct MaxSpecialDegree {
  Int hbar = 0;
  Int mbar = 0;
};

/// Largest dimension and degree of a complete series of speciality h1 on a
/// general curve: hbar = floor(g/h1 - 1), mbar = hbar + g - h1.
MaxSpecialDegree max_special_degree(Int g, Int h1);

/// Degree bound from the Clifford index: 4g - 2h1 - Cliff(C) + 1, with the
/// general-curve Clifford index.
Int clifford_degree_threshold(Int g, Int h1);

/// (7g - epsilon)/2 - 2h1 + 2. Equal to clifford_degree_threshold for all
/// g >= 3.
Int general_moduli_degree_threshold(Int g, Int h1);

struct DegreeRange {
  Int lo = 0;
  Int hi = 0;
};

/// Degrees m of special sections that a scroll with general moduli can carry:
/// {4} for (g, h1) = (3, 1), otherwise g+3-h1 <= m <= mbar. Empty (nullopt)
/// unless g >= 4 h1 or (g, h1) = (3, 1).
std::optional<DegreeRange> general_section_degrees(Int g, Int h1);

}  // namespace hilbscroll
