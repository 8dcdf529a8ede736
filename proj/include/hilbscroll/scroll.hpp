#pragma once

// Invariants of a single linearly normal special scroll S of degree d, genus g
// and speciality h1, together with its special section Gamma of degree m.
//
// Validation failures throw InputError; checks run in a fixed order
// (genus, speciality, degree, ambient, degree threshold, m-range, section,
// self-intersection) and the first failure is reported.

#include <optional>

#include "hilbscroll/series.hpp"

namespace hilbscroll {

/// (d, g, h1) with ambient dimension R = d - 2g + 1 + h1.
struct ScrollParams {
  Int d = 0;
  Int g = 0;
  Int h1 = 0;
  Int R = 0;

  friend bool operator==(const ScrollParams&, const ScrollParams&) = default;
};

/// Which base curves the section degree m is checked against.
///  - General: general moduli, m in the admissible range
///    ({4} for g=3, h1=1, else g+3-h1 <= m <= mbar, requiring g >= 4 h1).
///  - Special: any curve; only 2 <= h and 2h <= m (Clifford).
enum class Moduli { General, Special };

/// Validates 3 <= g, 0 < h1 < g, d >= 2g+2, R >= 3.
ScrollParams make_scroll(Int d, Int g, Int h1);

/// Upper bound for h1 when det F is non-special: h1 <= g, with equality only
/// for cones. Throws "strongly-special-unsupported" for det F special.
Int cone_speciality_bound(Int g, bool detF_special);

/// Smallest d for which the special section is unique and the general-moduli
/// components are described: 4g - 3 when h1 = 2, else (7g - eps)/2 - 2h1 + 2.
Int min_degree_threshold(Int g, Int h1);

/// Checks d >= min_degree_threshold and that m is a legal section degree for
/// `moduli`. Does not look at Gamma^2.
void check_component_tuple(const ScrollParams& p, Int m, Moduli moduli = Moduli::General);

/// Dimensions of a general line bundle of degree e on a genus-g curve.
Int general_bundle_h0(Int g, Int e);
Int general_bundle_h1(Int g, Int e);

struct SectionData {
  Int m = 0;
  Int h = 0;         ///< m - g + h1
  Int gamma_sq = 0;  ///< 2m - d
  Int degN = 0;      ///< d - m
  /// h^1(N - L) = dim Ext^1(L, N); known for general N, or whenever
  /// d - 2m >= 2g - 1 (then zero).
  std::optional<Int> t_ext;
  Int basepoints_residual = 0;
};

/// Section invariants. Additionally rejects Gamma^2 >= 0 with
/// "nonnegative-self-intersection".
SectionData section_data(const ScrollParams& p, Int m, bool general_N = true,
                         Moduli moduli = Moduli::General);

enum class BundleClass { Unstable, UnstableDecomposable };

const char* to_string(BundleClass c);

/// Always unstable (deg N > d/2). Decomposable when d >= 6g - 5 or when
/// Ext^1(L, N) = 0 for general N.
BundleClass stability_class(const ScrollParams& p, Int m, Moduli moduli = Moduli::General);

/// Cohomology of N_{S/P^R}. h2 is always zero.
struct CohomologyTriple {
  Int h0 = 0;
  Int h1n = 0;
  Int h2 = 0;
  Int chi = 0;

  friend bool operator==(const CohomologyTriple&, const CohomologyTriple&) = default;
};

/// chi = 7(g-1) + (R+1)(R+1-h1), h1n = h1(d-m-g+1) - (d-2m+g-1) + t,
/// where t counts base points of |K - L|. Throws "negative-h1" if h1n < 0.
CohomologyTriple normal_bundle_cohomology(const ScrollParams& p, Int m, Int t_basepoints = 0,
                                          Moduli moduli = Moduli::General);

/// h^0(N_{S/P^R}) = 5(g-1) + (R+1)^2 - h^1(L) h^0(L) - chi(N - L).
Int h0_explicit(const ScrollParams& p, Int m, Moduli moduli = Moduli::General);

/// dim of the projectivities fixing S: h^0(N - L), plus one when F splits.
Int aut_dimension(const ScrollParams& p, Int m, bool decomposable,
                  Moduli moduli = Moduli::General);

}  // namespace hilbscroll
