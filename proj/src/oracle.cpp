#include "hilbscroll/oracle.hpp"

#include <algorithm>

namespace hilbscroll::oracle {

namespace {

// h^0 of a general line bundle of degree e on a genus-g curve
Int h0_general(Int g, Int e) {
  if (e < 0) return 0;
  if (e >= 2 * g - 1) return e - g + 1;
  return std::max<Int>(0, e - g + 1);
}

}  // namespace

Int dim_via_parameter_count(const ScrollParams& p, Int m) {
  const Int g = p.g;
  const Int R = p.d - 2 * g + 1 + p.h1;
  const Int h = m - g + p.h1;  // dim |L|
  const Int i = g - m + h;     // h^1(L), read back from Riemann-Roch
  const Int rho = g - (h + 1) * i;

  const Int e = p.d - 2 * m;  // deg(N - L)
  const Int h0_NL = h0_general(g, e);
  const Int ext_rank = h0_NL - (e - g + 1);  // h^1(N - L)
  const bool split = ext_rank == 0;
  const Int ext_directions = ext_rank > 0 ? ext_rank - 1 : 0;
  const Int stabilizer = h0_NL + (split ? 1 : 0);

  const Int pgl = (R + 1) * (R + 1) - 1;
  return (3 * g - 3) + rho + g + ext_directions + pgl - stabilizer;
}

Int z_dim_via_parameter_count(const GonalParams& gp) {
  const Int g = gp.g;
  const Int R = gp.d - 2 * g + 1 + gp.l;
  const Int m = 2 * g - 2 - (gp.l - 1) * gp.t;
  const Int gonal_locus = 2 * g + 2 * gp.t - 5;
  const Int stabilizer = h0_general(g, gp.d - 2 * m) + 1;
  const Int pgl = (R + 1) * (R + 1) - 1;
  return gonal_locus + g + pgl - stabilizer;
}

}  // namespace hilbscroll::oracle
