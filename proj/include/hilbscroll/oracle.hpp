#pragma once

// Independent parameter counts for the component dimensions. Nothing here
// calls into the closed-form modules: Riemann-Roch, Brill-Noether numbers,
// Ext ranks and stabilizer dimensions are recomputed locally.

#include "hilbscroll/gonal.hpp"
#include "hilbscroll/scroll.hpp"

namespace hilbscroll::oracle {

/// moduli of C (3g-3) + rho(g,h,m) for L + g for N + projective Ext
/// directions + dim PGL(R+1) - dim G_S.
Int dim_via_parameter_count(const ScrollParams& p, Int m);

/// (2g+2t-5) for C in the t-gonal locus + g for N + dim PGL(R+1) - dim G_S,
/// with F = N + L split.
Int z_dim_via_parameter_count(const GonalParams& gp);

}  // namespace hilbscroll::oracle
