#pragma once

#include "hta/algebra.hpp"

#include <string>
#include <vector>

namespace hta::models {

AlgPtr laurent();                 // Q[t, 1/t]
AlgPtr plain(const std::vector<std::string>& names); // Q[t, 1/t, names...], degree 0
AlgPtr de_rham();                 // z, dz with d z = dz
AlgPtr polylog_dg();              // z, dz, w = 1/(1-z), lz, L1, L2, L3 with the polylog rules
AlgPtr crys();                    // phi model Q[t, 1/t, x, y] with phi(x) = phi(y) = 1
AlgPtr phi_line();                // phi model Q[t, 1/t, x] with phi(x) = 1
AlgPtr st();                      // phi-dg model Q[t, 1/t, u] (+) e, d u = -e
AlgPtr free_xy();                 // non-commutative Q[t, 1/t]<x, y>

} // namespace hta::models
