#pragma once

#include "lexiknot/curvelab.hpp"

namespace lexiknot::testing {

inline Poly monic_t3() { return Poly{0, -3, 0, 1}; }  // t^3 - 3t

inline PlaneCurve trefoil_curve() { return {chebyshev(3), chebyshev(4)}; }
inline PlaneCurve figure_eight_curve() { return {chebyshev(3), chebyshev(5)}; }
inline PlaneCurve two_node_curve() { return {monic_t3(), Poly{0, 4, 0, -4, 0, 1}}; }  // t^5 - 4t^3 + 4t
inline PlaneCurve zero_two_curve() { return {monic_t3(), Poly{-2, -2, -2, 0, 1}}; }  // t^4 - 2t^2 - 2t - 2

// (T3, (T3 - x0)(T4 + yshift))
inline PlaneCurve q7_curve(const Rat& x0, const Rat& yshift = 1) {
  return add_triple_point(trefoil_curve(), x0, yshift);
}

}  // namespace lexiknot::testing
