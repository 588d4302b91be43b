#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexiknot/arith.hpp"
#include "lexiknot/diagram.hpp"
#include "lexiknot/planereduce.hpp"
#include "lexiknot/poly.hpp"
#include "lexiknot/realroot.hpp"

namespace lexiknot {

struct PlaneCurve {
  Poly x;  // degree 3
  Poly y;
};

// L: the crossing is between the two lower strands (third strand above).
enum class Letter { L, U };
char letter_char(Letter l);

// Symmetric-coordinate data of a curve: for u = t + s the second symmetric
// function is v(u) = u^2 + (a2 u + a1)/a3 on the crossing locus.
struct SymmetricData {
  Poly x;  // cubic
  Poly y;
  Poly v;         // v(u)
  Poly disc;      // u^2 - 4 v(u) = (t - s)^2
  Poly crossing;  // divided difference of y; crossings are its roots with disc > 0
  Poly xval;      // common x-coordinate
  Poly yval;      // common y-coordinate
  Poly third;     // y(third branch) - yval
  Poly slope;     // sign(slope_t - slope_s) = sign(slope * psym)
  Poly psym;      // x'(t) x'(s)

  explicit SymmetricData(const PlaneCurve& c);
  // (F(t) - F(s)) / (t - s) as a polynomial in u
  Poly divided_difference(const Poly& f) const;
};

struct Crossing {
  RealRoot u;
  Interval t, s, x;
  Letter letter;
  double t_approx = 0, s_approx = 0, x_approx = 0, y_approx = 0;
};

struct Fold {
  RealRoot c;
  Letter letter;
  double x_approx = 0;
};

struct TriplePoint {
  double x_approx = 0, y_approx = 0;
  std::vector<double> params;
};

struct CurveParam {
  Interval value;
  int crossing = 0;
  bool is_t = true;  // smaller parameter of its crossing
};

struct CrossingSet {
  std::vector<Crossing> crossings;  // ascending x
  std::vector<CurveParam> params;   // ascending
  std::optional<Fold> left, right;
  std::vector<TriplePoint> triple_points;
  Poly disc;  // (t - s)^2 as a polynomial in u = t + s

  std::string letters() const;  // "L|ULU|L": left fold, crossings, right fold
  // Halve the u-interval of crossing i and recompute its t, s enclosures.
  void refine(int i);
};

// Throws NonNodal on tangencies, cusps and triple points unless
// allow_triple_points, in which case triple points are reported separately.
CrossingSet analyze_curve(const PlaneCurve& c, bool allow_triple_points = false);
CrossingSet curve_crossings(const PlaneCurve& c);

PlaneWord word_from_crossings(const CrossingSet& cs);
PlaneWord word_from_curve(const PlaneCurve& c);

// (x, (x - x0) (y + yshift))
PlaneCurve add_triple_point(const PlaneCurve& c, const Rat& x0, const Rat& yshift);
// (x(t + eps), y(t))
PlaneCurve perturb(const PlaneCurve& c, const Rat& eps);

struct Perturbation {
  Rat eps;
  PlaneCurve curve;
  CrossingSet crossings;
  PlaneWord word;
};
// Halves |eps| from 1/16 until the node count is nodes(before) + 3 and the
// word agrees with the previous halving.
Perturbation perturb_auto(const PlaneCurve& with_triple_point, int sign, int max_halvings = 40);

enum class Strand { T, S };
std::vector<Strand> alternating_assignment(const CrossingSet& cs);
// +1 at overpass parameters, -1 at underpasses, in parameter order
std::vector<int> gauss_sequence(const CrossingSet& cs, const std::vector<Strand>& over_at);
int count_sign_changes(const std::vector<int>& g);

struct HeightPolynomial {
  Poly z;
  int sign_changes = 0;
  std::vector<Rat> roots;
};
HeightPolynomial height_polynomial(CrossingSet& cs, const std::vector<Strand>& over_at);

// Subtract multiples of x^i y^j while deg z lies in <deg x, deg y>; crossing
// signs are unchanged because x^i y^j agrees on both branches of a crossing.
Poly reduce_height_degree(const Poly& z, const PlaneCurve& c);

struct Embedding {
  CrossingSet crossings;
  PlaneWord word;
  std::vector<int> crossing_signs;  // twist handedness per crossing, x-order
  std::vector<bool> t_over;
  TrigonalDiagram diagram;
  std::optional<KnotRecord> knot;
};
Embedding verify_embedding(const Poly& x, const Poly& y, const Poly& z,
                           const Catalog& cat = default_catalog());

std::string render_svg(const PlaneCurve& c, const CrossingSet& cs, int width = 640, int height = 400);

}  // namespace lexiknot
