#pragma once

#include <vector>

#include "lexiknot/poly.hpp"

namespace lexiknot {

struct Interval {
  Rat lo, hi;
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }
  Rat width() const { return hi - lo; }
  double mid() const { return Rat((lo + hi) / 2).get_d(); }
};

int sign(const Rat& r);

// Guaranteed enclosure of p over [lo, hi] (interval Horner).
Interval eval_interval(const Poly& p, const Interval& x);

std::vector<Poly> sturm_sequence(const Poly& p);
int sturm_variations(const std::vector<Poly>& seq, const Rat& x);
// number of distinct real roots in (a, b]
int count_roots(const std::vector<Poly>& seq, const Rat& a, const Rat& b);

// Bound B with every root of p in (-B, B).
Rat root_bound(const Poly& p);

// The unique root of a squarefree polynomial g in the open interval (lo, hi),
// or exactly lo when lo == hi. g is nonzero at both ends of an open interval.
class RealRoot {
 public:
  RealRoot(Poly g, Rat lo, Rat hi);

  const Poly& poly() const { return g_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }
  bool exact() const { return lo_ == hi_; }
  double approx() const;

  void refine();                     // halve the interval
  void refine_below(const Rat& w);   // until width < w

  // Exact sign of f at the root.
  int sign_of(const Poly& f);
  Interval enclose(const Poly& f) const { return eval_interval(f, interval()); }

 private:
  Poly g_;
  Rat lo_, hi_;
};

// Real roots of p (multiplicities dropped), ascending.
std::vector<RealRoot> isolate_real_roots(const Poly& p);

// lo <= sqrt(q) <= hi with hi - lo <= about 2^-bits * max(1, sqrt(q)); q >= 0.
Interval sqrt_bounds(const Rat& q, unsigned bits);

// Rational with the smallest denominator strictly between a < b.
Rat simplest_between(const Rat& a, const Rat& b);

}  // namespace lexiknot
