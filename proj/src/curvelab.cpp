#include "lexiknot/curvelab.hpp"

#include <algorithm>
#include <cmath>

#include "lexiknot/error.hpp"

namespace lexiknot {

char letter_char(Letter l) { return l == Letter::L ? 'L' : 'U'; }

namespace {

Letter flip(Letter l) { return l == Letter::L ? Letter::U : Letter::L; }

// F(t) mod (t^2 - u t + v(u)) = dd(u) t + rem(u)
struct Reduced {
  Poly dd, rem;
};

Reduced reduce_mod_quadratic(const Poly& f, const Poly& v) {
  const Poly u = Poly::identity();
  Poly A, B = Poly{1};  // t^0 = 0 t + 1
  Reduced out;
  for (int k = 0; k <= f.degree(); ++k) {
    if (f.coeff(k) != 0) {
      out.dd += A * f.coeff(k);
      out.rem += B * f.coeff(k);
    }
    Poly nA = u * A + B;
    Poly nB = -(v * A);
    A = std::move(nA);
    B = std::move(nB);
  }
  return out;
}

unsigned bits_for(const Interval& iv, unsigned extra) {
  Rat w = iv.width();
  unsigned b = 64;
  if (w > 0) {
    Int q = w.get_den() / (w.get_num() + 1);
    b = std::max<unsigned>(b, static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2)) + 16);
  }
  return b + extra;
}

void enclose_params(const Poly& disc, Crossing& c, unsigned extra_bits) {
  for (;;) {
    Interval uI = c.u.interval();
    Interval dI = eval_interval(disc, uI);
    if (dI.lo <= 0) {
      c.u.refine();
      continue;
    }
    unsigned bits = bits_for(uI, extra_bits);
    Interval sl = sqrt_bounds(dI.lo, bits), sh = sqrt_bounds(dI.hi, bits);
    c.t = {(uI.lo - sh.hi) / 2, (uI.hi - sl.lo) / 2};
    c.s = {(uI.lo + sl.lo) / 2, (uI.hi + sh.hi) / 2};
    return;
  }
}

std::string interval_text(const Interval& iv) {
  return "[" + std::to_string(iv.lo.get_d()) + ", " + std::to_string(iv.hi.get_d()) + "]";
}

}  // namespace

SymmetricData::SymmetricData(const PlaneCurve& c) : x(c.x), y(c.y) {
  if (x.degree() != 3) throw UsageError("x(t) must have degree exactly 3, got " + std::to_string(x.degree()));
  const Rat a1 = x.coeff(1), a2 = x.coeff(2), a3 = x.coeff(3);
  const Poly u = Poly::identity();
  v = u * u + Poly(std::vector<Rat>{a1 / a3, a2 / a3});
  disc = u * u - v * Rat(4);
  auto ry = reduce_mod_quadratic(y, v);
  crossing = ry.dd;
  yval = ry.rem;
  xval = reduce_mod_quadratic(x, v).rem;
  third = y.compose(Poly(std::vector<Rat>{-a2 / a3, Rat(-1)})) - yval;
  auto px = reduce_mod_quadratic(x.derivative(), v);
  auto py = reduce_mod_quadratic(y.derivative(), v);
  const Poly& al = px.dd;
  const Poly& be = px.rem;
  psym = al * al * v + al * be * u + be * be;
  slope = py.dd * be - al * py.rem;
}

Poly SymmetricData::divided_difference(const Poly& f) const { return reduce_mod_quadratic(f, v).dd; }

std::string CrossingSet::letters() const {
  std::string out;
  out += left ? letter_char(left->letter) : '?';
  out += '|';
  for (const auto& c : crossings) out += letter_char(c.letter);
  out += '|';
  out += right ? letter_char(right->letter) : '?';
  return out;
}

void CrossingSet::refine(int i) {
  auto& c = crossings.at(i);
  c.u.refine();
  c.u.refine();
  enclose_params(disc, c, 0);
  for (auto& p : params)
    if (p.crossing == i) p.value = p.is_t ? c.t : c.s;
}

CrossingSet analyze_curve(const PlaneCurve& curve, bool allow_triple_points) {
  SymmetricData sd(curve);
  CrossingSet cs;
  cs.disc = sd.disc;
  const Rat a2 = curve.x.coeff(2), a3 = curve.x.coeff(3);

  // folds
  auto crit = isolate_real_roots(curve.x.derivative());
  if (crit.size() != 2) throw NonNodal("x(t) has no pair of folds");
  Poly fold_third = curve.y.compose(Poly(std::vector<Rat>{-a2 / a3, Rat(-2)})) - curve.y;
  std::vector<Fold> folds;
  for (auto& c : crit) {
    int s = c.sign_of(fold_third);
    if (s == 0) throw NonNodal("third strand passes through a fold near t=" + std::to_string(c.approx()));
    folds.push_back(Fold{c, s > 0 ? Letter::L : Letter::U, curve.x.eval(c.approx())});
  }
  // with a3 > 0 the larger critical parameter is the local minimum of x
  if (a3 > 0) {
    cs.left = folds[1];
    cs.right = folds[0];
  } else {
    cs.left = folds[0];
    cs.right = folds[1];
  }

  if (sd.crossing.is_zero()) throw NonNodal("y is a function of x; the curve is not injective");
  std::vector<Crossing> nodes;
  std::vector<Crossing> triple;
  for (auto& r : isolate_real_roots(sd.crossing)) {
    int sdisc = r.sign_of(sd.disc);
    if (sdisc < 0) continue;  // complex conjugate parameters
    if (sdisc == 0) throw NonNodal("cusp at u in " + interval_text(r.interval()));
    if (r.sign_of(sd.psym) == 0) throw NonNodal("crossing at a fold, u in " + interval_text(r.interval()));
    if (r.sign_of(sd.slope) == 0) throw NonNodal("tangency at u in " + interval_text(r.interval()));
    int st = r.sign_of(sd.third);
    Crossing c{r, {}, {}, {}, st > 0 ? Letter::L : Letter::U};
    if (st == 0) {
      if (!allow_triple_points)
        throw NonNodal("triple point at u in " + interval_text(r.interval()));
      triple.push_back(c);
    } else {
      nodes.push_back(c);
    }
  }

  for (auto& c : triple) {
    c.u.refine_below(Rat(1, 1 << 30));
    enclose_params(sd.disc, c, 0);
    c.x = eval_interval(sd.xval, c.u.interval());
  }
  if (triple.size() % 3 != 0) throw NonNodal("incomplete triple point");
  std::sort(triple.begin(), triple.end(), [](const Crossing& a, const Crossing& b) { return a.x.lo < b.x.lo; });
  for (size_t i = 0; i < triple.size(); i += 3) {
    TriplePoint tp;
    tp.x_approx = triple[i].x.mid();
    tp.y_approx = sd.yval.eval(triple[i].u.approx());
    for (size_t j = i; j < i + 3; ++j) {
      for (double p : {triple[j].t.mid(), triple[j].s.mid()}) {
        bool dup = false;
        for (double q : tp.params) dup = dup || std::fabs(p - q) < 1e-6;
        if (!dup) tp.params.push_back(p);
      }
    }
    std::sort(tp.params.begin(), tp.params.end());
    cs.triple_points.push_back(tp);
  }

  // refine until parameters and abscissae are pairwise separated
  std::vector<unsigned> extra(nodes.size(), 0);
  bool separated = false;
  for (int iter = 0; iter < 4000 && !separated; ++iter) {
    for (size_t i = 0; i < nodes.size(); ++i) {
      enclose_params(sd.disc, nodes[i], extra[i]);
      nodes[i].x = eval_interval(sd.xval, nodes[i].u.interval());
    }
    std::vector<char> bad(nodes.size(), 0);
    auto check = [&](std::vector<std::pair<Interval, size_t>> ivs) {
      std::sort(ivs.begin(), ivs.end(), [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
      for (size_t k = 0; k + 1 < ivs.size(); ++k)
        if (!(ivs[k].first.hi < ivs[k + 1].first.lo)) bad[ivs[k].second] = bad[ivs[k + 1].second] = 1;
    };
    std::vector<std::pair<Interval, size_t>> ps, xs;
    for (size_t i = 0; i < nodes.size(); ++i) {
      ps.push_back({nodes[i].t, i});
      ps.push_back({nodes[i].s, i});
      xs.push_back({nodes[i].x, i});
    }
    check(ps);
    check(xs);
    separated = std::none_of(bad.begin(), bad.end(), [](char b) { return b != 0; });
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (!bad[i]) continue;
      if (nodes[i].u.exact() && extra[i] > 4096)
        throw NonNodal("coincident crossing data at u = " + nodes[i].u.lo().get_str());
      nodes[i].u.refine();
      nodes[i].u.refine();
      extra[i] += 8;
    }
  }
  if (!separated) throw NonNodal("could not separate crossings (coincident abscissae?)");

  std::sort(nodes.begin(), nodes.end(), [](const Crossing& a, const Crossing& b) { return a.x.lo < b.x.lo; });
  for (auto& c : nodes) {
    c.t_approx = c.t.mid();
    c.s_approx = c.s.mid();
    c.x_approx = c.x.mid();
    c.y_approx = sd.yval.eval(c.u.approx());
  }
  cs.crossings = std::move(nodes);
  for (size_t i = 0; i < cs.crossings.size(); ++i) {
    cs.params.push_back({cs.crossings[i].t, static_cast<int>(i), true});
    cs.params.push_back({cs.crossings[i].s, static_cast<int>(i), false});
  }
  std::sort(cs.params.begin(), cs.params.end(),
            [](const CurveParam& a, const CurveParam& b) { return a.value.lo < b.value.lo; });
  return cs;
}

CrossingSet curve_crossings(const PlaneCurve& c) { return analyze_curve(c, false); }

PlaneWord word_from_crossings(const CrossingSet& cs) {
  if (!cs.left || !cs.right) throw UsageError("crossing set has no folds");
  Letter cur = flip(cs.left->letter);
  PlaneWord w;
  int n = 0;
  for (const auto& c : cs.crossings) {
    while (c.letter != cur) {
      w.runs.push_back(n);
      n = 0;
      cur = flip(cur);
    }
    ++n;
  }
  w.runs.push_back(n);
  if (cur == cs.right->letter) w.runs.push_back(0);
  return w;
}

PlaneWord word_from_curve(const PlaneCurve& c) { return word_from_crossings(curve_crossings(c)); }

PlaneCurve add_triple_point(const PlaneCurve& c, const Rat& x0, const Rat& yshift) {
  auto cs = curve_crossings(c);
  SymmetricData sd(c);
  Poly line = sd.xval - Poly::constant(x0);
  for (auto& cr : cs.crossings)
    if (cr.u.sign_of(line) == 0)
      throw PreconditionError("x0 = " + x0.get_str() + " is the abscissa of a crossing");
  auto pre = isolate_real_roots(c.x - Poly::constant(x0));
  if (pre.size() != 3) throw PreconditionError("x0 = " + x0.get_str() + " is outside the three-strand range");
  Poly shifted = c.y + Poly::constant(yshift);
  for (auto& r : pre)
    if (r.sign_of(shifted) == 0)
      throw PreconditionError("shifted y vanishes over x0 near t=" + std::to_string(r.approx()));
  return PlaneCurve{c.x, (c.x - Poly::constant(x0)) * shifted};
}

PlaneCurve perturb(const PlaneCurve& c, const Rat& eps) { return PlaneCurve{c.x.shift(eps), c.y}; }

Perturbation perturb_auto(const PlaneCurve& c, int sign, int max_halvings) {
  if (sign == 0) throw UsageError("perturb_auto: sign must be nonzero");
  auto before = analyze_curve(c, true);
  if (before.triple_points.size() != 1) throw PreconditionError("curve must have exactly one triple point");
  const size_t want = before.crossings.size() + 3;
  Rat eps(sign > 0 ? 1 : -1, 16);
  std::optional<PlaneWord> prev;
  for (int k = 0; k <= max_halvings; ++k, eps /= 2) {
    PlaneCurve pc = perturb(c, eps);
    std::optional<CrossingSet> cs;
    try {
      cs = curve_crossings(pc);
    } catch (const NonNodal&) {
    }
    if (!cs || cs->crossings.size() != want) {
      prev.reset();
      continue;
    }
    PlaneWord w = word_from_crossings(*cs);
    if (prev && *prev == w) return Perturbation{eps, pc, std::move(*cs), w};
    prev = w;
  }
  throw EpsilonTooLarge("no stable perturbation after " + std::to_string(max_halvings) + " halvings");
}

std::vector<Strand> alternating_assignment(const CrossingSet& cs) {
  std::vector<int> g(cs.crossings.size(), 0);
  std::vector<Strand> over(cs.crossings.size(), Strand::T);
  for (size_t k = 0; k < cs.params.size(); ++k) {
    const auto& p = cs.params[k];
    bool is_over = k % 2 == 0;
    if (is_over) {
      if (g[p.crossing] == 1) throw VerificationFailure("parity violation in alternating assignment");
      g[p.crossing] = 1;
      over[p.crossing] = p.is_t ? Strand::T : Strand::S;
    }
  }
  for (int v : g)
    if (v != 1) throw VerificationFailure("parity violation in alternating assignment");
  return over;
}

std::vector<int> gauss_sequence(const CrossingSet& cs, const std::vector<Strand>& over_at) {
  if (over_at.size() != cs.crossings.size()) throw UsageError("one over/under choice per crossing required");
  std::vector<int> g;
  for (const auto& p : cs.params) {
    bool over = (over_at[p.crossing] == Strand::T) == p.is_t;
    g.push_back(over ? 1 : -1);
  }
  return g;
}

int count_sign_changes(const std::vector<int>& g) {
  int n = 0;
  for (size_t i = 1; i < g.size(); ++i)
    if (g[i] != g[i - 1]) ++n;
  return n;
}

HeightPolynomial height_polynomial(CrossingSet& cs, const std::vector<Strand>& over_at) {
  auto g = gauss_sequence(cs, over_at);
  HeightPolynomial h;
  h.z = Poly{1};
  for (size_t k = 0; k + 1 < g.size(); ++k) {
    if (g[k] == g[k + 1]) continue;
    Rat r = simplest_between(cs.params[k].value.hi, cs.params[k + 1].value.lo);
    h.roots.push_back(r);
    h.z *= Poly(std::vector<Rat>{-r, Rat(1)});
  }
  h.sign_changes = static_cast<int>(h.roots.size());
  if (!g.empty()) {
    int lead = (h.roots.size() % 2 == 0) ? 1 : -1;  // sign of z left of every root
    if (lead != g[0]) h.z *= Rat(-1);
  }
  // a posteriori: sign z(param_k) = g_k, certified by enclosure
  for (size_t k = 0; k < g.size(); ++k) {
    for (int iter = 0;; ++iter) {
      const auto& p = cs.params[k];
      Interval e = eval_interval(h.z, p.value);
      if (e.lo > 0 || e.hi < 0) {
        if ((e.lo > 0 ? 1 : -1) != g[k]) throw VerificationFailure("height polynomial has the wrong sign");
        break;
      }
      if (iter > 2000) throw VerificationFailure("height polynomial sign not certified");
      cs.refine(p.crossing);
    }
  }
  return h;
}

Poly reduce_height_degree(const Poly& z_in, const PlaneCurve& c) {
  Poly z = z_in;
  const int a = c.x.degree(), b = c.y.degree();
  while (z.degree() > 0) {
    int d = z.degree(), ii = -1, jj = -1;
    for (int j = 0; j * b <= d && ii < 0; ++j)
      if ((d - j * b) % a == 0) ii = (d - j * b) / a, jj = j;
    if (ii < 0) break;
    Poly m = pow(c.x, ii) * pow(c.y, jj);
    z -= m * (z.lc() / m.lc());
  }
  return z;
}

Embedding verify_embedding(const Poly& x, const Poly& y, const Poly& z, const Catalog& cat) {
  PlaneCurve curve{x, y};
  Embedding e;
  e.crossings = curve_crossings(curve);
  SymmetricData sd(curve);
  Poly zd = sd.divided_difference(z);
  for (auto& c : e.crossings.crossings) {
    int sz = c.u.sign_of(zd);
    if (sz == 0) throw NonInjective("z(t) = z(s) at the crossing near x=" + std::to_string(c.x_approx));
    // z(t) - z(s) = (t - s) zd with t < s
    e.t_over.push_back(sz < 0);
    e.crossing_signs.push_back(c.u.sign_of(sd.slope) * sz * c.u.sign_of(sd.psym));
  }
  e.word = word_from_crossings(e.crossings);
  size_t k = 0;
  for (size_t i = 0; i < e.word.runs.size(); ++i) {
    long sum = 0;
    for (int j = 0; j < e.word.runs[i]; ++j) sum += e.crossing_signs[k++];
    e.diagram.entries.push_back(i % 2 == 0 ? sum : -sum);
  }
  e.knot = identify_knot(e.diagram, cat);
  return e;
}

}  // namespace lexiknot
