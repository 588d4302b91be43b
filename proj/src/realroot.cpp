#include "lexiknot/realroot.hpp"

#include <algorithm>
#include <functional>

#include "lexiknot/error.hpp"

namespace lexiknot {

int sign(const Rat& r) { return sgn(r); }

namespace {

Interval mul(const Interval& a, const Interval& b) {
  Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Rat floor_rat(const Rat& r) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(f);
}

}  // namespace

Interval eval_interval(const Poly& p, const Interval& x) {
  if (p.is_zero()) return {0, 0};
  const auto& c = p.coeffs();
  Interval acc{c.back(), c.back()};
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc = mul(acc, x);
    acc.lo += c[i];
    acc.hi += c[i];
  }
  return acc;
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    // rescale by a positive constant to keep coefficients small
    Rat k = abs(r.lc());
    r *= Rat(-1) / k;
    seq.push_back(r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sturm_variations(const std::vector<Poly>& seq, const Rat& x) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int count_roots(const std::vector<Poly>& seq, const Rat& a, const Rat& b) {
  return sturm_variations(seq, a) - sturm_variations(seq, b);
}

Rat root_bound(const Poly& p) {
  Rat m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeffs()[i] / p.lc())));
  return m + 1;
}

RealRoot::RealRoot(Poly g, Rat lo, Rat hi) : g_(std::move(g)), lo_(std::move(lo)), hi_(std::move(hi)) {}

double RealRoot::approx() const { return Rat((lo_ + hi_) / 2).get_d(); }

void RealRoot::refine() {
  if (exact()) return;
  Rat m = (lo_ + hi_) / 2;
  int sm = sign(g_(m));
  if (sm == 0) {
    lo_ = hi_ = m;
    return;
  }
  if (sign(g_(lo_)) * sm < 0)
    hi_ = m;
  else
    lo_ = m;
}

void RealRoot::refine_below(const Rat& w) {
  while (!exact() && hi_ - lo_ >= w) refine();
}

int RealRoot::sign_of(const Poly& f) {
  if (exact()) return sign(f(lo_));
  Poly h = gcd(f, g_);
  if (h.degree() >= 1 && sign(h(lo_)) * sign(h(hi_)) < 0) return 0;
  if (f.degree() <= 0) return f.is_zero() ? 0 : sign(f.lc());
  for (;;) {
    Interval e = enclose(f);
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    refine();
    if (exact()) return sign(f(lo_));
  }
}

std::vector<RealRoot> isolate_real_roots(const Poly& p) {
  std::vector<RealRoot> out;
  if (p.degree() < 1) return out;
  Poly g = squarefree_part(p);
  auto seq = sturm_sequence(g);
  Rat B = root_bound(g);
  std::function<void(const Rat&, const Rat&, int)> rec = [&](const Rat& a, const Rat& b, int n) {
    if (n == 0) return;
    if (n == 1 && sign(g(a)) != 0 && sign(g(b)) != 0) {
      out.emplace_back(g, a, b);
      return;
    }
    if (n == 1 && sign(g(b)) == 0) {
      out.emplace_back(g, b, b);
      return;
    }
    Rat m = (a + b) / 2;
    int left = count_roots(seq, a, m);
    rec(a, m, left);
    rec(m, b, n - left);
  };
  rec(-B, B, count_roots(seq, -B, B));
  std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.hi() < y.hi(); });
  return out;
}

Interval sqrt_bounds(const Rat& q, unsigned bits) {
  if (q < 0) throw UsageError("sqrt of negative rational");
  if (q == 0) return {0, 0};
  // sqrt(n/d) = sqrt(n*d)/d, scaled by 2^bits
  Int nd = q.get_num() * q.get_den();
  Int scaled = nd << (2 * bits);
  Int r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  Int den = q.get_den() << bits;
  Rat lo(r, den), hi(r + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  if (r * r == scaled) hi = lo;
  return {lo, hi};
}

Rat simplest_between(const Rat& a_in, const Rat& b_in) {
  if (!(a_in < b_in)) throw UsageError("simplest_between: empty interval");
  // Stern-Brocot descent on the open interval (a, b)
  Rat a = a_in, b = b_in;
  Rat fa = floor_rat(a);
  if (fa + 1 < b) {
    Rat c = fa + 1;
    // prefer the integer of least magnitude in (a, b)
    if (a < 0 && b > 0) return Rat(0);
    if (b <= 0) {
      Rat cb = -floor_rat(-b) - 1;  // largest integer < b
      return cb;
    }
    return c;
  }
  // a and b share the integer part fa, or b == fa + 1
  Rat x = a - fa, y = b - fa;  // 0 <= x < y <= 1
  if (x == 0) {
    // (0, y): 1/n with n = floor(1/y) + 1
    Rat n = floor_rat(Rat(1) / y) + 1;
    return fa + Rat(1) / n;
  }
  // (x, y) with 0 < x < y <= 1: recurse on reciprocals (1/y, 1/x)
  Rat inner = simplest_between(Rat(1) / y, Rat(1) / x);
  return fa + Rat(1) / inner;
}

}  // namespace lexiknot
