#include "lexiknot/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "lexiknot/error.hpp"

namespace lexiknot {

namespace {

using i64 = std::int64_t;

i64 to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw UsageError("fraction too large for enumeration: " + v.get_str());
  return v.get_si();
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// beta residues (mod alpha) equivalent to the target, mirror included
struct Target {
  i64 alpha;
  std::set<i64> residues;

  explicit Target(const Fraction& f) : alpha(to_i64(f.alpha)) {
    if (alpha <= 1) throw DegenerateFraction("no knot diagrams for " + f.str());
    i64 b = mod(to_i64(f.beta), alpha);
    i64 inv = to_i64(mod_inverse(Int(b), Int(alpha)));
    residues = {b, inv, mod(-b, alpha), mod(-inv, alpha)};
  }

  bool matches(i64 p, i64 q) const {
    if (p < 0) p = -p, q = -q;
    return p == alpha && residues.count(mod(q, alpha)) != 0;
  }
};

struct Search {
  const Target& target;
  int budget;
  SimpleFilter filter;
  std::set<TrigonalDiagram> found;
  std::vector<long> cur;

  bool accept(const TrigonalDiagram& d) const {
    switch (filter) {
      case SimpleFilter::Simple: return is_simple(d);
      case SimpleFilter::Islet: return is_simple_candidate(d, false);
      case SimpleFilter::Strict: return is_simple_candidate(d, true);
    }
    return false;
  }

  // (p, q) current convergent, (pp, qp) previous
  void run(i64 p, i64 q, i64 pp, i64 qp, int used) {
    if (!cur.empty() && target.matches(p, q)) {
      TrigonalDiagram d{cur};
      if (accept(d)) found.insert(canonical_diagram(d));
    }
    for (long a = 1; a + used <= budget; ++a) {
      for (long m : {a, -a}) {
        // the first entry is taken positive; mirrors are recovered by canonicalization
        if (cur.empty() && m < 0) continue;
        cur.push_back(m);
        run(m * p + pp, m * q + qp, p, q, used + static_cast<int>(a));
        cur.pop_back();
      }
    }
  }
};

}  // namespace

int fibonacci_length_bound(const Int& alpha) {
  // F(1) = F(2) = 1
  Int a = 1, b = 1;
  int m = 0;
  while (b < alpha) {  // b = F(m+2)
    Int c = a + b;
    a = b;
    b = c;
    ++m;
  }
  return m;
}

int m_C(const Fraction& f, int cap) {
  if (f.alpha <= 1) throw DegenerateFraction("m_C undefined for " + f.str());
  for (int m = 1; m <= cap; ++m) {
    std::vector<long> seq(m);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      for (int i = 0; i < m; ++i) seq[i] = (bits >> i) & 1 ? -1 : 1;
      if (fraction_equivalent(cf_eval(seq), f, true)) return m;
    }
  }
  throw NotFound("no +-1 sequence of length <= " + std::to_string(cap) + " for " + f.str());
}

int m_C(const KnotRecord& k, int cap) {
  if (cap < k.N) throw PreconditionError("m_C cap below crossing number");
  return m_C(k.fraction, cap);
}

DegreeTriple chebyshev_degree(const KnotRecord& k) {
  int b = m_C(k) + 1;
  while (b % 3 == 0) ++b;
  return DegreeTriple{3, b, 3 * k.N - b};
}

TrigonalDiagram canonical_diagram(const TrigonalDiagram& d) {
  std::vector<TrigonalDiagram> ims(4, d);
  std::reverse(ims[1].entries.begin(), ims[1].entries.end());
  for (auto& m : ims[2].entries) m = -m;
  ims[3] = ims[1];
  for (auto& m : ims[3].entries) m = -m;
  std::vector<TrigonalDiagram> pos;
  for (const auto& im : ims)
    if (!im.entries.empty() && im.entries.front() > 0) pos.push_back(im);
  const auto& pool = pos.empty() ? ims : pos;
  return *std::min_element(pool.begin(), pool.end());
}

std::vector<TrigonalDiagram> enumerate_simple_diagrams(const Fraction& f, int budget,
                                                       SimpleFilter filter) {
  if (budget > 16) throw UsageError("enumeration budget above 16 crossings is not supported");
  if (!f.is_knot()) throw PreconditionError(f.str() + " is a two-component link; only knots are enumerated");
  Target target(f);
  Search s{target, budget, filter, {}, {}};
  s.run(1, 0, 0, 1, 0);
  std::vector<TrigonalDiagram> out(s.found.begin(), s.found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto sa = sum_abs(a), sb = sum_abs(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

std::vector<TrigonalDiagram> enumerate_simple_diagrams(const KnotRecord& k, int budget,
                                                       SimpleFilter filter) {
  if (budget < k.N) throw UsageError("budget below crossing number of " + k.name);
  return enumerate_simple_diagrams(k.fraction, budget, filter);
}

}  // namespace lexiknot
