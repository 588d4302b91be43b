#include <doctest.h>

#include <numeric>
#include <random>

#include "lexiknot/diagram.hpp"
#include "lexiknot/planereduce.hpp"
#include "support/oracles.hpp"

using namespace lexiknot;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 r(20261016);
  return r;
}

long nonzero(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  long v = 0;
  while (v == 0) v = d(rng());
  return v;
}

std::vector<long> random_seq(int max_len, long bound) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::vector<long> s(len(rng()));
  for (auto& v : s) v = nonzero(-bound, bound);
  return s;
}

PlaneWord random_word(int max_len, int bound) {
  std::uniform_int_distribution<int> len(1, max_len), run(0, bound);
  PlaneWord w;
  w.runs.resize(len(rng()));
  for (auto& r : w.runs) r = run(rng());
  return w;
}

int total(const PlaneWord& w) { return std::accumulate(w.runs.begin(), w.runs.end(), 0); }

}  // namespace

TEST_CASE("continued fraction round trip, alpha <= 99") {
  int n = 0;
  for (long a = 2; a <= 99; ++a)
    for (long b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      Fraction f = Fraction::from(a, b);
      auto cf = cf_expand_positive(f);
      REQUIRE(cf_eval(cf) == f);
      for (long v : cf) CHECK(v > 0);
      if (cf.size() > 1) CHECK(cf.back() >= 2);
      ++n;
    }
  CHECK(n == 3003);
}

TEST_CASE("convergents are unimodular") {
  for (int i = 0; i < 5000; ++i) {
    auto s = random_seq(9, 6);
    if (i % 3 == 0) s[s.size() / 2] = 0;
    auto c = cf_convergents(s);
    Int det = c.p * c.q_prev - c.p_prev * c.q;
    CHECK(abs(det) == 1);
  }
}

TEST_CASE("fraction equivalence is an equivalence relation, alpha <= 99") {
  for (long a = 3; a <= 99; a += 2) {
    std::vector<long> res;
    for (long b = 1; b < a; ++b)
      if (std::gcd(a, b) == 1) res.push_back(b);
    const size_t n = res.size();
    for (bool mirror : {false, true}) {
      std::vector<char> R(n * n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          bool e = fraction_equivalent(Fraction::from(a, res[i]), Fraction::from(a, res[j]), mirror);
          R[i * n + j] = e;
          if (!mirror) {
            CHECK(e == testing::residues_equivalent(a, res[i], res[j], false));
            // the mirror-inclusive relation is coarser
            if (e) CHECK(fraction_equivalent(Fraction::from(a, res[i]), Fraction::from(a, res[j]), true));
          }
        }
      bool ok = true;
      for (size_t i = 0; i < n; ++i) {
        ok &= R[i * n + i] == 1;
        for (size_t j = 0; j < n; ++j) {
          ok &= R[i * n + j] == R[j * n + i];
          if (!R[i * n + j]) continue;
          for (size_t k = 0; k < n; ++k) ok &= !R[j * n + k] || R[i * n + k];
        }
      }
      CAPTURE(a);
      CHECK(ok);
    }
  }
}

TEST_CASE("reversal gives an equivalent fraction: exhaustive, entries in [-4,4], length <= 5") {
  std::vector<long> cur;
  int checked = 0, bad = 0;
  std::function<void()> rec = [&] {
    if (!cur.empty()) {
      Fraction f = cf_eval(cur);
      if (f.alpha >= 2) {
        std::vector<long> r(cur.rbegin(), cur.rend());
        if (!fraction_equivalent(f, cf_eval(r), true)) ++bad;
        ++checked;
      }
    }
    if (cur.size() == 5) return;
    for (long v = -4; v <= 4; ++v) {
      if (v == 0) continue;
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  CHECK(bad == 0);
  CHECK(checked > 30000);
}

TEST_CASE("reversal gives an equivalent fraction: 10^4 random diagrams") {
  for (int i = 0; i < 10000; ++i) {
    auto s = random_seq(10, 12);
    Fraction f = cf_eval(s);
    if (f.alpha < 2) continue;
    std::vector<long> r(s.rbegin(), s.rend());
    CHECK(fraction_equivalent(f, cf_eval(r), true));
  }
}

TEST_CASE("lagrange_step preserves the fraction") {
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 5000; ++i) {
    auto s = random_seq(6, 5);
    if (s.size() < 2) continue;
    std::uniform_int_distribution<int> at(0, static_cast<int>(s.size()) - 2);
    int pos = at(rng());
    // make the pattern (x, m, -n, -y): entries after pos+1 negative of the output convention
    s[pos] = std::abs(s[pos]);
    s[pos + 1] = -std::abs(s[pos + 1]);
    int eps = coin(rng()) ? 1 : -1;
    auto out = lagrange_step(TrigonalDiagram{s}, pos, eps);
    CHECK(cf_eval(out.entries) == cf_eval(s));
  }
}

TEST_CASE("normal form is positive, islet-free and equivalent") {
  for (int i = 0; i < 3000; ++i) {
    auto s = random_seq(7, 6);
    Fraction f = cf_eval(s);
    if (f.alpha < 2) continue;
    auto nf = conway_normal_form(TrigonalDiagram{s});
    for (long v : nf.diagram.entries) CHECK(v > 0);
    CHECK(islets(nf.diagram).empty());
    CHECK(fraction_equivalent(cf_eval(nf.diagram.entries), f, true));
  }
}

TEST_CASE("all-positive diagrams: N = sum and c = 2N - 1") {
  for (int i = 0; i < 2000; ++i) {
    auto s = random_seq(7, 6);
    for (auto& v : s) v = std::abs(v);
    TrigonalDiagram d{s};
    long sum = std::accumulate(s.begin(), s.end(), 0L);
    CHECK(crossing_number(d) == sum);
    CHECK(gauss_sign_changes(d) == 2 * sum - 1);
  }
}

TEST_CASE("cost-0 moves conserve the crossing count: 10^4 random words") {
  for (int i = 0; i < 10000; ++i) {
    auto w = random_word(7, 4);
    for (const auto& [step, next] : zero_cost_moves(w)) {
      CAPTURE(w.str());
      CHECK(total(next) == total(w));
    }
  }
}

TEST_CASE("R lowers the crossing count by 3 and inverts inverse_R") {
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 5000; ++i) {
    auto w = normalize(random_word(6, 4));
    if (w.runs.size() < 2) continue;
    std::uniform_int_distribution<int> at(0, static_cast<int>(w.runs.size()) - 2);
    int k = at(rng());
    if (coin(rng())) {
      auto up = inverse_R(w, k, Branch::A);
      CHECK(total(up) == total(w) + 3);
      CHECK(apply_R(up, k) == w);
    } else {
      auto up = inverse_R(w, k, Branch::B);
      CHECK(total(up) == total(w) + 3);
      CHECK(normalize(apply_R(up, k + 1)) == normalize(w));
    }
  }
}

TEST_CASE("word classes are closed under their moves") {
  for (int i = 0; i < 300; ++i) {
    auto w = random_word(5, 3);
    auto cls = word_class(w);
    CHECK(cls.count(w) == 1);
    for (const auto& v : cls) {
      CHECK(total(v) == total(w));
      CHECK(canonical_word(v) == canonical_word(w));
    }
  }
}
