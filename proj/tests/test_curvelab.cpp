#include <doctest.h>

#include <random>

#include "lexiknot/curvelab.hpp"
#include "lexiknot/error.hpp"
#include "support/curves.hpp"
#include "support/oracles.hpp"

using namespace lexiknot;
using namespace lexiknot::testing;

static PlaneWord W(std::vector<int> r) { return PlaneWord{std::move(r)}; }

static std::string crossing_letters(const CrossingSet& cs) {
  std::string s;
  for (const auto& c : cs.crossings) s += letter_char(c.letter);
  return s;
}

TEST_CASE("explicit curves") {
  auto cs = analyze_curve(trefoil_curve());
  CHECK(cs.crossings.size() == 3);
  CHECK(cs.letters() == "L|ULU|L");
  CHECK(same_class(word_from_crossings(cs), W({3})));

  cs = analyze_curve(figure_eight_curve());
  CHECK(cs.crossings.size() == 4);
  CHECK(same_class(word_from_crossings(cs), W({2, 2})));

  cs = analyze_curve(two_node_curve());
  CHECK(cs.crossings.size() == 2);
  CHECK(word_from_crossings(cs) == W({0, 1, 1, 0}));

  CHECK(same_class(word_from_curve(zero_two_curve()), W({0, 2})));
}

TEST_CASE("Chebyshev curves have b-1 nodes") {
  for (int b : {4, 5, 7, 8, 10, 11}) {
    auto cs = analyze_curve({chebyshev(3), chebyshev(b)});
    CAPTURE(b);
    CHECK(static_cast<int>(cs.crossings.size()) == b - 1);
    CHECK(crossing_letters(cs) == sampled_letters({chebyshev(3), chebyshev(b)}, -1.2, 1.2, 40000));
  }
}

TEST_CASE("letters agree with a sampling oracle") {
  for (const auto& c : {trefoil_curve(), figure_eight_curve(), two_node_curve(), zero_two_curve()})
    CHECK(crossing_letters(analyze_curve(c)) == sampled_letters(c, -3, 3, 60000));
  auto p = perturb(q7_curve(Rat(-1, 2)), Rat(1, 1024));
  CHECK(crossing_letters(analyze_curve(p)) == sampled_letters(p, -1.3, 1.3, 400000));
  auto q = perturb(q7_curve(Rat(-3, 4)), Rat(1, 16384));
  CHECK(crossing_letters(analyze_curve(q)) == "ULUULU");
  CHECK(sampled_letters(q, -1.3, 1.3, 4000000) == "ULUULU");
}

TEST_CASE("y -> -y flips every letter") {
  for (auto c : {trefoil_curve(), figure_eight_curve(), two_node_curve(), zero_two_curve()}) {
    auto a = analyze_curve(c);
    c.y = -c.y;
    auto b = analyze_curve(c);
    REQUIRE(a.crossings.size() == b.crossings.size());
    for (size_t i = 0; i < a.crossings.size(); ++i) CHECK(a.crossings[i].letter != b.crossings[i].letter);
    CHECK(same_class(word_from_crossings(a), word_from_crossings(b)));
  }
}

TEST_CASE("add_triple_point") {
  auto c = q7_curve(Rat(-3, 4));
  CHECK(c.y.degree() == 7);
  CHECK(c.y == (chebyshev(3) + Poly::constant(Rat(3, 4))) * (chebyshev(4) + Poly{1}));
  CHECK_THROWS_AS(analyze_curve(c), NonNodal);
  auto cs = analyze_curve(c, true);
  CHECK(cs.crossings.size() == 3);
  CHECK(cs.triple_points.size() == 1);
  CHECK(cs.triple_points[0].x_approx == doctest::Approx(-0.75));
  CHECK(std::abs(cs.triple_points[0].y_approx) < 1e-6);
}

TEST_CASE("add_triple_point preconditions") {
  // x0 = 0 is the abscissa of the middle node of (T3, T4)
  CHECK_THROWS_AS(add_triple_point(trefoil_curve(), Rat(0), Rat(1)), PreconditionError);
  // only one real preimage outside [-1, 1]
  CHECK_THROWS_AS(add_triple_point(trefoil_curve(), Rat(2), Rat(1)), PreconditionError);
  // t = 1/4 is a preimage of x0 = -11/16 with T4(1/4) = 17/32
  CHECK_THROWS_AS(add_triple_point(trefoil_curve(), Rat(-11, 16), Rat(-17, 32)), PreconditionError);
  CHECK_NOTHROW(add_triple_point(trefoil_curve(), Rat(-11, 16), Rat(1)));
}

TEST_CASE("perturbation adds three nodes") {
  for (Rat x0 : {Rat(-3, 4), Rat(-1, 2)}) {
    for (int sign : {1, -1}) {
      auto c = q7_curve(x0);
      auto before = analyze_curve(c, true);
      auto p = perturb_auto(c, sign);
      CHECK(p.crossings.crossings.size() == before.crossings.size() + 3);
      CHECK(sgn(p.eps) == sign);
    }
  }
}

TEST_CASE("perturbation words") {
  CHECK(same_class(perturb_auto(q7_curve(Rat(-1, 2)), 1).word, W({2, 1, 3})));
  CHECK(same_class(perturb_auto(q7_curve(Rat(-1, 2)), -1).word, W({2, 1, 1, 2})));
  CHECK(same_class(perturb_auto(q7_curve(Rat(-3, 4)), -1).word, W({2, 1, 1, 2})));
  // the x0 = -3/4 curve with eps > 0 carries a curl at the left fold
  CHECK(perturb_auto(q7_curve(Rat(-3, 4)), 1).word == W({0, 1, 1, 2, 1, 1}));
}

TEST_CASE("stable words under halving") {
  auto c = q7_curve(Rat(-3, 4));
  CHECK(word_from_curve(perturb(c, Rat(-1, 64))) == word_from_curve(perturb(c, Rat(-1, 128))));
}

TEST_CASE("height polynomial degree") {
  auto cs = analyze_curve(trefoil_curve());
  CHECK(height_polynomial(cs, alternating_assignment(cs)).z.degree() == 5);
  cs = analyze_curve(figure_eight_curve());
  CHECK(height_polynomial(cs, alternating_assignment(cs)).z.degree() == 7);
}

TEST_CASE("height polynomial matches any over/under choice") {
  std::mt19937 rng(7);
  for (const auto& c : {trefoil_curve(), figure_eight_curve(), two_node_curve()}) {
    auto cs = analyze_curve(c);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Strand> over;
      for (size_t i = 0; i < cs.crossings.size(); ++i) over.push_back(rng() % 2 ? Strand::T : Strand::S);
      auto g = gauss_sequence(cs, over);
      auto h = height_polynomial(cs, over);
      CHECK(h.z.degree() == count_sign_changes(g));
      int first_over = -1, last_over = -1, first_under = -1;
      for (size_t k = 0; k < g.size(); ++k) {
        if (g[k] > 0 && first_over < 0) first_over = static_cast<int>(k);
        if (g[k] > 0) last_over = static_cast<int>(k);
        if (g[k] < 0 && first_under < 0) first_under = static_cast<int>(k);
      }
      if (last_over < first_under) CHECK(h.z.degree() == 1);
      // z(t) > z(s) exactly at the chosen strand
      for (size_t i = 0; i < cs.crossings.size(); ++i) {
        auto& cr = cs.crossings[i];
        double zt = h.z.eval(cr.t_approx), zs = h.z.eval(cr.s_approx);
        CHECK((zt > zs) == (over[i] == Strand::T));
      }
    }
  }
}

TEST_CASE("verify_embedding") {
  auto cs = analyze_curve(trefoil_curve());
  auto z = height_polynomial(cs, alternating_assignment(cs)).z;
  auto e = verify_embedding(chebyshev(3), chebyshev(4), z);
  REQUIRE(e.knot);
  CHECK(e.knot->name == "3_1");
  CHECK(same_class(project(e.diagram), W({3})));
  auto m = verify_embedding(chebyshev(3), chebyshev(4), -z);
  CHECK(m.knot->name == "3_1");
  REQUIRE(m.diagram.entries.size() == e.diagram.entries.size());
  for (size_t i = 0; i < m.diagram.entries.size(); ++i) CHECK(m.diagram.entries[i] == -e.diagram.entries[i]);
  // y itself cannot separate any node
  CHECK_THROWS_AS(verify_embedding(chebyshev(3), chebyshev(4), chebyshev(4)), NonInjective);
}

TEST_CASE("lowering the height degree keeps the knot") {
  auto c = figure_eight_curve();
  auto cs = analyze_curve(c);
  auto z = height_polynomial(cs, alternating_assignment(cs)).z;
  // add a multiple of x^4 y; its value agrees on both branches of every node
  Poly noisy = z + pow(c.x, 4) * c.y * Rat(5, 3);
  CHECK(noisy.degree() == 17);
  Poly r = reduce_height_degree(noisy, c);
  CHECK(r.degree() <= 7);
  CHECK(verify_embedding(c.x, c.y, r).knot->name == "4_1");
}

TEST_CASE("gauss sign changes agree with diagram formula") {
  std::vector<PlaneCurve> curves{trefoil_curve(), figure_eight_curve(), two_node_curve(), zero_two_curve(),
                                 perturb_auto(q7_curve(Rat(-3, 4)), -1).curve,
                                 perturb_auto(q7_curve(Rat(-1, 2)), 1).curve};
  for (const auto& c : curves) {
    auto cs = analyze_curve(c);
    auto over = alternating_assignment(cs);
    int changes = count_sign_changes(gauss_sequence(cs, over));
    // leading/trailing zero runs only mark the starting position
    auto w = word_from_crossings(cs).runs;
    std::vector<long> e;
    for (int r : w)
      if (r) e.push_back(r);
    CHECK(changes == gauss_sign_changes(TrigonalDiagram{e}));
  }
}

TEST_CASE("svg output") {
  auto c = trefoil_curve();
  auto cs = analyze_curve(c);
  auto svg = render_svg(c, cs);
  CHECK(svg.rfind("<svg", 0) == 0);
  size_t circles = 0;
  for (size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  CHECK(circles == 3);
}
