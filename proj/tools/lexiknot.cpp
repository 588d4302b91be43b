#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numeric>

#include "lexiknot/curvelab.hpp"
#include "lexiknot/enumerate.hpp"
#include "lexiknot/error.hpp"
#include "lexiknot/planereduce.hpp"
#include "lexiknot/report.hpp"

using namespace lexiknot;
using nlohmann::json;

namespace {

int default_cap(const Fraction& f) {
  if (const KnotRecord* k = default_catalog().lookup(f)) return 3 * k->N + 3;
  auto cf = cf_expand_positive(f);
  long n = std::accumulate(cf.begin(), cf.end(), 0L);
  return static_cast<int>(3 * n + 3);
}

Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

json bound_json(const Bound& b) {
  return {{"value", b.value}, {"rule", b.rule}, {"detail", b.detail}, {"word", b.word.runs}, {"cost", b.cost}};
}

json crossings_json(const CrossingSet& cs) {
  json arr = json::array();
  for (const auto& c : cs.crossings)
    arr.push_back({{"t", c.t_approx}, {"s", c.s_approx}, {"x", c.x_approx}, {"y", c.y_approx},
                   {"letter", std::string(1, letter_char(c.letter))}});
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicographic degrees of two-bridge knots"};
  app.require_subcommand(1);

  // enumerate
  auto* en = app.add_subcommand("enumerate", "simple trigonal diagrams of a two-bridge knot");
  std::string en_frac;
  int en_budget = 0;
  bool en_strict = false, en_islet = false, en_json = false;
  en->add_option("--fraction", en_frac, "Schubert fraction A/B")->required();
  en->add_option("--budget", en_budget, "crossing budget (default m_C)");
  en->add_flag("--strict", en_strict, "strict simplicity criterion");
  en->add_flag("--islet", en_islet, "islet-free filter only");
  en->add_flag("--json", en_json);

  // mc
  auto* mc = app.add_subcommand("mc", "least crossing count of a +-1 Chebyshev diagram");
  std::string mc_frac;
  int mc_cap = 0;
  mc->add_option("--fraction", mc_frac)->required();
  mc->add_option("--cap", mc_cap, "search cap (default 3N+3)");

  // reduce
  auto* rd = app.add_subcommand("reduce", "plane reduction of a diagram word");
  std::string rd_word;
  int rd_depth = 10;
  bool rd_json = false;
  rd->add_option("--word", rd_word, "run lengths, e.g. 2,1,3")->required();
  rd->add_option("--depth", rd_depth, "maximum number of R moves");
  rd->add_flag("--json", rd_json);

  // curve
  auto* cv = app.add_subcommand("curve", "crossings, word and knot of a trigonal curve");
  std::string cv_x, cv_y, cv_z, cv_svg, cv_triple, cv_eps;
  bool cv_json = false;
  cv->add_option("--x", cv_x, "cubic, coeffs:... or cheb:3")->required();
  cv->add_option("--y", cv_y)->required();
  cv->add_option("--z", cv_z, "height polynomial, or 'alt' for the alternating one");
  cv->add_option("--svg", cv_svg, "write a drawing of the plane curve");
  cv->add_option("--triple", cv_triple, "x0:yshift, replace y by (x - x0)(y + yshift)");
  cv->add_option("--eps", cv_eps, "shift of the x parameter; +auto or -auto to search");
  cv->add_flag("--json", cv_json);

  // table
  auto* tb = app.add_subcommand("table", "results table over the catalog");
  std::string tb_knots, tb_format = "md", tb_diff;
  tb->add_option("--knots", tb_knots, "comma-separated names (default all)");
  tb->add_option("--format", tb_format, "json|csv|md");
  tb->add_option("--diff", tb_diff, "expected knots.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) {
      Fraction f = Fraction::parse(en_frac);
      int budget = en_budget > 0 ? en_budget : m_C(f, default_cap(f));
      SimpleFilter filter = en_strict ? SimpleFilter::Strict : en_islet ? SimpleFilter::Islet : SimpleFilter::Simple;
      auto ds = enumerate_simple_diagrams(f, budget, filter);
      if (en_json) {
        json arr = json::array();
        for (const auto& d : ds)
          arr.push_back({{"entries", d.entries},
                         {"sigma", sign_changes(d)},
                         {"N", crossing_number(d)},
                         {"sum_abs", sum_abs(d)}});
        std::cout << arr.dump() << '\n';
      } else {
        for (const auto& d : ds) std::cout << d.str() << '\n';
      }
      return 0;
    }
    if (*mc) {
      Fraction f = Fraction::parse(mc_frac);
      std::cout << m_C(f, mc_cap > 0 ? mc_cap : default_cap(f)) << '\n';
      return 0;
    }
    if (*rd) {
      PlaneWord w = PlaneWord::parse(rd_word);
      auto tr = reduction_search(w, rd_depth);
      auto lo = b_lower_bound(w, default_rules(), rd_depth);
      auto hi = b_upper_bound(w, default_rules(), rd_depth);
      if (rd_json) {
        json steps = json::array();
        for (const auto& s : tr.steps) steps.push_back({{"move", to_string(s.kind)}, {"position", s.position}});
        json j{{"word", w.runs},       {"base", tr.base.runs}, {"cost", tr.cost},
               {"base_in_table", tr.base_in_table}, {"steps", steps}, {"b_lower", bound_json(lo)}};
        if (hi) j["b_upper"] = bound_json(*hi);
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "word " << w.str() << '\n';
        std::cout << "base " << tr.base.str() << " cost " << tr.cost << (tr.base_in_table ? " (table)" : "") << '\n';
        for (const auto& s : tr.steps) std::cout << "  " << to_string(s.kind) << ' ' << s.position << '\n';
        std::cout << "b >= " << lo.value << " [" << lo.rule << (lo.detail.empty() ? "" : ": " + lo.detail) << "]\n";
        if (hi) std::cout << "b <= " << hi->value << " [" << hi->rule << "]\n";
      }
      return 0;
    }
    if (*cv) {
      PlaneCurve c{Poly::parse(cv_x), Poly::parse(cv_y)};
      if (!cv_triple.empty()) {
        auto colon = cv_triple.find(':');
        if (colon == std::string::npos) throw UsageError("--triple expects x0:yshift");
        c = add_triple_point(c, parse_rat(cv_triple.substr(0, colon)), parse_rat(cv_triple.substr(colon + 1)));
      }
      std::optional<Rat> eps;
      CrossingSet cs;
      if (cv_eps == "+auto" || cv_eps == "-auto") {
        auto p = perturb_auto(c, cv_eps[0] == '+' ? 1 : -1);
        eps = p.eps;
        c = p.curve;
        cs = p.crossings;
      } else {
        if (!cv_eps.empty()) {
          eps = parse_rat(cv_eps);
          c = perturb(c, *eps);
        }
        cs = analyze_curve(c, false);
      }
      PlaneWord word = word_from_crossings(cs);
      json j{{"x", c.x.coeff_text()},   {"y", c.y.coeff_text()}, {"letters", cs.letters()},
             {"word", word.runs},       {"crossings", crossings_json(cs)}};
      if (eps) j["eps"] = eps->get_str();
      std::optional<Embedding> emb;
      if (!cv_z.empty()) {
        Poly z;
        if (cv_z == "alt") {
          auto hp = height_polynomial(cs, alternating_assignment(cs));
          z = hp.z;
        } else {
          z = Poly::parse(cv_z);
        }
        j["z"] = z.coeff_text();
        emb = verify_embedding(c.x, c.y, z);
        j["degree"] = {c.x.degree(), c.y.degree(), z.degree()};
        j["diagram"] = emb->diagram.entries;
        j["knot"] = emb->knot ? json(emb->knot->name) : json(nullptr);
      }
      if (!cv_svg.empty()) {
        std::ofstream out(cv_svg);
        if (!out) throw UsageError("cannot write " + cv_svg);
        out << render_svg(c, cs);
      }
      if (cv_json) {
        std::cout << j.dump() << '\n';
      } else {
        if (eps) std::cout << "eps " << eps->get_str() << '\n';
        std::cout << "letters " << cs.letters() << "\nword " << word.str() << '\n';
        std::cout << "crossings " << cs.crossings.size() << '\n';
        if (emb) {
          std::cout << "z " << j["z"].get<std::string>() << '\n';
          std::cout << "degree (" << c.x.degree() << ',' << c.y.degree() << ',' << j["degree"][2] << ")\n";
          std::cout << "diagram " << emb->diagram.pretty() << '\n';
          std::cout << "knot " << (emb->knot ? emb->knot->name : std::string("unknown")) << '\n';
        }
      }
      return 0;
    }
    if (*tb) {
      Format fmt = parse_format(tb_format);
      std::vector<std::string> names;
      if (tb_knots.empty()) {
        names = all_names();
      } else {
        std::stringstream ss(tb_knots);
        for (std::string n; std::getline(ss, n, ',');)
          if (!n.empty()) names.push_back(n);
      }
      auto rows = build_table(names);
      std::cout << emit(rows, fmt);
      bool failed = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.failed; });
      if (!tb_diff.empty()) {
        std::ifstream in(tb_diff);
        if (!in) throw UsageError("cannot read " + tb_diff);
        auto rep = diff_expected(rows, in);
        std::cerr << rep.text();
        if (failed) return 2;
        return rep.mismatches ? 1 : 0;
      }
      return failed ? 2 : 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
