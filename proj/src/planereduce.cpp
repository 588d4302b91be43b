#include "lexiknot/planereduce.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>

#include "lexiknot/csv.hpp"
#include "lexiknot/data.hpp"
#include "lexiknot/error.hpp"

namespace lexiknot {

PlaneWord PlaneWord::parse(const std::string& text) {
  PlaneWord w;
  std::string s = text;
  if (!s.empty() && s.front() == '(') s.erase(s.begin());
  if (!s.empty() && s.back() == ')') s.pop_back();
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || *end != '\0' || v < 0) throw ParseError("bad run '" + tok + "' in '" + text + "'");
    w.runs.push_back(static_cast<int>(v));
  }
  if (w.runs.empty()) throw ParseError("empty word");
  return w;
}

std::string PlaneWord::str() const {
  std::string out;
  for (size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(runs[i]);
  }
  return out;
}

int PlaneWord::crossings() const {
  int s = 0;
  for (int r : runs) s += r;
  return s;
}

PlaneWord project(const TrigonalDiagram& d) {
  PlaneWord w;
  for (long m : d.entries) w.runs.push_back(static_cast<int>(std::labs(m)));
  return w;
}

PlaneWord normalize(const PlaneWord& w) {
  std::vector<int> r = w.runs;
  for (size_t i = 1; i + 1 < r.size();) {
    if (r[i] == 0) {
      r[i - 1] += r[i + 1];
      r.erase(r.begin() + i, r.begin() + i + 2);
      i = 1;
    } else {
      ++i;
    }
  }
  return PlaneWord{r};
}

PlaneWord reversed(const PlaneWord& w) {
  return PlaneWord{std::vector<int>(w.runs.rbegin(), w.runs.rend())};
}

std::optional<PlaneWord> end_move_right(const PlaneWord& w) {
  if (w.runs.empty() || w.runs.back() < 1) return std::nullopt;
  PlaneWord out = w;
  out.runs.back() -= 1;
  out.runs.push_back(1);
  return normalize(out);
}

std::optional<PlaneWord> end_move_left(const PlaneWord& w) {
  auto r = end_move_right(reversed(w));
  if (!r) return std::nullopt;
  return reversed(*r);
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::Reverse: return "reverse";
    case MoveKind::EndRight: return "end-right";
    case MoveKind::EndLeft: return "end-left";
    case MoveKind::Collapse: return "collapse";
    case MoveKind::R: return "R";
  }
  return "?";
}

std::vector<std::pair<Step, PlaneWord>> zero_cost_moves(const PlaneWord& w) {
  std::vector<std::pair<Step, PlaneWord>> out;
  out.push_back({{MoveKind::Reverse, 0}, reversed(w)});
  if (auto r = end_move_right(w)) out.push_back({{MoveKind::EndRight, 0}, *r});
  if (auto r = end_move_left(w)) out.push_back({{MoveKind::EndLeft, 0}, *r});
  for (size_t i = 1; i + 1 < w.runs.size(); ++i) {
    if (w.runs[i] != 0) continue;
    out.push_back({{MoveKind::Collapse, static_cast<int>(i)}, apply_step(w, {MoveKind::Collapse, static_cast<int>(i)})});
  }
  return out;
}

std::set<PlaneWord> neighbors(const PlaneWord& w) {
  std::set<PlaneWord> out;
  for (auto& [s, x] : zero_cost_moves(w)) out.insert(x);
  return out;
}

std::set<PlaneWord> word_class(const PlaneWord& w) {
  std::set<PlaneWord> seen{w};
  std::vector<PlaneWord> stack{w};
  while (!stack.empty()) {
    PlaneWord x = stack.back();
    stack.pop_back();
    for (auto& y : neighbors(x))
      if (seen.insert(y).second) stack.push_back(y);
  }
  return seen;
}

namespace {
bool shorter_then_lex(const PlaneWord& a, const PlaneWord& b) {
  if (a.runs.size() != b.runs.size()) return a.runs.size() < b.runs.size();
  return a.runs < b.runs;
}
}  // namespace

PlaneWord canonical_word(const PlaneWord& w) {
  auto cls = word_class(w);
  return *std::min_element(cls.begin(), cls.end(), shorter_then_lex);
}

bool same_class(const PlaneWord& a, const PlaneWord& b) {
  return canonical_word(a) == canonical_word(b);
}

bool can_apply_R(const PlaneWord& w, int i) {
  const auto& r = w.runs;
  return i >= 0 && static_cast<size_t>(i) + 2 < r.size() && r[i] >= 1 && r[i + 1] == 1 &&
         r[i + 2] >= 1;
}

PlaneWord apply_R(const PlaneWord& w, int i) {
  if (!can_apply_R(w, i))
    throw PatternMismatch("R does not apply at run " + std::to_string(i) + " of (" + w.str() + ")");
  PlaneWord out;
  out.runs.assign(w.runs.begin(), w.runs.begin() + i);
  out.runs.push_back(w.runs[i] - 1);
  out.runs.push_back(w.runs[i + 2] - 1);
  out.runs.insert(out.runs.end(), w.runs.begin() + i + 3, w.runs.end());
  return out;
}

PlaneWord inverse_R(const PlaneWord& w, int i, Branch branch) {
  if (i < 0 || static_cast<size_t>(i) + 1 >= w.runs.size())
    throw PatternMismatch("no run boundary at " + std::to_string(i) + " in (" + w.str() + ")");
  int m = w.runs[i], n = w.runs[i + 1];
  PlaneWord out;
  out.runs.assign(w.runs.begin(), w.runs.begin() + i);
  if (branch == Branch::A) {
    out.runs.insert(out.runs.end(), {m + 1, 1, n + 1});
  } else {
    out.runs.insert(out.runs.end(), {m, 1, 1, 1, n});
  }
  out.runs.insert(out.runs.end(), w.runs.begin() + i + 2, w.runs.end());
  return out;
}

PlaneWord apply_step(const PlaneWord& w, const Step& s) {
  switch (s.kind) {
    case MoveKind::Reverse: return reversed(w);
    case MoveKind::EndRight:
      if (auto r = end_move_right(w)) return *r;
      break;
    case MoveKind::EndLeft:
      if (auto r = end_move_left(w)) return *r;
      break;
    case MoveKind::Collapse: {
      size_t i = static_cast<size_t>(s.position);
      if (i >= 1 && i + 1 < w.runs.size() && w.runs[i] == 0) {
        PlaneWord out = w;
        out.runs[i - 1] += out.runs[i + 1];
        out.runs.erase(out.runs.begin() + i, out.runs.begin() + i + 2);
        return out;
      }
      break;
    }
    case MoveKind::R: return normalize(apply_R(w, s.position));
  }
  throw PatternMismatch(to_string(s.kind) + " does not apply to (" + w.str() + ")");
}

// ---- base table -----------------------------------------------------------

namespace {

PlaneWord parse_runs_field(const std::string& f, int line) {
  try {
    return PlaneWord::parse(f);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

int parse_int_field(const std::string& f, int line) {
  char* end = nullptr;
  long v = std::strtol(f.c_str(), &end, 10);
  if (f.empty() || *end != '\0') throw ParseError("line " + std::to_string(line) + ": bad integer '" + f + "'");
  return static_cast<int>(v);
}

}  // namespace

BoundRules parse_rules(std::istream& bases_csv, std::istream& overrides_csv) {
  BoundRules rules;
  auto bt = csv::read(bases_csv);
  int c_runs = bt.column("runs"), c_ex = bt.column("b_exact"), c_lo = bt.column("b_lower"),
      c_src = bt.column("source");
  for (size_t i = 0; i < bt.rows.size(); ++i) {
    const auto& r = bt.rows[i];
    int line = bt.line_numbers[i];
    BaseEntry e;
    e.runs = parse_runs_field(r[c_runs], line);
    if (!r[c_ex].empty()) e.b_exact = parse_int_field(r[c_ex], line);
    e.b_lower = r[c_lo].empty() ? e.b_exact.value_or(0) : parse_int_field(r[c_lo], line);
    e.source = r[c_src];
    if (e.b_exact && e.b_lower > *e.b_exact)
      throw ParseError("line " + std::to_string(line) + ": b_lower above b_exact");
    rules.bases.push_back(std::move(e));
  }
  auto ot = csv::read(overrides_csv);
  int o_runs = ot.column("runs"), o_lo = ot.column("b_lower"), o_row = ot.column("table_row");
  for (size_t i = 0; i < ot.rows.size(); ++i) {
    const auto& r = ot.rows[i];
    int line = ot.line_numbers[i];
    rules.overrides.push_back(
        Override{parse_runs_field(r[o_runs], line), parse_int_field(r[o_lo], line), r[o_row]});
  }
  return rules;
}

BoundRules load_rules(const std::string& bases_path, const std::string& overrides_path) {
  std::ifstream b(bases_path), o(overrides_path);
  if (!b) throw ParseError("cannot open " + bases_path);
  if (!o) throw ParseError("cannot open " + overrides_path);
  return parse_rules(b, o);
}

const BoundRules& default_rules() {
  static const BoundRules rules = [] {
    std::istringstream b(embedded::bases_csv), o(embedded::overrides_csv);
    return parse_rules(b, o);
  }();
  return rules;
}

namespace {

bool is_knot_word(const PlaneWord& w) {
  std::vector<long> seq(w.runs.begin(), w.runs.end());
  return cf_eval(seq).is_knot();
}

}  // namespace

std::optional<BaseValue> base_value(const PlaneWord& w, const BoundRules& rules) {
  PlaneWord c = canonical_word(w);
  for (const auto& e : rules.bases)
    if (canonical_word(e.runs) == c) return BaseValue{e.b_exact, e.b_lower, "base (" + e.runs.str() + ")"};
  if (c.runs.size() == 1 && c.runs[0] % 2 == 1) {
    int n = c.runs[0] / 2;
    return BaseValue{3 * n + 1, 3 * n + 1, "odd-run"};
  }
  for (const auto& x : word_class(w)) {
    if (x.runs.empty() || x.runs.size() > 2) continue;
    if (*std::min_element(x.runs.begin(), x.runs.end()) < 1) continue;
    int n = x.crossings();
    if (n < 3 || !is_knot_word(x)) continue;
    int b = (3 * n - 1) / 2;
    return BaseValue{b, b, "two-run"};
  }
  return std::nullopt;
}

std::optional<Override> override_for(const PlaneWord& w, const BoundRules& rules) {
  PlaneWord c = canonical_word(w);
  for (const auto& o : rules.overrides)
    if (canonical_word(o.runs) == c) return o;
  return std::nullopt;
}

// ---- search ---------------------------------------------------------------

namespace {

struct Node {
  PlaneWord parent;
  Step step;
  int cost = 0;
  bool root = false;
};

// 0/3-weighted breadth-first search over words; first visit fixes the cost
// because every word in a class has the same number of crossings.
struct SearchGraph {
  std::map<PlaneWord, Node> nodes;
  std::map<PlaneWord, int> class_cost;  // canonical -> cost

  SearchGraph(const PlaneWord& src, int depth_cap) {
    nodes[src] = Node{src, {MoveKind::Reverse, 0}, 0, true};
    std::vector<PlaneWord> level{src};
    for (int depth = 0; !level.empty(); ++depth) {
      std::deque<PlaneWord> q(level.begin(), level.end());
      std::vector<PlaneWord> members;
      while (!q.empty()) {
        PlaneWord x = q.front();
        q.pop_front();
        members.push_back(x);
        for (auto& [s, y] : zero_cost_moves(x)) {
          if (nodes.count(y)) continue;
          nodes[y] = Node{x, s, 3 * depth, false};
          q.push_back(y);
        }
      }
      std::vector<PlaneWord> next;
      if (depth < depth_cap) {
        for (const auto& x : members) {
          for (int i = 0; i + 2 < static_cast<int>(x.runs.size()); ++i) {
            if (!can_apply_R(x, i)) continue;
            Step s{MoveKind::R, i};
            PlaneWord y = apply_step(x, s);
            if (nodes.count(y)) continue;
            nodes[y] = Node{x, s, 3 * (depth + 1), false};
            next.push_back(y);
          }
        }
      }
      level = std::move(next);
    }
    for (const auto& [w, n] : nodes) {
      PlaneWord c = canonical_word(w);
      auto it = class_cost.find(c);
      if (it == class_cost.end() || n.cost < it->second) class_cost[c] = n.cost;
    }
  }

  std::vector<Step> path_to(const PlaneWord& w) const {
    std::vector<Step> steps;
    PlaneWord cur = w;
    while (true) {
      const Node& n = nodes.at(cur);
      if (n.root) break;
      steps.push_back(n.step);
      cur = n.parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
  }
};

std::vector<ReachedClass> ordered_classes(const SearchGraph& g) {
  std::vector<ReachedClass> out;
  for (const auto& [c, cost] : g.class_cost) out.push_back({c, cost});
  std::sort(out.begin(), out.end(), [](const ReachedClass& a, const ReachedClass& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return shorter_then_lex(a.canonical, b.canonical);
  });
  return out;
}

}  // namespace

std::vector<ReachedClass> reachable_classes(const PlaneWord& w, int depth_cap) {
  return ordered_classes(SearchGraph(w, depth_cap));
}

ReductionTrace reduction_search(const PlaneWord& w, int depth_cap, const BoundRules& rules) {
  ReductionTrace t;
  t.source = w;
  PlaneWord nw = normalize(w);
  if (nw.runs.size() <= 2) {
    // one- and two-run words are their own base
    t.base = nw;
    if (!(nw == w)) {
      SearchGraph g(w, 0);
      t.steps = g.path_to(nw);
    }
    t.base_in_table = base_value(nw, rules).has_value();
    return t;
  }
  SearchGraph g(w, depth_cap);
  auto classes = ordered_classes(g);
  int deepest = -1;
  for (const auto& rc : classes)
    if (rc.canonical.crossings() > 0) deepest = std::max(deepest, rc.cost);
  const ReachedClass* best = nullptr;
  std::tuple<int, int, PlaneWord> best_key;
  for (const auto& rc : classes) {
    if (rc.cost != deepest || rc.canonical.crossings() == 0) continue;
    auto bv = base_value(rc.canonical, rules);
    int value = bv ? bv->exact.value_or(bv->lower) : INT_MAX;
    std::tuple<int, int, PlaneWord> key{bv ? 0 : 1, value, rc.canonical};
    bool better = !best || std::get<0>(key) < std::get<0>(best_key) ||
                  (std::get<0>(key) == std::get<0>(best_key) &&
                   (std::get<1>(key) < std::get<1>(best_key) ||
                    (std::get<1>(key) == std::get<1>(best_key) &&
                     shorter_then_lex(std::get<2>(key), std::get<2>(best_key)))));
    if (better) {
      best = &rc;
      best_key = key;
    }
  }
  if (!best) {
    t.base = nw;
    return t;
  }
  t.base = best->canonical;
  t.cost = best->cost;
  t.steps = g.path_to(best->canonical);
  t.base_in_table = std::get<0>(best_key) == 0;
  return t;
}

// ---- bounds ---------------------------------------------------------------

int skip_multiples_of_3(int b) {
  while (b % 3 == 0) ++b;
  return b;
}

int local_lower_bound(const PlaneWord& w, std::string* rule, std::string* detail,
                      const BoundRules& rules) {
  int b = skip_multiples_of_3(w.crossings() + 1);
  std::string r = "crossings", d = std::to_string(w.crossings()) + " crossings";
  if (auto bv = base_value(w, rules); bv && bv->lower >= b) {
    b = bv->lower;
    r = bv->rule == "odd-run" || bv->rule == "two-run" ? bv->rule : "base";
    d = bv->rule;
  }
  if (auto o = override_for(w, rules); o && o->b_lower > b) {
    b = o->b_lower;
    r = "override";
    d = "override (" + o->runs.str() + ") from row " + o->table_row;
  }
  if (rule) *rule = r;
  if (detail) *detail = d;
  return b;
}

Bound b_lower_bound(const PlaneWord& w, const BoundRules& rules, int depth_cap) {
  Bound best;
  bool have = false;
  for (const auto& rc : reachable_classes(w, depth_cap)) {
    std::string rule, detail;
    int v = local_lower_bound(rc.canonical, &rule, &detail, rules) + rc.cost;
    if (!have || v > best.value) {
      best = Bound{v, rule, detail, rc.canonical, rc.cost};
      have = true;
    }
  }
  return best;
}

std::optional<Bound> b_upper_bound(const PlaneWord& w, const BoundRules& rules, int depth_cap) {
  std::optional<Bound> best;
  for (const auto& rc : reachable_classes(w, depth_cap)) {
    auto bv = base_value(rc.canonical, rules);
    if (!bv || !bv->exact) continue;
    int v = *bv->exact + rc.cost;
    if (!best || v < best->value) best = Bound{v, "construction", bv->rule, rc.canonical, rc.cost};
  }
  return best;
}

bool in_semigroup(int n, int a, int b) {
  if (n < 0) return false;
  for (int j = 0; j * b <= n; ++j)
    if ((n - j * b) % a == 0) return true;
  return false;
}

DegreeReport degree_verdict(const KnotRecord& k, const VerdictOptions& opt, const BoundRules& rules) {
  DegreeReport rep;
  rep.knot = k;
  rep.mC = m_C(k);
  rep.degC = chebyshev_degree(k);
  int budget = opt.budget > 0 ? opt.budget : rep.mC;
  auto diagrams = enumerate_simple_diagrams(k, std::max(budget, k.N), opt.filter);
  if (diagrams.empty()) throw NotFound("no simple diagram for " + k.name);

  rep.b_lower = INT_MAX;
  rep.b_upper = rep.degC.b;
  rep.b_upper_source = "chebyshev";
  for (const auto& d : diagrams) {
    DiagramWitness w;
    w.diagram = d;
    w.word = project(d);
    w.trace = reduction_search(w.word, opt.depth_cap, rules);
    w.lower = b_lower_bound(w.word, rules, opt.depth_cap);
    w.upper = b_upper_bound(w.word, rules, opt.depth_cap);
    rep.b_lower = std::min(rep.b_lower, w.lower.value);
    if (w.upper && w.upper->value < rep.b_upper) {
      rep.b_upper = w.upper->value;
      rep.b_upper_source = "construction";
    }
    rep.diagrams.push_back(std::move(w));
  }

  const int b = rep.b_upper, N = k.N;
  auto largest_gap_at_most = [&](int c) {
    while (c > b && in_semigroup(c, 3, b)) --c;
    return c;
  };
  std::vector<int> candidates;
  if (b == rep.degC.b) candidates.push_back(3 * N - rep.degC.b);
  for (const auto& w : rep.diagrams)
    if (w.upper && w.upper->value == b) candidates.push_back(gauss_sign_changes(w.diagram));
  rep.c_upper = INT_MAX;
  for (int c : candidates) rep.c_upper = std::min(rep.c_upper, largest_gap_at_most(c));

  int from = b + 1;
  if (b == N + 1) from = std::max(from, opt.alternating_2n_plus_1 ? 2 * N + 1 : 2 * N - 1);
  // every c > 2b - 3 lies in <3, b>; past that point the rule has no solution
  // and c_lower is left at `from`, above c_upper
  int c = from;
  while (c <= 2 * b - 3 && in_semigroup(c, 3, b)) ++c;
  rep.c_lower = c;
  return rep;
}

}  // namespace lexiknot
