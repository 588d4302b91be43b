#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexiknot/arith.hpp"
#include "lexiknot/diagram.hpp"
#include "lexiknot/enumerate.hpp"

namespace lexiknot {

// Run lengths of an unsigned trigonal diagram; runs alternate between the two
// crossing positions and a leading zero means the word starts at the other one.
struct PlaneWord {
  std::vector<int> runs;

  static PlaneWord parse(const std::string& text);  // "2,1,3"
  std::string str() const;
  int crossings() const;

  friend auto operator<=>(const PlaneWord&, const PlaneWord&) = default;
};

PlaneWord project(const TrigonalDiagram& d);

// Merge every interior zero: (..., a, 0, b, ...) -> (..., a+b, ...). End zeros stay.
PlaneWord normalize(const PlaneWord& w);
PlaneWord reversed(const PlaneWord& w);

// A crossing passes through a fold: (..., r) -> (..., r-1, 1), normalized.
// Involutive; the left version acts on the reversed word.
std::optional<PlaneWord> end_move_right(const PlaneWord& w);
std::optional<PlaneWord> end_move_left(const PlaneWord& w);

enum class MoveKind { Reverse, EndRight, EndLeft, Collapse, R };
std::string to_string(MoveKind k);

struct Step {
  MoveKind kind;
  int position = 0;  // run index for Collapse and R
  friend bool operator==(const Step&, const Step&) = default;
};

// Cost-0 moves (reversal, end moves, interior zero-collapse) with their results.
std::vector<std::pair<Step, PlaneWord>> zero_cost_moves(const PlaneWord& w);
std::set<PlaneWord> neighbors(const PlaneWord& w);

std::set<PlaneWord> word_class(const PlaneWord& w);
// minimum of the class by (length, runs)
PlaneWord canonical_word(const PlaneWord& w);
bool same_class(const PlaneWord& a, const PlaneWord& b);

bool can_apply_R(const PlaneWord& w, int i);
// (u, m+1, 1, n+1, v) -> (u, m, n, v) at 0-based run index i; not normalized.
PlaneWord apply_R(const PlaneWord& w, int i);

enum class Branch { A, B };
// (u, m, n, v) with m = runs[i], n = runs[i+1]:
// A -> (u, m+1, 1, n+1, v), B -> (u, m, 1, 1, 1, n, v).
PlaneWord inverse_R(const PlaneWord& w, int i, Branch branch);

PlaneWord apply_step(const PlaneWord& w, const Step& s);

struct BaseEntry {
  PlaneWord runs;
  std::optional<int> b_exact;
  int b_lower = 0;
  std::string source;
};

struct Override {
  PlaneWord runs;
  int b_lower = 0;
  std::string table_row;
};

struct BoundRules {
  std::vector<BaseEntry> bases;
  std::vector<Override> overrides;
};

BoundRules parse_rules(std::istream& bases_csv, std::istream& overrides_csv);
BoundRules load_rules(const std::string& bases_path, const std::string& overrides_path);
const BoundRules& default_rules();

// Degree data for a word class, from the base table or the generic rules
// (2n+1) -> 3n+1 and one/two-run knot words -> floor((3N-1)/2).
struct BaseValue {
  std::optional<int> exact;
  int lower = 0;
  std::string rule;
};
std::optional<BaseValue> base_value(const PlaneWord& w, const BoundRules& rules = default_rules());
std::optional<Override> override_for(const PlaneWord& w, const BoundRules& rules = default_rules());

struct ReductionTrace {
  PlaneWord source;
  std::vector<Step> steps;
  PlaneWord base;
  int cost = 0;
  bool base_in_table = false;
};

// Every word class reachable by cost-0 moves and R, with the cost of reaching it.
struct ReachedClass {
  PlaneWord canonical;
  int cost = 0;
};
std::vector<ReachedClass> reachable_classes(const PlaneWord& w, int depth_cap = 10);

ReductionTrace reduction_search(const PlaneWord& w, int depth_cap = 10,
                                const BoundRules& rules = default_rules());

struct Bound {
  int value = 0;
  std::string rule;  // crossings | base | odd-run | two-run | override
  std::string detail;
  PlaneWord word;    // where the rule fired
  int cost = 0;      // R cost from the source to `word`
};

int skip_multiples_of_3(int b);
int local_lower_bound(const PlaneWord& w, std::string* rule = nullptr, std::string* detail = nullptr,
                      const BoundRules& rules = default_rules());
Bound b_lower_bound(const PlaneWord& w, const BoundRules& rules = default_rules(), int depth_cap = 10);
std::optional<Bound> b_upper_bound(const PlaneWord& w, const BoundRules& rules = default_rules(),
                                   int depth_cap = 10);

bool in_semigroup(int n, int a, int b);

struct VerdictOptions {
  int budget = 0;  // 0: m_C
  SimpleFilter filter = SimpleFilter::Simple;
  int depth_cap = 10;
  // use c >= 2N+1 instead of 2N-1 when b = N+1 (off; contradicts 4_1 = (3,5,7))
  bool alternating_2n_plus_1 = false;
};

struct DiagramWitness {
  TrigonalDiagram diagram;
  PlaneWord word;
  ReductionTrace trace;
  Bound lower;
  std::optional<Bound> upper;
};

struct DegreeReport {
  KnotRecord knot;
  int mC = 0;
  DegreeTriple degC;
  std::vector<DiagramWitness> diagrams;
  int b_lower = 0, b_upper = 0;
  int c_lower = 0, c_upper = 0;
  std::string b_upper_source;  // chebyshev | construction
  bool exact() const { return b_lower == b_upper && c_lower == c_upper; }
  LexDegree lex() const { return LexDegree{b_upper, c_lower, c_upper}; }
};

DegreeReport degree_verdict(const KnotRecord& k, const VerdictOptions& opt = {},
                            const BoundRules& rules = default_rules());

}  // namespace lexiknot
