#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexiknot/arith.hpp"

namespace lexiknot {

// Conway open form D(m_1, ..., m_k); odd-indexed right twists count positive.
struct TrigonalDiagram {
  std::vector<long> entries;

  static TrigonalDiagram parse(const std::string& text);  // "2,1,-3"
  std::string str() const;                                // "2,1,-3"
  std::string pretty() const;                             // "D(2, 1, -3)"

  friend auto operator<=>(const TrigonalDiagram&, const TrigonalDiagram&) = default;
};

int complexity(const TrigonalDiagram& d);
long sum_abs(const TrigonalDiagram& d);
int sign_changes(const TrigonalDiagram& d);  // s = #{i : m_{i-1} m_i < 0}

// 0-based indices of islets
std::vector<int> islets(const TrigonalDiagram& d);

// N = sum|m_i| - s; requires nonzero entries and no islet.
int crossing_number(const TrigonalDiagram& d);
// c = 2N + s - 1
int gauss_sign_changes(const TrigonalDiagram& d);

// D(x, m, -n, -y) -> D(x, m-eps, eps, n-eps, y) with m at 0-based index pos.
TrigonalDiagram lagrange_step(const TrigonalDiagram& d, int pos, int eps);

struct NormalForm {
  TrigonalDiagram diagram;
  bool mirror = false;
};
NormalForm conway_normal_form(const TrigonalDiagram& d);

bool is_simple_candidate(const TrigonalDiagram& d, bool strict);
// The filter used for enumeration by default: no zero entries, every +-1 entry
// agrees in sign with both neighbours, no +-1 at either end (k > 1), and an
// end entry of absolute value 2 agrees in sign with its neighbour.
bool is_simple(const TrigonalDiagram& d);

std::optional<KnotRecord> identify_knot(const TrigonalDiagram& d,
                                        const Catalog& cat = default_catalog());

}  // namespace lexiknot
