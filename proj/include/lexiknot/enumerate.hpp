#pragma once

#include <vector>

#include "lexiknot/arith.hpp"
#include "lexiknot/diagram.hpp"

namespace lexiknot {

int m_C(const Fraction& f, int cap);
int m_C(const KnotRecord& k, int cap);
inline int m_C(const KnotRecord& k) { return m_C(k, 3 * k.N + 3); }

// Smallest m with F(m+2) >= alpha; no +-1 sequence shorter than this can reach alpha.
int fibonacci_length_bound(const Int& alpha);

DegreeTriple chebyshev_degree(const KnotRecord& k);

enum class SimpleFilter {
  Simple,  // is_simple (default)
  Islet,   // is_simple_candidate(d, false)
  Strict,  // is_simple_candidate(d, true)
};

// Lexicographically least of d, reverse(d), -d, -reverse(d), preferring a
// positive first entry.
TrigonalDiagram canonical_diagram(const TrigonalDiagram& d);

// Diagrams with sum|m_i| <= budget whose fraction matches f (mirror-inclusive),
// deduplicated up to reversal and mirror, sorted by (sum|m_i|, entries).
std::vector<TrigonalDiagram> enumerate_simple_diagrams(const Fraction& f, int budget,
                                                       SimpleFilter filter = SimpleFilter::Simple);
std::vector<TrigonalDiagram> enumerate_simple_diagrams(const KnotRecord& k, int budget,
                                                       SimpleFilter filter = SimpleFilter::Simple);

}  // namespace lexiknot
