#pragma once

#include <string>
#include <vector>

namespace lexiknot::testing {

// Transcription of the published results table, kept separate from data/knots.csv
// so the shipped catalog is itself checked.
struct PublishedRow {
  std::string name;
  long alpha, beta;
  int N;
  int degC_b, degC_c;
  int lex_b, lex_c_lo, lex_c_hi;
  bool starred;
  std::vector<std::string> diagrams;  // Simple Diagrams column, as printed
};

struct PublishedCell {
  std::string name;
  std::string diagram;  // Simple Diagrams entry
  std::string base;     // "deg D(base)+cost"
  int cost;
  bool bound_exact;     // "b=" rather than "b>="
  int bound;
};

const std::vector<PublishedRow>& published_rows();
const std::vector<PublishedCell>& published_cells();

}  // namespace lexiknot::testing
