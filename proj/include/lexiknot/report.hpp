#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lexiknot/arith.hpp"
#include "lexiknot/planereduce.hpp"

namespace lexiknot {

struct TableRow {
  std::string name;
  Fraction fraction;
  int N = 0;
  int mC = 0;
  DegreeTriple degC;
  std::vector<DiagramWitness> diagrams;
  int b_lower = 0, b_upper = 0;
  LexDegree lex;
  bool starred = false;
  bool failed = false;
  std::string error;
};

bool is_starred(const LexDegree& lex, const DegreeTriple& degC);

// Rows in the order given; an empty list gives an empty table.
std::vector<TableRow> build_table(const std::vector<std::string>& names, const Catalog& cat = default_catalog(),
                                  const VerdictOptions& opt = {}, const BoundRules& rules = default_rules());
std::vector<std::string> all_names(const Catalog& cat = default_catalog());

struct DiffEntry {
  std::string name, column, expected, got;
  bool match = true;
};

struct DiffReport {
  std::vector<DiffEntry> entries;
  int mismatches = 0;
  std::string text() const;
};

DiffReport diff_expected(const std::vector<TableRow>& rows, const Catalog& expected);
DiffReport diff_expected(const std::vector<TableRow>& rows, std::istream& expected_csv);

enum class Format { Csv, Json, Markdown };
Format parse_format(const std::string& s);
std::string emit(const std::vector<TableRow>& rows, Format f);

}  // namespace lexiknot
