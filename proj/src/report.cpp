#include "lexiknot/report.hpp"

#include <json.hpp>
#include <sstream>

#include "lexiknot/csv.hpp"
#include "lexiknot/error.hpp"

namespace lexiknot {

bool is_starred(const LexDegree& lex, const DegreeTriple& degC) {
  return lex.b < degC.b || (lex.b == degC.b && lex.c_hi < degC.c);
}

std::vector<std::string> all_names(const Catalog& cat) {
  std::vector<std::string> out;
  for (const auto& r : cat.records()) out.push_back(r.name);
  return out;
}

std::vector<TableRow> build_table(const std::vector<std::string>& names, const Catalog& cat,
                                  const VerdictOptions& opt, const BoundRules& rules) {
  std::vector<TableRow> rows;
  for (const auto& name : names) {
    TableRow row;
    row.name = name;
    const KnotRecord* k = cat.find(name);
    if (!k) {
      row.failed = true;
      row.error = "unknown knot " + name;
      rows.push_back(std::move(row));
      continue;
    }
    row.fraction = k->fraction;
    row.N = k->N;
    try {
      auto rep = degree_verdict(*k, opt, rules);
      row.mC = rep.mC;
      row.degC = rep.degC;
      row.diagrams = std::move(rep.diagrams);
      row.b_lower = rep.b_lower;
      row.b_upper = rep.b_upper;
      row.lex = rep.lex();
      row.starred = is_starred(row.lex, row.degC);
      if (rep.b_lower != rep.b_upper) {
        row.failed = true;
        row.error = "b unresolved: " + std::to_string(rep.b_lower) + ".." + std::to_string(rep.b_upper);
      }
    } catch (const Error& e) {
      row.failed = true;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string DiffReport::text() const {
  std::ostringstream os;
  for (const auto& e : entries)
    if (!e.match) os << "MISMATCH " << e.name << ' ' << e.column << ": expected " << e.expected << ", got " << e.got << '\n';
  os << mismatches << " mismatch" << (mismatches == 1 ? "" : "es") << " in " << entries.size() << " comparisons\n";
  return os.str();
}

DiffReport diff_expected(const std::vector<TableRow>& rows, const Catalog& expected) {
  DiffReport rep;
  auto add = [&](const std::string& name, const std::string& col, const std::string& exp, const std::string& got) {
    DiffEntry e{name, col, exp, got, exp == got};
    if (!e.match) ++rep.mismatches;
    rep.entries.push_back(std::move(e));
  };
  for (const auto& row : rows) {
    const KnotRecord* k = expected.find(row.name);
    if (!k) {
      add(row.name, "row", "present", "absent");
      continue;
    }
    if (row.failed) {
      add(row.name, "status", "ok", "failed: " + row.error);
      continue;
    }
    add(row.name, "fraction", k->fraction.str(),
        fraction_equivalent(k->fraction, row.fraction, true) ? k->fraction.str() : row.fraction.str());
    add(row.name, "N", std::to_string(k->N), std::to_string(row.N));
    if (k->expected_degC) {
      add(row.name, "degC_b", std::to_string(k->expected_degC->b), std::to_string(row.degC.b));
      add(row.name, "degC_c", std::to_string(k->expected_degC->c), std::to_string(row.degC.c));
    }
    if (k->expected_lex) {
      add(row.name, "lex_b", std::to_string(k->expected_lex->b), std::to_string(row.lex.b));
      add(row.name, "lex_c_lo", std::to_string(k->expected_lex->c_lo), std::to_string(row.lex.c_lo));
      add(row.name, "lex_c_hi", std::to_string(k->expected_lex->c_hi), std::to_string(row.lex.c_hi));
    }
  }
  return rep;
}

DiffReport diff_expected(const std::vector<TableRow>& rows, std::istream& expected_csv) {
  return diff_expected(rows, parse_catalog(expected_csv));
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "md" || s == "markdown") return Format::Markdown;
  throw UsageError("unknown format '" + s + "' (csv|json|md)");
}

namespace {

std::string lex_text(const TableRow& r) {
  std::string c = r.lex.c_exact() ? std::to_string(r.lex.c_lo)
                                  : std::to_string(r.lex.c_lo) + "/" + std::to_string(r.lex.c_hi);
  return "(3," + std::to_string(r.lex.b) + "," + c + ")";
}

std::string degree_cell(const DiagramWitness& w) {
  return "deg D(" + w.trace.base.str() + ")+" + std::to_string(w.trace.cost);
}

std::string bound_cell(const DiagramWitness& w) {
  bool eq = w.upper && w.upper->value == w.lower.value;
  return std::string(eq ? "b= " : "b>= ") + std::to_string(w.lower.value);
}

nlohmann::json word_json(const PlaneWord& w) { return w.runs; }

nlohmann::json row_json(const TableRow& r) {
  using nlohmann::json;
  json j;
  j["name"] = r.name;
  if (r.failed) {
    j["failed"] = true;
    j["error"] = r.error;
    return j;
  }
  j["alpha"] = r.fraction.alpha.get_si();
  j["beta"] = r.fraction.beta.get_si();
  j["N"] = r.N;
  j["m_C"] = r.mC;
  j["degC"] = {{"a", 3}, {"b", r.degC.b}, {"c", r.degC.c}};
  if (r.lex.c_exact())
    j["lex"] = {{"b", r.lex.b}, {"c", r.lex.c_lo}};
  else
    j["lex"] = {{"b", r.lex.b}, {"c_lo", r.lex.c_lo}, {"c_hi", r.lex.c_hi}};
  j["starred"] = r.starred;
  json ds = json::array();
  for (const auto& w : r.diagrams) {
    json d;
    d["entries"] = w.diagram.entries;
    d["trace"] = {{"base", word_json(w.trace.base)}, {"cost", w.trace.cost}};
    json steps = json::array();
    for (const auto& s : w.trace.steps) steps.push_back({{"move", to_string(s.kind)}, {"position", s.position}});
    d["trace"]["steps"] = steps;
    d["bound"] = {{"b_lower", w.lower.value}, {"rule", w.lower.rule}, {"detail", w.lower.detail}};
    if (w.upper) d["bound"]["b_upper"] = w.upper->value;
    ds.push_back(d);
  }
  j["simple_diagrams"] = ds;
  return j;
}

}  // namespace

std::string emit(const std::vector<TableRow>& rows, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) arr.push_back(row_json(r));
      os << arr.dump() << '\n';
      break;
    }
    case Format::Csv: {
      os << "name,alpha,beta,degC_b,degC_c,lex_b,lex_c_lo,lex_c_hi,starred,N,m_C,simple_diagrams\n";
      for (const auto& r : rows) {
        if (r.failed) {
          os << r.name << ",,,,,,,,,,,\n";
          continue;
        }
        std::string ds;
        for (const auto& w : r.diagrams) ds += (ds.empty() ? "" : ";") + w.diagram.str();
        os << r.name << ',' << r.fraction.alpha << ',' << r.fraction.beta << ',' << r.degC.b << ',' << r.degC.c
           << ',' << r.lex.b << ',' << r.lex.c_lo << ',' << r.lex.c_hi << ',' << (r.starred ? 1 : 0) << ',' << r.N
           << ',' << r.mC << ',' << csv::quote(ds) << '\n';
      }
      break;
    }
    case Format::Markdown: {
      os << "| K | alpha/beta | deg_C | Simple Diagrams | Degree | Bound | Lex. Degree |\n";
      os << "|---|---|---|---|---|---|---|\n";
      for (const auto& r : rows) {
        if (r.failed) {
          os << "| " << r.name << " | | | | | | failed: " << r.error << " |\n";
          continue;
        }
        std::string frac = r.fraction.beta == 1 ? r.fraction.alpha.get_str() : r.fraction.str();
        for (size_t i = 0; i < r.diagrams.size(); ++i) {
          const auto& w = r.diagrams[i];
          if (i == 0)
            os << "| " << r.name << " | " << frac << " | " << to_string(r.degC) << " | ";
          else
            os << "| | | | ";
          os << w.diagram.pretty() << " | " << degree_cell(w) << " | " << bound_cell(w) << " | ";
          if (i == 0) os << (r.starred ? "**" : "") << lex_text(r);
          os << " |\n";
        }
      }
      break;
    }
  }
  return os.str();
}

}  // namespace lexiknot
