#include "lexiknot/diagram.hpp"

#include <cstdlib>
#include <sstream>

#include "lexiknot/error.hpp"

namespace lexiknot {

TrigonalDiagram TrigonalDiagram::parse(const std::string& text) {
  TrigonalDiagram d;
  std::string s = text;
  if (s.size() >= 2 && s[0] == 'D' && s[1] == '(') s = s.substr(2);
  if (!s.empty() && s.back() == ')') s.pop_back();
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t"), b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty entry in diagram '" + text + "'");
    tok = tok.substr(a, b - a + 1);
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (*end != '\0') throw ParseError("bad diagram entry '" + tok + "'");
    d.entries.push_back(v);
  }
  if (d.entries.empty()) throw ParseError("empty diagram");
  return d;
}

std::string TrigonalDiagram::str() const {
  std::string out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

std::string TrigonalDiagram::pretty() const {
  std::string out = "D(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

int complexity(const TrigonalDiagram& d) {
  return static_cast<int>(d.entries.size() + sum_abs(d));
}

long sum_abs(const TrigonalDiagram& d) {
  long s = 0;
  for (long m : d.entries) s += std::labs(m);
  return s;
}

int sign_changes(const TrigonalDiagram& d) {
  int s = 0;
  for (size_t i = 1; i < d.entries.size(); ++i)
    if (d.entries[i - 1] * d.entries[i] < 0) ++s;
  return s;
}

std::vector<int> islets(const TrigonalDiagram& d) {
  std::vector<int> out;
  const auto& m = d.entries;
  for (size_t i = 1; i + 1 < m.size(); ++i)
    if (std::labs(m[i]) == 1 && m[i - 1] * m[i] < 0 && m[i] * m[i + 1] < 0)
      out.push_back(static_cast<int>(i));
  return out;
}

int crossing_number(const TrigonalDiagram& d) {
  if (d.entries.empty()) throw PreconditionError("empty diagram");
  for (long m : d.entries)
    if (m == 0) throw PreconditionError("crossing number formula needs nonzero entries: " + d.str());
  if (!islets(d).empty())
    throw PreconditionError("crossing number formula invalid with islets: " + d.str());
  return static_cast<int>(sum_abs(d)) - sign_changes(d);
}

int gauss_sign_changes(const TrigonalDiagram& d) {
  return 2 * crossing_number(d) + sign_changes(d) - 1;
}

TrigonalDiagram lagrange_step(const TrigonalDiagram& d, int pos, int eps) {
  if (eps != 1 && eps != -1) throw UsageError("lagrange_step: eps must be +-1");
  const auto& e = d.entries;
  if (pos < 0 || static_cast<size_t>(pos) + 1 >= e.size())
    throw PatternMismatch("lagrange_step: no (m, -n) pair at index " + std::to_string(pos) +
                          " in " + d.str());
  TrigonalDiagram out;
  out.entries.assign(e.begin(), e.begin() + pos);
  long m = e[pos], n = -e[pos + 1];
  out.entries.push_back(m - eps);
  out.entries.push_back(eps);
  out.entries.push_back(n - eps);
  for (size_t i = pos + 2; i < e.size(); ++i) out.entries.push_back(-e[i]);
  return out;
}

NormalForm conway_normal_form(const TrigonalDiagram& d) {
  std::vector<long> seq(d.entries.begin(), d.entries.end());
  Fraction f = cf_eval(seq);
  if (f.alpha <= 1) throw DegenerateFraction("no normal form for " + d.str() + " (" + f.str() + ")");
  NormalForm nf;
  nf.mirror = f.negative;
  Fraction g = f;
  if (f.negative) g = Fraction::from(f.alpha, -f.beta);
  for (long m : cf_expand_positive(g)) nf.diagram.entries.push_back(m);
  return nf;
}

bool is_simple_candidate(const TrigonalDiagram& d, bool strict) {
  const auto& m = d.entries;
  for (long x : m)
    if (x == 0) return false;
  if (!islets(d).empty()) return false;
  if (strict)
    for (size_t i = 1; i < m.size(); ++i)
      if (std::labs(m[i]) == 1 && m[i - 1] * m[i] <= 0) return false;
  return true;
}

bool is_simple(const TrigonalDiagram& d) {
  const auto& m = d.entries;
  size_t k = m.size();
  if (k == 0) return false;
  for (long x : m)
    if (x == 0) return false;
  if (k == 1) return true;
  for (size_t i = 0; i < k; ++i) {
    if (std::labs(m[i]) != 1) continue;
    if (i == 0 || i + 1 == k) return false;
    if (m[i - 1] * m[i] < 0 || m[i] * m[i + 1] < 0) return false;
  }
  if (std::labs(m[0]) == 2 && m[0] * m[1] < 0) return false;
  if (std::labs(m[k - 1]) == 2 && m[k - 1] * m[k - 2] < 0) return false;
  return true;
}

std::optional<KnotRecord> identify_knot(const TrigonalDiagram& d, const Catalog& cat) {
  std::vector<long> seq(d.entries.begin(), d.entries.end());
  return catalog_lookup(cf_eval(seq), cat);
}

}  // namespace lexiknot
