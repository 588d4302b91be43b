#include "lexiknot/arith.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "lexiknot/csv.hpp"
#include "lexiknot/data.hpp"
#include "lexiknot/error.hpp"

namespace lexiknot {

namespace {

Int floor_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

int parse_int(const std::string& s, int line, const char* col) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad integer in column " + col + ": '" +
                     s + "'");
  }
}

}  // namespace

Fraction Fraction::from(const Int& p_in, const Int& q_in) {
  if (p_in == 0 && q_in == 0) throw DegenerateFraction("0/0");
  Int g = gcd(p_in, q_in);
  Int p = p_in / g, q = q_in / g;
  Fraction f;
  f.negative = sgn(p) * sgn(q) < 0;
  f.alpha = abs(p);
  f.beta = sgn(p) < 0 ? Int(-q) : q;
  if (f.alpha == 0) f.beta = 1;
  if (f.alpha >= 2) f.beta = floor_mod(f.beta, f.alpha);
  return f;
}

Fraction Fraction::parse(const std::string& text) {
  auto slash = text.find('/');
  Int p, q(1);
  try {
    if (slash == std::string::npos) {
      p = Int(text);
    } else {
      p = Int(text.substr(0, slash));
      q = Int(text.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad fraction '" + text + "'");
  }
  if (q == 0) throw ParseError("zero denominator in '" + text + "'");
  return from(p, q);
}

std::string Fraction::str() const { return alpha.get_str() + "/" + beta.get_str(); }

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

Convergents cf_convergents(const std::vector<long>& seq) {
  if (seq.empty()) throw UsageError("cf_eval: empty sequence");
  // (p_{-1}, q_{-1}) = (0, 1), (p_0, q_0) = (1, 0)
  Convergents c{Int(1), Int(0), Int(0), Int(1)};
  for (long m : seq) {
    Int p = m * c.p + c.p_prev;
    Int q = m * c.q + c.q_prev;
    c.p_prev = c.p;
    c.q_prev = c.q;
    c.p = p;
    c.q = q;
  }
  return c;
}

Fraction cf_eval(const std::vector<long>& seq) {
  auto c = cf_convergents(seq);
  return Fraction::from(c.p, c.q);
}

std::vector<long> cf_expand_positive(const Fraction& f) {
  if (f.alpha <= 1) throw DegenerateFraction("no expansion for alpha <= 1: " + f.str());
  Int a = f.alpha, b = f.beta;
  std::vector<long> out;
  while (b != 0) {
    Int q = a / b;
    out.push_back(q.get_si());
    Int r = a - q * b;
    a = b;
    b = r;
  }
  return out;
}

Int mod_inverse(const Int& b, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t()) == 0)
    throw PreconditionError("no inverse of " + b.get_str() + " mod " + m.get_str());
  return r;
}

bool fraction_equivalent(const Fraction& a, const Fraction& b, bool include_mirror) {
  if (a.alpha != b.alpha) return false;
  if (a.alpha <= 1) return true;
  const Int& m = a.alpha;
  Int b1 = floor_mod(a.beta, m), b2 = floor_mod(b.beta, m);
  Int inv = mod_inverse(b1, m);
  if (b2 == b1 || b2 == inv) return true;
  if (!include_mirror) return false;
  return b2 == floor_mod(-b1, m) || b2 == floor_mod(-inv, m);
}

std::string to_string(const DegreeTriple& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + "," + std::to_string(d.c) + ")";
}

const KnotRecord* Catalog::find(const std::string& name) const {
  for (const auto& r : records_)
    if (r.name == name) return &r;
  return nullptr;
}

const KnotRecord* Catalog::lookup(const Fraction& f) const {
  for (const auto& r : records_)
    if (fraction_equivalent(r.fraction, f, true)) return &r;
  return nullptr;
}

Catalog parse_catalog(std::istream& in) {
  auto t = csv::read(in);
  int c_name = t.column("name"), c_a = t.column("alpha"), c_b = t.column("beta"),
      c_n = t.column("N"), c_db = t.column("degC_b"), c_dc = t.column("degC_c"),
      c_lb = t.column("lex_b"), c_llo = t.column("lex_c_lo"), c_lhi = t.column("lex_c_hi");
  std::vector<KnotRecord> out;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    int line = t.line_numbers[i];
    KnotRecord k;
    k.name = r[c_name];
    if (k.name.empty()) throw ParseError("line " + std::to_string(line) + ": empty name");
    k.fraction = Fraction::from(parse_int(r[c_a], line, "alpha"), parse_int(r[c_b], line, "beta"));
    k.N = parse_int(r[c_n], line, "N");
    if (!r[c_db].empty())
      k.expected_degC =
          DegreeTriple{3, parse_int(r[c_db], line, "degC_b"), parse_int(r[c_dc], line, "degC_c")};
    if (!r[c_lb].empty())
      k.expected_lex = LexDegree{parse_int(r[c_lb], line, "lex_b"),
                                 parse_int(r[c_llo], line, "lex_c_lo"),
                                 parse_int(r[c_lhi], line, "lex_c_hi")};
    out.push_back(std::move(k));
  }
  return Catalog(std::move(out));
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_catalog(in);
}

const Catalog& default_catalog() {
  static const Catalog cat = [] {
    std::istringstream in(embedded::knots_csv);
    return parse_catalog(in);
  }();
  return cat;
}

std::optional<KnotRecord> catalog_lookup(const Fraction& f, const Catalog& cat) {
  if (const auto* r = cat.lookup(f)) return *r;
  return std::nullopt;
}

}  // namespace lexiknot
