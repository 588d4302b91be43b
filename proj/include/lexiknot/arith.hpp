#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lexiknot {

using Int = mpz_class;
using Rat = mpq_class;

// Schubert fraction alpha/beta. For alpha >= 2, beta is stored reduced into
// [1, alpha-1]; `negative` keeps the sign of p/q before reduction.
struct Fraction {
  Int alpha{0};
  Int beta{1};
  bool negative = false;

  static Fraction from(const Int& p, const Int& q);
  static Fraction parse(const std::string& text);  // "A/B" or "A"

  bool is_knot() const { return mpz_odd_p(alpha.get_mpz_t()) != 0; }
  std::string str() const;

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

// p_k/q_k together with the previous convergent.
struct Convergents {
  Int p, q, p_prev, q_prev;
};

Convergents cf_convergents(const std::vector<long>& seq);
Fraction cf_eval(const std::vector<long>& seq);
std::vector<long> cf_expand_positive(const Fraction& f);

bool fraction_equivalent(const Fraction& a, const Fraction& b, bool include_mirror = true);

// Inverse of b modulo m (b, m coprime, m >= 2).
Int mod_inverse(const Int& b, const Int& m);

struct DegreeTriple {
  int a = 3;
  int b = 0;
  int c = 0;
  friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

std::string to_string(const DegreeTriple& d);

// Lexicographic degree (3, b, c) with c possibly known only as a range.
struct LexDegree {
  int b = 0;
  int c_lo = 0;
  int c_hi = 0;
  bool c_exact() const { return c_lo == c_hi; }
  friend bool operator==(const LexDegree&, const LexDegree&) = default;
};

struct KnotRecord {
  std::string name;
  Fraction fraction;
  int N = 0;
  std::optional<DegreeTriple> expected_degC;
  std::optional<LexDegree> expected_lex;
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<KnotRecord> records) : records_(std::move(records)) {}

  const std::vector<KnotRecord>& records() const { return records_; }
  const KnotRecord* find(const std::string& name) const;
  // mirror-inclusive fraction match
  const KnotRecord* lookup(const Fraction& f) const;

 private:
  std::vector<KnotRecord> records_;
};

Catalog parse_catalog(std::istream& in);
Catalog load_catalog(const std::string& path);
const Catalog& default_catalog();

std::optional<KnotRecord> catalog_lookup(const Fraction& f, const Catalog& cat = default_catalog());

}  // namespace lexiknot
