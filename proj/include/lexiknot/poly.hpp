#pragma once

#include <string>
#include <vector>

#include "lexiknot/arith.hpp"

namespace lexiknot {

// Univariate polynomial with exact rational coefficients, ascending degree,
// trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, int degree);
  static Poly identity();  // t
  // "coeffs:c0,c1,..." (entries p/q) or "cheb:n"
  static Poly parse(const std::string& text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const;
  const Rat& lc() const { return c_.back(); }

  Rat operator()(const Rat& t) const;
  double eval(double t) const;

  Poly derivative() const;
  Poly shift(const Rat& eps) const;  // p(t + eps)
  Poly compose(const Poly& q) const;  // p(q(t))
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& k);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& k) { return a *= k; }
  friend Poly operator*(const Rat& k, Poly a) { return a *= k; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "t") const;
  std::string coeff_text() const;  // "coeffs:..."

 private:
  void trim();
  std::vector<Rat> c_;
};

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic, gcd(0, 0) = 0
Poly squarefree_part(const Poly& p);
Poly pow(const Poly& p, int n);

Poly chebyshev(int n);

}  // namespace lexiknot
