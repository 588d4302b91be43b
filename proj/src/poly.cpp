#include "lexiknot/poly.hpp"

#include <cmath>
#include <sstream>

#include "lexiknot/error.hpp"

namespace lexiknot {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::identity() { return Poly{0, 1}; }

Poly Poly::parse(const std::string& text) {
  if (text.rfind("cheb:", 0) == 0) {
    char* end = nullptr;
    long n = std::strtol(text.c_str() + 5, &end, 10);
    if (*end != '\0' || n < 1) throw ParseError("bad Chebyshev index in '" + text + "'");
    return chebyshev(static_cast<int>(n));
  }
  if (text.rfind("coeffs:", 0) != 0) throw ParseError("polynomial must be coeffs:... or cheb:n, got '" + text + "'");
  std::vector<Rat> v;
  std::stringstream ss(text.substr(7));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      Rat r(tok);
      r.canonicalize();
      v.push_back(r);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad coefficient '" + tok + "' in '" + text + "'");
    }
  }
  if (v.empty()) throw ParseError("no coefficients in '" + text + "'");
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return c_[i];
}

Rat Poly::operator()(const Rat& t) const {
  Rat acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * t + c_[i];
  return acc;
}

double Poly::eval(double t) const {
  double acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * t + c_[i].get_d();
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Rat> v;
  for (int i = 1; i <= degree(); ++i) v.push_back(c_[i] * i);
  return Poly(std::move(v));
}

Poly Poly::shift(const Rat& eps) const { return compose(Poly(std::vector<Rat>{eps, Rat(1)})); }

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (int i = degree(); i >= 0; --i) {
    acc *= q;
    acc += constant(c_[i]);
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  p *= Rat(1) / lc();
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(v);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& k) {
  for (auto& x : c_) x *= k;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  p *= Rat(-1);
  return p;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    Rat mag = abs(a);
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string Poly::coeff_text() const {
  std::string out = "coeffs:";
  if (is_zero()) return out + "0";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].get_str();
  }
  return out;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw UsageError("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  std::vector<Rat> quo(dq >= 0 ? dq + 1 : 0);
  Rat inv = Rat(1) / b.lc();
  for (int k = dq; k >= 0; --k) {
    Rat f = rem[k + db] * inv;
    quo[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  return r;
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() < 1) return p.monic();
  Poly g = gcd(p, p.derivative());
  return (p / g).monic();
}

Poly pow(const Poly& p, int n) {
  Poly r = Poly::constant(1);
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

Poly chebyshev(int n) {
  if (n < 0) throw UsageError("chebyshev: negative index");
  Poly prev{1}, cur{0, 1};
  if (n == 0) return prev;
  Poly two_t{0, 2};
  for (int k = 1; k < n; ++k) {
    Poly next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace lexiknot
