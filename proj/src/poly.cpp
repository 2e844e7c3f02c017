#include "hsclab/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hsc {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : RationalPoly(std::vector<Rational>(coeffs)) {}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::identity() { return monomial(Rational(1), 1); }

RationalPoly RationalPoly::linear(const Rational& a, const Rational& b) { return RationalPoly({a, b}); }

void RationalPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& u) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= u;
    acc += *it;
  }
  return acc;
}

double RationalPoly::eval(double u) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + it->get_d();
  return acc;
}

long double RationalPoly::eval(long double u) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * u + static_cast<long double>(it->get_d());
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::compose(const RationalPoly& q) const {
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void RationalPoly::divmod(const RationalPoly& num, const RationalPoly& den, RationalPoly& quot, RationalPoly& rem) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  rem = num;
  quot = RationalPoly();
  if (num.degree() < den.degree()) return;
  std::vector<Rational> q(num.degree() - den.degree() + 1);
  const Rational& lead = den.leading();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Rational factor = rem.leading() / lead;
    q[shift] = factor;
    for (std::size_t j = 0; j < den.coeffs_.size(); ++j) rem.coeffs_[j + shift] -= factor * den.coeffs_[j];
    rem.coeffs_.back() = 0;  // exact cancellation of the leading term
    rem.trim();
  }
  quot = RationalPoly(std::move(q));
}

RationalPoly RationalPoly::gcd(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  // Primitive remainder sequence over the integers keeps coefficients small.
  IntPoly x = a.is_zero() ? b.to_primitive_int() : a.to_primitive_int();
  IntPoly y = a.is_zero() ? IntPoly() : b.to_primitive_int();
  if (!y.is_zero() && y.degree() > x.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = IntPoly::pseudo_remainder(x, y);
    r.make_primitive();
    x = std::move(y);
    y = std::move(r);
  }
  RationalPoly g = x.to_rational();
  return g * (Rational(1) / g.leading());
}

RationalPoly RationalPoly::squarefree_part() const {
  if (degree() <= 0) return *this;
  RationalPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  RationalPoly q, r;
  divmod(*this, g, q, r);
  return q;
}

IntPoly RationalPoly::to_primitive_int() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    ints[i] = coeffs_[i].get_num() * (l / coeffs_[i].get_den());
  }
  IntPoly out(std::move(ints));
  out.make_primitive();
  return out;
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << (i == 0 || a != 1 ? "*" : "") << "U";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int IntPoly::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // Homogenized Horner: sum c_i a^i b^(d-i), b > 0, has the sign of p(a/b).
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = c_.back();
  Integer bpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    bpow *= b;
    acc *= a;
    acc += c_[i] * bpow;
  }
  return sgn(acc);
}

Rational IntPoly::value_at(const Rational& x) const {
  if (c_.empty()) return 0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = c_.back();
  Integer bpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    bpow *= b;
    acc *= a;
    acc += c_[i] * bpow;
  }
  Rational out(acc, bpow);
  out.canonicalize();
  return out;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void IntPoly::make_primitive() {
  trim();
  if (c_.empty()) return;
  Integer g = content();
  if (g > 1)
    for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly IntPoly::pseudo_remainder(const IntPoly& a, const IntPoly& b, int* multiplier_power) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  std::vector<Integer> r = a.c_;
  const int db = b.degree();
  const Integer& lb = b.leading();
  int power = 0;
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    Integer lr = r[dr];
    if (lb != 1)
      for (int i = 0; i < dr; ++i) r[i] *= lb;
    for (int j = 0; j < db; ++j) r[dr - db + j] -= lr * b.c_[j];
    r.pop_back();
    ++power;
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
  }
  if (multiplier_power) *multiplier_power = power;
  return IntPoly(std::move(r));
}

RationalPoly IntPoly::to_rational() const {
  std::vector<Rational> q(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) q[i] = Rational(c_[i]);
  return RationalPoly(std::move(q));
}

}  // namespace hsc
