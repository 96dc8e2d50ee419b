#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fortcad/interval.hpp"
#include "fortcad/rational.hpp"

namespace fortcad {

/// Dense univariate polynomial over Q, canonical form (no zero leading
/// coefficient). The zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant) { c_.push_back(std::move(constant)); trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return monomial(1, Rat(1)); }
  static Poly monomial(unsigned deg, Rat coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& lc() const;
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rat(0); }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend Poly operator*(const Rat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const;
  Poly derivative(unsigned order) const;

  Rat eval(const Rat& x) const;
  QInterval eval(const QInterval& x) const;
  double eval_double(double x) const;

  /// p(q(x)) by Horner over Poly.
  Poly compose(const Poly& q) const;
  /// p(a + b x), performed directly (cheaper than general compose).
  Poly compose_affine(const Rat& a, const Rat& b) const;

  /// Quotient and remainder with deg rem < deg divisor.
  std::pair<Poly, Poly> divrem(const Poly& divisor) const;
  /// Exact division; throws if the remainder is nonzero.
  Poly divexact(const Poly& divisor) const;

  Poly monic() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

Poly gcd(const Poly& a, const Poly& b);
/// p / gcd(p, p'): same real roots, all simple.
Poly squarefree_part(const Poly& p);

/// Sturm chain of p (made squarefree internally by the callers that need
/// exact counts on multiple-root inputs).
std::vector<Poly> sturm_chain(const Poly& p);
/// Number of distinct real roots in (a, b], via sign variations.
int sturm_count(const std::vector<Poly>& chain, const Rat& a, const Rat& b);
int sturm_count(const Poly& p, const Rat& a, const Rat& b);

/// Resultant of two univariate polynomials.
Rat resultant(const Poly& a, const Poly& b);

/// Bivariate polynomial p(x, y) = sum_j c_j(x) y^j, canonical in y.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(Poly constant_in_x) { c_.push_back(std::move(constant_in_x)); trim(); }
  explicit Poly2(std::vector<Poly> coeffs_by_y_power) : c_(std::move(coeffs_by_y_power)) { trim(); }

  static Poly2 x() { return Poly2(Poly::x()); }
  static Poly2 y() {
    std::vector<Poly> c{Poly(), Poly(Rat(1))};
    return Poly2(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree_y() const { return static_cast<int>(c_.size()) - 1; }
  int degree_x() const;
  const std::vector<Poly>& coeffs_y() const { return c_; }
  Poly coeff_y(unsigned j) const { return j < c_.size() ? c_[j] : Poly(); }
  const Poly& lc_y() const;

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Rat& s, const Poly2& p);
  Poly2 operator-() const;
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

  Poly2 derivative_x() const;
  Poly2 derivative_y() const;

  /// Substitute a rational for one variable.
  Poly eval_x(const Rat& x) const;  // -> polynomial in y
  Poly eval_y(const Rat& y) const;  // -> polynomial in x
  Rat eval(const Rat& x, const Rat& y) const;
  QInterval eval(const QInterval& x, const QInterval& y) const;
  double eval_double(double x, double y) const;

  Poly2 swap_vars() const;

  /// gcd of the y-coefficients (a polynomial in x).
  Poly content_y() const;
  Poly2 primitive_part_y() const;
  /// p with multiple y-factors removed (over Q(x)).
  Poly2 squarefree_part_y() const;

  std::string str(const std::string& x = "x", const std::string& y = "y") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Poly> c_;
};

/// Resultant of a and b with respect to y: a polynomial in x that vanishes
/// exactly where a(x,.) and b(x,.) have a common root (or both leading
/// coefficients vanish).
Poly resultant_y(const Poly2& a, const Poly2& b);
/// Discriminant of p with respect to y (resultant of p and dp/dy over lc).
Poly discriminant_y(const Poly2& p);

}  // namespace fortcad
