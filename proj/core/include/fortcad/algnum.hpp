#pragma once

#include <optional>
#include <string>

#include "fortcad/interval.hpp"
#include "fortcad/poly.hpp"
#include "fortcad/rational.hpp"

namespace fortcad {

/// An exact real scalar: either a rational or the unique root of a
/// squarefree polynomial inside an open isolating interval with rational
/// endpoints. Comparisons are exact (Sturm counts and gcds decide ties);
/// no floating point is involved. There is deliberately no general field
/// arithmetic here, only the images needed by cell-boundary bookkeeping:
/// affine maps, polynomial maps, and monotone polynomial preimages.
class AlgNum {
 public:
  AlgNum() : rational_(Rat(0)) {}
  AlgNum(Rat value) : rational_(std::move(value)) {}
  AlgNum(long value) : rational_(Rat(value)) {}

  /// The unique root of p in (lo, hi). Requires exactly one distinct root
  /// strictly inside; p is replaced by its squarefree part. If the root is
  /// rational (detected via the simplest rational in the refined interval),
  /// the result degenerates to a rational.
  static AlgNum root_of(const Poly& p, const Rat& lo, const Rat& hi);

  bool is_rational() const { return rational_.has_value(); }
  const Rat& rational() const;
  const Poly& poly() const { return poly_; }

  /// Current enclosure; refined in place by refine()/enclosure().
  QInterval iso() const;
  void refine() const;
  /// Enclosure of width <= target (no-op for rationals).
  QInterval enclosure(const Rat& width_target) const;

  int cmp(const AlgNum& o) const;
  int cmp(const Rat& r) const;
  bool operator<(const AlgNum& o) const { return cmp(o) < 0; }
  bool operator==(const AlgNum& o) const { return cmp(o) == 0; }

  /// a + b*this, exact.
  AlgNum affine(const Rat& a, const Rat& b) const;
  /// g(this), exact (resultant-based when irrational).
  AlgNum apply_poly(const Poly& g) const;
  /// The unique y in (ylo, yhi) with f(y) == *this, for f strictly
  /// monotone on [ylo, yhi]; nullopt when no such y exists there.
  std::optional<AlgNum> monotone_preimage(const Poly& f, const Rat& ylo, const Rat& yhi) const;

  /// Exact sign of q(this).
  int sign_of(const Poly& q) const;

  double to_double() const;
  std::string str() const;

 private:
  Poly poly_;                  // squarefree; empty when rational
  mutable Rat lo_{0}, hi_{0};  // isolating interval, refined lazily
  mutable int sign_lo_ = 0;    // sign of poly_ at lo_
  // refinement can land exactly on the root; memoized as a representation change
  mutable std::optional<Rat> rational_;

  void bisect_step() const;
};

/// Classic Stern-Brocot walk: the unique rational with smallest denominator
/// (then smallest numerator) in the closed interval [lo, hi].
Rat simplest_rational_in(const Rat& lo, const Rat& hi);

}  // namespace fortcad
