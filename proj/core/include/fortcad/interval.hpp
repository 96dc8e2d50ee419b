#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fortcad/rational.hpp"

namespace fortcad {

/// Closed interval with exact rational endpoints, possibly unbounded on
/// either side. Arithmetic is exact (no rounding step), so an enclosure
/// computed by interval evaluation is a true superset of the range.
class QInterval {
 public:
  QInterval() : lo_(0), hi_(0) {}
  QInterval(Rat point) : lo_(point), hi_(std::move(point)) {}
  QInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!lo_inf_ && !hi_inf_ && hi_ < lo_) throw FortError("QInterval: hi < lo");
  }

  static QInterval whole() {
    QInterval iv;
    iv.lo_inf_ = iv.hi_inf_ = true;
    return iv;
  }
  static QInterval at_least(Rat lo) {
    QInterval iv;
    iv.lo_ = std::move(lo);
    iv.hi_inf_ = true;
    return iv;
  }
  static QInterval at_most(Rat hi) {
    QInterval iv;
    iv.hi_ = std::move(hi);
    iv.lo_inf_ = true;
    return iv;
  }

  bool lo_unbounded() const { return lo_inf_; }
  bool hi_unbounded() const { return hi_inf_; }
  bool bounded() const { return !lo_inf_ && !hi_inf_; }
  const Rat& lo() const { return lo_; }  // meaningful only if !lo_unbounded()
  const Rat& hi() const { return hi_; }

  bool is_point() const { return bounded() && lo_ == hi_; }
  Rat width() const {
    if (!bounded()) throw FortError("QInterval: width of unbounded interval");
    return hi_ - lo_;
  }
  Rat mid() const {
    if (!bounded()) throw FortError("QInterval: mid of unbounded interval");
    return (lo_ + hi_) / 2;
  }

  bool contains(const Rat& x) const {
    return (lo_inf_ || lo_ <= x) && (hi_inf_ || x <= hi_);
  }
  bool contains(const QInterval& o) const {
    bool lo_ok = lo_inf_ || (!o.lo_inf_ && lo_ <= o.lo_);
    bool hi_ok = hi_inf_ || (!o.hi_inf_ && o.hi_ <= hi_);
    return lo_ok && hi_ok;
  }
  bool intersects(const QInterval& o) const {
    bool left_ok = lo_inf_ || o.hi_inf_ || lo_ <= o.hi_;
    bool right_ok = hi_inf_ || o.lo_inf_ || o.lo_ <= hi_;
    return left_ok && right_ok;
  }

  /// 1, -1 or 0 when the interval is strictly positive, strictly negative,
  /// or straddles/contains zero.
  int sign() const {
    if (!lo_inf_ && lo_ > 0) return 1;
    if (!hi_inf_ && hi_ < 0) return -1;
    return 0;
  }

  QInterval operator-() const {
    QInterval out;
    out.lo_inf_ = hi_inf_;
    out.hi_inf_ = lo_inf_;
    if (!out.lo_inf_) out.lo_ = -hi_;
    if (!out.hi_inf_) out.hi_ = -lo_;
    return out;
  }

  friend QInterval operator+(const QInterval& a, const QInterval& b) {
    QInterval out;
    out.lo_inf_ = a.lo_inf_ || b.lo_inf_;
    out.hi_inf_ = a.hi_inf_ || b.hi_inf_;
    if (!out.lo_inf_) out.lo_ = a.lo_ + b.lo_;
    if (!out.hi_inf_) out.hi_ = a.hi_ + b.hi_;
    return out;
  }
  friend QInterval operator-(const QInterval& a, const QInterval& b) { return a + (-b); }
  friend QInterval operator*(const QInterval& a, const QInterval& b);
  /// Division where b excludes 0; otherwise the result is the whole line.
  friend QInterval operator/(const QInterval& a, const QInterval& b);

  QInterval& operator+=(const QInterval& o) { return *this = *this + o; }
  QInterval& operator-=(const QInterval& o) { return *this = *this - o; }
  QInterval& operator*=(const QInterval& o) { return *this = *this * o; }

  QInterval hull(const QInterval& o) const {
    QInterval out;
    out.lo_inf_ = lo_inf_ || o.lo_inf_;
    out.hi_inf_ = hi_inf_ || o.hi_inf_;
    if (!out.lo_inf_) out.lo_ = rat_min(lo_, o.lo_);
    if (!out.hi_inf_) out.hi_ = rat_max(hi_, o.hi_);
    return out;
  }
  std::optional<QInterval> intersect(const QInterval& o) const;

  QInterval pow(unsigned e) const;

  /// Upper bound on |x| over the interval; nullopt when unbounded.
  std::optional<Rat> abs_hi() const {
    if (!bounded()) return std::nullopt;
    return rat_max(rat_abs(lo_), rat_abs(hi_));
  }

  std::string str() const;

  friend bool operator==(const QInterval& a, const QInterval& b) {
    if (a.lo_inf_ != b.lo_inf_ || a.hi_inf_ != b.hi_inf_) return false;
    if (!a.lo_inf_ && a.lo_ != b.lo_) return false;
    if (!a.hi_inf_ && a.hi_ != b.hi_) return false;
    return true;
  }

 private:
  Rat lo_, hi_;
  bool lo_inf_ = false, hi_inf_ = false;
};

/// Axis-aligned rational box, one interval per coordinate.
using Box = std::vector<QInterval>;

}  // namespace fortcad
