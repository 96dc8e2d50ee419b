#include "fortcad/interval.hpp"

namespace fortcad {

namespace {

// endpoint with explicit infinity, for products
struct Ept {
  bool inf;   // true: +/- infinity with sign `sgn`
  int sgn;    // only when inf
  Rat v;
};

Ept mul_ep(const Ept& a, const Ept& b) {
  if (a.inf || b.inf) {
    int sa = a.inf ? a.sgn : sgn(a.v);
    int sb = b.inf ? b.sgn : sgn(b.v);
    int s = sa * sb;
    if (s == 0) return {false, 0, Rat(0)};  // 0 * inf -> 0 (valid for sup/inf of products over closed boxes)
    return {true, s, Rat(0)};
  }
  return {false, 0, a.v * b.v};
}

bool ep_less(const Ept& a, const Ept& b) {
  if (a.inf && b.inf) return a.sgn < b.sgn;
  if (a.inf) return a.sgn < 0;
  if (b.inf) return b.sgn > 0;
  return a.v < b.v;
}

}  // namespace

QInterval operator*(const QInterval& a, const QInterval& b) {
  Ept alo{a.lo_unbounded(), -1, a.lo_unbounded() ? Rat(0) : a.lo()};
  Ept ahi{a.hi_unbounded(), 1, a.hi_unbounded() ? Rat(0) : a.hi()};
  Ept blo{b.lo_unbounded(), -1, b.lo_unbounded() ? Rat(0) : b.lo()};
  Ept bhi{b.hi_unbounded(), 1, b.hi_unbounded() ? Rat(0) : b.hi()};
  Ept cands[4] = {mul_ep(alo, blo), mul_ep(alo, bhi), mul_ep(ahi, blo), mul_ep(ahi, bhi)};
  Ept mn = cands[0], mx = cands[0];
  for (int i = 1; i < 4; ++i) {
    if (ep_less(cands[i], mn)) mn = cands[i];
    if (ep_less(mx, cands[i])) mx = cands[i];
  }
  if (mn.inf && mx.inf) return QInterval::whole();
  if (mn.inf) return QInterval::at_most(mx.v);
  if (mx.inf) return QInterval::at_least(mn.v);
  return QInterval(mn.v, mx.v);
}

QInterval operator/(const QInterval& a, const QInterval& b) {
  if (b.sign() == 0) return QInterval::whole();
  if (b.lo_unbounded() || b.hi_unbounded()) {
    // 1/b hull: b strictly one-signed reaching infinity -> reciprocal reaches 0
    Rat near = b.sign() > 0 ? (b.lo_unbounded() ? Rat(0) : b.lo()) : (b.hi_unbounded() ? Rat(0) : b.hi());
    if (near == 0) return QInterval::whole();
    QInterval rec = b.sign() > 0 ? QInterval(Rat(0), Rat(1) / near) : QInterval(Rat(1) / near, Rat(0));
    return a * rec;
  }
  QInterval rec(Rat(1) / b.hi(), Rat(1) / b.lo());
  return a * rec;
}

std::optional<QInterval> QInterval::intersect(const QInterval& o) const {
  if (!intersects(o)) return std::nullopt;
  QInterval out;
  out.lo_inf_ = lo_inf_ && o.lo_inf_;
  out.hi_inf_ = hi_inf_ && o.hi_inf_;
  if (!out.lo_inf_) {
    if (lo_inf_) out.lo_ = o.lo_;
    else if (o.lo_inf_) out.lo_ = lo_;
    else out.lo_ = rat_max(lo_, o.lo_);
  }
  if (!out.hi_inf_) {
    if (hi_inf_) out.hi_ = o.hi_;
    else if (o.hi_inf_) out.hi_ = hi_;
    else out.hi_ = rat_min(hi_, o.hi_);
  }
  return out;
}

QInterval QInterval::pow(unsigned e) const {
  if (e == 0) return QInterval(Rat(1));
  QInterval out = *this;
  for (unsigned i = 1; i < e; ++i) out = out * *this;
  // tighten even powers straddling zero: x^e >= 0
  if (e % 2 == 0 && sign() == 0 && !out.lo_unbounded() && out.lo() < 0) {
    out = out.intersect(QInterval::at_least(Rat(0))).value();
  }
  return out;
}

std::string QInterval::str() const {
  std::string l = lo_inf_ ? "-inf" : rat_to_string(lo_);
  std::string h = hi_inf_ ? "inf" : rat_to_string(hi_);
  return "[" + l + ", " + h + "]";
}

}  // namespace fortcad
