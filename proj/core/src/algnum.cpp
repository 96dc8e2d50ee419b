#include "fortcad/algnum.hpp"

#include <sstream>

namespace fortcad {

Rat simplest_rational_in(const Rat& lo, const Rat& hi) {
  if (hi < lo) throw FortError("simplest_rational_in: empty interval");
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo <= hi: walk the continued fraction of the interval
  Rat a = lo, b = hi;
  // accumulated Mobius transform x -> (p*x + q)/(r*x + s) applied to result
  Int p(1), q(0), r(0), s(1);
  while (true) {
    Int fl = rat_floor(a);
    if (Rat(fl) == a || Rat(fl) + 1 <= b) {
      Int k = (Rat(fl) == a) ? fl : fl + 1;
      Rat x(k);
      Rat num = Rat(p) * x + Rat(q);
      Rat den = Rat(r) * x + Rat(s);
      Rat out = num / den;
      out.canonicalize();
      return out;
    }
    // strip the integer part, recurse on the reciprocal
    Rat a2 = Rat(1) / (b - Rat(fl));
    Rat b2 = Rat(1) / (a - Rat(fl));
    Int p2 = p * fl + q, r2 = r * fl + s;
    q = p;
    s = r;
    p = p2;
    r = r2;
    a = a2;
    b = b2;
  }
}

AlgNum AlgNum::root_of(const Poly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw FortError("AlgNum::root_of zero polynomial");
  if (!(lo < hi)) throw FortError("AlgNum::root_of: empty interval");
  Poly sf = squarefree_part(p);
  if (sf.degree() == 1) {
    Rat r = -sf.coeff(0) / sf.coeff(1);
    if (!(lo < r && r < hi)) throw FortError("AlgNum::root_of: linear root outside interval");
    return AlgNum(r);
  }
  if (sf.eval(lo) == 0 || sf.eval(hi) == 0)
    throw FortError("AlgNum::root_of: endpoint is a root, shrink interval");
  if (sturm_count(sf, lo, hi) != 1)
    throw FortError("AlgNum::root_of: interval does not isolate one root");
  AlgNum out;
  out.rational_.reset();
  out.poly_ = sf;
  out.lo_ = lo;
  out.hi_ = hi;
  out.sign_lo_ = sgn(sf.eval(lo));
  // detect a rational root: refine, then test the simplest rational inside
  for (int i = 0; i < 24 && !out.rational_; ++i) out.bisect_step();
  if (out.rational_) return AlgNum(*out.rational_);
  Rat cand = simplest_rational_in(out.lo_, out.hi_);
  if (sf.eval(cand) == 0) return AlgNum(cand);
  return out;
}

const Rat& AlgNum::rational() const {
  if (!rational_) throw FortError("AlgNum::rational on irrational value");
  return *rational_;
}

QInterval AlgNum::iso() const {
  if (rational_) return QInterval(*rational_);
  return QInterval(lo_, hi_);
}

void AlgNum::bisect_step() const {
  Rat mid = (lo_ + hi_) / 2;
  Rat v = poly_.eval(mid);
  if (v == 0) {
    rational_ = mid;
    return;
  }
  if (sgn(v) == sign_lo_) lo_ = mid;
  else hi_ = mid;
}

void AlgNum::refine() const {
  if (!rational_) bisect_step();
}

QInterval AlgNum::enclosure(const Rat& width_target) const {
  if (rational_) return QInterval(*rational_);
  while (!rational_ && hi_ - lo_ > width_target) bisect_step();
  if (rational_) return QInterval(*rational_);
  return QInterval(lo_, hi_);
}

int AlgNum::cmp(const Rat& r) const {
  if (rational_) return sgn(*rational_ - r);
  if (r <= lo_) return 1;
  if (r >= hi_) return -1;
  if (poly_.eval(r) == 0) return 0;  // a root inside the isolating interval is the root
  return sturm_count(poly_, lo_, r) == 1 ? -1 : 1;
}

int AlgNum::cmp(const AlgNum& o) const {
  if (o.rational_) return cmp(*o.rational_);
  if (rational_) return -o.cmp(*rational_);
  Poly g = gcd(poly_, o.poly_);
  bool maybe_equal = g.degree() >= 1;
  while (true) {
    if (rational_ || o.rational_)
      return rational_ ? o.cmp(*rational_) * -1 : cmp(*o.rational_);
    if (hi_ <= o.lo_) return -1;
    if (o.hi_ <= lo_) return 1;
    if (maybe_equal) {
      // a root of g strictly inside the overlap lies strictly inside both
      // isolating intervals, hence equals both values
      Rat olo = rat_max(lo_, o.lo_), ohi = rat_min(hi_, o.hi_);
      if (olo < ohi) {
        int c = sturm_count(g, olo, ohi);
        if (g.eval(ohi) == 0) --c;
        if (c >= 1) return 0;
      }
    }
    bisect_step();
    o.bisect_step();
  }
}

AlgNum AlgNum::affine(const Rat& a, const Rat& b) const {
  if (rational_) return AlgNum(a + b * *rational_);
  if (b == 0) return AlgNum(a);
  // q(y) = p((y - a)/b) has root a + b*theta
  Poly q = poly_.compose_affine(-a / b, Rat(1) / b);
  Rat nlo = a + b * lo_, nhi = a + b * hi_;
  if (b < 0) std::swap(nlo, nhi);
  AlgNum out;
  out.rational_.reset();
  out.poly_ = squarefree_part(q);
  out.lo_ = nlo;
  out.hi_ = nhi;
  out.sign_lo_ = sgn(out.poly_.eval(nlo));
  return out;
}

AlgNum AlgNum::apply_poly(const Poly& g) const {
  if (g.is_constant()) return AlgNum(g.coeff(0));
  if (rational_) return AlgNum(g.eval(*rational_));
  if (g.degree() == 1) return affine(g.coeff(0), g.coeff(1));
  // R(y) = res_x(p(x), y - g(x)) vanishes at y = g(theta)
  Poly2 px(poly_);
  std::vector<Poly> yc{-g, Poly(Rat(1))};
  Poly2 ymg(std::move(yc));
  Poly r = resultant_y(px.swap_vars(), ymg.swap_vars());
  Poly rs = squarefree_part(r);
  AlgNum self = *this;
  Rat w = (hi_ - lo_) / 2;
  for (int rounds = 0; rounds < 256; ++rounds) {
    QInterval enc = self.enclosure(w);
    if (self.rational_) return AlgNum(g.eval(*self.rational_));
    QInterval genc = g.eval(enc);
    Rat pad = (genc.hi() - genc.lo() + 1) / 4;
    for (int t = 0; t < 80; ++t) {
      Rat lo = genc.lo() - pad, hi = genc.hi() + pad;
      if (rs.eval(lo) != 0 && rs.eval(hi) != 0 && sturm_count(rs, lo, hi) == 1) {
        return root_of(rs, lo, hi);
      }
      pad /= 3;
    }
    w /= 16;
  }
  throw BudgetError("AlgNum::apply_poly: could not isolate image");
}

std::optional<AlgNum> AlgNum::monotone_preimage(const Poly& f, const Rat& ylo,
                                                const Rat& yhi) const {
  if (f.is_constant()) return std::nullopt;
  Rat flo = f.eval(ylo), fhi = f.eval(yhi);
  bool inc = flo < fhi;
  Rat a = inc ? flo : fhi, b = inc ? fhi : flo;
  if (rational_) {
    const Rat& c = *rational_;
    if (c == flo) return AlgNum(ylo);
    if (c == fhi) return AlgNum(yhi);
    if (!(a < c && c < b)) return std::nullopt;
    Poly q = f - Poly(c);
    Poly qs = squarefree_part(q);
    if (qs.eval(ylo) == 0) return AlgNum(ylo);
    if (qs.eval(yhi) == 0) return AlgNum(yhi);
    Rat a2 = ylo, b2 = yhi;
    while (sturm_count(qs, a2, b2) > 1) {
      Rat m = (a2 + b2) / 2;
      if (qs.eval(m) == 0) return AlgNum(m);
      if (sturm_count(qs, a2, m) >= 1) b2 = m;
      else a2 = m;
    }
    if (sturm_count(qs, a2, b2) != 1) return std::nullopt;
    return root_of(qs, a2, b2);
  }
  if (cmp(a) <= 0 || cmp(b) >= 0) {
    if (cmp(a) == 0) return AlgNum(inc ? ylo : yhi);
    if (cmp(b) == 0) return AlgNum(inc ? yhi : ylo);
    return std::nullopt;
  }
  // irrational target: R(y) = res_x(p(x), f(y) - x) vanishes at the preimage
  Poly2 px(poly_);
  std::vector<Poly> fc;
  fc.reserve(f.coeffs().size());
  for (const Rat& c : f.coeffs()) fc.emplace_back(Poly(c));
  Poly2 fy(std::move(fc));
  std::vector<Poly> xterm{Poly::x()};
  Poly2 fyx = fy - Poly2(std::move(xterm));
  Poly r = resultant_y(px.swap_vars(), fyx.swap_vars());
  if (r.is_zero()) throw FortError("AlgNum::monotone_preimage: degenerate resultant");
  Poly rs = squarefree_part(r);
  // isolate candidates in (ylo, yhi) and pick the one whose image matches
  struct Range {
    Rat a, b;
  };
  std::vector<Range> stack{{ylo, yhi}};
  std::vector<Range> cands;
  while (!stack.empty()) {
    Range rg = stack.back();
    stack.pop_back();
    Rat pad = (rg.b - rg.a) / 1024;
    while (rs.eval(rg.a) == 0) rg.a += pad;
    while (rs.eval(rg.b) == 0) rg.b -= pad;
    if (!(rg.a < rg.b)) continue;
    int n = sturm_count(rs, rg.a, rg.b);
    if (n == 0) continue;
    if (n == 1) {
      cands.push_back(rg);
      continue;
    }
    Rat m = (rg.a + rg.b) / 2;
    while (rs.eval(m) == 0) m = (rg.a + m) / 2;
    stack.push_back({rg.a, m});
    stack.push_back({m, rg.b});
  }
  for (auto& rg : cands) {
    AlgNum y = root_of(rs, rg.a, rg.b);
    AlgNum img = y.apply_poly(f);
    if (img.cmp(*this) == 0) return y;
  }
  return std::nullopt;
}

int AlgNum::sign_of(const Poly& q) const {
  if (q.is_zero()) return 0;
  if (rational_) return sgn(q.eval(*rational_));
  Poly g = gcd(poly_, q);
  bool maybe_zero = g.degree() >= 1;
  while (true) {
    if (rational_) return sgn(q.eval(*rational_));
    if (maybe_zero) {
      int c = sturm_count(g, lo_, hi_);
      if (g.eval(hi_) == 0) --c;
      if (c >= 1) return 0;  // q shares this root
    }
    QInterval e = q.eval(QInterval(lo_, hi_));
    if (e.sign() != 0) return e.sign();
    bisect_step();
  }
}

double AlgNum::to_double() const {
  if (rational_) return rat_to_double(*rational_);
  QInterval e = enclosure(Rat(1, 1l << 40));
  return rat_to_double(e.is_point() ? e.lo() : e.mid());
}

std::string AlgNum::str() const {
  if (rational_) return rat_to_string(*rational_);
  std::ostringstream os;
  os << "root(" << poly_.str() << ", (" << rat_to_string(lo_) << ", " << rat_to_string(hi_)
     << "))";
  return os.str();
}

}  // namespace fortcad
