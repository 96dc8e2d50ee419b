#include "fortcad/poly.hpp"

#include <algorithm>
#include <sstream>

namespace fortcad {

Poly Poly::monomial(unsigned deg, Rat coeff) {
  std::vector<Rat> c(deg + 1, Rat(0));
  c[deg] = std::move(coeff);
  Poly p(std::move(c));
  return p;
}

const Rat& Poly::lc() const {
  if (c_.empty()) throw FortError("Poly::lc of zero polynomial");
  return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly Poly::operator-() const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s == 0) return Poly();
  std::vector<Rat> c(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(c));
}

Poly Poly::derivative(unsigned order) const {
  Poly p = *this;
  for (unsigned i = 0; i < order; ++i) p = p.derivative();
  return p;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QInterval Poly::eval(const QInterval& x) const {
  QInterval acc{Rat(0)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QInterval(*it);
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + rat_to_double(*it);
  return acc;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
  return acc;
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
  // Horner with q = a + b x, avoiding general poly multiply
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    // acc = acc*(a + b x) + coeff
    std::vector<Rat> next(acc.c_.size() + 1, Rat(0));
    for (size_t i = 0; i < acc.c_.size(); ++i) {
      next[i] += a * acc.c_[i];
      next[i + 1] += b * acc.c_[i];
    }
    next[0] += *it;
    acc = Poly(std::move(next));
  }
  return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
  if (divisor.is_zero()) throw FortError("Poly::divrem by zero");
  Poly rem = *this;
  int dd = divisor.degree();
  if (rem.degree() < dd) return {Poly(), rem};
  std::vector<Rat> q(rem.degree() - dd + 1, Rat(0));
  while (rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Rat f = rem.lc() / divisor.lc();
    q[k] = f;
    // rem -= f * x^k * divisor
    for (int i = 0; i <= dd; ++i) rem.c_[k + i] -= f * divisor.c_[i];
    rem.trim();
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::divexact(const Poly& divisor) const {
  auto [q, r] = divrem(divisor);
  if (!r.is_zero()) throw FortError("Poly::divexact: nonzero remainder");
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return Rat(1) / lc() * *this;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat a = rat_abs(c);
    bool unit = (a == 1) && i > 0;
    if (!unit) os << rat_to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divrem(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 1) return p.monic();
  Poly g = gcd(p, p.derivative());
  if (g.degree() <= 0) return p.monic();
  return p.divexact(g).monic();
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const Poly& s0 = chain[chain.size() - 2];
    const Poly& s1 = chain[chain.size() - 1];
    Poly r = s0.divrem(s1).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {
int sign_variations_at(const std::vector<Poly>& chain, const Rat& x) {
  int vars = 0, prev = 0;
  for (const Poly& p : chain) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}
}  // namespace

int sturm_count(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
  if (chain.empty()) throw FortError("sturm_count: zero polynomial");
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int sturm_count(const Poly& p, const Rat& a, const Rat& b) {
  return sturm_count(sturm_chain(squarefree_part(p)), a, b);
}

// ---------------------------------------------------------------------------
// Poly2
// ---------------------------------------------------------------------------

int Poly2::degree_x() const {
  int d = -1;
  for (const Poly& c : c_) d = std::max(d, c.degree());
  return d;
}

const Poly& Poly2::lc_y() const {
  if (c_.empty()) throw FortError("Poly2::lc_y of zero polynomial");
  return c_.back();
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
  return Poly2(std::move(c));
}

Poly2 operator-(const Poly2& a, const Poly2& b) {
  std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
  return Poly2(std::move(c));
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return Poly2();
  std::vector<Poly> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  return Poly2(std::move(c));
}

Poly2 Poly2::operator-() const {
  std::vector<Poly> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly2(std::move(c));
}

Poly2 Poly2::derivative_x() const {
  std::vector<Poly> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].derivative();
  return Poly2(std::move(c));
}

Poly2 Poly2::derivative_y() const {
  if (c_.size() <= 1) return Poly2();
  std::vector<Poly> c(c_.size() - 1);
  for (size_t j = 1; j < c_.size(); ++j) c[j - 1] = Rat(static_cast<long>(j)) * c_[j];
  return Poly2(std::move(c));
}

Poly Poly2::eval_x(const Rat& x) const {
  std::vector<Rat> c(c_.size(), Rat(0));
  for (size_t j = 0; j < c_.size(); ++j) c[j] = c_[j].eval(x);
  return Poly(std::move(c));
}

Poly Poly2::eval_y(const Rat& y) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = y * acc + *it;
  return acc;
}

Rat Poly2::eval(const Rat& x, const Rat& y) const { return eval_x(x).eval(y); }

QInterval Poly2::eval(const QInterval& x, const QInterval& y) const {
  QInterval acc{Rat(0)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + it->eval(x);
  return acc;
}

double Poly2::eval_double(double x, double y) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + it->eval_double(x);
  return acc;
}

Poly2 Poly2::swap_vars() const {
  std::vector<Poly> out(static_cast<size_t>(degree_x() + 1));
  for (size_t j = 0; j < c_.size(); ++j) {
    const auto& cx = c_[j].coeffs();
    for (size_t i = 0; i < cx.size(); ++i) {
      if (cx[i] == 0) continue;
      std::vector<Rat> mono(j + 1, Rat(0));
      mono[j] = cx[i];
      out[i] = out[i] + Poly(std::move(mono));
    }
  }
  return Poly2(std::move(out));
}

Poly Poly2::content_y() const {
  Poly g;
  for (const Poly& c : c_) g = gcd(g, c);
  return g;
}

Poly2 Poly2::primitive_part_y() const {
  if (is_zero()) return *this;
  Poly g = content_y();
  if (g.degree() <= 0) return *this;
  std::vector<Poly> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].divexact(g);
  return Poly2(std::move(c));
}

// gcd over Q(x)[y] via primitive PRS
static Poly2 gcd_y(const Poly2& a, const Poly2& b) {
  Poly2 x = a.primitive_part_y(), y = b.primitive_part_y();
  if (x.degree_y() < y.degree_y()) std::swap(x, y);
  while (!y.is_zero()) {
    // pseudo-remainder of x by y in the variable y
    Poly2 rem = x;
    int dy = y.degree_y();
    const Poly& lcy = y.lc_y();
    while (!rem.is_zero() && rem.degree_y() >= dy) {
      int k = rem.degree_y() - dy;
      Poly f = rem.lc_y();
      // rem = lcy * rem - f * y^k * y-poly
      std::vector<Poly> c(std::max(rem.coeffs_y().size(), y.coeffs_y().size() + k));
      for (size_t i = 0; i < rem.coeffs_y().size(); ++i) c[i] = lcy * rem.coeffs_y()[i];
      for (size_t i = 0; i < y.coeffs_y().size(); ++i) c[i + k] = c[i + k] - f * y.coeffs_y()[i];
      rem = Poly2(std::move(c));
    }
    x = std::move(y);
    y = rem.primitive_part_y();
  }
  return x;
}

Poly2 Poly2::squarefree_part_y() const {
  if (degree_y() <= 1) return primitive_part_y();
  Poly2 g = gcd_y(*this, derivative_y());
  if (g.degree_y() <= 0) return primitive_part_y();
  // exact division in y over Q(x): do pseudo-division then clear content
  Poly2 num = primitive_part_y();
  Poly2 den = g.primitive_part_y();
  // long division over the fraction field Q(x)
  std::vector<Poly> quot(static_cast<size_t>(num.degree_y() - den.degree_y() + 1));
  Poly2 rem = num;
  // multiply rem by lc(den)^k to keep division exact, track the factor
  while (!rem.is_zero() && rem.degree_y() >= den.degree_y()) {
    int k = rem.degree_y() - den.degree_y();
    Poly f = rem.lc_y();
    const Poly& l = den.lc_y();
    // rem = l*rem - f*y^k*den ; quot scaled accordingly (we only need the
    // squarefree part up to a content in x, cleared at the end)
    for (auto& q : quot) q = l * q;
    quot[k] = quot[k] + f;
    std::vector<Poly> c(rem.coeffs_y().size());
    for (size_t i = 0; i < rem.coeffs_y().size(); ++i) c[i] = l * rem.coeffs_y()[i];
    for (size_t i = 0; i < den.coeffs_y().size(); ++i)
      c[i + k] = c[i + k] - f * den.coeffs_y()[i];
    rem = Poly2(std::move(c));
  }
  return Poly2(std::move(quot)).primitive_part_y();
}

std::string Poly2::str(const std::string& x, const std::string& y) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree_y(); j >= 0; --j) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[j].str(x) << ")";
    if (j > 0) {
      os << "*" << y;
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Resultants (Sylvester determinant, fraction-free Bareiss elimination)
// ---------------------------------------------------------------------------

namespace {

Rat div_exact(const Rat& a, const Rat& b) { return a / b; }
Poly div_exact(const Poly& a, const Poly& b) { return a.divexact(b); }
Rat negate(const Rat& a) { return -a; }
Poly negate(const Poly& a) { return -a; }

template <typename R>
R bareiss_det(std::vector<std::vector<R>> m, const R& one) {
  size_t n = m.size();
  if (n == 0) return one;
  R prev = one;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    // pivot
    size_t piv = k;
    while (piv < n && m[piv][k] == R()) ++piv;
    if (piv == n) return R();  // zero column -> det 0
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        R num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = div_exact(num, prev);
      }
      m[i][k] = R();
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  if (sign < 0) det = negate(det);
  return det;
}

template <typename R, typename Coeff>
R sylvester_resultant(const std::vector<Coeff>& a, const std::vector<Coeff>& b,
                      const R& one) {
  int m = static_cast<int>(a.size()) - 1;
  int n = static_cast<int>(b.size()) - 1;
  size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<R>> s(dim, std::vector<R>(dim, R()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + (m - j)] = a[j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + (n - j)] = b[j];
  return bareiss_det(std::move(s), one);
}

}  // namespace

Rat resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  if (a.degree() == 0) return rat_pow(a.lc(), b.degree());
  if (b.degree() == 0) return rat_pow(b.lc(), a.degree());
  return sylvester_resultant<Rat, Rat>(a.coeffs(), b.coeffs(), Rat(1));
}

Poly resultant_y(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.degree_y() == 0) {
    Poly out(Rat(1));
    for (int i = 0; i < b.degree_y(); ++i) out = out * a.coeff_y(0);
    return out;
  }
  if (b.degree_y() == 0) {
    Poly out(Rat(1));
    for (int i = 0; i < a.degree_y(); ++i) out = out * b.coeff_y(0);
    return out;
  }
  return sylvester_resultant<Poly, Poly>(a.coeffs_y(), b.coeffs_y(), Poly(Rat(1)));
}

Poly discriminant_y(const Poly2& p) {
  int d = p.degree_y();
  if (d < 1) return Poly();
  if (d == 1) return Poly(Rat(1));
  Poly res = resultant_y(p, p.derivative_y());
  Poly out = res.divexact(p.lc_y());
  if (((d * (d - 1)) / 2) % 2 == 1) out = -out;
  return out;
}

}  // namespace fortcad
