#include "fortcad/roots.hpp"

namespace fortcad {

namespace {

int sign_variations(const std::vector<Rat>& c) {
  int vars = 0, prev = 0;
  for (const Rat& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

Poly reverse_coeffs(const Poly& p) {
  std::vector<Rat> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Poly(std::move(c));
}

}  // namespace

int descartes_bound(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw FortError("descartes_bound: zero polynomial");
  if (!(a < b)) return 0;
  // map (a,b) to (0,1)
  Poly q = p.compose_affine(a, b - a);
  // strip roots at the endpoints: x = 0 factors ...
  std::vector<Rat> c = q.coeffs();
  size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  c.erase(c.begin(), c.begin() + k);
  Poly q2{std::vector<Rat>(c)};
  if (q2.is_zero()) return 0;
  // ... and x = 1 factors
  while (q2.degree() >= 1 && q2.eval(Rat(1)) == 0) {
    q2 = q2.divexact(Poly(std::vector<Rat>{Rat(-1), Rat(1)}));
  }
  if (q2.degree() <= 0) return 0;
  // variations of (1+x)^n q2(1/(1+x)) : reverse then shift by 1
  Poly t = reverse_coeffs(q2).compose_affine(Rat(1), Rat(1));
  return sign_variations(t.coeffs());
}

static void isolate_rec(const Poly& sf, const Rat& a, const Rat& b,
                        std::vector<IsolatingInterval>& out, int depth) {
  if (depth > 4096) throw BudgetError("isolate_roots: recursion budget exceeded");
  int v = descartes_bound(sf, a, b);
  if (v == 0) return;
  if (v == 1) {
    // make endpoints non-roots so the interval brackets by sign; the
    // isolated root is strictly inside, so small enough nudges keep it
    Rat lo = a, hi = b;
    if (sf.eval(lo) == 0 || sf.eval(hi) == 0) {
      Rat pad = (hi - lo) / 1024;
      for (int tries = 0;; ++tries) {
        if (tries > 256) throw BudgetError("isolate_roots: endpoint nudge budget");
        Rat nlo = sf.eval(lo) == 0 ? lo + pad : lo;
        Rat nhi = sf.eval(hi) == 0 ? hi - pad : hi;
        if (nlo < nhi && sf.eval(nlo) != 0 && sf.eval(nhi) != 0 &&
            descartes_bound(sf, nlo, nhi) == 1) {
          lo = nlo;
          hi = nhi;
          break;
        }
        pad /= 2;
      }
    }
    out.push_back({lo, hi});
    return;
  }
  Rat m = (a + b) / 2;
  if (sf.eval(m) == 0) {
    isolate_rec(sf, a, m, out, depth + 1);
    out.push_back({m, m});
    isolate_rec(sf, m, b, out, depth + 1);
  } else {
    isolate_rec(sf, a, m, out, depth + 1);
    isolate_rec(sf, m, b, out, depth + 1);
  }
}

std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw FortError("isolate_roots: zero polynomial");
  std::vector<IsolatingInterval> out;
  if (!(a < b) || p.degree() == 0) return out;
  Poly sf = squarefree_part(p);
  isolate_rec(sf, a, b, out, 0);
  return out;
}

IsolatingInterval refine_root(const Poly& p, IsolatingInterval iv, const Rat& target) {
  if (iv.exact()) return iv;
  Poly sf = squarefree_part(p);
  int slo = sgn(sf.eval(iv.lo));
  if (slo == 0 || sgn(sf.eval(iv.hi)) == 0 || slo == sgn(sf.eval(iv.hi)))
    throw FortError("refine_root: endpoints do not bracket a simple root");
  while (iv.hi - iv.lo > target) {
    Rat m = (iv.lo + iv.hi) / 2;
    int sm = sgn(sf.eval(m));
    if (sm == 0) return {m, m};
    if (sm == slo) iv.lo = m;
    else iv.hi = m;
  }
  return iv;
}

std::vector<AlgNum> real_roots_in(const Poly& p, const Rat& a, const Rat& b) {
  std::vector<AlgNum> out;
  Poly sf = squarefree_part(p);
  for (const IsolatingInterval& iv : isolate_roots(sf, a, b)) {
    if (iv.exact()) out.emplace_back(iv.lo);
    else out.push_back(AlgNum::root_of(sf, iv.lo, iv.hi));
  }
  return out;
}

}  // namespace fortcad
