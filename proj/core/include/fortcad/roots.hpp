#pragma once

#include <vector>

#include "fortcad/algnum.hpp"
#include "fortcad/poly.hpp"

namespace fortcad {

/// Interval certified to contain exactly one real root of a referenced
/// squarefree polynomial. lo == hi means the root is known exactly.
struct IsolatingInterval {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};

/// Descartes bound for the number of roots of p in the open interval
/// (a, b): 0 and 1 are exact, otherwise an upper bound.
int descartes_bound(const Poly& p, const Rat& a, const Rat& b);

/// Isolating intervals for the distinct real roots of p in the open
/// interval (a, b), in increasing order. Works on the squarefree part, so
/// multiple roots are isolated once. Throws on the zero polynomial.
std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rat& a, const Rat& b);

/// Shrink an isolating interval (against the squarefree part of p) to
/// width <= target by sign bisection.
IsolatingInterval refine_root(const Poly& p, IsolatingInterval iv, const Rat& target);

/// The distinct real roots of p in (a, b) as exact algebraic numbers,
/// increasing.
std::vector<AlgNum> real_roots_in(const Poly& p, const Rat& a, const Rat& b);

}  // namespace fortcad
