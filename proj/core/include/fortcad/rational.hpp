#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace fortcad {

/// Exact rational scalar. All geometry in this library is done over Q (or
/// over real algebraic numbers represented by rational data); no floating
/// point enters any certified path.
using Rat = mpq_class;
using Int = mpz_class;

struct FortError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a configured work cap (cell count, subdivision order,
/// refinement depth) is exceeded. Callers may retry with a larger budget.
struct BudgetError : FortError {
  using FortError::FortError;
};

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat rat_pow(const Rat& q, unsigned e);
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

/// Writes `p/q` in lowest terms (just `p` when q == 1); parse accepts both.
std::string rat_to_string(const Rat& q);
std::optional<Rat> rat_parse(const std::string& text);

double rat_to_double(const Rat& q);

Rat factorial(unsigned n);
Rat binomial(unsigned n, unsigned k);

/// A dyadic rational strictly between lo and hi, chosen deterministically
/// (smallest denominator 2^k, then smallest numerator).
Rat dyadic_between(const Rat& lo, const Rat& hi);

}  // namespace fortcad
