#include "fortcad/rational.hpp"

namespace fortcad {

Rat rat_pow(const Rat& q, unsigned e) {
  Rat out(1);
  Rat base = q;
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  out.canonicalize();
  return out;
}

Int rat_floor(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int rat_ceil(const Rat& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> rat_parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  Rat q;
  if (q.set_str(text, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

double rat_to_double(const Rat& q) { return q.get_d(); }

Rat factorial(unsigned n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat binomial(unsigned n, unsigned k) {
  if (k > n) return Rat(0);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

Rat dyadic_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw FortError("dyadic_between: empty interval");
  Rat two(2);
  Rat scale(1);
  // find 2^k with hi-lo > 2^-k, then the grid 2^-(k+1) has a point inside
  while (scale >= hi - lo) scale /= two;
  scale /= two;
  Int n = rat_floor(lo / scale) + 1;
  Rat cand = Rat(n) * scale;
  while (!(cand > lo)) cand += scale;
  if (!(cand < hi)) throw FortError("dyadic_between: internal grid miss");
  cand.canonicalize();
  return cand;
}

}  // namespace fortcad
