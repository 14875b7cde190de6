#include "collatz/kernel.hpp"

#include "collatz/error.hpp"

namespace collatz {

namespace {

void require_positive(const Natural& n, const char* what) {
  require(n >= 1, std::string(what) + " must be a positive integer");
}

// In-place T for n >= 1.
void step_in_place(Natural& n) {
  if (is_odd(n)) {
    n *= 3;
    n += 1;
  }
  mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), 1);
}

}  // namespace

Natural syracuse_step(const Natural& n) {
  require_positive(n, "syracuse_step argument");
  Natural r = n;
  step_in_place(r);
  return r;
}

Natural syracuse_iter(Natural n, std::uint64_t k) {
  require_positive(n, "syracuse_iter argument");
  for (std::uint64_t i = 0; i < k; ++i) step_in_place(n);
  return n;
}

bool parity_indicator(const Natural& p, std::uint64_t n) {
  return is_odd(syracuse_iter(p, n));
}

std::uint64_t imparity_count(const Natural& p, std::uint64_t n) {
  require_positive(p, "imparity_count argument");
  Natural t = p;
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (is_odd(t)) ++count;
    if (k < n) step_in_place(t);
  }
  return count;
}

std::uint64_t generated_imparity_count(const Natural& p, std::uint64_t n) {
  require(n >= 1, "generated_imparity_count needs n >= 1");
  return imparity_count(p, n) - (is_odd(p) ? 1 : 0);
}

ElementaryEffects elementary_effects(const Natural& n) {
  require_positive(n, "elementary_effects argument");
  if (is_odd(n)) return {DyadicRational(Natural(3), 1), DyadicRational(Natural(1), 1)};
  return {DyadicRational(Natural(1), 1), DyadicRational(Natural(0), 0)};
}

Natural shifted_step(const Natural& a, const Natural& b) {
  require_positive(a, "shifted_step A");
  require(b >= 0, "shifted_step B must be non-negative");
  Natural r = syracuse_step(a);
  return is_odd(a) ? Natural(r + 3 * b) : Natural(r + b);
}

AffineMap cumulative_affine(const Natural& p, std::uint64_t n) {
  require_positive(p, "cumulative_affine generator");
  require(n >= 1, "cumulative_affine needs n >= 1");
  // phi_k = 3^{i_{k-1}} / 2 * phi_{k-1} + i_{k-1} / 2, F_k likewise.
  AffineMap map = AffineMap::identity();
  Natural t = p;
  for (std::uint64_t k = 0; k < n; ++k) {
    map = map.then(AffineMap::step(is_odd(t)));
    step_in_place(t);
  }
  return map;
}

AffineMap generated_affine(const Natural& p, std::uint64_t n) {
  require_positive(p, "generated_affine generator");
  require(n >= 1, "generated_affine needs n >= 1");
  // phi~_n = phi_{n+1}(P) - 3^{M~_n} / 2^{n+1} * i_0(P)
  AffineMap full = cumulative_affine(p, n + 1);
  const std::uint64_t i0 = is_odd(p) ? 1 : 0;
  const std::uint64_t generated_odd = full.odd_count - i0;
  DyadicRational correction(i0 == 1 ? pow3(generated_odd) : Natural(0), n + 1);
  return {generated_odd, n, full.offset - correction};
}

}  // namespace collatz
