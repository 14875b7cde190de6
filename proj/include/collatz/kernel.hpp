#pragma once

#include <cstdint>

#include "collatz/affine.hpp"
#include "collatz/natural.hpp"

// The shortcut Syracuse map T(N) = N/2 (N even), (3N+1)/2 (N odd), its
// iterates, parity indicators and the exact affine coefficients that relate a
// generator to its n-th image.
namespace collatz {

Natural syracuse_step(const Natural& n);
Natural syracuse_iter(Natural n, std::uint64_t k);

// i_n(P): 1 iff T_n(P) is odd.
bool parity_indicator(const Natural& p, std::uint64_t n);

// M_n(P) = i_0(P) + ... + i_n(P).
std::uint64_t imparity_count(const Natural& p, std::uint64_t n);

// M~_n(P) = M_n(P) - i_0(P), the odd count of the generated terms T_1..T_n.
std::uint64_t generated_imparity_count(const Natural& p, std::uint64_t n);

// Effect of one step on N: T(N) = principal * N + secondary.
struct ElementaryEffects {
  DyadicRational principal;
  DyadicRational secondary;
};
ElementaryEffects elementary_effects(const Natural& n);

// T(A) + 3^{i_0(A)} B, which equals T(A + 2B).
Natural shifted_step(const Natural& a, const Natural& b);

// (M_{n-1}(P), n, phi_n(P)) with T_n(P) = 3^{M_{n-1}} / 2^n * P + phi_n(P).
// phi_n is carried over 2^n exactly as the step recurrence produces it.
AffineMap cumulative_affine(const Natural& p, std::uint64_t n);

// (M~_n(P), n, phi~_n(P)) with T_{n+1}(P) = 3^{M~_n} / 2^n * T_1(P) + phi~_n(P).
AffineMap generated_affine(const Natural& p, std::uint64_t n);

}  // namespace collatz
