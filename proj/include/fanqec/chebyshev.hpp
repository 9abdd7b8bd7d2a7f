#pragma once

// Chebyshev families, the partial (even/odd) Chebyshev polynomials, the fan
// graph polynomials S_n and phi_n, and an exact identity battery over them.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fanqec/polycore.hpp"

namespace fanqec {

enum class FamilyTag { U, T, V, W, Ue, Uo, Ucomp, UeComp, UoComp, S, Phi };

// Lower-case CLI names: u, t, v, w, ue, uo, ucomp, uecomp, uocomp, s, phi.
std::string_view family_name(FamilyTag tag);
std::optional<FamilyTag> parse_family(std::string_view name);
// Smallest admissible index (-2 for U, 0 otherwise).
int family_min_index(FamilyTag tag);

// Second kind, n >= -2, with U_{-1} = 0 and U_{-2} = -1.
const Poly& cheb_u(int n);
// First, third and fourth kinds, n >= 0.
const Poly& cheb_t(int n);
const Poly& cheb_v(int n);
const Poly& cheb_w(int n);

// U^e_n and U^o_n (n >= 0) built from U_m and U_{m-1}.
Poly partial_e(int n);
Poly partial_o(int n);

// q(x) = p(x/2); throws NotIntegral when a coefficient is not divisible by
// the matching power of two.
Poly compress(const Poly& p);

Poly s_poly(int n);
// ((n+1)x^2 - 3x - n) U_n + (x+1)(U_{n-1} + 1)
Poly phi(int n);

Poly family(FamilyTag tag, int n);

// Polynomial provider used by the identity battery; swapped out by tests to
// inject corrupted families.
using FamilySource = std::function<Poly(FamilyTag, int)>;

struct IdentityCheck {
  std::string identity;
  int n = 0;
  bool pass = false;
  // True when the identity at this n reads U_{-1} or U_{-2}, i.e. relies on
  // the negative-index convention rather than the recurrence proper.
  bool uses_negative_index = false;
  // Only filled for failures.
  Poly lhs;
  Poly rhs;
};

struct IdentityReport {
  int max_n = 0;
  // Sorted by (identity, n).
  std::vector<IdentityCheck> checked;

  bool all_passed() const;
  std::vector<IdentityCheck> failures() const;
  // {"max_n": N, "checked": K, "failures": [{"identity", "n", "lhs", "rhs"}]}
  std::string to_json() const;
};

// Exact coefficient comparison of every identity for 0 <= n <= max_n.
// Checks run in parallel over n; `threads` = 0 picks the hardware count.
IdentityReport identity_suite(int max_n, const FamilySource& source = family,
                              unsigned threads = 0);

// Names of every identity the battery checks, in report order.
const std::vector<std::string>& identity_names();

}  // namespace fanqec
