#pragma once
// Identification of a target group: family, dimension, field size, and
// whether the simple central quotient is requested instead of the matrix
// group itself.

#include <string>

#include "clasp/field.hpp"

namespace clasp {

enum class Family { SL, Sp, SU, OmegaPlus, OmegaCircle, OmegaMinus };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::SL: return "SL";
    case Family::Sp: return "Sp";
    case Family::SU: return "SU";
    case Family::OmegaPlus: return "OmegaPlus";
    case Family::OmegaCircle: return "OmegaCircle";
    case Family::OmegaMinus: return "OmegaMinus";
  }
  return "?";
}

struct GroupSpec {
  Family family = Family::SL;
  unsigned d = 2;  // matrix dimension
  u64 q = 2;       // field size
  bool quotient = false;

  bool operator==(const GroupSpec&) const = default;
};

// Factor q = p^e; Error if q is not a prime power.
inline std::pair<u64, unsigned> split_prime_power(u64 q) {
  if (q < 2) detail::fail("field size must be at least 2");
  auto primes = detail::prime_factors(q);
  if (primes.size() != 1) detail::fail("field size must be a prime power");
  u64 p = primes[0];
  unsigned e = 0;
  u64 t = q;
  while (t > 1) {
    if (t % p) detail::fail("field size must be a prime power");
    t /= p;
    ++e;
  }
  return {p, e};
}

inline void validate_group_spec(const GroupSpec& g) {
  auto [p, e] = split_prime_power(g.q);
  (void)e;
  switch (g.family) {
    case Family::SL:
      if (g.d < 2) detail::fail("special linear groups need dimension at least 2");
      break;
    case Family::Sp:
      if (g.d < 4 || g.d % 2) detail::fail("symplectic groups need even dimension at least 4");
      break;
    case Family::SU:
      if (g.d < 3) detail::fail("unitary groups need dimension at least 3");
      break;
    case Family::OmegaPlus:
      if (g.d < 4 || g.d % 2)
        detail::fail("plus-type orthogonal groups need even dimension at least 4");
      break;
    case Family::OmegaCircle:
      if (g.d < 5 || g.d % 2 == 0)
        detail::fail("odd-dimensional orthogonal groups need odd dimension at least 5");
      if (p == 2)
        detail::fail(
            "unsupported: odd-dimensional orthogonal groups in even characteristic are "
            "isomorphic to symplectic groups");
      break;
    case Family::OmegaMinus:
      if (g.d % 2) detail::fail("minus-type orthogonal groups need even dimension");
      if (g.d < 6)
        detail::fail(
            "unsupported: minus-type orthogonal groups of dimension 4 are isomorphic to "
            "two-dimensional projective special linear groups over the square field");
      break;
  }
}

inline std::string group_name(const GroupSpec& g) {
  std::string body = "(" + std::to_string(g.d) + "," + std::to_string(g.q) + ")";
  switch (g.family) {
    case Family::SL: return (g.quotient ? "PSL" : "SL") + body;
    case Family::Sp: return (g.quotient ? "PSp" : "Sp") + body;
    case Family::SU: return (g.quotient ? "PSU" : "SU") + body;
    case Family::OmegaPlus: return (g.quotient ? "POmega+" : "Omega+") + body;
    case Family::OmegaCircle: return (g.quotient ? "POmega" : "Omega") + body;
    case Family::OmegaMinus: return (g.quotient ? "POmega-" : "Omega-") + body;
  }
  return "?" + body;
}

}  // namespace clasp
