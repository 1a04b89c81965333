#pragma once
// Presentations for the symmetric group S_d on a transposition and a
// d-cycle (Moore's presentation), and for the group of signed
// permutation matrices of determinant 1.  Each classical-group
// presentation embeds one of these as the permutation part of its
// torus-normaliser block, so the relator lists are exposed in a form
// that appends them to a larger presentation with the two generators
// replaced by arbitrary words.
//
// Conventions.  A signed cycle (a_1,...,a_k)^eps maps a_i -> a_{i+1}
// and a_k -> eps*a_1; (a)^- swaps a and -a.  The degree-d matrices act
// on row vectors, basis vector e_{i-1} carrying the point i.  We use
//   U  = (1,2)            V  = (1,2,...,d)
//   U' = (1,2)^-          V' = (1,2,...,d)^{eps_d},  eps_d = (-1)^{d+1},
// so that U' and V' always have determinant 1.
//
// The relator family "U commutes with its conjugate under the j-th
// power of V" is stated via auxiliary symbols V_j = V V_{j-1}; a direct
// power would cost log j bits per member and make the total bit-length
// grow like d log d instead of d.

#include <string>
#include <vector>

#include "clasp/linalg.hpp"
#include "clasp/slp.hpp"

namespace clasp {

inline int signed_eps(unsigned d) { return (d % 2) ? 1 : -1; }

// ---- matrices ----------------------------------------------------------

inline Mat sym_U(const Field& F, unsigned d) {
  if (d < 2) detail::fail("permutation matrices need degree at least 2");
  Mat m = mat_identity(F, d);
  m.at(0, 0) = F.zero();
  m.at(1, 1) = F.zero();
  m.at(0, 1) = F.one();
  m.at(1, 0) = F.one();
  return m;
}

inline Mat sym_V(const Field& F, unsigned d) {
  if (d < 2) detail::fail("permutation matrices need degree at least 2");
  Mat m(d);
  for (unsigned i = 0; i + 1 < d; ++i) m.at(i, i + 1) = F.one();
  m.at(d - 1, 0) = F.one();
  return m;
}

inline Mat signed_U(const Field& F, unsigned d) {
  Mat m = sym_U(F, d);
  m.at(1, 0) = F.neg(F.one());
  return m;
}

inline Mat signed_V(const Field& F, unsigned d) {
  Mat m = sym_V(F, d);
  if (signed_eps(d) < 0) m.at(d - 1, 0) = F.neg(F.one());
  return m;
}

// ---- relator blocks ----------------------------------------------------

// Moore's presentation of S_d (d > 2) on the words U and V:
//   U^2 = V^d = (UV)^{d-1} = (U U^V)^3 = (U U^{V^j})^2 = 1, 2 <= j <= d/2.
inline void add_sym_relators(PresBuilder& B, unsigned d, const Expr& U, const Expr& V,
                             RelatorTag tag = RelatorTag::TorusNormaliser,
                             const std::string& prefix = "") {
  if (d <= 2) detail::fail("the symmetric-group presentation needs degree at least 3");
  B.rel(prefix + "U^2", tag, pw(U, 2));
  B.rel(prefix + "V^" + std::to_string(d), tag, pw(V, d));
  B.rel(prefix + "(UV)^" + std::to_string(d - 1), tag, pw(U * V, d - 1));
  B.rel(prefix + "(U U^V)^3", tag, pw(U * cj(U, V), 3));
  Expr Vj = V;
  for (unsigned j = 2; 2 * j <= d; ++j) {
    Vj = B.aux(prefix + "V_" + std::to_string(j), V * Vj);
    B.rel(prefix + "(U U^V_" + std::to_string(j) + ")^2", tag, pw(U * cj(U, Vj), 2));
  }
}

// The group of signed permutation matrices of determinant 1 and degree
// d >= 2 on the words U' and V'.  For odd d > 2:
//   U'^4 = U'^{2V'U'} U'^2 U'^{2V'} = V'^d = (U'V')^{d-1} = (U' U'^{V'})^3
//        = [U', U'^{V'^j}] = 1,  2 <= j <= (d-1)/2;
// for even d > 2 the last three power relations become
//   V'^d = (U'V')^{d-1},  [V'^d, U'] = 1,  V'^{2d} = 1,
// with the commutator family extended to j <= d/2.  For d = 2 the group
// is cyclic of order 4 with V' = U'.
inline void add_signed_relators(PresBuilder& B, unsigned d, const Expr& Up, const Expr& Vp,
                                RelatorTag tag = RelatorTag::TorusNormaliser,
                                const std::string& prefix = "") {
  if (d < 2) detail::fail("the signed presentation needs degree at least 2");
  B.rel(prefix + "U'^4", tag, pw(Up, 4));
  if (d == 2) {
    B.rel_eq(prefix + "V'=U'", tag, Vp, Up);
    return;
  }
  Expr a = pw(Up, 2);
  B.rel(prefix + "U'^2V'U' U'^2 U'^2V'", tag, cj(a, Vp * Up) * a * cj(a, Vp));
  if (d % 2) {
    B.rel(prefix + "V'^" + std::to_string(d), tag, pw(Vp, d));
    B.rel(prefix + "(U'V')^" + std::to_string(d - 1), tag, pw(Up * Vp, d - 1));
  }
  B.rel(prefix + "(U' U'^V')^3", tag, pw(Up * cj(Up, Vp), 3));
  Expr Vj = Vp;
  unsigned jmax = (d % 2) ? (d - 1) / 2 : d / 2;
  for (unsigned j = 2; j <= jmax; ++j) {
    Vj = B.aux(prefix + "V'_" + std::to_string(j), Vp * Vj);
    B.rel(prefix + "[U',U'^V'_" + std::to_string(j) + "]", tag, cm(Up, cj(Up, Vj)));
  }
  if (d % 2 == 0) {
    B.rel_eq(prefix + "V'^" + std::to_string(d) + "=(U'V')^" + std::to_string(d - 1), tag,
             pw(Vp, d), pw(Up * Vp, d - 1));
    B.rel(prefix + "[V'^" + std::to_string(d) + ",U']", tag, cm(pw(Vp, d), Up));
    B.rel(prefix + "V'^" + std::to_string(2 * d), tag, pw(Vp, 2 * d));
  }
}

// ---- standalone presentations -------------------------------------------

inline Presentation present_sym(unsigned d) {
  if (d <= 2) detail::fail("the symmetric-group presentation needs degree at least 3");
  PresBuilder B("Sym(" + std::to_string(d) + ")");
  Expr U = B.gen("U");
  Expr V = B.gen("V");
  add_sym_relators(B, d, U, V);
  return B.take();
}

inline Presentation present_signed(unsigned d) {
  if (d < 2) detail::fail("the signed presentation needs degree at least 2");
  PresBuilder B("Signed(" + std::to_string(d) + ")");
  Expr Up = B.gen("U'");
  Expr Vp = B.gen("V'");
  add_signed_relators(B, d, Up, Vp);
  return B.take();
}

// ---- distinguished subgroup words ---------------------------------------

// For degree d > 3 the pair {U'^{V'^2}, V' U'^{-1} U'^{-V'}} equals
// {(3,4)^-, (3,4,...,d)^{eps_d}} and generates the determinant-1 signed
// group on the points other than 1 and 2.
inline std::vector<Expr> signed_fix12_words(const Expr& Up, const Expr& Vp) {
  return {cj(Up, pw(Vp, 2)), Vp * iv(Up) * iv(cj(Up, Vp))};
}

// Replacing the second word by V' U' U'^{V'} = (1)^-(2)^-(3,4,...,d)^{eps_d}
// yields the direct product of that subgroup with <(1)^-(2)^->.
inline std::vector<Expr> signed_fix12_flip_words(const Expr& Up, const Expr& Vp) {
  return {cj(Up, pw(Vp, 2)), Vp * Up * cj(Up, Vp)};
}

}  // namespace clasp
