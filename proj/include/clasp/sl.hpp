#pragma once
// Presentations and defining matrices for the special linear groups of
// dimension d > 2 and their central quotients.  Generators:
//
//   tau   = tau_{12}(1)   transvection  e1 -> e1 + e2,
//   delta = diag(w^-1, w, 1, ..., 1) for w the field generator,
//   U'    = the signed transposition  e1 -> e2, e2 -> -e1,
//   V'    = the d-cycle e1 -> e2 -> ... -> ed -> +-e1, signed so det = 1.
//
// Over GF(p) delta is a word in tau and U' rather than a generator.  The
// subgroup N = <delta, U', V'> of monomial matrices (order (q-1)^{d-1} d!)
// has its own presentation, and the centraliser in N of tau is generated
// by a fixed list of words; both are exposed for independent certification.
// Dimension 2 delegates to the dedicated two-dimensional constructions.

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "clasp/groupspec.hpp"
#include "clasp/sl2.hpp"
#include "clasp/slp.hpp"
#include "clasp/sym.hpp"

namespace clasp {

// ---- matrices ------------------------------------------------------------

inline Mat sl_tau(const Field& F, unsigned d) {
  Mat m = mat_identity(F, d);
  m.at(0, 1) = F.one();
  return m;
}

inline Mat sl_delta(const Field& F, unsigned d) {
  Mat m = mat_identity(F, d);
  FF w = F.x_res();
  m.at(0, 0) = F.inv(w);
  m.at(1, 1) = w;
  return m;
}

// Generators in presentation order: {tau, U', V'} over a prime field,
// {tau, delta, U', V'} otherwise.
inline std::vector<Mat> sl_presentation_matrices(const Field& F, unsigned d) {
  if (d == 2) return sl2_presentation_matrices(F);
  if (F.e == 1) return {sl_tau(F, d), signed_U(F, d), signed_V(F, d)};
  return {sl_tau(F, d), sl_delta(F, d), signed_U(F, d), signed_V(F, d)};
}

// Generators {delta, U', V'} of the monomial subgroup N.
inline std::vector<Mat> sl_torus_matrices(const Field& F, unsigned d) {
  if (d == 2) return {sl2_delta(F), sl2_U(F)};
  return {sl_delta(F, d), signed_U(F, d), signed_V(F, d)};
}

// ---- derived constants -----------------------------------------------------

// |Z(SL(d,q))| = gcd(q-1, d).
inline u64 sl_center_order(unsigned d, u64 q) { return std::gcd(q - 1, static_cast<u64>(d)); }

// ---- relator blocks --------------------------------------------------------

// The monomial subgroup N = <delta, U', V'> of order (q-1)^{d-1} d!:
//   (i)   <U', V'> as signed (odd q) or plain (even q) permutations,
//   (ii)  delta commutes with U'^{V'^2} (d > 3) and V'U'U'^{V'} (d > 4),
//   (iii) delta delta^{V'} = delta^{V'U'},
//   (iv)  delta^{U'} = delta^{-1},
//   (v)   delta commutes with delta^{V'} and, for d > 3, delta^{V'^2},
//   (vi)  delta^{q-1} = 1 (even q) or delta^{(q-1)/2} = U'^2 (odd q).
// Inside the full group presentation, (iv) and (vi) follow from the
// two-dimensional base case and are omitted.
inline void add_sl_monomial_relators(PresBuilder& B, unsigned d, u64 q, const Expr& delta,
                                     const Expr& Up, const Expr& Vp, bool omit_implied) {
  if (d <= 2) detail::fail("the monomial-subgroup relators need dimension at least 3");
  const RelatorTag tn = RelatorTag::TorusNormaliser;
  if (q % 2 == 0)
    add_sym_relators(B, d, Up, Vp);
  else
    add_signed_relators(B, d, Up, Vp);
  if (d > 3) B.rel("[delta,U'^V'^2]", tn, cm(delta, cj(Up, pw(Vp, 2))));
  if (d > 4) B.rel("[delta,V'U'U'^V']", tn, cm(delta, Vp * Up * cj(Up, Vp)));
  B.rel_eq("delta delta^V'=delta^V'U'", tn, delta * cj(delta, Vp), cj(delta, Vp * Up));
  if (!omit_implied) B.rel_eq("delta^U'=delta^-1", tn, cj(delta, Up), iv(delta));
  B.rel("[delta,delta^V']", tn, cm(delta, cj(delta, Vp)));
  if (d > 3) B.rel("[delta,delta^V'^2]", tn, cm(delta, cj(delta, pw(Vp, 2))));
  if (!omit_implied) {
    if (q % 2 == 0)
      B.rel("delta^" + std::to_string(q - 1), tn, pw(delta, static_cast<i64>(q - 1)));
    else
      B.rel_eq("delta^" + std::to_string((q - 1) / 2) + "=U'^2", tn,
               pw(delta, static_cast<i64>((q - 1) / 2)), pw(Up, 2));
  }
}

// Words generating the centraliser in N of tau, of index (q-1)d(d-1):
// U'^{V'^2} (d > 3), V'U'U'^{V'} (d > 4), delta^{V'^2} (d > 3), and
// delta (delta^2)^{V'} = diag(w^-1, w^-1, w^2, 1, ..., 1).
inline std::vector<std::pair<std::string, Expr>> sl_centraliser_exprs(unsigned d,
                                                                      const Expr& delta,
                                                                      const Expr& Up,
                                                                      const Expr& Vp) {
  if (d <= 2) detail::fail("the centraliser words need dimension at least 3");
  std::vector<std::pair<std::string, Expr>> ws;
  if (d > 3) ws.emplace_back("U'^V'^2", cj(Up, pw(Vp, 2)));
  if (d > 4) ws.emplace_back("V'U'U'^V'", Vp * Up * cj(Up, Vp));
  if (d > 3) ws.emplace_back("delta^V'^2", cj(delta, pw(Vp, 2)));
  ws.emplace_back("delta delta^2V'", delta * cj(pw(delta, 2), Vp));
  return ws;
}

// The Steinberg commutator instances on the root element:
//   [tau, tau^{V'}] = tau^{U'^{V'}},   [tau, tau^{U'^{V'}}] = 1,
//   [tau, tau^{U'V'}] = 1,   and for d > 3   [tau, tau^{V'^2}] = 1.
// For SL(3,4) three instances twisted by delta are appended; the final
// two are implied by the rest but kept to match the source relator set.
inline void add_sl_steinberg_relators(PresBuilder& B, unsigned d, u64 q, const Expr& tau,
                                      const Expr& delta, const Expr& Up, const Expr& Vp,
                                      bool with_delta_twists) {
  const RelatorTag st = RelatorTag::Steinberg;
  B.rel_eq("[tau,tau^V']=tau^U'^V'", st, cm(tau, cj(tau, Vp)), cj(tau, cj(Up, Vp)));
  B.rel("[tau,tau^U'^V']", st, cm(tau, cj(tau, cj(Up, Vp))));
  B.rel("[tau,tau^U'V']", st, cm(tau, cj(tau, Up * Vp)));
  if (d > 3) B.rel("[tau,tau^V'^2]", st, cm(tau, cj(tau, pw(Vp, 2))));
  if (with_delta_twists && d == 3 && q == 4) {
    B.rel_eq("[tau,tau^deltaV']=tau^deltaU'^V'", st, cm(tau, cj(tau, delta * Vp)),
             cj(tau, delta * cj(Up, Vp)));
    B.rel("[tau,tau^deltaU'^V']", st, cm(tau, cj(tau, delta * cj(Up, Vp))),
          /*redundant=*/true);
    B.rel("[tau,tau^deltaU'V']", st, cm(tau, cj(tau, delta * Up * Vp)),
          /*redundant=*/true);
  }
}

// ---- presentations ---------------------------------------------------------

// The central element (delta U'V'^{-1})^{(d-1)(q-1)/gcd(q-1,d)} generating
// Z(SL(d,q)); (delta U'V'^{-1})^{d-1} is already diagonal.
inline Expr sl_central_expr(unsigned d, u64 q, const Expr& delta, const Expr& Up,
                            const Expr& Vp) {
  u64 k = static_cast<u64>(d - 1) * (q - 1) / sl_center_order(d, q);
  return pw(delta * Up * iv(Vp), static_cast<i64>(k));
}

inline Presentation present_sl(const Field& F, unsigned d, bool quotient) {
  if (d == 2) return present_sl2(F, quotient);
  GroupSpec g{Family::SL, d, F.q, quotient};
  validate_group_spec(g);
  PresBuilder B(group_name(g));
  const u64 q = F.q;
  const RelatorTag ce = RelatorTag::Centraliser;

  Expr tau = B.gen("tau");
  Expr delta = (F.e > 1) ? B.gen("delta") : expr_one();
  Expr Up = B.gen("U'");
  Expr Vp = B.gen("V'");

  if (F.e > 1) {
    add_sl_monomial_relators(B, d, q, delta, Up, Vp, /*omit_implied=*/true);
    add_sl2_relators(B, F, false, tau, delta, Up, "sl2 ", RelatorTag::BaseCase);
    for (const auto& [wn, w] : sl_centraliser_exprs(d, delta, Up, Vp))
      B.rel("[tau," + wn + "]", ce, cm(tau, w));
    add_sl_steinberg_relators(B, d, q, tau, delta, Up, Vp, /*with_delta_twists=*/true);
  } else {
    if (F.p == 2)
      add_sym_relators(B, d, Up, Vp);
    else
      add_signed_relators(B, d, Up, Vp);
    add_sl2_relators(B, F, false, tau, delta, Up, "sl2 ", RelatorTag::BaseCase);
    if (d > 3) B.rel("[tau,U'^V'^2]", ce, cm(tau, cj(Up, pw(Vp, 2))));
    if (d > 4) B.rel("[tau,V'U'^-1U'^-V']", ce, cm(tau, Vp * iv(Up) * iv(cj(Up, Vp))));
    add_sl_steinberg_relators(B, d, q, tau, delta, Up, Vp, /*with_delta_twists=*/false);
  }

  if (quotient && sl_center_order(d, q) > 1) {
    Expr dw = (F.e > 1) ? delta : B.aux("delta", sl2_delta_word(F, tau, Up));
    u64 k = static_cast<u64>(d - 1) * (q - 1) / sl_center_order(d, q);
    B.rel("(deltaU'V'^-1)^" + std::to_string(k), RelatorTag::CenterKill,
          sl_central_expr(d, q, dw, Up, Vp));
  }
  return B.take();
}

// Presentation of the monomial subgroup N = <delta, U', V'>, of order
// (q-1)^{d-1} d!; with `quotient` the center of SL(d,q) (which lies in N)
// is killed, giving the image of N in the simple quotient.
inline Presentation present_sl_torus(unsigned d, u64 q, bool quotient) {
  if (d == 2) return present_sl2_torus(q, quotient);
  GroupSpec g{Family::SL, d, q, quotient};
  validate_group_spec(g);
  PresBuilder B("N(" + group_name(g) + ")");
  Expr delta = B.gen("delta");
  Expr Up = B.gen("U'");
  Expr Vp = B.gen("V'");
  add_sl_monomial_relators(B, d, q, delta, Up, Vp, /*omit_implied=*/false);
  if (quotient && sl_center_order(d, q) > 1) {
    u64 k = static_cast<u64>(d - 1) * (q - 1) / sl_center_order(d, q);
    B.rel("(deltaU'V'^-1)^" + std::to_string(k), RelatorTag::CenterKill,
          sl_central_expr(d, q, delta, Up, Vp));
  }
  return B.take();
}

// Centraliser words over the torus-generator alphabet {delta, U', V'}
// (matching sl_torus_matrices); dimension 2 uses {delta, U}.
inline std::vector<Slp> sl_centraliser_words(const Field& F, unsigned d) {
  std::vector<Slp> out;
  if (d == 2) {
    for (const Expr& e : sl2_tau_centraliser_words(F, expr_gen(0), expr_gen(1)))
      out.push_back(compile_expr(e));
  } else {
    for (const auto& named : sl_centraliser_exprs(d, expr_gen(0), expr_gen(1), expr_gen(2)))
      out.push_back(compile_expr(named.second));
  }
  return out;
}

// The generator of Z(SL(d,q)) as a word over the presentation generators.
inline Slp sl_central_word(const Field& F, unsigned d) {
  if (d == 2) {
    Expr U = (F.e == 1) ? expr_gen(1) : expr_gen(2);
    return compile_expr(pw(U, 2));  // U^2 = -I, trivial for even q
  }
  Expr tau = expr_gen(0);
  Expr delta = (F.e > 1) ? expr_gen(1) : sl2_delta_word(F, tau, expr_gen(1));
  Expr Up = (F.e > 1) ? expr_gen(2) : expr_gen(1);
  Expr Vp = (F.e > 1) ? expr_gen(3) : expr_gen(2);
  return compile_expr(sl_central_expr(d, F.q, delta, Up, Vp));
}

}  // namespace clasp
