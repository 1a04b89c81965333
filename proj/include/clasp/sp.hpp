#pragma once
// Presentations and defining matrices for the symplectic groups Sp(2n, q),
// n > 1, and their central quotients.  The natural module has hyperbolic
// basis (e1, f1, ..., en, fn), stored interleaved; generators:
//
//   Z     = (e1 -> f1, f1 -> -e1),
//   delta = (e1 -> w^-1 e1, f1 -> w f1) for w the field generator,
//   tau   = (e1 -> e1 + f1)                          a long root element,
//   sigma = (e1 -> e1 + e2, f2 -> f2 - f1)           a short root element,
//   U     = (e1,e2)(f1,f2),
//   V     = (e1,...,en)(f1,...,fn), a separate generator only for n > 2
//           (for n = 2 the cycle V equals U and every V below reads U).
//
// N1 = <Z, U, V> is C2 wr Sn (even q) or C4 wr Sn (odd q); with
// K = <delta, Z>, of order 2(q-1), the full monomial subgroup
// N = <delta, Z, U, V> is K wr Sn.  The centralisers in N of sigma and of
// tau are generated by fixed word lists; SL(2,q) embeds twice as a base
// case: on {sigma, Delta, U'} for Delta = [U, delta], U' = U Z^2 (odd q)
// or U (even q), acting on <e1, e2>, and on {tau, delta, Z} acting on
// <e1, f1>.  For odd q the centre is generated by (ZV)^{2n} = -1.

#include <string>
#include <utility>
#include <vector>

#include "clasp/groupspec.hpp"
#include "clasp/sl2.hpp"
#include "clasp/slp.hpp"
#include "clasp/sym.hpp"

namespace clasp {

// ---- matrices --------------------------------------------------------------

namespace detail {
// e_i lives at row 2(i-1), f_i at row 2(i-1)+1, for 1 <= i <= n.
inline unsigned sp_e(unsigned i) { return 2 * (i - 1); }
inline unsigned sp_f(unsigned i) { return 2 * (i - 1) + 1; }
}  // namespace detail

inline Mat sp_Z(const Field& F, unsigned n) {
  Mat m = mat_identity(F, 2 * n);
  m.at(0, 0) = 0;
  m.at(1, 1) = 0;
  m.at(0, 1) = F.one();
  m.at(1, 0) = F.neg(F.one());
  return m;
}

inline Mat sp_delta(const Field& F, unsigned n) {
  Mat m = mat_identity(F, 2 * n);
  m.at(0, 0) = F.inv(F.x_res());
  m.at(1, 1) = F.x_res();
  return m;
}

inline Mat sp_tau(const Field& F, unsigned n) {
  Mat m = mat_identity(F, 2 * n);
  m.at(0, 1) = F.one();
  return m;
}

inline Mat sp_sigma(const Field& F, unsigned n) {
  Mat m = mat_identity(F, 2 * n);
  m.at(detail::sp_e(1), detail::sp_e(2)) = F.one();
  m.at(detail::sp_f(2), detail::sp_f(1)) = F.neg(F.one());
  return m;
}

inline Mat sp_U(const Field& F, unsigned n) {
  Mat m = mat_identity(F, 2 * n);
  for (unsigned r : {0u, 1u, 2u, 3u}) m.at(r, r) = 0;
  m.at(detail::sp_e(1), detail::sp_e(2)) = F.one();
  m.at(detail::sp_e(2), detail::sp_e(1)) = F.one();
  m.at(detail::sp_f(1), detail::sp_f(2)) = F.one();
  m.at(detail::sp_f(2), detail::sp_f(1)) = F.one();
  return m;
}

inline Mat sp_V(const Field& F, unsigned n) {
  if (n == 2) return sp_U(F, n);
  Mat m(2 * n);
  for (unsigned i = 1; i <= n; ++i) {
    unsigned j = (i % n) + 1;
    m.at(detail::sp_e(i), detail::sp_e(j)) = F.one();
    m.at(detail::sp_f(i), detail::sp_f(j)) = F.one();
  }
  return m;
}

// The invariant alternating form: <e_i, f_i> = 1.
inline FormSpec sp_form(const Field& F, unsigned n) {
  FormSpec form;
  form.kind = FormKind::Symplectic;
  form.gram = Mat(2 * n);
  for (unsigned i = 1; i <= n; ++i) {
    form.gram.at(detail::sp_e(i), detail::sp_f(i)) = F.one();
    form.gram.at(detail::sp_f(i), detail::sp_e(i)) = F.neg(F.one());
  }
  return form;
}

// Generators in presentation order: {sigma, tau, Z, U, V} over a prime
// field, {sigma, tau, delta, Z, U, V} otherwise; V omitted for n = 2.
inline std::vector<Mat> sp_presentation_matrices(const Field& F, unsigned d) {
  unsigned n = d / 2;
  std::vector<Mat> gens{sp_sigma(F, n), sp_tau(F, n)};
  if (F.e > 1) gens.push_back(sp_delta(F, n));
  gens.push_back(sp_Z(F, n));
  gens.push_back(sp_U(F, n));
  if (n > 2) gens.push_back(sp_V(F, n));
  return gens;
}

// Generators {delta, Z, U, V} of the monomial subgroup N; V omitted for n = 2.
inline std::vector<Mat> sp_torus_matrices(const Field& F, unsigned d) {
  unsigned n = d / 2;
  std::vector<Mat> gens{sp_delta(F, n), sp_Z(F, n), sp_U(F, n)};
  if (n > 2) gens.push_back(sp_V(F, n));
  return gens;
}

// ---- derived constants -------------------------------------------------------

// |Z(Sp(2n,q))| = gcd(q-1, 2).
inline u64 sp_center_order(u64 q) { return q % 2 ? 2 : 1; }

// |N| = (2(q-1))^n n!.
inline u64 sp_torus_order(unsigned d, u64 q) {
  unsigned n = d / 2;
  u64 m = 1;
  for (unsigned i = 0; i < n; ++i) m *= 2 * (q - 1);
  for (unsigned i = 2; i <= n; ++i) m *= i;
  return m;
}

// ---- relator blocks ----------------------------------------------------------

// The subgroup N1 = <Z, U, V> (C2 or C4 wr Sn):
//   (i)   Sn on {U, V} (just U^2 = 1 for n = 2),
//   (ii)  Z^2 = 1 (even q) or Z^4 = 1 (odd q),
//   (iii) [Z, U^V] = 1 (n > 2) and [Z, VU] = 1 (n > 3),
//   (iv)  [Z, Z^U] = 1;
// and, when delta generates alongside, the full N = K wr Sn:
//   (v)   delta^{q-1} = 1 (even q) or delta^{(q-1)/2} = Z^2 (odd q),
//         and delta^Z = delta^{-1},
//   (vi)  [delta, U^V] = 1 (n > 2) and [delta, VU] = 1 (n > 3),
//   (vii) [Z, delta^U] = [delta, delta^U] = 1.
// Inside the full group presentation the torus relations (ii) and (v)
// follow from the base case on {tau, delta, Z} and are omitted.
inline void add_sp_monomial_relators(PresBuilder& B, unsigned n, u64 q, const Expr& delta,
                                     const Expr& Z, const Expr& U, const Expr& V,
                                     bool with_delta, bool omit_implied) {
  if (n < 2) detail::fail("the symplectic monomial relators need rank at least 2");
  const RelatorTag tn = RelatorTag::TorusNormaliser;
  if (n == 2)
    B.rel("U^2", tn, pw(U, 2));
  else
    add_sym_relators(B, n, U, V);
  if (!omit_implied) {
    unsigned m = (q % 2) ? 4 : 2;
    B.rel("Z^" + std::to_string(m), tn, pw(Z, m));
  }
  if (n > 2) B.rel("[Z,U^V]", tn, cm(Z, cj(U, V)));
  if (n > 3) B.rel("[Z,VU]", tn, cm(Z, V * U));
  B.rel("[Z,Z^U]", tn, cm(Z, cj(Z, U)));
  if (!with_delta) return;
  if (!omit_implied) {
    if (q % 2 == 0)
      B.rel("delta^" + std::to_string(q - 1), tn, pw(delta, static_cast<i64>(q - 1)));
    else
      B.rel_eq("delta^" + std::to_string((q - 1) / 2) + "=Z^2", tn,
               pw(delta, static_cast<i64>((q - 1) / 2)), pw(Z, 2));
    B.rel_eq("delta^Z=delta^-1", tn, cj(delta, Z), iv(delta));
  }
  if (n > 2) B.rel("[delta,U^V]", tn, cm(delta, cj(U, V)));
  if (n > 3) B.rel("[delta,VU]", tn, cm(delta, V * U));
  B.rel("[Z,delta^U]", tn, cm(Z, cj(delta, U)));
  B.rel("[delta,delta^U]", tn, cm(delta, cj(delta, U)));
}

// Words generating the centraliser in N of sigma, of index 2n(n-1)(q-1):
// K x (K wr S_{n-2}), the extra K being <delta delta^V, ZUZ^{-1}>.
inline std::vector<std::pair<std::string, Expr>> sp_sigma_centraliser_exprs(unsigned n,
                                                                            const Expr& delta,
                                                                            const Expr& Z,
                                                                            const Expr& U,
                                                                            const Expr& V,
                                                                            bool with_delta) {
  std::vector<std::pair<std::string, Expr>> ws;
  ws.emplace_back("ZUZ^-1", Z * U * iv(Z));
  if (n > 3) ws.emplace_back("U^V^2", cj(U, pw(V, 2)));
  if (n > 4) ws.emplace_back("VUU^V", V * U * cj(U, V));
  if (n > 2) ws.emplace_back("Z^V^2", cj(Z, pw(V, 2)));
  if (with_delta && n > 2) ws.emplace_back("delta^V^2", cj(delta, pw(V, 2)));
  if (with_delta) ws.emplace_back("delta delta^V", delta * cj(delta, V));
  return ws;
}

// Words generating the centraliser in N of tau, of index 2n(q-1) for even
// q and n(q-1) for odd q: K wr S_{n-1}, times <Z^2> when q is odd.
inline std::vector<std::pair<std::string, Expr>> sp_tau_centraliser_exprs(unsigned n, u64 q,
                                                                          const Expr& delta,
                                                                          const Expr& Z,
                                                                          const Expr& U,
                                                                          const Expr& V,
                                                                          bool with_delta) {
  std::vector<std::pair<std::string, Expr>> ws;
  ws.emplace_back("Z^U", cj(Z, U));
  if (n > 2) ws.emplace_back("U^V", cj(U, V));
  if (n > 3) ws.emplace_back("VU", V * U);
  if (q % 2) ws.emplace_back("Z^2", pw(Z, 2));
  if (with_delta) ws.emplace_back("delta^U", cj(delta, U));
  return ws;
}

// The Steinberg commutator instances for s = t = 1, (i,j,k,l) = (1,2,3,4):
//   (a) [sigma, sigma^V] = sigma^{VU}        (n > 2)
//   (b) [sigma, sigma^{VU}] = 1              (n > 2)
//   (c) [sigma, sigma^{UV}] = 1              (n > 2)
//   (d) [sigma, sigma^{V^2}] = 1             (n > 3)
//   (e) [sigma, sigma^Z] = (tau^2)^{ZU} (odd q) or 1 (even q)
//   (f) [sigma, tau] = 1
//   (g) [sigma, tau^U] = sigma^{Z^U} tau^{-1}
//   (h) [sigma, tau^{V^2}] = 1               (n > 2)
//   (j) [tau, tau^U] = 1
inline void add_sp_steinberg_relators(PresBuilder& B, unsigned n, u64 q, const Expr& sigma,
                                      const Expr& tau, const Expr& Z, const Expr& U,
                                      const Expr& V) {
  const RelatorTag st = RelatorTag::Steinberg;
  if (n > 2) {
    B.rel_eq("[sigma,sigma^V]=sigma^VU", st, cm(sigma, cj(sigma, V)), cj(sigma, V * U));
    B.rel("[sigma,sigma^VU]", st, cm(sigma, cj(sigma, V * U)));
    B.rel("[sigma,sigma^UV]", st, cm(sigma, cj(sigma, U * V)));
  }
  if (n > 3) B.rel("[sigma,sigma^V^2]", st, cm(sigma, cj(sigma, pw(V, 2))));
  if (q % 2)
    B.rel_eq("[sigma,sigma^Z]=tau^2ZU", st, cm(sigma, cj(sigma, Z)), cj(pw(tau, 2), Z * U));
  else
    B.rel("[sigma,sigma^Z]", st, cm(sigma, cj(sigma, Z)));
  B.rel("[sigma,tau]", st, cm(sigma, tau));
  B.rel_eq("[sigma,tau^U]=sigma^Z^U tau^-1", st, cm(sigma, cj(tau, U)),
           cj(sigma, cj(Z, U)) * iv(tau));
  if (n > 2) B.rel("[sigma,tau^V^2]", st, cm(sigma, cj(tau, pw(V, 2))));
  B.rel("[tau,tau^U]", st, cm(tau, cj(tau, U)));
}

// ---- presentations -----------------------------------------------------------

inline Presentation present_sp(const Field& F, unsigned d, bool quotient) {
  GroupSpec g{Family::Sp, d, F.q, quotient};
  validate_group_spec(g);
  const unsigned n = d / 2;
  const u64 q = F.q;
  const bool odd = q % 2;
  PresBuilder B(group_name(g));
  const RelatorTag ce = RelatorTag::Centraliser;

  Expr sigma = B.gen("sigma");
  Expr tau = B.gen("tau");
  Expr delta = (F.e > 1) ? B.gen("delta") : expr_one();
  Expr Z = B.gen("Z");
  Expr U = B.gen("U");
  Expr V = (n > 2) ? B.gen("V") : U;

  const bool ext = F.e > 1;
  // Monomial block: for e > 1 the torus relations are implied by the base
  // case on {tau, delta, Z}; over a prime field N1 is presented in full.
  add_sp_monomial_relators(B, n, q, delta, Z, U, V, /*with_delta=*/ext,
                           /*omit_implied=*/ext);

  // Centraliser relations; [tau,VU] is implied for odd q and omitted.
  for (const auto& [wn, w] : sp_sigma_centraliser_exprs(n, delta, Z, U, V, ext))
    B.rel("[sigma," + wn + "]", ce, cm(sigma, w));
  if (!ext && odd) B.rel("[sigma,[Z^2,U]]", ce, cm(sigma, cm(pw(Z, 2), U)));
  for (const auto& [wn, w] : sp_tau_centraliser_exprs(n, q, delta, Z, U, V, ext)) {
    if (odd && wn == "VU") continue;
    B.rel("[tau," + wn + "]", ce, cm(tau, w));
  }

  // Base case on {sigma, Delta, U'} acting on <e1, e2>.
  Expr Up = odd ? B.aux("U'", U * pw(Z, 2)) : U;
  if (ext) {
    Expr Delta = B.aux("Delta", cm(U, delta));
    add_sl2_relators(B, F, false, sigma, Delta, Up, "sigma.", RelatorTag::BaseCase);
  } else {
    add_sl2_relators(B, F, false, sigma, expr_one(), Up, "sigma.", RelatorTag::BaseCase);
  }
  // Base case on {tau, delta, Z} acting on <e1, f1>.
  add_sl2_relators(B, F, false, tau, delta, Z, "tau.", RelatorTag::BaseCase);

  add_sp_steinberg_relators(B, n, q, sigma, tau, Z, U, V);

  if (quotient && odd)
    B.rel("(ZV)^" + std::to_string(2 * n), RelatorTag::CenterKill, pw(Z * V, 2 * n));
  return B.take();
}

// Presentation of the monomial subgroup N = <delta, Z, U, V> (V omitted
// for n = 2), of order (2(q-1))^n n!; with `quotient` the centre of
// Sp(2n,q) (which lies in N) is killed.
inline Presentation present_sp_torus(unsigned d, u64 q, bool quotient) {
  GroupSpec g{Family::Sp, d, q, quotient};
  validate_group_spec(g);
  const unsigned n = d / 2;
  PresBuilder B("N(" + group_name(g) + ")");
  Expr delta = B.gen("delta");
  Expr Z = B.gen("Z");
  Expr U = B.gen("U");
  Expr V = (n > 2) ? B.gen("V") : U;
  add_sp_monomial_relators(B, n, q, delta, Z, U, V, /*with_delta=*/true,
                           /*omit_implied=*/false);
  if (quotient && q % 2)
    B.rel("(ZV)^" + std::to_string(2 * n), RelatorTag::CenterKill, pw(Z * V, 2 * n));
  return B.take();
}

// Centraliser words for the designated (short) root element sigma, over
// the torus-generator alphabet {delta, Z, U, V} ({delta, Z, U} for n = 2).
inline std::vector<Slp> sp_centraliser_words(const Field& F, unsigned d) {
  unsigned n = d / 2;
  Expr delta = expr_gen(0), Z = expr_gen(1), U = expr_gen(2);
  Expr V = (n > 2) ? expr_gen(3) : U;
  std::vector<Slp> out;
  for (const auto& named : sp_sigma_centraliser_exprs(n, delta, Z, U, V, true))
    out.push_back(compile_expr(named.second));
  return out;
}

// Centraliser words for the long root element tau, same alphabet.
inline std::vector<Slp> sp_tau_centraliser_words(const Field& F, unsigned d) {
  unsigned n = d / 2;
  Expr delta = expr_gen(0), Z = expr_gen(1), U = expr_gen(2);
  Expr V = (n > 2) ? expr_gen(3) : U;
  std::vector<Slp> out;
  for (const auto& named : sp_tau_centraliser_exprs(n, F.q, delta, Z, U, V, true))
    out.push_back(compile_expr(named.second));
  return out;
}

// The generator of Z(Sp(2n,q)) as a word over the presentation
// generators: (ZV)^{2n} = -1, trivial in even characteristic.
inline Slp sp_central_word(const Field& F, unsigned d) {
  unsigned n = d / 2;
  unsigned zi = (F.e > 1) ? 3 : 2;
  Expr Z = expr_gen(zi);
  Expr V = (n > 2) ? expr_gen(zi + 2) : expr_gen(zi + 1);
  return compile_expr(pw(Z * V, 2 * n));
}

}  // namespace clasp
