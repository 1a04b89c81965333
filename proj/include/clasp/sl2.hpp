#pragma once
// Presentation, matrices, and torus-normaliser data for SL(2,q) and its
// central quotient.  This is the base case for the linear family and is
// embedded (with its generators replaced by words) into the higher-rank
// presentations.
//
// Generators: tau = [[1,1],[0,1]], delta = diag(w^-1, w), U = [[0,1],[-1,0]],
// where w is the chosen primitive element.  delta conjugation sends
// tau(alpha) to tau(alpha w^2), so conjugates of tau realise tau at even
// powers of w; tau_1, standing for tau(w), needs its own definition and the
// odd powers are conjugates of it.
//
// Case split for the relators:
//   q = 2                the three-relator {tau, U} presentation;
//   q = p (odd prime)    the two-relator {tau, U} presentations, split on
//                        p mod 3 (quotient adds U^2 = 1);
//   q = 2^e, e > 1       the {tau, delta, U} presentation with constant m
//                        solving w^{2m} = 1 + w^2 and the minimal
//                        polynomial of w^2 as exponent pattern;
//   q odd, e > 1         the {tau, delta, U} presentations with tau_1
//                        defined either by coordinates of w over the basis
//                        {w^{2i}} (q = 1 mod 4) or as the inverse of a
//                        conjugate of tau (q = 3 mod 4, where -w is an even
//                        power of w); the matrix group and its quotient
//                        differ in four relators.

#include <string>
#include <vector>

#include "clasp/groupspec.hpp"
#include "clasp/slp.hpp"

namespace clasp {

// ---- matrices ----------------------------------------------------------

inline Mat sl2_tau(const Field& F) {
  Mat m = mat_identity(F, 2);
  m.at(0, 1) = F.one();
  return m;
}

inline Mat sl2_delta(const Field& F) {
  Mat m(2);
  FF w = F.x_res();
  m.at(0, 0) = F.inv(w);
  m.at(1, 1) = w;
  return m;
}

inline Mat sl2_U(const Field& F) {
  Mat m(2);
  m.at(0, 1) = F.one();
  m.at(1, 0) = F.neg(F.one());
  return m;
}

// Generators in presentation order: {tau, U} over a prime field, where
// delta is a word rather than a generator, and {tau, delta, U} otherwise.
inline std::vector<Mat> sl2_presentation_matrices(const Field& F) {
  if (F.e == 1) return {sl2_tau(F), sl2_U(F)};
  return {sl2_tau(F), sl2_delta(F), sl2_U(F)};
}

// ---- derived constants --------------------------------------------------

namespace detail {

// Coordinates a_i of w in the GF(p)-basis {1, w^2, w^4, ..., w^{2(e-1)}}
// of GF(q), valid for odd q = p^e with e > 1.
inline std::vector<u64> omega_even_basis_coords(const Field& F) {
  Field P = Field::with_least_primitive_modulus(F.p, 1);
  Mat B(F.e);
  FF w = F.x_res();
  FF w2 = F.mul(w, w);
  FF pw = F.one();
  for (unsigned i = 0; i < F.e; ++i) {
    std::vector<u64> c = F.coeffs(pw);
    for (unsigned j = 0; j < F.e; ++j) B.at(i, j) = static_cast<FF>(c[j]);
    pw = F.mul(pw, w2);
  }
  Mat Binv = mat_inverse(P, B);
  std::vector<u64> wv = F.coeffs(w);
  std::vector<u64> a(F.e);
  for (unsigned j = 0; j < F.e; ++j) {
    FF s = P.zero();
    for (unsigned i = 0; i < F.e; ++i) s = P.add(s, P.mul(static_cast<FF>(wv[i]), Binv.at(i, j)));
    a[j] = s;
  }
  // Defensive re-check of the basis property.
  FF acc = F.zero();
  pw = F.one();
  for (unsigned i = 0; i < F.e; ++i) {
    acc = F.add(acc, F.mul(F.from_int(static_cast<i64>(a[i])), pw));
    pw = F.mul(pw, w2);
  }
  if (acc != w) fail("even-power basis coordinates failed to reproduce the generator");
  return a;
}

}  // namespace detail

// delta as a word in tau and U over a prime field, where the primitive
// element is an integer:
//   delta = (tau^(w-w^2))^U tau^(w^-1) (tau^(w-1))^U tau^-1,
// which degenerates to the identity for p = 2 and to U^2 for p = 3.
inline Expr sl2_delta_word(const Field& F, const Expr& tau, const Expr& U) {
  if (F.e != 1) detail::fail("the delta word applies to prime fields only");
  i64 p = static_cast<i64>(F.p);
  i64 g = static_cast<i64>(F.x_res());
  i64 a = ((g - g * g) % p + p) % p;
  i64 b = static_cast<i64>(detail::powmod_u64(F.x_res(), F.p - 2, F.p));
  i64 c = ((g - 1) % p + p) % p;
  return cj(pw(tau, a), U) * pw(tau, b) * cj(pw(tau, c), U) * iv(tau);
}

// ---- relators ------------------------------------------------------------

// Appends the SL(2,q) (or central-quotient) relators on the given words.
// Over a prime field the word `delta` is not used.  `tau_free_tag` labels the
// relators not involving tau: standalone these form the torus-normaliser
// block, but when the SL(2,q) relators embed as the base case of a
// higher-dimensional presentation the whole set counts as base-case.
inline void add_sl2_relators(PresBuilder& B, const Field& F, bool quotient, const Expr& tau,
                             const Expr& delta, const Expr& U, const std::string& pre = "",
                             RelatorTag tau_free_tag = RelatorTag::TorusNormaliser) {
  const u64 q = F.q;
  const u64 p = F.p;
  const unsigned e = F.e;
  const RelatorTag bc = RelatorTag::BaseCase;
  const RelatorTag tn = tau_free_tag;

  if (q == 2) {
    B.rel(pre + "(tau U)^3", bc, pw(tau * U, 3));
    B.rel(pre + "U^2", tn, pw(U, 2));
    B.rel(pre + "tau^2", bc, pw(tau, 2));
    return;
  }

  if (e == 1) {
    i64 k = static_cast<i64>(p / 3);
    i64 ip = static_cast<i64>(p);
    if (p % 3 == 1) {
      Expr a = tau * pw(U, 2);
      B.rel_eq(pre + "U^2=(U tau U^2)^3", bc, pw(U, 2), pw(U * a, 3));
      B.rel(pre + "power-relator", bc,
            pw(U * pw(a, 4) * U * pw(a, (ip + 1) / 2), 2) * pw(a, ip) * pw(U, 2 * k));
    } else {
      B.rel_eq(pre + "U^-2=(U^-1 tau)^3", bc, pw(U, -2), pw(iv(U) * tau, 3));
      B.rel(pre + "power-relator", bc,
            pw(iv(U) * pw(tau, 4) * iv(U) * pw(tau, (ip + 1) / 2), 2) * pw(tau, ip) *
                pw(U, -2 * k));
    }
    if (quotient) B.rel(pre + "U^2", RelatorTag::CenterKill, pw(U, 2));
    return;
  }

  FF w = F.x_res();

  if (p == 2) {
    // m solves w^{2m} = 1 + w^2; the exponent pattern is the minimal
    // polynomial of w^2 (primitive, since q - 1 is odd).
    FF w2 = F.mul(w, w);
    u64 L = discrete_log(F, F.add(F.one(), w2), w);
    u64 m = (L % (q - 1)) * (q / 2) % (q - 1);
    Poly f = minimal_polynomial(F, w2);
    B.rel(pre + "(U tau)^3", bc, pw(U * tau, 3));
    B.rel(pre + "U^2", tn, pw(U, 2));
    B.rel(pre + "(U delta)^2", tn, pw(U * delta, 2));
    B.rel(pre + "(tau delta)^(q-1)", bc, pw(tau * delta, static_cast<i64>(q) - 1));
    B.rel(pre + "tau^2", bc, pw(tau, 2));
    B.rel_eq(pre + "tau^delta^m=[tau,delta]", bc, cj(tau, pw(delta, static_cast<i64>(m))),
             cm(tau, delta));
    Expr prod = expr_one();
    for (size_t i = 0; i < f.c.size(); ++i)
      if (f.c[i]) prod = prod * cj(tau, pw(delta, static_cast<i64>(i)));
    B.rel(pre + "tau^f(t)", bc, prod);
    return;
  }

  // Odd q, e > 1.  Shared constants: minimal polynomial of w, and m with
  // w^{2m} = 1 + w (when 1 + w is a square) or w^{2m+1} = 1 + w.
  Poly f = minimal_polynomial(F, w);
  u64 L = discrete_log(F, F.add(F.one(), w), w);
  bool square = (L % 2 == 0);
  u64 m = square ? L / 2 : (L - 1) / 2;

  Expr tau1;
  if (q % 4 == 1) {
    std::vector<u64> a = detail::omega_even_basis_coords(F);
    Expr def = expr_one();
    for (unsigned i = 0; i < F.e; ++i) {
      if (!a[i]) continue;
      def = def * cj(pw(tau, static_cast<i64>(a[i])), pw(delta, i));
    }
    tau1 = B.aux(pre + "tau_1", def);
  } else {
    // -w = w^{(q+1)/2} is an even power of w, so tau(w) is the inverse of
    // a plain conjugate of tau.
    tau1 = B.aux(pre + "tau_1", iv(cj(tau, pw(delta, static_cast<i64>((q + 1) / 4)))));
  }

  // tau_i realises tau(w^i): conjugates of tau at even i, of tau_1 at odd.
  Expr fprod = expr_one();
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (!f.c[i]) continue;
    const Expr& base = (i % 2 == 0) ? tau : tau1;
    fprod = fprod * cj(pw(base, static_cast<i64>(f.c[i])), pw(delta, static_cast<i64>(i / 2)));
  }

  if (q % 4 == 1) {
    if (quotient) {
      B.rel(pre + "(tau U)^3", bc, pw(tau * U, 3));
      B.rel(pre + "(U delta)^2", tn, pw(U * delta, 2));
      B.rel(pre + "U^2", tn, pw(U, 2));
      B.rel(pre + "delta^((q-1)/2)", tn, pw(delta, static_cast<i64>((q - 1) / 2)));
    } else {
      B.rel_eq(pre + "(tau U^-1)^3=U^2", bc, pw(tau * iv(U), 3), pw(U, 2));
      B.rel_eq(pre + "(U delta)^2=U^2", tn, pw(U * delta, 2), pw(U, 2));
      B.rel(pre + "U^4", tn, pw(U, 4));
      B.rel_eq(pre + "delta^((q-1)/2)=U^2", tn, pw(delta, static_cast<i64>((q - 1) / 2)),
               pw(U, 2));
    }
    B.rel(pre + "(tau_1 U delta)^3", bc, pw(tau1 * U * delta, 3));
    B.rel(pre + "tau^p", bc, pw(tau, static_cast<i64>(p)));
    B.rel(pre + "[tau,tau_1]", bc, cm(tau, tau1));
    B.rel(pre + "[tau_1,tau^delta]", bc, cm(tau1, cj(tau, delta)));
    B.rel(pre + "tau^f(t)", bc, fprod);
    if (square) {
      B.rel_eq(pre + "tau^delta^m=tau tau_1", bc, cj(tau, pw(delta, static_cast<i64>(m))),
               tau * tau1);
      B.rel_eq(pre + "tau_1^delta^m=tau_1 tau^delta", bc,
               cj(tau1, pw(delta, static_cast<i64>(m))), tau1 * cj(tau, delta));
    } else {
      B.rel_eq(pre + "tau_1^delta^m=tau tau_1", bc, cj(tau1, pw(delta, static_cast<i64>(m))),
               tau * tau1);
      B.rel_eq(pre + "tau^delta^(m+1)=tau_1 tau^delta", bc,
               cj(tau, pw(delta, static_cast<i64>(m + 1))), tau1 * cj(tau, delta));
    }
    return;
  }

  // q = 3 mod 4.
  if (quotient) {
    B.rel(pre + "(tau U)^3", bc, pw(tau * U, 3));
    B.rel(pre + "(U delta)^2", tn, pw(U * delta, 2));
    B.rel(pre + "U^2", tn, pw(U, 2));
    B.rel_eq(pre + "delta^((q-1)/2)=tau^p", bc, pw(delta, static_cast<i64>((q - 1) / 2)),
             pw(tau, static_cast<i64>(p)));
  } else {
    B.rel_eq(pre + "(tau U^-1)^3=U^2", bc, pw(tau * iv(U), 3), pw(U, 2));
    B.rel_eq(pre + "(U delta)^2=U^2", tn, pw(U * delta, 2), pw(U, 2));
    B.rel(pre + "U^4", tn, pw(U, 4));
    B.rel_eq(pre + "delta^((q-1)/2)=tau^p U^2", bc, pw(delta, static_cast<i64>((q - 1) / 2)),
             pw(tau, static_cast<i64>(p)) * pw(U, 2));
  }
  B.rel(pre + "[tau,tau^delta^((q+1)/4)]", bc,
        cm(tau, cj(tau, pw(delta, static_cast<i64>((q + 1) / 4)))));
  B.rel(pre + "tau^f(t)", bc, fprod);
  u64 r = square ? (q + 1) / 4 : (q - 3) / 4;
  B.rel_eq(pre + "tau^delta^m=[tau^-1,delta^r]", bc, cj(tau, pw(delta, static_cast<i64>(m))),
           cm(iv(tau), pw(delta, static_cast<i64>(r))));
}

inline Presentation present_sl2(const Field& F, bool quotient) {
  GroupSpec g{Family::SL, 2, F.q, quotient};
  validate_group_spec(g);
  PresBuilder B(group_name(g));
  Expr tau = B.gen("tau");
  Expr delta;
  if (F.e > 1) delta = B.gen("delta");
  Expr U = B.gen("U");
  add_sl2_relators(B, F, quotient, tau, delta, U);
  return B.take();
}

// ---- torus normaliser -----------------------------------------------------

// N = <delta, U> has order 2(q-1): generalised quaternion Q_{2(q-1)} for
// odd q (U^2 = delta^{(q-1)/2} = -I), dihedral D_{2(q-1)} for even q.
// The central quotient for odd q is dihedral of order q-1.
inline void add_sl2_torus_relators(PresBuilder& B, u64 q, bool quotient, const Expr& delta,
                                   const Expr& U, const std::string& pre = "") {
  bool odd = (q % 2 == 1);
  u64 n = (odd && quotient) ? (q - 1) / 2 : q - 1;
  B.rel(pre + "delta^" + std::to_string(n), RelatorTag::TorusNormaliser, pw(delta, static_cast<i64>(n)));
  B.rel_eq(pre + "delta^U=delta^-1", RelatorTag::TorusNormaliser, cj(delta, U), iv(delta));
  if (odd && !quotient)
    B.rel_eq(pre + "U^2=delta^((q-1)/2)", RelatorTag::TorusNormaliser, pw(U, 2),
             pw(delta, static_cast<i64>((q - 1) / 2)));
  else
    B.rel(pre + "U^2", RelatorTag::TorusNormaliser, pw(U, 2));
}

inline Presentation present_sl2_torus(u64 q, bool quotient) {
  GroupSpec g{Family::SL, 2, q, quotient};
  validate_group_spec(g);
  PresBuilder B("N(" + group_name(g) + ")");
  Expr delta = B.gen("delta");
  Expr U = B.gen("U");
  add_sl2_torus_relators(B, q, quotient, delta, U);
  return B.take();
}

// Words generating the centraliser in N of the root element tau: the
// scalar U^2 for odd q, trivial in even characteristic.
inline std::vector<Expr> sl2_tau_centraliser_words(const Field& F, const Expr& /*delta*/,
                                                   const Expr& U) {
  if (F.p == 2) return {};
  return {pw(U, 2)};
}

}  // namespace clasp
