#pragma once
// Exact dense matrices over a runtime finite field, the classical form
// kinds the generator sets preserve, and the quotient-detecting
// invariants: Dickson rank parity in even characteristic, spinor norm by
// reflection factorisation in odd characteristic.

#include <functional>
#include <optional>

#include "clasp/field.hpp"

namespace clasp {

struct Mat {
  unsigned d = 0;
  std::vector<FF> a;  // row-major, d*d

  Mat() = default;
  explicit Mat(unsigned dim) : d(dim), a(static_cast<size_t>(dim) * dim, 0) {}

  FF& at(unsigned i, unsigned j) { return a[static_cast<size_t>(i) * d + j]; }
  FF at(unsigned i, unsigned j) const { return a[static_cast<size_t>(i) * d + j]; }
  bool operator==(const Mat& o) const { return d == o.d && a == o.a; }
};

inline Mat mat_identity(const Field& F, unsigned d) {
  Mat m(d);
  for (unsigned i = 0; i < d; ++i) m.at(i, i) = F.one();
  return m;
}

inline bool mat_is_identity(const Field& F, const Mat& m) {
  for (unsigned i = 0; i < m.d; ++i)
    for (unsigned j = 0; j < m.d; ++j)
      if (m.at(i, j) != (i == j ? F.one() : F.zero())) return false;
  return true;
}

inline Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
  if (x.d != y.d) detail::fail("matrix dimension mismatch");
  unsigned d = x.d;
  Mat r(d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned k = 0; k < d; ++k) {
      FF c = x.at(i, k);
      if (!c) continue;
      for (unsigned j = 0; j < d; ++j) {
        FF t = y.at(k, j);
        if (t) r.at(i, j) = F.add(r.at(i, j), F.mul(c, t));
      }
    }
  return r;
}

inline Mat mat_transpose(const Mat& m) {
  Mat r(m.d);
  for (unsigned i = 0; i < m.d; ++i)
    for (unsigned j = 0; j < m.d; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

// Entrywise k-th power (the hermitian conjugation alpha -> alpha^q).
inline Mat mat_entry_pow(const Field& F, const Mat& m, u64 k) {
  Mat r(m.d);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = F.powe128(m.a[i], static_cast<i128>(k));
  return r;
}

inline Mat mat_scalar_mul(const Field& F, FF c, const Mat& m) {
  Mat r(m.d);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = F.mul(c, m.a[i]);
  return r;
}

// Gauss-Jordan inverse; Error on singular input.
inline Mat mat_inverse(const Field& F, const Mat& m) {
  unsigned d = m.d;
  Mat a = m, r = mat_identity(F, d);
  for (unsigned col = 0; col < d; ++col) {
    unsigned piv = col;
    while (piv < d && a.at(piv, col) == 0) ++piv;
    if (piv == d) detail::fail("matrix is singular");
    if (piv != col)
      for (unsigned j = 0; j < d; ++j) {
        std::swap(a.a[static_cast<size_t>(piv) * d + j], a.a[static_cast<size_t>(col) * d + j]);
        std::swap(r.a[static_cast<size_t>(piv) * d + j], r.a[static_cast<size_t>(col) * d + j]);
      }
    FF inv = F.inv(a.at(col, col));
    for (unsigned j = 0; j < d; ++j) {
      a.at(col, j) = F.mul(a.at(col, j), inv);
      r.at(col, j) = F.mul(r.at(col, j), inv);
    }
    for (unsigned i = 0; i < d; ++i) {
      if (i == col) continue;
      FF c = a.at(i, col);
      if (!c) continue;
      for (unsigned j = 0; j < d; ++j) {
        a.at(i, j) = F.sub(a.at(i, j), F.mul(c, a.at(col, j)));
        r.at(i, j) = F.sub(r.at(i, j), F.mul(c, r.at(col, j)));
      }
    }
  }
  return r;
}

inline FF mat_det(const Field& F, Mat a) {
  unsigned d = a.d;
  FF det = F.one();
  for (unsigned col = 0; col < d; ++col) {
    unsigned piv = col;
    while (piv < d && a.at(piv, col) == 0) ++piv;
    if (piv == d) return F.zero();
    if (piv != col) {
      for (unsigned j = 0; j < d; ++j)
        std::swap(a.a[static_cast<size_t>(piv) * d + j], a.a[static_cast<size_t>(col) * d + j]);
      det = F.neg(det);
    }
    det = F.mul(det, a.at(col, col));
    FF inv = F.inv(a.at(col, col));
    for (unsigned i = col + 1; i < d; ++i) {
      FF c = F.mul(a.at(i, col), inv);
      if (!c) continue;
      for (unsigned j = col; j < d; ++j) a.at(i, j) = F.sub(a.at(i, j), F.mul(c, a.at(col, j)));
    }
  }
  return det;
}

inline unsigned mat_rank(const Field& F, Mat a) {
  unsigned d = a.d, rank = 0;
  for (unsigned col = 0; col < d && rank < d; ++col) {
    unsigned piv = rank;
    while (piv < d && a.at(piv, col) == 0) ++piv;
    if (piv == d) continue;
    if (piv != rank)
      for (unsigned j = 0; j < d; ++j)
        std::swap(a.a[static_cast<size_t>(piv) * d + j], a.a[static_cast<size_t>(rank) * d + j]);
    FF inv = F.inv(a.at(rank, col));
    for (unsigned i = rank + 1; i < d; ++i) {
      FF c = F.mul(a.at(i, col), inv);
      if (!c) continue;
      for (unsigned j = col; j < d; ++j) a.at(i, j) = F.sub(a.at(i, j), F.mul(c, a.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

inline Mat mat_pow(const Field& F, Mat base, i64 k) {
  if (k < 0) {
    base = mat_inverse(F, base);
    k = -k;
  }
  Mat r = mat_identity(F, base.d);
  u64 n = static_cast<u64>(k);
  while (n) {
    if (n & 1) r = mat_mul(F, r, base);
    base = mat_mul(F, base, base);
    n >>= 1;
  }
  return r;
}

inline std::optional<FF> mat_is_scalar(const Field& F, const Mat& m) {
  FF lambda = m.at(0, 0);
  for (unsigned i = 0; i < m.d; ++i)
    for (unsigned j = 0; j < m.d; ++j)
      if (m.at(i, j) != (i == j ? lambda : F.zero())) return std::nullopt;
  return lambda;
}

inline size_t mat_hash(const Mat& m) {
  size_t h = 1469598103934665603ull ^ m.d;
  for (FF v : m.a) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---- forms ----

enum class FormKind {
  Linear,             // no form (special linear groups)
  Symplectic,         // alternating bilinear
  Hermitian,          // conjugate-symmetric over GF(q^2)
  SymmetricBilinear,  // plain symmetric bilinear (odd characteristic)
  QuadraticPlus,      // quadratic form of plus type
  QuadraticMinus,     // quadratic form of minus type
  QuadraticOdd        // quadratic form in odd dimension
};

inline bool form_kind_quadratic(FormKind k) {
  return k == FormKind::QuadraticPlus || k == FormKind::QuadraticMinus ||
         k == FormKind::QuadraticOdd;
}

struct FormSpec {
  FormKind kind = FormKind::Linear;
  Mat gram;                  // bilinear form matrix (polarisation for quadratic kinds)
  std::optional<Mat> quad;   // upper-triangular quadratic form matrix
  u64 conj_q = 0;            // hermitian conjugation exponent (0 = none)
};

inline FF form_bilinear(const Field& F, const FormSpec& form, const std::vector<FF>& u,
                        const std::vector<FF>& v) {
  FF s = 0;
  for (unsigned i = 0; i < form.gram.d; ++i) {
    if (!u[i]) continue;
    for (unsigned j = 0; j < form.gram.d; ++j) {
      FF g = form.gram.at(i, j);
      if (g && v[j]) s = F.add(s, F.mul(u[i], F.mul(g, v[j])));
    }
  }
  return s;
}

inline FF form_quadratic(const Field& F, const FormSpec& form, const std::vector<FF>& v) {
  if (!form.quad) detail::fail("form has no quadratic part");
  FF s = 0;
  for (unsigned i = 0; i < form.quad->d; ++i) {
    if (!v[i]) continue;
    for (unsigned j = i; j < form.quad->d; ++j) {
      FF g = form.quad->at(i, j);
      if (g && v[j]) s = F.add(s, F.mul(v[i], F.mul(g, v[j])));
    }
  }
  return s;
}

inline std::vector<FF> mat_row_apply(const Field& F, const std::vector<FF>& v, const Mat& m) {
  std::vector<FF> r(m.d, 0);
  for (unsigned i = 0; i < m.d; ++i) {
    if (!v[i]) continue;
    for (unsigned j = 0; j < m.d; ++j) {
      FF t = m.at(i, j);
      if (t) r[j] = F.add(r[j], F.mul(v[i], t));
    }
  }
  return r;
}

// M gram sigma(M)^T = gram, with sigma the hermitian conjugation when the
// form is hermitian; quadratic kinds additionally check Q on the basis and
// on all pairwise sums of basis vectors.
inline bool preserves_form(const Field& F, const Mat& m, const FormSpec& form) {
  if (form.kind == FormKind::Linear) return true;
  if (m.d != form.gram.d) detail::fail("matrix and form dimension mismatch");
  Mat rhs = form.kind == FormKind::Hermitian
                ? mat_transpose(mat_entry_pow(F, m, form.conj_q))
                : mat_transpose(m);
  Mat g = mat_mul(F, mat_mul(F, m, form.gram), rhs);
  if (!(g == form.gram)) return false;
  if (form_kind_quadratic(form.kind)) {
    unsigned d = m.d;
    auto basis = [&](unsigned i) {
      std::vector<FF> v(d, 0);
      v[i] = F.one();
      return v;
    };
    for (unsigned i = 0; i < d; ++i) {
      std::vector<FF> ei = basis(i);
      if (form_quadratic(F, form, mat_row_apply(F, ei, m)) != form_quadratic(F, form, ei))
        return false;
      for (unsigned j = i + 1; j < d; ++j) {
        std::vector<FF> v = basis(j);
        v[i] = F.one();
        if (form_quadratic(F, form, mat_row_apply(F, v, m)) != form_quadratic(F, form, v))
          return false;
      }
    }
  }
  return true;
}

namespace detail {

// Orthogonal basis of anisotropic vectors for a nondegenerate symmetric
// bilinear form in odd characteristic.
inline std::vector<std::vector<FF>> orthogonal_anisotropic_basis(const Field& F,
                                                                 const FormSpec& form) {
  unsigned d = form.gram.d;
  auto B = [&](const std::vector<FF>& u, const std::vector<FF>& v) {
    return form_bilinear(F, form, u, v);
  };
  std::vector<std::vector<FF>> span;
  for (unsigned i = 0; i < d; ++i) {
    std::vector<FF> v(d, 0);
    v[i] = F.one();
    span.push_back(v);
  }
  std::vector<std::vector<FF>> out;
  while (!span.empty()) {
    int pick = -1;
    for (size_t i = 0; i < span.size(); ++i)
      if (B(span[i], span[i]) != 0) { pick = static_cast<int>(i); break; }
    std::vector<FF> v;
    if (pick >= 0) {
      v = span[pick];
    } else {
      bool found = false;
      for (size_t i = 0; i < span.size() && !found; ++i)
        for (size_t j = i + 1; j < span.size() && !found; ++j)
          if (B(span[i], span[j]) != 0) {
            v.assign(d, 0);
            for (unsigned k = 0; k < d; ++k) v[k] = F.add(span[i][k], span[j][k]);
            found = true;
          }
      if (!found) fail("degenerate bilinear form");
    }
    FF bv = B(v, v);
    out.push_back(v);
    // Project the rest into v-perp and keep an independent subset.
    std::vector<std::vector<FF>> next;
    for (auto& w : span) {
      FF c = F.div(B(w, v), bv);
      std::vector<FF> wp(d);
      for (unsigned k = 0; k < d; ++k) wp[k] = F.sub(w[k], F.mul(c, v[k]));
      next.push_back(std::move(wp));
    }
    // Row-reduce next to an independent spanning set.
    std::vector<std::vector<FF>> basis;
    std::vector<int> pivots;
    for (auto& w : next) {
      std::vector<FF> r = w;
      for (size_t b = 0; b < basis.size(); ++b) {
        FF c = r[pivots[b]];
        if (!c) continue;
        FF f = F.div(c, basis[b][pivots[b]]);
        for (unsigned k = 0; k < d; ++k) r[k] = F.sub(r[k], F.mul(f, basis[b][k]));
      }
      int pv = -1;
      for (unsigned k = 0; k < d; ++k)
        if (r[k]) { pv = static_cast<int>(k); break; }
      if (pv >= 0) {
        basis.push_back(r);
        pivots.push_back(pv);
      }
    }
    span = std::move(basis);
  }
  return out;
}

inline Mat reflection_matrix(const Field& F, const FormSpec& form, const std::vector<FF>& w) {
  unsigned d = form.gram.d;
  FF bw = form_bilinear(F, form, w, w);
  if (bw == 0) fail("reflection vector must be anisotropic");
  FF two = F.from_int(2);
  Mat r = mat_identity(F, d);
  for (unsigned i = 0; i < d; ++i) {
    std::vector<FF> ei(d, 0);
    ei[i] = F.one();
    FF c = F.div(F.mul(two, form_bilinear(F, form, ei, w)), bw);
    for (unsigned j = 0; j < d; ++j) r.at(i, j) = F.sub(r.at(i, j), F.mul(c, w[j]));
  }
  return r;
}

}  // namespace detail

// Spinor norm representative: product of B(u,u) over a reflection
// factorisation of m (odd characteristic).  The square class is well
// defined on the special orthogonal group.
inline FF spinor_norm_rep(const Field& F, const Mat& m, const FormSpec& form) {
  if (F.p == 2) detail::fail("spinor norm requires odd characteristic");
  auto basis = detail::orthogonal_anisotropic_basis(F, form);
  auto B = [&](const std::vector<FF>& u, const std::vector<FF>& v) {
    return form_bilinear(F, form, u, v);
  };
  Mat a = m;
  FF s = F.one();
  for (auto& v : basis) {
    std::vector<FF> img = mat_row_apply(F, v, a);
    std::vector<FF> w(v.size());
    bool zero = true;
    for (size_t k = 0; k < v.size(); ++k) {
      w[k] = F.sub(img[k], v[k]);
      if (w[k]) zero = false;
    }
    if (zero) continue;
    FF bw = B(w, w);
    if (bw != 0) {
      a = mat_mul(F, a, detail::reflection_matrix(F, form, w));
      s = F.mul(s, bw);
    } else {
      std::vector<FF> u(v.size());
      for (size_t k = 0; k < v.size(); ++k) u[k] = F.add(img[k], v[k]);
      FF bu = B(u, u), bv = B(v, v);
      a = mat_mul(F, a, detail::reflection_matrix(F, form, u));
      a = mat_mul(F, a, detail::reflection_matrix(F, form, v));
      s = F.mul(s, F.mul(bu, bv));
    }
  }
  if (!mat_is_identity(F, a)) detail::fail("reflection factorisation failed");
  return s;
}

inline bool is_square(const Field& F, FF a) {
  if (a == 0) return true;
  if (F.p == 2) return true;
  return F.powe(a, static_cast<i64>((F.q - 1) / 2)) == F.one();
}

// Dickson invariant (even characteristic) or spinor norm bit (odd):
// 0 exactly on the kernel subgroup Omega.
inline int dickson_or_spinor(const Field& F, const Mat& m, const FormSpec& form) {
  if (!form_kind_quadratic(form.kind) && form.kind != FormKind::SymmetricBilinear)
    detail::fail("invariant defined only for orthogonal forms");
  if (F.p == 2) {
    Mat diff = m;
    for (unsigned i = 0; i < m.d; ++i) diff.at(i, i) = F.sub(diff.at(i, i), F.one());
    return static_cast<int>(mat_rank(F, diff) % 2);
  }
  return is_square(F, spinor_norm_rep(F, m, form)) ? 0 : 1;
}

}  // namespace clasp
