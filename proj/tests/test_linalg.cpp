#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "clasp/linalg.hpp"

using namespace clasp;

namespace {

Mat m_raw(const Field& F, std::vector<std::vector<u64>> rows) {
  Mat m(static_cast<unsigned>(rows.size()));
  for (unsigned i = 0; i < m.d; ++i)
    for (unsigned j = 0; j < m.d; ++j) {
      if (rows[i][j] >= F.q) throw std::runtime_error("bad packed entry");
      m.at(i, j) = rows[i][j];
    }
  return m;
}

Mat m_int(const Field& F, std::vector<std::vector<i64>> rows) {
  Mat m(static_cast<unsigned>(rows.size()));
  for (unsigned i = 0; i < m.d; ++i)
    for (unsigned j = 0; j < m.d; ++j) m.at(i, j) = F.from_int(rows[i][j]);
  return m;
}

template <class Fn>
void for_all_matrices(const Field& F, unsigned d, Fn&& fn) {
  u64 total = 1;
  for (unsigned i = 0; i < d * d; ++i) total *= F.q;
  Mat m(d);
  for (u64 code = 0; code < total; ++code) {
    u64 c = code;
    for (unsigned i = 0; i < d * d; ++i) {
      m.a[i] = c % F.q;
      c /= F.q;
    }
    fn(m);
  }
}

Mat random_matrix(const Field& F, unsigned d, std::mt19937_64& rng) {
  Mat m(d);
  for (auto& v : m.a) v = rng() % F.q;
  return m;
}

Mat random_invertible(const Field& F, unsigned d, std::mt19937_64& rng) {
  for (;;) {
    Mat m = random_matrix(F, d, rng);
    if (mat_det(F, m) != F.zero()) return m;
  }
}

}  // namespace

TEST_CASE("matrix arithmetic laws over a non-prime field") {
  Field F = Field::with_least_primitive_modulus(3, 2);  // GF(9)
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Mat a = random_matrix(F, 3, rng);
    Mat b = random_matrix(F, 3, rng);
    Mat c = random_matrix(F, 3, rng);
    REQUIRE(mat_mul(F, mat_mul(F, a, b), c) == mat_mul(F, a, mat_mul(F, b, c)));
    REQUIRE(mat_det(F, mat_mul(F, a, b)) == F.mul(mat_det(F, a), mat_det(F, b)));
    REQUIRE(mat_transpose(mat_mul(F, a, b)) ==
            mat_mul(F, mat_transpose(b), mat_transpose(a)));
  }
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = random_invertible(F, 3, rng);
    REQUIRE(mat_is_identity(F, mat_mul(F, a, mat_inverse(F, a))));
    REQUIRE(mat_is_identity(F, mat_mul(F, mat_inverse(F, a), a)));
    Mat p = mat_identity(F, 3);
    for (int k = 0; k <= 6; ++k) {
      REQUIRE(mat_pow(F, a, k) == p);
      p = mat_mul(F, p, a);
    }
    REQUIRE(mat_pow(F, a, -3) == mat_inverse(F, mat_pow(F, a, 3)));
  }
  REQUIRE(mat_rank(F, mat_identity(F, 4)) == 4);
  Mat sing = m_int(F, {{1, 2, 0}, {2, 4, 0}, {0, 0, 1}});  // row 2 = 2 * row 1
  REQUIRE(mat_rank(F, sing) == 2);
  REQUIRE(mat_det(F, sing) == F.zero());
  REQUIRE_THROWS_AS(mat_inverse(F, sing), Error);
}

TEST_CASE("entrywise power by q is a ring homomorphism of order two") {
  Field F = Field::with_least_primitive_modulus(2, 4);  // GF(16), conj exponent 4
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Mat a = random_matrix(F, 3, rng);
    Mat b = random_matrix(F, 3, rng);
    REQUIRE(mat_entry_pow(F, mat_mul(F, a, b), 4) ==
            mat_mul(F, mat_entry_pow(F, a, 4), mat_entry_pow(F, b, 4)));
    REQUIRE(mat_entry_pow(F, mat_entry_pow(F, a, 4), 4) == a);
  }
}

TEST_CASE("scalar matrices are recognised exactly") {
  Field F(5, 1, {2, 1});
  Mat s = m_int(F, {{3, 0}, {0, 3}});
  auto lam = mat_is_scalar(F, s);
  REQUIRE(lam.has_value());
  REQUIRE(*lam == F.from_int(3));
  REQUIRE_FALSE(mat_is_scalar(F, m_int(F, {{3, 0}, {0, 2}})).has_value());
  REQUIRE_FALSE(mat_is_scalar(F, m_int(F, {{3, 1}, {0, 3}})).has_value());
  auto one = mat_is_scalar(F, mat_identity(F, 3));
  REQUIRE(one.has_value());
  REQUIRE(*one == F.one());
}

TEST_CASE("determinant-one count matches the special linear group order") {
  {
    Field F(5, 1, {2, 1});
    u64 count = 0;
    for_all_matrices(F, 2, [&](const Mat& m) {
      if (mat_det(F, m) == F.one()) ++count;
    });
    REQUIRE(count == 120);  // q^3 - q = 120 for q = 5
  }
  {
    Field F = Field::with_least_primitive_modulus(2, 2);  // GF(4)
    u64 count = 0;
    for_all_matrices(F, 2, [&](const Mat& m) {
      if (mat_det(F, m) == F.one()) ++count;
    });
    REQUIRE(count == 60);  // q^3 - q = 60 for q = 4
  }
}

TEST_CASE("symplectic preservation in dimension two is exactly determinant one") {
  Field F = Field::with_least_primitive_modulus(3, 2);  // GF(9)
  FormSpec form;
  form.kind = FormKind::Symplectic;
  form.gram = m_int(F, {{0, 1}, {-1, 0}});
  for_all_matrices(F, 2, [&](const Mat& m) {
    bool pres = preserves_form(F, m, form);
    bool det1 = mat_det(F, m) == F.one();
    REQUIRE(pres == det1);
  });
}

TEST_CASE("symplectic isometry count in dimension four over GF(2)") {
  Field F(2, 1, {1, 1});
  FormSpec form;
  form.kind = FormKind::Symplectic;
  form.gram = m_int(F, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  u64 count = 0;
  for_all_matrices(F, 4, [&](const Mat& m) {
    if (preserves_form(F, m, form)) ++count;
  });
  REQUIRE(count == 720);  // q^4 (q^2-1)(q^4-1) for q = 2
}

TEST_CASE("hermitian isometries with determinant one over GF(4)") {
  Field F = Field::with_least_primitive_modulus(2, 2);  // GF(4), conjugation a -> a^2
  FormSpec form;
  form.kind = FormKind::Hermitian;
  form.conj_q = 2;
  form.gram = m_int(F, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  u64 unitary = 0, special = 0;
  for_all_matrices(F, 3, [&](const Mat& m) {
    if (!preserves_form(F, m, form)) return;
    ++unitary;
    if (mat_det(F, m) == F.one()) ++special;
  });
  REQUIRE(unitary == 648);  // q^3 (q^2-1)(q^3+1) for q = 2
  REQUIRE(special == 216);  // q^3 (q^2-1)(q^3+1) / (q+1)
  // The antidiagonal basis-swap isometry fixing the middle vector up to sign.
  Mat t = m_int(F, {{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
  REQUIRE(preserves_form(F, t, form));
}

TEST_CASE("plus-type quadratic isometries over GF(2) and the rank parity invariant") {
  Field F(2, 1, {1, 1});
  FormSpec form;
  form.kind = FormKind::QuadraticPlus;
  Mat quad(4);
  quad.at(0, 1) = 1;  // Q(x) = x0 x1 + x2 x3
  quad.at(2, 3) = 1;
  form.quad = quad;
  form.gram = m_int(F, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  std::vector<Mat> iso;
  for_all_matrices(F, 4, [&](const Mat& m) {
    if (preserves_form(F, m, form)) iso.push_back(m);
  });
  REQUIRE(iso.size() == 72);  // full plus-type orthogonal group in dimension 4 over GF(2)
  u64 kernel = 0;
  for (const Mat& m : iso)
    if (dickson_or_spinor(F, m, form) == 0) ++kernel;
  REQUIRE(kernel == 36);  // index-two kernel subgroup
  // Multiplicativity of the invariant over the whole group.
  for (const Mat& x : iso)
    for (const Mat& y : iso) {
      int bx = dickson_or_spinor(F, x, form);
      int by = dickson_or_spinor(F, y, form);
      REQUIRE(dickson_or_spinor(F, mat_mul(F, x, y), form) == (bx ^ by));
    }
  // In even characteristic the polarised form is alternating, so transvections
  // preserve it while moving Q; they must be rejected by the quadratic check.
  Mat bad = m_int(F, {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  REQUIRE_FALSE(preserves_form(F, bad, form));
  FormSpec bil = form;
  bil.kind = FormKind::SymmetricBilinear;
  bil.quad.reset();
  REQUIRE(mat_mul(F, mat_mul(F, bad, bil.gram), mat_transpose(bad)) == bil.gram);
}

TEST_CASE("odd orthogonal isometries, special subgroup, and spinor kernel over GF(3)") {
  Field F(3, 1, {1, 1});
  FormSpec form;
  form.kind = FormKind::SymmetricBilinear;
  form.gram = m_int(F, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  std::vector<Mat> so;
  u64 orth = 0, kernel = 0;
  for_all_matrices(F, 3, [&](const Mat& m) {
    if (!preserves_form(F, m, form)) return;
    ++orth;
    if (mat_det(F, m) != F.one()) return;
    so.push_back(m);
    if (dickson_or_spinor(F, m, form) == 0) ++kernel;
  });
  REQUIRE(orth == 48);       // full orthogonal group in dimension 3 over GF(3)
  REQUIRE(so.size() == 24);  // determinant-one subgroup
  REQUIRE(kernel == 12);     // spinor kernel: the simple composition factor size
  for (const Mat& x : so)
    for (const Mat& y : so) {
      int bx = dickson_or_spinor(F, x, form);
      int by = dickson_or_spinor(F, y, form);
      REQUIRE(dickson_or_spinor(F, mat_mul(F, x, y), form) == (bx ^ by));
    }
}

TEST_CASE("spinor norm agrees with known reflection factorisations") {
  Field F(5, 1, {2, 1});
  FormSpec form;
  form.kind = FormKind::SymmetricBilinear;
  form.gram = m_int(F, {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  std::mt19937_64 rng(42);
  auto bilinear = [&](const std::vector<FF>& u, const std::vector<FF>& v) {
    return form_bilinear(F, form, u, v);
  };
  for (int trial = 0; trial < 200; ++trial) {
    unsigned len = rng() % 7;
    Mat prod = mat_identity(F, 4);
    FF known = F.one();
    for (unsigned s = 0; s < len; ++s) {
      std::vector<FF> v(4);
      do {
        for (auto& c : v) c = rng() % 5;
      } while (bilinear(v, v) == 0);
      prod = mat_mul(F, prod, detail::reflection_matrix(F, form, v));
      known = F.mul(known, bilinear(v, v));
    }
    REQUIRE(preserves_form(F, prod, form));
    FF rep = spinor_norm_rep(F, prod, form);
    REQUIRE(is_square(F, rep) == is_square(F, known));
  }
}

TEST_CASE("anisotropic orthogonal bases exist for hyperbolic grams") {
  Field F(3, 1, {1, 1});
  for (unsigned d : {2u, 4u}) {
    FormSpec form;
    form.kind = FormKind::SymmetricBilinear;
    form.gram = Mat(d);
    for (unsigned i = 0; i < d; ++i) form.gram.at(i, d - 1 - i) = F.one();
    auto basis = detail::orthogonal_anisotropic_basis(F, form);
    REQUIRE(basis.size() == d);
    Mat change(d);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) change.at(i, j) = basis[i][j];
    REQUIRE(mat_det(F, change) != F.zero());
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) {
        FF b = form_bilinear(F, form, basis[i], basis[j]);
        if (i == j)
          REQUIRE(b != F.zero());
        else
          REQUIRE(b == F.zero());
      }
  }
}

TEST_CASE("square testing in odd and even characteristic") {
  Field F(7, 1, {4, 1});
  u64 squares = 0;
  for (u64 a = 1; a < 7; ++a)
    if (is_square(F, a)) ++squares;
  REQUIRE(squares == 3);
  REQUIRE(is_square(F, F.zero()));
  Field E = Field::with_least_primitive_modulus(2, 3);
  for (u64 a = 0; a < 8; ++a) REQUIRE(is_square(E, a));
}

TEST_CASE("linear algebra error paths") {
  Field F(3, 1, {1, 1});
  Field F2(2, 1, {1, 1});
  FormSpec bil;
  bil.kind = FormKind::SymmetricBilinear;
  bil.gram = m_int(F, {{1, 0}, {0, 1}});
  FormSpec bil2;
  bil2.kind = FormKind::SymmetricBilinear;
  bil2.gram = m_int(F2, {{1, 0}, {0, 1}});
  REQUIRE_THROWS_AS(mat_mul(F, Mat(2), Mat(3)), Error);
  REQUIRE_THROWS_AS(spinor_norm_rep(F2, mat_identity(F2, 2), bil2), Error);
  REQUIRE_THROWS_AS(preserves_form(F, mat_identity(F, 3), bil), Error);
  Field F5(5, 1, {2, 1});
  FormSpec bil5;
  bil5.kind = FormKind::SymmetricBilinear;
  bil5.gram = m_int(F5, {{1, 0}, {0, 1}});
  std::vector<FF> iso = {F5.from_int(1), F5.from_int(2)};  // 1 + 4 = 0 mod 5
  REQUIRE(form_bilinear(F5, bil5, iso, iso) == F5.zero());
  REQUIRE_THROWS_AS(detail::reflection_matrix(F5, bil5, iso), Error);
  FormSpec lin;
  lin.kind = FormKind::Linear;
  REQUIRE_THROWS_AS(dickson_or_spinor(F, mat_identity(F, 2), lin), Error);
  FormSpec noquad;
  noquad.kind = FormKind::QuadraticPlus;
  noquad.gram = m_int(F, {{1, 0}, {0, 1}});
  std::vector<FF> v = {F.one(), F.zero()};
  REQUIRE_THROWS_AS(form_quadratic(F, noquad, v), Error);
}
