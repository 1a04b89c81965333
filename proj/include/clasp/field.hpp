#pragma once
// Exact finite-field arithmetic at presentation scale: GF(p^e) with a
// primitive defining polynomial, the quadratic tower GF(q) inside GF(q^2),
// and the number-theoretic helpers the relator builders need: discrete
// logs, minimal polynomials, subfield expressions, and the exponent pair
// (x, y) behind the unitary Borel relations.
//
// Elements are base-p digit vectors packed into a uint64_t.  Small fields
// get log/antilog tables; larger ones fall back to polynomial arithmetic.
// Everything is deterministic: moduli are the lexicographically least
// primitive polynomials, ordered by the integer whose base-p digits are
// the non-leading coefficients (constant term = least significant digit).

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace clasp {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u32 = std::uint32_t;
using i128 = __int128;
using FF = std::uint64_t;  // packed field element

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

namespace detail {

[[noreturn]] inline void fail(const std::string& m) { throw Error(m); }

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<__uint128_t>(a) * b % m);
}

inline u64 powmod_u64(u64 a, u64 n, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (n) {
    if (n & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    n >>= 1;
  }
  return r;
}

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % s == 0) return n == s;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

inline u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  u64 c = 1;
  while (true) {
    u64 x = 2, y = 2, d = 1;
    auto step = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      u64 diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
    ++c;
  }
}

inline void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) { out.push_back(n); return; }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

// Distinct prime factors, ascending.
inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d : {2ull, 3ull, 5ull}) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// Dense polynomial, low-degree-first, leading coefficient nonzero (zero
// polynomial = empty vector).  Coefficients are elements of a designated
// field; for the prime-field polynomials produced by minimal_polynomial
// and subfield_expression they are plain integers in [0, p).
struct Poly {
  std::vector<u64> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const Poly& o) const { return c == o.c; }
};

// Identifies GF(p^e): the modulus is primitive, so the residue class of
// the variable is a generator of the multiplicative group; that residue
// is recorded as the witness.
struct FieldSpec {
  u64 p = 0;
  unsigned e = 0;
  std::vector<u64> modulus;  // monic, degree e, low-degree-first
  FF primitive_root_witness = 0;
};

class Field {
 public:
  u64 p = 0;
  unsigned e = 0;
  u64 q = 0;                 // p^e
  std::vector<u64> mod;      // size e+1, monic

  static constexpr u64 kTableLimit = 1ull << 22;
  static constexpr unsigned kMaxDeg = 24;

  Field(u64 p_, unsigned e_, std::vector<u64> modulus) : p(p_), e(e_), mod(std::move(modulus)) {
    if (!detail::is_prime_u64(p)) detail::fail("field characteristic must be prime");
    if (e == 0) detail::fail("field degree must be positive");
    if (e > kMaxDeg) detail::fail("field degree beyond supported scale");
    if (p >= (1ull << 21)) detail::fail("field characteristic beyond supported scale");
    q = 1;
    for (unsigned i = 0; i < e; ++i) {
      if (q > (1ull << 44) / p) detail::fail("field size beyond supported scale");
      q *= p;
    }
    if (mod.size() != e + 1 || mod[e] != 1) detail::fail("modulus must be monic of degree e");
    for (u64 c : mod)
      if (c >= p) detail::fail("modulus coefficient out of range");
    if (!poly_irreducible(mod, p)) detail::fail("modulus must be irreducible");
    if (!x_is_primitive()) detail::fail("modulus must be primitive");
    if (q <= kTableLimit) build_tables();
  }

  // Lexicographically least primitive modulus: scan candidates by the
  // packed integer of their non-leading coefficients.
  static Field with_least_primitive_modulus(u64 p, unsigned e) {
    if (!detail::is_prime_u64(p)) detail::fail("field characteristic must be prime");
    if (e == 0) detail::fail("field degree must be positive");
    if (e > kMaxDeg) detail::fail("field degree beyond supported scale");
    u64 cap = 1;
    for (unsigned i = 0; i < e; ++i) {
      if (cap > (1ull << 44) / p) detail::fail("field size beyond supported scale");
      cap *= p;
    }
    std::vector<u64> f(e + 1, 0);
    f[e] = 1;
    for (u64 v = 1; v < cap; ++v) {  // v=0 gives constant term 0: never primitive
      u64 t = v;
      for (unsigned i = 0; i < e; ++i) { f[i] = t % p; t /= p; }
      if (f[0] == 0) continue;
      if (!poly_irreducible(f, p)) continue;
      if (!modulus_is_primitive(f, p)) continue;
      return Field(p, e, f);
    }
    detail::fail("no primitive modulus found");
  }

  // Order of the variable's residue class equals p^deg - 1.
  static bool modulus_is_primitive(const std::vector<u64>& f, u64 p) {
    size_t k = f.size() - 1;
    u64 n = 1;
    for (size_t i = 0; i < k; ++i) n *= p;
    n -= 1;
    std::vector<u64> x = (k == 1) ? std::vector<u64>{(p - f[0]) % p} : std::vector<u64>{0, 1};
    poly_trim(x);
    if (x.empty()) return false;
    std::vector<u64> one{1};
    if (n == 0) return true;
    for (u64 r : detail::prime_factors(n)) {
      if (poly_powmod(x, n / r, f, p) == one) return false;
    }
    return poly_powmod(x, n, f, p) == one;
  }

  FieldSpec spec() const { return FieldSpec{p, e, mod, x_res()}; }

  // ---- element basics ----
  FF zero() const { return 0; }
  FF one() const { return 1 % q; }
  FF x_res() const {  // residue class of the variable
    if (e > 1) return p;
    return (p - mod[0]) % p;
  }
  FF from_int(i64 v) const {
    i64 r = v % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    return static_cast<FF>(r);
  }
  std::vector<u64> coeffs(FF a) const {
    std::vector<u64> d(e);
    for (unsigned i = 0; i < e; ++i) { d[i] = a % p; a /= p; }
    return d;
  }
  FF from_coeffs(const std::vector<u64>& d) const {
    if (d.size() > e) detail::fail("coefficient vector too long");
    FF a = 0;
    for (size_t i = d.size(); i-- > 0;) {
      if (d[i] >= p) detail::fail("coefficient out of range");
      a = a * p + d[i];
    }
    return a;
  }

  FF add(FF a, FF b) const {
    if (p == 2) return a ^ b;
    FF r = 0, w = 1;
    for (unsigned i = 0; i < e; ++i) {
      u64 s = a % p + b % p;
      if (s >= p) s -= p;
      r += s * w;
      w *= p;
      a /= p;
      b /= p;
    }
    return r;
  }
  FF neg(FF a) const {
    if (p == 2) return a;
    FF r = 0, w = 1;
    for (unsigned i = 0; i < e; ++i) {
      u64 d = a % p;
      r += (d ? p - d : 0) * w;
      w *= p;
      a /= p;
    }
    return r;
  }
  FF sub(FF a, FF b) const { return add(a, neg(b)); }

  FF mul(FF a, FF b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[(static_cast<u64>(log_[a]) + log_[b]) % (q - 1)];
    return mul_poly(a, b);
  }
  FF inv(FF a) const {
    if (a == 0) detail::fail("division by zero");
    if (!exp_.empty()) return exp_[(q - 1 - log_[a]) % (q - 1)];
    return powe(a, static_cast<i64>(q) - 2);
  }
  FF div(FF a, FF b) const { return mul(a, inv(b)); }

  FF powe(FF a, i64 k) const { return powe128(a, static_cast<i128>(k)); }
  FF powe128(FF a, i128 k) const {
    if (a == 0) {
      if (k > 0) return 0;
      if (k == 0) return one();
      detail::fail("zero to a negative power");
    }
    u64 n = q - 1;
    i128 r = n ? (k % static_cast<i128>(n)) : 0;
    if (r < 0) r += n;
    u64 kk = static_cast<u64>(r);
    if (!exp_.empty()) return exp_[detail::mulmod_u64(log_[a], kk % (q - 1), q - 1)];
    FF acc = one(), base = a;
    while (kk) {
      if (kk & 1) acc = mul(acc, base);
      base = mul(base, base);
      kk >>= 1;
    }
    return acc;
  }

  // Multiplicative order (a != 0).
  u64 order(FF a) const {
    if (a == 0) detail::fail("order of zero");
    u64 n = q - 1;
    if (n == 0) return 1;
    for (u64 r : detail::prime_factors(n)) {
      while (n % r == 0 && powe(a, static_cast<i64>(n / r)) == one()) n /= r;
    }
    return n == 0 ? 1 : n;
  }

  bool table_backed() const { return !exp_.empty(); }

  // ---- static polynomial helpers over GF(p), dense low-first ----
  static void poly_trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static std::vector<u64> poly_mulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                                      const std::vector<u64>& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> t(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p;
    }
    size_t d = f.size() - 1;  // f monic degree d
    for (size_t k = t.size(); k-- > d;) {
      u64 c = t[k];
      if (!c) continue;
      t[k] = 0;
      for (size_t j = 0; j < d; ++j) t[k - d + j] = (t[k - d + j] + c * (p - f[j])) % p;
    }
    t.resize(std::min(t.size(), d));
    poly_trim(t);
    return t;
  }
  static std::vector<u64> poly_powmod(std::vector<u64> a, u64 n, const std::vector<u64>& f, u64 p) {
    std::vector<u64> r{1};
    while (n) {
      if (n & 1) r = poly_mulmod(r, a, f, p);
      a = poly_mulmod(a, a, f, p);
      n >>= 1;
    }
    return r;
  }
  static std::vector<u64> poly_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
      // a mod b
      u64 lead_inv = detail::powmod_u64(b.back(), p - 2, p);
      while (a.size() >= b.size()) {
        u64 c = detail::mulmod_u64(a.back(), lead_inv, p);
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
          a[off + j] = (a[off + j] + (p - detail::mulmod_u64(c, b[j], p))) % p;
        poly_trim(a);
        if (a.empty()) break;
      }
      std::swap(a, b);
    }
    return a;
  }
  static bool poly_irreducible(const std::vector<u64>& f, u64 p) {
    size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    // x^(p^j) mod f by iterated p-th powers.
    std::vector<u64> xp{0, 1};
    std::vector<std::vector<u64>> frob(k + 1);
    frob[0] = {0, 1};
    for (size_t j = 1; j <= k; ++j) frob[j] = poly_powmod(frob[j - 1], p, f, p);
    // x^(p^k) == x
    std::vector<u64> t = frob[k];
    std::vector<u64> x{0, 1};
    if (t != x) return false;
    for (u64 r : detail::prime_factors(static_cast<u64>(k))) {
      std::vector<u64> d = frob[k / r];
      // gcd(x^(p^(k/r)) - x, f) must be constant
      std::vector<u64> diff = d;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = (diff[1] + p - 1) % p;
      poly_trim(diff);
      std::vector<u64> g = poly_gcd(diff, f, p);
      if (g.size() > 1) return false;
    }
    return true;
  }

 private:
  std::vector<FF> exp_;   // exp_[i] = x^i, size q-1
  std::vector<u32> log_;  // log_[a], a != 0

  bool x_is_primitive() const {
    // Needs only the slow path; tables are not built yet.
    FF x = x_res();
    if (x == 0) return false;
    u64 n = q - 1;
    if (n == 0) return true;
    for (u64 r : detail::prime_factors(n)) {
      if (powe_slow(x, n / r) == one()) return false;
    }
    return powe_slow(x, n) == one();
  }
  FF powe_slow(FF a, u64 k) const {
    FF acc = one(), base = a;
    while (k) {
      if (k & 1) acc = mul_poly(acc, base);
      base = mul_poly(base, base);
      k >>= 1;
    }
    return acc;
  }
  FF mul_poly(FF a, FF b) const {
    std::array<u64, kMaxDeg> da{}, db{};
    std::array<u64, 2 * kMaxDeg> t{};
    for (unsigned i = 0; i < e; ++i) { da[i] = a % p; a /= p; }
    for (unsigned i = 0; i < e; ++i) { db[i] = b % p; b /= p; }
    for (unsigned i = 0; i < e; ++i) {
      if (!da[i]) continue;
      for (unsigned j = 0; j < e; ++j) t[i + j] = (t[i + j] + da[i] * db[j]) % p;
    }
    for (unsigned k = 2 * e - 2; k >= e && k < 2 * kMaxDeg; --k) {
      u64 c = t[k];
      if (!c) continue;
      t[k] = 0;
      for (unsigned j = 0; j < e; ++j) t[k - e + j] = (t[k - e + j] + c * (p - mod[j])) % p;
      if (k == e) break;
    }
    FF r = 0;
    for (unsigned i = e; i-- > 0;) r = r * p + t[i];
    return r;
  }
  void build_tables() {
    exp_.assign(q - 1, 0);
    log_.assign(q, 0xFFFFFFFFu);
    FF x = x_res(), cur = one();
    for (u64 i = 0; i < q - 1; ++i) {
      exp_[i] = cur;
      log_[cur] = static_cast<u32>(i);
      cur = mul_poly(cur, x);
    }
    if (cur != one()) detail::fail("table construction inconsistency");
  }
};

// Least k >= 0 with base^k = beta, if any.
inline std::optional<u64> try_discrete_log(const Field& F, FF beta, FF base) {
  if (beta == 0 || base == 0) return std::nullopt;
  u64 n = F.order(base);
  u64 m = 1;
  while (m * m < n) ++m;
  std::unordered_map<FF, u64> baby;
  baby.reserve(m * 2);
  FF cur = F.one();
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(cur, j);  // smallest j kept
    cur = F.mul(cur, base);
  }
  FF giant = F.inv(cur);  // base^-m
  FF g = beta;
  for (u64 i = 0; i <= n / m; ++i) {
    auto it = baby.find(g);
    if (it != baby.end()) {
      u64 k = i * m + it->second;
      return k % n;
    }
    g = F.mul(g, giant);
  }
  return std::nullopt;
}

inline u64 discrete_log(const Field& F, FF beta, FF base) {
  if (beta == 0) detail::fail("discrete log of zero");
  auto r = try_discrete_log(F, beta, base);
  if (!r) detail::fail("element outside the cyclic group generated by the base");
  return *r;
}

// Minimal polynomial of alpha over the prime field, monic, low-first.
inline Poly minimal_polynomial(const Field& F, FF alpha) {
  unsigned e = F.e;
  u64 p = F.p;
  // Echelon rows over GF(p) with tracked combinations in terms of alpha^i.
  std::vector<std::vector<u64>> rows;    // reduced vectors, length e
  std::vector<std::vector<u64>> combos;  // combo[i] over alpha powers
  std::vector<int> pivot;                // pivot column of each row
  FF pw = F.one();
  for (unsigned i = 0; i <= e; ++i) {
    std::vector<u64> v = F.coeffs(pw);
    std::vector<u64> combo(i + 1, 0);
    combo[i] = 1;
    // reduce v against existing rows
    for (size_t r = 0; r < rows.size(); ++r) {
      u64 c = v[pivot[r]];
      if (!c) continue;
      u64 piv = rows[r][pivot[r]];
      u64 factor = detail::mulmod_u64(c, detail::powmod_u64(piv, p - 2, p), p);
      for (unsigned j = 0; j < e; ++j)
        v[j] = (v[j] + (p - detail::mulmod_u64(factor, rows[r][j], p))) % p;
      for (size_t j = 0; j < combos[r].size(); ++j)
        combo[j] = (combo[j] + (p - detail::mulmod_u64(factor, combos[r][j], p))) % p;
    }
    int pv = -1;
    for (unsigned j = 0; j < e; ++j)
      if (v[j]) { pv = static_cast<int>(j); break; }
    if (pv < 0) {
      // dependency found: combo gives the minimal polynomial
      u64 lead = combo.back();
      u64 linv = detail::powmod_u64(lead, p - 2, p);
      Poly out;
      out.c.resize(combo.size());
      for (size_t j = 0; j < combo.size(); ++j) out.c[j] = detail::mulmod_u64(combo[j], linv, p);
      out.trim();
      return out;
    }
    rows.push_back(v);
    combos.push_back(combo);
    pivot.push_back(pv);
    pw = F.mul(pw, alpha);
  }
  detail::fail("minimal polynomial not found below field degree bound");
}

// Coefficients c_i over the prime field with sum c_i * gen^i = target and
// degree at most max_degree; solved as a linear system over GF(p).
inline Poly subfield_expression(const Field& F, FF target, FF gen, unsigned max_degree) {
  unsigned e = F.e;
  u64 p = F.p;
  unsigned cols = max_degree + 1;
  // Augmented matrix, e rows, cols+1 columns.
  std::vector<std::vector<u64>> m(e, std::vector<u64>(cols + 1, 0));
  FF pw = F.one();
  for (unsigned c = 0; c < cols; ++c) {
    std::vector<u64> v = F.coeffs(pw);
    for (unsigned r = 0; r < e; ++r) m[r][c] = v[r];
    pw = F.mul(pw, gen);
  }
  std::vector<u64> tv = F.coeffs(target);
  for (unsigned r = 0; r < e; ++r) m[r][cols] = tv[r];
  // Gaussian elimination.
  std::vector<int> pivot_col(e, -1);
  unsigned row = 0;
  for (unsigned c = 0; c < cols && row < e; ++c) {
    unsigned sel = row;
    while (sel < e && m[sel][c] == 0) ++sel;
    if (sel == e) continue;
    std::swap(m[sel], m[row]);
    u64 inv = detail::powmod_u64(m[row][c], p - 2, p);
    for (unsigned j = c; j <= cols; ++j) m[row][j] = detail::mulmod_u64(m[row][j], inv, p);
    for (unsigned r2 = 0; r2 < e; ++r2) {
      if (r2 == row || m[r2][c] == 0) continue;
      u64 f = m[r2][c];
      for (unsigned j = c; j <= cols; ++j)
        m[r2][j] = (m[r2][j] + (p - detail::mulmod_u64(f, m[row][j], p))) % p;
    }
    pivot_col[row] = static_cast<int>(c);
    ++row;
  }
  for (unsigned r2 = row; r2 < e; ++r2)
    if (m[r2][cols] != 0) detail::fail("target not expressible in the requested degree bound");
  Poly out;
  out.c.assign(cols, 0);
  for (unsigned r2 = 0; r2 < row; ++r2)
    if (pivot_col[r2] >= 0) out.c[pivot_col[r2]] = m[r2][cols];
  out.trim();
  return out;
}

// The quadratic tower GF(q) < GF(q^2) with the derived constants the
// presentations use.  omega generates GF(q^2)^x; omega0 = omega^(q+1)
// generates the subfield's multiplicative group.
struct Tower {
  Tower(Field b, Field x) : base(std::move(b)), ext(std::move(x)) {}

  Field base;  // GF(q), its own least primitive modulus
  Field ext;   // GF(q^2)
  u64 p = 0, q = 0;
  FF omega = 0, omega0 = 0, psi = 0, zeta = 0, xi = 0, phi = 0;  // ext elements
  FF omega_base = 0;                                             // base element
  std::vector<FF> emb_pow;  // image of base variable's powers in ext

  FF conj(FF a) const { return ext.powe128(a, static_cast<i128>(q)); }
  FF tr(FF a) const { return ext.add(a, conj(a)); }
  FF nrm(FF a) const { return ext.mul(a, conj(a)); }
  bool in_subfield(FF a) const { return conj(a) == a; }

  FF emb(FF b) const {
    FF r = 0;
    for (unsigned i = 0; i < base.e; ++i) {
      u64 d = b % base.p;
      b /= base.p;
      if (d) r = ext.add(r, ext.mul(ext.from_int(static_cast<i64>(d)), emb_pow[i]));
    }
    return r;
  }
  FF pull(FF s) const {
    ensure_pull();
    auto it = pull_cache_.find(s);
    if (it == pull_cache_.end()) detail::fail("element not in the base subfield");
    return it->second;
  }

 private:
  mutable std::unordered_map<FF, FF> pull_cache_;
  void ensure_pull() const {
    if (!pull_cache_.empty()) return;
    if (q > Field::kTableLimit) detail::fail("subfield pullback beyond supported scale");
    for (FF b = 0; b < q; ++b) pull_cache_.emplace(emb(b), b);
  }
};

inline Tower make_tower(u64 p, unsigned e) {
  Tower T{Field::with_least_primitive_modulus(p, e),
          Field::with_least_primitive_modulus(p, 2 * e)};
  T.p = p;
  T.q = T.base.q;
  const Field& E = T.ext;
  u64 q = T.q;
  T.omega = E.x_res();
  T.omega0 = E.powe(T.omega, static_cast<i64>(q) + 1);
  if (p == 2) {
    T.psi = E.one();
    T.zeta = E.powe128(T.omega0, static_cast<i128>(E.q) / 2);  // sqrt in char 2
    T.xi = E.inv(E.add(E.one(), E.powe(T.omega, static_cast<i64>(q) - 1)));
    T.phi = E.mul(T.omega, E.inv(E.add(T.omega, E.powe(T.omega, static_cast<i64>(q)))));
  } else {
    T.psi = E.powe(T.omega, (static_cast<i64>(q) + 1) / 2);
    T.zeta = E.neg(E.powe128(T.omega, (static_cast<i128>(q) * q + q) / 2));
    T.xi = E.neg(E.inv(E.from_int(2)));
    T.phi = T.xi;
  }
  T.omega_base = T.base.x_res();

  // Embedding: the base modulus splits in ext; take its least root.
  {
    std::vector<FF> roots;
    FF t = E.one();
    for (u64 s = 0; s + 1 < q; ++s) {
      // Horner evaluation of the base modulus at t.
      FF v = E.zero();
      for (size_t i = T.base.mod.size(); i-- > 0;)
        v = E.add(E.mul(v, t), E.from_int(static_cast<i64>(T.base.mod[i])));
      if (v == E.zero()) roots.push_back(t);
      t = E.mul(t, T.omega0);
    }
    if (roots.size() != T.base.e) detail::fail("embedding root count mismatch");
    FF r = *std::min_element(roots.begin(), roots.end());
    T.emb_pow.resize(T.base.e);
    FF pw = E.one();
    for (unsigned i = 0; i < T.base.e; ++i) { T.emb_pow[i] = pw; pw = E.mul(pw, r); }
  }

  // Construction-time identities for the derived constants.
  if (E.order(T.omega) != E.q - 1) detail::fail("omega is not primitive");
  if (T.base.order(T.omega_base) != q - 1) detail::fail("base generator is not primitive");
  if (q > 2 && E.order(T.omega0) != q - 1) detail::fail("omega0 is not primitive in the subfield");
  if (T.tr(T.xi) != E.neg(E.one())) detail::fail("xi must have trace -1");
  if (T.tr(T.phi) != E.neg(E.one())) detail::fail("phi must have trace -1");
  if (E.mul(T.zeta, T.zeta) != T.omega0) detail::fail("zeta squared must be omega0");
  if (p != 2 && T.tr(T.zeta) != 0) detail::fail("zeta must have trace 0");
  if (p != 2 && E.mul(T.psi, T.psi) != T.omega0) detail::fail("psi squared must be omega0");
  return T;
}

// gamma = t*eta - beta with t = tr(beta)/tr(eta); then tr(gamma) = 0.
inline FF find_gamma(const Tower& T, FF beta, FF eta) {
  FF tb = T.tr(beta), te = T.tr(eta);
  if (tb == 0) detail::fail("find_gamma requires tr(beta) != 0");
  if (te == 0) detail::fail("find_gamma requires tr(eta) != 0");
  FF t = T.ext.div(tb, te);
  return T.ext.sub(T.ext.mul(t, eta), beta);
}

// The exponent pair behind the unitary Borel relations:
//   (i)  omega^(x(q-2)) + omega^(y(q-2)) = 1
//   (ii) omega^(-x(q+1)) + omega^(-y(q+1)) = 1
//   (iii) GF(p)[omega^(x(q+1))] = GF(q)
//   (iv) GF(p)[omega^(x(q-2))] = GF(q^2) for odd p, GF(q) for even p
struct LemmaXY {
  i64 x = 0, y = 0;
  u64 seed = 0;
  u64 trials = 0;
  bool gcd_one = false;  // gcd(x, q^2-1) = 1
};

inline bool lemma_xy_valid(const Tower& T, i64 x, i64 y) {
  const Field& E = T.ext;
  u64 q = T.q;
  i128 X = x, Y = y;
  FF a1 = E.powe128(T.omega, X * (static_cast<i128>(q) - 2));
  FF b1 = E.powe128(T.omega, Y * (static_cast<i128>(q) - 2));
  if (E.add(a1, b1) != E.one()) return false;
  FF a2 = E.powe128(T.omega, -X * (static_cast<i128>(q) + 1));
  FF b2 = E.powe128(T.omega, -Y * (static_cast<i128>(q) + 1));
  if (E.add(a2, b2) != E.one()) return false;
  FF g3 = E.powe128(T.omega, X * (static_cast<i128>(q) + 1));
  if (minimal_polynomial(E, g3).degree() != static_cast<int>(T.base.e)) return false;
  unsigned want = (T.p == 2) ? T.base.e : E.e;
  if (minimal_polynomial(E, a1).degree() != static_cast<int>(want)) return false;
  return true;
}

inline LemmaXY lemma_xy(const Tower& T, u64 seed = 0x5EEDBA5Eull) {
  const Field& E = T.ext;
  u64 q = T.q;
  if (q == 2 || q == 3 || q == 5)
    detail::fail("no valid exponent pair exists for q = " + std::to_string(q));
  u64 n = E.q - 1;
  auto norm_gcd = [&](i64 x) {
    i64 r = x % static_cast<i64>(n);
    if (r < 0) r += static_cast<i64>(n);
    return std::gcd(static_cast<u64>(r), n);
  };
  LemmaXY out;
  out.seed = seed;
  if (T.p == 2) {
    u64 c = discrete_log(E, E.sub(E.one(), T.omega0), T.omega0);
    out.x = -(static_cast<i64>(q) + 1);
    out.y = -static_cast<i64>(c) * (static_cast<i64>(q) + 1);
    if (!lemma_xy_valid(T, out.x, out.y)) detail::fail("even-characteristic exponent pair failed validation");
    out.gcd_one = norm_gcd(out.x) == 1;
    return out;
  }
  auto try_t = [&](FF t) -> std::optional<LemmaXY> {
    // c_t = t (t^2 + 3 psi^2) (t + psi) (t^2 - psi^2)^{-2}
    FF t2 = E.mul(t, t);
    FF psi2 = E.mul(T.psi, T.psi);
    FF den = E.sub(t2, psi2);
    if (t == 0 || den == 0) return std::nullopt;
    FF num = E.mul(E.mul(t, E.add(t2, E.mul(E.from_int(3), psi2))), E.add(t, T.psi));
    if (num == 0) return std::nullopt;
    FF ct = E.mul(num, E.inv(E.mul(den, den)));
    FF cy = E.sub(ct, E.powe(ct, static_cast<i64>(q) - 1));
    if (ct == 0 || cy == 0) return std::nullopt;
    LemmaXY r;
    r.x = -static_cast<i64>(discrete_log(E, ct, T.omega));
    r.y = -static_cast<i64>(discrete_log(E, cy, T.omega));
    if (!lemma_xy_valid(T, r.x, r.y)) return std::nullopt;
    r.gcd_one = norm_gcd(r.x) == 1;
    return r;
  };
  std::mt19937_64 rng(seed);
  std::optional<LemmaXY> first;
  u64 budget = 2000;
  for (u64 i = 0; i < budget; ++i) {
    FF t = static_cast<FF>(rng() % E.q);
    auto r = try_t(t);
    ++out.trials;
    if (!r) continue;
    if (T.base.e == 1 || r->gcd_one) {
      r->seed = seed;
      r->trials = out.trials;
      return *r;
    }
    if (!first) first = r;
  }
  // Exhaustive fallback, preferring gcd(x, q^2-1) = 1.
  for (FF t = 0; t < E.q; ++t) {
    auto r = try_t(t);
    ++out.trials;
    if (!r) continue;
    if (T.base.e == 1 || r->gcd_one) {
      r->seed = seed;
      r->trials = out.trials;
      return *r;
    }
    if (!first) first = r;
  }
  if (first) {
    first->seed = seed;
    first->trials = out.trials;
    return *first;
  }
  detail::fail("no exponent pair found for q = " + std::to_string(q));
}

}  // namespace clasp
