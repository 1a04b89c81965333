#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "clasp/enumerate.hpp"
#include "clasp/sp.hpp"

using namespace clasp;

namespace {

Field make_field(u64 q) {
  auto [p, e] = split_prime_power(q);
  return Field::with_least_primitive_modulus(p, e);
}

u64 enum_index(const Presentation& p, u64 max_cosets = 1u << 20,
               EnumStrategy strategy = EnumStrategy::Felsch) {
  EnumerateOptions opt;
  opt.max_cosets = max_cosets;
  opt.strategy = strategy;
  EnumerateResult res = enumerate_cosets(p, {}, opt);
  REQUIRE(res.completed);
  return res.index;
}

void check_relators(const Field& F, const Presentation& p, const std::vector<Mat>& gens,
                    bool scalar_ok) {
  std::vector<Mat> symbols = presentation_symbol_values(F, p, gens);
  for (const Relator& r : p.relators) {
    INFO(p.group << " relator " << r.name);
    Mat v = eval_slp(F, r.word, symbols, gens.at(0).d);
    if (scalar_ok)
      REQUIRE(mat_is_scalar(F, v).has_value());
    else
      REQUIRE(mat_is_identity(F, v));
  }
}

std::set<std::vector<FF>> closure(const Field& F, const std::vector<Mat>& gens, unsigned d) {
  std::set<std::vector<FF>> seen;
  std::vector<Mat> work{mat_identity(F, d)};
  seen.insert(work[0].a);
  while (!work.empty()) {
    Mat m = work.back();
    work.pop_back();
    for (const Mat& g : gens) {
      Mat n = mat_mul(F, m, g);
      if (seen.insert(n.a).second) work.push_back(n);
    }
  }
  return seen;
}

constexpr u64 kGrid[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

struct Pair {
  unsigned n;
  u64 q;
};
constexpr Pair kTorusPairs[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 9}, {2, 13},
                                {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}};

}  // namespace

TEST_CASE("symplectic presentation structure", "[sp]") {
  // Prime fields present on {sigma, tau, Z, U, V}, extensions add delta;
  // the n-cycle V is a generator only for n > 2.
  REQUIRE(present_sp(make_field(3), 6, false).generator_names ==
          std::vector<std::string>{"sigma", "tau", "Z", "U", "V"});
  REQUIRE(present_sp(make_field(9), 6, false).generator_names ==
          std::vector<std::string>{"sigma", "tau", "delta", "Z", "U", "V"});
  REQUIRE(present_sp(make_field(9), 4, false).generator_names ==
          std::vector<std::string>{"sigma", "tau", "delta", "Z", "U"});

  for (unsigned n : {2u, 3u, 4u}) {
    for (u64 q : kGrid) {
      Presentation p = present_sp(make_field(q), 2 * n, false);
      for (const Relator& r : p.relators) REQUIRE_FALSE(r.redundant);

      unsigned extra = 0;
      for (const Relator& r : p.relators)
        extra += (r.tag == RelatorTag::TorusNormaliser) ? 0 : 1;
      REQUIRE(extra <= 56);

      // One centre-killing relator exactly for odd q.
      Presentation pq = present_sp(make_field(q), 2 * n, true);
      u64 kills = 0;
      for (const Relator& r : pq.relators)
        kills += (r.tag == RelatorTag::CenterKill) ? 1 : 0;
      REQUIRE(kills == (sp_center_order(q) > 1 ? 1 : 0));
      REQUIRE(pq.relators.size() == p.relators.size() + kills);
    }
  }
}

TEST_CASE("symplectic relators hold on the defining matrices", "[sp]") {
  for (unsigned n : {2u, 3u, 4u}) {
    for (u64 q : kGrid) {
      Field F = make_field(q);
      std::vector<Mat> gens = sp_presentation_matrices(F, 2 * n);
      FormSpec form = sp_form(F, n);
      for (const Mat& m : gens) REQUIRE(preserves_form(F, m, form));
      INFO("n = " << n << ", q = " << q);
      check_relators(F, present_sp(F, 2 * n, false), gens, false);
      check_relators(F, present_sp(F, 2 * n, true), gens, true);
    }
  }
}

TEST_CASE("symplectic enumeration certifies the group order", "[sp]") {
  REQUIRE(enum_index(present_sp(make_field(2), 4, false), 4 * 720) == 720);
  REQUIRE(enum_index(present_sp(make_field(3), 4, false), 4 * 51840, EnumStrategy::HLT) ==
          51840);
  REQUIRE(enum_index(present_sp(make_field(3), 4, true), 4 * 25920, EnumStrategy::HLT) ==
          25920);
}

TEST_CASE("symplectic enumeration at larger scale", "[.heavy][sp]") {
  REQUIRE(enum_index(present_sp(make_field(4), 4, false), 4 * 979200) == 979200);
  REQUIRE(enum_index(present_sp(make_field(2), 6, false), 4 * 1451520) == 1451520);
}

TEST_CASE("symplectic monomial subgroup has order (2(q-1))^n n!", "[sp]") {
  for (auto [n, q] : kTorusPairs) {
    Field F = make_field(q);
    unsigned d = 2 * n;
    u64 want = sp_torus_order(d, q);
    INFO("n = " << n << ", q = " << q);
    REQUIRE(closure(F, sp_torus_matrices(F, d), d).size() == want);
    REQUIRE(enum_index(present_sp_torus(d, q, false), 8 * want + 64) == want);
    REQUIRE(enum_index(present_sp_torus(d, q, true), 8 * want + 64) ==
            want / sp_center_order(q));
    check_relators(F, present_sp_torus(d, q, false), sp_torus_matrices(F, d), false);
  }
}

TEST_CASE("symplectic centraliser words generate the centralisers", "[sp]") {
  for (auto [n, q] : kTorusPairs) {
    Field F = make_field(q);
    unsigned d = 2 * n;
    INFO("n = " << n << ", q = " << q);
    std::vector<Mat> tg = sp_torus_matrices(F, d);
    auto N = closure(F, tg, d);

    for (int which = 0; which < 2; ++which) {
      Mat root = which ? sp_tau(F, n) : sp_sigma(F, n);
      std::set<std::vector<FF>> brute;
      for (const auto& a : N) {
        Mat m(d);
        m.a = a;
        if (mat_mul(F, m, root).a == mat_mul(F, root, m).a) brute.insert(a);
      }
      std::vector<Mat> wm;
      for (const Slp& w : which ? sp_tau_centraliser_words(F, d) : sp_centraliser_words(F, d))
        wm.push_back(eval_slp(F, w, tg, d));
      REQUIRE(closure(F, wm, d) == brute);
      u64 want_idx = which ? (q % 2 ? n * (q - 1) : 2 * n * (q - 1))
                           : 2 * n * (n - 1) * (q - 1);
      REQUIRE(N.size() / brute.size() == want_idx);
    }
  }
}

TEST_CASE("symplectic central word generates the centre", "[sp]") {
  for (unsigned n : {2u, 3u, 4u}) {
    for (u64 q : kGrid) {
      Field F = make_field(q);
      INFO("n = " << n << ", q = " << q);
      Mat z = eval_slp(F, sp_central_word(F, 2 * n), sp_presentation_matrices(F, 2 * n), 2 * n);
      auto s = mat_is_scalar(F, z);
      REQUIRE(s.has_value());
      u64 order = 1;
      FF v = *s;
      while (v != F.one()) {
        v = F.mul(v, *s);
        ++order;
      }
      REQUIRE(order == sp_center_order(q));
    }
  }
}

TEST_CASE("symplectic presentation length grows linearly in the rank", "[sp]") {
  Field F3 = make_field(3);
  u64 b16 = bit_length(present_sp(F3, 32, false));
  u64 b32 = bit_length(present_sp(F3, 64, false));
  u64 b64 = bit_length(present_sp(F3, 128, false));
  REQUIRE(b64 - b32 <= 2 * (b32 - b16) + 16);
  REQUIRE(b64 - b32 + 16 >= 2 * (b32 - b16));
}
