#pragma once
// Straight-line-program words over named generators, an expression layer
// for building them readably, presentations with tagged relators and
// auxiliary definitions, evaluation on matrix tuples, word expansion, and
// the two presentation length metrics (symbol count with binary-encoded
// exponents, and fully expanded word length).

#include <memory>
#include <string>
#include <unordered_map>

#include "clasp/groupspec.hpp"
#include "clasp/linalg.hpp"

namespace clasp {

using i32 = std::int32_t;

enum class SlpOp : unsigned char { Gen, Mul, Inv, Pow };

struct SlpCell {
  SlpOp op = SlpOp::Gen;
  i32 a = 0;  // Gen: symbol index; otherwise: operand cell
  i32 b = 0;  // Mul: second operand cell
  i64 k = 0;  // Pow: exponent
  bool operator==(const SlpCell&) const = default;
};

// One word.  Cells reference strictly earlier cells; `result` names the
// cell whose value is the word (result == -1 encodes the empty word).
struct Slp {
  std::vector<SlpCell> cells;
  i32 result = -1;
};

inline void slp_validate(const Slp& s, unsigned symbol_count) {
  for (size_t i = 0; i < s.cells.size(); ++i) {
    const SlpCell& c = s.cells[i];
    switch (c.op) {
      case SlpOp::Gen:
        if (c.a < 0 || static_cast<unsigned>(c.a) >= symbol_count)
          detail::fail("generator index out of range");
        break;
      case SlpOp::Mul:
        if (c.a < 0 || c.b < 0 || static_cast<size_t>(c.a) >= i ||
            static_cast<size_t>(c.b) >= i)
          detail::fail("product must reference earlier cells");
        break;
      case SlpOp::Inv:
      case SlpOp::Pow:
        if (c.a < 0 || static_cast<size_t>(c.a) >= i)
          detail::fail("operand must reference an earlier cell");
        break;
    }
  }
  if (s.result != -1 &&
      (s.result < 0 || static_cast<size_t>(s.result) >= s.cells.size()))
    detail::fail("result cell out of range");
}

// ---- expression layer -------------------------------------------------
//
// Immutable shared expression trees; compiled into Slp instruction lists
// with structural deduplication.  An empty Expr is the identity word and
// is folded away by the operators.

struct ExprNode {
  SlpOp op;
  int sym = -1;
  std::shared_ptr<const ExprNode> a, b;
  i64 k = 0;
};

struct Expr {
  std::shared_ptr<const ExprNode> n;  // null = identity word

  Expr() = default;
  explicit Expr(std::shared_ptr<const ExprNode> node) : n(std::move(node)) {}
  bool is_one() const { return n == nullptr; }
};

inline Expr expr_one() { return Expr{}; }

inline Expr expr_gen(int symbol) {
  auto node = std::make_shared<ExprNode>();
  node->op = SlpOp::Gen;
  node->sym = symbol;
  return Expr{node};
}

inline Expr operator*(const Expr& x, const Expr& y) {
  if (x.is_one()) return y;
  if (y.is_one()) return x;
  auto node = std::make_shared<ExprNode>();
  node->op = SlpOp::Mul;
  node->a = x.n;
  node->b = y.n;
  return Expr{node};
}

inline Expr iv(const Expr& x) {
  if (x.is_one()) return x;
  auto node = std::make_shared<ExprNode>();
  node->op = SlpOp::Inv;
  node->a = x.n;
  return Expr{node};
}

inline Expr pw(const Expr& x, i64 k) {
  if (x.is_one() || k == 0) return expr_one();
  if (k == 1) return x;
  if (k == -1) return iv(x);
  auto node = std::make_shared<ExprNode>();
  node->op = SlpOp::Pow;
  node->a = x.n;
  node->k = k;
  return Expr{node};
}

// Conjugation x^y = y^-1 x y.
inline Expr cj(const Expr& x, const Expr& y) { return iv(y) * x * y; }

// Commutator [x, y] = x^-1 y^-1 x y.
inline Expr cm(const Expr& x, const Expr& y) { return iv(x) * iv(y) * x * y; }

namespace detail {

struct CellKey {
  SlpOp op;
  i32 a, b;
  i64 k;
  bool operator==(const CellKey&) const = default;
};

struct CellKeyHash {
  size_t operator()(const CellKey& c) const {
    size_t h = static_cast<size_t>(c.op);
    h = h * 1000003u ^ static_cast<size_t>(static_cast<u32>(c.a));
    h = h * 1000003u ^ static_cast<size_t>(static_cast<u32>(c.b));
    h = h * 1000003u ^ std::hash<i64>()(c.k);
    return h;
  }
};

struct SlpCompiler {
  Slp out;
  std::unordered_map<CellKey, i32, CellKeyHash> by_key;
  std::unordered_map<const ExprNode*, i32> by_node;

  i32 intern(SlpOp op, i32 a, i32 b, i64 k) {
    CellKey key{op, a, b, k};
    auto it = by_key.find(key);
    if (it != by_key.end()) return it->second;
    out.cells.push_back(SlpCell{op, a, b, k});
    i32 idx = static_cast<i32>(out.cells.size() - 1);
    by_key.emplace(key, idx);
    return idx;
  }

  i32 compile(const ExprNode* n) {
    auto it = by_node.find(n);
    if (it != by_node.end()) return it->second;
    i32 idx;
    switch (n->op) {
      case SlpOp::Gen: idx = intern(SlpOp::Gen, n->sym, 0, 0); break;
      case SlpOp::Mul: idx = intern(SlpOp::Mul, compile(n->a.get()), compile(n->b.get()), 0); break;
      case SlpOp::Inv: idx = intern(SlpOp::Inv, compile(n->a.get()), 0, 0); break;
      case SlpOp::Pow: idx = intern(SlpOp::Pow, compile(n->a.get()), 0, n->k); break;
      default: fail("unknown expression kind");
    }
    by_node.emplace(n, idx);
    return idx;
  }
};

}  // namespace detail

inline Slp compile_expr(const Expr& e) {
  if (e.is_one()) return Slp{};
  detail::SlpCompiler c;
  c.out.result = c.compile(e.n.get());
  return c.out;
}

// ---- presentations ----------------------------------------------------

enum class RelatorTag {
  TorusNormaliser,
  BaseCase,
  Centraliser,
  Steinberg,
  ExceptionalMultiplier,
  CenterKill
};

inline const char* relator_tag_label(RelatorTag t) {
  switch (t) {
    case RelatorTag::TorusNormaliser: return "torus-normaliser";
    case RelatorTag::BaseCase: return "base-case";
    case RelatorTag::Centraliser: return "centraliser";
    case RelatorTag::Steinberg: return "steinberg";
    case RelatorTag::ExceptionalMultiplier: return "exceptional-multiplier";
    case RelatorTag::CenterKill: return "center-kill";
  }
  return "?";
}

struct AuxDef {
  std::string name;
  Slp def;  // over the generators and the auxiliaries defined before this one
};

struct Relator {
  std::string name;
  RelatorTag tag;
  Slp word;  // over generators and all auxiliaries
  // Provably implied by the other relators but kept so the emitted set
  // matches the source presentation verbatim.
  bool redundant = false;
};

// Symbols 0..|X|-1 are the generators, |X|+j is auxiliary j.
struct Presentation {
  std::string group;  // display name of the presented group
  std::vector<std::string> generator_names;
  std::vector<AuxDef> auxiliary_defs;
  std::vector<Relator> relators;
  // Machine-checkable facts about which construction branch produced the
  // presentation (case splits, derived constants), keyed by short names.
  std::vector<std::pair<std::string, std::string>> metadata;

  const std::string* meta(const std::string& key) const {
    for (const auto& kv : metadata)
      if (kv.first == key) return &kv.second;
    return nullptr;
  }

  unsigned symbol_count() const {
    return static_cast<unsigned>(generator_names.size() + auxiliary_defs.size());
  }
  const std::string& symbol_name(unsigned s) const {
    if (s < generator_names.size()) return generator_names[s];
    return auxiliary_defs[s - generator_names.size()].name;
  }
};

inline void presentation_validate(const Presentation& p) {
  unsigned n_gen = static_cast<unsigned>(p.generator_names.size());
  for (size_t j = 0; j < p.auxiliary_defs.size(); ++j)
    slp_validate(p.auxiliary_defs[j].def, n_gen + static_cast<unsigned>(j));
  for (const Relator& r : p.relators) slp_validate(r.word, p.symbol_count());
}

// Builder used by the presentation factories; generators and auxiliaries
// are introduced as expressions so relator code reads like the formulas.
class PresBuilder {
 public:
  explicit PresBuilder(std::string group_display_name) {
    pres_.group = std::move(group_display_name);
  }
  explicit PresBuilder(const GroupSpec& g) { pres_.group = group_name(g); }

  Expr gen(const std::string& name) {
    check_fresh(name);
    pres_.generator_names.push_back(name);
    return expr_gen(static_cast<int>(pres_.generator_names.size() - 1));
  }

  Expr aux(const std::string& name, const Expr& def) {
    check_fresh(name);
    AuxDef a;
    a.name = name;
    a.def = compile_expr(def);
    slp_validate(a.def, pres_.symbol_count());
    pres_.auxiliary_defs.push_back(std::move(a));
    return expr_gen(static_cast<int>(pres_.symbol_count() - 1));
  }

  void rel(const std::string& name, RelatorTag tag, const Expr& w, bool redundant = false) {
    Relator r;
    r.name = name;
    r.tag = tag;
    r.word = compile_expr(w);
    r.redundant = redundant;
    slp_validate(r.word, pres_.symbol_count());
    pres_.relators.push_back(std::move(r));
  }

  // lhs = rhs, stored as lhs rhs^-1.
  void rel_eq(const std::string& name, RelatorTag tag, const Expr& lhs, const Expr& rhs,
              bool redundant = false) {
    rel(name, tag, lhs * iv(rhs), redundant);
  }

  void meta(const std::string& key, const std::string& value) {
    pres_.metadata.emplace_back(key, value);
  }
  void meta(const std::string& key, u64 value) { meta(key, std::to_string(value)); }

  const Presentation& peek() const { return pres_; }
  Presentation take() { return std::move(pres_); }

 private:
  void check_fresh(const std::string& name) {
    for (unsigned s = 0; s < pres_.symbol_count(); ++s)
      if (pres_.symbol_name(s) == name) detail::fail("duplicate symbol name: " + name);
  }
  Presentation pres_;
};

// ---- evaluation -------------------------------------------------------

inline Mat eval_slp(const Field& F, const Slp& w, const std::vector<Mat>& symbols,
                    unsigned dim_hint = 0) {
  unsigned dim = dim_hint;
  if (!dim && !symbols.empty()) dim = symbols[0].d;
  if (w.result == -1) {
    if (!dim) detail::fail("empty word needs a dimension");
    return mat_identity(F, dim);
  }
  slp_validate(w, static_cast<unsigned>(symbols.size()));
  std::vector<Mat> value(w.cells.size());
  for (size_t i = 0; i < w.cells.size(); ++i) {
    const SlpCell& c = w.cells[i];
    switch (c.op) {
      case SlpOp::Gen: value[i] = symbols[static_cast<size_t>(c.a)]; break;
      case SlpOp::Mul: value[i] = mat_mul(F, value[c.a], value[c.b]); break;
      case SlpOp::Inv: value[i] = mat_inverse(F, value[c.a]); break;
      case SlpOp::Pow: value[i] = mat_pow(F, value[c.a], c.k); break;
    }
  }
  return value[w.result];
}

// Values for all symbols (generators then auxiliaries, in order).
inline std::vector<Mat> presentation_symbol_values(const Field& F, const Presentation& p,
                                                   const std::vector<Mat>& gens) {
  if (gens.size() != p.generator_names.size())
    detail::fail("generator assignment count mismatch");
  std::vector<Mat> symbols = gens;
  for (const AuxDef& a : p.auxiliary_defs)
    symbols.push_back(eval_slp(F, a.def, symbols, symbols.empty() ? 0 : symbols[0].d));
  return symbols;
}

// ---- word expansion ---------------------------------------------------
//
// Expansion to a plain word over the presentation generators, for the
// coset enumerator: entry s > 0 means generator s-1, s < 0 means its
// inverse.  Auxiliary symbols are inlined.  An Error is raised when the
// expansion would exceed `budget` letters.

namespace detail {

constexpr u64 kLenCap = ~0ull;

inline u64 sat_add(u64 a, u64 b) { return a > kLenCap - b ? kLenCap : a + b; }
inline u64 sat_mul(u64 a, u64 b) {
  if (!a || !b) return 0;
  return a > kLenCap / b ? kLenCap : a * b;
}

inline void append_budgeted(std::vector<i32>& out, const std::vector<i32>& piece, bool invert,
                            u64 budget) {
  if (out.size() + piece.size() > budget) fail("word expansion exceeds budget");
  if (!invert) {
    out.insert(out.end(), piece.begin(), piece.end());
  } else {
    for (size_t i = piece.size(); i-- > 0;) out.push_back(-piece[i]);
  }
}

// Expanded words for each cell of one Slp over the given symbol words.
// Lengths are checked for every needed cell before anything is built.
inline std::vector<i32> expand_slp(const Slp& w, const std::vector<std::vector<i32>>& symbol_words,
                                   u64 budget) {
  if (w.result == -1) return {};
  size_t n = w.cells.size();
  std::vector<char> reach(n, 0);
  reach[static_cast<size_t>(w.result)] = 1;
  for (size_t i = n; i-- > 0;) {
    if (!reach[i]) continue;
    const SlpCell& c = w.cells[i];
    if (c.op == SlpOp::Mul) reach[c.a] = reach[c.b] = 1;
    if (c.op == SlpOp::Inv || c.op == SlpOp::Pow) reach[c.a] = 1;
  }
  std::vector<u64> len(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (!reach[i]) continue;
    const SlpCell& c = w.cells[i];
    switch (c.op) {
      case SlpOp::Gen: len[i] = symbol_words[static_cast<size_t>(c.a)].size(); break;
      case SlpOp::Mul: len[i] = sat_add(len[c.a], len[c.b]); break;
      case SlpOp::Inv: len[i] = len[c.a]; break;
      case SlpOp::Pow:
        len[i] = sat_mul(len[c.a], static_cast<u64>(c.k < 0 ? -c.k : c.k));
        break;
    }
    if (len[i] > budget) fail("word expansion exceeds budget");
  }
  std::vector<std::vector<i32>> val(n);
  for (size_t i = 0; i < n; ++i) {
    if (!reach[i]) continue;
    const SlpCell& c = w.cells[i];
    std::vector<i32>& out = val[i];
    out.reserve(len[i]);
    switch (c.op) {
      case SlpOp::Gen:
        append_budgeted(out, symbol_words[static_cast<size_t>(c.a)], false, budget);
        break;
      case SlpOp::Mul:
        append_budgeted(out, val[c.a], false, budget);
        append_budgeted(out, val[c.b], false, budget);
        break;
      case SlpOp::Inv:
        append_budgeted(out, val[c.a], true, budget);
        break;
      case SlpOp::Pow: {
        u64 reps = static_cast<u64>(c.k < 0 ? -c.k : c.k);
        if (val[c.a].empty()) break;
        for (u64 r = 0; r < reps; ++r) append_budgeted(out, val[c.a], c.k < 0, budget);
        break;
      }
    }
  }
  return val[static_cast<size_t>(w.result)];
}

}  // namespace detail

inline std::vector<std::vector<i32>> generator_symbol_words(const Presentation& p, u64 budget) {
  std::vector<std::vector<i32>> words;
  words.reserve(p.symbol_count());
  for (size_t i = 0; i < p.generator_names.size(); ++i)
    words.push_back({static_cast<i32>(i + 1)});
  for (const AuxDef& a : p.auxiliary_defs)
    words.push_back(detail::expand_slp(a.def, words, budget));
  return words;
}

inline std::vector<i32> expand_over_generators(const Presentation& p, const Slp& w, u64 budget) {
  return detail::expand_slp(w, generator_symbol_words(p, budget), budget);
}

// ---- length metrics ---------------------------------------------------

namespace detail {

inline u64 ceil_log2_plus(u64 magnitude) {
  // bits to write |k| in binary: ceil(log2(|k|+1))
  u64 bits = 0;
  while (magnitude) {
    ++bits;
    magnitude >>= 1;
  }
  return bits;
}

inline u64 slp_bit_cost(const Slp& w) {
  if (w.result == -1) return 0;
  std::vector<char> reach(w.cells.size(), 0);
  reach[static_cast<size_t>(w.result)] = 1;
  u64 cost = 0;
  for (size_t i = w.cells.size(); i-- > 0;) {
    if (!reach[i]) continue;
    const SlpCell& c = w.cells[i];
    switch (c.op) {
      case SlpOp::Gen: cost += 1; break;
      case SlpOp::Mul:
        cost += 1;
        reach[c.a] = reach[c.b] = 1;
        break;
      case SlpOp::Inv:
        cost += 1;
        reach[c.a] = 1;
        break;
      case SlpOp::Pow: {
        u64 mag = static_cast<u64>(c.k < 0 ? -c.k : c.k);
        cost += 1 + ceil_log2_plus(mag);
        reach[c.a] = 1;
        break;
      }
    }
  }
  return cost;
}

// Fully expanded letter count, auxiliary symbols costing one letter each.
inline u64 slp_word_cost(const Slp& w) {
  if (w.result == -1) return 0;
  std::vector<u64> len(w.cells.size(), 0);
  for (size_t i = 0; i < w.cells.size(); ++i) {
    const SlpCell& c = w.cells[i];
    switch (c.op) {
      case SlpOp::Gen: len[i] = 1; break;
      case SlpOp::Mul: len[i] = sat_add(len[c.a], len[c.b]); break;
      case SlpOp::Inv: len[i] = len[c.a]; break;
      case SlpOp::Pow:
        len[i] = sat_mul(len[c.a], static_cast<u64>(c.k < 0 ? -c.k : c.k));
        break;
    }
  }
  return len[static_cast<size_t>(w.result)];
}

}  // namespace detail

// Generator count plus per-cell units with binary-encoded exponents; every
// auxiliary definition is charged exactly once.
inline u64 bit_length(const Presentation& p) {
  u64 total = p.generator_names.size();
  for (const AuxDef& a : p.auxiliary_defs) total += detail::slp_bit_cost(a.def);
  for (const Relator& r : p.relators) total += detail::slp_bit_cost(r.word);
  return total;
}

// Generator count plus expanded letter counts (auxiliary symbols are one
// letter where used; each definition's own expansion is charged once).
inline u64 word_length(const Presentation& p) {
  u64 total = p.generator_names.size();
  for (const AuxDef& a : p.auxiliary_defs)
    total = detail::sat_add(total, detail::slp_word_cost(a.def));
  for (const Relator& r : p.relators)
    total = detail::sat_add(total, detail::slp_word_cost(r.word));
  return total;
}

// ---- text rendering ---------------------------------------------------

namespace detail {

inline std::string render_cell(const Presentation& p, const Slp& w, i32 idx, bool atom);

inline std::string maybe_paren(std::string s, bool atom, bool is_atomic) {
  if (atom && !is_atomic) return "(" + s + ")";
  return s;
}

inline std::string render_cell(const Presentation& p, const Slp& w, i32 idx, bool atom) {
  const SlpCell& c = w.cells[static_cast<size_t>(idx)];
  switch (c.op) {
    case SlpOp::Gen:
      return p.symbol_name(static_cast<unsigned>(c.a));
    case SlpOp::Mul: {
      std::string s =
          render_cell(p, w, c.a, false) + " " + render_cell(p, w, c.b, false);
      return maybe_paren(std::move(s), atom, false);
    }
    case SlpOp::Inv:
      return render_cell(p, w, c.a, true) + "^-1";
    case SlpOp::Pow:
      return render_cell(p, w, c.a, true) + "^" + std::to_string(c.k);
  }
  return "?";
}

}  // namespace detail

inline std::string render_word(const Presentation& p, const Slp& w) {
  if (w.result == -1) return "1";
  return detail::render_cell(p, w, w.result, false);
}

inline std::string render_presentation(const Presentation& p) {
  std::string out = p.group + "\ngenerators:";
  for (const std::string& n : p.generator_names) out += " " + n;
  out += "\n";
  for (const AuxDef& a : p.auxiliary_defs)
    out += "define " + a.name + " := " + render_word(p, a.def) + "\n";
  for (const Relator& r : p.relators) {
    out += r.name + " [" + relator_tag_label(r.tag) + "]: " + render_word(p, r.word) +
           " = 1\n";
  }
  return out;
}

}  // namespace clasp
