#pragma once
// Todd-Coxeter coset enumeration over a presentation: certifies group and
// subgroup-index orders at desk scale.  Two strategies: deduction-driven
// (default) and row-filling with lookahead and table compaction.  Coset
// collapses are handled by a union-find with path compression.

#include <algorithm>
#include <deque>

#include "clasp/slp.hpp"

namespace clasp {

enum class EnumStrategy { Felsch, HLT };

struct EnumerateOptions {
  u64 max_cosets = 1u << 20;
  EnumStrategy strategy = EnumStrategy::Felsch;
  u64 expansion_budget = 1'000'000;  // total letters across relators and subgroup words
  // Felsch only: prefer defining cosets at gaps of length one (sites where a
  // single new coset closes a relator cycle).  Measurably fewer definitions
  // on almost every presentation here; off reproduces textbook Felsch.
  bool gap_definitions = true;
};

struct EnumerateResult {
  bool completed = false;
  u64 index = 0;     // number of cosets when completed
  u64 defined = 0;   // cosets ever defined (including the subgroup coset)
  u64 max_live = 0;  // peak live cosets
  u64 final_live = 0;
  // Closed table over live cosets (row-major, completed runs only):
  // entry table[row*cols + c], column 2g for generator g, 2g+1 for its inverse.
  std::vector<i32> table;
  unsigned cols = 0;
};

namespace detail {

class CosetEnumerator {
 public:
  CosetEnumerator(std::vector<std::vector<i32>> relators, std::vector<std::vector<i32>> subgroup,
                  unsigned n_gens, const EnumerateOptions& opt)
      : opt_(opt), ncols_(2 * n_gens) {
    for (auto& w : relators) {
      std::vector<i32> cols = to_columns(w);
      cyclically_reduce(cols);
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    for (auto& w : subgroup) {
      std::vector<i32> cols = to_columns(w);
      if (!cols.empty()) subgroup_.push_back(std::move(cols));
    }
    // Short relators fire deductions cheaply and often, so scan them first.
    std::stable_sort(relators_.begin(), relators_.end(),
                     [](const std::vector<i32>& a, const std::vector<i32>& b) {
                       return a.size() < b.size();
                     });
    // Deduction scanning: for every column, the relator rotations that
    // start with that column.  Rotations repeat with the word's minimal
    // cyclic period, so only one representative per residue is kept
    // (a power relator x^n contributes one rotation, not n).
    edges_.resize(ncols_);
    for (size_t r = 0; r < relators_.size(); ++r) {
      size_t period = minimal_cyclic_period(relators_[r]);
      for (size_t pos = 0; pos < period; ++pos)
        edges_[static_cast<size_t>(relators_[r][pos])].push_back(
            {static_cast<i32>(r), static_cast<i32>(pos)});
    }
  }

  static size_t minimal_cyclic_period(const std::vector<i32>& w) {
    size_t n = w.size();
    if (n == 0) return 0;
    std::vector<size_t> border(n, 0);  // longest proper border of each prefix
    for (size_t i = 1; i < n; ++i) {
      size_t b = border[i - 1];
      while (b && w[i] != w[b]) b = border[b - 1];
      border[i] = (w[i] == w[b]) ? b + 1 : 0;
    }
    size_t t = n - border[n - 1];
    return (n % t == 0) ? t : n;
  }

  EnumerateResult run() {
    new_coset();  // coset 0: the subgroup itself
    bool fill = opt_.strategy == EnumStrategy::HLT;
    for (const auto& w : subgroup_) {
      scan(0, w.data(), w.size(), true);
      if (overflow_) return result(false);
    }
    drain_deductions();
    if (opt_.strategy == EnumStrategy::Felsch) {
      run_felsch();
    } else {
      run_hlt();
    }
    if (overflow_) return result(false);
    finish_check();
    return result(true);
  }

 private:
  // ---- table primitives ----

  i32 find(i32 a) {
    i32 r = a;
    while (uf_[static_cast<size_t>(r)] != r) r = uf_[static_cast<size_t>(r)];
    while (uf_[static_cast<size_t>(a)] != r) {
      i32 n = uf_[static_cast<size_t>(a)];
      uf_[static_cast<size_t>(a)] = r;
      a = n;
    }
    return r;
  }

  i32& cell(i32 coset, i32 col) { return tab_[static_cast<size_t>(coset) * ncols_ + col]; }

  i32 get(i32 coset, i32 col) {
    i32 v = cell(coset, col);
    if (v == -1) return -1;
    i32 r = find(v);
    if (r != v) cell(coset, col) = r;
    return r;
  }

  i32 new_coset() {
    if (n_rows_ >= opt_.max_cosets) {
      overflow_ = true;
      return -1;
    }
    tab_.resize(tab_.size() + ncols_, -1);
    uf_.push_back(static_cast<i32>(n_rows_));
    ++n_rows_;
    ++defined_;
    ++n_live_;
    if (n_live_ > max_live_) max_live_ = n_live_;
    return static_cast<i32>(n_rows_ - 1);
  }

  void set_edge(i32 a, i32 c, i32 b) {
    cell(a, c) = b;
    cell(b, c ^ 1) = a;
    if (opt_.strategy == EnumStrategy::Felsch) {
      deductions_.push_back({a, c});
      deductions_.push_back({b, c ^ 1});
    }
  }

  // ---- coincidences ----

  void merge(i32 a, i32 b, std::deque<i32>& dead) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uf_[static_cast<size_t>(b)] = a;
    --n_live_;
    dead.push_back(b);
  }

  void coincidence(i32 a, i32 b) {
    std::deque<i32> dead;
    merge(a, b, dead);
    while (!dead.empty()) {
      i32 e = dead.front();
      dead.pop_front();
      for (i32 c = 0; c < static_cast<i32>(ncols_); ++c) {
        i32 f = cell(e, c);
        if (f == -1) continue;
        cell(e, c) = -1;
        if (cell(f, c ^ 1) == e) cell(f, c ^ 1) = -1;
        i32 mu = find(e), nu = find(f);
        i32 ex = cell(mu, c);
        if (ex != -1 && find(ex) != nu) merge(ex, nu, dead);
        i32 ey = cell(find(f), c ^ 1);
        if (ey != -1 && find(ey) != find(e)) merge(ey, mu, dead);
        mu = find(mu);
        nu = find(nu);
        if (cell(mu, c) == -1 || cell(nu, c ^ 1) == -1) set_edge(mu, c, nu);
      }
    }
  }

  // ---- scanning ----

  // Scan word w around coset a (the word traces a cycle a -> a).  With
  // fill, missing edges are defined so the scan always completes.  The
  // closing step is a deduction (single gap) or a coincidence (the two
  // partial traces meet at the same position with different cosets).
  void scan(i32 a, const i32* w, size_t n, bool fill) {
    a = find(a);
    i32 f = a;
    size_t i = 0;  // positions 0..i-1 traced forward; f is the coset there
    while (i < n) {
      i32 nxt = get(f, w[i]);
      if (nxt == -1) break;
      f = nxt;
      ++i;
    }
    if (i == n) {
      if (f != a) coincidence(f, a);
      return;
    }
    i32 b = a;
    size_t j = n;  // positions j..n-1 traced backward; b is the coset there
    while (j > i) {
      i32 nxt = get(b, w[j - 1] ^ 1);
      if (nxt == -1) break;
      b = nxt;
      --j;
    }
    if (j == i) {  // both traces reached the same position
      if (f != b) coincidence(f, b);
      return;
    }
    if (j == i + 1) {  // exactly one missing edge
      set_edge(f, w[i], b);
      return;
    }
    if (!fill) {
      // Gap of length one (a single unknown coset between the traces):
      // defining the forward edge would close this cycle by deduction.
      // Remember it as a preferred site for the next coset definition.
      if (opt_.gap_definitions && j == i + 2) {
        prefs_[pref_head_ % prefs_.size()] = {f, w[i]};
        ++pref_head_;
      }
      return;
    }
    while (j > i + 1) {
      i32 fresh = new_coset();
      if (fresh == -1) return;  // overflow
      set_edge(f, w[i], fresh);
      f = fresh;
      ++i;
    }
    set_edge(f, w[i], b);
  }

  void drain_deductions() {
    while (!deductions_.empty()) {
      auto [a, c] = deductions_.back();
      deductions_.pop_back();
      a = find(a);
      if (cell(a, c) == -1) continue;
      for (auto [r, pos] : edges_[static_cast<size_t>(c)]) {
        const std::vector<i32>& rel = relators_[static_cast<size_t>(r)];
        rotation_.assign(rel.begin() + pos, rel.end());
        rotation_.insert(rotation_.end(), rel.begin(), rel.begin() + pos);
        scan(a, rotation_.data(), rotation_.size(), false);
        if (overflow_) return;
        a = find(a);
        if (cell(a, c) == -1) break;
      }
    }
  }

  // ---- strategies ----

  bool is_dead(i32 a) { return find(a) != a; }

  // Pop the most recent still-open preferred definition site, if any.
  bool pop_pref(i32& a, i32& c) {
    if (pref_head_ - pref_tail_ > prefs_.size()) pref_tail_ = pref_head_ - prefs_.size();
    while (pref_head_ > pref_tail_) {
      auto [pa, pc] = prefs_[(pref_head_ - 1) % prefs_.size()];
      --pref_head_;
      pa = find(pa);
      if (cell(pa, pc) == -1) {
        a = pa;
        c = pc;
        return true;
      }
    }
    pref_tail_ = pref_head_ = 0;
    return false;
  }

  void run_felsch() {
    u64 row = 0;
    i32 col = 0;
    for (;;) {
      drain_deductions();
      if (overflow_) return;
      // Prefer sites where one new coset closes a relator cycle at once.
      i32 pa, pc;
      if (pop_pref(pa, pc)) {
        i32 fresh = new_coset();
        if (fresh == -1) return;
        set_edge(pa, pc, fresh);
        continue;
      }
      // advance to the first empty slot
      while (row < n_rows_) {
        if (is_dead(static_cast<i32>(row))) {
          ++row;
          col = 0;
          continue;
        }
        while (col < static_cast<i32>(ncols_) && cell(static_cast<i32>(row), col) != -1) ++col;
        if (col < static_cast<i32>(ncols_)) break;
        ++row;
        col = 0;
      }
      if (row == n_rows_) return;  // closed
      i32 fresh = new_coset();
      if (fresh == -1) return;
      set_edge(static_cast<i32>(row), col, fresh);
    }
  }

  void run_hlt() {
    for (u64 row = 0; row < n_rows_; ++row) {
      if (is_dead(static_cast<i32>(row))) continue;
      for (size_t ri = 0; ri < relators_.size(); ++ri) {
        for (;;) {
          if (is_dead(static_cast<i32>(row))) break;
          scan(static_cast<i32>(row), relators_[ri].data(), relators_[ri].size(), true);
          if (!overflow_) break;
          if (!lookahead_and_compact(row)) return;
          // row was renumbered; rescan this relator against it
        }
        if (is_dead(static_cast<i32>(row))) break;
      }
      if (is_dead(static_cast<i32>(row))) continue;
      // complete the row so every generator is defined on every coset
      for (i32 c = 0; c < static_cast<i32>(ncols_); ++c) {
        if (cell(static_cast<i32>(row), c) != -1) continue;
        i32 fresh = new_coset();
        if (fresh == -1) {
          if (!lookahead_and_compact(row)) return;
          --c;  // row was renumbered; re-examine this column
          continue;
        }
        set_edge(static_cast<i32>(row), c, fresh);
      }
    }
  }

  // On overflow: scan everything without defining (deductions and
  // coincidences only), then renumber live cosets to reclaim space.  Rows
  // ahead of the caller keep their relative order.
  bool lookahead_and_compact(u64& caller_row) {
    overflow_ = false;
    for (u64 row = 0; row < n_rows_; ++row) {
      i32 a = static_cast<i32>(row);
      if (is_dead(a)) continue;
      for (const auto& rel : relators_) {
        scan(a, rel.data(), rel.size(), false);
        if (is_dead(a)) break;
      }
    }
    if (n_live_ > (opt_.max_cosets * 9) / 10) {
      overflow_ = true;
      return false;
    }
    caller_row = compact(caller_row);
    return true;
  }

  // Renumber live cosets, preserving order; returns the new index of the
  // given row's representative.
  u64 compact(u64 track) {
    std::vector<i32> remap(n_rows_, -1);
    u64 next = 0;
    for (u64 r = 0; r < n_rows_; ++r)
      if (!is_dead(static_cast<i32>(r))) remap[r] = static_cast<i32>(next++);
    std::vector<i32> fresh(next * ncols_, -1);
    for (u64 r = 0; r < n_rows_; ++r) {
      if (remap[r] == -1) continue;
      for (i32 c = 0; c < static_cast<i32>(ncols_); ++c) {
        i32 v = get(static_cast<i32>(r), c);
        fresh[static_cast<size_t>(remap[r]) * ncols_ + c] = v == -1 ? -1 : remap[v];
      }
    }
    i32 tracked = remap[find(static_cast<i32>(track))];
    tab_ = std::move(fresh);
    uf_.resize(next);
    for (u64 r = 0; r < next; ++r) uf_[r] = static_cast<i32>(r);
    n_rows_ = next;
    deductions_.clear();
    pref_head_ = pref_tail_ = 0;  // stored coset ids are stale after renumbering
    return static_cast<u64>(tracked);
  }

  // ---- results ----

  void finish_check() {
    // The table must be closed and mirror-consistent over live cosets.
    for (u64 r = 0; r < n_rows_; ++r) {
      i32 a = static_cast<i32>(r);
      if (is_dead(a)) continue;
      for (i32 c = 0; c < static_cast<i32>(ncols_); ++c) {
        i32 b = get(a, c);
        if (b == -1 || get(b, c ^ 1) != a) fail("coset table not closed");
      }
    }
  }

  EnumerateResult result(bool completed) {
    EnumerateResult res;
    res.completed = completed;
    res.defined = defined_;
    res.max_live = max_live_;
    res.final_live = n_live_;
    res.cols = ncols_;
    if (completed) {
      res.index = n_live_;
      u64 dummy = 0;
      compact(dummy);
      res.table = tab_;
    }
    return res;
  }

  std::vector<i32> to_columns(const std::vector<i32>& letters) {
    std::vector<i32> cols;
    cols.reserve(letters.size());
    for (i32 s : letters) {
      if (s == 0) fail("bad letter");
      i32 g = s > 0 ? s - 1 : -s - 1;
      if (2 * g >= static_cast<i32>(ncols_)) fail("letter outside generator range");
      cols.push_back(s > 0 ? 2 * g : 2 * g + 1);
    }
    return cols;
  }

  static void cyclically_reduce(std::vector<i32>& w) {
    // free reduction
    std::vector<i32> out;
    for (i32 c : w) {
      if (!out.empty() && out.back() == (c ^ 1))
        out.pop_back();
      else
        out.push_back(c);
    }
    // cyclic reduction
    size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == (out[hi - 1] ^ 1)) {
      ++lo;
      --hi;
    }
    w.assign(out.begin() + static_cast<long>(lo), out.begin() + static_cast<long>(hi));
  }

  EnumerateOptions opt_;
  unsigned ncols_;
  std::vector<std::vector<i32>> relators_, subgroup_;
  std::vector<std::vector<std::pair<i32, i32>>> edges_;  // column -> (relator, offset)
  std::vector<i32> rotation_;
  std::vector<i32> tab_, uf_;
  std::vector<std::pair<i32, i32>> deductions_;
  std::vector<std::pair<i32, i32>> prefs_ = std::vector<std::pair<i32, i32>>(4096);
  u64 pref_head_ = 0, pref_tail_ = 0;
  u64 n_rows_ = 0, n_live_ = 0, defined_ = 0, max_live_ = 0;
  bool overflow_ = false;
};

}  // namespace detail

inline EnumerateResult enumerate_cosets(const Presentation& p, const std::vector<Slp>& subgroup,
                                        const EnumerateOptions& opt = {}) {
  auto symbol_words = generator_symbol_words(p, opt.expansion_budget);
  u64 used = 0;
  auto expand = [&](const Slp& w) {
    if (used >= opt.expansion_budget) detail::fail("word expansion exceeds budget");
    std::vector<i32> letters = detail::expand_slp(w, symbol_words, opt.expansion_budget - used);
    used += letters.size();
    return letters;
  };
  std::vector<std::vector<i32>> rel_words, sub_words;
  for (const Relator& r : p.relators) rel_words.push_back(expand(r.word));
  for (const Slp& w : subgroup) sub_words.push_back(expand(w));
  detail::CosetEnumerator eng(std::move(rel_words), std::move(sub_words),
                              static_cast<unsigned>(p.generator_names.size()), opt);
  return eng.run();
}

}  // namespace clasp
