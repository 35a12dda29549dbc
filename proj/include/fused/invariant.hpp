#pragma once

// The complete fused-link invariant: abelianized rho* image as an integer
// linking matrix, taken up to simultaneous relabeling of components.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fused/braid.hpp"
#include "fused/normal_form.hpp"
#include "fused/reduction.hpp"

namespace fused {

// m x m integer matrix with zero diagonal. Indices are 1-based in at().
class LinkingMatrix {
 public:
  LinkingMatrix() = default;
  explicit LinkingMatrix(int m) : m_(m), entries_(static_cast<std::size_t>(m) * m, 0) {
    if (m < 0) throw std::invalid_argument("negative matrix size");
  }

  static LinkingMatrix from_rows(std::vector<std::vector<std::int64_t>> const& rows) {
    LinkingMatrix l(static_cast<int>(rows.size()));
    for (int i = 1; i <= l.m_; ++i) {
      if (static_cast<int>(rows[i - 1].size()) != l.m_) throw std::invalid_argument("matrix is not square");
      for (int j = 1; j <= l.m_; ++j) l.at(i, j) = rows[i - 1][j - 1];
    }
    if (!l.has_zero_diagonal()) throw std::invalid_argument("linking matrix diagonal must be zero");
    return l;
  }

  int size() const noexcept { return m_; }
  std::int64_t& at(int i, int j) { return entries_[index(i, j)]; }
  std::int64_t at(int i, int j) const { return entries_[index(i, j)]; }
  std::vector<std::int64_t> const& entries() const noexcept { return entries_; }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(m_));
    for (int i = 1; i <= m_; ++i) {
      for (int j = 1; j <= m_; ++j) out[i - 1].push_back(at(i, j));
    }
    return out;
  }

  bool has_zero_diagonal() const {
    for (int i = 1; i <= m_; ++i) {
      if (at(i, i) != 0) return false;
    }
    return true;
  }

  // Row-major lexicographic order, after comparing sizes.
  friend auto operator<=>(LinkingMatrix const&, LinkingMatrix const&) = default;
  friend bool operator==(LinkingMatrix const&, LinkingMatrix const&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i - 1) * m_ + (j - 1); }

  int m_ = 0;
  std::vector<std::int64_t> entries_;
};

// Component i gets label p(i): result(p(i), p(j)) = l(i, j).
inline LinkingMatrix relabel(LinkingMatrix const& l, Permutation const& p) {
  if (p.size() != l.size()) throw std::invalid_argument("relabeling size mismatch");
  LinkingMatrix r(l.size());
  for (int i = 1; i <= l.size(); ++i) {
    for (int j = 1; j <= l.size(); ++j) r.at(p(i), p(j)) = l.at(i, j);
  }
  return r;
}

struct CanonicalInvariant {
  int components = 0;
  LinkingMatrix canonical;
  Permutation witness;  // relabel(original, witness) == canonical

  // The witness is not part of the invariant.
  friend bool operator==(CanonicalInvariant const& a, CanonicalInvariant const& b) {
    return a.components == b.components && a.canonical == b.canonical;
  }
};

inline LinkingMatrix abelianize(PureNormalForm const& p) {
  LinkingMatrix l(p.strands());
  for (auto const& [pair, word] : p.factors()) {
    for (auto const& s : word.syllables()) l.at(s.generator.from, s.generator.to) += s.exponent;
  }
  return l;
}

// Exhaustive search covers every relabeling up to this size. Between it and
// canonical_hard_limit the search only permutes components with equal
// sorted row/column content, ordered by that content.
inline constexpr int canonical_exhaustive_limit = 8;
inline constexpr int canonical_hard_limit = 12;

namespace detail {

// order[r] = original component placed at row r (0-based). Returns <0, 0, >0
// comparing the relabeled matrix against best, stopping early.
inline int compare_relabeled(LinkingMatrix const& l, std::vector<int> const& order, LinkingMatrix const& best) {
  int const m = l.size();
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      std::int64_t const v = l.at(order[r] + 1, order[c] + 1);
      std::int64_t const b = best.at(r + 1, c + 1);
      if (v != b) return v < b ? -1 : 1;
    }
  }
  return 0;
}

inline std::vector<std::int64_t> component_key(LinkingMatrix const& l, int i) {
  std::vector<std::int64_t> row, col;
  for (int j = 1; j <= l.size(); ++j) {
    if (j == i) continue;
    row.push_back(l.at(i, j));
    col.push_back(l.at(j, i));
  }
  std::sort(row.begin(), row.end());
  std::sort(col.begin(), col.end());
  row.push_back(INT64_MIN);  // separator so row/column splits cannot alias
  row.insert(row.end(), col.begin(), col.end());
  return row;
}

// Visits every order consistent with the given blocks: each block is a
// contiguous range of order that is permuted independently.
template <typename Visit>
void for_each_block_permutation(std::vector<int> order, std::vector<std::pair<int, int>> const& blocks, Visit visit) {
  for (auto [b, e] : blocks) std::sort(order.begin() + b, order.begin() + e);
  while (true) {
    visit(order);
    std::size_t t = 0;
    for (; t < blocks.size(); ++t) {
      auto [b, e] = blocks[t];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
      // next_permutation wrapped this block back to sorted; carry on.
    }
    if (t == blocks.size()) return;
  }
}

}  // namespace detail

inline CanonicalInvariant canonicalize(LinkingMatrix const& l) {
  int const m = l.size();
  if (!l.has_zero_diagonal()) throw std::invalid_argument("linking matrix diagonal must be zero");
  if (m > canonical_hard_limit) {
    throw std::length_error("canonicalization supports at most " + std::to_string(canonical_hard_limit) +
                            " components, got " + std::to_string(m));
  }

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<int, int>> blocks;
  if (m <= canonical_exhaustive_limit) {
    blocks.emplace_back(0, m);
  } else {
    std::vector<std::vector<std::int64_t>> keys;
    for (int i = 1; i <= m; ++i) keys.push_back(detail::component_key(l, i));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    for (int b = 0; b < m;) {
      int e = b + 1;
      while (e < m && keys[order[e]] == keys[order[b]]) ++e;
      blocks.emplace_back(b, e);
      b = e;
    }
  }

  LinkingMatrix best;
  std::vector<int> best_order;
  detail::for_each_block_permutation(order, blocks, [&](std::vector<int> const& o) {
    if (best_order.empty() || detail::compare_relabeled(l, o, best) < 0) {
      best_order = o;
      best = LinkingMatrix(m);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) best.at(r + 1, c + 1) = l.at(o[r] + 1, o[c] + 1);
      }
    }
  });

  std::vector<int> images(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) images[best_order[r]] = r + 1;
  return {m, std::move(best), Permutation(std::move(images))};
}

inline CanonicalInvariant fused_invariant(BraidWord const& w) { return canonicalize(abelianize(rho_star(w).pure)); }

inline bool equivalent(BraidWord const& a, BraidWord const& b) { return fused_invariant(a) == fused_invariant(b); }

// Independent count of inter-component crossings. Components are the cycles
// of the underlying permutation, numbered by their smallest strand.
inline LinkingMatrix linking_matrix_direct(BraidWord const& w) {
  int const n = w.strands();
  auto const cycles = underlying_permutation(w).cycles();
  std::vector<int> component(static_cast<std::size_t>(n) + 1);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (int strand : cycles[c]) component[strand] = static_cast<int>(c) + 1;
  }
  std::vector<int> occupant(static_cast<std::size_t>(n) + 1);
  std::iota(occupant.begin(), occupant.end(), 0);

  LinkingMatrix l(static_cast<int>(cycles.size()));
  for (auto const& g : w.letters()) {
    int const i = g.index;
    if (!g.is_virtual()) {
      int const a = component[occupant[i]];
      int const b = component[occupant[i + 1]];
      if (a != b) {
        if (g.exponent > 0) {
          l.at(a, b) -= 1;
        } else {
          l.at(b, a) += 1;
        }
      }
    }
    std::swap(occupant[i], occupant[i + 1]);
  }
  return l;
}

}  // namespace fused
