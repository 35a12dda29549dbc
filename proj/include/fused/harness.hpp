#pragma once

// Random braids, closure-preserving moves and invariance fuzzing.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "fused/braid.hpp"
#include "fused/invariant.hpp"
#include "fused/normal_form.hpp"
#include "fused/random.hpp"

namespace fused {

inline constexpr double default_classical_bias = 0.7;

inline BraidWord random_braid(int n, int length, Rng& rng, double classical_bias = default_classical_bias) {
  if (n < 1) throw StrandError("strand count must be at least 1");
  if (length < 0) throw std::invalid_argument("negative braid length");
  std::vector<GeneratorLetter> letters;
  if (n > 1) {
    letters.reserve(static_cast<std::size_t>(length));
    for (int t = 0; t < length; ++t) {
      int const i = rng.between(1, n - 1);
      if (rng.chance(classical_bias)) {
        letters.push_back(GeneratorLetter::sigma(i, rng.chance(0.5) ? 1 : -1));
      } else {
        letters.push_back(GeneratorLetter::rho(i));
      }
    }
  }
  return BraidWord(n, std::move(letters));
}

inline BraidWord random_braid(int n, int length, std::uint64_t seed, double classical_bias = default_classical_bias) {
  Rng rng(seed);
  return random_braid(n, length, rng, classical_bias);
}

// ---------------------------------------------------------------------------
// Defining relations of UVB_n

enum class RelationFamily { B1, B2, P1, P2, P3, M1, M2, F1, F2 };

inline constexpr RelationFamily all_relation_families[] = {
    RelationFamily::B1, RelationFamily::B2, RelationFamily::P1, RelationFamily::P2, RelationFamily::P3,
    RelationFamily::M1, RelationFamily::M2, RelationFamily::F1, RelationFamily::F2};

inline char const* relation_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::B1: return "B1";
    case RelationFamily::B2: return "B2";
    case RelationFamily::P1: return "P1";
    case RelationFamily::P2: return "P2";
    case RelationFamily::P3: return "P3";
    case RelationFamily::M1: return "M1";
    case RelationFamily::M2: return "M2";
    case RelationFamily::F1: return "F1";
    case RelationFamily::F2: return "F2";
  }
  return "?";
}

// Smallest strand count admitting an instance of the family.
inline int family_min_strands(RelationFamily f) {
  switch (f) {
    case RelationFamily::P3: return 2;
    case RelationFamily::B2:
    case RelationFamily::P2:
    case RelationFamily::M1: return 4;
    default: return 3;
  }
}

// One instance lhs = rhs. j is used by the commuting families only;
// inverted swaps in the inverse of both sides.
struct Relation {
  RelationFamily family = RelationFamily::P3;
  int i = 1;
  int j = 0;
  bool inverted = false;
};

struct RelationSides {
  std::vector<GeneratorLetter> lhs;
  std::vector<GeneratorLetter> rhs;
};

inline RelationSides relation_sides(Relation const& r) {
  using G = GeneratorLetter;
  int const i = r.i;
  int const j = r.j;
  auto far_apart = [&] {
    if (std::abs(i - j) < 2) throw std::invalid_argument(std::string(relation_name(r.family)) + " needs |i-j| >= 2");
  };
  RelationSides s;
  switch (r.family) {
    case RelationFamily::B1:
      s = {{G::sigma(i), G::sigma(i + 1), G::sigma(i)}, {G::sigma(i + 1), G::sigma(i), G::sigma(i + 1)}};
      break;
    case RelationFamily::B2:
      far_apart();
      s = {{G::sigma(i), G::sigma(j)}, {G::sigma(j), G::sigma(i)}};
      break;
    case RelationFamily::P1:
      s = {{G::rho(i), G::rho(i + 1), G::rho(i)}, {G::rho(i + 1), G::rho(i), G::rho(i + 1)}};
      break;
    case RelationFamily::P2:
      far_apart();
      s = {{G::rho(i), G::rho(j)}, {G::rho(j), G::rho(i)}};
      break;
    case RelationFamily::P3:
      s = {{G::rho(i), G::rho(i)}, {}};
      break;
    case RelationFamily::M1:
      far_apart();
      s = {{G::sigma(i), G::rho(j)}, {G::rho(j), G::sigma(i)}};
      break;
    case RelationFamily::M2:
      s = {{G::rho(i), G::rho(i + 1), G::sigma(i)}, {G::sigma(i + 1), G::rho(i), G::rho(i + 1)}};
      break;
    case RelationFamily::F1:
      s = {{G::rho(i), G::sigma(i + 1), G::sigma(i)}, {G::sigma(i + 1), G::sigma(i), G::rho(i + 1)}};
      break;
    case RelationFamily::F2:
      s = {{G::rho(i + 1), G::sigma(i), G::sigma(i + 1)}, {G::sigma(i), G::sigma(i + 1), G::rho(i)}};
      break;
  }
  if (r.inverted) {
    auto inv = [](std::vector<GeneratorLetter> const& v) {
      std::vector<GeneratorLetter> out;
      for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(it->inverse());
      return out;
    };
    s = {inv(s.lhs), inv(s.rhs)};
  }
  return s;
}

inline std::string format_relation(Relation const& r) {
  std::string s = relation_name(r.family);
  s += "(i=" + std::to_string(r.i);
  if (r.family == RelationFamily::B2 || r.family == RelationFamily::P2 || r.family == RelationFamily::M1) {
    s += ",j=" + std::to_string(r.j);
  }
  if (r.inverted) s += ",inverted";
  return s + ")";
}

inline Relation random_relation(RelationFamily f, int n, Rng& rng) {
  if (n < family_min_strands(f)) throw StrandError(std::string(relation_name(f)) + " needs more strands");
  Relation r;
  r.family = f;
  r.inverted = rng.chance(0.5);
  switch (f) {
    case RelationFamily::P3:
      r.i = rng.between(1, n - 1);
      break;
    case RelationFamily::B2:
    case RelationFamily::P2:
    case RelationFamily::M1:
      do {
        r.i = rng.between(1, n - 1);
        r.j = rng.between(1, n - 1);
      } while (std::abs(r.i - r.j) < 2);
      break;
    default:
      r.i = rng.between(1, n - 2);
      break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Moves

class MoveError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace moves {

struct Conjugate {
  BraidWord by;
};
struct StabilizePositive {};
struct StabilizeNegative {};
struct StabilizeVirtual {};
struct Destabilize {};
// Replaces lhs by rhs (forward) or rhs by lhs at position.
struct RelationRewrite {
  Relation relation;
  std::size_t position = 0;
  bool forward = true;
};
// Right-multiplies a pure braid by the commutator u^-1 v^-1 u v, where u and
// v are words on the pair's two lambda generators.
struct PairCommutator {
  Pair pair{1, 2};
  PairWord u;
  PairWord v;
};
// Negative control: appends sigma_{n-1} without adding a strand. This is not
// a Markov move and generally changes the closure.
struct BrokenStabilization {};

}  // namespace moves

using Move = std::variant<moves::Conjugate, moves::StabilizePositive, moves::StabilizeNegative,
                          moves::StabilizeVirtual, moves::Destabilize, moves::RelationRewrite,
                          moves::PairCommutator, moves::BrokenStabilization>;

inline std::string describe_pair_word(PairWord const& w) {
  PureNormalForm p(w.pair().second);
  p.append(w);
  return format_pure(p);
}

inline std::string describe_move(Move const& m) {
  return std::visit(
      [](auto const& mv) -> std::string {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, moves::Conjugate>) {
          return "conjugate(" + format_braid(mv.by) + ")";
        } else if constexpr (std::is_same_v<T, moves::StabilizePositive>) {
          return "stabilize+";
        } else if constexpr (std::is_same_v<T, moves::StabilizeNegative>) {
          return "stabilize-";
        } else if constexpr (std::is_same_v<T, moves::StabilizeVirtual>) {
          return "stabilize-virtual";
        } else if constexpr (std::is_same_v<T, moves::Destabilize>) {
          return "destabilize";
        } else if constexpr (std::is_same_v<T, moves::RelationRewrite>) {
          return "rewrite " + format_relation(mv.relation) + (mv.forward ? " lhs->rhs" : " rhs->lhs") + " at " +
                 std::to_string(mv.position);
        } else if constexpr (std::is_same_v<T, moves::PairCommutator>) {
          return "commutator{" + std::to_string(mv.pair.first) + "," + std::to_string(mv.pair.second) + "}[" +
                 describe_pair_word(mv.u) + ", " + describe_pair_word(mv.v) + "]";
        } else {
          return "broken-stabilization";
        }
      },
      m);
}

inline bool matches_at(std::vector<GeneratorLetter> const& word, std::size_t pos,
                       std::vector<GeneratorLetter> const& pattern) {
  if (pos > word.size() || word.size() - pos < pattern.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), word.begin() + static_cast<std::ptrdiff_t>(pos));
}

inline bool can_destabilize(BraidWord const& w) {
  int const top = w.strands() - 1;
  if (w.empty() || w.letters().back().index != top) return false;
  for (std::size_t t = 0; t + 1 < w.length(); ++t) {
    if (w.letters()[t].index == top) return false;
  }
  return true;
}

inline BraidWord apply_move(BraidWord const& w, Move const& m) {
  int const n = w.strands();
  auto stabilized = [&](GeneratorLetter g) {
    std::vector<GeneratorLetter> letters = w.letters();
    letters.push_back(g);
    return BraidWord(n + 1, std::move(letters));
  };
  return std::visit(
      [&](auto const& mv) -> BraidWord {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, moves::Conjugate>) {
          if (mv.by.strands() != n) throw MoveError("conjugator has a different strand count");
          return conjugate(w, mv.by);
        } else if constexpr (std::is_same_v<T, moves::StabilizePositive>) {
          return stabilized(GeneratorLetter::sigma(n, 1));
        } else if constexpr (std::is_same_v<T, moves::StabilizeNegative>) {
          return stabilized(GeneratorLetter::sigma(n, -1));
        } else if constexpr (std::is_same_v<T, moves::StabilizeVirtual>) {
          return stabilized(GeneratorLetter::rho(n));
        } else if constexpr (std::is_same_v<T, moves::Destabilize>) {
          if (!can_destabilize(w)) {
            throw MoveError("destabilize needs a last letter on index n-1 that is the only use of that index");
          }
          std::vector<GeneratorLetter> letters = w.letters();
          letters.pop_back();
          return BraidWord(n - 1, std::move(letters));
        } else if constexpr (std::is_same_v<T, moves::RelationRewrite>) {
          RelationSides const sides = relation_sides(mv.relation);
          auto const& from = mv.forward ? sides.lhs : sides.rhs;
          auto const& to = mv.forward ? sides.rhs : sides.lhs;
          for (auto const& g : sides.lhs) {
            if (g.index >= n) throw MoveError("relation uses an index beyond the strand count");
          }
          if (!matches_at(w.letters(), mv.position, from)) {
            throw MoveError("relation side does not occur at position " + std::to_string(mv.position));
          }
          std::vector<GeneratorLetter> letters(w.letters().begin(),
                                               w.letters().begin() + static_cast<std::ptrdiff_t>(mv.position));
          letters.insert(letters.end(), to.begin(), to.end());
          letters.insert(letters.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(mv.position + from.size()),
                         w.letters().end());
          return BraidWord(n, std::move(letters));
        } else if constexpr (std::is_same_v<T, moves::PairCommutator>) {
          if (!underlying_permutation(w).is_identity()) throw MoveError("commutator move needs a pure braid");
          if (mv.pair.first < 1 || mv.pair.first >= mv.pair.second || mv.pair.second > n) {
            throw MoveError("commutator pair out of range");
          }
          if ((!mv.u.is_identity() && mv.u.pair() != mv.pair) || (!mv.v.is_identity() && mv.v.pair() != mv.pair)) {
            throw MoveError("commutator words must live on the stated pair");
          }
          auto word_of = [&](PairWord const& x) {
            PureNormalForm p(n);
            p.append(x);
            return pure_to_braid(p);
          };
          BraidWord const u = word_of(mv.u);
          BraidWord const v = word_of(mv.v);
          return compose(w, compose(compose(invert(u), invert(v)), compose(u, v)));
        } else {
          if (n < 2) throw MoveError("broken stabilization needs two strands");
          std::vector<GeneratorLetter> letters = w.letters();
          letters.push_back(GeneratorLetter::sigma(n - 1, 1));
          return BraidWord(n, std::move(letters));
        }
      },
      m);
}

// ---------------------------------------------------------------------------
// Fuzzing

struct FuzzConfig {
  int min_strands = 2;
  int max_strands = 6;
  int min_length = 0;
  int max_length = 40;
  int moves_per_word = 8;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  double classical_bias = default_classical_bias;
  int max_strands_after_moves = 10;
  bool break_stabilization = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

inline constexpr int max_moves_per_word = 8;

struct FuzzFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  BraidWord word;  // the word the failing move was applied to
  std::string move;
  std::string reason;
  CanonicalInvariant before;
  CanonicalInvariant after;
};

struct FuzzReport {
  std::size_t trials = 0;
  std::vector<FuzzFailure> failures;
  double elapsed_seconds = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

namespace detail {

inline PairWord random_pair_word(Pair pair, int syllables, Rng& rng) {
  PairWord w(pair);
  for (int t = 0; t < syllables; ++t) {
    Lambda g = rng.chance(0.5) ? Lambda{pair.first, pair.second} : Lambda{pair.second, pair.first};
    std::int64_t e = rng.between(1, 2) * (rng.chance(0.5) ? 1 : -1);
    w.append(Syllable{g, e});
  }
  return w;
}

// Picks a random applicable move. Relation rewrites may first insert a
// freely trivial side * side^-1 so that the side occurs; *w is updated.
inline Move random_move(BraidWord& w, FuzzConfig const& config, Rng& rng) {
  int const n = w.strands();
  enum Kind { conj, stab_pos, stab_neg, stab_virt, destab, rewrite, commutator };
  std::vector<Kind> kinds{conj};
  if (n < config.max_strands_after_moves) {
    kinds.insert(kinds.end(), {stab_pos, stab_neg, stab_virt});
  }
  if (can_destabilize(w)) kinds.push_back(destab);
  if (n >= 2) kinds.push_back(rewrite);
  if (n >= 2 && underlying_permutation(w).is_identity()) kinds.push_back(commutator);

  switch (kinds[rng.below(kinds.size())]) {
    case conj:
      return moves::Conjugate{random_braid(n, rng.between(1, 4), rng, config.classical_bias)};
    case stab_pos:
      return moves::StabilizePositive{};
    case stab_neg:
      return moves::StabilizeNegative{};
    case stab_virt:
      return moves::StabilizeVirtual{};
    case destab:
      return moves::Destabilize{};
    case commutator: {
      int const r = rng.between(1, n - 1);
      int const s = rng.between(r + 1, n);
      Pair const pair{r, s};
      return moves::PairCommutator{pair, random_pair_word(pair, rng.between(1, 3), rng),
                                     random_pair_word(pair, rng.between(1, 3), rng)};
    }
    case rewrite: {
      std::vector<RelationFamily> families;
      for (auto f : all_relation_families) {
        if (family_min_strands(f) <= n) families.push_back(f);
      }
      Relation const rel = random_relation(families[rng.below(families.size())], n, rng);
      RelationSides const sides = relation_sides(rel);
      std::vector<std::pair<std::size_t, bool>> sites;
      for (std::size_t p = 0; p <= w.length(); ++p) {
        if (!sides.lhs.empty() && matches_at(w.letters(), p, sides.lhs)) sites.emplace_back(p, true);
        if (!sides.rhs.empty() && matches_at(w.letters(), p, sides.rhs)) sites.emplace_back(p, false);
      }
      if (!sites.empty() && rng.chance(0.5)) {
        auto [p, forward] = sites[rng.below(sites.size())];
        return moves::RelationRewrite{rel, p, forward};
      }
      bool const forward = rng.chance(0.5);
      auto const& side = forward ? sides.lhs : sides.rhs;
      std::size_t const p = rng.below(w.length() + 1);
      std::vector<GeneratorLetter> letters(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(p));
      letters.insert(letters.end(), side.begin(), side.end());
      for (auto it = side.rbegin(); it != side.rend(); ++it) letters.push_back(it->inverse());
      letters.insert(letters.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(p), w.letters().end());
      w = BraidWord(n, std::move(letters));
      return moves::RelationRewrite{rel, p, forward};
    }
  }
  return moves::Conjugate{BraidWord::identity(n)};
}

inline std::optional<FuzzFailure> run_fuzz_trial_unchecked(FuzzConfig const& config, std::size_t index,
                                                           std::uint64_t seed) {
  Rng rng(seed);
  int const lo = config.break_stabilization ? std::max(config.min_strands, 2) : config.min_strands;
  int const n = rng.between(lo, std::max(lo, config.max_strands));
  int const length = rng.between(config.min_length, std::max(config.min_length, config.max_length));
  BraidWord w = random_braid(n, length, rng, config.classical_bias);
  CanonicalInvariant const original = fused_invariant(w);

  int const chain = std::clamp(config.moves_per_word, 0, max_moves_per_word);
  for (int step = 0; step < chain; ++step) {
    Move const m = (config.break_stabilization && step == 0) ? Move{moves::BrokenStabilization{}}
                                                             : detail::random_move(w, config, rng);
    BraidWord next = apply_move(w, m);
    CanonicalInvariant after = fused_invariant(next);
    std::string reason;
    if (!(after == original)) {
      reason = "fused invariant changed";
    } else if (std::holds_alternative<moves::RelationRewrite>(m) &&
               !(semidirect_decompose(next) == semidirect_decompose(w))) {
      reason = "normal form changed under a defining relation";
    }
    if (!reason.empty()) {
      return FuzzFailure{index, seed, w, describe_move(m), std::move(reason), original, std::move(after)};
    }
    w = std::move(next);
  }
  return std::nullopt;
}

}  // namespace detail

// Runs one trial; returns the first failure, if any.
inline std::optional<FuzzFailure> run_fuzz_trial(FuzzConfig const& config, std::size_t index, std::uint64_t seed) {
  try {
    return detail::run_fuzz_trial_unchecked(config, index, seed);
  } catch (std::exception const& e) {
    FuzzFailure f;
    f.trial = index;
    f.seed = seed;
    f.reason = std::string("exception: ") + e.what();
    return f;
  }
}

inline FuzzReport fuzz_invariance(FuzzConfig const& config) {
  auto const start = std::chrono::steady_clock::now();
  std::vector<std::optional<FuzzFailure>> results(config.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < config.trials; t = next++) {
      results[t] = run_fuzz_trial(config, t, trial_seed(config.seed, t));
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(config.trials, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  FuzzReport report;
  report.trials = config.trials;
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace fused
