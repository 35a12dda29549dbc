#pragma once

// Generators and brute-force oracles shared by the test suites. Nothing here
// goes through canonicalize() or rho_star().

#include <algorithm>
#include <numeric>
#include <vector>

#include "fused/fused.hpp"

namespace fused::testing {

inline Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (int k = n - 1; k > 0; --k) std::swap(images[k], images[rng.below(static_cast<std::uint64_t>(k) + 1)]);
  return Permutation(std::move(images));
}

inline PureNormalForm random_pure(int n, int syllables, Rng& rng) {
  PureNormalForm p(n);
  if (n < 2) return p;
  for (int t = 0; t < syllables; ++t) {
    int const a = rng.between(1, n);
    int b = rng.between(1, n - 1);
    if (b >= a) ++b;
    p.append(Syllable{Lambda{a, b}, rng.between(1, 3) * (rng.chance(0.5) ? 1 : -1)});
  }
  return p;
}

inline SemidirectForm random_semidirect(int n, int syllables, Rng& rng) {
  return {random_pure(n, syllables, rng), random_permutation(n, rng)};
}

// A pure braid word that uses classical letters only: a random classical
// word followed by a bubble sort of its permutation.
inline BraidWord random_classical_pure(int n, int length, Rng& rng) {
  std::vector<GeneratorLetter> letters;
  if (n > 1) {
    for (int t = 0; t < length; ++t) letters.push_back(GeneratorLetter::sigma(rng.between(1, n - 1), rng.chance(0.5) ? 1 : -1));
  }
  std::vector<int> occupant(static_cast<std::size_t>(n));
  std::iota(occupant.begin(), occupant.end(), 1);
  for (auto const& g : letters) std::swap(occupant[g.index - 1], occupant[g.index]);
  for (int pass = 0; pass < n; ++pass) {
    for (int p = 0; p + 1 < n; ++p) {
      if (occupant[p] > occupant[p + 1]) {
        std::swap(occupant[p], occupant[p + 1]);
        letters.push_back(GeneratorLetter::sigma(p + 1, rng.chance(0.5) ? 1 : -1));
      }
    }
  }
  return BraidWord(n, std::move(letters));
}

// Commutator a^-1 b^-1 a b of two pure words.
inline BraidWord commutator(BraidWord const& a, BraidWord const& b) {
  return compose(compose(invert(a), invert(b)), compose(a, b));
}

inline bool freely_reduced(PureNormalForm const& p) {
  for (auto const& [pair, word] : p.factors()) {
    if (word.is_identity() || word.pair() != pair) return false;
    auto const& s = word.syllables();
    for (std::size_t t = 0; t < s.size(); ++t) {
      if (s[t].exponent == 0) return false;
      if (Pair{s[t].generator.low(), s[t].generator.high()} != pair) return false;
      if (t > 0 && s[t - 1].generator == s[t].generator) return false;
    }
  }
  return true;
}

// Every relabeling of l, by enumeration.
inline std::vector<LinkingMatrix> orbit(LinkingMatrix const& l) {
  std::vector<int> images(static_cast<std::size_t>(l.size()));
  std::iota(images.begin(), images.end(), 1);
  std::vector<LinkingMatrix> out;
  do {
    out.push_back(relabel(l, Permutation(images)));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline bool same_orbit(LinkingMatrix const& a, LinkingMatrix const& b) {
  if (a.size() != b.size()) return false;
  for (auto const& x : orbit(a)) {
    if (x == b) return true;
  }
  return false;
}

inline LinkingMatrix brute_force_minimum(LinkingMatrix const& l) {
  auto all = orbit(l);
  return *std::min_element(all.begin(), all.end());
}

}  // namespace fused::testing
