#pragma once

// Normal forms in UVB_n = UVP_n x| S_n.
//
// UVP_n is the direct product, over unordered pairs {i, j}, of the free
// groups on lambda(i,j) and lambda(j,i). A pure element is stored as one
// freely reduced syllable word per pair that it touches. A general element
// is a pure part followed by a permutation, (P, pi) ~ P * pi.
//
// Conventions:
//   sigma_i   = lambda(i,i+1)^-1 rho_i
//   sigma_i^-1 = lambda(i+1,i) rho_i
//   g^d = d^-1 g d, and for a permutation d this maps lambda(a,b) to
//   lambda(d(a), d(b)) (permute_indices).
//   (P1, p1)(P2, p2) = (P1 * p1 P2 p1^-1, p1 p2).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fused/braid.hpp"
#include "fused/permutation.hpp"

namespace fused {

// lambda(from, to), from != to.
struct Lambda {
  int from = 1;
  int to = 2;

  int low() const noexcept { return std::min(from, to); }
  int high() const noexcept { return std::max(from, to); }

  friend bool operator==(Lambda const&, Lambda const&) = default;
};

struct Syllable {
  Lambda generator;
  std::int64_t exponent = 1;

  friend bool operator==(Syllable const&, Syllable const&) = default;
};

using Pair = std::pair<int, int>;  // (low, high)

// Freely reduced word in the rank-2 free group on lambda(i,j), lambda(j,i).
class PairWord {
 public:
  PairWord() = default;
  explicit PairWord(Pair pair) : pair_(pair) {}

  Pair pair() const noexcept { return pair_; }
  std::vector<Syllable> const& syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }

  void append(Syllable const& s) {
    if (s.exponent == 0) return;
    if (!syllables_.empty() && syllables_.back().generator == s.generator) {
      syllables_.back().exponent += s.exponent;
      if (syllables_.back().exponent == 0) syllables_.pop_back();
    } else {
      syllables_.push_back(s);
    }
  }

  void append(PairWord const& other) {
    for (auto const& s : other.syllables_) append(s);
  }

  PairWord inverse() const {
    PairWord r(pair_);
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) r.syllables_.push_back({it->generator, -it->exponent});
    return r;
  }

  // Exponent sum of one generator of the pair.
  std::int64_t exponent_sum(Lambda g) const {
    std::int64_t total = 0;
    for (auto const& s : syllables_) {
      if (s.generator == g) total += s.exponent;
    }
    return total;
  }

  friend bool operator==(PairWord const&, PairWord const&) = default;

 private:
  Pair pair_{1, 2};
  std::vector<Syllable> syllables_;
};

inline std::string format_syllable(Syllable const& s) {
  return "L(" + std::to_string(s.generator.from) + "," + std::to_string(s.generator.to) + ")^" +
         std::to_string(s.exponent);
}

class PureNormalForm {
 public:
  PureNormalForm() = default;
  explicit PureNormalForm(int strands) : strands_(strands) {
    if (strands < 1) throw StrandError("strand count must be at least 1");
  }

  static PureNormalForm identity(int strands) { return PureNormalForm(strands); }

  static PureNormalForm generator(Lambda g, int strands, std::int64_t exponent = 1) {
    PureNormalForm p(strands);
    p.append(Syllable{g, exponent});
    return p;
  }

  int strands() const noexcept { return strands_; }
  std::map<Pair, PairWord> const& factors() const noexcept { return factors_; }
  bool is_identity() const noexcept { return factors_.empty(); }

  // Right-multiplies by one syllable.
  void append(Syllable const& s) {
    Lambda const g = s.generator;
    if (g.from == g.to || g.low() < 1 || g.high() > strands_) {
      throw std::invalid_argument("lambda index out of range");
    }
    Pair const key{g.low(), g.high()};
    auto [it, inserted] = factors_.try_emplace(key, key);
    it->second.append(s);
    if (it->second.is_identity()) factors_.erase(it);
  }

  void append(PairWord const& w) {
    if (w.is_identity()) return;
    auto [it, inserted] = factors_.try_emplace(w.pair(), w.pair());
    it->second.append(w);
    if (it->second.is_identity()) factors_.erase(it);
  }

  PairWord factor(Pair pair) const {
    auto it = factors_.find(pair);
    return it == factors_.end() ? PairWord(pair) : it->second;
  }

  // True if some factor has i in its pair.
  bool touches(int i) const noexcept {
    for (auto const& [pair, word] : factors_) {
      if (pair.first == i || pair.second == i) return true;
    }
    return false;
  }

  PureNormalForm inverse() const {
    PureNormalForm r(strands_);
    for (auto const& [pair, word] : factors_) r.factors_.emplace(pair, word.inverse());
    return r;
  }

  // The factors whose pair satisfies pred, as a pure element.
  template <typename Pred>
  PureNormalForm filtered(Pred pred) const {
    PureNormalForm r(strands_);
    for (auto const& [pair, word] : factors_) {
      if (pred(pair)) r.factors_.emplace(pair, word);
    }
    return r;
  }

  PureNormalForm with_strands(int strands) const {
    for (auto const& [pair, word] : factors_) {
      if (pair.second > strands) throw std::logic_error("pure element involves a dropped strand");
    }
    PureNormalForm r = *this;
    r.strands_ = strands;
    return r;
  }

  friend bool operator==(PureNormalForm const&, PureNormalForm const&) = default;

 private:
  int strands_ = 1;
  std::map<Pair, PairWord> factors_;
};

inline PureNormalForm multiply_pure(PureNormalForm const& a, PureNormalForm const& b) {
  if (a.strands() != b.strands()) throw StrandError("strand count mismatch in pure product");
  PureNormalForm r = a;
  for (auto const& [pair, word] : b.factors()) r.append(word);
  return r;
}

// p^pi: every lambda(i,j) becomes lambda(pi(i), pi(j)).
inline PureNormalForm permute_indices(PureNormalForm const& p, Permutation const& pi) {
  if (p.strands() != pi.size()) throw StrandError("permutation size mismatch");
  PureNormalForm r(p.strands());
  for (auto const& [pair, word] : p.factors()) {
    for (auto const& s : word.syllables()) {
      r.append(Syllable{Lambda{pi(s.generator.from), pi(s.generator.to)}, s.exponent});
    }
  }
  return r;
}

// Factors are listed by pair; "1" for the identity.
inline std::string format_pure(PureNormalForm const& p) {
  std::string out;
  for (auto const& [pair, word] : p.factors()) {
    for (auto const& s : word.syllables()) {
      if (!out.empty()) out += ' ';
      out += format_syllable(s);
    }
  }
  return out.empty() ? "1" : out;
}

struct SemidirectForm {
  PureNormalForm pure;
  Permutation perm;

  SemidirectForm() : pure(1), perm(Permutation::identity(1)) {}
  SemidirectForm(PureNormalForm p, Permutation q) : pure(std::move(p)), perm(std::move(q)) {
    if (pure.strands() != perm.size()) throw StrandError("pure part and permutation sizes differ");
  }

  static SemidirectForm identity(int strands) {
    return {PureNormalForm::identity(strands), Permutation::identity(strands)};
  }
  static SemidirectForm from_pure(PureNormalForm p) {
    int const n = p.strands();
    return {std::move(p), Permutation::identity(n)};
  }
  static SemidirectForm from_permutation(Permutation q) {
    int const n = q.size();
    return {PureNormalForm::identity(n), std::move(q)};
  }

  int strands() const noexcept { return perm.size(); }
  bool is_pure() const noexcept { return perm.is_identity(); }

  friend bool operator==(SemidirectForm const&, SemidirectForm const&) = default;
};

inline SemidirectForm multiply(SemidirectForm const& a, SemidirectForm const& b) {
  if (a.strands() != b.strands()) throw StrandError("strand count mismatch in product");
  return {multiply_pure(a.pure, permute_indices(b.pure, a.perm.inverse())), a.perm.then(b.perm)};
}

inline SemidirectForm inverse(SemidirectForm const& a) {
  return {permute_indices(a.pure.inverse(), a.perm), a.perm.inverse()};
}

inline SemidirectForm power(SemidirectForm const& a, long long e) {
  SemidirectForm base = e < 0 ? inverse(a) : a;
  unsigned long long m = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  SemidirectForm acc = SemidirectForm::identity(a.strands());
  while (m > 0) {
    if (m & 1u) acc = multiply(acc, base);
    base = multiply(base, base);
    m >>= 1u;
  }
  return acc;
}

// g^d = d^-1 g d
inline SemidirectForm conjugate(SemidirectForm const& g, SemidirectForm const& d) {
  return multiply(multiply(inverse(d), g), d);
}

inline std::string format_semidirect(SemidirectForm const& a) {
  return format_pure(a.pure) + " | " + a.perm.to_string();
}

inline SemidirectForm letter_to_semidirect(GeneratorLetter const& g, int n) {
  if (g.index < 1 || g.index >= n) throw StrandError("letter index out of range");
  Permutation tau = Permutation::adjacent_transposition(g.index, n);
  PureNormalForm pure(n);
  if (!g.is_virtual()) {
    int const i = g.index;
    if (g.exponent > 0) {
      pure.append(Syllable{Lambda{i, i + 1}, -1});
    } else {
      pure.append(Syllable{Lambda{i + 1, i}, 1});
    }
  }
  return {std::move(pure), std::move(tau)};
}

inline SemidirectForm semidirect_decompose(BraidWord const& w) {
  int const n = w.strands();
  PureNormalForm pure(n);
  // Running permutation pi and its inverse; a letter's pure part enters the
  // product as lambda(pi^-1(a), pi^-1(b)).
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) inv[k] = k + 1;
  for (auto const& g : w.letters()) {
    int const i = g.index;
    if (!g.is_virtual()) {
      Lambda l = g.exponent > 0 ? Lambda{i, i + 1} : Lambda{i + 1, i};
      std::int64_t const e = g.exponent > 0 ? -1 : 1;
      pure.append(Syllable{Lambda{inv[l.from - 1], inv[l.to - 1]}, e});
    }
    std::swap(inv[i - 1], inv[i]);
  }
  return {std::move(pure), Permutation(std::move(inv)).inverse()};
}

// B_{i,j} = rho_{j-1} ... rho_i for i < j, identity otherwise.
inline SemidirectForm b_word(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n) throw StrandError("B word index out of range");
  Permutation p = Permutation::identity(n);
  for (int k = j - 1; k >= i; --k) p = p.then(Permutation::adjacent_transposition(k, n));
  return SemidirectForm::from_permutation(std::move(p));
}

// alpha = gamma x_s B_{k_s,s} x_{s+1} ... x_n, gamma not involving s..n.
struct StrandFactorization {
  int s = 0;
  int k_s = 0;
  SemidirectForm gamma;
  std::vector<PureNormalForm> x;  // x[0] = x_s, ..., x.back() = x_n

  PureNormalForm const& x_at(int j) const { return x.at(static_cast<std::size_t>(j - s)); }

  SemidirectForm recompose() const {
    int const n = gamma.strands();
    SemidirectForm r = multiply(gamma, SemidirectForm::from_pure(x.front()));
    r = multiply(r, b_word(k_s, s, n));
    for (std::size_t t = 1; t < x.size(); ++t) r = multiply(r, SemidirectForm::from_pure(x[t]));
    return r;
  }
};

inline StrandFactorization factor_top_strand(SemidirectForm const& a) {
  int const n = a.strands();
  int const s = a.perm.max_moved();
  if (s == 0) throw std::invalid_argument("factor_top_strand requires a non-pure element");
  int const k = a.perm(s);
  Permutation const b = b_word(k, s, n).perm;
  Permutation const delta = a.perm.then(b.inverse());
  PureNormalForm const z = permute_indices(a.pure, delta);

  StrandFactorization f;
  f.s = s;
  f.k_s = k;
  // delta * z_low = (delta z_low delta^-1) * delta
  PureNormalForm const low = z.filtered([s](Pair p) { return p.second < s; });
  f.gamma = SemidirectForm{permute_indices(low, delta.inverse()), delta};
  f.x.push_back(z.filtered([s](Pair p) { return p.second == s; }));
  for (int j = s + 1; j <= n; ++j) {
    f.x.push_back(permute_indices(z.filtered([j](Pair p) { return p.second == j; }), b));
  }
  return f;
}

// Braid words for the lambda generators, following
// lambda(i,j) = rho_{j-1} ... rho_{i+1} lambda(i,i+1) rho_{i+1} ... rho_{j-1}.
inline std::vector<GeneratorLetter> lambda_letters(Lambda g) {
  int const i = g.low();
  int const j = g.high();
  std::vector<GeneratorLetter> out;
  for (int k = j - 1; k > i; --k) out.push_back(GeneratorLetter::rho(k));
  if (g.from < g.to) {
    out.push_back(GeneratorLetter::rho(i));
    out.push_back(GeneratorLetter::sigma(i, -1));
  } else {
    out.push_back(GeneratorLetter::sigma(i, -1));
    out.push_back(GeneratorLetter::rho(i));
  }
  for (int k = i + 1; k < j; ++k) out.push_back(GeneratorLetter::rho(k));
  return out;
}

inline BraidWord lambda_word(Lambda g, int n, std::int64_t exponent = 1) {
  std::vector<GeneratorLetter> unit = lambda_letters(g);
  if (exponent < 0) {
    std::vector<GeneratorLetter> inv;
    for (auto it = unit.rbegin(); it != unit.rend(); ++it) inv.push_back(it->inverse());
    unit = std::move(inv);
  }
  std::vector<GeneratorLetter> letters;
  for (std::int64_t t = 0; t < (exponent < 0 ? -exponent : exponent); ++t) {
    letters.insert(letters.end(), unit.begin(), unit.end());
  }
  return BraidWord(n, std::move(letters));
}

inline BraidWord pure_to_braid(PureNormalForm const& p) {
  std::vector<GeneratorLetter> letters;
  for (auto const& [pair, word] : p.factors()) {
    for (auto const& s : word.syllables()) {
      auto w = lambda_word(s.generator, p.strands(), s.exponent);
      letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    }
  }
  return BraidWord(p.strands(), std::move(letters));
}

// A word in the rho generators projecting to q.
inline BraidWord permutation_to_braid(Permutation const& q) {
  // Contents of each position after q: target[p - 1] = q^-1(p). Sorting it
  // back by adjacent swaps and reversing the swaps yields the word.
  std::vector<int> target = q.inverse().images();
  std::vector<int> swaps;
  for (std::size_t pass = 0; pass < target.size(); ++pass) {
    for (std::size_t p = 0; p + 1 < target.size(); ++p) {
      if (target[p] > target[p + 1]) {
        std::swap(target[p], target[p + 1]);
        swaps.push_back(static_cast<int>(p) + 1);
      }
    }
  }
  std::vector<GeneratorLetter> letters;
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) letters.push_back(GeneratorLetter::rho(*it));
  return BraidWord(q.size(), std::move(letters));
}

inline BraidWord semidirect_to_braid(SemidirectForm const& a) {
  return compose(pure_to_braid(a.pure), permutation_to_braid(a.perm));
}

}  // namespace fused
