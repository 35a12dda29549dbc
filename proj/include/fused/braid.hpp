#pragma once

// Unrestricted virtual braid words: letters, parsing, formatting and the
// projection onto the symmetric group.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fused/permutation.hpp"

namespace fused {

enum class LetterKind { classical, virtual_ };

// sigma_index^exponent or rho_index. Virtual letters always carry +1.
struct GeneratorLetter {
  LetterKind kind = LetterKind::classical;
  int index = 1;
  int exponent = 1;

  static GeneratorLetter sigma(int i, int e = 1) { return {LetterKind::classical, i, e}; }
  static GeneratorLetter rho(int i) { return {LetterKind::virtual_, i, 1}; }

  bool is_virtual() const noexcept { return kind == LetterKind::virtual_; }
  GeneratorLetter inverse() const noexcept { return is_virtual() ? *this : GeneratorLetter{kind, index, -exponent}; }

  friend bool operator==(GeneratorLetter const&, GeneratorLetter const&) = default;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised for strand counts that are invalid or too small for the letters.
class StrandError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int strands, std::vector<GeneratorLetter> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw StrandError("strand count must be at least 1");
    for (auto& g : letters_) {
      if (g.index < 1 || g.index >= strands_) {
        throw StrandError("letter index " + std::to_string(g.index) + " out of range for " +
                          std::to_string(strands_) + " strands");
      }
      if (g.is_virtual()) {
        g.exponent = 1;
      } else if (g.exponent != 1 && g.exponent != -1) {
        throw std::invalid_argument("classical letters carry exponent +1 or -1");
      }
    }
  }

  static BraidWord identity(int strands) { return BraidWord(strands); }

  int strands() const noexcept { return strands_; }
  std::vector<GeneratorLetter> const& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Same letters viewed in UVB_n for a larger n.
  BraidWord widened(int strands) const {
    if (strands < strands_) throw StrandError("cannot narrow a braid word");
    BraidWord w = *this;
    w.strands_ = strands;
    return w;
  }

  friend bool operator==(BraidWord const&, BraidWord const&) = default;

 private:
  int strands_ = 1;
  std::vector<GeneratorLetter> letters_;
};

namespace detail {

inline constexpr long long max_expanded_exponent = 1'000'000;

// Reads a generator symbol at pos; returns the kind and advances pos.
inline std::optional<LetterKind> read_symbol(std::string_view text, std::size_t& pos) {
  static constexpr std::string_view sigma_utf8 = "\xCF\x83";  // σ
  static constexpr std::string_view rho_utf8 = "\xCF\x81";    // ρ
  if (text[pos] == 's' || text[pos] == 'S') {
    ++pos;
    return LetterKind::classical;
  }
  if (text[pos] == 'r' || text[pos] == 'R') {
    ++pos;
    return LetterKind::virtual_;
  }
  if (text.substr(pos, 2) == sigma_utf8) {
    pos += 2;
    return LetterKind::classical;
  }
  if (text.substr(pos, 2) == rho_utf8) {
    pos += 2;
    return LetterKind::virtual_;
  }
  return std::nullopt;
}

inline long long read_digits(std::string_view text, std::size_t& pos, char const* what) {
  std::size_t const start = pos;
  long long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > max_expanded_exponent) throw ParseError(std::string(what) + " too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError(std::string("expected ") + what, pos);
  return value;
}

}  // namespace detail

// Grammar: token := ("s" | "r") index ("^" sign? digits)?, tokens separated
// by whitespace. "σ" and "ρ" are accepted for "s" and "r".
inline BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt) {
  std::vector<GeneratorLetter> letters;
  int max_index = 0;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    std::size_t const token_start = pos;
    auto kind = detail::read_symbol(text, pos);
    if (!kind) throw ParseError("expected generator 's' or 'r'", pos);
    long long const index = detail::read_digits(text, pos, "strand index");
    if (index < 1) throw ParseError("strand index must be positive", token_start);
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
      }
      exponent = detail::read_digits(text, pos, "exponent");
      if (negative) exponent = -exponent;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected whitespace between tokens", pos);
    }
    int const i = static_cast<int>(index);
    if (strands && i >= *strands) {
      throw StrandError("letter index " + std::to_string(i) + " out of range for " + std::to_string(*strands) +
                        " strands");
    }
    max_index = std::max(max_index, i);
    if (*kind == LetterKind::virtual_) {
      if (exponent % 2 != 0) letters.push_back(GeneratorLetter::rho(i));
    } else {
      int const sign = exponent < 0 ? -1 : 1;
      for (long long k = 0; k < exponent * sign; ++k) letters.push_back(GeneratorLetter::sigma(i, sign));
    }
    skip_space();
  }
  int const n = strands ? *strands : max_index + 1;
  if (n < 1) throw StrandError("strand count must be at least 1");
  return BraidWord(n, std::move(letters));
}

inline std::string format_letter(GeneratorLetter const& g) {
  std::string s = (g.is_virtual() ? "r" : "s") + std::to_string(g.index);
  if (g.exponent == -1) s += "^-1";
  return s;
}

inline std::string format_braid(BraidWord const& w) {
  std::string s;
  for (auto const& g : w.letters()) {
    if (!s.empty()) s += ' ';
    s += format_letter(g);
  }
  return s;
}

inline BraidWord compose(BraidWord const& a, BraidWord const& b) {
  if (a.strands() != b.strands()) throw StrandError("strand count mismatch in composition");
  std::vector<GeneratorLetter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

inline BraidWord invert(BraidWord const& a) {
  std::vector<GeneratorLetter> letters;
  letters.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) letters.push_back(it->inverse());
  return BraidWord(a.strands(), std::move(letters));
}

// g^-1 w g
inline BraidWord conjugate(BraidWord const& w, BraidWord const& g) { return compose(compose(invert(g), w), g); }

inline Permutation underlying_permutation(BraidWord const& a) {
  Permutation p = Permutation::identity(a.strands());
  std::vector<int> images = p.images();
  // Composing left to right with a transposition on the right swaps the
  // positions whose images are i and i+1; tracking the inverse is cheaper.
  std::vector<int> where(images.size());  // where[v - 1] = k with images[k - 1] = v
  for (std::size_t k = 0; k < images.size(); ++k) where[k] = static_cast<int>(k) + 1;
  for (auto const& g : a.letters()) {
    int const i = g.index;
    std::swap(where[i - 1], where[i]);
  }
  for (std::size_t v = 0; v < where.size(); ++v) images[where[v] - 1] = static_cast<int>(v) + 1;
  return Permutation(std::move(images));
}

inline int component_count(BraidWord const& a) { return underlying_permutation(a).cycle_count(); }

}  // namespace fused
