#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fused {

// Element of S_n stored as 1-based images: images()[k - 1] == (*this)(k).
//
// Products are read left to right, the same way braid words are: for
// p.then(q) the point k goes to q(p(k)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1]) {
        throw std::invalid_argument("not a permutation of 1..n");
      }
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) images[k] = k + 1;
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // The transposition (i i+1).
  static Permutation adjacent_transposition(int i, int n) {
    Permutation p = identity(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  std::vector<int> const& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (int k = 0; k < size(); ++k) {
      if (images_[k] != k + 1) return false;
    }
    return true;
  }

  // Largest point moved by the permutation, 0 when it is the identity.
  int max_moved() const noexcept {
    for (int k = size(); k >= 1; --k) {
      if (images_[k - 1] != k) return k;
    }
    return 0;
  }

  Permutation then(Permutation const& next) const {
    if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
    Permutation r;
    r.images_.resize(images_.size());
    for (int k = 0; k < size(); ++k) r.images_[k] = next.images_[images_[k] - 1];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (int k = 0; k < size(); ++k) r.images_[images_[k] - 1] = k + 1;
    return r;
  }

  Permutation power(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long m = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Permutation acc = identity(size());
    while (m > 0) {
      if (m & 1u) acc = acc.then(base);
      base = base.then(base);
      m >>= 1u;
    }
    return acc;
  }

  // Cycles in order of their smallest element; each cycle starts at it.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= size(); ++start) {
      if (seen[start - 1]) continue;
      std::vector<int> cycle;
      for (int k = start; !seen[k - 1]; k = images_[k - 1]) {
        seen[k - 1] = true;
        cycle.push_back(k);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  int cycle_count() const { return static_cast<int>(cycles().size()); }

  // Extends to n points by fixing the new ones.
  Permutation extended(int n) const {
    Permutation r = identity(std::max(n, size()));
    std::copy(images_.begin(), images_.end(), r.images_.begin());
    return r;
  }

  // Drops the top point; it must be fixed.
  Permutation restricted(int n) const {
    for (int k = n + 1; k <= size(); ++k) {
      if (images_[k - 1] != k) throw std::logic_error("restriction would drop a moved point");
    }
    Permutation r;
    r.images_.assign(images_.begin(), images_.begin() + n);
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(images_[k]);
    }
    return s + "]";
  }

  friend bool operator==(Permutation const&, Permutation const&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace fused
