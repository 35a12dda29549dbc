#pragma once

// Strand elimination. rho() removes the top strand of a non-pure braid
// without changing the fused closure; rho_star() iterates it down to a pure
// braid with one strand per closure component.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fused/braid.hpp"
#include "fused/normal_form.hpp"

namespace fused {

struct ReductionStep {
  int n = 0;      // strands before the step
  int s = 0;      // largest moved strand
  int k_s = 0;    // image of s
  int shift = 0;  // conjugator exponent n - s, for B_{1,n}^{n-s}
  int k_n = 0;    // image of n after conjugation
  SemidirectForm gamma;
  PairWord dropped;  // the w_{n-1} factor on {n-1, n}
  SemidirectForm result;
};

using ReductionTrace = std::vector<ReductionStep>;

namespace detail {

inline SemidirectForm rho_step(SemidirectForm const& a, ReductionStep* record) {
  if (a.is_pure()) return a;
  int const n = a.strands();
  int const s = a.perm.max_moved();
  int const k_s = a.perm(s);

  SemidirectForm a1 = a;
  if (s != n) {
    SemidirectForm const shift = power(b_word(1, n, n), n - s);
    a1 = multiply(multiply(inverse(shift), a), shift);
  }

  StrandFactorization const f = factor_top_strand(a1);
  if (f.s != n || f.x.size() != 1) throw std::logic_error("conjugated braid does not move the top strand");
  int const k_n = f.k_s;

  PureNormalForm const& x_n = f.x.front();
  PairWord dropped = x_n.factor({n - 1, n});
  PureNormalForm const kept = x_n.filtered([n](Pair p) { return p != Pair{n - 1, n}; });
  // w_i rho_{n-1} = rho_{n-1} w_i^{rho_{n-1}}; the lone rho_{n-1} is then
  // removed by a Markov destabilization.
  PureNormalForm const moved = permute_indices(kept, Permutation::adjacent_transposition(n - 1, n));

  SemidirectForm full = multiply(f.gamma, SemidirectForm::from_pure(moved));
  full = multiply(full, b_word(k_n, n - 1, n));

  if (full.perm(n) != n || full.pure.touches(n)) {
    throw std::logic_error("reduction result still involves strand " + std::to_string(n));
  }
  SemidirectForm result{full.pure.with_strands(n - 1), full.perm.restricted(n - 1)};

  if (record) {
    record->n = n;
    record->s = s;
    record->k_s = k_s;
    record->shift = n - s;
    record->k_n = k_n;
    record->gamma = f.gamma;
    record->dropped = std::move(dropped);
    record->result = result;
  }
  return result;
}

}  // namespace detail

inline SemidirectForm rho(SemidirectForm const& a) { return detail::rho_step(a, nullptr); }

struct ReductionResult {
  PureNormalForm pure;
  ReductionTrace trace;
};

inline ReductionResult rho_star(SemidirectForm a) {
  ReductionTrace trace;
  while (!a.is_pure()) {
    ReductionStep step;
    a = detail::rho_step(a, &step);
    trace.push_back(std::move(step));
  }
  return {std::move(a.pure), std::move(trace)};
}

inline ReductionResult rho_star(BraidWord const& w) { return rho_star(semidirect_decompose(w)); }

}  // namespace fused
