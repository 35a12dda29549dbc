#pragma once

// JSON renderings of invariants, reduction traces and fuzz reports.

#include <nlohmann/json.hpp>

#include "fused/harness.hpp"
#include "fused/invariant.hpp"
#include "fused/reduction.hpp"

namespace fused {

using json = nlohmann::json;

inline json matrix_to_json(LinkingMatrix const& l) { return l.rows(); }

inline LinkingMatrix matrix_from_json(json const& j) {
  return LinkingMatrix::from_rows(j.get<std::vector<std::vector<std::int64_t>>>());
}

// {"components": m, "matrix": [[..]], "canonical": [[..]], "witness": [..]}
inline json invariant_to_json(LinkingMatrix const& matrix, CanonicalInvariant const& inv) {
  return json{{"components", inv.components},
              {"matrix", matrix_to_json(matrix)},
              {"canonical", matrix_to_json(inv.canonical)},
              {"witness", inv.witness.images()}};
}

inline json step_to_json(ReductionStep const& step) {
  return json{{"n", step.n},
              {"s", step.s},
              {"k_s", step.k_s},
              {"shift", step.shift},
              {"k_n", step.k_n},
              {"gamma", format_semidirect(step.gamma)},
              {"dropped", describe_pair_word(step.dropped)},
              {"result", format_semidirect(step.result)}};
}

inline json trace_to_json(ReductionTrace const& trace) {
  json out = json::array();
  for (auto const& step : trace) out.push_back(step_to_json(step));
  return out;
}

inline json failure_to_json(FuzzFailure const& f) {
  json j{{"trial", f.trial},
         {"seed", f.seed},
         {"word", format_braid(f.word)},
         {"strands", f.word.strands()},
         {"move", f.move},
         {"reason", f.reason}};
  if (f.before.components > 0) j["invariant_before"] = matrix_to_json(f.before.canonical);
  if (f.after.components > 0) j["invariant_after"] = matrix_to_json(f.after.canonical);
  return j;
}

inline json report_to_json(FuzzReport const& r) {
  json failures = json::array();
  for (auto const& f : r.failures) failures.push_back(failure_to_json(f));
  return json{{"trials", r.trials},
              {"passed", r.passed()},
              {"failure_count", r.failures.size()},
              {"failures", std::move(failures)},
              {"elapsed_seconds", r.elapsed_seconds}};
}

}  // namespace fused
