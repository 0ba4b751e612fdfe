#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kjdt/json_io.hpp"
#include "kjdt/rectify.hpp"

namespace kjdt {

// Outcome of one conjecture run on one poset. Counterexample reports are
// self-contained: they embed the poset and witnesses that replay.
struct SearchWitness {
  Tableau tableau;                       // skew witness
  std::vector<Tableau> rectifications;   // at least two, or two with distinct
                                         // bottom-tree restrictions
};

struct SearchReport {
  std::string target;  // "urt-existence" or "bottom-tree"
  PosetPtr poset;
  enum class Status { verified, counterexample, skipped } status = Status::verified;
  std::string skip_reason;
  int label_bound = 0;                   // bottom-tree searches only
  std::vector<SearchWitness> witnesses;
};

// Does every order ideal carry a minimally-labeled URT? Skipped unless the
// poset is d-complete. The core runs without the gate (used by tests to
// exercise the counterexample path on posets outside the conjecture).
SearchReport conjecture_urt(PosetPtr p);
SearchReport conjecture_urt_core(PosetPtr p);

// Do all rectifications of every skew tableau agree on the bottom tree?
// Labels are searched up to label_bound (default |P|), exhaustively over
// label-set order types.
SearchReport conjecture_bottom_tree(PosetPtr p, std::optional<int> label_bound = std::nullopt);
SearchReport conjecture_bottom_tree_core(PosetPtr p, int label_bound);

Json search_report_to_json(const SearchReport& report);

}  // namespace kjdt
