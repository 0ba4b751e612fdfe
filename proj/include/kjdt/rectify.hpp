#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kjdt/tableau.hpp"

namespace kjdt {

// Per-poset rectification engine. Rectification sets are memoized on the
// canonical tableau serialization; the memo is a sharded map safe for
// concurrent use (all writers store equal values, so last write wins).
class Rectifier {
 public:
  using RectSet = std::shared_ptr<const std::vector<Tableau>>;

  explicit Rectifier(PosetPtr poset) : poset_(std::move(poset)) {}

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }

  // All rectifications, in canonical tableau order. Nonempty for every
  // valid input; a straight tableau rectifies to itself alone.
  RectSet rects(const Tableau& t);
  bool rectifies_uniquely(const Tableau& t) { return rects(t)->size() == 1; }

  // One slide sequence from `from` to `to`; throws if `to` is not a
  // rectification of `from`.
  std::vector<Bits> witness(const Tableau& from, const Tableau& to);

  // {U|_Q : U in rects(t)} for a subset Q given by an embedding.
  std::vector<Tableau> rects_restricted(const Tableau& t, const Embedding& e);

  // Legal slide choices explored by the search: nonempty subsets of inner
  // corners, one overlap cluster at a time. Slides at corners whose strict
  // up-sets do not meet commute and decompose, so restricting the walk to
  // single clusters reaches the same rectification set as all subsets.
  std::vector<Bits> slide_choices(const Tableau& t) const;

 private:
  static constexpr int kShards = 16;

  PosetPtr poset_;
  mutable std::array<std::mutex, kShards> locks_;
  std::array<std::unordered_map<std::string, RectSet>, kShards> cache_;

  RectSet lookup(const std::string& key) const;
  RectSet store(const std::string& key, std::vector<Tableau> value);
};

bool rect_set_contains(const std::vector<Tableau>& sorted_set, const Tableau& t);

struct UrtCounterexample {
  Tableau witness;                          // rectifies to the target and elsewhere
  std::vector<Tableau> rectifications;      // all of them, canonical order
  std::vector<std::vector<Bits>> slides;    // one slide sequence per rectification
};

struct UrtResult {
  bool is_urt = false;
  std::optional<UrtCounterexample> counterexample;
};

// Unique-rectification-target check. Enumerates every skew shape and every
// increasing filling with value set exactly Range(target); Range preservation
// makes this search complete. Returns the first counterexample in canonical
// (nu, lambda, filling) order.
UrtResult is_urt(Rectifier& r, const Tableau& target);

// Batched variant: all straight tableaux with value set {1..m} that fail to
// be URTs, found in one scan over all skew tableaux with that value set.
std::set<Tableau> non_urt_targets(Rectifier& r, int m);

// The tableau C on (base + one chain per attachment point) with
// rects restricted to the base equal to those of t. The chain at p has
// |principal_ideal(p)| cells and carries the smallest labels appearing in
// the posets attached at p, as many as fit. The decomposition (attachment
// points, attached parts) is derived from `base`, which must be an order
// ideal whose complement hangs off single covers.
Tableau chain_reduction(const Tableau& t, const Bits& base);

struct PchainResult {
  bool ok = false;
  std::vector<int> failing_sizes;  // chain size per point, when !ok
  std::optional<UrtCounterexample> counterexample;
};

// Checks that `target` stays a URT after slant-summing chains of every size
// from 0 up to bound(p) at each point; bound(p) defaults to
// |principal_ideal(p)| (the chain-reduction bound) unless max_chain is set.
// With no points this is exactly the URT check.
PchainResult is_pchain_urt(const Tableau& target, const std::vector<std::string>& points,
                           std::optional<int> max_chain = std::nullopt);

}  // namespace kjdt
