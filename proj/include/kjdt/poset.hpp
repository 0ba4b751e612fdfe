#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kjdt/bits.hpp"
#include "kjdt/error.hpp"

namespace kjdt {

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

// Finite, nonempty, connected poset stored by its cover relation.
//
// Construction accepts arbitrary order relations (redundant pairs are fine),
// closes them transitively, rejects cycles and disconnected input, and keeps
// the transitive reduction. Elements are re-ordered lexicographically by
// name; that order is the canonical element order used by every listing.
class Poset {
 public:
  static PosetPtr make(std::string name, std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& relations);

  int size() const { return (int)names_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& element(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;  // throws UnknownElement
  bool has_element(const std::string& name) const;

  bool leq(int x, int y) const { return up_set_[x].test(y); }
  bool leq(const std::string& x, const std::string& y) const {
    return leq(index_of(x), index_of(y));
  }
  bool covers(int lo, int hi) const;  // hi covers lo

  const std::vector<int>& covers_up(int x) const { return up_[x]; }
  const std::vector<int>& covers_down(int x) const { return down_[x]; }
  const Bits& up_set(int x) const { return up_set_[x]; }      // {y : y >= x}
  const Bits& down_set(int x) const { return down_set_[x]; }  // {y : y <= x}
  int height(int x) const { return height_[x]; }  // longest chain below x, 0-based
  int max_height() const;

  std::vector<std::pair<int, int>> cover_pairs() const;  // sorted (lo, hi)
  Bits all() const;
  Bits empty_set() const { return Bits(size()); }
  int minimum() const { return minimum_; }  // index of 0̂ or -1
  Bits minimal_elements(const Bits& within) const;
  Bits maximal_elements(const Bits& within) const;

 private:
  Poset() = default;

  std::string name_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<Bits> up_set_, down_set_;
  std::vector<int> height_;
  int minimum_ = -1;
};

// A pair of nested order ideals lambda ⊆ nu; cells are nu \ lambda.
struct SkewShape {
  Bits nu, lambda;
};

// Validates both ideals and the nesting; throws InvalidShape.
SkewShape make_skew_shape(const Poset& p, Bits nu, Bits lambda);

bool is_order_ideal(const Poset& p, const Bits& s);
bool is_order_filter(const Poset& p, const Bits& s);
Bits down_closure(const Poset& p, const Bits& s);

// Every downward-closed subset exactly once, including the empty ideal, in
// canonical (size, then lexicographic-membership) order. Walks the ideal
// lattice by single-element additions rather than filtering the power set.
std::vector<Bits> order_ideals(const Poset& p);

// Maximal elements of lambda: the sites where slides may begin. Always an
// antichain.
Bits inner_corners(const Poset& p, const Bits& lambda);
inline Bits inner_corners(const Poset& p, const SkewShape& s) {
  return inner_corners(p, s.lambda);
}

Bits principal_ideal(const Poset& p, int x);
Bits principal_ideal(const Poset& p, const std::string& x);

// C_0 = min(P), C_{i+1} = C_i ∪ min(P \ C_i), where min(.) is the unique
// minimum when one exists and empty otherwise.
Bits bottom_chain(const Poset& p);

// {x : principal ideal of x is a chain} — the maximal tree-shaped order ideal.
Bits bottom_tree(const Poset& p);

bool is_chain(const Poset& p);
bool is_chain_subset(const Poset& p, const Bits& s);
bool is_tree(const Poset& p);

// Order filter with a minimum m such that every element below the filter but
// under some filter element is under m.
bool is_funnel(const Poset& p, const Bits& f);

// Glues q above the element `at` of p by the single new cover (at, 0̂_q).
// Requires disjoint element names and a minimum in q.
PosetPtr slant_sum(const Poset& p, const std::string& at, const Poset& q);

// Result is independent of attachment order (all attachment points lie in p).
PosetPtr iterated_slant_sum(
    const Poset& p, const std::vector<std::pair<std::string, PosetPtr>>& attachments);

// Subposet on `subset` with the restricted order; covers are recomputed.
// `to_parent` maps sub indices to parent indices, `from_parent` the reverse
// (-1 outside the subset).
struct Embedding {
  PosetPtr sub;
  std::vector<int> to_parent;
  std::vector<int> from_parent;
};
Embedding induced_subposet(PosetPtr parent, const Bits& subset, std::string name);

Bits map_to_sub(const Embedding& e, const Bits& parent_set);
Bits map_to_parent(const Embedding& e, const Bits& sub_set);

// Canonical encoding of the cover relation, equal iff posets are isomorphic.
// Exhaustive within refinement classes; intended for small posets.
std::string canonical_form(const Poset& p);
bool isomorphic(const Poset& a, const Poset& b);

}  // namespace kjdt
