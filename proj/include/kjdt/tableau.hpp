#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kjdt/poset.hpp"

namespace kjdt {

// Strictly order-preserving labeling of the cells nu \ lambda by positive
// integers. Immutable after construction; the factory validates the shape
// and the increasing condition.
class Tableau {
 public:
  // labels[i] must be positive exactly on nu \ lambda and zero elsewhere
  static Tableau make(PosetPtr poset, Bits nu, Bits lambda, std::vector<int> labels);
  static Tableau empty(PosetPtr poset);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  const Bits& nu() const { return nu_; }
  const Bits& lambda() const { return lambda_; }
  Bits domain() const { return difference(nu_, lambda_); }
  int label(int x) const { return labels_[x]; }  // 0 outside the domain
  const std::vector<int>& labels() const { return labels_; }

  bool straight() const { return lambda_.empty(); }
  bool has_labels() const;
  int max_label() const;            // 0 for the empty tableau
  std::vector<int> range() const;   // sorted distinct labels

  // serialization for memoization keys: one byte per element in canonical
  // poset order, marking out-of-nu / skewed / label
  std::string key() const;

  friend bool operator==(const Tableau& a, const Tableau& b);
  friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
  friend bool operator<(const Tableau& a, const Tableau& b);

 private:
  Tableau(PosetPtr p, Bits nu, Bits lambda, std::vector<int> labels)
      : poset_(std::move(p)), nu_(std::move(nu)), lambda_(std::move(lambda)),
        labels_(std::move(labels)) {}

  PosetPtr poset_;
  Bits nu_, lambda_;
  std::vector<int> labels_;
};

// Labeling that also admits the dot symbol, standing for one common
// interpolating rational value. Valid iff the dotted cells form an
// antichain, every numeric label below a dot is smaller than every numeric
// label above a dot, and numeric comparabilities strictly increase.
class DottedTableau {
 public:
  static constexpr int kDot = -1;

  static DottedTableau make(PosetPtr poset, Bits nu, Bits lambda, std::vector<int> labels);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  const Bits& nu() const { return nu_; }
  const Bits& lambda() const { return lambda_; }
  Bits domain() const { return difference(nu_, lambda_); }
  int label(int x) const { return labels_[x]; }
  const std::vector<int>& labels() const { return labels_; }
  Bits dots() const;

  friend bool operator==(const DottedTableau& a, const DottedTableau& b);

 private:
  DottedTableau(PosetPtr p, Bits nu, Bits lambda, std::vector<int> labels)
      : poset_(std::move(p)), nu_(std::move(nu)), lambda_(std::move(lambda)),
        labels_(std::move(labels)) {}

  PosetPtr poset_;
  Bits nu_, lambda_;
  std::vector<int> labels_;
};

// gamma must be a nonempty set of inner corners; the cells grow by gamma
// and the skewed-out part shrinks to lambda \ gamma.
DottedTableau add_dots(const Tableau& t, const Bits& gamma);

// Simultaneous exchange: a dotted cell receives n exactly when some cover
// of it carries n; a cell carrying n is dotted exactly when some element it
// covers carries a dot. Labels migrate downward, dots upward.
DottedTableau swap_dots(const DottedTableau& t, int n);

// Restriction to the numeric support; its union with lambda must again be
// an order ideal (always true at the end of a slide).
Tableau remove_dots(const DottedTableau& t);

// RemoveDots ∘ Swap_{•,max} ∘ ... ∘ Swap_{•,1} ∘ AddDots_gamma
Tableau slide(const Tableau& t, const Bits& gamma);
Tableau slide_sequence(const Tableau& t, const std::vector<Bits>& gammas);

struct SlideTrace {
  DottedTableau after_add_dots;
  std::vector<DottedTableau> after_swaps;  // one entry per swap 1..max
  Tableau result;
};
SlideTrace slide_trace(const Tableau& t, const Bits& gamma);

// M_lambda: the nodewise-minimum increasing tableau of shape lambda;
// M(x) is the size of the longest chain in lambda with maximum x.
Tableau minimal_tableau(PosetPtr poset, const Bits& shape);

// Labels surviving on subset, keyed by element name. Agreement comparisons
// use this; it is well-defined for any subset.
std::map<std::string, int> restrict_labels(const Tableau& t, const Bits& subset);

// Restriction as a tableau on the induced subposet; the shape is the down
// closure of the surviving cells within the subposet.
Tableau restrict_to(const Tableau& t, const Embedding& e);

// (T -> U)|_F: restriction of T to the funnel cells whose label is at least
// U(0̂_F); empty when 0̂_F is not a cell of T or carries no label in U.
Tableau corresponding_tableau(const Tableau& t, const Tableau& u, const Embedding& funnel);

// All strictly order-preserving labelings of nu \ lambda with values in
// {1..m} (onto {1..m} when surjective is set), in lexicographic order of the
// label vector. The callback returns false to stop; the function returns
// true when the enumeration ran to completion. The labels buffer is reused
// between calls.
bool for_each_increasing_filling(const Poset& p, const Bits& nu, const Bits& lambda, int m,
                                 bool surjective,
                                 const std::function<bool(const std::vector<int>&)>& f);

}  // namespace kjdt
