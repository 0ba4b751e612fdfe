#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kjdt/rectify.hpp"

namespace kjdt {

// Element of the free abelian group on order ideals; zero coefficients are
// never stored.
struct FormalSum {
  std::map<Bits, long long> coeff;

  void add(const Bits& ideal, long long c) {
    if (c == 0) return;
    auto [it, fresh] = coeff.emplace(ideal, 0);
    it->second += c;
    if (it->second == 0) coeff.erase(it);
  }
  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.coeff == b.coeff;
  }
};

struct TableEntry {
  Bits lambda, mu, nu;
  long long t;
};

struct StructureConstantTable {
  PosetPtr poset;
  std::vector<Bits> ideals;          // canonical order
  std::vector<TableEntry> entries;   // nonzero entries, sorted by (lambda, mu, nu)
};

struct RingReport {
  bool identity_ok = true;
  bool commutative = true;
  bool associative = true;
  std::vector<std::string> violations;
  bool ok() const { return identity_ok && commutative && associative; }
};

// The combinatorial K-theory ring on the order-ideal basis of one poset.
// t_{lambda,mu}^{nu} is (-1)^{|nu|-|lambda|-|mu|} times the number of skew
// increasing tableaux of shape nu/lambda rectifying to the minimally-labeled
// M_mu. Every mu in use must have M_mu a unique rectification target; this is
// verified (once, cached) and NotUrt is thrown otherwise.
class KRing {
 public:
  explicit KRing(PosetPtr poset);

  const Poset& poset() const { return *poset_; }
  const std::vector<Bits>& ideals() const { return ideals_; }
  Rectifier& rectifier() { return rectifier_; }

  long long structure_constant(const Bits& lambda, const Bits& mu, const Bits& nu);
  FormalSum multiply(const Bits& lambda, const Bits& mu);
  FormalSum multiply(const FormalSum& a, const FormalSum& b);
  const StructureConstantTable& full_table();
  RingReport verify_ring();

  // URT status of M_mu, cached; throws on unknown ideal
  bool target_is_urt(const Bits& mu);

 private:
  void require_urt(const Bits& mu);
  int ideal_index(const Bits& ideal) const;
  void compute_table();

  PosetPtr poset_;
  std::vector<Bits> ideals_;
  std::map<Bits, int> ideal_index_;
  Rectifier rectifier_;
  std::map<Bits, bool> urt_cache_;
  std::optional<StructureConstantTable> table_;
  std::vector<long long> dense_;  // index (l * N + m) * N + n, valid with table_
};

}  // namespace kjdt
