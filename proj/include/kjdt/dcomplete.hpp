#pragma once

#include <string>
#include <vector>

#include "kjdt/poset.hpp"

namespace kjdt {

enum class IntervalKind { D, D0 };

// [x, z] order-isomorphic to the double-tailed diamond D(k), or to
// D0(k) = D(k) minus its minimum.
struct IntervalWitness {
  IntervalKind kind;
  int k;
  int x, z;
};

// All matching intervals, ordered by (x, z). Recognition is structural:
// cardinality, a unique incomparable pair, and chain sizes below/above it.
// Requires k >= 3 for D and k >= 4 for D0.
std::vector<IntervalWitness> find_intervals(const Poset& p, IntervalKind kind, int k);

bool is_interval_of_kind(const Poset& p, int x, int z, IntervalKind kind, int k);

struct DViolation {
  int k = 0;
  int condition = 0;  // 1..3, numbering the defining conditions
  std::vector<int> elements;
  std::string detail;
};

struct DReport {
  bool complete = true;
  std::vector<DViolation> violations;
};

// The three conditions on covers of pairs and on D(3)-intervals.
DReport check_d3_complete(const Poset& p);

// k >= 4: no incomplete D0(k)-intervals, D(k)-interval minima have a unique
// cover, and no overlapping D0(k)-intervals.
DReport check_dk_complete(const Poset& p, int k);

// D(k)-complete for every k; k is scanned up to (|P|+3)/2, past which no
// D0(k)-interval fits.
DReport check_dcomplete(const Poset& p);
bool is_dcomplete(const Poset& p);

}  // namespace kjdt
