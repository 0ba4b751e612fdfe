#pragma once

// Exhaustive small-structure generators: every connected poset and every
// rooted tree on up to a handful of elements, one representative per
// isomorphism class.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kjdt/poset.hpp"

namespace gen {

using kjdt::Bits;
using kjdt::Poset;
using kjdt::PosetPtr;

namespace detail {

// naturally labeled partial orders as strict down-set rows; element k is
// added on top of an arbitrary ideal of the first k elements
using Matrix = std::vector<unsigned>;  // bit i of row[j]: i < j

inline void extend(const Matrix& m, int target, std::vector<Matrix>& out) {
  const int k = (int)m.size();
  if (k == target) {
    out.push_back(m);
    return;
  }
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    bool ideal = true;
    for (int i = 0; i < k && ideal; ++i)
      if ((mask >> i) & 1)
        if ((m[i] & mask) != m[i]) ideal = false;  // predecessors of i too
    if (!ideal) continue;
    Matrix grown = m;
    grown.push_back(mask);
    extend(grown, target, out);
  }
}

inline PosetPtr to_poset(const Matrix& m) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  for (int i = 0; i < (int)m.size(); ++i) elements.push_back("e" + std::to_string(i));
  for (int j = 0; j < (int)m.size(); ++j)
    for (int i = 0; i < j; ++i)
      if ((m[j] >> i) & 1) relations.emplace_back(elements[i], elements[j]);
  return Poset::make("p" + std::to_string(m.size()), elements, relations);
}

}  // namespace detail

// every connected poset with exactly n elements, up to isomorphism
inline std::vector<PosetPtr> connected_posets(int n) {
  std::vector<detail::Matrix> all;
  detail::extend({}, n, all);
  std::vector<PosetPtr> out;
  std::set<std::string> seen;
  for (const auto& m : all) {
    PosetPtr p;
    try {
      p = detail::to_poset(m);
    } catch (const kjdt::InvalidPoset&) {
      continue;  // disconnected
    }
    if (seen.insert(kjdt::canonical_form(*p)).second) out.push_back(p);
  }
  return out;
}

// every rooted tree (poset with 0̂ where all other elements have one parent)
// with exactly n elements, up to isomorphism
inline std::vector<PosetPtr> trees(int n) {
  // canonical parent vectors: parent[i] < i, children subtrees in
  // non-increasing encoded order; dedupe via canonical_form for safety
  std::vector<std::vector<int>> parents{{}};
  for (int v = 1; v < n; ++v) {
    std::vector<std::vector<int>> next;
    for (const auto& par : parents)
      for (int candidate = 0; candidate < v; ++candidate) {
        auto grown = par;
        grown.push_back(candidate);
        next.push_back(std::move(grown));
      }
    parents = std::move(next);
  }
  std::vector<PosetPtr> out;
  std::set<std::string> seen;
  for (const auto& par : parents) {
    std::vector<std::string> elements;
    for (int i = 0; i < n; ++i)
      elements.push_back("t" + std::string(i < 10 ? "0" : "") + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> relations;
    for (int v = 1; v < n; ++v) relations.emplace_back(elements[par[v - 1]], elements[v]);
    PosetPtr p = Poset::make("tree" + std::to_string(n), elements, relations);
    if (seen.insert(kjdt::canonical_form(*p)).second) out.push_back(p);
  }
  return out;
}

}  // namespace gen
