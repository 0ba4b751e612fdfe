#pragma once

// Independent oracles for the test suite: definitional brute force, kept
// free of the search strategies used by the library (no memoization, no
// corner clustering, power-set enumeration instead of lattice walks).

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "kjdt/poset.hpp"
#include "kjdt/tableau.hpp"

namespace oracle {

using kjdt::Bits;
using kjdt::Poset;
using kjdt::PosetPtr;
using kjdt::Tableau;

// The running 6-element example: {(1,1),(1,2),(1,3),(2,1),(2,2),(3,1)}
// under componentwise order.
inline PosetPtr poset_q() {
  std::vector<std::string> elements = {"(1,1)", "(1,2)", "(1,3)", "(2,1)", "(2,2)", "(3,1)"};
  std::vector<std::pair<std::string, std::string>> relations;
  auto parse = [](const std::string& s) {
    return std::make_pair(s[1] - '0', s[3] - '0');
  };
  for (const auto& a : elements)
    for (const auto& b : elements) {
      auto [a1, a2] = parse(a);
      auto [b1, b2] = parse(b);
      if (a != b && a1 <= b1 && a2 <= b2) relations.emplace_back(a, b);
    }
  return Poset::make("Q", elements, relations);
}

// componentwise comparison on "(i,j)" names
inline bool componentwise_leq(const std::string& a, const std::string& b) {
  auto parse = [](const std::string& s) {
    int i = std::stoi(s.substr(1, s.find(',') - 1));
    int j = std::stoi(s.substr(s.find(',') + 1));
    return std::make_pair(i, j);
  };
  auto [a1, a2] = parse(a);
  auto [b1, b2] = parse(b);
  return a1 <= b1 && a2 <= b2;
}

// all downward-closed subsets by power-set filtering
inline std::vector<Bits> brute_force_ideals(const Poset& p) {
  std::vector<Bits> out;
  const int n = p.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.set(i);
    bool closed = true;
    for (int x = 0; x < n && closed; ++x)
      if (s.test(x))
        for (int y = 0; y < n; ++y)
          if (p.leq(y, x) && !s.test(y)) closed = false;
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// rectification sets straight from the definition: level sets S_0, S_1, ...
// with every nonempty subset of inner corners at every step
inline std::set<Tableau> naive_rects(const Tableau& t) {
  std::set<Tableau> results;
  std::set<Tableau> level{t};
  while (!level.empty()) {
    std::set<Tableau> next;
    for (const Tableau& s : level) {
      if (s.straight()) {
        results.insert(s);
        continue;
      }
      std::vector<int> corners = kjdt::inner_corners(s.poset(), s.lambda()).to_vector();
      for (unsigned mask = 1; mask < (1u << corners.size()); ++mask) {
        Bits gamma(s.poset().size());
        for (size_t i = 0; i < corners.size(); ++i)
          if (mask & (1u << i)) gamma.set(corners[i]);
        next.insert(kjdt::slide(s, gamma));
      }
    }
    level = std::move(next);
  }
  return results;
}

// nodewise minimum over every increasing filling, by plain odometer over
// label vectors with values up to |shape|
inline std::vector<int> brute_force_minimal_labels(const Poset& p, const Bits& shape) {
  std::vector<int> cells = shape.to_vector();
  const int k = (int)cells.size();
  std::vector<int> best;
  std::vector<int> assign(k, 1);
  const int max_label = std::max(k, 1);
  for (;;) {
    bool increasing = true;
    for (int i = 0; i < k && increasing; ++i)
      for (int j = 0; j < k && increasing; ++j)
        if (i != j && p.leq(cells[i], cells[j]) && assign[i] >= assign[j])
          increasing = false;
    if (increasing) {
      if (best.empty())
        best = assign;
      else
        for (int i = 0; i < k; ++i) best[i] = std::min(best[i], assign[i]);
    }
    int pos = k - 1;
    while (pos >= 0 && assign[pos] == max_label) assign[pos--] = 1;
    if (pos < 0) break;
    ++assign[pos];
  }
  std::vector<int> labels(p.size(), 0);
  for (int i = 0; i < k; ++i) labels[cells[i]] = best[i];
  return labels;
}

}  // namespace oracle
