#pragma once

#include <string>
#include <vector>

#include "kjdt/poset.hpp"

namespace kjdt {

// A named poset family member with its designated attachment points.
struct CatalogPoset {
  PosetPtr poset;
  std::string family;
  std::vector<int> params;
  std::vector<std::string> acyclic_nodes;
};

// Product of two chains; elements "(i,j)", acyclic nodes at the ends of the
// first column and first row.
CatalogPoset rectangle(int m, int n);

// {(i,j) : j <= i <= n}; single acyclic node at the end of the longest row.
CatalogPoset shifted_staircase(int n);

// Double-tailed diamond D(k), k >= 3: chains of size k-2 above and below the
// two incomparable middles l1, r1. Elements t_i, l1, r1, b_i as in the
// standard indexing.
CatalogPoset dtd(int k);

// D(m,n,p): D(n) with chains slant-summed onto l1 (total left size m) and r1
// (total right size p). D(1,n,1) is exactly D(n).
CatalogPoset chained_dtd(int m, int n, int p);

// The two exceptional minuscule posets, stored as literal cover tables
// transcribed from their Hasse diagrams. No acyclic nodes.
CatalogPoset cayley_moufang();
CatalogPoset bat();

// Chain c1 < ... < cn. Chains decompose into one-element irreducibles whose
// only node is acyclic, so every element is an attachment point.
CatalogPoset chain(int n);

// Dispatch by family name ("rectangle", "shifted_staircase",
// "double_tailed_diamond"/"dtd", "chained_dtd", "cayley_moufang", "bat",
// "chain").
CatalogPoset catalog_poset(const std::string& family, const std::vector<int>& params);

// Tree-shaped slant-sum specification: children attach above named elements
// of this node's component.
struct SlantSpecNode {
  CatalogPoset component;
  std::vector<std::pair<std::string, SlantSpecNode>> children;
};

// Builds the iterated slant sum. Components after the first are renamed with
// "<ordinal>:" prefixes; a single-component spec keeps its names. Attachment
// elements must be acyclic nodes of their component unless allow_any is set.
PosetPtr slant_sum_tree(const SlantSpecNode& spec, bool allow_any = false);

}  // namespace kjdt
