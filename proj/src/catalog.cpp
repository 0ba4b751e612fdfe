#include "kjdt/catalog.hpp"

#include <algorithm>
#include <functional>

namespace kjdt {

namespace {

std::string cell(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

using Covers = std::vector<std::pair<std::string, std::string>>;

// chain labels a1 < a2 < ... following one figure row
void add_run(std::vector<std::string>& elements, Covers& covers, const std::string& stem,
             int count) {
  for (int i = 1; i <= count; ++i) {
    elements.push_back(stem + std::to_string(i));
    if (i > 1) covers.emplace_back(stem + std::to_string(i - 1), stem + std::to_string(i));
  }
}

}  // namespace

CatalogPoset rectangle(int m, int n) {
  if (m < 1 || n < 1) throw Error("rectangle: sides must be positive");
  std::vector<std::string> elements;
  Covers covers;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      elements.push_back(cell(i, j));
      if (i < m) covers.emplace_back(cell(i, j), cell(i + 1, j));
      if (j < n) covers.emplace_back(cell(i, j), cell(i, j + 1));
    }
  CatalogPoset out;
  out.poset = Poset::make("rectangle(" + std::to_string(m) + "," + std::to_string(n) + ")",
                          elements, covers);
  out.family = "rectangle";
  out.params = {m, n};
  out.acyclic_nodes = {cell(m, 1)};
  if (cell(1, n) != cell(m, 1)) out.acyclic_nodes.push_back(cell(1, n));
  return out;
}

CatalogPoset shifted_staircase(int n) {
  if (n < 1) throw Error("shifted_staircase: size must be positive");
  std::vector<std::string> elements;
  Covers covers;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      elements.push_back(cell(i, j));
      if (i < n) covers.emplace_back(cell(i, j), cell(i + 1, j));
      if (j < i) covers.emplace_back(cell(i, j), cell(i, j + 1));
    }
  CatalogPoset out;
  out.poset = Poset::make("shifted_staircase(" + std::to_string(n) + ")", elements, covers);
  out.family = "shifted_staircase";
  out.params = {n};
  out.acyclic_nodes = {cell(n, 1)};
  return out;
}

CatalogPoset chained_dtd(int m, int n, int p) {
  if (n < 3) throw Error("chained_dtd: the diamond needs n >= 3");
  if (m < 1 || p < 1) throw Error("chained_dtd: chain sizes must be positive");
  std::vector<std::string> elements;
  Covers covers;
  add_run(elements, covers, "l", m);
  add_run(elements, covers, "r", p);
  add_run(elements, covers, "t", n - 2);
  // bottom tail runs downward: b1 sits just below the middles
  for (int i = 1; i <= n - 2; ++i) {
    elements.push_back("b" + std::to_string(i));
    if (i > 1) covers.emplace_back("b" + std::to_string(i), "b" + std::to_string(i - 1));
  }
  covers.emplace_back("b1", "l1");
  covers.emplace_back("b1", "r1");
  covers.emplace_back("l1", "t1");
  covers.emplace_back("r1", "t1");
  CatalogPoset out;
  std::string name = m == 1 && p == 1
                         ? "dtd(" + std::to_string(n) + ")"
                         : "dtd(" + std::to_string(m) + "," + std::to_string(n) + "," +
                               std::to_string(p) + ")";
  out.poset = Poset::make(name, elements, covers);
  out.family = m == 1 && p == 1 ? "double_tailed_diamond" : "chained_dtd";
  out.params = m == 1 && p == 1 ? std::vector<int>{n} : std::vector<int>{m, n, p};
  out.acyclic_nodes = {"l" + std::to_string(m), "r" + std::to_string(p)};
  return out;
}

CatalogPoset dtd(int k) {
  if (k < 3) throw Error("dtd: needs k >= 3");
  return chained_dtd(1, k, 1);
}

CatalogPoset cayley_moufang() {
  // transcribed from the Hasse diagram: four figure rows a(5) b(3) c(3) d(5)
  std::vector<std::string> elements;
  Covers covers;
  add_run(elements, covers, "a", 5);
  add_run(elements, covers, "b", 3);
  add_run(elements, covers, "c", 3);
  add_run(elements, covers, "d", 5);
  Covers cross = {{"a3", "b1"}, {"a4", "b2"}, {"a5", "b3"}, {"b2", "c1"}, {"b3", "c2"},
                  {"c1", "d1"}, {"c2", "d2"}, {"c3", "d3"}};
  covers.insert(covers.end(), cross.begin(), cross.end());
  CatalogPoset out;
  out.poset = Poset::make("cayley_moufang", elements, covers);
  out.family = "cayley_moufang";
  return out;
}

CatalogPoset bat() {
  std::vector<std::string> elements;
  Covers covers;
  add_run(elements, covers, "a", 6);
  add_run(elements, covers, "b", 3);
  add_run(elements, covers, "c", 3);
  add_run(elements, covers, "d", 5);
  add_run(elements, covers, "e", 5);
  add_run(elements, covers, "f", 5);
  Covers cross = {{"a4", "b1"}, {"a5", "b2"}, {"a6", "b3"}, {"b2", "c1"}, {"b3", "c2"},
                  {"c1", "d1"}, {"c2", "d2"}, {"c3", "d3"}, {"d1", "e1"}, {"d2", "e2"},
                  {"d3", "e3"}, {"d4", "e4"}, {"d5", "e5"}, {"e4", "f1"}, {"e5", "f2"}};
  covers.insert(covers.end(), cross.begin(), cross.end());
  CatalogPoset out;
  out.poset = Poset::make("bat", elements, covers);
  out.family = "bat";
  return out;
}

CatalogPoset chain(int n) {
  if (n < 1) throw Error("chain: size must be positive");
  std::vector<std::string> elements;
  Covers covers;
  add_run(elements, covers, "c", n);
  CatalogPoset out;
  out.poset = Poset::make("chain(" + std::to_string(n) + ")", elements, covers);
  out.family = "chain";
  out.params = {n};
  out.acyclic_nodes = elements;
  return out;
}

CatalogPoset catalog_poset(const std::string& family, const std::vector<int>& params) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw Error("catalog family " + family + " takes " + std::to_string(n) +
                  " parameter(s)");
  };
  if (family == "rectangle") {
    need(2);
    return rectangle(params[0], params[1]);
  }
  if (family == "shifted_staircase" || family == "staircase") {
    need(1);
    return shifted_staircase(params[0]);
  }
  if (family == "double_tailed_diamond" || family == "dtd") {
    need(1);
    return dtd(params[0]);
  }
  if (family == "chained_dtd") {
    need(3);
    return chained_dtd(params[0], params[1], params[2]);
  }
  if (family == "cayley_moufang") {
    need(0);
    return cayley_moufang();
  }
  if (family == "bat") {
    need(0);
    return bat();
  }
  if (family == "chain") {
    need(1);
    return chain(params[0]);
  }
  throw Error("unknown catalog family: " + family);
}

namespace {

void build_spec(const SlantSpecNode& node, bool allow_any, int& ordinal,
                const std::string& prefix, std::vector<std::string>& elements,
                Covers& covers,
                std::vector<std::pair<std::string, std::string>>& cross_edges) {
  const Poset& comp = *node.component.poset;
  for (const auto& name : comp.elements()) elements.push_back(prefix + name);
  for (auto [lo, hi] : comp.cover_pairs())
    covers.emplace_back(prefix + comp.element(lo), prefix + comp.element(hi));
  for (const auto& [at, child] : node.children) {
    comp.index_of(at);
    const auto& acyclic = node.component.acyclic_nodes;
    if (!allow_any && std::find(acyclic.begin(), acyclic.end(), at) == acyclic.end())
      throw Error("slant_sum_tree: " + at + " is not an acyclic node of " +
                  node.component.family);
    int child_ordinal = ++ordinal;
    std::string child_prefix = std::to_string(child_ordinal) + ":";
    const Poset& child_comp = *child.component.poset;
    if (child_comp.minimum() < 0)
      throw Error("slant_sum_tree: component has no minimum");
    cross_edges.emplace_back(prefix + at,
                             child_prefix + child_comp.element(child_comp.minimum()));
    build_spec(child, allow_any, ordinal, child_prefix, elements, covers, cross_edges);
  }
}

}  // namespace

PosetPtr slant_sum_tree(const SlantSpecNode& spec, bool allow_any) {
  std::vector<std::string> elements;
  Covers covers;
  std::vector<std::pair<std::string, std::string>> cross;
  int ordinal = 0;
  build_spec(spec, allow_any, ordinal, "", elements, covers, cross);
  covers.insert(covers.end(), cross.begin(), cross.end());
  return Poset::make("slant_sum_tree", elements, covers);
}

}  // namespace kjdt
