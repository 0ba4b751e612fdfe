#include "kjdt/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kjdt {

PosetPtr Poset::make(std::string name, std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& relations) {
  if (elements.empty()) throw InvalidPoset("poset must be nonempty");
  std::sort(elements.begin(), elements.end());
  for (size_t i = 1; i < elements.size(); ++i)
    if (elements[i] == elements[i - 1])
      throw InvalidPoset("duplicate element name: " + elements[i]);

  auto p = std::shared_ptr<Poset>(new Poset());
  p->name_ = std::move(name);
  p->names_ = std::move(elements);
  const int n = (int)p->names_.size();
  for (int i = 0; i < n; ++i) p->index_[p->names_[i]] = i;

  std::vector<std::set<int>> raw_up(n);
  for (const auto& [lo, hi] : relations) {
    int a = p->index_of(lo), b = p->index_of(hi);
    if (a == b) throw InvalidPoset("relation " + lo + " < " + hi + " is a cycle");
    raw_up[a].insert(b);
  }

  // Kahn's algorithm: topological order, or a cycle.
  std::vector<int> indeg(n, 0), topo;
  for (int x = 0; x < n; ++x)
    for (int y : raw_up[x]) ++indeg[y];
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) topo.push_back(x);
  for (size_t i = 0; i < topo.size(); ++i)
    for (int y : raw_up[topo[i]])
      if (--indeg[y] == 0) topo.push_back(y);
  if ((int)topo.size() != n) throw InvalidPoset("relations contain a cycle");

  // Reflexive-transitive closure, then reduce to covers.
  p->up_set_.assign(n, Bits(n));
  for (int i = n - 1; i >= 0; --i) {
    int x = topo[i];
    p->up_set_[x].set(x);
    for (int y : raw_up[x]) p->up_set_[x] |= p->up_set_[y];
  }
  p->down_set_.assign(n, Bits(n));
  for (int x = 0; x < n; ++x)
    p->up_set_[x].for_each([&](int y) { p->down_set_[y].set(x); });

  p->up_.assign(n, {});
  p->down_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    Bits strict_up = p->up_set_[x];
    strict_up.reset(x);
    strict_up.for_each([&](int y) {
      // y covers x unless something sits strictly between
      Bits between = strict_up & p->down_set_[y];
      between.reset(y);
      if (between.empty()) {
        p->up_[x].push_back(y);
        p->down_[y].push_back(x);
      }
    });
  }

  // connectivity of the comparability graph
  {
    Bits seen(n);
    std::vector<int> stack{0};
    seen.set(0);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& adj : {p->up_[x], p->down_[x]})
        for (int y : adj)
          if (!seen.test(y)) {
            seen.set(y);
            stack.push_back(y);
          }
    }
    if (seen.count() != n) throw InvalidPoset("poset is not connected");
  }

  p->height_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int x = topo[i];
    for (int y : p->up_[x]) p->height_[y] = std::max(p->height_[y], p->height_[x] + 1);
  }

  Bits mins = p->minimal_elements(p->all());
  p->minimum_ = mins.count() == 1 ? mins.first() : -1;
  return p;
}

int Poset::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownElement("unknown element: " + name);
  return it->second;
}

bool Poset::has_element(const std::string& name) const {
  return index_.count(name) != 0;
}

bool Poset::covers(int lo, int hi) const {
  for (int y : up_[lo])
    if (y == hi) return true;
  return false;
}

int Poset::max_height() const {
  int h = 0;
  for (int x = 0; x < size(); ++x) h = std::max(h, height_[x]);
  return h;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y : up_[x]) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  return out;
}

Bits Poset::all() const {
  Bits b(size());
  for (int i = 0; i < size(); ++i) b.set(i);
  return b;
}

Bits Poset::minimal_elements(const Bits& within) const {
  Bits out(size());
  within.for_each([&](int x) {
    Bits below = down_set_[x] & within;
    below.reset(x);
    if (below.empty()) out.set(x);
  });
  return out;
}

Bits Poset::maximal_elements(const Bits& within) const {
  Bits out(size());
  within.for_each([&](int x) {
    Bits above = up_set_[x] & within;
    above.reset(x);
    if (above.empty()) out.set(x);
  });
  return out;
}

bool is_order_ideal(const Poset& p, const Bits& s) {
  bool ok = true;
  s.for_each([&](int x) {
    if (!s.contains(p.down_set(x))) ok = false;
  });
  return ok;
}

bool is_order_filter(const Poset& p, const Bits& s) {
  bool ok = true;
  s.for_each([&](int x) {
    if (!s.contains(p.up_set(x))) ok = false;
  });
  return ok;
}

Bits down_closure(const Poset& p, const Bits& s) {
  Bits out(p.size());
  s.for_each([&](int x) { out |= p.down_set(x); });
  return out;
}

SkewShape make_skew_shape(const Poset& p, Bits nu, Bits lambda) {
  if (!is_order_ideal(p, nu)) throw InvalidShape("nu is not an order ideal");
  if (!is_order_ideal(p, lambda)) throw InvalidShape("lambda is not an order ideal");
  if (!nu.contains(lambda)) throw InvalidShape("lambda is not contained in nu");
  return SkewShape{std::move(nu), std::move(lambda)};
}

std::vector<Bits> order_ideals(const Poset& p) {
  std::set<Bits> seen;
  std::vector<Bits> frontier{Bits(p.size())};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const Bits& ideal : frontier) {
      Bits outside = p.all();
      outside.subtract(ideal);
      outside.for_each([&](int x) {
        Bits below = p.down_set(x);
        below.reset(x);
        if (ideal.contains(below)) {
          Bits grown = ideal;
          grown.set(x);
          if (seen.insert(grown).second) next.push_back(grown);
        }
      });
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};  // std::set order == canonical order
}

Bits inner_corners(const Poset& p, const Bits& lambda) {
  return p.maximal_elements(lambda);
}

Bits principal_ideal(const Poset& p, int x) { return p.down_set(x); }

Bits principal_ideal(const Poset& p, const std::string& x) {
  return p.down_set(p.index_of(x));
}

Bits bottom_chain(const Poset& p) {
  Bits chain(p.size());
  for (;;) {
    Bits rest = p.all();
    rest.subtract(chain);
    if (rest.empty()) return chain;
    Bits mins = p.minimal_elements(rest);
    if (mins.count() != 1) return chain;
    chain.set(mins.first());
  }
}

Bits bottom_tree(const Poset& p) {
  Bits out(p.size());
  for (int x = 0; x < p.size(); ++x)
    if (is_chain_subset(p, p.down_set(x))) out.set(x);
  return out;
}

bool is_chain_subset(const Poset& p, const Bits& s) {
  bool ok = true;
  s.for_each([&](int x) {
    s.for_each([&](int y) {
      if (x < y && !p.leq(x, y) && !p.leq(y, x)) ok = false;
    });
  });
  return ok;
}

bool is_chain(const Poset& p) { return is_chain_subset(p, p.all()); }

bool is_tree(const Poset& p) {
  if (p.minimum() < 0) return false;
  for (int x = 0; x < p.size(); ++x)
    if (x != p.minimum() && p.covers_down(x).size() != 1) return false;
  return true;
}

bool is_funnel(const Poset& p, const Bits& f) {
  if (f.empty()) return false;
  if (!is_order_filter(p, f)) return false;
  Bits mins = p.minimal_elements(f);
  if (mins.count() != 1) return false;
  int m = mins.first();
  if (!p.up_set(m).contains(f)) return false;
  bool ok = true;
  Bits outside = p.all();
  outside.subtract(f);
  outside.for_each([&](int q) {
    Bits above = p.up_set(q) & f;
    above.reset(q);
    if (!above.empty() && !p.leq(q, m)) ok = false;
  });
  return ok;
}

PosetPtr slant_sum(const Poset& p, const std::string& at, const Poset& q) {
  int attach = p.index_of(at);
  (void)attach;
  if (q.minimum() < 0) throw InvalidPoset("slant sum: attached poset has no minimum");
  for (const auto& name : q.elements())
    if (p.has_element(name))
      throw InvalidPoset("slant sum: element name collision: " + name);

  std::vector<std::string> elements = p.elements();
  elements.insert(elements.end(), q.elements().begin(), q.elements().end());
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : p.cover_pairs()) covers.emplace_back(p.element(lo), p.element(hi));
  for (auto [lo, hi] : q.cover_pairs()) covers.emplace_back(q.element(lo), q.element(hi));
  covers.emplace_back(at, q.element(q.minimum()));
  std::string name = p.name().empty() ? "slant_sum" : p.name() + "+" + q.name();
  return Poset::make(name, std::move(elements), covers);
}

PosetPtr iterated_slant_sum(
    const Poset& p, const std::vector<std::pair<std::string, PosetPtr>>& attachments) {
  std::vector<std::string> elements = p.elements();
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : p.cover_pairs()) covers.emplace_back(p.element(lo), p.element(hi));
  for (const auto& [at, q] : attachments) {
    p.index_of(at);  // attachment points live in p
    if (q->minimum() < 0) throw InvalidPoset("slant sum: attached poset has no minimum");
    elements.insert(elements.end(), q->elements().begin(), q->elements().end());
    for (auto [lo, hi] : q->cover_pairs())
      covers.emplace_back(q->element(lo), q->element(hi));
    covers.emplace_back(at, q->element(q->minimum()));
  }
  return Poset::make(p.name(), std::move(elements), covers);
}

Embedding induced_subposet(PosetPtr parent, const Bits& subset, std::string name) {
  if (subset.empty()) throw InvalidPoset("induced subposet must be nonempty");
  Embedding e;
  e.to_parent = subset.to_vector();
  e.from_parent.assign(parent->size(), -1);
  for (int i = 0; i < (int)e.to_parent.size(); ++i) e.from_parent[e.to_parent[i]] = i;

  std::vector<std::string> elements;
  for (int x : e.to_parent) elements.push_back(parent->element(x));
  std::vector<std::pair<std::string, std::string>> relations;
  for (int a : e.to_parent)
    for (int b : e.to_parent)
      if (a != b && parent->leq(a, b))
        relations.emplace_back(parent->element(a), parent->element(b));
  e.sub = Poset::make(std::move(name), std::move(elements), relations);
  // Poset::make sorts names, so sub indices follow the parent's name order.
  return e;
}

Bits map_to_sub(const Embedding& e, const Bits& parent_set) {
  Bits out(e.sub->size());
  for (int i = 0; i < (int)e.to_parent.size(); ++i)
    if (parent_set.test(e.to_parent[i])) out.set(i);
  return out;
}

Bits map_to_parent(const Embedding& e, const Bits& sub_set) {
  Bits out((int)e.from_parent.size());
  sub_set.for_each([&](int i) { out.set(e.to_parent[i]); });
  return out;
}

namespace {

// Iterated color refinement; colors are isomorphism-invariant.
std::vector<int> refined_colors(const Poset& p) {
  const int n = p.size();
  std::vector<long long> color(n);
  for (int x = 0; x < n; ++x)
    color[x] = ((long long)p.height(x) << 20) + ((long long)p.covers_up(x).size() << 10) +
               (long long)p.covers_down(x).size();
  std::vector<int> cls(n);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<long long>, int>> sig(n);
    for (int x = 0; x < n; ++x) {
      std::vector<long long> s{color[x]};
      std::vector<long long> up, down;
      for (int y : p.covers_up(x)) up.push_back(color[y]);
      for (int y : p.covers_down(x)) down.push_back(color[y]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      s.push_back(-1);
      s.insert(s.end(), up.begin(), up.end());
      s.push_back(-2);
      s.insert(s.end(), down.begin(), down.end());
      sig[x] = {std::move(s), x};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<long long> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
      next[sorted[i].second] = c;
    }
    if (next == color) break;
    color = next;
  }
  for (int x = 0; x < n; ++x) cls[x] = (int)color[x];
  return cls;
}

struct CanonSearch {
  const Poset& p;
  std::vector<int> color;
  std::vector<int> perm;      // perm[pos] = vertex placed at pos
  std::vector<int> pos_of;    // inverse, -1 while unplaced
  std::string best;
  std::string current;

  explicit CanonSearch(const Poset& poset) : p(poset), color(refined_colors(poset)) {
    perm.assign(p.size(), -1);
    pos_of.assign(p.size(), -1);
  }

  // row of cover bits from vertex at position `pos` to earlier positions
  std::string row(int pos) const {
    std::string r(pos, '0');
    for (int j = 0; j < pos; ++j)
      if (p.covers(perm[j], perm[pos]) || p.covers(perm[pos], perm[j]))
        r[j] = p.covers(perm[j], perm[pos]) ? 'u' : 'd';
    return r;
  }

  void dfs(int pos) {
    const int n = p.size();
    if (pos == n) {
      if (best.empty() || current < best) best = current;
      return;
    }
    // candidates: unplaced vertices of the minimal color still unplaced
    int want = -1;
    for (int x = 0; x < n; ++x)
      if (pos_of[x] < 0 && (want < 0 || color[x] < want)) want = color[x];
    for (int x = 0; x < n; ++x) {
      if (pos_of[x] >= 0 || color[x] != want) continue;
      perm[pos] = x;
      pos_of[x] = pos;
      std::string r = row(pos);
      size_t saved = current.size();
      current += r;
      current += '|';
      if (best.empty() || current.compare(0, current.size(), best, 0, current.size()) <= 0)
        dfs(pos + 1);
      current.resize(saved);
      pos_of[x] = -1;
      perm[pos] = -1;
    }
  }
};

}  // namespace

std::string canonical_form(const Poset& p) {
  CanonSearch search(p);
  // color multiset prefix keeps forms from colliding across distinct profiles
  std::vector<int> colors = search.color;
  std::sort(colors.begin(), colors.end());
  std::string prefix = std::to_string(p.size()) + ":";
  for (int c : colors) prefix += std::to_string(c) + ",";
  prefix += ";";
  search.dfs(0);
  return prefix + search.best;
}

bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace kjdt
