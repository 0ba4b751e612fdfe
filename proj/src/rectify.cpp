#include "kjdt/rectify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "kjdt/parallel.hpp"

namespace kjdt {

namespace {

size_t shard_of(const std::string& key) {
  return std::hash<std::string>{}(key) % 16;
}

}  // namespace

Rectifier::RectSet Rectifier::lookup(const std::string& key) const {
  size_t s = shard_of(key);
  std::lock_guard<std::mutex> lock(locks_[s]);
  auto it = cache_[s].find(key);
  return it == cache_[s].end() ? nullptr : it->second;
}

Rectifier::RectSet Rectifier::store(const std::string& key, std::vector<Tableau> value) {
  auto shared = std::make_shared<const std::vector<Tableau>>(std::move(value));
  size_t s = shard_of(key);
  std::lock_guard<std::mutex> lock(locks_[s]);
  cache_[s][key] = shared;
  return shared;
}

std::vector<Bits> Rectifier::slide_choices(const Tableau& t) const {
  const Poset& p = *poset_;
  std::vector<int> corners = inner_corners(p, t.lambda()).to_vector();
  const int c = (int)corners.size();
  if (c == 0) return {};

  // cluster corners whose strict up-sets intersect
  std::vector<int> parent(c);
  for (int i = 0; i < c; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  std::vector<Bits> strict_up(c);
  for (int i = 0; i < c; ++i) {
    strict_up[i] = p.up_set(corners[i]);
    strict_up[i].reset(corners[i]);
  }
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j)
      if (strict_up[i].intersects(strict_up[j])) parent[find(i)] = find(j);

  std::map<int, std::vector<int>> clusters;  // root -> member corner positions
  for (int i = 0; i < c; ++i) clusters[find(i)].push_back(i);

  std::vector<Bits> out;
  for (auto& [root, members] : clusters) {
    const int k = (int)members.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Bits gamma(p.size());
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) gamma.set(corners[members[b]]);
      out.push_back(std::move(gamma));
    }
  }
  return out;
}

Rectifier::RectSet Rectifier::rects(const Tableau& t) {
  std::string key = t.key();
  if (auto hit = lookup(key)) return hit;
  std::vector<Tableau> out;
  if (t.straight()) {
    out.push_back(t);
  } else {
    std::set<Tableau> acc;
    for (const Bits& gamma : slide_choices(t)) {
      auto sub = rects(slide(t, gamma));
      acc.insert(sub->begin(), sub->end());
    }
    out.assign(acc.begin(), acc.end());
  }
  return store(key, std::move(out));
}

bool rect_set_contains(const std::vector<Tableau>& sorted_set, const Tableau& t) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), t);
}

std::vector<Bits> Rectifier::witness(const Tableau& from, const Tableau& to) {
  if (!rect_set_contains(*rects(from), to))
    throw Error("witness: target is not a rectification of the source");
  std::vector<Bits> seq;
  Tableau cur = from;
  while (!cur.straight()) {
    bool advanced = false;
    for (const Bits& gamma : slide_choices(cur)) {
      Tableau next = slide(cur, gamma);
      if (rect_set_contains(*rects(next), to)) {
        seq.push_back(gamma);
        cur = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw Error("witness: reconstruction failed");
  }
  return seq;
}

std::vector<Tableau> Rectifier::rects_restricted(const Tableau& t, const Embedding& e) {
  std::set<Tableau> out;
  for (const Tableau& u : *rects(t)) out.insert(restrict_to(u, e));
  return {out.begin(), out.end()};
}

namespace {

struct ShapeList {
  std::vector<std::pair<Bits, Bits>> shapes;  // (nu, lambda) canonical order
};

ShapeList all_skew_shapes(const Poset& p, int min_cells) {
  ShapeList out;
  std::vector<Bits> ideals = order_ideals(p);
  for (const Bits& nu : ideals)
    for (const Bits& lambda : ideals)
      if (nu.contains(lambda) && nu.count() - lambda.count() >= min_cells)
        out.shapes.emplace_back(nu, lambda);
  return out;
}

// remap filling labels {1..m} through the sorted value set
std::vector<int> remap_labels(const std::vector<int>& labels, const std::vector<int>& values) {
  std::vector<int> out(labels.size(), 0);
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] > 0) out[i] = values[labels[i] - 1];
  return out;
}

}  // namespace

UrtResult is_urt(Rectifier& r, const Tableau& target) {
  if (!target.straight()) throw InvalidShape("is_urt: target must have straight shape");
  const std::vector<int> values = target.range();
  const int m = (int)values.size();
  PosetPtr poset = r.poset_ptr();
  ShapeList list = all_skew_shapes(*poset, m);

  // one work item per shape; first failing shape in canonical order wins
  auto probe_shape = [&](int idx) -> std::optional<UrtCounterexample> {
    const auto& [nu, lambda] = list.shapes[idx];
    std::optional<UrtCounterexample> found;
    for_each_increasing_filling(*poset, nu, lambda, m, true,
                                [&](const std::vector<int>& labels) {
      Tableau t = Tableau::make(poset, nu, lambda, remap_labels(labels, values));
      auto rs = r.rects(t);
      if (rs->size() > 1 && rect_set_contains(*rs, target)) {
        UrtCounterexample ce{t, *rs, {}};
        for (const Tableau& u : *rs) ce.slides.push_back(r.witness(t, u));
        found = std::move(ce);
        return false;
      }
      return true;
    });
    return found;
  };

  auto hit = parallel_first<UrtCounterexample>((int)list.shapes.size(), probe_shape);
  if (hit) return UrtResult{false, std::move(hit->second)};
  return UrtResult{true, std::nullopt};
}

std::set<Tableau> non_urt_targets(Rectifier& r, int m) {
  PosetPtr poset = r.poset_ptr();
  ShapeList list = all_skew_shapes(*poset, m);
  std::vector<std::set<Tableau>> partial(list.shapes.size());
  parallel_for((int)list.shapes.size(), [&](int idx) {
    const auto& [nu, lambda] = list.shapes[idx];
    for_each_increasing_filling(*poset, nu, lambda, m, true,
                                [&](const std::vector<int>& labels) {
      Tableau t = Tableau::make(poset, nu, lambda, labels);
      auto rs = r.rects(t);
      if (rs->size() > 1) partial[idx].insert(rs->begin(), rs->end());
      return true;
    });
  });
  std::set<Tableau> out;
  for (auto& s : partial) out.merge(s);
  return out;
}

Tableau chain_reduction(const Tableau& t, const Bits& base) {
  PosetPtr rp = t.poset_ptr();
  const Poset& r = *rp;
  if (base.empty()) throw InvalidPoset("chain_reduction: base must be nonempty");
  if (!is_order_ideal(r, base))
    throw InvalidPoset("chain_reduction: base must be an order ideal");

  // connected components of the complement, each hanging off one cover edge
  Bits outside = r.all();
  outside.subtract(base);
  std::vector<int> component(r.size(), -1);
  int num_components = 0;
  outside.for_each([&](int x) {
    if (component[x] >= 0) return;
    int id = num_components++;
    std::vector<int> stack{x};
    component[x] = id;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (const auto& adj : {r.covers_up(y), r.covers_down(y)})
        for (int z : adj)
          if (outside.test(z) && component[z] < 0) {
            component[z] = id;
            stack.push_back(z);
          }
    }
  });

  std::vector<int> attach_point(num_components, -1);
  std::vector<Bits> part(num_components, Bits(r.size()));
  outside.for_each([&](int x) { part[component[x]].set(x); });
  for (auto [lo, hi] : r.cover_pairs()) {
    if (base.test(lo) && outside.test(hi)) {
      int id = component[hi];
      if (attach_point[id] >= 0)
        throw InvalidPoset("chain_reduction: attached part meets the base twice");
      attach_point[id] = lo;
      // the cover must land on the minimum of its component
      if (!r.up_set(hi).contains(part[id]))
        throw InvalidPoset("chain_reduction: attached part has no minimum at the cover");
    }
  }
  for (int id = 0; id < num_components; ++id)
    if (attach_point[id] < 0)
      throw InvalidPoset("chain_reduction: attached part not connected to the base");

  // group attached parts by attachment point
  std::map<int, Bits> attached_at;  // point -> union of parts
  for (int id = 0; id < num_components; ++id) {
    auto [it, fresh] = attached_at.emplace(attach_point[id], Bits(r.size()));
    it->second |= part[id];
  }

  std::vector<std::string> elements;
  base.for_each([&](int x) { elements.push_back(r.element(x)); });
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : r.cover_pairs())
    if (base.test(lo) && base.test(hi)) covers.emplace_back(r.element(lo), r.element(hi));

  struct ChainInfo {
    std::vector<std::string> names;
    std::vector<int> labels;  // labels carried by the lowest cells
  };
  std::vector<ChainInfo> chains;
  for (const auto& [point, parts] : attached_at) {
    int k = r.down_set(point).count();
    std::set<int> attached_labels;
    parts.for_each([&](int x) {
      if (t.label(x) > 0) attached_labels.insert(t.label(x));
    });
    ChainInfo info;
    std::string stem = r.element(point) + "~";
    for (int i = 1; i <= k; ++i) {
      std::string name = stem + std::to_string(i);
      while (std::find(elements.begin(), elements.end(), name) != elements.end())
        name = "~" + name;
      info.names.push_back(name);
      elements.push_back(name);
    }
    covers.emplace_back(r.element(point), info.names[0]);
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(info.names[i], info.names[i + 1]);
    int m = std::min<int>(k, (int)attached_labels.size());
    info.labels.assign(attached_labels.begin(), attached_labels.end());
    info.labels.resize(m);
    chains.push_back(std::move(info));
  }

  PosetPtr reduced = Poset::make(r.name() + "~reduced", elements, covers);
  Bits nu(reduced->size()), lambda(reduced->size());
  std::vector<int> labels(reduced->size(), 0);
  base.for_each([&](int x) {
    int i = reduced->index_of(r.element(x));
    if (t.nu().test(x)) nu.set(i);
    if (t.lambda().test(x)) lambda.set(i);
    labels[i] = t.label(x);
  });
  for (const ChainInfo& info : chains)
    for (size_t i = 0; i < info.labels.size(); ++i) {
      int idx = reduced->index_of(info.names[i]);
      nu.set(idx);
      labels[idx] = info.labels[i];
    }
  return Tableau::make(reduced, nu, lambda, labels);
}

PchainResult is_pchain_urt(const Tableau& target, const std::vector<std::string>& points,
                           std::optional<int> max_chain) {
  if (!target.straight()) throw InvalidShape("is_pchain_urt: target must have straight shape");
  PosetPtr poset = target.poset_ptr();
  const Poset& p = *poset;
  const int k = (int)points.size();

  std::vector<int> bound(k);
  for (int i = 0; i < k; ++i) {
    int pt = p.index_of(points[i]);
    bound[i] = max_chain ? *max_chain : p.down_set(pt).count();
  }

  // all chain-size assignments, smallest total first
  std::vector<std::vector<int>> assignments{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& a : assignments)
      for (int s = 0; s <= bound[i]; ++s) {
        auto b = a;
        b.push_back(s);
        next.push_back(std::move(b));
      }
    assignments = std::move(next);
  }
  std::stable_sort(assignments.begin(), assignments.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     int sa = std::accumulate(a.begin(), a.end(), 0);
                     int sb = std::accumulate(b.begin(), b.end(), 0);
                     return sa != sb ? sa < sb : a < b;
                   });

  for (const auto& sizes : assignments) {
    std::vector<std::string> elements = p.elements();
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [lo, hi] : p.cover_pairs()) covers.emplace_back(p.element(lo), p.element(hi));
    for (int i = 0; i < k; ++i) {
      std::string prev;
      for (int s = 1; s <= sizes[i]; ++s) {
        std::string name = points[i] + "~" + std::to_string(s);
        while (std::find(elements.begin(), elements.end(), name) != elements.end())
          name = "~" + name;
        elements.push_back(name);
        covers.emplace_back(s == 1 ? points[i] : prev, name);
        prev = name;
      }
    }
    PosetPtr sum = Poset::make(p.name() + "~chains", elements, covers);
    Bits nu(sum->size());
    std::vector<int> labels(sum->size(), 0);
    target.nu().for_each([&](int x) {
      int i = sum->index_of(p.element(x));
      nu.set(i);
      labels[i] = target.label(x);
    });
    Tableau lifted = Tableau::make(sum, nu, Bits(sum->size()), labels);
    Rectifier r(sum);
    UrtResult res = is_urt(r, lifted);
    if (!res.is_urt) {
      PchainResult out;
      out.ok = false;
      out.failing_sizes = sizes;
      out.counterexample = std::move(res.counterexample);
      return out;
    }
  }
  return PchainResult{true, {}, std::nullopt};
}

}  // namespace kjdt
