#include "kjdt/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kjdt {

namespace {

void check_shape(const Poset& p, const Bits& nu, const Bits& lambda) {
  if (!is_order_ideal(p, nu)) throw InvalidShape("nu is not an order ideal");
  if (!is_order_ideal(p, lambda)) throw InvalidShape("lambda is not an order ideal");
  if (!nu.contains(lambda)) throw InvalidShape("lambda is not contained in nu");
}

}  // namespace

Tableau Tableau::make(PosetPtr poset, Bits nu, Bits lambda, std::vector<int> labels) {
  const Poset& p = *poset;
  check_shape(p, nu, lambda);
  if ((int)labels.size() != p.size()) throw InvalidTableau("label vector has wrong size");
  Bits dom = difference(nu, lambda);
  for (int x = 0; x < p.size(); ++x) {
    if (dom.test(x) != (labels[x] > 0))
      throw InvalidTableau("labels must be positive exactly on nu \\ lambda");
    if (labels[x] < 0) throw InvalidTableau("negative label");
  }
  // cells between comparable cells are again cells, so covers suffice
  dom.for_each([&](int x) {
    for (int y : p.covers_up(x))
      if (dom.test(y) && labels[x] >= labels[y])
        throw InvalidTableau("labels are not strictly increasing: " + p.element(x) +
                             " -> " + p.element(y));
  });
  return Tableau(std::move(poset), std::move(nu), std::move(lambda), std::move(labels));
}

Tableau Tableau::empty(PosetPtr poset) {
  int n = poset->size();
  return Tableau(std::move(poset), Bits(n), Bits(n), std::vector<int>(n, 0));
}

bool Tableau::has_labels() const {
  for (int v : labels_)
    if (v > 0) return true;
  return false;
}

int Tableau::max_label() const {
  int m = 0;
  for (int v : labels_) m = std::max(m, v);
  return m;
}

std::vector<int> Tableau::range() const {
  std::set<int> vals;
  for (int v : labels_)
    if (v > 0) vals.insert(v);
  return {vals.begin(), vals.end()};
}

std::string Tableau::key() const {
  std::string k(labels_.size(), '\0');
  for (int x = 0; x < (int)labels_.size(); ++x) {
    if (!nu_.test(x))
      k[x] = 1;
    else if (lambda_.test(x))
      k[x] = 2;
    else
      k[x] = (char)(4 + labels_[x]);
  }
  return k;
}

bool operator==(const Tableau& a, const Tableau& b) {
  if (a.poset_ != b.poset_ &&
      (a.poset_->elements() != b.poset_->elements() ||
       a.poset_->cover_pairs() != b.poset_->cover_pairs()))
    return false;
  return a.nu_ == b.nu_ && a.lambda_ == b.lambda_ && a.labels_ == b.labels_;
}

bool operator<(const Tableau& a, const Tableau& b) {
  if (a.nu_ != b.nu_) return a.nu_ < b.nu_;
  if (a.lambda_ != b.lambda_) return a.lambda_ < b.lambda_;
  return a.labels_ < b.labels_;
}

DottedTableau DottedTableau::make(PosetPtr poset, Bits nu, Bits lambda,
                                  std::vector<int> labels) {
  const Poset& p = *poset;
  check_shape(p, nu, lambda);
  if ((int)labels.size() != p.size()) throw InvalidTableau("label vector has wrong size");
  Bits dom = difference(nu, lambda);
  Bits dots(p.size());
  for (int x = 0; x < p.size(); ++x) {
    if (!dom.test(x)) {
      if (labels[x] != 0) throw InvalidTableau("label outside the domain");
    } else if (labels[x] == kDot) {
      dots.set(x);
    } else if (labels[x] <= 0) {
      throw InvalidTableau("cells must carry a positive label or a dot");
    }
  }
  // dots form an antichain
  bool antichain = true;
  dots.for_each([&](int x) {
    Bits above = p.up_set(x) & dots;
    above.reset(x);
    if (!above.empty()) antichain = false;
  });
  if (!antichain) throw InvalidTableau("dotted cells must form an antichain");
  // a single rational value must fit every dot: every numeric label below a
  // dot is smaller than every numeric label above a dot
  int max_below = 0, min_above = 0;
  bool have_below = false, have_above = false;
  dots.for_each([&](int d) {
    dom.for_each([&](int x) {
      if (labels[x] <= 0) return;
      if (p.leq(x, d)) {
        if (!have_below || labels[x] > max_below) max_below = labels[x];
        have_below = true;
      }
      if (p.leq(d, x)) {
        if (!have_above || labels[x] < min_above) min_above = labels[x];
        have_above = true;
      }
    });
  });
  if (have_below && have_above && max_below >= min_above)
    throw InvalidTableau("no single value can replace the dots");
  // numeric-only comparabilities strictly increase
  bool increasing = true;
  dom.for_each([&](int x) {
    if (labels[x] <= 0) return;
    dom.for_each([&](int y) {
      if (labels[y] <= 0 || x == y) return;
      if (p.leq(x, y) && labels[x] >= labels[y]) increasing = false;
    });
  });
  if (!increasing) throw InvalidTableau("numeric labels are not strictly increasing");
  return DottedTableau(std::move(poset), std::move(nu), std::move(lambda), std::move(labels));
}

Bits DottedTableau::dots() const {
  Bits out(poset_->size());
  for (int x = 0; x < poset_->size(); ++x)
    if (labels_[x] == kDot) out.set(x);
  return out;
}

bool operator==(const DottedTableau& a, const DottedTableau& b) {
  return a.nu_ == b.nu_ && a.lambda_ == b.lambda_ && a.labels_ == b.labels_;
}

DottedTableau add_dots(const Tableau& t, const Bits& gamma) {
  if (gamma.empty()) throw InvalidShape("add_dots: gamma must be nonempty");
  Bits corners = inner_corners(t.poset(), t.lambda());
  if (!corners.contains(gamma))
    throw InvalidShape("add_dots: gamma must consist of inner corners");
  Bits lambda = t.lambda();
  lambda.subtract(gamma);
  std::vector<int> labels = t.labels();
  gamma.for_each([&](int x) { labels[x] = DottedTableau::kDot; });
  return DottedTableau::make(t.poset_ptr(), t.nu(), std::move(lambda), std::move(labels));
}

DottedTableau swap_dots(const DottedTableau& t, int n) {
  if (n <= 0) throw InvalidTableau("swap value must be positive");
  const Poset& p = t.poset();
  std::vector<int> out = t.labels();
  Bits dom = t.domain();
  dom.for_each([&](int x) {
    if (t.label(x) == DottedTableau::kDot) {
      for (int y : p.covers_up(x))
        if (t.label(y) == n) {
          out[x] = n;
          break;
        }
    } else if (t.label(x) == n) {
      for (int y : p.covers_down(x))
        if (t.label(y) == DottedTableau::kDot) {
          out[x] = DottedTableau::kDot;
          break;
        }
    }
  });
  // the factory re-validates; a violation here means an illegal call sequence
  return DottedTableau::make(t.poset_ptr(), t.nu(), t.lambda(), std::move(out));
}

Tableau remove_dots(const DottedTableau& t) {
  const Poset& p = t.poset();
  Bits numeric(p.size());
  std::vector<int> labels(p.size(), 0);
  for (int x = 0; x < p.size(); ++x)
    if (t.label(x) > 0) {
      numeric.set(x);
      labels[x] = t.label(x);
    }
  Bits nu = t.lambda() | numeric;
  if (!is_order_ideal(p, nu))
    throw InvalidShape("remove_dots: numeric support is not a skew shape");
  return Tableau::make(t.poset_ptr(), std::move(nu), t.lambda(), std::move(labels));
}

Tableau slide(const Tableau& t, const Bits& gamma) {
  DottedTableau d = add_dots(t, gamma);
  int m = t.max_label();
  for (int n = 1; n <= m; ++n) d = swap_dots(d, n);
  return remove_dots(d);
}

Tableau slide_sequence(const Tableau& t, const std::vector<Bits>& gammas) {
  Tableau cur = t;
  for (const Bits& g : gammas) cur = slide(cur, g);
  return cur;
}

SlideTrace slide_trace(const Tableau& t, const Bits& gamma) {
  DottedTableau d = add_dots(t, gamma);
  SlideTrace trace{d, {}, Tableau::empty(t.poset_ptr())};
  int m = t.max_label();
  for (int n = 1; n <= m; ++n) {
    d = swap_dots(d, n);
    trace.after_swaps.push_back(d);
  }
  trace.result = remove_dots(d);
  return trace;
}

Tableau minimal_tableau(PosetPtr poset, const Bits& shape) {
  const Poset& p = *poset;
  if (!is_order_ideal(p, shape)) throw InvalidShape("shape is not an order ideal");
  std::vector<int> cells = shape.to_vector();
  std::sort(cells.begin(), cells.end(),
            [&](int a, int b) { return p.height(a) < p.height(b); });
  std::vector<int> labels(p.size(), 0);
  for (int x : cells) {
    int below = 0;
    for (int y : p.covers_down(x))
      if (shape.test(y)) below = std::max(below, labels[y]);
    labels[x] = below + 1;
  }
  return Tableau::make(std::move(poset), shape, Bits(p.size()), std::move(labels));
}

std::map<std::string, int> restrict_labels(const Tableau& t, const Bits& subset) {
  std::map<std::string, int> out;
  subset.for_each([&](int x) {
    if (t.label(x) > 0) out[t.poset().element(x)] = t.label(x);
  });
  return out;
}

Tableau restrict_to(const Tableau& t, const Embedding& e) {
  const Poset& sub = *e.sub;
  Bits cells(sub.size());
  std::vector<int> labels(sub.size(), 0);
  for (int i = 0; i < sub.size(); ++i) {
    int parent = e.to_parent[i];
    if (t.label(parent) > 0) {
      cells.set(i);
      labels[i] = t.label(parent);
    }
  }
  Bits nu = down_closure(sub, cells);
  return Tableau::make(e.sub, nu, difference(nu, cells), std::move(labels));
}

Tableau corresponding_tableau(const Tableau& t, const Tableau& u, const Embedding& funnel) {
  const Poset& p = t.poset();
  Bits f((int)funnel.from_parent.size());
  for (int x : funnel.to_parent) f.set(x);
  if (!is_funnel(p, f)) throw InvalidShape("corresponding_tableau: not a funnel");

  int min_sub = funnel.sub->minimum();
  int min_parent = funnel.to_parent[min_sub];
  // empty when 0̂_F is not a cell of t, or when no rectification label
  // reaches 0̂_F (then nothing of the funnel survives either)
  bool have_threshold =
      t.domain().test(min_parent) && u.label(min_parent) > 0;
  Bits cells(funnel.sub->size());
  std::vector<int> labels(funnel.sub->size(), 0);
  if (have_threshold) {
    int threshold = u.label(min_parent);
    for (int i = 0; i < funnel.sub->size(); ++i) {
      int parent = funnel.to_parent[i];
      if (t.label(parent) >= threshold) {
        cells.set(i);
        labels[i] = t.label(parent);
      }
    }
  }
  Bits nu = down_closure(*funnel.sub, cells);
  return Tableau::make(funnel.sub, nu, difference(nu, cells), std::move(labels));
}

bool for_each_increasing_filling(const Poset& p, const Bits& nu, const Bits& lambda, int m,
                                 bool surjective,
                                 const std::function<bool(const std::vector<int>&)>& f) {
  check_shape(p, nu, lambda);
  std::vector<int> cells = difference(nu, lambda).to_vector();
  std::sort(cells.begin(), cells.end(),
            [&](int a, int b) {
              return p.height(a) != p.height(b) ? p.height(a) < p.height(b) : a < b;
            });
  const int k = (int)cells.size();

  if (k == 0) {
    std::vector<int> empty_labels(p.size(), 0);
    if (!surjective || m == 0) return f(empty_labels);
    return true;
  }
  if (m <= 0) return true;

  // longest chain of cells strictly above each cell: headroom pruning
  std::vector<int> up_height(p.size(), 0);
  Bits cell_set = difference(nu, lambda);
  for (int i = k - 1; i >= 0; --i) {
    int x = cells[i];
    for (int y : p.covers_up(x))
      if (cell_set.test(y)) up_height[x] = std::max(up_height[x], up_height[y] + 1);
  }

  std::vector<int> labels(p.size(), 0);
  std::vector<int> used(m + 1, 0);
  int distinct_used = 0;
  bool completed = true;

  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == k) {
      if (surjective && distinct_used != m) return true;
      return f(labels);
    }
    int x = cells[i];
    int lo = 1;
    for (int y : p.covers_down(x))
      if (cell_set.test(y)) lo = std::max(lo, labels[y] + 1);
    int hi = m - up_height[x];
    for (int v = lo; v <= hi; ++v) {
      if (surjective) {
        int missing = m - distinct_used - (used[v] ? 0 : 1);
        if (missing > k - i - 1) continue;
      }
      labels[x] = v;
      if (!used[v]++) ++distinct_used;
      bool keep_going = place(i + 1);
      if (!--used[v]) --distinct_used;
      labels[x] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  completed = place(0);
  return completed;
}

}  // namespace kjdt
