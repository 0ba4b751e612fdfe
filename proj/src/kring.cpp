#include "kjdt/kring.hpp"

#include <algorithm>

#include "kjdt/parallel.hpp"

namespace kjdt {

KRing::KRing(PosetPtr poset)
    : poset_(poset), ideals_(order_ideals(*poset)), rectifier_(poset) {
  for (int i = 0; i < (int)ideals_.size(); ++i) ideal_index_[ideals_[i]] = i;
}

int KRing::ideal_index(const Bits& ideal) const {
  auto it = ideal_index_.find(ideal);
  if (it == ideal_index_.end()) throw InvalidShape("not an order ideal of this poset");
  return it->second;
}

bool KRing::target_is_urt(const Bits& mu) {
  ideal_index(mu);
  auto it = urt_cache_.find(mu);
  if (it != urt_cache_.end()) return it->second;
  bool ok = is_urt(rectifier_, minimal_tableau(poset_, mu)).is_urt;
  urt_cache_[mu] = ok;
  return ok;
}

void KRing::require_urt(const Bits& mu) {
  if (!target_is_urt(mu)) {
    std::string names;
    mu.for_each([&](int x) { names += (names.empty() ? "" : ",") + poset_->element(x); });
    throw NotUrt("M_{" + names + "} is not a unique rectification target in " +
                 poset_->name());
  }
}

namespace {

int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

long long KRing::structure_constant(const Bits& lambda, const Bits& mu, const Bits& nu) {
  ideal_index(lambda);
  ideal_index(nu);
  require_urt(mu);
  if (!nu.contains(lambda)) return 0;

  Tableau target = minimal_tableau(poset_, mu);
  const int m = target.max_label();
  long long count = 0;
  for_each_increasing_filling(*poset_, nu, lambda, m, true,
                              [&](const std::vector<int>& labels) {
    Tableau t = Tableau::make(poset_, nu, lambda, labels);
    if (rect_set_contains(*rectifier_.rects(t), target)) ++count;
    return true;
  });
  return sign_of(nu.count() - lambda.count() - mu.count()) * count;
}

const StructureConstantTable& KRing::full_table() {
  if (!table_) compute_table();
  return *table_;
}

void KRing::compute_table() {
  const int N = (int)ideals_.size();
  for (const Bits& mu : ideals_) require_urt(mu);

  // group targets by their label-set size so each (nu, lambda, size) scan is
  // shared across all mu of that size
  std::vector<Tableau> targets;
  targets.reserve(N);
  for (const Bits& mu : ideals_) targets.push_back(minimal_tableau(poset_, mu));
  std::map<int, std::vector<int>> mus_by_size;
  for (int i = 0; i < N; ++i) mus_by_size[targets[i].max_label()].push_back(i);

  std::vector<std::pair<int, int>> pairs;  // (nu, lambda) index pairs
  for (int nu = 0; nu < N; ++nu)
    for (int lambda = 0; lambda < N; ++lambda)
      if (ideals_[nu].contains(ideals_[lambda])) pairs.emplace_back(nu, lambda);

  std::vector<std::vector<long long>> counts(pairs.size());
  parallel_for((int)pairs.size(), [&](int idx) {
    auto [nu, lambda] = pairs[idx];
    counts[idx].assign(N, 0);
    const int cells = ideals_[nu].count() - ideals_[lambda].count();
    for (const auto& [size, mus] : mus_by_size) {
      if (size > cells) continue;
      for_each_increasing_filling(*poset_, ideals_[nu], ideals_[lambda], size, true,
                                  [&](const std::vector<int>& labels) {
        Tableau t = Tableau::make(poset_, ideals_[nu], ideals_[lambda], labels);
        auto rs = rectifier_.rects(t);
        for (int mu : mus)
          if (rect_set_contains(*rs, targets[mu])) ++counts[idx][mu];
        return true;
      });
    }
  });

  table_ = StructureConstantTable{poset_, ideals_, {}};
  dense_.assign((size_t)N * N * N, 0);
  for (size_t idx = 0; idx < pairs.size(); ++idx) {
    auto [nu, lambda] = pairs[idx];
    for (int mu = 0; mu < N; ++mu) {
      long long c = counts[idx][mu];
      if (c == 0) continue;
      long long t =
          sign_of(ideals_[nu].count() - ideals_[lambda].count() - ideals_[mu].count()) * c;
      dense_[((size_t)lambda * N + mu) * N + nu] = t;
    }
  }
  for (int l = 0; l < N; ++l)
    for (int m = 0; m < N; ++m)
      for (int n = 0; n < N; ++n) {
        long long t = dense_[((size_t)l * N + m) * N + n];
        if (t != 0) table_->entries.push_back({ideals_[l], ideals_[m], ideals_[n], t});
      }
}

FormalSum KRing::multiply(const Bits& lambda, const Bits& mu) {
  const int N = (int)ideals_.size();
  full_table();
  int l = ideal_index(lambda), m = ideal_index(mu);
  FormalSum out;
  for (int n = 0; n < N; ++n) out.add(ideals_[n], dense_[((size_t)l * N + m) * N + n]);
  return out;
}

FormalSum KRing::multiply(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [la, ca] : a.coeff)
    for (const auto& [mu, cb] : b.coeff) {
      FormalSum prod = multiply(la, mu);
      for (const auto& [nu, t] : prod.coeff) out.add(nu, ca * cb * t);
    }
  return out;
}

RingReport KRing::verify_ring() {
  RingReport report;
  full_table();
  const int N = (int)ideals_.size();
  auto name_of = [&](const Bits& ideal) {
    std::string s = "{";
    ideal.for_each([&](int x) { s += (s.size() > 1 ? "," : "") + poset_->element(x); });
    return s + "}";
  };

  Bits empty(poset_->size());
  for (int l = 0; l < N; ++l) {
    FormalSum expected;
    expected.add(ideals_[l], 1);
    if (multiply(ideals_[l], empty) != expected || multiply(empty, ideals_[l]) != expected) {
      report.identity_ok = false;
      report.violations.push_back("identity fails at " + name_of(ideals_[l]));
    }
  }

  for (int l = 0; l < N; ++l)
    for (int m = l + 1; m < N; ++m)
      if (multiply(ideals_[l], ideals_[m]) != multiply(ideals_[m], ideals_[l])) {
        report.commutative = false;
        report.violations.push_back("commutativity fails at (" + name_of(ideals_[l]) +
                                    ", " + name_of(ideals_[m]) + ")");
      }

  for (int l = 0; l < N; ++l)
    for (int m = 0; m < N; ++m) {
      FormalSum lm = multiply(ideals_[l], ideals_[m]);
      for (int n = 0; n < N; ++n) {
        FormalSum right;
        right.add(ideals_[n], 1);
        FormalSum left_assoc = multiply(lm, right);
        FormalSum mn = multiply(ideals_[m], ideals_[n]);
        FormalSum lhs;
        lhs.add(ideals_[l], 1);
        FormalSum right_assoc = multiply(lhs, mn);
        if (left_assoc != right_assoc) {
          report.associative = false;
          report.violations.push_back("associativity fails at (" + name_of(ideals_[l]) +
                                      ", " + name_of(ideals_[m]) + ", " +
                                      name_of(ideals_[n]) + ")");
        }
      }
    }
  return report;
}

}  // namespace kjdt
