#include "kjdt/search.hpp"

#include <algorithm>
#include <map>

#include "kjdt/parallel.hpp"

namespace kjdt {

namespace {

std::string first_violation(const DReport& report) {
  return report.violations.empty() ? "not d-complete" : report.violations.front().detail;
}

}  // namespace

SearchReport conjecture_urt_core(PosetPtr p) {
  SearchReport report;
  report.target = "urt-existence";
  report.poset = p;

  Rectifier r(p);
  std::vector<Bits> ideals = order_ideals(*p);
  std::map<int, std::vector<Bits>> by_size;
  for (const Bits& ideal : ideals)
    by_size[minimal_tableau(p, ideal).max_label()].push_back(ideal);

  std::vector<Bits> failing;
  for (const auto& [size, mus] : by_size) {
    std::set<Tableau> bad = non_urt_targets(r, size);
    for (const Bits& mu : mus)
      if (bad.count(minimal_tableau(p, mu))) failing.push_back(mu);
  }
  std::sort(failing.begin(), failing.end());

  if (failing.empty()) {
    report.status = SearchReport::Status::verified;
    return report;
  }
  report.status = SearchReport::Status::counterexample;
  for (const Bits& mu : failing) {
    UrtResult res = is_urt(r, minimal_tableau(p, mu));
    if (res.counterexample)
      report.witnesses.push_back({res.counterexample->witness,
                                  res.counterexample->rectifications});
  }
  return report;
}

SearchReport conjecture_urt(PosetPtr p) {
  DReport gate = check_dcomplete(*p);
  if (!gate.complete) {
    SearchReport report;
    report.target = "urt-existence";
    report.poset = p;
    report.status = SearchReport::Status::skipped;
    report.skip_reason = first_violation(gate);
    return report;
  }
  return conjecture_urt_core(p);
}

SearchReport conjecture_bottom_tree_core(PosetPtr p, int label_bound) {
  SearchReport report;
  report.target = "bottom-tree";
  report.poset = p;
  report.label_bound = label_bound;

  Rectifier r(p);
  Bits tree = bottom_tree(*p);
  std::vector<Bits> ideals = order_ideals(*p);
  std::vector<std::pair<Bits, Bits>> shapes;
  for (const Bits& nu : ideals)
    for (const Bits& lambda : ideals)
      if (nu.contains(lambda) && nu != lambda) shapes.emplace_back(nu, lambda);

  // label sets are searched through their order types: values {1..r} hit
  // every class with max label within the bound
  auto probe = [&](int idx) -> std::optional<SearchWitness> {
    const auto& [nu, lambda] = shapes[idx];
    int cells = nu.count() - lambda.count();
    std::optional<SearchWitness> found;
    for (int m = 1; m <= std::min(label_bound, cells) && !found; ++m) {
      for_each_increasing_filling(*p, nu, lambda, m, true,
                                  [&](const std::vector<int>& labels) {
        Tableau t = Tableau::make(p, nu, lambda, labels);
        auto rs = r.rects(t);
        for (size_t i = 1; i < rs->size(); ++i)
          if (restrict_labels((*rs)[0], tree) != restrict_labels((*rs)[i], tree)) {
            found = SearchWitness{t, {(*rs)[0], (*rs)[i]}};
            return false;
          }
        return true;
      });
    }
    return found;
  };

  auto hit = parallel_first<SearchWitness>((int)shapes.size(), probe);
  if (hit) {
    report.status = SearchReport::Status::counterexample;
    report.witnesses.push_back(std::move(hit->second));
  } else {
    report.status = SearchReport::Status::verified;
  }
  return report;
}

SearchReport conjecture_bottom_tree(PosetPtr p, std::optional<int> label_bound) {
  int bound = label_bound.value_or(p->size());
  DReport gate = check_dcomplete(*p);
  if (!gate.complete) {
    SearchReport report;
    report.target = "bottom-tree";
    report.poset = p;
    report.status = SearchReport::Status::skipped;
    report.skip_reason = first_violation(gate);
    report.label_bound = bound;
    return report;
  }
  return conjecture_bottom_tree_core(p, bound);
}

Json search_report_to_json(const SearchReport& report) {
  Json j;
  j["target"] = report.target;
  j["poset"] = poset_to_json(*report.poset);
  switch (report.status) {
    case SearchReport::Status::verified: j["status"] = "verified"; break;
    case SearchReport::Status::counterexample: j["status"] = "counterexample"; break;
    case SearchReport::Status::skipped: j["status"] = "skipped"; break;
  }
  if (!report.skip_reason.empty()) j["skip_reason"] = report.skip_reason;
  if (report.target == "bottom-tree") j["label_bound"] = report.label_bound;
  Json witnesses = Json::array();
  for (const SearchWitness& w : report.witnesses) {
    Json item;
    item["tableau"] = tableau_to_json(w.tableau);
    Json rectifications = Json::array();
    for (const Tableau& t : w.rectifications) rectifications.push_back(tableau_to_json(t));
    item["rectifications"] = rectifications;
    witnesses.push_back(item);
  }
  j["witnesses"] = witnesses;
  return j;
}

}  // namespace kjdt
