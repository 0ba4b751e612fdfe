#include "kjdt/json_io.hpp"

#include <algorithm>

namespace kjdt {

namespace {

std::vector<std::string> name_list(const Poset& p, const Bits& s) {
  std::vector<std::string> out;
  s.for_each([&](int x) { out.push_back(p.element(x)); });
  return out;  // ascending index == lexicographic by name
}

Bits names_to_bits(const Poset& p, const Json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be an array of element names");
  Bits out(p.size());
  for (const auto& name : j) out.set(p.index_of(name.get<std::string>()));
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

PosetPtr poset_from_json(const Json& j) {
  if (!j.is_object()) throw Error("poset JSON must be an object");
  if (!j.contains("elements")) throw Error("poset JSON needs an \"elements\" array");
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) elements.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers"))
    for (const auto& pair : j.at("covers")) {
      if (!pair.is_array() || pair.size() != 2)
        throw Error("each cover must be a [lower, upper] pair");
      covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  std::string name = j.value("name", std::string{});
  return Poset::make(name, elements, covers);
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["name"] = p.name();
  j["elements"] = p.elements();
  Json covers = Json::array();
  for (auto [lo, hi] : p.cover_pairs())
    covers.push_back(Json::array({p.element(lo), p.element(hi)}));
  j["covers"] = covers;
  return j;
}

Json ideal_to_json(const Poset& p, const Bits& ideal) { return name_list(p, ideal); }

Bits ideal_from_json(const Poset& p, const Json& j) {
  Bits b = names_to_bits(p, j, "ideal");
  if (!is_order_ideal(p, b)) throw InvalidShape("set is not an order ideal");
  return b;
}

SkewShape shape_from_json(const Poset& p, const Json& j) {
  Bits nu = names_to_bits(p, j.at("nu"), "nu");
  Bits lambda = names_to_bits(p, j.at("lambda"), "lambda");
  return make_skew_shape(p, nu, lambda);
}

Json shape_to_json(const Poset& p, const SkewShape& s) {
  Json j;
  j["nu"] = name_list(p, s.nu);
  j["lambda"] = name_list(p, s.lambda);
  return j;
}

Tableau tableau_from_json(PosetPtr p, const Json& j) {
  SkewShape shape = shape_from_json(*p, j);
  std::vector<int> labels(p->size(), 0);
  if (j.contains("labels"))
    for (const auto& [name, value] : j.at("labels").items())
      labels[p->index_of(name)] = value.get<int>();
  return Tableau::make(std::move(p), shape.nu, shape.lambda, std::move(labels));
}

Json tableau_to_json(const Tableau& t) {
  const Poset& p = t.poset();
  Json j;
  j["nu"] = name_list(p, t.nu());
  j["lambda"] = name_list(p, t.lambda());
  Json labels = Json::object();
  t.domain().for_each([&](int x) { labels[p.element(x)] = t.label(x); });
  j["labels"] = labels;
  return j;
}

Json dcomplete_report_to_json(const Poset& p, const DReport& report) {
  Json j;
  j["dcomplete"] = report.complete;
  Json violations = Json::array();
  for (const DViolation& v : report.violations) {
    Json item;
    item["k"] = v.k;
    item["condition"] = v.condition;
    Json elements = Json::array();
    for (int x : v.elements) elements.push_back(p.element(x));
    item["elements"] = elements;
    item["detail"] = v.detail;
    violations.push_back(item);
  }
  j["violations"] = violations;
  return j;
}

namespace {

Json counterexample_to_json(const UrtCounterexample& ce) {
  Json j;
  j["witness"] = tableau_to_json(ce.witness);
  Json rectifications = Json::array();
  const Poset& p = ce.witness.poset();
  for (size_t i = 0; i < ce.rectifications.size(); ++i) {
    Json item;
    item["tableau"] = tableau_to_json(ce.rectifications[i]);
    Json slides = Json::array();
    for (const Bits& gamma : ce.slides[i]) slides.push_back(name_list(p, gamma));
    item["slides"] = slides;
    rectifications.push_back(item);
  }
  j["rectifications"] = rectifications;
  return j;
}

}  // namespace

Json urt_result_to_json(const UrtResult& result) {
  Json j;
  j["urt"] = result.is_urt;
  if (result.counterexample) j["counterexample"] = counterexample_to_json(*result.counterexample);
  return j;
}

Json pchain_result_to_json(const PchainResult& result) {
  Json j;
  j["urt"] = result.ok;
  if (!result.ok) {
    j["chain_sizes"] = result.failing_sizes;
    if (result.counterexample)
      j["counterexample"] = counterexample_to_json(*result.counterexample);
  }
  return j;
}

Json table_to_json(const StructureConstantTable& table) {
  const Poset& p = *table.poset;
  Json j;
  j["poset"] = poset_to_json(p);
  Json entries = Json::array();
  for (const TableEntry& e : table.entries) {
    Json item;
    item["lambda"] = name_list(p, e.lambda);
    item["mu"] = name_list(p, e.mu);
    item["nu"] = name_list(p, e.nu);
    item["t"] = e.t;
    entries.push_back(item);
  }
  j["entries"] = entries;
  return j;
}

std::string to_dot(const Poset& p) {
  std::string out = "digraph \"" + dot_escape(p.name().empty() ? "poset" : p.name()) +
                    "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < p.size(); ++x) out += "  \"" + dot_escape(p.element(x)) + "\";\n";
  for (int h = 0; h <= p.max_height(); ++h) {
    std::string rank;
    for (int x = 0; x < p.size(); ++x)
      if (p.height(x) == h) rank += " \"" + dot_escape(p.element(x)) + "\";";
    if (!rank.empty()) out += "  { rank=same;" + rank + " }\n";
  }
  for (auto [lo, hi] : p.cover_pairs())
    out += "  \"" + dot_escape(p.element(lo)) + "\" -> \"" + dot_escape(p.element(hi)) +
           "\";\n";
  out += "}\n";
  return out;
}

}  // namespace kjdt
