// Command-line front end: catalog constructors, poset validation and DOT
// export, the d-complete checker, rectification, URT checks, K-ring
// structure constants, and the two conjecture searches.
//
// Exit codes: 0 success / property holds, 1 property fails (witness JSON on
// stdout), 2 malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kjdt/catalog.hpp"
#include "kjdt/json_io.hpp"
#include "kjdt/search.hpp"

using namespace kjdt;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

PosetPtr load_poset(const std::string& path) { return poset_from_json(read_json_file(path)); }

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> parse_name_list(const std::string& arg) {
  // JSON array, or ';'-separated names (catalog names contain commas)
  std::vector<std::string> out;
  if (!arg.empty() && arg.front() == '[') {
    for (const auto& name : Json::parse(arg)) out.push_back(name.get<std::string>());
    return out;
  }
  std::stringstream stream(arg);
  std::string item;
  while (std::getline(stream, item, ';'))
    if (!item.empty()) out.push_back(item);
  return out;
}

Bits ideal_from_arg(const Poset& p, const std::string& arg) {
  Bits b(p.size());
  for (const auto& name : parse_name_list(arg)) b.set(p.index_of(name));
  if (!is_order_ideal(p, b)) throw InvalidShape("set is not an order ideal: " + arg);
  return b;
}

int run(int argc, char** argv) {
  CLI::App app{"K-theoretic jeu de taquin on finite posets"};
  app.require_subcommand(1);

  // catalog <family> [params...] [--json|--dot]
  auto* cmd_catalog = app.add_subcommand("catalog", "emit a catalog poset");
  std::string family;
  std::vector<int> params;
  bool catalog_dot = false, catalog_json = false;
  cmd_catalog->add_option("family", family)->required();
  cmd_catalog->add_option("params", params);
  cmd_catalog->add_flag("--dot", catalog_dot);
  cmd_catalog->add_flag("--json", catalog_json);

  // poset validate|dot --poset FILE
  auto* cmd_poset = app.add_subcommand("poset", "validate or render a poset file");
  auto* cmd_validate = cmd_poset->add_subcommand("validate");
  auto* cmd_dot = cmd_poset->add_subcommand("dot");
  std::string poset_file;
  cmd_validate->add_option("--poset", poset_file)->required();
  cmd_dot->add_option("--poset", poset_file)->required();

  // dcomplete check --poset FILE [--report json]
  auto* cmd_dcomplete = app.add_subcommand("dcomplete", "d-complete checker");
  auto* cmd_check = cmd_dcomplete->add_subcommand("check");
  std::string report_format;
  cmd_check->add_option("--poset", poset_file)->required();
  cmd_check->add_option("--report", report_format);

  // rectify --poset FILE --tableau FILE [--all|--count]
  auto* cmd_rectify = app.add_subcommand("rectify", "enumerate rectifications");
  std::string tableau_file;
  bool rectify_all = false, rectify_count = false;
  cmd_rectify->add_option("--poset", poset_file)->required();
  cmd_rectify->add_option("--tableau", tableau_file)->required();
  cmd_rectify->add_flag("--all", rectify_all);
  cmd_rectify->add_flag("--count", rectify_count);

  // urt check --poset FILE --tableau FILE [--points ...] [--max-chain N]
  auto* cmd_urt = app.add_subcommand("urt", "unique-rectification-target checks");
  auto* cmd_urt_check = cmd_urt->add_subcommand("check");
  std::string points_arg;
  std::optional<int> max_chain;
  cmd_urt_check->add_option("--poset", poset_file)->required();
  cmd_urt_check->add_option("--tableau", tableau_file)->required();
  cmd_urt_check->add_option("--points", points_arg);
  cmd_urt_check->add_option("--max-chain", max_chain);

  // kring constants --poset FILE [--lambda L --mu M [--nu N]] [--table OUT]
  auto* cmd_kring = app.add_subcommand("kring", "combinatorial K-theory ring");
  auto* cmd_constants = cmd_kring->add_subcommand("constants");
  std::string lambda_arg, mu_arg, nu_arg, table_out;
  cmd_constants->add_option("--poset", poset_file)->required();
  cmd_constants->add_option("--lambda", lambda_arg);
  cmd_constants->add_option("--mu", mu_arg);
  cmd_constants->add_option("--nu", nu_arg);
  cmd_constants->add_option("--table", table_out);

  // conjecture urt|bottom-tree --poset FILE [--label-bound N]
  auto* cmd_conj = app.add_subcommand("conjecture", "conjecture search harness");
  auto* cmd_conj_urt = cmd_conj->add_subcommand("urt");
  auto* cmd_conj_bt = cmd_conj->add_subcommand("bottom-tree");
  std::optional<int> label_bound;
  cmd_conj_urt->add_option("--poset", poset_file)->required();
  cmd_conj_bt->add_option("--poset", poset_file)->required();
  cmd_conj_bt->add_option("--label-bound", label_bound);

  CLI11_PARSE(app, argc, argv);

  if (cmd_catalog->parsed()) {
    CatalogPoset cp = catalog_poset(family, params);
    if (catalog_dot)
      std::cout << to_dot(*cp.poset);
    else
      print(poset_to_json(*cp.poset));
    return 0;
  }

  if (cmd_validate->parsed()) {
    print(poset_to_json(*load_poset(poset_file)));
    return 0;
  }
  if (cmd_dot->parsed()) {
    std::cout << to_dot(*load_poset(poset_file));
    return 0;
  }

  if (cmd_check->parsed()) {
    PosetPtr p = load_poset(poset_file);
    DReport report = check_dcomplete(*p);
    if (report_format == "json" || !report.complete)
      print(dcomplete_report_to_json(*p, report));
    else
      std::cout << "d-complete\n";
    return report.complete ? 0 : 1;
  }

  if (cmd_rectify->parsed()) {
    PosetPtr p = load_poset(poset_file);
    Tableau t = tableau_from_json(p, read_json_file(tableau_file));
    Rectifier r(p);
    auto rs = r.rects(t);
    if (rectify_count) {
      print(Json{{"count", rs->size()}});
    } else {
      Json out = Json::array();
      for (const Tableau& u : *rs) out.push_back(tableau_to_json(u));
      print(out);
    }
    return 0;
  }

  if (cmd_urt_check->parsed()) {
    PosetPtr p = load_poset(poset_file);
    Tableau t = tableau_from_json(p, read_json_file(tableau_file));
    if (points_arg.empty()) {
      Rectifier r(p);
      UrtResult res = is_urt(r, t);
      print(urt_result_to_json(res));
      return res.is_urt ? 0 : 1;
    }
    PchainResult res = is_pchain_urt(t, parse_name_list(points_arg), max_chain);
    print(pchain_result_to_json(res));
    return res.ok ? 0 : 1;
  }

  if (cmd_constants->parsed()) {
    PosetPtr p = load_poset(poset_file);
    KRing ring(p);
    if (!table_out.empty()) {
      std::ofstream out(table_out);
      if (!out) throw Error("cannot write " + table_out);
      out << table_to_json(ring.full_table()).dump(2) << "\n";
    }
    if (!lambda_arg.empty() || !mu_arg.empty()) {
      Bits lambda = ideal_from_arg(*p, lambda_arg);
      Bits mu = ideal_from_arg(*p, mu_arg);
      if (!nu_arg.empty()) {
        Bits nu = ideal_from_arg(*p, nu_arg);
        print(Json{{"t", ring.structure_constant(lambda, mu, nu)}});
      } else {
        FormalSum product = ring.multiply(lambda, mu);
        Json terms = Json::array();
        for (const auto& [nu, c] : product.coeff)
          terms.push_back(Json{{"nu", ideal_to_json(*p, nu)}, {"coefficient", c}});
        print(terms);
      }
    } else if (table_out.empty()) {
      print(table_to_json(ring.full_table()));
    }
    return 0;
  }

  if (cmd_conj_urt->parsed() || cmd_conj_bt->parsed()) {
    PosetPtr p = load_poset(poset_file);
    SearchReport report = cmd_conj_urt->parsed()
                              ? conjecture_urt(p)
                              : conjecture_bottom_tree(p, label_bound);
    print(search_report_to_json(report));
    return report.status == SearchReport::Status::counterexample ? 1 : 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error&) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
