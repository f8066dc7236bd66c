// Command-line front end: verification suites by catalog ID, series
// expansion, and group enumeration, with text or JSON output.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hm13/identities.hpp"
#include "hm13/numeric.hpp"
#include "hm13/qidentities.hpp"
#include "hm13/relations.hpp"

using nlohmann::json;
using namespace hm13;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::optional<Rat> env_default_order() {
  const char* s = std::getenv("HAUPTMODUL_DEFAULT_ORDER");
  if (s == nullptr || *s == '\0') return std::nullopt;
  try {
    return Rat(std::stol(s));
  } catch (const std::exception&) {
    throw Error("HAUPTMODUL_DEFAULT_ORDER is not an integer");
  }
}

std::string suite_of(const std::string& id) {
  if (id.empty()) return "";
  switch (id[0]) {
    case 'G': return "group";
    case 'P': return "symbolic";
    case 'Q': return "qseries";
    case 'N': return "numeric";
    default: return "";
  }
}

VerificationReport run_one(const std::string& id,
                           const std::optional<Rat>& order,
                           const std::optional<double>& tol) {
  const std::string suite = suite_of(id);
  if (suite == "group") return verify_group_relation(id);
  if (suite == "symbolic") return verify_symbolic_identity(id);
  if (suite == "qseries") {
    const Rat effective = order.value_or(default_q_order(id));
    try {
      auto r = verify_q_identity(id, effective);
      r.order = effective;
      return r;
    } catch (const OrderTooSmall& e) {
      // An insufficient order is a failed report, not a crash.
      VerificationReport r;
      r.id = id;
      r.suite = "qseries";
      r.pass = false;
      r.detail = e.what();
      r.order = effective;
      return r;
    }
  }
  if (suite == "numeric") {
    std::optional<double> t = tol;
    return verify_numeric_identity(id, default_sample_points(), t);
  }
  throw UnknownId(id);
}

json report_json(const VerificationReport& r) {
  json j;
  j["id"] = r.id;
  j["suite"] = r.suite;
  j["status"] = r.status();
  j["detail"] = r.detail;
  j["order"] = r.order ? json(to_string(*r.order)) : json(nullptr);
  j["elapsed_ms"] = static_cast<long>(r.elapsed_ms);
  return j;
}

void print_reports(const std::vector<VerificationReport>& reports,
                   bool as_json) {
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    std::printf("%s\n", arr.dump(2).c_str());
    return;
  }
  for (const auto& r : reports)
    std::printf("%-4s %-9s %-4s %6ldms  %s\n", r.id.c_str(), r.suite.c_str(),
                r.status().c_str(), static_cast<long>(r.elapsed_ms),
                r.detail.c_str());
}

int cmd_verify(const std::string& suite, const std::string& id_filter,
               std::optional<long> order_arg, std::optional<double> tol,
               bool with_numeric, bool as_json) {
  std::optional<Rat> order;
  if (order_arg)
    order = Rat(*order_arg);
  else
    order = env_default_order();

  std::vector<std::string> ids;
  if (!id_filter.empty()) {
    if (suite_of(id_filter).empty()) throw UnknownId(id_filter);
    if (suite != "all" && suite != suite_of(id_filter))
      throw Error("id " + id_filter + " is not in suite " + suite);
    ids.push_back(id_filter);
  } else {
    auto include = [&](const std::string& s) {
      return suite == "all" ? (s != "numeric" || with_numeric) : suite == s;
    };
    if (include("group"))
      for (const auto& i : group_relation_ids()) ids.push_back(i);
    if (include("symbolic"))
      for (const auto& i : symbolic_identity_ids()) ids.push_back(i);
    if (include("qseries"))
      for (const auto& i : q_identity_ids()) ids.push_back(i);
    if (include("numeric"))
      for (const auto& i : numeric_identity_ids()) ids.push_back(i);
  }

  std::vector<VerificationReport> reports;
  bool all_pass = true;
  for (const auto& id : ids) {
    reports.push_back(run_one(id, order, tol));
    all_pass = all_pass && reports.back().pass;
  }
  print_reports(reports, as_json);
  return all_pass ? kExitPass : kExitFail;
}

// The order is inclusive: terms with exponent <= order are printed.
PuiseuxSeries build_series(const std::string& name, const Rat& order) {
  if (name == "eta") return eta_series(1, order + 1);
  if (name == "eta5") return eta_series(5, order + 1);
  if (name == "eta7") return eta_series(7, order + 1);
  if (name == "eta13") return eta_series(13, order + 1);
  if (name == "partition")
    return partition_series(static_cast<long>(to_double(order)));
  if (name == "j") return j_series(static_cast<long>(to_double(order)) + 1);
  if (name == "j13") {
    long n = static_cast<long>(to_double(order)) / 13 + 1;
    PuiseuxSeries s = j_series(n).dilate(13);
    s.truncate_to(order + 1);
    return s;
  }
  if (name == "tau") {
    const Rat work = order + 3;
    PuiseuxSeries s =
        (eta_series(1, work) / eta_series(13, work)).pow(2);
    s.truncate_to(order + 1);
    return s;
  }
  if (name.size() == 2 && name[0] == 'a' && name[1] >= '1' && name[1] <= '6')
    return a_series(name[1] - '0', order + 1);
  if (name.size() >= 6 && name.substr(name.size() - 5) == "_of_a") {
    const std::string base = name.substr(0, name.size() - 5);
    auto a = detail::a_tuple(order + 1);
    if (base == "Phi12") return detail::phi12_on(a, order + 1);
    return evaluate_form(build_form(base), a, order + 1);
  }
  throw UnknownSeries(name);
}

int cmd_expand(const std::string& name, std::optional<long> order_arg,
               bool as_json) {
  Rat order(10);
  if (order_arg)
    order = Rat(*order_arg);
  else if (auto env = env_default_order())
    order = *env;

  PuiseuxSeries s = build_series(name, order);
  if (as_json) {
    json arr = json::array();
    for (const auto& [e, c] : s.terms()) {
      json t;
      t["exponent"] = to_string(Rat(e));
      t["coefficient"] = to_string(Rat(c));
      arr.push_back(t);
    }
    json out;
    out["series"] = name;
    out["known_below"] = to_string(s.trunc());
    out["terms"] = arr;
    std::printf("%s\n", out.dump(2).c_str());
    return kExitPass;
  }
  for (const auto& [e, c] : s.terms())
    std::printf("%s: %s\n", to_string(Rat(e)).c_str(),
                to_string(Rat(c)).c_str());
  std::printf("O(q^%s)\n", to_string(s.trunc()).c_str());
  return kExitPass;
}

int cmd_group(bool enumerate, bool borel, bool relations, bool as_json) {
  if (enumerate + borel + relations != 1)
    throw Error("pick exactly one of --enumerate, --subgroup-borel, "
                "--relations");
  if (relations) {
    std::vector<VerificationReport> reports;
    bool all_pass = true;
    for (const auto& id : group_relation_ids()) {
      reports.push_back(verify_group_relation(id));
      all_pass = all_pass && reports.back().pass;
    }
    print_reports(reports, as_json);
    return all_pass ? kExitPass : kExitFail;
  }

  GroupClosure g =
      enumerate
          ? enumerate_group({matrix_s6(), matrix_t6()}, {"S", "T"}, 1500)
          : enumerate_group({matrix_h(), matrix_t6()}, {"H", "T"}, 200);
  if (as_json) {
    json out;
    out["order"] = g.order();
    if (borel) out["index"] = 1092 / g.order();
    json sample = json::array();
    for (size_t i = 0; i < g.words.size() && i < 8; ++i)
      sample.push_back(g.words[i]);
    out["sample_words"] = sample;
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("order: %zu\n", g.order());
    if (borel) std::printf("index: %zu\n", 1092 / g.order());
    std::printf("sample words:");
    for (size_t i = 0; i < g.words.size() && i < 8; ++i)
      std::printf(" %s", g.words[i].c_str());
    std::printf("\n");
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the level-13 modular identity "
               "catalog (suites: group, symbolic, qseries, numeric)"};
  app.require_subcommand(1);

  std::string suite = "all";
  std::string id;
  std::optional<long> order;
  std::optional<double> tol;
  bool with_numeric = false;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite,
                     "suite: all, group, symbolic, qseries, numeric")
      ->check(CLI::IsMember({"all", "group", "symbolic", "qseries",
                             "numeric"}));
  verify->add_option("--id", id, "single catalog id (e.g. G3, P8, Q7, N2)");
  verify->add_option("--order", order, "series truncation order override");
  verify->add_option("--tol", tol, "numeric tolerance override");
  verify->add_flag("--numeric", with_numeric,
                   "include the numeric suite in --suite all");
  verify->add_flag("--json", verify_json, "machine-readable output");

  std::string series;
  std::optional<long> expand_order;
  bool expand_json = false;
  auto* expand = app.add_subcommand("expand", "print a q-expansion");
  expand->add_option("--series", series,
                     "series name: eta, eta5, eta7, eta13, a1..a6, tau, j, "
                     "j13, partition, Phi12_of_a, Phi4_of_a, A0_of_a, ...")
      ->required();
  expand->add_option("--order", expand_order, "truncation order");
  expand->add_flag("--json", expand_json, "machine-readable output");

  bool g_enum = false, g_borel = false, g_rel = false, group_json = false;
  auto* group = app.add_subcommand("group", "group enumeration and relations");
  group->add_flag("--enumerate", g_enum, "closure of the two generators");
  group->add_flag("--subgroup-borel", g_borel,
                  "closure of the upper-triangular subgroup");
  group->add_flag("--relations", g_rel, "relation check table");
  group->add_flag("--json", group_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed())
      return cmd_verify(suite, id, order, tol, with_numeric, verify_json);
    if (expand->parsed()) return cmd_expand(series, expand_order, expand_json);
    return cmd_group(g_enum, g_borel, g_rel, group_json);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
