// Command-line front end. Talks to the library only through the C API and
// renders every text report from the JSON that API returns.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsg/tsg.h"

namespace {

using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Library failure: internal inconsistency is a verification failure, every
// other status means the input was unusable.
int report_status(tsg_status status) {
  std::cerr << "error: " << tsg_status_name(status) << ": " << tsg_last_error() << "\n";
  return status == TSG_ERR_INTERNAL ? kExitFail : kExitUsage;
}

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { tsg_string_free(p); }
};

std::string join(const json& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l.get<std::string>();
  return "{" + out + "}";
}

void print_failed_records(std::ostream& os, const json& records, const std::string& indent) {
  for (const auto& r : records) {
    if (r["pass"].get<bool>()) continue;
    os << indent << "FAIL " << r["check"].get<std::string>() << ": expected " << r["predicted"].dump() << ", got "
       << r["oracle"].dump();
    if (!r["witness"].get<std::string>().empty()) os << " (" << r["witness"].get<std::string>() << ")";
    os << "\n";
  }
}

void render_valency(std::ostream& os, const json& v) {
  os << "valency: " << v["arc_count"] << " arcs";
  os << ", out-valency " << (v["out_constant"].is_null() ? "varies" : "constant " + v["out_constant"].dump());
  os << ", in-valency " << (v["in_constant"].is_null() ? "varies" : "constant " + v["in_constant"].dump());
  os << (v["regular"].get<bool>() ? ", regular" : "") << (v["undirected"].get<bool>() ? ", undirected" : ", directed")
     << "\n";
  for (const char* side : {"out_valencies", "in_valencies"}) {
    if (v[side].size() < 2) continue;
    for (const auto& [val, labels] : v[side].items())
      os << "  " << (side[0] == 'o' ? "out" : "in") << "-valency " << val << " on " << join(labels) << "\n";
  }
}

void render_components(std::ostream& os, const json& c) {
  os << "components: " << c["strong_count"] << " strong, " << c["weak_count"] << " weak; sizes";
  for (const auto& s : c["strong_sizes"]) os << " " << s;
  os << "\n";
  const auto& iso = c["partition"]["iso_classes"];
  if (!iso.is_null() && c["strong_count"].get<int>() > 1)
    os << "  isomorphism classes: " << iso.size() << "\n";
}

void render_cosets(std::ostream& os, const json& c) {
  os << "cosets: " << c["count"] << " double cosets, " << c["total_components"] << " components in total\n";
  for (const auto& d : c["cosets"])
    os << "  rep " << d["representative"].get<std::string>() << ": size " << d["size"] << ", k_s " << d["k_s"]
       << ", component size " << d["component_size"] << "\n";
}

void render_theorem24(std::ostream& os, const json& t) {
  os << "theorem24: factorization " << t["factorization"] << ", predicate " << t["predicate"]
     << ", strongly connected " << t["strongly_connected"];
  if (!t["k"].is_null()) os << ", k " << t["k"];
  os << "\n";
  if (!t["offset_witness"].is_null()) {
    const auto& w = t["offset_witness"];
    os << "  i=" << w["i"] << ": " << w["i_words"].get<std::string>() << "\n";
    os << "  j=" << w["j"] << ": " << w["j_words"].get<std::string>() << "\n";
  }
}

std::string render_analysis(const json& a) {
  std::ostringstream os;
  os << a["instance"].get<std::string>() << "  (order " << a["order"] << ")\n";
  const auto& r = a["results"];
  if (r.contains("valency")) render_valency(os, r["valency"]);
  if (r.contains("components")) render_components(os, r["components"]);
  if (r.contains("cosets")) render_cosets(os, r["cosets"]);
  if (r.contains("burnside"))
    os << "burnside: " << r["burnside"]["components"] << " components (|U| " << r["burnside"]["u_order"]
       << ", fixed points " << r["burnside"]["fixed_point_sum"] << ")\n";
  if (r.contains("theorem24")) render_theorem24(os, r["theorem24"]);
  if (r.contains("retract"))
    os << "retract: connected " << r["retract"]["connected"] << ", image connected "
       << r["retract"]["image_connected"] << ", kernel connected " << r["retract"]["kernel_connected"] << "\n";
  std::size_t failed = 0;
  for (const auto& rec : a["report"]) failed += rec["pass"].get<bool>() ? 0 : 1;
  os << "checks: " << a["report"].size() - failed << " passed, " << failed << " failed\n";
  print_failed_records(os, a["report"], "  ");
  return os.str();
}

std::string render_examples(const json& e) {
  std::ostringstream os;
  for (const auto& f : e["fixtures"]) {
    os << (f["pass"].get<bool>() ? "PASS " : "FAIL ") << f["id"].get<std::string>() << "  "
       << f["instance"].get<std::string>() << "  (" << f["report"].size() << " checks)\n";
    print_failed_records(os, f["report"], "  ");
  }
  os << e["passed"] << "/" << e["passed"].get<int>() + e["failed"].get<int>() << " fixtures passed\n";
  return os.str();
}

std::string render_verify(const json& v) {
  std::ostringstream os;
  os << "verify seed " << v["seed"] << ", max order " << v["max_order"] << ": " << v["passed"] << "/"
     << v["instances"] << " instances passed\n";
  for (const auto& [name, t] : v["checks"].items())
    os << "  " << name << ": " << t["pass"] << " pass, " << t["fail"] << " fail\n";
  for (const auto& f : v["failures"]) {
    os << "instance " << f["index"] << ": 2S(" << f["group"].get<std::string>() << ";" << f["left"].get<std::string>()
       << "," << f["right"].get<std::string>() << ")\n";
    for (const auto& r : f["records"])
      os << "  FAIL " << r["check"].get<std::string>() << ": expected " << r["predicted"].dump() << ", got "
         << r["oracle"].dump() << "\n";
  }
  return os.str();
}

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return static_cast<bool>(out);
}

int emit(const json& result, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << result.dump(2) << "\n";
  else
    std::cout << text;
  return result.value("pass", result.value("failed", 0) == 0) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-sided group digraphs: construction, analysis and verification"};
  app.require_subcommand(1);

  std::string group, left, right, checks, dot_path, only, cayley;
  bool as_json = false;
  std::uint64_t seed = 7;
  int instances = 200, max_order = 24, threads = 1;

  auto* analyze = app.add_subcommand("analyze", "Build 2S(G;L,R) and run the selected checks");
  analyze->add_option("--group", group, "Group spec, e.g. A4, D6, D3xC3")->required();
  analyze->add_option("--left", left, "Comma-separated elements of L")->required();
  analyze->add_option("--right", right, "Comma-separated elements of R")->required();
  analyze->add_option("--checks", checks, "valency,components,cosets,burnside,theorem24,retract");
  analyze->add_option("--dot", dot_path, "Also write the digraph as DOT to this file");
  analyze->add_flag("--json", as_json, "Print the JSON report");

  auto* examples = app.add_subcommand("paper-examples", "Replay the worked examples");
  examples->add_option("--only", only, "Run a single fixture by id");
  examples->add_flag("--json", as_json, "Print the JSON report");

  auto* verify = app.add_subcommand("verify", "Randomized predicate-versus-oracle suite");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--instances", instances, "Number of instances")->check(CLI::PositiveNumber);
  verify->add_option("--max-order", max_order, "Largest group order drawn")->check(CLI::Range(1, 60));
  verify->add_option("--threads", threads, "Worker threads (output does not depend on this)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json, "Print the JSON report");

  auto* dot = app.add_subcommand("dot", "Print a digraph in Graphviz DOT format");
  dot->add_option("--group", group, "Group spec")->required();
  dot->add_option("--left", left, "Comma-separated elements of L");
  dot->add_option("--right", right, "Comma-separated elements of R");
  dot->add_option("--cayley", cayley, "Connection set S for Cay(G,S) instead of L and R");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (*analyze) {
    OwnedString out;
    const tsg_status st = tsg_analyze(group.c_str(), left.c_str(), right.c_str(), checks.c_str(),
                                      dot_path.empty() ? 0 : 1, &out.p);
    if (st != TSG_OK) return report_status(st);
    json result = json::parse(out.p);
    if (!dot_path.empty()) {
      if (!write_file(dot_path, result["dot"].get<std::string>())) {
        std::cerr << "error: cannot write " << dot_path << "\n";
        return kExitUsage;
      }
      result.erase("dot");
    }
    return emit(result, as_json, as_json ? "" : render_analysis(result));
  }

  if (*examples) {
    OwnedString out;
    const tsg_status st = tsg_paper_examples(only.empty() ? nullptr : only.c_str(), &out.p);
    if (st != TSG_OK) return report_status(st);
    const json result = json::parse(out.p);
    return emit(result, as_json, as_json ? "" : render_examples(result));
  }

  if (*verify) {
    OwnedString out;
    const tsg_status st = tsg_verify(seed, instances, max_order, threads, &out.p);
    if (st != TSG_OK) return report_status(st);
    const json result = json::parse(out.p);
    return emit(result, as_json, as_json ? "" : render_verify(result));
  }

  // dot
  const bool two_sided = !left.empty() || !right.empty();
  if (cayley.empty() ? (left.empty() || right.empty()) : two_sided) {
    std::cerr << "error: dot needs --left and --right, or --cayley on its own\n";
    return kExitUsage;
  }
  tsg_group* g = nullptr;
  if (tsg_status st = tsg_group_parse(group.c_str(), &g); st != TSG_OK) return report_status(st);
  std::unique_ptr<tsg_group, decltype(&tsg_group_free)> group_handle(g, tsg_group_free);
  tsg_subset *a = nullptr, *b = nullptr;
  tsg_digraph* d = nullptr;
  tsg_status st = tsg_subset_parse(g, cayley.empty() ? left.c_str() : cayley.c_str(), &a);
  std::unique_ptr<tsg_subset, decltype(&tsg_subset_free)> a_handle(a, tsg_subset_free);
  if (st != TSG_OK) return report_status(st);
  if (cayley.empty()) {
    st = tsg_subset_parse(g, right.c_str(), &b);
    if (st != TSG_OK) return report_status(st);
  }
  std::unique_ptr<tsg_subset, decltype(&tsg_subset_free)> b_handle(b, tsg_subset_free);
  st = cayley.empty() ? tsg_digraph_two_sided(a, b, &d) : tsg_digraph_cayley(a, &d);
  if (st != TSG_OK) return report_status(st);
  std::unique_ptr<tsg_digraph, decltype(&tsg_digraph_free)> d_handle(d, tsg_digraph_free);
  OwnedString text;
  if ((st = tsg_digraph_dot(d, &text.p)) != TSG_OK) return report_status(st);
  std::cout << text.p;
  return kExitPass;
}
