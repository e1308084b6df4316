// Command-line front end; talks to the library through snc.h only.
#include "snc/snc.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#ifndef SNC_DEFAULT_FIXTURES
#define SNC_DEFAULT_FIXTURES "fixtures"
#endif

namespace {

using json = nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

struct input_error {
  std::string message;
};

void check(snc_status s) {
  if (s != SNC_OK) throw input_error{std::string(snc_status_name(s)) + ": " + snc_last_error()};
}

struct owned_string {
  char* p = nullptr;
  ~owned_string() { snc_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

using graph_ptr = std::unique_ptr<snc_graph, decltype(&snc_graph_destroy)>;
using surface_ptr = std::unique_ptr<snc_surface, decltype(&snc_surface_destroy)>;
using report_ptr = std::unique_ptr<snc_report, decltype(&snc_report_destroy)>;

graph_ptr load_graph(const std::string& path) {
  snc_graph* g = nullptr;
  check(snc_graph_from_file(path.c_str(), &g));
  return graph_ptr(g, snc_graph_destroy);
}

std::vector<const char*> c_names(const std::vector<std::string>& xs) {
  std::vector<const char*> out;
  for (const auto& x : xs) out.push_back(x.c_str());
  return out;
}

int cmd_det(const std::string& file, const std::vector<std::string>& support, bool as_json) {
  auto g = load_graph(file);
  owned_string d;
  auto names = c_names(support);
  check(snc_graph_discriminant(g.get(), support.empty() ? nullptr : names.data(), names.size(), &d.p));
  if (as_json)
    std::cout << json{{"d", d.str()}}.dump() << "\n";
  else
    std::cout << d.str() << "\n";
  return exit_ok;
}

int cmd_bark(const std::string& file, const std::string& support, bool as_json) {
  snc_bark_support kind = SNC_BARK_AUTO;
  if (support == "whole")
    kind = SNC_BARK_WHOLE_COMPONENT;
  else if (support == "twigs")
    kind = SNC_BARK_TWIGS;
  else if (support != "auto")
    throw input_error{"--support must be auto, whole or twigs"};
  auto g = load_graph(file);
  owned_string out;
  check(snc_graph_bark(g.get(), kind, &out.p));
  if (as_json) {
    std::cout << out.str() << "\n";
    return exit_ok;
  }
  json j = json::parse(out.str());
  bool residual_zero = true;
  for (const auto& [id, r] : j["residuals"].items()) {
    if (r.get<std::string>() != "0") residual_zero = false;
  }
  for (const auto& [id, b] : j["bark"].items())
    std::cout << id << " bark=" << b.get<std::string>() << " sharp=" << j["sharp"][id].get<std::string>() << "\n";
  std::cout << "residuals " << (residual_zero ? "zero" : "NONZERO") << "\n";
  return residual_zero ? exit_ok : exit_check_failed;
}

int cmd_classify(const std::string& file, bool as_json) {
  auto g = load_graph(file);
  owned_string out;
  check(snc_graph_classify(g.get(), &out.p));
  if (as_json)
    std::cout << json{{"type", out.str()}}.dump() << "\n";
  else
    std::cout << out.str() << "\n";
  return exit_ok;
}

int cmd_fiber(const std::string& file, bool as_json) {
  auto g = load_graph(file);
  owned_string out;
  int valid = 0;
  check(snc_graph_fiber_check(g.get(), &valid, &out.p));
  if (as_json) {
    std::cout << out.str() << "\n";
  } else {
    json j = json::parse(out.str());
    if (!valid) {
      std::cout << "not a fiber\n";
    } else {
      std::cout << "valid fiber\ncontractions:";
      for (const auto& st : j["trace"]) std::cout << " " << st["vertex"].get<std::string>();
      std::cout << "\nmultiplicities:";
      for (const auto& [id, m] : j["multiplicities"].items()) std::cout << " " << id << "=" << m.get<std::string>();
      std::cout << "\n";
    }
  }
  return valid ? exit_ok : exit_check_failed;
}

int cmd_mumford(const std::string& file, bool as_json) {
  auto g = load_graph(file);
  owned_string out;
  check(snc_graph_mumford(g.get(), &out.p));
  if (as_json) {
    std::cout << out.str() << "\n";
    return exit_ok;
  }
  json j = json::parse(out.str());
  std::vector<std::string> parts;
  for (const auto& f : j["invariant_factors"]) parts.push_back(f.get<std::string>());
  long long free_rank = j["free_rank"].get<long long>();
  if (free_rank > 0) parts.push_back("Z^" + std::to_string(free_rank));
  if (parts.empty()) parts.push_back("1");
  for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? " " : "") << parts[i];
  std::cout << "\n";
  return exit_ok;
}

int cmd_dot(const std::string& file) {
  auto g = load_graph(file);
  owned_string out;
  check(snc_graph_dot(g.get(), &out.p));
  std::cout << out.str();
  return exit_ok;
}

int cmd_arr_run(const std::string& file, const std::vector<std::string>& boundary, bool as_json) {
  snc_surface* raw = nullptr;
  check(snc_surface_from_file(file.c_str(), &raw));
  surface_ptr s(raw, snc_surface_destroy);
  owned_string summary;
  check(snc_surface_summary(s.get(), &summary.p));
  json j = json::parse(summary.str());
  if (!boundary.empty()) {
    auto names = c_names(boundary);
    snc_graph* graw = nullptr;
    check(snc_surface_boundary_graph(s.get(), names.data(), names.size(), &graw));
    graph_ptr g(graw, snc_graph_destroy);
    owned_string d, type, text;
    check(snc_graph_discriminant(g.get(), nullptr, 0, &d.p));
    check(snc_graph_serialize(g.get(), &text.p));
    if (snc_graph_classify(g.get(), &type.p) != SNC_OK) type.p = nullptr;
    j["boundary"] = {{"d", d.str()}, {"type", type.p ? type.str() : "unclassified"}, {"graph", text.str()}};
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "rank " << j["rank"].get<std::size_t>() << "\n";
  std::cout << "K = " << j["canonical"].get<std::string>() << ", K^2 = " << j["canonical_square"].get<std::string>()
            << "\n";
  for (const auto& c : j["classes"])
    std::cout << c["name"].get<std::string>() << " = " << c["class"].get<std::string>() << " (self "
              << c["self"].get<std::string>() << ")\n";
  if (j.contains("boundary")) {
    std::cout << "boundary d = " << j["boundary"]["d"].get<std::string>() << ", type "
              << j["boundary"]["type"].get<std::string>() << "\n"
              << j["boundary"]["graph"].get<std::string>();
  }
  return exit_ok;
}

int cmd_verify(const std::string& target, const std::string& fixtures, bool as_json) {
  snc_report* raw = nullptr;
  check(snc_verify(target.c_str(), fixtures.c_str(), &raw));
  report_ptr r(raw, snc_report_destroy);
  owned_string out;
  check(as_json ? snc_report_json(r.get(), &out.p) : snc_report_text(r.get(), &out.p));
  std::cout << out.str();
  std::size_t passed = 0, total = 0;
  check(snc_report_counts(r.get(), &passed, &total));
  return passed == total ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks on weighted dual graphs, blow-up lattices and plane configurations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file, support_mode = "auto", target, fixtures = SNC_DEFAULT_FIXTURES;
  std::vector<std::string> support, boundary;

  auto* det = app.add_subcommand("det", "d = det(-Q) of a graph");
  det->add_option("graph", file)->required();
  det->add_option("--support", support, "vertex ids")->delimiter(',');

  auto* bark = app.add_subcommand("bark", "bark and D# of a graph");
  bark->add_option("graph", file)->required();
  bark->add_option("--support", support_mode, "auto | whole | twigs");

  auto* classify = app.add_subcommand("classify", "boundary shape");
  classify->add_option("graph", file)->required();

  auto* fiber = app.add_subcommand("fiber-check", "is the graph a degenerate fiber of a P1-ruling");
  fiber->add_option("graph", file)->required();

  auto* mumford = app.add_subcommand("mumford", "invariant factors of coker Q");
  mumford->add_option("graph", file)->required();

  auto* dot = app.add_subcommand("dot", "Graphviz output");
  dot->add_option("graph", file)->required();

  auto* arr = app.add_subcommand("arr", "arrangement programs");
  arr->require_subcommand(1);
  auto* arr_run = arr->add_subcommand("run", "run a blow-up program");
  arr_run->add_option("program", file)->required();
  arr_run->add_option("--boundary", boundary, "curve names")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run bundled scenarios");
  verify->add_option("target", target, "y244 | y333 | cases | all")->required();
  verify->add_option("--fixtures", fixtures, "fixture directory");

  for (auto* sub : {det, bark, classify, fiber, mumford, arr_run, verify}) sub->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (*det) return cmd_det(file, support, as_json);
    if (*bark) return cmd_bark(file, support_mode, as_json);
    if (*classify) return cmd_classify(file, as_json);
    if (*fiber) return cmd_fiber(file, as_json);
    if (*mumford) return cmd_mumford(file, as_json);
    if (*dot) return cmd_dot(file);
    if (*arr_run) return cmd_arr_run(file, boundary, as_json);
    if (*verify) return cmd_verify(target, fixtures, as_json);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.message << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_input_error;
}
