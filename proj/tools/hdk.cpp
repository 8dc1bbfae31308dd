// Command-line front end: check, render, fuzz, serve.

#include <httplib.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hdk/fuzz.hpp"
#include "hdk/proofdoc.hpp"
#include "hdk/render.hpp"
#include "hdk/service.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int check(const std::string& path, bool json) {
  hdk::ProofDocument doc = hdk::parse_document(slurp(path));
  hdk::Report report = hdk::check_document(doc);
  std::cout << (json ? hdk::report_json(report) + "\n" : hdk::report_text(report));
  return report.ok ? 0 : 1;
}

int render(const std::string& path, std::string name, const std::string& out, bool json) {
  hdk::ProofDocument doc = hdk::parse_document(slurp(path));
  if (name.empty()) {
    if (!doc.proof) throw std::runtime_error("no --diagram given and the document has no proof");
    name = doc.proof->start;
  }
  hdk::Scene scene = hdk::project(doc.diagram(name), *doc.signature);
  const std::string text = json ? hdk::scene_to_json(scene) + "\n" : hdk::scene_to_svg(scene);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(out);
    if (!(file << text)) throw std::runtime_error("cannot write " + out);
  }
  return 0;
}

int fuzz(const hdk::fuzz::Limits& limits, std::size_t cases, std::uint64_t seed, bool serial) {
  using namespace hdk::fuzz;
  std::vector<Property> all = metatheory();
  all.push_back(normal_form());
  all.push_back(rewrite_size_law());
  for (const auto& p : move_round_trips()) all.push_back(p);
  bool ok = true;
  for (const Property& p : all) {
    PropertyReport r = serial ? run_serial(p, cases, seed, limits) : run(p, cases, seed, limits);
    std::cout << (r.ok() ? "ok    " : "FAIL  ") << format_report(r) << "\n" << std::flush;
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

int serve(const std::string& host, int port, const std::string& doc) {
  hdk::Service service;
  httplib::Server server;
  service.mount(server);
  if (!doc.empty()) std::cout << "session " << service.create(slurp(doc)) << "\n";
  std::cout << "listening on http://" << host << ":" << port << "\n" << std::flush;
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rewriting kernel and proof checker for quasistrict higher categories"};
  app.require_subcommand(1);

  std::string path, name, out, host = "127.0.0.1";
  bool json = false, serial = false;
  int port = 8080;
  std::size_t cases = 500;
  std::uint64_t seed = 1;
  hdk::fuzz::Limits limits;

  auto* check_cmd = app.add_subcommand("check", "Replay a proof document and report per-step heights");
  check_cmd->add_option("file", path, "Proof document")->required();
  check_cmd->add_flag("--json", json, "Print the report as JSON");

  auto* render_cmd = app.add_subcommand("render", "Draw the 2-projection of a named diagram");
  render_cmd->add_option("file", path, "Proof document")->required();
  render_cmd->add_option("--diagram", name, "Diagram name (default: the proof's start)");
  render_cmd->add_option("-o,--output", out, "Output file (default: stdout)");
  render_cmd->add_flag("--json", json, "Write the scene as JSON instead of SVG");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the randomized property suite");
  fuzz_cmd->add_option("--max-dim", limits.max_dim, "Largest diagram dimension")->check(CLI::Range(1, 4));
  fuzz_cmd->add_option("--max-height", limits.max_height, "Entries per diagram level");
  fuzz_cmd->add_option("--max-generators", limits.max_generators, "Generators per dimension")
      ->check(CLI::Range(1, 6));
  fuzz_cmd->add_option("--cases", cases, "Cases per property");
  fuzz_cmd->add_option("--seed", seed, "Base seed");
  fuzz_cmd->add_flag("--serial", serial, "Run cases one at a time");

  auto* serve_cmd = app.add_subcommand("serve", "Serve sessions over HTTP");
  serve_cmd->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host, "Address to bind");
  serve_cmd->add_option("--doc", path, "Open a session on this document at startup");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check_cmd) return check(path, json);
    if (*render_cmd) return render(path, name, out, json);
    if (*fuzz_cmd) return fuzz(limits, cases, seed, serial);
    if (*serve_cmd) return serve(host, port, path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
