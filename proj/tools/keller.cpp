// keller: command-line front end for the plane polynomial map toolkit.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "keller/core/errors.hpp"
#include "keller/verify/harness.hpp"

using namespace keller;
using nlohmann::json;

namespace {

// Accepts "x + y" as well as "P=x + y".
std::string strip_label(std::string s, char label) {
  auto eq = s.find('=');
  if (eq != std::string::npos) {
    std::string head = s.substr(0, eq);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    if (head.size() == 1 && std::toupper(head[0]) == label) s = s.substr(eq + 1);
  }
  return s;
}

struct MapArgs {
  std::string p, q, value;
};

CorpusEntry entry_of(const MapArgs& a) {
  CorpusEntry e;
  e.name = "map";
  e.P = strip_label(a.p, 'P');
  e.Q = strip_label(a.q, 'Q');
  if (!a.value.empty()) {
    // Replaces F by F - v0.
    auto comma = a.value.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::InvalidArgument, "--value expects U,V");
    e.P = "(" + e.P + ") - (" + a.value.substr(0, comma) + ")";
    e.Q = "(" + e.Q + ") - (" + a.value.substr(comma + 1) + ")";
  }
  return e;
}

PencilMap map_of(const MapArgs& a) {
  auto e = entry_of(a);
  return PencilMap::parse(e.P, e.Q);
}

void add_map_args(CLI::App* sub, MapArgs& a) {
  sub->add_option("P", a.p, "first component, e.g. \"P=x\"")->required();
  sub->add_option("Q", a.q, "second component, e.g. \"Q=y+x^2\"")->required();
  sub->add_option("--value", a.value, "analyze F - (U,V) instead of F");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of plane polynomial maps F = (P, Q)"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.seed = default_seed();
  app.add_option("--seed", cfg.seed, "seed for sampling and shears (default: KELLER_SEED or built-in)");
  app.add_option("--cap", cfg.cap, "degree cap for algebraic extensions")->check(CLI::PositiveNumber);

  MapArgs a;
  auto* analyze = app.add_subcommand("analyze", "full dossier as JSON");
  add_map_args(analyze, a);

  auto* pencil = app.add_subcommand("pencil", "pencil profile: member counts and rationality");
  add_map_args(pencil, a);
  pencil->add_option("--samples", cfg.samples, "sampled members")->check(CLI::PositiveNumber);

  auto* resolve = app.add_subcommand("resolve", "blow-up resolution of (P : Q)");
  add_map_args(resolve, a);
  std::string dot_path;
  resolve->add_option("--dot", dot_path, "write the dual graph in DOT form");

  auto* jelonek = app.add_subcommand("jelonek", "finite fibres, geometric degree and non-proper set");
  add_map_args(jelonek, a);

  auto* verify = app.add_subcommand("verify", "identity checks for one map");
  add_map_args(verify, a);

  auto* corpus = app.add_subcommand("corpus", "run a corpus file");
  std::string corpus_path, json_path;
  int jobs = 1;
  corpus->add_option("FILE", corpus_path, "TOML corpus")->required();
  corpus->add_option("--jobs,-j", jobs, "parallel maps")->check(CLI::PositiveNumber);
  corpus->add_option("--json", json_path, "write the JSON report to PATH ('-' for standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze || *verify) {
      auto r = run_map(entry_of(a), cfg);
      if (*analyze) {
        print(to_json(r));
      } else {
        json j = to_json(r);
        print({{"checks", j["checks"]}, {"theorem2", j["theorem2"]}, {"status", j["status"]}});
      }
      if (r.status == MapStatus::CapExceeded) std::cerr << "error: " << r.error << "\n";
      return r.exit_code();
    }
    if (*pencil) {
      print(to_json(scan_pencil(map_of(a), cfg.samples, cfg.seed)));
      return 0;
    }
    if (*resolve) {
      ResolveOptions opts;
      opts.cap = cfg.cap;
      auto t = resolve_pencil(map_of(a), opts);
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + dot_path);
        out << dual_graph_dot(t);
      }
      print(to_json(t));
      return 0;
    }
    if (*jelonek) {
      PencilMap f = map_of(a);
      auto ff = finite_fibres_check(f);
      json j = {{"finite_fibres", to_json(ff)}};
      if (ff.finite) {
        auto af = nonproper_set(f, cfg.seed);
        j["deg_geo"] = af.deg_geo;
        j["a_f"] = to_json(af);
      }
      print(j);
      return 0;
    }
    auto entries = load_corpus(corpus_path);
    auto report = run_corpus(entries, cfg, jobs);
    const std::string table = summary_table(report);
    if (json_path == "-") {
      print(to_json(report));
      std::cerr << table;
    } else {
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + json_path);
        out << to_json(report).dump(2) << "\n";
      }
      std::cout << table;
    }
    return exit_code(report);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::BlowupBudgetExceeded) return 3;
    return e.kind() == ErrorKind::InvalidArgument ? 2 : 1;
  }
}
