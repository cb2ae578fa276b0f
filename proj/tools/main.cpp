// Command line front end: compute homology, Jones polynomials, and run the
// verification battery over diagram files or the bundled corpus.
#include <chrono>
#include <cstdio>
#include <future>
#include <sstream>
#include <iostream>

#include <CLI11.hpp>

#include "rpkh/corpus.hpp"
#include "rpkh/homology.hpp"
#include "rpkh/io.hpp"
#include "rpkh/skein.hpp"
#include "rpkh/verify.hpp"

using namespace rpkh;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitClass = 3;

struct Options {
  std::string input;
  std::string dyad = "aps";
  std::string variant = "reduced";
  int basepoint_face = -1;
  int marked_arc = -1;
  std::string format = "text";
  std::string checks = "all";
  bool bench = false;
};

DiagramRP2 load_input(const Options& opt) {
  DiagramRP2 d = load_diagram(opt.input);
  if (opt.basepoint_face >= 0) d.basepoint_face = opt.basepoint_face;
  if (opt.marked_arc >= 0) d.marked_arc = opt.marked_arc;
  ValidationReport rep = validate(d);
  if (!rep.ok()) {
    for (auto& v : rep.violations) std::cerr << "invalid diagram: " << v << "\n";
    std::exit(kExitValidation);
  }
  return d;
}

int run_compute(const Options& opt) {
  DiagramRP2 d = load_input(opt);
  Dyad dy = resolve_dyad(opt.dyad);
  if (!dyad_validate(dy).empty()) {
    std::cerr << "invalid dyad " << dy.name << "\n";
    return kExitValidation;
  }
  Geometry g(d);
  ChainComplexBigraded C;
  try {
    if (opt.variant == "reduced")
      C = build_reduced_complex(g, dy, g.default_basepoint(), g.default_marked_arc());
    else if (opt.variant == "unreduced")
      C = build_unreduced_complex(g, dy, g.default_basepoint());
    else if (opt.variant == "class1")
      C = build_class1_complex(g, dy, g.default_basepoint());
    else {
      std::cerr << "unknown variant " << opt.variant << "\n";
      return kExitValidation;
    }
  } catch (const std::exception& e) {
    std::string what = e.what();
    std::cerr << what << "\n";
    return what.find("class mismatch") != std::string::npos ? kExitClass : kExitValidation;
  }
  DimTable h = homology_dims(C);
  PoincarePoly p = poincare(h);
  if (opt.format == "json") {
    std::cout << dims_to_json(h) << "\n";
    return 0;
  }
  std::cout << "diagram: " << d.name << "  (n=" << d.n() << ", 2k=" << d.boundary_points
            << ", n+=" << C.n_plus << ", n-=" << C.n_minus << ")\n";
  std::cout << "basepoint face: " << C.basepoint.orbit;
  if (opt.variant == "reduced") std::cout << "  marked arc: " << C.marked_arc;
  std::cout << "\n";
  std::cout << "chain ranks:\n";
  for (auto& [iq, dim] : chain_dims(C))
    std::cout << "  i=" << iq.first << " q=" << iq.second << "  dim " << dim << "\n";
  std::cout << "poincare: " << p.str() << "\n";
  std::cout << "euler:    " << euler_characteristic(p).str() << "\n";
  return 0;
}

int run_jones(const Options& opt) {
  DiagramRP2 d = load_input(opt);
  if (d.k() % 2 != 0) {
    std::cerr << "class mismatch: Jones polynomials need a null homologous diagram\n";
    return kExitClass;
  }
  Geometry g(d);
  LaurentQ j0 = jones(g, 0), j1 = jones(g, 1);
  if (opt.format == "json") {
    std::cout << "{\"J0\":\"" << j0.str() << "\",\"J1\":\"" << j1.str() << "\",\"sum\":\""
              << (j0 + j1).str() << "\"}\n";
    return 0;
  }
  std::cout << "J0:    " << j0.str() << "\n";
  std::cout << "J1:    " << j1.str() << "\n";
  std::cout << "J0+J1: " << (j0 + j1).str() << "\n";
  return 0;
}

std::vector<std::string> parse_checks(const std::string& checks, bool class1) {
  if (checks == "all") return all_check_names(class1);
  std::vector<std::string> out;
  std::string cur;
  for (char ch : checks + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

int verify_one(const DiagramRP2& d, const std::string& checks, bool bench) {
  bool class1 = d.k() % 2 == 1;
  auto t0 = std::chrono::steady_clock::now();
  auto results = run_checks(d, parse_checks(checks, class1));
  auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
  int failures = 0;
  for (auto& r : results) {
    if (r.name == "mirror") {
      std::cout << "  [info] mirror: " << r.witness << "\n";
      continue;
    }
    std::cout << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.name;
    if (!r.pass) {
      std::cout << "  witness: " << r.witness;
      failures++;
    }
    std::cout << "\n";
  }
  if (bench) std::printf("  time: %.1f ms\n", dt.count());
  return failures;
}

int run_verify(const Options& opt) {
  DiagramRP2 d = load_input(opt);
  std::cout << d.name << ":\n";
  int failures = verify_one(d, opt.checks, opt.bench);
  return failures == 0 ? 0 : 1;
}

int run_corpus(const Options& opt) {
  auto entries = corpus();
  // entries are independent pure computations; fan out, print in order
  std::vector<std::future<std::pair<std::string, int>>> jobs;
  for (const auto& e : entries) {
    jobs.push_back(std::async(std::launch::async, [&opt, e]() {
      std::ostringstream os;
      bool class1 = e.diagram.k() % 2 == 1;
      auto t0 = std::chrono::steady_clock::now();
      auto results = run_checks(e.diagram, parse_checks(opt.checks, class1));
      auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
      int failures = 0;
      for (auto& r : results) {
        if (r.name == "mirror") {
          os << "  [info] mirror: " << r.witness << "\n";
          continue;
        }
        os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.name;
        if (!r.pass) {
          os << "  witness: " << r.witness;
          failures++;
        }
        os << "\n";
      }
      if (opt.bench) os << "  time: " << dt.count() << " ms\n";
      return std::make_pair(os.str(), failures);
    }));
  }
  int failures = 0;
  for (size_t i = 0; i < entries.size(); i++) {
    auto [text, f] = jobs[i].get();
    std::cout << entries[i].diagram.name << (entries[i].class1 ? " (class 1)" : "") << ":\n"
              << text;
    failures += f;
  }
  if (failures == 0)
    std::cout << "all corpus checks passed\n";
  else
    std::cout << "corpus failures: " << failures << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov-type homology of link diagrams on RP2"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) cmd->add_option("input", opt.input, "diagram JSON file")->required();
    cmd->add_option("--dyad", opt.dyad, "builtin dyad name (aps, a0, a1, hf, hfprime) or file");
    cmd->add_option("--variant", opt.variant, "reduced | unreduced | class1");
    cmd->add_option("--basepoint-face", opt.basepoint_face, "face orbit id for P");
    cmd->add_option("--marked-arc", opt.marked_arc, "arc id for M");
    cmd->add_option("--format", opt.format, "text | json");
    cmd->add_option("--checks", opt.checks, "comma list of checks, or 'all'");
    cmd->add_flag("--bench", opt.bench, "print per-diagram wall time");
  };

  CLI::App* compute = app.add_subcommand("compute", "homology of one diagram");
  add_common(compute, true);
  CLI::App* jones = app.add_subcommand("jones", "even/odd Jones polynomials");
  add_common(jones, true);
  CLI::App* verify = app.add_subcommand("verify", "structural checks on one diagram");
  add_common(verify, true);
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "run checks over the bundled corpus");
  add_common(corpus_cmd, false);

  CLI11_PARSE(app, argc, argv);
  try {
    if (compute->parsed()) return run_compute(opt);
    if (jones->parsed()) return run_jones(opt);
    if (verify->parsed()) return run_verify(opt);
    if (corpus_cmd->parsed()) return run_corpus(opt);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
