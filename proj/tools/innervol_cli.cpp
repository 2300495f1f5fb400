// innervol: command-line front end over the C API.
#include <innervol/innervol.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

struct Failure {
  iv_status status;
  std::string message;
};

struct ContextDeleter {
  void operator()(iv_context* c) const { iv_context_free(c); }
};
struct PolytopeDeleter {
  void operator()(iv_polytope* p) const { iv_polytope_free(p); }
};
struct VolumeFnDeleter {
  void operator()(iv_volume_fn* f) const { iv_volume_fn_free(f); }
};
using ContextPtr = std::unique_ptr<iv_context, ContextDeleter>;
using PolytopePtr = std::unique_ptr<iv_polytope, PolytopeDeleter>;
using VolumeFnPtr = std::unique_ptr<iv_volume_fn, VolumeFnDeleter>;

void check(iv_context* ctx, iv_status s) {
  if (s != IV_OK) throw Failure{s, iv_context_last_error(ctx)};
}

std::string take_string(char* s) {
  std::string out(s);
  iv_string_free(s);
  return out;
}

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{IV_ERR_INVALID_ARGUMENT, "cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Options shared by every subcommand that reads a polytope.
struct Input {
  std::string path;
  std::vector<std::string> gen;
  std::string tolerances;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path, "Polytope JSON file, or - for stdin");
    cmd->add_option("--gen", gen, "Generate a shape instead: kind followed by parameters")->expected(1, -1);
    cmd->add_option("--tolerances", tolerances, "JSON file overriding numerical tolerances");
  }

  void configure(iv_context* ctx) const {
    if (!tolerances.empty()) check(ctx, iv_context_set_tolerances(ctx, read_source(tolerances).c_str()));
  }

  PolytopePtr load(iv_context* ctx) const {
    configure(ctx);
    iv_polytope* p = nullptr;
    if (!gen.empty()) {
      std::string spec;
      for (const auto& t : gen) spec += (spec.empty() ? "" : " ") + t;
      check(ctx, iv_polytope_generate(ctx, spec.c_str(), &p));
    } else {
      if (path.empty()) throw Failure{IV_ERR_INVALID_ARGUMENT, "no input: give a file, - or --gen"};
      check(ctx, iv_polytope_from_json(ctx, read_source(path).c_str(), &p));
    }
    return PolytopePtr(p);
  }
};

std::string polytope_json(iv_context* ctx, const iv_polytope* p) {
  char* s = nullptr;
  check(ctx, iv_polytope_to_json(ctx, p, &s));
  return take_string(s);
}

void write_csv(iv_context* ctx, const iv_volume_fn* f, const std::string& path, std::size_t samples) {
  if (samples < 2) throw Failure{IV_ERR_INVALID_ARGUMENT, "--samples must be at least 2"};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{IV_ERR_INVALID_ARGUMENT, "cannot write '" + path + "'"};
  const double g = iv_volume_fn_inradius(f);
  out << "r,V,W\n";
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = i + 1 == samples ? g : g * static_cast<double>(i) / static_cast<double>(samples - 1);
    double v = 0.0, w = 0.0;
    check(ctx, iv_volume_fn_eval(ctx, f, r, &v, &w));
    out << fmt(r) << ',' << fmt(v) << ',' << fmt(w) << '\n';
  }
}

int report_failure(const Failure& f) {
  json err{{"error", iv_status_name(f.status)}, {"message", f.message}};
  std::cerr << err.dump() << '\n';
  return iv_status_is_input_error(f.status) ? kExitInput : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inner-neighbourhood volume functions of convex polytopes"};
  app.require_subcommand(1);

  Input in;
  double margin = 0.1;
  std::string csv_path;
  std::size_t csv_samples = 256;
  std::size_t verify_samples = 20;
  std::size_t mc_samples = 1'000'000;
  std::uint64_t seed = 1;
  std::string function_path;

  auto* gen = app.add_subcommand("gen", "Write a generated shape as polytope JSON");
  gen->add_option("kind", in.gen, "Shape kind followed by parameters")->required()->expected(1, -1);

  auto* vol = app.add_subcommand("volume-fn", "Inner volume function V and erosion volume W");
  in.attach(vol);
  vol->add_option("--window-margin", margin, "Window past the inradius, as a fraction of it")->default_val(0.1);
  vol->add_option("--emit-csv", csv_path, "Also write r,V,W samples on [0, g] to this file");
  vol->add_option("--samples", csv_samples, "Number of CSV rows")->default_val(256);

  auto* inr = app.add_subcommand("inradius", "Chebyshev ball of the polytope");
  auto* rank = app.add_subcommand("rank", "Absolute rank of the facet normals");
  auto* eq = app.add_subcommand("equiangular", "Dimension-wise equiangular profile and closed form");
  auto* roof = app.add_subcommand("roof", "Write the roof of the polytope as polytope JSON");
  auto* ver = app.add_subcommand("verify", "Check a volume function against the sampling oracles");
  for (auto* cmd : {inr, rank, eq, roof, ver}) in.attach(cmd);
  ver->add_option("--function", function_path, "V as piecewise JSON (or a volume-fn result); default: computed");
  ver->add_option("--samples", verify_samples, "Radii to test")->default_val(20);
  ver->add_option("--mc-samples", mc_samples, "Monte-Carlo points")->default_val(1000000);
  ver->add_option("--seed", seed, "Monte-Carlo seed")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  ContextPtr ctx(iv_context_new());
  if (!ctx) return report_failure({IV_ERR_MEMORY_BUDGET, "cannot allocate context"});
  iv_context* c = ctx.get();
  try {
    if (gen->parsed()) {
      std::cout << polytope_json(c, in.load(c).get()) << '\n';
    } else if (vol->parsed()) {
      const auto p = in.load(c);
      iv_volume_fn* raw = nullptr;
      check(c, iv_volume_fn_compute(c, p.get(), margin, &raw));
      VolumeFnPtr f(raw);
      char* s = nullptr;
      check(c, iv_volume_fn_to_json(c, f.get(), &s));
      std::cout << take_string(s) << '\n';
      if (!csv_path.empty()) write_csv(c, f.get(), csv_path, csv_samples);
    } else if (inr->parsed()) {
      const auto p = in.load(c);
      std::vector<double> center(iv_polytope_dim(p.get()));
      double g = 0.0;
      check(c, iv_inradius(c, p.get(), &g, center.data(), center.size()));
      std::cout << json{{"g", g}, {"center", center}}.dump() << '\n';
    } else if (rank->parsed()) {
      const auto p = in.load(c);
      int r = 0, all = 0;
      check(c, iv_absolute_rank(c, p.get(), &r, &all));
      std::cout << json{{"absolute_rank", r}, {"all_independent", all != 0}}.dump() << '\n';
    } else if (eq->parsed()) {
      const auto p = in.load(c);
      char* s = nullptr;
      check(c, iv_equiangular_report(c, p.get(), &s));
      std::cout << take_string(s) << '\n';
    } else if (roof->parsed()) {
      const auto p = in.load(c);
      iv_polytope* raw = nullptr;
      check(c, iv_polytope_roof(c, p.get(), &raw));
      PolytopePtr r(raw);
      std::cout << polytope_json(c, r.get()) << '\n';
    } else if (ver->parsed()) {
      const auto p = in.load(c);
      std::string fn_text;
      if (!function_path.empty()) fn_text = read_source(function_path);
      char* s = nullptr;
      int passed = 0;
      check(c, iv_verify(c, p.get(), function_path.empty() ? nullptr : fn_text.c_str(), verify_samples,
                         mc_samples, seed, &s, &passed));
      std::cout << take_string(s) << '\n';
      return passed ? kExitOk : kExitFail;
    }
  } catch (const Failure& f) {
    return report_failure(f);
  }
  return kExitOk;
}
