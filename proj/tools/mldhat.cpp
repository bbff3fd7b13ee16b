// mldhat: λ and the Mather mld-hat of toric cones and very general
// hypersurfaces, plus the finite-field jet oracle.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mld/cone.hpp"
#include "mld/errors.hpp"
#include "mld/hilbert.hpp"
#include "mld/hypersurface.hpp"
#include "mld/jet.hpp"
#include "mld/report_io.hpp"
#include "mld/toric.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInternal = 1;

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t max_subsets = 1'000'000;
  std::optional<std::string> box_bound;
  bool timings = false;
};

mld::Integer parse_integer(const std::string& s, const char* what) {
  mld::Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw mld::InputError(std::string(what) + ": \"" + s + "\" is not an integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mather minimal log discrepancy of toric cones and very general hypersurfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::string box_bound;
  app.add_option("--seed", g.seed, "Seed for every randomized step");
  app.add_option("--max-subsets", g.max_subsets, "Limit on Hilbert-basis subsets examined");
  app.add_option("--box-bound", box_bound, "Override the certified search box (result marked HEURISTIC)");
  app.add_flag("--timings", g.timings, "Add wall-clock timings to the report");

  std::string cone_path, support_path, alpha_text;
  bool no_fast_paths = false, certify = false, direct = false;
  std::uint64_t prime = 10007;
  std::size_t trials = 50;
  std::int64_t m = 0;
  std::optional<std::int64_t> max_weight;

  auto* toric = app.add_subcommand("toric", "λ and mld-hat at the torus-fixed point (or at a face given in the file)");
  toric->add_option("--cone", cone_path, "Cone JSON file")->required()->check(CLI::ExistingFile);
  toric->add_flag("--no-fast-paths", no_fast_paths, "Always run the general search");

  auto* hyper = app.add_subcommand("hyper", "Lower bound for λ of a very general hypersurface");
  hyper->add_option("--support", support_path, "Support JSON file")->required()->check(CLI::ExistingFile);
  hyper->add_flag("--certify", certify, "Run the finite-field torus-point sampler when the certificate is undecided");
  hyper->add_option("--oracle-prime", prime, "Prime for the sampler");
  hyper->add_option("--trials", trials, "Sampler trials");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the dual semigroup of a cone");
  hilbert->add_option("--cone", cone_path, "Cone JSON file")->required()->check(CLI::ExistingFile);
  hilbert->add_flag("--direct", direct, "Use the cone in the file as the semigroup cone instead of its dual");

  auto* dual = app.add_subcommand("dual", "Dual cone");
  dual->add_option("--cone", cone_path, "Cone JSON file")->required()->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "Finite-field jet oracle");
  oracle->require_subcommand(1);
  auto* staircase = oracle->add_subcommand("staircase", "Estimate dim C^m_α by the triangular solve");
  auto* torus = oracle->add_subcommand("torus-point", "Sample a torus point of V(P0) off V(T0)");
  auto* expand = oracle->add_subcommand("expand", "Print the arc-expanded equations G_s");
  for (auto* sub : {staircase, torus, expand}) {
    sub->add_option("--support", support_path, "Support JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--alpha", alpha_text, "Orders, comma separated")->required();
  }
  staircase->add_option("--m", m, "Truncation order")->required();
  expand->add_option("--m", m, "Truncation order")->required();
  expand->add_option("--max-weight", max_weight, "Largest s kept (default m)");
  for (auto* sub : {staircase, torus}) {
    sub->add_option("--prime", prime, "Field characteristic");
    sub->add_option("--trials", trials, "Number of trials");
  }
  std::optional<std::uint64_t> expand_prime;
  expand->add_option("--prime", expand_prime, "Reduce coefficients mod p");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return mld::Json{{"total_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()}};
  };

  try {
    std::optional<mld::Integer> bound;
    if (!box_bound.empty()) bound = parse_integer(box_bound, "--box-bound");
    mld::Json out;

    if (toric->parsed()) {
      const auto in = mld::parse_cone_file(cone_path);
      mld::MinimizeOptions opts{.use_fast_paths = !no_fast_paths, .max_subsets = g.max_subsets};
      auto report = mld::make_report(mld::mld_at_point(in.cone, in.face, opts));
      if (g.timings) report.timings = elapsed();
      out = report.to_json();
    } else if (hyper->parsed()) {
      const auto s = mld::parse_support_file(support_path);
      mld::HypersurfaceOptions opts;
      opts.search.box_bound = bound;
      opts.sampler = {.enabled = certify, .prime = prime, .trials = trials, .seed = g.seed};
      auto report = mld::make_report(mld::hypersurface_report(s, opts));
      if (g.timings) report.timings = elapsed();
      out = report.to_json();
    } else if (hilbert->parsed()) {
      const auto in = mld::parse_cone_file(cone_path);
      out = mld::to_json(mld::hilbert_basis(direct ? in.cone : mld::dual_cone(in.cone)));
    } else if (dual->parsed()) {
      out = mld::to_json(mld::dual_cone(mld::parse_cone_file(cone_path).cone));
    } else if (staircase->parsed()) {
      const auto s = mld::parse_support_file(support_path);
      out = mld::to_json(mld::staircase_verify(s, mld::parse_alpha(alpha_text), m, prime, trials, g.seed));
    } else if (torus->parsed()) {
      const auto s = mld::parse_support_file(support_path);
      const auto cert = mld::equality_certificate(s, mld::parse_alpha(alpha_text));
      out = mld::to_json(mld::torus_point_sample(cert.p0, cert.t0, s.size(), prime, trials, g.seed));
    } else if (expand->parsed()) {
      const auto s = mld::parse_support_file(support_path);
      out = mld::to_json(mld::expand(s, {}, mld::parse_alpha(alpha_text), m, expand_prime, max_weight));
    }
    if (g.timings && !out.contains("timings")) out["timings"] = elapsed();
    std::cout << mld::dump(out);
    return kExitOk;
  } catch (const mld::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const mld::LimitExceeded& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
