#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "cli.hpp"
#include "commands.hpp"
#include "trophyp/rng.hpp"

namespace trophyp::cli {

Outcome verdict(const Context& ctx, const std::string& check, const std::string& result, Json certificate) {
  Outcome o;
  o.doc = Json{{"check", check}, {"result", result}, {"certificate", std::move(certificate)},
               {"seed", ctx.seed}, {"version", kVersion}};
  o.code = result == "fail" ? 1 : 0;
  return o;
}

Outcome value(const Context& ctx, const std::string& check, Json result) {
  Outcome o;
  o.doc = Json{{"check", check}, {"result", std::move(result)}, {"seed", ctx.seed}, {"version", kVersion}};
  return o;
}

Json load_input(const std::string& path) {
  if (path.empty()) throw InputError("an input file is required (--in FILE, or - for standard input)");
  if (path != "-") return read_json_file(path);
  const std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return parse_json_text(text, "stdin");
}

Complex complex_from_json(const Json& j) {
  if (!j.is_object()) return Complex(rational_from_json(j));
  return Complex(j.contains("re") ? rational_from_json(j["re"]) : Rational(0),
                 j.contains("im") ? rational_from_json(j["im"]) : Rational(0));
}

int run(int argc, char** argv) {
  CLI::App app{"Exact checks for positively hyperbolic varieties"};
  app.require_subcommand(1);
  Context ctx;
  ctx.seed = seed_from_env(0);
  app.add_option("--seed", ctx.seed, "64-bit seed for sampling (overrides TROPHYP_SEED)");
  app.add_option("--jobs", ctx.jobs, "worker count for sweeps")->check(CLI::PositiveNumber);

  std::function<Outcome()> action;
  std::string in_path, vec, weight, roots, out_path;
  int trials = 1000, n = 0, c = 0;
  std::optional<int> dim, bound, rank_opt;

  auto add_in = [&](CLI::App* sub) { sub->add_option("--in,--matrix", in_path, "input JSON file, - for stdin")->required(); };

  for (const bool closure : {false, true}) {
    auto* s = app.add_subcommand(closure ? "varbar" : "var", closure ? "sign variation with zeros chosen adversarially" : "sign variation");
    s->add_option("--vec", vec, "comma separated rationals")->required();
    s->callback([&, closure] { action = [&, closure] { return cmd_var(ctx, vec, closure); }; });
  }

  auto* gr = app.add_subcommand("grassmannian", "classify the row space in Gr(c, n)");
  add_in(gr);
  gr->callback([&] { action = [&] { return cmd_grassmannian(ctx, load_input(in_path)); }; });

  auto* lh = app.add_subcommand("linear-hyp", "positive hyperbolicity of a complex linear space");
  add_in(lh);
  lh->callback([&] { action = [&] { return cmd_linear_hyp(ctx, load_input(in_path)); }; });

  auto* mat = app.add_subcommand("matroid", "matroid operations")->require_subcommand(1);
  for (const char* a : {"validate", "dual", "components"}) {
    auto* s = mat->add_subcommand(a);
    add_in(s);
    s->callback([&, a] { action = [&, a] { return cmd_matroid(ctx, a, load_input(in_path)); }; });
  }

  auto* pos = app.add_subcommand("positroid", "positroid recognition");
  add_in(pos);
  pos->callback([&] { action = [&] { return cmd_positroid(ctx, load_input(in_path)); }; });

  auto* berg = app.add_subcommand("bergman", "Bergman fan operations")->require_subcommand(1);
  for (const char* a : {"cones", "noncrossing", "member"}) {
    auto* s = berg->add_subcommand(a);
    add_in(s);
    if (std::string(a) == "member") {
      s->add_option("--w", weight, "weight vector")->required();
    } else {
      s->add_option("--dim", dim, "cone dimension (default: rank)");
    }
    s->callback([&, a] { action = [&, a] { return cmd_bergman(ctx, a, load_input(in_path), dim, weight); }; });
  }

  auto* poly = app.add_subcommand("poly", "polynomial checks")->require_subcommand(1);
  for (const char* a : {"newton", "gp-check", "mset", "mfun", "tinit", "binomial", "falsify"}) {
    auto* s = poly->add_subcommand(a);
    add_in(s);
    const std::string name = a;
    if (name == "tinit") s->add_option("--w", weight, "weight vector")->required();
    if (name == "falsify" || name == "binomial") s->add_option("--trials", trials, "random lines to try")->check(CLI::PositiveNumber);
    s->callback([&, a] { action = [&, a] { return cmd_poly(ctx, a, load_input(in_path), weight, trials); }; });
  }

  auto* curve = app.add_subcommand("curve", "tropical curve fans")->require_subcommand(1);
  for (const char* a : {"balance", "shape", "decompose", "speyer", "sample", "roundtrip"}) {
    auto* s = curve->add_subcommand(a);
    add_in(s);
    const std::string name = a;
    if (name == "speyer") s->add_option("--roots", roots, "strictly increasing root constants");
    if (name == "sample") {
      s->add_option("--trials", trials, "samples per piece")->check(CLI::PositiveNumber);
      s->add_option("--bound", bound, "required lower bound on varbar (default n - 2)");
    }
    s->callback([&, a] { action = [&, a] { return cmd_curve(ctx, a, load_input(in_path), roots, trials, bound); }; });
  }

  auto* pres = app.add_subcommand("preservers", "signed permutations preserving varbar < c");
  pres->add_option("--n", n, "ambient dimension");
  pres->add_option("--c", c, "threshold")->required();
  pres->add_option("--matrix,--in", in_path, "test a linear map by its c x c minors instead");
  pres->callback([&] {
    action = [&] { return in_path.empty() ? cmd_preservers(ctx, n, c) : cmd_linear_preserver(ctx, load_input(in_path), c); };
  });

  auto* tor = app.add_subcommand("toric-check", "positive hyperbolicity of a toric variety");
  add_in(tor);
  tor->add_option("--trials", trials, "samples for the varbar check")->check(CLI::PositiveNumber);
  tor->callback([&] { action = [&] { return cmd_toric(ctx, load_input(in_path), trials); }; });

  auto* cat = app.add_subcommand("catalog", "matroid catalog")->require_subcommand(1);
  auto* gen = cat->add_subcommand("generate", "all matroids on [n], up to equality");
  gen->add_option("--n", n, "ground set size")->required();
  gen->add_option("--rank", rank_opt, "restrict to one rank");
  gen->callback([&] { action = [&] { return cmd_catalog(ctx, n, rank_opt); }; });

  auto* plot = app.add_subcommand("plot", "SVG of a fan or complex in R^n / R(1,...,1)");
  add_in(plot);
  plot->add_option("--out", out_path, "output SVG file (default: stdout)");
  plot->callback([&] { action = [&] { return cmd_plot(ctx, load_input(in_path), out_path); }; });

  auto* ver = app.add_subcommand("verify", "re-check the certificate of a failing verdict");
  ver->add_option("--certificate", in_path, "verdict JSON file")->required();
  ver->callback([&] { action = [&] { return verify_certificate(ctx, load_input(in_path)); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Outcome o = action();
    if (o.doc.is_string()) {
      std::cout << o.doc.get<std::string>();
    } else {
      std::cout << o.doc.dump(2) << '\n';
    }
    return o.code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cout << Json{{"error", e.what()}}.dump(2) << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cout << Json{{"error", e.what()}}.dump(2) << '\n';
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cout << Json{{"error", e.what()}}.dump(2) << '\n';
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cout << Json{{"error", e.what()}}.dump(2) << '\n';
  }
  return 2;
}

}  // namespace trophyp::cli

int main(int argc, char** argv) { return trophyp::cli::run(argc, argv); }
