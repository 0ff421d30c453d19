#include "skewchar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

#include "skewchar/classify.hpp"
#include "skewchar/lr.hpp"
#include "skewchar/schubert.hpp"
#include "skewchar/text.hpp"
#include "skewchar/verify.hpp"

namespace skewchar {

namespace {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

template <typename Terms>
json terms_json(const Terms& terms) {
  json out = json::array();
  for (const auto& [shape, c] : terms) {
    out.push_back({{"partition", to_json(shape)}, {"coefficient", c}});
  }
  return out;
}

json to_json(const Verdict& v) {
  return {{"multiplicity_free", v.multiplicity_free},
          {"matched_rule", v.matched_rule},
          {"normalized_outer", to_json(v.normalized_input.outer())},
          {"normalized_inner", to_json(v.normalized_input.inner())}};
}

template <typename Terms>
void print_terms(std::ostream& out, const Terms& terms) {
  for (const auto& [shape, c] : terms) {
    out << bracketed(shape) << ": " << c << '\n';
  }
}

void print_verdict(std::ostream& out, const std::string& leg,
                   const Verdict& v) {
  out << leg << ": "
      << (v.multiplicity_free ? "multiplicity-free" : "has multiplicity")
      << " (rule " << v.matched_rule << ") on "
      << to_string(v.normalized_input) << '\n';
}

struct Options {
  std::string format = "text";
  bool structured() const { return format == "structured"; }
};

int cmd_lrcoef(const Options& opt, const std::string& outer_text,
               const std::string& inner_text, const std::string& content_text,
               std::ostream& out) {
  const Partition outer = parse_partition(outer_text);
  const Partition inner = parse_partition(inner_text);
  const Partition content = parse_partition(content_text);
  const Coefficient c = lr_coefficient(outer, inner, content);
  if (opt.structured()) {
    out << json{{"outer", to_json(outer)},
                {"inner", to_json(inner)},
                {"content", to_json(content)},
                {"coefficient", c}}
               .dump()
        << '\n';
  } else {
    out << c << '\n';
  }
  return 0;
}

int cmd_decompose(const Options& opt, const std::string& text,
                  std::ostream& out) {
  const SkewDiagram d = parse_skew(text);
  const Decomposition result = decompose(d);
  if (opt.structured()) {
    out << json{{"outer", to_json(d.outer())},
                {"inner", to_json(d.inner())},
                {"terms", terms_json(result.terms)}}
               .dump()
        << '\n';
  } else {
    print_terms(out, result.terms);
  }
  return 0;
}

int cmd_classify(const Options& opt, const std::string& text, bool oracle,
                 std::ostream& out) {
  const SkewDiagram d = parse_skew(text);
  const Verdict tree = skew_mf(d);
  const Verdict paths = skew_mf_short(d);
  std::optional<Partition> witness;
  if (oracle) witness = multiplicity_witness(d);
  if (opt.structured()) {
    json doc{{"decision_tree", to_json(tree)}, {"lattice_paths", to_json(paths)}};
    if (oracle) {
      doc["oracle"] = {{"multiplicity_free", !witness.has_value()},
                       {"witness", witness ? to_json(*witness) : json()}};
    }
    out << doc.dump() << '\n';
    return 0;
  }
  out << render_ascii(d);
  print_verdict(out, "decision-tree", tree);
  print_verdict(out, "lattice-paths", paths);
  if (oracle) {
    out << "oracle: "
        << (witness ? "has multiplicity, witness " + bracketed(*witness)
                    : std::string("multiplicity-free"))
        << '\n';
    const bool agree = tree.multiplicity_free == paths.multiplicity_free &&
                       paths.multiplicity_free == !witness.has_value();
    out << "agreement: " << (agree ? "yes" : "NO") << '\n';
  }
  return 0;
}

int cmd_schubert(const Options& opt, const std::string& mu_text,
                 const std::string& nu_text, const GrassmannianContext& ctx,
                 std::ostream& out) {
  const Partition mu = parse_partition(mu_text);
  const Partition nu = parse_partition(nu_text);
  const SchubertProduct product = product_via_skew(mu, nu, ctx);
  const Verdict verdict = schubert_mf(mu, nu, ctx);
  if (opt.structured()) {
    out << json{{"k", ctx.k},
                {"l", ctx.l},
                {"triviality", to_string(product.triviality)},
                {"terms", terms_json(product.terms)},
                {"verdict", to_json(verdict)}}
               .dump()
        << '\n';
    return 0;
  }
  out << "Gr(" << ctx.l << ", C^" << ctx.n() << "), triviality "
      << to_string(product.triviality) << '\n';
  print_terms(out, product.terms);
  print_verdict(out, "classification", verdict);
  return 0;
}

int cmd_verify(const Options& opt, int width, int height, int max_cells,
               std::ostream& out) {
  const VerifyReport report = verify_sweep(width, height, max_cells);
  auto answer = [](bool mf) { return mf ? "free" : "multiple"; };
  if (opt.structured()) {
    json disagreements = json::array();
    for (const auto& d : report.disagreements) {
      disagreements.push_back(
          {{"outer", to_json(d.diagram.outer())},
           {"inner", to_json(d.diagram.inner())},
           {"decision_tree", d.answers.tree},
           {"lattice_paths", d.answers.paths},
           {"brute_force",
            d.answers.brute_force ? json(*d.answers.brute_force) : json()}});
    }
    out << json{{"space", report.space_description},
                {"instances_checked", report.instances_checked},
                {"brute_force_checked", report.brute_force_checked},
                {"disagreements", disagreements},
                {"wall_time_seconds", report.wall_time.count()}}
               .dump()
        << '\n';
  } else {
    out << "space: " << report.space_description << '\n'
        << "instances checked: " << report.instances_checked << '\n'
        << "brute force checked: " << report.brute_force_checked << '\n'
        << "disagreements: " << report.disagreements.size() << '\n';
    for (const auto& d : report.disagreements) {
      out << "  " << to_string(d.diagram)
          << " tree=" << answer(d.answers.tree)
          << " paths=" << answer(d.answers.paths) << " brute="
          << (d.answers.brute_force ? answer(*d.answers.brute_force) : "-")
          << '\n';
    }
    out << "wall time: " << report.wall_time.count() << " s\n";
  }
  return report.certified() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Littlewood-Richardson coefficients, skew characters and "
               "Schubert products"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string lr_outer, lr_inner, lr_content;
  auto* lrcoef = app.add_subcommand("lrcoef", "Print c(outer; inner, content)");
  lrcoef->add_option("outer", lr_outer)->required();
  lrcoef->add_option("inner", lr_inner)->required();
  lrcoef->add_option("content", lr_content)->required();

  std::string decompose_text;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Expand a skew character");
  decompose_cmd->add_option("diagram", decompose_text, "outer/inner")
      ->required();

  std::string classify_text;
  bool oracle = false;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Decide multiplicity-freeness of a skew character");
  classify_cmd->add_option("diagram", classify_text, "outer/inner")
      ->required();
  classify_cmd->add_flag("--oracle", oracle,
                         "Also run the brute-force tableau search");

  std::string mu_text, nu_text, grassmannian;
  std::optional<int> big_n, small_l;
  auto* schubert_cmd =
      app.add_subcommand("schubert", "Multiply two Schubert classes");
  schubert_cmd->add_option("mu", mu_text)->required();
  schubert_cmd->add_option("nu", nu_text)->required();
  auto* grass_opt =
      schubert_cmd->add_option("--grassmannian", grassmannian, "k,l");
  auto* n_opt = schubert_cmd->add_option("--n", big_n, "ambient dimension");
  auto* l_opt = schubert_cmd->add_option("--l", small_l, "subspace dimension");
  n_opt->needs(l_opt);
  l_opt->needs(n_opt);
  grass_opt->excludes(n_opt);
  n_opt->excludes(grass_opt);

  int width = 0, height = 0, max_cells = kDefaultMaxCells;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Sweep a box comparing both closed forms with brute force");
  verify_cmd->add_option("--max-width", width)->required()->check(
      CLI::PositiveNumber);
  verify_cmd->add_option("--max-height", height)->required()->check(
      CLI::PositiveNumber);
  verify_cmd->add_option("--max-cells", max_cells)->check(
      CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*lrcoef) return cmd_lrcoef(opt, lr_outer, lr_inner, lr_content, out);
    if (*decompose_cmd) return cmd_decompose(opt, decompose_text, out);
    if (*classify_cmd) return cmd_classify(opt, classify_text, oracle, out);
    if (*schubert_cmd) {
      GrassmannianContext ctx;
      if (!grassmannian.empty()) {
        ctx = parse_context(grassmannian);
      } else if (big_n && small_l) {
        ctx = {*big_n - *small_l, *small_l};
        if (ctx.k < 1 || ctx.l < 1) {
          err << "error: need 0 < L < N\n";
          return 2;
        }
      } else {
        err << "error: schubert needs --grassmannian k,l or --n N --l L\n";
        return 2;
      }
      return cmd_schubert(opt, mu_text, nu_text, ctx, out);
    }
    if (*verify_cmd) return cmd_verify(opt, width, height, max_cells, out);
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
    return 2;
  } catch (const NotWeaklyDecreasing& e) {
    err << "NotWeaklyDecreasing: " << e.what() << '\n';
    return 2;
  } catch (const IndexOutOfRectangle& e) {
    err << "IndexOutOfRectangle: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace skewchar
