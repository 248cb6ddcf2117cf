#include "vgit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "vgit/report.hpp"
#include "vgit/svg.hpp"

namespace vgit {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitSizeCap = 4;

struct CliState {
  std::string file;
  std::string theta_name;
  std::string kappa_name;
  std::string highlight_name;
  std::string output_path;
  bool plain = false;
  int cap_override = 0;          // 0 = use the file's option
  std::uint64_t seed = 0;
  bool seed_given = false;
  int random_supplement = -1;    // -1 = default (16 when seeded, else 0)
};

ProblemFile load_problem(const std::string& path, std::istream& in) {
  if (path == "-") return parse_problem(in);
  std::ifstream f(path);
  if (!f) throw Error("cannot open problem file \"" + path + "\"");
  return parse_problem(f);
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write output file \"" + path + "\"");
  f << text;
}

void emit(const Json& envelope, bool plain, std::ostream& out) {
  if (plain)
    out << plain_text(envelope);
  else
    out << canonical_dump(envelope);
}

int dispatch(const std::string& command, const CliState& st,
             std::istream& in, std::ostream& out) {
  ProblemFile pf = load_problem(st.file, in);
  const int cap = st.cap_override > 0 ? st.cap_override : pf.options.cap;
  const ChargeMatrix& charge = pf.charge;

  Json args = Json::object();
  Json result = Json::object();
  int code = kExitOk;

  if (command == "fan") {
    GitFan fan = git_fan(charge, cap);
    result = fan_json(fan);
  } else if (command == "ss") {
    const Character& theta = pf.character(st.theta_name);
    args["theta"] = st.theta_name;
    result["theta"] = vec_json(theta);
    result["effective"] = is_effective(charge, theta);
    result["zero_character"] = is_zero(theta);
    result["semistable"] = family_json(semistable_supports(charge, theta, cap));
  } else if (command == "chamber") {
    const Character& theta = pf.character(st.theta_name);
    args["theta"] = st.theta_name;
    result["theta"] = vec_json(theta);
    result["zero_character"] = is_zero(theta);
    result["c_cone"] = cone_json(c_cone(charge, theta, cap));
  } else if (command == "equiv") {
    const Character& theta = pf.character(st.theta_name);
    const Character& prime = pf.character(st.kappa_name);
    args["theta"] = st.theta_name;
    args["theta_prime"] = st.kappa_name;
    bool eq = git_equivalent(charge, theta, prime, cap);
    result["theta"] = vec_json(theta);
    result["theta_prime"] = vec_json(prime);
    result["equivalent"] = eq;
    code = eq ? kExitOk : kExitFalse;
  } else if (command == "stack") {
    const Character& theta = pf.character(st.theta_name);
    args["theta"] = st.theta_name;
    result["theta"] = vec_json(theta);
    result["census"] = census_json(stack_census(charge, theta, cap));
  } else if (command == "ne") {
    const Character& theta = pf.character(st.theta_name);
    args["theta"] = st.theta_name;
    result["theta"] = vec_json(theta);
    result["ne_cone"] = cone_json(ne_cone(charge, theta, cap));
  } else if (command == "witness") {
    const Character& theta = pf.character(st.theta_name);
    const Character& kappa = pf.character(st.kappa_name);
    args["theta"] = st.theta_name;
    args["kappa"] = st.kappa_name;
    result["theta"] = vec_json(theta);
    result["kappa"] = vec_json(kappa);
    auto w = witness_negative(charge, theta, kappa, cap);
    result["found"] = w.has_value();
    if (w) result["witness"] = witness_json(*w, kappa);
    code = w ? kExitOk : kExitFalse;
  } else if (command == "verify") {
    const Character& theta = pf.character(st.theta_name);
    args["theta"] = st.theta_name;
    VerifyOptions opts;
    opts.cap = cap;
    opts.seed = st.seed_given ? st.seed : pf.options.seed;
    opts.random_supplement =
        st.random_supplement >= 0 ? st.random_supplement
                                  : (st.seed_given ? 16 : 0);
    for (const auto& [name, c] : pf.characters) opts.extra_chars.push_back(c);
    VerificationReport rep = verify_kleiman(charge, theta, opts);
    result = verify_json(rep);
    code = rep.pass() ? kExitOk : kExitVerifyFail;
  } else if (command == "lift") {
    // Emits a problem file for the lifted affine action, ready to chain
    // into the other subcommands. Named characters chi become (chi, 1),
    // the linearizations of O(1).
    ChargeMatrix lifted = lift_projective(charge.W);
    ProblemFile out_pf{kProblemFormatVersion, lifted, {}, pf.options};
    for (const auto& [name, c] : pf.characters) {
      IntVec v(c.size() + 1);
      v.head(c.size()) = c;
      v[c.size()] = 1;
      out_pf.characters.emplace_back(name, std::move(v));
    }
    write_output(st.output_path, serialize_problem(out_pf), out);
    return kExitOk;
  } else if (command == "render") {
    GitFan fan = git_fan(charge, cap);
    std::optional<Character> highlight;
    if (!st.highlight_name.empty())
      highlight = pf.character(st.highlight_name);
    if (!st.highlight_name.empty()) args["highlight"] = st.highlight_name;
    write_output(st.output_path, render_fan_svg(fan, highlight), out);
    return kExitOk;
  } else {
    throw Error("unknown command " + command);
  }

  emit(report_envelope(command, pf, std::move(args), std::move(result), code),
       st.plain, out);
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "vgit: exact variation-of-GIT computations for linear torus actions "
      "on affine space"};
  app.require_subcommand(1);
  CliState st;

  auto add_common = [&st](CLI::App* sub, bool needs_theta, bool needs_kappa,
                          const char* kappa_name = "kappa") {
    sub->add_option("file", st.file,
                    "problem file path, or - for standard input")
        ->required();
    if (needs_theta)
      sub->add_option("theta", st.theta_name, "named character")->required();
    if (needs_kappa)
      sub->add_option(kappa_name, st.kappa_name, "named character")
          ->required();
    sub->add_flag("--plain", st.plain, "human-readable output");
    sub->add_option("--cap", st.cap_override,
                    "override the subset enumeration cap")
        ->check(CLI::Range(1, 31));
  };

  add_common(app.add_subcommand("fan", "chamber fan of the effective cone"),
             false, false);
  add_common(app.add_subcommand("ss", "minimal semistable supports"), true,
             false);
  add_common(app.add_subcommand(
                 "chamber", "GIT class cone C_V(theta) in both descriptions"),
             true, false);
  add_common(app.add_subcommand("equiv",
                                "GIT equivalence of two characters "
                                "(exit 0 yes, 1 no)"),
             true, true, "theta_prime");
  add_common(app.add_subcommand("stack", "stabilizer census of the quotient "
                                         "stack"),
             true, false);
  add_common(app.add_subcommand("ne", "quasimap degree cone NE(theta)"), true,
             false);
  add_common(app.add_subcommand("witness",
                                "negative-degree quasimap against kappa "
                                "(exit 0 found, 1 none)"),
             true, true);
  CLI::App* verify = app.add_subcommand(
      "verify", "machine check of the degree-pairing duality at theta "
                "(exit 0 pass, 3 fail)");
  add_common(verify, true, false);
  verify->add_option("--seed", st.seed, "seed for the random supplement")
      ->each([&st](const std::string&) { st.seed_given = true; });
  verify->add_option("--random", st.random_supplement,
                     "number of extra seeded test characters");
  CLI::App* lift = app.add_subcommand(
      "lift", "lift a projective-space action to the affine cone; emits the "
              "lifted problem file");
  add_common(lift, false, false);
  lift->add_option("-o,--output", st.output_path, "output path");
  CLI::App* render =
      app.add_subcommand("render", "SVG picture of a rank-2 fan");
  add_common(render, false, false);
  render->add_option("-o,--output", st.output_path, "output path");
  render->add_option("--highlight", st.highlight_name,
                     "named character to mark");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), st, std::cin,
                    out);
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace vgit
