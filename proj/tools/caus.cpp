#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "caus/causal_set.hpp"
#include "caus/dsl.hpp"
#include "caus/error.hpp"
#include "caus/io.hpp"
#include "caus/suite.hpp"

namespace {

using namespace caus;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Options {
  std::string backend = "classical";
  std::uint64_t seed = 42;
  std::string check;
  std::string format = "human";
  bool no_timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
}

struct Loaded {
  std::string text;
  CausalSet set;
};

// An expression, or @FILE holding an expression or a CausalSet dump.
Loaded load_type(const std::string& arg, Backend backend) {
  if (arg.empty() || arg.front() != '@') {
    const Expr e = parse(arg);
    return {render(e), eval(e, backend)};
  }
  const std::string path = arg.substr(1);
  const std::string body = read_file(path);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == '{') {
    CausalSet c = causal_set_from_json(Json::parse(body));
    if (c.backend() != backend)
      throw BackendError("'" + path + "' holds a " + std::string(backend_name(c.backend())) + " type");
    return {arg, std::move(c)};
  }
  const Expr e = parse(body);
  return {render(e), eval(e, backend)};
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_stats(const Loaded& t) {
  const CausalSet& c = t.set;
  std::cout << "expr:        " << t.text << "\n"
            << "backend:     " << backend_name(c.backend()) << "\n"
            << "object:      " << c.object().describe() << "\n"
            << "ambient:     " << c.ambient() << "\n"
            << "affine_dim:  " << c.body().dim() << "\n"
            << "flat:        " << yes_no(is_flat(c)) << "\n"
            << "first_order: " << yes_no(is_first_order(c)) << "\n";
}

int print_reports(const std::vector<CheckReport>& reports, const Options& opt) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (opt.format == "json") {
    Json arr = Json::array();
    for (auto r : reports) {
      if (opt.no_timing) r.elapsed_ms = 0;
      arr.push_back(to_json(r));
    }
    std::cout << Json{{"seed", opt.seed}, {"passed", ok}, {"reports", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.check << "  instances=" << r.instances
                << "  failures=" << r.failures.size();
      if (!opt.no_timing) std::cout << "  " << static_cast<long>(r.elapsed_ms) << " ms";
      std::cout << "\n";
      for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) {
        const auto& f = r.failures[i];
        std::cout << "  inputs:   " << f.inputs << "\n  expected: " << f.expected << "\n  got:      " << f.got << "\n";
      }
    }
  }
  return ok ? kTrue : kFalse;
}

int run(int argc, char** argv) {
  CLI::App app{"Causal type workbench over classical and quantum base models", "caus"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--backend", opt.backend, "classical, classical-affine or quantum")
      ->check(CLI::IsMember({"classical", "classical-affine", "quantum"}));
  app.add_option("--format", opt.format, "human or json")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--seed", opt.seed, "seed for the suite");
  app.add_option("--check", opt.check, "run a single suite check");
  app.add_flag("--no-timing", opt.no_timing, "report elapsed_ms as 0 so reports are reproducible");

  std::string expr, expr2, path, mode;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a type and print its statistics");
  eval_cmd->add_option("EXPR", expr, "type expression or @FILE")->required();

  auto* member_cmd = app.add_subcommand("member", "test whether a state belongs to a type");
  member_cmd->add_option("EXPR", expr)->required();
  member_cmd->add_option("STATE", path, "JSON file with \"vector\" or \"blocks\"")->required();

  std::string mor_path;
  auto* causal_cmd = app.add_subcommand("causal", "test whether a process maps one type into another");
  causal_cmd->add_option("MORPHISM", mor_path, "JSON morphism file")->required();
  causal_cmd->add_option("SRC", expr)->required();
  causal_cmd->add_option("DST", expr2)->required();

  auto* compare_cmd = app.add_subcommand("compare", "compare two types on the same object");
  compare_cmd->add_option("MODE", mode, "equal or subset")->required()->check(CLI::IsMember({"equal", "subset"}));
  compare_cmd->add_option("EXPR1", expr)->required();
  compare_cmd->add_option("EXPR2", expr2)->required();

  auto* axioms_cmd = app.add_subcommand("axioms", "re-verify the base model axioms");
  auto* suite_cmd = app.add_subcommand("suite", "run the property checks");
  suite_cmd->add_option("--seed", opt.seed, "seed");
  suite_cmd->add_option("--check", opt.check, "single check name");
  suite_cmd->add_flag("--no-timing", opt.no_timing, "report elapsed_ms as 0");
  suite_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"human", "json"}));

  auto* export_cmd = app.add_subcommand("export", "write a type as JSON");
  export_cmd->add_option("EXPR", expr)->required();
  export_cmd->add_option("OUT", path, "output file, - for stdout")->required();

  for (auto* sub : {eval_cmd, member_cmd, causal_cmd, compare_cmd, axioms_cmd, export_cmd}) {
    sub->add_option("--backend", opt.backend)->check(CLI::IsMember({"classical", "classical-affine", "quantum"}));
    sub->add_option("--format", opt.format)->check(CLI::IsMember({"human", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const Backend backend = parse_backend(opt.backend);
  const bool json = opt.format == "json";

  if (*eval_cmd) {
    const Loaded t = load_type(expr, backend);
    if (json) {
      Json out = to_json(t.set);
      out["expr"] = t.text;
      std::cout << out.dump(2) << "\n";
    } else {
      print_stats(t);
    }
    return kTrue;
  }

  if (*member_cmd) {
    const Loaded t = load_type(expr, backend);
    const RationalVector x = state_from_json(read_json(path), t.set.object());
    const bool in_cone = cone_member(t.set.object(), x);
    std::optional<std::size_t> violated;
    Constraints k;
    if (!t.set.is_empty()) {
      k = constraints_of(t.set.body());
      violated = violated_constraint(k, x);
    }
    const bool ok = in_cone && !t.set.is_empty() && !violated;
    if (json) {
      Json out{{"member", ok}, {"in_cone", in_cone}};
      if (t.set.is_empty()) out["reason"] = "empty type";
      if (violated) out["violated"] = Json{{"row", to_json(k.equations.row(*violated))}, {"rhs", to_json(k.rhs[*violated])}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << yes_no(ok) << "\n";
      if (!in_cone) std::cout << "state lies outside the positivity cone\n";
      if (t.set.is_empty()) std::cout << "the type has no states\n";
      if (violated) {
        std::cout << "violated constraint: " << to_string(k.equations.row(*violated)) << " . x = " << k.rhs[*violated]
                  << "\n";
      }
    }
    return ok ? kTrue : kFalse;
  }

  if (*causal_cmd) {
    const Loaded src = load_type(expr, backend);
    const Loaded dst = load_type(expr2, backend);
    Morphism f = morphism_from_json(read_json(mor_path));
    if (f.src.backend() != backend) throw BackendError("morphism backend differs from --backend");
    if (f.src.ambient_dim() != src.set.ambient() || f.dst.ambient_dim() != dst.set.ambient())
      throw DimensionError("morphism is " + std::to_string(f.src.ambient_dim()) + " -> " +
                           std::to_string(f.dst.ambient_dim()) + " but the types have ambient " +
                           std::to_string(src.set.ambient()) + " and " + std::to_string(dst.set.ambient()));
    f.src = src.set.object();
    f.dst = dst.set.object();
    const CausalVerdict v = check_causal(f, src.set, dst.set);
    if (json) {
      std::cout << Json{{"causal", v == CausalVerdict::Causal}, {"verdict", verdict_name(v)}}.dump(2) << "\n";
    } else {
      std::cout << verdict_name(v) << "\n";
    }
    return v == CausalVerdict::Causal ? kTrue : kFalse;
  }

  if (*compare_cmd) {
    const Loaded a = load_type(expr, backend);
    const Loaded b = load_type(expr2, backend);
    const bool ok = mode == "equal" ? set_equal(a.set, b.set) : set_subset(a.set, b.set);
    if (json) {
      std::cout << Json{{"mode", mode}, {"result", ok}}.dump(2) << "\n";
    } else {
      std::cout << yes_no(ok) << "\n";
    }
    return ok ? kTrue : kFalse;
  }

  if (*axioms_cmd) {
    CheckParams p;
    p.seed = opt.seed;
    return print_reports({run_check("apc_axioms", p)}, opt);
  }

  if (*suite_cmd) {
    if (opt.check.empty()) return print_reports(run_all(opt.seed), opt);
    CheckParams p;
    p.seed = opt.seed;
    return print_reports({run_check(opt.check, p)}, opt);
  }

  if (*export_cmd) {
    const Loaded t = load_type(expr, backend);
    Json out = to_json(t.set);
    out["expr"] = t.text;
    if (path == "-") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::ofstream file(path);
      if (!file) throw Error("cannot write '" + path + "'");
      file << out.dump(2) << "\n";
      if (!json) std::cout << "wrote " << path << "\n";
    }
    return kTrue;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const caus::ParseError& e) {
    std::cerr << "caus: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "caus: " << e.what() << "\n";
  }
  return kUsage;
}
