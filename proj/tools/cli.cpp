#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "linkednets/analysis.hpp"
#include "linkednets/errors.hpp"
#include "linkednets/gen.hpp"
#include "linkednets/serialize.hpp"

namespace linkednets::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InvalidInput("cannot read " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

Json vertices_json(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vertex_to_json(v));
  return out;
}

Vertex vertex_arg(const std::string& text, int n) {
  IntTuple t = parse_int_tuple(text);
  if (t.size() != static_cast<std::size_t>(n) + 1) {
    throw InvalidInput("vertex '" + text + "' needs " + std::to_string(n + 1) + " entries");
  }
  return Vertex::from_twists(std::move(t));
}

struct Options {
  bool pretty = false;

  std::string file = "-";

  int n = 0;
  std::vector<std::string> set;

  std::string at;
  std::string at_multidegree;
  bool generators = false;
  bool window = false;
  bool large_n = false;

  std::string out_path;
  bool fallback = false;

  std::vector<std::string> seeds;
  Int radius = -1;
  std::uint64_t rng = 0;
  bool conjugate = false;
  std::string spec_path;

  std::string example;
};

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  NetPresentation p = parse_net(read_source(o.file, in));
  auto reports = axiom_reports(p);
  bool passed = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  Json rs = Json::array();
  for (const auto& r : reports) rs.push_back(report_to_json(r));
  Json result{{"command", "validate"}, {"passed", passed}, {"reports", std::move(rs)}};
  if (reports.front().passed) {
    auto adequacy = window_adequacy(p);
    result["window"] = Json{{"adequate", adequacy.adequate}, {"missing", vertices_json(adequacy.missing)}};
  }
  out << dump_json(result, o.pretty);
  return passed ? kOk : kFails;
}

int cmd_hull(const Options& o, std::ostream& out) {
  if (o.set.empty()) throw InvalidInput("hull needs at least one vertex");
  std::vector<Vertex> h;
  for (const auto& s : o.set) h.push_back(vertex_arg(s, o.n));
  out << dump_json(Json{{"command", "hull"}, {"n", o.n}, {"hull", vertices_json(hull(h))}}, o.pretty);
  return kOk;
}

int cmd_intersection(const Options& o, std::istream& in, std::ostream& out) {
  NetPresentation p = parse_net(read_source(o.file, in));
  IntersectionOptions ix{.allow_large_n = o.large_n};
  Json result{{"command", "intersection"}};
  std::optional<ViolationCertificate> violation;
  if (!o.at.empty() || !o.at_multidegree.empty()) {
    Vertex v;
    if (!o.at.empty()) {
      v = vertex_arg(o.at, p.n());
    } else {
      if (!p.frame()) throw InvalidInput("--at-multidegree needs a net file with a frame");
      v = to_twists(*p.frame(), parse_int_tuple(o.at_multidegree));
    }
    KernelProfile prof = kernel_profile(p, v);
    violation = intersection_property_at(prof, p.n(), ix);
    result["mode"] = "vertex";
    result["vertex"] = vertex_to_json(v);
    result["profile"] = profile_to_json(prof);
  } else {
    auto mode = o.generators ? IntersectionMode::GeneratorsOnly : IntersectionMode::WholeWindow;
    auto report = check_intersection_property(p, mode, ix);
    violation = report.violation;
    result["mode"] = o.generators ? "generators" : "window";
    result["checked"] = vertices_json(report.checked);
    result["skipped"] = vertices_json(report.skipped);
  }
  result["passed"] = !violation;
  if (violation) result["certificate"] = certificate_to_json(*violation);
  out << dump_json(result, o.pretty);
  return violation ? kFails : kOk;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  NetPresentation p = parse_net(read_source(o.file, in));
  DecomposeOptions opts{.whole_window_fallback = o.fallback, .intersection = {.allow_large_n = o.large_n}};
  DecompositionResult d;
  try {
    d = decompose(p, opts);
  } catch (const DecompositionPreconditions& e) {
    Json rs = Json::array();
    for (const auto& r : e.reports()) rs.push_back(report_to_json(r));
    out << dump_json(Json{{"command", "decompose"}, {"status", "precondition_failed"}, {"reports", rs}}, o.pretty);
    return kFails;
  } catch (const InconsistentPresentation& e) {
    out << dump_json(Json{{"command", "decompose"}, {"status", "inconsistent"}, {"detail", e.what()}}, o.pretty);
    return kFails;
  }
  if (d.violation) {
    out << dump_json(Json{{"command", "decompose"}, {"status", "violation"},
                          {"certificate", certificate_to_json(*d.violation)}},
                     o.pretty);
    return kFails;
  }
  if (!d.window_adequate) err << "warning: window is smaller than the required window; verdicts are window-relative\n";
  Json summands = Json::array();
  for (const auto& s : d.summands) summands.push_back(summand_to_json(s));
  out << dump_json(Json{{"command", "decompose"}, {"status", "semisimple"}, {"summand_count", d.summands.size()},
                        {"summands", summands}, {"window_adequate", d.window_adequate}},
                   o.pretty);
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw InvalidInput("cannot write " + o.out_path);
    file << dump_json(decomposition_to_json(p, d), o.pretty);
  }
  return kOk;
}

int cmd_gen(const Options& o, std::istream& in, std::ostream& out) {
  GenSpec spec;
  if (!o.spec_path.empty()) {
    spec = gen_spec_from_json(parse_json(read_source(o.spec_path, in)));
  } else {
    if (o.n < 1) throw InvalidInput("gen needs --n or --spec");
    spec.n = o.n;
    spec.window_radius = o.radius < 0 ? o.n + 1 : o.radius;
    for (const auto& s : o.seeds) spec.seeds.push_back(vertex_arg(s, o.n));
    spec.seed_rng = o.rng;
    spec.conjugate = o.conjugate;
  }
  out << dump_net(random_semisimple_net(spec).first, o.pretty);
  return kOk;
}

int cmd_example(const Options& o, std::ostream& out) {
  if (o.example != "nonsemisimple") throw InvalidInput("unknown example '" + o.example + "'");
  out << dump_net(fixture_nonsemisimple(), o.pretty);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linked nets: verification, intersection property and decomposition"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Indented output");

  auto* validate = app.add_subcommand("validate", "Check structure and the linked-net axioms");
  validate->add_option("file", o.file, "Net file, - for stdin")->required();

  auto* hull_cmd = app.add_subcommand("hull", "Hull of a set of vertices");
  hull_cmd->add_option("--n", o.n, "Quiver parameter")->required()->check(CLI::Range(1, kMaxQuiverN));
  hull_cmd->add_option("--set", o.set, "Vertices as comma-separated twists")->required();

  auto* inter = app.add_subcommand("intersection", "Check the intersection property");
  inter->add_option("file", o.file, "Net file, - for stdin")->required();
  auto* at = inter->add_option("--at", o.at, "Vertex as comma-separated twists");
  auto* at_md = inter->add_option("--at-multidegree", o.at_multidegree, "Vertex as a multidegree (needs a frame)");
  auto* gens = inter->add_flag("--generators", o.generators, "Check at the generators only");
  auto* win = inter->add_flag("--window", o.window, "Check at every window vertex");
  at->excludes(at_md)->excludes(gens)->excludes(win);
  at_md->excludes(gens)->excludes(win);
  gens->excludes(win);
  inter->add_flag("--allow-large-n", o.large_n, "Permit n > 3");

  auto* dec = app.add_subcommand("decompose", "Split into simple summands or report a violation");
  dec->add_option("file", o.file, "Net file, - for stdin")->required();
  dec->add_option("--out", o.out_path, "Write the net file with its summands here");
  dec->add_flag("--whole-window-fallback", o.fallback, "Search the whole window for primitive vertices");
  dec->add_flag("--allow-large-n", o.large_n, "Permit n > 3");

  auto* gen = app.add_subcommand("gen", "Generate a random semisimple net");
  gen->add_option("--n", o.n, "Quiver parameter")->check(CLI::Range(1, kMaxQuiverN));
  gen->add_option("--seeds", o.seeds, "Seed vertices, one per simple summand");
  gen->add_option("--radius", o.radius, "Window radius (default n + 1)");
  gen->add_option("--rng", o.rng, "Random seed");
  gen->add_flag("--conjugate", o.conjugate, "Conjugate by random invertible matrices");
  gen->add_option("--spec", o.spec_path, "Generator spec file")->excludes("--n")->excludes("--seeds");

  auto* example = app.add_subcommand("example", "Emit a bundled net");
  example->add_option("name", o.example, "nonsemisimple")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(o, in, out);
    if (*hull_cmd) return cmd_hull(o, out);
    if (*inter) return cmd_intersection(o, in, out);
    if (*dec) return cmd_decompose(o, in, out, err);
    if (*gen) return cmd_gen(o, in, out);
    if (*example) return cmd_example(o, out);
  } catch (const WindowInsufficient& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& m : e.missing()) err << "  missing: " << m << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace linkednets::cli
