// rgl: batch front end for the verification suites, regrading tables,
// the two-step counterexample and direct-limit convergence reports.
//
// Exit codes: 0 all checks pass, 1 a property failed, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgl/rgl.hpp"

namespace {

using namespace rgl;
namespace rj = rgl::json;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_property = 1;
constexpr int exit_input = 2;

enum class Format { csv, json };

struct Output {
  Format format = Format::csv;
  std::string path;  // empty: stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write " + path);
    out << text;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) { return rj::parse_text(read_file(path), path); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

std::string decimal(const Rank& r) {
  if (!r.is_finite()) return r.str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
  return buf;
}

json caps_json() {
  return {{"max_boolean_ground", caps::max_boolean_ground},
          {"max_partition_ground", caps::max_partition_ground},
          {"max_subspace_dimension", caps::max_subspace_dimension},
          {"max_exhaustive_elements", caps::max_exhaustive_elements}};
}

/// Config as "# key=value" lines heading a CSV report.
std::string csv_config(const json& config) {
  std::string out;
  for (const auto& [k, v] : config.items()) out += "# " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  int samples = 1000;
  std::uint64_t seed = 7;
  std::string density_file;
  std::string value;
};

int cmd_verify(const VerifyArgs& a, const Output& out) {
  verify::Config cfg;
  cfg.seed = a.seed;
  if (a.samples < 1) throw parse_error("--samples must be positive");
  cfg.samples = a.samples;
  json density_json = rj::encode(cfg.density);
  if (!a.density_file.empty()) {
    cfg.density = rj::decode_density(load_json(a.density_file));
    density_json = rj::encode(cfg.density);
    cfg.value = cfg.density.total() / 2;
  }
  if (!a.value.empty()) cfg.value = parse_rational(a.value);
  if (!(cfg.value > 0) || !(cfg.value < cfg.density.total()))
    throw invalid_cutset("level " + to_string(cfg.value) + " outside (0, " + to_string(cfg.density.total()) + ")");

  const auto rep = verify::run(a.suite, cfg);
  json config = {{"command", "verify"},       {"suite", a.suite},  {"seed", cfg.seed},      {"samples", cfg.samples},
                 {"density", density_json},   {"value", to_string(cfg.value)}, {"caps", caps_json()}};
  if (out.format == Format::json) {
    json suites = json::array();
    for (const auto& s : rep.suites) {
      json facts = json::object();
      for (const auto& [k, v] : s.facts) facts[k] = v;
      suites.push_back({{"suite", s.name},
                        {"description", s.description},
                        {"pass", s.pass},
                        {"checked", s.checked},
                        {"witness", s.witness ? json(*s.witness) : json(nullptr)},
                        {"facts", facts}});
    }
    out.write(json{{"config", config}, {"suites", suites}, {"pass", rep.pass()}}.dump(2) + "\n");
  } else {
    std::string text = csv_config(config) + csv_row({"suite", "status", "checked", "description", "witness", "facts"});
    for (const auto& s : rep.suites) {
      std::string facts;
      for (const auto& [k, v] : s.facts) facts += (facts.empty() ? "" : "; ") + k + "=" + v;
      text += csv_row({s.name, s.pass ? "pass" : "FAIL", std::to_string(s.checked), s.description, s.witness.value_or(""), facts});
    }
    out.write(text);
  }
  return rep.pass() ? exit_ok : exit_property;
}

// --------------------------------------------------------------- regrade

struct RegradeArgs {
  std::string input;
  std::string grid;
  bool decimals = true;
};

template <class Regrader, class Encode>
int emit_targets(const Regrader& r, const std::vector<typename Regrader::element_type>& targets, Encode&& encode,
                 json config, const RegradeArgs& a, const Output& out) {
  const auto& l = r.lattice();
  if (out.format == Format::json) {
    json rows = json::array();
    for (const auto& t : targets) {
      const auto p = r.project(t);
      rows.push_back({{"target", encode(t)},
                      {"rho", Rank(l.rank(t)).str()},
                      {"alpha", encode(p.alpha)},
                      {"lambda_star", p.lambda_star.str()},
                      {"side", to_string(p.side)},
                      {"sigma", r.sigma(t).str()}});
    }
    out.write(json{{"config", config}, {"rows", rows}}.dump(2) + "\n");
    return exit_ok;
  }
  std::vector<std::string> header = {"target", "rho", "alpha", "lambda_star", "side", "sigma"};
  if (a.decimals) header.push_back("sigma_decimal");
  std::string text = csv_config(config) + csv_row(header);
  for (const auto& t : targets) {
    const auto p = r.project(t);
    const Rank s = r.sigma(t);
    std::vector<std::string> row = {l.format(t),        Rank(l.rank(t)).str(), l.format(p.alpha),
                                    p.lambda_star.str(), to_string(p.side),     s.str()};
    if (a.decimals) row.push_back(decimal(s));
    text += csv_row(row);
  }
  out.write(text);
  return exit_ok;
}

int emit_sweep(const IntervalRegrader& r, const ChainSpec& chain, const Rational& step, json config,
               const RegradeArgs& a, const Output& out) {
  const auto rows = regrade_table(r, chain, step);
  const bool ok = sigma_strictly_increasing(rows) && rows.front().sigma == r.sigma_bottom() &&
                  rows.back().sigma == r.sigma_top();
  config["max_sigma_gap"] = to_string(max_sigma_gap(rows));
  config["strictly_increasing"] = sigma_strictly_increasing(rows);
  if (out.format == Format::json) {
    json js = json::array();
    for (const auto& row : rows)
      js.push_back({{"rho", to_string(row.rho)},
                    {"lambda", row.lambda.str()},
                    {"side", to_string(row.side)},
                    {"element", rj::encode(row.element)},
                    {"alpha", rj::encode(row.alpha)},
                    {"sigma", row.sigma.str()}});
    out.write(json{{"config", config}, {"rows", js}, {"pass", ok}}.dump(2) + "\n");
  } else {
    std::vector<std::string> header = {"rho", "lambda", "side", "element", "alpha", "sigma"};
    if (a.decimals) header.push_back("sigma_decimal");
    std::string text = csv_config(config) + csv_row(header);
    for (const auto& row : rows) {
      std::vector<std::string> f = {to_string(row.rho), row.lambda.str(), to_string(row.side),
                                    format(row.element), format(row.alpha), row.sigma.str()};
      if (a.decimals) f.push_back(decimal(row.sigma));
      text += csv_row(f);
    }
    out.write(text);
  }
  return ok ? exit_ok : exit_property;
}

template <class L, class Decode>
int regrade_finite(const L& l, const json& in, Decode&& decode, json config, const RegradeArgs& a, const Output& out) {
  using E = element_t<L>;
  const json& cut = rj::detail::field(in, "cutset");
  ExplicitAntichain<E> anti;
  if (rj::detail::field(cut, "type") == "level") {
    if (rj::detail::field(cut, "grading") != "rho") throw parse_error("finite level cutsets take the grading \"rho\"");
    anti.elements = level_set(l, Rank(rj::decode_rational(rj::detail::field(cut, "value"))));
  } else {
    anti = rj::decode_explicit_cutset<E>(cut, decode);
  }
  const FiniteRegrader<L> r(l, anti);
  std::vector<E> targets;
  if (in.contains("targets"))
    for (const auto& t : rj::detail::array(in["targets"], "targets")) targets.push_back(decode(t));
  else
    targets = l.elements();
  return emit_targets(r, targets, [](const E& e) { return rj::encode(e); }, std::move(config), a, out);
}

int cmd_regrade(const RegradeArgs& a, const Output& out) {
  const json in = load_json(a.input);
  const auto spec = rj::decode_lattice_spec(rj::detail::field(in, "lattice"));
  json config = {{"command", "regrade"}, {"input", a.input}, {"lattice", rj::encode(spec)}, {"caps", caps_json()}};
  switch (spec.kind) {
    case rj::LatticeSpec::Kind::interval: {
      const auto cut = rj::decode_level_cutset(rj::detail::field(in, "cutset"), spec.length);
      const IntervalRegrader r(IntervalLattice::bounded(spec.length), cut);
      config["cutset"] = rj::encode(cut);
      if (!a.grid.empty()) {
        const Rational step = parse_rational(a.grid);
        if (!(step > 0)) throw parse_error("--grid must be positive");
        config["grid"] = to_string(step);
        ChainSpec chain = ChainSpec::chief();
        if (in.contains("seed")) {
          chain = ChainSpec::good_chain(r.lattice().normalize(rj::decode_interval_set(in["seed"]).intervals()));
          config["seed"] = rj::encode(*chain.seed);
        }
        return emit_sweep(r, chain, step, std::move(config), a, out);
      }
      std::vector<IntervalSet> targets;
      for (const auto& t : rj::detail::array(rj::detail::field(in, "targets"), "targets"))
        targets.push_back(r.lattice().normalize(rj::decode_interval_set(t).intervals()));
      return emit_targets(r, targets, [](const IntervalSet& u) { return rj::encode(u); }, std::move(config), a, out);
    }
    case rj::LatticeSpec::Kind::boolean:
      return regrade_finite(BooleanLattice(spec.n), in, [&](const json& j) { return rj::decode_bit_subset(j, spec.n); },
                            std::move(config), a, out);
    case rj::LatticeSpec::Kind::partition:
      return regrade_finite(PartitionLattice(spec.n), in, [&](const json& j) { return rj::decode_partition(j, spec.n); },
                            std::move(config), a, out);
    default:
      return regrade_finite(SubspaceLattice(spec.prime, spec.n), in,
                            [&](const json& j) { return rj::decode_subspace(j, spec.prime, spec.n); }, std::move(config),
                            a, out);
  }
}

// -------------------------------------------------------- counterexample

int cmd_counterexample(bool uniform, const Output& out) {
  const auto r = uniform ? IntervalRegrader(IntervalLattice::bounded(2), {StepDensity::unit(2), 1}) : two_step_regrader();
  const auto rep = counterexample(r);
  std::vector<Rank> want;
  if (uniform) {
    for (const auto& [u, s] : rep.sigma) want.push_back(Rank(lebesgue(u) - 1));
  } else {
    want = {Rank(0), Rank(rational(1, 4)), Rank(rational(1, 2)), Rank(1), Rank(rational(1, 2)), Rank(-1)};
  }
  const Rank want_defect = uniform ? Rank(0) : Rank(rational(-1, 2));
  bool ok = rep.defect == want_defect;
  for (std::size_t i = 0; i < want.size(); ++i) ok = ok && rep.sigma[i].second == want[i];

  json config = {{"command", "counterexample"},
                 {"ambient", "(0,2]"},
                 {"density", rj::encode(r.cutset().grading)},
                 {"value", to_string(r.cutset().value)},
                 {"caps", caps_json()}};
  if (out.format == Format::json) {
    json rows = json::array();
    for (std::size_t i = 0; i < want.size(); ++i)
      rows.push_back({{"element", rj::encode(rep.sigma[i].first)},
                      {"sigma", rep.sigma[i].second.str()},
                      {"expected", want[i].str()}});
    out.write(json{{"config", config},
                   {"sigma", rows},
                   {"defect", rep.defect.str()},
                   {"expected_defect", want_defect.str()},
                   {"pass", ok}}
                  .dump(2) +
              "\n");
  } else {
    std::string text = csv_config(config) + csv_row({"quantity", "value", "expected", "decimal"});
    for (std::size_t i = 0; i < want.size(); ++i)
      text += csv_row({"sigma(" + format(rep.sigma[i].first) + ")", rep.sigma[i].second.str(), want[i].str(),
                       decimal(rep.sigma[i].second)});
    text += csv_row({"defect((0,1],(1,2])", rep.defect.str(), want_defect.str(), decimal(rep.defect)});
    out.write(text);
  }
  return ok ? exit_ok : exit_property;
}

// ----------------------------------------------------------------- limit

int cmd_limit(const std::string& target_file, const std::vector<int>& levels, const Output& out) {
  const IntervalSet target =
      target_file.empty() ? IntervalSet::single(0, rational(1, 3)) : rj::decode_interval_set(load_json(target_file));
  const auto rows = cauchy_approx(target, levels);
  struct Summary {
    std::string check;
    TowerCheck result;
  };
  const std::vector<Summary> summary = {
      {"coherence boolean (2,4,8)", coherence_check(TowerFamily::boolean(), 2, 4, 8)},
      {"coherence subspace F_2 (1,2,4)", coherence_check(TowerFamily::subspace(2), 1, 2, 4)},
      {"isometry boolean 2->8", embedding_check(TowerFamily::boolean(), 2, 8)},
      {"isometry subspace F_2 2->4", embedding_check(TowerFamily::subspace(2), 2, 4)},
  };
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.within_bound();
  for (const auto& s : summary) ok = ok && s.result.pass;

  json lv = json::array();
  for (int n : levels) lv.push_back(n);
  json config = {{"command", "limit"}, {"target", rj::encode(target)}, {"levels", lv}, {"caps", caps_json()}};
  if (out.format == Format::json) {
    json js = json::array();
    for (const auto& r : rows)
      js.push_back({{"level", r.level},
                    {"approximant", rj::encode(r.approximant)},
                    {"distance_to_target", r.to_target.str()},
                    {"distance_to_previous", r.to_previous ? json(r.to_previous->str()) : json(nullptr)},
                    {"bound", r.bound.str()}});
    json checks = json::array();
    for (const auto& s : summary)
      checks.push_back({{"check", s.check}, {"pass", s.result.pass}, {"checked", s.result.checked}});
    out.write(json{{"config", config}, {"rows", js}, {"checks", checks}, {"pass", ok}}.dump(2) + "\n");
  } else {
    std::string text = csv_config(config);
    for (const auto& s : summary)
      text += "# check " + s.check + ": " + (s.result.pass ? "pass" : "FAIL") + " (" + std::to_string(s.result.checked) + ")\n";
    text += csv_row({"level", "distance_to_target", "distance_to_previous", "bound", "approximant", "distance_decimal"});
    for (const auto& r : rows)
      text += csv_row({std::to_string(r.level), r.to_target.str(), r.to_previous ? r.to_previous->str() : "",
                       r.bound.str(), format(r.approximant), decimal(r.to_target)});
    out.write(text);
  }
  return ok ? exit_ok : exit_property;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real-graded lattices: regrading antichain cutsets into level sets"};
  app.require_subcommand(1);

  Output out;
  std::string format = "csv";
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out.path, "Write the report to this file instead of stdout");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  };

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", va.suite, "Suite name or 'all'");
  verify->add_option("--samples", va.samples, "Random instances for the sampled identity suites");
  verify->add_option("--seed", va.seed, "Seed for randomized suites");
  verify->add_option("--density", va.density_file, "Step density JSON used by the regrading suites");
  verify->add_option("--value", va.value, "Cutset level p/q (default: half the density mass)");
  add_output(verify);

  RegradeArgs ra;
  auto* regrade = app.add_subcommand("regrade", "Regrade targets or sweep a chain");
  regrade->add_option("--input", ra.input, "JSON with lattice, cutset and targets")->required();
  regrade->add_option("--grid", ra.grid, "Sweep step p/q along the chief chain (or the good chain of \"seed\")");
  regrade->add_flag("!--no-decimal", ra.decimals, "Omit the decimal display column");
  add_output(regrade);

  bool uniform = false;
  auto* counter = app.add_subcommand("counterexample", "Reproduce the two-step density example");
  counter->add_flag("--uniform", uniform, "Use the unit density instead");
  add_output(counter);

  std::string target;
  std::vector<int> levels = {2, 4, 8, 16, 32, 64, 128, 256};
  auto* limit = app.add_subcommand("limit", "Cauchy approximation table for an interval set");
  limit->add_option("--target", target, "IntervalSet JSON inside (0,1] (default (0,1/3])");
  limit->add_option("--levels", levels, "Divisibility chain of levels")->delimiter(',');
  add_output(limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }
  out.format = format == "json" ? Format::json : Format::csv;

  try {
    if (*verify) return cmd_verify(va, out);
    if (*regrade) return cmd_regrade(ra, out);
    if (*counter) return cmd_counterexample(uniform, out);
    return cmd_limit(target, levels, out);
  } catch (const lattice_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_property;
  }
}
