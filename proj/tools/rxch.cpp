// Command-line front end: analytic rates, limits, capacities, sweeps and
// Monte Carlo estimates for receptor channel models.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rxch/capacity.hpp"
#include "rxch/info_discrete.hpp"
#include "rxch/info_limit.hpp"
#include "rxch/kinetics.hpp"
#include "rxch/model_io.hpp"
#include "rxch/simulate.hpp"

using nlohmann::json;

namespace {

constexpr double kLn2 = 0.69314718055994530942;

struct UnitOpt {
  bool nats = false;
  double scale() const { return nats ? 1.0 : 1.0 / kLn2; }
  const char* rate_unit() const { return nats ? "nats/s" : "bits/s"; }
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("empty numeric list");
  return out;
}

rxch::InputDistribution parse_dist(const std::string& spec) {
  std::vector<double> xs, ps;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("distribution spec must be x:p,x:p,...");
    xs.push_back(std::stod(item.substr(0, colon)));
    ps.push_back(std::stod(item.substr(colon + 1)));
  }
  return rxch::InputDistribution(xs, ps);
}

json dist_json(const rxch::InputDistribution& d) {
  json j = json::array();
  for (std::size_t i = 0; i < d.size(); ++i)
    j.push_back({{"x", d.xs()[i]}, {"p", d.ps()[i]}});
  return j;
}

json edge_table(const std::vector<std::pair<rxch::EdgeKey, double>>& entries,
                double scale) {
  json j = json::array();
  for (const auto& [key, value] : entries)
    j.push_back({{"from", key.first}, {"to", key.second}, {"value", value * scale}});
  return j;
}

void emit(const json& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::ofstream out(output_path);
    out << payload.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Receptor signal-transduction channel calculator"};
  app.require_subcommand(1);

  std::string model_arg, dist_arg, alphabet_arg, dt_list_arg, mode_arg = "limit";
  std::string output_path, target_arg = "y";
  double dt = 0.0;
  long long steps = 1000000;
  int chains = 16, grid = 101;
  std::uint64_t seed = 1;
  bool with_mc = false;
  UnitOpt units;

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_arg, "built-in name (chr2|ach|cam) or model file path")
        ->required();
  };

  auto* c_validate = app.add_subcommand("validate", "validate a model file");
  std::string validate_path;
  c_validate->add_option("path", validate_path, "model file or built-in name")->required();

  auto* c_steady = app.add_subcommand("steady-state", "stationary distribution");
  add_model(c_steady);
  c_steady->add_option("--dist", dist_arg, "input distribution x:p,x:p,...")->required();

  auto* c_mi = app.add_subcommand("mi", "discrete-time IID mutual information rate");
  add_model(c_mi);
  c_mi->add_option("--dist", dist_arg)->required();
  c_mi->add_option("--dt", dt, "time step, seconds")->required();

  auto* c_limit = app.add_subcommand("limit", "continuous-time limit rate");
  add_model(c_limit);
  c_limit->add_option("--dist", dist_arg)->required();

  auto* c_cap = app.add_subcommand("capacity", "maximize the rate over IID inputs");
  add_model(c_cap);
  c_cap->add_option("--alphabet", alphabet_arg, "comma-separated input levels")->required();
  c_cap->add_option("--mode", mode_arg, "limit|discrete");
  c_cap->add_option("--dt", dt, "time step (discrete mode)");
  c_cap->add_option("--seed", seed);

  auto* c_sweep = app.add_subcommand("sweep", "p_L sweep CSV over dt list plus the limit curve");
  add_model(c_sweep);
  c_sweep->add_option("--alphabet", alphabet_arg, "x_L,x_H")->required();
  c_sweep->add_option("--dt", dt_list_arg, "comma-separated dt values, seconds");
  c_sweep->add_option("--grid", grid, "number of p_L grid points");
  c_sweep->add_flag("--mc", with_mc, "overlay Monte Carlo estimates");
  c_sweep->add_option("--steps", steps, "MC steps per grid point");
  c_sweep->add_option("--chains", chains);
  c_sweep->add_option("--seed", seed);
  c_sweep->add_option("--output", output_path, "output CSV path (default stdout)");

  auto* c_sim = app.add_subcommand("simulate", "emit a trajectory as CSV");
  add_model(c_sim);
  c_sim->add_option("--dist", dist_arg)->required();
  c_sim->add_option("--dt", dt)->required();
  c_sim->add_option("--steps", steps);
  c_sim->add_option("--seed", seed);
  c_sim->add_option("--output", output_path);

  auto* c_est = app.add_subcommand("estimate-mi", "Monte Carlo information rate estimate");
  add_model(c_est);
  c_est->add_option("--dist", dist_arg)->required();
  c_est->add_option("--dt", dt)->required();
  c_est->add_option("--steps", steps, "total steps across chains");
  c_est->add_option("--chains", chains);
  c_est->add_option("--seed", seed);
  c_est->add_option("--target", target_arg, "y (state) or z (lumped output)");

  for (auto* cmd : {c_steady, c_mi, c_limit, c_cap, c_est})
    cmd->add_flag("--nats", units.nats, "report rates in nats instead of bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*c_validate) {
      json out;
      out["config"] = {{"subcommand", "validate"}, {"path", validate_path}};
      rxch::ReceptorModel model;
      try {
        model = rxch::load_model(validate_path);
      } catch (const rxch::ParseError& e) {
        out["valid"] = false;
        out["errors"] = json::array({{{"code", e.code()}, {"detail", e.what()}}});
        emit(out, "");
        return 2;
      }
      const auto report = rxch::validate(model);
      out["valid"] = report.valid();
      out["errors"] = json::array();
      for (const auto& issue : report.errors)
        out["errors"].push_back({{"code", issue.code}, {"detail", issue.detail}});
      out["warnings"] = json::array();
      for (const auto& issue : report.warnings)
        out["warnings"].push_back({{"code", issue.code}, {"detail", issue.detail}});
      emit(out, "");
      return report.valid() ? 0 : 2;
    }

    if (*c_steady) {
      const auto model = rxch::load_model(model_arg);
      const auto dist = parse_dist(dist_arg);
      const auto pi = rxch::stationary(model, dist);
      json out;
      out["config"] = {{"subcommand", "steady-state"},
                       {"model", model_arg},
                       {"dist", dist_json(dist)}};
      json pij = json::object();
      for (int i = 0; i < model.size(); ++i)
        pij[std::to_string(model.label_of(i))] = pi[i];
      out["pi"] = pij;
      emit(out, "");
      return 0;
    }

    if (*c_mi) {
      const auto model = rxch::load_model(model_arg);
      const auto dist = parse_dist(dist_arg);
      const auto report = rxch::mi_rate_discrete(model, dist, dt);
      json out;
      out["config"] = {{"subcommand", "mi"},
                       {"model", model_arg},
                       {"dist", dist_json(dist)},
                       {"dt", dt},
                       {"units", units.rate_unit()}};
      out["rate_per_use"] = report.rate_per_use * units.scale();
      out["rate_per_second"] = report.rate_per_second * units.scale();
      out["per_edge"] = edge_table(report.per_edge, units.scale());
      emit(out, "");
      return 0;
    }

    if (*c_limit) {
      const auto model = rxch::load_model(model_arg);
      const auto dist = parse_dist(dist_arg);
      const auto report = rxch::limit_rate(model, dist);
      json out;
      out["config"] = {{"subcommand", "limit"},
                       {"model", model_arg},
                       {"dist", dist_json(dist)}};
      out["rate_bits_per_s"] = report.rate / kLn2;
      out["rate_nats_per_s"] = report.rate;
      out["divergence_nats"] = report.divergence;
      out["flux_total_per_s"] = report.flux.total;
      out["flux_per_edge"] = edge_table(report.flux.per_edge, 1.0);
      out["per_edge_iota"] = edge_table(report.per_edge_iota, units.scale());
      emit(out, "");
      return 0;
    }

    if (*c_cap) {
      const auto model = rxch::load_model(model_arg);
      const auto alphabet = parse_list(alphabet_arg);
      const rxch::RateMode mode =
          mode_arg == "discrete" ? rxch::RateMode::discrete : rxch::RateMode::limit;
      rxch::CapacityResult result =
          alphabet.size() == 2
              ? rxch::capacity_binary(model, alphabet[0], alphabet[1], mode, dt)
              : rxch::capacity_general(model, alphabet, mode, dt, seed);
      json out;
      out["config"] = {{"subcommand", "capacity"},
                       {"model", model_arg},
                       {"alphabet", alphabet},
                       {"mode", mode_arg},
                       {"dt", dt},
                       {"seed", seed},
                       {"units", units.rate_unit()}};
      out["value"] = result.value * units.scale();
      out["argmax"] = dist_json(result.argmax);
      out["p_L"] = result.argmax_p_low;
      out["theorem3_applies"] = result.theorem3_applies;
      out["capacity_kind"] =
          result.theorem3_applies ? "Shannon capacity (= IID capacity)"
                                  : "IID capacity (lower bound on C)";
      emit(out, "");
      return 0;
    }

    if (*c_sweep) {
      const auto model = rxch::load_model(model_arg);
      const auto alphabet = parse_list(alphabet_arg);
      if (alphabet.size() != 2)
        throw std::invalid_argument("sweep expects a binary alphabet x_L,x_H");
      std::vector<double> dts;
      if (!dt_list_arg.empty()) dts = parse_list(dt_list_arg);
      if (grid < 2) throw std::invalid_argument("grid must be >= 2");

      json config = {{"subcommand", "sweep"}, {"model", model_arg},
                     {"alphabet", alphabet},  {"dt", dts},
                     {"grid", grid},          {"mc", with_mc},
                     {"steps", steps},        {"chains", chains},
                     {"seed", seed}};
      std::ostringstream csv;
      csv << "# config: " << config.dump() << "\n";
      csv << "p_L,dt,rate_bits_per_s,mode\n";
      char buf[160];
      auto row = [&](double p_low, double dtv, double bits, const char* mode) {
        std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.12g,%s\n", p_low, dtv, bits, mode);
        csv << buf;
      };
      for (int i = 0; i < grid; ++i) {
        const double p_low = static_cast<double>(i) / (grid - 1);
        const auto d = rxch::InputDistribution::binary(alphabet[0], alphabet[1], p_low);
        for (double dtv : dts)
          row(p_low, dtv,
              rxch::mi_rate_discrete(model, d, dtv).rate_per_second / kLn2, "discrete");
        row(p_low, 0.0, rxch::limit_rate(model, d).rate / kLn2, "limit");
        if (with_mc) {
          for (double dtv : dts) {
            const auto ey = rxch::estimate_mi_y(model, d, dtv, steps, chains,
                                                seed + static_cast<std::uint64_t>(i));
            row(p_low, dtv, ey.mean / kLn2, "mc-y");
            if (model.has_lump()) {
              const auto ez = rxch::estimate_mi_z(model, d, dtv, steps, chains,
                                                  seed + static_cast<std::uint64_t>(i));
              row(p_low, dtv, ez.mean / kLn2, "mc-z");
            }
          }
        }
      }
      emit_text(csv.str(), output_path);
      return 0;
    }

    if (*c_sim) {
      const auto model = rxch::load_model(model_arg);
      const auto dist = parse_dist(dist_arg);
      const auto traj = rxch::simulate(model, dist, dt, steps, seed);
      json config = {{"subcommand", "simulate"}, {"model", model_arg},
                     {"dist", dist_json(dist)},  {"dt", dt},
                     {"steps", steps},           {"seed", seed}};
      std::ostringstream csv;
      csv << "# config: " << config.dump() << "\n";
      csv << "step,x,y,z\n";
      for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const int label = model.label_of(traj.states[i]);
        csv << i << "," << dist.xs()[traj.inputs[i]] << "," << label << ",";
        if (model.has_lump()) csv << model.lump.at(label);
        csv << "\n";
      }
      emit_text(csv.str(), output_path);
      return 0;
    }

    if (*c_est) {
      const auto model = rxch::load_model(model_arg);
      const auto dist = parse_dist(dist_arg);
      const auto est = target_arg == "z"
                           ? rxch::estimate_mi_z(model, dist, dt, steps, chains, seed)
                           : rxch::estimate_mi_y(model, dist, dt, steps, chains, seed);
      json out;
      out["config"] = {{"subcommand", "estimate-mi"},
                       {"model", model_arg},
                       {"dist", dist_json(dist)},
                       {"dt", dt},
                       {"steps", steps},
                       {"chains", chains},
                       {"seed", seed},
                       {"target", target_arg},
                       {"units", units.rate_unit()}};
      out["mean"] = est.mean * units.scale();
      out["std_error"] = est.std_error * units.scale();
      out["n_steps"] = est.n_steps;
      out["n_chains"] = est.n_chains;
      out["low_counts"] = est.low_counts;
      emit(out, "");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
