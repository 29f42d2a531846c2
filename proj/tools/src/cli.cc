// Copyright 2026 The Friendfoe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "friendfoe/classifier_game.h"
#include "friendfoe/detection.h"
#include "friendfoe/equilibrium.h"
#include "friendfoe/error.h"
#include "friendfoe/factored_bandit.h"
#include "friendfoe/format.h"
#include "friendfoe/game.h"
#include "friendfoe/game_io.h"
#include "json.hpp"
#include "run_record.h"
#include "svg.h"

#ifndef FRIENDFOE_VERSION
#define FRIENDFOE_VERSION "unknown"
#endif

namespace friendfoe::cli {
namespace {

using Json = nlohmann::ordered_json;

// Flags shared by every command.
struct GlobalFlags {
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::size_t max_iter = 1'000'000;
  double eta = 0.01;
  std::string schedule = "constant";
  double tau = 1000.0;

  SolveConfig ToConfig() const {
    SolveConfig config;
    config.tol = tol;
    config.max_iter = max_iter;
    config.schedule.kind = ParseScheduleKind(schedule);
    config.schedule.eta0 = eta;
    config.schedule.tau = tau;
    config.Validate();
    return config;
  }

  Json ToJson() const {
    return {{"out_dir", out_dir}, {"seed", seed},         {"tol", tol},
            {"max_iter", max_iter}, {"eta", eta},          {"schedule", schedule},
            {"tau", tau}};
  }
};

void AddGlobalFlags(CLI::App* app, GlobalFlags& g) {
  app->add_option("--out-dir", g.out_dir, "Directory for output files")
      ->capture_default_str();
  app->add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app->add_option("--tol", g.tol,
                  "Stop once the best-response residual and net-payoff "
                  "spreads fall below this value")
      ->capture_default_str();
  app->add_option("--max-iter", g.max_iter, "Iteration limit")
      ->capture_default_str();
  app->add_option("--eta", g.eta, "Initial step size of the log-weight update")
      ->capture_default_str();
  app->add_option("--schedule", g.schedule, "Step-size schedule")
      ->check(CLI::IsMember({"constant", "robbins-monro"}))
      ->capture_default_str();
  app->add_option("--tau", g.tau, "Decay horizon of the robbins-monro schedule")
      ->capture_default_str();
}

Json DistJson(const Dist& d) {
  return {{"labels", d.labels()},
          {"probs", std::vector<double>(d.probs().begin(), d.probs().end())}};
}

Json OptionalJson(const std::optional<double>& v) {
  return v.has_value() && std::isfinite(*v) ? Json(*v) : Json(nullptr);
}

Json NetJson(const std::vector<std::optional<double>>& net) {
  Json out = Json::array();
  for (const auto& v : net) out.push_back(OptionalJson(v));
  return out;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string Status(bool converged) {
  return converged ? "converged" : "not_converged";
}

// solve ---------------------------------------------------------------------

struct SolveFlags {
  std::string game;
  bool trace = false;
  std::size_t trace_stride = 1;
  bool svg = false;
  std::string order = "agent-first";
  double indifference_tol = 1e-6;
};

UpdateOrder ParseOrder(const std::string& name) {
  if (name == "env-first") return UpdateOrder::kEnvFirst;
  if (name == "simultaneous") return UpdateOrder::kSimultaneous;
  return UpdateOrder::kAgentFirst;
}

std::string TraceSvg(const Game& game, const std::vector<TracePoint>& trace) {
  Panel strategies{"Strategies", "iteration", "probability", {}};
  Panel net{"Net payoffs", "iteration", "net payoff", {}};
  const auto& agent_labels = game.prior_agent().labels();
  const auto& env_labels = game.prior_env().labels();
  std::vector<double> t;
  for (const auto& p : trace) t.push_back(static_cast<double>(p.t));
  auto add = [&](Panel& panel, const std::string& name,
                 const std::function<double(const TracePoint&)>& value) {
    Series s{name, t, {}};
    for (const auto& p : trace) s.y.push_back(value(p));
    panel.series.push_back(std::move(s));
  };
  auto net_value = [](const std::optional<double>& v) {
    return v.has_value() ? *v : NAN;
  };
  for (std::size_t i = 0; i < agent_labels.size(); ++i) {
    add(strategies, "P(x=" + agent_labels[i] + ")",
        [i](const TracePoint& p) { return p.profile.agent[i]; });
    add(net, "J_X(" + agent_labels[i] + ")",
        [&, i](const TracePoint& p) { return net_value(p.net.agent_net[i]); });
  }
  for (std::size_t i = 0; i < env_labels.size(); ++i) {
    add(strategies, "P(z=" + env_labels[i] + ")",
        [i](const TracePoint& p) { return p.profile.env[i]; });
    add(net, "J_Z(" + env_labels[i] + ")",
        [&, i](const TracePoint& p) { return net_value(p.net.env_net[i]); });
  }
  return LineChart({strategies, net});
}

int RunSolve(RunRecord& record, const GlobalFlags& g, const SolveFlags& f) {
  record.config()["game"] = f.game;
  record.config()["trace"] = f.trace;
  record.config()["trace_stride"] = f.trace_stride;
  record.config()["svg"] = f.svg;
  record.config()["order"] = f.order;
  record.config()["indifference_tol"] = f.indifference_tol;
  const Game game = ParseGameJson(record.ReadInput(f.game));
  SolveConfig config = g.ToConfig();
  config.order = ParseOrder(f.order);
  config.record_trace = f.trace || f.svg;
  config.trace_stride = f.trace_stride;
  config.Validate();

  const EquilibriumResult r = Solve(game, config);
  const IndifferenceCheck check =
      VerifyIndifference(game, r.profile, f.indifference_tol);
  Json out;
  out["converged"] = r.converged;
  out["iterations"] = r.iterations;
  out["final_residual"] = r.final_residual;
  out["objective"] = OptionalJson(r.objective);
  out["expected_utility"] = ExpectedUtility(r.profile, game);
  out["agent"] = DistJson(r.profile.agent);
  out["env"] = DistJson(r.profile.env);
  out["net_payoffs"] = {{"agent", NetJson(r.net_report.agent_net)},
                        {"env", NetJson(r.net_report.env_net)},
                        {"agent_spread", r.net_report.agent_spread},
                        {"env_spread", r.net_report.env_spread}};
  out["indifference"] = {{"tol", f.indifference_tol}, {"passed", check.passed}};
  out["game"] = Json::parse(GameToJson(game));
  record.AddOutput("equilibrium.json", Dump(out));
  if (f.trace) {
    std::ostringstream csv;
    WriteTraceCsv(csv, game, r.trace);
    record.AddOutput("trace.csv", csv.str());
  }
  if (f.svg) record.AddOutput("trace.svg", TraceSvg(game, r.trace));
  return record.Commit(Status(r.converged),
                       r.converged ? kExitOk : kExitNotConverged);
}

// bandit bernoulli ----------------------------------------------------------

struct BernoulliFlags {
  std::string q_env = "0.4,0.6";
  std::string betas = "0,1,-1,-2";
  std::size_t n_rounds = 1000;
};

int RunBernoulli(RunRecord& record, const GlobalFlags& g,
                 const BernoulliFlags& f) {
  record.config()["q_env"] = f.q_env;
  record.config()["betas"] = f.betas;
  record.config()["n_rounds"] = f.n_rounds;
  const Dist q_env = Dist::WithIndexLabels(ParseNumberList(f.q_env));
  const auto betas = ParseNumberList(f.betas);
  const auto rows = BernoulliBanditExperiment(q_env, betas, f.n_rounds, g.seed);
  std::ostringstream csv;
  csv << "beta,strategy,exact_expected_reward";
  if (f.n_rounds > 0) csv << ",simulated_mean,n_rounds,seed";
  csv << "\n";
  for (const auto& row : rows) {
    csv << FormatNumber(row.beta) << ',' << row.strategy << ','
        << FormatNumber(row.exact_expected_reward);
    if (f.n_rounds > 0) {
      csv << ',' << FormatNumber(row.simulated_mean) << ',' << row.n_rounds
          << ',' << row.seed;
    }
    csv << "\n";
  }
  record.AddOutput("bernoulli.csv", csv.str());
  return record.Commit("ok", kExitOk);
}

// bandit gauss-sweep --------------------------------------------------------

struct SweepFlags {
  double alpha = 30.0;
  double beta_min = -3.0;
  double beta_max = 3.0;
  double beta_step = 0.1;
  std::string posterior_betas = "-2,2";
  int arms = 4;
  int bins = 121;
  std::string friendly_starts = "arms";
};

int RunSweep(RunRecord& record, const GlobalFlags& g, const SweepFlags& f) {
  Json& c = record.config();
  c["alpha"] = f.alpha;
  c["beta_min"] = f.beta_min;
  c["beta_max"] = f.beta_max;
  c["beta_step"] = f.beta_step;
  c["posterior_betas"] = f.posterior_betas;
  c["arms"] = f.arms;
  c["bins"] = f.bins;
  c["friendly_starts"] = f.friendly_starts;
  GaussianBanditSetup setup;
  setup.num_arms = f.arms;
  setup.bins = f.bins;
  const SolveConfig config = g.ToConfig();
  const FriendlyStarts starts = f.friendly_starts == "prior"
                                    ? FriendlyStarts::kPriorOnly
                                    : FriendlyStarts::kPriorAndArms;
  const FactoredBanditGame base = MakeGaussianBandit(setup, f.alpha, 0.0);
  const auto betas = Arange(f.beta_min, f.beta_max, f.beta_step);
  const auto posterior_betas = ParseNumberList(f.posterior_betas);
  const std::size_t k = base.num_arms();

  const auto rows = BetaSweep(base, betas, config, starts);
  bool all_converged = true;
  bool diverged = false;
  std::ostringstream csv;
  csv << "beta";
  for (std::size_t i = 1; i <= k; ++i) csv << ",p_arm_" << i;
  for (std::size_t i = 1; i <= k; ++i) csv << ",post_mean_arm_" << i;
  csv << "\n";
  Json status = Json::array();
  std::vector<std::vector<double>> layers(k);
  for (const SweepRow& row : rows) {
    csv << FormatNumber(row.beta);
    Json entry = {{"beta", row.beta}};
    if (row.equilibrium.has_value()) {
      const BanditEquilibrium& eq = *row.equilibrium;
      const auto means = eq.PosteriorMeans(base);
      for (std::size_t i = 0; i < k; ++i) csv << ',' << FormatNumber(eq.agent[i]);
      for (std::size_t i = 0; i < k; ++i) csv << ',' << FormatNumber(means[i]);
      for (std::size_t i = 0; i < k; ++i) layers[i].push_back(eq.agent[i]);
      all_converged = all_converged && eq.converged;
      entry["converged"] = eq.converged;
      entry["iterations"] = eq.iterations;
      entry["agent_spread"] = eq.agent_spread;
      entry["env_spread"] = eq.env_spread;
    } else {
      for (std::size_t i = 0; i < 2 * k; ++i) csv << ',';
      for (std::size_t i = 0; i < k; ++i) layers[i].push_back(NAN);
      diverged = true;
      entry["error"] = row.error;
    }
    csv << "\n";
    status.push_back(std::move(entry));
  }
  record.AddOutput("sweep.csv", csv.str());
  record.AddOutput("sweep_status.json", Dump(status));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("arm " + std::to_string(i + 1) + " (mu=" +
                    FormatNumber(base.arms[i].mu) + ", sigma=" +
                    FormatNumber(base.arms[i].sigma) + ")");
  }
  record.AddOutput("sweep.svg",
                   StackChart("Agent strategy across beta", "beta", betas,
                              names, layers));

  std::ostringstream post;
  post << "beta,arm,reward,prior,posterior\n";
  for (double beta : posterior_betas) {
    FactoredBanditGame game = base;
    game.beta = beta;
    const BanditEquilibrium eq = SolveBandit(game, config, starts);
    all_converged = all_converged && eq.converged;
    std::string agent_probs;
    for (std::size_t i = 0; i < k; ++i) {
      if (i > 0) agent_probs += ", ";
      agent_probs += FormatNumber(std::round(eq.agent[i] * 1000) / 1000);
    }
    Panel panel{"Arm rewards at beta=" + FormatNumber(beta) + ", agent (" +
                    agent_probs + ")",
                "reward", "probability", {}};
    for (std::size_t i = 0; i < k; ++i) {
      const auto& arm = base.arms[i];
      Series prior{"arm " + std::to_string(i + 1) + " prior", arm.centers, {}};
      Series posterior{"arm " + std::to_string(i + 1) + " posterior",
                       arm.centers, {}};
      for (std::size_t j = 0; j < arm.centers.size(); ++j) {
        post << FormatNumber(beta) << ',' << i + 1 << ','
             << FormatNumber(arm.centers[j]) << ',' << FormatNumber(arm.probs[j])
             << ',' << FormatNumber(eq.arm_posteriors[i][j]) << "\n";
        prior.y.push_back(arm.probs[j]);
        posterior.y.push_back(eq.arm_posteriors[i][j]);
      }
      panel.series.push_back(std::move(prior));
      panel.series.push_back(std::move(posterior));
    }
    record.AddOutput("posterior_beta_" + FormatNumber(beta) + ".svg",
                     LineChart({panel}));
  }
  record.AddOutput("posteriors.csv", post.str());
  if (diverged) return record.Commit("numerical_divergence", kExitDivergence);
  return record.Commit(Status(all_converged),
                       all_converged ? kExitOk : kExitNotConverged);
}

// classifier ----------------------------------------------------------------

struct ClassifierFlags {
  std::string reference_w = "-1,-0.5";
  std::string reference_b = "-0.5,0.5";
  std::string stages = "1,2a,2b,3,4";
  std::vector<std::string> overrides;
};

// Default stages filtered by name, with NAME=ALPHA,BETA overrides applied.
std::vector<StageSpec> SelectStages(const ClassifierFlags& f) {
  std::vector<StageSpec> all = DefaultStages();
  for (const std::string& o : f.overrides) {
    const auto eq = o.find('=');
    const auto values =
        eq == std::string::npos ? std::vector<double>{}
                                : ParseNumberList(o.substr(eq + 1));
    auto it = std::find_if(all.begin(), all.end(), [&](const StageSpec& s) {
      return s.name == o.substr(0, eq);
    });
    if (values.size() != 2 || it == all.end()) {
      throw ParseError("bad stage override '" + o +
                       "'; expected NAME=ALPHA,BETA with a known stage name");
    }
    it->alpha = values[0];
    it->beta = values[1];
  }
  std::vector<std::string> names;
  std::stringstream list(f.stages);
  for (std::string name; std::getline(list, name, ',');) names.push_back(name);
  std::vector<StageSpec> selected;
  for (const StageSpec& s : all) {
    if (std::find(names.begin(), names.end(), s.name) != names.end()) {
      selected.push_back(s);
    }
  }
  if (selected.size() != names.size()) {
    throw ParseError("unknown or repeated stage in '" + f.stages + "'");
  }
  return selected;
}

Point2 ParsePoint(const std::string& text) {
  const auto v = ParseNumberList(text);
  if (v.size() != 2) throw Error("expected two numbers, got '" + text + "'");
  return {v[0], v[1]};
}

std::string LabelMapSvg(const std::string& title, const LabelMap& map,
                        const ParamGrid& grid) {
  // Points are stored first coordinate outermost; draw p1 upward, p0 across.
  std::vector<double> values(kNumPoints);
  std::vector<std::string> rows, cols;
  for (std::size_t r = 0; r < kGridSide; ++r) {
    const std::size_t j = kGridSide - 1 - r;
    rows.push_back(FormatNumber(grid.points[j][1]));
    for (std::size_t c = 0; c < kGridSide; ++c) {
      values[r * kGridSide + c] = map.plus_probability[c * kGridSide + j];
    }
  }
  for (std::size_t c = 0; c < kGridSide; ++c) {
    cols.push_back(FormatNumber(grid.points[c * kGridSide][0]));
  }
  return HeatGrid(title, kGridSide, kGridSide, values, rows, cols);
}

int RunClassifier(RunRecord& record, const GlobalFlags& g,
                  const ClassifierFlags& f) {
  record.config()["reference_w"] = f.reference_w;
  record.config()["reference_b"] = f.reference_b;
  record.config()["stages"] = f.stages;
  record.config()["stage_overrides"] = f.overrides;
  const std::vector<StageSpec> stages = SelectStages(f);
  const SolveConfig config = g.ToConfig();
  const ClassifierGame game = BuildClassifierGame(ParsePoint(f.reference_w),
                                                  ParsePoint(f.reference_b));
  const auto results = RunStages(game, config, stages);
  const auto labels = game.grid.Labels();
  bool all_converged = true;
  std::ostringstream summary;
  summary << "stage,alpha,beta,converged,iterations,expected_utility,"
             "agent_entropy,env_entropy\n";
  for (const StageResult& r : results) {
    const EquilibriumResult& eq = r.equilibrium;
    all_converged = all_converged && eq.converged;
    summary << r.spec.name << ',' << FormatNumber(r.spec.alpha) << ','
            << FormatNumber(r.spec.beta) << ',' << (eq.converged ? 1 : 0) << ','
            << eq.iterations << ',' << FormatNumber(r.expected_utility) << ','
            << FormatNumber(r.agent_entropy) << ','
            << FormatNumber(r.env_entropy) << "\n";

    std::vector<std::size_t> order(kNumThetas);
    for (std::size_t i = 0; i < kNumThetas; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return eq.profile.agent[a] > eq.profile.agent[b];
    });
    Json top = Json::array();
    for (std::size_t i = 0; i < 5; ++i) {
      top.push_back({{"theta", labels[order[i]]},
                     {"prob", eq.profile.agent[order[i]]}});
    }
    Json stage;
    stage["stage"] = r.spec.name;
    stage["alpha"] = r.spec.alpha;
    stage["beta"] = r.spec.beta;
    stage["converged"] = eq.converged;
    stage["iterations"] = eq.iterations;
    stage["final_residual"] = eq.final_residual;
    stage["objective"] = OptionalJson(eq.objective);
    stage["expected_utility"] = r.expected_utility;
    stage["agent_entropy"] = r.agent_entropy;
    stage["env_entropy"] = r.env_entropy;
    stage["agent_spread"] = eq.net_report.agent_spread;
    stage["env_spread"] = eq.net_report.env_spread;
    stage["top_agent_thetas"] = std::move(top);
    stage["agent"] = DistJson(eq.profile.agent);
    stage["env"] = DistJson(eq.profile.env);
    record.AddOutput("stage_" + r.spec.name + ".json", Dump(stage));

    std::ostringstream map;
    map << "point_x,point_y,agent_plus,env_plus\n";
    for (std::size_t p = 0; p < kNumPoints; ++p) {
      map << FormatNumber(game.grid.points[p][0]) << ','
          << FormatNumber(game.grid.points[p][1]) << ','
          << FormatNumber(r.agent_map.plus_probability[p]) << ','
          << FormatNumber(r.env_map.plus_probability[p]) << "\n";
    }
    record.AddOutput("label_map_" + r.spec.name + ".csv", map.str());
    record.AddOutput("label_map_" + r.spec.name + "_agent.svg",
                     LabelMapSvg("Stage " + r.spec.name + " agent P(label=+1)",
                                 r.agent_map, game.grid));
    record.AddOutput("label_map_" + r.spec.name + "_env.svg",
                     LabelMapSvg("Stage " + r.spec.name + " labeler P(label=+1)",
                                 r.env_map, game.grid));
  }
  record.AddOutput("stages.csv", summary.str());
  return record.Commit(Status(all_converged),
                       all_converged ? kExitOk : kExitNotConverged);
}

// detect --------------------------------------------------------------------

struct DetectFlags {
  std::string log;
  std::string strategies;
  std::string game;
  double beta_min = -3.0;
  double beta_max = 3.0;
  double beta_step = 0.25;
  bool mi = false;
  bool thompson = false;
  std::optional<double> simulate_beta;
  std::size_t per_strategy = 1000;
};

int RunDetect(RunRecord& record, const GlobalFlags& g, const DetectFlags& f) {
  Json& c = record.config();
  c["log"] = f.log;
  c["strategies"] = f.strategies;
  c["game"] = f.game;
  c["beta_min"] = f.beta_min;
  c["beta_max"] = f.beta_max;
  c["beta_step"] = f.beta_step;
  c["mi"] = f.mi;
  c["thompson"] = f.thompson;
  c["simulate_beta"] = OptionalJson(f.simulate_beta);
  c["per_strategy"] = f.per_strategy;
  if (f.log.empty() == !f.simulate_beta.has_value()) {
    throw ParseError("give exactly one of --log and --simulate-beta");
  }
  const Game game = ParseGameJson(record.ReadInput(f.game));
  auto strategies = ParseStrategiesJson(record.ReadInput(f.strategies));
  const SolveConfig config = g.ToConfig();

  InteractionLog log;
  if (f.simulate_beta.has_value()) {
    log = SimulateInteractions(strategies, game.prior_env(), game.utility(),
                               *f.simulate_beta, f.per_strategy, g.seed);
    std::ostringstream csv;
    WriteInteractionCsv(csv, log);
    record.AddOutput("log.csv", csv.str());
  } else {
    std::istringstream in(record.ReadInput(f.log));
    log = ReadInteractionCsv(in, std::move(strategies));
  }
  log.Validate(game.prior_env());
  for (const auto& [id, pi] : log.strategies) {
    if (pi.size() != game.num_agent_actions()) {
      throw Error("strategy '" + id + "' does not match the game");
    }
  }

  const auto grid = Arange(f.beta_min, f.beta_max, f.beta_step);
  const std::vector<double> prior(grid.size(), 1.0 / grid.size());
  const BetaPosterior posterior = ComputeBetaPosterior(
      log, grid, prior, game.prior_env(), game.utility());
  std::ostringstream csv;
  WritePosteriorCsv(csv, posterior);
  record.AddOutput("posterior.csv", csv.str());

  Json out;
  out["n_records"] = log.records.size();
  out["map_estimate"] = posterior.MapEstimate();
  out["posterior_mean"] = posterior.Mean();
  if (f.mi) out["reactivity_mi"] = ReactivityMi(log);
  if (f.thompson) {
    const ThompsonDraw draw =
        ThompsonStep(posterior, game.prior_env(), game.prior_agent(),
                     game.utility(), game.alpha(), g.seed, config);
    out["thompson"] = {{"beta", draw.beta},
                       {"converged", draw.converged},
                       {"agent", DistJson(draw.agent)}};
    record.AddOutput("detect.json", Dump(out));
    return record.Commit(Status(draw.converged),
                         draw.converged ? kExitOk : kExitNotConverged);
  }
  record.AddOutput("detect.json", Dump(out));
  return record.Commit("ok", kExitOk);
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{
      "friendfoe: equilibria of KL-regularized agent/environment games"};
  app.require_subcommand(1);
  app.footer(
      "Every command also takes --out-dir [out], --seed [0], --tol [1e-09], "
      "--max-iter [1000000], --eta [0.01], --schedule [constant] and "
      "--tau [1000].\nExit codes: 0 ok, 1 parse error (no output files), "
      "2 numerical divergence or unmet estimator precondition, 3 not "
      "converged (partial output).\nRun 'friendfoe COMMAND --help' for "
      "command flags.");
  app.set_version_flag("--version", std::string(FRIENDFOE_VERSION));

  GlobalFlags globals;
  std::string command;
  std::function<int(RunRecord&)> action;
  auto bind = [&](CLI::App* sub, const std::string& name,
                  std::function<int(RunRecord&)> run) {
    AddGlobalFlags(sub, globals);
    sub->callback([&, name, run] {
      command = name;
      action = run;
    });
  };

  SolveFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "Solve a game given as JSON");
  solve->add_option("game", solve_flags.game, "Game JSON file")->required();
  solve->add_flag("--trace", solve_flags.trace, "Write trace.csv");
  solve->add_option("--trace-stride", solve_flags.trace_stride,
                    "Record every n-th iterate")
      ->capture_default_str();
  solve->add_flag("--svg", solve_flags.svg,
                  "Write trace.svg with strategy and net-payoff curves");
  solve->add_option("--order", solve_flags.order, "Player update order")
      ->check(CLI::IsMember({"agent-first", "env-first", "simultaneous"}))
      ->capture_default_str();
  solve->add_option("--indifference-tol", solve_flags.indifference_tol,
                    "Tolerance of the reported indifference check")
      ->capture_default_str();
  bind(solve, "solve",
       [&](RunRecord& r) { return RunSolve(r, globals, solve_flags); });

  CLI::App* bandit = app.add_subcommand("bandit", "Bandit experiments");
  bandit->require_subcommand(1);

  BernoulliFlags bernoulli_flags;
  CLI::App* bernoulli = bandit->add_subcommand(
      "bernoulli", "Two-armed placement bandits: exact and simulated rewards");
  bernoulli->add_option("--q-env", bernoulli_flags.q_env,
                        "Environment prior over the two placements")
      ->capture_default_str();
  bernoulli->add_option("--betas", bernoulli_flags.betas,
                        "Comma-separated environment inverse temperatures")
      ->capture_default_str();
  bernoulli->add_option("--n-rounds", bernoulli_flags.n_rounds,
                        "Simulated rounds per row; 0 for exact values only")
      ->capture_default_str();
  bind(bernoulli, "bandit bernoulli",
       [&](RunRecord& r) { return RunBernoulli(r, globals, bernoulli_flags); });

  SweepFlags sweep_flags;
  CLI::App* sweep = bandit->add_subcommand(
      "gauss-sweep", "Gaussian-arm bandit swept over the environment beta");
  sweep->add_option("--alpha", sweep_flags.alpha, "Agent inverse temperature")
      ->capture_default_str();
  sweep->add_option("--beta-min", sweep_flags.beta_min, "First beta of the sweep")
      ->capture_default_str();
  sweep->add_option("--beta-max", sweep_flags.beta_max, "Last beta of the sweep")
      ->capture_default_str();
  sweep->add_option("--beta-step", sweep_flags.beta_step, "Sweep step")
      ->capture_default_str();
  sweep->add_option("--posterior-betas", sweep_flags.posterior_betas,
                    "Betas at which per-arm reward posteriors are written")
      ->capture_default_str();
  sweep->add_option("--arms", sweep_flags.arms, "Number of arms")
      ->capture_default_str();
  sweep->add_option("--bins", sweep_flags.bins, "Reward bins per arm")
      ->capture_default_str();
  sweep->add_option("--friendly-starts", sweep_flags.friendly_starts,
                    "Starting points for friendly environments")
      ->check(CLI::IsMember({"arms", "prior"}))
      ->capture_default_str();
  bind(sweep, "bandit gauss-sweep",
       [&](RunRecord& r) { return RunSweep(r, globals, sweep_flags); });

  ClassifierFlags classifier_flags;
  CLI::App* classifier = app.add_subcommand(
      "classifier", "Five-stage linear classifier labeling game");
  classifier->add_option("--reference-w", classifier_flags.reference_w,
                         "Weights of the labelers' reference classifier")
      ->capture_default_str();
  classifier->add_option("--reference-b", classifier_flags.reference_b,
                         "Bias point of the reference classifier")
      ->capture_default_str();
  classifier->add_option("--stages", classifier_flags.stages,
                         "Comma-separated stages to run, in the fixed order; "
                         "later stages take the first run stage's posteriors "
                         "as priors")
      ->capture_default_str();
  classifier->add_option("--stage-override", classifier_flags.overrides,
                         "Replace a stage's temperatures, as NAME=ALPHA,BETA "
                         "(repeatable)");
  bind(classifier, "classifier", [&](RunRecord& r) {
    return RunClassifier(r, globals, classifier_flags);
  });

  DetectFlags detect_flags;
  CLI::App* detect = app.add_subcommand(
      "detect", "Infer the environment's beta from an interaction log");
  detect->add_option("--game", detect_flags.game,
                     "Game JSON supplying q_env, utility and alpha")
      ->required();
  detect->add_option("--strategies", detect_flags.strategies,
                     "Strategies JSON mapping id to probabilities")
      ->required();
  detect->add_option("--log", detect_flags.log,
                     "Interaction CSV with columns strategy_id,x,z");
  detect->add_option("--simulate-beta", detect_flags.simulate_beta,
                     "Simulate the log at this beta instead of reading one");
  detect->add_option("--per-strategy", detect_flags.per_strategy,
                     "Simulated rounds per strategy")
      ->capture_default_str();
  detect->add_option("--beta-min", detect_flags.beta_min,
                     "Lowest beta of the posterior grid")
      ->capture_default_str();
  detect->add_option("--beta-max", detect_flags.beta_max,
                     "Highest beta of the posterior grid")
      ->capture_default_str();
  detect->add_option("--beta-step", detect_flags.beta_step,
                     "Grid spacing; the prior is uniform over the grid")
      ->capture_default_str();
  detect->add_flag("--mi", detect_flags.mi, "Estimate I(pi; z | x)");
  detect->add_flag("--thompson", detect_flags.thompson,
                   "Draw beta from the posterior and solve for the agent");
  bind(detect, "detect",
       [&](RunRecord& r) { return RunDetect(r, globals, detect_flags); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  RunRecord record(command, globals.out_dir);
  record.config() = globals.ToJson();
  try {
    return action(record);
  } catch (const NumericalDivergence& e) {
    err << "error: " << e.what() << "\n";
    return record.Commit("numerical_divergence", kExitDivergence);
  } catch (const InsufficientData& e) {
    err << "error: " << e.what() << "\n";
    return record.Commit("insufficient_data", kExitDivergence);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }
}

}  // namespace friendfoe::cli
