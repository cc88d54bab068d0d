#include "stpg/cli.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "stpg/bayes_potential.hpp"
#include "stpg/conversions.hpp"
#include "stpg/dynamics.hpp"
#include "stpg/game_io.hpp"

namespace stpg {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInfeasible = 3;
constexpr int kNegative = 4;

json json_of_ext(ExtReal v) {
  return v.is_neg_inf() ? json(nullptr) : json(v.value());
}

json json_of_row(const PayoffRow& row) {
  json out = json::array();
  for (ExtReal v : row) out.push_back(json_of_ext(v));
  return out;
}

json json_of_vector(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json json_of_potential(const RowVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(std::isnan(v(i)) ? json(nullptr) : json(v(i)));
  return out;
}

std::string fmt(ExtReal v) {
  if (v.is_neg_inf()) return "-inf";
  std::ostringstream s;
  s << std::setprecision(10) << v.value();
  return s.str();
}

std::string fmt(double v) { return fmt(ExtReal(v)); }

std::string profile_str(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

void print_row(std::ostream& out, const std::string& label,
               const PayoffRow& row) {
  out << label << " = [";
  for (std::size_t i = 0; i < row.size(); ++i)
    out << (i ? ", " : "") << fmt(row[i]);
  out << "]\n";
}

// Two-player tables mirror the usual bi-matrix layout: rows are player 1's
// strategies, columns player 2's, each cell "c1, c2".
void print_bimatrix(std::ostream& out, const NormalGame& g) {
  const ProfileSpace sp = g.space();
  if (g.players() != 2) {
    for (int i = 1; i <= g.players(); ++i)
      print_row(out, "V" + std::to_string(i),
                g.payoffs[static_cast<std::size_t>(i) - 1]);
    return;
  }
  const int k1 = sp.card(1), k2 = sp.card(2);
  std::vector<std::vector<std::string>> cells(
      static_cast<std::size_t>(k1), std::vector<std::string>(static_cast<std::size_t>(k2)));
  std::size_t width = 6;
  for (int s1 = 1; s1 <= k1; ++s1)
    for (int s2 = 1; s2 <= k2; ++s2) {
      const std::int64_t idx = sp.index({s1, s2});
      const std::string cell =
          fmt(g.payoffs[0][static_cast<std::size_t>(idx) - 1]) + ", " +
          fmt(g.payoffs[1][static_cast<std::size_t>(idx) - 1]);
      width = std::max(width, cell.size());
      cells[static_cast<std::size_t>(s1) - 1][static_cast<std::size_t>(s2) - 1] =
          cell;
    }
  out << std::left << std::setw(8) << "p1\\p2";
  for (int s2 = 1; s2 <= k2; ++s2)
    out << " | " << std::setw(static_cast<int>(width)) << ("a2=" + std::to_string(s2));
  out << "\n";
  for (int s1 = 1; s1 <= k1; ++s1) {
    out << std::left << std::setw(8) << ("a1=" + std::to_string(s1));
    for (int s2 = 1; s2 <= k2; ++s2)
      out << " | "
          << std::setw(static_cast<int>(width))
          << cells[static_cast<std::size_t>(s1) - 1]
                  [static_cast<std::size_t>(s2) - 1];
    out << "\n";
  }
}

struct CommonArgs {
  std::string file;
  bool as_json = false;
  std::vector<int> type_profile;
};

BayesianGame load(const CommonArgs& a) { return load_game(a.file); }

int cmd_info(const CommonArgs& a, std::ostream& out) {
  const BayesianGame g = load(a);
  json j;
  j["players"] = g.players();
  j["types"] = g.type_cards;
  j["actions"] = g.action_cards;
  j["admissible"] = g.admissible;
  j["prior"] = json_of_vector(g.prior);
  json marginals = json::array();
  bool all_positive = true;
  for (int i = 1; i <= g.players(); ++i) {
    const RealVector m = marginal_prior(g, i);
    if (m.minCoeff() <= 0.0) all_positive = false;
    marginals.push_back(json_of_vector(m));
  }
  j["type_marginals"] = marginals;
  if (all_positive) {
    json beliefs = json::array();
    for (int i = 1; i <= g.players(); ++i) {
      const BeliefMatrix bm = belief_matrix(g, i);
      json cols = json::array();
      for (Eigen::Index c = 0; c < bm.columns.cols(); ++c)
        cols.push_back(json_of_vector(bm.columns.col(c)));
      beliefs.push_back(std::move(cols));
    }
    j["beliefs"] = std::move(beliefs);
  }
  if (a.as_json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "players: " << g.players() << "\n";
  out << "type cardinalities:   " << profile_str(g.type_cards) << "\n";
  out << "action cardinalities: " << profile_str(g.action_cards) << "\n";
  for (int i = 1; i <= g.players(); ++i) {
    out << "admissible actions, player " << i << ":";
    for (int t = 1; t <= g.type_cards[static_cast<std::size_t>(i) - 1]; ++t) {
      const auto& set = g.admissible[static_cast<std::size_t>(i) - 1]
                                    [static_cast<std::size_t>(t) - 1];
      out << " type" << t << "->{";
      for (std::size_t k = 0; k < set.size(); ++k)
        out << (k ? "," : "") << set[k];
      out << "}";
    }
    out << "\n";
  }
  for (int i = 1; i <= g.players(); ++i) {
    const RealVector m = marginal_prior(g, i);
    out << "type marginal, player " << i << ": [";
    for (Eigen::Index k = 0; k < m.size(); ++k)
      out << (k ? ", " : "") << fmt(m(k));
    out << "]\n";
  }
  if (all_positive) {
    for (int i = 1; i <= g.players(); ++i) {
      const BeliefMatrix bm = belief_matrix(g, i);
      for (Eigen::Index c = 0; c < bm.columns.cols(); ++c) {
        out << "belief p" << i << "(type " << (c + 1) << "): [";
        for (Eigen::Index r = 0; r < bm.columns.rows(); ++r)
          out << (r ? ", " : "") << fmt(bm.columns(r, c));
        out << "]\n";
      }
    }
  } else {
    out << "note: some type has zero marginal probability; beliefs omitted\n";
  }
  return kOk;
}

int cmd_convert(const CommonArgs& a, const std::string& kind,
                std::ostream& out) {
  const BayesianGame g = load(a);
  json j;
  j["kind"] = kind;
  if (kind == "harsanyi" || kind == "selten") {
    ConvertedGame cg =
        kind == "harsanyi" ? harsanyi_convert(g) : selten_convert(g, a.type_profile);
    if (kind == "selten") j["type_profile"] = a.type_profile;
    json rows = json::array();
    for (const auto& row : cg.game.payoffs) rows.push_back(json_of_row(row));
    j["payoff_vectors"] = std::move(rows);
    if (a.as_json) {
      out << j.dump(2) << "\n";
      return kOk;
    }
    if (kind == "selten")
      out << "Selten conversion at type profile "
          << profile_str(a.type_profile) << "\n";
    else
      out << "Harsanyi conversion\n";
    for (int i = 1; i <= g.players(); ++i)
      print_row(out, "V" + std::to_string(i),
                cg.game.payoffs[static_cast<std::size_t>(i) - 1]);
    out << "\n";
    print_bimatrix(out, cg.game);
    return kOk;
  }
  // Action-type: compact rows, one block per own type.
  const ConvertedGame cg = at_convert(g);
  json rows = json::array();
  for (const auto& row : cg.at_rows) rows.push_back(json_of_row(row));
  j["at_rows"] = std::move(rows);
  if (a.as_json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "Action-type conversion (row i indexed by (t_i, a); block j is the "
         "Selten row for own type j)\n";
  for (int i = 1; i <= g.players(); ++i)
    print_row(out, "V" + std::to_string(i) + "^AT",
              cg.at_rows[static_cast<std::size_t>(i) - 1]);
  return kOk;
}

int cmd_nash(const CommonArgs& a, const std::string& notion,
             std::ostream& out) {
  const BayesianGame g = load(a);
  json j;
  j["notion"] = notion;
  bool empty = false;
  if (notion == "interim") {
    const std::vector<TypeStrategy> eqs = interim_bne(g);
    empty = eqs.empty();
    json list = json::array();
    for (const auto& e : eqs) list.push_back(e.action_for_type);
    j["equilibria"] = std::move(list);
    if (!a.as_json) {
      if (empty) {
        out << "no interim Bayesian-Nash equilibrium\n";
      } else {
        for (const auto& e : eqs) {
          out << "equilibrium:";
          for (int i = 1; i <= g.players(); ++i) {
            out << " player" << i << "[";
            const auto& per_type =
                e.action_for_type[static_cast<std::size_t>(i) - 1];
            for (std::size_t t = 0; t < per_type.size(); ++t)
              out << (t ? "," : "") << "t" << (t + 1) << "->a" << per_type[t];
            out << "]";
          }
          out << "\n";
        }
      }
    }
  } else if (notion == "harsanyi" || notion == "selten") {
    const std::vector<std::vector<int>> eqs =
        notion == "harsanyi" ? h_bne(g) : s_bne(g, a.type_profile);
    empty = eqs.empty();
    j["equilibria"] = eqs;
    if (!a.as_json) {
      if (empty)
        out << "no " << (notion == "harsanyi" ? "H" : "S") << "-BN-E\n";
      for (const auto& e : eqs) out << "equilibrium: " << profile_str(e) << "\n";
    }
  } else {  // at
    const std::vector<AtProfile> eqs = at_bne(g);
    empty = eqs.empty();
    json list = json::array();
    for (const auto& e : eqs)
      list.push_back(json{{"types", e.types}, {"actions", e.actions}});
    j["equilibria"] = std::move(list);
    if (!a.as_json) {
      if (empty) out << "no AT-BN-E\n";
      for (const auto& e : eqs)
        out << "equilibrium: types " << profile_str(e.types) << ", actions "
            << profile_str(e.actions) << "\n";
    }
  }
  if (a.as_json) out << j.dump(2) << "\n";
  return empty ? kNegative : kOk;
}

int cmd_potential(const CommonArgs& a, const std::string& notion,
                  std::ostream& out) {
  const BayesianGame g = load(a);
  BayesPotentialReport rep;
  if (notion == "tn")
    rep = tn_potential(g);
  else if (notion == "th")
    rep = th_potential(g);
  else if (notion == "harsanyi")
    rep = harsanyi_potential(g);
  else if (notion == "selten")
    rep = selten_potential(g, a.type_profile);
  else
    rep = at_potential(g);

  json j;
  j["notion"] = notion;
  if (notion == "selten") j["type_profile"] = a.type_profile;
  j["applicable"] = rep.applicable;
  j["is_potential"] = rep.is_potential;
  j["residual"] = rep.residual;
  if (rep.is_potential) j["potential"] = json_of_potential(rep.potential);
  if (a.as_json) out << j.dump(2) << "\n";

  if (!rep.applicable) {
    if (!a.as_json)
      out << "not applicable: the finite region is not a full product box\n";
    return kInfeasible;
  }
  if (!a.as_json) {
    out << (rep.is_potential ? "potential: yes" : "potential: no")
        << " (residual " << fmt(rep.residual) << ")\n";
    if (rep.is_potential) {
      out << "potential vector: [";
      for (Eigen::Index i = 0; i < rep.potential.size(); ++i)
        out << (i ? ", " : "")
            << (std::isnan(rep.potential(i)) ? std::string("null")
                                             : fmt(rep.potential(i)));
      out << "]\n";
    }
  }
  return rep.is_potential ? kOk : kNegative;
}

ConvertedGame make_conversion(const BayesianGame& g, const std::string& name,
                              const CommonArgs& a, SurConfig* cfg) {
  if (name == "selten") return selten_convert(g, a.type_profile);
  cfg->at_style = name == "at-separate" ? AtUpdateStyle::Separate
                                        : AtUpdateStyle::Concurrent;
  return at_convert(g);
}

Schedule schedule_of(const std::string& mode) {
  if (mode == "sync") return Schedule::Synchronous;
  if (mode == "rr") return Schedule::AsyncRoundRobin;
  return Schedule::AsyncUniform;
}

std::vector<int> decode_dynamics_state(const ConvertedGame& cg,
                                       const ProfileSpace& space, int state) {
  // Selten: action profile. ActionType: t1,a1,...,tn,an.
  const std::vector<int> coords = space.unindex(state);
  if (cg.kind == ConvertedGame::Kind::Selten) return coords;
  std::vector<int> out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const int ri = cg.action_cards[i];
    out.push_back((coords[i] - 1) / ri + 1);
    out.push_back((coords[i] - 1) % ri + 1);
  }
  return out;
}

int encode_dynamics_state(const ConvertedGame& cg, const ProfileSpace& space,
                          const std::vector<int>& init) {
  const int n = static_cast<int>(cg.action_cards.size());
  if (cg.kind == ConvertedGame::Kind::Selten) {
    if (static_cast<int>(init.size()) != n)
      throw ValidationError("init: expected " + std::to_string(n) +
                            " action indices");
    return static_cast<int>(space.index(init));
  }
  if (static_cast<int>(init.size()) != 2 * n)
    throw ValidationError("init: expected " + std::to_string(2 * n) +
                          " indices (t1,a1,...,tn,an)");
  std::vector<int> coords(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int t = init[static_cast<std::size_t>(2 * i)];
    const int act = init[static_cast<std::size_t>(2 * i + 1)];
    const int taui = cg.type_cards[static_cast<std::size_t>(i)];
    const int ri = cg.action_cards[static_cast<std::size_t>(i)];
    if (t < 1 || t > taui || act < 1 || act > ri)
      throw ValidationError("init: coordinate outside range for player " +
                            std::to_string(i + 1));
    coords[static_cast<std::size_t>(i)] = (t - 1) * ri + act;
  }
  return static_cast<int>(space.index(coords));
}

int cmd_simulate(const CommonArgs& a, const std::string& conversion,
                 const std::string& sur, double lambda,
                 const std::string& mode, int steps, std::uint64_t seed,
                 std::vector<int> init, std::ostream& out) {
  const BayesianGame g = load(a);
  SurConfig cfg;
  cfg.lambda = lambda;
  cfg.schedule = schedule_of(mode);
  const ConvertedGame cg = make_conversion(g, conversion, a, &cfg);
  const TransitionSystem sys =
      sur == "mbra" ? mbra_map(cg, cfg) : logit_matrix(cg, cfg);
  const ProfileSpace space = dynamics_state_space(cg);

  if (init.empty())
    init.assign(cg.kind == ConvertedGame::Kind::Selten
                    ? cg.action_cards.size()
                    : 2 * cg.action_cards.size(),
                1);
  const int x0 = encode_dynamics_state(cg, space, init);
  const std::vector<int> traj = simulate(sys, x0, steps, seed);

  json j;
  j["conversion"] = conversion;
  j["sur"] = sur;
  j["mode"] = mode;
  j["seed"] = seed;
  j["states"] = traj;
  json profiles = json::array();
  for (int s : traj) profiles.push_back(decode_dynamics_state(cg, space, s));
  j["profiles"] = std::move(profiles);
  if (a.as_json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t k = 0; k < traj.size(); ++k)
    out << "step " << k << ": state " << traj[k] << " "
        << profile_str(decode_dynamics_state(cg, space, traj[k])) << "\n";
  return kOk;
}

int cmd_stationary(const CommonArgs& a, const std::string& conversion,
                   double lambda, const std::string& mode, std::ostream& out) {
  const BayesianGame g = load(a);
  SurConfig cfg;
  cfg.lambda = lambda;
  cfg.schedule = schedule_of(mode);
  const ConvertedGame cg = make_conversion(g, conversion, a, &cfg);
  const TransitionSystem sys = logit_matrix(cg, cfg);
  // Round-robin passes are analyzed through their one-round product chain.
  const TransitionMatrix chain =
      sys.single_step() ? sys.matrix() : sys.round();
  const StationaryResult res = stationary_distribution(chain);
  const ProfileSpace space = dynamics_state_space(cg);

  json j;
  j["conversion"] = conversion;
  j["mode"] = mode;
  j["lambda"] = lambda;
  j["converged"] = res.converged;
  j["irreducible"] = res.irreducible;
  j["iterations"] = res.iterations;
  j["distribution"] = json_of_vector(res.distribution);
  json margins = json::array();
  for (int i = 1; i <= space.players(); ++i)
    margins.push_back(json_of_vector(marginal(res.distribution, i, space)));
  j["state_marginals"] = std::move(margins);
  if (a.as_json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << (res.converged ? "converged" : "did not converge") << " after "
      << res.iterations << " iterations\n";
  if (!res.irreducible)
    out << "warning: chain is reducible; the stationary law may not be "
           "unique\n";
  for (int s = 1; s <= static_cast<int>(space.total()); ++s)
    out << "state " << s << " "
        << profile_str(decode_dynamics_state(cg, space, s)) << ": "
        << fmt(res.distribution(s - 1)) << "\n";
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Semi-tensor-product toolkit for finite Bayesian games"};
  app.require_subcommand(1);

  CommonArgs common;
  app.add_flag("--json", common.as_json, "machine-readable output");
  std::string kind, notion, conversion, sur = "mbra", mode = "sync";
  double lambda = 1.0;
  int steps = 20;
  std::uint64_t seed = 0;
  std::vector<int> init;

  const auto add_common = [&common](CLI::App* sub, bool with_type_profile) {
    sub->add_flag("--json", common.as_json, "machine-readable output");
    if (with_type_profile)
      sub->add_option("--type-profile", common.type_profile,
                      "fixed type profile t1,...,tn (1-based)")
          ->delimiter(',');
    sub->add_option("file", common.file, "game description file")->required();
  };

  CLI::App* info = app.add_subcommand("info", "describe a game file");
  add_common(info, false);

  CLI::App* convert =
      app.add_subcommand("convert", "complete-information conversions");
  convert->add_option("--kind", kind, "harsanyi|selten|at")
      ->required()
      ->check(CLI::IsMember({"harsanyi", "selten", "at"}));
  add_common(convert, true);

  CLI::App* nash = app.add_subcommand("nash", "equilibrium enumeration");
  nash->add_option("--notion", notion, "interim|harsanyi|selten|at")
      ->required()
      ->check(CLI::IsMember({"interim", "harsanyi", "selten", "at"}));
  add_common(nash, true);

  CLI::App* potential = app.add_subcommand("potential", "potential-game tests");
  potential->add_option("--notion", notion, "tn|th|harsanyi|selten|at")
      ->required()
      ->check(CLI::IsMember({"tn", "th", "harsanyi", "selten", "at"}));
  add_common(potential, true);

  CLI::App* sim = app.add_subcommand("simulate", "repeated-game trajectory");
  sim->add_option("--conversion", conversion, "selten|at-concurrent|at-separate")
      ->required()
      ->check(CLI::IsMember({"selten", "at-concurrent", "at-separate"}));
  sim->add_option("--sur", sur, "mbra|logit")
      ->check(CLI::IsMember({"mbra", "logit"}));
  sim->add_option("--lambda", lambda, "logit inverse temperature");
  sim->add_option("--mode", mode, "sync|rr|uniform")
      ->check(CLI::IsMember({"sync", "rr", "uniform"}));
  sim->add_option("--steps", steps, "number of updating steps");
  sim->add_option("--seed", seed, "RNG seed");
  sim->add_option("--init", init, "initial state coordinates")->delimiter(',');
  add_common(sim, true);

  CLI::App* stat =
      app.add_subcommand("stationary", "stationary distribution of a logit chain");
  stat->add_option("--conversion", conversion, "selten|at-concurrent|at-separate")
      ->required()
      ->check(CLI::IsMember({"selten", "at-concurrent", "at-separate"}));
  stat->add_option("--sur", sur, "logit")->check(CLI::IsMember({"logit"}));
  stat->add_option("--lambda", lambda, "logit inverse temperature");
  stat->add_option("--mode", mode, "sync|rr|uniform")
      ->check(CLI::IsMember({"sync", "rr", "uniform"}));
  add_common(stat, true);

  std::vector<const char*> argv;
  argv.push_back("stpg");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto needs_type_profile = [&](const std::string& what) {
    if (common.type_profile.empty())
      throw ValidationError("--type-profile is required for " + what);
  };

  try {
    if (info->parsed()) return cmd_info(common, out);
    if (convert->parsed()) {
      if (kind == "selten") needs_type_profile("the Selten conversion");
      return cmd_convert(common, kind, out);
    }
    if (nash->parsed()) {
      if (notion == "selten") needs_type_profile("the Selten notion");
      return cmd_nash(common, notion, out);
    }
    if (potential->parsed()) {
      if (notion == "selten") needs_type_profile("the Selten notion");
      return cmd_potential(common, notion, out);
    }
    if (sim->parsed()) {
      if (conversion == "selten") needs_type_profile("the Selten conversion");
      return cmd_simulate(common, conversion, sur, lambda, mode, steps, seed,
                          init, out);
    }
    if (stat->parsed()) {
      if (conversion == "selten") needs_type_profile("the Selten conversion");
      return cmd_stationary(common, conversion, lambda, mode, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ZeroProbabilityTypeError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InfeasibleUpdateError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InfinitePayoffError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace stpg
