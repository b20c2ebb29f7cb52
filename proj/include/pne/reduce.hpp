#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pne/games.hpp"
#include "pne/solvers.hpp"

namespace pne {

// Per-edge symmetry (C(0,1) = C(1,0)) and submodularity
// (C(0,1) + C(1,0) >= C(0,0) + C(1,1)) of a two-strategy coordination game.
struct SubmodularityReport {
  struct EdgeFlags {
    bool symmetric = true;
    bool submodular = true;
  };
  struct Violation {
    std::size_t edge = 0;
    PlayerIndex u = 0, v = 0;
    bool symmetry_failed = false;  // else submodularity failed

    std::string describe() const {
      return std::string(symmetry_failed ? "symmetry" : "submodularity") + " fails on edge " +
             std::to_string(edge) + " (" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
  };

  std::vector<EdgeFlags> edges;  // parallel to the game's edge list
  std::optional<Violation> first_violation;

  bool all_pass() const { return !first_violation.has_value(); }
};

inline SubmodularityReport check_symmetric_submodular(const Ncg& g) {
  for (PlayerIndex i = 0; i < g.graph.player_count(); ++i)
    if (g.strategy_sets[i] != 2)
      throw Error("submodularity check: player " + std::to_string(i) + " has " +
                  std::to_string(g.strategy_sets[i]) + " strategies, need exactly 2");

  SubmodularityReport report;
  report.edges.resize(g.graph.edges().size());
  for (std::size_t k = 0; k < g.graph.edges().size(); ++k) {
    const auto& c = g.edge_costs[k];
    auto& flags = report.edges[k];
    flags.symmetric = c[0][1] == c[1][0];
    flags.submodular = c[0][1] + c[1][0] >= c[0][0] + c[1][1];
    if (!report.first_violation && !(flags.symmetric && flags.submodular)) {
      report.first_violation = SubmodularityReport::Violation{
          k, g.graph.edges()[k].u, g.graph.edges()[k].v, !flags.symmetric};
    }
  }
  return report;
}

// Rewrites a penalty game as a coordination game on the same graph: each
// player's strategy set becomes the metric point set, and the edge cost
// spreads each endpoint's penalty term over her incident edges,
//   C_{u,v}(s,t) = P_u(s)/deg(u) + P_v(t)/deg(v) + w_e d(s,t),
// where P_k(s) = sum_x p_k(x) d(x,s). Potentials agree pointwise.
inline Ncg dpg_to_ncg(const DpgPenalty& g) {
  const PlayerIndex n = g.graph.player_count();
  const std::uint32_t m = static_cast<std::uint32_t>(g.metric.point_count());
  for (PlayerIndex k = 0; k < n; ++k)
    if (g.graph.degree(k) == 0) throw Error("reduction undefined for degree-0 players");

  // P[k][s]: player k's penalty cost for sitting at point s.
  std::vector<std::vector<Rational>> P(n, std::vector<Rational>(m, 0));
  for (PlayerIndex k = 0; k < n; ++k)
    for (std::uint32_t u = 0; u < m; ++u) {
      if (g.penalties[k][u] == 0) continue;
      for (std::uint32_t s = 0; s < m; ++s) P[k][s] += g.penalties[k][u] * g.metric.dist(u, s);
    }

  std::vector<std::vector<std::vector<Rational>>> edge_costs;
  edge_costs.reserve(g.graph.edges().size());
  for (std::size_t k = 0; k < g.graph.edges().size(); ++k) {
    const Edge e = g.graph.edges()[k];
    const Rational wu = Rational(1) / g.graph.degree(e.u);
    const Rational wv = Rational(1) / g.graph.degree(e.v);
    std::vector<std::vector<Rational>> c(m, std::vector<Rational>(m));
    for (std::uint32_t su = 0; su < m; ++su)
      for (std::uint32_t sv = 0; sv < m; ++sv)
        c[su][sv] =
            wu * P[e.u][su] + wv * P[e.v][sv] + g.graph.weight(k) * g.metric.dist(su, sv);
    edge_costs.push_back(std::move(c));
  }

  return Ncg(PlayerGraph(n, g.graph.edges()), std::vector<std::uint32_t>(n, m),
             std::move(edge_costs));
}

// Inverse direction for symmetric submodular two-strategy games: a penalty
// game on the two-point path metric with d(0,1) = 1/2,
//   w_e = C_e(0,1) + C_e(1,0) - C_e(0,0) - C_e(1,1)   (>= 0 by the report),
//   p_i(s) = sum over incident edges of C_e(1-s, 1-s).
// Strategies map by identity. Potentials agree pointwise.
inline DpgPenalty ncg_to_dpg(const Ncg& g, const SubmodularityReport& report) {
  if (report.edges.size() != g.graph.edges().size())
    throw Error("reduction: report does not cover this game's edges");
  if (!report.all_pass())
    throw Error("reduction: " + report.first_violation->describe());

  const PlayerIndex n = g.graph.player_count();
  FiniteMetric metric = build_graph_metric(PlayerGraph(2, {{0, 1}}, {{Rational(1, 2)}}));

  std::vector<Rational> weights;
  weights.reserve(g.graph.edges().size());
  for (const auto& c : g.edge_costs) weights.push_back(c[0][1] + c[1][0] - c[0][0] - c[1][1]);

  std::vector<std::vector<Rational>> penalties(n, std::vector<Rational>(2, 0));
  for (std::size_t k = 0; k < g.graph.edges().size(); ++k) {
    const Edge e = g.graph.edges()[k];
    for (std::uint32_t s = 0; s < 2; ++s) {
      penalties[e.u][s] += g.edge_costs[k][1 - s][1 - s];
      penalties[e.v][s] += g.edge_costs[k][1 - s][1 - s];
    }
  }

  return DpgPenalty(PlayerGraph(n, g.graph.edges(), std::move(weights)), std::move(metric),
                    std::move(penalties));
}

struct NcgSolveResult {
  Profile profile;
  std::uint64_t moves = 0;  // improving moves made by the two-strategy solver
};

// End-to-end equilibrium computation for symmetric submodular two-strategy
// coordination games: reduce to a penalty game, run the two-strategy
// solver, map back by identity. The output is re-verified on the original
// game, not assumed correct.
inline NcgSolveResult solve_ncg_symsub(const Ncg& g) {
  SubmodularityReport report = check_symmetric_submodular(g);
  if (!report.all_pass()) throw Error("ncg solve: " + report.first_violation->describe());
  DpgPenalty dpg = ncg_to_dpg(g, report);
  TwoStrategyResult r = solve_two_strategy(dpg);
  if (!is_pne(g, r.profile))
    throw Error("ncg solve: reduced solution failed PNE verification on the input game");
  return {std::move(r.profile), r.moves};
}

}  // namespace pne
