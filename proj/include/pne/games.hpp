#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pne/core.hpp"
#include "pne/error.hpp"
#include "pne/metric.hpp"
#include "pne/rational.hpp"

namespace pne {

// Discrete preference game with a parameter: every player shares the metric's
// point set as her strategy set and pays
//   c_i(x) = alpha * d(x_i, beta_i) + (1 - alpha) * sum_{j in N(i)} d(x_i, x_j).
struct DpgParam {
  DpgParam(PlayerGraph graph_, FiniteMetric metric_, std::vector<StrategyIndex> beta_,
           Rational alpha_)
      : graph(std::move(graph_)),
        metric(std::move(metric_)),
        beta(std::move(beta_)),
        alpha(std::move(alpha_)) {
    if (graph.is_weighted()) throw Error("dpg_param: graph must be unweighted");
    if (beta.size() != graph.player_count())
      throw Error("dpg_param: beta must have one entry per player");
    for (auto b : beta)
      if (b >= metric.point_count()) throw Error("dpg_param: preferred strategy out of range");
    if (alpha < 0 || alpha >= 1) throw Error("dpg_param: alpha must satisfy 0 <= alpha < 1");
  }

  PlayerGraph graph;
  FiniteMetric metric;
  std::vector<StrategyIndex> beta;
  Rational alpha;

  friend bool operator==(const DpgParam& a, const DpgParam& b) {
    return a.graph == b.graph && a.metric == b.metric && a.beta == b.beta && a.alpha == b.alpha;
  }
};

// Discrete preference game with penalties:
//   c_i(x) = sum_{s in L} p_i(s) d(x_i, s) + sum_{j in N(i)} w_ij d(x_i, x_j).
struct DpgPenalty {
  DpgPenalty(PlayerGraph graph_, FiniteMetric metric_,
             std::vector<std::vector<Rational>> penalties_)
      : graph(std::move(graph_)), metric(std::move(metric_)), penalties(std::move(penalties_)) {
    if (penalties.size() != graph.player_count())
      throw Error("dpg_penalty: penalty table must have one row per player");
    for (const auto& row : penalties) {
      if (row.size() != metric.point_count())
        throw Error("dpg_penalty: penalty row must cover every strategy");
      for (const auto& p : row)
        if (p < 0) throw Error("dpg_penalty: negative penalty");
    }
  }

  PlayerGraph graph;
  FiniteMetric metric;
  std::vector<std::vector<Rational>> penalties;  // player x point

  friend bool operator==(const DpgPenalty& a, const DpgPenalty& b) {
    return a.graph == b.graph && a.metric == b.metric && a.penalties == b.penalties;
  }
};

// Network coordination game. Each edge carries one cost table stored from the
// lower endpoint's perspective; the other endpoint reads it transposed, which
// makes the symmetry C_ij(x_i, x_j) = C_ji(x_j, x_i) hold by construction.
struct Ncg {
  Ncg(PlayerGraph graph_, std::vector<std::uint32_t> strategy_sets_,
      std::vector<std::vector<std::vector<Rational>>> edge_costs_)
      : graph(std::move(graph_)),
        strategy_sets(std::move(strategy_sets_)),
        edge_costs(std::move(edge_costs_)) {
    if (graph.is_weighted()) throw Error("ncg: graph weights are not used; omit them");
    if (strategy_sets.size() != graph.player_count())
      throw Error("ncg: strategy_sets must have one entry per player");
    for (auto s : strategy_sets)
      if (s == 0) throw Error("ncg: empty strategy set");
    if (edge_costs.size() != graph.edges().size())
      throw Error("ncg: edge_costs must be parallel to the edge list");
    for (std::size_t k = 0; k < edge_costs.size(); ++k) {
      const Edge& e = graph.edges()[k];
      const auto& table = edge_costs[k];
      if (table.size() != strategy_sets[e.u])
        throw Error("ncg: cost table rows must match |S_" + std::to_string(e.u) + "|");
      for (const auto& row : table) {
        if (row.size() != strategy_sets[e.v])
          throw Error("ncg: cost table columns must match |S_" + std::to_string(e.v) + "|");
        for (const auto& c : row)
          if (c < 0) throw Error("ncg: negative edge cost");
      }
    }
  }

  PlayerGraph graph;
  std::vector<std::uint32_t> strategy_sets;
  std::vector<std::vector<std::vector<Rational>>> edge_costs;  // per edge: |S_u| x |S_v|

  // Cost of edge k as seen from player i playing si against sj.
  const Rational& edge_cost_from(std::size_t k, PlayerIndex i, StrategyIndex si,
                                 StrategyIndex sj) const {
    return graph.edges()[k].u == i ? edge_costs[k][si][sj] : edge_costs[k][sj][si];
  }

  friend bool operator==(const Ncg& a, const Ncg& b) {
    return a.graph == b.graph && a.strategy_sets == b.strategy_sets &&
           a.edge_costs == b.edge_costs;
  }
};

using Game = std::variant<DpgParam, DpgPenalty, Ncg>;

inline std::uint32_t strategy_count(const DpgParam& g, PlayerIndex) {
  return static_cast<std::uint32_t>(g.metric.point_count());
}
inline std::uint32_t strategy_count(const DpgPenalty& g, PlayerIndex) {
  return static_cast<std::uint32_t>(g.metric.point_count());
}
inline std::uint32_t strategy_count(const Ncg& g, PlayerIndex i) { return g.strategy_sets[i]; }
inline std::uint32_t strategy_count(const Game& g, PlayerIndex i) {
  return std::visit([i](const auto& gg) { return strategy_count(gg, i); }, g);
}

inline PlayerIndex player_count(const Game& g) {
  return std::visit([](const auto& gg) { return gg.graph.player_count(); }, g);
}

template <class G>
inline void check_profile(const G& g, const Profile& x) {
  PlayerIndex n = 0;
  if constexpr (std::is_same_v<G, Game>)
    n = player_count(g);
  else
    n = g.graph.player_count();
  if (x.size() != n) throw Error("profile: wrong length");
  for (PlayerIndex i = 0; i < n; ++i)
    if (x[i] >= strategy_count(g, i))
      throw Error("profile: strategy out of range for player " + std::to_string(i));
}

// Cost for player i if she plays y while everyone else keeps x. The common
// primitive behind player_cost, best responses and deviation scans; it never
// copies the profile.
inline Rational player_cost_with(const DpgParam& g, const Profile& x, PlayerIndex i,
                                 StrategyIndex y) {
  Rational neighbor_sum = 0;
  for (auto [j, k] : g.graph.neighbors(i)) neighbor_sum += g.metric.dist(y, x[j]);
  return g.alpha * g.metric.dist(y, g.beta[i]) + (1 - g.alpha) * neighbor_sum;
}

inline Rational player_cost_with(const DpgPenalty& g, const Profile& x, PlayerIndex i,
                                 StrategyIndex y) {
  Rational cost = 0;
  for (std::size_t s = 0; s < g.metric.point_count(); ++s)
    if (g.penalties[i][s] != 0) cost += g.penalties[i][s] * g.metric.dist(y, s);
  for (auto [j, k] : g.graph.neighbors(i)) cost += g.graph.weight(k) * g.metric.dist(y, x[j]);
  return cost;
}

inline Rational player_cost_with(const Ncg& g, const Profile& x, PlayerIndex i, StrategyIndex y) {
  Rational cost = 0;
  for (auto [j, k] : g.graph.neighbors(i)) cost += g.edge_cost_from(k, i, y, x[j]);
  return cost;
}

inline Rational player_cost_with(const Game& g, const Profile& x, PlayerIndex i, StrategyIndex y) {
  return std::visit([&](const auto& gg) { return player_cost_with(gg, x, i, y); }, g);
}

template <class G>
inline Rational player_cost(const G& g, const Profile& x, PlayerIndex i) {
  check_profile(g, x);
  if constexpr (std::is_same_v<G, Game>) {
    if (i >= player_count(g)) throw Error("player_cost: player index out of range");
  } else {
    if (i >= g.graph.player_count()) throw Error("player_cost: player index out of range");
  }
  return player_cost_with(g, x, i, x[i]);
}

// Exact potential functions: Phi for the two DPG kinds, Phi' = sum of edge
// costs for NCGs.
inline Rational potential(const DpgParam& g, const Profile& x) {
  Rational acc = 0;
  for (PlayerIndex i = 0; i < g.graph.player_count(); ++i)
    acc += g.alpha * g.metric.dist(x[i], g.beta[i]);
  for (const Edge& e : g.graph.edges()) acc += (1 - g.alpha) * g.metric.dist(x[e.u], x[e.v]);
  return acc;
}

inline Rational potential(const DpgPenalty& g, const Profile& x) {
  Rational acc = 0;
  for (PlayerIndex i = 0; i < g.graph.player_count(); ++i)
    for (std::size_t s = 0; s < g.metric.point_count(); ++s)
      if (g.penalties[i][s] != 0) acc += g.penalties[i][s] * g.metric.dist(s, x[i]);
  for (std::size_t k = 0; k < g.graph.edges().size(); ++k) {
    const Edge& e = g.graph.edges()[k];
    acc += g.graph.weight(k) * g.metric.dist(x[e.u], x[e.v]);
  }
  return acc;
}

inline Rational potential(const Ncg& g, const Profile& x) {
  Rational acc = 0;
  for (std::size_t k = 0; k < g.graph.edges().size(); ++k) {
    const Edge& e = g.graph.edges()[k];
    acc += g.edge_costs[k][x[e.u]][x[e.v]];
  }
  return acc;
}

inline Rational potential(const Game& g, const Profile& x) {
  return std::visit([&](const auto& gg) { return potential(gg, x); }, g);
}

// Witness of a strictly improving unilateral move.
struct Deviation {
  PlayerIndex player = 0;
  StrategyIndex from = 0;
  StrategyIndex to = 0;
  Rational old_cost;
  Rational new_cost;
};

// Lowest player index, then lowest improving strategy index.
template <class G>
inline std::optional<Deviation> find_deviation(const G& g, const Profile& x) {
  check_profile(g, x);
  const PlayerIndex n = static_cast<PlayerIndex>(x.size());
  for (PlayerIndex i = 0; i < n; ++i) {
    const Rational current = player_cost_with(g, x, i, x[i]);
    for (StrategyIndex y = 0; y < strategy_count(g, i); ++y) {
      if (y == x[i]) continue;
      Rational candidate = player_cost_with(g, x, i, y);
      if (candidate < current)
        return Deviation{i, x[i], y, current, std::move(candidate)};
    }
  }
  return std::nullopt;
}

template <class G>
inline bool is_pne(const G& g, const Profile& x) {
  return !find_deviation(g, x).has_value();
}

// A strategy minimizing player i's cost against x_{-i}; ties break to the
// lowest strategy index.
template <class G>
inline StrategyIndex best_response(const G& g, const Profile& x, PlayerIndex i) {
  check_profile(g, x);
  StrategyIndex best = 0;
  Rational best_cost = player_cost_with(g, x, i, 0);
  for (StrategyIndex y = 1; y < strategy_count(g, i); ++y) {
    Rational candidate = player_cost_with(g, x, i, y);
    if (candidate < best_cost) {
      best = y;
      best_cost = std::move(candidate);
    }
  }
  return best;
}

namespace detail {

// Best response of player i together with her cost drop, but only when it
// strictly beats her current strategy.
template <class G>
inline std::optional<std::pair<StrategyIndex, Rational>> improving_best_response(const G& g,
                                                                                 const Profile& x,
                                                                                 PlayerIndex i) {
  const Rational current = player_cost_with(g, x, i, x[i]);
  StrategyIndex best = x[i];
  Rational best_cost = current;
  for (StrategyIndex y = 0; y < strategy_count(g, i); ++y) {
    if (y == x[i]) continue;
    Rational candidate = player_cost_with(g, x, i, y);
    if (candidate < best_cost) {
      best = y;
      best_cost = std::move(candidate);
    }
  }
  if (best == x[i]) return std::nullopt;
  return std::make_pair(best, current - best_cost);
}

}  // namespace detail

}  // namespace pne
