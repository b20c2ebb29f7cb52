#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pne/games.hpp"
#include "pne/solvers.hpp"

namespace pne {

// Per-axis preferred components: per_axis[t][i_t] is the factor-strategy
// preferred by every grid player whose t-th coordinate is i_t. Existence of
// this table is exactly condition (B).
struct AxisPreference {
  std::vector<std::vector<StrategyIndex>> per_axis;
};

struct ConditionBViolation {
  std::uint32_t axis = 0;        // 0-based
  std::uint32_t coordinate = 0;  // 0-based along that axis
  PlayerIndex player_a = 0;      // two players sharing the coordinate but
  PlayerIndex player_b = 0;      // preferring different components

  std::string describe() const {
    return "condition (B) violated: axis " + std::to_string(axis) + ", coordinate " +
           std::to_string(coordinate) + ", players " + std::to_string(player_a) + " and " +
           std::to_string(player_b) + " prefer different components";
  }
};

// A decomposition of one game into factor games. CartesianFactors: factor
// games on their own player sets, composing over tuple players (grid
// pipeline). AxisSubgames: one subgame per metric axis on the SAME player
// set (product-metric penalty decomposition).
enum class FamilyKind { CartesianFactors, AxisSubgames };

struct SubgameFamily {
  FamilyKind kind;
  std::vector<Game> factors;
  ProductIndex strategy_index;    // product point <-> factor point tuple
  std::optional<Rational> alpha;  // shared alpha, when the factors carry one
  Game composite;                 // the game that was decomposed
};

// ---------------------------------------------------------------------------
// Cartesian products of parameterized games (grid pipeline).

inline DpgParam cartesian_game(const std::vector<DpgParam>& factors) {
  if (factors.empty()) throw Error("cartesian game: no factors");
  for (const auto& f : factors)
    if (f.alpha != factors[0].alpha) throw Error("cartesian game: factors disagree on alpha");

  std::vector<PlayerGraph> graphs;
  std::vector<FiniteMetric> metrics;
  std::vector<std::uint32_t> player_dims;
  for (const auto& f : factors) {
    graphs.push_back(f.graph);
    metrics.push_back(f.metric);
    player_dims.push_back(f.graph.player_count());
  }
  ProductGraph product = cartesian_graph_product(graphs);
  auto [metric, strategy_index] = build_product(std::move(metrics), Ell::finite(1));

  TupleIndex player_index(player_dims);
  std::vector<StrategyIndex> beta(player_index.size());
  std::vector<std::uint32_t> components(factors.size());
  for (std::size_t v = 0; v < player_index.size(); ++v) {
    const auto coords = player_index.tuple(v);
    for (std::size_t t = 0; t < factors.size(); ++t)
      components[t] = factors[t].beta[coords[t]];
    beta[v] = static_cast<StrategyIndex>(strategy_index.flat(components));
  }
  return DpgParam(std::move(product.graph), std::move(metric), std::move(beta),
                  factors[0].alpha);
}

// Composes factor equilibria into a profile of the cartesian game: player
// (i_1,...,i_k) plays the tuple of her factor strategies. The result is a
// PNE of the product game; that is re-verified, not assumed.
inline Profile compose_pne(const std::vector<DpgParam>& factors,
                           const std::vector<Profile>& factor_pnes) {
  if (factors.size() != factor_pnes.size())
    throw Error("compose: need one profile per factor");
  for (std::size_t t = 0; t < factors.size(); ++t)
    if (!is_pne(factors[t], factor_pnes[t]))
      throw Error("compose: factor " + std::to_string(t) + " profile is not a PNE");

  DpgParam product = cartesian_game(factors);
  const ProductIndex& strategy_index = product.metric.product_info().index;
  std::vector<std::uint32_t> player_dims;
  for (const auto& f : factors) player_dims.push_back(f.graph.player_count());
  TupleIndex player_index(player_dims);

  Profile x(player_index.size());
  std::vector<std::uint32_t> components(factors.size());
  for (std::size_t v = 0; v < player_index.size(); ++v) {
    const auto coords = player_index.tuple(v);
    for (std::size_t t = 0; t < factors.size(); ++t)
      components[t] = factor_pnes[t][coords[t]];
    x[v] = static_cast<StrategyIndex>(strategy_index.flat(components));
  }
  if (!is_pne(product, x))
    throw Error("compose: composed profile failed PNE verification on the product game");
  return x;
}

// ---------------------------------------------------------------------------
// Grid games: conditions (A)/(B), decomposition, solving.

inline std::variant<AxisPreference, ConditionBViolation> check_condition_b(const DpgParam& game,
                                                                           const GridSpec& grid) {
  if (!(game.graph == build_grid_graph(grid)))
    throw Error("grid: game graph does not match the grid dims");
  if (!game.metric.is_product())
    throw Error("grid: condition (A) needs a product metric with explicit factors");
  const ProductIndex& sidx = game.metric.product_info().index;
  if (sidx.axes() != grid.dims().size())
    throw Error("grid: metric factor count does not match grid axis count");

  const std::size_t k = grid.dims().size();
  AxisPreference pref;
  pref.per_axis.resize(k);
  std::vector<std::vector<std::optional<StrategyIndex>>> seen(k);
  std::vector<std::vector<PlayerIndex>> first_player(k);
  for (std::size_t t = 0; t < k; ++t) {
    seen[t].resize(grid.dims()[t]);
    first_player[t].resize(grid.dims()[t]);
  }

  for (std::size_t v = 0; v < grid.player_count(); ++v) {
    const auto beta_components = sidx.tuple(game.beta[v]);
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint32_t c = grid.index.coordinate(v, t);
      if (!seen[t][c]) {
        seen[t][c] = beta_components[t];
        first_player[t][c] = static_cast<PlayerIndex>(v);
      } else if (*seen[t][c] != beta_components[t]) {
        return ConditionBViolation{static_cast<std::uint32_t>(t), c, first_player[t][c],
                                   static_cast<PlayerIndex>(v)};
      }
    }
  }
  for (std::size_t t = 0; t < k; ++t) {
    pref.per_axis[t].reserve(grid.dims()[t]);
    for (std::uint32_t c = 0; c < grid.dims()[t]; ++c) pref.per_axis[t].push_back(*seen[t][c]);
  }
  return pref;
}

// Splits a condition-(A)/(B) grid game into one path game per axis:
// factor t lives on the path P_{M_t}, the t-th factor metric, preferences
// beta^t, and the shared alpha.
inline SubgameFamily decompose_grid(const DpgParam& game, const GridSpec& grid,
                                    const AxisPreference& pref) {
  const auto& info = game.metric.product_info();
  if (info.ell != Ell::finite(1))
    throw Error("grid: condition (A) violated: metric is not a 1-product (ell=" +
                info.ell.to_string() + ")");
  if (pref.per_axis.size() != grid.dims().size())
    throw Error("grid: axis preference does not match grid axis count");

  SubgameFamily family{FamilyKind::CartesianFactors, {}, info.index, game.alpha, Game(game)};
  for (std::size_t t = 0; t < grid.dims().size(); ++t) {
    family.factors.emplace_back(DpgParam(build_grid_graph(GridSpec({grid.dims()[t]})),
                                         info.factors[t], pref.per_axis[t], game.alpha));
  }
  return family;
}

// Grid pipeline: under conditions (A) and (B), solve each path factor by
// potential-minimizing DP and compose. Output is verified on the input
// game, not assumed correct.
inline Profile solve_grid(const DpgParam& game, const GridSpec& grid) {
  auto checked = check_condition_b(game, grid);
  if (std::holds_alternative<ConditionBViolation>(checked))
    throw Error("grid: " + std::get<ConditionBViolation>(checked).describe());
  SubgameFamily family = decompose_grid(game, grid, std::get<AxisPreference>(checked));

  std::vector<DpgParam> factors;
  std::vector<Profile> pnes;
  for (const auto& f : family.factors) {
    factors.push_back(std::get<DpgParam>(f));
    pnes.push_back(solve_path_dp(factors.back()));
  }
  Profile x = compose_pne(factors, pnes);
  if (!is_pne(game, x))
    throw Error("grid: composed profile failed PNE verification on the input game");
  return x;
}

// ---------------------------------------------------------------------------
// Product-metric penalty decomposition (axis subgames).

// Penalty encoding of a parameterized game: a single penalty alpha on the
// preferred strategy and uniform edge weights (1 - alpha). Player costs are
// identical term by term.
inline DpgPenalty to_penalty_form(const DpgParam& g) {
  const PlayerIndex n = g.graph.player_count();
  std::vector<std::vector<Rational>> penalties(n,
                                               std::vector<Rational>(g.metric.point_count(), 0));
  for (PlayerIndex i = 0; i < n; ++i) penalties[i][g.beta[i]] = g.alpha;
  std::vector<Rational> weights(g.graph.edges().size(), 1 - g.alpha);
  PlayerGraph weighted(n, g.graph.edges(), std::move(weights));
  return DpgPenalty(std::move(weighted), g.metric, std::move(penalties));
}

// The t-th subgame keeps the whole player graph, restricts the metric to
// factor t, and marginalizes penalties: q_i^t(s) = sum of p_i(u) over
// product points u whose t-th coordinate is s. The split itself does not
// depend on ell; only the exactness of psi does.
inline SubgameFamily decompose_penalties(const DpgPenalty& game) {
  if (!game.metric.is_product())
    throw Error("decompose: metric is not a product of explicit factors");
  const auto& info = game.metric.product_info();
  const ProductIndex& sidx = info.index;
  const PlayerIndex n = game.graph.player_count();

  SubgameFamily family{FamilyKind::AxisSubgames, {}, sidx, std::nullopt, Game(game)};
  for (std::size_t t = 0; t < sidx.axes(); ++t) {
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(sidx.dims()[t], 0));
    for (PlayerIndex i = 0; i < n; ++i)
      for (std::size_t u = 0; u < sidx.size(); ++u)
        q[i][sidx.coordinate(u, t)] += game.penalties[i][u];
    family.factors.emplace_back(DpgPenalty(game.graph, info.factors[t], std::move(q)));
  }
  return family;
}

namespace detail {

inline Profile axis_projection(const SubgameFamily& family, const Profile& x, std::size_t t) {
  Profile xt(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    xt[i] = family.strategy_index.coordinate(x[i], t);
  return xt;
}

}  // namespace detail

// Psi(x) = sum over axes of the subgame exact potentials of the per-axis
// projections of x. An exact potential for 1-products; in general only a
// candidate ordinal potential (see find_ordinal_violation).
inline Rational psi(const SubgameFamily& family, const Profile& x) {
  if (family.kind != FamilyKind::AxisSubgames)
    throw Error("psi: family must be an axis-subgame decomposition");
  check_profile(family.composite, x);
  Rational acc = 0;
  for (std::size_t t = 0; t < family.factors.size(); ++t)
    acc += potential(family.factors[t], detail::axis_projection(family, x, t));
  return acc;
}

struct ComposedProfile {
  Profile profile;
  // True only when the metric is a 1-product (where psi is exact) and the
  // profile re-verified as a PNE of the composite game. Otherwise the
  // composition is returned without any equilibrium claim.
  bool verified = false;
};

inline ComposedProfile compose_subgame_pne(const SubgameFamily& family,
                                           const std::vector<Profile>& subgame_pnes) {
  if (family.kind != FamilyKind::AxisSubgames)
    throw Error("compose: family must be an axis-subgame decomposition");
  if (subgame_pnes.size() != family.factors.size())
    throw Error("compose: need one profile per subgame");
  for (std::size_t t = 0; t < family.factors.size(); ++t)
    if (!is_pne(family.factors[t], subgame_pnes[t]))
      throw Error("compose: subgame " + std::to_string(t) + " profile is not a PNE");

  const PlayerIndex n = player_count(family.composite);
  Profile x(n);
  std::vector<std::uint32_t> components(family.factors.size());
  for (PlayerIndex i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < family.factors.size(); ++t) components[t] = subgame_pnes[t][i];
    x[i] = static_cast<StrategyIndex>(family.strategy_index.flat(components));
  }

  ComposedProfile out{std::move(x), false};
  const auto* composite = std::get_if<DpgPenalty>(&family.composite);
  if (!composite) throw Error("compose: axis-subgame composite must be a penalty game");
  if (composite->metric.product_info().ell == Ell::finite(1)) {
    if (!is_pne(family.composite, out.profile))
      throw Error("compose: 1-product composition failed PNE verification");
    out.verified = true;
  }
  return out;
}

// A unilateral move that strictly improves the mover's cost while Psi does
// not strictly decrease; its existence refutes Psi as a generalized ordinal
// potential for the composite game.
struct OrdinalViolation {
  Profile profile;
  PlayerIndex player = 0;
  StrategyIndex from = 0;
  StrategyIndex to = 0;
  Rational cost_before, cost_after;
  Rational psi_before, psi_after;

  std::string describe() const {
    std::string s = "profile (";
    for (std::size_t i = 0; i < profile.size(); ++i)
      s += (i ? "," : "") + std::to_string(profile[i]);
    s += "), player " + std::to_string(player) + " moves " + std::to_string(from) + "->" +
         std::to_string(to) + ": cost " + to_string(cost_before) + " -> " +
         to_string(cost_after) + " but psi " + to_string(psi_before) + " -> " +
         to_string(psi_after);
    return s;
  }
};

// Exhaustively scans unilateral moves in lexicographic order (profile, then
// player, then target strategy) for the first ordinal-potential violation.
inline std::optional<OrdinalViolation> find_ordinal_violation(
    const SubgameFamily& family, std::uint64_t cap = kDefaultProfileCap) {
  if (family.kind != FamilyKind::AxisSubgames)
    throw Error("ordinal check: family must be an axis-subgame decomposition");
  const Game& composite = family.composite;
  checked_profile_count(composite, cap);

  std::optional<OrdinalViolation> found;
  for_each_profile(composite, [&](const Profile& x) {
    if (found) return;
    const Rational psi_x = psi(family, x);
    const PlayerIndex n = static_cast<PlayerIndex>(x.size());
    for (PlayerIndex i = 0; i < n && !found; ++i) {
      const Rational cost_x = player_cost_with(composite, x, i, x[i]);
      for (StrategyIndex y = 0; y < strategy_count(composite, i); ++y) {
        if (y == x[i]) continue;
        Rational cost_y = player_cost_with(composite, x, i, y);
        if (cost_y >= cost_x) continue;
        Profile moved = x;
        moved[i] = y;
        Rational psi_y = psi(family, moved);
        if (psi_x <= psi_y) {
          found = OrdinalViolation{x,      i,     x[i],  y, cost_x, std::move(cost_y),
                                   psi_x, std::move(psi_y)};
          break;
        }
      }
    }
  });
  return found;
}

}  // namespace pne
