#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pne/compose.hpp"
#include "pne/games.hpp"

namespace pne {

// Deterministic random source: std::mt19937_64 (fully specified by the
// standard, so identical across platforms) with bias-free rejection
// sampling. Generator output is part of the golden-test surface; nothing
// here may depend on distribution implementations that vary by toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw Error("rng: zero bound");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  // True with probability exactly num/den.
  bool chance(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num > den) throw Error("rng: probability must be a fraction in [0, 1]");
    return below(den) < num;
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::pair<std::uint64_t, std::uint64_t> probability_parts(const Rational& p,
                                                                 const char* what) {
  if (p < 0 || p > 1) throw Error(std::string("generate: ") + what + " must be in [0, 1]");
  if (!fits_int64(numerator(p)) || !fits_int64(denominator(p)))
    throw Error(std::string("generate: ") + what + " is too fine-grained");
  return {numerator(p).convert_to<std::uint64_t>(), denominator(p).convert_to<std::uint64_t>()};
}

inline std::vector<Edge> random_edges(PlayerIndex n, const Rational& edge_prob, Rng& rng) {
  const auto [num, den] = probability_parts(edge_prob, "edge probability");
  std::vector<Edge> edges;
  for (PlayerIndex u = 0; u < n; ++u)
    for (PlayerIndex v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) edges.push_back({u, v});
  return edges;
}

inline std::vector<std::string> numbered_labels(std::uint32_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::uint32_t s = 0; s < count; ++s) labels.push_back(std::to_string(s));
  return labels;
}

}  // namespace detail

// Erdos-Renyi player graph, discrete metric on `points` labels, uniform
// preferred strategies.
inline DpgParam generate_dpg_discrete(PlayerIndex n, const Rational& edge_prob,
                                      std::uint32_t points, Rational alpha,
                                      std::uint64_t seed) {
  if (n == 0) throw Error("generate: need at least one player");
  if (points == 0) throw Error("generate: need at least one metric point");
  Rng rng(seed);
  std::vector<Edge> edges = detail::random_edges(n, edge_prob, rng);
  std::vector<StrategyIndex> beta(n);
  for (PlayerIndex i = 0; i < n; ++i)
    beta[i] = static_cast<StrategyIndex>(rng.below(points));
  return DpgParam(PlayerGraph(n, std::move(edges)),
                  build_discrete(detail::numbered_labels(points)), std::move(beta),
                  std::move(alpha));
}

struct GeneratedGrid {
  DpgParam game;
  GridSpec grid;
  AxisPreference preferences;
};

// Grid game on a 1-product of discrete factors. Preferences are drawn per
// (axis, coordinate) and shared by every player on that slice, which makes
// conditions (A) and (B) hold by construction.
inline GeneratedGrid generate_grid_dpg(std::vector<std::uint32_t> dims,
                                       const std::vector<std::uint32_t>& factor_sizes,
                                       Rational alpha, std::uint64_t seed) {
  if (dims.empty()) throw Error("generate: grid needs at least one axis");
  if (dims.size() != factor_sizes.size())
    throw Error("generate: need one factor size per grid axis");
  for (auto d : dims)
    if (d == 0) throw Error("generate: grid dims must be positive");
  for (auto s : factor_sizes)
    if (s == 0) throw Error("generate: factor sizes must be positive");

  Rng rng(seed);
  GridSpec grid(std::move(dims));
  std::vector<FiniteMetric> factors;
  for (auto s : factor_sizes) factors.push_back(build_discrete(detail::numbered_labels(s)));
  auto [metric, sidx] = build_product(std::move(factors), Ell::finite(1));

  AxisPreference pref;
  pref.per_axis.resize(grid.dims().size());
  for (std::size_t t = 0; t < grid.dims().size(); ++t)
    for (std::uint32_t c = 0; c < grid.dims()[t]; ++c)
      pref.per_axis[t].push_back(static_cast<StrategyIndex>(rng.below(factor_sizes[t])));

  std::vector<StrategyIndex> beta(grid.player_count());
  std::vector<std::uint32_t> components(grid.dims().size());
  for (std::size_t v = 0; v < grid.player_count(); ++v) {
    for (std::size_t t = 0; t < grid.dims().size(); ++t)
      components[t] = pref.per_axis[t][grid.index.coordinate(v, t)];
    beta[v] = static_cast<StrategyIndex>(sidx.flat(components));
  }

  DpgParam game(build_grid_graph(grid), std::move(metric), std::move(beta), std::move(alpha));
  return {std::move(game), std::move(grid), std::move(pref)};
}

// Two-strategy coordination game with integer cost tables in [0, cost_max].
// Tables are symmetric by construction; submodularity is reached by
// resampling each edge a bounded number of times and then, if still
// violated, deterministically raising the off-diagonal cost to the smallest
// integer that satisfies it.
inline Ncg generate_ncg_symsub(PlayerIndex n, const Rational& edge_prob, std::uint64_t cost_max,
                               std::uint64_t seed) {
  if (n == 0) throw Error("generate: need at least one player");
  if (cost_max > (1ull << 32)) throw Error("generate: cost_max too large");
  Rng rng(seed);
  std::vector<Edge> edges = detail::random_edges(n, edge_prob, rng);

  std::vector<std::vector<std::vector<Rational>>> costs;
  costs.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::uint64_t agree0 = 0, agree1 = 0, disagree = 0;
    for (int attempt = 0; attempt < 16; ++attempt) {
      agree0 = rng.below(cost_max + 1);
      agree1 = rng.below(cost_max + 1);
      disagree = rng.below(cost_max + 1);
      if (2 * disagree >= agree0 + agree1) break;
    }
    if (2 * disagree < agree0 + agree1) disagree = (agree0 + agree1 + 1) / 2;
    costs.push_back({{Rational(agree0), Rational(disagree)},
                     {Rational(disagree), Rational(agree1)}});
  }

  return Ncg(PlayerGraph(n, std::move(edges)), std::vector<std::uint32_t>(n, 2),
             std::move(costs));
}

}  // namespace pne
