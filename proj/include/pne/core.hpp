#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pne/error.hpp"
#include "pne/rational.hpp"

namespace pne {

using PlayerIndex = std::uint32_t;
using StrategyIndex = std::uint32_t;

// One strategy index per player. Validity (length, per-player bounds) is
// checked against a concrete game at the API boundaries.
using Profile = std::vector<StrategyIndex>;

struct Edge {
  PlayerIndex u = 0;
  PlayerIndex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph over player indices 0..n-1. Edges are stored
// canonically (u < v, sorted, unique); optional nonnegative weights are
// parallel to the edge list. An unweighted graph reads as weight 1.
class PlayerGraph {
 public:
  PlayerGraph(PlayerIndex player_count, std::vector<Edge> edges,
              std::optional<std::vector<Rational>> weights = std::nullopt)
      : player_count_(player_count), edges_(std::move(edges)), weights_(std::move(weights)) {
    if (player_count_ == 0) throw Error("graph: player_count must be positive");
    if (weights_ && weights_->size() != edges_.size())
      throw Error("graph: weights must be parallel to edges");
    for (auto& e : edges_)
      if (e.u > e.v) std::swap(e.u, e.v);
    if (weights_) {
      std::vector<std::size_t> order(edges_.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return edges_[a] < edges_[b]; });
      std::vector<Edge> es;
      std::vector<Rational> ws;
      es.reserve(edges_.size());
      ws.reserve(edges_.size());
      for (std::size_t k : order) {
        es.push_back(edges_[k]);
        ws.push_back((*weights_)[k]);
      }
      edges_ = std::move(es);
      *weights_ = std::move(ws);
    } else {
      std::sort(edges_.begin(), edges_.end());
    }
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge& e = edges_[k];
      if (e.u == e.v) throw Error("graph: self-loop at player " + std::to_string(e.u));
      if (e.v >= player_count_)
        throw Error("graph: edge endpoint " + std::to_string(e.v) + " out of range");
      if (k > 0 && edges_[k - 1] == e)
        throw Error("graph: duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      if (weights_ && (*weights_)[k] < 0)
        throw Error("graph: negative weight on edge {" + std::to_string(e.u) + "," +
                    std::to_string(e.v) + "}");
    }
    adjacency_.assign(player_count_, {});
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      adjacency_[edges_[k].u].push_back({edges_[k].v, k});
      adjacency_[edges_[k].v].push_back({edges_[k].u, k});
    }
  }

  PlayerIndex player_count() const { return player_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_weighted() const { return weights_.has_value(); }

  const Rational& weight(std::size_t edge_index) const {
    static const Rational one = 1;
    return weights_ ? (*weights_)[edge_index] : one;
  }

  // Pairs (neighbor, edge index), ordered by neighbor index.
  std::span<const std::pair<PlayerIndex, std::size_t>> neighbors(PlayerIndex i) const {
    return adjacency_[i];
  }

  std::size_t degree(PlayerIndex i) const { return adjacency_[i].size(); }

  friend bool operator==(const PlayerGraph& a, const PlayerGraph& b) {
    if (a.player_count_ != b.player_count_ || a.edges_ != b.edges_) return false;
    if (a.weights_.has_value() != b.weights_.has_value()) return false;
    return !a.weights_ || *a.weights_ == *b.weights_;
  }

 private:
  PlayerIndex player_count_;
  std::vector<Edge> edges_;
  std::optional<std::vector<Rational>> weights_;
  std::vector<std::vector<std::pair<PlayerIndex, std::size_t>>> adjacency_;
};

// Row-major bijection between flat indices and coordinate tuples, first
// axis slowest. Shared by grid players and product-metric points so that
// profiles, product graphs and product metrics agree on the flattening.
class TupleIndex {
 public:
  explicit TupleIndex(std::vector<std::uint32_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw Error("tuple index: no axes");
    std::size_t n = 1;
    for (auto d : dims_) {
      if (d == 0) throw Error("tuple index: zero-sized axis");
      n *= d;
    }
    size_ = n;
    strides_.assign(dims_.size(), 1);
    for (std::size_t t = dims_.size(); t-- > 1;) strides_[t - 1] = strides_[t] * dims_[t];
  }

  const std::vector<std::uint32_t>& dims() const { return dims_; }
  std::size_t axes() const { return dims_.size(); }
  std::size_t size() const { return size_; }
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }

  std::size_t flat(std::span<const std::uint32_t> tuple) const {
    std::size_t f = 0;
    for (std::size_t t = 0; t < dims_.size(); ++t) f += tuple[t] * strides_[t];
    return f;
  }

  std::vector<std::uint32_t> tuple(std::size_t flat_index) const {
    std::vector<std::uint32_t> out(dims_.size());
    for (std::size_t t = 0; t < dims_.size(); ++t) {
      out[t] = static_cast<std::uint32_t>((flat_index / strides_[t]) % dims_[t]);
    }
    return out;
  }

  std::uint32_t coordinate(std::size_t flat_index, std::size_t axis) const {
    return static_cast<std::uint32_t>((flat_index / strides_[axis]) % dims_[axis]);
  }

  friend bool operator==(const TupleIndex& a, const TupleIndex& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<std::uint32_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

// k-dimensional grid geometry: players are coordinate tuples, flattened
// row-major. The induced graph has an edge exactly between tuples at L1
// distance one.
struct GridSpec {
  explicit GridSpec(std::vector<std::uint32_t> dims) : index(std::move(dims)) {}
  TupleIndex index;

  const std::vector<std::uint32_t>& dims() const { return index.dims(); }
  std::size_t player_count() const { return index.size(); }

  friend bool operator==(const GridSpec& a, const GridSpec& b) { return a.index == b.index; }
};

inline PlayerGraph build_grid_graph(const GridSpec& spec) {
  const auto& idx = spec.index;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < idx.size(); ++v) {
    for (std::size_t t = 0; t < idx.axes(); ++t) {
      if (idx.coordinate(v, t) + 1 < idx.dims()[t]) {
        edges.push_back({static_cast<PlayerIndex>(v),
                         static_cast<PlayerIndex>(v + idx.stride(t))});
      }
    }
  }
  return PlayerGraph(static_cast<PlayerIndex>(idx.size()), std::move(edges));
}

// Cartesian product of simple graphs plus, per product edge, the factor
// axis it came from.
struct ProductGraph {
  PlayerGraph graph;
  std::vector<std::uint32_t> edge_axis;  // parallel to graph.edges()
};

inline ProductGraph cartesian_graph_product(const std::vector<PlayerGraph>& factors) {
  if (factors.empty()) throw Error("cartesian product: no factors");
  std::vector<std::uint32_t> dims;
  dims.reserve(factors.size());
  for (const auto& g : factors) dims.push_back(g.player_count());
  TupleIndex idx(dims);

  std::vector<std::pair<Edge, std::uint32_t>> tagged;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    for (const Edge& fe : factors[t].edges()) {
      // Partner differs only in axis t; fe.u < fe.v keeps u < v after shifting.
      const std::size_t shift = (fe.v - fe.u) * idx.stride(t);
      for (std::size_t v = 0; v < idx.size(); ++v) {
        if (idx.coordinate(v, t) == fe.u) {
          tagged.push_back({{static_cast<PlayerIndex>(v), static_cast<PlayerIndex>(v + shift)},
                            static_cast<std::uint32_t>(t)});
        }
      }
    }
  }
  std::sort(tagged.begin(), tagged.end());
  std::vector<Edge> edges;
  std::vector<std::uint32_t> axes;
  edges.reserve(tagged.size());
  axes.reserve(tagged.size());
  for (auto& [e, t] : tagged) {
    edges.push_back(e);
    axes.push_back(t);
  }
  return {PlayerGraph(static_cast<PlayerIndex>(idx.size()), std::move(edges)), std::move(axes)};
}

// True when the edge set is exactly the consecutive-index path 0-1-...-n-1.
inline bool is_consecutive_path(const PlayerGraph& g) {
  if (g.edges().size() + 1 != g.player_count()) return false;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (g.edges()[k].u != k || g.edges()[k].v != k + 1) return false;
  }
  return true;
}

}  // namespace pne
