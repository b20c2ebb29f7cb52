#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pne/core.hpp"
#include "pne/error.hpp"
#include "pne/rational.hpp"

namespace pne {

enum class MetricKind { Explicit, Discrete, GraphDerived, Product };

// First violated metric axiom, with the witnessing point indices.
struct MetricViolation {
  enum class Axiom { ZeroDiagonal, Positivity, Symmetry, Triangle };
  Axiom axiom;
  std::size_t x = 0, y = 0, z = 0;  // z is meaningful for Triangle only

  std::string describe() const {
    switch (axiom) {
      case Axiom::ZeroDiagonal:
        return "d(" + std::to_string(x) + "," + std::to_string(x) + ") != 0";
      case Axiom::Positivity:
        return "d(" + std::to_string(x) + "," + std::to_string(y) + ") <= 0 for distinct points";
      case Axiom::Symmetry:
        return "d(" + std::to_string(x) + "," + std::to_string(y) + ") != d(" +
               std::to_string(y) + "," + std::to_string(x) + ")";
      case Axiom::Triangle:
        return "d(" + std::to_string(x) + "," + std::to_string(y) + ") > d(" +
               std::to_string(x) + "," + std::to_string(z) + ") + d(" + std::to_string(z) +
               "," + std::to_string(y) + ")";
    }
    return "unknown violation";
  }
};

// Checks the metric axioms on a square matrix; returns the first violation
// in scan order, or nullopt. O(m^3) triangle scan, fine at desk scale.
inline std::optional<MetricViolation> validate_metric(
    const std::vector<std::vector<Rational>>& dist) {
  const std::size_t m = dist.size();
  for (std::size_t x = 0; x < m; ++x)
    if (dist[x].size() != m) throw Error("validate_metric: matrix not square");
  using Axiom = MetricViolation::Axiom;
  for (std::size_t x = 0; x < m; ++x)
    if (dist[x][x] != 0) return MetricViolation{Axiom::ZeroDiagonal, x, x, 0};
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      if (dist[x][y] != dist[y][x]) return MetricViolation{Axiom::Symmetry, x, y, 0};
      if (dist[x][y] <= 0) return MetricViolation{Axiom::Positivity, x, y, 0};
    }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (dist[x][y] > dist[x][z] + dist[z][y])
          return MetricViolation{Axiom::Triangle, x, y, z};
  return std::nullopt;
}

// Product order: a finite positive integer or infinity. The product distance
// is the sum of l-th powers of factor distances for finite l, the max for
// infinity.
struct Ell {
  static Ell finite(std::uint32_t order) {
    if (order == 0) throw Error("ell: order must be positive");
    return Ell{false, order};
  }
  static Ell infinity() { return Ell{true, 0}; }

  bool is_infinity = false;
  std::uint32_t order = 1;

  friend bool operator==(const Ell&, const Ell&) = default;

  std::string to_string() const { return is_infinity ? "inf" : std::to_string(order); }
};

using ProductIndex = TupleIndex;

struct GraphMetricInfo;
struct ProductMetricInfo;

// A labeled finite point set with a validated distance matrix. Provenance
// records how it was built; the product case keeps its factors and the
// tuple<->flat point bijection.
class FiniteMetric {
 public:
  static FiniteMetric explicit_matrix(std::vector<std::string> labels,
                                      std::vector<std::vector<Rational>> dist);

  std::size_t point_count() const { return dist_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const Rational& dist(std::size_t x, std::size_t y) const { return dist_[x][y]; }
  const std::vector<std::vector<Rational>>& matrix() const { return dist_; }
  MetricKind kind() const { return kind_; }

  bool is_product() const { return kind_ == MetricKind::Product; }
  const ProductMetricInfo& product_info() const;
  const GraphMetricInfo& graph_info() const;

  friend bool operator==(const FiniteMetric& a, const FiniteMetric& b);

  friend FiniteMetric build_discrete(std::vector<std::string> labels);
  friend FiniteMetric build_graph_metric(const PlayerGraph& g);
  friend std::pair<FiniteMetric, ProductIndex> build_product(std::vector<FiniteMetric> factors,
                                                             Ell ell);

 private:
  FiniteMetric(MetricKind kind, std::vector<std::string> labels,
               std::vector<std::vector<Rational>> dist)
      : kind_(kind), labels_(std::move(labels)), dist_(std::move(dist)) {}

  MetricKind kind_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> dist_;
  std::shared_ptr<const GraphMetricInfo> graph_info_;
  std::shared_ptr<const ProductMetricInfo> product_info_;
};

struct GraphMetricInfo {
  PlayerGraph source;  // the generating weighted graph, kept for serialization
  bool is_tree = false;
  bool is_path = false;
};

struct ProductMetricInfo {
  Ell ell;
  std::vector<FiniteMetric> factors;
  ProductIndex index;
};

inline const ProductMetricInfo& FiniteMetric::product_info() const {
  if (!product_info_) throw Error("metric: not a product metric");
  return *product_info_;
}

inline const GraphMetricInfo& FiniteMetric::graph_info() const {
  if (!graph_info_) throw Error("metric: not graph-derived");
  return *graph_info_;
}

inline bool operator==(const FiniteMetric& a, const FiniteMetric& b) {
  if (a.kind_ != b.kind_ || a.labels_ != b.labels_ || a.dist_ != b.dist_) return false;
  if (a.kind_ == MetricKind::GraphDerived && !(a.graph_info_->source == b.graph_info_->source))
    return false;
  if (a.kind_ == MetricKind::Product) {
    if (a.product_info_->ell != b.product_info_->ell) return false;
    if (a.product_info_->factors != b.product_info_->factors) return false;
  }
  return true;
}

inline FiniteMetric FiniteMetric::explicit_matrix(std::vector<std::string> labels,
                                                  std::vector<std::vector<Rational>> dist) {
  if (dist.empty()) throw Error("metric: needs at least one point");
  if (labels.empty())
    for (std::size_t x = 0; x < dist.size(); ++x) labels.push_back("p" + std::to_string(x));
  if (labels.size() != dist.size()) throw Error("metric: labels do not match matrix size");
  if (auto v = validate_metric(dist)) throw Error("metric: " + v->describe());
  return FiniteMetric(MetricKind::Explicit, std::move(labels), std::move(dist));
}

inline FiniteMetric build_discrete(std::vector<std::string> labels) {
  if (labels.empty()) throw Error("discrete metric: needs at least one label");
  const std::size_t m = labels.size();
  std::vector<std::vector<Rational>> dist(m, std::vector<Rational>(m, 1));
  for (std::size_t x = 0; x < m; ++x) dist[x][x] = 0;
  return FiniteMetric(MetricKind::Discrete, std::move(labels), std::move(dist));
}

// All-pairs shortest paths over the weighted graph; points are vertices.
// Rejects disconnected graphs and nonpositive weights.
inline FiniteMetric build_graph_metric(const PlayerGraph& g) {
  const std::size_t m = g.player_count();
  for (std::size_t k = 0; k < g.edges().size(); ++k)
    if (g.weight(k) <= 0) throw Error("graph metric: nonpositive edge weight");

  std::vector<std::vector<std::optional<Rational>>> d(m, std::vector<std::optional<Rational>>(m));
  for (std::size_t x = 0; x < m; ++x) d[x][x] = Rational(0);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const Edge& e = g.edges()[k];
    if (!d[e.u][e.v] || *d[e.u][e.v] > g.weight(k)) {
      d[e.u][e.v] = g.weight(k);
      d[e.v][e.u] = g.weight(k);
    }
  }
  for (std::size_t z = 0; z < m; ++z)
    for (std::size_t x = 0; x < m; ++x) {
      if (!d[x][z]) continue;
      for (std::size_t y = 0; y < m; ++y) {
        if (!d[z][y]) continue;
        Rational via = *d[x][z] + *d[z][y];
        if (!d[x][y] || *d[x][y] > via) d[x][y] = via;
      }
    }

  std::vector<std::vector<Rational>> dist(m, std::vector<Rational>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (!d[x][y])
        throw Error("graph metric: infinite distance between " + std::to_string(x) + " and " +
                    std::to_string(y) + " (graph disconnected)");
      dist[x][y] = *d[x][y];
    }

  std::vector<std::string> labels;
  for (std::size_t x = 0; x < m; ++x) labels.push_back(std::to_string(x));
  FiniteMetric out(MetricKind::GraphDerived, std::move(labels), std::move(dist));
  const bool is_tree = g.edges().size() + 1 == m;  // connected at this point
  bool is_path = is_tree;
  if (is_tree)
    for (PlayerIndex i = 0; i < m; ++i)
      if (g.degree(i) > 2) is_path = false;
  out.graph_info_ = std::make_shared<GraphMetricInfo>(GraphMetricInfo{g, is_tree, is_path});
  return out;
}

// Product distance: sum of l-th powers of the factor distances for finite l,
// max for l = infinity. For 1 < l < inf the composed matrix may fail the
// triangle inequality, so the result is re-validated and rejected on failure
// rather than silently accepted.
inline std::pair<FiniteMetric, ProductIndex> build_product(std::vector<FiniteMetric> factors,
                                                           Ell ell) {
  if (factors.empty()) throw Error("product metric: no factors");
  std::vector<std::uint32_t> sizes;
  sizes.reserve(factors.size());
  for (const auto& f : factors) sizes.push_back(static_cast<std::uint32_t>(f.point_count()));
  ProductIndex idx(sizes);

  const std::size_t m = idx.size();
  std::vector<std::vector<Rational>> dist(m, std::vector<Rational>(m, 0));
  for (std::size_t x = 0; x < m; ++x) {
    const auto xt = idx.tuple(x);
    for (std::size_t y = 0; y < m; ++y) {
      const auto yt = idx.tuple(y);
      Rational acc = 0;
      for (std::size_t t = 0; t < factors.size(); ++t) {
        const Rational& dt = factors[t].dist(xt[t], yt[t]);
        if (ell.is_infinity) {
          if (dt > acc) acc = dt;
        } else {
          Rational p = dt;
          for (std::uint32_t e = 1; e < ell.order; ++e) p *= dt;
          acc += p;
        }
      }
      dist[x][y] = std::move(acc);
    }
  }
  if (auto v = validate_metric(dist))
    throw Error("product metric (ell=" + ell.to_string() + "): " + v->describe());

  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto xt = idx.tuple(x);
    std::string s = "(";
    for (std::size_t t = 0; t < factors.size(); ++t) {
      if (t) s += ",";
      s += factors[t].label(xt[t]);
    }
    s += ")";
    labels.push_back(std::move(s));
  }

  FiniteMetric out(MetricKind::Product, std::move(labels), std::move(dist));
  out.product_info_ =
      std::make_shared<ProductMetricInfo>(ProductMetricInfo{ell, std::move(factors), idx});
  return {std::move(out), std::move(idx)};
}

}  // namespace pne
