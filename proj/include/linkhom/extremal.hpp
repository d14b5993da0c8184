#pragma once

#include "linkhom/integer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linkhom {

/// Complete graph on vertices 0..n-1 (n <= 16) with non-negative integer edge weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(w_.size()); }
  /// Lexicographic index of edge {u,v}.
  int edge_index(int u, int v) const;
  int weight(int u, int v) const { return w_[edge_index(u, v)]; }
  void set_weight(int u, int v, int w);
  const std::vector<int>& weights() const { return w_; }
  std::vector<int>& weights() { return w_; }
  int degree(int v) const;

  bool operator==(const WeightedGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<int> w_;
};

long total_weight(const WeightedGraph& g);
long min_k_subgraph_weight(const WeightedGraph& g, int k);
bool is_member(const WeightedGraph& g, int k, int w);

struct SearchBudget {
  std::int64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0;      // 0 = unlimited
};

enum class SearchStatus { ProvenOptimal, BudgetExhausted };

struct SearchResult {
  long value = 0;        // best total weight found
  long lower_bound = 0;  // proven lower bound (= value when optimal)
  WeightedGraph witness;
  SearchStatus status = SearchStatus::ProvenOptimal;
  std::int64_t nodes = 0;
};

/// Branch and bound for the minimum total weight of a graph on n vertices whose
/// every k-vertex subgraph weighs at least w. threads <= 1 runs the serial reference.
SearchResult phi_exact(int n, int k, int w, SearchBudget budget = {}, int threads = 1);

WeightedGraph phi4_witness(int n);
long phi4_formula(int n);
bool mantel_relation(int n);
/// Vertex v with d(v) >= ceil((2n-4)/3); G must have n >= 5 and lie in the (4,3) family.
int degree_bound_witness(const WeightedGraph& g);

std::string to_dot(const WeightedGraph& g);

}  // namespace linkhom
