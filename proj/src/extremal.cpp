#include "linkhom/extremal.hpp"

#include "linkhom/integer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linkhom {

WeightedGraph::WeightedGraph(int n) : n_(n) {
  if (n < 1 || n > 16) throw DomainError("vertex count out of range");
  w_.assign(static_cast<std::size_t>(n * (n - 1) / 2), 0);
}

int WeightedGraph::edge_index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("bad edge");
  if (u > v) std::swap(u, v);
  return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

void WeightedGraph::set_weight(int u, int v, int w) {
  if (w < 0) throw DomainError("negative edge weight");
  w_[edge_index(u, v)] = w;
}

int WeightedGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v) d += weight(u, v);
  return d;
}

long total_weight(const WeightedGraph& g) {
  long s = 0;
  for (int x : g.weights()) s += x;
  return s;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long min_k_subgraph_weight(const WeightedGraph& g, int k) {
  if (k < 1 || k > g.n()) throw DomainError("subgraph size out of range");
  long best = -1;
  for (const auto& s : subsets(g.n(), k)) {
    long sum = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) sum += g.weight(s[a], s[b]);
    if (best < 0 || sum < best) best = sum;
  }
  return best;
}

bool is_member(const WeightedGraph& g, int k, int w) { return min_k_subgraph_weight(g, k) >= w; }

// ---------------------------------------------------------------- branch and bound

namespace {

using Clock = std::chrono::steady_clock;

struct Problem {
  int n, k, w, edges;
  std::vector<int> eu, ev;
  std::vector<std::uint64_t> sub_mask;          // edges of each k-subset
  std::vector<std::vector<int>> sub_edges;
  std::vector<std::vector<int>> closing;        // subsets whose last edge is e
  std::vector<std::vector<int>> edge_subs;      // subsets containing e
  std::vector<std::vector<int>> swap_image;     // [j][e] = image of edge e under (j j+1)
  long per_edge;                                // subsets through one edge

  Problem(int n_, int k_, int w_) : n(n_), k(k_), w(w_) {
    WeightedGraph g(n);
    edges = g.edge_count();
    if (edges > 63) throw DomainError("too many edges for the search");
    eu.resize(edges);
    ev.resize(edges);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        eu[g.edge_index(u, v)] = u;
        ev[g.edge_index(u, v)] = v;
      }
    closing.resize(edges);
    edge_subs.resize(edges);
    for (const auto& s : subsets(n, k)) {
      std::uint64_t m = 0;
      std::vector<int> es;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
          int e = g.edge_index(s[a], s[b]);
          m |= std::uint64_t(1) << e;
          es.push_back(e);
        }
      int id = static_cast<int>(sub_mask.size());
      sub_mask.push_back(m);
      if (!es.empty()) closing[*std::max_element(es.begin(), es.end())].push_back(id);
      for (int e : es) edge_subs[e].push_back(id);
      sub_edges.push_back(std::move(es));
    }
    swap_image.assign(n > 1 ? n - 1 : 0, std::vector<int>(edges));
    for (int j = 0; j + 1 < n; ++j)
      for (int e = 0; e < edges; ++e) {
        auto t = [&](int x) { return x == j ? j + 1 : (x == j + 1 ? j : x); };
        swap_image[j][e] = g.edge_index(t(eu[e]), t(ev[e]));
      }
    per_edge = binom(n - 2, k - 2);
  }
};

struct Shared {
  std::atomic<long> best;
  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::vector<int> witness;
  SearchBudget budget;
  Clock::time_point start;
};

class Worker {
 public:
  Worker(const Problem& p, Shared& sh) : p_(p), sh_(sh), x_(p.edges, 0), partial_(p.sub_mask.size(), 0) {}

  // Applies a fixed prefix; returns false when it is infeasible or not canonical.
  bool apply_prefix(const std::vector<int>& prefix) {
    for (std::size_t e = 0; e < prefix.size(); ++e) {
      int v = prefix[e];
      if (v < forced_min(static_cast<int>(e))) return false;
      assign(static_cast<int>(e), v);
      if (!canonical(static_cast<int>(e) + 1)) return false;
    }
    depth_ = static_cast<int>(prefix.size());
    return true;
  }

  void run() { dfs(depth_, total_); }

  long root_bound() const { return total_ + remaining_bound(depth_); }

 private:
  int forced_min(int e) const {
    int need = 0;
    for (int s : p_.closing[e]) need = std::max(need, p_.w - partial_[s]);
    return need;
  }

  void assign(int e, int v) {
    x_[e] = v;
    total_ += v;
    for (int s : p_.edge_subs[e]) partial_[s] += v;
  }

  void unassign(int e) {
    int v = x_[e];
    total_ -= v;
    for (int s : p_.edge_subs[e]) partial_[s] -= v;
    x_[e] = 0;
  }

  // Lex-leader test against every adjacent vertex transposition, on the assigned prefix.
  bool canonical(int assigned) const {
    for (const auto& img : p_.swap_image) {
      for (int e = 0; e < assigned; ++e) {
        int f = img[e];
        if (f >= assigned) break;
        if (x_[e] < x_[f]) break;
        if (x_[e] > x_[f]) return false;
      }
    }
    return true;
  }

  // Lower bound on the weight still to be placed on edges >= from.
  long remaining_bound(int from) const {
    std::uint64_t free_mask = from >= 64 ? 0 : (~std::uint64_t(0) << from);
    long packed = 0, deficit_sum = 0;
    std::uint64_t used = 0;
    for (std::size_t s = 0; s < p_.sub_mask.size(); ++s) {
      std::uint64_t open = p_.sub_mask[s] & free_mask;
      if (!open) continue;
      int d = p_.w - partial_[s];
      if (d <= 0) continue;
      deficit_sum += d;
      if (!(open & used)) {
        used |= open;
        packed += d;
      }
    }
    long avg = p_.per_edge > 0 ? (deficit_sum + p_.per_edge - 1) / p_.per_edge : 0;
    return std::max(packed, avg);
  }

  bool out_of_budget() {
    std::int64_t n = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (sh_.stop.load(std::memory_order_relaxed)) return true;
    if (sh_.budget.max_nodes > 0 && n > sh_.budget.max_nodes) {
      sh_.stop = true;
      return true;
    }
    if (sh_.budget.max_seconds > 0 && (n & 4095) == 0) {
      double el = std::chrono::duration<double>(Clock::now() - sh_.start).count();
      if (el > sh_.budget.max_seconds) {
        sh_.stop = true;
        return true;
      }
    }
    return false;
  }

  void dfs(int e, long total) {
    if (out_of_budget()) return;
    if (e == p_.edges) {
      std::lock_guard<std::mutex> lock(sh_.mu);
      if (total < sh_.best.load()) {
        sh_.best = total;
        sh_.witness = x_;
      }
      return;
    }
    for (int v = forced_min(e); v <= p_.w; ++v) {
      if (total + v >= sh_.best.load(std::memory_order_relaxed)) break;
      assign(e, v);
      if (canonical(e + 1) && total + v + remaining_bound(e + 1) < sh_.best.load(std::memory_order_relaxed))
        dfs(e + 1, total + v);
      unassign(e);
      if (sh_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  const Problem& p_;
  Shared& sh_;
  std::vector<int> x_;
  std::vector<int> partial_;
  long total_ = 0;
  int depth_ = 0;
};

WeightedGraph initial_incumbent(int n, int k, int w) {
  WeightedGraph g(n);
  for (auto& x : g.weights()) x = w;
  if (k == 4 && w == 3 && n >= 4) {
    WeightedGraph h = phi4_witness(n);
    if (total_weight(h) < total_weight(g)) g = h;
  }
  return g;
}

}  // namespace

SearchResult phi_exact(int n, int k, int w, SearchBudget budget, int threads) {
  if (k < 1 || n < k) throw DomainError("phi_exact needs 1 <= k <= n");
  if (w < 0) throw DomainError("phi_exact needs w >= 0");
  SearchResult res;
  WeightedGraph start = initial_incumbent(n, k, w);
  if (k == 1 || w == 0) {
    res.witness = WeightedGraph(n);
    res.value = res.lower_bound = 0;
    return res;
  }
  Problem p(n, k, w);
  Shared sh;
  sh.best = total_weight(start) + 1;  // search for anything at least as good
  sh.witness = start.weights();
  sh.budget = budget;
  sh.start = Clock::now();

  long root = Worker(p, sh).root_bound();

  // Top-level subtrees: every assignment of the first few edges.
  int depth = std::min(p.edges, threads > 1 ? 3 : 0);
  std::vector<std::vector<int>> prefixes(1);
  for (int d = 0; d < depth; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& pre : prefixes)
      for (int v = 0; v <= w; ++v) {
        auto q = pre;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    prefixes = std::move(next);
  }

  auto solve = [&](const std::vector<int>& pre) {
    Worker wk(p, sh);
    if (wk.apply_prefix(pre)) wk.run();
  };
#ifdef _OPENMP
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < prefixes.size(); ++i) solve(prefixes[i]);
  } else {
    for (const auto& pre : prefixes) solve(pre);
  }
#else
  for (const auto& pre : prefixes) solve(pre);
#endif

  res.witness = WeightedGraph(n);
  res.witness.weights() = sh.witness;
  res.value = total_weight(res.witness);
  res.nodes = sh.nodes.load();
  if (sh.stop.load()) {
    res.status = SearchStatus::BudgetExhausted;
    res.lower_bound = std::min(root, res.value);
  } else {
    res.status = SearchStatus::ProvenOptimal;
    res.lower_bound = res.value;
  }
  return res;
}

WeightedGraph phi4_witness(int n) {
  if (n < 4) throw DomainError("phi4_witness needs n >= 4");
  int a = (n - 1 + 2) / 3;  // ceil((n-1)/3)
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool au = u < a, av = v < a;
      if (au && av) g.set_weight(u, v, 2);
      else if (!au && !av) g.set_weight(u, v, 1);
    }
  return g;
}

long phi4_formula(int n) {
  if (n < 4) throw DomainError("phi4_formula needs n >= 4");
  int a = (n + 1) / 3;
  return 2 * binom(a, 2) + binom(n - a, 2);
}

bool mantel_relation(int n) {
  if (n < 3) throw DomainError("mantel_relation needs n >= 3");
  SearchResult r = phi_exact(n, 3, 1);
  return r.status == SearchStatus::ProvenOptimal && r.value == binom(n, 2) - static_cast<long>(n) * n / 4;
}

int degree_bound_witness(const WeightedGraph& g) {
  const int n = g.n();
  if (n < 5) throw DomainError("degree bound needs n >= 5");
  if (!is_member(g, 4, 3)) throw DomainError("graph is not in the (4,3) family");
  int need = (2 * n - 4 + 2) / 3;
  int best = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  if (g.degree(best) < need) throw InternalError("no vertex meets the degree bound");
  return best;
}

std::string to_dot(const WeightedGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) os << "  v" << v + 1 << ";\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.weight(u, v) > 0) os << "  v" << u + 1 << " -- v" << v + 1 << " [label=" << g.weight(u, v) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace linkhom
