// Independent oracles used by the test suites. Everything here is brute force
// by design and never shares code with the library paths it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// sup of h*y - f(y) over a dense uniform grid
inline double legendre_dense(const std::function<double(double)>& f, double h, double radius,
                             int points = 1000001) {
  double best = -kInf;
  for (int i = 0; i < points; ++i) {
    double y = -radius + 2.0 * radius * i / (points - 1);
    best = std::max(best, h * y - f(y));
  }
  return best;
}

// sup of alpha(u x)/alpha(u) over a dense log grid
inline double omega_dense(const std::function<double(double)>& alpha, double x,
                          int points = 200001) {
  if (x == 0.0) return 0.0;
  double best = 0.0;
  double lo = std::log(1e-6), hi = std::log(1e6);
  for (int i = 0; i < points; ++i) {
    double u = std::exp(lo + (hi - lo) * i / (points - 1));
    double den = alpha(u);
    if (!(den > 0.0) || !std::isfinite(den)) continue;
    best = std::max(best, alpha(u * std::fabs(x)) / den);
  }
  return best;
}

// O(n^2) grid inf-convolution over a uniform grid with spacing h
inline std::vector<double> inf_conv_brute(const std::vector<double>& f, double h,
                                          const std::function<double(double)>& kernel) {
  int n = static_cast<int>(f.size());
  std::vector<double> out(n, kInf);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[i] = std::min(out[i], f[j] + kernel((i - j) * h));
  return out;
}

// Exact transportation optimum by exhaustive enumeration of spanning-tree
// basic solutions of the bipartite support graph. Exponential; callers keep
// m^(n-1) n^(m-1) small.
class VertexEnumerator {
 public:
  VertexEnumerator(std::vector<double> a, std::vector<double> b, std::vector<double> cost)
      : a_(std::move(a)), b_(std::move(b)), cost_(std::move(cost)) {
    n_ = static_cast<int>(a_.size());
    m_ = static_cast<int>(b_.size());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j) edges_.push_back({i, n_ + j});
    parent_.resize(n_ + m_);
    rank_.resize(n_ + m_);
  }

  double solve() {
    best_ = kInf;
    std::iota(parent_.begin(), parent_.end(), 0);
    std::fill(rank_.begin(), rank_.end(), 0);
    chosen_.clear();
    recurse(0);
    return best_;
  }

  static double tree_count(int n, int m) {
    return std::pow(static_cast<double>(m), n - 1) * std::pow(static_cast<double>(n), m - 1);
  }

 private:
  struct Edge {
    int u, v;
  };

  // no path compression, so a union is undone in O(1)
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void recurse(size_t e) {
    int need = n_ + m_ - 1 - static_cast<int>(chosen_.size());
    if (need == 0) {
      evaluate();
      return;
    }
    if (static_cast<int>(edges_.size() - e) < need) return;
    // include edges_[e] when it keeps the forest acyclic
    int ru = find(edges_[e].u), rv = find(edges_[e].v);
    if (ru != rv) {
      if (rank_[ru] < rank_[rv]) std::swap(ru, rv);
      bool bumped = rank_[ru] == rank_[rv];
      parent_[rv] = ru;
      if (bumped) ++rank_[ru];
      chosen_.push_back(static_cast<int>(e));
      recurse(e + 1);
      chosen_.pop_back();
      parent_[rv] = rv;
      if (bumped) --rank_[ru];
    }
    recurse(e + 1);
  }

  void evaluate() {
    // peel leaves to solve the unique flows on the tree
    int V = n_ + m_;
    std::vector<double> rem(V);
    for (int i = 0; i < n_; ++i) rem[i] = a_[i];
    for (int j = 0; j < m_; ++j) rem[n_ + j] = b_[j];
    std::vector<std::vector<std::pair<int, int>>> adj(V);  // (other, edge idx in chosen_)
    for (size_t k = 0; k < chosen_.size(); ++k) {
      const Edge& ed = edges_[chosen_[k]];
      adj[ed.u].push_back({ed.v, static_cast<int>(k)});
      adj[ed.v].push_back({ed.u, static_cast<int>(k)});
    }
    std::vector<int> deg(V);
    for (int v = 0; v < V; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<char> edge_done(chosen_.size(), 0), node_done(V, 0);
    std::vector<double> flow(chosen_.size(), 0.0);
    std::vector<int> stack;
    for (int v = 0; v < V; ++v)
      if (deg[v] == 1) stack.push_back(v);
    double cost = 0.0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (node_done[v] || deg[v] == 0) continue;
      int other = -1, ek = -1;
      for (auto [o, k] : adj[v])
        if (!edge_done[k]) {
          other = o;
          ek = k;
          break;
        }
      if (ek < 0) continue;
      double fl = rem[v];
      if (fl < -1e-12) return;  // infeasible vertex
      flow[ek] = fl;
      edge_done[ek] = 1;
      node_done[v] = 1;
      rem[other] -= fl;
      if (--deg[other] == 1) stack.push_back(other);
      --deg[v];
      const Edge& ed = edges_[chosen_[ek]];
      int row = ed.u, col = ed.v - n_;
      cost += std::max(fl, 0.0) * cost_[static_cast<size_t>(row) * m_ + col];
    }
    for (size_t k = 0; k < chosen_.size(); ++k)
      if (!edge_done[k]) return;
    best_ = std::min(best_, cost);
  }

  std::vector<double> a_, b_, cost_;
  int n_ = 0, m_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> parent_, rank_;
  std::vector<int> chosen_;
  double best_ = kInf;
};

}  // namespace oracle
