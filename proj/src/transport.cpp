#include "tel/transport.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace tel {

namespace {
constexpr double kMassEps = 1e-15;
constexpr int kLpSupportCap = 64;

void check_normalized(const std::vector<double>& w, const char* who) {
  double s = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) throw std::invalid_argument(std::string(who) + ": negative weight");
    s += x;
  }
  if (std::fabs(s - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(who) + ": weights are not normalized");
}
}  // namespace

void Coupling::validate(double tol) const {
  int n = row_measure.grid.n, m = col_measure.grid.n;
  if (plan.size() != static_cast<size_t>(n) * m)
    throw std::invalid_argument("Coupling: plan shape mismatch");
  for (double x : plan)
    if (x < -tol) throw std::invalid_argument("Coupling: negative entry");
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += plan[static_cast<size_t>(i) * m + j];
    if (std::fabs(s - row_measure.weights[i]) > tol)
      throw std::invalid_argument("Coupling: row marginal mismatch");
  }
  for (int j = 0; j < m; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += plan[static_cast<size_t>(i) * m + j];
    if (std::fabs(s - col_measure.weights[j]) > tol)
      throw std::invalid_argument("Coupling: column marginal mismatch");
  }
}

Coupling materialize(const TransportResult& r, const GridMeasure& nu, const GridMeasure& mu) {
  Coupling c{nu, mu, std::vector<double>(static_cast<size_t>(nu.grid.n) * mu.grid.n, 0.0)};
  for (const auto& e : r.plan)
    c.plan[static_cast<size_t>(e.row) * mu.grid.n + e.col] += e.mass;
  return c;
}

TransportResult transport_1d_monotone(const std::vector<double>& nu_points,
                                      const std::vector<double>& nu_weights,
                                      const std::vector<double>& mu_points,
                                      const std::vector<double>& mu_weights,
                                      const AlphaCost& alpha) {
  check_normalized(nu_weights, "transport_1d_monotone(nu)");
  check_normalized(mu_weights, "transport_1d_monotone(mu)");
  const int n = static_cast<int>(nu_points.size());
  const int m = static_cast<int>(mu_points.size());
  TransportResult out;
  out.method = TransportMethod::monotone;
  int i = 0, j = 0;
  double rem_a = n > 0 ? nu_weights[0] : 0.0;
  double rem_b = m > 0 ? mu_weights[0] : 0.0;
  while (i < n && j < m) {
    double mass = std::min(rem_a, rem_b);
    if (mass > kMassEps) {
      out.cost += mass * alpha.eval(nu_points[i] - mu_points[j]);
      out.plan.push_back({i, j, mass});
    }
    rem_a -= mass;
    rem_b -= mass;
    if (rem_a <= kMassEps) {
      ++i;
      if (i < n) rem_a = nu_weights[i];
    } else {
      ++j;
      if (j < m) rem_b = mu_weights[j];
    }
  }
  return out;
}

TransportResult transport_1d_monotone(const GridMeasure& nu, const GridMeasure& mu,
                                      const AlphaCost& alpha) {
  return transport_1d_monotone(nu.grid.points(), nu.weights, mu.grid.points(), mu.weights,
                               alpha);
}

// Min-cost flow, successive shortest paths with potentials. Nodes:
// 0 = source, 1..n = rows, n+1..n+m = cols, n+m+1 = sink.
TransportResult transport_lp(const std::vector<double>& a, const std::vector<double>& b,
                             const std::vector<double>& cost_matrix) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  if (n == 0 || m == 0) throw std::invalid_argument("transport_lp: empty support");
  if (n > kLpSupportCap || m > kLpSupportCap)
    throw std::invalid_argument("transport_lp: support exceeds 64 points; coarsen the grid");
  if (cost_matrix.size() != static_cast<size_t>(n) * m)
    throw std::invalid_argument("transport_lp: cost matrix shape mismatch");
  double sa = 0.0, sb = 0.0;
  for (double x : a) {
    if (!(x >= 0.0)) throw std::invalid_argument("transport_lp: negative mass");
    sa += x;
  }
  for (double x : b) {
    if (!(x >= 0.0)) throw std::invalid_argument("transport_lp: negative mass");
    sb += x;
  }
  if (std::fabs(sa - sb) > 1e-9)
    throw std::invalid_argument("transport_lp: infeasible marginals (total mass differs)");
  for (double c : cost_matrix)
    if (!(c >= 0.0) || !std::isfinite(c))
      throw std::invalid_argument("transport_lp: cost matrix must be finite nonnegative");

  struct Edge {
    int to;
    double cap;
    double cost;
    int rev;
  };
  const int V = n + m + 2;
  const int S = 0, T = n + m + 1;
  std::vector<std::vector<Edge>> g(V);
  auto add_edge = [&](int u, int v, double cap, double cost) {
    g[u].push_back({v, cap, cost, static_cast<int>(g[v].size())});
    g[v].push_back({u, 0.0, -cost, static_cast<int>(g[u].size()) - 1});
  };
  for (int i = 0; i < n; ++i) add_edge(S, 1 + i, a[i], 0.0);
  for (int j = 0; j < m; ++j) add_edge(1 + n + j, T, b[j], 0.0);
  // remember where row->col edges sit for plan extraction
  std::vector<std::vector<int>> rc_edge(n, std::vector<int>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      rc_edge[i][j] = static_cast<int>(g[1 + i].size());
      add_edge(1 + i, 1 + n + j, kInf, cost_matrix[static_cast<size_t>(i) * m + j]);
    }

  std::vector<double> pot(V, 0.0);  // all costs >= 0, zero potential is valid
  double remaining = sa;
  const double flow_eps = 1e-13 * std::max(1.0, sa);
  std::vector<double> dist(V);
  std::vector<int> pe_node(V), pe_idx(V);
  std::vector<char> done(V);
  int guard = 20 * (n * m + n + m) + 100;
  while (remaining > flow_eps) {
    if (--guard < 0) throw std::runtime_error("transport_lp: augmentation did not converge");
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(done.begin(), done.end(), 0);
    dist[S] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0.0, S});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (done[u]) continue;
      done[u] = 1;
      for (int k = 0; k < static_cast<int>(g[u].size()); ++k) {
        const Edge& e = g[u][k];
        if (done[e.to] || e.cap <= flow_eps) continue;
        double nd = d + e.cost + pot[u] - pot[e.to];
        if (nd < dist[e.to] - 1e-15) {
          dist[e.to] = nd;
          pe_node[e.to] = u;
          pe_idx[e.to] = k;
          pq.push({nd, e.to});
        }
      }
    }
    if (!done[T]) break;  // no augmenting path left
    for (int v = 0; v < V; ++v)
      if (done[v]) pot[v] += dist[v];
    double push = remaining;
    for (int v = T; v != S; v = pe_node[v]) push = std::min(push, g[pe_node[v]][pe_idx[v]].cap);
    for (int v = T; v != S; v = pe_node[v]) {
      Edge& e = g[pe_node[v]][pe_idx[v]];
      e.cap -= push;
      g[v][e.rev].cap += push;
    }
    remaining -= push;
  }

  TransportResult out;
  out.method = TransportMethod::lp;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const Edge& e = g[1 + i][rc_edge[i][j]];
      double f = g[1 + n + j][e.rev].cap;  // reverse capacity equals the flow
      if (f > kMassEps) {
        out.plan.push_back({i, j, f});
        out.cost += f * cost_matrix[static_cast<size_t>(i) * m + j];
      }
    }
  return out;
}

TransportResult transport_cost(const GridMeasure& nu, const GridMeasure& mu,
                               const SeparableCost& cost) {
  if (cost.dim != 1) throw std::invalid_argument("transport_cost: got 1D measures, cost.dim != 1");
  return transport_1d_monotone(nu, mu, cost.alpha);
}

TransportResult transport_cost(const ProductMeasure& nu, const ProductMeasure& mu,
                               const SeparableCost& cost) {
  if (nu.dim() != 2 || mu.dim() != 2 || cost.dim != 2)
    throw std::invalid_argument("transport_cost: product path expects k=2");
  const auto& n0 = nu.factors[0];
  const auto& n1 = nu.factors[1];
  const auto& m0 = mu.factors[0];
  const auto& m1 = mu.factors[1];
  int nn = n0.grid.n * n1.grid.n, mm = m0.grid.n * m1.grid.n;
  if (nn > kLpSupportCap || mm > kLpSupportCap)
    throw std::invalid_argument(
        "transport_cost: product support exceeds 64 points per side; coarsen the grid");
  std::vector<double> a(nn), b(mm), xs0(nn), xs1(nn), ys0(mm), ys1(mm);
  for (int i = 0; i < n0.grid.n; ++i)
    for (int j = 0; j < n1.grid.n; ++j) {
      int k = i * n1.grid.n + j;
      a[k] = n0.weights[i] * n1.weights[j];
      xs0[k] = n0.grid.point(i);
      xs1[k] = n1.grid.point(j);
    }
  for (int i = 0; i < m0.grid.n; ++i)
    for (int j = 0; j < m1.grid.n; ++j) {
      int k = i * m1.grid.n + j;
      b[k] = m0.weights[i] * m1.weights[j];
      ys0[k] = m0.grid.point(i);
      ys1[k] = m1.grid.point(j);
    }
  std::vector<double> c(static_cast<size_t>(nn) * mm);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < mm; ++j)
      c[static_cast<size_t>(i) * mm + j] =
          cost.alpha.eval(xs0[i] - ys0[j]) + cost.alpha.eval(xs1[i] - ys1[j]);
  return transport_lp(a, b, c);
}

}  // namespace tel
