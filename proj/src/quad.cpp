#include "vlse/quad.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "vlse/errors.hpp"
#include "vlse/stats.hpp"

namespace vlse::quad {

Rule gauss_legendre(int k) {
  if (k < 2) throw DomainError("gauss_legendre: need k >= 2");
  Rule r;
  r.nodes.resize(k);
  r.weights.resize(k);
  const int half = (k + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_k.
    double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
    double p0, p1, dp;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = k * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    p0 = 1.0;
    p1 = x;
    for (int j = 2; j <= k; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = k * (x * p1 - p0) / (x * x - 1.0);
    r.nodes[i] = -x;
    r.nodes[k - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.weights[i] = w;
    r.weights[k - 1 - i] = w;
  }
  return r;
}

Rule gauss_hermite(int k) {
  if (k < 2) throw DomainError("gauss_hermite: need k >= 2");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(k, k);
  for (int i = 1; i < k; ++i) {
    const double b = std::sqrt(i / 2.0);
    jacobi(i, i - 1) = b;
    jacobi(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  Rule r;
  r.nodes.resize(k);
  r.weights.resize(k);
  const double sqrt_pi = std::sqrt(M_PI);
  for (int i = 0; i < k; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    const double q0 = es.eigenvectors()(0, i);
    r.weights[i] = sqrt_pi * q0 * q0;
  }
  return r;
}

std::vector<double> graded_edges(double a, double b, bool grade_left, bool grade_right,
                                 int levels) {
  if (!(b > a)) throw DomainError("graded_edges: empty interval");
  const double len = b - a;
  std::vector<double> edges;
  edges.push_back(a);
  if (grade_left) {
    for (int j = levels; j >= 1; --j) edges.push_back(a + len * 0.5 * std::pow(0.5, j));
  }
  edges.push_back(a + 0.5 * len);
  if (grade_right) {
    for (int j = 1; j <= levels; ++j) edges.push_back(b - len * 0.5 * std::pow(0.5, j));
  }
  edges.push_back(b);
  return edges;
}

double integrate_1d(const std::function<double(double)>& f, const std::vector<double>& edges,
                    const Rule& rule) {
  NeumaierSum acc;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double lo = edges[p], hi = edges[p + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    if (half <= 0.0) continue;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc.add(half * rule.weights[i] * f(mid + half * rule.nodes[i]));
  }
  return acc.value();
}

namespace {

// Lower triangle {0 <= s <= t <= tstar} via s = v*t.
double integrate_lower_triangle(const std::function<double(double, double)>& f, double tstar,
                                const Rule& rule) {
  const auto t_edges = graded_edges(0.0, tstar, true, false);
  const auto v_edges = graded_edges(0.0, 1.0, true, true);
  NeumaierSum acc;
  for (std::size_t pt = 0; pt + 1 < t_edges.size(); ++pt) {
    const double tm = 0.5 * (t_edges[pt] + t_edges[pt + 1]);
    const double th = 0.5 * (t_edges[pt + 1] - t_edges[pt]);
    for (std::size_t it = 0; it < rule.nodes.size(); ++it) {
      const double t = tm + th * rule.nodes[it];
      const double wt = th * rule.weights[it] * t;  // Jacobian t
      NeumaierSum inner;
      for (std::size_t pv = 0; pv + 1 < v_edges.size(); ++pv) {
        const double vm = 0.5 * (v_edges[pv] + v_edges[pv + 1]);
        const double vh = 0.5 * (v_edges[pv + 1] - v_edges[pv]);
        for (std::size_t iv = 0; iv < rule.nodes.size(); ++iv) {
          const double v = vm + vh * rule.nodes[iv];
          inner.add(vh * rule.weights[iv] * f(v * t, t));
        }
      }
      acc.add(wt * inner.value());
    }
  }
  return acc.value();
}

}  // namespace

double integrate_square(const std::function<double(double, double)>& f, double tstar,
                        const Rule& rule) {
  const double lower = integrate_lower_triangle(f, tstar, rule);
  const double upper =
      integrate_lower_triangle([&f](double s, double t) { return f(t, s); }, tstar, rule);
  return lower + upper;
}

double improper_sweep(const std::function<double(double)>& eval, double t0, double rel_tol,
                      int max_doublings) {
  double tstar = t0;
  double prev = eval(tstar);
  for (int i = 0; i < max_doublings; ++i) {
    tstar *= 2.0;
    const double cur = eval(tstar);
    const double scale = std::max(std::fabs(cur), std::fabs(prev));
    if (scale == 0.0 || std::fabs(cur - prev) <= rel_tol * scale) return cur;
    prev = cur;
  }
  throw QuadratureNotConverged("improper_sweep: truncation ladder exhausted");
}

}  // namespace vlse::quad
