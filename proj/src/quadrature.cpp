#include "fracalc/quadrature.hpp"

#include <map>
#include <mutex>

namespace fracalc {

namespace {

GaussRule make_rule(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  // Newton iteration on Legendre polynomials, nodes symmetric about 0.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

}  // namespace

const GaussRule& gauss_rule(int n) {
  if (n < 2 || n > 64) throw std::invalid_argument("gauss_rule: order out of range");
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

double richardson(std::vector<double> values,
                  const std::vector<double>& exponents) {
  if (values.empty()) throw std::invalid_argument("richardson: empty sequence");
  for (double p : exponents) {
    if (values.size() < 2) break;
    const double r = std::pow(2.0, -p);
    std::vector<double> next(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
      next[i] = (values[i + 1] - r * values[i]) / (1.0 - r);
    values = std::move(next);
  }
  return values.back();
}

}  // namespace fracalc
