#include "fracalc/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "fracalc/parallel.hpp"
#include "fracalc/quadrature.hpp"

namespace fracalc {
namespace spectral {

void fft(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)))
    throw std::invalid_argument("fft: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * M_PI / static_cast<double>(len) *
                       (inverse ? 1.0 : -1.0);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& z : a) z /= static_cast<double>(n);
}

std::complex<double> symbol(OperatorKind k, double alpha, double xi) {
  if (xi == 0.0) return {0.0, 0.0};
  const double s = xi > 0.0 ? 1.0 : -1.0;
  const double ax = std::fabs(xi);
  const double half = 0.5 * M_PI * alpha;
  const std::complex<double> plus(std::cos(half), s * std::sin(half));
  const std::complex<double> minus = std::conj(plus);
  switch (k) {
    case OperatorKind::WeylIntegral:
      return std::pow(ax, -alpha) * plus;
    case OperatorKind::RiemannLiouvilleIntegral:
      return std::pow(ax, -alpha) * minus;
    case OperatorKind::RightDerivative:
      return std::pow(ax, alpha) * minus;
    case OperatorKind::LeftDerivative:
      return std::pow(ax, alpha) * plus;
    case OperatorKind::KAlphaH:
      return {std::pow(ax, -alpha), 0.0};
    case OperatorKind::KAlpha:
      return {std::pow(ax, -alpha) / std::tan(half), 0.0};
    case OperatorKind::HAlpha:
      return {0.0, s * std::pow(ax, -alpha)};
    case OperatorKind::KMinusAlpha:
      return {std::pow(ax, alpha), 0.0};
    case OperatorKind::HMinusAlpha:
      return {0.0, s * std::pow(ax, alpha)};
  }
  throw std::invalid_argument("symbol: unknown operator kind");
}

namespace {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

/// Smooth spectral window carved out for the band integral; quartic
/// exponential so the residual multiplier (1-w) m vanishes to high order
/// at xi = 0.
double band_window(double xi, double xi0) {
  const double r = xi / xi0;
  const double r4 = r * r * r * r;
  return r4 > 42.0 ? 0.0 : std::exp(-r4);
}

}  // namespace

std::vector<double> apply_multiplier(
    const GridFunction& f,
    const std::function<std::complex<double>(double)>& m,
    bool* aliasing_warning) {
  const std::size_t n = f.size();
  const double h = f.h();
  const std::size_t N = next_pow2(8 * n);
  const double dxi = 2.0 * M_PI / (static_cast<double>(N) * h);
  const double xi0 = 64.0 * dxi;
  const double xi_cut = xi0 * std::pow(42.0, 0.25);

  std::vector<std::complex<double>> buf(N, {0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) buf[j] = f.value(j);
  fft(buf, false);

  if (aliasing_warning) {
    // Energy still present at the Nyquist mode means the sampling does not
    // resolve the function (or the multiplier amplifies round-off there).
    double peak = 0.0;
    for (const auto& z : buf) peak = std::max(peak, std::abs(z));
    const double nyq = std::abs(buf[N / 2] * m(M_PI / h));
    *aliasing_warning = peak > 0.0 && nyq > 1e-8 * peak;
  }

  std::vector<std::complex<double>> spec(N);
  for (std::size_t k = 0; k < N; ++k) {
    const double kk = k <= N / 2 ? static_cast<double>(k)
                                 : static_cast<double>(k) -
                                       static_cast<double>(N);
    const double xi = kk * dxi;
    if (k == 0) {
      spec[k] = 0.0;
      continue;
    }
    spec[k] = buf[k] * m(xi) * (1.0 - band_window(std::fabs(xi), xi0));
  }
  fft(spec, true);

  // Band integral (1/pi) Re int_0^xi_cut w m fhat exp(i x xi) dxi against
  // the directly evaluated transform. Panel widths are capped so the
  // exp(i x xi) phase stays resolved, and shrink geometrically toward the
  // integrable singularity of the multiplier at xi = 0.
  const double x_span = std::max({1.0, std::fabs(f.x0()), std::fabs(f.x_end())});
  const double cap = 6.0 / x_span;
  const double xi_floor = 1e-60;   // truncation tail ~ xi_floor^(1-alpha)
  const double xi_linear = 1e-12;  // below this exp(i x xi) ~ 1 + i x xi
  const GaussRule& rule = gauss_rule(16);

  struct BandNode {
    double xi;
    std::complex<double> val;  // quadrature weight * w * m * fhat
  };
  std::vector<double> panel_edges;  // descending
  for (double hi = xi_cut; hi > xi_floor;) {
    const double lo = hi / 2.0 < cap ? hi / 2.0 : hi - cap;
    panel_edges.push_back(hi);
    hi = lo;
  }
  panel_edges.push_back(xi_floor);

  std::vector<BandNode> nodes;
  nodes.reserve(16 * panel_edges.size());
  for (std::size_t p = 0; p + 1 < panel_edges.size(); ++p) {
    const double b = panel_edges[p], a = panel_edges[p + 1];
    const double mid = 0.5 * (a + b), halfw = 0.5 * (b - a);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double xi = mid + halfw * rule.nodes[q];
      std::complex<double> fhat(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const double ph = -xi * f.node_x(j);
        fhat += f.value(j) * std::complex<double>(std::cos(ph), std::sin(ph));
      }
      fhat *= h;
      nodes.push_back(
          {xi, rule.weights[q] * halfw * band_window(xi, xi0) * m(xi) * fhat});
    }
  }

  // exp(i x xi) ~ 1 + i x xi for the deep sub-linear nodes, so they
  // collapse into two scalars instead of per-output exponentials.
  std::complex<double> s0(0.0, 0.0), s1(0.0, 0.0);
  std::vector<BandNode> osc;
  osc.reserve(nodes.size());
  for (const auto& nd : nodes) {
    if (nd.xi < xi_linear) {
      s0 += nd.val;
      s1 += nd.val * nd.xi;
    } else {
      osc.push_back(nd);
    }
  }

  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t j) {
    const double x = f.node_x(j);
    std::complex<double> acc = s0 + std::complex<double>(0.0, x) * s1;
    for (const auto& nd : osc) {
      const double ph = x * nd.xi;
      acc += nd.val * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    out[j] = spec[j].real() + acc.real() / M_PI;
  });
  return out;
}

GridFunction apply_symbol(const GridFunction& f, OperatorKind k,
                          const Alpha& a) {
  auto m = [&](double xi) { return symbol(k, a.alpha, xi); };
  std::vector<double> v = apply_multiplier(f, m);
  const bool derivative_kind = k == OperatorKind::RightDerivative ||
                               k == OperatorKind::LeftDerivative ||
                               k == OperatorKind::KMinusAlpha ||
                               k == OperatorKind::HMinusAlpha;
  const double beta = derivative_kind ? 1.0 + a.alpha : 1.0 - a.alpha;
  TailModel right = std::fabs(f.x_end()) > 1e-9
                        ? TailModel::power_decay(beta, v.back(), f.x_end())
                        : TailModel::zero(f.x_end());
  TailModel left = std::fabs(f.x0()) > 1e-9
                       ? TailModel::power_decay(beta, v.front(), f.x0())
                       : TailModel::zero(f.x0());
  return f.with_values(std::move(v), right, left);
}

}  // namespace spectral
}  // namespace fracalc
