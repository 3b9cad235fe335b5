#include "lienard/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace lienard::specfun {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

constexpr double kStirlingCutoff = 15.0;

double stirling_series(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
}

double stirling_leading(double x) {
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  if (std::isinf(x)) return x;
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  if (x == 1.0 || x == 2.0) return 0.0;
  return x < kStirlingCutoff ? lanczos_log_gamma(x) : stirling_leading(x) + stirling_series(x);
}

double log_gamma_stirling_remainder(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma_stirling_remainder: argument must be positive");
  if (x >= kStirlingCutoff) return stirling_series(x);
  return log_gamma(x) - stirling_leading(x);
}

double log_factorial(unsigned n) {
  double acc = 0.0;
  if (n <= 20) {
    for (unsigned i = 2; i <= n; ++i) acc += std::log(static_cast<double>(i));
    return acc;
  }
  return log_gamma(static_cast<double>(n) + 1.0);
}

double laguerre_assoc(unsigned n, double alpha, double y) {
  if (!(alpha > -1.0)) throw std::invalid_argument("laguerre_assoc: alpha must exceed -1");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - y;
  for (unsigned j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    const double next = ((2.0 * jd + 1.0 + alpha - y) * cur - (jd + alpha) * prev) / (jd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_assoc_derivative(unsigned n, double alpha, double y) {
  if (n == 0) return 0.0;
  return -laguerre_assoc(n - 1, alpha + 1.0, y);
}

double laguerre_assoc_second_derivative(unsigned n, double alpha, double y) {
  if (n < 2) return 0.0;
  return laguerre_assoc(n - 2, alpha + 2.0, y);
}

double hermite(unsigned n, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (unsigned j = 1; j < n; ++j) {
    const double next = 2.0 * x * cur - 2.0 * static_cast<double>(j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
  return acc;
}

namespace {

// {P_n(x), P_n′(x)} for |x| < 1.
std::pair<double, double> legendre_with_derivative(unsigned order, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (unsigned j = 2; j <= order; ++j) {
    const double jd = static_cast<double>(j);
    const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
    p0 = p1;
    p1 = p2;
  }
  return {p1, static_cast<double>(order) * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre(unsigned order) {
  if (order == 0) throw std::invalid_argument("gauss_legendre: order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double n = static_cast<double>(order);
  for (unsigned i = 0; i < (order + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(order, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(order, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

QuadratureRule composite_gauss_legendre(double lo, double hi, unsigned panels, unsigned order) {
  if (panels < 1) throw std::invalid_argument("quadrature: panels must be >= 1");
  if (order < 4 || order > 16) throw std::invalid_argument("quadrature: order must lie in [4, 16]");
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("quadrature: interval must be finite and non-empty");
  }
  const auto base = gauss_legendre(order);
  QuadratureRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(panels) * order);
  rule.weights.reserve(static_cast<std::size_t>(panels) * order);
  const double width = (hi - lo) / static_cast<double>(panels);
  for (unsigned p = 0; p < panels; ++p) {
    const double left = lo + width * static_cast<double>(p);
    const double mid = left + 0.5 * width;
    for (unsigned i = 0; i < order; ++i) {
      rule.nodes.push_back(mid + 0.5 * width * base.nodes[i]);
      rule.weights.push_back(0.5 * width * base.weights[i]);
    }
  }
  return rule;
}

QuadratureRule quadrature_nodes(double y_max, unsigned panels, unsigned order) {
  if (!(y_max > 0.0)) throw std::invalid_argument("quadrature: y_max must be positive");
  return composite_gauss_legendre(0.0, y_max, panels, order);
}

double laguerre_truncation(double alpha, unsigned n) {
  return std::max(200.0, 2.0 * alpha + 40.0 * static_cast<double>(n) + 100.0);
}

}  // namespace lienard::specfun
