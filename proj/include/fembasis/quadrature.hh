#ifndef FEMBASIS_QUADRATURE_HH
#define FEMBASIS_QUADRATURE_HH

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include <fembasis/grid.hh>

namespace fembasis {

struct QuadraturePoint
{
  Vec2 position;
  double weight;
};

/** \brief n-point Gauss-Legendre rule on [0,1]; weights sum to 1
 *
 * Nodes are the roots of P_n, found by Newton iteration from the
 * Chebyshev-like initial guesses cos(pi (i + 3/4) / (n + 1/2)).
 */
inline std::vector<std::pair<double, double>> gaussLegendre(std::size_t n)
{
  std::vector<std::pair<double, double>> rule(n);
  if (n == 1) {
    rule[0] = {0.5, 1.0};
    return rule;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
    double derivative = 0.0;
    for (int iteration = 0; iteration < 100; ++iteration) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double p2 = ((2.0 * double(k) - 1.0) * x * p1 - (double(k) - 1.0) * p0) / double(k);
        p0 = p1;
        p1 = p2;
      }
      derivative = double(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16)
        break;
    }
    // map from [-1,1] to [0,1]
    rule[n - 1 - i] = {0.5 * (x + 1.0), 1.0 / ((1.0 - x * x) * derivative * derivative)};
  }
  return rule;
}

//! Tensor-product Gauss-Legendre rule on the reference square
inline std::vector<QuadraturePoint> squareRule(std::size_t pointsPerAxis)
{
  const auto line = gaussLegendre(pointsPerAxis);
  std::vector<QuadraturePoint> rule;
  rule.reserve(line.size() * line.size());
  for (const auto& [y, wy] : line)
    for (const auto& [x, wx] : line)
      rule.push_back({{x, y}, wx * wy});
  return rule;
}

} // end namespace fembasis

#endif // FEMBASIS_QUADRATURE_HH
