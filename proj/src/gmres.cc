#include <fembasis/gmres.hh>

#include <cmath>
#include <numeric>
#include <vector>

#include <fembasis/errors.hh>

namespace fembasis {

void SolverConfig::validate() const
{
  if (restart < 1)
    throw InvalidConfig("restart length must be at least 1");
  if (!(tolerance > 0.0))
    throw InvalidConfig("tolerance must be positive");
}

namespace {

double dot(std::span<const double> a, std::span<const double> b)
{
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a)
{
  return std::sqrt(dot(a, a));
}

// r = b - A x
double residual(const LinearOperator& op, std::span<const double> b,
                std::span<const double> x, std::vector<double>& r)
{
  op(x, r);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = b[i] - r[i];
  return norm(r);
}

} // end anonymous namespace

SolverStatistics restartedGmres(const LinearOperator& op, std::span<const double> b,
                                std::span<double> x, const SolverConfig& config)
{
  config.validate();
  const std::size_t n = b.size();
  if (x.size() != n)
    throw ShapeMismatch("initial iterate and right-hand side differ in length");

  SolverStatistics stats;
  const double bnorm = norm(b);
  if (bnorm == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    stats.converged = true;
    return stats;
  }

  const std::size_t restart = std::min(config.restart, std::max<std::size_t>(n, 1));
  std::vector<double> r(n);
  double beta = residual(op, b, x, r);
  stats.relResidual = beta / bnorm;
  if (stats.relResidual <= config.tolerance) {
    stats.converged = true;
    return stats;
  }

  std::vector<std::vector<double>> basis(restart + 1, std::vector<double>(n));
  // column-major Hessenberg matrix, column j has j+2 relevant entries
  std::vector<std::vector<double>> hessenberg(restart, std::vector<double>(restart + 1));
  std::vector<double> cs(restart), sn(restart), g(restart + 1), y(restart);
  std::vector<double> w(n);
  const double reorthogonalizationThreshold = 1.0 / std::sqrt(2.0);

  while (stats.iterations < config.maxIterations && beta > 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      basis[0][i] = r[i] / beta;
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = beta;

    std::size_t k = 0;
    for (std::size_t j = 0; j < restart && stats.iterations < config.maxIterations; ++j) {
      op(basis[j], w);
      ++stats.iterations;
      auto& h = hessenberg[j];

      const double normBefore = norm(w);
      for (std::size_t i = 0; i <= j; ++i) {
        h[i] = dot(w, basis[i]);
        for (std::size_t l = 0; l < n; ++l)
          w[l] -= h[i] * basis[i][l];
      }
      double normAfter = norm(w);
      if (normAfter < reorthogonalizationThreshold * normBefore) {
        for (std::size_t i = 0; i <= j; ++i) {
          const double correction = dot(w, basis[i]);
          h[i] += correction;
          for (std::size_t l = 0; l < n; ++l)
            w[l] -= correction * basis[i][l];
        }
        normAfter = norm(w);
      }
      h[j + 1] = normAfter;

      for (std::size_t i = 0; i < j; ++i) {
        const double t = cs[i] * h[i] + sn[i] * h[i + 1];
        h[i + 1] = -sn[i] * h[i] + cs[i] * h[i + 1];
        h[i] = t;
      }
      const double d = std::hypot(h[j], h[j + 1]);
      cs[j] = d == 0.0 ? 1.0 : h[j] / d;
      sn[j] = d == 0.0 ? 0.0 : h[j + 1] / d;
      h[j] = d;
      h[j + 1] = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];
      k = j + 1;

      if (std::abs(g[j + 1]) <= config.tolerance * bnorm || normAfter == 0.0)
        break;
      for (std::size_t l = 0; l < n; ++l)
        basis[j + 1][l] = w[l] / normAfter;
    }

    // back substitution on the rotated triangular system
    for (std::size_t i = k; i-- > 0;) {
      double sum = g[i];
      for (std::size_t c = i + 1; c < k; ++c)
        sum -= hessenberg[c][i] * y[c];
      y[i] = hessenberg[i][i] == 0.0 ? 0.0 : sum / hessenberg[i][i];
    }
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t l = 0; l < n; ++l)
        x[l] += y[c] * basis[c][l];

    beta = residual(op, b, x, r);
    stats.relResidual = beta / bnorm;
    if (stats.relResidual <= config.tolerance) {
      stats.converged = true;
      break;
    }
  }
  return stats;
}

SolverResult gmres(const SparseSystem& matrix, const NestedValue& rhs, const SolverConfig& config)
{
  return gmres(matrix, rhs, rhs.mapShape(0.0), config);
}

SolverResult gmres(const SparseSystem& matrix, const NestedValue& rhs,
                   const NestedValue& initialGuess, const SolverConfig& config)
{
  const std::vector<double> b = matrix.gather(rhs);
  std::vector<double> x = matrix.gather(initialGuess);
  const auto stats = restartedGmres(
    [&](std::span<const double> in, std::span<double> out) { matrix.apply(in, out); }, b, x, config);

  SolverResult result;
  result.solution = rhs.mapShape(0.0);
  matrix.scatter(x, result.solution);
  result.relResidual = stats.relResidual;
  result.iterations = stats.iterations;
  result.converged = stats.converged;
  return result;
}

} // end namespace fembasis
