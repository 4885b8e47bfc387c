#ifndef FEMBASIS_GMRES_HH
#define FEMBASIS_GMRES_HH

#include <cstddef>
#include <functional>
#include <span>

#include <fembasis/nested.hh>
#include <fembasis/sparsesystem.hh>

namespace fembasis {

struct SolverConfig
{
  std::size_t restart = 100;
  std::size_t maxIterations = 5000;
  double tolerance = 1e-8;   //!< on ||b - Ax|| / ||b||
  bool pinPressure = false;

  //! \throws InvalidConfig
  void validate() const;
};

struct SolverStatistics
{
  double relResidual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

//! y = A x
using LinearOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

/**
 * \brief Restarted GMRes without preconditioner
 *
 * Arnoldi with modified Gram-Schmidt, repeated once when the norm of the new
 * vector drops below 1/sqrt(2) of its norm before orthogonalization; the
 * least-squares problem is updated by Givens rotations. `x` holds the
 * initial iterate on entry and the approximate solution on exit. A zero
 * right-hand side yields x = 0 exactly. Iterations count Arnoldi steps.
 */
SolverStatistics restartedGmres(const LinearOperator& op, std::span<const double> b,
                                std::span<double> x, const SolverConfig& config);

struct SolverResult
{
  NestedValue solution;
  double relResidual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

//! Solve a frozen system, starting from zero; \throws NotFrozen, ShapeMismatch
SolverResult gmres(const SparseSystem& matrix, const NestedValue& rhs, const SolverConfig& config);

//! Solve a frozen system from the given initial iterate
SolverResult gmres(const SparseSystem& matrix, const NestedValue& rhs,
                   const NestedValue& initialGuess, const SolverConfig& config);

} // end namespace fembasis

#endif // FEMBASIS_GMRES_HH
