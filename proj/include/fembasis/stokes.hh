#ifndef FEMBASIS_STOKES_HH
#define FEMBASIS_STOKES_HH

#include <cstddef>
#include <string>
#include <vector>

#include <fembasis/basis.hh>
#include <fembasis/functions.hh>
#include <fembasis/gmres.hh>
#include <fembasis/nested.hh>
#include <fembasis/sparsesystem.hh>

namespace fembasis {

//! Row-major square matrix for element contributions
class DenseMatrix
{
public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

//! Taylor-Hood tree with two velocity components: composite(power(lagrange(2),2,BI),lagrange(1),BL)
BasisSpec taylorHoodSpec(MergingStrategy velocity = MergingStrategy::BlockedInterleaved,
                         MergingStrategy root = MergingStrategy::BlockedLexicographic,
                         std::size_t components = 2);

//! Driven-cavity boundary data: (0,1) on the wall x = 0, (0,0) elsewhere
RangeValue drivenCavityVelocity(Vec2 x);

inline constexpr std::size_t stokesQuadraturePoints = 3;

/**
 * \brief Element stiffness matrix of the Stokes operator
 *
 * The view must be bound and belong to a basis of the form
 * composite(power(leaf, 2), leaf) with any strategies. Rows and columns
 * are local indices. Velocity-velocity entries hold
 * delta_kl int grad phi_i . grad phi_j, velocity-pressure entries and
 * their transposes int (grad phi_i)_k theta_j; the pressure block stays zero.
 * \throws UnboundView, InvalidSpec
 */
DenseMatrix assembleElementMatrix(const LocalView& view, const ElementGeometry& geometry,
                                  std::size_t quadraturePoints = stokesQuadraturePoints);

//! Sequential reference assembler: element loop in index order
void assembleStokesMatrixSerial(const GlobalBasis& basis, SparseSystem& matrix);

/// Element-parallel assembler. Threads fill private systems over contiguous
/// element chunks, which are merged in thread order.
void assembleStokesMatrix(const GlobalBasis& basis, SparseSystem& matrix);

/**
 * \brief Impose velocity Dirichlet conditions on the whole boundary
 *
 * Boundary velocity rows become identity rows and their right-hand side
 * entries receive the nodal values of g. With `pinPressure` the row of the
 * first pressure degree of freedom is also replaced, with right-hand side 0.
 * Returns the sorted list of replaced rows.
 */
std::vector<MultiIndex> applyDirichlet(SparseSystem& matrix, NestedValue& rhs,
                                       const GlobalBasis& basis, const GridFunction& g,
                                       bool pinPressure = false);

struct DrivenCavitySummary
{
  std::size_t dimension = 0;
  std::size_t iterations = 0;
  double relResidual = 0.0;
  double divergence = 0.0;   //!< || B u ||_2 over the pressure rows
  double rhsNorm = 0.0;
  bool converged = false;
};

struct DrivenCavityResult
{
  DrivenCavitySummary summary;
  NestedValue solution;
  NestedValue rhs;
};

/// Weak divergence of the velocity part of x: the pressure rows of the frozen
/// matrix applied to x with its pressure entries zeroed. Rows listed in
/// `excludedRows` are skipped.
double weakDivergenceNorm(const SparseSystem& matrix, const GlobalBasis& basis,
                          const NestedValue& x, const std::vector<MultiIndex>& excludedRows = {});

/// Assemble and solve the driven cavity on `grid`; writes a VTU file unless
/// `outputPath` is empty. GMRes starts from the right-hand side so that the
/// Dirichlet entries of the iterate are exact from the start.
DrivenCavityResult runDrivenCavity(const StructuredGrid& grid, const SolverConfig& config,
                                   const std::string& outputPath);

//! "dim=<n> iters=<k> relres=<r> div=<d>"
std::string formatSummary(const DrivenCavitySummary& summary);

} // end namespace fembasis

#endif // FEMBASIS_STOKES_HH
