#include <fembasis/stokes.hh>

#include <cmath>
#include <cstdio>
#include <exception>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <fembasis/errors.hh>
#include <fembasis/quadrature.hh>
#include <fembasis/vtu.hh>

namespace fembasis {

BasisSpec taylorHoodSpec(MergingStrategy velocity, MergingStrategy root, std::size_t components)
{
  std::vector<BasisSpec> children;
  children.push_back(BasisSpec::power(BasisSpec::lagrange(2), components, velocity));
  children.push_back(BasisSpec::lagrange(1));
  return BasisSpec::composite(std::move(children), root);
}

RangeValue drivenCavityVelocity(Vec2 x)
{
  if (x.x <= 1e-8)
    return RangeValue(RangeValue::List{0.0, 1.0});
  return RangeValue(RangeValue::List{0.0, 0.0});
}

namespace {

void requireTaylorHoodShape(const BasisSpec& spec)
{
  if (!spec.isComposite() || spec.degree() != 2 || !spec.child(0).isPower()
      || spec.child(0).degree() != 2 || !spec.child(0).child(0).isLeaf()
      || !spec.child(1).isLeaf())
    throw InvalidSpec("Stokes assembler needs composite(power(leaf,2),leaf), got " + render(spec));
}

} // end anonymous namespace

DenseMatrix assembleElementMatrix(const LocalView& view, const ElementGeometry& geometry,
                                  std::size_t quadraturePoints)
{
  requireTaylorHoodShape(view.basis().spec());
  constexpr std::size_t dim = 2;

  DenseMatrix elementMatrix(view.size());

  // all velocity components share one finite element
  const std::size_t velocityLeaf[dim] = {view.viewLeaf({0, 0}), view.viewLeaf({0, 1})};
  const std::size_t pressureLeaf = view.viewLeaf({1});
  const LagrangeQk& velocityFE = view.finiteElement(velocityLeaf[0]);
  const LagrangeQk& pressureFE = view.finiteElement(pressureLeaf);

  const Vec2 jacobianInverseTransposed = geometry.jacobianInverseTransposed();
  const double integrationElement = geometry.integrationElement();

  std::vector<Vec2> referenceGradients;
  std::vector<Vec2> gradients(velocityFE.size());
  std::vector<double> pressureValues;

  for (const auto& qp : squareRule(quadraturePoints)) {
    const double weight = qp.weight * integrationElement;

    velocityFE.evaluateJacobian(qp.position, referenceGradients);
    for (std::size_t i = 0; i < gradients.size(); ++i)
      gradients[i] = {referenceGradients[i].x * jacobianInverseTransposed.x,
                      referenceGradients[i].y * jacobianInverseTransposed.y};

    for (std::size_t i = 0; i < velocityFE.size(); ++i)
      for (std::size_t j = 0; j < velocityFE.size(); ++j) {
        const double a = (gradients[i].x * gradients[j].x + gradients[i].y * gradients[j].y) * weight;
        for (std::size_t k = 0; k < dim; ++k)
          elementMatrix(view.localIndex(velocityLeaf[k], i), view.localIndex(velocityLeaf[k], j)) += a;
      }

    pressureFE.evaluateFunction(qp.position, pressureValues);
    for (std::size_t i = 0; i < velocityFE.size(); ++i)
      for (std::size_t j = 0; j < pressureFE.size(); ++j)
        for (std::size_t k = 0; k < dim; ++k) {
          const double derivative = k == 0 ? gradients[i].x : gradients[i].y;
          const double b = derivative * pressureValues[j] * weight;
          const std::size_t row = view.localIndex(velocityLeaf[k], i);
          const std::size_t col = view.localIndex(pressureLeaf, j);
          elementMatrix(row, col) += b;
          elementMatrix(col, row) += b;
        }
  }
  return elementMatrix;
}

namespace {

void assembleRange(const GlobalBasis& basis, SparseSystem& matrix,
                   std::size_t firstElement, std::size_t lastElement)
{
  auto view = basis.localView();
  for (std::size_t e = firstElement; e < lastElement; ++e) {
    view.bind(e);
    const DenseMatrix elementMatrix = assembleElementMatrix(view, view.geometry());
    for (std::size_t i = 0; i < elementMatrix.rows(); ++i) {
      const MultiIndex& row = view.index(i);
      for (std::size_t j = 0; j < elementMatrix.cols(); ++j)
        matrix.addToEntry(row, view.index(j), elementMatrix(i, j));
    }
  }
}

} // end anonymous namespace

void assembleStokesMatrixSerial(const GlobalBasis& basis, SparseSystem& matrix)
{
  assembleRange(basis, matrix, 0, basis.grid().size());
}

void assembleStokesMatrix(const GlobalBasis& basis, SparseSystem& matrix)
{
#ifdef _OPENMP
  const std::size_t elements = basis.grid().size();
  const int threads = std::max(1, std::min<int>(omp_get_max_threads(), int(elements)));
  std::vector<SparseSystem> partial(threads);
  std::vector<std::exception_ptr> errors(threads);

#pragma omp parallel num_threads(threads)
  {
    const std::size_t t = omp_get_thread_num();
    const std::size_t first = elements * t / threads;
    const std::size_t last = elements * (t + 1) / threads;
    try {
      assembleRange(basis, partial[t], first, last);
    }
    catch (...) {
      errors[t] = std::current_exception();
    }
  }

  for (const auto& error : errors)
    if (error)
      std::rethrow_exception(error);
  for (const auto& part : partial)
    matrix.accumulate(part);
#else
  assembleStokesMatrixSerial(basis, matrix);
#endif
}

std::vector<MultiIndex> applyDirichlet(SparseSystem& matrix, NestedValue& rhs,
                                       const GlobalBasis& basis, const GridFunction& g,
                                       bool pinPressure)
{
  const auto velocity = subspaceBasis(basis, {0});

  NestedMask isBoundary;
  resizeFromBasis(isBoundary, basis, false);
  std::set<MultiIndex> rows;
  forEachBoundaryDOF(velocity, [&](const MultiIndex& mi) {
    isBoundary.entry(mi) = true;
    rows.insert(mi);
  });

  interpolateMasked(velocity, rhs, g, isBoundary);

  for (const auto& row : rows)
    matrix.setRowToIdentity(row);

  if (pinPressure) {
    const MultiIndex first = basis.globalIndex(TreePath{1}, 0);
    matrix.setRowToIdentity(first);
    rhs.entry(first) = 0.0;
    rows.insert(first);
  }
  return {rows.begin(), rows.end()};
}

double weakDivergenceNorm(const SparseSystem& matrix, const GlobalBasis& basis,
                          const NestedValue& x, const std::vector<MultiIndex>& excludedRows)
{
  const auto [first, last] = basis.leafRange({1});
  std::vector<std::size_t> pressureOrdinals;
  for (std::size_t l = first; l < last; ++l)
    for (std::size_t n = 0; n < basis.leaf(l).flatSize(); ++n)
      pressureOrdinals.push_back(matrix.ordinal(basis.globalIndex(l, n)));

  std::vector<double> velocityOnly = matrix.gather(x);
  for (auto k : pressureOrdinals)
    velocityOnly[k] = 0.0;
  std::vector<double> y(velocityOnly.size());
  matrix.apply(velocityOnly, y);

  std::set<std::size_t> excluded;
  for (const auto& row : excludedRows)
    excluded.insert(matrix.ordinal(row));

  double sum = 0.0;
  for (auto k : pressureOrdinals)
    if (!excluded.contains(k))
      sum += y[k] * y[k];
  return std::sqrt(sum);
}

DrivenCavityResult runDrivenCavity(const StructuredGrid& grid, const SolverConfig& config,
                                   const std::string& outputPath)
{
  config.validate();
  const GlobalBasis basis(grid, taylorHoodSpec());

  SparseSystem matrix;
  assembleStokesMatrix(basis, matrix);

  DrivenCavityResult result;
  resizeFromBasis(result.rhs, basis);
  const auto constrained = applyDirichlet(matrix, result.rhs, basis, drivenCavityVelocity,
                                          config.pinPressure);
  matrix.freeze();

  auto solved = gmres(matrix, result.rhs, result.rhs, config);
  result.solution = std::move(solved.solution);

  double rhsNorm = 0.0;
  result.rhs.forEachScalar([&](double v) { rhsNorm += v * v; });

  auto& summary = result.summary;
  summary.dimension = basis.dimension();
  summary.iterations = solved.iterations;
  summary.relResidual = solved.relResidual;
  summary.converged = solved.converged;
  summary.rhsNorm = std::sqrt(rhsNorm);
  summary.divergence = weakDivergenceNorm(matrix, basis, result.solution, constrained);

  if (!outputPath.empty()) {
    const auto velocity = subspaceBasis(basis, {0});
    const auto pressure = subspaceBasis(basis, {1});
    writeVtu(
      grid,
      [&](Vec2 p) {
        const auto u = evaluateDiscrete(velocity, result.solution, p);
        return Vec2{u[0].scalar(), u[1].scalar()};
      },
      [&](Vec2 p) { return evaluateDiscrete(pressure, result.solution, p).scalar(); },
      outputPath);
  }
  return result;
}

std::string formatSummary(const DrivenCavitySummary& summary)
{
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "dim=%zu iters=%zu relres=%.3e div=%.3e",
                summary.dimension, summary.iterations, summary.relResidual, summary.divergence);
  return buffer;
}

} // end namespace fembasis
