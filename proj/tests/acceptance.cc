// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fembasis/stokes.hh>
#include <fembasis/vtu.hh>

#include "oracles.hh"
#include "vturead.hh"

using namespace fembasis;
using MI = MultiIndex;
using S = MergingStrategy;

namespace {

struct Outcome
{
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what)
  {
    if (!condition && passed) {
      passed = false;
      detail = what;
    }
  }
};

std::string format(const char* fmt, double a, double b = 0.0)
{
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), fmt, a, b);
  return buffer;
}

Outcome strategyTable()
{
  Outcome out;
  const StructuredGrid grid(4, 4);
  std::size_t compared = 0;
  for (auto outer : {S::BlockedLexicographic, S::FlatLexicographic})
    for (auto inner : {S::BlockedLexicographic, S::BlockedInterleaved, S::FlatLexicographic, S::FlatInterleaved}) {
      const GlobalBasis basis(grid, taylorHoodSpec(inner, outer, 3));
      out.require(basis.leaf(0).flatSize() == 81 && basis.leaf(3).flatSize() == 25, "leaf sizes");
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 81; ++i, ++compared) {
          const MI got = basis.globalIndex(TreePath{0, k}, i);
          const MI want = testing::strategyTableIndex(outer, inner, false, k, i, 81, 3);
          out.require(got == want, std::string(shortName(outer)) + "(" + std::string(shortName(inner))
                                     + ") v_x" + std::to_string(k) + "," + std::to_string(i) + " gave "
                                     + got.toString() + ", expected " + want.toString());
        }
      for (std::size_t j = 0; j < 25; ++j, ++compared) {
        const MI got = basis.globalIndex(TreePath{1}, j);
        const MI want = testing::strategyTableIndex(outer, inner, true, 0, j, 81, 3);
        out.require(got == want, "p_" + std::to_string(j) + " gave " + got.toString());
      }
    }

  const GlobalBasis flflat(grid, taylorHoodSpec(S::FlatLexicographic, S::FlatLexicographic, 3));
  const GlobalBasis blbi(grid, taylorHoodSpec(S::BlockedInterleaved, S::BlockedLexicographic, 3));
  auto view = flflat.localView();
  view.bind(0);
  out.require(view.index(view.localIndex(TreePath{1}, 0)) == MI{243}, "FL(FL) p_0 through local view");
  out.require(blbi.globalIndex(TreePath{0, 2}, 1) == MI{0, 1, 2}, "BL(BI) v_x2,1");
  if (out.passed)
    out.detail = std::to_string(compared) + " indices over 8 strategy pairs";
  return out;
}

Outcome indexTreeProperties()
{
  Outcome out;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> side(1, 4);
  std::size_t prefixes = 0, maxDimension = 0;
  for (int trial = 0; trial < 100 && out.passed; ++trial) {
    const BasisSpec spec = testing::randomSpec(rng, 3);
    const GlobalBasis basis(StructuredGrid(side(rng), side(rng)), spec);

    std::set<MI> distinct;
    auto view = basis.localView();
    for (std::size_t e = 0; e < basis.grid().size(); ++e) {
      view.bind(e);
      for (std::size_t i = 0; i < view.size(); ++i)
        distinct.insert(view.index(i));
    }
    const std::vector<MI> entries(distinct.begin(), distinct.end());
    maxDimension = std::max(maxDimension, entries.size());

    out.require(validateIndexTree(entries), "invalid index tree for " + render(spec));
    out.require(testing::PathTrie(entries).isIndexTree(), "trie oracle rejects " + render(spec));
    out.require(basis.dimension() == entries.size(), "dimension mismatch for " + render(spec));

    std::set<MI> realized;
    for (const auto& mi : entries)
      for (std::size_t n = 0; n <= mi.size(); ++n)
        realized.insert(mi.prefix(n));
    for (const auto& p : realized) {
      ++prefixes;
      out.require(basis.size(p) == prefixDegree(entries, p),
                  "size" + p.toString() + " mismatch for " + render(spec));
    }
  }
  if (out.passed)
    out.detail = "100 specs, " + std::to_string(prefixes) + " prefixes, largest dimension "
                 + std::to_string(maxDimension);
  return out;
}

Outcome shapeFunctions()
{
  Outcome out;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0), interior(0.01, 0.99);
  const double h = 1e-5;
  double kronecker = 0.0, unity = 0.0, fd = 0.0;
  for (int k : {1, 2}) {
    const LagrangeQk fe(k);
    for (std::size_t n = 0; n < fe.size(); ++n) {
      const auto v = fe.evaluateValues(fe.node(n));
      for (std::size_t m = 0; m < fe.size(); ++m)
        kronecker = std::max(kronecker, std::abs(v[m] - (m == n ? 1.0 : 0.0)));
    }
    for (int trial = 0; trial < 100; ++trial) {
      const Vec2 xi{u(rng), u(rng)};
      double s = 0.0;
      for (double v : fe.evaluateValues(xi))
        s += v;
      unity = std::max(unity, std::abs(s - 1.0));

      const Vec2 c{interior(rng), interior(rng)};
      const auto g = fe.evaluateGradients(c);
      const auto xp = fe.evaluateValues({c.x + h, c.y}), xm = fe.evaluateValues({c.x - h, c.y});
      const auto yp = fe.evaluateValues({c.x, c.y + h}), ym = fe.evaluateValues({c.x, c.y - h});
      for (std::size_t m = 0; m < fe.size(); ++m) {
        fd = std::max(fd, std::abs(g[m].x - (xp[m] - xm[m]) / (2 * h)));
        fd = std::max(fd, std::abs(g[m].y - (yp[m] - ym[m]) / (2 * h)));
      }
    }
  }
  out.require(kronecker <= 1e-14, format("Kronecker error %.3e", kronecker));
  out.require(unity <= 1e-13, format("partition of unity error %.3e", unity));
  out.require(fd <= 1e-6, format("finite difference error %.3e", fd));
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "Kronecker %.1e, unity %.1e, gradient %.1e", kronecker, unity, fd);
  if (out.passed)
    out.detail = buffer;
  return out;
}

Outcome interpolationExactness()
{
  Outcome out;
  const GlobalBasis basis(StructuredGrid(3, 3), parseSpec("lagrange(2)"));
  auto f = [](Vec2 p) { return p.x * p.x * p.y * p.y; };
  NestedValue x;
  resizeFromBasis(x, basis);
  interpolate(basis, x, [&](Vec2 p) { return RangeValue(f(p)); });

  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double error = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Vec2 p{u(rng), u(rng)};
    error = std::max(error, std::abs(evaluateDiscrete(basis, x, p).scalar() - f(p)));
  }
  out.require(error < 1e-10, format("max error %.3e", error));
  if (out.passed)
    out.detail = format("max error %.2e at 100 points", error);
  return out;
}

std::set<MI> boundarySet(const SubspaceBasis& basis)
{
  std::set<MI> s;
  forEachBoundaryDOF(basis, [&](const MI& mi) { s.insert(mi); });
  return s;
}

Outcome maskedInterpolation()
{
  Outcome out;
  const StructuredGrid grid(4, 4);
  const std::size_t q1 = boundarySet(GlobalBasis(grid, parseSpec("lagrange(1)"))).size();
  const std::size_t q2 = boundarySet(GlobalBasis(grid, parseSpec("lagrange(2)"))).size();
  const GlobalBasis th(grid, taylorHoodSpec());
  const auto velocity = subspaceBasis(th, {0});
  const auto boundary = boundarySet(velocity);
  out.require(q1 == 4 * 4, "Q1 boundary count " + std::to_string(q1));
  out.require(q2 == 4 * 2 * 4, "Q2 boundary count " + std::to_string(q2));
  out.require(boundary.size() == 2 * 4 * 2 * 4, "velocity boundary count " + std::to_string(boundary.size()));

  const double sentinel = -7.5;
  NestedValue coefficients;
  resizeFromBasis(coefficients, th, sentinel);
  NestedMask mask;
  resizeFromBasis(mask, th, false);
  for (const auto& mi : boundary)
    mask.entry(mi) = true;
  interpolateMasked(velocity, coefficients, drivenCavityVelocity, mask);

  std::size_t untouched = 0;
  for (const auto& mi : th.allIndices()) {
    const double v = coefficients.entry(mi);
    if (boundary.contains(mi)) {
      const Vec2 p = th.nodePosition(th.leafNumber(TreePath{0, mi[2]}), mi[1]);
      out.require(v == (mi[2] == 1 && p.x <= 1e-8 ? 1.0 : 0.0), "boundary value at " + mi.toString());
    }
    else {
      out.require(std::memcmp(&v, &sentinel, sizeof(double)) == 0, "interior entry changed at " + mi.toString());
      ++untouched;
    }
  }
  if (out.passed)
    out.detail = "boundary counts 16/32/64, " + std::to_string(untouched) + " sentinels untouched";
  return out;
}

Outcome stokesStructure()
{
  Outcome out;
  const GlobalBasis basis(StructuredGrid(4, 4), taylorHoodSpec());
  out.require(basis.dimension() == 187, "dimension " + std::to_string(basis.dimension()));
  SparseSystem m;
  assembleStokesMatrix(basis, m);

  double asymmetry = 0.0;
  std::size_t pressureBlock = 0;
  m.forEachEntry([&](const MI& r, const MI& c, double v) {
    asymmetry = std::max(asymmetry, std::abs(v - m.entry(c, r).value_or(NAN)));
    if (r[0] == 1 && c[0] == 1) {
      ++pressureBlock;
      out.require(v == 0.0, "pressure block entry " + r.toString() + c.toString());
    }
  });
  out.require(asymmetry <= 1e-12, format("asymmetry %.3e", asymmetry));
  out.require(pressureBlock > 0, "pressure block not stored");

  NestedValue rhs;
  resizeFromBasis(rhs, basis);
  const auto rows = applyDirichlet(m, rhs, basis, drivenCavityVelocity);
  m.freeze();
  NestedValue zero;
  resizeFromBasis(zero, basis);
  for (const auto& r : rows) {
    NestedValue e = zero;
    e.entry(r) = 1.0;
    const auto y = m.matvec(e);
    out.require(y.entry(r) == 1.0, "diagonal of identity row " + r.toString());

    std::size_t offDiagonal = 0;
    const std::size_t row = m.ordinal(r);
    for (std::size_t k = m.rowOffsets()[row]; k < m.rowOffsets()[row + 1]; ++k)
      if (m.columns()[k] != row && m.values()[k] != 0.0)
        ++offDiagonal;
    out.require(offDiagonal == 0, "off-diagonal entries in identity row " + r.toString());
  }
  if (out.passed) {
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), "dim 187, asymmetry %.1e, %zu zero pressure entries, %zu identity rows",
                  asymmetry, pressureBlock, rows.size());
    out.detail = buffer;
  }
  return out;
}

Outcome stokesSolve()
{
  Outcome out;
  const std::string path = (std::filesystem::temp_directory_path() / "fembasis-acceptance.vtu").string();
  const auto result = runDrivenCavity(StructuredGrid(4, 4), SolverConfig{}, path);
  const auto& s = result.summary;
  out.require(s.converged && s.relResidual <= 1e-8, format("relative residual %.3e", s.relResidual));
  out.require(s.iterations <= 5000, "iterations " + std::to_string(s.iterations));
  out.require(s.divergence <= 1e-6 * s.rhsNorm, format("divergence %.3e vs rhs %.3e", s.divergence, s.rhsNorm));

  try {
    const auto vtu = testing::readVtu(path);
    const auto& u = vtu.pointData.at("velocity");
    std::size_t wall = 0;
    for (std::size_t v = 0; v < vtu.points; ++v)
      if (vtu.coordinates[3 * v] == 0.0) {
        ++wall;
        out.require(u[3 * v] == 0.0 && u[3 * v + 1] == 1.0 && u[3 * v + 2] == 0.0,
                    "left wall velocity at vertex " + std::to_string(v));
      }
    out.require(wall == 5, "left wall vertex count " + std::to_string(wall));
    const double center = u[3 * 12];
    out.require(std::isfinite(center), "center x-velocity not finite");
    if (out.passed) {
      char buffer[200];
      std::snprintf(buffer, sizeof(buffer), "%s, center u_x %.3e", formatSummary(s).c_str(), center);
      out.detail = buffer;
    }
  }
  catch (const std::exception& e) {
    out.require(false, std::string("VTU unreadable: ") + e.what());
  }
  std::filesystem::remove(path);
  return out;
}

Outcome gmresOracle()
{
  Outcome out;
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 20;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(n * n), b(n);
    for (auto& v : a)
      v = u(rng);
    for (std::size_t i = 0; i < n; ++i)
      a[i * n + i] += double(n);
    for (auto& v : b)
      v = u(rng);

    SparseSystem m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.addToEntry(MI{i}, MI{j}, a[i * n + j]);
    m.freeze();
    const auto result = gmres(m, NestedValue(NestedValue::List(b.begin(), b.end())), SolverConfig{});
    const auto exact = testing::denseSolve(a, b);
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      d += std::pow(result.solution[i].scalar() - exact[i], 2);
    worst = std::max(worst, std::sqrt(d));
    out.require(result.converged, "GMRes did not converge");
  }
  out.require(worst <= 1e-7, format("max distance %.3e", worst));
  if (out.passed)
    out.detail = format("20 systems, max distance %.2e", worst);
  return out;
}

} // end anonymous namespace

int main()
{
  struct Criterion
  {
    int number;
    const char* name;
    double secondsLimit;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
    {1, "strategy-pair index table", 1.0, strategyTable},
    {2, "index-tree properties of random specs", 10.0, indexTreeProperties},
    {3, "shape functions", 0.0, shapeFunctions},
    {4, "interpolation exactness", 1.0, interpolationExactness},
    {5, "masked interpolation", 0.0, maskedInterpolation},
    {6, "Stokes structure", 0.0, stokesStructure},
    {7, "Stokes solve", 10.0, stokesSolve},
    {8, "GMRes oracle", 0.0, gmresOracle},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    }
    catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.secondsLimit > 0.0 && seconds >= c.secondsLimit) {
      outcome.passed = false;
      outcome.detail += format(" (time limit %.0f s exceeded)", c.secondsLimit);
    }
    failures += !outcome.passed;
    std::printf("%s [%d] %s: %s (%.3f s)\n", outcome.passed ? "PASS" : "FAIL", c.number, c.name,
                outcome.detail.c_str(), seconds);
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
