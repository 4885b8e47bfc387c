// Command line front end: index tables of basis trees and the driven-cavity solver.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <fembasis/basis.hh>
#include <fembasis/errors.hh>
#include <fembasis/grid.hh>
#include <fembasis/stokes.hh>
#include <fembasis/treespec.hh>

using namespace fembasis;

namespace {

void printElement(const GlobalBasis& basis, std::size_t element)
{
  auto view = basis.localView();
  view.bind(element);
  std::cout << "element " << element << '\n';
  for (std::size_t i = 0; i < view.size(); ++i)
    std::cout << "  " << i << " -> " << view.index(i) << '\n';
}

// Taylor-Hood tree with `components` velocity copies under all eight strategy pairs.
void printStrategyTable(const StructuredGrid& grid, std::size_t components)
{
  using S = MergingStrategy;
  const std::pair<S, S> columns[] = {
    {S::BlockedLexicographic, S::BlockedLexicographic},
    {S::BlockedLexicographic, S::BlockedInterleaved},
    {S::BlockedLexicographic, S::FlatLexicographic},
    {S::BlockedLexicographic, S::FlatInterleaved},
    {S::FlatLexicographic, S::BlockedLexicographic},
    {S::FlatLexicographic, S::BlockedInterleaved},
    {S::FlatLexicographic, S::FlatLexicographic},
    {S::FlatLexicographic, S::FlatInterleaved},
  };

  std::vector<GlobalBasis> bases;
  for (const auto& [outer, inner] : columns)
    bases.emplace_back(grid, taylorHoodSpec(inner, outer, components));

  const std::size_t velocityRows = std::min<std::size_t>(4, bases.front().leaf(0).flatSize());
  const std::size_t pressureRows =
    std::min<std::size_t>(3, bases.front().leaf(components).flatSize());

  constexpr int width = 12;
  std::cout << std::left << std::setw(width) << "dof";
  for (const auto& [outer, inner] : columns)
    std::cout << std::setw(width)
              << (std::string(shortName(outer)) + "(" + std::string(shortName(inner)) + ")");
  std::cout << '\n';

  auto row = [&](const std::string& label, const TreePath& leaf, std::size_t flat) {
    std::cout << std::setw(width) << label;
    for (const auto& basis : bases)
      std::cout << std::setw(width) << basis.globalIndex(leaf, flat).toString();
    std::cout << '\n';
  };

  for (std::size_t k = 0; k < components; ++k)
    for (std::size_t i = 0; i < velocityRows; ++i)
      row("v_x" + std::to_string(k) + "," + std::to_string(i), {0, k}, i);
  for (std::size_t j = 0; j < pressureRows; ++j)
    row("p_" + std::to_string(j), {1}, j);
}

} // end anonymous namespace

int main(int argc, char** argv)
{
  CLI::App app{"Tree-structured finite element bases and a Taylor-Hood Stokes solver"};
  app.require_subcommand(1);

  auto* indices = app.add_subcommand("indices", "Print global multi-indices of a basis tree");
  std::string tree;
  std::string gridText;
  std::optional<std::size_t> element;
  std::optional<std::size_t> table1;
  indices->add_option("--tree", tree, "Basis tree, e.g. composite(power(lagrange(2),2),lagrange(1))");
  indices->add_option("--grid", gridText, "Grid size NXxNY")->required();
  auto* elementOption = indices->add_option("--element", element, "Only print this element");
  auto* tableOption = indices->add_option("--table1", table1,
                                          "Compare all strategy pairs of a Taylor-Hood tree with N velocity components");
  elementOption->excludes(tableOption);

  auto* stokes = app.add_subcommand("stokes", "Solve the driven-cavity Stokes problem");
  SolverConfig config;
  std::string output;
  stokes->add_option("--grid", gridText, "Grid size NXxNY")->required();
  stokes->add_option("--tol", config.tolerance, "Relative residual tolerance")->capture_default_str();
  stokes->add_option("--restart", config.restart, "GMRes restart length")->capture_default_str();
  stokes->add_option("--max-iter", config.maxIterations, "Maximum GMRes iterations")->capture_default_str();
  stokes->add_flag("--pin-pressure", config.pinPressure, "Fix the first pressure degree of freedom to zero");
  stokes->add_option("--out", output, "Output VTU file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const StructuredGrid grid = parseGridSize(gridText);

    if (*indices) {
      if (table1) {
        printStrategyTable(grid, *table1);
        return 0;
      }
      if (tree.empty())
        throw InvalidSpec("--tree is required unless --table1 is given");
      const GlobalBasis basis(grid, parseSpec(tree));
      std::cout << "tree " << render(basis.spec()) << '\n'
                << "dimension " << basis.dimension() << '\n';
      if (element)
        printElement(basis, *element);
      else
        for (std::size_t e = 0; e < grid.size(); ++e)
          printElement(basis, e);
      return 0;
    }

    const auto result = runDrivenCavity(grid, config, output);
    std::cout << formatSummary(result.summary) << std::endl;
    return result.summary.converged ? 0 : 2;
  }
  catch (const Exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
