#include <fembasis/functions.hh>

#include <fembasis/errors.hh>

namespace fembasis {

double rangeComponent(const RangeValue& value, const TreePath& path)
{
  const RangeValue* node = &value;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (node->isScalar())
      return node->scalar();
    if (path[k] >= node->size())
      throw ShapeMismatch("function range has " + std::to_string(node->size())
                          + " components where tree path " + path.toString() + " needs more");
    node = &(*node)[path[k]];
  }
  if (!node->isScalar())
    throw ShapeMismatch("function range is nested deeper than tree path " + path.toString());
  return node->scalar();
}

namespace {

RangeValue shapeOf(const BasisSpec& spec)
{
  if (spec.isLeaf())
    return RangeValue(0.0);
  RangeValue::List list;
  for (std::size_t i = 0; i < spec.degree(); ++i)
    list.push_back(shapeOf(spec.child(i)));
  return RangeValue(std::move(list));
}

// Lists in a range value must match the node degrees of the tree; scalars broadcast.
void requireRangeShape(const RangeValue& value, const BasisSpec& spec)
{
  if (value.isScalar())
    return;
  if (spec.isLeaf() || value.size() != spec.degree())
    throw ShapeMismatch("function range with " + std::to_string(value.size())
                        + " components does not fit the basis tree " + render(spec));
  for (std::size_t i = 0; i < value.size(); ++i)
    requireRangeShape(value[i], spec.child(i));
}

RangeValue& slot(RangeValue& value, const TreePath& path)
{
  RangeValue* node = &value;
  for (auto digit : path)
    node = &(*node)[digit];
  return *node;
}

// Calls write(globalIndex, value) for every shape function of every element.
template<class Write>
void forEachNodalValue(const SubspaceBasis& basis, const GridFunction& f, Write&& write)
{
  auto view = basis.localView();
  const auto& grid = basis.grid();
  const BasisSpec& spec = basis.spec();
  for (std::size_t e = 0; e < grid.size(); ++e) {
    view.bind(e);
    const ElementGeometry geometry = view.geometry();
    for (std::size_t l = 0; l < view.leafCount(); ++l) {
      const TreePath& path = view.leafPath(l);
      const auto coefficients = view.finiteElement(l).localInterpolate(
        [&](Vec2 xi) {
          const RangeValue value = f(geometry.global(xi));
          requireRangeShape(value, spec);
          return rangeComponent(value, path);
        });
      for (std::size_t m = 0; m < coefficients.size(); ++m)
        write(view.index(view.localIndex(l, m)), coefficients[m]);
    }
  }
}

} // end anonymous namespace

RangeValue rangeShape(const SubspaceBasis& basis)
{
  return shapeOf(basis.spec());
}

void interpolate(const SubspaceBasis& basis, NestedValue& coefficients, const GridFunction& f)
{
  forEachNodalValue(basis, f, [&](const MultiIndex& mi, double value) {
    coefficients.entry(mi) = value;
  });
}

void interpolateMasked(const SubspaceBasis& basis, NestedValue& coefficients,
                       const GridFunction& f, const NestedMask& mask)
{
  forEachNodalValue(basis, f, [&](const MultiIndex& mi, double value) {
    if (mask.entry(mi))
      coefficients.entry(mi) = value;
  });
}

void forEachBoundaryDOF(const SubspaceBasis& basis, const std::function<void(const MultiIndex&)>& f)
{
  const GlobalBasis& root = basis.rootBasis();
  const auto& grid = basis.grid();
  auto view = basis.localView();
  for (std::size_t e = 0; e < grid.size(); ++e) {
    const std::size_t i = e % grid.nx();
    const std::size_t j = e / grid.nx();
    if (i != 0 && j != 0 && i + 1 != grid.nx() && j + 1 != grid.ny())
      continue;
    view.bind(e);
    for (std::size_t l = 0; l < view.leafCount(); ++l) {
      const std::size_t leaf = view.rootLeaf(l);
      for (std::size_t m = 0; m < view.finiteElement(l).size(); ++m)
        if (isOnBoundary(root.nodePosition(leaf, root.flatIndex(leaf, e, m))))
          f(view.index(view.localIndex(l, m)));
    }
  }
}

RangeValue evaluateDiscrete(const SubspaceBasis& basis, const NestedValue& coefficients, Vec2 p)
{
  const Location location = basis.grid().locate(p);
  auto view = basis.localView();
  view.bind(location.element);

  RangeValue result = rangeShape(basis);
  std::vector<double> values;
  for (std::size_t l = 0; l < view.leafCount(); ++l) {
    view.finiteElement(l).evaluateFunction(location.local, values);
    double sum = 0.0;
    for (std::size_t m = 0; m < values.size(); ++m)
      sum += coefficients.entry(view.index(view.localIndex(l, m))) * values[m];
    slot(result, view.leafPath(l)) = sum;
  }
  return result;
}

} // end namespace fembasis
