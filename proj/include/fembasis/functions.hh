#ifndef FEMBASIS_FUNCTIONS_HH
#define FEMBASIS_FUNCTIONS_HH

#include <functional>

#include <fembasis/basis.hh>
#include <fembasis/grid.hh>
#include <fembasis/nested.hh>

namespace fembasis {

/**
 * \brief Value of a function into the product space of a basis tree
 *
 * The leaf with relative tree path (i0,...,in) reads the entry
 * y[i0]...[in]. A scalar met on the way is broadcast to all leaves below.
 */
using RangeValue = Nested<double>;

using GridFunction = std::function<RangeValue(Vec2)>;

//! Component of `value` belonging to the leaf at relative path `path`; \throws ShapeMismatch
double rangeComponent(const RangeValue& value, const TreePath& path);

//! Zero-filled range value mirroring the subtree of `basis`
RangeValue rangeShape(const SubspaceBasis& basis);

/**
 * \brief Nodal interpolation of f into the coefficients of `basis`
 *
 * `coefficients` must be shaped for the root basis; only entries of the
 * subspace are written. Shared degrees of freedom are written once per
 * element, all with the same value.
 */
void interpolate(const SubspaceBasis& basis, NestedValue& coefficients, const GridFunction& f);

//! As interpolate(), writing only entries whose flag in `mask` is set
void interpolateMasked(const SubspaceBasis& basis, NestedValue& coefficients,
                       const GridFunction& f, const NestedMask& mask);

//! Call `f` with the global index of every degree of freedom on the domain boundary; repeats possible
void forEachBoundaryDOF(const SubspaceBasis& basis, const std::function<void(const MultiIndex&)>& f);

/// Point evaluation of the finite element function given by a coefficient vector.
/// \throws OutsideDomain
RangeValue evaluateDiscrete(const SubspaceBasis& basis, const NestedValue& coefficients, Vec2 p);

} // end namespace fembasis

#endif // FEMBASIS_FUNCTIONS_HH
