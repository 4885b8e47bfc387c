#ifndef FEMBASIS_GRID_HH
#define FEMBASIS_GRID_HH

#include <cstddef>
#include <string>
#include <string_view>

namespace fembasis {

struct Vec2
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

//! Tolerance of the boundary predicate and of point location
inline constexpr double boundaryTolerance = 1e-10;

/**
 * \brief Affine map from the reference square [0,1]^2 onto one grid cell
 *
 * The Jacobian is diag(hx, hy).
 */
struct ElementGeometry
{
  std::size_t element = 0;
  std::size_t i = 0;   //!< cell column
  std::size_t j = 0;   //!< cell row
  std::size_t nx = 1;
  std::size_t ny = 1;

  Vec2 corner() const { return {double(i) / double(nx), double(j) / double(ny)}; }
  Vec2 extents() const { return {1.0 / double(nx), 1.0 / double(ny)}; }
  double integrationElement() const { return extents().x * extents().y; }

  //! Diagonal of the inverse transposed Jacobian
  Vec2 jacobianInverseTransposed() const { return {double(nx), double(ny)}; }

  /** Reference to global coordinates. Evaluated as (i + xi)/nx so that
   *  vertices shared by neighbouring cells map to bitwise identical points. */
  Vec2 global(Vec2 local) const
  {
    return {(double(i) + local.x) / double(nx), (double(j) + local.y) / double(ny)};
  }

  Vec2 local(Vec2 global) const
  {
    return {global.x * double(nx) - double(i), global.y * double(ny) - double(j)};
  }
};

struct Location
{
  std::size_t element = 0;
  Vec2 local;
};

/**
 * \brief Structured quadrilateral grid of the unit square
 *
 * Cell (i,j) has element index j*nx + i, counted from the lower left.
 * Vertex (I,J) has index J*(nx+1) + I.
 */
class StructuredGrid
{
public:
  StructuredGrid(std::size_t nx, std::size_t ny);

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t size() const { return nx_ * ny_; }
  std::size_t vertexCount() const { return (nx_ + 1) * (ny_ + 1); }

  Vec2 vertex(std::size_t v) const;

  //! \throws IndexOutOfRange
  ElementGeometry elementGeometry(std::size_t e) const;

  /// Cell containing p; points on cell interfaces go to the cell found by
  /// floor(p*n), clamped to the last cell.
  /// \throws OutsideDomain
  Location locate(Vec2 p) const;

  friend bool operator==(const StructuredGrid&, const StructuredGrid&) = default;

private:
  std::size_t nx_;
  std::size_t ny_;
};

bool isOnBoundary(Vec2 p);

//! Parses "NXxNY", e.g. "4x4"
StructuredGrid parseGridSize(std::string_view text);

} // end namespace fembasis

#endif // FEMBASIS_GRID_HH
