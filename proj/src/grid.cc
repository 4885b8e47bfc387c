#include <fembasis/grid.hh>

#include <algorithm>
#include <charconv>
#include <cmath>

#include <fembasis/errors.hh>

namespace fembasis {

StructuredGrid::StructuredGrid(std::size_t nx, std::size_t ny)
  : nx_(nx), ny_(ny)
{
  if (nx == 0 || ny == 0)
    throw IndexOutOfRange("grid needs at least one element per axis");
}

Vec2 StructuredGrid::vertex(std::size_t v) const
{
  if (v >= vertexCount())
    throw IndexOutOfRange("vertex " + std::to_string(v));
  const std::size_t I = v % (nx_ + 1);
  const std::size_t J = v / (nx_ + 1);
  return {double(I) / double(nx_), double(J) / double(ny_)};
}

ElementGeometry StructuredGrid::elementGeometry(std::size_t e) const
{
  if (e >= size())
    throw IndexOutOfRange("element " + std::to_string(e) + " of " + std::to_string(size()));
  return ElementGeometry{e, e % nx_, e / nx_, nx_, ny_};
}

Location StructuredGrid::locate(Vec2 p) const
{
  if (p.x < -boundaryTolerance || p.x > 1.0 + boundaryTolerance
      || p.y < -boundaryTolerance || p.y > 1.0 + boundaryTolerance)
    throw OutsideDomain("point (" + std::to_string(p.x) + "," + std::to_string(p.y) + ")");

  auto cell = [](double coord, std::size_t n) {
    double scaled = std::floor(coord * double(n));
    if (scaled < 0.0)
      return std::size_t(0);
    return std::min(static_cast<std::size_t>(scaled), n - 1);
  };
  const std::size_t i = cell(p.x, nx_);
  const std::size_t j = cell(p.y, ny_);
  const std::size_t e = j * nx_ + i;
  return {e, elementGeometry(e).local(p)};
}

bool isOnBoundary(Vec2 p)
{
  return std::min({p.x, 1.0 - p.x, p.y, 1.0 - p.y}) <= boundaryTolerance;
}

StructuredGrid parseGridSize(std::string_view text)
{
  auto sep = text.find('x');
  auto number = [&](std::string_view part) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty() || value == 0)
      throw InvalidSpec("grid size '" + std::string(text) + "', expected NXxNY");
    return value;
  };
  if (sep == std::string_view::npos)
    throw InvalidSpec("grid size '" + std::string(text) + "', expected NXxNY");
  return StructuredGrid(number(text.substr(0, sep)), number(text.substr(sep + 1)));
}

} // end namespace fembasis
