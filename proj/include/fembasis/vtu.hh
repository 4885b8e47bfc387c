#ifndef FEMBASIS_VTU_HH
#define FEMBASIS_VTU_HH

#include <functional>
#include <string>

#include <fembasis/grid.hh>

namespace fembasis {

/**
 * \brief Write velocity and pressure at the grid vertices as an ASCII VTK UnstructuredGrid
 *
 * Cells are VTK quads (type 9) with counter-clockwise connectivity
 * v00 v10 v11 v01. The velocity array has three components, the third zero.
 * \throws IoError
 */
void writeVtu(const StructuredGrid& grid,
              const std::function<Vec2(Vec2)>& velocity,
              const std::function<double(Vec2)>& pressure,
              const std::string& path);

} // end namespace fembasis

#endif // FEMBASIS_VTU_HH
