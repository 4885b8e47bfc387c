#include <fembasis/vtu.hh>

#include <cstdio>
#include <fstream>

#include <fembasis/errors.hh>

namespace fembasis {

namespace {

std::string number(double v)
{
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

} // end anonymous namespace

void writeVtu(const StructuredGrid& grid,
              const std::function<Vec2(Vec2)>& velocity,
              const std::function<double(Vec2)>& pressure,
              const std::string& path)
{
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot open '" + path + "' for writing");

  const std::size_t nx = grid.nx();
  const std::size_t points = grid.vertexCount();
  const std::size_t cells = grid.size();

  out << "<?xml version=\"1.0\"?>\n"
      << "<VTKFile type=\"UnstructuredGrid\" version=\"0.1\" byte_order=\"LittleEndian\">\n"
      << "  <UnstructuredGrid>\n"
      << "    <Piece NumberOfPoints=\"" << points << "\" NumberOfCells=\"" << cells << "\">\n";

  out << "      <PointData Vectors=\"velocity\" Scalars=\"pressure\">\n"
      << "        <DataArray type=\"Float64\" Name=\"velocity\" NumberOfComponents=\"3\" format=\"ascii\">\n";
  for (std::size_t v = 0; v < points; ++v) {
    const Vec2 u = velocity(grid.vertex(v));
    out << "          " << number(u.x) << ' ' << number(u.y) << " 0\n";
  }
  out << "        </DataArray>\n"
      << "        <DataArray type=\"Float64\" Name=\"pressure\" NumberOfComponents=\"1\" format=\"ascii\">\n";
  for (std::size_t v = 0; v < points; ++v)
    out << "          " << number(pressure(grid.vertex(v))) << '\n';
  out << "        </DataArray>\n"
      << "      </PointData>\n";

  out << "      <Points>\n"
      << "        <DataArray type=\"Float64\" NumberOfComponents=\"3\" format=\"ascii\">\n";
  for (std::size_t v = 0; v < points; ++v) {
    const Vec2 p = grid.vertex(v);
    out << "          " << number(p.x) << ' ' << number(p.y) << " 0\n";
  }
  out << "        </DataArray>\n"
      << "      </Points>\n";

  out << "      <Cells>\n"
      << "        <DataArray type=\"Int64\" Name=\"connectivity\" format=\"ascii\">\n";
  for (std::size_t e = 0; e < cells; ++e) {
    const std::size_t i = e % nx;
    const std::size_t j = e / nx;
    const std::size_t v00 = j * (nx + 1) + i;
    out << "          " << v00 << ' ' << v00 + 1 << ' ' << v00 + nx + 2 << ' ' << v00 + nx + 1 << '\n';
  }
  out << "        </DataArray>\n"
      << "        <DataArray type=\"Int64\" Name=\"offsets\" format=\"ascii\">\n";
  for (std::size_t e = 0; e < cells; ++e)
    out << "          " << 4 * (e + 1) << '\n';
  out << "        </DataArray>\n"
      << "        <DataArray type=\"UInt8\" Name=\"types\" format=\"ascii\">\n";
  for (std::size_t e = 0; e < cells; ++e)
    out << "          9\n";
  out << "        </DataArray>\n"
      << "      </Cells>\n"
      << "    </Piece>\n"
      << "  </UnstructuredGrid>\n"
      << "</VTKFile>\n";

  if (!out)
    throw IoError("failed writing '" + path + "'");
}

} // end namespace fembasis
