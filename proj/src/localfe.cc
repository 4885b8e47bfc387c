#include <fembasis/localfe.hh>

#include <fembasis/errors.hh>

namespace fembasis {

LagrangeQk::LagrangeQk(int order)
  : order_(order)
{
  if (order != 1 && order != 2)
    throw UnsupportedOrder("Q" + std::to_string(order));
}

Vec2 LagrangeQk::node(std::size_t m) const
{
  const double k = order_;
  return {double(nodeColumn(m)) / k, double(nodeRow(m)) / k};
}

double LagrangeQk::value1d(std::size_t a, double t) const
{
  if (order_ == 1)
    return a == 0 ? 1.0 - t : t;
  switch (a) {
    case 0: return 2.0 * (t - 0.5) * (t - 1.0);
    case 1: return -4.0 * t * (t - 1.0);
    default: return 2.0 * t * (t - 0.5);
  }
}

double LagrangeQk::derivative1d(std::size_t a, double t) const
{
  if (order_ == 1)
    return a == 0 ? -1.0 : 1.0;
  switch (a) {
    case 0: return 4.0 * t - 3.0;
    case 1: return 4.0 - 8.0 * t;
    default: return 4.0 * t - 1.0;
  }
}

void LagrangeQk::evaluateFunction(Vec2 xi, std::vector<double>& out) const
{
  out.resize(size());
  for (std::size_t m = 0; m < size(); ++m)
    out[m] = value1d(nodeColumn(m), xi.x) * value1d(nodeRow(m), xi.y);
}

void LagrangeQk::evaluateJacobian(Vec2 xi, std::vector<Vec2>& out) const
{
  out.resize(size());
  for (std::size_t m = 0; m < size(); ++m) {
    const std::size_t a = nodeColumn(m);
    const std::size_t b = nodeRow(m);
    out[m] = {derivative1d(a, xi.x) * value1d(b, xi.y),
              value1d(a, xi.x) * derivative1d(b, xi.y)};
  }
}

std::vector<double> LagrangeQk::localInterpolate(const std::function<double(Vec2)>& f) const
{
  std::vector<double> coefficients(size());
  for (std::size_t m = 0; m < size(); ++m)
    coefficients[m] = f(node(m));
  return coefficients;
}

} // end namespace fembasis
