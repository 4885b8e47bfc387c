#ifndef FEMBASIS_LOCALFE_HH
#define FEMBASIS_LOCALFE_HH

#include <cstddef>
#include <functional>
#include <vector>

#include <fembasis/grid.hh>

namespace fembasis {

/**
 * \brief Tensor-product Lagrange element Qk, k = 1 or 2, on the reference square [0,1]^2
 *
 * Node (a,b), 0 <= a,b <= k, sits at (a/k, b/k) and has leaf-local index
 * b*(k+1) + a. The shape function of that node is l_a(xi) * l_b(eta),
 * a product of 1D Lagrange polynomials on the equidistant nodes.
 */
class LagrangeQk
{
public:
  //! \throws UnsupportedOrder
  explicit LagrangeQk(int order);

  int order() const { return order_; }
  std::size_t size() const { return (order_ + 1) * (order_ + 1); }

  //! Reference coordinates of node m
  Vec2 node(std::size_t m) const;

  //! Tensor position (a,b) of node m
  std::size_t nodeColumn(std::size_t m) const { return m % (order_ + 1); }
  std::size_t nodeRow(std::size_t m) const { return m / (order_ + 1); }

  void evaluateFunction(Vec2 xi, std::vector<double>& out) const;
  void evaluateJacobian(Vec2 xi, std::vector<Vec2>& out) const;

  std::vector<double> evaluateValues(Vec2 xi) const
  {
    std::vector<double> out;
    evaluateFunction(xi, out);
    return out;
  }

  std::vector<Vec2> evaluateGradients(Vec2 xi) const
  {
    std::vector<Vec2> out;
    evaluateJacobian(xi, out);
    return out;
  }

  //! Nodal interpolation: coefficient m is f(node m)
  std::vector<double> localInterpolate(const std::function<double(Vec2)>& f) const;

  friend bool operator==(const LagrangeQk&, const LagrangeQk&) = default;

private:
  double value1d(std::size_t a, double t) const;
  double derivative1d(std::size_t a, double t) const;

  int order_;
};

} // end namespace fembasis

#endif // FEMBASIS_LOCALFE_HH
