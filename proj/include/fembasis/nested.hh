#ifndef FEMBASIS_NESTED_HH
#define FEMBASIS_NESTED_HH

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <variant>
#include <vector>

#include <fembasis/basis.hh>
#include <fembasis/errors.hh>
#include <fembasis/multiindex.hh>

namespace fembasis {

/**
 * \brief Recursive container: either a scalar or an ordered list of nested values
 *
 * Coefficient vectors of a basis are addressed by its multi-indices, one
 * digit per nesting level. A length-1 multi-index on a flat list acts as a
 * plain index.
 */
template<class T>
class Nested
{
public:
  using List = std::vector<Nested>;

  Nested() : data_(T{}) {}
  Nested(T scalar) : data_(scalar) {}
  Nested(List list) : data_(std::move(list)) {}

  static Nested list(std::size_t n, const Nested& fill = Nested()) { return Nested(List(n, fill)); }

  bool isScalar() const { return std::holds_alternative<T>(data_); }
  bool isList() const { return !isScalar(); }

  //! \throws ShapeMismatch on a list
  T scalar() const
  {
    if (!isScalar())
      throw ShapeMismatch("expected a scalar, found a list");
    return std::get<T>(data_);
  }

  //! \throws ShapeMismatch on a scalar
  const List& children() const
  {
    if (isScalar())
      throw ShapeMismatch("expected a list, found a scalar");
    return std::get<List>(data_);
  }

  List& children()
  {
    if (isScalar())
      throw ShapeMismatch("expected a list, found a scalar");
    return std::get<List>(data_);
  }

  std::size_t size() const { return isScalar() ? 0 : std::get<List>(data_).size(); }

  const Nested& operator[](std::size_t i) const { return children().at(i); }
  Nested& operator[](std::size_t i) { return children().at(i); }

  //! Node reached by following the digits of `prefix`; \throws ShapeMismatch
  const Nested& at(const MultiIndex& prefix) const
  {
    const Nested* node = this;
    for (std::size_t k = 0; k < prefix.size(); ++k)
      node = &node->child(prefix, k);
    return *node;
  }

  Nested& at(const MultiIndex& prefix)
  {
    return const_cast<Nested&>(std::as_const(*this).at(prefix));
  }

  //! The scalar addressed by a full multi-index; \throws ShapeMismatch
  T entry(const MultiIndex& i) const
  {
    const Nested& node = at(i);
    if (!node.isScalar())
      throw ShapeMismatch("multi-index " + i.toString() + " ends inside the nesting");
    return std::get<T>(node.data_);
  }

  T& entry(const MultiIndex& i)
  {
    Nested& node = at(i);
    if (!node.isScalar())
      throw ShapeMismatch("multi-index " + i.toString() + " ends inside the nesting");
    return std::get<T>(node.data_);
  }

  void setEntry(const MultiIndex& i, T value) { entry(i) = value; }

  //! Visit all scalars in depth-first order
  template<class F>
  void forEachScalar(F&& f) const
  {
    if (isScalar()) {
      f(std::get<T>(data_));
      return;
    }
    for (const auto& c : std::get<List>(data_))
      c.forEachScalar(f);
  }

  template<class F>
  void forEachScalar(F&& f)
  {
    if (isScalar()) {
      f(std::get<T>(data_));
      return;
    }
    for (auto& c : std::get<List>(data_))
      c.forEachScalar(f);
  }

  //! Same nesting, every scalar replaced by `value`
  template<class U>
  Nested<U> mapShape(U value) const
  {
    if (isScalar())
      return Nested<U>(value);
    typename Nested<U>::List list;
    list.reserve(size());
    for (const auto& c : std::get<List>(data_))
      list.push_back(c.mapShape(value));
    return Nested<U>(std::move(list));
  }

  friend bool operator==(const Nested&, const Nested&) = default;

private:
  const Nested& child(const MultiIndex& mi, std::size_t k) const
  {
    if (isScalar())
      throw ShapeMismatch("multi-index " + mi.toString() + " reaches a scalar at digit "
                          + std::to_string(k));
    const auto& list = std::get<List>(data_);
    if (mi[k] >= list.size())
      throw ShapeMismatch("digit " + std::to_string(mi[k]) + " of " + mi.toString()
                          + " exceeds list size " + std::to_string(list.size()));
    return list[mi[k]];
  }

  std::variant<T, List> data_;
};

using NestedValue = Nested<double>;
using NestedMask = Nested<bool>;

namespace detail {

template<class T>
Nested<T> shapeFor(const GlobalBasis& basis, MultiIndex& prefix, T fill)
{
  const std::size_t n = basis.size(prefix);
  if (n == 0)
    return Nested<T>(fill);
  typename Nested<T>::List list;
  list.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    prefix.push_back(i);
    list.push_back(shapeFor(basis, prefix, fill));
    prefix.pop_back();
  }
  return Nested<T>(std::move(list));
}

} // end namespace detail

/**
 * \brief Give `v` the nesting of the index tree of `basis`, filled with `fill`
 *
 * The node at prefix p becomes a list of length size(p), or a scalar where size(p) = 0.
 */
template<class T>
void resizeFromBasis(Nested<T>& v, const GlobalBasis& basis, T fill = T{})
{
  MultiIndex prefix;
  v = detail::shapeFor(basis, prefix, fill);
}

template<class T>
void resizeFromBasis(Nested<T>& v, const SubspaceBasis& basis, T fill = T{})
{
  resizeFromBasis(v, basis.rootBasis(), fill);
}

template<class T>
std::ostream& operator<<(std::ostream& os, const Nested<T>& v)
{
  if (v.isScalar())
    return os << v.scalar();
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  return os << ']';
}

} // end namespace fembasis

#endif // FEMBASIS_NESTED_HH
