#ifndef FEMBASIS_MULTIINDEX_HH
#define FEMBASIS_MULTIINDEX_HH

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <fembasis/errors.hh>

namespace fembasis {

/**
 * \brief A short sequence of natural numbers identifying one global basis function
 *
 * Stored inline with a fixed capacity of eight digits. The digits of its
 * prefixes address inner nodes of an index tree.
 */
class MultiIndex
{
public:
  using value_type = std::size_t;
  static constexpr std::size_t max_size = 8;

  constexpr MultiIndex() = default;

  MultiIndex(std::initializer_list<value_type> digits)
  {
    if (digits.size() > max_size)
      throw CapacityExceeded("multi-index of length " + std::to_string(digits.size()));
    std::copy(digits.begin(), digits.end(), digits_.begin());
    size_ = digits.size();
  }

  explicit MultiIndex(std::span<const value_type> digits)
  {
    if (digits.size() > max_size)
      throw CapacityExceeded("multi-index of length " + std::to_string(digits.size()));
    std::copy(digits.begin(), digits.end(), digits_.begin());
    size_ = digits.size();
  }

  constexpr std::size_t size() const { return size_; }
  constexpr bool empty() const { return size_ == 0; }

  constexpr value_type operator[](std::size_t i) const { return digits_[i]; }
  constexpr value_type& operator[](std::size_t i) { return digits_[i]; }

  const value_type* begin() const { return digits_.data(); }
  const value_type* end() const { return digits_.data() + size_; }

  value_type front() const { return digits_[0]; }
  value_type back() const { return digits_[size_ - 1]; }

  void push_back(value_type d)
  {
    if (size_ == max_size)
      throw CapacityExceeded("appending to a full multi-index " + toString());
    digits_[size_++] = d;
  }

  void push_front(value_type d)
  {
    if (size_ == max_size)
      throw CapacityExceeded("prepending to a full multi-index " + toString());
    std::copy_backward(digits_.begin(), digits_.begin() + size_, digits_.begin() + size_ + 1);
    digits_[0] = d;
    ++size_;
  }

  void pop_back() { --size_; }

  //! The first n digits
  MultiIndex prefix(std::size_t n) const
  {
    MultiIndex p;
    std::copy(digits_.begin(), digits_.begin() + n, p.digits_.begin());
    p.size_ = n;
    return p;
  }

  //! Rendered as "(d0,d1,...)"
  std::string toString() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b)
  {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }

  //! Lexicographic order, shorter sequences first on a common prefix
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b)
  {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

private:
  std::array<value_type, max_size> digits_{};
  std::size_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& mi);

//! True iff i = (p, tail) for a possibly empty tail
bool isPrefix(const MultiIndex& p, const MultiIndex& i);

/**
 * \brief Check that a set of multi-indices forms an index tree
 *
 * Each entry must be a leaf path of an ordered tree: under every strict
 * prefix the next digits are exactly 0,...,n-1, and no entry is a strict
 * prefix of another. Duplicate entries are treated as one.
 */
bool validateIndexTree(std::span<const MultiIndex> entries);

/**
 * \brief Number of children of the node `prefix` in the index tree
 *
 * Returns 0 when `prefix` is itself an entry.
 * \throws PrefixNotFound if `prefix` is neither an entry nor a prefix of one
 */
std::size_t prefixDegree(std::span<const MultiIndex> entries, const MultiIndex& prefix);

} // end namespace fembasis

template<>
struct std::hash<fembasis::MultiIndex>
{
  std::size_t operator()(const fembasis::MultiIndex& mi) const noexcept
  {
    std::size_t h = mi.size();
    for (auto d : mi)
      h ^= d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

#endif // FEMBASIS_MULTIINDEX_HH
