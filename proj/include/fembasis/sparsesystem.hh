#ifndef FEMBASIS_SPARSESYSTEM_HH
#define FEMBASIS_SPARSESYSTEM_HH

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <fembasis/multiindex.hh>
#include <fembasis/nested.hh>

namespace fembasis {

/**
 * \brief Sparse matrix with multi-index row and column keys
 *
 * Entries are accumulated in a keyed map during assembly. freeze() turns the
 * map into a compressed row structure over the sorted union of all row and
 * column keys; only the frozen form can be applied to vectors.
 */
class SparseSystem
{
public:
  //! Accumulate x into entry (row, col), creating it if absent; \throws AlreadyFrozen
  void addToEntry(const MultiIndex& row, const MultiIndex& col, double x);

  //! Replace the row by the identity row; \throws AlreadyFrozen
  void setRowToIdentity(const MultiIndex& row);

  //! Add every entry of `other` into this system; \throws AlreadyFrozen
  void accumulate(const SparseSystem& other);

  //! Stored value, or nullopt for a structural zero
  std::optional<double> entry(const MultiIndex& row, const MultiIndex& col) const;

  //! Number of stored entries, explicit zeros included
  std::size_t nonzeros() const;

  template<class F>
  void forEachEntry(F&& f) const
  {
    for (const auto& [row, cols] : rows_)
      for (const auto& [col, value] : cols)
        f(row, col, value);
  }

  void freeze();
  bool frozen() const { return frozen_; }

  // --- frozen form -------------------------------------------------------

  //! Sorted keys; position in this list is the flat ordinal used by apply()
  const std::vector<MultiIndex>& keys() const;
  std::size_t ordinal(const MultiIndex& key) const;

  std::span<const std::size_t> rowOffsets() const { return rowOffsets_; }
  std::span<const std::size_t> columns() const { return columns_; }
  std::span<const double> values() const { return values_; }

  //! y = A x on flat ordinals, rows distributed over OpenMP threads
  void apply(std::span<const double> x, std::span<double> y) const;

  //! Sequential reference for apply()
  void applySerial(std::span<const double> x, std::span<double> y) const;

  //! y[row] = sum_col A[row,col] x[col]; y has the nesting of x. \throws NotFrozen, ShapeMismatch
  NestedValue matvec(const NestedValue& x) const;

  //! Read the entries of v at keys() into a flat vector; \throws ShapeMismatch
  std::vector<double> gather(const NestedValue& v) const;

  //! Write a flat vector into the entries of v at keys(); \throws ShapeMismatch
  void scatter(std::span<const double> flat, NestedValue& v) const;

  //! Sorted "(row) (col) value" lines
  void dump(std::ostream& os) const;

private:
  void requireFrozen() const;
  void requireOpen() const;

  std::map<MultiIndex, std::map<MultiIndex, double>> rows_;
  bool frozen_ = false;

  std::vector<MultiIndex> keys_;
  std::unordered_map<MultiIndex, std::size_t> ordinals_;
  std::vector<std::size_t> rowOffsets_;
  std::vector<std::size_t> columns_;
  std::vector<double> values_;
};

} // end namespace fembasis

#endif // FEMBASIS_SPARSESYSTEM_HH
