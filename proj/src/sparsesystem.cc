#include <fembasis/sparsesystem.hh>

#include <cstdio>
#include <ostream>
#include <set>

#include <fembasis/errors.hh>

namespace fembasis {

void SparseSystem::requireFrozen() const
{
  if (!frozen_)
    throw NotFrozen("sparse system must be frozen first");
}

void SparseSystem::requireOpen() const
{
  if (frozen_)
    throw AlreadyFrozen("sparse system no longer accepts modifications");
}

void SparseSystem::addToEntry(const MultiIndex& row, const MultiIndex& col, double x)
{
  requireOpen();
  rows_[row][col] += x;
}

void SparseSystem::setRowToIdentity(const MultiIndex& row)
{
  requireOpen();
  auto& cols = rows_[row];
  cols.clear();
  cols[row] = 1.0;
}

void SparseSystem::accumulate(const SparseSystem& other)
{
  requireOpen();
  for (const auto& [row, cols] : other.rows_) {
    auto& target = rows_[row];
    for (const auto& [col, value] : cols)
      target[col] += value;
  }
}

std::optional<double> SparseSystem::entry(const MultiIndex& row, const MultiIndex& col) const
{
  auto r = rows_.find(row);
  if (r == rows_.end())
    return std::nullopt;
  auto c = r->second.find(col);
  if (c == r->second.end())
    return std::nullopt;
  return c->second;
}

std::size_t SparseSystem::nonzeros() const
{
  std::size_t n = 0;
  for (const auto& [row, cols] : rows_)
    n += cols.size();
  return n;
}

void SparseSystem::freeze()
{
  requireOpen();
  std::set<MultiIndex> keys;
  for (const auto& [row, cols] : rows_) {
    keys.insert(row);
    for (const auto& [col, value] : cols)
      keys.insert(col);
  }
  keys_.assign(keys.begin(), keys.end());
  ordinals_.reserve(keys_.size());
  for (std::size_t k = 0; k < keys_.size(); ++k)
    ordinals_.emplace(keys_[k], k);

  rowOffsets_.assign(keys_.size() + 1, 0);
  columns_.clear();
  values_.clear();
  columns_.reserve(nonzeros());
  values_.reserve(nonzeros());
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    auto r = rows_.find(keys_[k]);
    if (r != rows_.end())
      for (const auto& [col, value] : r->second) {
        columns_.push_back(ordinals_.at(col));
        values_.push_back(value);
      }
    rowOffsets_[k + 1] = columns_.size();
  }
  frozen_ = true;
}

const std::vector<MultiIndex>& SparseSystem::keys() const
{
  requireFrozen();
  return keys_;
}

std::size_t SparseSystem::ordinal(const MultiIndex& key) const
{
  requireFrozen();
  auto it = ordinals_.find(key);
  if (it == ordinals_.end())
    throw ShapeMismatch("multi-index " + key.toString() + " is not a key of the system");
  return it->second;
}

void SparseSystem::applySerial(std::span<const double> x, std::span<double> y) const
{
  requireFrozen();
  const std::size_t n = keys_.size();
  for (std::size_t r = 0; r < n; ++r) {
    double sum = 0.0;
    for (std::size_t k = rowOffsets_[r]; k < rowOffsets_[r + 1]; ++k)
      sum += values_[k] * x[columns_[k]];
    y[r] = sum;
  }
}

void SparseSystem::apply(std::span<const double> x, std::span<double> y) const
{
  requireFrozen();
  const auto n = static_cast<std::ptrdiff_t>(keys_.size());
  const std::size_t* offsets = rowOffsets_.data();
  const std::size_t* cols = columns_.data();
  const double* vals = values_.data();
  // Each row is summed in the same order as applySerial, so results are bitwise equal.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    double sum = 0.0;
    for (std::size_t k = offsets[r]; k < offsets[r + 1]; ++k)
      sum += vals[k] * x[cols[k]];
    y[r] = sum;
  }
}

std::vector<double> SparseSystem::gather(const NestedValue& v) const
{
  requireFrozen();
  std::vector<double> flat(keys_.size());
  for (std::size_t k = 0; k < keys_.size(); ++k)
    flat[k] = v.entry(keys_[k]);
  return flat;
}

void SparseSystem::scatter(std::span<const double> flat, NestedValue& v) const
{
  requireFrozen();
  if (flat.size() != keys_.size())
    throw ShapeMismatch("flat vector of length " + std::to_string(flat.size()) + " for "
                        + std::to_string(keys_.size()) + " keys");
  for (std::size_t k = 0; k < keys_.size(); ++k)
    v.entry(keys_[k]) = flat[k];
}

NestedValue SparseSystem::matvec(const NestedValue& x) const
{
  requireFrozen();
  const std::vector<double> xs = gather(x);
  std::vector<double> ys(xs.size());
  apply(xs, ys);
  NestedValue y = x.mapShape(0.0);
  scatter(ys, y);
  return y;
}

void SparseSystem::dump(std::ostream& os) const
{
  char buffer[64];
  for (const auto& [row, cols] : rows_)
    for (const auto& [col, value] : cols) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", value);
      os << row << ' ' << col << ' ' << buffer << '\n';
    }
}

} // end namespace fembasis
