#include <fembasis/multiindex.hh>

#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace fembasis {

std::string MultiIndex::toString() const
{
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& mi)
{
  os << '(';
  for (std::size_t i = 0; i < mi.size(); ++i)
    os << (i ? "," : "") << mi[i];
  return os << ')';
}

bool isPrefix(const MultiIndex& p, const MultiIndex& i)
{
  return p.size() <= i.size() && std::equal(p.begin(), p.end(), i.begin());
}

namespace {

// strict prefix -> set of digits directly following it
std::map<MultiIndex, std::set<std::size_t>> collectChildDigits(std::span<const MultiIndex> entries)
{
  std::map<MultiIndex, std::set<std::size_t>> children;
  for (const auto& mi : entries)
    for (std::size_t len = 0; len < mi.size(); ++len)
      children[mi.prefix(len)].insert(mi[len]);
  return children;
}

} // end anonymous namespace

bool validateIndexTree(std::span<const MultiIndex> entries)
{
  const auto children = collectChildDigits(entries);
  for (const auto& [prefix, digits] : children)
    if (*digits.rbegin() + 1 != digits.size())
      return false;
  for (const auto& mi : entries)
    if (children.contains(mi))
      return false;
  return true;
}

std::size_t prefixDegree(std::span<const MultiIndex> entries, const MultiIndex& prefix)
{
  bool found = false;
  std::size_t degree = 0;
  for (const auto& mi : entries) {
    if (!isPrefix(prefix, mi))
      continue;
    if (mi.size() == prefix.size())
      return 0;
    found = true;
    degree = std::max(degree, mi[prefix.size()] + 1);
  }
  if (!found)
    throw PrefixNotFound("prefix " + prefix.toString() + " is not part of the index set");
  return degree;
}

} // end namespace fembasis
