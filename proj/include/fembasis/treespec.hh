#ifndef FEMBASIS_TREESPEC_HH
#define FEMBASIS_TREESPEC_HH

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace fembasis {

/** \brief Rule turning child multi-indices into multi-indices of the parent node */
enum class MergingStrategy
{
  BlockedLexicographic,
  BlockedInterleaved,
  FlatLexicographic,
  FlatInterleaved
};

//! Interleaved strategies are only defined on power nodes
constexpr bool requiresPowerNode(MergingStrategy s)
{
  return s == MergingStrategy::BlockedInterleaved || s == MergingStrategy::FlatInterleaved;
}

//! Blocked strategies add one digit to the child multi-index
constexpr bool isBlocked(MergingStrategy s)
{
  return s == MergingStrategy::BlockedLexicographic || s == MergingStrategy::BlockedInterleaved;
}

std::string_view longName(MergingStrategy s);
std::string_view shortName(MergingStrategy s);

/** \brief Digit sequence addressing a node inside a basis tree, relative to some root */
class TreePath
{
public:
  TreePath() = default;
  TreePath(std::initializer_list<std::size_t> digits) : digits_(digits) {}
  explicit TreePath(std::vector<std::size_t> digits) : digits_(std::move(digits)) {}

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  std::size_t operator[](std::size_t i) const { return digits_[i]; }
  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

  TreePath child(std::size_t i) const
  {
    TreePath p = *this;
    p.digits_.push_back(i);
    return p;
  }

  //! True iff this path starts with `prefix`
  bool extends(const TreePath& prefix) const;

  //! This path with the leading `prefix` removed; requires extends(prefix)
  TreePath relativeTo(const TreePath& prefix) const;

  std::string toString() const;

  friend bool operator==(const TreePath&, const TreePath&) = default;

private:
  std::vector<std::size_t> digits_;
};

/**
 * \brief Syntax tree of a function space basis
 *
 * Leaves are scalar Lagrange bases Q1 or Q2. A power node repeats one child
 * `count` times; a composite node holds heterogeneous children.
 */
class BasisSpec
{
public:
  enum class Kind { Leaf, Power, Composite };

  static constexpr std::size_t maxDepth = 4;

  static BasisSpec lagrange(int order);
  static BasisSpec power(BasisSpec child, std::size_t count,
                         MergingStrategy strategy = MergingStrategy::BlockedInterleaved);
  static BasisSpec composite(std::vector<BasisSpec> children,
                             MergingStrategy strategy = MergingStrategy::BlockedLexicographic);

  Kind kind() const { return kind_; }
  bool isLeaf() const { return kind_ == Kind::Leaf; }
  bool isPower() const { return kind_ == Kind::Power; }
  bool isComposite() const { return kind_ == Kind::Composite; }

  //! Polynomial order of a leaf
  int order() const { return order_; }
  MergingStrategy strategy() const { return strategy_; }

  //! Number of direct children (0 for a leaf)
  std::size_t degree() const;

  //! The i-th direct child; all children of a power node are the same
  const BasisSpec& child(std::size_t i) const;

  //! Number of inner-node levels on the longest root-to-leaf path
  std::size_t depth() const;

  //! Number of leaves in the expanded tree
  std::size_t leafCount() const;

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;

private:
  BasisSpec() = default;

  Kind kind_ = Kind::Leaf;
  int order_ = 1;
  std::size_t count_ = 0;
  MergingStrategy strategy_ = MergingStrategy::BlockedLexicographic;
  std::vector<BasisSpec> children_;
};

/**
 * \brief Parse a textual basis tree
 *
 *   node  := "lagrange(" int ")"
 *          | "power(" node "," int ["," strat] ")"
 *          | "composite(" node {"," node} ["," strat] ")"
 *   strat := BL | BI | FL | FI | BlockedLexicographic | ... (long names)
 *
 * Whitespace is ignored. Strategies default to BL for composite and BI for power.
 * \throws SyntaxError, InvalidStrategy, UnsupportedOrder, TreeTooDeep
 */
BasisSpec parseSpec(std::string_view text);

//! Canonical text form; uses long strategy names and always prints the strategy
std::string render(const BasisSpec& spec);

//! The subtree addressed by `path`; the empty path yields `spec` itself
const BasisSpec& childAt(const BasisSpec& spec, const TreePath& path);

} // end namespace fembasis

#endif // FEMBASIS_TREESPEC_HH
