#ifndef FEMBASIS_BASIS_HH
#define FEMBASIS_BASIS_HH

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <fembasis/grid.hh>
#include <fembasis/localfe.hh>
#include <fembasis/multiindex.hh>
#include <fembasis/treespec.hh>

namespace fembasis {

/** \brief What a merging strategy needs to know about the siblings of a child */
struct MergeContext
{
  std::size_t childCount = 0;
  //! Degree of the root of each child's index tree
  std::span<const std::size_t> childRootDegrees;
};

/**
 * \brief Transform the multi-index of a basis function of child `child` into
 *        the multi-index of the parent node
 *
 *   BL: (i, I)               BI: (I, i)
 *   FL: (L_i + i0, I')       FI: (i0 * m + i, I')
 *
 * with I = (i0, I') and L_i the sum of the root degrees of children 0..i-1.
 * \throws CapacityExceeded, ShapeMismatch (flat strategy on an empty index)
 */
MultiIndex mergeChildIndex(MergingStrategy strategy, std::size_t child,
                           const MultiIndex& childIndex, const MergeContext& context);

//! A leaf of the expanded basis tree, in depth-first pre-order
struct LeafInfo
{
  TreePath path;
  LagrangeQk finiteElement;
  std::size_t nodesPerRow;   //!< k*nx + 1
  std::size_t nodesPerColumn;   //!< k*ny + 1

  std::size_t flatSize() const { return nodesPerRow * nodesPerColumn; }
};

class LocalView;
class SubspaceBasis;

/**
 * \brief Function space basis tree over a structured grid
 *
 * Every leaf is numbered by the lexicographic index of its Lagrange nodes;
 * the inner nodes merge these numbers into multi-indices according to their
 * strategies. The set of all multi-indices is validated as an index tree on
 * construction.
 */
class GlobalBasis
{
public:
  //! \throws MergeProducesInvalidTree
  GlobalBasis(StructuredGrid grid, BasisSpec spec);

  const StructuredGrid& grid() const { return grid_; }
  const BasisSpec& spec() const { return spec_; }

  //! Total number of basis functions
  std::size_t dimension() const;

  //! Root degree of the index tree
  std::size_t size() const { return nodes_.front().rootDegree; }

  /** \brief Number of children of `prefix` in the index tree; zero if `prefix` is a full index
   *  \throws PrefixNotFound
   */
  std::size_t size(const MultiIndex& prefix) const;

  std::size_t leafCount() const { return leaves_.size(); }
  const LeafInfo& leaf(std::size_t l) const { return leaves_[l]; }

  //! Position of the leaf with the given root-relative path; \throws PathOutOfRange
  std::size_t leafNumber(const TreePath& path) const;

  //! Leaves below `path` occupy the half-open range returned here
  std::pair<std::size_t, std::size_t> leafRange(const TreePath& path) const;

  //! Flat grid-node number of leaf-local shape function m on element e
  std::size_t flatIndex(std::size_t leaf, std::size_t element, std::size_t m) const;

  //! Global coordinates of the Lagrange node with the given flat number
  Vec2 nodePosition(std::size_t leaf, std::size_t flat) const;

  //! Multi-index of the basis function with flat number `flat` in `leaf`
  MultiIndex globalIndex(std::size_t leaf, std::size_t flat) const;
  MultiIndex globalIndex(const TreePath& leafPath, std::size_t flat) const
  {
    return globalIndex(leafNumber(leafPath), flat);
  }

  LocalView localView() const;

  //! Enumerate every global multi-index, leaf by leaf
  std::vector<MultiIndex> allIndices() const;

private:
  struct Node
  {
    BasisSpec::Kind kind;
    MergingStrategy strategy;
    std::size_t parent;
    std::size_t digit;   //!< position among the parent's children
    std::vector<std::size_t> children;
    std::vector<std::size_t> childRootDegrees;
    std::size_t rootDegree = 0;
    std::size_t leaf = 0;   //!< leaf number, for leaf nodes
    std::size_t leafBegin = 0;
    std::size_t leafEnd = 0;
  };

  std::size_t build(const BasisSpec& spec, std::size_t parent, std::size_t digit, TreePath path);
  std::size_t sizeOf(std::size_t node, std::span<const std::size_t> prefix) const;
  std::size_t nodeAt(const TreePath& path) const;

  StructuredGrid grid_;
  BasisSpec spec_;
  std::vector<Node> nodes_;
  std::vector<LeafInfo> leaves_;
  std::vector<std::size_t> leafNodes_;

  static constexpr std::size_t noParent = std::size_t(-1);
};

/**
 * \brief A subtree of a global basis, used as a basis in its own right
 *
 * Local views of a subspace basis only contain the shape functions of the
 * leaves below prefixPath(), but report the multi-indices of the root basis.
 * The root basis must outlive this object.
 */
class SubspaceBasis
{
public:
  //! The trivial subspace covering the whole tree
  SubspaceBasis(const GlobalBasis& root);

  //! \throws PathOutOfRange
  SubspaceBasis(const GlobalBasis& root, TreePath prefixPath);

  const GlobalBasis& rootBasis() const { return *root_; }
  const TreePath& prefixPath() const { return prefix_; }
  const StructuredGrid& grid() const { return root_->grid(); }

  //! The subtree addressed by prefixPath()
  const BasisSpec& spec() const { return childAt(root_->spec(), prefix_); }

  std::size_t leafBegin() const { return leafBegin_; }
  std::size_t leafEnd() const { return leafEnd_; }

  //! Number of basis functions in the subtree
  std::size_t dimension() const;

  LocalView localView() const;

private:
  const GlobalBasis* root_;
  TreePath prefix_;
  std::size_t leafBegin_;
  std::size_t leafEnd_;
};

SubspaceBasis subspaceBasis(const GlobalBasis& basis, const TreePath& path);
SubspaceBasis subspaceBasis(const SubspaceBasis& basis, const TreePath& path);

/**
 * \brief Restriction of a basis to one grid element
 *
 * Local indices enumerate the leaves of the view's subtree in depth-first
 * pre-order; the shape functions of one leaf are consecutive and ordered by
 * their leaf-local index. Binding computes and caches all global indices.
 * Tree paths passed to the view are relative to the subtree root.
 */
class LocalView
{
public:
  explicit LocalView(const SubspaceBasis& basis);

  //! \throws IndexOutOfRange
  void bind(std::size_t element);
  void unbind() { element_.reset(); }
  bool bound() const { return element_.has_value(); }

  //! \throws UnboundView
  std::size_t element() const;
  ElementGeometry geometry() const;

  //! Number of shape functions on the bound element; \throws UnboundView
  std::size_t size() const;

  //! Upper bound of size() over all elements; also valid while unbound
  std::size_t maxSize() const { return maxSize_; }

  //! Global multi-index of local shape function i; \throws UnboundView, IndexOutOfRange
  const MultiIndex& index(std::size_t i) const;

  //! Number of leaves in the view's subtree
  std::size_t leafCount() const { return leafOffsets_.size(); }

  //! Path of view-leaf l, relative to the subtree root
  const TreePath& leafPath(std::size_t l) const { return leafPaths_[l]; }
  const LagrangeQk& finiteElement(std::size_t l) const;
  const LagrangeQk& finiteElement(const TreePath& leafPath) const
  {
    return finiteElement(viewLeaf(leafPath));
  }

  //! View-leaf number of a relative leaf path; \throws PathOutOfRange
  std::size_t viewLeaf(const TreePath& leafPath) const;

  //! Local index of leaf-local shape function m of view-leaf l; \throws UnboundView
  std::size_t localIndex(std::size_t l, std::size_t m) const;
  std::size_t localIndex(const TreePath& leafPath, std::size_t m) const
  {
    return localIndex(viewLeaf(leafPath), m);
  }

  //! Root basis leaf number of view-leaf l
  std::size_t rootLeaf(std::size_t l) const { return basis_.leafBegin() + l; }

  const SubspaceBasis& basis() const { return basis_; }
  const GlobalBasis& rootBasis() const { return basis_.rootBasis(); }

private:
  void requireBound() const;

  SubspaceBasis basis_;
  std::vector<TreePath> leafPaths_;
  std::vector<std::size_t> leafOffsets_;
  std::size_t maxSize_ = 0;
  std::optional<std::size_t> element_;
  std::vector<MultiIndex> indices_;
};

} // end namespace fembasis

#endif // FEMBASIS_BASIS_HH
