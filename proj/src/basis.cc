#include <fembasis/basis.hh>

#include <numeric>

#include <fembasis/errors.hh>

namespace fembasis {

MultiIndex mergeChildIndex(MergingStrategy strategy, std::size_t child,
                           const MultiIndex& childIndex, const MergeContext& context)
{
  MultiIndex result = childIndex;
  switch (strategy) {
    case MergingStrategy::BlockedLexicographic:
      result.push_front(child);
      return result;
    case MergingStrategy::BlockedInterleaved:
      result.push_back(child);
      return result;
    case MergingStrategy::FlatLexicographic: {
      if (childIndex.empty())
        throw ShapeMismatch("flat strategy needs a nonempty child multi-index");
      std::size_t offset = 0;
      for (std::size_t j = 0; j < child; ++j)
        offset += context.childRootDegrees[j];
      result[0] += offset;
      return result;
    }
    case MergingStrategy::FlatInterleaved:
      if (childIndex.empty())
        throw ShapeMismatch("flat strategy needs a nonempty child multi-index");
      result[0] = childIndex[0] * context.childCount + child;
      return result;
  }
  return result;
}

GlobalBasis::GlobalBasis(StructuredGrid grid, BasisSpec spec)
  : grid_(grid)
  , spec_(std::move(spec))
{
  build(spec_, noParent, 0, TreePath());

  const auto indices = allIndices();
  if (!validateIndexTree(indices))
    throw MergeProducesInvalidTree("basis " + render(spec_));
}

std::size_t GlobalBasis::build(const BasisSpec& spec, std::size_t parent, std::size_t digit,
                               TreePath path)
{
  const std::size_t id = nodes_.size();
  nodes_.push_back(Node{spec.kind(), spec.strategy(), parent, digit, {}, {}});
  nodes_[id].leafBegin = leaves_.size();

  if (spec.isLeaf()) {
    const std::size_t k = spec.order();
    leaves_.push_back(LeafInfo{path, LagrangeQk(spec.order()),
                               k * grid_.nx() + 1, k * grid_.ny() + 1});
    leafNodes_.push_back(id);
    nodes_[id].leaf = leaves_.size() - 1;
    nodes_[id].rootDegree = leaves_.back().flatSize();
    nodes_[id].leafEnd = leaves_.size();
    return id;
  }

  std::vector<std::size_t> children;
  std::vector<std::size_t> rootDegrees;
  for (std::size_t i = 0; i < spec.degree(); ++i) {
    const std::size_t c = build(spec.child(i), id, i, path.child(i));
    children.push_back(c);
    rootDegrees.push_back(nodes_[c].rootDegree);
  }

  Node& node = nodes_[id];
  const std::size_t m = children.size();
  switch (node.strategy) {
    case MergingStrategy::BlockedLexicographic:
      node.rootDegree = m;
      break;
    case MergingStrategy::BlockedInterleaved:
      node.rootDegree = rootDegrees.front();
      break;
    case MergingStrategy::FlatLexicographic:
      node.rootDegree = std::accumulate(rootDegrees.begin(), rootDegrees.end(), std::size_t(0));
      break;
    case MergingStrategy::FlatInterleaved:
      node.rootDegree = m * rootDegrees.front();
      break;
  }
  node.children = std::move(children);
  node.childRootDegrees = std::move(rootDegrees);
  node.leafEnd = leaves_.size();
  return id;
}

std::size_t GlobalBasis::dimension() const
{
  std::size_t n = 0;
  for (const auto& leaf : leaves_)
    n += leaf.flatSize();
  return n;
}

namespace {

MultiIndex tail(const MultiIndex& mi, std::size_t firstDigit)
{
  MultiIndex t;
  t.push_back(firstDigit);
  for (std::size_t i = 1; i < mi.size(); ++i)
    t.push_back(mi[i]);
  return t;
}

MultiIndex dropFront(const MultiIndex& mi)
{
  MultiIndex t;
  for (std::size_t i = 1; i < mi.size(); ++i)
    t.push_back(mi[i]);
  return t;
}

} // end anonymous namespace

std::size_t GlobalBasis::size(const MultiIndex& prefix) const
{
  // Recursive descent through the merge rules; nullopt marks a prefix
  // that does not occur in the index tree of the node.
  struct Descent
  {
    const std::vector<Node>& nodes;

    std::optional<std::size_t> degree(std::size_t id, const MultiIndex& p) const
    {
      const Node& node = nodes[id];
      if (p.empty())
        return node.rootDegree;

      if (node.kind == BasisSpec::Kind::Leaf) {
        if (p.size() == 1 && p[0] < node.rootDegree)
          return 0;
        return std::nullopt;
      }

      const std::size_t m = node.children.size();
      switch (node.strategy) {
        case MergingStrategy::BlockedLexicographic:
          if (p[0] >= m)
            return std::nullopt;
          return degree(node.children[p[0]], dropFront(p));

        case MergingStrategy::BlockedInterleaved: {
          const std::size_t child = node.children.front();
          auto d = degree(child, p);
          if (d)
            return *d > 0 ? *d : m;
          MultiIndex entry = p;
          entry.pop_back();
          if (p.back() < m && !entry.empty() && degree(child, entry) == std::size_t(0))
            return 0;
          return std::nullopt;
        }

        case MergingStrategy::FlatLexicographic: {
          std::size_t offset = 0;
          for (std::size_t i = 0; i < m; ++i) {
            const std::size_t deg = node.childRootDegrees[i];
            if (p[0] < offset + deg)
              return degree(node.children[i], tail(p, p[0] - offset));
            offset += deg;
          }
          return std::nullopt;
        }

        case MergingStrategy::FlatInterleaved: {
          const std::size_t i = p[0] % m;
          const std::size_t i0 = p[0] / m;
          if (i0 >= node.childRootDegrees[i])
            return std::nullopt;
          return degree(node.children[i], tail(p, i0));
        }
      }
      return std::nullopt;
    }
  };

  auto d = Descent{nodes_}.degree(0, prefix);
  if (!d)
    throw PrefixNotFound("prefix " + prefix.toString() + " in basis " + render(spec_));
  return *d;
}

std::size_t GlobalBasis::nodeAt(const TreePath& path) const
{
  std::size_t id = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Node& node = nodes_[id];
    if (path[i] >= node.children.size())
      throw PathOutOfRange("tree path " + path.toString() + " in basis " + render(spec_));
    id = node.children[path[i]];
  }
  return id;
}

std::size_t GlobalBasis::leafNumber(const TreePath& path) const
{
  const Node& node = nodes_[nodeAt(path)];
  if (node.kind != BasisSpec::Kind::Leaf)
    throw PathOutOfRange("tree path " + path.toString() + " does not address a leaf");
  return node.leaf;
}

std::pair<std::size_t, std::size_t> GlobalBasis::leafRange(const TreePath& path) const
{
  const Node& node = nodes_[nodeAt(path)];
  return {node.leafBegin, node.leafEnd};
}

std::size_t GlobalBasis::flatIndex(std::size_t leaf, std::size_t element, std::size_t m) const
{
  const LeafInfo& info = leaves_[leaf];
  const std::size_t k = info.finiteElement.order();
  const std::size_t i = element % grid_.nx();
  const std::size_t j = element / grid_.nx();
  const std::size_t a = info.finiteElement.nodeColumn(m);
  const std::size_t b = info.finiteElement.nodeRow(m);
  return (k * j + b) * info.nodesPerRow + (k * i + a);
}

Vec2 GlobalBasis::nodePosition(std::size_t leaf, std::size_t flat) const
{
  const LeafInfo& info = leaves_[leaf];
  const double k = info.finiteElement.order();
  const std::size_t I = flat % info.nodesPerRow;
  const std::size_t J = flat / info.nodesPerRow;
  return {double(I) / (k * double(grid_.nx())), double(J) / (k * double(grid_.ny()))};
}

MultiIndex GlobalBasis::globalIndex(std::size_t leaf, std::size_t flat) const
{
  if (leaf >= leaves_.size() || flat >= leaves_[leaf].flatSize())
    throw IndexOutOfRange("basis function " + std::to_string(flat) + " of leaf "
                          + std::to_string(leaf));
  MultiIndex mi{flat};
  std::size_t id = leafNodes_[leaf];
  while (nodes_[id].parent != noParent) {
    const Node& parent = nodes_[nodes_[id].parent];
    mi = mergeChildIndex(parent.strategy, nodes_[id].digit, mi,
                         MergeContext{parent.children.size(), parent.childRootDegrees});
    id = nodes_[id].parent;
  }
  return mi;
}

std::vector<MultiIndex> GlobalBasis::allIndices() const
{
  std::vector<MultiIndex> indices;
  indices.reserve(dimension());
  for (std::size_t l = 0; l < leaves_.size(); ++l)
    for (std::size_t n = 0; n < leaves_[l].flatSize(); ++n)
      indices.push_back(globalIndex(l, n));
  return indices;
}

LocalView GlobalBasis::localView() const
{
  return LocalView(SubspaceBasis(*this));
}

// SubspaceBasis

SubspaceBasis::SubspaceBasis(const GlobalBasis& root)
  : SubspaceBasis(root, TreePath())
{}

SubspaceBasis::SubspaceBasis(const GlobalBasis& root, TreePath prefixPath)
  : root_(&root)
  , prefix_(std::move(prefixPath))
{
  std::tie(leafBegin_, leafEnd_) = root.leafRange(prefix_);
}

std::size_t SubspaceBasis::dimension() const
{
  std::size_t n = 0;
  for (std::size_t l = leafBegin_; l < leafEnd_; ++l)
    n += root_->leaf(l).flatSize();
  return n;
}

LocalView SubspaceBasis::localView() const
{
  return LocalView(*this);
}

SubspaceBasis subspaceBasis(const GlobalBasis& basis, const TreePath& path)
{
  return SubspaceBasis(basis, path);
}

SubspaceBasis subspaceBasis(const SubspaceBasis& basis, const TreePath& path)
{
  std::vector<std::size_t> digits(basis.prefixPath().begin(), basis.prefixPath().end());
  digits.insert(digits.end(), path.begin(), path.end());
  return SubspaceBasis(basis.rootBasis(), TreePath(std::move(digits)));
}

// LocalView

LocalView::LocalView(const SubspaceBasis& basis)
  : basis_(basis)
{
  const GlobalBasis& root = basis_.rootBasis();
  for (std::size_t l = basis_.leafBegin(); l < basis_.leafEnd(); ++l) {
    leafPaths_.push_back(root.leaf(l).path.relativeTo(basis_.prefixPath()));
    leafOffsets_.push_back(maxSize_);
    maxSize_ += root.leaf(l).finiteElement.size();
  }
}

void LocalView::bind(std::size_t element)
{
  const GlobalBasis& root = basis_.rootBasis();
  if (element >= root.grid().size())
    throw IndexOutOfRange("element " + std::to_string(element));
  indices_.resize(maxSize_);
  for (std::size_t l = 0; l < leafCount(); ++l) {
    const std::size_t leaf = rootLeaf(l);
    const std::size_t n = root.leaf(leaf).finiteElement.size();
    for (std::size_t m = 0; m < n; ++m)
      indices_[leafOffsets_[l] + m] = root.globalIndex(leaf, root.flatIndex(leaf, element, m));
  }
  element_ = element;
}

void LocalView::requireBound() const
{
  if (!element_)
    throw UnboundView("local view is not bound to an element");
}

std::size_t LocalView::element() const
{
  requireBound();
  return *element_;
}

ElementGeometry LocalView::geometry() const
{
  return basis_.grid().elementGeometry(element());
}

std::size_t LocalView::size() const
{
  requireBound();
  return maxSize_;
}

const MultiIndex& LocalView::index(std::size_t i) const
{
  requireBound();
  if (i >= indices_.size())
    throw IndexOutOfRange("local index " + std::to_string(i) + " of "
                          + std::to_string(indices_.size()));
  return indices_[i];
}

const LagrangeQk& LocalView::finiteElement(std::size_t l) const
{
  return basis_.rootBasis().leaf(rootLeaf(l)).finiteElement;
}

std::size_t LocalView::viewLeaf(const TreePath& leafPath) const
{
  for (std::size_t l = 0; l < leafPaths_.size(); ++l)
    if (leafPaths_[l] == leafPath)
      return l;
  throw PathOutOfRange("no leaf at relative path " + leafPath.toString());
}

std::size_t LocalView::localIndex(std::size_t l, std::size_t m) const
{
  requireBound();
  return leafOffsets_[l] + m;
}

} // end namespace fembasis
