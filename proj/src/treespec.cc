#include <fembasis/treespec.hh>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

#include <fembasis/errors.hh>

namespace fembasis {

std::string_view longName(MergingStrategy s)
{
  switch (s) {
    case MergingStrategy::BlockedLexicographic: return "BlockedLexicographic";
    case MergingStrategy::BlockedInterleaved: return "BlockedInterleaved";
    case MergingStrategy::FlatLexicographic: return "FlatLexicographic";
    case MergingStrategy::FlatInterleaved: return "FlatInterleaved";
  }
  return {};
}

std::string_view shortName(MergingStrategy s)
{
  switch (s) {
    case MergingStrategy::BlockedLexicographic: return "BL";
    case MergingStrategy::BlockedInterleaved: return "BI";
    case MergingStrategy::FlatLexicographic: return "FL";
    case MergingStrategy::FlatInterleaved: return "FI";
  }
  return {};
}

bool TreePath::extends(const TreePath& prefix) const
{
  return prefix.size() <= size()
         && std::equal(prefix.begin(), prefix.end(), begin());
}

TreePath TreePath::relativeTo(const TreePath& prefix) const
{
  return TreePath(std::vector<std::size_t>(digits_.begin() + prefix.size(), digits_.end()));
}

std::string TreePath::toString() const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < digits_.size(); ++i)
    os << (i ? "," : "") << digits_[i];
  os << ')';
  return os.str();
}

BasisSpec BasisSpec::lagrange(int order)
{
  if (order != 1 && order != 2)
    throw UnsupportedOrder("lagrange order " + std::to_string(order) + " (supported: 1, 2)");
  BasisSpec s;
  s.kind_ = Kind::Leaf;
  s.order_ = order;
  return s;
}

BasisSpec BasisSpec::power(BasisSpec child, std::size_t count, MergingStrategy strategy)
{
  if (count == 0)
    throw InvalidSpec("power node needs at least one child");
  if (child.depth() + 1 > maxDepth)
    throw TreeTooDeep("depth exceeds " + std::to_string(maxDepth));
  BasisSpec s;
  s.kind_ = Kind::Power;
  s.count_ = count;
  s.strategy_ = strategy;
  s.children_.push_back(std::move(child));
  return s;
}

BasisSpec BasisSpec::composite(std::vector<BasisSpec> children, MergingStrategy strategy)
{
  if (children.empty())
    throw InvalidSpec("composite node needs at least one child");
  if (requiresPowerNode(strategy))
    throw InvalidStrategy(std::string(longName(strategy)) + " is only defined for power nodes");
  for (const auto& c : children)
    if (c.depth() + 1 > maxDepth)
      throw TreeTooDeep("depth exceeds " + std::to_string(maxDepth));
  BasisSpec s;
  s.kind_ = Kind::Composite;
  s.count_ = children.size();
  s.strategy_ = strategy;
  s.children_ = std::move(children);
  return s;
}

std::size_t BasisSpec::degree() const
{
  return kind_ == Kind::Leaf ? 0 : count_;
}

const BasisSpec& BasisSpec::child(std::size_t i) const
{
  if (i >= degree())
    throw PathOutOfRange("child " + std::to_string(i) + " of a node with "
                         + std::to_string(degree()) + " children");
  return kind_ == Kind::Power ? children_.front() : children_[i];
}

std::size_t BasisSpec::depth() const
{
  std::size_t d = 0;
  for (const auto& c : children_)
    d = std::max(d, c.depth() + 1);
  return d;
}

std::size_t BasisSpec::leafCount() const
{
  switch (kind_) {
    case Kind::Leaf: return 1;
    case Kind::Power: return count_ * children_.front().leafCount();
    case Kind::Composite:
      return std::accumulate(children_.begin(), children_.end(), std::size_t(0),
                             [](std::size_t n, const BasisSpec& c) { return n + c.leafCount(); });
  }
  return 0;
}

namespace {

class Parser
{
public:
  explicit Parser(std::string_view text) : text_(text) {}

  BasisSpec parse()
  {
    BasisSpec spec = node();
    skipSpace();
    if (pos_ != text_.size())
      throw SyntaxError(pos_, "end of input");
    return spec;
  }

private:
  void skipSpace()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view peekIdentifier()
  {
    skipSpace();
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end])))
      ++end;
    return text_.substr(pos_, end - pos_);
  }

  void expect(char c)
  {
    skipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw SyntaxError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  bool accept(char c)
  {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long integer()
  {
    skipSpace();
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
      ++end;
    if (end == pos_ || end - pos_ > 9)
      throw SyntaxError(pos_, "integer");
    long value = std::stol(std::string(text_.substr(pos_, end - pos_)));
    pos_ = end;
    return value;
  }

  static std::optional<MergingStrategy> strategyFromName(std::string_view name)
  {
    for (auto s : {MergingStrategy::BlockedLexicographic, MergingStrategy::BlockedInterleaved,
                   MergingStrategy::FlatLexicographic, MergingStrategy::FlatInterleaved})
      if (name == shortName(s) || name == longName(s))
        return s;
    return std::nullopt;
  }

  static bool isNodeKeyword(std::string_view name)
  {
    return name == "lagrange" || name == "power" || name == "composite";
  }

  MergingStrategy strategy()
  {
    skipSpace();
    std::size_t start = pos_;
    auto name = peekIdentifier();
    auto s = strategyFromName(name);
    if (!s)
      throw SyntaxError(start, "strategy (BL, BI, FL, FI)");
    pos_ += name.size();
    return *s;
  }

  BasisSpec node()
  {
    auto keyword = peekIdentifier();
    std::size_t start = pos_;
    if (!isNodeKeyword(keyword))
      throw SyntaxError(start, "lagrange, power or composite");
    pos_ += keyword.size();
    expect('(');

    if (keyword == "lagrange") {
      long order = integer();
      expect(')');
      return BasisSpec::lagrange(static_cast<int>(order));
    }

    if (keyword == "power") {
      BasisSpec child = node();
      expect(',');
      skipSpace();
      std::size_t countPos = pos_;
      long count = integer();
      if (count < 1)
        throw SyntaxError(countPos, "positive child count");
      MergingStrategy s = MergingStrategy::BlockedInterleaved;
      if (accept(','))
        s = strategy();
      expect(')');
      return BasisSpec::power(std::move(child), static_cast<std::size_t>(count), s);
    }

    std::vector<BasisSpec> children;
    children.push_back(node());
    MergingStrategy s = MergingStrategy::BlockedLexicographic;
    while (accept(',')) {
      auto next = peekIdentifier();
      if (isNodeKeyword(next)) {
        children.push_back(node());
        continue;
      }
      if (!strategyFromName(next))
        throw SyntaxError(pos_, "node or strategy");
      s = strategy();
      break;
    }
    expect(')');
    return BasisSpec::composite(std::move(children), s);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void renderInto(std::ostringstream& os, const BasisSpec& spec)
{
  switch (spec.kind()) {
    case BasisSpec::Kind::Leaf:
      os << "lagrange(" << spec.order() << ")";
      return;
    case BasisSpec::Kind::Power:
      os << "power(";
      renderInto(os, spec.child(0));
      os << "," << spec.degree() << "," << longName(spec.strategy()) << ")";
      return;
    case BasisSpec::Kind::Composite:
      os << "composite(";
      for (std::size_t i = 0; i < spec.degree(); ++i) {
        renderInto(os, spec.child(i));
        os << ",";
      }
      os << longName(spec.strategy()) << ")";
      return;
  }
}

} // end anonymous namespace

BasisSpec parseSpec(std::string_view text)
{
  return Parser(text).parse();
}

std::string render(const BasisSpec& spec)
{
  std::ostringstream os;
  renderInto(os, spec);
  return os.str();
}

const BasisSpec& childAt(const BasisSpec& spec, const TreePath& path)
{
  const BasisSpec* node = &spec;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= node->degree())
      throw PathOutOfRange("tree path " + path.toString() + " at position " + std::to_string(i));
    node = &node->child(path[i]);
  }
  return *node;
}

} // end namespace fembasis
