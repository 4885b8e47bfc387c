#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include <fembasis/errors.hh>
#include <fembasis/stokes.hh>
#include <fembasis/treespec.hh>

#include "oracles.hh"

using namespace fembasis;
using S = MergingStrategy;

TEST_CASE("parse Taylor-Hood with default strategies")
{
  const auto spec = parseSpec("composite(power(lagrange(2),3),lagrange(1))");
  REQUIRE(spec.isComposite());
  CHECK(spec.strategy() == S::BlockedLexicographic);
  CHECK(spec.degree() == 2);
  const auto& velocity = spec.child(0);
  REQUIRE(velocity.isPower());
  CHECK(velocity.degree() == 3);
  CHECK(velocity.strategy() == S::BlockedInterleaved);
  CHECK(velocity.child(0).isLeaf());
  CHECK(velocity.child(0).order() == 2);
  CHECK(spec.child(1).isLeaf());
  CHECK(spec.child(1).order() == 1);
  CHECK(spec == taylorHoodSpec(S::BlockedInterleaved, S::BlockedLexicographic, 3));
  CHECK(spec.leafCount() == 4);
  CHECK(spec.depth() == 2);
}

TEST_CASE("parse leaves, strategies and whitespace")
{
  CHECK(parseSpec("lagrange(1)") == BasisSpec::lagrange(1));
  CHECK(parseSpec("  power ( lagrange( 1 ) , 2 , FL ) ")
        == BasisSpec::power(BasisSpec::lagrange(1), 2, S::FlatLexicographic));
  CHECK(parseSpec("power(lagrange(2),4,FlatInterleaved)").strategy() == S::FlatInterleaved);
  CHECK(parseSpec("composite(lagrange(1),lagrange(2),FL)").strategy() == S::FlatLexicographic);
  CHECK(parseSpec("composite(lagrange(1))").degree() == 1);
}

TEST_CASE("strategy placement rules")
{
  CHECK_THROWS_AS(parseSpec("composite(lagrange(1),lagrange(1),FI)"), InvalidStrategy);
  CHECK_THROWS_AS(parseSpec("composite(lagrange(1),lagrange(1),BI)"), InvalidStrategy);
  CHECK_THROWS_AS(parseSpec("composite(lagrange(1),BlockedInterleaved)"), InvalidStrategy);
  CHECK_THROWS_AS(BasisSpec::composite({BasisSpec::lagrange(1)}, S::FlatInterleaved), InvalidStrategy);
  for (auto s : {S::BlockedLexicographic, S::BlockedInterleaved, S::FlatLexicographic, S::FlatInterleaved})
    CHECK_NOTHROW(BasisSpec::power(BasisSpec::lagrange(1), 2, s));
}

TEST_CASE("random invalid strategy placements are rejected")
{
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const S bad = pick(rng) ? S::BlockedInterleaved : S::FlatInterleaved;
    std::vector<BasisSpec> children{testing::randomSpec(rng, 2), testing::randomSpec(rng, 2)};
    const std::string text = "composite(" + render(children[0]) + "," + render(children[1]) + ","
                             + std::string(shortName(bad)) + ")";
    CHECK_THROWS_AS(BasisSpec::composite(children, bad), InvalidStrategy);
    CHECK_THROWS_AS(parseSpec(text), InvalidStrategy);
  }
}

TEST_CASE("order, count and depth limits")
{
  CHECK_THROWS_AS(parseSpec("lagrange(3)"), UnsupportedOrder);
  CHECK_THROWS_AS(parseSpec("lagrange(0)"), UnsupportedOrder);
  CHECK_THROWS_AS(BasisSpec::power(BasisSpec::lagrange(1), 0), InvalidSpec);
  CHECK_THROWS_AS(BasisSpec::composite({}), InvalidSpec);
  CHECK_THROWS_AS(parseSpec("power(lagrange(1),0)"), SyntaxError);

  BasisSpec deep = BasisSpec::lagrange(1);
  for (std::size_t level = 0; level < BasisSpec::maxDepth; ++level)
    deep = BasisSpec::power(deep, 2);
  CHECK(deep.depth() == BasisSpec::maxDepth);
  CHECK_THROWS_AS(BasisSpec::power(deep, 2), TreeTooDeep);
  CHECK_THROWS_AS(BasisSpec::composite({deep}), TreeTooDeep);
}

TEST_CASE("syntax errors report position and expectation")
{
  auto position = [](const std::string& text) -> std::size_t {
    try {
      parseSpec(text);
    }
    catch (const SyntaxError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position("") == 0);
  CHECK(position("lagrange") == 8);
  CHECK(position("lagrange(x)") == 9);
  CHECK(position("power(lagrange(2)") == 17);
  CHECK(position("power(lagrange(2), 2, XY)") == 22);
  CHECK(position("lagrange(1) trailing") == 12);
  CHECK(position("composite(lagrange(1),,)") == 22);
  CHECK(position("hermite(1)") == 0);

  try {
    parseSpec("power(lagrange(2)");
    FAIL("no exception");
  }
  catch (const SyntaxError& e) {
    CHECK(e.expected() == "','");
    CHECK(std::string(e.what()).find("position 17") != std::string::npos);
  }
}

TEST_CASE("render uses long names")
{
  CHECK(render(parseSpec("composite(power(lagrange(2),2),lagrange(1))"))
        == "composite(power(lagrange(2),2,BlockedInterleaved),lagrange(1),BlockedLexicographic)");
  CHECK(render(BasisSpec::lagrange(2)) == "lagrange(2)");
  CHECK(longName(S::FlatInterleaved) == "FlatInterleaved");
  CHECK(shortName(S::FlatLexicographic) == "FL");
}

TEST_CASE("parse inverts render on random specs")
{
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const BasisSpec spec = testing::randomSpec(rng, 3);
    const BasisSpec reparsed = parseSpec(render(spec));
    CHECK(reparsed == spec);
    CHECK(render(reparsed) == render(spec));
  }
}

TEST_CASE("childAt")
{
  const auto th = taylorHoodSpec();
  CHECK(childAt(th, {0, 1}) == BasisSpec::lagrange(2));
  CHECK(childAt(th, {1}) == BasisSpec::lagrange(1));
  CHECK(childAt(th, {}) == th);
  CHECK(childAt(th, TreePath{0}).isPower());
  CHECK_THROWS_AS(childAt(th, {2}), PathOutOfRange);
  CHECK_THROWS_AS(childAt(th, {0, 2}), PathOutOfRange);
  CHECK_THROWS_AS(childAt(th, {1, 0}), PathOutOfRange);
}

TEST_CASE("tree paths")
{
  const TreePath p{0, 1};
  CHECK(p.child(3) == TreePath{0, 1, 3});
  CHECK(p.extends(TreePath{0}));
  CHECK(p.extends(TreePath{}));
  CHECK_FALSE(p.extends(TreePath{1}));
  CHECK_FALSE(TreePath{0}.extends(p));
  CHECK(TreePath{0, 1, 3}.relativeTo(TreePath{0}) == TreePath{1, 3});
  CHECK(p.toString() == "(0,1)");
}
