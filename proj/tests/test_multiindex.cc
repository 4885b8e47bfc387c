#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <fembasis/basis.hh>
#include <fembasis/multiindex.hh>
#include <fembasis/stokes.hh>

#include "oracles.hh"

using namespace fembasis;
using MI = MultiIndex;

TEST_CASE("capacity is eight digits")
{
  MI full{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(full.size() == 8);
  CHECK_THROWS_AS((MI{0, 1, 2, 3, 4, 5, 6, 7, 8}), CapacityExceeded);
  CHECK_THROWS_AS(full.push_back(1), CapacityExceeded);
  CHECK_THROWS_AS(full.push_front(1), CapacityExceeded);

  std::vector<std::size_t> nine(9, 0);
  CHECK_THROWS_AS(MI(std::span<const std::size_t>(nine)), CapacityExceeded);
}

TEST_CASE("push, prefix and rendering")
{
  MI mi{1, 3};
  mi.push_front(0);
  mi.push_back(7);
  CHECK(mi == MI{0, 1, 3, 7});
  CHECK(mi.prefix(2) == MI{0, 1});
  CHECK(mi.prefix(0).empty());
  CHECK(mi.toString() == "(0,1,3,7)");
  CHECK(MI{}.toString() == "()");

  std::ostringstream os;
  os << MI{4};
  CHECK(os.str() == "(4)");
}

TEST_CASE("ordering is lexicographic")
{
  CHECK(MI{0, 1} < MI{0, 2});
  CHECK(MI{0} < MI{0, 0});
  CHECK(MI{1} > MI{0, 9});
  CHECK(std::hash<MI>{}(MI{1, 2}) == std::hash<MI>{}(MI{1, 2}));
}

TEST_CASE("isPrefix examples")
{
  CHECK(isPrefix(MI{}, MI{1, 4}));
  CHECK(isPrefix(MI{0, 1}, MI{0, 1, 7}));
  CHECK_FALSE(isPrefix(MI{0, 2}, MI{0, 1, 7}));
  CHECK_FALSE(isPrefix(MI{0, 1, 7}, MI{0, 1}));
}

TEST_CASE("isPrefix is reflexive and transitive")
{
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> digit(0, 2), length(0, 4);
  auto random = [&] {
    MI mi;
    for (std::size_t k = length(rng); k > 0; --k)
      mi.push_back(digit(rng));
    return mi;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const MI a = random(), b = random(), c = random();
    CHECK(isPrefix(a, a));
    if (isPrefix(a, b) && isPrefix(b, c))
      CHECK(isPrefix(a, c));
    if (isPrefix(a, b) && a.size() == b.size())
      CHECK(a == b);
  }
}

TEST_CASE("validateIndexTree examples")
{
  const std::vector<MI> flat{{0}, {1}, {2}};
  const std::vector<MI> ragged{{0, 0}, {0, 1}, {1}};
  const std::vector<MI> gap{{0, 0}, {0, 2}};
  const std::vector<MI> entryIsPrefix{{0}, {0, 1}};
  CHECK(validateIndexTree(flat));
  CHECK(validateIndexTree(ragged));
  CHECK_FALSE(validateIndexTree(gap));
  CHECK_FALSE(validateIndexTree(entryIsPrefix));

  const std::vector<MI> unordered{{2}, {0}, {1}, {1}};
  CHECK(validateIndexTree(unordered));
}

TEST_CASE("prefixDegree on the Taylor-Hood BL(BL) set")
{
  const GlobalBasis basis(StructuredGrid(4, 4),
                          taylorHoodSpec(MergingStrategy::BlockedLexicographic,
                                         MergingStrategy::BlockedLexicographic, 3));
  const auto all = basis.allIndices();
  CHECK(prefixDegree(all, MI{}) == 2);
  CHECK(prefixDegree(all, MI{0}) == 3);
  CHECK(prefixDegree(all, MI{1, 0}) == 0);
  CHECK(prefixDegree(all, MI{0, 2}) == 81);
  CHECK_THROWS_AS(prefixDegree(all, MI{2}), PrefixNotFound);
  CHECK_THROWS_AS(prefixDegree(all, MI{1, 0, 0}), PrefixNotFound);
}

TEST_CASE("validateIndexTree agrees with the trie oracle on random sets")
{
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> count(0, 200), digit(0, 5), length(0, 4);
  std::uniform_int_distribution<int> narrow(0, 1);
  std::size_t validSeen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t maxDigit = narrow(rng) ? 1 : 5;
    std::uniform_int_distribution<std::size_t> d(0, maxDigit);
    std::vector<MI> set;
    const std::size_t size = maxDigit == 1 ? count(rng) % 6 : count(rng);
    for (std::size_t n = size; n > 0; --n) {
      MI mi;
      for (std::size_t k = length(rng); k > 0; --k)
        mi.push_back(d(rng));
      set.push_back(mi);
    }
    const testing::PathTrie trie(set);
    const bool expected = trie.isIndexTree();
    validSeen += expected;
    CHECK(validateIndexTree(set) == expected);
  }
  CHECK(validSeen > 50);
}

TEST_CASE("prefix digits of a valid tree are consecutive")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const GlobalBasis basis(StructuredGrid(2, 2), testing::randomSpec(rng, 3));
    const auto all = basis.allIndices();
    const testing::PathTrie trie(all);
    for (const auto& node : trie.allNodes()) {
      const std::size_t n = prefixDegree(all, node);
      CHECK(n == *trie.degree(node));
      std::set<std::size_t> digits;
      for (const auto& mi : all)
        if (mi.size() > node.size() && isPrefix(node, mi))
          digits.insert(mi[node.size()]);
      CHECK(digits.size() == n);
      if (n > 0)
        CHECK(*digits.rbegin() == n - 1);
    }
  }
}
