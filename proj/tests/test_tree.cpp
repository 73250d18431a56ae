#include "berggren/oracle.hpp"
#include "berggren/tree.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace berggren;

TEST(Descend, ChildrenOfRoot) {
  EXPECT_EQ(descend(ppt::root(), letter::A), ppt::make(5, 12, 13));
  EXPECT_EQ(descend(ppt::root(), letter::B), ppt::make(21, 20, 29));
  EXPECT_EQ(descend(ppt::root(), letter::C), ppt::make(15, 8, 17));
}

TEST(Descend, BrokenGeneratorIsReported) {
  generator_set g = generator_set::standard();
  g[letter::A](0, 0) += 1;
  const tree broken(g);
  try {
    broken.descend(ppt::root(), letter::A);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), error_code::invariant_violation);
  }
}

TEST(Parent, Examples) {
  EXPECT_FALSE(parent(ppt::root()));
  auto up = parent(ppt::make(5, 12, 13));
  ASSERT_TRUE(up);
  EXPECT_EQ(up->triple, ppt::root());
  EXPECT_EQ(up->via, letter::A);
  up = parent(ppt::make(15, 8, 17));
  ASSERT_TRUE(up);
  EXPECT_EQ(up->triple, ppt::root());
  EXPECT_EQ(up->via, letter::C);
}

TEST(Paths, Examples) {
  EXPECT_EQ(descend_path(tree_path{}), ppt::root());
  EXPECT_EQ(descend_path(tree_path::parse("AA")), ppt::make(7, 24, 25));
  const tree_path p = path_of(ppt::make(119, 120, 169));
  EXPECT_EQ(p.str(), "BB");
  EXPECT_EQ(descend_path(p), ppt::make(119, 120, 169));
  EXPECT_EQ(path_of(ppt::root()).str(), "");
}

TEST(Paths, ParseRejectsForeignCharacters) {
  EXPECT_THROW(tree_path::parse("ABD"), error);
  EXPECT_THROW(tree_path::parse("a"), error);
  EXPECT_EQ(tree_path::parse("CBA").str(), "CBA");
}

TEST(Generators, Determinants) {
  const auto g = generator_set::standard();
  EXPECT_EQ(g[letter::A].det(), 1);
  EXPECT_EQ(g[letter::B].det(), -1);
  EXPECT_EQ(g[letter::C].det(), 1);
  for (letter l : all_letters) {
    auto inv = g[l].integer_inverse();
    ASSERT_TRUE(inv);
    EXPECT_EQ(*inv * g[l], mat3::identity());
    EXPECT_EQ(g[l] * *inv, mat3::identity());
  }
}

TEST(MatrixPower, Examples) {
  EXPECT_EQ(matrix_power(letter::A, 0), mat3::identity());
  EXPECT_EQ(matrix_power(letter::B, 0), mat3::identity());
  EXPECT_EQ(matrix_power(letter::C, 0), mat3::identity());
  EXPECT_EQ(matrix_power(letter::A, 3), (mat3{{1, -6, 6}, {6, -17, 18}, {6, -18, 19}}));
  EXPECT_EQ(matrix_power(letter::B, 2), (mat3{{9, 8, 12}, {8, 9, 12}, {12, 12, 17}}));
}

TEST(MatrixPower, ClosedFormsMatchRepeatedProduct) {
  const auto g = generator_set::standard();
  for (letter l : all_letters) {
    mat3 power = mat3::identity();
    for (std::uint64_t n = 0; n <= 60; ++n) {
      ASSERT_EQ(matrix_power(l, n), power) << to_char(l) << "^" << n;
      ASSERT_EQ(matrix_power(l, n), oracle::naive_matrix_power(l, n));
      power = power * g[l];
    }
  }
}

TEST(Enumerate, SmallBounds) {
  std::vector<tree_node> nodes;
  for (const auto& n : enumerate_tree(5)) nodes.push_back(n);
  ASSERT_EQ(nodes.size(), 1U);
  EXPECT_EQ(nodes[0].path.str(), "");

  nodes.clear();
  for (const auto& n : enumerate_tree(17)) nodes.push_back(n);
  ASSERT_EQ(nodes.size(), 3U);
  EXPECT_EQ(nodes[1].triple, ppt::make(5, 12, 13));
  EXPECT_EQ(nodes[1].path.str(), "A");
  EXPECT_EQ(nodes[2].triple, ppt::make(15, 8, 17));
  EXPECT_EQ(nodes[2].path.str(), "C");

  EXPECT_EQ(enumerate_tree(4).begin() == std::default_sentinel, true);
}

TEST(Enumerate, BreadthFirstOrder) {
  std::vector<tree_node> nodes;
  for (const auto& n : enumerate_tree(2000)) nodes.push_back(n);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto& a = nodes[i - 1].path.str();
    const auto& b = nodes[i].path.str();
    ASSERT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b)) << a << " then " << b;
  }
}

TEST(Enumerate, ParallelMatchesSequential) {
  std::vector<tree_node> sequential;
  for (const auto& n : enumerate_tree(20000)) sequential.push_back(n);
  for (unsigned workers : {1U, 2U, 5U}) {
    const auto parallel = standard_tree().enumerate_parallel(20000, workers);
    ASSERT_EQ(parallel.size(), sequential.size());
    for (std::size_t i = 0; i < parallel.size(); ++i) {
      ASSERT_EQ(parallel[i].path, sequential[i].path);
      ASSERT_EQ(parallel[i].triple, sequential[i].triple);
    }
  }
}

TEST(Enumerate, CoversEuclidScan) {
  std::set<ppt> seen;
  for (const auto& n : enumerate_tree(100000)) ASSERT_TRUE(seen.insert(n.triple).second);
  const auto scan = oracle::scan_ppt_by_hypotenuse(100000);
  EXPECT_TRUE(std::equal(seen.begin(), seen.end(), scan.begin(), scan.end()));
}

TEST(Tree, ClosureMonotonicityAndUniqueAscent) {
  for (const auto& node : enumerate_tree(20000)) {
    const ppt& t = node.triple;
    std::set<ppt> children;
    for (letter l : all_letters) {
      const ppt child = descend(t, l);
      ASSERT_GT(child.z(), t.z());
      children.insert(child);
      auto up = parent(child);
      ASSERT_TRUE(up);
      ASSERT_EQ(up->triple, t);
      ASSERT_EQ(up->via, l);
    }
    ASSERT_EQ(children.size(), 3U);
  }
}

TEST(Tree, RandomPathsRoundTrip) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> len(0, 25), pick(0, 2);
  for (int i = 0; i < 500; ++i) {
    tree_path p;
    for (int d = len(rng); d > 0; --d) p.push_back(static_cast<letter>(pick(rng)));
    ASSERT_EQ(path_of(descend_path(p)), p) << p.str();
  }
}

TEST(LemmaF1n, Holds) {
  EXPECT_TRUE(lemma_f1n_check(1));
  EXPECT_TRUE(lemma_f1n_check(2));
  for (std::uint64_t n = 1; n <= 500; ++n) ASSERT_TRUE(lemma_f1n_check(n)) << n;
  EXPECT_THROW(lemma_f1n_check(0), error);
}
