#include <gtest/gtest.h>

#include <braidthom/errors.hpp>
#include <braidthom/tree.hpp>

using braidthom::DomainError;
using braidthom::Tree;

TEST(Tree, EncodingValidation) {
  EXPECT_TRUE(Tree::is_valid_encoding("0"));
  EXPECT_TRUE(Tree::is_valid_encoding("1100100"));
  EXPECT_FALSE(Tree::is_valid_encoding(""));
  EXPECT_FALSE(Tree::is_valid_encoding("10"));
  EXPECT_FALSE(Tree::is_valid_encoding("1000"));
  EXPECT_FALSE(Tree::is_valid_encoding("1x0"));
  EXPECT_THROW(Tree("110"), DomainError);
  EXPECT_EQ(Tree().bits(), "0");
  EXPECT_TRUE(Tree().is_trivial());
}

TEST(Tree, AddCaret) {
  EXPECT_EQ(Tree("0").add_caret(1).bits(), "100");
  EXPECT_EQ(Tree("100").add_caret(1).bits(), "11000");
  EXPECT_EQ(Tree("100").add_caret(2).bits(), "10100");
  EXPECT_THROW(Tree("100").add_caret(0), DomainError);
  EXPECT_THROW(Tree("100").add_caret(3), DomainError);
}

TEST(Tree, RemoveCaretPair) {
  EXPECT_EQ(Tree("100").remove_caret_pair(1).bits(), "0");
  EXPECT_EQ(Tree("11000").remove_caret_pair(1).bits(), "100");
  EXPECT_EQ(Tree("10100").remove_caret_pair(2).bits(), "100");
  // leaves 2, 3 of T1 are cousins, not siblings
  EXPECT_THROW(Tree("11000").remove_caret_pair(2), DomainError);
  EXPECT_THROW(Tree("0").remove_caret_pair(1), DomainError);
}

TEST(Tree, CaretPairs) {
  EXPECT_TRUE(Tree("0").caret_pairs().empty());
  EXPECT_EQ(Tree("100").caret_pairs(), std::vector<int>{1});
  EXPECT_EQ(Tree("1100100").caret_pairs(), (std::vector<int>{1, 3}));
  EXPECT_TRUE(Tree("1100100").is_caret_pair(3));
  EXPECT_FALSE(Tree("1100100").is_caret_pair(2));
}

TEST(Tree, RightDepth) {
  EXPECT_EQ(Tree("0").right_depth(), 0);
  EXPECT_EQ(Tree("11000").right_depth(), 1);
  EXPECT_EQ(Tree("10100").right_depth(), 2);
  EXPECT_EQ(Tree("1010100").right_depth(), 3);
}

TEST(Tree, CommonRefinement) {
  EXPECT_EQ(common_refinement(Tree("100"), Tree("0")).bits(), "100");
  EXPECT_EQ(common_refinement(Tree("0"), Tree("100")).bits(), "100");
  EXPECT_EQ(common_refinement(Tree("11000"), Tree("10100")).bits(), "1100100");
  for (const char* t : {"0", "100", "11000", "1101000", "1011000"}) {
    EXPECT_EQ(common_refinement(Tree(t), Tree(t)).bits(), t);
  }
}

TEST(Tree, Subtrees) {
  const Tree t("1101000");
  EXPECT_EQ(t.left_subtree().bits(), "10100");
  EXPECT_EQ(t.right_subtree().bits(), "0");
  EXPECT_EQ(Tree::join(t.left_subtree(), t.right_subtree()), t);
  EXPECT_EQ(t.leaf_count(), 4);
}

TEST(Tree, FirstLeafToRefine) {
  const Tree a("100");
  const Tree target("1100100");
  EXPECT_EQ(target.first_leaf_to_refine(target), 0);
  Tree t = a;
  for (int leaf = t.first_leaf_to_refine(target); leaf != 0; leaf = t.first_leaf_to_refine(target)) {
    t = t.add_caret(leaf);
  }
  EXPECT_EQ(t, target);
}
