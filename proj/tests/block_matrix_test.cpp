#include <gtest/gtest.h>

#include <random>

#include "genealogy/block_matrix.hpp"
#include "test_support.hpp"

namespace genealogy {
namespace {

using testing::as_set;
using testing::by_name;

using Row = std::vector<std::uint8_t>;

TEST(BlockMatrix, ChainSubMatrixA) {
  const auto snap = testing::chain();
  const auto& s = *snap;
  const std::vector<AuthorId> cols{by_name(s, "A1"), by_name(s, "A2"), by_name(s, "A3"),
                                   by_name(s, "A4")};
  const auto bm = build_block_matrix(s, by_name(s, "A"), cols);
  EXPECT_EQ(bm.row(Relation::children), (Row{1, 0, 0, 0}));
  EXPECT_EQ(bm.row(Relation::grandchildren), (Row{0, 1, 0, 0}));
  EXPECT_EQ(bm.row(Relation::parents), (Row{0, 0, 0, 0}));
  EXPECT_EQ(bm.row(Relation::grandparents), (Row{0, 0, 0, 1}));
}

TEST(BlockMatrix, IsolatedAuthorHasEmptyRows) {
  const auto snap = testing::chain();
  const auto bm = build_block_matrix(*snap, by_name(*snap, "A3"));
  ASSERT_EQ(bm.columns.size(), snap->author_count());
  for (const auto& row : bm.rows) EXPECT_EQ(row, Row(snap->author_count(), 0));
}

TEST(BlockMatrix, UnknownIdsRejected) {
  const auto snap = testing::chain();
  EXPECT_THROW(build_block_matrix(*snap, AuthorId(99)), UnknownAuthorError);
  EXPECT_THROW(build_block_matrix(*snap, AuthorId(0), std::vector<AuthorId>{AuthorId(99)}),
               UnknownAuthorError);
  EXPECT_THROW(local_network(*snap, AuthorId(99)), UnknownAuthorError);
}

TEST(LocalNetwork, ChainFixture) {
  const auto snap = testing::chain();
  const auto& s = *snap;
  const auto net = local_network(s, by_name(s, "A"));
  EXPECT_EQ(net.children, std::vector<AuthorId>{by_name(s, "A1")});
  EXPECT_EQ(net.grandchildren, std::vector<AuthorId>{by_name(s, "A2")});
  EXPECT_EQ(net.parents, std::vector<AuthorId>{by_name(s, "P")});
  EXPECT_EQ(net.grandparents, std::vector<AuthorId>{by_name(s, "A4")});
  EXPECT_TRUE(net.siblings.empty());
}

TEST(LocalNetwork, SharedAdvisorMakesSiblings) {
  std::istringstream in("name=T\nname=S1\tadvisors=T\nname=S2\tadvisors=T\n");
  RawCorpus c;
  c.authors = parse_authors(in);
  const auto snap = ingest(c);
  EXPECT_EQ(local_network(*snap, AuthorId(1)).siblings, std::vector<AuthorId>{AuthorId(2)});
  EXPECT_EQ(local_network(*snap, AuthorId(2)).siblings, std::vector<AuthorId>{AuthorId(1)});
}

TEST(LocalNetwork, RootHasNoAncestorsOrSiblings) {
  const auto snap = testing::chain();
  const auto net = local_network(*snap, by_name(*snap, "A4"));
  EXPECT_TRUE(net.parents.empty());
  EXPECT_TRUE(net.grandparents.empty());
  EXPECT_TRUE(net.siblings.empty());
}

TEST(LocalNetwork, DiamondDeduplicatesGrandparent) {
  // G advises P1 and P2, both advise S: G is S's grandparent once.
  GenealogyGraph g;
  std::vector<AuthorRecord> recs(4);
  recs[0].name = "G";
  recs[1].name = "P1";
  recs[2].name = "P2";
  recs[3].name = "S";
  recs[1].advisors[AuthorId(0)] = 0;
  recs[2].advisors[AuthorId(0)] = 0;
  recs[3].advisors = {{AuthorId(1), 0}, {AuthorId(2), 0}};
  g.add_authors(recs);
  const auto snap = Snapshot::build(std::move(g));
  EXPECT_EQ(local_network(*snap, AuthorId(3)).grandparents, std::vector<AuthorId>{AuthorId(0)});
  EXPECT_EQ(local_network(*snap, AuthorId(0)).grandchildren, std::vector<AuthorId>{AuthorId(3)});
  EXPECT_EQ(local_network(*snap, AuthorId(1)).siblings, std::vector<AuthorId>{AuthorId(2)});
}

TEST(BlockMatrix, RandomForestsMatchTraversalOracle) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rg = testing::random_genealogy(rng, 50);
    const auto snap = Snapshot::build(testing::to_graph(rg));
    for (std::uint32_t a = 0; a < rg.n; ++a) {
      const auto oracle = testing::traverse(rg.edges, a);
      const auto bm = build_block_matrix(*snap, AuthorId(a));
      const std::set<std::uint32_t>* expected[] = {&oracle.children, &oracle.grandchildren,
                                                   &oracle.parents, &oracle.grandparents};
      for (std::size_t r = 0; r < kBlockRows; ++r) {
        std::set<std::uint32_t> got;
        for (std::size_t c = 0; c < bm.columns.size(); ++c) {
          ASSERT_LE(bm.rows[r][c], 1);
          if (bm.rows[r][c]) got.insert(bm.columns[c].value);
        }
        ASSERT_EQ(got, *expected[r]) << "trial " << trial << " author " << a << " row " << r;
        ASSERT_FALSE(got.count(a));
      }
      const auto net = local_network(*snap, AuthorId(a));
      ASSERT_EQ(as_set(net.siblings), oracle.siblings);
      ASSERT_EQ(as_set(net.children), oracle.children);
      ASSERT_EQ(as_set(net.grandparents), oracle.grandparents);

      // A grandparent needs a parent path.
      for (auto gp : oracle.grandparents) {
        bool via_parent = false;
        for (auto p : oracle.parents) {
          for (const auto& e : rg.edges) via_parent |= e.advisor.value == gp && e.advisee.value == p;
        }
        ASSERT_TRUE(via_parent);
      }
    }
  }
}

TEST(BlockIndex, TouchedEntriesAreLocal) {
  std::mt19937_64 rng(4);
  const auto rg = testing::random_genealogy(rng, 500);
  const auto snap = Snapshot::build(testing::to_graph(rg));
  for (std::uint32_t a = 0; a < rg.n; ++a) {
    const auto net = local_network(*snap, AuthorId(a));
    EXPECT_EQ(snap->index().touched(AuthorId(a)),
              net.children.size() + net.grandchildren.size() + net.parents.size() +
                  net.grandparents.size() + net.siblings.size());
  }
}

}  // namespace
}  // namespace genealogy
