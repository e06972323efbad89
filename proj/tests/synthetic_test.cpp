#include <gtest/gtest.h>

#include "genealogy/synthetic.hpp"
#include "test_support.hpp"

namespace genealogy {
namespace {

double cartel_recall(const Snapshot& s, const SyntheticCorpus& syn, const Threshold& t) {
  const auto reports = detect_communities(s, s.matrix(), t);
  std::size_t members = 0;
  std::size_t flagged = 0;
  for (const auto& cartel : syn.cartels) {
    for (const auto& key : cartel) {
      const auto id = s.graph().find_by_key(key);
      if (!id) continue;
      ++members;
      if (reports[id->index()].verdict == Verdict::LineageDependent) ++flagged;
    }
  }
  return members ? static_cast<double>(flagged) / static_cast<double>(members) : 0.0;
}

TEST(Synthetic, SameSeedSameCorpus) {
  SyntheticParams p;
  p.authors = 200;
  p.cartels = 3;
  p.seed = 9;
  const auto a = generate_synthetic(p);
  const auto b = generate_synthetic(p);
  EXPECT_EQ(a.cartels, b.cartels);
  EXPECT_EQ(encode_snapshot(ingest(a.corpus)->graph()), encode_snapshot(ingest(b.corpus)->graph()));
  p.seed = 10;
  EXPECT_NE(encode_snapshot(ingest(generate_synthetic(p).corpus)->graph()),
            encode_snapshot(ingest(a.corpus)->graph()));
}

TEST(Synthetic, TinyCorpusWithoutCartels) {
  SyntheticParams p;
  p.authors = 4;
  const auto s = generate_synthetic(p);
  EXPECT_TRUE(s.cartels.empty());
  const auto snap = ingest(s.corpus);
  EXPECT_EQ(snap->author_count(), 4u);
}

TEST(Synthetic, CartelsAreLineages) {
  SyntheticParams p;
  p.authors = 500;
  p.cartels = 5;
  const auto s = generate_synthetic(p);
  const auto snap = ingest(s.corpus);
  EXPECT_EQ(s.cartels.size(), 5u);
  for (const auto& cartel : s.cartels) {
    ASSERT_GE(cartel.size(), 2u);
    const auto head = *snap->graph().find_by_key(cartel[0]);
    for (std::size_t i = 1; i < cartel.size(); ++i) {
      EXPECT_TRUE(snap->author(head).advisees.contains(*snap->graph().find_by_key(cartel[i])));
    }
  }
}

TEST(Synthetic, ComputedThresholdRecoversPlantedCartels) {
  SyntheticParams p;
  p.authors = 1000;
  p.cartels = 10;
  const auto syn = generate_synthetic(p);
  const auto snap = ingest(syn.corpus);
  const auto t = compute_threshold(std::span<const std::optional<double>>(corpus_ratios(*snap)));
  const double recall = cartel_recall(*snap, syn, t);
  const double strict = cartel_recall(*snap, syn, Threshold{t.lower, 1.0});
  EXPECT_GE(recall, strict);
  EXPECT_GT(recall, 0.5);
}

}  // namespace
}  // namespace genealogy
