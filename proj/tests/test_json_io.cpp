#include <gtest/gtest.h>

#include "bdcluster/json_io.hpp"

using namespace bdc;

TEST(ClusterJson, SmallestTriple) {
  Json j = to_json(initial_cluster(make_triple(3, 1, 2)));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 9u);
  const Json& first = j.front();
  EXPECT_EQ(first.at("label"), Json::array({1, 1}));
  EXPECT_TRUE(first.at("frozen").get<bool>());
  EXPECT_EQ(first.at("kind"), "standard");
  int theta = 0;
  for (const auto& item : j) {
    if (item.at("kind") == "theta") {
      ++theta;
      EXPECT_EQ(item.at("label"), Json::array({3, 1}));
      EXPECT_EQ(item.at("polynomial"), "-x[1,2]*x[3,2] + x[1,3]*x[3,1]");
    }
  }
  EXPECT_EQ(theta, 1);
}

TEST(ClusterJson, RoundTrip) {
  auto cluster = initial_cluster(make_triple(4, 1, 3));
  auto back = cluster_from_json(Json::parse(to_json(cluster).dump()));
  ASSERT_EQ(back.size(), cluster.size());
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    EXPECT_EQ(back[i].label, cluster[i].label);
    EXPECT_EQ(back[i].frozen, cluster[i].frozen);
    EXPECT_EQ(back[i].kind, cluster[i].kind);
    EXPECT_EQ(back[i].value, cluster[i].value);
  }
}

TEST(SeedJson, MirrorsExchangeMatrix) {
  Seed s = initial_seed(make_triple(3, 1, 2));
  Json j = to_json(s);
  EXPECT_EQ(j.at("cluster").size(), s.cluster.size());
  EXPECT_EQ(j.at("exchange").at("rows").size(), static_cast<std::size_t>(s.exchange.num_mutable()));
  EXPECT_EQ(j.at("exchange").at("entries").get<std::vector<std::vector<int>>>(), s.exchange.b);
}

TEST(ReportJson, Schema) {
  VerificationReport r = check_stable_count(make_fixture(make_triple(4, 1, 2), Fault::ExtraFrozen));
  Json j = to_json(r);
  for (const char* key : {"check", "n", "alpha", "beta", "status", "witnesses", "seconds"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.at("status"), "fail");
  EXPECT_EQ(j.at("check"), "stable");
  ASSERT_EQ(j.at("witnesses").size(), 1u);
  EXPECT_EQ(j.at("witnesses")[0].at("expected"), "4");
  EXPECT_EQ(j.at("details").at("fault"), "extra-frozen");
}

TEST(QuiverJson, Counts) {
  Json j = to_json(bd_quiver(make_triple(5, 1, 2)));
  EXPECT_EQ(j.at("nodes").size(), 25u);
  for (const auto& arc : j.at("arcs")) EXPECT_EQ(arc.at("weight"), 1);
}

TEST(MatrixJson, RationalStrings) {
  QMatrix m(1, 2);
  m.at(0, 0) = Rational(-3, 4);
  EXPECT_EQ(to_json(m), Json::parse(R"([["-3/4","0"]])"));
}
