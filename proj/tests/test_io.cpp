#include <gtest/gtest.h>

#include "twobridge/io.hpp"

using namespace twobridge;
using nlohmann::json;

TEST(Json, KnotClass) {
  const auto j = io::to_json(knot_class(Word("101")));
  EXPECT_EQ(j["canonical"], "010");
  EXPECT_EQ(j["ell0"], 3);
  EXPECT_EQ(j["ell1"], 4);
  EXPECT_EQ(j["r"], 2);
  EXPECT_EQ(j["crossing_number"], 3);
  EXPECT_EQ(j["is_unknot"], false);
  EXPECT_EQ(io::to_json(unknot_class())["canonical"], "");
}

TEST(Json, Trace) {
  const auto trace = reconstruct(Word("101"), 1, LocationSet({2}));
  const auto j = io::to_json(trace);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), trace.steps.size());
  for (const auto& step : j) {
    EXPECT_TRUE(step.contains("i"));
    EXPECT_TRUE(step.contains("in_L"));
    EXPECT_TRUE(step.contains("letter"));
    EXPECT_TRUE(step["stack"].is_string());
  }
  EXPECT_EQ(io::to_json(LocationSet({1, 4})), json::array({1, 4}));
}

TEST(Json, CrossingPmf) {
  const auto j = io::to_json(crossing_pmf(4));
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["unknot"], "12/16");
  EXPECT_EQ(j["pmf"]["3"], "2/16");
  EXPECT_EQ(j["pmf"]["4"], "2/16");
}

TEST(Json, ExactDistMatchesPmfSchema) {
  const auto dist = oracle::exact_distribution(6);
  const auto j = io::to_json(dist);
  const auto p = io::to_json(crossing_pmf(6));
  EXPECT_EQ(j["mode"], "mirror-identified");
  EXPECT_EQ(j["n"], p["n"]);
  EXPECT_EQ(j["unknot"], p["unknot"]);
  for (const auto& [c, text] : p["pmf"].items()) EXPECT_EQ(j["pmf"].value(c, std::string()), text) << c;
  EXPECT_TRUE(j["knots"].contains("unknot"));
  EXPECT_TRUE(j["knots"].contains("010"));
}

TEST(Json, SampleReport) {
  const auto r = sample_pmf(3, 100, 7);
  const auto j = io::to_json(r);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["count"], 100);
  EXPECT_EQ(j["workers"], 1);
  EXPECT_TRUE(j.contains("tv_distance_to_exact"));
  const std::string unknot = j["unknot"];
  EXPECT_EQ(unknot.substr(unknot.find('/')), "/100");
}

TEST(Csv, CrossingPmf) {
  const auto csv = io::to_csv(crossing_pmf(3));
  EXPECT_EQ(csv, "c,numerator,denominator,float\n0,6,8,0.75\n3,2,8,0.25\n");
}

TEST(Csv, ExactDistAgreesWithPmf) {
  EXPECT_EQ(io::to_csv(oracle::exact_distribution(3)), io::to_csv(crossing_pmf(3)));
}

TEST(Csv, SampleReport) {
  const auto csv = io::to_csv(sample_pmf(3, 4, 1));
  EXPECT_EQ(csv.rfind("c,numerator,denominator,float\n", 0), 0u);
  EXPECT_NE(csv.find(",4,"), std::string::npos);
}
