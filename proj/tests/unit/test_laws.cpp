#include <gtest/gtest.h>

#include "symcalc/laws.hpp"

using namespace symcalc;

TEST(Laws, LawSuitePasses) {
  const SuiteReport r = run_law_suite(7, 15);
  for (const auto& law : r.laws) EXPECT_TRUE(law.ok()) << law.name << ": " << law.message;
}

TEST(Laws, LaplaceSuitePasses) {
  const SuiteReport r = run_laplace_suite(7, 15);
  for (const auto& law : r.laws) EXPECT_TRUE(law.ok()) << law.name << ": " << law.message;
}

TEST(Laws, GevreySuitePasses) {
  const SuiteReport r = run_gevrey_suite(7, 15);
  for (const auto& law : r.laws) EXPECT_TRUE(law.ok()) << law.name << ": " << law.message;
}

TEST(Laws, OtherSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EXPECT_TRUE(run_law_suite(seed, 8).ok());
    EXPECT_TRUE(run_laplace_suite(seed, 8).ok());
  }
}

TEST(Laws, FailuresAreReported) {
  LawResult r{"x", 3, 2, "case 1: broken"};
  EXPECT_FALSE(r.ok());
  SuiteReport s{"s", 0, {r}};
  EXPECT_FALSE(s.ok());
  EXPECT_FALSE(SuiteReport{}.ok());
}
