#include <gtest/gtest.h>

#include <set>

#include "zhdd/verifier.hpp"

using namespace zhdd;

namespace {

const Claim& find_claim(const std::vector<Claim>& suite, const std::string& name) {
  for (const Claim& c : suite) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no claim " + name);
}

}  // namespace

TEST(Verifier, SuiteIsLargeAndNamesAreUnique) {
  const auto suite = builtin_suite();
  EXPECT_GE(suite.size(), 25U);
  std::set<std::string> names;
  for (const Claim& c : suite) EXPECT_TRUE(names.insert(c.name).second) << c.name;
  for (const char* required : {"snake", "scalar-product", "ket-0-monoid", "gadget-sugar"}) {
    EXPECT_TRUE(names.count(required)) << required;
  }
}

TEST(Verifier, MonoidUnitPasses) {
  const ClaimReport r = verify_claim(find_claim(builtin_suite(), "ket-0-monoid"), 5, {});
  EXPECT_EQ(r.status, ClaimStatus::Pass);
  EXPECT_EQ(r.samples, 5U);
}

TEST(Verifier, GadgetMatrixPasses) {
  EXPECT_EQ(verify_claim(find_claim(builtin_suite(), "gadget-sugar"), 3, {}).status, ClaimStatus::Pass);
}

TEST(Verifier, NegativeControlsFail) {
  for (const Claim& c : negative_controls()) {
    const ClaimReport r = verify_claim(c, 5, {});
    EXPECT_EQ(r.status, ClaimStatus::Fail) << c.name;
    EXPECT_GT(r.max_deviation, 1e-3) << c.name;
  }
}

TEST(Verifier, SkippedClaimsCarryReasons) {
  std::size_t skipped = 0;
  for (const Claim& c : builtin_suite()) {
    if (c.skip_reason.empty()) continue;
    ++skipped;
    const ClaimReport r = verify_claim(c, 5, {});
    EXPECT_EQ(r.status, ClaimStatus::Skipped);
    EXPECT_FALSE(r.detail.empty());
  }
  EXPECT_GT(skipped, 0U);
}

TEST(Verifier, ArityMismatchIsMalformed) {
  Claim c;
  c.name = "broken";
  c.build = [](const ClaimParams&) {
    return std::pair{make_term(Generator::z_spider(1, 1)), make_term(Generator::z_spider(0, 1))};
  };
  EXPECT_EQ(verify_claim(c, 2, {}).status, ClaimStatus::Malformed);
}

TEST(Verifier, ParametricClaimsCoverArities) {
  const ClaimReport r = verify_claim(find_claim(builtin_suite(), "zs"), 2, {});
  EXPECT_EQ(r.status, ClaimStatus::Pass);
  EXPECT_EQ(r.samples, 2U * 16U);
}

TEST(Verifier, ReportTable) {
  const std::string table = format_reports({verify_claim(find_claim(builtin_suite(), "hopf"), 1, {})});
  EXPECT_NE(table.find("hopf"), std::string::npos);
  EXPECT_NE(table.find("pass"), std::string::npos);
}
