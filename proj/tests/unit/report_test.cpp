#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "polyrep/modsym.hpp"
#include "polyrep/report.hpp"

using namespace polyrep;

TEST(Report, JsonRoundTrip) {
  for (int p : {2, 3})
    for (int n = 1; n <= 6; ++n) {
      const VerificationReport r = verify_theorem1(n, p);
      const VerificationReport back = report_from_json(report_to_json(r));
      ASSERT_EQ(back, r);
      ASSERT_EQ(report_to_json(back), report_to_json(r));
    }
}

TEST(Report, BigIntegersSurviveAsStrings) {
  VerificationReport r;
  r.subject = "big";
  r.generator_hnf = IntMatrix{{Integer("123456789012345678901234567890"), -1}};
  r.lattice_hnf = r.generator_hnf;
  r.verdict = true;
  const std::string text = report_to_json(r);
  EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
  EXPECT_EQ(report_from_json(text), r);
}

TEST(Report, SchemaFields) {
  const auto j = nlohmann::json::parse(report_to_json(verify_theorem1(3, 2)));
  for (const char* key : {"subject", "degree", "prime", "lattice_rank", "expected_rank", "generator_count",
                          "generator_hnf", "lattice_hnf", "vanishing_ok", "verdict", "seconds"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["lattice_rank"], 2);
  EXPECT_TRUE(j["verdict"].get<bool>());
}

TEST(Report, DigestIsStable) {
  const IntMatrix m{{1, -1, 0}, {0, 0, 1}};
  EXPECT_EQ(digest(m), digest(IntMatrix{{1, -1, 0}, {0, 0, 1}}));
  EXPECT_NE(digest(m), digest(IntMatrix{{1, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(digest(m).size(), 16u);
}

TEST(Report, RejectsMalformedJson) {
  EXPECT_ANY_THROW(report_from_json("{"));
  EXPECT_ANY_THROW(report_from_json("{\"subject\": 3}"));
}
