#include "ehrkit/verify.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

namespace ehrkit {
namespace {

TEST(Verifier, AllChecksPassUpToFive) {
    VerifyConfig config;
    config.max_n = 5;
    config.counting.jobs = 2;
    std::size_t streamed = 0;
    const auto results = Verifier(config).run_all([&](const CheckOutcome&) { ++streamed; });
    EXPECT_EQ(results.size(), 20U);
    EXPECT_EQ(streamed, results.size());
    std::set<std::string> names;
    for (const auto& c : results) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.counterexample;
        EXPECT_GT(c.instances, 0U) << c.name;
        names.insert(c.name);
    }
    EXPECT_EQ(names.size(), results.size());
}

TEST(Verifier, BudgetIsEnforced) {
    VerifyConfig config;
    config.max_n = 6;
    config.counting.budget = 500;
    EXPECT_THROW(Verifier(config).run_all(), budget_exceeded);
}

TEST(Verifier, PrintOutcomeFormat) {
    std::ostringstream out;
    print_outcome(out, {"demo", "n <= 3", 4, false, "(1,2)", 0});
    EXPECT_EQ(out.str(), "FAIL  demo  [n <= 3, 4 instances]\n      counterexample: (1,2)\n");
}

} // namespace
} // namespace ehrkit
