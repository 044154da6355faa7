#include "taut/analysis.hpp"

#include <doctest.h>

using namespace taut;

TEST_CASE("n = 1")
{
    auto r = run_be({1, 1, 0});
    CHECK(format_word(r.macros.body("d")) == "a^3 b a^3 b a^3 b");
    CHECK(format_word(r.analysis.inverse, &r.macros) == "a^3 b a^3 b a^3 b c^-1 b a^-1");
    CHECK(r.analysis.sequence.length() == 4);
    CHECK(r.analysis.sequence.sign == PairSign::Negative);
    CHECK(r.analysis.sinks.empty());
    CHECK(r.analysis.audit.ok());
    CHECK(r.analysis.interval.lower == Rational(-1, 4));
    CHECK_FALSE(r.verdict.realizable());
}

TEST_CASE("n = 2")
{
    auto r = run_be({2, 3, 0});
    CHECK(r.analysis.sequence.length() == 8);
    CHECK(r.analysis.interval.to_string() == "(-1/8, inf)");
}

TEST_CASE("boundary twists do not change the result")
{
    auto plain = run_be({2, 1, 0});
    auto twisted = run_be({2, 1, 7});
    CHECK(plain.analysis.inverse == twisted.analysis.inverse);
    CHECK(plain.analysis.sequence.length() == twisted.analysis.sequence.length());
}

TEST_CASE("the meridional multislope is always rejected")
{
    for (int n = 1; n <= 4; ++n)
        for (int k1 : {1, 2, 4 * n, 4 * n + 1, 50}) {
            auto r = run_be({n, k1, 0});
            CAPTURE(n);
            CAPTURE(k1);
            CHECK_FALSE(r.verdict.realizable());
            auto off = r.verdict.offending();
            CHECK(std::find(off.begin(), off.end(), 2) != off.end());
            CHECK((std::find(off.begin(), off.end(), 1) != off.end()) == (k1 <= 4 * n));
        }
}

TEST_CASE("the report is reproducible")
{
    CHECK(run_be({3, 2, 1}).to_text() == run_be({3, 2, 1}).to_text());
    auto text = run_be({1, 1, 0}).to_text();
    CHECK(text.find("inverse: a^3 b a^3 b a^3 b c^-1 b a^-1\n") != std::string::npos);
    CHECK(text.find("sequence.length: 4\n") != std::string::npos);
    CHECK(text.find("interval.1: (-1/4, inf)\n") != std::string::npos);
    CHECK(text.find("sink-disks: none\n") != std::string::npos);
    CHECK_THROWS_AS(run_be({0, 1, 0}), std::invalid_argument);
}
