#include "oracles.hpp"

#include "taut/slope.hpp"

#include <doctest.h>

#include <random>

using namespace taut;

namespace {

Rational q(long long a, long long b = 1) { return Rational(a, b); }

}  // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-4") == q(-4));
    CHECK(parse_rational(" -2/4 ") == q(-1, 2));
    CHECK_THROWS_AS(parse_rational("2/-4"), std::invalid_argument);
    CHECK(make_rational(3, -6) == q(-1, 2));
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(format_rational(q(-1, 8)) == "-1/8");
    CHECK(format_rational(q(3)) == "3");
}

TEST_CASE("slope parsing")
{
    CHECK(Slope::parse("inf").is_infinite());
    CHECK(Slope::parse("infinity").is_infinite());
    CHECK(Slope::parse("-1/4") == Slope(q(-1, 4)));
    CHECK(Slope::infinity().to_string() == "inf");
    CHECK_THROWS(Slope::infinity().value());
    auto ms = parse_multislope("0, -1/8,inf");
    REQUIRE(ms.size() == 3);
    CHECK(ms[2].is_infinite());
}

TEST_CASE("slope of a measured track")
{
    CHECK(slope_of_measure(4, 1, 1) == Slope(q(0)));
    CHECK(slope_of_measure(4, 5, 1) == Slope(q(1, 2)));
    CHECK(slope_of_measure(4, q(1, 2), 2) == Slope(q(-1, 8)));
    CHECK_THROWS_AS(slope_of_measure(0, 1, 1), DomainError);
    CHECK_THROWS_AS(slope_of_measure(4, 0, 1), DomainError);
    CHECK_THROWS_AS(slope_of_measure(4, 1, -1), DomainError);
}

TEST_CASE("realizable intervals")
{
    CHECK(realizable_interval(4).lower == q(-1, 4));
    CHECK(realizable_interval(1).lower == q(-1));
    CHECK(realizable_interval(8).to_string() == "(-1/8, inf)");
    auto iv = realizable_interval(4);
    CHECK_FALSE(iv.contains(Slope(q(-1, 4))));
    CHECK(iv.contains(Slope(q(-1, 5))));
    CHECK_FALSE(iv.contains(Slope::infinity()));
    CHECK_THROWS_AS(realizable_interval(0), DomainError);
}

TEST_CASE("witness weights")
{
    auto w = witness_weights(4, Slope(q(0)));
    CHECK(w.x == q(1));
    CHECK(w.y == q(1));
    auto v = witness_weights(4, Slope(q(-1, 8)));
    CHECK(v.x == q(1, 2));
    CHECK(v.y == q(2));
    CHECK_THROWS_AS(witness_weights(4, Slope(q(-1, 4))), DomainError);
    CHECK_THROWS_AS(witness_weights(4, Slope::infinity()), DomainError);
    try {
        witness_weights(4, Slope(q(-1)));
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("(-1/4, inf)") != std::string::npos);
    }
}

TEST_CASE("witness round trip on random slopes")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 997);
    int tested = 0;
    for (int n : {1, 4, 8, 40}) {
        for (int t = 0; t < 300; ++t) {
            Rational m(num(rng), den(rng));
            if (m <= Rational(-1, n))
                continue;
            auto w = witness_weights(n, Slope(m));
            CHECK(w.x > 0);
            CHECK(w.y > 0);
            CHECK(slope_of_measure(n, w.x, w.y) == Slope(m));
            // Independent evaluation of the slope formula.
            CHECK((w.x - w.y) / (n * (1 + w.y)) == m);
            ++tested;
        }
    }
    CHECK(tested > 500);
}

TEST_CASE("change of coordinates")
{
    CHECK(change_coords(Slope(q(0)), 7) == Slope(q(0)));
    CHECK(change_coords(Slope::infinity(), 3) == Slope(q(1, 3)));
    CHECK(change_coords(Slope::infinity(), 0).is_infinite());
    CHECK(change_coords(Slope(q(-1, 2)), 2).is_infinite());
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 40);
    std::uniform_int_distribution<long long> off(-6, 6);
    for (int t = 0; t < 500; ++t) {
        Slope s = t % 17 == 0 ? Slope::infinity() : Slope(Rational(num(rng), den(rng)));
        long long c = off(rng);
        CHECK(change_coords(s, c) == oracle::change_basis(s, c));
        // Offsets compose additively.
        CHECK(change_coords(change_coords(s, c), 2) == change_coords(s, c + 2));
    }
}

TEST_CASE("multislope queries")
{
    auto ok = multislope_query(4, {Slope(q(0)), Slope(q(0))});
    CHECK(ok.realizable());
    CHECK(ok.offending().empty());
    auto mixed = multislope_query(4, {Slope(q(1, 3)), Slope(q(-1, 5))}, 2);
    REQUIRE(mixed.realizable());
    for (const auto& c : mixed.components)
        CHECK(slope_of_measure(4, c.witness->x, c.witness->y) == c.slope);
    for (int np = 1; np <= 5; ++np)
        for (int k1 = 1; k1 <= 20; ++k1) {
            auto v = multislope_query(4 * np, {Slope(q(-1, k1)), Slope(q(-1, np))});
            CHECK_FALSE(v.realizable());
            auto off = v.offending();
            CHECK(std::find(off.begin(), off.end(), 2) != off.end());
        }
    auto edge = multislope_query(4, {Slope(q(-1, 4)), Slope(q(0))});
    CHECK(edge.offending() == std::vector<int>{1});
    CHECK_THROWS_AS(multislope_query(4, {Slope(q(0))}, 2), DomainError);
}
