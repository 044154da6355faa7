#include "taut/sequence.hpp"

#include <doctest.h>

#include <random>

using namespace taut;

namespace {

int count_beta_twists(const TwistWord& w, int sign)
{
    int n = 0;
    for (const auto& s : w.syllables) {
        const auto* g = std::get_if<Generator>(&s.symbol);
        if (g && g->kind == GeneratorKind::Beta && (s.exponent > 0) == (sign > 0))
            n += static_cast<int>(s.exponent > 0 ? s.exponent : -s.exponent);
    }
    return n;
}

}  // namespace

TEST_CASE("uniformize keeps the majority and triples the minority")
{
    using enum PairSign;
    std::vector<PairSign> raw{Negative, Positive, Negative};
    auto seq = uniformize(std::span<const PairSign>(raw));
    CHECK(seq.sign == Negative);
    CHECK(seq.kept == 2);
    CHECK(seq.substituted == 1);
    CHECK(seq.length() == 5);
    CHECK(seq.steps[1].origin == StepOrigin::Substitution);
    CHECK(seq.steps[1].raw_index == 1);
    CHECK(seq.steps[3].substitution_part == 2);
    for (const auto& s : seq.steps)
        CHECK(s.sign == Negative);
}

TEST_CASE("ties go to negative")
{
    using enum PairSign;
    std::vector<PairSign> raw{Positive, Negative};
    CHECK(uniformize(std::span<const PairSign>(raw)).sign == Negative);
    std::vector<PairSign> pos{Positive, Positive, Negative};
    CHECK(uniformize(std::span<const PairSign>(pos)).sign == Positive);
}

TEST_CASE("empty input is an error")
{
    std::vector<PairSign> raw;
    CHECK_THROWS_AS(uniformize(std::span<const PairSign>(raw)), std::invalid_argument);
}

TEST_CASE("a word without beta gets the seed")
{
    GervaisAlphabet alphabet({1, 2});
    auto seq = synthesize(parse_word("eta1 eta2^-3", alphabet), {1, 2});
    CHECK(seq.seeded);
    CHECK(seq.length() == 4);
    CHECK(seq.sign == PairSign::Negative);
    auto empty = synthesize(TwistWord{}, {1, 2});
    CHECK(empty.length() == 4);
}

TEST_CASE("synthesis rejects macros and boundary twists")
{
    GervaisAlphabet alphabet({1, 2});
    CHECK_THROWS_AS(synthesize(parse_word("delta1 beta", alphabet), {1, 2}), ParseError);
    TwistWord with_macro{{{MacroRef{"m"}, 1}}};
    CHECK_THROWS_AS(synthesize(with_macro, {1, 2}), ParseError);
    CHECK_THROWS_AS(synthesize(parse_word("beta", alphabet), {0, 2}), std::invalid_argument);
}

TEST_CASE("sequence length follows the beta counts")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        SurfaceSpec spec{1 + t % 3, 2 + (t / 3) % 3};
        GervaisAlphabet alphabet(spec);
        std::vector<Generator> letters;
        for (const auto& g : alphabet.generators())
            if (g.kind != GeneratorKind::Delta)
                letters.push_back(g);
        std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
        std::uniform_int_distribution<int> exp(-3, 3);
        TwistWord w;
        for (int i = 0; i < 8; ++i) {
            int e = 0;
            while (e == 0)
                e = exp(rng);
            w.syllables.push_back({letters[pick(rng)], e});
        }
        auto seq = synthesize(w, spec);
        const int neg = count_beta_twists(w, 1);
        const int pos = count_beta_twists(w, -1);
        CAPTURE(format_word(w));
        if (neg + pos == 0) {
            CHECK(seq.length() == 4);
            continue;
        }
        const int majority = std::max(neg, pos);
        const int minority = std::min(neg, pos);
        CHECK(seq.length() == majority + 3 * minority);
        CHECK(seq.length() == seq.kept + 3 * seq.substituted);
        CHECK(seq.sign == (pos > neg ? PairSign::Positive : PairSign::Negative));
    }
}
