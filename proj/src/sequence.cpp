#include "taut/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace taut {

std::string to_string(StepOrigin origin)
{
    switch (origin) {
    case StepOrigin::WordLetter:
        return "word";
    case StepOrigin::Substitution:
        return "substitution";
    case StepOrigin::Seed:
        return "seed";
    }
    return "?";
}

GoodSequence uniformize(std::span<const RawStep> raw, SurfaceSpec spec)
{
    if (raw.empty())
        throw std::invalid_argument("cannot uniformize an empty sequence");
    const auto positives = std::count_if(raw.begin(), raw.end(),
                                         [](const RawStep& s) { return s.sign == PairSign::Positive; });
    const auto negatives = static_cast<std::ptrdiff_t>(raw.size()) - positives;
    const PairSign majority = positives > negatives ? PairSign::Positive : PairSign::Negative;

    GoodSequence seq{spec, majority, {}, 0, 0};
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
        const auto& step = raw[i];
        if (step.sign == majority) {
            seq.steps.push_back({majority, step.origin, i, -1, step.syllable, step.twist});
            ++seq.kept;
            continue;
        }
        for (int part = 0; part < 3; ++part)
            seq.steps.push_back({majority, StepOrigin::Substitution, i, part, step.syllable, step.twist});
        ++seq.substituted;
    }
    return seq;
}

GoodSequence uniformize(std::span<const PairSign> raw, SurfaceSpec spec)
{
    std::vector<RawStep> steps;
    for (PairSign s : raw)
        steps.push_back({s, StepOrigin::WordLetter, -1, -1});
    return uniformize(std::span<const RawStep>(steps), spec);
}

GoodSequence synthesize(const TwistWord& w, SurfaceSpec spec)
{
    spec.validate();
    check_letters(w, GervaisAlphabet(spec));
    // Validates the word as well: macros and boundary twists are rejected.
    const auto tags = classify_letters(w);

    std::vector<RawStep> raw;
    std::size_t position = 0;
    for (int s = 0; s < static_cast<int>(w.syllables.size()); ++s) {
        const long long count = w.syllables[s].exponent < 0 ? -w.syllables[s].exponent
                                                            : w.syllables[s].exponent;
        for (int t = 0; t < count; ++t, ++position) {
            if (tags[position] == StepTag::Disjoint)
                continue;
            PairSign sign = tags[position] == StepTag::BetaNegative ? PairSign::Negative : PairSign::Positive;
            raw.push_back({sign, StepOrigin::WordLetter, s, t});
        }
    }
    const bool seeded = raw.empty();
    if (seeded) {
        raw.push_back({PairSign::Negative, StepOrigin::Seed, -1, 0});
        raw.push_back({PairSign::Positive, StepOrigin::Seed, -1, 1});
    }
    auto seq = uniformize(std::span<const RawStep>(raw), spec);
    seq.seeded = seeded;
    return seq;
}

}  // namespace taut
