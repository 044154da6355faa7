#pragma once

#include "taut/surface_model.hpp"
#include "taut/twist_word.hpp"

#include <span>
#include <string>
#include <vector>

namespace taut {

enum class StepOrigin { WordLetter, Substitution, Seed };
std::string to_string(StepOrigin origin);

/// One good pair of the raw sequence before uniformization.
struct RawStep {
    PairSign sign = PairSign::Negative;
    StepOrigin origin = StepOrigin::WordLetter;
    /// Syllable of the word, and which single twist inside its exponent.
    int syllable = -1;
    int twist = -1;
};

struct SequenceStep {
    PairSign sign = PairSign::Negative;
    StepOrigin origin = StepOrigin::WordLetter;
    /// Index of the raw step this one came from.
    int raw_index = 0;
    /// 0..2 for the three steps replacing a minority step, else -1.
    int substitution_part = -1;
    int syllable = -1;
    int twist = -1;
};

/// A uniformly oriented good sequence of parallel tuples.
struct GoodSequence {
    SurfaceSpec spec;
    PairSign sign = PairSign::Negative;
    std::vector<SequenceStep> steps;
    int kept = 0;
    int substituted = 0;
    /// The word had no twist about beta.
    bool seeded = false;

    int length() const { return static_cast<int>(steps.size()); }
};

/// Replaces every minority-sign step by three majority-sign steps
/// ((a), (-b), (-a), (b)). The majority sign wins; a tie goes to negative.
/// Throws std::invalid_argument on an empty list.
GoodSequence uniformize(std::span<const RawStep> raw, SurfaceSpec spec = {});
GoodSequence uniformize(std::span<const PairSign> raw, SurfaceSpec spec = {});

/// Builds the good sequence for a word over the alphabet of `spec` (macros
/// expanded, boundary twists dropped). Twists about beta become steps; all
/// other letters fix the tuple. A word with no beta gets the steps of
/// beta beta^-1, which uniformize to length 4.
GoodSequence synthesize(const TwistWord& w, SurfaceSpec spec);

}  // namespace taut
