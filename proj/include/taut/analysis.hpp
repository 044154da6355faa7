#pragma once

#include "taut/branched_surface.hpp"
#include "taut/slope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taut {

/// Everything the pipeline derives from a monodromy word.
struct AnalysisReport {
    SurfaceSpec spec;
    std::string word_text;
    /// Macros expanded, reduced, boundary twists dropped.
    TwistWord expanded;
    /// Inverse of `expanded`; the sequence is read off this word.
    TwistWord inverse;
    GoodSequence sequence;
    BranchedComplex complex;
    std::vector<SinkFinding> sinks;
    AuditReport audit;
    SlopeInterval interval;
    std::optional<MultislopeVerdict> verdict;
};

/// Runs the pipeline. Throws ParseError or std::invalid_argument on bad input
/// and TopologyError if the construction fails its own checks.
AnalysisReport analyze(SurfaceSpec spec, const TwistWord& word, const MacroTable& macros,
                       std::string word_text = {},
                       const std::optional<std::vector<Slope>>& multislope = std::nullopt);

/// key: value lines in a fixed order. Generators print under their aliases.
std::string format_report(const AnalysisReport& r, const MacroTable* aliases = nullptr);

/// Lines describing a multislope verdict, prefixed by `key`.
std::string format_verdict(const MultislopeVerdict& v, const std::string& key);

struct BEInstance {
    int n = 1;
    int k1 = 0;
    int k2 = 0;
};

struct BEReport {
    BEInstance instance;
    MacroTable macros;
    TwistWord psi;
    TwistWord monodromy;
    AnalysisReport analysis;
    std::vector<Slope> meridional;
    MultislopeVerdict verdict;

    std::string to_text() const;
};

/// The genus one example with two boundary circles: psi = a b^-1 c d^-1
/// with a = eta1, b = beta, c = eta2 and d = (a^3 b)^3, monodromy
/// delta1^k1 delta2^k2 psi^n, tested against the multislope (-1/k1, -1/n).
BEReport run_be(const BEInstance& instance);

}  // namespace taut
