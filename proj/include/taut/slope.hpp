#pragma once

#include "taut/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taut {

/// A boundary slope on a torus: q/p for the class p*lambda + q*mu, or infinity
/// (the meridian). Zero is the slope of the fiber boundary.
class Slope {
public:
    Slope() = default;
    explicit Slope(Rational value) : value_(std::move(value)) {}

    static Slope infinity() { return Slope(Tag{}); }

    bool is_infinite() const { return !value_.has_value(); }
    /// Precondition: finite.
    const Rational& value() const;

    std::string to_string() const;
    static Slope parse(std::string_view text);

    friend bool operator==(const Slope& a, const Slope& b) = default;

private:
    struct Tag {};
    explicit Slope(Tag) : value_(std::nullopt) {}

    std::optional<Rational> value_ = Rational(0);
};

/// Open interval (lower, +infinity) of slopes, lower finite.
struct SlopeInterval {
    Rational lower;

    bool contains(const Slope& s) const;
    std::string to_string() const;
};

/// Per-boundary weights (x, y) of the measured boundary train track.
struct MeasuredTrack {
    int n = 1;
    Rational x;
    Rational y;
};

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Slope (x - y) / (n (1 + y)) carried by the weighted track. Rejects n < 1 and
/// nonpositive weights.
Slope slope_of_measure(int n, const Rational& x, const Rational& y);

/// (-1/n, infinity).
SlopeInterval realizable_interval(int n);

/// Deterministic positive weights realizing `m` exactly.
/// m >= 0: y = 1, x = 1 + 2nm.  m < 0: x = -nm, y = -2nm / (1 + nm).
MeasuredTrack witness_weights(int n, const Slope& m);

/// s / (1 + c s); infinity goes to 1/c and -1/c goes to infinity.
Slope change_coords(const Slope& s, long long c);

struct ComponentVerdict {
    Slope slope;
    bool realizable = false;
    std::optional<MeasuredTrack> witness;
};

struct MultislopeVerdict {
    int n = 1;
    SlopeInterval interval;
    std::vector<ComponentVerdict> components;

    bool realizable() const;
    /// 1-based indices of rejected components.
    std::vector<int> offending() const;
};

/// Tests each component against (-1/n, infinity). If `boundary_count` is set the
/// multislope arity must match it.
MultislopeVerdict multislope_query(int n, const std::vector<Slope>& slopes,
                                   std::optional<int> boundary_count = std::nullopt);

/// Parses a comma-separated list of slopes (`p/q`, `p`, `inf`).
std::vector<Slope> parse_multislope(std::string_view text);

}  // namespace taut
