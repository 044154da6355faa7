#include "taut/slope.hpp"


namespace taut {

const Rational& Slope::value() const
{
    if (!value_)
        throw DomainError("slope is infinite");
    return *value_;
}

std::string Slope::to_string() const
{
    return value_ ? format_rational(*value_) : std::string("inf");
}

Slope Slope::parse(std::string_view text)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text == "inf" || text == "infinity" || text == "∞")
        return infinity();
    return Slope(parse_rational(text));
}

bool SlopeInterval::contains(const Slope& s) const
{
    return !s.is_infinite() && s.value() > lower;
}

std::string SlopeInterval::to_string() const
{
    return "(" + format_rational(lower) + ", inf)";
}

Slope slope_of_measure(int n, const Rational& x, const Rational& y)
{
    if (n < 1)
        throw DomainError("n must be >= 1, got " + std::to_string(n));
    if (x <= 0 || y <= 0)
        throw DomainError("weights must be strictly positive, got x=" + format_rational(x) +
                          " y=" + format_rational(y));
    return Slope((x - y) / (Rational(n) * (1 + y)));
}

SlopeInterval realizable_interval(int n)
{
    if (n < 1)
        throw DomainError("n must be >= 1, got " + std::to_string(n));
    return SlopeInterval{Rational(-1, n)};
}

MeasuredTrack witness_weights(int n, const Slope& m)
{
    auto interval = realizable_interval(n);
    if (!interval.contains(m))
        throw DomainError("slope " + m.to_string() + " is outside the realizable interval " +
                          interval.to_string() + " for n=" + std::to_string(n));
    const Rational& s = m.value();
    Rational nm = Rational(n) * s;
    if (s >= 0)
        return MeasuredTrack{n, 1 + 2 * nm, Rational(1)};
    return MeasuredTrack{n, -nm, -2 * nm / (1 + nm)};
}

Slope change_coords(const Slope& s, long long c)
{
    if (s.is_infinite())
        return c == 0 ? Slope::infinity() : Slope(make_rational(1, c));
    Rational den = 1 + Rational(c) * s.value();
    if (den == 0)
        return Slope::infinity();
    return Slope(s.value() / den);
}

bool MultislopeVerdict::realizable() const
{
    for (const auto& c : components)
        if (!c.realizable)
            return false;
    return true;
}

std::vector<int> MultislopeVerdict::offending() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < components.size(); ++i)
        if (!components[i].realizable)
            out.push_back(static_cast<int>(i) + 1);
    return out;
}

MultislopeVerdict multislope_query(int n, const std::vector<Slope>& slopes,
                                   std::optional<int> boundary_count)
{
    if (boundary_count && static_cast<int>(slopes.size()) != *boundary_count)
        throw DomainError("multislope has " + std::to_string(slopes.size()) +
                          " components but the surface has " + std::to_string(*boundary_count) +
                          " boundary components");
    MultislopeVerdict verdict{n, realizable_interval(n), {}};
    for (const auto& s : slopes) {
        ComponentVerdict c{s, verdict.interval.contains(s), std::nullopt};
        if (c.realizable)
            c.witness = witness_weights(n, s);
        verdict.components.push_back(std::move(c));
    }
    return verdict;
}

std::vector<Slope> parse_multislope(std::string_view text)
{
    std::vector<Slope> out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                        : comma - start);
        out.push_back(Slope::parse(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

}  // namespace taut
