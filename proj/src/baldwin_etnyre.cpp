#include "taut/analysis.hpp"

#include <sstream>

namespace taut {

namespace {

Symbol ref(const char* name) { return MacroRef{name}; }

TwistWord single(Symbol s, long long e = 1) { return TwistWord{{{std::move(s), e}}}; }

}  // namespace

BEReport run_be(const BEInstance& instance)
{
    if (instance.n < 1)
        throw std::invalid_argument("n must be at least 1");
    const SurfaceSpec spec{1, 2};

    BEReport r;
    r.instance = instance;
    r.macros.define("a", single(Generator{GeneratorKind::Eta, 1, 0}));
    r.macros.define("b", single(Generator{GeneratorKind::Beta, 0, 0}));
    r.macros.define("c", single(Generator{GeneratorKind::Eta, 2, 0}));
    r.macros.define("d", star_relation(ref("a"), ref("a"), ref("a"), ref("b")));

    r.psi = TwistWord{{{ref("a"), 1}, {ref("b"), -1}, {ref("c"), 1}, {ref("d"), -1}}};
    TwistWord twists;
    if (instance.k1 != 0)
        twists.syllables.push_back({Generator{GeneratorKind::Delta, 1, 0}, instance.k1});
    if (instance.k2 != 0)
        twists.syllables.push_back({Generator{GeneratorKind::Delta, 2, 0}, instance.k2});
    r.monodromy = concat(twists, power(r.psi, instance.n));

    r.meridional = {instance.k1 == 0 ? Slope::infinity() : Slope(make_rational(-1, instance.k1)),
                    Slope(Rational(-1, instance.n))};
    r.analysis = analyze(spec, r.monodromy, r.macros, format_word(r.monodromy), r.meridional);
    r.verdict = *r.analysis.verdict;
    return r;
}

std::string BEReport::to_text() const
{
    std::ostringstream out;
    out << "preset: baldwin-etnyre\n";
    out << "n: " << instance.n << "\n";
    out << "k1: " << instance.k1 << "\n";
    out << "k2: " << instance.k2 << "\n";
    for (const auto& [name, body] : macros.entries())
        out << "macro." << name << ": " << format_word(body) << "\n";
    out << "psi: " << format_word(psi) << "\n";
    out << format_report(analysis, &macros);
    return out.str();
}

}  // namespace taut
