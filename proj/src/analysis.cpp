#include "taut/analysis.hpp"

#include <sstream>

namespace taut {

AnalysisReport analyze(SurfaceSpec spec, const TwistWord& word, const MacroTable& macros, std::string word_text,
                       const std::optional<std::vector<Slope>>& multislope)
{
    spec.validate();
    const GervaisAlphabet alphabet(spec);
    check_letters(word, alphabet);

    AnalysisReport r;
    r.spec = spec;
    r.word_text = word_text.empty() ? format_word(word) : std::move(word_text);
    r.expanded = drop_boundary_twists(expand_macros(word, macros));
    r.inverse = invert(r.expanded);
    r.sequence = synthesize(r.inverse, spec);
    r.complex = build(r.sequence);
    r.sinks = find_sink_disks(r.complex);
    r.audit = euler_audit(r.complex);
    r.interval = realizable_interval(r.sequence.length());
    if (multislope)
        r.verdict = multislope_query(r.sequence.length(), *multislope, spec.boundary_count);
    return r;
}

std::string format_verdict(const MultislopeVerdict& v, const std::string& key)
{
    std::ostringstream out;
    for (std::size_t j = 0; j < v.components.size(); ++j) {
        const auto& c = v.components[j];
        out << key << "." << j + 1 << ": " << c.slope.to_string();
        if (c.realizable && c.witness)
            out << " realizable x=" << format_rational(c.witness->x) << " y=" << format_rational(c.witness->y);
        else
            out << " rejected, outside " << v.interval.to_string();
        out << "\n";
    }
    out << key << ".verdict: " << (v.realizable() ? "realizable" : "rejected") << "\n";
    if (!v.realizable()) {
        out << key << ".offending:";
        for (int j : v.offending())
            out << " " << j;
        out << "\n";
    }
    return out.str();
}

std::string format_report(const AnalysisReport& r, const MacroTable* aliases)
{
    std::ostringstream out;
    out << "genus: " << r.spec.genus << "\n";
    out << "boundary: " << r.spec.boundary_count << "\n";
    out << "word: " << r.word_text << "\n";
    out << "expanded: " << (r.expanded.empty() ? "1" : format_word(r.expanded, aliases)) << "\n";
    out << "inverse: " << (r.inverse.empty() ? "1" : format_word(r.inverse, aliases)) << "\n";
    out << "sequence.length: " << r.sequence.length() << "\n";
    out << "sequence.sign: " << to_string(r.sequence.sign) << "\n";
    out << "sequence.kept: " << r.sequence.kept << "\n";
    out << "sequence.substitutions: " << r.sequence.substituted << "\n";
    out << "sequence.seeded: " << (r.sequence.seeded ? "yes" : "no") << "\n";
    int vertical = 0;
    for (const auto& s : r.complex.sectors)
        vertical += s.kind == SectorKind::Vertical;
    out << "complex.levels: " << r.complex.levels << "\n";
    out << "complex.sectors: " << r.complex.sectors.size() << "\n";
    out << "complex.product-disks: " << vertical << "\n";
    out << "audit: " << (r.audit.ok() ? "pass" : "fail") << "\n";
    for (const auto& f : r.audit.failures)
        out << "audit.failure: " << f << "\n";
    out << "sink-disks:";
    if (r.sinks.empty())
        out << " none";
    for (const auto& f : r.sinks)
        out << " " << f.sector << "(" << to_string(f.kind) << ")";
    out << "\n";
    out << "certified: no sink disk, no half sink disk\n";
    out << "not-checked: trivial bubbles, Reeb components\n";
    for (int j = 1; j <= r.spec.boundary_count; ++j)
        out << "interval." << j << ": " << r.interval.to_string() << "\n";
    if (r.verdict)
        out << format_verdict(*r.verdict, "multislope");
    return out.str();
}

}  // namespace taut
