#include "taut/cli.hpp"

#include "taut/analysis.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace taut {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::vector<long long> parse_offsets(const std::string& text)
{
    std::vector<long long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        Rational r = parse_rational(item);
        if (denominator(r) != 1)
            throw ParseError("offset '" + item + "' is not an integer");
        out.push_back(static_cast<long long>(numerator(r)));
    }
    return out;
}

struct AnalyzeArgs {
    int genus = 0;
    int boundary = 0;
    std::string word;
    std::string macros;
    std::string multislope;
    std::string emit;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out)
{
    const SurfaceSpec spec{a.genus, a.boundary};
    spec.validate();
    const GervaisAlphabet alphabet(spec);
    MacroTable macros = a.macros.empty() ? MacroTable{} : parse_macro_file(read_file(a.macros), alphabet);
    TwistWord word = parse_word(a.word, alphabet, macros);
    std::optional<std::vector<Slope>> slopes;
    if (!a.multislope.empty())
        slopes = parse_multislope(a.multislope);

    AnalysisReport r = analyze(spec, word, macros, a.word.empty() ? std::string("1") : a.word, slopes);
    out << format_report(r, &macros);
    if (!a.emit.empty()) {
        std::ofstream file(a.emit, std::ios::binary);
        if (!file)
            throw ParseError("cannot write '" + a.emit + "'");
        file << write_complex(r.complex);
    }
    if (!r.audit.ok())
        return kExitInternal;
    return r.sinks.empty() ? kExitOk : kExitFindings;
}

struct RealizeArgs {
    int n = 0;
    std::string multislope;
    std::string offsets;
    int boundary = 0;
};

int cmd_realize(const RealizeArgs& a, std::ostream& out)
{
    std::vector<Slope> slopes = parse_multislope(a.multislope);
    std::optional<int> arity;
    if (a.boundary > 0)
        arity = a.boundary;
    if (!a.offsets.empty()) {
        auto offsets = parse_offsets(a.offsets);
        if (offsets.size() != slopes.size())
            throw DomainError("got " + std::to_string(offsets.size()) + " offsets for " +
                              std::to_string(slopes.size()) + " slopes");
        for (std::size_t j = 0; j < slopes.size(); ++j) {
            Slope converted = change_coords(slopes[j], offsets[j]);
            out << "converted." << j + 1 << ": " << slopes[j].to_string() << " -> " << converted.to_string()
                << " (c=" << offsets[j] << ")\n";
            slopes[j] = converted;
        }
    }
    MultislopeVerdict v = multislope_query(a.n, slopes, arity);
    out << "n: " << a.n << "\n";
    out << "interval: " << v.interval.to_string() << "\n";
    out << format_verdict(v, "multislope");
    return v.realizable() ? kExitOk : kExitFindings;
}

int cmd_check(const std::string& path, std::ostream& out)
{
    BranchedComplex c = parse_complex(read_file(path));
    auto findings = find_sink_disks(c);
    out << "sectors: " << c.sectors.size() << "\n";
    out << "findings: " << findings.size() << "\n";
    for (const auto& f : findings)
        out << "finding: sector " << f.sector << " " << to_string(f.kind) << "\n";
    out << "certified: " << (findings.empty() ? "no sink disk, no half sink disk" : "none") << "\n";
    return findings.empty() ? kExitOk : kExitFindings;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Taut foliations from good arc sequences of fibered monodromies", "taut"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline on a monodromy word");
    analyze_cmd->add_option("--genus", analyze_args.genus, "Genus of the fiber")->required();
    analyze_cmd->add_option("--boundary", analyze_args.boundary, "Number of boundary circles")->required();
    analyze_cmd->add_option("--word", analyze_args.word, "Monodromy word, rightmost letter first");
    analyze_cmd->add_option("--macros", analyze_args.macros, "File of `name = word` lines");
    analyze_cmd->add_option("--multislope", analyze_args.multislope, "Comma-separated slopes to test");
    analyze_cmd->add_option("--emit-complex", analyze_args.emit, "Write the branched complex to a file");

    RealizeArgs realize_args;
    auto* realize_cmd = app.add_subcommand("realize", "Test a multislope against (-1/n, inf)");
    realize_cmd->add_option("--n", realize_args.n, "Sequence length")->required();
    realize_cmd->add_option("--multislope", realize_args.multislope, "Comma-separated slopes")->required();
    realize_cmd->add_option("--offsets", realize_args.offsets, "Integer coordinate offsets c_j");
    realize_cmd->add_option("--boundary", realize_args.boundary, "Expected number of slopes");

    std::string complex_path;
    auto* check_cmd = app.add_subcommand("check", "Look for sink disks in a complex file");
    check_cmd->add_option("file", complex_path, "Complex description")->required();

    BEInstance be;
    auto* be_cmd = app.add_subcommand("baldwin-etnyre", "Genus one, two boundary example");
    be_cmd->add_option("--n", be.n, "Power of psi")->required();
    be_cmd->add_option("--k1", be.k1, "Twists about delta1")->required();
    be_cmd->add_option("--k2", be.k2, "Twists about delta2");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*analyze_cmd)
            return cmd_analyze(analyze_args, out);
        if (*realize_cmd)
            return cmd_realize(realize_args, out);
        if (*check_cmd)
            return cmd_check(complex_path, out);
        if (*be_cmd) {
            BEReport r = run_be(be);
            out << r.to_text();
            if (!r.analysis.audit.ok())
                return kExitInternal;
            return r.analysis.sinks.empty() ? kExitOk : kExitFindings;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const TopologyError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitBadInput;
}

}  // namespace taut
