#include "oracles.hpp"

#include "taut/analysis.hpp"
#include "taut/cli.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace taut;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

TwistWord random_word(std::mt19937_64& rng, const GervaisAlphabet& alphabet, int max_len)
{
    const auto& gens = alphabet.generators();
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> exp(-3, 3);
    TwistWord w;
    for (int n = len(rng); n > 0; --n) {
        int e = 0;
        while (e == 0)
            e = exp(rng);
        w.syllables.push_back({gens[pick(rng)], e});
    }
    return w;
}

Outcome baldwin_etnyre()
{
    Outcome o;
    const auto start = Clock::now();
    std::ostringstream out, err;
    if (run_cli({"baldwin-etnyre", "--n", "1", "--k1", "1"}, out, err) != 0)
        o.fail("baldwin-etnyre --n 1 did not exit 0");
    const std::string text = out.str();
    for (const char* line : {"inverse: a^3 b a^3 b a^3 b c^-1 b a^-1\n", "sequence.length: 4\n",
                             "interval.1: (-1/4, inf)\n", "interval.2: (-1/4, inf)\n"})
        if (text.find(line) == std::string::npos)
            o.fail(std::string("missing report line: ") + line);
    for (int n = 1; n <= 10; ++n) {
        auto base = run_be({n, 1, 0});
        if (base.analysis.interval.lower != Rational(-1, 4 * n))
            o.fail("left endpoint wrong for n=" + std::to_string(n));
        if (base.analysis.sequence.length() != 4 * n)
            o.fail("sequence length wrong for n=" + std::to_string(n));
        if (!base.analysis.sinks.empty() || !base.analysis.audit.ok())
            o.fail("certificate failed for n=" + std::to_string(n));
        for (int k1 = 1; k1 <= 50; ++k1) {
            auto v = multislope_query(base.analysis.sequence.length(),
                                      {Slope(Rational(-1, k1)), Slope(Rational(-1, n))}, 2);
            if (v.realizable())
                o.fail("accepted (-1/" + std::to_string(k1) + ", -1/" + std::to_string(n) + ")");
        }
        // The preset itself reaches the same verdict.
        if (run_be({n, 50, 0}).verdict.realizable())
            o.fail("preset accepted k1=50, n=" + std::to_string(n));
    }
    const double t = seconds_since(start);
    if (t >= 5.0)
        o.fail("took " + std::to_string(t) + " s");
    return o;
}

Outcome sink_disk_property()
{
    Outcome o;
    const auto start = Clock::now();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> genus(1, 3);
    std::uniform_int_distribution<int> boundary(2, 4);
    for (int t = 0; t < 200; ++t) {
        SurfaceSpec spec{genus(rng), boundary(rng)};
        GervaisAlphabet alphabet(spec);
        TwistWord w = random_word(rng, alphabet, 20);
        auto r = analyze(spec, w, {});
        const std::string tag = " for " + format_word(w) + " on (" + std::to_string(spec.genus) + ", " +
                                std::to_string(spec.boundary_count) + ")";
        if (!r.sinks.empty())
            o.fail("sink disk found" + tag);
        if (!r.audit.ok())
            o.fail("audit failed" + tag + ": " + r.audit.failures.front());
        int vertical = 0;
        for (const auto& s : r.complex.sectors) {
            if (s.kind != SectorKind::Vertical)
                continue;
            ++vertical;
            if (s.count(Cusp::In) != 1 || s.count(Cusp::Out) != 1)
                o.fail("product disk with wrong cusps" + tag);
        }
        if (vertical != r.sequence.length() * spec.boundary_count)
            o.fail("wrong number of product disks" + tag);
    }
    const double t = seconds_since(start);
    if (t >= 30.0)
        o.fail("took " + std::to_string(t) + " s");
    return o;
}

Outcome checker_oracle()
{
    Outcome o;
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> small(0, 5);
    std::uniform_int_distribution<int> sectors(1, 30);
    for (int t = 0; t < 50; ++t) {
        // Built through the text format, as a hand-written file would be.
        std::ostringstream file;
        for (int id = 0, m = sectors(rng); id < m; ++id) {
            int g = small(rng) < 4 ? 0 : small(rng) % 3;
            int b = small(rng) < 4 ? 1 : 1 + small(rng) % 3;
            file << "sector id=" << id << " type=g" << g << "b" << b
                 << " boundary=" << (coin(rng) ? "yes" : "no") << " cusps=";
            int segs = small(rng);
            if (segs == 0)
                file << "none";
            for (int s = 0; s < segs; ++s)
                file << (s ? "," : "") << (small(rng) == 0 ? "out" : "in");
            file << "\n";
        }
        auto c = parse_complex(file.str());
        std::vector<SinkFinding> expected;
        for (const auto& s : c.sectors)
            if (oracle::is_sink_disk(s))
                expected.push_back({s.id, s.meets_boundary ? SinkKind::HalfSinkDisk : SinkKind::SinkDisk});
        if (find_sink_disks(c) != expected)
            o.fail("disagreement on complex " + std::to_string(t));
    }
    return o;
}

Outcome parallel_cut()
{
    Outcome o;
    for (int g = 1; g <= 4; ++g)
        for (int k = 2; k <= 5; ++k) {
            const std::string tag = " for (" + std::to_string(g) + ", " + std::to_string(k) + ")";
            auto st = standard_parallel_tuple({g, k});
            auto cut = cut_along(st.fiber.surface, st.tuple.arcs);
            // For g = 1 the last piece is an annulus too.
            std::multiset<std::pair<long long, int>> expected, got, independent;
            for (int j = 1; j < k; ++j)
                expected.insert({0, 2});
            expected.insert({2 - 2 * (g - 1) - 2, 2});
            long long sum = 0;
            for (const auto& c : cut.components) {
                sum += c.euler_characteristic();
                got.insert({c.euler_characteristic(), c.boundary_count});
            }
            if (got != expected)
                o.fail("wrong pieces" + tag);
            if (sum != (2 - 2 * g - k) + k)
                o.fail("chi bookkeeping" + tag);
            std::vector<std::vector<VertexId>> paths;
            for (const auto& a : st.tuple.arcs)
                paths.push_back(a.path);
            auto pieces = oracle::cut_pieces(st.fiber.surface.faces(), paths);
            for (const auto& p : pieces)
                independent.insert({p.chi, p.boundary});
            if (independent != expected)
                o.fail("independent cut disagrees" + tag);
        }
    return o;
}

Outcome slope_round_trip()
{
    Outcome o;
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> num(-100000, 100000);
    std::uniform_int_distribution<long long> den(1, 99991);
    const int ns[] = {1, 4, 8, 40};
    int tested = 0;
    while (tested < 1000) {
        const int n = ns[tested % 4];
        Rational m(num(rng), den(rng));
        if (m <= Rational(-1, n))
            continue;
        auto w = witness_weights(n, Slope(m));
        if (w.x <= 0 || w.y <= 0 || slope_of_measure(n, w.x, w.y) != Slope(m))
            o.fail("round trip failed at " + format_rational(m));
        ++tested;
    }
    for (int n : ns) {
        for (const Slope& bad : {Slope(Rational(-1, n)), Slope::infinity()}) {
            try {
                witness_weights(n, bad);
                o.fail("accepted " + bad.to_string() + " for n=" + std::to_string(n));
            } catch (const DomainError&) {
            }
        }
    }
    return o;
}

Outcome word_algebra()
{
    Outcome o;
    std::mt19937_64 rng(99);
    for (int t = 0; t < 500; ++t) {
        SurfaceSpec spec{1 + t % 3, 2 + t % 4};
        GervaisAlphabet alphabet(spec);
        TwistWord w = random_word(rng, alphabet, 20);
        if (!reduce(concat(w, invert(w))).empty())
            o.fail("w w^-1 did not reduce for " + format_word(w));

        // Random macros over the same alphabet, used inside a word.
        MacroTable macros;
        macros.define("m1", random_word(rng, alphabet, 5));
        macros.define("m2", concat(random_word(rng, alphabet, 3), TwistWord{{{MacroRef{"m1"}, -2}}}));
        TwistWord u = concat(w, TwistWord{{{MacroRef{"m2"}, 3}, {MacroRef{"m1"}, 1}}});
        if (expand_macros(invert(u), macros) != reduce(invert(expand_macros(u, macros))))
            o.fail("expansion does not commute with inversion for " + format_word(u));
        if (oracle::letters(expand_macros(u, macros)) !=
            oracle::free_reduce(oracle::letters(expand_macros(u, macros))))
            o.fail("expansion is not reduced");
    }
    for (int n = 1; n <= 6; ++n)
        for (int k1 = -3; k1 <= 3; ++k1)
            for (int k2 = -3; k2 <= 3; ++k2) {
                auto r = run_be({n, k1, k2});
                auto psi_n = expand_macros(power(r.psi, n), r.macros);
                if (drop_boundary_twists(expand_macros(r.monodromy, r.macros)) != psi_n)
                    o.fail("boundary twists not eliminated for n=" + std::to_string(n));
            }
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 baldwin-etnyre reproduction", baldwin_etnyre},
        {"2 no sink disks on random words", sink_disk_property},
        {"3 checker matches the definitions", checker_oracle},
        {"4 parallel tuple cut", parallel_cut},
        {"5 slope round trip", slope_round_trip},
        {"6 word algebra", word_algebra},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << name << "] (" << seconds_since(start) << " s)";
        if (!o.ok)
            std::cout << ": " << o.detail;
        std::cout << "\n";
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
