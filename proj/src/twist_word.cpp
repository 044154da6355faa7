#include "taut/twist_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace taut {

namespace {

constexpr long long kMaxExponent = 100000;

bool is_identifier(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

// Matches the shape of a generator name regardless of the surface.
bool looks_like_generator(std::string_view s)
{
    for (std::string_view prefix : {"eta", "gamma", "beta", "delta"}) {
        if (s.substr(0, prefix.size()) != prefix)
            continue;
        auto rest = s.substr(prefix.size());
        if (rest.empty())
            return prefix == "beta";
        return std::all_of(rest.begin(), rest.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    }
    return false;
}

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string Generator::name() const
{
    switch (kind) {
    case GeneratorKind::Eta:
        return "eta" + std::to_string(first);
    case GeneratorKind::Gamma:
        return "gamma" + std::to_string(first) + std::to_string(second);
    case GeneratorKind::Beta:
        return "beta";
    case GeneratorKind::HandleBeta:
        return "beta" + std::to_string(first);
    case GeneratorKind::Delta:
        return "delta" + std::to_string(first);
    }
    return "?";
}

GervaisAlphabet::GervaisAlphabet(SurfaceSpec spec) : spec_(spec)
{
    spec.validate();
    const int g = spec.genus;
    const int k = spec.boundary_count;
    for (int i = 1; i <= 2 * g - 2 + k; ++i)
        generators_.push_back({GeneratorKind::Eta, i, 0});
    if (g >= 2)
        generators_.push_back({GeneratorKind::Gamma, 1, 2});
    for (int m = 1; m <= g - 2; ++m)
        generators_.push_back({GeneratorKind::Gamma, 2 * m, 2 * m + 2});
    generators_.push_back({GeneratorKind::Beta, 0, 0});
    for (int i = 1; i <= g - 1; ++i)
        generators_.push_back({GeneratorKind::HandleBeta, i, 0});
    for (int i = 1; i <= k - 1; ++i)
        generators_.push_back({GeneratorKind::Delta, i, 0});
    for (const auto& gen : generators_)
        by_name_.emplace(gen.name(), gen);
    Generator last_boundary{GeneratorKind::Delta, k, 0};
    by_name_.emplace(last_boundary.name(), last_boundary);
}

int GervaisAlphabet::generator_count(SurfaceSpec spec)
{
    return 4 * spec.genus - 4 + 2 * spec.boundary_count;
}

bool GervaisAlphabet::contains(const Generator& g) const
{
    auto it = by_name_.find(g.name());
    return it != by_name_.end() && it->second == g;
}

std::optional<Generator> GervaisAlphabet::lookup(std::string_view name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

LetterClass GervaisAlphabet::classify(const Generator& g) const
{
    if (g.kind == GeneratorKind::Delta)
        return LetterClass::Boundary;
    return g.kind == GeneratorKind::Beta ? LetterClass::Crossing : LetterClass::Disjoint;
}

TwistWord concat(const TwistWord& a, const TwistWord& b)
{
    TwistWord out = a;
    out.syllables.insert(out.syllables.end(), b.syllables.begin(), b.syllables.end());
    return out;
}

TwistWord reduce(const TwistWord& w)
{
    TwistWord out;
    for (const auto& s : w.syllables) {
        if (s.exponent == 0)
            continue;
        if (!out.syllables.empty() && out.syllables.back().symbol == s.symbol) {
            out.syllables.back().exponent += s.exponent;
            if (out.syllables.back().exponent == 0)
                out.syllables.pop_back();
        } else {
            out.syllables.push_back(s);
        }
    }
    return out;
}

TwistWord invert(const TwistWord& w)
{
    TwistWord out;
    out.syllables.reserve(w.syllables.size());
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
        out.syllables.push_back({it->symbol, -it->exponent});
    return out;
}

TwistWord power(const TwistWord& w, long long n)
{
    const TwistWord base = n < 0 ? invert(w) : w;
    TwistWord out;
    for (long long i = 0; i < (n < 0 ? -n : n); ++i)
        out = concat(out, base);
    return reduce(out);
}

void MacroTable::define(const std::string& name, TwistWord body)
{
    if (!is_identifier(name))
        throw ParseError("invalid macro name '" + name + "'");
    if (looks_like_generator(name))
        throw ParseError("macro name '" + name + "' clashes with a generator name");
    macros_[name] = std::move(body);
}

bool MacroTable::contains(std::string_view name) const
{
    return macros_.find(name) != macros_.end();
}

const TwistWord& MacroTable::body(std::string_view name) const
{
    auto it = macros_.find(name);
    if (it == macros_.end())
        throw ParseError("undefined macro '" + std::string(name) + "'");
    return it->second;
}

std::optional<std::string> MacroTable::alias_of(const Generator& g) const
{
    for (const auto& [name, body] : macros_) {
        if (body.syllables.size() != 1 || body.syllables[0].exponent != 1)
            continue;
        const auto* gen = std::get_if<Generator>(&body.syllables[0].symbol);
        if (gen && *gen == g)
            return name;
    }
    return std::nullopt;
}

TwistWord star_relation(const Symbol& a1, const Symbol& a2, const Symbol& a3, const Symbol& b,
                        const std::optional<Symbol>& gamma2, const std::optional<Symbol>& gamma3)
{
    TwistWord block{{{a1, 1}, {a2, 1}, {a3, 1}, {b, 1}}};
    TwistWord out = power(block, 3);
    // T_g1 = (...)^3 T_g3^-1 T_g2^-1; the gammas are disjoint and commute.
    if (gamma3)
        out.syllables.push_back({*gamma3, -1});
    if (gamma2)
        out.syllables.push_back({*gamma2, -1});
    return reduce(out);
}

namespace {

Symbol resolve_name(std::string_view name, const GervaisAlphabet& alphabet, const MacroTable& macros,
                    const std::set<std::string, std::less<>>* pending)
{
    if (auto gen = alphabet.lookup(name))
        return *gen;
    if (looks_like_generator(name))
        throw ParseError("letter '" + std::string(name) + "' is not a generator for genus " +
                         std::to_string(alphabet.spec().genus) + " with " +
                         std::to_string(alphabet.spec().boundary_count) + " boundary components");
    if (macros.contains(name) || (pending && pending->count(name)))
        return MacroRef{std::string(name)};
    throw ParseError("unknown letter '" + std::string(name) + "'");
}

TwistWord parse_tokens(std::string_view text, const GervaisAlphabet& alphabet, const MacroTable& macros,
                       const std::set<std::string, std::less<>>* pending)
{
    TwistWord out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        std::string_view tok = token;
        long long exponent = 1;
        auto caret = tok.find('^');
        std::string_view name = tok.substr(0, caret);
        if (caret != std::string_view::npos) {
            auto exp_text = tok.substr(caret + 1);
            if (!exp_text.empty() && exp_text.front() == '+')
                exp_text.remove_prefix(1);
            auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
            if (exp_text.empty() || ec != std::errc{} || ptr != exp_text.data() + exp_text.size())
                throw ParseError("malformed exponent in '" + token + "'");
            if (exponent == 0)
                throw ParseError("zero exponent in '" + token + "'");
            if (exponent > kMaxExponent || exponent < -kMaxExponent)
                throw ParseError("exponent out of range in '" + token + "'");
        }
        if (name.empty())
            throw ParseError("missing letter in '" + token + "'");
        out.syllables.push_back({resolve_name(name, alphabet, macros, pending), exponent});
    }
    return out;
}

void expand_into(const TwistWord& w, const MacroTable& macros, std::vector<std::string>& stack,
                 TwistWord& out)
{
    for (const auto& s : w.syllables) {
        if (const auto* gen = std::get_if<Generator>(&s.symbol)) {
            out.syllables.push_back({*gen, s.exponent});
            continue;
        }
        const auto& name = std::get<MacroRef>(s.symbol).name;
        if (std::find(stack.begin(), stack.end(), name) != stack.end())
            throw ParseError("recursive macro '" + name + "'");
        stack.push_back(name);
        TwistWord body;
        expand_into(macros.body(name), macros, stack, body);
        body = reduce(body);
        stack.pop_back();
        TwistWord piece = power(body, s.exponent);
        for (auto& p : piece.syllables)
            out.syllables.push_back(std::move(p));
    }
}

}  // namespace

TwistWord parse_word(std::string_view text, const GervaisAlphabet& alphabet, const MacroTable& macros)
{
    return parse_tokens(text, alphabet, macros, nullptr);
}

MacroTable parse_macro_file(std::string_view text, const GervaisAlphabet& alphabet)
{
    struct Line {
        int number;
        std::string name;
        std::string body;
    };
    std::vector<Line> lines;
    std::set<std::string, std::less<>> names;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        std::string line = trim(std::string_view(raw).substr(0, hash));
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(number) + ": expected 'name = word'");
        std::string name = trim(std::string_view(line).substr(0, eq));
        if (!names.insert(name).second)
            throw ParseError("line " + std::to_string(number) + ": macro '" + name + "' defined twice");
        lines.push_back({number, name, trim(std::string_view(line).substr(eq + 1))});
    }

    MacroTable table;
    for (const auto& line : lines) {
        auto where = "line " + std::to_string(line.number) + ": ";
        try {
            TwistWord body;
            if (line.body.rfind("star(", 0) == 0) {
                if (line.body.back() != ')')
                    throw ParseError("unterminated star(...)");
                std::string args = line.body.substr(5, line.body.size() - 6);
                std::vector<Symbol> symbols;
                std::istringstream arg_in(args);
                std::string arg;
                while (std::getline(arg_in, arg, ',')) {
                    TwistWord one = parse_tokens(trim(arg), alphabet, table, &names);
                    if (one.syllables.size() != 1 || one.syllables[0].exponent != 1)
                        throw ParseError("star(...) arguments must be single curves");
                    symbols.push_back(one.syllables[0].symbol);
                }
                if (symbols.size() != 4 && symbols.size() != 6)
                    throw ParseError("star(...) takes 4 or 6 curves");
                std::optional<Symbol> g2, g3;
                if (symbols.size() == 6) {
                    g2 = symbols[4];
                    g3 = symbols[5];
                }
                body = star_relation(symbols[0], symbols[1], symbols[2], symbols[3], g2, g3);
            } else {
                body = parse_tokens(line.body, alphabet, table, &names);
            }
            table.define(line.name, std::move(body));
        } catch (const ParseError& e) {
            throw ParseError(where + e.what());
        }
    }
    for (const auto& [name, body] : table.entries())
        expand_macros(body, table);
    return table;
}

TwistWord expand_macros(const TwistWord& w, const MacroTable& macros)
{
    std::vector<std::string> stack;
    TwistWord out;
    expand_into(w, macros, stack, out);
    return reduce(out);
}

TwistWord drop_boundary_twists(const TwistWord& w)
{
    TwistWord out;
    for (const auto& s : w.syllables) {
        const auto* gen = std::get_if<Generator>(&s.symbol);
        if (gen && gen->kind == GeneratorKind::Delta)
            continue;
        out.syllables.push_back(s);
    }
    return reduce(out);
}

std::string to_string(StepTag tag)
{
    switch (tag) {
    case StepTag::BetaPositive:
        return "beta-positive";
    case StepTag::BetaNegative:
        return "beta-negative";
    case StepTag::Disjoint:
        return "disjoint";
    }
    return "?";
}

std::vector<StepTag> classify_letters(const TwistWord& w)
{
    std::vector<StepTag> tags;
    for (const auto& s : w.syllables) {
        const auto* gen = std::get_if<Generator>(&s.symbol);
        if (!gen)
            throw ParseError("unexpanded macro '" + std::get<MacroRef>(s.symbol).name + "'");
        if (gen->kind == GeneratorKind::Delta)
            throw ParseError("boundary twist '" + gen->name() + "' must be dropped first");
        StepTag tag = StepTag::Disjoint;
        if (gen->kind == GeneratorKind::Beta)
            tag = s.exponent > 0 ? StepTag::BetaNegative : StepTag::BetaPositive;
        tags.insert(tags.end(), static_cast<std::size_t>(s.exponent < 0 ? -s.exponent : s.exponent), tag);
    }
    return tags;
}

std::string format_word(const TwistWord& w, const MacroTable* aliases)
{
    std::string out;
    for (const auto& s : w.syllables) {
        if (!out.empty())
            out += ' ';
        if (const auto* gen = std::get_if<Generator>(&s.symbol)) {
            auto alias = aliases ? aliases->alias_of(*gen) : std::nullopt;
            out += alias ? *alias : gen->name();
        } else {
            out += std::get<MacroRef>(s.symbol).name;
        }
        if (s.exponent != 1)
            out += "^" + std::to_string(s.exponent);
    }
    return out;
}

void check_letters(const TwistWord& w, const GervaisAlphabet& alphabet)
{
    for (const auto& s : w.syllables)
        if (const auto* gen = std::get_if<Generator>(&s.symbol); gen && !alphabet.contains(*gen))
            throw ParseError("letter '" + gen->name() + "' is not a generator for this surface");
}

}  // namespace taut
