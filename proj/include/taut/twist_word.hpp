#pragma once

#include "taut/cell_surface.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace taut {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GeneratorKind { Eta, Gamma, Beta, HandleBeta, Delta };

/// A curve of the Gervais generating set. `first`/`second` carry the indices
/// (gamma uses both, beta uses neither).
struct Generator {
    GeneratorKind kind = GeneratorKind::Eta;
    int first = 0;
    int second = 0;

    std::string name() const;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// How a twist moves the standard tuple: only the distinguished curve crosses it.
enum class LetterClass { Crossing, Disjoint, Boundary };

/// Gervais generators for F_{g,k}: eta_1..eta_{2g-2+k}, gamma_12,
/// gamma_24..gamma_{2g-4,2g-2}, beta, beta_1..beta_{g-1}, delta_1..delta_{k-1}.
/// The boundary-parallel curve delta_k is accepted as an extra letter since
/// monodromies are commonly written with a twist about every boundary circle.
class GervaisAlphabet {
public:
    explicit GervaisAlphabet(SurfaceSpec spec);

    const SurfaceSpec& spec() const { return spec_; }
    const std::vector<Generator>& generators() const { return generators_; }
    /// 4g - 4 + 2k.
    static int generator_count(SurfaceSpec spec);

    bool contains(const Generator& g) const;
    std::optional<Generator> lookup(std::string_view name) const;
    LetterClass classify(const Generator& g) const;

private:
    SurfaceSpec spec_;
    std::vector<Generator> generators_;
    std::map<std::string, Generator, std::less<>> by_name_;
};

/// A twist about a generator, or a reference to a named macro.
struct MacroRef {
    std::string name;
    friend auto operator<=>(const MacroRef&, const MacroRef&) = default;
};
using Symbol = std::variant<Generator, MacroRef>;

struct Syllable {
    Symbol symbol;
    long long exponent = 1;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A word read as a composition of twists: the rightmost syllable acts first.
/// Equality is syntactic.
struct TwistWord {
    std::vector<Syllable> syllables;

    bool empty() const { return syllables.empty(); }
    friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

TwistWord concat(const TwistWord& a, const TwistWord& b);
TwistWord reduce(const TwistWord& w);
TwistWord invert(const TwistWord& w);
/// w^n for any integer n (negative powers invert), reduced.
TwistWord power(const TwistWord& w, long long n);

/// Named words. A macro whose body is a single generator doubles as an alias
/// and is used for printing.
class MacroTable {
public:
    /// Throws ParseError on a bad name or a name clash with a generator.
    void define(const std::string& name, TwistWord body);
    bool contains(std::string_view name) const;
    const TwistWord& body(std::string_view name) const;
    const std::map<std::string, TwistWord, std::less<>>& entries() const { return macros_; }

    /// Alias name for a generator if some macro is exactly that generator.
    std::optional<std::string> alias_of(const Generator& g) const;

private:
    std::map<std::string, TwistWord, std::less<>> macros_;
};

/// Solves the star relation (T_a1 T_a2 T_a3 T_b)^3 = T_g1 T_g2 T_g3 for T_g1.
/// A missing gamma_2 or gamma_3 is a curve bounding a disk, i.e. trivial.
TwistWord star_relation(const Symbol& a1, const Symbol& a2, const Symbol& a3, const Symbol& b,
                        const std::optional<Symbol>& gamma2 = std::nullopt,
                        const std::optional<Symbol>& gamma3 = std::nullopt);

/// Grammar: whitespace-separated tokens `name` or `name^e`, e a nonzero
/// integer. Names are generator names valid for the alphabet or macro names.
TwistWord parse_word(std::string_view text, const GervaisAlphabet& alphabet,
                     const MacroTable& macros = {});

/// Lines `name = word` or `name = star(x1, x2, x3, y[, g2, g3])`; `#` starts a
/// comment. Definitions may refer to each other in any order but not cyclically.
MacroTable parse_macro_file(std::string_view text, const GervaisAlphabet& alphabet);

/// Replaces every macro by its body, recursively, and reduces. Throws
/// ParseError on an undefined or recursive macro.
TwistWord expand_macros(const TwistWord& w, const MacroTable& macros);

/// Removes twists about boundary-parallel curves, then reduces.
TwistWord drop_boundary_twists(const TwistWord& w);

enum class StepTag { BetaPositive, BetaNegative, Disjoint };
std::string to_string(StepTag tag);

/// One tag per single twist after expanding exponents. A positive twist about
/// beta moves the tuple to a negatively oriented good pair, so it is tagged
/// BetaNegative; an inverse twist is tagged BetaPositive. Throws ParseError on
/// macros or boundary twists.
std::vector<StepTag> classify_letters(const TwistWord& w);

/// Space-separated syllables, `name^e` when e != 1. Generators with an alias in
/// `aliases` print under the alias.
std::string format_word(const TwistWord& w, const MacroTable* aliases = nullptr);

/// Throws ParseError if a generator letter is not valid for the alphabet.
void check_letters(const TwistWord& w, const GervaisAlphabet& alphabet);

}  // namespace taut
