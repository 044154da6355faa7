#include "taut/branched_surface.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace taut {

std::string to_string(Cusp c) { return c == Cusp::In ? "in" : "out"; }
std::string to_string(SectorKind k) { return k == SectorKind::Vertical ? "vertical" : "horizontal"; }
std::string to_string(SinkKind k) { return k == SinkKind::SinkDisk ? "sink disk" : "half sink disk"; }

int Sector::count(Cusp c) const
{
    return static_cast<int>(
        std::count_if(segments.begin(), segments.end(), [c](const BranchSegment& s) { return s.cusp == c; }));
}

std::string Sector::type_name() const
{
    if (is_disk())
        return "disk";
    if (is_annulus())
        return "annulus";
    return "g" + std::to_string(genus) + "b" + std::to_string(boundary_count);
}

BranchedComplex build(const GoodSequence& seq)
{
    if (seq.steps.empty())
        throw std::invalid_argument("cannot build from an empty sequence");
    if (std::any_of(seq.steps.begin(), seq.steps.end(), [&](const SequenceStep& s) { return s.sign != seq.sign; }))
        throw std::invalid_argument("sequence is not uniformly oriented");

    const int k = seq.spec.boundary_count;
    const int n = seq.length();
    const auto pair = canonical_good_pair(seq.spec, seq.sign);
    std::vector<MarkedArc> arcs = pair.first.arcs;
    arcs.insert(arcs.end(), pair.second.arcs.begin(), pair.second.arcs.end());
    const CutResult cut = cut_along(pair.fiber.surface, arcs, CutOptions{true});

    std::vector<std::shared_ptr<const CellSurface>> pieces;
    for (const auto& comp : cut.components)
        pieces.push_back(std::make_shared<const CellSurface>(comp.surface));

    BranchedComplex c{seq.spec, seq.sign, n, {}, {}};
    const int per_level = static_cast<int>(cut.components.size()) + k;
    for (int i = 0; i < n; ++i) {
        const int base = i * per_level;
        for (int p = 0; p < static_cast<int>(cut.components.size()); ++p) {
            const auto& comp = cut.components[p];
            c.sectors.push_back(Sector{base + p, SectorKind::Horizontal, i, comp.genus, comp.boundary_count,
                                       comp.meets_original_boundary, {}, pieces[p]});
        }
        // D_i^j occupies [i/n, (i+1)/n] above alpha_i^j.
        for (int j = 1; j <= k; ++j)
            c.sectors.push_back(Sector{base + static_cast<int>(cut.components.size()) + j - 1,
                                       SectorKind::Vertical, i, 0, 1, true, {}, nullptr});
        c.level_info.push_back({2 * k, cut.crossings});
    }

    auto vertical = [&](int level, int j) -> Sector& {
        return c.sectors[((level % n + n) % n) * per_level + static_cast<int>(cut.components.size()) + j - 1];
    };
    for (int i = 0; i < n; ++i) {
        const int prev = i - 1;
        const int base = i * per_level;
        for (const auto& seg : cut.segments) {
            const bool arriving = seg.arc < k;
            const int j = arriving ? seg.arc + 1 : seg.arc - k + 1;
            const int alpha = arriving ? prev : i;
            const std::string name = "alpha" + std::to_string((alpha % n + n) % n) + "." + std::to_string(j) +
                                     "[" + std::to_string(seg.first_edge) + "]";
            auto& left = c.sectors[base + seg.left_component].segments;
            auto& right = c.sectors[base + seg.right_component].segments;
            if (arriving) {
                left.push_back({Cusp::In, name});
                right.push_back({Cusp::Out, name});
            } else {
                left.push_back({Cusp::Out, name});
                right.push_back({Cusp::Out, name});
            }
        }
        for (int j = 1; j <= k; ++j) {
            vertical(i, j).segments.push_back({Cusp::In, "alpha" + std::to_string(i) + "." + std::to_string(j) +
                                                             "@" + std::to_string(i)});
            vertical(prev, j).segments.push_back(
                {Cusp::Out, "alpha" + std::to_string((prev % n + n) % n) + "." + std::to_string(j) + "@" +
                                std::to_string(i)});
        }
    }
    return c;
}

std::vector<SinkFinding> find_sink_disks(const BranchedComplex& c)
{
    std::vector<SinkFinding> out;
    for (const auto& s : c.sectors) {
        if (!s.is_disk() || s.count(Cusp::Out) != 0)
            continue;
        out.push_back({s.id, s.meets_boundary ? SinkKind::HalfSinkDisk : SinkKind::SinkDisk});
    }
    return out;
}

AuditReport euler_audit(const BranchedComplex& c)
{
    AuditReport report;
    const int chi_f = c.spec.euler_characteristic();
    std::vector<long long> sums(c.levels, 0);
    int vertical = 0;
    for (const auto& s : c.sectors) {
        if (s.level < 0 || s.level >= c.levels) {
            report.failures.push_back("sector " + std::to_string(s.id) + " has no valid level");
            continue;
        }
        if (s.kind == SectorKind::Vertical) {
            ++vertical;
            if (!s.is_disk() || s.count(Cusp::In) != 1 || s.count(Cusp::Out) != 1)
                report.failures.push_back("product disk " + std::to_string(s.id) +
                                          " is not a disk with one cusp in and one out");
            continue;
        }
        if (!s.surface) {
            report.failures.push_back("sector " + std::to_string(s.id) + " carries no cells");
            continue;
        }
        const long long chi = s.surface->euler_characteristic();
        if (chi != s.euler_characteristic())
            report.failures.push_back("sector " + std::to_string(s.id) + " type " + s.type_name() +
                                      " disagrees with its cells (chi " + std::to_string(chi) + ")");
        sums[s.level] += chi;
    }
    if (vertical != c.levels * c.spec.boundary_count)
        report.failures.push_back("expected " + std::to_string(c.levels * c.spec.boundary_count) +
                                  " product disks, found " + std::to_string(vertical));
    for (int i = 0; i < c.levels; ++i) {
        const auto& info = i < static_cast<int>(c.level_info.size()) ? c.level_info[i] : LevelInfo{};
        LevelAudit level{i, sums[i], chi_f + info.arcs_cut + info.crossings};
        if (!level.ok())
            report.failures.push_back("level " + std::to_string(i) + ": sectors sum to chi " +
                                      std::to_string(level.chi_sum) + ", expected " +
                                      std::to_string(level.expected));
        report.levels.push_back(level);
    }
    return report;
}

std::string write_complex(const BranchedComplex& c)
{
    std::ostringstream out;
    out << "# genus=" << c.spec.genus << " boundary=" << c.spec.boundary_count << " levels=" << c.levels
        << " sign=" << to_string(c.sign) << "\n";
    for (const auto& s : c.sectors) {
        out << "sector id=" << s.id << " type=" << s.type_name() << " boundary=" << (s.meets_boundary ? "yes" : "no")
            << " cusps=";
        if (s.segments.empty())
            out << "none";
        for (std::size_t i = 0; i < s.segments.size(); ++i)
            out << (i ? "," : "") << to_string(s.segments[i].cusp);
        out << " kind=" << to_string(s.kind) << " level=" << s.level << "\n";
    }
    return out.str();
}

namespace {

int parse_int(std::string_view text, int line, std::string_view what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("line " + std::to_string(line) + ": bad " + std::string(what) + " '" +
                         std::string(text) + "'");
    return value;
}

void parse_type(std::string_view text, Sector& s, int line)
{
    if (text == "disk") {
        s.genus = 0;
        s.boundary_count = 1;
        return;
    }
    if (text == "annulus") {
        s.genus = 0;
        s.boundary_count = 2;
        return;
    }
    auto b = text.find('b');
    if (text.size() < 4 || text[0] != 'g' || b == std::string_view::npos)
        throw ParseError("line " + std::to_string(line) + ": bad type '" + std::string(text) + "'");
    s.genus = parse_int(text.substr(1, b - 1), line, "genus");
    s.boundary_count = parse_int(text.substr(b + 1), line, "boundary count");
    if (s.genus < 0 || s.boundary_count < 1)
        throw ParseError("line " + std::to_string(line) + ": bad type '" + std::string(text) + "'");
}

}  // namespace

BranchedComplex parse_complex(std::string_view text)
{
    BranchedComplex c;
    std::set<int> ids;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    int max_level = -1;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream tokens(raw);
        std::string head;
        if (!(tokens >> head))
            continue;
        if (head != "sector")
            throw ParseError("line " + std::to_string(line) + ": expected 'sector', got '" + head + "'");

        Sector s;
        std::set<std::string> seen;
        std::string field;
        while (tokens >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ParseError("line " + std::to_string(line) + ": expected key=value, got '" + field + "'");
            std::string key = field.substr(0, eq);
            std::string_view value = std::string_view(field).substr(eq + 1);
            if (!seen.insert(key).second)
                throw ParseError("line " + std::to_string(line) + ": duplicate field '" + key + "'");
            if (key == "id") {
                s.id = parse_int(value, line, "id");
            } else if (key == "type") {
                parse_type(value, s, line);
            } else if (key == "boundary") {
                if (value != "yes" && value != "no")
                    throw ParseError("line " + std::to_string(line) + ": boundary must be yes or no");
                s.meets_boundary = value == "yes";
            } else if (key == "cusps") {
                if (value == "none")
                    continue;
                std::size_t start = 0;
                while (start <= value.size()) {
                    auto comma = value.find(',', start);
                    auto item = value.substr(start, comma == std::string_view::npos ? value.npos : comma - start);
                    if (item == "in")
                        s.segments.push_back({Cusp::In, {}});
                    else if (item == "out")
                        s.segments.push_back({Cusp::Out, {}});
                    else
                        throw ParseError("line " + std::to_string(line) + ": bad cusp '" + std::string(item) + "'");
                    if (comma == std::string_view::npos)
                        break;
                    start = comma + 1;
                }
            } else if (key == "kind") {
                if (value == "vertical")
                    s.kind = SectorKind::Vertical;
                else if (value == "horizontal")
                    s.kind = SectorKind::Horizontal;
                else
                    throw ParseError("line " + std::to_string(line) + ": bad kind '" + std::string(value) + "'");
            } else if (key == "level") {
                s.level = parse_int(value, line, "level");
                if (s.level < 0)
                    throw ParseError("line " + std::to_string(line) + ": negative level");
                max_level = std::max(max_level, s.level);
            } else {
                throw ParseError("line " + std::to_string(line) + ": unknown field '" + key + "'");
            }
        }
        for (const char* required : {"id", "type", "boundary", "cusps"})
            if (!seen.count(required))
                throw ParseError("line " + std::to_string(line) + ": missing field '" + required + "'");
        if (!ids.insert(s.id).second)
            throw ParseError("line " + std::to_string(line) + ": duplicate sector id " + std::to_string(s.id));
        c.sectors.push_back(std::move(s));
    }
    c.levels = max_level + 1;
    return c;
}

}  // namespace taut
