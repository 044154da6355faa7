#pragma once

#include "taut/sequence.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace taut {

enum class Cusp { In, Out };
enum class SectorKind { Vertical, Horizontal };

std::string to_string(Cusp c);
std::string to_string(SectorKind k);

/// A branch segment on the boundary of a sector and its cusp direction
/// relative to that sector.
struct BranchSegment {
    Cusp cusp = Cusp::In;
    std::string label;
};

struct Sector {
    int id = 0;
    SectorKind kind = SectorKind::Horizontal;
    /// Level i in Z/n; -1 for sectors read from a file without one.
    int level = -1;
    int genus = 0;
    int boundary_count = 1;
    bool meets_boundary = false;
    std::vector<BranchSegment> segments;
    /// The piece of F_i a horizontal sector came from, when built.
    std::shared_ptr<const CellSurface> surface;

    bool is_disk() const { return genus == 0 && boundary_count == 1; }
    bool is_annulus() const { return genus == 0 && boundary_count == 2; }
    int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }
    int count(Cusp c) const;
    /// "disk", "annulus" or "g<G>b<B>".
    std::string type_name() const;
};

struct LevelInfo {
    int arcs_cut = 0;
    int crossings = 0;
};

/// The combinatorial branched surface: n copies of the fiber cut along
/// consecutive tuples, joined by the product disks over the arcs.
struct BranchedComplex {
    SurfaceSpec spec;
    PairSign sign = PairSign::Negative;
    int levels = 0;
    std::vector<Sector> sectors;
    std::vector<LevelInfo> level_info;
};

/// Cusps follow the transverse orientation of increasing t. Along a departing
/// arc the product disk receives the cusp and both fiber sides release it;
/// along an arriving arc the cusp points into the fiber sector on the arc's
/// left and out of the other two.
BranchedComplex build(const GoodSequence& seq);

enum class SinkKind { SinkDisk, HalfSinkDisk };
std::string to_string(SinkKind k);

struct SinkFinding {
    int sector = 0;
    SinkKind kind = SinkKind::SinkDisk;
    friend bool operator==(const SinkFinding&, const SinkFinding&) = default;
};

/// Disk sectors all of whose branch segments have the cusp pointing in. Those
/// that meet the boundary of M are half sink disks.
std::vector<SinkFinding> find_sink_disks(const BranchedComplex& c);

struct LevelAudit {
    int level = 0;
    long long chi_sum = 0;
    long long expected = 0;
    bool ok() const { return chi_sum == expected; }
};

struct AuditReport {
    std::vector<LevelAudit> levels;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Recounts the Euler characteristic of every horizontal sector from its cells
/// and checks, per level, sum chi = chi(F) + arcs cut + crossings. Also checks
/// the product disks: n*k of them, each a disk with one cusp in and one out.
AuditReport euler_audit(const BranchedComplex& c);

/// One line per sector:
///   sector id=<id> type=<disk|annulus|g<G>b<B>> boundary=<yes|no> cusps=<in,out,...|none>
/// optionally followed by kind=<vertical|horizontal> level=<i>. `#` starts a
/// comment.
std::string write_complex(const BranchedComplex& c);
/// Throws ParseError on malformed input.
BranchedComplex parse_complex(std::string_view text);

}  // namespace taut
