#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taut {

using VertexId = std::int32_t;
using FaceId = std::int32_t;

class TopologyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Compact oriented surface of genus g >= 1 with k >= 2 boundary circles.
struct SurfaceSpec {
    int genus = 1;
    int boundary_count = 2;

    int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }

    /// Throws std::invalid_argument unless genus >= 1 and boundary_count >= 2.
    void validate() const;

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// A polygonal cell complex whose faces are oriented vertex cycles.
///
/// Construction certifies that the complex is an oriented surface with
/// boundary: every edge borders one or two faces, an edge shared by two faces
/// is traversed in opposite directions, and the faces around every vertex form
/// a single fan (a disk, or a half-disk at boundary vertices). Edges are
/// identified by their endpoint pair, so the complex must have no multi-edges.
class CellSurface {
public:
    CellSurface(int vertex_count, std::vector<std::vector<VertexId>> faces);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }
    int boundary_count() const { return static_cast<int>(boundary_cycles_.size()); }
    int connected_components() const { return components_; }
    /// Genus of a connected surface, from chi = 2 - 2g - b.
    int genus() const;

    const std::vector<std::vector<VertexId>>& faces() const { return faces_; }

    bool has_edge(VertexId u, VertexId v) const;
    bool is_boundary_edge(VertexId u, VertexId v) const;
    bool is_boundary_vertex(VertexId v) const { return boundary_vertex_[v]; }

    /// The face that traverses u -> v, i.e. the face to the left of the
    /// directed edge.
    std::optional<FaceId> face_left_of(VertexId u, VertexId v) const;

    /// Neighbours of v in counter-clockwise order. At a boundary vertex the list
    /// starts at the boundary edge whose ccw successor exists.
    const std::vector<VertexId>& rotation(VertexId v) const { return rotation_[v]; }

    /// Boundary circles as vertex cycles, each traversed in the boundary
    /// orientation induced from the surface.
    const std::vector<std::vector<VertexId>>& boundary_cycles() const { return boundary_cycles_; }

private:
    struct EdgeInfo {
        std::optional<FaceId> forward;   // face traversing min -> max
        std::optional<FaceId> backward;  // face traversing max -> min
    };

    static std::pair<VertexId, VertexId> key(VertexId u, VertexId v)
    {
        return u < v ? std::pair{u, v} : std::pair{v, u};
    }

    void certify();

    int vertex_count_;
    std::vector<std::vector<VertexId>> faces_;
    std::map<std::pair<VertexId, VertexId>, EdgeInfo> edges_;
    std::vector<bool> boundary_vertex_;
    std::vector<std::vector<VertexId>> rotation_;
    std::vector<std::vector<VertexId>> boundary_cycles_;
    int components_ = 0;
};

/// A properly embedded oriented arc following edges of a CellSurface.
struct MarkedArc {
    std::string label;
    int tuple_index = 0;  // 1-based boundary index j
    std::vector<VertexId> path;
};

struct CutOptions {
    /// Arcs may share interior vertices where they cross transversally.
    bool allow_crossings = false;
};

/// A maximal run of an arc between crossing points, with the cut components on
/// its two sides.
struct ArcSegment {
    int arc = 0;
    int first_edge = 0;
    int last_edge = 0;
    int left_component = 0;
    int right_component = 0;
};

struct CutComponent {
    CellSurface surface;
    int genus = 0;
    int boundary_count = 0;
    std::vector<FaceId> source_faces;
    /// True when some boundary edge of the original surface survives here.
    bool meets_original_boundary = false;

    int euler_characteristic() const { return surface.euler_characteristic(); }
    bool is_disk() const { return genus == 0 && boundary_count == 1; }
    bool is_annulus() const { return genus == 0 && boundary_count == 2; }
};

struct CutResult {
    std::vector<CutComponent> components;
    std::vector<ArcSegment> segments;
    /// Interior points shared by two arcs.
    int crossings = 0;
};

/// Checks that `arc` is a simple edge path from boundary to boundary with no
/// interior vertex on the boundary. Throws TopologyError.
void check_arc(const CellSurface& surface, const MarkedArc& arc);

/// Cuts along the arcs and classifies the pieces by (chi, boundary count).
/// Verifies sum chi(pieces) = chi(F) + #arcs + #crossings and throws
/// TopologyError on any violation, including non-transverse or disallowed
/// intersections.
CutResult cut_along(const CellSurface& surface, std::span<const MarkedArc> arcs,
                    CutOptions options = {});

/// Number of interior points shared by two arcs (transverse crossings).
int intersection_count(const MarkedArc& a, const MarkedArc& b);

/// Algebraic sign (+1/-1) of the crossing of `a` and `b` at vertex v, read off
/// the rotation system: +1 when b's outgoing edge follows a's outgoing edge
/// counter-clockwise.
int crossing_sign(const CellSurface& surface, const MarkedArc& a, const MarkedArc& b, VertexId v);

}  // namespace taut
