#include "taut/cell_surface.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace taut {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

void SurfaceSpec::validate() const
{
    if (genus < 1)
        throw std::invalid_argument("genus must be >= 1, got " + std::to_string(genus));
    if (boundary_count < 2)
        throw std::invalid_argument("boundary count must be >= 2, got " +
                                    std::to_string(boundary_count));
}

CellSurface::CellSurface(int vertex_count, std::vector<std::vector<VertexId>> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces))
{
    certify();
}

void CellSurface::certify()
{
    if (vertex_count_ <= 0 || faces_.empty())
        throw TopologyError("empty complex");

    std::vector<bool> used(vertex_count_, false);
    for (FaceId f = 0; f < face_count(); ++f) {
        const auto& face = faces_[f];
        if (face.size() < 3)
            throw TopologyError("face " + std::to_string(f) + " has fewer than 3 sides");
        std::set<VertexId> seen;
        for (std::size_t i = 0; i < face.size(); ++i) {
            VertexId u = face[i];
            VertexId v = face[(i + 1) % face.size()];
            if (u < 0 || u >= vertex_count_)
                throw TopologyError("face " + std::to_string(f) + " has vertex out of range");
            if (!seen.insert(u).second)
                throw TopologyError("face " + std::to_string(f) + " repeats a vertex");
            used[u] = true;
            auto& info = edges_[key(u, v)];
            auto& slot = u < v ? info.forward : info.backward;
            if (slot)
                throw TopologyError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " traversed twice in the same direction");
            slot = f;
        }
    }
    for (VertexId v = 0; v < vertex_count_; ++v)
        if (!used[v])
            throw TopologyError("vertex " + std::to_string(v) + " lies on no face");

    // Rotation system: the corner (p, v, n) of a face makes p the ccw successor
    // of n around v.
    std::vector<std::map<VertexId, VertexId>> successor(vertex_count_);
    std::vector<std::set<VertexId>> neighbours(vertex_count_);
    for (const auto& face : faces_) {
        for (std::size_t i = 0; i < face.size(); ++i) {
            VertexId p = face[(i + face.size() - 1) % face.size()];
            VertexId v = face[i];
            VertexId n = face[(i + 1) % face.size()];
            successor[v][n] = p;
            neighbours[v].insert(n);
            neighbours[v].insert(p);
        }
    }

    boundary_vertex_.assign(vertex_count_, false);
    rotation_.assign(vertex_count_, {});
    for (VertexId v = 0; v < vertex_count_; ++v) {
        const auto& succ = successor[v];
        std::set<VertexId> targets;
        for (const auto& [n, p] : succ)
            targets.insert(p);
        std::vector<VertexId> starts;
        for (VertexId n : neighbours[v])
            if (!targets.count(n))
                starts.push_back(n);
        if (starts.size() > 1)
            throw TopologyError("vertex " + std::to_string(v) + " is not a manifold point");
        VertexId first = starts.empty() ? *neighbours[v].begin() : starts.front();
        boundary_vertex_[v] = !starts.empty();
        auto& order = rotation_[v];
        VertexId cur = first;
        while (true) {
            order.push_back(cur);
            auto it = succ.find(cur);
            if (it == succ.end() || it->second == first)
                break;
            cur = it->second;
            if (order.size() > neighbours[v].size())
                break;
        }
        if (order.size() != neighbours[v].size())
            throw TopologyError("faces around vertex " + std::to_string(v) +
                                " do not form a single fan");
    }

    // Boundary circles, traversed in the direction the adjacent face uses.
    std::map<VertexId, VertexId> boundary_next;
    for (const auto& [k, info] : edges_) {
        if (info.forward && info.backward)
            continue;
        auto [a, b] = k;
        auto [from, to] = info.forward ? std::pair{a, b} : std::pair{b, a};
        if (!boundary_next.emplace(from, to).second)
            throw TopologyError("vertex " + std::to_string(from) + " starts two boundary edges");
    }
    std::set<VertexId> visited;
    for (const auto& [start, _] : boundary_next) {
        if (visited.count(start))
            continue;
        std::vector<VertexId> cycle;
        VertexId cur = start;
        do {
            if (!visited.insert(cur).second)
                throw TopologyError("boundary is not a disjoint union of circles");
            cycle.push_back(cur);
            auto it = boundary_next.find(cur);
            if (it == boundary_next.end())
                throw TopologyError("boundary path does not close up");
            cur = it->second;
        } while (cur != start);
        boundary_cycles_.push_back(std::move(cycle));
    }

    DisjointSets sets(faces_.size());
    for (const auto& [k, info] : edges_)
        if (info.forward && info.backward)
            sets.unite(*info.forward, *info.backward);
    std::set<std::size_t> roots;
    for (std::size_t f = 0; f < faces_.size(); ++f)
        roots.insert(sets.find(f));
    components_ = static_cast<int>(roots.size());
}

int CellSurface::genus() const
{
    if (components_ != 1)
        throw TopologyError("genus is defined for connected surfaces only");
    int twice = 2 - euler_characteristic() - boundary_count();
    if (twice < 0 || twice % 2 != 0)
        throw TopologyError("inconsistent Euler characteristic " +
                            std::to_string(euler_characteristic()) + " with " +
                            std::to_string(boundary_count()) + " boundary circles");
    return twice / 2;
}

bool CellSurface::has_edge(VertexId u, VertexId v) const
{
    return edges_.count(key(u, v)) != 0;
}

bool CellSurface::is_boundary_edge(VertexId u, VertexId v) const
{
    auto it = edges_.find(key(u, v));
    return it != edges_.end() && !(it->second.forward && it->second.backward);
}

std::optional<FaceId> CellSurface::face_left_of(VertexId u, VertexId v) const
{
    auto it = edges_.find(key(u, v));
    if (it == edges_.end())
        return std::nullopt;
    return u < v ? it->second.forward : it->second.backward;
}

void check_arc(const CellSurface& surface, const MarkedArc& arc)
{
    const auto& path = arc.path;
    auto fail = [&](const std::string& why) {
        throw TopologyError("arc '" + arc.label + "' " + why);
    };
    if (path.size() < 2)
        fail("has fewer than two vertices");
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
        VertexId v = path[i];
        if (v < 0 || v >= surface.vertex_count())
            fail("has a vertex out of range");
        if (!seen.insert(v).second)
            fail("is not simple");
        bool end = i == 0 || i + 1 == path.size();
        if (end && !surface.is_boundary_vertex(v))
            fail("has an endpoint off the boundary");
        if (!end && surface.is_boundary_vertex(v))
            fail("touches the boundary in its interior");
        if (i + 1 < path.size()) {
            VertexId w = path[i + 1];
            if (!surface.has_edge(v, w))
                fail("steps along a non-edge");
            if (surface.is_boundary_edge(v, w))
                fail("runs along the boundary");
        }
    }
}

int intersection_count(const MarkedArc& a, const MarkedArc& b)
{
    std::set<VertexId> interior(a.path.begin() + 1, a.path.end() - 1);
    int count = 0;
    for (std::size_t i = 1; i + 1 < b.path.size(); ++i)
        count += static_cast<int>(interior.count(b.path[i]));
    return count;
}

namespace {

struct Through {
    VertexId in;
    VertexId out;
};

std::optional<Through> passage(const MarkedArc& arc, VertexId v)
{
    for (std::size_t i = 1; i + 1 < arc.path.size(); ++i)
        if (arc.path[i] == v)
            return Through{arc.path[i - 1], arc.path[i + 1]};
    return std::nullopt;
}

// Positions of a's and b's edges in the rotation at v, or nullopt when the
// vertex is not a transverse double point.
std::optional<std::array<std::size_t, 4>> crossing_positions(const CellSurface& surface,
                                                             const MarkedArc& a,
                                                             const MarkedArc& b, VertexId v)
{
    auto pa = passage(a, v);
    auto pb = passage(b, v);
    if (!pa || !pb)
        return std::nullopt;
    const auto& rot = surface.rotation(v);
    auto pos = [&](VertexId w) {
        return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), w) - rot.begin());
    };
    std::array<std::size_t, 4> p{pos(pa->out), pos(pb->out), pos(pa->in), pos(pb->in)};
    std::set<std::size_t> distinct(p.begin(), p.end());
    if (distinct.size() != 4 || *distinct.rbegin() >= rot.size())
        return std::nullopt;
    // Transverse iff a's two edges separate b's two edges in the cyclic order.
    auto between = [&](std::size_t x, std::size_t lo, std::size_t hi) {
        return lo < hi ? (x > lo && x < hi) : (x > lo || x < hi);
    };
    if (between(p[1], p[0], p[2]) == between(p[3], p[0], p[2]))
        return std::nullopt;
    return p;
}

}  // namespace

int crossing_sign(const CellSurface& surface, const MarkedArc& a, const MarkedArc& b, VertexId v)
{
    auto p = crossing_positions(surface, a, b, v);
    if (!p)
        throw TopologyError("arcs '" + a.label + "' and '" + b.label +
                            "' do not cross transversally at vertex " + std::to_string(v));
    const auto n = surface.rotation(v).size();
    // b_out sits in the ccw sector from a_out to a_in exactly when the sign is +1.
    std::size_t from = (*p)[0];
    std::size_t steps_b = ((*p)[1] + n - from) % n;
    std::size_t steps_a_in = ((*p)[2] + n - from) % n;
    return steps_b < steps_a_in ? 1 : -1;
}

CutResult cut_along(const CellSurface& surface, std::span<const MarkedArc> arcs, CutOptions options)
{
    for (const auto& arc : arcs)
        check_arc(surface, arc);

    std::set<std::pair<VertexId, VertexId>> cut_edges;
    for (const auto& arc : arcs) {
        for (std::size_t i = 0; i + 1 < arc.path.size(); ++i) {
            auto [u, v] = std::minmax(arc.path[i], arc.path[i + 1]);
            if (!cut_edges.insert({u, v}).second)
                throw TopologyError("arc '" + arc.label + "' shares an edge with another arc");
        }
    }

    // Which arcs pass through each vertex, and how.
    std::map<VertexId, std::vector<std::pair<int, bool>>> usage;  // (arc, is_endpoint)
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
        const auto& path = arcs[a].path;
        for (std::size_t i = 0; i < path.size(); ++i)
            usage[path[i]].push_back({a, i == 0 || i + 1 == path.size()});
    }
    std::set<VertexId> crossing_vertices;
    int crossings = 0;
    for (const auto& [v, users] : usage) {
        if (users.size() < 2)
            continue;
        if (users.size() > 2 || users[0].second || users[1].second)
            throw TopologyError("arcs meet at vertex " + std::to_string(v) +
                                " in a non-embedded way");
        const auto& a = arcs[users[0].first];
        const auto& b = arcs[users[1].first];
        if (!options.allow_crossings)
            throw TopologyError("arcs '" + a.label + "' and '" + b.label + "' cross");
        if (!crossing_positions(surface, a, b, v))
            throw TopologyError("arcs '" + a.label + "' and '" + b.label +
                                "' touch without crossing at vertex " + std::to_string(v));
        crossing_vertices.insert(v);
        ++crossings;
    }

    // Corners are (face, position). Uncut interior edges glue corners and faces.
    const auto& faces = surface.faces();
    std::vector<std::size_t> corner_base(faces.size() + 1, 0);
    for (std::size_t f = 0; f < faces.size(); ++f)
        corner_base[f + 1] = corner_base[f] + faces[f].size();
    auto corner = [&](FaceId f, VertexId v) {
        const auto& face = faces[f];
        auto it = std::find(face.begin(), face.end(), v);
        return corner_base[f] + static_cast<std::size_t>(it - face.begin());
    };

    DisjointSets corners(corner_base.back());
    DisjointSets face_sets(faces.size());
    for (FaceId f = 0; f < static_cast<FaceId>(faces.size()); ++f) {
        const auto& face = faces[f];
        for (std::size_t i = 0; i < face.size(); ++i) {
            VertexId u = face[i];
            VertexId v = face[(i + 1) % face.size()];
            if (u > v || cut_edges.count({u, v}))
                continue;
            auto g = surface.face_left_of(v, u);
            if (!g)
                continue;
            corners.unite(corner(f, u), corner(*g, u));
            corners.unite(corner(f, v), corner(*g, v));
            face_sets.unite(f, *g);
        }
    }

    std::map<std::size_t, int> component_of_root;
    std::vector<int> face_component(faces.size());
    for (std::size_t f = 0; f < faces.size(); ++f) {
        auto root = face_sets.find(f);
        auto [it, inserted] =
            component_of_root.emplace(root, static_cast<int>(component_of_root.size()));
        face_component[f] = it->second;
    }

    CutResult result;
    result.crossings = crossings;
    const int count = static_cast<int>(component_of_root.size());
    std::vector<std::vector<FaceId>> members(count);
    for (std::size_t f = 0; f < faces.size(); ++f)
        members[face_component[f]].push_back(static_cast<FaceId>(f));

    long long chi_sum = 0;
    for (int c = 0; c < count; ++c) {
        std::map<std::size_t, VertexId> relabel;
        std::vector<std::vector<VertexId>> piece;
        bool meets_boundary = false;
        for (FaceId f : members[c]) {
            std::vector<VertexId> face;
            const auto& src = faces[f];
            for (std::size_t i = 0; i < src.size(); ++i) {
                auto root = corners.find(corner_base[f] + i);
                auto [it, inserted] = relabel.emplace(root, static_cast<VertexId>(relabel.size()));
                face.push_back(it->second);
                if (surface.is_boundary_edge(src[i], src[(i + 1) % src.size()]))
                    meets_boundary = true;
            }
            piece.push_back(std::move(face));
        }
        CellSurface part(static_cast<int>(relabel.size()), std::move(piece));
        int genus = part.genus();
        int boundary = part.boundary_count();
        chi_sum += part.euler_characteristic();
        result.components.push_back(
            CutComponent{std::move(part), genus, boundary, members[c], meets_boundary});
    }

    const long long expected =
        surface.euler_characteristic() + static_cast<long long>(arcs.size()) + crossings;
    if (chi_sum != expected)
        throw TopologyError("Euler characteristic bookkeeping failed: pieces sum to " +
                            std::to_string(chi_sum) + ", expected " + std::to_string(expected));

    for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
        const auto& path = arcs[a].path;
        std::optional<ArcSegment> open;
        for (int e = 0; e + 1 < static_cast<int>(path.size()); ++e) {
            VertexId u = path[e];
            VertexId v = path[e + 1];
            int left = face_component[*surface.face_left_of(u, v)];
            int right = face_component[*surface.face_left_of(v, u)];
            if (open && (open->left_component != left || open->right_component != right))
                throw TopologyError("arc '" + arcs[a].label + "' changes sides between crossings");
            if (!open)
                open = ArcSegment{a, e, e, left, right};
            open->last_edge = e;
            if (crossing_vertices.count(v)) {
                result.segments.push_back(*open);
                open.reset();
            }
        }
        if (open)
            result.segments.push_back(*open);
    }
    return result;
}

}  // namespace taut
