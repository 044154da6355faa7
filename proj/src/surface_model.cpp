#include "taut/surface_model.hpp"

#include <algorithm>
#include <map>

namespace taut {

std::string to_string(PairSign sign)
{
    return sign == PairSign::Negative ? "negative" : "positive";
}

int expected_crossing_sign(PairSign sign)
{
    return sign == PairSign::Negative ? 1 : -1;
}

namespace {

// Cylinder m (0-based, m = 0 carries the handles) is a periodic grid of width
// width(m) and height kRows. Seam j (1-based) glues the bottom row of cylinder
// j mod k to the top row of cylinder j-1 along columns [0, seam_end]; the rest of
// both rows is boundary circle j. The twisted tuple runs through a band of
// columns [band_begin, band_end] inside the seam region.
class FiberGrid {
public:
    static constexpr int kRows = 4;

    explicit FiberGrid(SurfaceSpec spec) : spec_(spec)
    {
        spec.validate();
        const int k = spec.boundary_count;
        band_begin_ = 2;
        band_end_ = band_begin_ + band_steps();
        seam_end_ = band_end_ + 2;
        widths_.assign(k, seam_end_ + 4);
        widths_[0] += 5 * (spec.genus - 1);

        own_base_.resize(k);
        top_base_.resize(k);
        int next = 0;
        for (int m = 0; m < k; ++m) {
            own_base_[m] = next;
            next += widths_[m] * kRows;
            top_base_[m] = next;
            next += widths_[m] - (seam_end_ + 1);
        }
        vertex_count_ = next;
    }

    int k() const { return spec_.boundary_count; }
    int width(int m) const { return widths_[m]; }
    int seam_end() const { return seam_end_; }
    int loop_height() const { return k() * kRows; }
    int band_steps() const { return 2 * k() - 1; }

    VertexId vertex(int m, int x, int r) const
    {
        m = ((m % k()) + k()) % k();
        x = ((x % widths_[m]) + widths_[m]) % widths_[m];
        if (r < kRows)
            return own_base_[m] + r * widths_[m] + x;
        if (x <= seam_end_)
            return vertex(m + 1, x, 0);
        return top_base_[m] + (x - seam_end_ - 1);
    }

    // Seam-region vertex at global height y (periodic in the loop height).
    VertexId loop_vertex(int x, int y) const
    {
        y = ((y % loop_height()) + loop_height()) % loop_height();
        return vertex(y / kRows, x, y % kRows);
    }

    CellSurface build() const
    {
        std::vector<std::vector<VertexId>> faces;
        std::vector<std::pair<int, int>> holes;
        for (int h = 0; h + 1 < spec_.genus; ++h) {
            int x0 = seam_end_ + 2 + 5 * h;
            holes.push_back({x0, x0 + 3});
        }
        auto removed = [&](int m, int x, int r) {
            if (m != 0 || r != 1)
                return false;
            for (auto [a, b] : holes)
                if (x == a || x == b)
                    return true;
            return false;
        };
        for (int m = 0; m < k(); ++m)
            for (int r = 0; r < kRows; ++r)
                for (int x = 0; x < widths_[m]; ++x)
                    if (!removed(m, x, r))
                        faces.push_back(square(m, x, r));
        // Each handle is a tube of four quads joining two square holes with
        // opposite orientation.
        for (auto [a, b] : holes) {
            auto v = square(0, a, 1);
            auto w = square(0, b, 1);
            for (int i = 0; i < 4; ++i)
                faces.push_back({v[i], v[(i + 1) % 4], w[(4 - i) % 4], w[(5 - i) % 4]});
        }
        return CellSurface(vertex_count_, std::move(faces));
    }

    MarkedArc seam_arc(int j) const
    {
        MarkedArc arc{"alpha" + std::to_string(j), j, {}};
        for (int x = seam_end_; x >= 0; --x)
            arc.path.push_back(vertex(j, x, 0));
        return arc;
    }

    // Image of seam j under the twist about the core of the band, pushed off
    // the seam: leaves circle j above seam j, climbs once around the loop
    // inside the band and returns to circle j below the seam. `mirror`
    // reflects columns about the seam midpoint, giving the inverse twist.
    MarkedArc twisted_arc(int j, bool mirror) const
    {
        const int above = j * kRows;
        std::vector<VertexId> path;
        auto col = [&](int x) { return mirror ? seam_end_ - x : x; };
        const int start_m = j % k();
        path.push_back(vertex(start_m, col(width(start_m) - 1), 0));
        path.push_back(vertex(start_m, col(width(start_m) - 1), 1));
        for (int x = 0; x <= band_begin_; ++x)
            path.push_back(vertex(start_m, col(x), 1));
        int y = above + 1;
        for (int t = 0; t < band_steps(); ++t) {
            int x = band_begin_ + t;
            path.push_back(loop_vertex(col(x), y + 1));
            path.push_back(loop_vertex(col(x), y + 2));
            y += 2;
            path.push_back(loop_vertex(col(x + 1), y));
        }
        const int end_m = j - 1;
        for (int x = band_end_ + 1; x <= seam_end_ + 1; ++x)
            path.push_back(loop_vertex(col(x), y));
        path.push_back(vertex(end_m, col(seam_end_ + 1), kRows));
        if (!mirror)
            std::reverse(path.begin(), path.end());
        return MarkedArc{"beta" + std::to_string(j), j, std::move(path)};
    }

private:
    std::vector<VertexId> square(int m, int x, int r) const
    {
        return {vertex(m, x, r), vertex(m, x + 1, r), vertex(m, x + 1, r + 1), vertex(m, x, r + 1)};
    }

    SurfaceSpec spec_;
    int band_begin_ = 0;
    int band_end_ = 0;
    int seam_end_ = 0;
    std::vector<int> widths_;
    std::vector<int> own_base_;
    std::vector<int> top_base_;
    int vertex_count_ = 0;
};

FiberSurface make_fiber(const FiberGrid& grid, SurfaceSpec spec, const ParallelTuple& seams)
{
    CellSurface surface = grid.build();
    std::vector<int> labels(surface.vertex_count(), 0);
    for (const auto& cycle : surface.boundary_cycles()) {
        int label = 0;
        for (const auto& arc : seams.arcs)
            if (std::find(cycle.begin(), cycle.end(), arc.path.front()) != cycle.end())
                label = arc.tuple_index;
        if (label == 0)
            throw TopologyError("boundary circle carries no seam endpoint");
        for (VertexId v : cycle)
            labels[v] = label;
    }
    return FiberSurface{spec, std::move(surface), std::move(labels)};
}

std::size_t position_in(const std::vector<VertexId>& cycle, VertexId v)
{
    auto it = std::find(cycle.begin(), cycle.end(), v);
    if (it == cycle.end())
        throw TopologyError("endpoint not on the expected boundary circle");
    return static_cast<std::size_t>(it - cycle.begin());
}

}  // namespace

StandardTuple standard_parallel_tuple(SurfaceSpec spec)
{
    FiberGrid grid(spec);
    ParallelTuple tuple;
    for (int j = 1; j <= spec.boundary_count; ++j)
        tuple.arcs.push_back(grid.seam_arc(j));
    FiberSurface fiber = make_fiber(grid, spec, tuple);
    if (fiber.surface.euler_characteristic() != spec.euler_characteristic())
        throw TopologyError("standard complex has the wrong Euler characteristic");
    check_parallel_tuple(fiber, tuple);
    return StandardTuple{std::move(fiber), std::move(tuple)};
}

GoodPairConfiguration canonical_good_pair(SurfaceSpec spec, PairSign sign)
{
    FiberGrid grid(spec);
    ParallelTuple first;
    ParallelTuple second;
    for (int j = 1; j <= spec.boundary_count; ++j) {
        first.arcs.push_back(grid.seam_arc(j));
        second.arcs.push_back(grid.twisted_arc(j, sign == PairSign::Positive));
    }
    FiberSurface fiber = make_fiber(grid, spec, first);
    GoodPairConfiguration pair{std::move(fiber), std::move(first), std::move(second), sign};
    check_good_pair(pair);
    return pair;
}

void check_parallel_tuple(const FiberSurface& fiber, const ParallelTuple& tuple)
{
    const auto& spec = fiber.spec;
    const int k = spec.boundary_count;
    if (static_cast<int>(tuple.arcs.size()) != k)
        throw TopologyError("tuple has " + std::to_string(tuple.arcs.size()) + " arcs, expected " +
                            std::to_string(k));
    for (int j = 1; j <= k; ++j) {
        const auto& arc = tuple.arcs[j - 1];
        check_arc(fiber.surface, arc);
        if (arc.tuple_index != j || fiber.boundary_label[arc.path.front()] != j ||
            fiber.boundary_label[arc.path.back()] != j)
            throw TopologyError("arc '" + arc.label + "' does not end on boundary circle " +
                                std::to_string(j));
    }
    CutResult cut = cut_along(fiber.surface, tuple.arcs);
    if (static_cast<int>(cut.components.size()) != k)
        throw TopologyError("cutting the tuple gives " + std::to_string(cut.components.size()) +
                            " pieces, expected " + std::to_string(k));
    std::vector<int> left(k), right(k);
    for (const auto& seg : cut.segments) {
        left[seg.arc] = seg.left_component;
        right[seg.arc] = seg.right_component;
    }
    for (int j = 0; j < k; ++j) {
        const int next = (j + 1) % k;
        if (right[j] != left[next])
            throw TopologyError("arcs " + std::to_string(j + 1) + " and " + std::to_string(next + 1) +
                                " are not oriented in parallel");
        const auto& piece = cut.components[right[j]];
        if (next != 0 && !piece.is_annulus())
            throw TopologyError("piece between arcs " + std::to_string(j + 1) + " and " +
                                std::to_string(next + 1) + " is not an annulus");
        if (next == 0 && (piece.genus != spec.genus - 1 || piece.boundary_count != 2))
            throw TopologyError("last piece is not of genus g-1 with two boundary circles");
    }
}

void check_good_pair(const GoodPairConfiguration& pair)
{
    const auto& surface = pair.fiber.surface;
    check_parallel_tuple(pair.fiber, pair.first);
    check_parallel_tuple(pair.fiber, pair.second);
    const int k = pair.fiber.spec.boundary_count;
    const int sign = expected_crossing_sign(pair.sign);
    for (int i = 0; i < k; ++i) {
        const auto& a = pair.first.arcs[i];
        for (int j = 0; j < k; ++j) {
            const auto& b = pair.second.arcs[j];
            int expected = i == j ? 0 : 1;
            if (intersection_count(a, b) != expected)
                throw TopologyError("arcs '" + a.label + "' and '" + b.label + "' meet " +
                                    std::to_string(intersection_count(a, b)) + " times, expected " +
                                    std::to_string(expected));
            for (std::size_t p = 1; p + 1 < b.path.size(); ++p) {
                VertexId v = b.path[p];
                if (std::find(a.path.begin(), a.path.end(), v) == a.path.end())
                    continue;
                if (crossing_sign(surface, a, b, v) != sign)
                    throw TopologyError("crossing of '" + a.label + "' and '" + b.label +
                                        "' has the wrong sign for a " + to_string(pair.sign) +
                                        " pair");
            }
        }
    }
    // Near boundary circle j the endpoints interleave in the boundary
    // orientation as tail(a), head(b), head(a), tail(b) for a negative pair and
    // tail(a), tail(b), head(a), head(b) for a positive one.
    for (int j = 0; j < k; ++j) {
        const auto& a = pair.first.arcs[j].path;
        const auto& b = pair.second.arcs[j].path;
        const std::vector<VertexId>* circle = nullptr;
        for (const auto& cycle : surface.boundary_cycles())
            if (std::find(cycle.begin(), cycle.end(), a.front()) != cycle.end())
                circle = &cycle;
        if (circle == nullptr)
            throw TopologyError("arc endpoint off the boundary");
        const std::size_t n = circle->size();
        const std::size_t origin = position_in(*circle, a.front());
        auto rel = [&](VertexId v) { return (position_in(*circle, v) + n - origin) % n; };
        const VertexId inner = pair.sign == PairSign::Negative ? b.back() : b.front();
        const VertexId outer = pair.sign == PairSign::Negative ? b.front() : b.back();
        if (!(rel(inner) < rel(a.back()) && rel(a.back()) < rel(outer)))
            throw TopologyError("endpoints on boundary circle " + std::to_string(j + 1) +
                                " do not match the local picture");
    }
    cut_along(surface, [&] {
        std::vector<MarkedArc> all = pair.first.arcs;
        all.insert(all.end(), pair.second.arcs.begin(), pair.second.arcs.end());
        return all;
    }(), CutOptions{true});
}

}  // namespace taut
