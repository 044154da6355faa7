#pragma once

#include "taut/cell_surface.hpp"

#include <string>
#include <vector>

namespace taut {

enum class PairSign { Negative, Positive };

std::string to_string(PairSign sign);
inline PairSign opposite(PairSign s) { return s == PairSign::Negative ? PairSign::Positive : PairSign::Negative; }

/// k oriented arcs, arc j (1-based, stored at index j-1) with both endpoints
/// on boundary circle j.
struct ParallelTuple {
    std::vector<MarkedArc> arcs;
};

/// The fiber surface F with boundary circles labelled 1..k.
struct FiberSurface {
    SurfaceSpec spec;
    CellSurface surface;
    /// For every vertex, the label (1..k) of its boundary circle, or 0.
    std::vector<int> boundary_label;
};

struct StandardTuple {
    FiberSurface fiber;
    ParallelTuple tuple;
};

/// Two parallel tuples forming a good pair. `first` plays the role of the
/// earlier tuple of a sequence step and `second` its image.
struct GoodPairConfiguration {
    FiberSurface fiber;
    ParallelTuple first;
    ParallelTuple second;
    PairSign sign = PairSign::Negative;
};

/// The standard cell structure on F_{g,k}: k stacked grid cylinders glued in a
/// ring along partial seams, with g-1 tubes attached to the last cylinder. The
/// seams are the arcs of the standard tuple.
StandardTuple standard_parallel_tuple(SurfaceSpec spec);

/// The standard tuple together with its image under the twist about the
/// distinguished curve (negative sign) or its inverse (positive sign).
GoodPairConfiguration canonical_good_pair(SurfaceSpec spec, PairSign sign);

/// Throws TopologyError unless the tuple is parallel: arc j ends on circle j,
/// cutting gives k pieces, right(j) = left(j+1) is an annulus for j < k, and
/// right(k) = left(1) has genus g-1.
void check_parallel_tuple(const FiberSurface& fiber, const ParallelTuple& tuple);

/// Throws TopologyError unless both tuples are parallel, |first_i ∩ second_j|
/// = 1 - delta_ij, and the crossings and boundary endpoints match the local
/// picture for `sign`.
void check_good_pair(const GoodPairConfiguration& pair);

/// Crossing sign shared by every first_i / second_j crossing of a pair.
int expected_crossing_sign(PairSign sign);

}  // namespace taut
