#pragma once

#include "tropikit/dualcomplex.hpp"
#include "tropikit/split.hpp"
#include "tropikit/tropical.hpp"

namespace tropikit::scenes {

// Decomposition plus gluing for a family of coordinate cuts.
struct CutScene {
    Decomposition decomposition;
    GluingDatum gluing;
    std::vector<std::vector<int>> signs; // per member, entries -1/0/+1

    int member(const std::vector<int>& s) const;
};

// All 3^n sign patterns of cuts along the coordinate hyperplanes of R^n:
// n = 1 is a single cut, n = 2 the planar cross, n = 3 the octant cube.
// Dual cells are the faces of the unit cube [0,1]^n.
CutScene coordinate_cuts(int n);

// Single cut of the line with the interval dual [-1,1] and point duals at the
// ends.
CutScene line_single_cut();

// Same decomposition with the two endpoint duals exchanged (invalid gluing).
GluingDatum line_single_cut_swapped();

// Two parallel cuts of the line at 0 and 5; the dual complex is a path of two
// intervals.  Member order: (-inf,0], {0}, [0,5], {5}, [5,inf).
CutScene line_two_cuts();

// A cut scene with its dual complex and a graph drawn on it.
struct GraphScene {
    CutScene cut;
    DualComplex complex;
    TropicalGraph graph;
};

// Three-valent sphere at the center of the planar cross, one neighbour in
// each of the quadrants (+,+), (+,-), (-,+).  Rigid; symmetry of order 3.
GraphScene star_graph_three();

// Two-valent sphere at the center joined to the quadrants (+,-) and (+,+).
// Rigid; symmetry of order 2.
GraphScene star_graph_two();

// The three-valent star with one slope negated, so no weight exists.
GraphScene star_graph_infeasible();

// Two center spheres: one pinned by two quadrant edges, the other hanging
// off a single quadrant edge and joined to the first across the center.
// One-dimensional weight family.
GraphScene split_center_graph();

// A single disk in the quadrant (+,+) with its root leaf.
GraphScene single_disk_graph();

// Sphere at the center joined to opposite quadrants (+,+) and (-,-) by
// parallel edges; the weight slides along the diagonal.
GraphScene parallel_neck_graph();

// Center sphere pinned by two quadrant edges of opposite slopes, plus an
// edge into the quadrant (+,+).  Rigid; symmetry of order 2.
GraphScene pinned_center_graph();

// Two disks in the quadrant (+,+) joined by a boundary node, root leaf on
// the first.
GraphScene disk_pair_graph();

// A cut scene with a graph broken along split edges.
struct SplitScene {
    CutScene cut;
    DualComplex complex;
    SplitType type;
};

// Base: one neck edge across the planar cross from (+,+) to (-,-).  The
// refinement detaches the (+,+) endpoint into the square along (2,1).
SplitScene split_neck_inward();

// Same base; the refinement slides the (-,-) endpoint along the horizontal
// wall with a residual vertex left in the quadrant.
SplitScene split_neck_along_wall();

// Base path (-,-) -- (+,+), (-,-) -- (+,-) with both edges split.  The
// refinement moves the middle vertex along the single direction -(2,1), so
// the two split edges cannot deform independently.
SplitScene split_path_single_mover();

// Same base; the middle vertex moves along -(2,1) and -(1,0) independently
// through a chain of two collapsed edges.
SplitScene split_path_double_mover();

// Octant cube scene: one split edge of slope (1,1,1) between opposite
// corners, each endpoint deformed into a facet of the cube.
SplitScene split_cube_two_movers();

// The same scene with the split slope doubled to (2,2,2).
SplitScene split_cube_doubled();

// The pinned center graph with its single (+,+) edge declared split and the
// identity collapse; the center then slides along the anti-diagonal.
SplitScene split_pinned_center();

} // namespace tropikit::scenes
