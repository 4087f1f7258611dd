#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "placer/geometry.hpp"

namespace placer {

/// Canonical spatial relation vocabulary. Two families: nine table regions
/// (anchored on the workspace as a whole) and eight directions relative to a
/// reference object.
enum class Relation {
    // table regions
    LeftPart,
    RightPart,
    TopPart,
    BottomPart,
    Middle,
    TopLeftCorner,
    TopRightCorner,
    BottomLeftCorner,
    BottomRightCorner,
    // object directions
    Left,
    Right,
    Front,
    Behind,
    FrontLeft,
    FrontRight,
    BehindLeft,
    BehindRight,
};

bool is_table_region(Relation r);
bool is_object_dir(Relation r);

/// All nine table regions, in enum order.
std::span<const Relation> table_regions();
/// All eight object directions, in enum order.
std::span<const Relation> object_dirs();

/// Canonical lowercase name, e.g. "bottom right corner", "behind left".
std::string_view relation_name(Relation r);
std::optional<Relation> relation_from_name(std::string_view name);

/// Unit direction for an object relation. By the frame convention front faces
/// the viewer: left=(-1,0), right=(1,0), front=(0,-1), behind=(0,1);
/// diagonals are normalized sums.
Vec2 direction_vector(Relation r);

/// Cell of the uniform 3x3 partition of the workspace named by a table
/// region. "left part" is the middle-row left cell; corners map to corner
/// cells; "middle" is the center cell.
AABB region_bounds(Relation r, const Workspace& ws);

/// Raw <reference expression, relation expression> pair extracted from an
/// instruction. Both fields are non-empty free text.
struct RelationTuple {
    std::string ref_expr;
    std::string rel_expr;

    bool operator==(const RelationTuple&) const = default;
};

/// A tuple resolved against a scene: the index of the matched visual token
/// (N means the whole-workspace token) and a canonical relation. Table
/// regions pair only with the workspace token; object directions pair only
/// with object indices.
struct GroundedPair {
    int object_index = 0;
    Relation relation = Relation::Middle;

    bool operator==(const GroundedPair&) const = default;
};

} // namespace placer
