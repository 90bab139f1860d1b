#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "hirsch/polytope.hpp"

namespace hirsch {

// On-disk polytope document. Rationals cross the boundary as strings, never
// as floats, and marks are coordinate lists so documents stay valid under
// any vertex reordering.
struct PolytopeDocument {
    HalfspaceSystem system;
    std::optional<std::pair<RatVec, RatVec>> marks;  // coordinates of x, y
};

inline constexpr int kDocumentFormat = 1;

PolytopeDocument document_from_json(const nlohmann::json& doc);      // EParse
PolytopeDocument parse_polytope_document(const std::string& text);   // EParse

nlohmann::json document_to_json(const HalfspaceSystem& sys,
                                const std::optional<std::pair<RatVec, RatVec>>& marks);

nlohmann::json polytope_to_json(const Polytope& p, int mark_x = -1, int mark_y = -1);

// Exact-coordinate match of marks against the vertex list; throws
// EMarkNotVertex.
std::pair<int, int> resolve_marks(const Polytope& p, const RatVec& x, const RatVec& y);

}  // namespace hirsch
