#include "hirsch/io.hpp"

namespace hirsch {

namespace {

RatVec coords_from_json(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array() || arr.empty())
        throw Error(ErrorCode::Parse, std::string(what) + " must be a nonempty array");
    RatVec out;
    for (const auto& c : arr) {
        if (!c.is_string())
            throw Error(ErrorCode::Parse, std::string(what) + " entries must be rational strings");
        out.push_back(parse_rational(c.get<std::string>()));
    }
    return out;
}

nlohmann::json coords_to_json(const RatVec& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : v) arr.push_back(rational_to_string(c));
    return arr;
}

}  // namespace

PolytopeDocument document_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw Error(ErrorCode::Parse, "document is not a JSON object");
    if (!doc.contains("format") || !doc["format"].is_number_integer() ||
        doc["format"].get<int>() != kDocumentFormat)
        throw Error(ErrorCode::Parse, "missing or unsupported format version");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        throw Error(ErrorCode::Parse, "missing dim");
    if (!doc.contains("halfspaces") || !doc["halfspaces"].is_array())
        throw Error(ErrorCode::Parse, "missing halfspaces array");

    PolytopeDocument out;
    out.system.dim = doc["dim"].get<int>();
    for (const auto& h : doc["halfspaces"]) {
        if (!h.is_object() || !h.contains("normal") || !h.contains("offset") ||
            !h["offset"].is_string())
            throw Error(ErrorCode::Parse, "halfspace needs a normal array and offset string");
        Halfspace hs;
        hs.normal = coords_from_json(h["normal"], "normal");
        if (static_cast<int>(hs.normal.size()) != out.system.dim)
            throw Error(ErrorCode::Parse, "normal length does not match dim");
        hs.offset = parse_rational(h["offset"].get<std::string>());
        out.system.halfspaces.push_back(std::move(hs));
    }
    if (doc.contains("marks")) {
        const auto& m = doc["marks"];
        if (!m.is_object() || !m.contains("x") || !m.contains("y"))
            throw Error(ErrorCode::Parse, "marks need x and y coordinate arrays");
        RatVec mx = coords_from_json(m["x"], "marks.x");
        RatVec my = coords_from_json(m["y"], "marks.y");
        if (static_cast<int>(mx.size()) != out.system.dim ||
            static_cast<int>(my.size()) != out.system.dim)
            throw Error(ErrorCode::Parse, "mark length does not match dim");
        out.marks = {std::move(mx), std::move(my)};
    }
    return out;
}

PolytopeDocument parse_polytope_document(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorCode::Parse, "malformed JSON");
    return document_from_json(doc);
}

nlohmann::json document_to_json(const HalfspaceSystem& sys,
                                const std::optional<std::pair<RatVec, RatVec>>& marks) {
    nlohmann::json doc;
    doc["format"] = kDocumentFormat;
    doc["dim"] = sys.dim;
    nlohmann::json hs = nlohmann::json::array();
    for (const Halfspace& h : sys.halfspaces)
        hs.push_back({{"normal", coords_to_json(h.normal)},
                      {"offset", rational_to_string(h.offset)}});
    doc["halfspaces"] = std::move(hs);
    if (marks)
        doc["marks"] = {{"x", coords_to_json(marks->first)}, {"y", coords_to_json(marks->second)}};
    return doc;
}

nlohmann::json polytope_to_json(const Polytope& p, int mark_x, int mark_y) {
    std::optional<std::pair<RatVec, RatVec>> marks;
    if (mark_x >= 0 && mark_y >= 0)
        marks = {p.vertices()[mark_x].point, p.vertices()[mark_y].point};
    return document_to_json(p.system(), marks);
}

std::pair<int, int> resolve_marks(const Polytope& p, const RatVec& x, const RatVec& y) {
    const int ix = p.vertex_index(x);
    if (ix < 0)
        throw Error(ErrorCode::MarkNotVertex, "mark x (" + coords_to_string(x) + ") is not a vertex");
    const int iy = p.vertex_index(y);
    if (iy < 0)
        throw Error(ErrorCode::MarkNotVertex, "mark y (" + coords_to_string(y) + ") is not a vertex");
    return {ix, iy};
}

}  // namespace hirsch
