#include "hirsch/rational.hpp"

#include <cctype>
#include <sstream>

namespace hirsch {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return "EParse";
        case ErrorCode::Invalid: return "EInvalid";
        case ErrorCode::MarkNotVertex: return "EMarkNotVertex";
        case ErrorCode::Unbounded: return "EUnbounded";
        case ErrorCode::LowDim: return "ELowDim";
        case ErrorCode::NotSimple: return "ENotSimple";
        case ErrorCode::NotCandidate: return "ENotCandidate";
        case ErrorCode::NotDantzig: return "ENotDantzig";
        case ErrorCode::NonGeneric: return "ENonGeneric";
        case ErrorCode::Degenerate: return "EDegenerate";
        case ErrorCode::NoCrossing: return "ENoCrossing";
        case ErrorCode::ProtectedVertex: return "EProtectedVertex";
        case ErrorCode::NotDantzigAfter: return "ENotDantzigAfter";
        case ErrorCode::SeparationFailed: return "ESeparationFailed";
        case ErrorCode::Undeformable: return "EUndeformable";
        case ErrorCode::EndpointLost: return "EEndpointLost";
        case ErrorCode::ShapeMismatch: return "EShapeMismatch";
        case ErrorCode::BudgetExceeded: return "EBudgetExceeded";
        case ErrorCode::SamplerExhausted: return "ESamplerExhausted";
        case ErrorCode::Disconnected: return "EDisconnected";
        case ErrorCode::BadArgument: return "EBadArgument";
        case ErrorCode::Internal: return "EInternal";
    }
    return "EUnknown";
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::BadArgument, "dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool is_zero_vec(const RatVec& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

namespace {

bool valid_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error(ErrorCode::Parse, "empty rational literal");
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int_token(s)) throw Error(ErrorCode::Parse, "bad rational literal '" + text + "'");
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_int_token(num) || !valid_int_token(den))
        throw Error(ErrorCode::Parse, "bad rational literal '" + text + "'");
    Integer d(den);
    if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

RatVec parse_coords(const std::string& text, int expected_dim) {
    RatVec out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(parse_rational(token));
    if (expected_dim >= 0 && out.size() != static_cast<std::size_t>(expected_dim))
        throw Error(ErrorCode::Parse, "expected " + std::to_string(expected_dim) +
                                          " coordinates in '" + text + "'");
    return out;
}

std::string coords_to_string(const RatVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rational_to_string(v[i]);
    }
    return out;
}

}  // namespace hirsch
