#pragma once

#include "linepin/generators.hpp"
#include "linepin/pinning.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace linepin::io {

using Json = nlohmann::ordered_json;

// malformed document; message names the offending field
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Document {
    int schema = 1;
    std::vector<Constraint> constraints;
    std::vector<ConvexPolytope> polytopes;
    Mat points;        // point sets / halfspace normals
    int dim = 0;
    Json options = Json::object();
};

Json rat(const Rat& r);
Json vec(const Vec& v);
Json vec3(const Vec3& v);
Json line(const LineCoords& u);

Rat parse_rat_field(const Json& j, const std::string& where);
Document parse_document(const std::string& text);
Json serialize(const Document& d);

// OFF-like vertex list: optional "OFF" header, a count line, then one vertex per line
ConvexPolytope parse_off(const std::string& text, const std::string& where);

Json certificate(const EscapeCertificate& c);
Json verdict(const PinningVerdict& v);
Json family(const NamedFamily& f);

} // namespace linepin::io
