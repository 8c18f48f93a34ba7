#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trackcube/drawing.hpp"
#include "trackcube/pattern.hpp"
#include "trackcube/pocset.hpp"
#include "trackcube/resolution.hpp"

namespace trackcube {

using nlohmann::json;

json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& content);

// Loaders collect warnings for unknown fields instead of failing.
RawComplex complex_from_json(const json& j, std::vector<std::string>* warnings = nullptr);
RawDrawing drawing_from_json(const json& j, std::vector<std::string>* warnings = nullptr);
RawPocset pocset_from_json(const json& j, std::vector<std::string>* warnings = nullptr);
VertexMap vertex_map_from_json(const json& j, const SimplicialComplex2& k,
                               const CubeComplex& x);

json complex_to_json(const SimplicialComplex2& k);
json drawing_to_json(const SimplicialComplex2& k, const Drawing& d);
json pattern_to_json(const SimplicialComplex2& k, const Pattern& p);
json pocset_to_json(const Pocset& p);

} // namespace trackcube
