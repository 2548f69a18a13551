#pragma once

#include <string>

#include "brauerlie/diagram/morphism.hpp"
#include "json.hpp"

namespace brauerlie {

using Json = nlohmann::ordered_json;

enum class RenderFormat { text, tikz, json };
RenderFormat render_format_from_name(const std::string& name);

std::string render(const DiagMorphism& f, RenderFormat format);

Json to_json(const DiagMorphism& f);
DiagMorphism diag_from_json(const Json& j);
Json vector_to_json(const std::vector<Rational>& v);

}  // namespace brauerlie
