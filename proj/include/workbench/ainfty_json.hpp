#pragma once

#include <json.hpp>

#include "workbench/ainfty.hpp"

namespace wb::ainfty {

using Json = nlohmann::json;

// Tables are lists of {"in": [ids], "out": {id: coeff}}; ids resolve against the relevant bases.
Json to_json(const Category& cat);
Category category_from_json(const Json& j);

Json to_json(const Functor& f, const Category& src, const Category& dst);
Functor functor_from_json(const Json& j, const Category& src, const Category& dst);

Json to_json(const Homotopy& h, const Category& src, const Category& dst);
Homotopy homotopy_from_json(const Json& j, const Category& src, const Category& dst);

Json to_json(const ResidualReport& rep, const GradedHom& in, const GradedHom& out);

}  // namespace wb::ainfty
