#ifndef PLRK_JSON_IO_HPP
#define PLRK_JSON_IO_HPP

#include "plrk/crossed.hpp"
#include "plrk/extensions.hpp"
#include "plrk/rmatrix.hpp"
#include "plrk/twoalg.hpp"

#include <json.hpp>

namespace plrk {

using Json = nlohmann::ordered_json;

// canonical serializers (deterministic field and entry order)
Json ring_to_json(const RingPtr& ring);
Json element_to_json(const Element& e);
Json vf_to_json(const VectorField& v);
Json matrix_to_json(const LinearMap& m);
Json structure_to_json(const PreLieRinehartData& d);
Json structure_to_json(const LieRinehartData& d);
Json representation_to_json(const Representation& rep);
Json cochain_to_json(const Cochain& c); // values only + shape; rep carried separately
Json cochain_with_rep_to_json(const Representation& rep, const Cochain& c);
Json extension_to_json(const ExtensionData& x);
Json crossed_module_to_json(const CrossedModuleData& cm);
Json crossed_extension_to_json(const CrossedExtensionData& xd);
Json twoalg_to_json(const PreLie2Data& x);
Json report_to_json(const Report& r);

// parsers; throw plrk::error with a message on schema violations
RingPtr ring_from_json(const Json& j);
Element element_from_json(const ModulePtr& mod, const Json& j);
VectorField vf_from_json(const RingPtr& ring, const Json& j);
LinearMap matrix_from_json(const ModulePtr& dom, const ModulePtr& cod, const Json& j);
PreLieRinehartData prelie_structure_from_json(const Json& j);
LieRinehartData lie_structure_from_json(const Json& j);
Representation representation_from_json(const Json& j);
std::pair<Representation, Cochain> cochain_with_rep_from_json(const Json& j);
ExtensionData extension_from_json(const Json& j);
CrossedModuleData crossed_module_from_json(const Json& j);
CrossedExtensionData crossed_extension_from_json(const Json& j);
PreLie2Data twoalg_from_json(const Json& j);

struct RMatrixInput {
    LieAlgebraFD lie;
    ActionData action;
    RMatrix r;
};
RMatrixInput rmatrix_input_from_json(const Json& j);
Json rmatrix_input_to_json(const RMatrixInput& in);

std::string file_kind(const Json& j);
Json load_json_file(const std::string& path);

} // namespace plrk

#endif
