#pragma once

#include "leibrack/digroup.hpp"
#include "leibrack/leibniz.hpp"
#include "leibrack/lierack.hpp"
#include "leibrack/rack.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace leibrack {

/// Schema or syntax problem in an input file; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);

// Rationals travel as strings "p/q" ("/q" omitted when 1) in every format.

// { "dim": n, "basis": [names], "brackets": [{"i":., "j":., "val": [..]}] },
// omitted pairs mean zero.
LeibnizAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const LeibnizAlgebra& g);

// { "module_dim": d, "rho": [matrices] }
Representation representation_from_json(const nlohmann::json& j);
nlohmann::json representation_to_json(const Representation& rep);

// { "dim": n, "basis": [names], "vdash": [{i,j,val}], "dashv": [{i,j,val}] }
Dialgebra dialgebra_from_json(const nlohmann::json& j);
nlohmann::json dialgebra_to_json(const Dialgebra& d);

// { "size": n, "point": i, "table": [[..]] }
FiniteRack rack_from_json(const nlohmann::json& j);
nlohmann::json rack_to_json(const FiniteRack& q);

// rack fields plus "inv"
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

// { "size": n, "unit": i, "vdash": [[..]], "dashv": [[..]], "inv": [..] }
FiniteDigroup digroup_from_json(const nlohmann::json& j);
nlohmann::json digroup_to_json(const FiniteDigroup& g);

// { "ambient": m, "lie_basis": [m×m], "module_dim": d, "rho": [d×d] }, floats
LinearLieGroupModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const LinearLieGroupModel& m);

// { "ambient_dim": n, "basis": [[rational strings]] }
Subspace subspace_from_json(const nlohmann::json& j);
nlohmann::json subspace_to_json(const Subspace& s);

}  // namespace leibrack
