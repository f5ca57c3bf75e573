#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qcreg/constructions.hpp"
#include "qcreg/decomp.hpp"
#include "qcreg/group_table.hpp"
#include "qcreg/identities.hpp"

namespace qcreg {

using nlohmann::json;

// Scalars: {"N": order, "coeffs": ["p/q", ...]} with coeffs of length phi(N).
json scalar_to_json(const Cyclotomic& c);
Cyclotomic scalar_from_json(const json& j);

json element_to_json(const Element& e);
Element element_from_json(const json& j);

// {"dim","N","unit","structure":[[i,j,k,scalar]...],"components":[[off,size]...]|null}
json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const json& j);

// {"algebra": <inline object or file path string>, "components":[[[scalar...]...]...]}
json decomposition_to_json(const Decomposition& d);
// dir resolves a file-path "algebra" reference relative to the input file.
Decomposition decomposition_from_json(const json& j, const std::string& dir = ".");

json cayley_to_json(const CayleyTable& t);
CayleyTable cayley_from_json(const json& j);

json cocycle_to_json(const Cocycle& a);
Cocycle cocycle_from_json(const json& j);

json theta_to_json(const ThetaTable& t);
ThetaTable theta_from_json(const json& j);

json poly_to_json(const MultilinearPoly& p);
MultilinearPoly poly_from_json(const json& j);

json make_report(const std::string& check, bool pass, json certificate);

/// One scalar as CSV text: "zeta(N)^k" for roots of unity, else the
/// power-basis coefficient vector "[c0;c1;...]@N".
std::string scalar_to_csv(const Cyclotomic& c);

/// Comma-separated rows of the table entries.
std::string theta_to_csv(const ThetaTable& t);

}  // namespace qcreg
