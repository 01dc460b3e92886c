#pragma once

#include <nlohmann/json.hpp>

#include "gerbel/assoc.hpp"
#include "gerbel/carriers.hpp"
#include "gerbel/gerbe.hpp"

namespace gerbel::json_io {

using nlohmann::json;

// Complex numbers are 2-element arrays [re, im]; matrices and vectors are
// (nested) arrays of those; group maps are index arrays.

json to_json(const Complex& z);
Complex complex_from_json(const json& j);

json to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json to_json(const Report& r);
Report report_from_json(const json& j);

json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json to_json(const CrossedModule& cm);
// Inline form: {"g": <group>, "h": <group>, "t": [...], "alpha": [[...]]}.
CrossedModule crossed_module_from_json(const json& j);

json to_json(const TwoGroup& g);
TwoGroup two_group_from_json(const json& j);

json to_json(const StarAlgebra& a);
StarAlgebra algebra_from_json(const json& j);

json to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const StarAlgebra& a, const json& j);

// {"kind": "inner", "u": <element>} or {"kind": "linear", "matrix": <matrix>}.
json to_json(const Automorphism& t);
Automorphism automorphism_from_json(const StarAlgebra& a, const json& j);

// Representations carry indices into their own r0 table:
// {"r0": [<automorphism>...], "r1": [{"theta1": i, "u": <matrix>, "theta2": j}...]}.
json representation_to_json(const Representation& r);
Representation representation_from_json(const TwoGroup& g, const StarAlgebra& a,
                                        const json& j);

json to_json(const Cover& c);
Cover cover_from_json(const json& j);

// {"base_points": n, "proj": [...], "action": [[...]], "anchor": [...]}.
json bundle_to_json(const PrincipalTwoBundle& p);
PrincipalTwoBundle bundle_from_json(const TwoGroup& g,
                                    const CrossedModuleOfTwoGroup& crossed,
                                    const json& j);

// {"cover": ..., "p": ..., "mu": [...]} or
// {"cover": ..., "cocycle": {"g": [...], "h": [...]}}.
json gerbe_to_json(const BundleGerbe& q);
BundleGerbe gerbe_from_json(const TwoGroup& g,
                            const CrossedModuleOfTwoGroup& crossed,
                            const json& j);

json bimodule_to_json(const Bimodule& m);
// Inline form with explicit tables, or {"standard_of": true, "twist": <automorphism>}.
Bimodule bimodule_from_json(const StarAlgebra& left, const StarAlgebra& right,
                            const json& j);

json two_vector_bundle_to_json(const TwoVectorBundle& v);
TwoVectorBundle two_vector_bundle_from_json(const StarAlgebra& a, const json& j);

// {"rho": [...], "phi": [<automorphism>...], "u": [<matrix>...]}.
json refinement_to_json(const Refinement& r);
Refinement refinement_from_json(const TwoVectorBundle& source,
                                const TwoVectorBundle& target, const json& j);

}  // namespace gerbel::json_io
