#ifndef SLREP_SERIALIZE_HPP
#define SLREP_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "slrep/permgroup.hpp"
#include "slrep/permmod.hpp"
#include "slrep/semilin.hpp"
#include "slrep/unipmod.hpp"

namespace slrep {

using json = nlohmann::json;

// Wire formats (UTF-8 JSON, keys sorted by construction):
//   CocycleModule  {"level": n, "rank": N,
//                   "gens": [{"swap": i, "matrix": [[ratfunc-string]]}]}
//   Witness        {"phi": [[ratfunc-string]]}
//   Subgroup spec  {"S": [points], "W": [points], "gens": [[images]]}
//   Canonical      {"T": [points], "H": [[images-on-T]]}   (T ascending,
//                   H lexicographically sorted)
//   PermModuleExpr {"kappa": {"s": multiplicity}}
//   Classification {"rank": N, "jordan": [sizes desc], "nu": [[rationals]]}

json to_json(const CocycleModule& m);
CocycleModule cocycle_module_from_json(const json& j);

json to_json(const TrivializationWitness& w, int level);
TrivializationWitness witness_from_json(const json& j, int level);

json to_json(const OpenSubgroupSpec& spec);
OpenSubgroupSpec subgroup_spec_from_json(const json& j, int level);

json to_json(const CanonicalOpenSubgroup& c);
CanonicalOpenSubgroup canonical_subgroup_from_json(const json& j);

json to_json(const PermModuleExpr& e);
PermModuleExpr perm_module_expr_from_json(const json& j);

json classification_to_json(const Classification& c);

json matrix_to_json(const RfMatrix& m);
RfMatrix matrix_from_json(const json& j, int level);

} // namespace slrep

#endif
