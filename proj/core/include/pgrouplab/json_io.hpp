#ifndef PGROUPLAB_JSON_IO_HPP
#define PGROUPLAB_JSON_IO_HPP

#include "json.hpp"
#include "pgrouplab/extended_nat.hpp"
#include "pgrouplab/group.hpp"
#include "pgrouplab/hom.hpp"
#include "pgrouplab/inertia.hpp"
#include "pgrouplab/invariance.hpp"
#include "pgrouplab/subgroup.hpp"

namespace pgrouplab {

/// Field order is part of the output contract: identical inputs must render
/// byte-identical text, so every object keeps its insertion order.
using Json = nlohmann::ordered_json;

// Schemas with both directions (accepted as input anywhere):
//   group        {"p": 2, "lambda": [1, 3]}
//   element      [1, 2]                      (needs the group for context)
//   subgroup     {"shape": <group>, "basis": [[...], ...]}
//   homomorphism {"domain": <group>, "codomain": <group>, "matrix": [[...], ...]}
Json to_json(const GroupShape& g);
GroupShape group_from_json(const Json& j);
Json to_json(const Element& x);
Element element_from_json(const GroupShape& g, const Json& j);
Json to_json(const Subgroup& x);
Subgroup subgroup_from_json(const Json& j);
Json to_json(const Homomorphism& f);
Homomorphism hom_from_json(const Json& j);

// Output-only renderings of the report types.
Json to_json(const ExtendedNat& n);  // number, or "inf"
Json to_json(const HeightSequence& h);
Json to_json(const PPower& v);
Json to_json(const AutCertificate& c);
Json to_json(const InvarianceViolation& v);
Json to_json(const ClassificationReport& r);
Json to_json(const SplitChain& c);
Json to_json(const InertiaQuotient& q);
Json to_json(const ProfileStrategy& s);
Json to_json(const InertiaProfile& p);
Json to_json(const SumBoundReport& r);
Json to_json(const AutDecomposition& d);
Json to_json(const SquareHullResult& r);
Json to_json(const NoOneFamily& f);

}  // namespace pgrouplab

#endif
