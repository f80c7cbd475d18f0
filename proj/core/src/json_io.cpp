#include "pgrouplab/json_io.hpp"

#include <stdexcept>

namespace pgrouplab {

namespace {

u64 require_u64(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  return j.get<u64>();
}

const Json& require_field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string(what) + " needs a \"" + key + "\" field");
  return j.at(key);
}

std::vector<std::vector<u64>> rows_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of rows");
  std::vector<std::vector<u64>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw std::invalid_argument(std::string(what) + " rows must be arrays");
    std::vector<u64> r;
    for (const Json& v : row) r.push_back(require_u64(v, what));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

Json to_json(const GroupShape& g) {
  return Json{{"p", g.p()}, {"lambda", g.exponents()}};
}

GroupShape group_from_json(const Json& j) {
  const u64 p = require_u64(require_field(j, "p", "group"), "prime");
  const Json& lambda = require_field(j, "lambda", "group");
  if (!lambda.is_array()) throw std::invalid_argument("group \"lambda\" must be an array");
  std::vector<u32> exponents;
  for (const Json& v : lambda) {
    const u64 e = require_u64(v, "exponent");
    if (e == 0 || e > 62) throw std::invalid_argument("exponent must be between 1 and 62");
    exponents.push_back(static_cast<u32>(e));
  }
  return GroupShape(p, std::move(exponents));
}

Json to_json(const Element& x) { return Json(x.coords()); }

Element element_from_json(const GroupShape& g, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("element must be an array of coordinates");
  std::vector<u64> coords;
  for (const Json& v : j) coords.push_back(require_u64(v, "coordinate"));
  if (coords.size() != g.rank()) throw std::invalid_argument("element coordinate count does not match the rank");
  return Element(g, std::move(coords));
}

Json to_json(const Subgroup& x) {
  return Json{{"shape", to_json(x.shape())}, {"basis", x.basis_rows()}};
}

Subgroup subgroup_from_json(const Json& j) {
  const GroupShape g = group_from_json(require_field(j, "shape", "subgroup"));
  return Subgroup::from_rows(g, rows_from_json(require_field(j, "basis", "subgroup"), "basis"));
}

Json to_json(const Homomorphism& f) {
  return Json{{"domain", to_json(f.domain())},
              {"codomain", to_json(f.codomain())},
              {"matrix", f.matrix()}};
}

Homomorphism hom_from_json(const Json& j) {
  GroupShape domain = group_from_json(require_field(j, "domain", "homomorphism"));
  GroupShape codomain = group_from_json(require_field(j, "codomain", "homomorphism"));
  return Homomorphism(std::move(domain), std::move(codomain),
                      rows_from_json(require_field(j, "matrix", "homomorphism"), "matrix"));
}

Json to_json(const ExtendedNat& n) {
  if (n.is_infinite()) return Json("inf");
  return Json(n.finite_value());
}

Json to_json(const HeightSequence& h) {
  Json out = Json::array();
  for (const ExtendedNat& n : h.entries()) out.push_back(to_json(n));
  return out;
}

Json to_json(const PPower& v) {
  return Json{{"p", v.p}, {"exp", v.exp}, {"str", v.str()}};
}

Json to_json(const AutCertificate& c) {
  return Json{{"forward", to_json(c.forward)}, {"inverse", to_json(c.inverse)}};
}

Json to_json(const InvarianceViolation& v) {
  return Json{{"map", to_json(v.map)}, {"source", to_json(v.source)}, {"image", to_json(v.image)}};
}

Json to_json(const ClassificationReport& r) {
  Json subgroups = Json::array(), fully = Json::array(), charac = Json::array(), gap = Json::array();
  for (const Subgroup& x : r.subgroups) subgroups.push_back(to_json(x));
  for (const Subgroup& x : r.fully_invariant) fully.push_back(to_json(x));
  for (const Subgroup& x : r.characteristic) charac.push_back(to_json(x));
  for (const auto& [subgroup, witness] : r.gap)
    gap.push_back(Json{{"subgroup", to_json(subgroup)}, {"witness", to_json(witness)}});
  return Json{{"group", to_json(r.group)},
              {"subgroups", subgroups},
              {"fully_invariant", fully},
              {"characteristic", charac},
              {"gap", gap}};
}

Json to_json(const SplitChain& c) {
  Json levels = Json::array();
  for (const SplitLevel& lv : c.levels)
    levels.push_back(Json{{"level", lv.level}, {"y", to_json(lv.y)}, {"y_prime", to_json(lv.y_prime)}});
  return Json{{"levels", levels}};
}

Json to_json(const InertiaQuotient& q) {
  return Json{{"order", to_json(q.order)}, {"type", q.type}};
}

Json to_json(const ProfileStrategy& s) {
  if (s.is_exhaustive) return Json{{"kind", "exhaustive"}};
  return Json{{"kind", "sampled"}, {"seed", s.seed}, {"count", s.count}};
}

Json to_json(const InertiaProfile& p) {
  Json records = Json::array();
  for (const auto& [id, order] : p.records)
    records.push_back(Json{{"id", id}, {"order", to_json(order)}});
  return Json{{"subgroup", to_json(p.subgroup)},
              {"mode", p.mode == MapFamily::endomorphisms ? "endomorphisms" : "automorphisms"},
              {"strategy", to_json(p.strategy)},
              {"records", records},
              {"sup", to_json(p.sup)},
              {"exact", p.exact}};
}

Json to_json(const SumBoundReport& r) {
  return Json{{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"holds", r.holds}};
}

Json to_json(const AutDecomposition& d) {
  Json parts = Json::array();
  for (const AutCertificate& c : d.parts) parts.push_back(to_json(c));
  return Json{{"target", to_json(d.target)}, {"parts", parts}};
}

Json to_json(const SquareHullResult& r) {
  return Json{{"hull_half", to_json(r.hull_half)},
              {"hull", to_json(r.hull)},
              {"index", to_json(r.index)},
              {"bound", to_json(r.bound)},
              {"holds", r.holds}};
}

Json to_json(const NoOneFamily& f) {
  Json phis = Json::array();
  for (const AutCertificate& c : f.phis) phis.push_back(to_json(c));
  return Json{{"group", to_json(f.group)},
              {"x", to_json(f.x)},
              {"phis", phis},
              {"hat_exponents", f.hat_exponents}};
}

}  // namespace pgrouplab
