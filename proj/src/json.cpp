#include "schub/json.hpp"

namespace schub {

namespace {

Json permutation_list(const std::vector<Permutation>& perms) {
  Json out = Json::array();
  for (const auto& p : perms) out.push_back(to_json(p));
  return out;
}

}  // namespace

Json to_json(const Permutation& w) { return Json(std::vector<int>(w.one_line().begin(), w.one_line().end())); }

Json to_json(const ParabolicSet& s) { return Json(std::vector<int>(s.indices().begin(), s.indices().end())); }

Json to_json(const PoincarePolynomial& p) { return Json(p.coefficients()); }

Json to_json(const GrassmannSchubert& x) {
  Json j;
  j["n"] = x.rank();
  j["d"] = x.descent();
  j["w"] = to_json(x.permutation());
  return j;
}

Json to_json(const LeviDescriptor& levi) {
  Json j;
  j["roots"] = to_json(levi.roots);
  j["blocks"] = levi.blocks;
  return j;
}

Json to_json(const HeadReport& report) {
  Json j;
  j["heads"] = permutation_list(report.heads);
  j["minimal_head"] = report.minimal_head ? to_json(*report.minimal_head) : Json(nullptr);
  j["maximal_proper_heads"] = permutation_list(report.maximal_proper_heads);
  return j;
}

Json to_json(const ToroidalReport& report) {
  Json j;
  j["subject"] = to_json(report.subject);
  j["levi"] = to_json(report.levi);
  Json divisors = Json::array();
  for (const auto& d : report.divisors) {
    Json e;
    e["w"] = to_json(d.divisor.permutation());
    e["run"] = d.run;
    e["stable"] = d.stable;
    e["criterion"] = to_string(d.criterion);
    e["witness"] = d.witness ? to_json(*d.witness) : Json(nullptr);
    divisors.push_back(std::move(e));
  }
  j["divisors"] = std::move(divisors);
  j["verdict"] = to_string(report.verdict);
  return j;
}

Json to_json(const BPDecomposition& bp) {
  Json j;
  j["v"] = to_json(bp.v);
  j["u"] = to_json(bp.u);
  j["bp"] = bp.is_bp();
  j["characterizations"] = Json{{"maximality", bp.maximality}, {"support", bp.support}, {"poincare", bp.poincare}};
  return j;
}

Json to_json(const DivisorProjection& projection) {
  Json j;
  j["image"] = to_json(projection.image);
  j["kind"] = to_string(projection.kind);
  j["right_simple"] = projection.right_simple ? Json(*projection.right_simple) : Json(nullptr);
  j["right_simple_outside_k"] = projection.right_simple_outside_k;
  return j;
}

Json to_json(const TransportReport& report) {
  Json j;
  j["decomposition"] = to_json(report.decomposition);
  j["stable"] = report.stable;
  j["smooth"] = report.smooth;
  j["base"] = report.base ? to_json(*report.base) : Json(nullptr);
  j["verdict"] = to_string(report.verdict);
  return j;
}

Json to_json(const PasquierCase& c) {
  Json j;
  j["tag"] = to_string(c.tag());
  j["type"] = to_string(c.type());
  j["m"] = c.m();
  j["i"] = c.i() ? Json(*c.i()) : Json(nullptr);
  j["triple"] = c.triple();
  j["space"] = c.homogeneous_space();
  const auto dims = case_dimensions(c);
  j["dimensions"] = Json::array({dims.embedding, dims.orbit_a, dims.orbit_b});
  j["codim_at_least_two"] = codim_at_least_two(c);
  return j;
}

Json to_json(const CaseFamily& family) {
  Json j;
  j["tag"] = to_string(family.tag);
  j["type"] = to_string(family.type);
  j["triple"] = family.triple;
  j["constraint"] = family.constraint;
  j["space"] = family.space;
  return j;
}

std::string to_string(Criterion criterion) {
  switch (criterion) {
    case Criterion::stable_root:
      return "criterion-1";
    case Criterion::no_head:
      return "criterion-2";
    case Criterion::violated:
      return "violated";
  }
  return "?";
}

std::string to_string(Verdict verdict) { return verdict == Verdict::fails ? "fails" : "passes-necessary"; }

std::string to_string(ProjectionKind kind) {
  switch (kind) {
    case ProjectionKind::onto:
      return "onto";
    case ProjectionKind::divisor:
      return "unique-divisor";
    case ProjectionKind::neither:
      return "neither";
  }
  return "?";
}

std::string to_string(TransportVerdict verdict) {
  switch (verdict) {
    case TransportVerdict::not_applicable:
      return "not-applicable";
    case TransportVerdict::certified_non_toroidal:
      return "certified-non-toroidal";
    case TransportVerdict::no_conclusion:
      return "no-conclusion";
  }
  return "?";
}

}  // namespace schub
