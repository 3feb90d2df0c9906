#include "gallery.hpp"

#include "latfix/linalg.hpp"
#include "latfix/spectral.hpp"

namespace latfix::gallery {

using io::Json;
using io::to_json;

namespace {

QMatrix markov_s() {
  return QMatrix{{1, 0, 0}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}, {0, 0, 1}};
}

Json symbolic_list(const IndexSchema& schema, const std::vector<SymbolicVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(schema, v));
  return a;
}

Json symbolic_classification(const IndexSchema& schema, const SymbolicClassification& c) {
  Json out = to_json(c.classification);
  out["rays"] = symbolic_list(schema, c.rays);
  return out;
}

// l1 contraction averaging two pairs of coordinates.
Json intro_strict() {
  const Rational h(1, 2);
  const QMatrix t{{h, h, 0, 0}, {h, h, 0, 0}, {0, 0, h, h}, {0, 0, h, h}};
  const PositiveMatrixOperator op(t, NormTag::one());
  const FixedSpaceReport report = fixed_space_report(OperatorFamily({op}));
  Json moduli = Json::array();
  for (const auto& f : report.fixed_space.basis()) {
    const QVector m = modulus(f);
    moduli.push_back(Json{{"f", to_json(f)}, {"modulus", to_json(m)}, {"modulus_fixed", t * m == m}});
  }
  const QVector mixed{1, 1, -1, -1};
  moduli.push_back(Json{{"f", to_json(mixed)},
                        {"modulus", to_json(modulus(mixed))},
                        {"modulus_fixed", t * modulus(mixed) == modulus(mixed)}});
  return Json{{"operator", to_json(op)},
              {"operator_norm", to_json(operator_norm(op))},
              {"strictly_monotone_norm", is_strictly_monotone(op.norm())},
              {"report", to_json(report)},
              {"modulus_checks", moduli}};
}

// S under the l1 norm: power bounded but not contractive. The increasing
// orbit of |f| converges to a fixed vector, the modulus of f inside fix S.
Json intro_kb() {
  const PositiveMatrixOperator op(markov_s(), NormTag::one());
  const Subspace f = fixed_space_of_family(OperatorFamily({op}));
  const QVector fhat{1, 0, -1};
  const QVector start = modulus(fhat);
  const QVector limit = fix_projection(op.matrix()) * start;
  const auto mod = modulus_in(f, fhat);
  return Json{{"operator", to_json(op)},
              {"operator_norm", to_json(operator_norm(op))},
              {"contractive", contraction_check(op)},
              {"power_bounded", to_string(power_bounded_verdict(op).verdict)},
              {"fixed_space", to_json(f)},
              {"classification", to_json(classify_subspace(f))},
              {"f", to_json(fhat)},
              {"orbit_start", to_json(start)},
              {"orbit_start_super_fixed", super_fixed_check(op, start)},
              {"orbit_limit", to_json(limit)},
              {"modulus_in_fixed_space", mod ? to_json(*mod) : Json(nullptr)},
              {"limit_equals_modulus", mod && *mod == limit}};
}

Json e41() {
  const ShiftInsertOperator op = builtin_operator("e41");
  const auto fixed = symbolic_eigenspace(op, 1);
  const auto cls = classify_symbolic_span(op.schema(), fixed);
  return Json{{"schema", to_json(op.schema())},
              {"operator_norm", to_json(symbolic_operator_norm(op))},
              {"fixed_space_basis", symbolic_list(op.schema(), fixed)},
              {"positive_fixed_rays", symbolic_list(op.schema(), cls.rays)},
              {"classification", symbolic_classification(op.schema(), cls)}};
}

Json e42a() {
  const PositiveMatrixOperator op(markov_s());
  const FixedSpaceReport report = fixed_space_report(OperatorFamily({op}));
  const QVector fhat{1, 0, -1};
  const auto mod = modulus_in(report.fixed_space, fhat);
  return Json{{"operator", to_json(op)},
              {"operator_norm", to_json(operator_norm(op))},
              {"fixed_space", to_json(report.fixed_space)},
              {"classification", to_json(report.classification)},
              {"sign_pattern_sublattice", sign_pattern_sublattice_oracle(report.fixed_space)},
              {"f_hat", to_json(fhat)},
              {"modulus_in_fixed_space", mod ? to_json(*mod) : Json(nullptr)},
              {"am_property", am_property_check(report.fixed_space, 100, 7)},
              {"theorem_conformant", report.theorem_conformant()}};
}

Json e42b() {
  const ShiftInsertOperator op = builtin_operator("e42");
  const IndexSchema& s = op.schema();
  SymbolicVector f = SymbolicVector::zero(s);
  f.finite = {1, 0, -1};
  const auto fixed = symbolic_eigenspace(op, 1);
  const auto trace = transfinite_trace(op, {f, -f});
  return Json{{"schema", to_json(s)},
              {"operator_norm", to_json(symbolic_operator_norm(op))},
              {"fixed_space_basis", symbolic_list(s, fixed)},
              {"classification", symbolic_classification(s, classify_symbolic_span(s, fixed))},
              {"G", symbolic_list(s, {f, -f})},
              {"trace", to_json(s, trace)}};
}

Json e43() {
  const ShiftInsertOperator op = builtin_operator("e43");
  const ShiftInsertOperator square = op.power(2);
  const IndexSchema& s = op.schema();
  Json power_norms = Json::array();
  for (unsigned n = 1; n <= 4; ++n) power_norms.push_back(to_json(symbolic_operator_norm(op.power(n))));
  const auto minus = symbolic_eigenspace(op, -1);
  const auto plus = symbolic_eigenspace(op, 1);
  const auto fix_square = symbolic_eigenspace(square, 1);
  Json out{{"schema", to_json(s)},
           {"operator_norm", to_json(symbolic_operator_norm(op))},
           {"power_norms", power_norms},
           {"eigenspace_minus_one", symbolic_list(s, minus)},
           {"eigenspace_plus_one", symbolic_list(s, plus)},
           {"fixed_space_of_square", symbolic_list(s, fix_square)},
           {"classification_of_square_fixed_space",
            symbolic_classification(s, classify_symbolic_span(s, fix_square))}};
  if (!minus.empty()) {
    const SymbolicVector& f = minus.front();
    out["trace_of_square"] = to_json(s, transfinite_trace(square, {f, -f}));
  }
  return out;
}

Json e44() {
  const QMatrix t{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}};
  const PositiveMatrixOperator op(t);
  const PowerBoundReport pb = power_bounded_verdict(op);
  const FixedSpaceReport report = fixed_space_report(OperatorFamily({op}));
  Json out{{"operator", to_json(op)},
           {"operator_norm", to_json(operator_norm(op))},
           {"characteristic_polynomial", to_json(pb.characteristic)},
           {"factorization", to_json(factor_over_rationals(pb.characteristic))},
           {"unit_disk", to_string(pb.disk)},
           {"power_bounded", to_string(pb.verdict)}};
  out["offending_factor"] = pb.offending_factor ? to_json(*pb.offending_factor) : Json(nullptr);
  out["fixed_space"] = to_json(report.fixed_space);
  out["positive_cone_rays"] = to_json(report.classification)["rays"];
  out["classification"] = to_json(report.classification);
  out["family_valid"] = report.family_valid;
  out["conformance"] = to_string(report.conformance);
  return out;
}

}  // namespace

const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids{"intro-strict", "intro-kb", "e41", "e42a",
                                            "e42b",         "e43",      "e44"};
  return ids;
}

io::Json run_case(const std::string& id) {
  Json body;
  if (id == "intro-strict") {
    body = intro_strict();
  } else if (id == "intro-kb") {
    body = intro_kb();
  } else if (id == "e41") {
    body = e41();
  } else if (id == "e42a") {
    body = e42a();
  } else if (id == "e42b") {
    body = e42b();
  } else if (id == "e43") {
    body = e43();
  } else if (id == "e44") {
    body = e44();
  } else {
    throw InvalidInput("unknown gallery case '" + id + "'");
  }
  return Json{{"case", id}, {"report", body}};
}

std::string canonical_text(const io::Json& report) { return report.dump(2) + "\n"; }

std::string fixture_path(const std::string& dir, const std::string& id) {
  return dir + "/" + id + ".json";
}

}  // namespace latfix::gallery
