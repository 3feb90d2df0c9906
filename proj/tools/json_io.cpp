#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace latfix::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be a JSON array");
  return j;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InvalidInput("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

QVector vector_from_json(const Json& j) {
  QVector v;
  for (const auto& x : array(j, "vector")) v.push_back(rational_from_json(x));
  if (v.empty()) throw InvalidInput("vector must be nonempty");
  return v;
}

QMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_array() ? j : field(j, "rows");
  std::vector<QVector> r;
  for (const auto& row : array(rows, "rows")) r.push_back(vector_from_json(row));
  if (r.empty()) throw InvalidInput("matrix must have at least one row");
  for (const auto& row : r) {
    if (row.size() != r.front().size()) throw InvalidInput("matrix rows have different lengths");
  }
  return QMatrix(r);
}

QPolynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : array(field(j, "coeffs"), "coeffs")) c.push_back(rational_from_json(x));
  return QPolynomial(std::move(c));
}

Subspace subspace_from_json(const Json& j) {
  const Json& dim = field(j, "ambient_dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
    throw InvalidInput("ambient_dim must be a positive integer");
  }
  const auto n = dim.get<std::size_t>();
  std::vector<QVector> basis;
  for (const auto& b : array(field(j, "basis"), "basis")) {
    basis.push_back(vector_from_json(b));
    if (basis.back().size() != n) throw InvalidInput("basis vector length differs from ambient_dim");
  }
  return Subspace(n, basis);
}

NormTag norm_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "sup") return NormTag::sup();
    if (s == "one") return NormTag::one();
    throw InvalidInput("unknown norm \"" + s + "\"");
  }
  if (j.is_object() && j.contains("weighted_one")) return NormTag::weighted_one(vector_from_json(j.at("weighted_one")));
  throw InvalidInput("norm must be \"sup\", \"one\" or {\"weighted_one\": [...]}");
}

PositiveMatrixOperator operator_from_json(const Json& j) {
  const NormTag norm = j.contains("norm") ? norm_from_json(j.at("norm")) : NormTag::sup();
  return PositiveMatrixOperator(matrix_from_json(field(j, "matrix")), norm);
}

OperatorFamily family_from_json(const Json& j) {
  std::vector<PositiveMatrixOperator> members;
  if (j.is_object() && j.contains("operators")) {
    for (const auto& op : array(j.at("operators"), "operators")) members.push_back(operator_from_json(op));
  } else {
    members.push_back(operator_from_json(j));
  }
  return OperatorFamily(std::move(members));
}

std::vector<QVector> vectors_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "vectors") : j;
  std::vector<QVector> out;
  for (const auto& v : array(list, "vectors")) out.push_back(vector_from_json(v));
  return out;
}

QMatrix generator_from_json(const Json& j) {
  const QMatrix m = j.is_object() && j.contains("matrix") ? matrix_from_json(j.at("matrix")) : matrix_from_json(j);
  if (!m.square()) throw InvalidInput("matrix must be square");
  return m;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.row_list()) rows.push_back(to_json(r));
  return Json{{"rows", rows}};
}

Json to_json(const QPolynomial& p) {
  return Json{{"coeffs", p.coefficient_strings()}, {"text", p.pretty()}};
}

Json to_json(const Subspace& f) {
  Json basis = Json::array();
  for (const auto& b : f.basis()) basis.push_back(to_json(b));
  return Json{{"ambient_dim", f.ambient_dim()}, {"dim", f.dim()}, {"basis", basis}};
}

Json to_json(const NormTag& n) {
  if (n.kind() == NormKind::WeightedOne) return Json{{"weighted_one", to_json(n.weights())}};
  return n.name();
}

Json to_json(const PositiveMatrixOperator& t) {
  return Json{{"matrix", to_json(t.matrix())}, {"norm", to_json(t.norm())}};
}

Json to_json(const FactoredPolynomial& f) {
  Json factors = Json::array();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    Json e{{"factor", to_json(f.factors[i].first)}, {"multiplicity", f.factors[i].second}};
    const auto it = f.cyclotomic_orders.find(i);
    if (it != f.cyclotomic_orders.end()) e["cyclotomic_order"] = it->second;
    factors.push_back(e);
  }
  return Json{{"unit", to_json(f.unit)}, {"factors", factors}};
}

Json to_json(const LatticeClassification& c) {
  Json rays = Json::array();
  for (const auto& r : c.rays) rays.push_back(to_json(r));
  return Json{{"verdict", to_string(c.verdict)},
              {"cone_generating", c.cone_generating},
              {"cone_simplicial", c.cone_simplicial},
              {"rays_support_disjoint", c.rays_support_disjoint},
              {"rays", rays}};
}

Json to_json(const FixedSpaceReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.norm_checks) {
    checks.push_back(Json{{"set", c.description},
                          {"g_E", to_json(c.g_e)},
                          {"g_F", c.g_f ? to_json(*c.g_f) : Json(nullptr)},
                          {"norm_g_E", to_json(c.norm_e)},
                          {"norm_g_F", c.g_f ? to_json(c.norm_f) : Json(nullptr)},
                          {"g_E_le_g_F", c.dominated},
                          {"equal", c.equal}});
  }
  return Json{{"family_valid", r.family_valid},
              {"contractive", r.contractive},
              {"commuting", r.commuting},
              {"strictly_monotone_norm", r.strictly_monotone_norm},
              {"fixed_space", to_json(r.fixed_space)},
              {"classification", to_json(r.classification)},
              {"conformance", to_string(r.conformance)},
              {"theorem_conformant", r.theorem_conformant()},
              {"violations", r.violations},
              {"norm_checks", checks}};
}

Json to_json(const SupInFix& s) {
  return Json{{"g_E", to_json(s.g_e)},
              {"g_F", to_json(s.g_f)},
              {"norm_g_E", to_json(s.norm_e)},
              {"norm_g_F", to_json(s.norm_f)}};
}

Json to_json(const RootOfUnitySpectrum& s) {
  Json orders = Json::array();
  for (const auto& o : s.orders) {
    orders.push_back(Json{{"order", o.order},
                          {"multiplicity", o.multiplicity},
                          {"algebraic_multiplicity", o.algebraic_multiplicity}});
  }
  return Json{{"orders", orders},
              {"count_on_circle", s.count_on_circle},
              {"non_cyclotomic_boundary", s.non_cyclotomic_boundary}};
}

Json to_json(const CyclicityReport& r) {
  Json est = Json::array();
  for (const auto& e : r.estimates) {
    est.push_back(Json{{"n", e.order},
                       {"k", e.power},
                       {"mult_at_n", e.multiplicity},
                       {"order_of_power", e.power_order},
                       {"mult_at_order_of_power", e.power_multiplicity},
                       {"holds", e.holds}});
  }
  return Json{{"contractive", r.contractive},
              {"spectrum", to_json(r.spectrum)},
              {"estimates", est},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const SemigroupReport& r) {
  return Json{{"metzler", r.metzler},
              {"log_norm_sup", to_json(r.log_norm_sup)},
              {"characteristic_polynomial", to_json(r.characteristic)},
              {"zero_eigenvalue", r.zero_eigenvalue},
              {"imaginary_eigenvalue_count", r.imaginary_eigenvalues},
              {"imaginary_eigenvalues", r.describe_imaginary()},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const ProbeRecord& r) {
  Json orders = Json::array();
  for (const auto& o : r.orders) orders.push_back(Json{{"n", o.order}, {"mult", o.multiplicity}});
  return Json{{"trial", r.trial},
              {"dim", r.dim},
              {"orders", orders},
              {"non_cyclotomic", r.non_cyclotomic},
              {"verdict", to_string(r.verdict)},
              {"violation", r.violation}};
}

namespace {

Json chain_json(const ChainValue& c) {
  Json prefix = Json::array();
  for (const auto& x : c.prefix) prefix.push_back(to_json(x));
  return Json{{"prefix", prefix}, {"tail", to_json(c.tail)}};
}

ChainValue chain_from_json(const Json& j) {
  ChainValue c;
  for (const auto& x : array(field(j, "prefix"), "prefix")) c.prefix.push_back(rational_from_json(x));
  c.tail = rational_from_json(field(j, "tail"));
  return c;
}

}  // namespace

Json to_json(const IndexSchema& s) {
  Json chains = Json::array();
  for (const auto& c : s.chains) chains.push_back(Json{{"name", c.name}, {"space", to_string(c.tag)}});
  Json grids = Json::array();
  for (const auto& g : s.grids) grids.push_back(Json{{"name", g.name}, {"space", to_string(g.tag)}});
  return Json{{"finite_coords", s.finite_coords}, {"chains", chains}, {"grids", grids}};
}

Json to_json(const IndexSchema& s, const SymbolicVector& v) {
  Json finite = Json::object();
  for (std::size_t i = 0; i < v.finite.size(); ++i) finite[s.finite_coords[i]] = to_json(v.finite[i]);
  Json chains = Json::object();
  for (std::size_t c = 0; c < v.chains.size(); ++c) chains[s.chains[c].name] = chain_json(v.chains[c]);
  Json grids = Json::object();
  for (std::size_t g = 0; g < v.grids.size(); ++g) {
    Json rows = Json::array();
    for (const auto& r : v.grids[g].rows) rows.push_back(chain_json(r));
    grids[s.grids[g].name] = rows;
  }
  Json out{{"finite", finite}};
  if (!s.chains.empty()) out["chains"] = chains;
  if (!s.grids.empty()) out["grids"] = grids;
  return out;
}

SymbolicVector symbolic_from_json(const IndexSchema& s, const Json& j) {
  SymbolicVector v = SymbolicVector::zero(s);
  const Json& finite = field(j, "finite");
  for (std::size_t i = 0; i < s.finite_coords.size(); ++i) {
    if (finite.contains(s.finite_coords[i])) v.finite[i] = rational_from_json(finite.at(s.finite_coords[i]));
  }
  for (std::size_t c = 0; c < s.chains.size(); ++c) {
    if (j.contains("chains") && j.at("chains").contains(s.chains[c].name)) {
      v.chains[c] = chain_from_json(j.at("chains").at(s.chains[c].name));
    }
  }
  for (std::size_t g = 0; g < s.grids.size(); ++g) {
    if (j.contains("grids") && j.at("grids").contains(s.grids[g].name)) {
      for (const auto& r : array(j.at("grids").at(s.grids[g].name), "grid rows")) {
        v.grids[g].rows.push_back(chain_from_json(r));
      }
    }
  }
  v.canonicalize();
  check_vector(s, v);
  return v;
}

Json to_json(const TransfiniteTrace<QVector>& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"limit_step", s.limit_step},
                         {"vector", to_json(s.vector)},
                         {"norm", to_json(s.norm)},
                         {"is_fixed", s.is_fixed}});
  }
  Json out{{"start", to_json(t.start)}, {"steps", steps}, {"outcome", to_string(t.outcome)}};
  if (t.outcome == TraceOutcome::FixedPointReached) {
    out["fixed_point"] = to_json(t.fixed_point);
    out["limit_steps"] = t.limit_steps;
  }
  return out;
}

Json to_json(const IndexSchema& schema, const TransfiniteTrace<SymbolicVector>& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"limit_step", s.limit_step},
                         {"vector", to_json(schema, s.vector)},
                         {"norm", to_json(s.norm)},
                         {"is_fixed", s.is_fixed}});
  }
  Json out{{"start", to_json(schema, t.start)}, {"steps", steps}, {"outcome", to_string(t.outcome)}};
  if (t.outcome == TraceOutcome::FixedPointReached) {
    out["fixed_point"] = to_json(schema, t.fixed_point);
    out["limit_steps"] = t.limit_steps;
  } else {
    Json norms = Json::array();
    for (const auto& n : t.growth_norms) norms.push_back(to_json(n));
    out["growth_norms"] = norms;
  }
  return out;
}

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j) {
    if (x.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !is_scalar_array(v) && !v.empty()) {
        out << pad << k << ":\n";
        render(v, indent + 2, out);
      } else {
        out << pad << k << ": ";
        if (is_scalar_array(v)) {
          out << "(";
          for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
          out << ")\n";
        } else {
          out << (v.is_null() ? "-" : v.is_structured() ? v.dump() : scalar_text(v)) << "\n";
        }
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar_array(v)) {
        out << pad << "- (";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
        out << ")\n";
      } else if (v.is_structured()) {
        out << pad << "-\n";
        render(v, indent + 2, out);
      } else {
        out << pad << "- " << scalar_text(v) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace latfix::io
