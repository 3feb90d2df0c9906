#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "latfix/cyclicity.hpp"
#include "latfix/fixlattice.hpp"
#include "latfix/lattice.hpp"
#include "latfix/opcore.hpp"
#include "latfix/seqspace.hpp"

namespace latfix::io {

using Json = nlohmann::ordered_json;

// Parsing. Rationals are "p/q" strings or JSON integers; anything else is
// rejected with InvalidInput.
Rational rational_from_json(const Json& j);
QVector vector_from_json(const Json& j);
QMatrix matrix_from_json(const Json& j);
QPolynomial polynomial_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);
NormTag norm_from_json(const Json& j);
PositiveMatrixOperator operator_from_json(const Json& j);
/// {"operators": [...]} or a single operator object.
OperatorFamily family_from_json(const Json& j);
/// {"vectors": [[...], ...]} or a plain array of vectors.
std::vector<QVector> vectors_from_json(const Json& j);
/// Square matrix given as {"matrix": {...}} or directly as {"rows": ...}.
QMatrix generator_from_json(const Json& j);

Json read_file(const std::string& path);

// Serialization with canonical rational strings and fixed key order.
Json to_json(const Rational& q);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Json to_json(const QPolynomial& p);
Json to_json(const Subspace& f);
Json to_json(const NormTag& n);
Json to_json(const PositiveMatrixOperator& t);
Json to_json(const FactoredPolynomial& f);
Json to_json(const LatticeClassification& c);
Json to_json(const FixedSpaceReport& r);
Json to_json(const SupInFix& s);
Json to_json(const RootOfUnitySpectrum& s);
Json to_json(const CyclicityReport& r);
Json to_json(const SemigroupReport& r);
Json to_json(const ProbeRecord& r);

Json to_json(const IndexSchema& s);
Json to_json(const IndexSchema& s, const SymbolicVector& v);
Json to_json(const TransfiniteTrace<QVector>& t);
Json to_json(const IndexSchema& s, const TransfiniteTrace<SymbolicVector>& t);

SymbolicVector symbolic_from_json(const IndexSchema& s, const Json& j);

/// Indented "key: value" rendering for the human-readable output mode.
std::string render_text(const Json& j);

}  // namespace latfix::io
