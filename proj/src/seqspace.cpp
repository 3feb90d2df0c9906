#include "latfix/seqspace.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "latfix/linalg.hpp"
#include "latfix/opcore.hpp"
#include "latfix/spectral.hpp"

namespace latfix {

const char* to_string(SpaceTag t) { return t == SpaceTag::CZero ? "c0" : "linf"; }

void IndexSchema::validate() const {
  std::set<std::string> seen;
  auto add = [&](const std::string& name) {
    if (!seen.insert(name).second) throw InvalidInput("duplicate coordinate name '" + name + "'");
  };
  for (const auto& n : finite_coords) add(n);
  for (const auto& c : chains) add(c.name);
  for (const auto& g : grids) add(g.name);
}

Rational ChainValue::at(std::size_t position) const {
  return position < prefix.size() ? prefix[position] : tail;
}

void ChainValue::canonicalize() {
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
}

ChainValue GridValue::row(std::size_t k) const { return k < rows.size() ? rows[k] : ChainValue{}; }

void GridValue::canonicalize() {
  for (auto& r : rows) r.canonicalize();
  while (!rows.empty() && rows.back().is_zero()) rows.pop_back();
}

SymbolicVector SymbolicVector::zero(const IndexSchema& schema) {
  SymbolicVector v;
  v.finite = QVector(schema.finite_coords.size());
  v.chains.resize(schema.chains.size());
  v.grids.resize(schema.grids.size());
  return v;
}

void SymbolicVector::canonicalize() {
  for (auto& c : chains) c.canonicalize();
  for (auto& g : grids) g.canonicalize();
}

void check_vector(const IndexSchema& schema, const SymbolicVector& v) {
  if (v.finite.size() != schema.finite_coords.size() || v.chains.size() != schema.chains.size() ||
      v.grids.size() != schema.grids.size()) {
    throw InvalidInput("vector does not match the index schema");
  }
  for (std::size_t c = 0; c < v.chains.size(); ++c) {
    if (schema.chains[c].tag == SpaceTag::CZero && sgn(v.chains[c].tail) != 0) {
      throw InvalidInput("chain '" + schema.chains[c].name + "' lies in c0 but has a nonzero tail");
    }
  }
  for (std::size_t g = 0; g < v.grids.size(); ++g) {
    if (schema.grids[g].tag != SpaceTag::CZero) continue;
    for (const auto& r : v.grids[g].rows) {
      if (sgn(r.tail) != 0) {
        throw InvalidInput("grid '" + schema.grids[g].name + "' lies in c0 but has a nonzero row tail");
      }
    }
  }
}

namespace {

using Op = std::function<Rational(const Rational&, const Rational&)>;

ChainValue combine(const ChainValue& a, const ChainValue& b, const Op& f) {
  ChainValue r;
  const std::size_t n = std::max(a.prefix.size(), b.prefix.size());
  r.prefix.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.prefix.push_back(f(a.at(i), b.at(i)));
  r.tail = f(a.tail, b.tail);
  r.canonicalize();
  return r;
}

void same_shape(const SymbolicVector& a, const SymbolicVector& b) {
  if (a.finite.size() != b.finite.size() || a.chains.size() != b.chains.size() ||
      a.grids.size() != b.grids.size()) {
    throw InvalidInput("vectors have different shapes");
  }
}

SymbolicVector combine(const SymbolicVector& a, const SymbolicVector& b, const Op& f) {
  same_shape(a, b);
  SymbolicVector r;
  r.finite.resize(a.finite.size());
  for (std::size_t i = 0; i < a.finite.size(); ++i) r.finite[i] = f(a.finite[i], b.finite[i]);
  for (std::size_t c = 0; c < a.chains.size(); ++c) r.chains.push_back(combine(a.chains[c], b.chains[c], f));
  for (std::size_t g = 0; g < a.grids.size(); ++g) {
    GridValue out;
    const std::size_t rows = std::max(a.grids[g].rows.size(), b.grids[g].rows.size());
    for (std::size_t k = 0; k < rows; ++k) {
      out.rows.push_back(combine(a.grids[g].row(k), b.grids[g].row(k), f));
    }
    out.canonicalize();
    r.grids.push_back(std::move(out));
  }
  return r;
}

// Every stored value of v, each coordinate of the sequence space taking one of them.
template <typename F>
void for_each_value(const SymbolicVector& v, F&& f) {
  for (const auto& x : v.finite) f(x);
  for (const auto& c : v.chains) {
    for (const auto& x : c.prefix) f(x);
    f(c.tail);
  }
  for (const auto& g : v.grids) {
    for (const auto& r : g.rows) {
      for (const auto& x : r.prefix) f(x);
      f(r.tail);
    }
  }
}

}  // namespace

SymbolicVector operator+(const SymbolicVector& a, const SymbolicVector& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

SymbolicVector operator*(const Rational& s, const SymbolicVector& v) {
  return combine(v, v, [&s](const Rational& x, const Rational&) { return Rational(s * x); });
}

SymbolicVector operator-(const SymbolicVector& v) { return Rational(-1) * v; }

bool leq(const SymbolicVector& a, const SymbolicVector& b) {
  return is_nonnegative(combine(b, a, [](const Rational& x, const Rational& y) { return Rational(x - y); }));
}

bool is_nonnegative(const SymbolicVector& v) {
  bool ok = true;
  for_each_value(v, [&ok](const Rational& x) { ok = ok && sgn(x) >= 0; });
  return ok;
}

Rational sup_norm(const SymbolicVector& v) {
  Rational best = 0;
  for_each_value(v, [&best](const Rational& x) { best = std::max(best, abs(x)); });
  return best;
}

SymbolicVector modulus(const SymbolicVector& v) {
  return combine(v, v, [](const Rational& x, const Rational&) { return abs(x); });
}

SymbolicVector pointwise_sup(const SymbolicVector& u, const SymbolicVector& v) {
  return combine(u, v, [](const Rational& x, const Rational& y) { return std::max(x, y); });
}

Rational LinearFunctionalSpec::evaluate(const SymbolicVector& v) const {
  Rational s = 0;
  for (const auto& t : terms) {
    if (t.kind == TermKind::Finite) {
      if (t.index >= v.finite.size()) throw InvalidInput("functional references a missing coordinate");
      s += t.coefficient * v.finite[t.index];
    } else {
      if (t.index >= v.chains.size()) throw InvalidInput("functional references a missing chain");
      s += t.coefficient * v.chains[t.index].tail;
    }
  }
  return s;
}

void LinearFunctionalSpec::normalize() {
  std::sort(terms.begin(), terms.end(), [](const FunctionalTerm& a, const FunctionalTerm& b) {
    return std::pair(a.kind, a.index) < std::pair(b.kind, b.index);
  });
  std::vector<FunctionalTerm> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().kind == t.kind && merged.back().index == t.index) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const FunctionalTerm& t) { return sgn(t.coefficient) == 0; });
  terms = std::move(merged);
}

namespace {

void check_functional(const IndexSchema& schema, const LinearFunctionalSpec& f) {
  for (const auto& t : f.terms) {
    const std::size_t limit =
        t.kind == TermKind::Finite ? schema.finite_coords.size() : schema.chains.size();
    if (t.index >= limit) throw InvalidInput("functional term references a missing coordinate");
    if (sgn(t.coefficient) < 0) throw InvalidInput("functional coefficient is negative");
  }
}

// f o block: the functional evaluated after the finite block has acted.
LinearFunctionalSpec pull_back(const LinearFunctionalSpec& f, const QMatrix& block) {
  LinearFunctionalSpec out;
  for (const auto& t : f.terms) {
    if (t.kind == TermKind::ChainTail) {
      out.terms.push_back(t);
      continue;
    }
    for (std::size_t k = 0; k < block.cols(); ++k) {
      const Rational c = t.coefficient * block(t.index, k);
      if (sgn(c) != 0) out.terms.push_back({TermKind::Finite, k, c});
    }
  }
  out.normalize();
  return out;
}

Rational mass(const IndexSchema& schema, const LinearFunctionalSpec& f) {
  Rational m = 0;
  for (const auto& t : f.terms) {
    // The tail limit is the zero functional on a c0 chain.
    if (t.kind == TermKind::ChainTail && schema.chains[t.index].tag == SpaceTag::CZero) continue;
    m += abs(t.coefficient);
  }
  return m;
}

}  // namespace

ShiftInsertOperator::ShiftInsertOperator(IndexSchema schema, QMatrix block,
                                         std::vector<std::vector<LinearFunctionalSpec>> chain_entries,
                                         std::vector<GridSource> grid_entries, unsigned shift)
    : schema_(std::move(schema)),
      block_(std::move(block)),
      chain_entries_(std::move(chain_entries)),
      grid_entries_(std::move(grid_entries)),
      shift_(shift) {
  schema_.validate();
  const std::size_t f = schema_.finite_coords.size();
  if (block_.rows() != f || block_.cols() != f) throw InvalidInput("finite block has the wrong shape");
  if (!block_.is_nonnegative()) throw InvalidInput("finite block has a negative entry");
  if (shift_ == 0) throw InvalidInput("shift must be positive");
  if (chain_entries_.size() != schema_.chains.size()) throw InvalidInput("one entry source per chain required");
  if (grid_entries_.size() != schema_.grids.size()) throw InvalidInput("one entry source per grid required");
  for (auto& entries : chain_entries_) {
    if (entries.size() != shift_) throw InvalidInput("chain needs one entry functional per shifted position");
    for (auto& e : entries) {
      check_functional(schema_, e);
      e.normalize();
    }
  }
  for (auto& g : grid_entries_) {
    if (g.row0.size() != shift_ || g.cross.size() != shift_) {
      throw InvalidInput("grid needs one entry source per shifted position");
    }
    for (auto& e : g.row0) {
      check_functional(schema_, e);
      e.normalize();
    }
    for (const auto& c : g.cross) {
      if (sgn(c) < 0) throw InvalidInput("cross-row coefficient is negative");
    }
  }
}

SymbolicVector ShiftInsertOperator::apply(const SymbolicVector& v) const {
  check_vector(schema_, v);
  SymbolicVector out;
  out.finite = block_ * v.finite;
  for (std::size_t c = 0; c < v.chains.size(); ++c) {
    ChainValue r;
    for (const auto& e : chain_entries_[c]) r.prefix.push_back(e.evaluate(v));
    r.prefix.insert(r.prefix.end(), v.chains[c].prefix.begin(), v.chains[c].prefix.end());
    r.tail = v.chains[c].tail;
    r.canonicalize();
    out.chains.push_back(std::move(r));
  }
  for (std::size_t g = 0; g < v.grids.size(); ++g) {
    const GridValue& in = v.grids[g];
    GridValue res;
    for (std::size_t k = 0; k <= in.rows.size(); ++k) {
      const ChainValue old = in.row(k);
      ChainValue r;
      if (k == 0) {
        for (const auto& e : grid_entries_[g].row0) r.prefix.push_back(e.evaluate(v));
      } else {
        const Rational above = in.row(k - 1).tail;
        for (const auto& c : grid_entries_[g].cross) r.prefix.push_back(c * above);
      }
      r.prefix.insert(r.prefix.end(), old.prefix.begin(), old.prefix.end());
      r.tail = old.tail;
      res.rows.push_back(std::move(r));
    }
    res.canonicalize();
    out.grids.push_back(std::move(res));
  }
  return out;
}

ShiftInsertOperator ShiftInsertOperator::compose(const ShiftInsertOperator& inner) const {
  if (!(schema_ == inner.schema_)) throw InvalidInput("composing operators on different schemas");
  std::vector<std::vector<LinearFunctionalSpec>> chains(chain_entries_.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (const auto& e : chain_entries_[c]) chains[c].push_back(pull_back(e, inner.block_));
    for (const auto& e : inner.chain_entries_[c]) chains[c].push_back(e);
  }
  std::vector<GridSource> grids(grid_entries_.size());
  for (std::size_t g = 0; g < grids.size(); ++g) {
    for (const auto& e : grid_entries_[g].row0) grids[g].row0.push_back(pull_back(e, inner.block_));
    for (const auto& e : inner.grid_entries_[g].row0) grids[g].row0.push_back(e);
    grids[g].cross = grid_entries_[g].cross;
    grids[g].cross.insert(grids[g].cross.end(), inner.grid_entries_[g].cross.begin(),
                          inner.grid_entries_[g].cross.end());
  }
  return ShiftInsertOperator(schema_, block_ * inner.block_, std::move(chains), std::move(grids),
                             shift_ + inner.shift_);
}

ShiftInsertOperator ShiftInsertOperator::power(unsigned k) const {
  if (k == 0) throw InvalidInput("power of a shift operator must be positive");
  ShiftInsertOperator r = *this;
  for (unsigned i = 1; i < k; ++i) r = compose(r);
  return r;
}

SymbolicVector apply(const ShiftInsertOperator& op, const SymbolicVector& v) { return op.apply(v); }

Rational symbolic_operator_norm(const ShiftInsertOperator& op) {
  const IndexSchema& schema = op.schema();
  Rational best = 0;
  // Shifted coordinates copy one coordinate each.
  if (!schema.chains.empty() || !schema.grids.empty()) best = 1;
  const QMatrix& b = op.block();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < b.cols(); ++j) s += abs(b(i, j));
    best = std::max(best, s);
  }
  for (const auto& entries : op.chain_entries()) {
    for (const auto& e : entries) best = std::max(best, mass(schema, e));
  }
  for (std::size_t g = 0; g < schema.grids.size(); ++g) {
    for (const auto& e : op.grid_entries()[g].row0) best = std::max(best, mass(schema, e));
    if (schema.grids[g].tag == SpaceTag::LInfty) {
      for (const auto& c : op.grid_entries()[g].cross) best = std::max(best, abs(c));
    }
  }
  return best;
}

std::vector<SymbolicVector> symbolic_eigenspace(const ShiftInsertOperator& op,
                                                const Rational& lambda) {
  if (lambda != 1 && lambda != -1) throw DomainError("symbolic eigenspaces are supported for 1 and -1 only");
  const IndexSchema& schema = op.schema();
  const bool one = lambda == 1;
  // With op v = lambda v, each chain satisfies v(j + m s) = lambda^-m v(j), so
  // an eventually constant chain is constant (lambda = 1) or zero (lambda = -1),
  // and a c0 chain is zero. Grid rows follow the same rule; a nonzero constant
  // row 0 would force a nonzero row for every k unless the cross terms vanish.
  const std::size_t f = schema.finite_coords.size();
  std::vector<long> chain_var(schema.chains.size(), -1);
  std::vector<long> grid_var(schema.grids.size(), -1);
  std::size_t unknowns = f;
  if (one) {
    for (std::size_t c = 0; c < schema.chains.size(); ++c) {
      if (schema.chains[c].tag == SpaceTag::LInfty) chain_var[c] = static_cast<long>(unknowns++);
    }
    for (std::size_t g = 0; g < schema.grids.size(); ++g) {
      if (schema.grids[g].tag == SpaceTag::LInfty) grid_var[g] = static_cast<long>(unknowns++);
    }
  }
  std::vector<QVector> eqs;
  auto functional_row = [&](const LinearFunctionalSpec& e) {
    QVector row(unknowns);
    for (const auto& t : e.terms) {
      if (t.kind == TermKind::Finite) {
        row[t.index] += t.coefficient;
      } else if (chain_var[t.index] >= 0) {
        row[static_cast<std::size_t>(chain_var[t.index])] += t.coefficient;
      }
    }
    return row;
  };
  for (std::size_t i = 0; i < f; ++i) {
    QVector row(unknowns);
    for (std::size_t k = 0; k < f; ++k) row[k] = op.block()(i, k);
    row[i] -= lambda;
    eqs.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < schema.chains.size(); ++c) {
    for (const auto& e : op.chain_entries()[c]) {
      QVector row = -functional_row(e);
      if (chain_var[c] >= 0) row[static_cast<std::size_t>(chain_var[c])] += lambda;
      eqs.push_back(std::move(row));
    }
  }
  for (std::size_t g = 0; g < schema.grids.size(); ++g) {
    const GridSource& src = op.grid_entries()[g];
    for (const auto& e : src.row0) {
      QVector row = -functional_row(e);
      if (grid_var[g] >= 0) row[static_cast<std::size_t>(grid_var[g])] += lambda;
      eqs.push_back(std::move(row));
    }
    const bool crossing = std::any_of(src.cross.begin(), src.cross.end(),
                                      [](const Rational& c) { return sgn(c) != 0; });
    if (grid_var[g] >= 0 && crossing) {
      QVector row(unknowns);
      row[static_cast<std::size_t>(grid_var[g])] = 1;
      eqs.push_back(std::move(row));
    }
  }
  if (unknowns == 0) return {};
  if (eqs.empty()) eqs.emplace_back(unknowns);
  std::vector<SymbolicVector> basis;
  for (const auto& z : kernel_basis(QMatrix(eqs))) {
    SymbolicVector v = SymbolicVector::zero(schema);
    for (std::size_t i = 0; i < f; ++i) v.finite[i] = z[i];
    for (std::size_t c = 0; c < schema.chains.size(); ++c) {
      if (chain_var[c] >= 0) v.chains[c].tail = z[static_cast<std::size_t>(chain_var[c])];
    }
    for (std::size_t g = 0; g < schema.grids.size(); ++g) {
      if (grid_var[g] >= 0) v.grids[g].rows.push_back({{}, z[static_cast<std::size_t>(grid_var[g])]});
    }
    v.canonicalize();
    if (!(op.apply(v) == lambda * v)) throw std::logic_error("symbolic eigenvector failed verification");
    basis.push_back(std::move(v));
  }
  return basis;
}

const char* to_string(OrbitOutcome o) {
  switch (o) {
    case OrbitOutcome::Stabilized:
      return "Stabilized";
    case OrbitOutcome::Unbounded:
      return "Unbounded";
    case OrbitOutcome::NotSuperFixed:
      return "NotSuperFixed";
  }
  return "?";
}

namespace {

// Common value of a periodic profile, which is representable only when constant.
Rational constant_profile(const std::vector<Rational>& values, const char* what) {
  for (const auto& v : values) {
    if (v != values.front()) {
      throw Unsupported(std::string("orbit supremum of ") + what + " is periodic, not eventually constant");
    }
  }
  return values.front();
}

ChainValue raise_to(const ChainValue& c, const Rational& level) {
  ChainValue r;
  for (const auto& x : c.prefix) r.prefix.push_back(std::max(x, level));
  r.tail = std::max(c.tail, level);
  r.canonicalize();
  return r;
}

// sup_n op^n g for a super fixed g. Increasing orbits have pointwise limits,
// so the supremum is the limit: the finite part by the spectral projection,
// every shifted coordinate by the limit of the values written into it.
SymbolicVector limit_step(const ShiftInsertOperator& op, const SymbolicVector& g) {
  const IndexSchema& schema = op.schema();
  SymbolicVector limit = g;
  if (!schema.finite_coords.empty()) {
    if (power_bounded_verdict(op.block()).verdict != PowerBound::Yes) {
      throw Unsupported("finite block is not power bounded; no closed-form orbit limit");
    }
    limit.finite = fix_projection(op.block()) * g.finite;
  }
  SymbolicVector out = limit;
  out.grids.clear();
  for (std::size_t c = 0; c < schema.chains.size(); ++c) {
    std::vector<Rational> values;
    for (const auto& e : op.chain_entries()[c]) values.push_back(e.evaluate(limit));
    const Rational level = constant_profile(values, "a chain");
    out.chains[c] = raise_to(g.chains[c], level);
    if (schema.chains[c].tag == SpaceTag::CZero && sgn(out.chains[c].tail) != 0) {
      throw DomainError("orbit supremum of chain '" + schema.chains[c].name + "' is not in c0");
    }
  }
  for (std::size_t gi = 0; gi < schema.grids.size(); ++gi) {
    const GridSource& src = op.grid_entries()[gi];
    const GridValue& in = g.grids[gi];
    GridValue res;
    for (std::size_t k = 0; k <= in.rows.size(); ++k) {
      std::vector<Rational> values;
      if (k == 0) {
        for (const auto& e : src.row0) values.push_back(e.evaluate(limit));
      } else {
        const Rational above = in.row(k - 1).tail;
        for (const auto& c : src.cross) values.push_back(c * above);
      }
      res.rows.push_back(raise_to(in.row(k), constant_profile(values, "a grid row")));
    }
    res.canonicalize();
    if (schema.grids[gi].tag == SpaceTag::CZero) {
      for (const auto& r : res.rows) {
        if (sgn(r.tail) != 0) throw DomainError("orbit supremum of grid '" + schema.grids[gi].name + "' is not in c0");
      }
    }
    out.grids.push_back(std::move(res));
  }
  out.canonicalize();
  return out;
}

// Each further limit step appends a row equal to cross times the last row tail.
bool amplifies(const ShiftInsertOperator& op, const SymbolicVector& s) {
  for (std::size_t g = 0; g < op.schema().grids.size(); ++g) {
    if (op.schema().grids[g].tag != SpaceTag::LInfty) continue;
    const auto& cross = op.grid_entries()[g].cross;
    const bool growing = std::any_of(cross.begin(), cross.end(), [](const Rational& c) { return c > 1; });
    if (!growing) continue;
    for (const auto& r : s.grids[g].rows) {
      if (sgn(r.tail) != 0) return true;
    }
  }
  return false;
}

}  // namespace

OrbitSup orbit_sup(const ShiftInsertOperator& op, const SymbolicVector& g) {
  check_vector(op.schema(), g);
  OrbitSup out;
  if (!leq(g, op.apply(g))) {
    out.outcome = OrbitOutcome::NotSuperFixed;
    return out;
  }
  SymbolicVector s = limit_step(op, g);
  if (!amplifies(op, s)) {
    out.outcome = OrbitOutcome::Stabilized;
    out.sup = std::move(s);
    return out;
  }
  out.outcome = OrbitOutcome::Unbounded;
  for (std::size_t i = 0; i < kUnboundedEvidenceSteps; ++i) {
    out.evidence_norms.push_back(sup_norm(s));
    out.evidence.push_back(s);
    if (i + 1 < kUnboundedEvidenceSteps) s = limit_step(op, s);
  }
  return out;
}

namespace {

LinearFunctionalSpec average_of_first_two() {
  return {{{TermKind::Finite, 0, Rational(1, 2)}, {TermKind::Finite, 1, Rational(1, 2)}}};
}

}  // namespace

ShiftInsertOperator builtin_operator(const std::string& name) {
  if (name == "e41") {
    // c0 over {-2, -1} and N_0: the two negative coordinates are fixed, their
    // average enters at 0 and the chain shifts right.
    IndexSchema schema{{"-2", "-1"}, {{"n", SpaceTag::CZero}}, {}};
    return ShiftInsertOperator(schema, QMatrix::identity(2), {{average_of_first_two()}}, {});
  }
  if (name == "e42") {
    // R^3 x l-inf x l-inf: S on R^3, (f1 + f3)/2 enters the first chain, the
    // tail limit of the first chain enters the second.
    IndexSchema schema{{"1", "2", "3"}, {{"g", SpaceTag::LInfty}, {"h", SpaceTag::LInfty}}, {}};
    const QMatrix s{{1, 0, 0}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}, {0, 0, 1}};
    LinearFunctionalSpec g_entry{{{TermKind::Finite, 0, Rational(1, 2)}, {TermKind::Finite, 2, Rational(1, 2)}}};
    LinearFunctionalSpec h_entry{{{TermKind::ChainTail, 0, Rational(1)}}};
    return ShiftInsertOperator(schema, s, {{g_entry}, {h_entry}}, {});
  }
  if (name == "e43") {
    // l-inf over {-2, -1} and N_0 x N_0: the negative coordinates swap, their
    // average enters row 0, twice the tail limit of row k - 1 enters row k.
    IndexSchema schema{{"-2", "-1"}, {}, {{"k", SpaceTag::LInfty}}};
    const QMatrix swap{{0, 1}, {1, 0}};
    return ShiftInsertOperator(schema, swap, {}, {GridSource{{average_of_first_two()}, {Rational(2)}}});
  }
  throw InvalidInput("unknown built-in operator '" + name + "'");
}

std::vector<std::string> builtin_operator_names() { return {"e41", "e42", "e43"}; }

Flattening::Flattening(const IndexSchema& schema, const std::vector<SymbolicVector>& vectors)
    : schema_(schema),
      chain_len_(schema.chains.size(), 0),
      grid_row_len_(schema.grids.size()) {
  for (const auto& v : vectors) {
    check_vector(schema_, v);
    for (std::size_t c = 0; c < v.chains.size(); ++c) {
      chain_len_[c] = std::max(chain_len_[c], v.chains[c].prefix.size());
    }
    for (std::size_t g = 0; g < v.grids.size(); ++g) {
      auto& lens = grid_row_len_[g];
      if (lens.size() < v.grids[g].rows.size()) lens.resize(v.grids[g].rows.size(), 0);
      for (std::size_t k = 0; k < v.grids[g].rows.size(); ++k) {
        lens[k] = std::max(lens[k], v.grids[g].rows[k].prefix.size());
      }
    }
  }
  dim_ = schema_.finite_coords.size();
  for (auto l : chain_len_) dim_ += l + 1;
  for (const auto& lens : grid_row_len_) {
    for (auto l : lens) dim_ += l + 1;
  }
}

QVector Flattening::flatten(const SymbolicVector& v) const {
  check_vector(schema_, v);
  QVector x = v.finite;
  x.reserve(dim_);
  auto put = [&x](const ChainValue& c, std::size_t len) {
    if (c.prefix.size() > len) throw InvalidInput("vector is longer than the flattening layout");
    for (std::size_t p = 0; p < len; ++p) x.push_back(c.at(p));
    x.push_back(c.tail);
  };
  for (std::size_t c = 0; c < v.chains.size(); ++c) put(v.chains[c], chain_len_[c]);
  for (std::size_t g = 0; g < v.grids.size(); ++g) {
    const auto& lens = grid_row_len_[g];
    if (v.grids[g].rows.size() > lens.size()) throw InvalidInput("vector has more rows than the flattening layout");
    for (std::size_t k = 0; k < lens.size(); ++k) put(v.grids[g].row(k), lens[k]);
  }
  return x;
}

SymbolicVector Flattening::unflatten(const QVector& x) const {
  if (x.size() != dim_) throw InvalidInput("flattened vector has the wrong length");
  SymbolicVector v = SymbolicVector::zero(schema_);
  std::size_t pos = 0;
  for (auto& f : v.finite) f = x[pos++];
  auto take = [&](std::size_t len) {
    ChainValue c;
    for (std::size_t p = 0; p < len; ++p) c.prefix.push_back(x[pos++]);
    c.tail = x[pos++];
    return c;
  };
  for (std::size_t c = 0; c < v.chains.size(); ++c) v.chains[c] = take(chain_len_[c]);
  for (std::size_t g = 0; g < v.grids.size(); ++g) {
    for (auto len : grid_row_len_[g]) v.grids[g].rows.push_back(take(len));
  }
  v.canonicalize();
  return v;
}

}  // namespace latfix
