/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over a shared ring context, with the
 *        canonical text form used by reports and scenario files.
 */
#pragma once

#include <optional>
#include "torext/core.hpp"

namespace torext {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Ambient polynomial ring S: field, named variables, positive weights and
/// the active monomial order. Immutable and shared; polynomials keep a
/// pointer to their ring.
class PolyRing {
 public:
  static PolyRingPtr make(Field f, std::vector<std::string> vars,
                          std::vector<std::int64_t> weights,
                          MonoOrder ord = MonoOrder{});

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const MonoOrder& order() const { return order_; }

  std::int64_t wdeg(const Mono& m) const { return m.weighted_degree(weights_); }
  int cmp(const Mono& a, const Mono& b) const { return order_.cmp(a, b); }

  /// Structural identity; polynomials may only mix when this holds.
  bool same(const PolyRing& o) const;

  /// Same ring with one extra variable appended and the given order.
  PolyRingPtr extended(const std::string& var, MonoOrder ord) const;
  /// Same ring with a different order.
  PolyRingPtr reordered(MonoOrder ord) const;

  int var_index(const std::string& name) const;  // -1 if absent

 private:
  Field field_{101};
  std::vector<std::string> vars_;
  std::vector<std::int64_t> weights_;
  MonoOrder order_;
};

struct Term {
  Mono m;
  Coeff c;
};

/// Result of a homogeneity query.
struct HomogeneityResult {
  enum class Tag { Zero, Homogeneous, Inhomogeneous } tag;
  std::int64_t degree = 0;  // valid when Homogeneous
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr r) : ring_(std::move(r)) {}
  Polynomial(PolyRingPtr r, std::vector<Term> terms);  // normalizes + sorts

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& lt() const;  // leading term under the ring's order

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// this + c * m * o, the Buchberger reduction step.
  Polynomial axpy(const Coeff& c, const Mono& m, const Polynomial& o) const;
  Polynomial scale(const Coeff& c) const;
  Polynomial mul_term(const Coeff& c, const Mono& m) const;

  std::int64_t total_degree() const;  // max over terms; 0 for the zero poly
  HomogeneityResult homogeneity() const;
  bool homogeneous_of_degree(std::int64_t d) const;

  Polynomial derivative(int var) const;

  /// Move to a structurally identical ring with a different order (re-sorts),
  /// or to an extension ring with more variables (pads exponents).
  Polynomial transport(const PolyRingPtr& to) const;

  /// Canonical text: terms sorted descending by grevlex, coefficients as
  /// least nonnegative residues, e.g. "x^2 + 100*x*y".
  std::string str() const;

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;  // sorted descending by ring_->order(), no zeros
  friend Polynomial poly_from_sorted(PolyRingPtr, std::vector<Term>&&);
};

Polynomial poly_zero(const PolyRingPtr& r);
Polynomial poly_const(const PolyRingPtr& r, std::int64_t v);
Polynomial poly_var(const PolyRingPtr& r, int var, std::uint32_t exp = 1);
Polynomial poly_mono(const PolyRingPtr& r, const Mono& m, const Coeff& c);

/// Parses the canonical syntax: integer coefficients, explicit '*', '^',
/// parentheses, and '+'/'-'. Variables must belong to the ring.
Polynomial parse_poly(const PolyRingPtr& r, const std::string& text);

void check_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace torext
