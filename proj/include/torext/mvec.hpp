/**
 * @file mvec.hpp
 * @brief Elements of free modules S^r as sparse term lists, and module
 *        orders (term-over-position, position-over-term, Schreyer-induced).
 */
#pragma once

#include "torext/poly.hpp"

namespace torext {

struct MTerm {
  int comp = 0;
  Mono m;
  Coeff c;
};

struct ModOrder;

/// Free-module element. Terms are kept sorted descending with respect to the
/// order passed to each operation; the Gröbner engine fixes one order per run.
class MVec {
 public:
  MVec() = default;

  const std::vector<MTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  const MTerm& lt() const;

  static MVec make(const PolyRing& R, const ModOrder& o, std::vector<MTerm> terms);
  static MVec from_columns(const std::vector<Polynomial>& col, const ModOrder& o);
  static MVec unit(const PolyRing& R, int comp);
  static MVec from_poly(const Polynomial& p, const ModOrder& o, int comp = 0);

  std::vector<Polynomial> to_columns(const PolyRingPtr& R, int rank) const;
  Polynomial component(const PolyRingPtr& R, int comp) const;

  MVec add(const PolyRing& R, const ModOrder& o, const MVec& other) const;
  /// this + c * m * other
  MVec axpy(const PolyRing& R, const ModOrder& o, const Coeff& c, const Mono& m,
            const MVec& other) const;
  MVec mul_term(const PolyRing& R, const Coeff& c, const Mono& m) const;
  MVec mul_poly(const PolyRing& R, const ModOrder& o, const Polynomial& p) const;
  MVec scale(const PolyRing& R, const Coeff& c) const;
  MVec negate(const PolyRing& R) const;

  /// Shift every component index by delta (block embeddings).
  MVec shifted(int delta) const;

  MVec transport(const PolyRingPtr& from, const PolyRingPtr& to, const ModOrder& o) const;

  std::int64_t max_total_degree() const;
  bool equals(const PolyRing& R, const MVec& o) const;

 private:
  std::vector<MTerm> t_;
};

/// Order on free-module terms. Schreyer compares images under a map whose
/// leading terms are recorded per generator.
struct ModOrder {
  MonoOrder base;
  enum class Pos { TOP, POT, Schreyer } pos = Pos::TOP;
  std::vector<std::pair<int, Mono>> schreyer_lt;  // target (component, monomial) per gen
  std::shared_ptr<const ModOrder> schreyer_target;

  /// +1 if a-term > b-term.
  int cmp(int ca, const Mono& a, int cb, const Mono& b) const;

  static ModOrder top(MonoOrder b = MonoOrder{}) { return {std::move(b), Pos::TOP, {}, nullptr}; }
  static ModOrder pot(MonoOrder b = MonoOrder{}) { return {std::move(b), Pos::POT, {}, nullptr}; }
  static ModOrder schreyer(const ModOrder& target, std::vector<std::pair<int, Mono>> lts);
};

}  // namespace torext
