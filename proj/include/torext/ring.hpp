/**
 * @file ring.hpp
 * @brief The ring layer: graded quotient rings R = S/I with cached data,
 *        ideals of R in canonical reduced form, and the Jacobian singular
 *        locus.
 */
#pragma once

#include <mutex>

#include "torext/ideals.hpp"

namespace torext {

class QuotientRing;
using QRingPtr = std::shared_ptr<const QuotientRing>;

/// An ideal of R represented by its full preimage in S (always containing
/// the defining ideal). Canonical form: the reduced Gröbner basis of the
/// preimage, grevlex, generators sorted descending by leading term.
class RIdeal {
 public:
  RIdeal() = default;
  RIdeal(QRingPtr R, std::vector<Polynomial> gens);

  const QRingPtr& ring() const { return ring_; }
  /// Reduced generators of the preimage in S.
  const std::vector<Polynomial>& gens() const { return gens_; }
  std::vector<std::string> canonical() const;

  bool is_unit() const;
  bool is_zero_in_R() const;  // preimage equals the defining ideal
  bool contains(const Polynomial& f) const;
  bool contains_ideal(const RIdeal& j) const;
  bool equals(const RIdeal& j) const;
  bool radical_contains(const Polynomial& f) const;

  RIdeal intersect(const RIdeal& j) const;
  RIdeal sum(const RIdeal& j) const;
  RIdeal product(const RIdeal& j) const;
  RIdeal power(int k) const;

  /// Krull dimension of V(this) inside Spec R; -1 when empty.
  int dim_V() const;
  int height_in_R() const;

  const GroebnerBasis& gb() const { return gb_; }

 private:
  QRingPtr ring_;
  std::vector<Polynomial> gens_;
  GroebnerBasis gb_;
};

bool radical_equal(const RIdeal& a, const RIdeal& b);

class FPModule;  // module layer

/// R = S/I with weighted grading. Immutable after construction; caches for
/// the canonical module and derived data are filled lazily under a lock.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  /// Validates: p prime or 0, homogeneous relations, 1 not in I.
  static QRingPtr define(std::int64_t characteristic, std::vector<std::string> vars,
                         std::vector<std::int64_t> weights,
                         const std::vector<std::string>& relations, GBOptions limits = {});
  static QRingPtr define(const PolyRingPtr& S, std::vector<Polynomial> relations,
                         GBOptions limits = {});

  const PolyRingPtr& ambient() const { return S_; }
  const std::vector<Polynomial>& relations() const { return rels_; }
  const GroebnerBasis& defining_gb() const { return gbI_; }
  const GBOptions& limits() const { return limits_; }

  int dim() const { return dim_; }
  int codim() const { return S_->nvars() - dim_; }
  std::int64_t characteristic() const { return S_->field().characteristic(); }

  Polynomial nf(const Polynomial& f) const;  // normal form modulo I
  bool is_zero_in_R(const Polynomial& f) const { return nf(f).is_zero(); }

  RIdeal ideal(std::vector<Polynomial> gens) const;
  RIdeal ideal_strs(const std::vector<std::string>& gens) const;
  RIdeal zero_ideal() const;
  RIdeal unit_ideal() const;
  RIdeal irrelevant_ideal() const;  // all the variables

  /// Jacobian singular ideal: I + (codim x codim minors of the Jacobian).
  RIdeal singular_locus() const;

  SeriesPrefix hilbert(std::int64_t D) const;

  Polynomial parse(const std::string& s) const { return parse_poly(S_, s); }

  // Lazy canonical-module cell, filled by the module layer (canonical.cpp).
  struct OmegaCell {
    std::shared_ptr<FPModule> omega;
    int mu = 0;
    std::shared_ptr<RIdeal> trace;
  };
  mutable std::mutex omega_mu;
  mutable OmegaCell omega_cell;

 private:
  PolyRingPtr S_;
  std::vector<Polynomial> rels_;
  GroebnerBasis gbI_;
  GBOptions limits_;
  int dim_ = 0;
};

}  // namespace torext
