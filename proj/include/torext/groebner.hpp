/**
 * @file groebner.hpp
 * @brief Buchberger's algorithm for submodules of free modules, with
 *        representation tracking and syzygy extraction from zero reductions.
 *
 * One engine serves ideals (rank 1) and module computations alike. Resource
 * caps abort with a typed error; they never produce a wrong basis.
 */
#pragma once

#include "torext/mvec.hpp"

namespace torext {

struct GBOptions {
  std::int64_t max_total_degree = 40;  // total (unweighted) degree of any leading monomial
  std::int64_t max_pairs = 200000;     // pairs ever enqueued
  bool want_syzygies = false;          // track representations, collect syzygies of the inputs
};

struct Division {
  MVec rem;
  std::vector<Polynomial> quot;  // v = sum quot[k]*list[k] + rem
};

/// A Gröbner basis of the submodule generated by `inputs` of S^rank.
/// `gens` is the reduced basis (unique for the order): monic, sorted
/// descending by leading term, no generator's term divisible by another's
/// leading term. When syzygies were requested, `syzygies` generate
/// syz(inputs) inside S^{#inputs} and `track_basis`/`track_reps` hold the
/// full intermediate basis with its input representations.
struct GroebnerBasis {
  PolyRingPtr S;
  int rank = 1;
  ModOrder ord;
  std::vector<MVec> gens;
  std::vector<MVec> inputs;
  std::vector<MVec> track_basis;
  std::vector<MVec> track_reps;  // track_basis[k] = sum_j track_reps[k][j] * inputs[j]
  std::vector<MVec> syzygies;
  bool has_syzygies = false;

  bool is_unit_ideal() const;  // rank 1: basis contains a nonzero constant
};

GroebnerBasis buchberger(const PolyRingPtr& S, int rank, std::vector<MVec> inputs,
                         const ModOrder& ord, const GBOptions& opts = {});

/// Full normal form against an arbitrary list (quotients recorded).
Division divide(const PolyRingPtr& S, const MVec& v, const std::vector<MVec>& list,
                const ModOrder& ord, const GBOptions& opts = {}, int skip = -1);

MVec normal_form(const MVec& v, const GroebnerBasis& gb, const GBOptions& opts = {});

/// True iff v lies in the submodule (reduced basis membership).
bool member(const MVec& v, const GroebnerBasis& gb, const GBOptions& opts = {});

/// Expresses v over the original inputs; requires want_syzygies tracking and
/// membership. Returns one polynomial coefficient per input.
std::vector<Polynomial> membership_certificate(const MVec& v, const GroebnerBasis& gb,
                                               const GBOptions& opts = {});

/// Schreyer order induced on syz(inputs) by the basis leading terms.
ModOrder induced_schreyer_order(const GroebnerBasis& gb);

}  // namespace torext
