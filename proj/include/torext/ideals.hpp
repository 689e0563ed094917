/**
 * @file ideals.hpp
 * @brief Derived operations over the ambient polynomial ring: ideal
 *        intersection/quotient/saturation, radical membership through the
 *        extra-variable trick, Krull dimension from initial ideals, graded
 *        Hilbert functions, minimal generators and minimal free resolutions.
 */
#pragma once

#include "torext/groebner.hpp"

namespace torext {

GroebnerBasis gb_of_ideal(const PolyRingPtr& S, const std::vector<Polynomial>& gens,
                          const GBOptions& opts = {});
GroebnerBasis gb_of_columns(const PolyRingPtr& S, int rank, const std::vector<MVec>& cols,
                            const GBOptions& opts = {});

std::vector<Polynomial> gb_polys(const GroebnerBasis& gb);  // rank 1, reduced gens
Polynomial nf_poly(const Polynomial& f, const GroebnerBasis& gb, const GBOptions& opts = {});

/// I cap J via an elimination order on t*I + (1-t)*J.
std::vector<Polynomial> ideal_intersect(const PolyRingPtr& S, const std::vector<Polynomial>& I,
                                        const std::vector<Polynomial>& J,
                                        const GBOptions& opts = {});

/// (I : f) = { r : r*f in I }.
std::vector<Polynomial> ideal_quotient(const PolyRingPtr& S, const std::vector<Polynomial>& I,
                                       const Polynomial& f, const GBOptions& opts = {});

/// (I : f^infty) by iterating the quotient until stable.
std::vector<Polynomial> saturate(const PolyRingPtr& S, const std::vector<Polynomial>& I,
                                 const Polynomial& f, const GBOptions& opts = {});

/// f in sqrt(I), i.e. 1 in I + (1 - t*f) in S[t].
bool radical_member(const PolyRingPtr& S, const Polynomial& f,
                    const std::vector<Polynomial>& I, const GBOptions& opts = {});

/// Krull dimension of S/I via maximal independent sets of the initial ideal;
/// the unit ideal yields -1.
int dim_quotient(const PolyRingPtr& S, const std::vector<Polynomial>& I,
                 const GBOptions& opts = {});

/// All monomials of weighted degree d (cached per ring).
const std::vector<Mono>& monos_of_wdeg(const PolyRingPtr& S, std::int64_t d);

struct SeriesPrefix {
  std::int64_t offset = 0;           // degree of dims[0]
  std::vector<std::int64_t> dims;    // graded dimensions offset .. offset+len-1

  std::int64_t at(std::int64_t deg) const;
  bool all_zero() const;
  /// Shift-aligned comparison from the first nonzero entry, over the common
  /// trailing window. Zero series compare equal only to zero series.
  static bool aligned_equal(const SeriesPrefix& a, const SeriesPrefix& b);
  std::string str() const;
};

SeriesPrefix series_add(const SeriesPrefix& a, const SeriesPrefix& b);

/// Graded dimensions of coker(cols) in S^rank with generator degrees gdeg,
/// for degrees min(gdeg)..D.
SeriesPrefix hilbert_free_quotient(const PolyRingPtr& S, const std::vector<std::int64_t>& gdeg,
                                   int rank, const std::vector<MVec>& cols, std::int64_t D,
                                   const GBOptions& opts = {});

std::int64_t column_degree(const PolyRingPtr& S, const MVec& col,
                           const std::vector<std::int64_t>& gdeg);

/// Minimal generating set of the submodule generated by cols, modulo the
/// submodule generated by helpers (which is assumed contained in the result's
/// span). Ascending-degree greedy with Gröbner membership.
std::vector<MVec> minimal_generators(const PolyRingPtr& S, int rank,
                                     const std::vector<std::int64_t>& gdeg,
                                     std::vector<MVec> cols, const std::vector<MVec>& helpers,
                                     const GBOptions& opts = {});

/// Generators of { c : cols * c in <helpers> } inside S^{#cols}: the syzygy
/// module of cols relative to helpers.
std::vector<MVec> kernel_columns(const PolyRingPtr& S, int rank, const std::vector<MVec>& cols,
                                 const std::vector<MVec>& helpers, const GBOptions& opts = {});

/// Determinant by Laplace expansion (matrices in scope are tiny).
Polynomial poly_det(const PolyRingPtr& S, const std::vector<std::vector<Polynomial>>& m);

/// All k-element subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> index_subsets(int n, int k);

/// Annihilator of coker(cols) in S^rank: the ideal { r : r*e_j in <cols> for
/// all j }, computed componentwise through syzygy coefficients and
/// intersected. Returns reduced generators.
std::vector<Polynomial> module_ann_S(const PolyRingPtr& S, int rank,
                                     const std::vector<MVec>& cols,
                                     const GBOptions& opts = {});

struct ResolutionStep {
  std::vector<std::int64_t> gdeg;  // generator degrees of F_k
  std::vector<MVec> diff;          // columns of d_k : F_k -> F_{k-1}
};

/// Minimal graded free resolution over S of coker(cols in S^rank); must
/// terminate within nvars steps (an overflow is an engine bug).
std::vector<ResolutionStep> minimal_resolution_S(const PolyRingPtr& S,
                                                 const std::vector<std::int64_t>& gdeg, int rank,
                                                 const std::vector<MVec>& cols,
                                                 const GBOptions& opts = {});

}  // namespace torext
