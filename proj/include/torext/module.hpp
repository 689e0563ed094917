/**
 * @file module.hpp
 * @brief Finitely presented graded modules over a quotient ring: kernels,
 *        cokernels, Hom, tensor, homology, minimalization, free resolutions,
 *        Hilbert series, depth, annihilators, Fitting ideals.
 *
 * A module is coker(Phi) for a homogeneous relation matrix Phi over R. All
 * computations lift to the ambient ring: a submodule of R^b is handled in
 * S^b with I*e_j adjoined. Entries are stored in normal form modulo I.
 */
#pragma once

#include <optional>

#include "torext/ring.hpp"

namespace torext {

class FPModule;
struct ChainComplex;

constexpr int kDepthInfinity = 1 << 28;  // depth of the zero module

/// Columns of I*e_j for every defining relation, inside S^rank.
std::vector<MVec> ie_columns(const QRingPtr& R, int rank);

class FPModule {
 public:
  FPModule() = default;

  /// Validated: every relation column homogeneous for the generator degrees.
  static FPModule make(QRingPtr R, std::vector<std::int64_t> gdeg, std::vector<MVec> rel);
  static FPModule make_cols(QRingPtr R, std::vector<std::int64_t> gdeg,
                            const std::vector<std::vector<Polynomial>>& columns);
  static FPModule free_module(QRingPtr R, std::vector<std::int64_t> gdeg);
  static FPModule zero(QRingPtr R);
  /// R / (gens): cyclic quotient.
  static FPModule cyclic(QRingPtr R, const std::vector<Polynomial>& gens);
  /// Submodule of R generated by homogeneous ring elements, with its
  /// computed presentation (generators map to the listed elements).
  static FPModule submodule_of_R(QRingPtr R, const std::vector<Polynomial>& gens);

  const QRingPtr& ring() const { return d_->R; }
  int gens() const { return static_cast<int>(d_->gdeg.size()); }
  const std::vector<std::int64_t>& gdeg() const { return d_->gdeg; }
  const std::vector<MVec>& rel() const { return d_->rel; }
  int rels() const { return static_cast<int>(d_->rel.size()); }
  Polynomial rel_entry(int row, int col) const;

  bool valid() const { return static_cast<bool>(d_); }
  std::string key() const;  // structural identity for caches and dedup

  const GroebnerBasis& rel_gb() const;  // GB of relations + I*e in S^b
  bool is_zero() const;
  SeriesPrefix hilbert(std::int64_t D) const;
  RIdeal annihilator() const;
  FPModule minimalized() const;
  int mu() const;  // minimal number of generators
  std::int64_t pd_S() const;
  int depth() const;  // nvars - pd_S; kDepthInfinity for the zero module
  bool is_mcm() const;
  RIdeal fitting_ideal(int i) const;

  /// Membership of a vector (in S^b) in the relation submodule.
  bool relation_member(const MVec& v) const;

  /// Resolution prefix of this module, assumed minimal (cached).
  ChainComplex resolution_prefix(int L) const;

 private:
  struct Data {
    QRingPtr R;
    std::vector<std::int64_t> gdeg;
    std::vector<MVec> rel;
  };
  struct Cache;
  std::shared_ptr<const Data> d_;
  std::shared_ptr<Cache> c_;

  friend struct FPModuleTestAccess;
};

/// A map of modules, given on generators; degree-0 and well-defined
/// (matrix * relations lands in the target's relation span, certificate kept).
struct ModuleMap {
  FPModule src, dst;
  std::vector<std::vector<Polynomial>> mat;  // dst.gens() x src.gens()

  static ModuleMap make(FPModule src, FPModule dst,
                        std::vector<std::vector<Polynomial>> mat);
  static ModuleMap identity(const FPModule& m);
  static ModuleMap zero_map(FPModule src, FPModule dst);

  MVec column(int j, const ModOrder& ord) const;
  std::vector<MVec> columns() const;
};

struct KernelResult {
  FPModule ker;
  std::vector<MVec> inclusion;  // generator vectors inside S^{src.gens()}
};

KernelResult kernel(const ModuleMap& f);
FPModule cokernel(const ModuleMap& f);
FPModule image(const ModuleMap& f);

/// ker(g)/im(f) for a composable pair with g o f = 0 (verified).
FPModule homology(const ModuleMap& f, const ModuleMap& g);

struct HomResult {
  FPModule hom;
  /// Decoder: generator k of hom yields the map with matrix gen_maps[k]
  /// (dst.gens() x src.gens()).
  std::vector<std::vector<std::vector<Polynomial>>> gen_maps;
};

HomResult hom_module(const FPModule& M, const FPModule& N);
FPModule tensor(const FPModule& M, const FPModule& N);
FPModule direct_sum(const FPModule& M, const FPModule& N);

/// N^{b} with per-block degree shifts: block j is N with degrees + shift[j].
FPModule block_module(const FPModule& N, const std::vector<std::int64_t>& shifts);

struct ChainComplex {
  QRingPtr R;
  std::vector<std::vector<std::int64_t>> gdeg;  // F_0 .. F_L
  std::vector<std::vector<MVec>> diff;          // diff[k]: columns of d_{k+1}
  int length() const { return static_cast<int>(gdeg.size()) - 1; }
  std::vector<int> betti() const;
};

/// Minimal graded free resolution of M over R to homological degree L.
ChainComplex free_resolution(const FPModule& M, int L);

/// d_i o d_{i+1} = 0 for every consecutive pair, entries checked modulo I.
bool complex_composes_to_zero(const ChainComplex& c);

}  // namespace torext
