#include "torext/module.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace torext {

namespace {
ModOrder top_of(const QRingPtr& R) { return ModOrder::top(R->ambient()->order()); }
}  // namespace

std::vector<MVec> ie_columns(const QRingPtr& R, int rank) {
  std::vector<MVec> out;
  ModOrder ord = top_of(R);
  for (int j = 0; j < rank; ++j)
    for (const auto& f : R->relations()) out.push_back(MVec::from_poly(f, ord, j));
  return out;
}

struct FPModule::Cache {
  std::mutex mu;
  std::optional<GroebnerBasis> relgb;
  std::optional<bool> zero;
  std::shared_ptr<FPModule> minimal;
  std::optional<RIdeal> ann;
  std::optional<std::int64_t> pdS;
  // minimal resolution data for this (already minimal) module:
  // res_diff[k] = columns of d_{k+1}; res_gdeg[k] = degrees of F_{k+1}
  std::vector<std::vector<std::int64_t>> res_gdeg;
  std::vector<std::vector<MVec>> res_diff;
  bool res_primed = false;
};

FPModule FPModule::make(QRingPtr R, std::vector<std::int64_t> gdeg, std::vector<MVec> rel) {
  auto d = std::make_shared<Data>();
  const PolyRingPtr& S = R->ambient();
  ModOrder ord = ModOrder::top(S->order());
  d->gdeg = std::move(gdeg);
  std::vector<MVec> cleaned;
  for (auto& col : rel) {
    // normal form of every entry modulo I keeps presentations canonical
    std::vector<MTerm> ts;
    for (int j = 0; j < static_cast<int>(d->gdeg.size()); ++j) {
      Polynomial e = R->nf(col.component(S, j));
      for (const auto& t : e.terms()) ts.push_back({j, t.m, t.c});
    }
    MVec nf = MVec::make(*S, ord, std::move(ts));
    if (nf.is_zero()) continue;
    column_degree(S, nf, d->gdeg);  // throws on inhomogeneous columns
    cleaned.push_back(std::move(nf));
  }
  d->rel = std::move(cleaned);
  d->R = std::move(R);
  FPModule m;
  m.d_ = std::move(d);
  m.c_ = std::make_shared<Cache>();
  return m;
}

FPModule FPModule::make_cols(QRingPtr R, std::vector<std::int64_t> gdeg,
                             const std::vector<std::vector<Polynomial>>& columns) {
  ModOrder ord = top_of(R);
  std::vector<MVec> rel;
  for (const auto& c : columns) {
    if (c.size() != gdeg.size()) fail_structural("relation column has wrong length");
    rel.push_back(MVec::from_columns(c, ord));
  }
  return make(std::move(R), std::move(gdeg), std::move(rel));
}

FPModule FPModule::free_module(QRingPtr R, std::vector<std::int64_t> gdeg) {
  return make(std::move(R), std::move(gdeg), {});
}

FPModule FPModule::zero(QRingPtr R) { return make(std::move(R), {}, {}); }

FPModule FPModule::cyclic(QRingPtr R, const std::vector<Polynomial>& gens) {
  ModOrder ord = top_of(R);
  std::vector<MVec> rel;
  for (const auto& g : gens) rel.push_back(MVec::from_poly(g, ord, 0));
  return make(std::move(R), {0}, std::move(rel));
}

FPModule FPModule::submodule_of_R(QRingPtr R, const std::vector<Polynomial>& gens) {
  const PolyRingPtr& S = R->ambient();
  ModOrder ord = top_of(R);
  std::vector<MVec> cols;
  std::vector<std::int64_t> gdeg;
  for (const auto& g : gens) {
    Polynomial n = R->nf(g);
    if (n.is_zero()) fail_structural("zero generator in submodule presentation");
    auto h = n.homogeneity();
    if (h.tag != HomogeneityResult::Tag::Homogeneous)
      fail_structural("inhomogeneous submodule generator: " + g.str());
    gdeg.push_back(h.degree);
    cols.push_back(MVec::from_poly(n, ord, 0));
  }
  // relations among the generators inside R
  auto rel = kernel_columns(S, 1, cols, ie_columns(R, 1), R->limits());
  return make(R, std::move(gdeg), std::move(rel));
}

Polynomial FPModule::rel_entry(int row, int col) const {
  return d_->rel.at(col).component(d_->R->ambient(), row);
}

std::string FPModule::key() const {
  std::ostringstream os;
  os << 'g';
  for (auto x : d_->gdeg) os << ' ' << x;
  os << '|';
  for (const auto& c : d_->rel) {
    for (int j = 0; j < gens(); ++j) os << c.component(d_->R->ambient(), j).str() << ';';
    os << '|';
  }
  return os.str();
}

const GroebnerBasis& FPModule::rel_gb() const {
  std::scoped_lock lk(c_->mu);
  if (!c_->relgb) {
    std::vector<MVec> lifted = d_->rel;
    for (auto& v : ie_columns(d_->R, gens())) lifted.push_back(std::move(v));
    c_->relgb = gb_of_columns(d_->R->ambient(), std::max(gens(), 1), lifted, d_->R->limits());
  }
  return *c_->relgb;
}

bool FPModule::relation_member(const MVec& v) const {
  return member(v, rel_gb(), d_->R->limits());
}

bool FPModule::is_zero() const {
  {
    std::scoped_lock lk(c_->mu);
    if (c_->zero) return *c_->zero;
  }
  bool z = true;
  for (int j = 0; j < gens() && z; ++j)
    if (!relation_member(MVec::unit(*d_->R->ambient(), j))) z = false;
  std::scoped_lock lk(c_->mu);
  c_->zero = z;
  return z;
}

SeriesPrefix FPModule::hilbert(std::int64_t D) const {
  std::vector<MVec> lifted = d_->rel;
  for (auto& v : ie_columns(d_->R, gens())) lifted.push_back(std::move(v));
  return hilbert_free_quotient(d_->R->ambient(), d_->gdeg, gens(), lifted, D, d_->R->limits());
}

RIdeal FPModule::annihilator() const {
  {
    std::scoped_lock lk(c_->mu);
    if (c_->ann) return *c_->ann;
  }
  std::vector<MVec> lifted = d_->rel;
  for (auto& v : ie_columns(d_->R, gens())) lifted.push_back(std::move(v));
  auto gens_ = module_ann_S(d_->R->ambient(), gens(), lifted, d_->R->limits());
  RIdeal ann(d_->R, gens_);
  std::scoped_lock lk(c_->mu);
  if (!c_->ann) c_->ann = ann;
  return *c_->ann;
}

FPModule FPModule::minimalized() const {
  {
    std::scoped_lock lk(c_->mu);
    if (c_->minimal) return *c_->minimal;
  }
  const PolyRingPtr& S = d_->R->ambient();
  const Field& F = S->field();
  // dense working copy (entries are already normal forms mod I)
  int b = gens();
  std::vector<std::int64_t> deg = d_->gdeg;
  std::vector<std::vector<Polynomial>> cols;  // cols[j][i]
  for (const auto& c : d_->rel) cols.push_back(c.to_columns(S, b));

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j < cols.size() && !changed; ++j) {
      for (int i = 0; i < b && !changed; ++i) {
        const Polynomial& e = cols[j][i];
        if (e.is_zero() || e.terms().size() != 1) continue;
        if (!e.terms()[0].m.is_unit()) continue;
        // unit pivot: eliminate generator i and relation j
        Coeff inv = F.inv(e.terms()[0].c);
        for (size_t j2 = 0; j2 < cols.size(); ++j2) {
          if (j2 == j) continue;
          Polynomial coef = cols[j2][i];
          if (coef.is_zero()) continue;
          Polynomial mult = coef.scale(inv);
          for (int i2 = 0; i2 < b; ++i2)
            cols[j2][i2] = d_->R->nf(cols[j2][i2] - mult * cols[j][i2]);
        }
        cols.erase(cols.begin() + j);
        for (auto& c : cols) c.erase(c.begin() + i);
        deg.erase(deg.begin() + i);
        --b;
        changed = true;
      }
    }
  }

  ModOrder ord = top_of(d_->R);
  std::vector<MVec> rel;
  for (const auto& c : cols) {
    MVec v = MVec::from_columns(c, ord);
    if (!v.is_zero()) rel.push_back(std::move(v));
  }
  // a minimal presentation also carries a minimal set of relations
  size_t before = rel.size();
  rel = minimal_generators(S, std::max(b, 1), deg, rel, ie_columns(d_->R, b), d_->R->limits());
  std::scoped_lock lk(c_->mu);
  if (!c_->minimal) {
    if (b == gens() && rel.size() == before && before == d_->rel.size()) {
      // already minimal: share data and cache so resolution prefixes persist
      c_->minimal = std::make_shared<FPModule>(*this);
    } else {
      c_->minimal = std::make_shared<FPModule>(make(d_->R, deg, rel));
    }
  }
  return *c_->minimal;
}

int FPModule::mu() const { return minimalized().gens(); }

std::int64_t FPModule::pd_S() const {
  {
    std::scoped_lock lk(c_->mu);
    if (c_->pdS) return *c_->pdS;
  }
  FPModule m = minimalized();
  std::int64_t pd = 0;
  if (m.gens() > 0) {
    std::vector<MVec> lifted = m.rel();
    for (auto& v : ie_columns(d_->R, m.gens())) lifted.push_back(std::move(v));
    auto steps =
        minimal_resolution_S(d_->R->ambient(), m.gdeg(), m.gens(), lifted, d_->R->limits());
    pd = static_cast<std::int64_t>(steps.size());
  }
  std::scoped_lock lk(c_->mu);
  c_->pdS = pd;
  return pd;
}

int FPModule::depth() const {
  if (is_zero()) return kDepthInfinity;
  return d_->R->ambient()->nvars() - static_cast<int>(pd_S());
}

bool FPModule::is_mcm() const {
  if (is_zero()) return true;
  if (depth() != d_->R->dim()) return false;
  // full-support guard: dim R/ann M = dim R
  return annihilator().dim_V() == d_->R->dim();
}

RIdeal FPModule::fitting_ideal(int i) const {
  if (i < 0) fail_structural("negative Fitting index");
  const int b = gens();
  const int k = b - i;
  if (k <= 0) return d_->R->unit_ideal();
  const int a = rels();
  if (k > std::min(b, a)) return d_->R->ideal({});
  const PolyRingPtr& S = d_->R->ambient();
  std::vector<std::vector<Polynomial>> dense;  // [col][row]
  for (const auto& c : d_->rel) dense.push_back(c.to_columns(S, b));
  std::vector<Polynomial> minors;
  for (const auto& rsel : index_subsets(b, k))
    for (const auto& csel : index_subsets(a, k)) {
      std::vector<std::vector<Polynomial>> m(k, std::vector<Polynomial>(k, Polynomial(S)));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) m[r][c] = dense[csel[c]][rsel[r]];
      Polynomial dt = d_->R->nf(poly_det(S, m));
      if (!dt.is_zero()) minors.push_back(std::move(dt));
    }
  return d_->R->ideal(std::move(minors));
}

// ---------------------------------------------------------------------------
// Maps

ModuleMap ModuleMap::make(FPModule src, FPModule dst,
                          std::vector<std::vector<Polynomial>> mat) {
  const QRingPtr& R = src.ring();
  if (dst.ring() != R && !dst.ring()->ambient()->same(*R->ambient()))
    fail_structural("module map across different rings");
  if (static_cast<int>(mat.size()) != dst.gens()) fail_structural("map matrix: wrong row count");
  for (auto& row : mat) {
    if (static_cast<int>(row.size()) != src.gens())
      fail_structural("map matrix: wrong column count");
    for (auto& e : row) e = R->nf(e);
  }
  // degree-0 check
  for (int i = 0; i < dst.gens(); ++i)
    for (int j = 0; j < src.gens(); ++j)
      if (!mat[i][j].homogeneous_of_degree(src.gdeg()[j] - dst.gdeg()[i]))
        fail_structural("map entry is not homogeneous of the right degree");
  ModuleMap f{std::move(src), std::move(dst), std::move(mat)};
  // well-definedness: image of every source relation lies in the target span
  ModOrder ord = ModOrder::top(f.src.ring()->ambient()->order());
  const PolyRingPtr& S = f.src.ring()->ambient();
  for (const auto& v : f.src.rel()) {
    auto vc = v.to_columns(S, f.src.gens());
    std::vector<Polynomial> w(f.dst.gens(), Polynomial(S));
    for (int i = 0; i < f.dst.gens(); ++i)
      for (int j = 0; j < f.src.gens(); ++j)
        if (!f.mat[i][j].is_zero() && !vc[j].is_zero()) w[i] = w[i] + f.mat[i][j] * vc[j];
    MVec wv = MVec::from_columns(w, ord);
    if (!wv.is_zero() && !f.dst.relation_member(wv))
      fail_structural("map is not well defined on relations");
  }
  return f;
}

ModuleMap ModuleMap::identity(const FPModule& m) {
  std::vector<std::vector<Polynomial>> mat(
      m.gens(), std::vector<Polynomial>(m.gens(), Polynomial(m.ring()->ambient())));
  for (int i = 0; i < m.gens(); ++i) mat[i][i] = poly_const(m.ring()->ambient(), 1);
  return make(m, m, std::move(mat));
}

ModuleMap ModuleMap::zero_map(FPModule src, FPModule dst) {
  std::vector<std::vector<Polynomial>> mat(
      dst.gens(), std::vector<Polynomial>(src.gens(), Polynomial(src.ring()->ambient())));
  return make(std::move(src), std::move(dst), std::move(mat));
}

MVec ModuleMap::column(int j, const ModOrder& ord) const {
  std::vector<Polynomial> col;
  col.reserve(dst.gens());
  for (int i = 0; i < dst.gens(); ++i) col.push_back(mat[i][j]);
  if (dst.gens() == 0) return MVec();
  return MVec::from_columns(col, ord);
}

std::vector<MVec> ModuleMap::columns() const {
  ModOrder ord = ModOrder::top(src.ring()->ambient()->order());
  std::vector<MVec> out;
  for (int j = 0; j < src.gens(); ++j) {
    if (dst.gens() == 0) out.push_back(MVec());
    else out.push_back(column(j, ord));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernel / cokernel / image / homology

namespace {
std::vector<MVec> lifted_rels(const FPModule& m) {
  std::vector<MVec> out = m.rel();
  for (auto& v : ie_columns(m.ring(), m.gens())) out.push_back(std::move(v));
  return out;
}

std::vector<std::int64_t> column_degrees(const PolyRingPtr& S, const std::vector<MVec>& cols,
                                         const std::vector<std::int64_t>& gdeg) {
  std::vector<std::int64_t> out;
  for (const auto& c : cols) out.push_back(column_degree(S, c, gdeg));
  return out;
}
}  // namespace

KernelResult kernel(const ModuleMap& f) {
  const QRingPtr& R = f.src.ring();
  const PolyRingPtr& S = R->ambient();
  const GBOptions& opts = R->limits();
  auto Fcols = f.columns();
  // preimage of the target relations: { c : F c in <rel_dst, I e> }
  auto U = kernel_columns(S, std::max(f.dst.gens(), 1), Fcols, lifted_rels(f.dst), opts);
  auto K = minimal_generators(S, std::max(f.src.gens(), 1), f.src.gdeg(), U,
                              lifted_rels(f.src), opts);
  auto kdeg = column_degrees(S, K, f.src.gdeg());
  auto rel = kernel_columns(S, std::max(f.src.gens(), 1), K, lifted_rels(f.src), opts);
  KernelResult out;
  out.ker = FPModule::make(R, kdeg, rel);
  out.inclusion = K;
  return out;
}

FPModule cokernel(const ModuleMap& f) {
  std::vector<MVec> rel = f.dst.rel();
  for (auto& c : f.columns())
    if (!c.is_zero()) rel.push_back(std::move(c));
  return FPModule::make(f.dst.ring(), f.dst.gdeg(), std::move(rel));
}

FPModule image(const ModuleMap& f) {
  const QRingPtr& R = f.src.ring();
  const PolyRingPtr& S = R->ambient();
  auto Fcols = f.columns();
  auto rel = kernel_columns(S, std::max(f.dst.gens(), 1), Fcols, lifted_rels(f.dst),
                            R->limits());
  return FPModule::make(R, f.src.gdeg(), rel);
}

FPModule homology(const ModuleMap& f, const ModuleMap& g) {
  // f : A -> B, g : B -> C with g o f = 0
  const QRingPtr& R = f.src.ring();
  const PolyRingPtr& S = R->ambient();
  const GBOptions& opts = R->limits();
  if (!(f.dst.key() == g.src.key())) fail_structural("homology: maps are not composable");
  // verify the composite vanishes
  for (int j = 0; j < f.src.gens(); ++j) {
    std::vector<Polynomial> w(g.dst.gens(), Polynomial(S));
    for (int i = 0; i < g.dst.gens(); ++i)
      for (int t = 0; t < f.dst.gens(); ++t)
        if (!g.mat[i][t].is_zero() && !f.mat[t][j].is_zero())
          w[i] = w[i] + g.mat[i][t] * f.mat[t][j];
    if (g.dst.gens() == 0) continue;
    MVec wv = MVec::from_columns(w, ModOrder::top(S->order()));
    if (!wv.is_zero() && !g.dst.relation_member(wv))
      fail_structural("homology: composite map is nonzero");
  }
  KernelResult K = kernel(g);
  // express the image generators in kernel coordinates
  std::vector<MVec> basis = K.inclusion;
  auto helpers = lifted_rels(f.dst);
  std::vector<MVec> all = basis;
  for (const auto& h : helpers) all.push_back(h);
  GBOptions tracked = opts;
  tracked.want_syzygies = true;
  auto gb = buchberger(S, std::max(f.dst.gens(), 1), all, ModOrder::top(S->order()), tracked);
  std::vector<MVec> hrel = K.ker.rel();
  ModOrder ord = ModOrder::top(S->order());
  for (auto& col : f.columns()) {
    if (col.is_zero()) continue;
    auto cert = membership_certificate(col, gb, opts);
    std::vector<MTerm> ts;
    for (size_t k = 0; k < basis.size(); ++k)
      for (const auto& t : cert[k].terms()) ts.push_back({static_cast<int>(k), t.m, t.c});
    MVec lam = MVec::make(*S, ord, std::move(ts));
    if (!lam.is_zero()) hrel.push_back(std::move(lam));
  }
  return FPModule::make(R, K.ker.gdeg(), hrel);
}

// ---------------------------------------------------------------------------
// Hom / tensor / sums / blocks

FPModule block_module(const FPModule& N, const std::vector<std::int64_t>& shifts) {
  const int bN = N.gens();
  std::vector<std::int64_t> gdeg;
  for (auto s : shifts)
    for (auto d : N.gdeg()) gdeg.push_back(d + s);
  std::vector<MVec> rel;
  for (size_t j = 0; j < shifts.size(); ++j)
    for (const auto& w : N.rel()) rel.push_back(w.shifted(static_cast<int>(j) * bN));
  return FPModule::make(N.ring(), std::move(gdeg), std::move(rel));
}

HomResult hom_module(const FPModule& M, const FPModule& N) {
  const QRingPtr& R = M.ring();
  const PolyRingPtr& S = R->ambient();
  const int bM = M.gens(), bN = N.gens(), aM = M.rels();
  std::vector<std::int64_t> src_shift, dst_shift;
  for (int j = 0; j < bM; ++j) src_shift.push_back(-M.gdeg()[j]);
  auto reldeg = column_degrees(S, M.rel(), M.gdeg());
  for (int k = 0; k < aM; ++k) dst_shift.push_back(-reldeg[k]);
  FPModule SRC = block_module(N, src_shift);
  FPModule DST = block_module(N, dst_shift);
  std::vector<std::vector<Polynomial>> mat(
      aM * bN, std::vector<Polynomial>(bM * bN, Polynomial(S)));
  for (int k = 0; k < aM; ++k) {
    auto col = M.rel()[k].to_columns(S, bM);
    for (int j = 0; j < bM; ++j) {
      if (col[j].is_zero()) continue;
      for (int t = 0; t < bN; ++t) mat[k * bN + t][j * bN + t] = col[j];
    }
  }
  auto f = ModuleMap::make(SRC, DST, std::move(mat));
  KernelResult K = kernel(f);
  HomResult out;
  out.hom = K.ker;
  for (const auto& u : K.inclusion) {
    auto flat = u.to_columns(S, bM * bN);
    std::vector<std::vector<Polynomial>> gm(bN, std::vector<Polynomial>(bM, Polynomial(S)));
    for (int j = 0; j < bM; ++j)
      for (int t = 0; t < bN; ++t) gm[t][j] = flat[j * bN + t];
    out.gen_maps.push_back(std::move(gm));
  }
  return out;
}

FPModule tensor(const FPModule& M, const FPModule& N) {
  const QRingPtr& R = M.ring();
  const PolyRingPtr& S = R->ambient();
  const int bM = M.gens(), bN = N.gens();
  std::vector<std::int64_t> gdeg;
  for (int i = 0; i < bM; ++i)
    for (int j = 0; j < bN; ++j) gdeg.push_back(M.gdeg()[i] + N.gdeg()[j]);
  ModOrder ord = ModOrder::top(S->order());
  std::vector<MVec> rel;
  for (const auto& v : M.rel()) {
    auto vc = v.to_columns(S, bM);
    for (int j = 0; j < bN; ++j) {
      std::vector<MTerm> ts;
      for (int i = 0; i < bM; ++i)
        for (const auto& t : vc[i].terms()) ts.push_back({i * bN + j, t.m, t.c});
      rel.push_back(MVec::make(*S, ord, std::move(ts)));
    }
  }
  for (const auto& w : N.rel()) {
    auto wc = w.to_columns(S, bN);
    for (int i = 0; i < bM; ++i) {
      std::vector<MTerm> ts;
      for (int j = 0; j < bN; ++j)
        for (const auto& t : wc[j].terms()) ts.push_back({i * bN + j, t.m, t.c});
      rel.push_back(MVec::make(*S, ord, std::move(ts)));
    }
  }
  return FPModule::make(R, std::move(gdeg), std::move(rel));
}

FPModule direct_sum(const FPModule& M, const FPModule& N) {
  std::vector<std::int64_t> gdeg = M.gdeg();
  for (auto d : N.gdeg()) gdeg.push_back(d);
  std::vector<MVec> rel = M.rel();
  for (const auto& w : N.rel()) rel.push_back(w.shifted(M.gens()));
  return FPModule::make(M.ring(), std::move(gdeg), std::move(rel));
}

// ---------------------------------------------------------------------------
// Resolutions

std::vector<int> ChainComplex::betti() const {
  std::vector<int> out;
  for (const auto& g : gdeg) out.push_back(static_cast<int>(g.size()));
  return out;
}

ChainComplex FPModule::resolution_prefix(int L) const {
  const QRingPtr& R = d_->R;
  const PolyRingPtr& S = R->ambient();
  const GBOptions& opts = R->limits();
  std::scoped_lock lk(c_->mu);
  if (!c_->res_primed) {
    c_->res_diff.push_back(d_->rel);  // d_1: minimal relations
    c_->res_gdeg.push_back(column_degrees(S, d_->rel, d_->gdeg));
    c_->res_primed = true;
  }
  while (static_cast<int>(c_->res_diff.size()) < L) {
    const auto& last = c_->res_diff.back();
    if (last.empty()) {
      c_->res_diff.push_back({});
      c_->res_gdeg.push_back({});
      continue;
    }
    size_t k = c_->res_diff.size();  // computing d_{k+1}
    const auto& prev_deg = k >= 2 ? c_->res_gdeg[k - 2] : d_->gdeg;
    int prev_rank = static_cast<int>(prev_deg.size());
    int rank_here = static_cast<int>(last.size());
    const auto& here_deg = c_->res_gdeg.back();
    auto ker = kernel_columns(S, prev_rank, last, ie_columns(R, prev_rank), opts);
    auto mins = minimal_generators(S, rank_here, here_deg, ker, ie_columns(R, rank_here), opts);
    c_->res_gdeg.push_back(column_degrees(S, mins, here_deg));
    c_->res_diff.push_back(std::move(mins));
  }
  ChainComplex out;
  out.R = R;
  out.gdeg.push_back(d_->gdeg);
  for (int k = 0; k < L; ++k) {
    out.gdeg.push_back(c_->res_gdeg[k]);
    out.diff.push_back(c_->res_diff[k]);
  }
  return out;
}

ChainComplex free_resolution(const FPModule& M, int L) {
  if (L < 0) fail_structural("negative resolution length");
  return M.minimalized().resolution_prefix(L);
}

bool complex_composes_to_zero(const ChainComplex& c) {
  const PolyRingPtr& S = c.R->ambient();
  for (size_t k = 0; k + 1 < c.diff.size(); ++k) {
    const auto& dk = c.diff[k];        // F_{k+1} -> F_k, columns in S^{b_k}
    const auto& dk1 = c.diff[k + 1];   // F_{k+2} -> F_{k+1}
    int bk = static_cast<int>(c.gdeg[k].size());
    for (const auto& col : dk1) {
      auto cc = col.to_columns(S, static_cast<int>(dk.size()));
      std::vector<Polynomial> prod(bk, Polynomial(S));
      for (size_t j = 0; j < dk.size(); ++j) {
        if (cc[j].is_zero()) continue;
        auto dj = dk[j].to_columns(S, bk);
        for (int i = 0; i < bk; ++i) prod[i] = prod[i] + cc[j] * dj[i];
      }
      for (int i = 0; i < bk; ++i)
        if (!c.R->nf(prod[i]).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace torext
