#include "torext/ideals.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace torext {

GroebnerBasis gb_of_ideal(const PolyRingPtr& S, const std::vector<Polynomial>& gens,
                          const GBOptions& opts) {
  std::vector<MVec> vs;
  ModOrder ord = ModOrder::top(S->order());
  vs.reserve(gens.size());
  for (const auto& g : gens) vs.push_back(MVec::from_poly(g, ord));
  return buchberger(S, 1, std::move(vs), ord, opts);
}

GroebnerBasis gb_of_columns(const PolyRingPtr& S, int rank, const std::vector<MVec>& cols,
                            const GBOptions& opts) {
  return buchberger(S, rank, cols, ModOrder::top(S->order()), opts);
}

std::vector<Polynomial> gb_polys(const GroebnerBasis& gb) {
  if (gb.rank != 1) fail_structural("gb_polys expects an ideal basis");
  std::vector<Polynomial> out;
  out.reserve(gb.gens.size());
  for (const auto& g : gb.gens) out.push_back(g.component(gb.S, 0));
  return out;
}

Polynomial nf_poly(const Polynomial& f, const GroebnerBasis& gb, const GBOptions& opts) {
  return normal_form(MVec::from_poly(f, gb.ord), gb, opts).component(gb.S, 0);
}

// ---------------------------------------------------------------------------

/// Extension of S by a leading tag variable that the block order eliminates.
static PolyRingPtr tag_ring(const PolyRingPtr& S) {
  std::vector<std::string> vars;
  vars.push_back("@t");
  for (const auto& v : S->vars()) vars.push_back(v);
  std::vector<std::int64_t> w;
  w.push_back(1);
  for (auto x : S->weights()) w.push_back(x);
  MonoOrder elim;
  elim.kind = MonoOrder::Kind::Elim;
  elim.elim_block = 1;
  return PolyRing::make(S->field(), std::move(vars), std::move(w), elim);
}

static Polynomial lift_to_tag(const PolyRingPtr& St, const PolyRingPtr& S,
                              const Polynomial& p) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    Term nt;
    nt.c = t.c;
    nt.m = Mono::unit(St->nvars());
    for (int i = 0; i < S->nvars(); ++i) nt.m.e[i + 1] = t.m.e[i];
    ts.push_back(std::move(nt));
  }
  return Polynomial(St, std::move(ts));
}

static std::vector<Polynomial> drop_tag_var(const PolyRingPtr& St, const PolyRingPtr& S,
                                            const GroebnerBasis& gb) {
  std::vector<Polynomial> out;
  for (const auto& g : gb.gens) {
    Polynomial p = g.component(St, 0);
    bool uses = false;
    for (const auto& t : p.terms())
      if (t.m.e[0]) { uses = true; break; }
    if (uses) continue;
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Term nt;
      nt.c = t.c;
      nt.m = Mono::unit(S->nvars());
      for (int i = 0; i < S->nvars(); ++i) nt.m.e[i] = t.m.e[i + 1];
      ts.push_back(std::move(nt));
    }
    out.emplace_back(S, std::move(ts));
  }
  return out;
}

std::vector<Polynomial> ideal_intersect(const PolyRingPtr& S, const std::vector<Polynomial>& I,
                                        const std::vector<Polynomial>& J,
                                        const GBOptions& opts) {
  PolyRingPtr St = tag_ring(S);
  Polynomial t = poly_var(St, 0);
  Polynomial omt = poly_const(St, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I) gens.push_back(t * lift_to_tag(St, S, f));
  for (const auto& g : J) gens.push_back(omt * lift_to_tag(St, S, g));
  GroebnerBasis gb = gb_of_ideal(St, gens, opts);
  auto down = drop_tag_var(St, S, gb);
  // canonicalize in S
  return gb_polys(gb_of_ideal(S, down, opts));
}

std::vector<Polynomial> ideal_quotient(const PolyRingPtr& S, const std::vector<Polynomial>& I,
                                       const Polynomial& f, const GBOptions& opts) {
  // syzygies of [f | gens I]: the coefficient on f of each syzygy satisfies
  // r*f in I, and those coefficients generate (I : f).
  std::vector<MVec> cols;
  ModOrder ord = ModOrder::top(S->order());
  cols.push_back(MVec::from_poly(f, ord));
  for (const auto& g : I) cols.push_back(MVec::from_poly(g, ord));
  GBOptions o = opts;
  o.want_syzygies = true;
  GroebnerBasis gb = buchberger(S, 1, cols, ord, o);
  std::vector<Polynomial> out;
  for (const auto& s : gb.syzygies) {
    Polynomial r = s.component(S, 0);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return gb_polys(gb_of_ideal(S, out, opts));
}

std::vector<Polynomial> saturate(const PolyRingPtr& S, const std::vector<Polynomial>& I,
                                 const Polynomial& f, const GBOptions& opts) {
  std::vector<Polynomial> cur = gb_polys(gb_of_ideal(S, I, opts));
  for (;;) {
    std::vector<Polynomial> nxt = ideal_quotient(S, cur, f, opts);
    if (nxt.size() == cur.size()) {
      bool same = true;
      for (size_t i = 0; i < nxt.size(); ++i)
        if (!(nxt[i] == cur[i])) { same = false; break; }
      if (same) return cur;
    }
    cur = std::move(nxt);
  }
}

bool radical_member(const PolyRingPtr& S, const Polynomial& f,
                    const std::vector<Polynomial>& I, const GBOptions& opts) {
  if (f.is_zero()) {
    // 0 is in every radical of a proper ideal; in the unit ideal too
    return true;
  }
  PolyRingPtr St = tag_ring(S);
  Polynomial t = poly_var(St, 0);
  std::vector<Polynomial> gens;
  for (const auto& g : I) gens.push_back(lift_to_tag(St, S, g));
  gens.push_back(poly_const(St, 1) - t * lift_to_tag(St, S, f));
  GroebnerBasis gb = gb_of_ideal(St, gens, opts);
  return gb.is_unit_ideal();
}

int dim_quotient(const PolyRingPtr& S, const std::vector<Polynomial>& I,
                 const GBOptions& opts) {
  GroebnerBasis gb = gb_of_ideal(S, I, opts);
  if (gb.is_unit_ideal()) return -1;
  const int n = S->nvars();
  std::vector<Mono> lts;
  for (const auto& g : gb.gens) lts.push_back(g.lt().m);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& m : lts) {
      bool support_inside = true;
      for (int i = 0; i < n; ++i)
        if (m.e[i] && !(mask & (1u << i))) { support_inside = false; break; }
      if (support_inside) { independent = false; break; }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Hilbert functions

namespace {
struct MonoCache {
  std::mutex mu;
  std::map<std::pair<std::string, std::int64_t>, std::vector<Mono>> table;
};
MonoCache& mono_cache() {
  static MonoCache c;
  return c;
}

std::string ring_key(const PolyRingPtr& S) {
  std::ostringstream os;
  os << S->nvars();
  for (auto w : S->weights()) os << ',' << w;
  return os.str();
}

void enumerate(const PolyRingPtr& S, int var, std::int64_t remaining, Mono& cur,
               std::vector<Mono>& out) {
  if (var == S->nvars()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (var == S->nvars() - 1) {
    std::int64_t w = S->weights()[var];
    if (remaining % w == 0) {
      cur.e[var] = static_cast<std::uint32_t>(remaining / w);
      out.push_back(cur);
      cur.e[var] = 0;
    }
    return;
  }
  std::int64_t w = S->weights()[var];
  for (std::int64_t k = 0; k * w <= remaining; ++k) {
    cur.e[var] = static_cast<std::uint32_t>(k);
    enumerate(S, var + 1, remaining - k * w, cur, out);
  }
  cur.e[var] = 0;
}
}  // namespace

const std::vector<Mono>& monos_of_wdeg(const PolyRingPtr& S, std::int64_t d) {
  auto& c = mono_cache();
  std::scoped_lock lk(c.mu);
  auto key = std::make_pair(ring_key(S), d);
  auto it = c.table.find(key);
  if (it != c.table.end()) return it->second;
  std::vector<Mono> out;
  if (d >= 0) {
    Mono cur = Mono::unit(S->nvars());
    enumerate(S, 0, d, cur, out);
  }
  return c.table.emplace(key, std::move(out)).first->second;
}

std::int64_t SeriesPrefix::at(std::int64_t deg) const {
  if (deg < offset || deg >= offset + static_cast<std::int64_t>(dims.size())) return 0;
  return dims[deg - offset];
}

bool SeriesPrefix::all_zero() const {
  for (auto d : dims)
    if (d) return false;
  return true;
}

bool SeriesPrefix::aligned_equal(const SeriesPrefix& a, const SeriesPrefix& b) {
  auto first_nonzero = [](const SeriesPrefix& s) -> std::int64_t {
    for (size_t i = 0; i < s.dims.size(); ++i)
      if (s.dims[i]) return static_cast<std::int64_t>(i);
    return -1;
  };
  std::int64_t fa = first_nonzero(a), fb = first_nonzero(b);
  if (fa < 0 || fb < 0) return fa == fb;
  std::int64_t la = static_cast<std::int64_t>(a.dims.size()) - fa;
  std::int64_t lb = static_cast<std::int64_t>(b.dims.size()) - fb;
  std::int64_t len = std::min(la, lb);
  for (std::int64_t i = 0; i < len; ++i)
    if (a.dims[fa + i] != b.dims[fb + i]) return false;
  return true;
}

std::string SeriesPrefix::str() const {
  std::ostringstream os;
  os << '[' << offset << ':';
  for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : " ") << dims[i];
  os << ']';
  return os.str();
}

SeriesPrefix series_add(const SeriesPrefix& a, const SeriesPrefix& b) {
  SeriesPrefix out;
  out.offset = std::min(a.offset, b.offset);
  std::int64_t hi = std::max(a.offset + static_cast<std::int64_t>(a.dims.size()),
                             b.offset + static_cast<std::int64_t>(b.dims.size()));
  out.dims.assign(hi - out.offset, 0);
  for (std::int64_t d = out.offset; d < hi; ++d) out.dims[d - out.offset] = a.at(d) + b.at(d);
  return out;
}

SeriesPrefix hilbert_free_quotient(const PolyRingPtr& S, const std::vector<std::int64_t>& gdeg,
                                   int rank, const std::vector<MVec>& cols, std::int64_t D,
                                   const GBOptions& opts) {
  GroebnerBasis gb = gb_of_columns(S, rank, cols, opts);
  std::vector<std::vector<Mono>> lead(rank);
  for (const auto& g : gb.gens) lead[g.lt().comp].push_back(g.lt().m);
  SeriesPrefix out;
  std::int64_t lo = 0;
  for (auto d : gdeg) lo = std::min(lo, d);
  out.offset = lo;
  if (D < lo) return out;
  out.dims.assign(D - lo + 1, 0);
  for (int j = 0; j < rank; ++j) {
    for (std::int64_t e = gdeg[j]; e <= D; ++e) {
      const auto& ms = monos_of_wdeg(S, e - gdeg[j]);
      std::int64_t cnt = 0;
      for (const auto& m : ms) {
        bool divisible = false;
        for (const auto& l : lead[j])
          if (l.divides(m)) { divisible = true; break; }
        if (!divisible) ++cnt;
      }
      out.dims[e - lo] += cnt;
    }
  }
  return out;
}

std::int64_t column_degree(const PolyRingPtr& S, const MVec& col,
                           const std::vector<std::int64_t>& gdeg) {
  if (col.is_zero()) return 0;
  std::int64_t deg = 0;
  bool seen = false;
  for (const auto& t : col.terms()) {
    std::int64_t d = S->wdeg(t.m) + gdeg.at(t.comp);
    if (!seen) { deg = d; seen = true; }
    else if (d != deg) fail_structural("inhomogeneous module column");
  }
  return deg;
}

std::vector<MVec> minimal_generators(const PolyRingPtr& S, int rank,
                                     const std::vector<std::int64_t>& gdeg,
                                     std::vector<MVec> cols, const std::vector<MVec>& helpers,
                                     const GBOptions& opts) {
  (void)rank;
  ModOrder ord = ModOrder::top(S->order());
  std::vector<std::pair<std::int64_t, size_t>> order;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].is_zero()) continue;
    order.push_back({column_degree(S, cols[i], gdeg), i});
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MVec> kept = helpers;
  std::vector<MVec> out;
  for (auto& [deg, i] : order) {
    (void)deg;
    if (!kept.empty()) {
      GroebnerBasis gb = buchberger(S, rank, kept, ord, opts);
      if (member(cols[i], gb, opts)) continue;
    }
    kept.push_back(cols[i]);
    out.push_back(cols[i]);
  }
  return out;
}

std::vector<MVec> kernel_columns(const PolyRingPtr& S, int rank, const std::vector<MVec>& cols,
                                 const std::vector<MVec>& helpers, const GBOptions& opts) {
  (void)rank;
  std::vector<MVec> all = cols;
  for (const auto& h : helpers) all.push_back(h);
  GBOptions o = opts;
  o.want_syzygies = true;
  GroebnerBasis gb = buchberger(S, rank, all, ModOrder::top(S->order()), o);
  const int k = static_cast<int>(cols.size());
  std::vector<MVec> out;
  for (const auto& s : gb.syzygies) {
    std::vector<MTerm> part;
    for (const auto& t : s.terms())
      if (t.comp < k) part.push_back(t);
    MVec v = MVec::make(*S, ModOrder::top(S->order()), std::move(part));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

Polynomial poly_det(const PolyRingPtr& S, const std::vector<std::vector<Polynomial>>& m) {
  const size_t n = m.size();
  if (n == 0) return poly_const(S, 1);
  if (n == 1) return m[0][0];
  Polynomial acc(S);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * poly_det(S, sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

namespace {
void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k >= 0 && k <= n) subsets_rec(n, k, 0, cur, out);
  return out;
}

std::vector<Polynomial> module_ann_S(const PolyRingPtr& S, int rank,
                                     const std::vector<MVec>& cols, const GBOptions& opts) {
  ModOrder ord = ModOrder::top(S->order());
  std::vector<Polynomial> acc;
  bool first = true;
  for (int j = 0; j < rank; ++j) {
    std::vector<MVec> all;
    all.push_back(MVec::unit(*S, j));
    for (const auto& c : cols) all.push_back(c);
    GBOptions o = opts;
    o.want_syzygies = true;
    GroebnerBasis gb = buchberger(S, rank, all, ord, o);
    std::vector<Polynomial> cond;
    for (const auto& s : gb.syzygies) {
      Polynomial r = s.component(S, 0);
      if (!r.is_zero()) cond.push_back(std::move(r));
    }
    cond = gb_polys(gb_of_ideal(S, cond, opts));
    if (first) {
      acc = std::move(cond);
      first = false;
    } else {
      acc = ideal_intersect(S, acc, cond, opts);
    }
  }
  if (first) return {poly_const(S, 1)};  // rank 0: the zero module
  return acc;
}

std::vector<ResolutionStep> minimal_resolution_S(const PolyRingPtr& S,
                                                 const std::vector<std::int64_t>& gdeg, int rank,
                                                 const std::vector<MVec>& cols,
                                                 const GBOptions& opts) {
  std::vector<ResolutionStep> steps;
  std::vector<std::int64_t> curdeg = gdeg;
  int currank = rank;
  std::vector<MVec> cur = minimal_generators(S, rank, gdeg, cols, {}, opts);
  while (!cur.empty()) {
    if (static_cast<int>(steps.size()) > S->nvars())
      throw Error(Error::Kind::Theorem, "free resolution over the ambient ring did not terminate");
    ResolutionStep st;
    st.diff = cur;
    for (const auto& c : cur) st.gdeg.push_back(column_degree(S, c, curdeg));
    std::vector<MVec> ker = kernel_columns(S, currank, cur, {}, opts);
    currank = static_cast<int>(cur.size());
    curdeg = st.gdeg;
    cur = minimal_generators(S, currank, curdeg, ker, {}, opts);
    steps.push_back(std::move(st));
  }
  return steps;
}

}  // namespace torext
