#include "torext/groebner.hpp"

#include <algorithm>
#include <set>

namespace torext {

namespace {

// rep-space bookkeeping uses a fixed order; leading terms there are never needed
ModOrder rep_order() { return ModOrder::pot(); }

struct PairKey {
  std::int64_t sugar;
  int comp;
  Mono lcm;
  int i, j;
};

struct PairLess {
  const MonoOrder* base;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.comp != b.comp) return a.comp < b.comp;
    int c = base->cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  if (rank != 1) fail_structural("unit-ideal test on a module basis");
  for (const auto& g : gens)
    if (!g.is_zero() && g.lt().m.is_unit()) return true;
  return false;
}

Division divide(const PolyRingPtr& S, const MVec& v, const std::vector<MVec>& list,
                const ModOrder& ord, const GBOptions& opts, int skip) {
  const Field& F = S->field();
  Division out;
  out.quot.assign(list.size(), Polynomial(S));
  std::vector<std::vector<Term>> qterms(list.size());
  MVec work = v;
  std::vector<MTerm> remainder;
  while (!work.is_zero()) {
    const MTerm lt = work.lt();
    if (lt.m.total_degree() > opts.max_total_degree) fail_resource("max-degree");
    int red = -1;
    for (size_t k = 0; k < list.size(); ++k) {
      if (static_cast<int>(k) == skip || list[k].is_zero()) continue;
      const MTerm& glt = list[k].lt();
      if (glt.comp == lt.comp && glt.m.divides(lt.m)) { red = static_cast<int>(k); break; }
    }
    if (red < 0) {
      remainder.push_back(lt);
      work = work.add(*S, ord, MVec::make(*S, ord, {MTerm{lt.comp, lt.m, F.neg(lt.c)}}));
      continue;
    }
    const MTerm& glt = list[red].lt();
    Coeff q = F.div(lt.c, glt.c);
    Mono m = lt.m.div(glt.m);
    qterms[red].push_back({m, q});
    work = work.axpy(*S, ord, F.neg(q), m, list[red]);
  }
  for (size_t k = 0; k < list.size(); ++k)
    out.quot[k] = Polynomial(S, std::move(qterms[k]));
  out.rem = MVec::make(*S, ord, std::move(remainder));
  return out;
}

MVec normal_form(const MVec& v, const GroebnerBasis& gb, const GBOptions& opts) {
  return divide(gb.S, v, gb.gens, gb.ord, opts).rem;
}

bool member(const MVec& v, const GroebnerBasis& gb, const GBOptions& opts) {
  return normal_form(v, gb, opts).is_zero();
}

std::vector<Polynomial> membership_certificate(const MVec& v, const GroebnerBasis& gb,
                                               const GBOptions& opts) {
  if (!gb.has_syzygies) fail_structural("certificate requires a tracked basis");
  Division d = divide(gb.S, v, gb.track_basis, gb.ord, opts);
  if (!d.rem.is_zero()) fail_structural("certificate requested for a non-member");
  const auto& S = gb.S;
  const ModOrder ro = rep_order();
  MVec acc;
  for (size_t k = 0; k < gb.track_basis.size(); ++k)
    if (!d.quot[k].is_zero()) acc = acc.add(*S, ro, gb.track_reps[k].mul_poly(*S, ro, d.quot[k]));
  std::vector<Polynomial> out;
  const int m = static_cast<int>(gb.inputs.size());
  out.reserve(m);
  auto cols = acc.to_columns(S, m);
  for (auto& c : cols) out.push_back(std::move(c));
  return out;
}

ModOrder induced_schreyer_order(const GroebnerBasis& gb) {
  std::vector<std::pair<int, Mono>> lts;
  lts.reserve(gb.inputs.size());
  for (const auto& g : gb.inputs) {
    if (g.is_zero()) lts.push_back({0, Mono::unit(gb.S->nvars())});
    else lts.push_back({g.lt().comp, g.lt().m});
  }
  return ModOrder::schreyer(gb.ord, std::move(lts));
}

GroebnerBasis buchberger(const PolyRingPtr& S, int rank, std::vector<MVec> inputs,
                         const ModOrder& ord, const GBOptions& opts) {
  const Field& F = S->field();
  const ModOrder ro = rep_order();
  GroebnerBasis out;
  out.S = S;
  out.rank = rank;
  out.ord = ord;
  out.inputs = inputs;
  out.has_syzygies = opts.want_syzygies;

  std::vector<MVec> basis;
  std::vector<MVec> reps;
  std::vector<std::int64_t> sugar;

  for (size_t j = 0; j < inputs.size(); ++j) {
    // re-sort under the active order
    std::vector<MTerm> ts(inputs[j].terms().begin(), inputs[j].terms().end());
    MVec f = MVec::make(*S, ord, std::move(ts));
    if (f.is_zero()) {
      if (opts.want_syzygies)
        out.syzygies.push_back(MVec::unit(*S, static_cast<int>(j)));
      continue;
    }
    if (f.max_total_degree() > opts.max_total_degree) fail_resource("max-degree");
    basis.push_back(f);
    if (opts.want_syzygies) reps.push_back(MVec::unit(*S, static_cast<int>(j)));
    sugar.push_back(f.max_total_degree());
  }

  PairLess less{&ord.base};
  std::set<PairKey, PairLess> pairs(less);
  std::int64_t pairs_created = 0;

  auto push_pairs = [&](size_t jnew) {
    const MTerm& lj = basis[jnew].lt();
    for (size_t i = 0; i < jnew; ++i) {
      const MTerm& li = basis[i].lt();
      if (li.comp != lj.comp) continue;
      if (!opts.want_syzygies && rank == 1 && li.m.coprime(lj.m)) continue;
      Mono l = li.m.lcm(lj.m);
      std::int64_t sug = std::max(sugar[i] + (l.total_degree() - li.m.total_degree()),
                                  sugar[jnew] + (l.total_degree() - lj.m.total_degree()));
      pairs.insert({sug, li.comp, l, static_cast<int>(i), static_cast<int>(jnew)});
      if (++pairs_created > opts.max_pairs) fail_resource("max-pairs");
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    PairKey pk = *pairs.begin();
    pairs.erase(pairs.begin());
    if (pk.lcm.total_degree() > opts.max_total_degree) fail_resource("max-degree");
    const MVec& gi = basis[pk.i];
    const MVec& gj = basis[pk.j];
    const MTerm& li = gi.lt();
    const MTerm& lj = gj.lt();
    Mono a = pk.lcm.div(li.m);
    Mono b = pk.lcm.div(lj.m);
    MVec s = gi.mul_term(*S, F.inv(li.c), a)
                 .add(*S, ord, gj.mul_term(*S, F.neg(F.inv(lj.c)), b));
    Division d = divide(S, s, basis, ord, opts);
    MVec rrep;
    if (opts.want_syzygies) {
      rrep = reps[pk.i].mul_term(*S, F.inv(li.c), a)
                 .add(*S, ro, reps[pk.j].mul_term(*S, F.neg(F.inv(lj.c)), b));
      for (size_t k = 0; k < basis.size(); ++k)
        if (!d.quot[k].is_zero())
          rrep = rrep.add(*S, ro, reps[k].mul_poly(*S, ro, d.quot[k]).negate(*S));
    }
    if (d.rem.is_zero()) {
      if (opts.want_syzygies && !rrep.is_zero()) out.syzygies.push_back(rrep);
      continue;
    }
    basis.push_back(d.rem);
    if (opts.want_syzygies) reps.push_back(rrep);
    sugar.push_back(std::max<std::int64_t>(pk.sugar, d.rem.max_total_degree()));
    push_pairs(basis.size() - 1);
  }

  out.track_basis = basis;
  out.track_reps = reps;

  // reduced basis: minimalize then tail-reduce, monic, sorted descending
  std::vector<size_t> idx(basis.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
    const MTerm& a = basis[x].lt();
    const MTerm& b = basis[y].lt();
    int c = ord.cmp(a.comp, a.m, b.comp, b.m);
    if (c) return c < 0;
    return x < y;
  });
  std::vector<MVec> kept;
  for (size_t k : idx) {
    const MTerm& lt = basis[k].lt();
    bool redundant = false;
    for (const auto& h : kept) {
      const MTerm& hl = h.lt();
      if (hl.comp == lt.comp && hl.m.divides(lt.m)) { redundant = true; break; }
    }
    if (!redundant) kept.push_back(basis[k]);
  }
  for (size_t k = 0; k < kept.size(); ++k) {
    Division d = divide(S, kept[k], kept, ord, opts, static_cast<int>(k));
    kept[k] = d.rem;
  }
  for (auto& g : kept)
    if (!g.is_zero()) g = g.mul_term(*S, F.inv(g.lt().c), Mono::unit(S->nvars()));
  std::sort(kept.begin(), kept.end(), [&](const MVec& x, const MVec& y) {
    const MTerm& a = x.lt();
    const MTerm& b = y.lt();
    return ord.cmp(a.comp, a.m, b.comp, b.m) > 0;
  });
  out.gens = std::move(kept);
  return out;
}

}  // namespace torext
