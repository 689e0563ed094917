#include "torext/mvec.hpp"

#include <algorithm>

namespace torext {

int ModOrder::cmp(int ca, const Mono& a, int cb, const Mono& b) const {
  switch (pos) {
    case Pos::TOP: {
      int c = base.cmp(a, b);
      if (c) return c;
      if (ca != cb) return ca < cb ? 1 : -1;  // lower component wins ties
      return 0;
    }
    case Pos::POT: {
      if (ca != cb) return ca < cb ? 1 : -1;
      return base.cmp(a, b);
    }
    case Pos::Schreyer: {
      const auto& la = schreyer_lt.at(ca);
      const auto& lb = schreyer_lt.at(cb);
      int c = schreyer_target->cmp(la.first, a * la.second, lb.first, b * lb.second);
      if (c) return c;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

ModOrder ModOrder::schreyer(const ModOrder& target, std::vector<std::pair<int, Mono>> lts) {
  ModOrder o;
  o.base = target.base;
  o.pos = Pos::Schreyer;
  o.schreyer_lt = std::move(lts);
  o.schreyer_target = std::make_shared<ModOrder>(target);
  return o;
}

// ---------------------------------------------------------------------------

const MTerm& MVec::lt() const {
  if (t_.empty()) fail_structural("leading term of the zero vector");
  return t_.front();
}

MVec MVec::make(const PolyRing& R, const ModOrder& o, std::vector<MTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const MTerm& x, const MTerm& y) {
    return o.cmp(x.comp, x.m, y.comp, y.m) > 0;
  });
  MVec v;
  const Field& F = R.field();
  for (auto& t : terms) {
    if (F.is_zero(t.c)) continue;
    if (!v.t_.empty() && v.t_.back().comp == t.comp && v.t_.back().m == t.m) {
      v.t_.back().c = F.add(v.t_.back().c, t.c);
      if (F.is_zero(v.t_.back().c)) v.t_.pop_back();
    } else {
      v.t_.push_back(std::move(t));
    }
  }
  return v;
}

MVec MVec::from_columns(const std::vector<Polynomial>& col, const ModOrder& o) {
  std::vector<MTerm> ts;
  const PolyRing* R = nullptr;
  for (size_t j = 0; j < col.size(); ++j) {
    if (col[j].ring()) R = col[j].ring().get();
    for (const auto& t : col[j].terms())
      ts.push_back({static_cast<int>(j), t.m, t.c});
  }
  if (!R) fail_structural("cannot build a module vector from ringless entries");
  return make(*R, o, std::move(ts));
}

MVec MVec::unit(const PolyRing& R, int comp) {
  MVec v;
  v.t_.push_back({comp, Mono::unit(R.nvars()), R.field().one()});
  return v;
}

MVec MVec::from_poly(const Polynomial& p, const ModOrder& o, int comp) {
  std::vector<MTerm> ts;
  for (const auto& t : p.terms()) ts.push_back({comp, t.m, t.c});
  return make(*p.ring(), o, std::move(ts));
}

std::vector<Polynomial> MVec::to_columns(const PolyRingPtr& R, int rank) const {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : t_) {
    if (t.comp >= rank) fail_structural("component exceeds rank");
    parts[t.comp].push_back({t.m, t.c});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(R, std::move(p));
  return out;
}

Polynomial MVec::component(const PolyRingPtr& R, int comp) const {
  std::vector<Term> part;
  for (const auto& t : t_)
    if (t.comp == comp) part.push_back({t.m, t.c});
  return Polynomial(R, std::move(part));
}

MVec MVec::add(const PolyRing& R, const ModOrder& o, const MVec& other) const {
  const Field& F = R.field();
  MVec out;
  out.t_.reserve(t_.size() + other.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < other.t_.size()) {
    const MTerm& a = t_[i];
    const MTerm& b = other.t_[j];
    if (a.comp == b.comp && a.m == b.m) {
      Coeff s = F.add(a.c, b.c);
      if (!F.is_zero(s)) out.t_.push_back({a.comp, a.m, s});
      ++i; ++j;
      continue;
    }
    int c = o.cmp(a.comp, a.m, b.comp, b.m);
    if (c > 0) out.t_.push_back(t_[i++]);
    else out.t_.push_back(other.t_[j++]);
  }
  while (i < t_.size()) out.t_.push_back(t_[i++]);
  while (j < other.t_.size()) out.t_.push_back(other.t_[j++]);
  return out;
}

MVec MVec::mul_term(const PolyRing& R, const Coeff& c, const Mono& m) const {
  const Field& F = R.field();
  MVec out;
  if (F.is_zero(c)) return out;
  out.t_ = t_;
  for (auto& t : out.t_) {
    t.m = t.m * m;
    t.c = F.mul(t.c, c);
  }
  return out;
}

MVec MVec::axpy(const PolyRing& R, const ModOrder& o, const Coeff& c, const Mono& m,
                const MVec& other) const {
  return add(R, o, other.mul_term(R, c, m));
}

MVec MVec::mul_poly(const PolyRing& R, const ModOrder& o, const Polynomial& p) const {
  MVec acc;
  for (const auto& t : p.terms()) acc = acc.add(R, o, mul_term(R, t.c, t.m));
  return acc;
}

MVec MVec::scale(const PolyRing& R, const Coeff& c) const {
  return mul_term(R, c, Mono::unit(R.nvars()));
}

MVec MVec::negate(const PolyRing& R) const {
  const Field& F = R.field();
  MVec out;
  out.t_ = t_;
  for (auto& t : out.t_) t.c = F.neg(t.c);
  return out;
}

MVec MVec::shifted(int delta) const {
  MVec out;
  out.t_ = t_;
  for (auto& t : out.t_) t.comp += delta;
  return out;
}

MVec MVec::transport(const PolyRingPtr& from, const PolyRingPtr& to, const ModOrder& o) const {
  std::vector<MTerm> ts;
  ts.reserve(t_.size());
  const int n = from->nvars();
  const int m = to->nvars();
  for (const auto& t : t_) {
    MTerm nt;
    nt.comp = t.comp;
    nt.c = t.c;
    nt.m = Mono::unit(m);
    for (int i = 0; i < std::min(n, m); ++i) nt.m.e[i] = t.m.e[i];
    if (n > m) {
      for (int i = m; i < n; ++i)
        if (t.m.e[i]) fail_structural("transport would drop a used variable");
    }
    ts.push_back(std::move(nt));
  }
  return make(*to, o, std::move(ts));
}

std::int64_t MVec::max_total_degree() const {
  std::int64_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.m.total_degree());
  return d;
}

bool MVec::equals(const PolyRing& R, const MVec& o) const {
  if (t_.size() != o.t_.size()) return false;
  const Field& F = R.field();
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].comp != o.t_[i].comp || t_[i].m != o.t_[i].m || !F.eq(t_[i].c, o.t_[i].c))
      return false;
  return true;
}

}  // namespace torext
