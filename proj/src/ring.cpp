#include "torext/ring.hpp"

#include <algorithm>

namespace torext {

RIdeal::RIdeal(QRingPtr R, std::vector<Polynomial> gens) : ring_(std::move(R)) {
  std::vector<Polynomial> all = ring_->relations();
  for (auto& g : gens)
    if (!g.is_zero()) all.push_back(g);
  gb_ = gb_of_ideal(ring_->ambient(), all, ring_->limits());
  gens_ = gb_polys(gb_);
}

std::vector<std::string> RIdeal::canonical() const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.str());
  return out;
}

bool RIdeal::is_unit() const { return gb_.is_unit_ideal(); }

bool RIdeal::is_zero_in_R() const {
  auto base = ring_->defining_gb().gens;
  if (base.size() != gb_.gens.size()) return false;
  for (size_t i = 0; i < base.size(); ++i)
    if (!base[i].equals(*ring_->ambient(), gb_.gens[i])) return false;
  return true;
}

bool RIdeal::contains(const Polynomial& f) const {
  return nf_poly(f, gb_, ring_->limits()).is_zero();
}

bool RIdeal::contains_ideal(const RIdeal& j) const {
  for (const auto& g : j.gens_)
    if (!contains(g)) return false;
  return true;
}

bool RIdeal::equals(const RIdeal& j) const { return canonical() == j.canonical(); }

bool RIdeal::radical_contains(const Polynomial& f) const {
  return radical_member(ring_->ambient(), f, gens_, ring_->limits());
}

RIdeal RIdeal::intersect(const RIdeal& j) const {
  return RIdeal(ring_, ideal_intersect(ring_->ambient(), gens_, j.gens_, ring_->limits()));
}

RIdeal RIdeal::sum(const RIdeal& j) const {
  std::vector<Polynomial> gens = gens_;
  for (const auto& g : j.gens_) gens.push_back(g);
  return RIdeal(ring_, std::move(gens));
}

RIdeal RIdeal::product(const RIdeal& j) const {
  std::vector<Polynomial> gens;
  for (const auto& a : gens_)
    for (const auto& b : j.gens_) gens.push_back(a * b);
  return RIdeal(ring_, std::move(gens));
}

RIdeal RIdeal::power(int k) const {
  if (k < 0) fail_structural("negative ideal power");
  RIdeal acc = ring_->unit_ideal();
  for (int i = 0; i < k; ++i) acc = acc.product(*this);
  return acc;
}

int RIdeal::dim_V() const {
  return dim_quotient(ring_->ambient(), gens_, ring_->limits());
}

int RIdeal::height_in_R() const {
  int dv = dim_V();
  if (dv < 0) return ring_->dim();
  return ring_->dim() - dv;
}

bool radical_equal(const RIdeal& a, const RIdeal& b) {
  for (const auto& g : a.gens())
    if (!b.radical_contains(g)) return false;
  for (const auto& g : b.gens())
    if (!a.radical_contains(g)) return false;
  return true;
}

// ---------------------------------------------------------------------------

QRingPtr QuotientRing::define(std::int64_t characteristic, std::vector<std::string> vars,
                              std::vector<std::int64_t> weights,
                              const std::vector<std::string>& relations, GBOptions limits) {
  if (characteristic != 0 && !is_prime(characteristic))
    fail_input("characteristic " + std::to_string(characteristic) + " is not prime");
  auto S = PolyRing::make(Field(characteristic), std::move(vars), std::move(weights));
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_poly(S, r));
  return define(S, std::move(rels), limits);
}

QRingPtr QuotientRing::define(const PolyRingPtr& S, std::vector<Polynomial> relations,
                              GBOptions limits) {
  auto R = std::make_shared<QuotientRing>();
  R->S_ = S;
  R->limits_ = limits;
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    if (r.homogeneity().tag != HomogeneityResult::Tag::Homogeneous)
      fail_structural("inhomogeneous defining relation: " + r.str());
    R->rels_.push_back(std::move(r));
  }
  R->gbI_ = gb_of_ideal(S, R->rels_, limits);
  if (R->gbI_.is_unit_ideal())
    throw Error(Error::Kind::DegenerateRing, "the defining ideal is the unit ideal");
  R->rels_ = gb_polys(R->gbI_);
  R->dim_ = dim_quotient(S, R->rels_, limits);
  return R;
}

Polynomial QuotientRing::nf(const Polynomial& f) const { return nf_poly(f, gbI_, limits_); }

RIdeal QuotientRing::ideal(std::vector<Polynomial> gens) const {
  return RIdeal(shared_from_this(), std::move(gens));
}

RIdeal QuotientRing::ideal_strs(const std::vector<std::string>& gens) const {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(S_, g));
  return ideal(std::move(ps));
}

RIdeal QuotientRing::zero_ideal() const { return ideal({}); }

RIdeal QuotientRing::unit_ideal() const { return ideal({poly_const(S_, 1)}); }

RIdeal QuotientRing::irrelevant_ideal() const {
  std::vector<Polynomial> vs;
  for (int i = 0; i < S_->nvars(); ++i) vs.push_back(poly_var(S_, i));
  return ideal(std::move(vs));
}

RIdeal QuotientRing::singular_locus() const {
  const int c = codim();
  const int n = S_->nvars();
  const int r = static_cast<int>(rels_.size());
  std::vector<Polynomial> gens;
  if (c == 0) {
    gens.push_back(poly_const(S_, 1));
    return ideal(std::move(gens));
  }
  if (c > std::min(r, n)) return ideal({});
  std::vector<std::vector<Polynomial>> jac(r, std::vector<Polynomial>(n, Polynomial(S_)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) jac[i][j] = rels_[i].derivative(j);
  for (const auto& rs : index_subsets(r, c))
    for (const auto& cs : index_subsets(n, c)) {
      std::vector<std::vector<Polynomial>> m(c, std::vector<Polynomial>(c, Polynomial(S_)));
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) m[i][j] = jac[rs[i]][cs[j]];
      Polynomial d = poly_det(S_, m);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  return ideal(std::move(gens));
}

SeriesPrefix QuotientRing::hilbert(std::int64_t D) const {
  std::vector<MVec> cols;
  ModOrder ord = ModOrder::top(S_->order());
  for (const auto& r : rels_) cols.push_back(MVec::from_poly(r, ord));
  return hilbert_free_quotient(S_, {0}, 1, cols, D, limits_);
}

}  // namespace torext
