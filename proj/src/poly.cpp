#include "torext/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace torext {

PolyRingPtr PolyRing::make(Field f, std::vector<std::string> vars,
                           std::vector<std::int64_t> weights, MonoOrder ord) {
  if (vars.empty()) fail_structural("a polynomial ring needs at least one variable");
  if (weights.size() != vars.size()) fail_structural("weight count != variable count");
  for (auto w : weights)
    if (w < 1) fail_structural("weights must be >= 1");
  auto r = std::make_shared<PolyRing>();
  r->field_ = f;
  r->vars_ = std::move(vars);
  r->weights_ = std::move(weights);
  r->order_ = std::move(ord);
  if (r->order_.kind == MonoOrder::Kind::WGrevlex && r->order_.weights.empty())
    r->order_.weights = r->weights_;
  return r;
}

bool PolyRing::same(const PolyRing& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_;
}

PolyRingPtr PolyRing::extended(const std::string& var, MonoOrder ord) const {
  auto vars = vars_;
  vars.push_back(var);
  auto w = weights_;
  w.push_back(1);
  return make(field_, std::move(vars), std::move(w), std::move(ord));
}

PolyRingPtr PolyRing::reordered(MonoOrder ord) const {
  return make(field_, vars_, weights_, std::move(ord));
}

int PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------

Polynomial poly_from_sorted(PolyRingPtr r, std::vector<Term>&& t) {
  Polynomial p(std::move(r));
  p.terms_ = std::move(t);
  return p;
}

Polynomial::Polynomial(PolyRingPtr r, std::vector<Term> terms) : ring_(std::move(r)) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring_->cmp(a.m, b.m) > 0;
  });
  const Field& F = ring_->field();
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().m == t.m)
      terms_.back().c = F.add(terms_.back().c, t.c);
    else
      terms_.push_back(t);
    if (!terms_.empty() && F.is_zero(terms_.back().c)) terms_.pop_back();
  }
}

const Term& Polynomial::lt() const {
  if (terms_.empty()) fail_structural("leading term of the zero polynomial");
  return terms_.front();
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring()))
    fail_structural("polynomials from different ambient rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  const Field& F = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->cmp(terms_[i].m, o.terms_[j].m);
    if (c > 0) out.push_back(terms_[i++]);
    else if (c < 0) out.push_back(o.terms_[j++]);
    else {
      Coeff s = F.add(terms_[i].c, o.terms_[j].c);
      if (!F.is_zero(s)) out.push_back({terms_[i].m, s});
      ++i; ++j;
    }
  }
  while (i < terms_.size()) out.push_back(terms_[i++]);
  while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
  return poly_from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  const Field& F = ring_->field();
  auto t = terms_;
  for (auto& x : t) x.c = F.neg(x.c);
  return poly_from_sorted(ring_, std::move(t));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Coeff& c, const Mono& m) const {
  const Field& F = ring_->field();
  if (F.is_zero(c)) return Polynomial(ring_);
  auto t = terms_;
  for (auto& x : t) {
    x.m = x.m * m;
    x.c = F.mul(x.c, c);
  }
  return poly_from_sorted(ring_, std::move(t));
}

Polynomial Polynomial::scale(const Coeff& c) const { return mul_term(c, Mono::unit(ring_->nvars())); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  const Field& F = ring_->field();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.push_back({a.m * b.m, F.mul(a.c, b.c)});
  return Polynomial(ring_, std::move(acc));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  if (!ring_->same(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  const Field& F = ring_->field();
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || !F.eq(terms_[i].c, o.terms_[i].c)) return false;
  return true;
}

Polynomial Polynomial::axpy(const Coeff& c, const Mono& m, const Polynomial& o) const {
  return *this + o.mul_term(c, m);
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
  return d;
}

HomogeneityResult Polynomial::homogeneity() const {
  if (terms_.empty()) return {HomogeneityResult::Tag::Zero, 0};
  std::int64_t d = ring_->wdeg(terms_.front().m);
  for (const auto& t : terms_)
    if (ring_->wdeg(t.m) != d) return {HomogeneityResult::Tag::Inhomogeneous, 0};
  return {HomogeneityResult::Tag::Homogeneous, d};
}

bool Polynomial::homogeneous_of_degree(std::int64_t d) const {
  if (terms_.empty()) return true;
  for (const auto& t : terms_)
    if (ring_->wdeg(t.m) != d) return false;
  return true;
}

Polynomial Polynomial::derivative(int var) const {
  const Field& F = ring_->field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m.e[var] == 0) continue;
    Term nt = t;
    nt.c = F.mul(t.c, F.from_int(t.m.e[var]));
    if (F.is_zero(nt.c)) continue;
    nt.m.e[var] -= 1;
    out.push_back(nt);
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::transport(const PolyRingPtr& to) const {
  const int n = ring_ ? ring_->nvars() : 0;
  const int m = to->nvars();
  if (m < n) fail_structural("cannot transport polynomial to a smaller ring");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt;
    nt.m = Mono::unit(m);
    for (int i = 0; i < n; ++i) nt.m.e[i] = t.m.e[i];
    nt.c = t.c;
    out.push_back(std::move(nt));
  }
  return Polynomial(to, std::move(out));
}

// ---------------------------------------------------------------------------
// Canonical text form

static void print_mono(std::ostringstream& os, const PolyRing& R, const Mono& m) {
  bool first = true;
  for (int i = 0; i < R.nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!first) os << '*';
    first = false;
    os << R.vars()[i];
    if (m.e[i] > 1) os << '^' << m.e[i];
  }
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const Field& F = ring_->field();
  // canonical form sorts by plain grevlex, independent of the active order
  MonoOrder g;
  auto t = terms_;
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return g.cmp(a.m, b.m) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto& x : t) {
    std::string cs = F.str(x.c);
    bool neg = !F.characteristic() && cs.size() && cs[0] == '-';
    if (first) {
      if (neg) { os << '-'; cs = cs.substr(1); }
    } else {
      if (neg) { os << " - "; cs = cs.substr(1); }
      else os << " + ";
    }
    first = false;
    if (x.m.is_unit()) {
      os << cs;
    } else {
      if (cs != "1") os << cs << '*';
      print_mono(os, *ring_, x.m);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := base ('^' int)?; base := int | var | '(' expr ')' | '-' factor

namespace {

struct Parser {
  const PolyRingPtr& R;
  const std::string& s;
  size_t i = 0;

  void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
  bool peek(char c) { skip(); return i < s.size() && s[i] == c; }
  bool eat(char c) { if (peek(c)) { ++i; return true; } return false; }

  [[noreturn]] void err(const std::string& m) {
    fail_input("polynomial syntax error at offset " + std::to_string(i) + ": " + m +
               " in \"" + s + "\"");
  }

  Polynomial parse() {
    auto p = expr();
    skip();
    if (i != s.size()) err("trailing input");
    return p;
  }

  Polynomial expr() {
    Polynomial p = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+')) p = p + term();
      else if (eat('-')) p = p - term();
      else return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      std::int64_t e = integer();
      if (e < 0) err("negative exponent");
      Polynomial r = poly_const(R, 1);
      for (std::int64_t k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }

  std::int64_t integer() {
    skip();
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) err("expected integer");
    std::int64_t v = std::stoll(s.substr(i, j - i));
    i = j;
    return v;
  }

  Polynomial base() {
    skip();
    if (eat('(')) {
      auto p = expr();
      if (!eat(')')) err("expected ')'");
      return p;
    }
    if (eat('-')) return -factor();
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      return poly_const(R, integer());
    size_t j = i;
    while (j < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '@'))
      ++j;
    if (j == i) err("expected variable or number");
    std::string name = s.substr(i, j - i);
    int v = R->var_index(name);
    if (v < 0) err("unknown variable '" + name + "'");
    i = j;
    return poly_var(R, v);
  }
};

}  // namespace

Polynomial poly_zero(const PolyRingPtr& r) { return Polynomial(r); }

Polynomial poly_const(const PolyRingPtr& r, std::int64_t v) {
  Coeff c = r->field().from_int(v);
  if (r->field().is_zero(c)) return Polynomial(r);
  return poly_from_sorted(r, {Term{Mono::unit(r->nvars()), c}});
}

Polynomial poly_var(const PolyRingPtr& r, int var, std::uint32_t exp) {
  Mono m = Mono::unit(r->nvars());
  m.e[var] = exp;
  return poly_from_sorted(r, {Term{m, r->field().one()}});
}

Polynomial poly_mono(const PolyRingPtr& r, const Mono& m, const Coeff& c) {
  if (r->field().is_zero(c)) return Polynomial(r);
  return poly_from_sorted(r, {Term{m, c}});
}

Polynomial parse_poly(const PolyRingPtr& r, const std::string& text) {
  Parser p{r, text};
  return p.parse();
}

}  // namespace torext
