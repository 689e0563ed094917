#include "torext/core.hpp"

namespace torext {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Field::Field(std::int64_t p) : p_(p) {
  if (p == 0) return;
  if (!is_prime(p)) fail_input("characteristic " + std::to_string(p) + " is not prime");
}

Coeff Field::one() const {
  Coeff c;
  if (p_) c.fp = 1;
  else c.q = 1;
  return c;
}

Coeff Field::from_int(std::int64_t v) const {
  Coeff c;
  if (p_) {
    c.fp = v % p_;
    if (c.fp < 0) c.fp += p_;
  } else {
    c.q = v;
  }
  return c;
}

Coeff Field::from_rat(const Rat& r) const {
  if (p_) fail_structural("rational literal in prime characteristic");
  Coeff c;
  c.q = r;
  return c;
}

bool Field::is_zero(const Coeff& a) const { return p_ ? a.fp == 0 : a.q == 0; }
bool Field::is_one(const Coeff& a) const { return p_ ? a.fp == 1 : a.q == 1; }
bool Field::eq(const Coeff& a, const Coeff& b) const {
  return p_ ? a.fp == b.fp : a.q == b.q;
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  Coeff c;
  if (p_) {
    c.fp = a.fp + b.fp;
    if (c.fp >= p_) c.fp -= p_;
  } else {
    c.q = a.q + b.q;
  }
  return c;
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  Coeff c;
  if (p_) {
    c.fp = a.fp - b.fp;
    if (c.fp < 0) c.fp += p_;
  } else {
    c.q = a.q - b.q;
  }
  return c;
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  Coeff c;
  if (p_) c.fp = (a.fp * b.fp) % p_;
  else c.q = a.q * b.q;
  return c;
}

Coeff Field::neg(const Coeff& a) const {
  Coeff c;
  if (p_) c.fp = a.fp ? p_ - a.fp : 0;
  else c.q = -a.q;
  return c;
}

Coeff Field::inv(const Coeff& a) const {
  if (is_zero(a)) fail_structural("division by zero");
  Coeff c;
  if (p_) {
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a.fp;
    while (nr) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    c.fp = t < 0 ? t + p_ : t;
  } else {
    c.q = 1 / a.q;
  }
  return c;
}

Coeff Field::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

std::string Field::str(const Coeff& a) const {
  if (p_) return std::to_string(a.fp);
  return a.q.str();
}

// ---------------------------------------------------------------------------

std::int64_t Mono::total_degree() const {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

std::int64_t Mono::weighted_degree(const std::vector<std::int64_t>& w) const {
  std::int64_t d = 0;
  for (size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
  return d;
}

bool Mono::is_unit() const {
  for (auto x : e) if (x) return false;
  return true;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

bool Mono::divides(const Mono& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::div(const Mono& o) const {
  Mono r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

Mono Mono::lcm(const Mono& o) const {
  Mono r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(e[i], o.e[i]);
  return r;
}

bool Mono::coprime(const Mono& o) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] && o.e[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------

int grevlex_cmp_range(const Mono& a, const Mono& b, int lo, int hi) {
  std::int64_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    std::int64_t d = std::int64_t(a.e[i]) - std::int64_t(b.e[i]);
    if (d) return d < 0 ? 1 : -1;
  }
  return 0;
}

int MonoOrder::cmp(const Mono& a, const Mono& b) const {
  if (a.nvars() != b.nvars()) fail_structural("monomial length mismatch in comparison");
  const int n = a.nvars();
  switch (kind) {
    case Kind::Grevlex:
      return grevlex_cmp_range(a, b, 0, n);
    case Kind::Lex:
      for (int i = 0; i < n; ++i) {
        std::int64_t d = std::int64_t(a.e[i]) - std::int64_t(b.e[i]);
        if (d) return d > 0 ? 1 : -1;
      }
      return 0;
    case Kind::WGrevlex: {
      std::int64_t da = a.weighted_degree(weights), db = b.weighted_degree(weights);
      if (da != db) return da > db ? 1 : -1;
      return grevlex_cmp_range(a, b, 0, n);
    }
    case Kind::Elim: {
      int c = grevlex_cmp_range(a, b, 0, elim_block);
      if (c) return c;
      return grevlex_cmp_range(a, b, elim_block, n);
    }
  }
  return 0;
}

std::string MonoOrder::str() const {
  switch (kind) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::WGrevlex: return "wgrevlex";
    case Kind::Elim: return "elim(" + std::to_string(elim_block) + ")";
  }
  return "?";
}

}  // namespace torext
