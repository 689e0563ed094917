/**
 * @file core.hpp
 * @brief Exact coefficient arithmetic (prime fields and rationals), monomials
 *        with weighted degrees, and monomial orders.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace torext {

using Rat = boost::multiprecision::cpp_rational;

/// Shared error taxonomy. Every engine failure is one of these kinds;
/// resource caps never produce wrong answers, they throw.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    Structural,        // mismatched ambients, inhomogeneous input, bad matrix shapes
    Resource,          // a configured cap was exceeded
    DegenerateRing,    // 1 lies in the defining ideal
    NotCohenMacaulay,  // pd_S R != codim
    Hypothesis,        // a check was invoked outside its hypotheses
    Theorem,           // two provably-equal routes disagreed (an engine bug)
    Input,             // scenario / CLI input problems
  };
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Kind kind;
};

[[noreturn]] inline void fail_structural(const std::string& m) {
  throw Error(Error::Kind::Structural, m);
}
[[noreturn]] inline void fail_resource(const std::string& cap) {
  throw Error(Error::Kind::Resource, "resource cap exceeded: " + cap);
}
[[noreturn]] inline void fail_input(const std::string& m) {
  throw Error(Error::Kind::Input, m);
}

// ---------------------------------------------------------------------------
// Coefficients

/// A field element. For prime characteristic only `fp` is used and holds the
/// canonical representative in [0,p); for characteristic 0 only `q` is used
/// and boost keeps it reduced with positive denominator.
struct Coeff {
  std::int64_t fp = 0;
  Rat q = 0;
};

/// F_p (p an odd prime) or Q (p = 0). All operations are exact.
class Field {
 public:
  explicit Field(std::int64_t p);

  std::int64_t characteristic() const { return p_; }
  bool rational() const { return p_ == 0; }

  Coeff zero() const { return {}; }
  Coeff one() const;
  Coeff from_int(std::int64_t v) const;
  Coeff from_rat(const Rat& r) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool eq(const Coeff& a, const Coeff& b) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const;

  /// Least nonnegative residue (F_p) or reduced fraction (Q).
  std::string str(const Coeff& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t p);

// ---------------------------------------------------------------------------
// Monomials

/// Exponent vector of fixed length; the ambient ring fixes the length.
struct Mono {
  std::vector<std::uint32_t> e;

  static Mono unit(int n) { return Mono{std::vector<std::uint32_t>(n, 0)}; }
  int nvars() const { return static_cast<int>(e.size()); }
  std::int64_t total_degree() const;
  std::int64_t weighted_degree(const std::vector<std::int64_t>& w) const;
  bool is_unit() const;

  Mono operator*(const Mono& o) const;
  bool divides(const Mono& o) const;          // this | o
  Mono div(const Mono& o) const;              // this / o, caller ensures divisibility
  Mono lcm(const Mono& o) const;
  bool coprime(const Mono& o) const;
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
};

// ---------------------------------------------------------------------------
// Monomial orders

/// A global monomial order. Elim compares an initial block of variables
/// first (grevlex within the block), then the remaining variables; it is the
/// elimination order used for intersections and radical membership.
struct MonoOrder {
  enum class Kind { Grevlex, Lex, WGrevlex, Elim };
  Kind kind = Kind::Grevlex;
  int elim_block = 0;                    // Elim: number of leading variables
  std::vector<std::int64_t> weights;     // WGrevlex

  /// +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Mono& a, const Mono& b) const;

  std::string str() const;
};

/// Generic grevlex comparison on a contiguous slice [lo, hi) of exponents.
int grevlex_cmp_range(const Mono& a, const Mono& b, int lo, int hi);

}  // namespace torext
