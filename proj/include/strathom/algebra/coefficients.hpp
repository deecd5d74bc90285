#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strathom {

using Integer = mpz_class;

/// Raised when an input violates a structural invariant. Carries every
/// violation found, not only the first one.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  explicit ValidationError(const std::string& violation);

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Coefficient ring: the integers, the rationals, or a prime field.
///
/// The rationals are handled through integer arithmetic; callers tensor the
/// integral result with Q (drop torsion) at the end.
class Coefficients {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Coefficients integers() { return Coefficients(Kind::Integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::Rationals, 0); }
  static Coefficients prime_field(long p);

  /// Accepts "Z", "Q", "F<p>" and "Fp<p>" (e.g. "F2", "Fp3").
  static Coefficients parse(std::string_view text);

  Kind kind() const { return kind_; }
  long characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }
  std::string name() const;

  /// Canonical representative: residue in [0, p) over a prime field.
  void normalize(Integer& x) const;
  Integer inverse(const Integer& x) const;

  friend bool operator==(const Coefficients& a, const Coefficients& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Coefficients(Kind kind, long p) : kind_(kind), p_(p) {}

  Kind kind_;
  long p_;
};

bool is_prime(long n);

}  // namespace strathom
