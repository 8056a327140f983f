#pragma once

#include <cstdint>
#include <string>

#include "cyclehom/bigint.hpp"
#include "cyclehom/errors.hpp"

namespace cyclehom {

// Z, Q, or Z/n with n >= 2.
class CoefficientRing {
 public:
  enum class Kind { Integers, Rationals, ModN };

  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  static CoefficientRing mod(BigInt n) {
    if (n < 2) throw ValidationError("modulus must be at least 2, got " + n.str());
    return CoefficientRing(Kind::ModN, std::move(n));
  }

  // Accepts "Z", "Q", "Z/n".
  static CoefficientRing parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_mod() const { return kind_ == Kind::ModN; }
  const BigInt& modulus() const { return modulus_; }
  bool has_prime_modulus() const { return is_mod() && is_prime(modulus_); }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      default: return "Z/" + modulus_.str();
    }
  }

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  CoefficientRing(Kind kind, BigInt modulus) : kind_(kind), modulus_(std::move(modulus)) {}

  Kind kind_;
  BigInt modulus_;
};

}  // namespace cyclehom
