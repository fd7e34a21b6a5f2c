#pragma once

// Exact scalar arithmetic: the rationals, or a prime field F_p.
// A Field value is a lightweight descriptor copied into every object that
// owns scalars; element values are arbitrary-precision rationals (for F_p the
// canonical residue is stored with denominator 1).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xpa {

/// One error type for the whole kernel; `kind` names the failure class
/// (NotAssociative, CompatibilityViolation, ...) and `witness` carries a
/// printable certificate when one exists.
class XpaError : public std::runtime_error {
 public:
  XpaError(std::string kind, const std::string& message, std::string witness = "")
      : std::runtime_error(kind + ": " + message),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string kind_;
  std::string witness_;
};

using Fel = mpq_class;

class Field {
 public:
  enum class Kind { Rational, Prime };

  Field() : kind_(Kind::Rational), p_(0) {}

  static Field rationals() { return Field(); }

  static Field prime(long p) {
    mpz_class pz(p);
    if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0)
      throw XpaError("NotPrime", "modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.kind_ = Kind::Prime;
    f.p_ = p;
    return f;
  }

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  long modulus() const { return p_; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Fel zero() const { return Fel(0); }
  Fel one() const { return Fel(1); }

  /// Canonical representative: reduced fraction, or residue in [0, p).
  Fel norm(const Fel& x) const {
    if (is_rational()) {
      Fel r = x;
      r.canonicalize();
      return r;
    }
    // Residues are integers; a denominator can only appear transiently via
    // from_string, where it is folded in by a modular inverse.
    mpz_class num = x.get_num(), den = x.get_den();
    mpz_class p(p_);
    if (den != 1) {
      mpz_class dinv;
      if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw XpaError("DivisionByZero", "denominator not invertible mod p");
      num *= dinv;
    }
    mpz_class r = num % p;
    if (r < 0) r += p;
    return Fel(r);
  }

  Fel add(const Fel& a, const Fel& b) const { return norm(a + b); }
  Fel sub(const Fel& a, const Fel& b) const { return norm(a - b); }
  Fel mul(const Fel& a, const Fel& b) const { return norm(a * b); }
  Fel neg(const Fel& a) const { return norm(-a); }

  Fel inv(const Fel& a) const {
    if (a == 0) throw XpaError("DivisionByZero", "inverse of zero");
    if (is_rational()) return norm(Fel(1) / a);
    mpz_class r, p(p_), num = norm(a).get_num();
    if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
      throw XpaError("DivisionByZero", "element not invertible mod p");
    return Fel(r);
  }

  Fel div(const Fel& a, const Fel& b) const { return mul(a, inv(b)); }

  Fel from_long(long n) const { return norm(Fel(n)); }

  /// Parses "p/q" or an integer literal; throws on malformed input.
  Fel from_string(const std::string& s) const {
    try {
      Fel x(s);
      return norm(x);
    } catch (const std::invalid_argument&) {
      throw XpaError("BadLiteral", "cannot parse scalar literal '" + s + "'");
    }
  }

  std::string to_string(const Fel& x) const { return norm(x).get_str(); }

  std::string describe() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
  }

 private:
  Kind kind_;
  long p_;
};

}  // namespace xpa
