#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kummer/fq.hpp"

namespace kummer {

/// Dense polynomial over a Field, coefficients ascending, no trailing zeros.
/// The zero polynomial has an empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(Field field, std::vector<Fq> coeffs);
  static Poly zero(const Field& f) { return Poly(f, {}); }
  static Poly one(const Field& f) { return Poly(f, {f.one()}); }
  static Poly t(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
  static Poly from_codes(const Field& f, const std::vector<uint64_t>& codes);
  static Poly constant(const Fq& c);

  bool valid() const { return field_.valid(); }
  const Field& field() const { return field_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const;
  Fq leading() const;
  Fq coeff(size_t i) const;  // zero beyond degree
  const std::vector<Fq>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Fq& s) const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Fq eval(const Fq& x) const;
  Poly pow(uint32_t e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Canonical order: by degree, then coefficient codes from the leading
  /// term down. Used to sort lattice supports deterministically.
  bool operator<(const Poly& o) const;

 private:
  Field field_;
  std::vector<Fq> c_;
  void trim();
  void check_same(const Poly& o) const;
};

/// gcd made monic; gcd(0, 0) = 0.
Poly gcd_monic(const Poly& a, const Poly& b);

/// True iff the monic P of degree >= 1 has no monic irreducible factor of
/// degree <= deg P / 2 (trial division against enumerated irreducibles).
bool is_irreducible(const Poly& p);

/// Monic irreducible; constructed through the checked factory or enumeration.
struct IrreduciblePoly {
  Poly poly;

  int degree() const { return poly.degree(); }
  bool operator==(const IrreduciblePoly& o) const { return poly == o.poly; }
  bool operator<(const IrreduciblePoly& o) const { return poly < o.poly; }
};

/// Verifies irreducibility and wraps. Throws NotMonic / ScopeViolation.
IrreduciblePoly make_irreducible(const Poly& p);

/// All monic irreducibles of degree exactly d, canonical enumeration order.
std::vector<IrreduciblePoly> enumerate_monic_irreducibles(const Field& f, uint32_t d);

/// D* = (-1)^{deg D} D.
Poly star(const Poly& d);

/// The sign (-1)^{total_degree} as a field element.
Fq star_sign(const Field& f, uint64_t total_degree);

/// Residue field F_q[T]/(P) together with the reduction homomorphism.
struct ResidueField {
  Field field;   // size q^{deg P}
  Fq t_image;    // class of T
  IrreduciblePoly p;

  /// N mod P as a residue-field element; kills exactly the multiples of P.
  Fq reduce(const Poly& n) const;
};

ResidueField residue_field(const IrreduciblePoly& p);

}  // namespace kummer
