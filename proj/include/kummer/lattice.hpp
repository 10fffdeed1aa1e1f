#pragma once

#include <cstdint>
#include <vector>

#include "kummer/poly.hpp"

namespace kummer {

/// Row-span submodule of (Z/l^n)^c held in Howell canonical form: pivots are
/// normalized l-powers with strictly increasing pivot columns, entries above a
/// pivot are reduced modulo it, and the row set is closed under annihilator
/// shifts, so rows with pivot column >= j generate exactly the elements
/// supported on columns >= j. Equal submodules have identical rows.
class ZModule {
 public:
  ZModule(uint64_t l, uint32_t n, size_t cols);  // trivial module
  static ZModule span(uint64_t l, uint32_t n, size_t cols,
                      std::vector<std::vector<uint64_t>> rows);

  uint64_t l() const { return l_; }
  uint32_t n() const { return n_; }
  uint64_t modulus() const { return mod_; }
  size_t cols() const { return cols_; }
  const std::vector<std::vector<uint64_t>>& rows() const { return rows_; }

  uint64_t order() const;
  bool contains(std::vector<uint64_t> v) const;
  bool operator==(const ZModule& o) const;
  ZModule joined(const ZModule& o) const;

  /// Order of the image of the projection to one coordinate (a subgroup of
  /// Z/l^n).
  uint64_t projection_order(size_t col) const;

  /// Order of the submodule of elements supported on columns >= first_col.
  uint64_t tail_order(size_t first_col) const;

  /// Every element, each exactly once; throws EnumerationBoundExceeded if the
  /// order exceeds the bound.
  std::vector<std::vector<uint64_t>> elements(uint64_t bound) const;

 private:
  uint64_t l_, mod_;
  uint32_t n_;
  size_t cols_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<size_t> pivot_col_;
  std::vector<uint32_t> pivot_val_;  // v_l of each pivot entry

  void howellize(std::vector<std::vector<uint64_t>> work);
};

/// A radical generator: the class of kappa * prod P_j^{e_j} with root order
/// l^e. In an ambient l^n-lattice the stored class is the radicand raised to
/// the power l^(n-e).
struct Radicand {
  Fq coeff;                                                   // kappa, nonzero
  std::vector<std::pair<IrreduciblePoly, uint64_t>> monomial;  // distinct primes
  uint64_t root_order = 1;                                    // l^e

  uint64_t degree() const;
  /// kappa * (-1)^{deg}: the star-twisted coefficient.
  Fq star_coeff() const;
};

/// Star twist on the factored form: (kappa, M) -> ((-1)^{deg M} kappa, M).
Radicand star(const Radicand& r);

/// Ambient lattice descriptor: field, prime l, exponent n, ordered support.
class Lattice {
 public:
  Lattice(Field field, uint64_t l, uint32_t n, std::vector<IrreduciblePoly> support);

  const Field& field() const { return field_; }
  uint64_t l() const { return l_; }
  uint32_t n() const { return n_; }
  uint64_t modulus() const { return mod_; }
  const std::vector<IrreduciblePoly>& support() const { return support_; }
  size_t cols() const { return support_.size() + 1; }  // +1 constant coordinate
  size_t col_of(const IrreduciblePoly& p) const;       // UnsupportedPrime if absent

  /// l^(n-e) * (exponents, dlog kappa) mod l^n.
  std::vector<uint64_t> class_vector(const Radicand& g) const;

  bool compatible(const Lattice& o) const;  // same field, l, n
  bool operator==(const Lattice& o) const;  // compatible and equal support

 private:
  Field field_;
  uint64_t l_, mod_;
  uint32_t n_;
  std::vector<IrreduciblePoly> support_;
};

/// Union of the supports; vectors re-embed by zero-extension.
Lattice merge_lattices(const Lattice& a, const Lattice& b);

/// KummerSubgroup: a canonical-form subgroup of the ambient lattice. The
/// subgroup order equals the degree over k of the field generated by the
/// l^n-th roots of the classes (Kummer duality under l^n | q-1).
class Subgroup {
 public:
  Subgroup(Lattice lat, ZModule mod);
  static Subgroup trivial(const Lattice& lat);
  static Subgroup span(const Lattice& lat, const std::vector<Radicand>& gens);
  static Subgroup normalize(const Lattice& lat, std::vector<std::vector<uint64_t>> rows);

  const Lattice& lattice() const { return lat_; }
  const ZModule& module() const { return mod_; }
  uint64_t order() const { return mod_.order(); }

  bool contains(const std::vector<uint64_t>& v) const;
  bool contains(const Radicand& g) const;
  bool contains_subgroup(const Subgroup& o) const;

  friend bool equal(const Subgroup& a, const Subgroup& b);
  friend Subgroup join(const Subgroup& a, const Subgroup& b);

  /// Ramification index of a finite support prime: the order of the image of
  /// the projection to that coordinate.
  uint64_t finite_ramification(const IrreduciblePoly& p) const;

  /// Order of the subgroup of pure constant classes; the constant field of
  /// the Kummer field of this subgroup has this degree over F_q.
  uint64_t constant_subgroup_order() const;

  /// Re-embed into a lattice with a larger support (zero-extension).
  Subgroup embedded(const Lattice& into) const;

 private:
  Lattice lat_;
  ZModule mod_;
};

uint64_t subgroup_order(const Subgroup& s);

}  // namespace kummer
