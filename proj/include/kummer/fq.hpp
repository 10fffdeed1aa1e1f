#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "kummer/error.hpp"

namespace kummer {

// ---- small integer helpers -------------------------------------------------

uint64_t ipow(uint64_t base, uint32_t exp);
bool is_prime_u64(uint64_t x);

/// v_l(x) for x > 0.
uint32_t valuation(uint64_t x, uint64_t l);

inline constexpr uint32_t kInfValuation = UINT32_MAX;

/// v_l(x) with v_l(0) = kInfValuation.
uint32_t valuation_or_inf(uint64_t x, uint64_t l);

/// Prime factorization by trial division, (prime, multiplicity) pairs.
std::vector<std::pair<uint64_t, uint32_t>> factorize_u64(uint64_t x);

/// Inverse of a modulo m (gcd(a, m) = 1), result in [0, m).
uint64_t mod_inverse(uint64_t a, uint64_t m);

// ---- finite fields ----------------------------------------------------------

/// Largest field materialized with full exp/log tables.
inline constexpr uint64_t kMaxTableField = uint64_t(1) << 20;

struct FieldData;
class Fq;

/// Handle to an immutable finite field F_q, q = p^f. Nonzero elements are
/// discrete logs relative to a fixed generator; the generator is the first
/// element in canonical enumeration order whose multiplicative order is q-1.
/// Field data is interned in a process-lifetime registry, so handles and
/// elements are plain pointers and never dangle.
class Field {
 public:
  Field() = default;

  bool valid() const { return d_ != nullptr; }
  uint64_t p() const;
  uint64_t f() const;  // degree over the prime field
  uint64_t q() const;

  Fq zero() const;
  Fq one() const;
  Fq generator() const;
  Fq neg_one() const;
  Fq from_dlog(uint64_t e) const;
  Fq from_code(uint64_t code) const;
  /// Embeds an integer through the prime subfield (value mod p).
  Fq from_int(int64_t v) const;

  /// Modulus over F_p as coefficient codes (ascending), empty for f = 1 or
  /// fields built as extensions of a non-prime base.
  std::vector<uint64_t> prime_modulus() const;

  bool same(const Field& o) const { return d_ == o.d_; }
  const FieldData* data() const { return d_; }

 private:
  explicit Field(const FieldData* d) : d_(d) {}
  const FieldData* d_ = nullptr;

  friend Field make_field(uint64_t, uint64_t, std::optional<std::vector<uint64_t>>);
  friend Field make_extension_field(const Field&, const std::vector<Fq>&);
  friend class Fq;
};

/// F_{p^f}. For f > 1 the modulus (monic, irreducible, degree f, coefficient
/// codes over F_p ascending) may be omitted, in which case the canonical
/// (enumeration-first) irreducible of degree f is used.
Field make_field(uint64_t p, uint64_t f = 1,
                 std::optional<std::vector<uint64_t>> modulus = std::nullopt);

/// Extension of an existing field by a monic irreducible polynomial given by
/// its coefficients (ascending, constant first, leading 1 included). Used for
/// residue fields and test oracles; irreducibility is the caller's contract
/// and is verified through generator search.
Field make_extension_field(const Field& base, const std::vector<Fq>& monic_modulus);

/// Element of a Field: ZERO or a discrete log in [0, q-2].
class Fq {
 public:
  Fq() = default;

  bool valid() const { return fd_ != nullptr; }
  bool is_zero() const;
  /// Discrete log of a nonzero element.
  uint64_t dlog() const;
  /// Canonical representation code in [0, q): base-p digit packing of the
  /// coefficient vector; the value itself for prime fields.
  uint64_t code() const;
  Field field() const;

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator-() const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq inv() const;
  Fq pow(int64_t e) const;
  /// Multiplicative order of a nonzero element.
  uint64_t mul_order() const;

  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }

 private:
  Fq(const FieldData* fd, int64_t log) : fd_(fd), log_(log) {}

  const FieldData* fd_ = nullptr;
  int64_t log_ = -2;  // -2 invalid, -1 zero, else dlog

  void check_same(const Fq& o) const;

  friend class Field;
  friend struct FieldData;
};

// ---- power classes and the root-degree oracle -------------------------------

/// The unique s in [0, n] with beta in (F_q*)^{l^(n-s)} \ (F_q*)^{l^(n-s+1)},
/// via discrete logs: s = n - min(n, v_l(dlog beta)). Requires l^n | q - 1.
/// [F_q(l^n-th root of beta) : F_q] = l^s.
uint32_t power_class(const Fq& beta, uint64_t l, uint32_t n);

/// Independent root-search oracle: builds the extension tower F_q(mu),
/// mu an l^n-th root of beta, by adjoining one l-th root per step (exhaustive
/// root scan at small levels, verified binomial adjunction above), then
/// returns l^s with s minimal such that mu^(l^s) lies in F_q.
uint64_t oracle_root_degree(const Fq& beta, uint64_t l, uint32_t n);

/// Tower dimension cap for oracle_root_degree.
inline constexpr uint64_t kMaxTowerDim = 64;

}  // namespace kummer
