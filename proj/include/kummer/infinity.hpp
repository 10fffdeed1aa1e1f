#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "kummer/lattice.hpp"

namespace kummer {

/// Class of a radicand in k_infinity^* / (k_infinity^*)^{l^n}: the uniformizer
/// valuation coordinate and the sign (leading-coefficient class). One-units
/// are exact l^n-th powers locally (l != p) and carry nothing.
struct LocalClass {
  uint64_t val;  // pi_infinity exponent of the class, mod l^n
  Fq sign;       // lambda_x as a field element (kappa^{l^(n-e)})
};

/// The sign phi_infinity of a radicand kappa * prod P^e: monic monomials have
/// leading coefficient 1, so the sign is kappa itself.
Fq sign_phi(const Radicand& r);

/// Local class of a generator, scaled into the ambient l^n lattice.
/// Fails with WildPrime when l equals the field characteristic.
LocalClass local_class(const Radicand& r, uint64_t l, uint32_t n);

/// Local class as a row (val, dlog sign mod l^n) for the 2-column local module.
std::array<uint64_t, 2> local_row(const Radicand& r, uint64_t l, uint32_t n);

/// The subgroup of (Z/l^n)^2 generated by the local classes of the given
/// generators; support is the single synthetic prime pi_infinity plus the
/// constant coordinate.
ZModule local_module(const Field& f, uint64_t l, uint32_t n, const std::vector<Radicand>& gens);

struct InfinityData {
  uint64_t e_inf;  // ramification index at p_infinity
  uint64_t f_inf;  // residue degree = degree of the infinite prime (geometric)
};

/// e_inf = order of the valuation-coordinate projection, f_inf = |W_loc|/e_inf.
/// The kernel of the projection is the pure-constant local subgroup, so f_inf
/// also equals its order (checked).
InfinityData infinity_data(const Field& f, uint64_t l, uint32_t n,
                           const std::vector<Radicand>& gens);

InfinityData infinity_data_module(const ZModule& loc);

/// Linear map from lattice vectors to local rows: a class vector
/// (v_1..v_r, v_const) has local class (-sum v_j deg P_j mod l^n, v_const).
struct LocalMap {
  uint64_t mod;
  std::vector<uint64_t> val_coef;  // per support column: -deg P_j mod l^n

  static LocalMap of(const Lattice& lat);
  std::array<uint64_t, 2> apply(const std::vector<uint64_t>& v) const;
};

/// Local module of a whole subgroup (image of its rows under the local map).
ZModule local_module_of_subgroup(const Subgroup& s);

/// Symbolic norm of the local prime element in the exceptional Kummer
/// configuration: N(Pi~) = sign * theta * pi_infinity^{pi_power}.
struct LocalNorm {
  Fq sign;            // +1 or -1 as a field element
  Fq theta;           // theta not an l-th power, gamma^{c1} = theta^{l^(delta-lambda)}
  uint64_t pi_power;  // l^lambda = deg of Pi~
};

/// The closed-form local norm; nullopt when theta does not exist, i.e. when
/// gamma^{c1} lies deeper than (F_q*)^{l^(delta-lambda)} \ next layer
/// (degenerate configurations fall back to the lattice route).
std::optional<LocalNorm> local_norm_prime_impl(const Field& f, uint64_t l, uint32_t n,
                                               const Fq& gamma, uint64_t c, uint32_t delta,
                                               uint32_t lambda);

/// Minimal-degree kernel search for the constant field of the extended
/// Hilbert class field: l^lambda * min{ s >= 1 : (-theta)^s in
/// (F_q*)^{l^(n-delta)} }. Applicable for n >= 2 with theta available;
/// nullopt otherwise. Exceeding the search bound is an internal error.
std::optional<uint64_t> hplus_search_impl(const Field& f, uint64_t l, uint32_t n,
                                          const Fq& gamma, uint64_t c, uint32_t delta,
                                          uint32_t lambda);

}  // namespace kummer
