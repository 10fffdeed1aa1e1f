#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kummer/infinity.hpp"
#include "kummer/lattice.hpp"

namespace kummer {

/// One cyclic Kummer component K = k(l^n-th root of gamma * prod P_j^alpha_j).
struct ComponentInput {
  uint64_t l = 0;
  uint32_t n = 0;
  Fq gamma;
  std::vector<std::pair<IrreduciblePoly, uint64_t>> factors;
};

struct ExtensionSpec {
  Field field;
  std::vector<ComponentInput> components;
};

/// Per-factor derived data: alpha = b l^a with l !| b, deg P = c l^d with
/// l !| c.
struct FactorData {
  IrreduciblePoly P;
  uint64_t alpha = 0;
  uint32_t a = 0;
  uint64_t b = 0;
  uint64_t c = 0;
  uint32_t d = 0;
  size_t input_index = 0;
};

enum class CaseTag { Generic, Exceptional };

/// Everything derived from one cyclic component. Factors are sorted so that
/// 0 = a_1 <= ... <= a_r (ties by the canonical polynomial order).
struct CyclicData {
  Field field;
  uint64_t l = 0;
  uint32_t n = 0;
  uint64_t mod = 0;  // l^n
  Fq gamma;
  std::vector<FactorData> factors;
  uint64_t deg_d = 0;
  uint32_t t = 0;        // n - min(n, v_l(deg D)); e_inf(E|k) = l^t
  uint32_t m = 0;        // max_j (n - a_j - min(n - a_j, d_j)); e_inf(geE|k) = l^m
  size_t i0 = 0;         // 0-based; the largest index attaining m (valid when m > 0)
  bool has_knorr = false;  // m > 0
  int64_t bez_a = 0, bez_b = 0;  // a deg P_i0 + b l^n = l^{d_i0}
  std::vector<int64_t> z;        // j < i0: -a c_j l^(d_j - d_i0), aligned with factors
  std::vector<uint64_t> y;       // j > i0: -c_j / c_i0 mod l^n
  Fq eps;                        // (-1)^{deg D} gamma
  uint32_t delta = 0;            // v_l(deg D), uncapped
  uint32_t dcap = 0;             // min(n, delta)
  uint32_t alpha_h = 0;          // v_l(|H|); |H| from the constant power-class ratio
  uint32_t lambda = 0;           // v_l(f_inf(K|k))
  CaseTag tag = CaseTag::Generic;
  bool n1_flag = false;          // exceptional with n = 1 (constants via the lattice)

  uint64_t h_order() const { return ipow(l, alpha_h); }
  Lattice lattice() const;       // ambient lattice on the component support
  Radicand k_generator() const;  // gamma * prod P^alpha, root l^n
  Radicand e_generator() const;  // the star-twisted radicand (cyclotomic projection)
};

/// Derives every quantity of a component; validates the Kummer scope
/// (l prime, l != p, l^n | q-1, distinct irreducible factors, some alpha
/// prime to l so the extension has full degree l^n and is geometric).
CyclicData analyze_component(const Field& field, const ComponentInput& in);

/// Exceptional iff K != E (distinct radicand classes), H nontrivial,
/// t = m > 0, and the maximizer of n - a_j - min(n-a_j, d_j) is unique.
CaseTag classify(const CyclicData& cd);

/// geE generators: l^(n-a_j)-th roots of P_j*.
std::vector<Radicand> extended_genus_E(const CyclicData& cd);

/// gE generators: the four-branch construction when m > t, geE when m = t
/// (equality of the two descriptions is asserted when m = t > 0).
std::vector<Radicand> genus_E(const CyclicData& cd);

/// The part of gE fixed by H: the gE generators with the i0 root order
/// lowered by alpha_H. Equals gE when H is trivial.
std::vector<Radicand> genus_E_h_fixed(const CyclicData& cd);

/// gK generators: K joined with the H-fixed part of gE.
std::vector<Radicand> genus_K(const CyclicData& cd);

/// geK generators: geE together with the radicand of K.
std::vector<Radicand> extended_genus_K(const CyclicData& cd);

/// Closed-form local norm of the prime element over the component; throws
/// NotApplicable unless the component is exceptional with theta available.
LocalNorm local_norm_prime(const CyclicData& cd);

/// Constant-field degree of K_{H+} over F_q: the minimal-degree kernel search
/// where the closed form applies, the constant degree of the geE*K lattice
/// otherwise; agreement is asserted when both routes run.
uint64_t hplus_constant_exponent(const CyclicData& cd);

struct RamRow {
  IrreduciblePoly P;
  uint64_t e_e, e_k, e_g_e, e_ge_e, e_g_k, e_ge_k;
};

struct IdentityCheck {
  std::string name;
  bool pass;
};

struct ComponentReport {
  CyclicData cd;
  std::vector<Radicand> gens_e, gens_ge_e, gens_g_e, gens_g_k, gens_ge_k;
  Subgroup lat_e, lat_k, lat_g_e, lat_ge_e, lat_g_k, lat_ge_k, lat_ek;
  uint64_t deg_e, deg_k, deg_g_e, deg_ge_e, deg_g_k, deg_ge_k;
  uint64_t ratio_ge_g_k;  // [geK : gK]
  uint64_t ratio_ge_g_e;  // [geE : gE]
  InfinityData inf_e, inf_k, inf_g_e, inf_ge_e, inf_g_k, inf_ge_k;
  uint64_t const_g_k, const_ge_k, const_ek, hplus;
  std::optional<LocalNorm> norm;
  std::vector<RamRow> ram;
  std::vector<IdentityCheck> identities;
  // filled by the oracle layer when comparisons run; nullopt = skipped
  std::optional<bool> oracle_genus_e_ok, oracle_genus_k_ok, oracle_ram_ok;
};

struct CompositumReport {
  uint64_t l;
  uint32_t n;
  Subgroup ge_k;     // joined extended genus of all components sharing l
  uint64_t degree;
  std::vector<IdentityCheck> identities;
};

struct GenusReport {
  Field field;
  std::vector<ComponentReport> components;
  std::vector<CompositumReport> compositum;  // present for multi-component specs
  bool all_pass = true;
};

enum class CheckPolicy {
  Throw,    // first failed identity raises InternalInconsistency
  Collect,  // record pass/fail flags, never throw
};

/// Runs the full pipeline on a spec and asserts every degree, ramification,
/// infinity, and constant-field identity before emitting the report.
GenusReport bookkeeping(const ExtensionSpec& spec, CheckPolicy policy = CheckPolicy::Throw);

}  // namespace kummer
