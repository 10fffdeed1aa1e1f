#include "kummer/infinity.hpp"

namespace kummer {

Fq sign_phi(const Radicand& r) {
  require(r.coeff.valid() && !r.coeff.is_zero(), Err::ZeroInput, "sign of zero");
  return r.coeff;
}

LocalClass local_class(const Radicand& r, uint64_t l, uint32_t n) {
  const Field f = r.coeff.field();
  require(l != f.p(), Err::WildPrime, "local analysis at infinity requires l != p");
  require(!r.coeff.is_zero(), Err::ZeroInput, "zero radicand");
  uint64_t mod = ipow(l, n);
  require(mod % r.root_order == 0, Err::KummerHypothesisViolated,
          "root order must divide l^n");
  uint64_t scale = mod / r.root_order;
  uint64_t deg = r.degree() % mod;
  uint64_t val = ((mod - deg) % mod) * scale % mod;
  return LocalClass{val, r.coeff.pow(int64_t(scale))};
}

std::array<uint64_t, 2> local_row(const Radicand& r, uint64_t l, uint32_t n) {
  LocalClass lc = local_class(r, l, n);
  uint64_t mod = ipow(l, n);
  uint64_t c = lc.sign.is_zero() ? 0 : lc.sign.dlog() % mod;
  return {lc.val, c};
}

ZModule local_module(const Field& f, uint64_t l, uint32_t n, const std::vector<Radicand>& gens) {
  require((f.q() - 1) % ipow(l, n) == 0, Err::KummerHypothesisViolated,
          "l^n does not divide q-1");
  std::vector<std::vector<uint64_t>> rows;
  for (auto& g : gens) {
    auto r = local_row(g, l, n);
    rows.push_back({r[0], r[1]});
  }
  return ZModule::span(l, n, 2, std::move(rows));
}

InfinityData infinity_data_module(const ZModule& loc) {
  uint64_t e = loc.projection_order(0);
  uint64_t f = loc.order() / e;
  require(f == loc.tail_order(1), Err::InternalInconsistency,
          "e*f product law broken in the local module");
  return InfinityData{e, f};
}

InfinityData infinity_data(const Field& f, uint64_t l, uint32_t n,
                           const std::vector<Radicand>& gens) {
  return infinity_data_module(local_module(f, l, n, gens));
}

LocalMap LocalMap::of(const Lattice& lat) {
  LocalMap m;
  m.mod = lat.modulus();
  for (auto& p : lat.support())
    m.val_coef.push_back((m.mod - uint64_t(p.degree()) % m.mod) % m.mod);
  return m;
}

std::array<uint64_t, 2> LocalMap::apply(const std::vector<uint64_t>& v) const {
  require(v.size() == val_coef.size() + 1, Err::InternalInconsistency, "local map width");
  uint64_t val = 0;
  for (size_t i = 0; i < val_coef.size(); ++i) val = (val + v[i] * val_coef[i]) % mod;
  return {val, v.back() % mod};
}

ZModule local_module_of_subgroup(const Subgroup& s) {
  LocalMap m = LocalMap::of(s.lattice());
  std::vector<std::vector<uint64_t>> rows;
  for (auto& r : s.module().rows()) {
    auto lr = m.apply(r);
    rows.push_back({lr[0], lr[1]});
  }
  return ZModule::span(s.lattice().l(), s.lattice().n(), 2, std::move(rows));
}

namespace {

/// theta with gamma^{c1} = theta^{l^(delta-lambda)}, theta not an l-th power;
/// c1 is the inverse of -c mod l^n. Nullopt when the configuration is
/// degenerate (gamma^{c1} deeper than the expected power layer).
std::optional<Fq> find_theta(const Field& f, uint64_t l, uint32_t n, const Fq& gamma,
                             uint64_t c, uint32_t delta, uint32_t lambda) {
  uint64_t mod = ipow(l, n);
  require(c % l != 0, Err::InternalInconsistency, "c must be prime to l");
  uint64_t c1 = (mod - mod_inverse(c % mod, mod)) % mod;
  if (c1 == 0) c1 = mod;  // c = -1 mod l^n; any representative of the class works
  Fq gc = gamma.pow(int64_t(c1));
  if (gc == f.one()) return std::nullopt;
  uint64_t e = gc.dlog();
  require(lambda <= delta, Err::InternalInconsistency, "lambda exceeds delta");
  if (valuation(e, l) != delta - lambda) return std::nullopt;
  return f.from_dlog(e / ipow(l, delta - lambda));
}

}  // namespace

std::optional<LocalNorm> local_norm_prime_impl(const Field& f, uint64_t l, uint32_t n,
                                               const Fq& gamma, uint64_t c, uint32_t delta,
                                               uint32_t lambda) {
  require(delta < n, Err::NotApplicable, "exceptional configuration requires delta < n");
  auto theta = find_theta(f, l, n, gamma, c, delta, lambda);
  if (!theta) return std::nullopt;
  // sign = (-1)^(l^(n-delta+lambda) + 1): -1 for l = 2 (the inner power is
  // even), +1 for odd l
  Fq sign = (l == 2) ? f.neg_one() : f.one();
  return LocalNorm{sign, *theta, ipow(l, lambda)};
}

std::optional<uint64_t> hplus_search_impl(const Field& f, uint64_t l, uint32_t n,
                                          const Fq& gamma, uint64_t c, uint32_t delta,
                                          uint32_t lambda) {
  if (n < 2) return std::nullopt;  // the n = 1 derivation is different; lattice route
  require(delta < n, Err::NotApplicable, "exceptional configuration requires delta < n");
  auto theta = find_theta(f, l, n, gamma, c, delta, lambda);
  if (!theta) return std::nullopt;
  Fq mtheta = -*theta;
  uint64_t layer = ipow(l, n - delta);     // membership target (F_q*)^{l^(n-delta)}
  uint64_t probe = (f.q() - 1) / layer;    // x in layer iff x^probe = 1
  uint64_t bound = ipow(l, n) * (f.q() - 1);
  Fq acc = f.one();
  for (uint64_t s = 1; s <= bound; ++s) {
    acc = acc * mtheta;  // acc = (-theta)^s
    if (acc.pow(int64_t(probe)) == f.one()) return ipow(l, lambda) * s;
  }
  fail(Err::InternalInconsistency, "H+ kernel search exceeded its proof-backed bound");
}

}  // namespace kummer
