#include "kummer/lattice.hpp"

#include <algorithm>
#include <set>

namespace kummer {

// ---- ZModule ------------------------------------------------------------------

namespace {

size_t leading_col(const std::vector<uint64_t>& r) {
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) return i;
  return SIZE_MAX;
}

}  // namespace

ZModule::ZModule(uint64_t l, uint32_t n, size_t cols)
    : l_(l), mod_(ipow(l, n)), n_(n), cols_(cols) {}

ZModule ZModule::span(uint64_t l, uint32_t n, size_t cols,
                      std::vector<std::vector<uint64_t>> rows) {
  ZModule m(l, n, cols);
  for (auto& r : rows) {
    require(r.size() == cols, Err::InternalInconsistency, "row width mismatch");
    for (auto& x : r) x %= m.mod_;
  }
  m.howellize(std::move(rows));
  return m;
}

void ZModule::howellize(std::vector<std::vector<uint64_t>> work) {
  auto echelon = [&](std::vector<std::vector<uint64_t>> pool) {
    rows_.clear();
    pivot_col_.clear();
    pivot_val_.clear();
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [](const std::vector<uint64_t>& r) {
                                return leading_col(r) == SIZE_MAX;
                              }),
               pool.end());
    for (size_t col = 0; col < cols_; ++col) {
      std::vector<size_t> idx;
      for (size_t i = 0; i < pool.size(); ++i)
        if (leading_col(pool[i]) == col) idx.push_back(i);
      if (idx.empty()) continue;
      size_t best = idx[0];
      for (size_t i : idx)
        if (valuation(pool[i][col], l_) < valuation(pool[best][col], l_)) best = i;
      std::vector<uint64_t> piv = pool[best];
      uint32_t v = valuation(piv[col], l_);
      uint64_t unit = piv[col] / ipow(l_, v);
      uint64_t unit_inv = mod_inverse(unit, mod_);
      for (auto& x : piv) x = (x * unit_inv) % mod_;
      for (size_t i : idx) {
        if (i == best) continue;
        uint64_t factor = pool[i][col] / ipow(l_, v);
        for (size_t k = 0; k < cols_; ++k) {
          uint64_t sub = (factor * piv[k]) % mod_;
          pool[i][k] = (pool[i][k] + mod_ - sub) % mod_;
        }
      }
      pool.erase(pool.begin() + long(best));
      pool.erase(std::remove_if(pool.begin(), pool.end(),
                                [](const std::vector<uint64_t>& r) {
                                  return leading_col(r) == SIZE_MAX;
                                }),
                 pool.end());
      rows_.push_back(std::move(piv));
      pivot_col_.push_back(col);
      pivot_val_.push_back(v);
    }
  };

  echelon(std::move(work));
  // annihilator closure: for a pivot l^v, l^(n-v) times the row must reduce to
  // zero against the later rows; otherwise adjoin the shift and start over
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < rows_.size() && !changed; ++i) {
      if (pivot_val_[i] == 0) continue;
      std::vector<uint64_t> s(cols_);
      uint64_t mult = ipow(l_, n_ - pivot_val_[i]);
      for (size_t k = 0; k < cols_; ++k) s[k] = (rows_[i][k] * mult) % mod_;
      if (!contains(s)) {
        std::vector<std::vector<uint64_t>> pool = rows_;
        pool.push_back(std::move(s));
        echelon(std::move(pool));
        changed = true;
      }
    }
  }
  // reduce entries above each pivot modulo the pivot
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint64_t piv = ipow(l_, pivot_val_[i]);
    for (size_t j = 0; j < i; ++j) {
      uint64_t factor = rows_[j][pivot_col_[i]] / piv;
      if (factor == 0) continue;
      for (size_t k = 0; k < cols_; ++k) {
        uint64_t sub = (factor * rows_[i][k]) % mod_;
        rows_[j][k] = (rows_[j][k] + mod_ - sub) % mod_;
      }
    }
  }
}

uint64_t ZModule::order() const {
  uint64_t o = 1;
  for (uint32_t v : pivot_val_) o *= ipow(l_, n_ - v);
  return o;
}

bool ZModule::contains(std::vector<uint64_t> v) const {
  require(v.size() == cols_, Err::InternalInconsistency, "vector width mismatch");
  for (auto& x : v) x %= mod_;
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint64_t c = v[pivot_col_[i]];
    if (c == 0) continue;
    uint64_t piv = ipow(l_, pivot_val_[i]);
    if (c % piv != 0) return false;
    uint64_t factor = c / piv;
    for (size_t k = 0; k < cols_; ++k) {
      uint64_t sub = (factor * rows_[i][k]) % mod_;
      v[k] = (v[k] + mod_ - sub) % mod_;
    }
  }
  return leading_col(v) == SIZE_MAX;
}

bool ZModule::operator==(const ZModule& o) const {
  return l_ == o.l_ && n_ == o.n_ && cols_ == o.cols_ && rows_ == o.rows_;
}

ZModule ZModule::joined(const ZModule& o) const {
  require(l_ == o.l_ && n_ == o.n_ && cols_ == o.cols_, Err::IncompatibleLattices,
          "joined modules must share l, n and width");
  std::vector<std::vector<uint64_t>> rows = rows_;
  rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
  return span(l_, n_, cols_, std::move(rows));
}

uint64_t ZModule::projection_order(size_t col) const {
  require(col < cols_, Err::InternalInconsistency, "column out of range");
  uint32_t minv = n_;
  for (const auto& r : rows_)
    if (r[col] != 0) minv = std::min(minv, valuation(r[col], l_));
  return ipow(l_, n_ - minv);
}

uint64_t ZModule::tail_order(size_t first_col) const {
  uint64_t o = 1;
  for (size_t i = 0; i < rows_.size(); ++i)
    if (pivot_col_[i] >= first_col) o *= ipow(l_, n_ - pivot_val_[i]);
  return o;
}

std::vector<std::vector<uint64_t>> ZModule::elements(uint64_t bound) const {
  require(order() <= bound, Err::EnumerationBoundExceeded,
          "subgroup too large to enumerate");
  std::vector<uint64_t> ranges;
  for (uint32_t v : pivot_val_) ranges.push_back(ipow(l_, n_ - v));
  std::vector<std::vector<uint64_t>> out;
  out.reserve(size_t(order()));
  std::vector<uint64_t> counter(ranges.size(), 0);
  for (;;) {
    std::vector<uint64_t> e(cols_, 0);
    for (size_t i = 0; i < counter.size(); ++i) {
      if (counter[i] == 0) continue;
      for (size_t k = 0; k < cols_; ++k) e[k] = (e[k] + counter[i] * rows_[i][k]) % mod_;
    }
    out.push_back(std::move(e));
    size_t pos = 0;
    while (pos < counter.size()) {
      if (++counter[pos] < ranges[pos]) break;
      counter[pos] = 0;
      ++pos;
    }
    if (pos == counter.size()) break;
  }
  return out;
}

// ---- Radicand -------------------------------------------------------------------

uint64_t Radicand::degree() const {
  uint64_t d = 0;
  for (auto& [p, e] : monomial) d += e * uint64_t(p.degree());
  return d;
}

Fq Radicand::star_coeff() const { return coeff * star_sign(coeff.field(), degree()); }

Radicand star(const Radicand& r) {
  require(r.coeff.valid() && !r.coeff.is_zero(), Err::ZeroInput, "star of zero radicand");
  Radicand s = r;
  s.coeff = r.star_coeff();
  return s;
}

// ---- Lattice ----------------------------------------------------------------------

Lattice::Lattice(Field field, uint64_t l, uint32_t n, std::vector<IrreduciblePoly> support)
    : field_(std::move(field)), l_(l), mod_(ipow(l, n)), n_(n), support_(std::move(support)) {
  require(is_prime_u64(l_), Err::SchemaError, "lattice prime must be prime");
  require(n_ >= 1, Err::SchemaError, "lattice exponent must be >= 1");
  // constant coordinate lives in Z/l^min(n, v_l(q-1)); requiring the Kummer
  // hypothesis keeps the embedding the identity
  require((field_.q() - 1) % mod_ == 0, Err::KummerHypothesisViolated,
          "l^n does not divide q-1");
  std::sort(support_.begin(), support_.end());
  for (size_t i = 0; i + 1 < support_.size(); ++i)
    require(!(support_[i] == support_[i + 1]), Err::InternalInconsistency,
            "duplicate prime in lattice support");
  for (auto& p : support_)
    require(p.poly.field().same(field_), Err::MixedFields, "support prime off-field");
}

size_t Lattice::col_of(const IrreduciblePoly& p) const {
  for (size_t i = 0; i < support_.size(); ++i)
    if (support_[i] == p) return i;
  fail(Err::UnsupportedPrime, "prime not in lattice support");
}

std::vector<uint64_t> Lattice::class_vector(const Radicand& g) const {
  require(g.coeff.valid() && !g.coeff.is_zero(), Err::ZeroInput, "zero radicand coefficient");
  require(g.coeff.field().same(field_), Err::MixedFields, "radicand coefficient off-field");
  require(g.root_order >= 1 && mod_ % g.root_order == 0, Err::KummerHypothesisViolated,
          "root order must divide l^n");
  uint64_t scale = mod_ / g.root_order;
  std::vector<uint64_t> v(cols(), 0);
  for (auto& [p, e] : g.monomial) {
    size_t c = col_of(p);
    v[c] = (v[c] + (e % mod_) * scale) % mod_;
  }
  if (!g.coeff.is_zero()) v[cols() - 1] = ((g.coeff.dlog() % mod_) * scale) % mod_;
  return v;
}

bool Lattice::compatible(const Lattice& o) const {
  return field_.same(o.field_) && l_ == o.l_ && n_ == o.n_;
}

bool Lattice::operator==(const Lattice& o) const {
  if (!compatible(o) || support_.size() != o.support_.size()) return false;
  for (size_t i = 0; i < support_.size(); ++i)
    if (!(support_[i] == o.support_[i])) return false;
  return true;
}

Lattice merge_lattices(const Lattice& a, const Lattice& b) {
  require(a.compatible(b), Err::IncompatibleLattices,
          "lattices differ in field, l, or n");
  std::vector<IrreduciblePoly> sup = a.support();
  for (auto& p : b.support()) {
    bool seen = false;
    for (auto& q : sup)
      if (q == p) {
        seen = true;
        break;
      }
    if (!seen) sup.push_back(p);
  }
  return Lattice(a.field(), a.l(), a.n(), std::move(sup));
}

// ---- Subgroup ----------------------------------------------------------------------

Subgroup::Subgroup(Lattice lat, ZModule mod) : lat_(std::move(lat)), mod_(std::move(mod)) {
  require(mod_.cols() == lat_.cols() && mod_.l() == lat_.l() && mod_.n() == lat_.n(),
          Err::InternalInconsistency, "subgroup shape mismatch");
}

Subgroup Subgroup::trivial(const Lattice& lat) {
  return Subgroup(lat, ZModule(lat.l(), lat.n(), lat.cols()));
}

Subgroup Subgroup::span(const Lattice& lat, const std::vector<Radicand>& gens) {
  std::vector<std::vector<uint64_t>> rows;
  for (auto& g : gens) {
    if (g.root_order == 1) continue;  // trivial generator contributes nothing
    rows.push_back(lat.class_vector(g));
  }
  return Subgroup(lat, ZModule::span(lat.l(), lat.n(), lat.cols(), std::move(rows)));
}

Subgroup Subgroup::normalize(const Lattice& lat, std::vector<std::vector<uint64_t>> rows) {
  return Subgroup(lat, ZModule::span(lat.l(), lat.n(), lat.cols(), std::move(rows)));
}

bool Subgroup::contains(const std::vector<uint64_t>& v) const { return mod_.contains(v); }

bool Subgroup::contains(const Radicand& g) const { return mod_.contains(lat_.class_vector(g)); }

bool Subgroup::contains_subgroup(const Subgroup& o) const {
  require(lat_ == o.lat_, Err::IncompatibleLattices, "subgroup supports differ");
  for (const auto& r : o.mod_.rows())
    if (!mod_.contains(r)) return false;
  return true;
}

bool equal(const Subgroup& a, const Subgroup& b) {
  if (a.lat_ == b.lat_) return a.mod_ == b.mod_;
  Lattice m = merge_lattices(a.lat_, b.lat_);
  return a.embedded(m).mod_ == b.embedded(m).mod_;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (a.lat_ == b.lat_) return Subgroup(a.lat_, a.mod_.joined(b.mod_));
  Lattice m = merge_lattices(a.lat_, b.lat_);
  Subgroup ea = a.embedded(m), eb = b.embedded(m);
  return Subgroup(m, ea.mod_.joined(eb.mod_));
}

uint64_t Subgroup::finite_ramification(const IrreduciblePoly& p) const {
  return mod_.projection_order(lat_.col_of(p));
}

uint64_t Subgroup::constant_subgroup_order() const {
  return mod_.tail_order(lat_.cols() - 1);
}

Subgroup Subgroup::embedded(const Lattice& into) const {
  require(lat_.compatible(into), Err::IncompatibleLattices, "incompatible embedding");
  std::vector<size_t> map(lat_.cols());
  for (size_t i = 0; i + 1 < lat_.cols(); ++i) map[i] = into.col_of(lat_.support()[i]);
  map[lat_.cols() - 1] = into.cols() - 1;
  std::vector<std::vector<uint64_t>> rows;
  for (const auto& r : mod_.rows()) {
    std::vector<uint64_t> e(into.cols(), 0);
    for (size_t i = 0; i < r.size(); ++i) e[map[i]] = r[i];
    rows.push_back(std::move(e));
  }
  return Subgroup(into, ZModule::span(into.l(), into.n(), into.cols(), std::move(rows)));
}

uint64_t subgroup_order(const Subgroup& s) { return s.order(); }

}  // namespace kummer
