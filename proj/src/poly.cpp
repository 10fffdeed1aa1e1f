#include "kummer/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace kummer {

Poly::Poly(Field field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_)
    require(c.valid() && c.field().same(field_), Err::MixedFields, "coefficient off-field");
  trim();
}

Poly Poly::from_codes(const Field& f, const std::vector<uint64_t>& codes) {
  std::vector<Fq> c;
  c.reserve(codes.size());
  for (auto code : codes) c.push_back(f.from_code(code));
  return Poly(f, std::move(c));
}

Poly Poly::constant(const Fq& c) { return Poly(c.field(), {c}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  require(valid() && o.valid(), Err::InternalInconsistency, "uninitialized polynomial");
  require(field_.same(o.field_), Err::MixedFields, "polynomials over different fields");
}

bool Poly::is_monic() const { return !is_zero() && c_.back() == field_.one(); }

Fq Poly::leading() const {
  require(!is_zero(), Err::ZeroPolynomial, "leading coefficient of zero");
  return c_.back();
}

Fq Poly::coeff(size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<Fq> r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Fq> r = c_;
  for (auto& c : r) c = -c;
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Poly::zero(field_);
  std::vector<Fq> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Fq& s) const {
  std::vector<Fq> r = c_;
  for (auto& c : r) c = c * s;
  return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_same(d);
  require(!d.is_zero(), Err::DivisionByZeroPoly, "division by the zero polynomial");
  if (degree() < d.degree()) return {Poly::zero(field_), *this};
  Fq lead_inv = d.leading().inv();
  std::vector<Fq> rem = c_;
  std::vector<Fq> quo(size_t(degree() - d.degree()) + 1, field_.zero());
  for (int k = degree(); k >= d.degree(); --k) {
    Fq c = rem[size_t(k)] * lead_inv;
    quo[size_t(k - d.degree())] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= d.degree(); ++i)
      rem[size_t(k - d.degree() + i)] = rem[size_t(k - d.degree() + i)] - c * d.c_[size_t(i)];
  }
  return {Poly(field_, std::move(quo)), Poly(field_, std::move(rem))};
}

Fq Poly::eval(const Fq& x) const {
  Fq acc = field_.zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::pow(uint32_t e) const {
  Poly r = Poly::one(field_);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_same(o);
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (!(c_[i] == o.c_[i])) return false;
  return true;
}

bool Poly::operator<(const Poly& o) const {
  check_same(o);
  if (degree() != o.degree()) return degree() < o.degree();
  for (size_t i = c_.size(); i-- > 0;) {
    uint64_t a = c_[i].code(), b = o.c_[i].code();
    if (a != b) return a < b;
  }
  return false;
}

Poly gcd_monic(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x * x.leading().inv();
}

// ---- irreducibility and enumeration ------------------------------------------

namespace {

/// Cache of enumerated irreducibles, keyed by (field data pointer, degree).
using IrrCache = std::map<std::pair<const void*, uint32_t>, std::vector<IrreduciblePoly>>;

IrrCache& irr_cache() {
  static IrrCache c;
  return c;
}
std::mutex irr_mutex;

/// Trial division against already-cached lower-degree irreducibles; the cache
/// must hold every degree <= deg p / 2 (ensured by the bottom-up fill).
bool irreducible_against_cache(const Poly& p, const IrrCache& cache) {
  int d = p.degree();
  if (d == 1) return true;
  const void* key = p.field().data();
  for (uint32_t e = 1; e <= uint32_t(d) / 2; ++e) {
    for (const auto& q : cache.at({key, e})) {
      if ((p % q.poly).is_zero()) return false;
    }
  }
  return true;
}

void ensure_cached(const Field& f, uint32_t d, IrrCache& cache) {
  const void* key = f.data();
  for (uint32_t deg = 1; deg <= d; ++deg) {
    if (cache.count({key, deg})) continue;
    uint64_t count = 1;
    for (uint32_t i = 0; i < deg; ++i) {
      count *= f.q();
      require(count <= kMaxTableField, Err::DeskBoundExceeded,
              "irreducible enumeration exceeds the desk bound");
    }
    std::vector<IrreduciblePoly> out;
    for (uint64_t tail = 0; tail < count; ++tail) {
      std::vector<Fq> c(size_t(deg) + 1, f.zero());
      uint64_t t = tail;
      for (uint32_t i = 0; i < deg; ++i) {
        c[i] = f.from_code(t % f.q());
        t /= f.q();
      }
      c[deg] = f.one();
      Poly cand(f, std::move(c));
      if (irreducible_against_cache(cand, cache)) out.push_back(IrreduciblePoly{cand});
    }
    cache[{key, deg}] = std::move(out);
  }
}

}  // namespace

std::vector<IrreduciblePoly> enumerate_monic_irreducibles(const Field& f, uint32_t d) {
  require(d >= 1, Err::SchemaError, "degree must be >= 1");
  std::lock_guard<std::mutex> lock(irr_mutex);
  ensure_cached(f, d, irr_cache());
  return irr_cache().at({f.data(), d});
}

bool is_irreducible(const Poly& p) {
  require(p.valid(), Err::InternalInconsistency, "uninitialized polynomial");
  require(p.is_monic(), Err::NotMonic, "irreducibility requires a monic polynomial");
  require(p.degree() >= 1, Err::NotMonic, "irreducibility requires degree >= 1");
  std::lock_guard<std::mutex> lock(irr_mutex);
  ensure_cached(p.field(), uint32_t(p.degree()) / 2, irr_cache());
  return irreducible_against_cache(p, irr_cache());
}

IrreduciblePoly make_irreducible(const Poly& p) {
  require(is_irreducible(p), Err::ScopeViolation, "polynomial is reducible");
  return IrreduciblePoly{p};
}

Poly star(const Poly& d) {
  require(d.valid(), Err::InternalInconsistency, "uninitialized polynomial");
  require(!d.is_zero(), Err::ZeroPolynomial, "star of the zero polynomial");
  return d * star_sign(d.field(), uint64_t(d.degree()));
}

Fq star_sign(const Field& f, uint64_t total_degree) {
  return total_degree % 2 == 0 ? f.one() : f.neg_one();
}

ResidueField residue_field(const IrreduciblePoly& p) {
  const Field& base = p.poly.field();
  if (p.degree() == 1) {
    // F_q[T]/(T - r) = F_q itself, reduction is evaluation at the root
    return ResidueField{base, -p.poly.coeff(0), p};
  }
  Field rf = make_extension_field(base, p.poly.coeffs());
  // class of T: the adjoined variable, digit vector (0,1,0,...)
  return ResidueField{rf, rf.from_code(base.q()), p};
}

Fq ResidueField::reduce(const Poly& n) const {
  require(n.field().same(p.poly.field()), Err::MixedFields, "reduction of off-field polynomial");
  Fq acc = field.zero();
  for (size_t i = n.coeffs().size(); i-- > 0;) {
    // embed the base coefficient: base codes embed as themselves
    Fq c = field.from_code(n.coeffs()[i].code());
    acc = acc * t_image + c;
  }
  return acc;
}

}  // namespace kummer
