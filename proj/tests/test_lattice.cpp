#include "kummer/lattice.hpp"

#include <random>
#include <set>

#include "doctest.h"

using namespace kummer;

namespace {

Poly pl(const Field& f, std::initializer_list<int64_t> coeffs) {
  std::vector<Fq> c;
  for (auto v : coeffs) c.push_back(f.from_int(v));
  return Poly(f, std::move(c));
}

/// Brute-force row span: every Z-combination of rows mod l^n.
std::set<std::vector<uint64_t>> brute_span(uint64_t mod,
                                           const std::vector<std::vector<uint64_t>>& rows,
                                           size_t cols) {
  std::set<std::vector<uint64_t>> out;
  out.insert(std::vector<uint64_t>(cols, 0));
  size_t r = rows.size();
  std::vector<uint64_t> counter(r, 0);
  if (r == 0) return out;
  for (;;) {
    std::vector<uint64_t> v(cols, 0);
    for (size_t i = 0; i < r; ++i)
      for (size_t k = 0; k < cols; ++k) v[k] = (v[k] + counter[i] * rows[i][k]) % mod;
    out.insert(v);
    size_t pos = 0;
    while (pos < r) {
      if (++counter[pos] < mod) break;
      counter[pos] = 0;
      ++pos;
    }
    if (pos == r) break;
  }
  return out;
}

}  // namespace

TEST_CASE("howell normalize examples mod 4") {
  ZModule a = ZModule::span(2, 2, 2, {{2, 0}, {1, 0}});
  CHECK(a.rows() == std::vector<std::vector<uint64_t>>{{1, 0}});
  CHECK(a.order() == 4);

  ZModule b = ZModule::span(2, 2, 2, {});
  CHECK(b.rows().empty());
  CHECK(b.order() == 1);

  ZModule c = ZModule::span(2, 2, 2, {{2, 0}, {0, 2}});
  CHECK(c.rows().size() == 2);
  CHECK(c.order() == 4);

  CHECK(ZModule::span(2, 2, 2, {{2, 2}}).order() == 2);
}

TEST_CASE("howell membership and joins") {
  ZModule w = ZModule::span(2, 2, 2, {{1, 0}});
  CHECK(w.contains({3, 0}));
  CHECK(!w.contains({0, 1}));

  ZModule a = ZModule::span(2, 2, 2, {{2, 0}, {0, 2}});
  ZModule b = ZModule::span(2, 2, 2, {{2, 2}, {0, 2}});
  CHECK(a == b);

  ZModule j = ZModule::span(2, 2, 2, {{2, 0}}).joined(ZModule::span(2, 2, 2, {{0, 2}}));
  CHECK(j.order() == 4);
}

TEST_CASE("howell form is canonical and order-exact (random exhaustive)") {
  std::mt19937_64 rng(12345);
  for (auto [l, n] : std::vector<std::pair<uint64_t, uint32_t>>{{2, 2}, {2, 3}, {3, 1}}) {
    uint64_t mod = ipow(l, n);
    for (size_t cols : {1u, 2u, 3u}) {
      for (int trial = 0; trial < 60; ++trial) {
        size_t nrows = rng() % 3;
        std::vector<std::vector<uint64_t>> rows(nrows, std::vector<uint64_t>(cols));
        for (auto& r : rows)
          for (auto& x : r) x = rng() % mod;
        ZModule m = ZModule::span(l, n, cols, rows);
        auto truth = brute_span(mod, rows, cols);
        CHECK(m.order() == truth.size());
        // same element set
        auto elems = m.elements(1 << 12);
        CHECK(elems.size() == truth.size());
        for (auto& e : elems) CHECK(truth.count(e) == 1);
        for (auto& e : truth) CHECK(m.contains(e));
        // idempotent: normalizing the canonical rows reproduces them
        ZModule m2 = ZModule::span(l, n, cols, m.rows());
        CHECK(m == m2);
        // canonical: any generating set of the same span gives identical rows
        std::vector<std::vector<uint64_t>> shuf(truth.begin(), truth.end());
        std::shuffle(shuf.begin(), shuf.end(), rng);
        if (shuf.size() > 6) shuf.resize(6);
        ZModule m3 = ZModule::span(l, n, cols, shuf);
        if (brute_span(mod, shuf, cols).size() == truth.size()) CHECK(m == m3);
      }
    }
  }
}

TEST_CASE("projection and tail orders") {
  ZModule m = ZModule::span(2, 2, 3, {{1, 2, 0}, {0, 2, 2}});
  CHECK(m.projection_order(0) == 4);
  CHECK(m.projection_order(1) == 2);
  CHECK(m.projection_order(2) == 2);
  // elements supported on the last coordinate only
  uint64_t tail = m.tail_order(2);
  uint64_t count = 0;
  for (auto& e : m.elements(1 << 12))
    if (e[0] == 0 && e[1] == 0) ++count;
  CHECK(tail == count);
}

TEST_CASE("class_vector scaling") {
  Field f = make_field(5);
  auto t = make_irreducible(Poly::t(f));
  auto t1 = make_irreducible(pl(f, {1, 1}));
  Lattice lat(f, 2, 2, {t, t1});

  // full-order generator: vector (1, 0, 0) on support (T, T+1)
  Radicand g1{f.one(), {{t, 1}}, 4};
  CHECK(lat.class_vector(g1) == std::vector<uint64_t>{1, 0, 0});

  // root order 2 scales by l^(n-e) = 2
  Radicand g2{f.one(), {{t, 1}}, 2};
  CHECK(lat.class_vector(g2) == std::vector<uint64_t>{2, 0, 0});

  // the stored class is the radicand raised to l^(n-e): constant part scales too
  Radicand g3{f.from_int(4), {{t1, 1}}, 2};  // sqrt(4(T+1)): (4(T+1))^2 = (T+1)^2 class
  CHECK(lat.class_vector(g3) == std::vector<uint64_t>{0, 2, 0});

  Radicand g4{f.from_int(2), {{t, 1}}, 4};  // dlog 2 = 1
  CHECK(lat.class_vector(g4) == std::vector<uint64_t>{1, 0, 1});

  // same field iff same cyclic subgroup: sqrt(4(T+1)) = sqrt(T+1)
  Radicand g5{f.one(), {{t1, 1}}, 2};
  Subgroup s3 = Subgroup::span(lat, {g3});
  Subgroup s5 = Subgroup::span(lat, {g5});
  CHECK(equal(s3, s5));

  Field f13 = make_field(13);
  auto t13 = make_irreducible(Poly::t(f13));
  CHECK_THROWS_WITH_AS(Lattice(f13, 2, 3, {t13}),
                       doctest::Contains("KummerHypothesisViolated"), Error);
  CHECK_THROWS_WITH_AS(lat.class_vector(Radicand{f.one(), {{make_irreducible(pl(f, {2, 1})), 1}}, 4}),
                       doctest::Contains("UnsupportedPrime"), Error);
}

TEST_CASE("subgroup order equals field degree examples") {
  Field f = make_field(5);
  auto t = make_irreducible(Poly::t(f));
  Lattice lat(f, 2, 2, {t});
  CHECK(Subgroup::trivial(lat).order() == 1);
  CHECK(Subgroup::normalize(lat, {{1, 0}}).order() == 4);
  CHECK(Subgroup::normalize(lat, {{2, 2}}).order() == 2);
}

TEST_CASE("finite_ramification closed form (Theorem-3.3 shape)") {
  Field f = make_field(5);
  auto t = make_irreducible(Poly::t(f));
  auto t1 = make_irreducible(pl(f, {1, 1}));
  Lattice lat(f, 2, 2, {t, t1});

  // W = <4th root of T*>: e_T = 4
  Subgroup w1 = Subgroup::span(lat, {Radicand{f.from_int(-1), {{t, 1}}, 4}});
  CHECK(w1.finite_ramification(t) == 4);

  // W = <4th root of T(T+1)^3>: e_{T+1} = 4/gcd(3,4) = 4
  Subgroup w2 = Subgroup::span(lat, {Radicand{f.one(), {{t, 1}, {t1, 3}}, 4}});
  CHECK(w2.finite_ramification(t1) == 4);

  // join(sqrt(T), 4th root(T)): e_T = lcm(2, 4) = 4
  Subgroup w3 = join(Subgroup::span(lat, {Radicand{f.one(), {{t, 1}}, 2}}),
                     Subgroup::span(lat, {Radicand{f.one(), {{t, 1}}, 4}}));
  CHECK(w3.finite_ramification(t) == 4);

  // closed form sweep: e_P = s / gcd(alpha, s) for single generators
  for (uint64_t alpha = 1; alpha < 4; ++alpha) {
    for (uint64_t e = 1; e <= 2; ++e) {
      uint64_t s = ipow(2, uint32_t(e));
      Subgroup w = Subgroup::span(lat, {Radicand{f.from_int(2), {{t, alpha}}, s}});
      CHECK(w.finite_ramification(t) == s / std::gcd(alpha, s));
    }
  }
}

TEST_CASE("join is commutative, associative, monotone") {
  Field f = make_field(5);
  auto t = make_irreducible(Poly::t(f));
  auto t1 = make_irreducible(pl(f, {1, 1}));
  Lattice lat(f, 2, 2, {t, t1});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto rnd = [&] {
      std::vector<std::vector<uint64_t>> rows(rng() % 2 + 1, std::vector<uint64_t>(3));
      for (auto& r : rows)
        for (auto& x : r) x = rng() % 4;
      return Subgroup::normalize(lat, rows);
    };
    Subgroup a = rnd(), b = rnd(), c = rnd();
    CHECK(equal(join(a, b), join(b, a)));
    CHECK(equal(join(join(a, b), c), join(a, join(b, c))));
    CHECK(join(a, b).contains_subgroup(a));
    // Abhyankar in lattice form: projections take lcms
    for (auto& p : {t, t1}) {
      uint64_t ea = a.finite_ramification(p), eb = b.finite_ramification(p);
      CHECK(join(a, b).finite_ramification(p) == std::lcm(ea, eb));
    }
  }
}

TEST_CASE("support alignment joins across different supports") {
  Field f = make_field(5);
  auto t = make_irreducible(Poly::t(f));
  auto t1 = make_irreducible(pl(f, {1, 1}));
  Lattice la(f, 2, 2, {t});
  Lattice lb(f, 2, 2, {t1});
  Subgroup a = Subgroup::span(la, {Radicand{f.one(), {{t, 1}}, 4}});
  Subgroup b = Subgroup::span(lb, {Radicand{f.one(), {{t1, 1}}, 4}});
  Subgroup j = join(a, b);
  CHECK(j.order() == 16);
  CHECK(j.lattice().support().size() == 2);
  CHECK(j.finite_ramification(t) == 4);
  CHECK(j.finite_ramification(t1) == 4);

  Lattice lc(f, 2, 1, {t});
  Subgroup c = Subgroup::span(lc, {Radicand{f.one(), {{t, 1}}, 2}});
  CHECK_THROWS_WITH_AS(join(a, c), doctest::Contains("IncompatibleLattices"), Error);
}

TEST_CASE("constant subgroup order") {
  Field f = make_field(5);
  auto t = make_irreducible(Poly::t(f));
  Lattice lat(f, 2, 2, {t});
  // <(1,1), (1,2)> contains the pure constant (0,1): full constant subgroup
  Subgroup s = Subgroup::normalize(lat, {{1, 1}, {1, 2}});
  CHECK(s.constant_subgroup_order() == 4);
  Subgroup k = Subgroup::normalize(lat, {{1, 1}});
  CHECK(k.constant_subgroup_order() == 1);
  Subgroup m = Subgroup::normalize(lat, {{1, 0}, {0, 2}});
  CHECK(m.constant_subgroup_order() == 2);
}
