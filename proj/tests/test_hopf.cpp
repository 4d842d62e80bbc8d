#include <doctest.h>

#include "duo/hopf.hpp"
#include "support.hpp"

using namespace duo;

namespace {

const std::vector<int> kZ2 = {0, 1, 1, 0};
const std::vector<int> kAbsorb = {0, 1, 1, 1};

DuoidalStructure cartesian(std::vector<Obj> suite) {
  return from_braided(symmetric_braiding(base_monoidal(BaseKind::finset(), std::move(suite))));
}

Bimonoid diagonal_bimonoid(const DuoidalStructure& d, const MonoidObj& mo) {
  ComonoidObj co = diagonal_comonoid(d.h, mo.carrier);
  return Bimonoid{d, mo.carrier, mo.mult, mo.unit, co.comult, co.counit};
}

// Every element has a two-sided inverse, read off the multiplication table.
bool oracle_is_group(const std::vector<std::int64_t>& mult, std::int64_t n, std::int64_t e) {
  for (std::int64_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::int64_t y = 0; y < n && !found; ++y) found = mult[x * n + y] == e && mult[y * n + x] == e;
    if (!found) return false;
  }
  return true;
}

bool oracle_bijective(const std::vector<std::int64_t>& t, std::int64_t n) {
  std::vector<bool> hit(n, false);
  for (auto x : t) {
    if (x < 0 || x >= n || hit[x]) return false;
    hit[x] = true;
  }
  return static_cast<std::int64_t>(t.size()) == n;
}

}  // namespace

TEST_CASE("fusion morphisms") {
  DuoidalStructure d = cartesian({0, 1, 2});
  SUBCASE("unit bimonoid") {
    FusionPair fp = build_fusion(unit_bimonoid(d));
    CHECK(fp.vl.m == identity(make_value(BaseKind::finset(), 1)));
    CHECK(validate_fusion(fp).ok());
    HopfClass h = classify_hopf(fp);
    CHECK(h.hopf);
  }
  SUBCASE("Z/2") {
    FusionPair fp = build_fusion(diagonal_bimonoid(d, table_monoid(d.h, 2, kZ2, 0)));
    // ((*,g),h) -> ((*,h),(g,h)) -> (h, g+h), with the tensor index i*|y|+j.
    std::vector<std::int64_t> expect(4);
    for (int g = 0; g < 2; ++g)
      for (int h = 0; h < 2; ++h) expect[g * 2 + h] = h * 2 + (g + h) % 2;
    CHECK(fp.vl.m.table == expect);
    CHECK(oracle_bijective(fp.vr.m.table, 4));
    CHECK(validate_fusion(fp).ok());
    CHECK(classify_hopf(fp).hopf);
  }
  SUBCASE("{1,0} is not left Hopf") {
    FusionPair fp = build_fusion(diagonal_bimonoid(d, table_monoid(d.h, 2, kAbsorb, 0)));
    CHECK_FALSE(oracle_bijective(fp.vl.m.table, 4));
    CHECK(validate_fusion(fp).ok());
    HopfClass h = classify_hopf(fp);
    CHECK_FALSE(h.left);
    CHECK_FALSE(h.hopf);
  }
}

TEST_CASE("monad fusion instances") {
  DuoidalStructure d = cartesian({0, 1, 2});
  Bimonoid z2 = diagonal_bimonoid(d, table_monoid(d.h, 2, kZ2, 0));
  Bimonoid ab = diagonal_bimonoid(d, table_monoid(d.h, 2, kAbsorb, 0));
  auto [l, r] = monad_fusion_instance(z2, 2, 2);
  CHECK(l.m.src.size == 16);
  CHECK(oracle_bijective(l.m.table, 16));
  CHECK(oracle_bijective(r.m.table, 16));
  auto [l2, r2] = monad_fusion_instance(ab, 2, 2);
  CHECK_FALSE(oracle_bijective(l2.m.table, 16));
  CHECK_FALSE(oracle_bijective(r2.m.table, 16));
}

TEST_CASE("Hopf iff group for monoids up to four elements") {
  DuoidalStructure d = cartesian({0, 1, 2});
  std::int64_t groups = 0, monoids = 0;
  for (Obj n = 1; n <= 4; ++n) {
    for (const MonoidObj& mo : enumerate_monoids(d.h, n, 1 << 20)) {
      ++monoids;
      const bool group = oracle_is_group(mo.mult.m.table, n, mo.unit.m.table[0]);
      groups += group;
      CHECK(classify_hopf(build_fusion(diagonal_bimonoid(d, mo))).hopf == group);
    }
  }
  // Labelled monoids and groups on 1..4 points, counted by a separate backtracking search.
  CHECK(monoids == 1 + 4 + 33 + 624);
  CHECK(groups == 1 + 2 + 3 + 16);
}

TEST_CASE("closedness witnesses") {
  SUBCASE("cartesian sets") {
    DuoidalStructure d = cartesian({0, 1, 2, 3});
    Braiding b = symmetric_braiding(d.h);
    ClosednessWitness w = braided_closedness_witness(b);
    Report full = check_closedness(w, d);
    CHECK(full.ok());
    for (auto ax : {"(ii)", "(ii)'", "(18)", "(19)", "(20)"}) {
      bool seen = false;
      for (const auto& c : full.checks()) seen = seen || (c.axiom == ax && c.instances > 0);
      CHECK_MESSAGE(seen, ax);
    }
    ClosednessWitness only2p{{}, {}, w.s, w.t};
    CHECK(check_closedness(only2p, d).ok());
    ClosednessWitness only2{w.p, w.q, {}, {}};
    CHECK(check_closedness(only2, d).ok());
    CHECK_THROWS_AS(check_closedness(ClosednessWitness{}, d), ShapeError);

    // Hopf and closed: every fusion instance is invertible.
    Bimonoid z2 = diagonal_bimonoid(d, table_monoid(d.h, 2, kZ2, 0));
    for (Obj x : d.c().objects())
      for (Obj y : d.c().objects()) {
        auto [l, r] = monad_fusion_instance(z2, x, y);
        CHECK(d.c().is_iso(l));
        CHECK(d.c().is_iso(r));
      }
  }
  SUBCASE("discrete Z/2") {
    DuoidalStructure d = from_braided(symmetric_braiding(discrete_abelian(BaseKind::finset(), {2})));
    CHECK(check_closedness(braided_closedness_witness(symmetric_braiding(d.h)), d).ok());
  }
  SUBCASE("a non-natural component") {
    DuoidalStructure d = cartesian({0, 1, 2});
    ClosednessWitness w = braided_closedness_witness(symmetric_braiding(d.h));
    auto base = std::dynamic_pointer_cast<const BaseCat>(d.h.cat);
    auto s = w.s;
    // Twist the X coordinate of X*(JoY) at (2,2): still invertible, no longer natural.
    w.s = [s, base](Obj x, Obj y) {
      Mor m = s(x, y);
      if (x != 2 || y != 2) return m;
      return base->compose(m, base->lift(function_map(base->value(4), base->value(4), {2, 3, 0, 1})));
    };
    Report r = check_closedness(ClosednessWitness{{}, {}, w.s, w.t}, d);
    CHECK_FALSE(r.ok());
    const Check* bad = nullptr;
    for (const auto& c : r.checks())
      if (c.id == "closed.s.natural") bad = &c;
    REQUIRE(bad);
    CHECK_FALSE(bad->passed());
    REQUIRE_FALSE(bad->counterexamples.empty());
    CHECK(bad->counterexamples[0].contains("objects"));
  }
}
