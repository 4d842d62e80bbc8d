#include <doctest.h>

#include "duo/warp.hpp"
#include "support.hpp"

using namespace duo;

namespace {

MonoidalStructure zn(int n) { return discrete_abelian(BaseKind::finset(), {n}); }

bool has_failure(const Report& r, const std::string& axiom) {
  for (const auto& c : r.checks())
    if (c.axiom == axiom && !c.passed()) return true;
  return false;
}

// One object, End = Z/2, tensor of morphisms is addition; constraints identities.
MonoidalStructure delooped_z2() {
  auto c = one_object_category(BaseKind::finset(), 2, {0, 1, 1, 0}, 0);
  MonoidalTables t;
  t.tensor_obj = {0};
  BaseValue e = c->hom_value(0, 0);
  t.tensor_hom = {function_map(tensor(e, e), e, {0, 1, 1, 0})};
  t.unit = 0;
  t.assoc = {point(e, 0)};
  t.lunit = {point(e, 0)};
  t.runit = {point(e, 0)};
  return monoidal_from_tables(c, t, "BZ/2");
}

// Same tensor on objects and generators, same unit and constraints, over the suite.
bool tabulate_equal(const MonoidalStructure& a, const MonoidalStructure& b) {
  const Category& c = a.c();
  const auto objs = c.objects();
  bool same = a.unit == b.unit;
  for_each_tuple(objs, 3, [&](const std::vector<Obj>& o) {
    same = same && a.t(o[0], o[1]) == b.t(o[0], o[1]) && a.a(o[0], o[1], o[2]) == b.a(o[0], o[1], o[2]);
    for (std::int64_t i = 0; same && i < c.generator_count(o[0], o[1]); ++i) {
      Mor f = c.generator(o[0], o[1], i);
      same = a.t(f, c.identity(o[2])) == b.t(f, c.identity(o[2])) && a.t(c.identity(o[2]), f) == b.t(c.identity(o[2]), f);
    }
    return same;
  });
  for (Obj x : objs) same = same && a.l(x) == b.l(x) && a.r(x) == b.r(x);
  return same;
}

}  // namespace

TEST_CASE("identity warping") {
  for (const MonoidalStructure& m : {base_monoidal(BaseKind::finset(), {0, 1, 2}), zn(3)}) {
    WarpingData w = identity_warping(m);
    CHECK(validate_warping(w).ok());
    MonoidalStructure box = warp(w);
    CHECK(validate_monoidal(box).ok());
    CHECK(tabulate_equal(box, m));
  }
}

TEST_CASE("Z/3 shift warping") {
  MonoidalStructure z3 = zn(3);
  WarpingData w = shift_warping(z3);
  CHECK(w.k == 2);
  CHECK(validate_warping(w).ok());
  MonoidalStructure box = warp(w);
  Report r = validate_monoidal(box);
  CHECK(r.ok());
  for (Obj a = 0; a < 3; ++a)
    for (Obj b = 0; b < 3; ++b) CHECK(box.t(a, b) == (1 + a + b) % 3);
  for (const auto& c : r.checks())
    if (c.axiom == "pentagon") CHECK(c.instances == 81);

  // v alone determines the rest when T is an equivalence.
  WarpingData syn = warping_from_v(z3, w.t, w.v);
  CHECK(syn.k == 2);
  CHECK(validate_warping(syn).ok());

  // The shift is not monoidal on a discrete category, so there is no duoidal structure to build.
  Braiding br = symmetric_braiding(z3);
  WarpMonoidality md{[z3](Obj a, Obj b) { return z3.id(z3.t((a + 1) % 3, (b + 1) % 3)); }, z3.id(0), unit_monoid(z3)};
  CHECK_THROWS_AS(duoidal_from_warped_lax_braided(br, w, md), ShapeError);
}

TEST_CASE("a constant functor is not a warping") {
  auto fc = std::dynamic_pointer_cast<const FinCat>(zn(3).cat);
  WarpingData w = shift_warping(zn(3));
  w.t = discrete_functor(fc, fc, {0, 0, 0});
  w.k = 0;
  w.v = [m = w.a](Obj, Obj) { return m.id(0); };
  w.kappa = [m = w.a](Obj a) { return Mor{0, a, m.id(0).m}; };
  Report r = validate_warping(w);
  CHECK_FALSE(r.ok());
  CHECK(has_failure(r, "invertible"));
}

TEST_CASE("warping from a duoidal structure") {
  SUBCASE("cartesian sets") {
    DuoidalStructure d = from_braided(symmetric_braiding(base_monoidal(BaseKind::finset(), {0, 1, 2})));
    ClosednessWitness wit = braided_closedness_witness(symmetric_braiding(d.h));
    WarpingData w = warping_from_duoidal(d, wit);
    CHECK(validate_warping(w).ok());
    CHECK(validate_monoidal(warp(w)).ok());
    CHECK(compare_warp_to_horizontal(d, wit).ok());
    for (Obj a : d.c().objects())
      for (Obj b : d.c().objects()) CHECK(warp(w).t(a, b) == d.hs(a, b));
  }
  SUBCASE("discrete Z/2") {
    DuoidalStructure d = from_braided(symmetric_braiding(zn(2)));
    ClosednessWitness wit = braided_closedness_witness(symmetric_braiding(d.h));
    WarpingData w = warping_from_duoidal(d, wit);
    CHECK(validate_warping(w).ok());
    CHECK(tabulate_equal(warp(w), d.h));
  }
  SUBCASE("an invalid witness is refused") {
    DuoidalStructure d = from_braided(symmetric_braiding(base_monoidal(BaseKind::finset(), {0, 1, 2})));
    ClosednessWitness wit = braided_closedness_witness(symmetric_braiding(d.h));
    auto base = std::dynamic_pointer_cast<const BaseCat>(d.h.cat);
    auto q = wit.q;
    wit.q = [q, base](Obj a, Obj b, Obj c) {
      Mor m = q(a, b, c);
      if (a == 2 && b == 1 && c == 2)
        return base->compose(m, base->lift(function_map(base->value(4), base->value(4), {1, 0, 2, 3})));
      return m;
    };
    CHECK_THROWS_AS(warping_from_duoidal(d, wit), ShapeError);
  }
}

TEST_CASE("duoidal structures from warped lax braided categories") {
  SUBCASE("identity warping on discrete Z/3") {
    Braiding br = symmetric_braiding(zn(3));
    WarpingData w = identity_warping(br.m);
    DuoidalStructure d = duoidal_from_warped_lax_braided(br, w, trivial_monoidality(w));
    CHECK(validate_duoidal(d).ok());
  }
  SUBCASE("identity warping on the idempotent lax braiding agrees with from_braided") {
    Braiding br = idempotent_lax_braiding();
    WarpingData w = identity_warping(br.m);
    DuoidalStructure d = duoidal_from_warped_lax_braided(br, w, trivial_monoidality(w));
    CHECK(validate_duoidal(d).ok());
    DuoidalStructure e = from_braided(br);
    CHECK(tabulate(d) == tabulate(e));
  }
  SUBCASE("a warping with a non-monoidal comparison is rejected") {
    MonoidalStructure m = delooped_z2();
    Braiding br{m, [m](Obj x, Obj y) { return m.id(m.t(x, y)); }, false};
    REQUIRE(validate_braiding(br).ok());
    WarpingData w = identity_warping(m);
    REQUIRE(validate_warping(w).ok());
    WarpMonoidality md = trivial_monoidality(w);
    CHECK(validate_warp_monoidality(br, w, md).ok());
    // T2 = the central element: T stays monoidal, but k and v0 no longer respect it.
    auto fc = std::dynamic_pointer_cast<const FinCat>(m.cat);
    md.t2 = [fc](Obj, Obj) { return fc->element(0, 0, 1); };
    md.t0 = fc->element(0, 0, 1);
    Report r = validate_warp_monoidality(br, w, md);
    CHECK_FALSE(has_failure(r, "T-monoidal"));
    CHECK(has_failure(r, "k-monoidal"));
    CHECK(has_failure(r, "v0-monoid"));
    CHECK_THROWS_AS(duoidal_from_warped_lax_braided(br, w, md), ShapeError);
  }
}
