#include <doctest.h>

#include "duo/dayconv.hpp"
#include "support.hpp"

using namespace duo;
using duo::testing::oracle_quotient_size;
using duo::testing::oracle_rank;

namespace {

DuoidalStructure discrete_duoidal(BaseKind k, std::vector<int> orders) {
  return from_braided(symmetric_braiding(discrete_abelian(k, orders)));
}

FinCatPtr carrier(const DuoidalStructure& d) { return std::dynamic_pointer_cast<const FinCat>(d.h.cat); }

// Coend of a one-object diagram: co = x acted on by `act`, contra = unit.
CoendResult one_object_coend(const BaseValue& x, std::vector<BaseMap> acts) {
  CoendDiagram d;
  d.kind = x.kind;
  d.n = 1;
  d.gens = [n = static_cast<std::int64_t>(acts.size())](Obj, Obj) { return n; };
  d.co = {x};
  d.contra = {unit_value(x.kind)};
  d.co_act = [acts](Obj, Obj, std::int64_t i) { return acts[i]; };
  d.contra_act = [k = x.kind](Obj, Obj, std::int64_t) { return identity(unit_value(k)); };
  return coend(d);
}

}  // namespace

TEST_CASE("coends") {
  SUBCASE("identity actions over a discrete index give the coproduct") {
    CoendDiagram d;
    d.kind = BaseKind::finset();
    d.n = 2;
    d.gens = [](Obj x, Obj y) { return x == y ? 1 : 0; };
    d.co = {make_value(d.kind, 2), make_value(d.kind, 3)};
    d.contra = {make_value(d.kind, 1), make_value(d.kind, 2)};
    d.co_act = [&](Obj x, Obj, std::int64_t) { return identity(d.co[x]); };
    d.contra_act = [&](Obj x, Obj, std::int64_t) { return identity(d.contra[x]); };
    CoendResult c = coend(d);
    CHECK(c.value.size == 2 + 6);
    auto terms = c.expand(c.inject(1, point(c.slot_value(1), 4)));
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].slot == 1);
    CHECK(terms[0].index == 4);
  }
  SUBCASE("Z/2 swapping two points has one orbit") {
    BaseValue two = make_value(BaseKind::finset(), 2);
    CoendResult s = one_object_coend(two, {identity(two), function_map(two, two, {1, 0})});
    CHECK(s.value.size == 1);
    CHECK(s.value.size == oracle_quotient_size(s.rel_a, s.rel_b));
  }
  SUBCASE("FinVect: coproduct dimension minus relation rank") {
    const BaseKind k = BaseKind::finvect(2);
    BaseValue two = make_value(k, 2);
    CoendResult c = one_object_coend(two, {matrix_map(two, two, {1, 1, 0, 1})});
    const std::int64_t rel_rank = oracle_rank(subtract(c.rel_a, c.rel_b));
    CHECK(rel_rank == 1);
    CHECK(c.value.size == 2 - rel_rank);
    // Factoring respects the relation exactly when it kills the image of a - b.
    BaseValue one = make_value(k, 1);
    CHECK(c.factor({matrix_map(two, one, {0, 1})}, one).has_value());
    CHECK_FALSE(c.factor({matrix_map(two, one, {1, 0})}, one).has_value());
  }
}

TEST_CASE("produoidal data from a duoidal structure") {
  DuoidalStructure z2 = discrete_duoidal(BaseKind::finset(), {2});
  ProduoidalData p = produoidal_from_duoidal(z2);
  for (Obj a = 0; a < 2; ++a)
    for (Obj b = 0; b < 2; ++b)
      for (Obj c = 0; c < 2; ++c) CHECK(p.S.value(a, b, c).size == (a == (b + c) % 2 ? 1 : 0));

  ProduoidalData u = produoidal_from_duoidal(terminal_duoidal(BaseKind::finset()));
  CHECK(u.S.value(0, 0, 0).size == 1);
  CHECK(u.R.value(0, 0, 0).size == 1);
  CHECK(u.H.value(0).size == 1);
  CHECK(u.K.value(0).size == 1);

  DuoidalStructure fs = from_braided(symmetric_braiding(base_monoidal(BaseKind::finset(), {0, 1, 2})));
  ProduoidalData q = produoidal_from_duoidal(fs);
  CHECK(q.S.value(1, 2, 2).size == 4);
  CHECK_FALSE(q.carrier);
  CHECK_THROWS_AS(unit_presheaf(q, Conv::Star), ShapeError);
}

TEST_CASE("presheaves") {
  DuoidalStructure lax = from_braided(idempotent_lax_braiding());
  FinCatPtr c = carrier(lax);
  for (Obj a = 0; a < 2; ++a) CHECK(validate_presheaf(representable(c, a)).ok());
  CHECK(validate_presheaf(empty_presheaf(c)).ok());
  CHECK(validate_presheaf(constant_presheaf(c, make_value(BaseKind::finset(), 3))).ok());
  Presheaf bad = representable(c, 1);
  // Send both endomorphisms of X to the constant at the first element.
  const std::int64_t n = bad.action[3].src.size;
  bad.action[3] = function_map(bad.action[3].src, bad.action[3].tgt, std::vector<std::int64_t>(n, 0));
  Report r = validate_presheaf(bad);
  CHECK(r.failed("presheaf-ident"));
}

TEST_CASE("Day convolution") {
  DuoidalStructure z2 = discrete_duoidal(BaseKind::finset(), {2});
  FinCatPtr c = carrier(z2);
  ProduoidalData p = produoidal_from_duoidal(z2);
  Presheaf one = constant_presheaf(c, make_value(BaseKind::finset(), 1));
  SUBCASE("empty is absorbing") {
    Presheaf e = day_convolve(p, Conv::Star, empty_presheaf(c), one);
    for (Obj a = 0; a < 2; ++a) CHECK(e.at(a).size == 0);
    CHECK(validate_presheaf(e).ok());
  }
  SUBCASE("constant singleton counts decompositions") {
    Presheaf s = day_convolve(p, Conv::Star, one, one);
    CHECK(validate_presheaf(s).ok());
    for (Obj a = 0; a < 2; ++a) {
      std::int64_t ways = 0;
      for (Obj x = 0; x < 2; ++x)
        for (Obj y = 0; y < 2; ++y) ways += (x + y) % 2 == a;
      CHECK(s.at(a).size == ways);
    }
  }
  SUBCASE("representables convolve to representables") {
    for (int order : {2, 3}) {
      DuoidalStructure d = discrete_duoidal(BaseKind::finset(), {order});
      LiftedDuoidal l = lift_duoidal(produoidal_from_duoidal(d));
      for (Obj a = 0; a < order; ++a)
        for (Obj b = 0; b < order; ++b) {
          Mor y = yoneda_comparison(l, d, Conv::Star, a, b);
          CHECK(l.cat->is_iso(y));
          for (Obj x = 0; x < order; ++x) CHECK(l.presheaf(y.src).at(x).size == (x == (a + b) % order ? 1 : 0));
        }
    }
  }
  SUBCASE("the lax carrier") {
    DuoidalStructure lax = from_braided(idempotent_lax_braiding());
    LiftedDuoidal l = lift_duoidal(produoidal_from_duoidal(lax));
    for (Obj a = 0; a < 2; ++a)
      for (Obj b = 0; b < 2; ++b) {
        Mor y = yoneda_comparison(l, lax, Conv::Star, a, b);
        CHECK(validate_presheaf(l.presheaf(y.src)).ok());
        CHECK(l.cat->is_iso(y));
      }
  }
  SUBCASE("FinVect graded tensor") {
    DuoidalStructure v = discrete_duoidal(BaseKind::finvect(2), {2});
    FinCatPtr cv = carrier(v);
    ProduoidalData pv = produoidal_from_duoidal(v);
    Presheaf m = constant_presheaf(cv, make_value(BaseKind::finvect(2), 2));
    Presheaf s = day_convolve(pv, Conv::Circ, m, m);
    for (Obj a = 0; a < 2; ++a) CHECK(s.at(a).size == 2 * 2 * 2);
  }
}

TEST_CASE("presheaf category homs are natural transformations") {
  DuoidalStructure lax = from_braided(idempotent_lax_braiding());
  FinCatPtr c = carrier(lax);
  PresheafCategory cat(c);
  Obj yi = cat.add(representable(c, 0)), yx = cat.add(representable(c, 1));
  // Yoneda: Nat(y(a), y(b)) = hom(a, b).
  for (Obj a = 0; a < 2; ++a)
    for (Obj b = 0; b < 2; ++b) {
      CHECK(cat.hom(a == 0 ? yi : yx, b == 0 ? yi : yx).size == c->hom(a, b).size);
      const Obj s = a == 0 ? yi : yx, t = b == 0 ? yi : yx;
      for (std::int64_t i = 0; i < cat.hom(s, t).size; ++i) {
        Mor f = cat.from_name(s, t, point(cat.hom(s, t), i));
        CHECK(cat.name_of(f) == point(cat.hom(s, t), i));
      }
    }
}

TEST_CASE("lifted duoidal structure at witnesses") {
  DuoidalStructure z2 = discrete_duoidal(BaseKind::finset(), {2});
  FinCatPtr c = carrier(z2);
  ProduoidalData p = produoidal_from_duoidal(z2);
  std::vector<Presheaf> reps{representable(c, 0), representable(c, 1), unit_presheaf(p, Conv::Star)};
  CHECK(check_presheaf_duoidal_pointwise(p, reps).ok());
  CHECK(check_presheaf_duoidal_pointwise(p, {representable(c, 1), empty_presheaf(c)}).ok());

  SUBCASE("lax carrier") {
    DuoidalStructure lax = from_braided(idempotent_lax_braiding());
    FinCatPtr cl = carrier(lax);
    ProduoidalData pl = produoidal_from_duoidal(lax);
    CHECK(check_presheaf_duoidal_pointwise(pl, {representable(cl, 0), representable(cl, 1)}).ok());
  }

  SUBCASE("a corrupted S-action fails with the witnesses reported") {
    DuoidalStructure lax = from_braided(idempotent_lax_braiding());
    FinCatPtr cl = carrier(lax);
    ProduoidalData pl = produoidal_from_duoidal(lax);
    Promodule good = pl.S;
    // Ignore the covariant legs: S(f,g,h) is replaced by S(f,1,1) whenever the types allow it.
    pl.S.act = [good, cl](const Mor& f, const Mor& g, const Mor& h) {
      if (g.src == g.tgt && h.src == h.tgt) return good.act(f, cl->identity(g.src), cl->identity(h.src));
      return good.act(f, g, h);
    };
    Report r = check_presheaf_duoidal_pointwise(pl, {representable(cl, 1), representable(cl, 1)});
    CHECK_FALSE(r.ok());
    bool located = false;
    for (const auto& ch : r.checks())
      for (const auto& cx : ch.counterexamples) located = located || cx.contains("witnesses");
    CHECK(located);
  }
}
