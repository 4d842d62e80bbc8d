#include <doctest.h>

#include "duo/duoidal.hpp"
#include "support.hpp"

using namespace duo;

namespace {

const std::vector<int> kZ2 = {0, 1, 1, 0};

const Check* find_check(const Report& r, const std::string& axiom) {
  for (const auto& c : r.checks())
    if (c.axiom == axiom && !c.passed()) return &c;
  return nullptr;
}

DuoidalStructure cartesian(std::vector<Obj> suite) {
  return from_braided(symmetric_braiding(base_monoidal(BaseKind::finset(), std::move(suite))));
}

// Z/2 in cartesian FinSet with a comultiplication that can be swapped out.
Bimonoid z2_bimonoid(BaseKind k, bool broken) {
  MonoidalStructure m = base_monoidal(k, {0, 1, 2});
  DuoidalStructure d = from_braided(symmetric_braiding(m));
  MonoidObj mo = table_monoid(m, 2, kZ2, 0);
  ComonoidObj co = grouplike_comonoid(m, 2);
  auto base = std::dynamic_pointer_cast<const BaseCat>(m.cat);
  if (broken) {
    // x -> (x, x+1): the diagonal followed by the twist of Z/2 in the second factor.
    BaseValue v = base->value(2), vv = base->value(4);
    if (k.is_set()) {
      co.comult = base->lift(function_map(v, vv, {1, 2}));
    } else {
      std::vector<std::int64_t> t(8, 0);
      t[1 * 2 + 0] = 1;
      t[2 * 2 + 1] = 1;
      co.comult = base->lift(matrix_map(v, vv, t));
    }
  }
  return Bimonoid{d, 2, mo.mult, mo.unit, co.comult, co.counit};
}

}  // namespace

TEST_CASE("from_braided on cartesian FinSet is duoidal") {
  Report r2 = validate_duoidal(cartesian({0, 1, 2}));
  CHECK(r2.ok());
  for (const auto& c : r2.checks()) CHECK_MESSAGE(c.instances > 0, c.id);
  CHECK(validate_duoidal(cartesian({0, 1, 2, 3})).ok());
}

TEST_CASE("from_braided on discrete abelian groups") {
  for (auto orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}}) {
    MonoidalStructure m = discrete_abelian(BaseKind::finset(), orders);
    DuoidalStructure d = from_braided(symmetric_braiding(m));
    CHECK(validate_duoidal(d).ok());
    for (Obj a = 0; a < 2; ++a)
      for (Obj b = 0; b < 2; ++b) CHECK(d.g(a, b, b, a) == m.id(m.t(m.t(a, b), m.t(b, a))));
  }
  CHECK(validate_duoidal(from_braided(symmetric_braiding(discrete_abelian(BaseKind::finvect(2), {2})))).ok());
}

TEST_CASE("from_braided over FinVect") {
  DuoidalStructure d = from_braided(symmetric_braiding(base_monoidal(BaseKind::finvect(2), {0, 1, 2})));
  CHECK(validate_duoidal(d).ok());
  // gamma of a symmetric braiding is invertible.
  for_each_tuple({1, 2}, 4, [&](const std::vector<Obj>& x) {
    CHECK(d.c().is_iso(d.g(x[0], x[1], x[2], x[3])));
    return true;
  });
}

TEST_CASE("a corrupted gamma component fails (3) at a reported tuple") {
  DuoidalStructure d = cartesian({0, 1, 2, 3});
  auto base = std::dynamic_pointer_cast<const BaseCat>(d.h.cat);
  Mor wrong = base->lift(symmetry(base->value(4), base->value(4)));
  Report r = validate_duoidal(with_gamma(d, 2, 2, 2, 2, wrong), false);
  CHECK_FALSE(r.ok());
  const Check* c3 = find_check(r, "(3)");
  REQUIRE(c3 != nullptr);
  REQUIRE_FALSE(c3->counterexamples.empty());
  CHECK(c3->counterexamples.front()["objects"].size() == 6);
  CHECK_FALSE(r.failed("(5)"));
  CHECK_FALSE(r.failed("(6)"));
}

TEST_CASE("a scaled delta fails the unit axioms") {
  // Over FinVect(3) delta : J -> JoJ can be rescaled; in cartesian FinSet it is forced.
  DuoidalStructure v = from_braided(symmetric_braiding(base_monoidal(BaseKind::finvect(3), {0, 1, 2})));
  auto vb = std::dynamic_pointer_cast<const BaseCat>(v.h.cat);
  v.delta = vb->lift(matrix_map(vb->value(1), vb->value(1), {2}));
  Report r = validate_duoidal(v, false);
  CHECK(r.failed("(5)"));
  CHECK(r.failed("unit-comonoid"));
  CHECK_FALSE(r.failed("(3)"));
}

TEST_CASE("lax braiding still gives a duoidal structure") {
  Braiding b = idempotent_lax_braiding();
  CHECK(validate_monoidal(b.m).ok());
  Report rb = validate_braiding(b);
  CHECK(rb.ok());
  CHECK_FALSE(b.m.c().is_iso(b.c(1, 1)));
  DuoidalStructure d = from_braided(b);
  CHECK(validate_duoidal(d).ok());
  CHECK_FALSE(d.c().is_iso(d.g(1, 1, 1, 1)));
  DuoidalTables t = tabulate(d);
  auto c = std::dynamic_pointer_cast<const FinCat>(d.h.cat);
  CHECK(tabulate(duoidal_from_tables(c, t)) == t);
  CHECK(validate_duoidal(duoidal_from_tables(c, t)).ok());
}

TEST_CASE("bimonoids") {
  CHECK(validate_bimonoid(unit_bimonoid(cartesian({0, 1, 2}))).ok());
  CHECK(validate_bimonoid(z2_bimonoid(BaseKind::finset(), false)).ok());
  Report bad = validate_bimonoid(z2_bimonoid(BaseKind::finset(), true));
  CHECK(bad.failed("(9)"));
  CHECK(bad.failed("left-counit"));
  // Linearization preserves pass and fail.
  CHECK(validate_bimonoid(z2_bimonoid(BaseKind::finvect(2), false)).ok());
  CHECK(validate_bimonoid(z2_bimonoid(BaseKind::finvect(2), true)).failed("(9)"));
}

TEST_CASE("bimonoid as a bimonoidal functor out of the terminal duoidal category") {
  for (bool broken : {false, true}) {
    Bimonoid b = z2_bimonoid(BaseKind::finset(), broken);
    Report direct = validate_bimonoid(b);
    Report as_functor = validate_structured_functor(bimonoid_functor(b), FunctorMode::Bimonoidal);
    CHECK(direct.ok() == as_functor.ok());
    CHECK(direct.failed("(8)") == as_functor.failed("compat-gamma"));
    CHECK(direct.failed("(10)") == as_functor.failed("compat-tau"));
  }
  Bimonoid lin = z2_bimonoid(BaseKind::finvect(2), false);
  CHECK(validate_structured_functor(bimonoid_functor(lin), FunctorMode::Bimonoidal).ok());
}

TEST_CASE("structured functors") {
  for (const DuoidalStructure& d : {cartesian({0, 1, 2}), from_braided(idempotent_lax_braiding())}) {
    CHECK(validate_structured_functor(identity_structured(d, FunctorMode::Duoidal), FunctorMode::Duoidal).ok());
    CHECK(validate_structured_functor(identity_structured(d, FunctorMode::Bimonoidal), FunctorMode::Bimonoidal)
              .ok());
  }
  // x -> 2x from Z/2 to Z/4.
  DuoidalStructure z2 = from_braided(symmetric_braiding(discrete_abelian(BaseKind::finset(), {2})));
  DuoidalStructure z4 = from_braided(symmetric_braiding(discrete_abelian(BaseKind::finset(), {4})));
  auto c2 = std::dynamic_pointer_cast<const FinCat>(z2.h.cat);
  auto c4 = std::dynamic_pointer_cast<const FinCat>(z4.h.cat);
  StructuredFunctor s;
  s.src = z2;
  s.tgt = z4;
  s.f = discrete_functor(c2, c4, {0, 2});
  s.h2 = [&](Obj a, Obj b) { return z4.id(2 * ((a + b) % 2)); };
  s.h0 = z4.id(0);
  s.v2 = s.h2;
  s.v0 = z4.id(0);
  CHECK(validate_structured_functor(s, FunctorMode::Duoidal).ok());
  // x -> x + 1 is not monoidal.
  s.f = discrete_functor(c2, c4, {1, 2});
  CHECK_FALSE(validate_structured_functor(s, FunctorMode::Duoidal).ok());
}
