#include <doctest.h>

#include "duo/fincat.hpp"
#include "support.hpp"

using namespace duo;

namespace {

std::vector<int> cyclic_table(int n) {
  std::vector<int> t(n * n);
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) t[g * n + f] = (g + f) % n;
  return t;
}

// Independent group test on a multiplication table.
bool is_group_table(int n, const std::vector<int>& m) {
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n; ++x) ok = ok && m[c * n + x] == x && m[x * n + c] == x;
    if (ok) e = c;
  }
  if (e < 0) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (m[m[x * n + y] * n + z] != m[x * n + m[y * n + z]]) return false;
  for (int x = 0; x < n; ++x) {
    bool inv = false;
    for (int y = 0; y < n; ++y) inv = inv || (m[x * n + y] == e && m[y * n + x] == e);
    if (!inv) return false;
  }
  return true;
}

// Objects 0,1; End(0) = End(1) = Z/2 = {1,s}; hom(0,1) = {u,v} swapped by s on either side.
std::shared_ptr<FinCat> two_object_z2() {
  return finset_category(
      {"A", "B"}, {2, 2, 0, 2},
      [](Obj a, Obj b, Obj c, std::int64_t g, std::int64_t f) -> std::int64_t {
        (void)a; (void)b; (void)c;
        return (g + f) % 2;
      },
      {0, 0});
}

VFunctor multiply_by(std::shared_ptr<FinCat> c, int n, int k) {
  std::vector<std::int64_t> t(n);
  for (int i = 0; i < n; ++i) t[i] = (k * i) % n;
  BaseValue h = c->hom(0, 0);
  return functor_from_tables(c, c, {0}, {BaseMap{h, h, t}});
}

}  // namespace

TEST_CASE("validate_category on standard instances") {
  CHECK(validate_category(*discrete_category(BaseKind::finset(), {"a", "b", "c"})).ok());
  auto z2 = one_object_category(BaseKind::finset(), 2, cyclic_table(2));
  CHECK(is_group_table(2, cyclic_table(2)));
  CHECK(validate_category(*z2).ok());
  CHECK(validate_category(*unit_category(BaseKind::finvect(3))).ok());
  CHECK(validate_category(*one_object_category(BaseKind::finvect(2), 3, cyclic_table(3))).ok());
  CHECK(validate_category(*two_object_z2()).ok());
}

TEST_CASE("broken unit law is reported with the offending pair") {
  // e.e = e, e.s = s, s.e = e, s.s = s.
  auto bad = one_object_category(BaseKind::finset(), 2, {0, 1, 0, 1}, 0);
  Report r = validate_category(*bad);
  CHECK_FALSE(r.ok());
  CHECK(r.failed("right-unit"));
  const Check* c = nullptr;
  for (const auto& k : r.checks())
    if (k.axiom == "right-unit") c = &k;
  REQUIRE(c != nullptr);
  CHECK(c->counterexamples.front()["element"] == 1);
  CHECK(c->counterexamples.front()["objects"] == nlohmann::json::array({0, 0}));
}

TEST_CASE("validate_natural") {
  auto z2 = one_object_category(BaseKind::finset(), 2, cyclic_table(2));
  VFunctor id = identity_functor(z2);
  CHECK(validate_natural(VNatural{id, id, [&](Obj a) { return z2->identity(a); }}).ok());
  CHECK(validate_natural(VNatural{id, id, [&](Obj) { return z2->element(0, 0, 1); }}).ok());

  auto c = two_object_z2();
  VFunctor ic = identity_functor(c);
  CHECK(validate_natural(VNatural{ic, ic, [&](Obj a) { return c->element(a, a, 1); }}).ok());
  Report bad = validate_natural(
      VNatural{ic, ic, [&](Obj a) { return a == 0 ? c->identity(0) : c->element(1, 1, 1); }});
  CHECK_FALSE(bad.ok());
  CHECK(bad.failed("naturality"));
}

TEST_CASE("tensor of categories") {
  auto z2 = one_object_category(BaseKind::finset(), 2, cyclic_table(2));
  auto klein = tensor_categories(*z2, *z2);
  CHECK(klein->size() == 1);
  CHECK(klein->hom(0, 0).size == 4);
  CHECK(validate_category(*klein).ok());
  // Direct product oracle: (a,b)(c,d) = (a+c, b+d) with index 2*first+second.
  for (int g = 0; g < 4; ++g)
    for (int f = 0; f < 4; ++f) {
      int expect = ((g / 2 + f / 2) % 2) * 2 + (g % 2 + f % 2) % 2;
      CHECK(klein->compose(klein->element(0, 0, g), klein->element(0, 0, f)) ==
            klein->element(0, 0, expect));
    }

  auto unit = unit_category(BaseKind::finset());
  auto z3 = one_object_category(BaseKind::finset(), 3, cyclic_table(3));
  auto jz3 = tensor_categories(*unit, *z3);
  CHECK(jz3->size() == 1);
  CHECK(jz3->comp_map(0, 0, 0).table == z3->comp_map(0, 0, 0).table);

  auto d6 = tensor_categories(*discrete_category(BaseKind::finset(), {"a", "b"}),
                              *discrete_category(BaseKind::finset(), {"x", "y", "z"}));
  CHECK(d6->size() == 6);
  for (Obj a = 0; a < 6; ++a)
    for (Obj b = 0; b < 6; ++b) CHECK(d6->hom(a, b).size == (a == b ? 1 : 0));
  CHECK(validate_category(*d6).ok());
  CHECK(d6->label(4) == "(b,y)");

  auto v = one_object_category(BaseKind::finvect(2), 2, cyclic_table(2));
  auto vv = tensor_categories(*v, *v);
  CHECK(validate_category(*vv).ok());
  CHECK_THROWS_AS(tensor_categories(*v, *z2), ShapeError);
}

TEST_CASE("functor composition and tensor functoriality") {
  auto z4 = one_object_category(BaseKind::finset(), 4, cyclic_table(4));
  VFunctor f = multiply_by(z4, 4, 3), g = multiply_by(z4, 4, 2), h = multiply_by(z4, 4, 1);
  CHECK(validate_functor(f).ok());
  CHECK(validate_functor(g).ok());
  CHECK(tabulate(compose_functors(f, compose_functors(g, f))) ==
        tabulate(compose_functors(compose_functors(f, g), f)));

  auto zz = tensor_categories(*z4, *z4);
  VFunctor fg = tensor_functors(f, g, zz, zz), gh = tensor_functors(g, h, zz, zz);
  CHECK(validate_functor(fg).ok());
  VFunctor lhs = compose_functors(fg, gh);
  VFunctor rhs = tensor_functors(compose_functors(f, g), compose_functors(g, h), zz, zz);
  CHECK(tabulate(lhs) == tabulate(rhs));

  // A non-homomorphism fails functoriality.
  BaseValue hv = z4->hom(0, 0);
  VFunctor bad = functor_from_tables(z4, z4, {0}, {BaseMap{hv, hv, {0, 1, 1, 0}}});
  CHECK(validate_functor(bad).failed("functor-comp"));
}

TEST_CASE("base category as a self-enriched category") {
  BaseCat sets(BaseKind::finset(), {0, 1, 2});
  CHECK(validate_category(sets).ok());
  BaseCat vecs(BaseKind::finvect(2), {0, 1, 2});
  CHECK(validate_category(vecs).ok());
  Mor f = sets.generator(2, 2, 2);  // (1,0): the swap
  CHECK(f.m.table == std::vector<std::int64_t>{1, 0});
  CHECK(sets.name_of(f).table[0] == 2);
  CHECK(sets.inverse(f).has_value());
  CHECK_FALSE(sets.inverse(sets.generator(2, 2, 0)).has_value());
}

TEST_CASE("linear inverse search in a FinVect category") {
  auto v = one_object_category(BaseKind::finvect(3), 3, cyclic_table(3));
  // 2*[1] + [2] is invertible in F_3[Z/3]? Its norm is 2^3 + 1 = 0 mod 3, so no.
  Mor x{0, 0, vector_point(v->hom(0, 0), {0, 2, 1})};
  CHECK_FALSE(v->inverse(x).has_value());
  Mor y{0, 0, vector_point(v->hom(0, 0), {0, 2, 0})};
  auto yi = v->inverse(y);
  REQUIRE(yi.has_value());
  CHECK(v->compose(*yi, y) == v->identity(0));
}

TEST_CASE("closure: constructed categories validate") {
  duo::testing::Gen gen(7);
  for (int rep = 0; rep < 10; ++rep) {
    int n = static_cast<int>(gen.range(1, 5));
    auto c = one_object_category(BaseKind::finset(), n, cyclic_table(n));
    auto d = discrete_category(BaseKind::finset(), std::vector<std::string>(gen.range(0, 3), "x"));
    CHECK(validate_category(*c).ok());
    CHECK(validate_category(*tensor_categories(*c, *d)).ok());
  }
}
