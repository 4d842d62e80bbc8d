#include <doctest.h>

#include "duo/monoidal.hpp"
#include "support.hpp"

using namespace duo;

namespace {

const std::vector<int> kZ2 = {0, 1, 1, 0};
const std::vector<int> kOneZero = {0, 1, 1, 1};  // {1,0} under multiplication, 1 encoded as 0

int count_monoid_tables(int n) {
  int count = 0;
  const int cells = n * n;
  std::vector<int> t(cells, 0);
  while (true) {
    for (int u = 0; u < n; ++u) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = t[u * n + x] == x && t[x * n + u] == x;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          for (int z = 0; z < n && ok; ++z) ok = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
      if (ok) ++count;
    }
    int i = cells - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) break;
  }
  return count;
}

}  // namespace

TEST_CASE("skeletal FinSet with sizes up to 3 is monoidal") {
  MonoidalStructure m = base_monoidal(BaseKind::finset(), {0, 1, 2, 3});
  Report r = validate_monoidal(m);
  CHECK(r.ok());
  for (const auto& c : r.checks()) CHECK_MESSAGE(c.instances > 0, c.id);
  CHECK(validate_braiding(symmetric_braiding(m)).ok());
}

TEST_CASE("FinVect(2) with sizes up to 2 is monoidal") {
  MonoidalStructure m = base_monoidal(BaseKind::finvect(2), {0, 1, 2});
  CHECK(validate_monoidal(m).ok());
  CHECK(validate_braiding(symmetric_braiding(m)).ok());
}

TEST_CASE("discrete groups are strict monoidal") {
  MonoidalStructure z3 = discrete_abelian(BaseKind::finset(), {3});
  CHECK(validate_monoidal(z3).ok());
  CHECK(z3.t(1, 2) == 0);
  CHECK(validate_braiding(symmetric_braiding(z3)).ok());
  MonoidalStructure klein = discrete_abelian(BaseKind::finset(), {2, 2});
  CHECK(validate_monoidal(klein).ok());
  CHECK(klein.c().label(3) == "(1,1)");
  CHECK(validate_monoidal(discrete_abelian(BaseKind::finvect(3), {3})).ok());
}

TEST_CASE("tables round trip and the tensor functor") {
  MonoidalStructure z3 = discrete_abelian(BaseKind::finset(), {3});
  MonoidalTables t = tabulate(z3);
  auto c = std::dynamic_pointer_cast<const FinCat>(z3.cat);
  CHECK(tabulate(monoidal_from_tables(c, t)) == t);
  auto cc = tensor_categories(*c, *c);
  VFunctor f = tensor_functor(z3, cc);
  CHECK(validate_functor(f).ok());
  CHECK(f.on_obj(1 * 3 + 2) == 0);
}

TEST_CASE("a non-natural associator component is caught") {
  MonoidalStructure m = base_monoidal(BaseKind::finset(), {0, 1, 2, 3});
  auto base = std::dynamic_pointer_cast<const BaseCat>(m.cat);
  // Swap two elements of (2x2)x2 -> 2x(2x2).
  std::vector<std::int64_t> perm = {1, 0, 2, 3, 4, 5, 6, 7};
  Mor bad = base->lift(function_map(base->value(8), base->value(8), perm));
  Report r = validate_monoidal(with_assoc(m, 2, 2, 2, bad));
  CHECK_FALSE(r.ok());
  CHECK((r.failed("Nat_a") || r.failed("pentagon")));
  CHECK_FALSE(r.failed("triangle"));
}

TEST_CASE("monoid and comonoid validation") {
  MonoidalStructure m = base_monoidal(BaseKind::finset(), {0, 1, 2});
  CHECK(validate_monoid(m, unit_monoid(m)).ok());
  CHECK(validate_comonoid(m, unit_comonoid(m)).ok());
  MonoidObj z2 = table_monoid(m, 2, kZ2, 0);
  CHECK(validate_monoid(m, z2).ok());
  CHECK(validate_comonoid(m, diagonal_comonoid(m, 2)).ok());
  // Projection (x,y) -> x is associative but has no left unit.
  MonoidObj proj = table_monoid(m, 2, {0, 0, 1, 1}, 0);
  Report r = validate_monoid(m, proj);
  CHECK(r.failed("left-unit"));
  CHECK_FALSE(r.failed("assoc"));
  CHECK(is_commutative(symmetric_braiding(m), z2));
  CHECK(is_cocommutative(symmetric_braiding(m), diagonal_comonoid(m, 2)));
}

TEST_CASE("monoid enumeration agrees with a table count") {
  MonoidalStructure m = base_monoidal(BaseKind::finset(), {0, 1, 2});
  CHECK(static_cast<int>(enumerate_monoids(m, 2).size()) == count_monoid_tables(2));
  CHECK(static_cast<int>(enumerate_monoids(m, 1).size()) == count_monoid_tables(1));
  CHECK(enumerate_monoids(m, 2).size() == 4);
}

TEST_CASE("hom monoidality on discrete Z/2") {
  MonoidalStructure z2 = discrete_abelian(BaseKind::finset(), {2});
  HomMonoidalData h = hom_monoidal(z2);
  CHECK(h.box(z2.id(1), z2.id(1)) == z2.id(0));
  CHECK(validate_hom_monoidal(h).ok());
  Braiding b = symmetric_braiding(z2);
  CHECK(validate_hom_monoidal(h, &b).ok());
}

TEST_CASE("hom monoidality on FinSet up to 2") {
  MonoidalStructure m = base_monoidal(BaseKind::finset(), {0, 1, 2});
  HomMonoidalData h = hom_monoidal(m);
  auto base = std::dynamic_pointer_cast<const BaseCat>(m.cat);
  // (f x g)(i,j) = (f(i), g(j)) on a direct table.
  for (std::int64_t i = 0; i < 4; ++i)
    for (std::int64_t j = 0; j < 4; ++j) {
      Mor f = base->generator(2, 2, i), g = base->generator(2, 2, j);
      Mor fg = h.box(f, g);
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) CHECK(fg.m.table[x * 2 + y] == f.m.table[x] * 2 + g.m.table[y]);
    }
  BaseMap j = h.j();
  CHECK(j.table == std::vector<std::int64_t>{0});
  Braiding b = symmetric_braiding(m);
  Report r = validate_hom_monoidal(h, &b);
  CHECK(r.ok());
}

TEST_CASE("convolution monoids") {
  MonoidalStructure sets = base_monoidal(BaseKind::finset(), {0, 1, 2, 3});
  HomMonoidalData hs = hom_monoidal(sets);
  ConvolutionMonoid triv = convolution_monoid(hs, unit_comonoid(sets), unit_monoid(sets));
  CHECK(triv.carrier.size == 1);
  CHECK(validate_monoid(base_monoidal(BaseKind::finset(), {}), triv.as_monoid()).ok());

  // Functions 3 -> Z/2 with pointwise addition.
  ConvolutionMonoid pw = convolution_monoid(hs, diagonal_comonoid(sets, 3), table_monoid(sets, 2, kZ2, 0));
  REQUIRE(pw.carrier.size == 8);
  auto base = std::dynamic_pointer_cast<const BaseCat>(sets.cat);
  for (std::int64_t f = 0; f < 8; ++f)
    for (std::int64_t g = 0; g < 8; ++g) {
      Mor mf = base->generator(3, 2, f), mg = base->generator(3, 2, g);
      std::vector<std::int64_t> sum(3);
      for (int x = 0; x < 3; ++x) sum[x] = (mf.m.table[x] + mg.m.table[x]) % 2;
      Mor expect{3, 2, BaseMap{base->value(3), base->value(2), sum}};
      CHECK(pw.mult.table[f * 8 + g] == base->name_of(expect).table[0]);
    }
  CHECK(validate_monoid(sets, pw.as_monoid()).ok());

  // F_2[Z/2]: group-like comultiplication against the group algebra.
  MonoidalStructure vec = base_monoidal(BaseKind::finvect(2), {0, 1, 2, 4});
  HomMonoidalData hv = hom_monoidal(vec);
  ConvolutionMonoid conv = convolution_monoid(hv, grouplike_comonoid(vec, 2), table_monoid(vec, 2, kZ2, 0));
  REQUIRE(conv.carrier.size == 4);
  // Brute-force oracle: (f*g)_{lk} = sum_{i+j=l} f_{ik} g_{jk}; basis E_{r,c} has index 2r+c.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int f[2][2] = {}, g[2][2] = {};
      f[a / 2][a % 2] = 1;
      g[b / 2][b % 2] = 1;
      for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k) {
          int s = 0;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              if ((i + j) % 2 == l) s += f[i][k] * g[j][k];
          CHECK(conv.mult.table[(l * 2 + k) * 16 + a * 4 + b] == s % 2);
        }
    }
  CHECK(validate_monoid(vec, conv.as_monoid()).ok());
  Braiding sym = symmetric_braiding(base_monoidal(BaseKind::finvect(2), {}));
  CHECK(is_commutative(sym, conv.as_monoid()));
}

TEST_CASE("convolution of commutative with cocommutative is commutative") {
  duo::testing::Gen gen(99);
  MonoidalStructure sets = base_monoidal(BaseKind::finset(), {0, 1, 2, 3});
  HomMonoidalData hs = hom_monoidal(sets);
  Braiding sym = symmetric_braiding(sets);
  auto monoids = enumerate_monoids(sets, 2);
  for (const auto& mo : monoids) {
    if (!is_commutative(sym, mo)) continue;
    Obj n = gen.range(0, 3);
    ConvolutionMonoid cv = convolution_monoid(hs, diagonal_comonoid(sets, n), mo);
    CHECK(validate_monoid(sets, cv.as_monoid()).ok());
    CHECK(is_commutative(symmetric_braiding(base_monoidal(BaseKind::finset(), {})), cv.as_monoid()));
  }
}

TEST_CASE("constraints of validated structures are invertible") {
  MonoidalStructure m = base_monoidal(BaseKind::finvect(3), {0, 1, 2});
  for (Obj x : m.c().objects()) {
    CHECK(is_invertible(m.l(x).m).has_value());
    CHECK(is_invertible(m.r(x).m).has_value());
    for (Obj y : m.c().objects())
      for (Obj z : m.c().objects()) CHECK(is_invertible(m.a(x, y, z).m).has_value());
  }
  CHECK(validate_monoid(m, table_monoid(m, 2, kOneZero, 0)).ok());
}
