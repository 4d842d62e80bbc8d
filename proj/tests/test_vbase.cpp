#include <doctest.h>

#include "duo/vbase.hpp"
#include "support.hpp"

using namespace duo;
using duo::testing::Gen;

namespace {

BaseValue set_of(std::int64_t n) { return make_value(BaseKind::finset(), n); }
BaseValue vec_of(int p, std::int64_t n) { return make_value(BaseKind::finvect(p), n); }

}  // namespace

TEST_CASE("tensor of sets is lexicographic") {
  BaseValue ab = make_set({"a", "b"}), x = make_set({"x"});
  BaseValue t = tensor(ab, x);
  CHECK(t.size == 2);
  CHECK(t.label(0) == "(a,x)");
  CHECK(t.label(1) == "(b,x)");
  CHECK(tensor(vec_of(2, 2), vec_of(2, 3)).size == 6);
  CHECK_THROWS_AS(tensor(set_of(2), vec_of(2, 2)), ShapeError);
}

TEST_CASE("symmetry is an involution") {
  BaseValue ab = make_set({"a", "b"}), xy = make_set({"x", "y"});
  CHECK(compose(symmetry(xy, ab), symmetry(ab, xy)) == identity(tensor(ab, xy)));
  CHECK(compose(symmetry(vec_of(3, 3), vec_of(3, 2)), symmetry(vec_of(3, 2), vec_of(3, 3))) ==
        identity(vec_of(3, 6)));
}

TEST_CASE("symmetry is natural") {
  Gen gen(11);
  for (int rep = 0; rep < 40; ++rep) {
    BaseKind k = rep % 2 ? BaseKind::finset() : BaseKind::finvect(3);
    BaseValue a = make_value(k, gen.range(0, 3)), a2 = make_value(k, gen.range(0, 3));
    BaseValue b = make_value(k, gen.range(0, 3)), b2 = make_value(k, gen.range(0, 3));
    if (k.is_set() && ((a.size > 0 && a2.size == 0) || (b.size > 0 && b2.size == 0))) continue;
    BaseMap f = gen.map(a, a2), g = gen.map(b, b2);
    CHECK(compose(symmetry(a2, b2), tensor(f, g)) == compose(tensor(g, f), symmetry(a, b)));
  }
}

TEST_CASE("associator and unitors satisfy pentagon and triangle") {
  for (BaseKind k : {BaseKind::finset(), BaseKind::finvect(2)}) {
    for (std::int64_t w = 0; w <= 2; ++w)
      for (std::int64_t x = 0; x <= 2; ++x)
        for (std::int64_t y = 0; y <= 2; ++y)
          for (std::int64_t z = 0; z <= 2; ++z) {
            BaseValue W = make_value(k, w), X = make_value(k, x), Y = make_value(k, y),
                      Z = make_value(k, z);
            BaseMap lhs = compose(associator(W, X, tensor(Y, Z)), associator(tensor(W, X), Y, Z));
            BaseMap rhs = compose(tensor(identity(W), associator(X, Y, Z)),
                                  compose(associator(W, tensor(X, Y), Z),
                                          tensor(associator(W, X, Y), identity(Z))));
            CHECK(lhs == rhs);
          }
    for (std::int64_t x = 0; x <= 3; ++x)
      for (std::int64_t y = 0; y <= 3; ++y) {
        BaseValue X = make_value(k, x), Y = make_value(k, y), I = unit_value(k);
        CHECK(compose(tensor(identity(X), left_unitor(Y)), associator(X, I, Y)) ==
              tensor(right_unitor(X), identity(Y)));
      }
  }
}

TEST_CASE("coequalizer examples") {
  BaseValue two = set_of(2), three = set_of(3);
  BaseMap f = function_map(two, three, {0, 1}), g = function_map(two, three, {1, 2});
  Coequalizer q = coequalizer(f, g);
  CHECK(q.value.size == 1);
  CHECK(q.value.size == duo::testing::oracle_quotient_size(f, g));

  Coequalizer same = coequalizer(f, f);
  CHECK(same.projection == identity(three));

  // f - g = e_0 (x) (1,1,0)^T has rank 1 over F_2.
  BaseValue v2 = vec_of(2, 2), v3 = vec_of(2, 3);
  BaseMap fv = matrix_map(v2, v3, {1, 0, 1, 1, 0, 0});
  BaseMap gv = matrix_map(v2, v3, {0, 0, 0, 1, 0, 0});
  CHECK(duo::testing::oracle_rank(subtract(fv, gv)) == 1);
  CHECK(coequalizer(fv, gv).value.size == 2);
  CHECK_THROWS_AS(coequalizer(f, function_map(two, set_of(2), {0, 1})), ShapeError);
}

TEST_CASE("coequalizer labels classes by smallest member") {
  BaseValue three = set_of(3), five = set_of(5);
  BaseMap f = function_map(three, five, {4, 3, 1}), g = function_map(three, five, {2, 4, 1});
  Coequalizer q = coequalizer(f, g);
  CHECK(q.value.size == 3);  // {0}, {1}, {2,3,4}
  CHECK(q.section.table == std::vector<std::int64_t>{0, 1, 2});
  CHECK(q.projection.table == std::vector<std::int64_t>{0, 1, 2, 2, 2});
}

TEST_CASE("equalizer examples") {
  BaseValue three = set_of(3), two = set_of(2);
  BaseMap f = function_map(three, two, {0, 1, 1});
  CHECK(equalizer(f, f).value.size == 3);
  BaseMap a = function_map(two, two, {0, 1}), b = function_map(two, two, {0, 0});
  Equalizer e = equalizer(a, b);
  CHECK(e.value.size == 1);
  CHECK(e.inclusion.table == std::vector<std::int64_t>{0});
  BaseValue v = vec_of(3, 2);
  BaseMap inv = matrix_map(v, v, {1, 2, 0, 1});
  Equalizer k = equalizer(add(inv, identity(v)), identity(v));
  CHECK(k.value.size == 0);
}

TEST_CASE("internal hom examples") {
  BaseValue two = set_of(2);
  InternalHom h = internal_hom(two, two);
  CHECK(h.value.size == 4);
  // Enumerate all functions 2 -> 2 independently: index f = 2*f(0) + f(1).
  for (std::int64_t f0 = 0; f0 < 2; ++f0)
    for (std::int64_t f1 = 0; f1 < 2; ++f1) {
      std::int64_t idx = 2 * f0 + f1;
      CHECK(h.eval.table[idx * 2 + 0] == f0);
      CHECK(h.eval.table[idx * 2 + 1] == f1);
    }
  BaseValue z = set_of(3), I = unit_value(BaseKind::finset());
  InternalHom iz = internal_hom(I, z);
  CHECK(iz.value.size == 3);
  CHECK(compose(iz.eval, *is_invertible(right_unitor(iz.value))) == identity(z));
  CHECK(internal_hom(vec_of(2, 2), vec_of(2, 3)).value.size == 6);
}

TEST_CASE("is_invertible examples") {
  BaseValue two = set_of(2);
  CHECK(*is_invertible(identity(two)) == identity(two));
  CHECK_FALSE(is_invertible(function_map(two, two, {1, 1})).has_value());
  BaseValue v = vec_of(2, 2);
  BaseMap m = matrix_map(v, v, {1, 1, 0, 1});
  CHECK(*is_invertible(m) == m);
}

TEST_CASE("size budget") {
  std::int64_t old = size_budget();
  set_size_budget(10);
  CHECK_THROWS_AS(tensor(set_of(4), set_of(3)), BudgetError);
  set_size_budget(old);
  CHECK_THROWS_AS(BaseKind::finvect(4), ShapeError);
  CHECK_THROWS_AS(BaseKind::finvect(263), ShapeError);
}

TEST_CASE("universal properties on random small instances") {
  Gen gen(2024);
  for (int rep = 0; rep < 30; ++rep) {
    BaseValue x = set_of(gen.range(0, 3)), y = set_of(gen.range(1, 4));
    BaseMap f = gen.function(x, y), g = gen.function(x, y);
    auto co = duo::testing::check_coequalizer_universal(f, g, set_of(2));
    CHECK_MESSAGE(co.ok, co.why);
    CHECK(coequalizer(f, g).value.size == duo::testing::oracle_quotient_size(f, g));
    auto eq = duo::testing::check_equalizer_universal(f, g, set_of(2));
    CHECK_MESSAGE(eq.ok, eq.why);

    BaseValue a = vec_of(2, gen.range(0, 3)), b = vec_of(2, gen.range(0, 3));
    BaseMap fv = gen.matrix(a, b), gv = gen.matrix(a, b);
    auto cov = duo::testing::check_coequalizer_universal(fv, gv, vec_of(2, 1));
    CHECK_MESSAGE(cov.ok, cov.why);
    CHECK(coequalizer(fv, gv).value.size == b.size - duo::testing::oracle_rank(subtract(fv, gv)));
    auto eqv = duo::testing::check_equalizer_universal(fv, gv, vec_of(2, 1));
    CHECK_MESSAGE(eqv.ok, eqv.why);
  }
  for (std::int64_t x = 0; x <= 2; ++x)
    for (std::int64_t y = 0; y <= 2; ++y)
      for (std::int64_t z = 0; z <= 2; ++z) {
        auto s = duo::testing::check_internal_hom_universal(set_of(x), set_of(y), set_of(z));
        CHECK_MESSAGE(s.ok, s.why);
        auto v = duo::testing::check_internal_hom_universal(vec_of(2, x), vec_of(2, y), vec_of(2, z));
        CHECK_MESSAGE(v.ok, v.why);
      }
}

TEST_CASE("preimage and middle four") {
  BaseValue v = vec_of(5, 3);
  Gen gen(5);
  BaseMap f = gen.matrix(v, v);
  BaseMap x = gen.matrix(unit_value(v.kind), v);
  BaseMap y = compose(f, x);
  auto s = preimage(f, y);
  REQUIRE(s.has_value());
  CHECK(compose(f, *s) == y);
  BaseValue a = set_of(2), b = set_of(3), c = set_of(1), d = set_of(2);
  BaseMap m = middle_four(a, b, c, d);
  // ((i,j),(k,l)) -> ((i,k),(j,l))
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 2; ++l)
        CHECK(m.table[(i * 3 + j) * 2 + l] == (i * 1 + 0) * 6 + (j * 2 + l));
}
