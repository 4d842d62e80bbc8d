#include "duo/monoidal.hpp"

#include <array>
#include <map>
#include <mutex>

namespace duo {

namespace {

using json = nlohmann::json;

json objs_json(std::initializer_list<Obj> xs) { return json{{"objects", std::vector<Obj>(xs)}}; }

std::int64_t find_unit(const std::vector<int>& mult, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mult[e * n + x] == x && mult[x * n + e] == x;
    if (ok) return e;
  }
  throw ShapeError("multiplication table has no unit");
}

std::shared_ptr<const BaseCat> as_base(const MonoidalStructure& m) {
  return std::dynamic_pointer_cast<const BaseCat>(m.cat);
}

}  // namespace

Mor MonoidalStructure::inv(const Mor& f) const {
  auto g = cat->inverse(f);
  if (!g) throw ShapeError("constraint component " + std::to_string(f.src) + " -> " + std::to_string(f.tgt) +
                           " is not invertible");
  return *g;
}

// ---------------------------------------------------------------- tables

MonoidalStructure monoidal_from_tables(FinCatPtr c, const MonoidalTables& t, std::string name) {
  const std::int64_t n = c->size();
  if (static_cast<std::int64_t>(t.tensor_obj.size()) != n * n ||
      static_cast<std::int64_t>(t.tensor_hom.size()) != n * n * n * n ||
      static_cast<std::int64_t>(t.assoc.size()) != n * n * n ||
      static_cast<std::int64_t>(t.lunit.size()) != n || static_cast<std::int64_t>(t.runit.size()) != n)
    throw ShapeError("monoidal tables have the wrong length");
  for (auto v : t.tensor_obj)
    if (v < 0 || v >= n) throw ShapeError("tensor object out of range");
  if (t.unit < 0 || t.unit >= n) throw ShapeError("unit object out of range");
  auto tab = std::make_shared<MonoidalTables>(t);
  auto ten = [tab, n](Obj a, Obj b) { return tab->tensor_obj.at(a * n + b); };
  for (Obj a = 0; a < n; ++a)
    for (Obj a2 = 0; a2 < n; ++a2)
      for (Obj b = 0; b < n; ++b)
        for (Obj b2 = 0; b2 < n; ++b2) {
          const BaseMap& h = t.tensor_hom[((a * n + a2) * n + b) * n + b2];
          if (!(h.src == tensor(c->hom(a, a2), c->hom(b, b2))) || !(h.tgt == c->hom(ten(a, b), ten(a2, b2))))
            throw ShapeError("tensor hom map is ill-typed");
        }
  auto point_ok = [&](const BaseMap& x, Obj s, Obj d) { return x.src.size == 1 && x.tgt == c->hom(s, d); };
  for (Obj a = 0; a < n; ++a) {
    if (!point_ok(t.lunit[a], ten(t.unit, a), a) || !point_ok(t.runit[a], ten(a, t.unit), a))
      throw ShapeError("unitor entry is ill-typed");
    for (Obj b = 0; b < n; ++b)
      for (Obj d = 0; d < n; ++d)
        if (!point_ok(t.assoc[(a * n + b) * n + d], ten(ten(a, b), d), ten(a, ten(b, d))))
          throw ShapeError("associator entry is ill-typed");
  }
  MonoidalStructure m;
  m.cat = c;
  m.name = std::move(name);
  m.unit = t.unit;
  m.tensor_obj = ten;
  m.tensor_mor = [tab, n, ten](const Mor& f, const Mor& g) {
    const BaseMap& h = tab->tensor_hom.at(((f.src * n + f.tgt) * n + g.src) * n + g.tgt);
    return Mor{ten(f.src, g.src), ten(f.tgt, g.tgt), compose(h, tensor(f.m, g.m))};
  };
  m.assoc = [tab, n, ten](Obj x, Obj y, Obj z) {
    return Mor{ten(ten(x, y), z), ten(x, ten(y, z)), tab->assoc.at((x * n + y) * n + z)};
  };
  m.lunit = [tab, ten](Obj x) { return Mor{ten(tab->unit, x), x, tab->lunit.at(x)}; };
  m.runit = [tab, ten](Obj x) { return Mor{ten(x, tab->unit), x, tab->runit.at(x)}; };
  return m;
}

MonoidalTables tabulate(const MonoidalStructure& m) {
  auto c = std::dynamic_pointer_cast<const FinCat>(m.cat);
  if (!c) throw ShapeError("tabulate needs a table carrier");
  const Obj n = c->size();
  MonoidalTables t;
  t.unit = m.unit;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) t.tensor_obj.push_back(m.t(a, b));
  for (Obj a = 0; a < n; ++a)
    for (Obj a2 = 0; a2 < n; ++a2)
      for (Obj b = 0; b < n; ++b)
        for (Obj b2 = 0; b2 < n; ++b2) {
          BaseValue hb = c->hom(b, b2);
          t.tensor_hom.push_back(map_from_generators(
              tensor(c->hom(a, a2), hb), c->hom(m.t(a, b), m.t(a2, b2)), [&](std::int64_t k) {
                return c->name_of(m.t(c->generator(a, a2, k / hb.size), c->generator(b, b2, k % hb.size)));
              }));
        }
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj d = 0; d < n; ++d) t.assoc.push_back(c->name_of(m.a(a, b, d)));
  for (Obj a = 0; a < n; ++a) {
    t.lunit.push_back(c->name_of(m.l(a)));
    t.runit.push_back(c->name_of(m.r(a)));
  }
  return t;
}

MonoidalStructure with_assoc(MonoidalStructure m, Obj x, Obj y, Obj z, Mor replacement) {
  auto old = m.assoc;
  m.assoc = [old, x, y, z, replacement](Obj a, Obj b, Obj c) {
    return a == x && b == y && c == z ? replacement : old(a, b, c);
  };
  return m;
}

// ---------------------------------------------------------------- instances

MonoidalStructure base_monoidal(BaseKind k, std::vector<Obj> suite) {
  auto c = std::make_shared<BaseCat>(k, std::move(suite));
  MonoidalStructure m;
  m.cat = c;
  m.name = k.is_set() ? "cartesian" : "tensor";
  m.unit = 1;
  m.tensor_obj = [](Obj a, Obj b) { return a * b; };
  m.tensor_mor = [](const Mor& f, const Mor& g) {
    return Mor{f.src * g.src, f.tgt * g.tgt, tensor(f.m, g.m)};
  };
  m.assoc = [c](Obj x, Obj y, Obj z) { return c->lift(associator(c->value(x), c->value(y), c->value(z))); };
  m.lunit = [c](Obj x) { return c->lift(left_unitor(c->value(x))); };
  m.runit = [c](Obj x) { return c->lift(right_unitor(c->value(x))); };
  return m;
}

MonoidalStructure discrete_monoidal(BaseKind k, std::vector<std::string> labels, const std::vector<int>& mult) {
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(mult.size()) != n * n) throw ShapeError("multiplication table must be n*n");
  auto c = discrete_category(k, std::move(labels));
  const Obj e = find_unit(mult, n);
  MonoidalTables t;
  t.unit = e;
  for (int v : mult) t.tensor_obj.push_back(v);
  BaseValue u = unit_value(k);
  for (Obj a = 0; a < n; ++a)
    for (Obj a2 = 0; a2 < n; ++a2)
      for (Obj b = 0; b < n; ++b)
        for (Obj b2 = 0; b2 < n; ++b2) {
          BaseValue s = tensor(c->hom(a, a2), c->hom(b, b2));
          BaseValue d = c->hom(mult[a * n + b], mult[a2 * n + b2]);
          if (s.size == 1)
            t.tensor_hom.push_back(identity(u));
          else
            t.tensor_hom.push_back(k.is_set() ? BaseMap{s, d, {}} : zero_map(s, d));
        }
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj d = 0; d < n; ++d) {
        if (mult[mult[a * n + b] * n + d] != mult[a * n + mult[b * n + d]])
          throw ShapeError("multiplication table is not associative");
        t.assoc.push_back(point(u, 0));
      }
  for (Obj a = 0; a < n; ++a) {
    t.lunit.push_back(point(u, 0));
    t.runit.push_back(point(u, 0));
  }
  return monoidal_from_tables(c, t, "discrete");
}

MonoidalStructure discrete_abelian(BaseKind k, const std::vector<int>& orders) {
  int n = 1;
  for (int o : orders) n *= o;
  auto digits = [&](int x) {
    std::vector<int> d(orders.size());
    for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
      d[i] = x % orders[i];
      x /= orders[i];
    }
    return d;
  };
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    auto d = digits(x);
    if (d.size() == 1) {
      labels.push_back(std::to_string(d[0]));
      continue;
    }
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    labels.push_back(s + ")");
  }
  std::vector<int> mult(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto dx = digits(x), dy = digits(y);
      int z = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) z = z * orders[i] + (dx[i] + dy[i]) % orders[i];
      mult[x * n + y] = z;
    }
  return discrete_monoidal(k, std::move(labels), mult);
}

Braiding symmetric_braiding(const MonoidalStructure& m) {
  if (auto b = as_base(m)) {
    return Braiding{m, [b](Obj x, Obj y) { return b->lift(symmetry(b->value(x), b->value(y))); }, false};
  }
  auto c = m.cat;
  return Braiding{m,
                  [m, c](Obj x, Obj y) {
                    if (m.t(x, y) != m.t(y, x) || c->hom(m.t(x, y), m.t(x, y)).size != 1)
                      throw ShapeError("symmetric_braiding: not a commutative discrete structure");
                    return c->identity(m.t(x, y));
                  },
                  false};
}

Braiding idempotent_lax_braiding() {
  // Element 0 is the identity, 1 is e; both composition and tensor are "or".
  auto c = finset_category(
      {"I", "X"}, {1, 0, 0, 2},
      [](Obj, Obj, Obj, std::int64_t g, std::int64_t f) -> std::int64_t { return g | f; }, {0, 0});
  MonoidalTables t;
  t.unit = 0;
  t.tensor_obj = {0, 1, 1, 1};
  for (Obj a = 0; a < 2; ++a)
    for (Obj a2 = 0; a2 < 2; ++a2)
      for (Obj b = 0; b < 2; ++b)
        for (Obj b2 = 0; b2 < 2; ++b2) {
          BaseValue hb = c->hom(b, b2), s = tensor(c->hom(a, a2), hb), d = c->hom(a | b, a2 | b2);
          std::vector<std::int64_t> tab(s.size);
          for (std::int64_t k = 0; k < s.size; ++k) tab[k] = (k / hb.size) | (k % hb.size);
          t.tensor_hom.push_back(function_map(s, d, std::move(tab)));
        }
  for (Obj x = 0; x < 8; ++x) t.assoc.push_back(point(c->hom(x != 0, x != 0), 0));
  for (Obj x = 0; x < 2; ++x) {
    t.lunit.push_back(point(c->hom(x, x), 0));
    t.runit.push_back(point(c->hom(x, x), 0));
  }
  MonoidalStructure m = monoidal_from_tables(c, t, "idempotent");
  return Braiding{m, [c](Obj x, Obj y) { return c->element(x | y, x | y, x & y); }, true};
}

VFunctor tensor_functor(const MonoidalStructure& m, std::shared_ptr<const FinCat> cc) {
  auto c = std::dynamic_pointer_cast<const FinCat>(m.cat);
  if (!c) throw ShapeError("tensor_functor needs a table carrier");
  const Obj n = c->size();
  if (cc->size() != n * n) throw ShapeError("tensor_functor: wrong square category");
  MonoidalTables t = tabulate(m);
  std::vector<Obj> om;
  for (Obj p = 0; p < n * n; ++p) om.push_back(t.tensor_obj[p]);
  std::vector<BaseMap> hm;
  for (Obj p = 0; p < n * n; ++p)
    for (Obj q = 0; q < n * n; ++q) hm.push_back(t.tensor_hom[((p / n * n + q / n) * n + p % n) * n + q % n]);
  return functor_from_tables(cc, c, std::move(om), std::move(hm));
}

// ---------------------------------------------------------------- validation

Report validate_monoidal(const MonoidalStructure& m) {
  Report r;
  const Category& c = m.c();
  const auto objs = c.objects();
  const Obj I = m.unit;
  auto ctype = r.open("monoidal.typing", "typing");
  for (auto x : objs) {
    Mor l = m.l(x), rr = m.r(x);
    r.record(ctype, l.src == m.t(I, x) && l.tgt == x && rr.src == m.t(x, I) && rr.tgt == x, objs_json({x}));
  }
  for_each_tuple(objs, 3, [&](const std::vector<Obj>& o) {
    Mor a = m.a(o[0], o[1], o[2]);
    r.record(ctype, a.src == m.t(m.t(o[0], o[1]), o[2]) && a.tgt == m.t(o[0], m.t(o[1], o[2])),
             json{{"objects", o}});
    return true;
  });
  if (!r.ok()) return r;

  auto cf = r.open("monoidal.tensor", "tensor-functoriality");
  try {
    for_each_tuple(objs, 2, [&](const std::vector<Obj>& o) {
      r.record(cf, m.t(m.id(o[0]), m.id(o[1])) == m.id(m.t(o[0], o[1])), json{{"objects", o}, {"law", "identity"}});
      return true;
    });
    for_each_tuple(objs, 4, [&](const std::vector<Obj>& o) {
      const Obj a = o[0], b = o[1], d = o[2], e = o[3];
      // Composition in each variable: o = (a,b,d) composable, e the fixed other variable.
      for (std::int64_t i = 0; i < c.generator_count(a, b); ++i) {
        Mor f = c.generator(a, b, i);
        Mor fl = m.t(f, m.id(e)), fr = m.t(m.id(e), f);
        for (std::int64_t j = 0; j < c.generator_count(b, d); ++j) {
          Mor g = c.generator(b, d, j);
          Mor gf = c.compose(g, f);
          bool ok = m.t(gf, m.id(e)) == c.compose(m.t(g, m.id(e)), fl) &&
                    m.t(m.id(e), gf) == c.compose(m.t(m.id(e), g), fr);
          r.record(cf, ok, json{{"objects", o}, {"elements", {i, j}}, {"law", "composition"}});
        }
      }
      // Interchange: f : a -> b, g : d -> e.
      for (std::int64_t i = 0; i < c.generator_count(a, b); ++i) {
        Mor f = c.generator(a, b, i);
        for (std::int64_t j = 0; j < c.generator_count(d, e); ++j) {
          Mor g = c.generator(d, e, j);
          Mor fg = m.t(f, g);
          bool ok = fg.src == m.t(a, d) && fg.tgt == m.t(b, e) &&
                    c.compose(m.t(f, m.id(e)), m.t(m.id(a), g)) == fg &&
                    c.compose(m.t(m.id(b), g), m.t(f, m.id(d))) == fg;
          r.record(cf, ok, json{{"objects", o}, {"elements", {i, j}}, {"law", "interchange"}});
        }
      }
      return true;
    });
  } catch (const ShapeError& e) {
    r.abort(cf, e.what());
  }

  auto cna = r.open("monoidal.assoc-natural", "Nat_a");
  check_naturality(
      r, cna, c, c, 3, [&](const std::vector<Mor>& f) { return m.t(m.t(f[0], f[1]), f[2]); },
      [&](const std::vector<Mor>& f) { return m.t(f[0], m.t(f[1], f[2])); },
      [&](const std::vector<Obj>& x) { return m.a(x[0], x[1], x[2]); }, objs);
  auto cnl = r.open("monoidal.lunit-natural", "Nat_l");
  check_naturality(
      r, cnl, c, c, 1, [&](const std::vector<Mor>& f) { return m.t(m.id(I), f[0]); },
      [&](const std::vector<Mor>& f) { return f[0]; }, [&](const std::vector<Obj>& x) { return m.l(x[0]); },
      objs);
  auto cnr = r.open("monoidal.runit-natural", "Nat_r");
  check_naturality(
      r, cnr, c, c, 1, [&](const std::vector<Mor>& f) { return m.t(f[0], m.id(I)); },
      [&](const std::vector<Mor>& f) { return f[0]; }, [&](const std::vector<Obj>& x) { return m.r(x[0]); },
      objs);

  auto ci = r.open("monoidal.invertible", "invertibility");
  for (auto x : objs) {
    r.record(ci, c.is_iso(m.l(x)), json{{"objects", {x}}, {"constraint", "l"}});
    r.record(ci, c.is_iso(m.r(x)), json{{"objects", {x}}, {"constraint", "r"}});
  }
  for_each_tuple(objs, 3, [&](const std::vector<Obj>& o) {
    r.record(ci, c.is_iso(m.a(o[0], o[1], o[2])), json{{"objects", o}, {"constraint", "a"}});
    return true;
  });

  auto cp = r.open("monoidal.pentagon", "pentagon");
  try {
    for_each_tuple(objs, 4, [&](const std::vector<Obj>& o) {
      const Obj w = o[0], x = o[1], y = o[2], z = o[3];
      Mor lhs = c.compose(m.a(w, x, m.t(y, z)), m.a(m.t(w, x), y, z));
      Mor rhs = compose_all(c, {m.t(m.a(w, x, y), m.id(z)), m.a(w, m.t(x, y), z), m.t(m.id(w), m.a(x, y, z))});
      r.record(cp, lhs == rhs, json{{"objects", o}});
      return true;
    });
  } catch (const ShapeError& e) {
    r.abort(cp, e.what());
  }
  auto ct = r.open("monoidal.triangle", "triangle");
  try {
    for_each_tuple(objs, 2, [&](const std::vector<Obj>& o) {
      const Obj x = o[0], y = o[1];
      r.record(ct, c.compose(m.t(m.id(x), m.l(y)), m.a(x, I, y)) == m.t(m.r(x), m.id(y)), json{{"objects", o}});
      return true;
    });
  } catch (const ShapeError& e) {
    r.abort(ct, e.what());
  }
  return r;
}

Report validate_braiding(const Braiding& b) {
  Report r;
  const MonoidalStructure& m = b.m;
  const Category& c = m.c();
  const auto objs = c.objects();
  auto ctype = r.open("braiding.typing", "typing");
  for_each_tuple(objs, 2, [&](const std::vector<Obj>& o) {
    Mor x = b.c(o[0], o[1]);
    r.record(ctype, x.src == m.t(o[0], o[1]) && x.tgt == m.t(o[1], o[0]), json{{"objects", o}});
    return true;
  });
  if (!r.ok()) return r;
  auto cn = r.open("braiding.natural", "Nat_c");
  check_naturality(
      r, cn, c, c, 2, [&](const std::vector<Mor>& f) { return m.t(f[0], f[1]); },
      [&](const std::vector<Mor>& f) { return m.t(f[1], f[0]); },
      [&](const std::vector<Obj>& x) { return b.c(x[0], x[1]); }, objs);
  auto h1 = r.open("braiding.hexagon-1", "hexagon-1");
  auto h2 = r.open("braiding.hexagon-2", "hexagon-2");
  try {
    for_each_tuple(objs, 3, [&](const std::vector<Obj>& o) {
      const Obj A = o[0], B = o[1], C = o[2];
      Mor l1 = compose_all(c, {m.a(A, B, C), b.c(A, m.t(B, C)), m.a(B, C, A)});
      Mor r1 = compose_all(c, {m.t(b.c(A, B), m.id(C)), m.a(B, A, C), m.t(m.id(B), b.c(A, C))});
      r.record(h1, l1 == r1, json{{"objects", o}});
      Mor l2 = compose_all(c, {m.ainv(A, B, C), b.c(m.t(A, B), C), m.ainv(C, A, B)});
      Mor r2 = compose_all(c, {m.t(m.id(A), b.c(B, C)), m.ainv(A, C, B), m.t(b.c(A, C), m.id(B))});
      r.record(h2, l2 == r2, json{{"objects", o}});
      return true;
    });
  } catch (const ShapeError& e) {
    r.abort(h1, e.what());
  }
  auto cu = r.open("braiding.unit", "braiding-unit");
  for (auto x : objs) {
    r.record(cu, c.compose(m.l(x), b.c(x, m.unit)) == m.r(x), json{{"objects", {x}}, {"side", "right"}});
    r.record(cu, c.compose(m.r(x), b.c(m.unit, x)) == m.l(x), json{{"objects", {x}}, {"side", "left"}});
  }
  if (!b.lax) {
    auto ci = r.open("braiding.invertible", "invertibility");
    for_each_tuple(objs, 2, [&](const std::vector<Obj>& o) {
      r.record(ci, c.is_iso(b.c(o[0], o[1])), json{{"objects", o}});
      return true;
    });
  }
  return r;
}

// ---------------------------------------------------------------- monoids

Report validate_monoid(const MonoidalStructure& m, const MonoidObj& x) {
  Report r;
  const Category& c = m.c();
  const Obj M = x.carrier;
  auto ct = r.open("monoid.typing", "typing");
  r.record(ct, x.mult.src == m.t(M, M) && x.mult.tgt == M && x.unit.src == m.unit && x.unit.tgt == M,
           objs_json({M}));
  if (!r.ok()) return r;
  auto ca = r.open("monoid.assoc", "assoc");
  r.record(ca,
           c.compose(x.mult, m.t(x.mult, m.id(M))) ==
               compose_all(c, {m.a(M, M, M), m.t(m.id(M), x.mult), x.mult}),
           objs_json({M}));
  auto cl = r.open("monoid.left-unit", "left-unit");
  r.record(cl, c.compose(x.mult, m.t(x.unit, m.id(M))) == m.l(M), objs_json({M}));
  auto cr = r.open("monoid.right-unit", "right-unit");
  r.record(cr, c.compose(x.mult, m.t(m.id(M), x.unit)) == m.r(M), objs_json({M}));
  return r;
}

Report validate_comonoid(const MonoidalStructure& m, const ComonoidObj& x) {
  Report r;
  const Category& c = m.c();
  const Obj C = x.carrier;
  auto ct = r.open("comonoid.typing", "typing");
  r.record(ct,
           x.comult.src == C && x.comult.tgt == m.t(C, C) && x.counit.src == C && x.counit.tgt == m.unit,
           objs_json({C}));
  if (!r.ok()) return r;
  auto ca = r.open("comonoid.coassoc", "coassoc");
  r.record(ca,
           compose_all(c, {x.comult, m.t(x.comult, m.id(C)), m.a(C, C, C)}) ==
               c.compose(m.t(m.id(C), x.comult), x.comult),
           objs_json({C}));
  auto cl = r.open("comonoid.left-counit", "left-counit");
  r.record(cl, compose_all(c, {x.comult, m.t(x.counit, m.id(C)), m.l(C)}) == m.id(C), objs_json({C}));
  auto cr = r.open("comonoid.right-counit", "right-counit");
  r.record(cr, compose_all(c, {x.comult, m.t(m.id(C), x.counit), m.r(C)}) == m.id(C), objs_json({C}));
  return r;
}

Report validate_monoid_morphism(const MonoidalStructure& m, const MonoidObj& from, const MonoidObj& to,
                                const Mor& f) {
  Report r;
  const Category& c = m.c();
  auto ct = r.open("monoid-morphism.typing", "typing");
  r.record(ct, f.src == from.carrier && f.tgt == to.carrier, json::object());
  if (!r.ok()) return r;
  auto cm = r.open("monoid-morphism.mult", "preserves-mult");
  r.record(cm, c.compose(f, from.mult) == c.compose(to.mult, m.t(f, f)), json::object());
  auto cu = r.open("monoid-morphism.unit", "preserves-unit");
  r.record(cu, c.compose(f, from.unit) == to.unit, json::object());
  return r;
}

bool is_commutative(const Braiding& b, const MonoidObj& x) {
  return b.m.o(x.mult, b.c(x.carrier, x.carrier)) == x.mult;
}

bool is_cocommutative(const Braiding& b, const ComonoidObj& x) {
  return b.m.o(b.c(x.carrier, x.carrier), x.comult) == x.comult;
}

MonoidObj unit_monoid(const MonoidalStructure& m) {
  return MonoidObj{m.unit, m.l(m.unit), m.id(m.unit)};
}

ComonoidObj unit_comonoid(const MonoidalStructure& m) {
  return ComonoidObj{m.unit, m.linv(m.unit), m.id(m.unit)};
}

ComonoidObj diagonal_comonoid(const MonoidalStructure& m, Obj n) {
  auto b = as_base(m);
  if (!b || !b->base().is_set()) throw ShapeError("diagonal_comonoid needs the cartesian base structure");
  return grouplike_comonoid(m, n);
}

MonoidObj table_monoid(const MonoidalStructure& m, int n, const std::vector<int>& mult, int unit) {
  auto b = as_base(m);
  if (!b) throw ShapeError("table_monoid needs a base structure");
  if (static_cast<int>(mult.size()) != n * n) throw ShapeError("multiplication table must be n*n");
  BaseValue v = b->value(n), vv = b->value(n * n), I = b->value(1);
  if (b->base().is_set()) {
    return MonoidObj{n, b->lift(function_map(vv, v, std::vector<std::int64_t>(mult.begin(), mult.end()))),
                     b->lift(function_map(I, v, {unit}))};
  }
  std::vector<std::int64_t> t(static_cast<std::size_t>(n) * n * n, 0);
  for (int k = 0; k < n * n; ++k) t[mult[k] * (n * n) + k] = 1;
  return MonoidObj{n, b->lift(matrix_map(vv, v, std::move(t))), b->lift(point(v, unit))};
}

ComonoidObj grouplike_comonoid(const MonoidalStructure& m, Obj n) {
  auto b = as_base(m);
  if (!b) throw ShapeError("grouplike_comonoid needs a base structure");
  BaseValue v = b->value(n), vv = b->value(n * n), I = b->value(1);
  if (b->base().is_set()) {
    std::vector<std::int64_t> d(n), e(n, 0);
    for (Obj i = 0; i < n; ++i) d[i] = i * n + i;
    return ComonoidObj{n, b->lift(function_map(v, vv, d)), b->lift(function_map(v, I, e))};
  }
  std::vector<std::int64_t> d(n * n * n, 0), e(n, 1);
  for (Obj i = 0; i < n; ++i) d[(i * n + i) * n + i] = 1;
  return ComonoidObj{n, b->lift(matrix_map(v, vv, d)), b->lift(matrix_map(v, I, e))};
}

namespace {

// Cartesian FinSet: tables with a two-sided unit e, rows and columns of e fixed, the rest by odometer.
std::vector<MonoidObj> enumerate_set_monoids(const BaseCat& b, Obj n, std::int64_t max_hom) {
  std::vector<MonoidObj> out;
  if (n == 0) return out;
  const std::int64_t free = (n - 1) * (n - 1);
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < free; ++i)
    if ((total *= n) > max_hom) throw BudgetError("enumerate_monoids: hom exceeds the enumeration bound");
  const BaseValue one = b.value(1), v = b.value(n), vv = b.value(n * n);
  for (Obj e = 0; e < n; ++e) {
    std::vector<std::int64_t> cells;
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        if (x != e && y != e) cells.push_back(x * n + y);
    std::vector<std::int64_t> t(n * n);
    for (Obj x = 0; x < n; ++x) {
      t[e * n + x] = x;
      t[x * n + e] = x;
    }
    std::vector<std::int64_t> digits(free, 0);
    for (std::int64_t k = 0; k < total; ++k) {
      for (std::int64_t i = 0; i < free; ++i) t[cells[i]] = digits[i];
      bool assoc = true;
      for (Obj x = 0; x < n && assoc; ++x)
        for (Obj y = 0; y < n && assoc; ++y)
          for (Obj z = 0; z < n && assoc; ++z) assoc = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
      if (assoc) out.push_back(MonoidObj{n, b.lift(function_map(vv, v, t)), b.lift(function_map(one, v, {e}))});
      for (std::int64_t i = free - 1; i >= 0; --i) {
        if (++digits[i] < n) break;
        digits[i] = 0;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<MonoidObj> enumerate_monoids(const MonoidalStructure& m, Obj M, std::int64_t max_hom) {
  const Category& c = m.c();
  if (auto b = as_base(m); b && b->base().is_set() && m.unit == 1 && m.t(M, M) == M * M)
    return enumerate_set_monoids(*b, M, max_hom);
  auto units = all_morphisms(c, m.unit, M, max_hom);
  auto mults = all_morphisms(c, m.t(M, M), M, max_hom);
  if (!units || !mults) throw BudgetError("enumerate_monoids: hom exceeds the enumeration bound");
  std::vector<MonoidObj> out;
  const Mor lM = m.l(M), rM = m.r(M), aM = m.a(M, M, M);
  for (const auto& eta : *units)
    for (const auto& mu : *mults) {
      if (!(c.compose(mu, m.t(eta, m.id(M))) == lM) || !(c.compose(mu, m.t(m.id(M), eta)) == rM)) continue;
      if (!(c.compose(mu, m.t(mu, m.id(M))) == compose_all(c, {aM, m.t(m.id(M), mu), mu}))) continue;
      out.push_back(MonoidObj{M, mu, eta});
    }
  return out;
}

// ---------------------------------------------------------------- hom monoidality

struct HomCache {
  std::mutex mu;
  std::map<std::array<Obj, 4>, BaseMap> maps;
};

HomMonoidalData::HomMonoidalData(MonoidalStructure m)
    : m_(std::move(m)), cache_(std::make_shared<HomCache>()) {}

BaseMap HomMonoidalData::map(Obj w, Obj x, Obj y, Obj z) const {
  const Category& c = m_.c();
  BaseValue hy = c.hom(y, z);
  return map_from_generators(tensor(c.hom(w, x), hy), c.hom(m_.t(w, y), m_.t(x, z)), [&](std::int64_t k) {
    return c.name_of(m_.t(c.generator(w, x, k / hy.size), c.generator(y, z, k % hy.size)));
  });
}

BaseMap HomMonoidalData::j() const { return m_.c().name_of(m_.id(m_.unit)); }

Mor HomMonoidalData::box(const Mor& f, const Mor& g) const {
  HomCache* cache = cache_.get();
  const std::array<Obj, 4> key{f.src, f.tgt, g.src, g.tgt};
  std::optional<BaseMap> h;
  {
    std::lock_guard<std::mutex> lock(cache->mu);
    auto it = cache->maps.find(key);
    if (it != cache->maps.end()) h = it->second;
  }
  if (!h) {
    try {
      h = map(f.src, f.tgt, g.src, g.tgt);
    } catch (const BudgetError&) {
      return m_.t(f, g);  // too large to materialize; evaluate directly
    }
    std::lock_guard<std::mutex> lock(cache->mu);
    cache->maps.emplace(key, *h);
  }
  const Category& c = m_.c();
  return c.from_name(m_.t(f.src, g.src), m_.t(f.tgt, g.tgt), compose(*h, tensor(c.name_of(f), c.name_of(g))));
}

HomMonoidalData hom_monoidal(const MonoidalStructure& m) { return HomMonoidalData(m); }

Report validate_hom_monoidal(const HomMonoidalData& h, const Braiding* b) {
  Report r;
  const MonoidalStructure& m = h.structure();
  const Category& c = m.c();
  const auto objs = c.objects();
  const Mor jI = c.from_name(m.unit, m.unit, h.j());
  auto ca = r.open("hom.assoc", "hom-assoc");
  try {
    for_each_tuple(objs, 6, [&](const std::vector<Obj>& o) {
      const Obj W = o[0], X = o[1], Y = o[2], Z = o[3], U = o[4], V = o[5];
      const std::int64_t nf = c.generator_count(W, X), ng = c.generator_count(Y, Z), nk = c.generator_count(U, V);
      if (nf == 0 || ng == 0 || nk == 0) return true;
      const Mor a_src = m.a(W, Y, U), a_tgt = m.a(X, Z, V);
      for (std::int64_t i = 0; i < nf; ++i) {
        Mor f = c.generator(W, X, i);
        for (std::int64_t j = 0; j < ng; ++j) {
          Mor g = c.generator(Y, Z, j);
          Mor fg = h.box(f, g);
          for (std::int64_t k = 0; k < nk; ++k) {
            Mor kk = c.generator(U, V, k);
            bool ok = c.compose(a_tgt, h.box(fg, kk)) == c.compose(h.box(f, h.box(g, kk)), a_src);
            r.record(ca, ok, json{{"objects", o}, {"elements", {i, j, k}}});
          }
        }
      }
      return true;
    });
  } catch (const ShapeError& e) {
    r.abort(ca, e.what());
  }
  auto cu = r.open("hom.unit", "hom-unit");
  try {
    for_each_tuple(objs, 2, [&](const std::vector<Obj>& o) {
      for (std::int64_t i = 0; i < c.generator_count(o[0], o[1]); ++i) {
        Mor f = c.generator(o[0], o[1], i);
        bool ok = c.compose(m.l(o[1]), h.box(jI, f)) == c.compose(f, m.l(o[0])) &&
                  c.compose(m.r(o[1]), h.box(f, jI)) == c.compose(f, m.r(o[0]));
        r.record(cu, ok, json{{"objects", o}, {"element", i}});
      }
      return true;
    });
  } catch (const ShapeError& e) {
    r.abort(cu, e.what());
  }
  if (b) {
    auto cb = r.open("hom.braided", "hom-braided");
    try {
      for_each_tuple(objs, 4, [&](const std::vector<Obj>& o) {
        const Obj W = o[0], X = o[1], Y = o[2], Z = o[3];
        for (std::int64_t i = 0; i < c.generator_count(W, X); ++i) {
          Mor f = c.generator(W, X, i);
          for (std::int64_t j = 0; j < c.generator_count(Y, Z); ++j) {
            Mor g = c.generator(Y, Z, j);
            bool ok = c.compose(b->c(X, Z), h.box(f, g)) == c.compose(h.box(g, f), b->c(W, Y));
            r.record(cb, ok, json{{"objects", o}, {"elements", {i, j}}});
          }
        }
        return true;
      });
    } catch (const ShapeError& e) {
      r.abort(cb, e.what());
    }
  }
  return r;
}

MonoidObj ConvolutionMonoid::as_monoid() const {
  const Obj n = carrier.size;
  return MonoidObj{n, Mor{n * n, n, mult}, Mor{1, n, unit}};
}

ConvolutionMonoid convolution_monoid(const HomMonoidalData& h, const ComonoidObj& cm, const MonoidObj& a) {
  const MonoidalStructure& m = h.structure();
  const Category& c = m.c();
  const Obj C = cm.carrier, A = a.carrier;
  BaseValue v = c.hom(C, A);
  ConvolutionMonoid out;
  out.carrier = v;
  out.mult = map_from_generators(tensor(v, v), v, [&](std::int64_t k) {
    Mor f = c.generator(C, A, k / v.size), g = c.generator(C, A, k % v.size);
    return c.name_of(compose_all(c, {cm.comult, h.box(f, g), a.mult}));
  });
  out.unit = c.name_of(c.compose(a.unit, cm.counit));
  return out;
}

}  // namespace duo
