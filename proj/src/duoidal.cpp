#include "duo/duoidal.hpp"

namespace duo {

namespace {

using json = nlohmann::json;

using MorFn = std::function<Mor(const std::vector<Mor>&)>;

// Runs `body` over objs^arity; a structural error at one tuple is a failure at that tuple.
void over_tuples(Report& r, std::size_t check, const std::vector<Obj>& objs, int arity,
                 const std::function<bool(const std::vector<Obj>&)>& body) {
  for_each_tuple(objs, arity, [&](const std::vector<Obj>& o) {
    try {
      return body(o);
    } catch (const ShapeError& e) {
      r.fail(check, json{{"objects", o}, {"error", e.what()}});
      return true;
    }
  });
}

// Folds a sub-report into one check under a single axiom label.
void fold(Report& r, const std::string& id, const std::string& axiom, const Report& sub) {
  auto c = r.open(id, axiom);
  for (const auto& k : sub.checks()) {
    if (k.passed()) {
      r.pass(c);
      continue;
    }
    json where{{"law", k.axiom}};
    if (!k.counterexamples.empty()) where["at"] = k.counterexamples.front();
    if (!k.note.empty()) where["note"] = k.note;
    r.fail(c, where);
  }
}

}  // namespace

// ---------------------------------------------------------------- tables

DuoidalStructure duoidal_from_tables(FinCatPtr c, const DuoidalTables& t, std::string name) {
  DuoidalStructure d;
  d.h = monoidal_from_tables(c, t.h, name + ".h");
  d.v = monoidal_from_tables(c, t.v, name + ".v");
  d.v.cat = d.h.cat;
  const Obj n = c->size();
  if (static_cast<Obj>(t.gamma.size()) != n * n * n * n) throw ShapeError("gamma table has the wrong length");
  auto gam = std::make_shared<std::vector<BaseMap>>(t.gamma);
  const MonoidalStructure h = d.h, v = d.v;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj e = 0; e < n; ++e)
        for (Obj f = 0; f < n; ++f) {
          const BaseMap& x = (*gam)[((a * n + b) * n + e) * n + f];
          if (x.src.size != 1 || !(x.tgt == c->hom(h.t(v.t(a, b), v.t(e, f)), v.t(h.t(a, e), h.t(b, f)))))
            throw ShapeError("gamma entry is ill-typed");
        }
  d.gamma = [gam, h, v, n](Obj a, Obj b, Obj e, Obj f) {
    return Mor{h.t(v.t(a, b), v.t(e, f)), v.t(h.t(a, e), h.t(b, f)), gam->at(((a * n + b) * n + e) * n + f)};
  };
  auto point_ok = [&](const BaseMap& x, Obj s, Obj e) { return x.src.size == 1 && x.tgt == c->hom(s, e); };
  const Obj J = h.unit, one = v.unit;
  if (!point_ok(t.mu, h.t(one, one), one) || !point_ok(t.tau, J, one) || !point_ok(t.delta, J, v.t(J, J)))
    throw ShapeError("unit map entry is ill-typed");
  d.mu = Mor{h.t(one, one), one, t.mu};
  d.tau = Mor{J, one, t.tau};
  d.delta = Mor{J, v.t(J, J), t.delta};
  d.name = std::move(name);
  return d;
}

DuoidalTables tabulate(const DuoidalStructure& d) {
  auto c = std::dynamic_pointer_cast<const FinCat>(d.h.cat);
  if (!c) throw ShapeError("tabulate needs a table carrier");
  DuoidalTables t;
  t.h = tabulate(d.h);
  t.v = tabulate(d.v);
  const Obj n = c->size();
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj e = 0; e < n; ++e)
        for (Obj f = 0; f < n; ++f) t.gamma.push_back(c->name_of(d.g(a, b, e, f)));
  t.mu = c->name_of(d.mu);
  t.tau = c->name_of(d.tau);
  t.delta = c->name_of(d.delta);
  return t;
}

DuoidalStructure with_gamma(DuoidalStructure d, Obj a, Obj b, Obj c, Obj e, Mor replacement) {
  auto old = d.gamma;
  d.gamma = [old, a, b, c, e, replacement](Obj w, Obj x, Obj y, Obj z) {
    return w == a && x == b && y == c && z == e ? replacement : old(w, x, y, z);
  };
  return d;
}

// ---------------------------------------------------------------- validation

Report validate_duoidal(const DuoidalStructure& d, bool check_monoidal) {
  Report r;
  auto cs = r.open("duoidal.carrier", "typing");
  if (d.h.cat != d.v.cat) {
    r.abort(cs, "horizontal and vertical structures live on different carriers");
    return r;
  }
  r.pass(cs);
  if (check_monoidal) {
    r.merge(validate_monoidal(d.h), "horizontal");
    r.merge(validate_monoidal(d.v), "vertical");
    if (!r.ok()) return r;
  }
  const Category& c = d.c();
  const auto objs = c.objects();
  const MonoidalStructure &h = d.h, &v = d.v;
  const Obj J = d.J(), one = d.one();
  auto o = [&](std::initializer_list<Mor> chain) { return compose_all(c, chain); };

  auto ct = r.open("duoidal.typing", "typing");
  over_tuples(r, ct, objs, 4, [&](const std::vector<Obj>& x) {
    Mor g = d.g(x[0], x[1], x[2], x[3]);
    r.record(ct,
             g.src == h.t(v.t(x[0], x[1]), v.t(x[2], x[3])) && g.tgt == v.t(h.t(x[0], x[2]), h.t(x[1], x[3])),
             json{{"objects", x}, {"map", "gamma"}});
    return true;
  });
  r.record(ct, d.mu.src == h.t(one, one) && d.mu.tgt == one, json{{"map", "mu"}});
  r.record(ct, d.tau.src == J && d.tau.tgt == one, json{{"map", "tau"}});
  r.record(ct, d.delta.src == J && d.delta.tgt == v.t(J, J), json{{"map", "delta"}});
  if (!r.ok()) return r;

  auto cn = r.open("duoidal.gamma-natural", "nat(gamma)");
  try {
    check_naturality(
        r, cn, c, c, 4, [&](const std::vector<Mor>& f) { return h.t(v.t(f[0], f[1]), v.t(f[2], f[3])); },
        [&](const std::vector<Mor>& f) { return v.t(h.t(f[0], f[2]), h.t(f[1], f[3])); },
        [&](const std::vector<Obj>& x) { return d.g(x[0], x[1], x[2], x[3]); }, objs);
  } catch (const ShapeError& e) {
    r.abort(cn, e.what());
  }

  auto c3 = r.open("duoidal.gamma-horizontal-assoc", "(3)");
  over_tuples(r, c3, objs, 6, [&](const std::vector<Obj>& x) {
    const Obj A = x[0], B = x[1], C = x[2], D = x[3], E = x[4], F = x[5];
    Mor lhs = o({h.t(d.g(A, B, C, D), h.id(v.t(E, F))), d.g(h.t(A, C), h.t(B, D), E, F),
                 v.t(h.a(A, C, E), h.a(B, D, F))});
    Mor rhs = o({h.a(v.t(A, B), v.t(C, D), v.t(E, F)), h.t(h.id(v.t(A, B)), d.g(C, D, E, F)),
                 d.g(A, B, h.t(C, E), h.t(D, F))});
    r.record(c3, lhs == rhs, json{{"objects", x}});
    return true;
  });

  auto c4 = r.open("duoidal.gamma-vertical-assoc", "(4)");
  over_tuples(r, c4, objs, 6, [&](const std::vector<Obj>& x) {
    const Obj A = x[0], B = x[1], C = x[2], D = x[3], E = x[4], F = x[5];
    Mor lhs = o({d.g(v.t(A, B), C, v.t(D, E), F), v.t(d.g(A, B, D, E), v.id(h.t(C, F))),
                 v.a(h.t(A, D), h.t(B, E), h.t(C, F))});
    Mor rhs = o({h.t(v.a(A, B, C), v.a(D, E, F)), d.g(A, v.t(B, C), D, v.t(E, F)),
                 v.t(v.id(h.t(A, D)), d.g(B, C, E, F))});
    r.record(c4, lhs == rhs, json{{"objects", x}});
    return true;
  });

  // (5) and (6) in the equivalent form with the unit isomorphisms moved to the other side.
  auto c5 = r.open("duoidal.delta-unit", "(5)");
  over_tuples(r, c5, objs, 2, [&](const std::vector<Obj>& x) {
    const Obj A = x[0], B = x[1];
    const Mor AB = v.id(v.t(A, B));
    Mor left = o({h.t(d.delta, AB), d.g(J, J, A, B), v.t(h.l(A), h.l(B))});
    r.record(c5, left == h.l(v.t(A, B)), json{{"objects", x}, {"side", "left"}});
    Mor right = o({h.t(AB, d.delta), d.g(A, B, J, J), v.t(h.r(A), h.r(B))});
    r.record(c5, right == h.r(v.t(A, B)), json{{"objects", x}, {"side", "right"}});
    return true;
  });

  auto c6 = r.open("duoidal.mu-unit", "(6)");
  over_tuples(r, c6, objs, 2, [&](const std::vector<Obj>& x) {
    const Obj A = x[0], B = x[1];
    Mor left = o({d.g(one, A, one, B), v.t(d.mu, v.id(h.t(A, B))), v.l(h.t(A, B))});
    r.record(c6, left == h.t(v.l(A), v.l(B)), json{{"objects", x}, {"side", "left"}});
    Mor right = o({d.g(A, one, B, one), v.t(v.id(h.t(A, B)), d.mu), v.r(h.t(A, B))});
    r.record(c6, right == h.t(v.r(A), v.r(B)), json{{"objects", x}, {"side", "right"}});
    return true;
  });

  fold(r, "duoidal.unit-monoid", "unit-monoid", validate_monoid(h, MonoidObj{one, d.mu, d.tau}));
  fold(r, "duoidal.unit-comonoid", "unit-comonoid", validate_comonoid(v, ComonoidObj{J, d.delta, d.tau}));
  return r;
}

// ---------------------------------------------------------------- constructions

DuoidalStructure from_braided(const Braiding& b) {
  const MonoidalStructure m = b.m;
  DuoidalStructure d;
  d.h = m;
  d.v = m;
  d.gamma = [m, c = b.c](Obj A, Obj B, Obj C, Obj D) {
    return compose_all(m.c(), {m.a(A, B, m.t(C, D)), m.t(m.id(A), m.ainv(B, C, D)),
                               m.t(m.id(A), m.t(c(B, C), m.id(D))), m.t(m.id(A), m.a(C, B, D)),
                               m.ainv(A, C, m.t(B, D))});
  };
  const Obj I = m.unit;
  d.mu = m.l(I);
  d.tau = m.id(I);
  d.delta = m.linv(I);
  d.name = "from_braided(" + m.name + ")";
  return d;
}

DuoidalStructure terminal_duoidal(BaseKind k) {
  MonoidalStructure m = discrete_monoidal(k, {"*"}, {0});
  DuoidalStructure d = from_braided(symmetric_braiding(m));
  d.name = "terminal";
  return d;
}

// ---------------------------------------------------------------- bimonoids

Report validate_bimonoid(const Bimonoid& b) {
  Report r;
  const DuoidalStructure& d = b.d;
  const Category& c = d.c();
  const MonoidalStructure &h = d.h, &v = d.v;
  const Obj A = b.carrier;
  r.merge(validate_monoid(h, b.monoid()), "horizontal");
  r.merge(validate_comonoid(v, b.comonoid()), "vertical");
  if (!r.ok()) {
    // The compatibility diagrams are still evaluated when the pieces are well typed.
    bool typed = b.mult.src == h.t(A, A) && b.mult.tgt == A && b.unit.src == d.J() && b.unit.tgt == A &&
                 b.comult.src == A && b.comult.tgt == v.t(A, A) && b.counit.src == A &&
                 b.counit.tgt == d.one();
    if (!typed) return r;
  }
  auto o = [&](std::initializer_list<Mor> chain) { return compose_all(c, chain); };
  auto c8 = r.open("bimonoid.mult-comult", "(8)");
  try {
    Mor lhs = o({b.mult, b.comult});
    Mor rhs = o({h.t(b.comult, b.comult), d.g(A, A, A, A), v.t(b.mult, b.mult)});
    r.record(c8, lhs == rhs, json{{"objects", {A}}});
  } catch (const ShapeError& e) {
    r.abort(c8, e.what());
  }
  auto c9 = r.open("bimonoid.unit-counit", "(9)");
  try {
    r.record(c9, o({b.mult, b.counit}) == o({h.t(b.counit, b.counit), d.mu}),
             json{{"objects", {A}}, {"square", "counit-mult"}});
    r.record(c9, o({b.unit, b.comult}) == o({d.delta, v.t(b.unit, b.unit)}),
             json{{"objects", {A}}, {"square", "comult-unit"}});
  } catch (const ShapeError& e) {
    r.abort(c9, e.what());
  }
  auto c10 = r.open("bimonoid.unit-triangle", "(10)");
  r.record(c10, o({b.unit, b.counit}) == d.tau, json{{"objects", {A}}});
  return r;
}

Bimonoid unit_bimonoid(const DuoidalStructure& d) {
  // J is a monoid for * (unitor) and a comonoid for o (delta, tau); the same holds when J = 1.
  Bimonoid b;
  b.d = d;
  b.carrier = d.J();
  b.mult = d.h.l(d.J());
  b.unit = d.h.id(d.J());
  b.comult = d.delta;
  b.counit = d.tau;
  return b;
}

// ---------------------------------------------------------------- structured functors

Report validate_structured_functor(const StructuredFunctor& s, FunctorMode mode) {
  Report r;
  const DuoidalStructure &S = s.src, &T = s.tgt;
  const Category &cs = S.c(), &ct = T.c();
  const VFunctor& F = s.f;
  const auto objs = cs.objects();
  const bool op = mode == FunctorMode::Bimonoidal;
  r.merge(validate_functor(F), "functor");
  if (!r.ok()) return r;
  auto Fo = [&](Obj x) { return F.on_obj(x); };
  auto Fm = [&](const Mor& f) { return F.on_mor(f); };
  auto o = [&](std::initializer_list<Mor> chain) { return compose_all(ct, chain); };

  auto ctype = r.open("functor.typing", "typing");
  over_tuples(r, ctype, objs, 2, [&](const std::vector<Obj>& x) {
    const Obj A = x[0], B = x[1];
    Mor h2 = s.h2(A, B), v2 = s.v2(A, B);
    bool ok = h2.src == T.hs(Fo(A), Fo(B)) && h2.tgt == Fo(S.hs(A, B));
    ok = ok && (op ? v2.src == Fo(S.vs(A, B)) && v2.tgt == T.vs(Fo(A), Fo(B))
                   : v2.src == T.vs(Fo(A), Fo(B)) && v2.tgt == Fo(S.vs(A, B)));
    r.record(ctype, ok, json{{"objects", x}});
    return true;
  });
  bool units = s.h0.src == T.J() && s.h0.tgt == Fo(S.J());
  units = units && (op ? s.v0.src == Fo(S.one()) && s.v0.tgt == T.one()
                       : s.v0.src == T.one() && s.v0.tgt == Fo(S.one()));
  r.record(ctype, units, json{{"map", "units"}});
  if (!r.ok()) return r;

  // Horizontal: lax monoidal.
  auto chn = r.open("functor.h-natural", "h-naturality");
  try {
    check_naturality(
        r, chn, cs, ct, 2, [&](const std::vector<Mor>& f) { return T.hs(Fm(f[0]), Fm(f[1])); },
        [&](const std::vector<Mor>& f) { return Fm(S.hs(f[0], f[1])); },
        [&](const std::vector<Obj>& x) { return s.h2(x[0], x[1]); }, objs);
  } catch (const ShapeError& e) {
    r.abort(chn, e.what());
  }
  auto cha = r.open("functor.h-assoc", "h-assoc");
  over_tuples(r, cha, objs, 3, [&](const std::vector<Obj>& x) {
    const Obj A = x[0], B = x[1], C = x[2];
    Mor lhs = o({T.hs(s.h2(A, B), T.id(Fo(C))), s.h2(S.hs(A, B), C), Fm(S.h.a(A, B, C))});
    Mor rhs = o({T.h.a(Fo(A), Fo(B), Fo(C)), T.hs(T.id(Fo(A)), s.h2(B, C)), s.h2(A, S.hs(B, C))});
    r.record(cha, lhs == rhs, json{{"objects", x}});
    return true;
  });
  auto chu = r.open("functor.h-unit", "h-unit");
  over_tuples(r, chu, objs, 1, [&](const std::vector<Obj>& x) {
    const Obj A = x[0];
    r.record(chu, o({T.hs(s.h0, T.id(Fo(A))), s.h2(S.J(), A), Fm(S.h.l(A))}) == T.h.l(Fo(A)),
             json{{"objects", x}, {"side", "left"}});
    r.record(chu, o({T.hs(T.id(Fo(A)), s.h0), s.h2(A, S.J()), Fm(S.h.r(A))}) == T.h.r(Fo(A)),
             json{{"objects", x}, {"side", "right"}});
    return true;
  });

  // Vertical: lax monoidal, or opmonoidal.
  auto cvn = r.open("functor.v-natural", "v-naturality");
  try {
    MorFn lhs = [&](const std::vector<Mor>& f) { return T.vs(Fm(f[0]), Fm(f[1])); };
    MorFn rhs = [&](const std::vector<Mor>& f) { return Fm(S.vs(f[0], f[1])); };
    check_naturality(r, cvn, cs, ct, 2, op ? rhs : lhs, op ? lhs : rhs,
                     [&](const std::vector<Obj>& x) { return s.v2(x[0], x[1]); }, objs);
  } catch (const ShapeError& e) {
    r.abort(cvn, e.what());
  }
  auto cva = r.open("functor.v-assoc", "v-assoc");
  over_tuples(r, cva, objs, 3, [&](const std::vector<Obj>& x) {
    const Obj A = x[0], B = x[1], C = x[2];
    Mor lhs, rhs;
    if (op) {
      lhs = o({s.v2(S.vs(A, B), C), T.vs(s.v2(A, B), T.id(Fo(C))), T.v.a(Fo(A), Fo(B), Fo(C))});
      rhs = o({Fm(S.v.a(A, B, C)), s.v2(A, S.vs(B, C)), T.vs(T.id(Fo(A)), s.v2(B, C))});
    } else {
      lhs = o({T.vs(s.v2(A, B), T.id(Fo(C))), s.v2(S.vs(A, B), C), Fm(S.v.a(A, B, C))});
      rhs = o({T.v.a(Fo(A), Fo(B), Fo(C)), T.vs(T.id(Fo(A)), s.v2(B, C)), s.v2(A, S.vs(B, C))});
    }
    r.record(cva, lhs == rhs, json{{"objects", x}});
    return true;
  });
  auto cvu = r.open("functor.v-unit", "v-unit");
  over_tuples(r, cvu, objs, 1, [&](const std::vector<Obj>& x) {
    const Obj A = x[0];
    if (op) {
      r.record(cvu, o({s.v2(S.one(), A), T.vs(s.v0, T.id(Fo(A))), T.v.l(Fo(A))}) == Fm(S.v.l(A)),
               json{{"objects", x}, {"side", "left"}});
      r.record(cvu, o({s.v2(A, S.one()), T.vs(T.id(Fo(A)), s.v0), T.v.r(Fo(A))}) == Fm(S.v.r(A)),
               json{{"objects", x}, {"side", "right"}});
    } else {
      r.record(cvu, o({T.vs(s.v0, T.id(Fo(A))), s.v2(S.one(), A), Fm(S.v.l(A))}) == T.v.l(Fo(A)),
               json{{"objects", x}, {"side", "left"}});
      r.record(cvu, o({T.vs(T.id(Fo(A)), s.v0), s.v2(A, S.one()), Fm(S.v.r(A))}) == T.v.r(Fo(A)),
               json{{"objects", x}, {"side", "right"}});
    }
    return true;
  });

  // Compatibility with gamma, mu, delta, tau.
  auto cg = r.open("functor.gamma", "compat-gamma");
  over_tuples(r, cg, objs, 4, [&](const std::vector<Obj>& x) {
    const Obj A = x[0], B = x[1], C = x[2], D = x[3];
    const Obj FA = Fo(A), FB = Fo(B), FC = Fo(C), FD = Fo(D);
    Mor lhs, rhs;
    if (op) {
      lhs = o({s.h2(S.vs(A, B), S.vs(C, D)), Fm(S.g(A, B, C, D)), s.v2(S.hs(A, C), S.hs(B, D))});
      rhs = o({T.hs(s.v2(A, B), s.v2(C, D)), T.g(FA, FB, FC, FD), T.vs(s.h2(A, C), s.h2(B, D))});
    } else {
      lhs = o({T.hs(s.v2(A, B), s.v2(C, D)), s.h2(S.vs(A, B), S.vs(C, D)), Fm(S.g(A, B, C, D))});
      rhs = o({T.g(FA, FB, FC, FD), T.vs(s.h2(A, C), s.h2(B, D)), s.v2(S.hs(A, C), S.hs(B, D))});
    }
    r.record(cg, lhs == rhs, json{{"objects", x}});
    return true;
  });
  const Obj J = S.J(), one = S.one();
  auto cm = r.open("functor.mu", "compat-mu");
  auto cdl = r.open("functor.delta", "compat-delta");
  auto cta = r.open("functor.tau", "compat-tau");
  try {
    if (op) {
      r.record(cm, o({s.h2(one, one), Fm(S.mu), s.v0}) == o({T.hs(s.v0, s.v0), T.mu}), json::object());
      r.record(cdl, o({s.h0, Fm(S.delta), s.v2(J, J)}) == o({T.delta, T.vs(s.h0, s.h0)}), json::object());
      r.record(cta, o({s.h0, Fm(S.tau), s.v0}) == T.tau, json::object());
    } else {
      r.record(cm, o({T.hs(s.v0, s.v0), s.h2(one, one), Fm(S.mu)}) == o({T.mu, s.v0}), json::object());
      r.record(cdl, o({s.h0, Fm(S.delta)}) == o({T.delta, T.vs(s.h0, s.h0), s.v2(J, J)}), json::object());
      r.record(cta, o({s.h0, Fm(S.tau)}) == o({T.tau, s.v0}), json::object());
    }
  } catch (const ShapeError& e) {
    r.abort(cm, e.what());
  }
  return r;
}

StructuredFunctor identity_structured(const DuoidalStructure& d, FunctorMode) {
  StructuredFunctor s;
  s.src = d;
  s.tgt = d;
  s.f = identity_functor(d.h.cat);
  s.h2 = [d](Obj a, Obj b) { return d.id(d.hs(a, b)); };
  s.h0 = d.id(d.J());
  s.v2 = [d](Obj a, Obj b) { return d.id(d.vs(a, b)); };
  s.v0 = d.id(d.one());
  return s;
}

StructuredFunctor bimonoid_functor(const Bimonoid& b) {
  StructuredFunctor s;
  s.src = terminal_duoidal(b.d.c().base());
  s.tgt = b.d;
  const Obj A = b.carrier;
  CatPtr tgt = b.d.h.cat;
  // hom(*,*) is the unit; a scalar goes to that multiple of the identity.
  s.f = VFunctor{s.src.h.cat, tgt, [A](Obj) { return A; },
                 [tgt, A](const Mor& f) { return tgt->from_name(A, A, compose(tgt->name_of(tgt->identity(A)), f.m)); }};
  s.h2 = [b](Obj, Obj) { return b.mult; };
  s.h0 = b.unit;
  s.v2 = [b](Obj, Obj) { return b.comult; };
  s.v0 = b.counit;
  return s;
}

}  // namespace duo
