#include "duo/warp.hpp"

#include <string>
#include <vector>

namespace duo {

namespace {

using json = nlohmann::json;
using Mors = std::vector<Mor>;
using Objs = std::vector<Obj>;

bool invertible(const Category& c, const Mor& f) {
  try {
    return c.is_iso(f);
  } catch (const ShapeError&) {
    return false;
  }
}

void guarded(Report& r, std::size_t c, json where, const std::function<bool()>& body) {
  try {
    r.record(c, body(), where);
  } catch (const ShapeError& e) {
    where["error"] = e.what();
    r.fail(c, where);
  }
}

// (W*1)oY -> W*(1oY) -> W*Y
std::function<Mor(Obj, Obj)> unit_recovery(const DuoidalStructure& d, const ClosednessWitness& full) {
  const MonoidalStructure h = d.h, v = d.v;
  const Obj one = d.one();
  auto q = full.q;
  return [h, v, q, one](Obj w, Obj y) { return h.o(h.t(h.id(w), v.l(y)), q(w, one, y)); };
}

}  // namespace

Report validate_warping(const WarpingData& w) {
  Report r;
  const MonoidalStructure& m = w.a;
  const Category& c = m.c();
  const auto objs = c.objects();
  auto T = [&](Obj a) { return w.t.on_obj(a); };
  auto Tm = [&](const Mor& f) { return w.t.on_mor(f); };
  const Obj K = w.k, I = m.unit;

  auto ct = r.open("warping.typing", "typing");
  for_each_tuple(objs, 2, [&](const Objs& o) {
    guarded(r, ct, json{{"objects", o}, {"component", "v"}}, [&] {
      Mor x = w.v(o[0], o[1]);
      return x.src == T(m.t(T(o[0]), o[1])) && x.tgt == m.t(T(o[0]), T(o[1]));
    });
    return true;
  });
  guarded(r, ct, json{{"component", "v0"}}, [&] { return w.v0.src == T(K) && w.v0.tgt == I; });
  for (Obj a : objs)
    guarded(r, ct, json{{"objects", {a}}, {"component", "k"}}, [&] {
      Mor x = w.kappa(a);
      return x.src == m.t(T(a), K) && x.tgt == a;
    });
  if (!r.ok()) return r;
  r.merge(validate_functor(w.t), "T");

  auto ci = r.open("warping.invertible", "invertible");
  for_each_tuple(objs, 2, [&](const Objs& o) {
    r.record(ci, invertible(c, w.v(o[0], o[1])), json{{"objects", o}, {"component", "v"}});
    return true;
  });
  r.record(ci, invertible(c, w.v0), json{{"component", "v0"}});
  for (Obj a : objs) r.record(ci, invertible(c, w.kappa(a)), json{{"objects", {a}}, {"component", "k"}});

  auto cn = r.open("warping.natural", "natural");
  check_naturality(
      r, cn, c, c, 2, [&](const Mors& f) { return Tm(m.t(Tm(f[0]), f[1])); },
      [&](const Mors& f) { return m.t(Tm(f[0]), Tm(f[1])); }, [&](const Objs& o) { return w.v(o[0], o[1]); },
      objs);
  check_naturality(
      r, cn, c, c, 1, [&](const Mors& f) { return m.t(Tm(f[0]), m.id(K)); }, [&](const Mors& f) { return f[0]; },
      [&](const Objs& o) { return w.kappa(o[0]); }, objs);

  auto c21 = r.open("warping.assoc", "(21)");
  for_each_tuple(objs, 3, [&](const Objs& o) {
    const Obj A = o[0], B = o[1], C = o[2];
    guarded(r, c21, json{{"objects", o}}, [&] {
      const Obj ta = T(A), tb = T(B), tc = T(C);
      Mor lhs = compose_all(c, {w.v(m.t(ta, B), C), m.t(w.v(A, B), m.id(tc)), m.a(ta, tb, tc)});
      Mor rhs = compose_all(c, {Tm(m.t(w.v(A, B), m.id(C))), Tm(m.a(ta, tb, C)), w.v(A, m.t(tb, C)),
                                m.t(m.id(ta), w.v(B, C))});
      return lhs == rhs;
    });
    return true;
  });
  auto c22 = r.open("warping.unit", "(22)");
  for (Obj a : objs)
    guarded(r, c22, json{{"objects", {a}}}, [&] {
      const Obj ta = T(a);
      return compose_all(c, {w.v(a, K), m.t(m.id(ta), w.v0), m.r(ta)}) == Tm(w.kappa(a));
    });
  return r;
}

MonoidalStructure warp(const WarpingData& w) {
  const MonoidalStructure m = w.a;
  const VFunctor t = w.t;
  MonoidalStructure out;
  out.cat = m.cat;
  out.name = "warp(" + m.name + ")";
  out.tensor_obj = [m, t](Obj a, Obj b) { return m.t(t.on_obj(a), b); };
  out.tensor_mor = [m, t](const Mor& f, const Mor& g) { return m.t(t.on_mor(f), g); };
  out.unit = w.k;
  auto v = w.v;
  out.assoc = [m, t, v](Obj a, Obj b, Obj c) {
    return m.o(m.a(t.on_obj(a), t.on_obj(b), c), m.t(v(a, b), m.id(c)));
  };
  const Mor v0 = w.v0;
  out.lunit = [m, v0](Obj b) { return m.o(m.l(b), m.t(v0, m.id(b))); };
  out.runit = w.kappa;
  return out;
}

WarpingData identity_warping(const MonoidalStructure& m) {
  WarpingData w;
  w.a = m;
  w.t = identity_functor(m.cat);
  w.k = m.unit;
  w.v = [m](Obj a, Obj b) { return m.id(m.t(a, b)); };
  w.v0 = m.id(m.unit);
  w.kappa = [m](Obj a) { return m.r(a); };
  return w;
}

WarpingData warping_from_v(const MonoidalStructure& m, const VFunctor& t, std::function<Mor(Obj, Obj)> v,
                           std::int64_t cap) {
  const Category& c = m.c();
  WarpingData w;
  w.a = m;
  w.t = t;
  w.v = v;
  bool found = false;
  for (Obj k : c.objects()) {
    auto isos = all_morphisms(c, t.on_obj(k), m.unit, cap);
    if (!isos) continue;
    for (const Mor& f : *isos)
      if (invertible(c, f)) {
        w.k = k;
        w.v0 = f;
        found = true;
        break;
      }
    if (found) break;
  }
  if (!found) throw ShapeError("warping_from_v: no suite object K with TK isomorphic to the unit");
  const Obj K = w.k;
  const Mor v0 = w.v0;
  // k_A is determined by (22) since T is faithful on isomorphisms.
  w.kappa = [m, t, v, K, v0, cap](Obj a) {
    const Category& c = m.c();
    const Obj ta = t.on_obj(a);
    const Mor target = compose_all(c, {v(a, K), m.t(m.id(ta), v0), m.r(ta)});
    auto cands = all_morphisms(c, m.t(ta, K), a, cap);
    if (!cands) throw BudgetError("warping_from_v: too many candidates for k");
    for (const Mor& f : *cands)
      if (t.on_mor(f) == target) return f;
    throw ShapeError("warping_from_v: no k_A with T(k_A) given by (22) at " + c.label(a));
  };
  return w;
}

WarpingData shift_warping(const MonoidalStructure& zn) {
  auto fc = std::dynamic_pointer_cast<const FinCat>(zn.cat);
  if (!fc) throw ShapeError("shift_warping: needs a discrete table category");
  const int n = fc->size();
  std::vector<Obj> shift(n);
  for (int a = 0; a < n; ++a) shift[a] = zn.t(a, n > 1 ? 1 : 0);
  WarpingData w;
  w.a = zn;
  w.t = discrete_functor(fc, fc, shift);
  // K with TK = I, i.e. K = -1.
  w.k = -1;
  for (int a = 0; a < n && w.k < 0; ++a)
    if (shift[a] == zn.unit) w.k = a;
  if (w.k < 0) throw ShapeError("shift_warping: the shift does not reach the unit");
  w.v = [zn, shift](Obj a, Obj b) { return zn.id(zn.t(shift[a], shift[b])); };
  w.v0 = zn.id(zn.unit);
  w.kappa = [zn](Obj a) { return zn.id(a); };
  return w;
}

WarpingData warping_from_duoidal(const DuoidalStructure& d, const ClosednessWitness& wit) {
  Report pre = check_closedness(wit, d);
  if (!pre.ok()) throw ShapeError("warping_from_duoidal: closedness witness invalid");
  const ClosednessWitness full = complete_witness(wit, d);
  const MonoidalStructure h = d.h, v = d.v;
  const Obj one = d.one(), J = d.J();
  auto u = unit_recovery(d, full);
  WarpingData w;
  w.a = v;
  w.t = VFunctor{d.h.cat, d.h.cat, [h, one](Obj a) { return h.t(a, one); },
                 [h, one](const Mor& f) { return h.t(f, h.id(one)); }};
  w.k = J;
  // ((A*1)oB)*1 -> (A*B)*1 -> A*(B*1) -> (A*1)o(B*1)
  w.v = [h, u, one](Obj a, Obj b) {
    return compose_all(h.c(), {h.t(u(a, b), h.id(one)), h.a(a, b, one), h.inv(u(a, h.t(b, one)))});
  };
  w.v0 = h.l(one);
  // (A*1)oJ -> A*J -> A
  w.kappa = [h, u, J](Obj a) { return h.o(h.r(a), u(a, J)); };
  return w;
}

Report compare_warp_to_horizontal(const DuoidalStructure& d, const ClosednessWitness& wit) {
  Report r;
  const WarpingData w = warping_from_duoidal(d, wit);
  const MonoidalStructure box = warp(w), &h = d.h;
  const Category& c = d.c();
  auto u = unit_recovery(d, complete_witness(wit, d));
  const auto objs = c.objects();
  auto ci = r.open("warp-vs-h.invertible", "invertible");
  for_each_tuple(objs, 2, [&](const Objs& o) {
    guarded(r, ci, json{{"objects", o}}, [&] {
      Mor x = u(o[0], o[1]);
      return x.src == box.t(o[0], o[1]) && x.tgt == h.t(o[0], o[1]) && invertible(c, x);
    });
    return true;
  });
  r.record(ci, box.unit == h.unit, json{{"component", "unit"}});
  if (!r.ok()) return r;
  auto cn = r.open("warp-vs-h.natural", "natural");
  check_naturality(
      r, cn, c, c, 2, [&](const Mors& f) { return box.t(f[0], f[1]); },
      [&](const Mors& f) { return h.t(f[0], f[1]); }, [&](const Objs& o) { return u(o[0], o[1]); }, objs);
  auto ca = r.open("warp-vs-h.assoc", "monoidal-assoc");
  for_each_tuple(objs, 3, [&](const Objs& o) {
    const Obj A = o[0], B = o[1], C = o[2];
    guarded(r, ca, json{{"objects", o}}, [&] {
      Mor lhs = compose_all(c, {box.a(A, B, C), u(A, box.t(B, C)), h.t(h.id(A), u(B, C))});
      Mor rhs = compose_all(c, {u(box.t(A, B), C), h.t(u(A, B), h.id(C)), h.a(A, B, C)});
      return lhs == rhs;
    });
    return true;
  });
  auto cu = r.open("warp-vs-h.unit", "monoidal-unit");
  for (Obj a : objs) {
    guarded(r, cu, json{{"objects", {a}}, {"side", "left"}},
            [&] { return c.compose(h.l(a), u(box.unit, a)) == box.l(a); });
    guarded(r, cu, json{{"objects", {a}}, {"side", "right"}},
            [&] { return c.compose(h.r(a), u(a, box.unit)) == box.r(a); });
  }
  return r;
}

WarpMonoidality trivial_monoidality(const WarpingData& w) {
  const MonoidalStructure m = w.a;
  WarpMonoidality md;
  md.t2 = [m](Obj a, Obj b) { return m.id(m.t(a, b)); };
  md.t0 = m.id(m.unit);
  md.k = unit_monoid(m);
  if (md.k.carrier != w.k) throw ShapeError("trivial_monoidality: K is not the unit");
  return md;
}

Report validate_warp_monoidality(const Braiding& br, const WarpingData& w, const WarpMonoidality& md) {
  Report r;
  const MonoidalStructure& m = w.a;
  const Category& c = m.c();
  const auto objs = c.objects();
  const Obj I = m.unit, K = w.k;
  auto T = [&](Obj a) { return w.t.on_obj(a); };
  auto Tm = [&](const Mor& f) { return w.t.on_mor(f); };
  const DuoidalStructure mf = from_braided(br);
  auto four = [&](Obj a, Obj b, Obj x, Obj y) { return mf.g(a, b, x, y); };
  const Mor linvI = m.linv(I);

  auto ct = r.open("warp-monoidal.T", "T-monoidal");
  for_each_tuple(objs, 3, [&](const Objs& o) {
    const Obj A = o[0], B = o[1], C = o[2];
    guarded(r, ct, json{{"objects", o}}, [&] {
      Mor lhs = compose_all(c, {m.t(md.t2(A, B), m.id(T(C))), md.t2(m.t(A, B), C), Tm(m.a(A, B, C))});
      Mor rhs = compose_all(c, {m.a(T(A), T(B), T(C)), m.t(m.id(T(A)), md.t2(B, C)), md.t2(A, m.t(B, C))});
      return lhs == rhs;
    });
    return true;
  });
  for (Obj a : objs) {
    guarded(r, ct, json{{"objects", {a}}, {"side", "left"}}, [&] {
      return compose_all(c, {m.t(md.t0, m.id(T(a))), md.t2(I, a), Tm(m.l(a))}) == m.l(T(a));
    });
    guarded(r, ct, json{{"objects", {a}}, {"side", "right"}}, [&] {
      return compose_all(c, {m.t(m.id(T(a)), md.t0), md.t2(a, I), Tm(m.r(a))}) == m.r(T(a));
    });
  }
  check_naturality(
      r, ct, c, c, 2, [&](const Mors& f) { return m.t(Tm(f[0]), Tm(f[1])); },
      [&](const Mors& f) { return Tm(m.t(f[0], f[1])); }, [&](const Objs& o) { return md.t2(o[0], o[1]); }, objs);

  auto ck = r.open("warp-monoidal.K", "K-monoid");
  r.record(ck, md.k.carrier == K, json{{"component", "carrier"}});
  Report km = validate_monoid(m, md.k);
  for (const auto& ch : km.checks()) r.record(ck, ch.passed(), json{{"law", ch.axiom}});
  if (!r.ok()) return r;

  // T(TA(x)B) and TA(x)TB as monoidal functors of two variables.
  auto f1 = [&](Obj a, Obj b, Obj x, Obj y) {
    return compose_all(c, {md.t2(m.t(T(a), b), m.t(T(x), y)), Tm(four(T(a), b, T(x), y)),
                           Tm(m.t(md.t2(a, x), m.id(m.t(b, y))))});
  };
  auto f2 = [&](Obj a, Obj b, Obj x, Obj y) {
    return c.compose(m.t(md.t2(a, x), md.t2(b, y)), four(T(a), T(b), T(x), T(y)));
  };
  const Mor f1_0 = compose_all(c, {md.t0, Tm(linvI), Tm(m.t(md.t0, m.id(I)))});
  const Mor f2_0 = c.compose(m.t(md.t0, md.t0), linvI);
  auto cv = r.open("warp-monoidal.v", "v-monoidal");
  for_each_tuple(objs, 4, [&](const Objs& o) {
    guarded(r, cv, json{{"objects", o}}, [&] {
      return c.compose(w.v(m.t(o[0], o[2]), m.t(o[1], o[3])), f1(o[0], o[1], o[2], o[3])) ==
             c.compose(f2(o[0], o[1], o[2], o[3]), m.t(w.v(o[0], o[1]), w.v(o[2], o[3])));
    });
    return true;
  });
  guarded(r, cv, json{{"component", "unit"}}, [&] { return c.compose(w.v(I, I), f1_0) == f2_0; });

  auto c0 = r.open("warp-monoidal.v0", "v0-monoid");
  guarded(r, c0, json{{"component", "mult"}}, [&] {
    return compose_all(c, {md.t2(K, K), Tm(md.k.mult), w.v0}) == c.compose(m.l(I), m.t(w.v0, w.v0));
  });
  guarded(r, c0, json{{"component", "unit"}},
          [&] { return compose_all(c, {md.t0, Tm(md.k.unit), w.v0}) == m.id(I); });

  auto ck2 = r.open("warp-monoidal.k", "k-monoidal");
  for_each_tuple(objs, 2, [&](const Objs& o) {
    const Obj a = o[0], x = o[1];
    guarded(r, ck2, json{{"objects", o}}, [&] {
      Mor g1 = c.compose(m.t(md.t2(a, x), md.k.mult), four(T(a), K, T(x), K));
      return c.compose(w.kappa(m.t(a, x)), g1) == m.t(w.kappa(a), w.kappa(x));
    });
    return true;
  });
  guarded(r, ck2, json{{"component", "unit"}}, [&] {
    return compose_all(c, {linvI, m.t(md.t0, md.k.unit), w.kappa(I)}) == m.id(I);
  });
  return r;
}

DuoidalStructure duoidal_from_warped_lax_braided(const Braiding& br, const WarpingData& w,
                                                 const WarpMonoidality& md) {
  Report pre = validate_warping(w);
  if (!pre.ok()) throw ShapeError("duoidal_from_warped_lax_braided: not a warping");
  Report mono = validate_warp_monoidality(br, w, md);
  if (!mono.ok()) {
    std::string which;
    for (const auto& a : mono.failed_axioms()) which += (which.empty() ? "" : ", ") + a;
    throw ShapeError("duoidal_from_warped_lax_braided: warping data not monoidal (" + which + ")");
  }
  const MonoidalStructure m = w.a;
  const DuoidalStructure mf = from_braided(br);
  DuoidalStructure d;
  d.h = m;
  d.v = warp(w);
  const VFunctor t = w.t;
  auto t2 = md.t2;
  auto four = mf.gamma;
  // (TA(x)B)(x)(TC(x)D) -> (TA(x)TC)(x)(B(x)D) -> T(A(x)C)(x)(B(x)D)
  d.gamma = [m, t, t2, four](Obj a, Obj b, Obj c, Obj e) {
    return m.o(m.t(t2(a, c), m.id(m.t(b, e))), four(t.on_obj(a), b, t.on_obj(c), e));
  };
  d.mu = md.k.mult;
  d.tau = md.k.unit;
  d.delta = m.o(m.rinv(t.on_obj(m.unit)), md.t0);
  d.name = "warped(" + m.name + ")";
  return d;
}

}  // namespace duo
