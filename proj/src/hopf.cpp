#include "duo/hopf.hpp"

#include <string>
#include <vector>

namespace duo {

namespace {

using json = nlohmann::json;

bool invertible(const Category& c, const Mor& f) {
  try {
    return c.is_iso(f);
  } catch (const ShapeError&) {
    return false;
  }
}

}  // namespace

FusionPair build_fusion(const Bimonoid& b) {
  const DuoidalStructure& d = b.d;
  const Category& c = d.c();
  const Obj M = b.carrier, J = d.J();
  Mor vl = compose_all(c, {d.hs(d.id(d.vs(J, M)), b.comult), d.g(J, M, M, M), d.vs(d.h.l(M), b.mult)});
  Mor vr = compose_all(c, {d.hs(d.id(d.vs(M, J)), b.comult), d.g(M, J, M, M), d.vs(b.mult, d.h.l(M))});
  return FusionPair{b, vl, vr};
}

std::pair<Mor, Mor> monad_fusion_instance(const Bimonoid& b, Obj x, Obj y) {
  const DuoidalStructure& d = b.d;
  const Category& c = d.c();
  const Obj M = b.carrier;
  const Obj xm = d.hs(x, M), ym = d.hs(y, M);
  Mor vl = compose_all(c, {d.hs(d.id(d.vs(x, ym)), b.comult), d.g(x, ym, M, M), d.vs(d.id(xm), d.h.a(y, M, M)),
                           d.vs(d.id(xm), d.hs(d.id(y), b.mult))});
  Mor vr = compose_all(c, {d.hs(d.id(d.vs(xm, y)), b.comult), d.g(xm, y, M, M), d.vs(d.h.a(x, M, M), d.id(ym)),
                           d.vs(d.hs(d.id(x), b.mult), d.id(ym))});
  return {vl, vr};
}

Report validate_fusion(const FusionPair& fp) {
  Report r;
  const Bimonoid& b = fp.b;
  const DuoidalStructure& d = b.d;
  const Category& c = d.c();
  const Obj M = b.carrier, J = d.J();
  const Mor lm = d.h.l(M);
  auto cu = r.open("fusion.unit-instance", "fusion-at-unit");
  try {
    auto [vl, vr] = monad_fusion_instance(b, J, J);
    r.record(cu, c.compose(d.vs(lm, lm), vl) == c.compose(fp.vl, d.hs(d.vs(d.id(J), lm), d.id(M))),
             json{{"side", "left"}});
    r.record(cu, c.compose(d.vs(lm, lm), vr) == c.compose(fp.vr, d.hs(d.vs(lm, d.id(J)), d.id(M))),
             json{{"side", "right"}});
  } catch (const ShapeError& e) {
    r.abort(cu, e.what());
  }
  return r;
}

HopfClass classify_hopf(const FusionPair& fp) {
  const Category& c = fp.b.d.c();
  HopfClass h;
  h.left = invertible(c, fp.vl);
  h.right = invertible(c, fp.vr);
  h.hopf = h.left && h.right;
  return h;
}

ClosednessWitness braided_closedness_witness(const Braiding& br) {
  const MonoidalStructure m = br.m;
  ClosednessWitness w;
  w.p = [m, br](Obj W, Obj X, Obj Y) {
    // X(WY) -> (XW)Y -> (WX)Y -> W(XY)
    return compose_all(m.c(), {m.ainv(X, W, Y), m.t(br.c(X, W), m.id(Y)), m.a(W, X, Y)});
  };
  w.q = [m](Obj W, Obj X, Obj Y) { return m.a(W, X, Y); };
  w.s = [m](Obj X, Obj Y) { return m.t(m.id(X), m.l(Y)); };
  w.t = [m, br](Obj X, Obj Y) { return m.c().compose(br.c(Y, X), m.t(m.id(Y), m.r(X))); };
  return w;
}

ClosednessWitness complete_witness(const ClosednessWitness& w, const DuoidalStructure& d) {
  const bool has2 = w.p && w.q, has2p = w.s && w.t;
  if (!has2 && !has2p) throw ShapeError("closedness witness: missing components");
  ClosednessWitness out = w;
  const MonoidalStructure h = d.h, v = d.v;
  const Obj J = d.J();
  if (!has2p) {
    // (ii) with X = J gives the first, with Y = J the second.
    auto p = w.p, q = w.q;
    out.s = [h, v, q, J](Obj X, Obj Y) { return h.o(v.t(h.r(X), v.id(Y)), h.inv(q(X, J, Y))); };
    out.t = [h, v, p, J](Obj X, Obj Y) { return h.o(v.t(v.id(X), h.r(Y)), h.inv(p(Y, X, J))); };
  }
  if (!has2) {
    auto s = w.s, t = w.t;
    out.p = [h, v, t, J](Obj W, Obj X, Obj Y) {
      return compose_all(h.c(), {h.inv(t(X, h.t(W, Y))), h.a(W, Y, v.t(X, J)), h.t(h.id(W), t(X, Y))});
    };
    out.q = [h, v, s, J](Obj W, Obj X, Obj Y) {
      return compose_all(h.c(), {h.inv(s(h.t(W, X), Y)), h.a(W, X, v.t(J, Y)), h.t(h.id(W), s(X, Y))});
    };
  }
  return out;
}

Report check_closedness(const ClosednessWitness& w, const DuoidalStructure& d) {
  const ClosednessWitness full = complete_witness(w, d);
  const bool derived2 = !(w.p && w.q), derived2p = !(w.s && w.t);
  Report r;
  const Category& c = d.c();
  const MonoidalStructure &h = d.h, &v = d.v;
  const Obj J = d.J(), one = d.one();
  const auto objs = c.objects();
  using Mors = std::vector<Mor>;
  using Objs = std::vector<Obj>;

  struct Family {
    std::string id, axiom;
    int arity;
    std::function<Mor(const Objs&)> comp;
    std::function<Obj(const Objs&)> src, tgt;
    std::function<Mor(const Mors&)> F, G;
  };
  auto suffix = [](bool derived) { return derived ? std::string("-derived") : std::string(); };
  const std::vector<Family> fams{
      {"closed.p" + suffix(derived2), "(ii)", 3, [&](const Objs& o) { return full.p(o[0], o[1], o[2]); },
       [&](const Objs& o) { return d.vs(o[1], d.hs(o[0], o[2])); },
       [&](const Objs& o) { return d.hs(o[0], d.vs(o[1], o[2])); },
       [&](const Mors& f) { return d.vs(f[1], d.hs(f[0], f[2])); },
       [&](const Mors& f) { return d.hs(f[0], d.vs(f[1], f[2])); }},
      {"closed.q" + suffix(derived2), "(ii)", 3, [&](const Objs& o) { return full.q(o[0], o[1], o[2]); },
       [&](const Objs& o) { return d.vs(d.hs(o[0], o[1]), o[2]); },
       [&](const Objs& o) { return d.hs(o[0], d.vs(o[1], o[2])); },
       [&](const Mors& f) { return d.vs(d.hs(f[0], f[1]), f[2]); },
       [&](const Mors& f) { return d.hs(f[0], d.vs(f[1], f[2])); }},
      {"closed.s" + suffix(derived2p), "(ii)'", 2, [&](const Objs& o) { return full.s(o[0], o[1]); },
       [&](const Objs& o) { return d.hs(o[0], d.vs(J, o[1])); }, [&](const Objs& o) { return d.vs(o[0], o[1]); },
       [&](const Mors& f) { return d.hs(f[0], d.vs(d.id(J), f[1])); },
       [&](const Mors& f) { return d.vs(f[0], f[1]); }},
      {"closed.t" + suffix(derived2p), "(ii)'", 2, [&](const Objs& o) { return full.t(o[0], o[1]); },
       [&](const Objs& o) { return d.hs(o[1], d.vs(o[0], J)); }, [&](const Objs& o) { return d.vs(o[0], o[1]); },
       [&](const Mors& f) { return d.hs(f[1], d.vs(f[0], d.id(J))); },
       [&](const Mors& f) { return d.vs(f[0], f[1]); }},
  };
  for (const Family& fam : fams) {
    auto ci = r.open(fam.id + ".invertible", fam.axiom);
    bool typed = true;
    for_each_tuple(objs, fam.arity, [&](const Objs& o) {
      try {
        Mor m = fam.comp(o);
        if (m.src != fam.src(o) || m.tgt != fam.tgt(o)) {
          typed = false;
          r.fail(ci, json{{"objects", o}, {"error", "component has the wrong type"}});
        } else {
          r.record(ci, invertible(c, m), json{{"objects", o}});
        }
      } catch (const ShapeError& e) {
        typed = false;
        r.fail(ci, json{{"objects", o}, {"error", e.what()}});
      }
      return true;
    });
    if (!typed) continue;
    auto cn = r.open(fam.id + ".natural", fam.axiom);
    check_naturality(r, cn, c, c, fam.arity, fam.F, fam.G, fam.comp, objs);
  }
  if (!r.ok()) return r;

  // 1*(JoX) -> 1oX -> X and 1*(XoJ) -> Xo1 -> X.
  auto c18 = r.open("closed.one-star", "(18)");
  // Jo(X*1) -> X*(Jo1) -> X*J -> X and (X*1)oJ -> X*(1oJ) -> X*J -> X.
  auto c19 = r.open("closed.star-one", "(19)");
  // Yo(W*1) -> W*(Yo1) -> W*Y and (W*1)oY -> W*(1oY) -> W*Y.
  auto cw = r.open("closed.unit-recovery", "unit-recovery");
  auto left19 = [&](Obj x) {
    return compose_all(c, {full.p(x, J, one), d.hs(d.id(x), v.r(J)), h.r(x)});
  };
  auto right19 = [&](Obj x) {
    return compose_all(c, {full.q(x, one, J), d.hs(d.id(x), v.l(J)), h.r(x)});
  };
  for (Obj x : objs) {
    r.record(c18, invertible(c, c.compose(v.l(x), full.s(one, x))), json{{"objects", {x}}, {"side", "left"}});
    r.record(c18, invertible(c, c.compose(v.r(x), full.t(x, one))), json{{"objects", {x}}, {"side", "right"}});
    r.record(c19, invertible(c, left19(x)), json{{"objects", {x}}, {"side", "left"}});
    r.record(c19, invertible(c, right19(x)), json{{"objects", {x}}, {"side", "right"}});
    for (Obj y : objs) {
      r.record(cw, invertible(c, c.compose(d.hs(d.id(x), v.r(y)), full.p(x, y, one))),
               json{{"objects", {x, y}}, {"side", "left"}});
      r.record(cw, invertible(c, c.compose(d.hs(d.id(x), v.l(y)), full.q(x, one, y))),
               json{{"objects", {x, y}}, {"side", "right"}});
    }
  }
  if (!r.ok()) return r;
  // Jo(X*1) -> X -> (X*1)oJ, natural in X: Jo- and -oJ agree on the image of -*1.
  auto c20 = r.open("closed.j-commutes", "(20)");
  auto swap = [&](const Objs& o) { return c.compose(h.inv(right19(o[0])), left19(o[0])); };
  for (Obj x : objs) r.record(c20, invertible(c, swap({x})), json{{"objects", {x}}});
  check_naturality(
      r, c20, c, c, 1, [&](const Mors& f) { return d.vs(d.id(J), d.hs(f[0], d.id(one))); },
      [&](const Mors& f) { return d.vs(d.hs(f[0], d.id(one)), d.id(J)); }, swap, objs);
  return r;
}

}  // namespace duo
