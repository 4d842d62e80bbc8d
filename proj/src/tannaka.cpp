#include "duo/tannaka.hpp"

#include <algorithm>

namespace duo {

namespace {

using json = nlohmann::json;

// Runs a check body; a ShapeError fails the instance instead of escaping.
void guarded(Report& r, std::size_t c, json where, const std::function<bool()>& body) {
  try {
    r.record(c, body(), where);
  } catch (const ShapeError& e) {
    where["error"] = e.what();
    r.fail(c, where);
  }
}

bool module_laws(const DuoidalStructure& d, const MonoidObj& m, const ModuleObject& x) {
  const MonoidalStructure& h = d.h;
  const Obj A = x.carrier, M = m.carrier;
  const Mor& a = x.action;
  if (a.src != h.t(A, M) || a.tgt != A) return false;
  if (!(h.o(a, h.t(h.id(A), m.unit)) == h.r(A))) return false;
  return h.o(a, h.t(a, h.id(M))) == compose_all(h.c(), {h.a(A, M, M), h.t(h.id(A), m.mult), a});
}

std::shared_ptr<const BaseCat> base_of(const DuoidalStructure& d) {
  return std::dynamic_pointer_cast<const BaseCat>(d.h.cat);
}

// The horizontal structure is the base tensor: J is the unit value and A*B has size |A||B|.
bool horizontal_is_base(const DuoidalStructure& d, Obj m) {
  return base_of(d) && d.J() == 1 && d.hs(m, m) == m * m && d.hs(2, m) == 2 * m;
}

}  // namespace

// ---------------------------------------------------------------- internal homs

std::optional<InternalHomEntry> internal_hom_search(const MonoidalStructure& h, Obj y, Obj z, std::int64_t cap) {
  const Category& c = h.c();
  const auto objs = c.objects();
  for (Obj x : objs) {
    bool sizes = true;
    for (Obj w : objs) sizes = sizes && c.hom(w, x).size == c.hom(h.t(w, y), z).size;
    if (!sizes) continue;
    auto evs = all_morphisms(c, h.t(x, y), z, cap);
    if (!evs) throw BudgetError("internal_hom_search: too many candidate evaluations");
    for (const Mor& ev : *evs) {
      bool universal = true;
      for (Obj w : objs) {
        const BaseValue hw = c.hom(w, x), target = c.hom(h.t(w, y), z);
        BaseMap transpose = map_from_generators(hw, target, [&](std::int64_t i) {
          return c.name_of(c.compose(ev, h.t(c.generator(w, x, i), h.id(y))));
        });
        if (!is_invertible(transpose)) {
          universal = false;
          break;
        }
      }
      if (universal) return InternalHomEntry{y, z, x, ev};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- modules

Report validate_module(const DuoidalStructure& d, const MonoidObj& m, const ModuleObject& x) {
  Report r;
  const MonoidalStructure& h = d.h;
  const Obj A = x.carrier, M = m.carrier;
  const Mor& a = x.action;
  auto ct = r.open("module.typing", "typing");
  r.record(ct, a.src == h.t(A, M) && a.tgt == A, json{{"objects", {A}}});
  if (!r.ok()) return r;
  auto cu = r.open("module.unit", "module-unit");
  guarded(r, cu, json{{"objects", {A}}}, [&] { return h.o(a, h.t(h.id(A), m.unit)) == h.r(A); });
  auto ca = r.open("module.assoc", "module-assoc");
  guarded(r, ca, json{{"objects", {A}}}, [&] {
    return h.o(a, h.t(a, h.id(M))) == compose_all(h.c(), {h.a(A, M, M), h.t(h.id(A), m.mult), a});
  });
  return r;
}

ModuleCategory::ModuleCategory(DuoidalStructure d, MonoidObj m) : d_(std::move(d)), m_(std::move(m)) {}

std::vector<Obj> ModuleCategory::objects() const {
  std::lock_guard<std::mutex> lock(mu_);
  return objects_;
}

void ModuleCategory::set_objects(std::vector<Obj> objs) const {
  std::lock_guard<std::mutex> lock(mu_);
  objects_ = std::move(objs);
}

std::size_t ModuleCategory::registered() const {
  std::lock_guard<std::mutex> lock(mu_);
  return items_.size();
}

Obj ModuleCategory::add(const ModuleObject& x) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (std::size_t i = 0; i < items_.size(); ++i)
      if (*items_[i] == x) return static_cast<Obj>(i);
  }
  if (!module_laws(d_, m_, x)) throw ShapeError("action on object " + std::to_string(x.carrier) + " fails the module laws");
  std::lock_guard<std::mutex> lock(mu_);
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (*items_[i] == x) return static_cast<Obj>(i);
  items_.push_back(std::make_shared<const ModuleObject>(x));
  return static_cast<Obj>(items_.size()) - 1;
}

const ModuleObject& ModuleCategory::module(Obj a) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (a < 0 || a >= static_cast<Obj>(items_.size())) throw ShapeError("unknown module id");
  return *items_[a];
}

std::string ModuleCategory::label(Obj a) const {
  const ModuleObject& x = module(a);
  return d_.c().label(x.carrier) + "#" + std::to_string(a);
}

Obj ModuleCategory::regular() const { return add(ModuleObject{m_.carrier, m_.mult}); }

Mor ModuleCategory::underlying(const Mor& f) const { return Mor{module(f.src).carrier, module(f.tgt).carrier, f.m}; }

std::optional<Mor> ModuleCategory::lift(Obj a, Obj b, const Mor& f) const {
  const ModuleObject &x = module(a), &y = module(b);
  if (f.src != x.carrier || f.tgt != y.carrier) return std::nullopt;
  const MonoidalStructure& h = d_.h;
  if (!(h.o(f, x.action) == h.o(y.action, h.t(f, h.id(m_.carrier))))) return std::nullopt;
  return Mor{a, b, f.m};
}

const ModuleCategory::HomData& ModuleCategory::hom_data(Obj a, Obj b) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = homs_.find({a, b});
    if (it != homs_.end()) return *it->second;
  }
  const ModuleObject &x = module(a), &y = module(b);
  const Category& c = d_.c();
  const MonoidalStructure& h = d_.h;
  const Obj A = x.carrier, B = y.carrier, M = m_.carrier;
  const BaseValue u = c.hom(A, B), t = c.hom(h.t(A, M), B);
  BaseMap pre = map_from_generators(u, t, [&](std::int64_t i) { return c.name_of(c.compose(c.generator(A, B, i), x.action)); });
  BaseMap post = map_from_generators(u, t, [&](std::int64_t i) {
    return c.name_of(c.compose(y.action, h.t(c.generator(A, B, i), h.id(M))));
  });
  Equalizer e = equalizer(pre, post);
  auto data = std::make_shared<const HomData>(HomData{e.value, e.inclusion});
  std::lock_guard<std::mutex> lock(mu_);
  return *homs_.emplace(std::make_pair(a, b), data).first->second;
}

BaseValue ModuleCategory::hom(Obj a, Obj b) const { return hom_data(a, b).value; }
BaseMap ModuleCategory::inclusion(Obj a, Obj b) const { return hom_data(a, b).inclusion; }

Mor ModuleCategory::identity(Obj a) const { return Mor{a, a, d_.c().identity(module(a).carrier).m}; }

Mor ModuleCategory::compose(const Mor& g, const Mor& f) const {
  if (f.tgt != g.src) throw ShapeError("compose: codomain/domain mismatch");
  return Mor{f.src, g.tgt, d_.c().compose(underlying(g), underlying(f)).m};
}

BaseMap ModuleCategory::name_of(const Mor& f) const {
  auto x = preimage(hom_data(f.src, f.tgt).inclusion, d_.c().name_of(underlying(f)));
  if (!x) throw ShapeError("name_of: not a module morphism");
  return *x;
}

Mor ModuleCategory::from_name(Obj a, Obj b, const BaseMap& x) const {
  const HomData& hd = hom_data(a, b);
  Mor f = d_.c().from_name(module(a).carrier, module(b).carrier, duo::compose(hd.inclusion, x));
  return Mor{a, b, f.m};
}

std::optional<Mor> ModuleCategory::inverse(const Mor& f) const {
  auto g = d_.c().inverse(underlying(f));
  if (!g) return std::nullopt;
  return Mor{f.tgt, f.src, g->m};
}

std::vector<ModuleObject> enumerate_modules(const DuoidalStructure& d, const MonoidObj& m,
                                            std::vector<Obj> carriers, std::int64_t cap) {
  if (carriers.empty()) carriers = d.c().objects();
  const Obj M = m.carrier;
  std::vector<ModuleObject> out;
  const bool fast = d.c().base().is_set() && horizontal_is_base(d, M);
  for (Obj A : carriers) {
    if (fast) {
      // The unit law fixes a.e = a; the other columns range over all of A.
      auto base = base_of(d);
      const std::int64_t e = m.unit.m.table.at(0);
      const std::int64_t free = A * (M - 1);
      std::int64_t total = 1;
      for (std::int64_t i = 0; i < free; ++i) {
        total *= A;
        if (total > cap) throw BudgetError("enumerate_modules: too many candidate actions on " + std::to_string(A));
      }
      std::vector<std::int64_t> digits(free, 0);
      for (std::int64_t n = 0; n < total; ++n) {
        std::vector<std::int64_t> t(A * M);
        std::int64_t k = 0;
        for (std::int64_t a = 0; a < A; ++a)
          for (std::int64_t x = 0; x < M; ++x) t[a * M + x] = x == e ? a : digits[k++];
        ModuleObject mo{A, base->lift(function_map(base->value(A * M), base->value(A), std::move(t)))};
        if (module_laws(d, m, mo)) out.push_back(std::move(mo));
        for (std::int64_t i = free - 1; i >= 0; --i) {
          if (++digits[i] < A) break;
          digits[i] = 0;
        }
      }
      continue;
    }
    auto cands = all_morphisms(d.c(), d.hs(A, M), A, cap);
    if (!cands) throw BudgetError("enumerate_modules: too many candidate actions on " + std::to_string(A));
    for (const Mor& a : *cands) {
      ModuleObject mo{A, a};
      try {
        if (module_laws(d, m, mo)) out.push_back(std::move(mo));
      } catch (const ShapeError&) {
      }
    }
  }
  return out;
}

std::shared_ptr<ModuleCategory> build_module_category(const DuoidalStructure& d, const MonoidObj& m,
                                                      std::vector<Obj> carriers, std::int64_t cap) {
  auto mc = std::make_shared<ModuleCategory>(d, m);
  std::vector<Obj> ids;
  try {
    ids.push_back(mc->regular());
  } catch (const ShapeError&) {
    throw ShapeError("the regular action of the monoid fails the module laws");
  }
  for (const auto& x : enumerate_modules(d, m, std::move(carriers), cap)) {
    Obj id = mc->add(x);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  mc->set_objects(ids);
  return mc;
}

VFunctor forgetful(const ModuleCatPtr& mc) {
  return VFunctor{mc, mc->duoidal().h.cat, [mc](Obj a) { return mc->module(a).carrier; },
                  [mc](const Mor& f) { return mc->underlying(f); }};
}

// ---------------------------------------------------------------- mod f and Phi

VFunctor mod_of_morphism(const Mor& f, const ModuleCatPtr& mc_m, const std::shared_ptr<ModuleCategory>& mc_n) {
  if (f.src != mc_n->monoid().carrier || f.tgt != mc_m->monoid().carrier)
    throw ShapeError("mod_of_morphism: f must go from the second monoid to the first");
  const MonoidalStructure h = mc_m->duoidal().h;
  auto on_obj = [mc_m, mc_n, h, f](Obj a) {
    const ModuleObject& x = mc_m->module(a);
    return mc_n->add(ModuleObject{x.carrier, h.o(x.action, h.t(h.id(x.carrier), f))});
  };
  return VFunctor{mc_m, mc_n, on_obj, [on_obj](const Mor& g) { return Mor{on_obj(g.src), on_obj(g.tgt), g.m}; }};
}

Report validate_mod_of_morphism(const VFunctor& modf, const ModuleCatPtr& mc_m, const ModuleCatPtr& mc_n) {
  Report r;
  r.merge(validate_functor(modf), "functor");
  auto ct = r.open("mod.triangle", "triangle");
  const auto objs = mc_m->objects();
  for (Obj a : objs) {
    guarded(r, ct, json{{"objects", {a}}}, [&] { return mc_n->module(modf.on_obj(a)).carrier == mc_m->module(a).carrier; });
    for (Obj b : objs)
      for (std::int64_t i = 0; i < mc_m->generator_count(a, b); ++i)
        guarded(r, ct, json{{"objects", {a, b}}, {"element", i}}, [&] {
          Mor g = mc_m->generator(a, b, i);
          return mc_n->underlying(modf.on_mor(g)) == mc_m->underlying(g);
        });
  }
  return r;
}

MonoidObj monoid_vtensor(const DuoidalStructure& d, const MonoidObj& m, const MonoidObj& n) {
  const Obj M = m.carrier, N = n.carrier;
  return MonoidObj{d.vs(M, N), d.c().compose(d.vs(m.mult, n.mult), d.g(M, N, M, N)),
                   d.c().compose(d.vs(m.unit, n.unit), d.delta)};
}

PhiFunctor phi_monoidal(const ModuleCatPtr& m, const ModuleCatPtr& n, const std::shared_ptr<ModuleCategory>& mn) {
  const DuoidalStructure& d = mn->duoidal();
  MonoidObj want = monoid_vtensor(d, m->monoid(), n->monoid());
  const MonoidObj& have = mn->monoid();
  if (have.carrier != want.carrier || !(have.mult == want.mult) || !(have.unit == want.unit))
    throw ShapeError("phi_monoidal: the target module category is not over the vertical tensor of the monoids");
  const Obj M = m->monoid().carrier, N = n->monoid().carrier;
  PhiFunctor phi{m, n, mn, {}, {}};
  phi.on_obj = [m, n, mn, d, M, N](Obj a, Obj b) {
    const ModuleObject &x = m->module(a), &y = n->module(b);
    Mor act = d.c().compose(d.vs(x.action, y.action), d.g(x.carrier, y.carrier, M, N));
    return mn->add(ModuleObject{d.vs(x.carrier, y.carrier), act});
  };
  phi.on_mor = [m, n, d, on_obj = phi.on_obj](const Mor& f, const Mor& g) {
    return Mor{on_obj(f.src, g.src), on_obj(f.tgt, g.tgt), d.vs(m->underlying(f), n->underlying(g)).m};
  };
  return phi;
}

Report validate_phi(const PhiFunctor& phi) {
  Report r;
  const DuoidalStructure& d = phi.mn->duoidal();
  const auto om = phi.m->objects(), on = phi.n->objects();
  auto co = r.open("phi.objects", "phi-object");
  auto cs = r.open("phi.square", "square");
  auto ce = r.open("phi.equivariant", "phi-equivariant");
  auto ci = r.open("phi.identity", "phi-identity");
  for (Obj a : om)
    for (Obj b : on) {
      json where{{"objects", {a, b}}};
      Obj ab = -1;
      guarded(r, co, where, [&] {
        ab = phi.on_obj(a, b);
        return true;
      });
      if (ab < 0) continue;
      const Obj A = phi.m->module(a).carrier, B = phi.n->module(b).carrier;
      r.record(cs, phi.mn->module(ab).carrier == d.vs(A, B), where);
      guarded(r, ci, where, [&] { return phi.on_mor(phi.m->identity(a), phi.n->identity(b)) == phi.mn->identity(ab); });
      // One variable along each generator, the other fixed.
      for (Obj a2 : om)
        for (std::int64_t i = 0; i < phi.m->generator_count(a, a2); ++i) {
          json w{{"objects", {a, a2, b}}, {"element", i}, {"variable", 0}};
          guarded(r, ce, w, [&] {
            Mor f = phi.on_mor(phi.m->generator(a, a2, i), phi.n->identity(b));
            Mor u = phi.mn->underlying(f);
            r.record(cs, u == d.vs(phi.m->underlying(phi.m->generator(a, a2, i)), d.id(B)), w);
            return phi.mn->lift(f.src, f.tgt, u).has_value();
          });
        }
      for (Obj b2 : on)
        for (std::int64_t i = 0; i < phi.n->generator_count(b, b2); ++i) {
          json w{{"objects", {a, b, b2}}, {"element", i}, {"variable", 1}};
          guarded(r, ce, w, [&] {
            Mor f = phi.on_mor(phi.m->identity(a), phi.n->generator(b, b2, i));
            Mor u = phi.mn->underlying(f);
            r.record(cs, u == d.vs(d.id(A), phi.n->underlying(phi.n->generator(b, b2, i))), w);
            return phi.mn->lift(f.src, f.tgt, u).has_value();
          });
        }
    }
  return r;
}

// ---------------------------------------------------------------- end of the representable

EndResult end_of_representable(const ModuleCategory& mc) {
  const DuoidalStructure& d = mc.duoidal();
  const MonoidObj& m = mc.monoid();
  const Obj M = m.carrier;
  if (!horizontal_is_base(d, M)) throw ShapeError("end_of_representable needs the base tensor as horizontal structure");
  auto base = base_of(d);
  Obj K = 0;
  try {
    K = mc.regular();
  } catch (const ShapeError&) {
    throw ShapeError("representing object not found: the regular action fails the module laws");
  }
  EndResult out;
  out.carrier = mc.hom(K, K);
  const BaseValue& E = out.carrier;
  auto elem = [&](std::int64_t i) { return mc.from_name(K, K, point(E, i)); };
  out.mult = map_from_generators(tensor(E, E), E, [&](std::int64_t k) {
    return mc.name_of(mc.compose(elem(k / E.size), elem(k % E.size)));
  });
  out.unit = mc.name_of(mc.identity(K));
  const BaseValue mv = base->value(M);
  out.counit = map_from_generators(E, mv, [&](std::int64_t i) {
    BaseMap p = duo::compose(mc.underlying(elem(i)).m, m.unit.m);
    p.src = unit_value(mv.kind);
    return p;
  });
  auto ci = out.report.open("end.counit", "counit-invertible");
  auto inv = is_invertible(out.counit);
  out.report.record(ci, inv.has_value(), json{{"carrier", E.size}, {"monoid", M}});
  if (!inv) return out;
  BaseMap mult = duo::compose(out.counit, duo::compose(out.mult, tensor(*inv, *inv)));
  BaseMap unit = duo::compose(out.counit, out.unit);
  unit.src = base->value(1);
  mult.src = base->value(M * M);
  out.recovered = MonoidObj{M, base->lift(mult), base->lift(unit)};
  out.report.merge(validate_monoid(d.h, out.recovered), "end");
  auto ce = out.report.open("end.equals", "end-equals-input");
  out.report.record(ce, out.recovered.mult == m.mult && out.recovered.unit == m.unit, json{{"monoid", M}});
  return out;
}

// ---------------------------------------------------------------- lifting bimonoids

LiftedMonoidal lift_bimonoid_to_monoidal(const Bimonoid& b, const std::shared_ptr<ModuleCategory>& mc) {
  const MonoidObj& mo = mc->monoid();
  if (mo.carrier != b.carrier || !(mo.mult == b.mult) || !(mo.unit == b.unit))
    throw ShapeError("lift: module category is over a different monoid");
  if (!validate_bimonoid(b).ok()) throw ShapeError("lift: the bimonoid axioms fail");
  const DuoidalStructure d = b.d;
  const Obj M = b.carrier;
  const Mor delta = b.comult;
  LiftedMonoidal l;
  l.mc = mc;
  MonoidalStructure& m = l.m;
  m.cat = mc;
  m.name = "lifted";
  m.tensor_obj = [mc, d, M, delta](Obj a, Obj c) {
    const ModuleObject &x = mc->module(a), &y = mc->module(c);
    const Obj A = x.carrier, B = y.carrier;
    Mor act = compose_all(d.c(), {d.hs(d.id(d.vs(A, B)), delta), d.g(A, B, M, M), d.vs(x.action, y.action)});
    return mc->add(ModuleObject{d.vs(A, B), act});
  };
  m.unit = mc->add(ModuleObject{d.one(), d.c().compose(d.mu, d.hs(d.id(d.one()), b.counit))});
  auto t = m.tensor_obj;
  m.tensor_mor = [mc, d, t](const Mor& f, const Mor& g) {
    return Mor{t(f.src, g.src), t(f.tgt, g.tgt), d.vs(mc->underlying(f), mc->underlying(g)).m};
  };
  m.assoc = [mc, d, t](Obj a, Obj b2, Obj c) {
    const Obj A = mc->module(a).carrier, B = mc->module(b2).carrier, C = mc->module(c).carrier;
    return Mor{t(t(a, b2), c), t(a, t(b2, c)), d.v.a(A, B, C).m};
  };
  const Obj I = m.unit;
  m.lunit = [mc, d, t, I](Obj a) { return Mor{t(I, a), a, d.v.l(mc->module(a).carrier).m}; };
  m.runit = [mc, d, t, I](Obj a) { return Mor{t(a, I), a, d.v.r(mc->module(a).carrier).m}; };
  l.comp2 = [mc, d](Obj a, Obj c) { return d.id(d.vs(mc->module(a).carrier, mc->module(c).carrier)); };
  l.comp0 = d.id(d.one());
  return l;
}

Report validate_lifted(const LiftedMonoidal& l) {
  Report r;
  r.merge(validate_monoidal(l.m), "lifted");
  if (!r.ok()) return r;
  const ModuleCategory& mc = *l.mc;
  const DuoidalStructure& d = mc.duoidal();
  const Category& c = d.c();
  const MonoidalStructure& v = d.v;
  const auto objs = mc.objects();
  auto U = [&](Obj a) { return mc.module(a).carrier; };
  auto Um = [&](const Mor& f) { return mc.underlying(f); };
  auto phi = [&](Obj a, Obj b) { return l.comp2(a, b); };
  const Obj I = l.m.unit;

  auto ci = r.open("lifted.comparison-invertible", "comparison-invertible");
  guarded(r, ci, json{{"objects", {I}}, {"component", "unit"}}, [&] {
    return l.comp0.src == U(I) && l.comp0.tgt == d.one() && c.is_iso(l.comp0);
  });
  for_each_tuple(objs, 2, [&](const std::vector<Obj>& o) {
    guarded(r, ci, json{{"objects", o}}, [&] {
      Mor p = phi(o[0], o[1]);
      return p.src == U(l.m.t(o[0], o[1])) && p.tgt == v.t(U(o[0]), U(o[1])) && c.is_iso(p);
    });
    return true;
  });
  if (!r.ok()) return r;

  auto cn = r.open("lifted.comparison-natural", "comparison-natural");
  for_each_tuple(objs, 3, [&](const std::vector<Obj>& o) {
    const Obj a = o[0], a2 = o[1], b = o[2];
    for (std::int64_t i = 0; i < mc.generator_count(a, a2); ++i) {
      const Mor f = mc.generator(a, a2, i);
      guarded(r, cn, json{{"objects", o}, {"element", i}, {"variable", 0}}, [&] {
        return c.compose(phi(a2, b), Um(l.m.t(f, mc.identity(b)))) ==
               c.compose(v.t(Um(f), c.identity(U(b))), phi(a, b));
      });
      guarded(r, cn, json{{"objects", o}, {"element", i}, {"variable", 1}}, [&] {
        return c.compose(phi(b, a2), Um(l.m.t(mc.identity(b), f))) ==
               c.compose(v.t(c.identity(U(b)), Um(f)), phi(b, a));
      });
    }
    return true;
  });

  auto ca = r.open("lifted.comparison-assoc", "comparison-assoc");
  for_each_tuple(objs, 3, [&](const std::vector<Obj>& o) {
    const Obj a = o[0], b = o[1], e = o[2];
    guarded(r, ca, json{{"objects", o}}, [&] {
      Mor lhs = compose_all(c, {phi(l.m.t(a, b), e), v.t(phi(a, b), v.id(U(e))), v.a(U(a), U(b), U(e))});
      Mor rhs = compose_all(c, {Um(l.m.a(a, b, e)), phi(a, l.m.t(b, e)), v.t(v.id(U(a)), phi(b, e))});
      return lhs == rhs;
    });
    return true;
  });
  auto cu = r.open("lifted.comparison-unit", "comparison-unit");
  for (Obj a : objs) {
    guarded(r, cu, json{{"objects", {a}}, {"side", "left"}}, [&] {
      return compose_all(c, {phi(I, a), v.t(l.comp0, v.id(U(a))), v.l(U(a))}) == Um(l.m.l(a));
    });
    guarded(r, cu, json{{"objects", {a}}, {"side", "right"}}, [&] {
      return compose_all(c, {phi(a, I), v.t(v.id(U(a)), l.comp0), v.r(U(a))}) == Um(l.m.r(a));
    });
  }
  return r;
}

Bimonoid extract_bimonoid_from_monoidal(const LiftedMonoidal& l) {
  const ModuleCategory& mc = *l.mc;
  const DuoidalStructure& d = mc.duoidal();
  const Category& c = d.c();
  const MonoidObj& mo = mc.monoid();
  const Obj M = mo.carrier;
  const Obj K = mc.regular();
  const Obj T = l.m.t(K, K), I = l.m.unit;
  const Mor phi = l.comp2(K, K);
  const Mor phi_inv = d.v.inv(phi);
  const Mor comp0_inv = d.v.inv(l.comp0);
  // J -> JoJ -> MoM, the unit of the vertical tensor of monoids, carried into U(K (x) K).
  const Mor x = compose_all(c, {d.delta, d.vs(mo.unit, mo.unit), phi_inv});
  const Mor delta = compose_all(c, {d.h.linv(M), d.hs(x, d.id(M)), mc.module(T).action, phi});
  const Mor y = c.compose(comp0_inv, d.tau);
  const Mor eps = compose_all(c, {d.h.linv(M), d.hs(y, d.id(M)), mc.module(I).action, l.comp0});
  return Bimonoid{d, M, mo.mult, mo.unit, delta, eps};
}

LiftedMonoidal reverse_lift(const LiftedMonoidal& l, const Braiding& br) {
  LiftedMonoidal out;
  out.mc = l.mc;
  const MonoidalStructure m = l.m;
  out.m = m;
  out.m.name = "reversed";
  out.m.tensor_obj = [m](Obj a, Obj b) { return m.t(b, a); };
  out.m.tensor_mor = [m](const Mor& f, const Mor& g) { return m.t(g, f); };
  out.m.assoc = [m](Obj a, Obj b, Obj c) { return m.ainv(c, b, a); };
  out.m.lunit = [m](Obj a) { return m.r(a); };
  out.m.runit = [m](Obj a) { return m.l(a); };
  auto mc = l.mc;
  auto comp2 = l.comp2;
  out.comp2 = [mc, comp2, br](Obj a, Obj b) {
    return mc->duoidal().c().compose(br.c(mc->module(b).carrier, mc->module(a).carrier), comp2(b, a));
  };
  out.comp0 = l.comp0;
  return out;
}

LiftComparison compare_lifts(const LiftedMonoidal& a, const LiftedMonoidal& b) {
  if (a.mc != b.mc) throw ShapeError("compare_lifts: different module categories");
  auto mc = a.mc;
  const DuoidalStructure& d = mc->duoidal();
  const Category& c = d.c();
  LiftComparison out;
  auto A = a, B = b;
  out.theta = [mc, A, B](Obj x, Obj y) {
    const DuoidalStructure& dd = mc->duoidal();
    Mor u = dd.c().compose(dd.v.inv(B.comp2(x, y)), A.comp2(x, y));
    auto t = mc->lift(A.m.t(x, y), B.m.t(x, y), u);
    if (!t) throw ShapeError("compare_lifts: the U-compatible comparison is not equivariant");
    return *t;
  };
  Report& r = out.report;
  auto ce = r.open("compare.equivariant", "theta-equivariant");
  auto ci = r.open("compare.invertible", "theta-invertible");
  {
    Mor u = c.compose(d.v.inv(b.comp0), a.comp0);
    auto t = mc->lift(a.m.unit, b.m.unit, u);
    r.record(ce, t.has_value(), json{{"component", "unit"}});
    if (!t) return out;
    out.theta0 = *t;
    r.record(ci, mc->is_iso(out.theta0), json{{"component", "unit"}});
  }
  const auto objs = mc->objects();
  for_each_tuple(objs, 2, [&](const std::vector<Obj>& o) {
    guarded(r, ce, json{{"objects", o}}, [&] {
      Mor t = out.theta(o[0], o[1]);
      r.record(ci, mc->is_iso(t), json{{"objects", o}});
      return true;
    });
    return true;
  });
  if (!r.ok()) return out;
  const auto& th = out.theta;
  auto cn = r.open("compare.natural", "theta-natural");
  for_each_tuple(objs, 3, [&](const std::vector<Obj>& o) {
    const Obj x = o[0], x2 = o[1], y = o[2];
    for (std::int64_t i = 0; i < mc->generator_count(x, x2); ++i) {
      const Mor f = mc->generator(x, x2, i);
      const Mor iy = mc->identity(y);
      guarded(r, cn, json{{"objects", o}, {"element", i}, {"variable", 0}}, [&] {
        return mc->compose(th(x2, y), a.m.t(f, iy)) == mc->compose(b.m.t(f, iy), th(x, y));
      });
      guarded(r, cn, json{{"objects", o}, {"element", i}, {"variable", 1}}, [&] {
        return mc->compose(th(y, x2), a.m.t(iy, f)) == mc->compose(b.m.t(iy, f), th(y, x));
      });
    }
    return true;
  });
  auto ca = r.open("compare.assoc", "theta-assoc");
  for_each_tuple(objs, 3, [&](const std::vector<Obj>& o) {
    const Obj x = o[0], y = o[1], z = o[2];
    guarded(r, ca, json{{"objects", o}}, [&] {
      Mor lhs = compose_all(*mc, {a.m.t(th(x, y), mc->identity(z)), th(b.m.t(x, y), z), b.m.a(x, y, z)});
      Mor rhs = compose_all(*mc, {a.m.a(x, y, z), a.m.t(mc->identity(x), th(y, z)), th(x, b.m.t(y, z))});
      return lhs == rhs;
    });
    return true;
  });
  auto cu = r.open("compare.unit", "theta-unit");
  for (Obj x : objs) {
    guarded(r, cu, json{{"objects", {x}}, {"side", "left"}}, [&] {
      return compose_all(*mc, {a.m.t(out.theta0, mc->identity(x)), th(b.m.unit, x), b.m.l(x)}) == a.m.l(x);
    });
    guarded(r, cu, json{{"objects", {x}}, {"side", "right"}}, [&] {
      return compose_all(*mc, {a.m.t(mc->identity(x), out.theta0), th(x, b.m.unit), b.m.r(x)}) == a.m.r(x);
    });
  }
  return out;
}

}  // namespace duo
