#include "duo/dayconv.hpp"

#include <tuple>

namespace duo {

namespace {

using json = nlohmann::json;

BaseMap empty_or_zero(const BaseValue& x, const BaseValue& y) {
  if (x.kind.is_set()) {
    if (x.size != 0) throw ShapeError("no map out of a nonempty set into this target");
    return BaseMap{x, y, {}};
  }
  return zero_map(x, y);
}

// Basis index k of a(x)(b(x)c) as (i, j, l).
std::tuple<std::int64_t, std::int64_t, std::int64_t> split3(std::int64_t k, std::int64_t nb, std::int64_t nc) {
  return {k / (nb * nc), (k / nc) % nb, k % nc};
}

const FinCat& carrier_of(const ProduoidalData& p) {
  if (!p.carrier) throw ShapeError("coends need a table carrier");
  return *p.carrier;
}

// ∫^{X,Y} co(X,Y) (x) (l(X) (x) r(Y)) over carrier (x) carrier.
CoendResult pair_coend(const FinCat& c, const std::function<BaseValue(Obj, Obj)>& co,
                       const std::function<BaseMap(const Mor&, const Mor&)>& co_act,
                       const std::function<BaseValue(Obj)>& l, const std::function<BaseMap(const Mor&)>& l_act,
                       const std::function<BaseValue(Obj)>& r, const std::function<BaseMap(const Mor&)>& r_act) {
  const Obj n = c.size();
  CoendDiagram d;
  d.kind = c.base();
  d.n = static_cast<int>(n * n);
  d.gens = [&c, n](Obj x, Obj y) { return c.generator_count(x / n, y / n) * c.generator_count(x % n, y % n); };
  std::vector<BaseValue> lv, rv;
  for (Obj x = 0; x < n; ++x) {
    lv.push_back(l(x));
    rv.push_back(r(x));
  }
  for (Obj x = 0; x < n * n; ++x) {
    d.co.push_back(co(x / n, x % n));
    d.contra.push_back(tensor(lv[x / n], rv[x % n]));
  }
  auto pair = [&c, n](Obj x, Obj y, std::int64_t i) {
    const std::int64_t nh = c.generator_count(x % n, y % n);
    return std::make_pair(c.generator(x / n, y / n, i / nh), c.generator(x % n, y % n, i % nh));
  };
  d.co_act = [&](Obj x, Obj y, std::int64_t i) {
    auto [g, h] = pair(x, y, i);
    return co_act(g, h);
  };
  d.contra_act = [&](Obj x, Obj y, std::int64_t i) {
    auto [g, h] = pair(x, y, i);
    return tensor(l_act(g), r_act(h));
  };
  return coend(d);
}

// ∫^X co(X) (x) contra(X) over the carrier.
CoendResult single_coend(const FinCat& c, const std::function<BaseValue(Obj)>& co,
                         const std::function<BaseMap(const Mor&)>& co_act,
                         const std::function<BaseValue(Obj)>& contra,
                         const std::function<BaseMap(const Mor&)>& contra_act) {
  CoendDiagram d;
  d.kind = c.base();
  d.n = c.size();
  d.gens = [&c](Obj x, Obj y) { return c.generator_count(x, y); };
  for (Obj x = 0; x < d.n; ++x) {
    d.co.push_back(co(x));
    d.contra.push_back(contra(x));
  }
  d.co_act = [&](Obj x, Obj y, std::int64_t i) { return co_act(c.generator(x, y, i)); };
  d.contra_act = [&](Obj x, Obj y, std::int64_t i) { return contra_act(c.generator(x, y, i)); };
  return coend(d);
}

BaseMap require_factor(const CoendResult& c, const std::vector<BaseMap>& per_slot, const BaseValue& target,
                       const std::string& what) {
  auto k = c.factor(per_slot, target);
  if (!k) throw ShapeError(what + " does not respect the coend relations");
  return *k;
}

// Products of values: cartesian (mixed radix, first factor most significant) or direct sum.
BaseValue product_value(BaseKind k, const std::vector<BaseValue>& xs) {
  if (!k.is_set()) return coproduct(xs, k).value;
  std::int64_t n = 1;
  for (const auto& x : xs) {
    if (x.size != 0 && n > size_budget() / x.size) throw BudgetError("product exceeds the size budget");
    n *= x.size;
  }
  return make_value(k, n);
}

BaseMap product_point(BaseKind k, const std::vector<BaseValue>& xs, const std::vector<BaseMap>& pts) {
  BaseValue prod = product_value(k, xs);
  BaseValue u = unit_value(k);
  if (k.is_set()) {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) idx = idx * xs[i].size + pts[i].table.at(0);
    return BaseMap{u, prod, {idx}};
  }
  std::vector<std::int64_t> t;
  for (const auto& p : pts) t.insert(t.end(), p.table.begin(), p.table.end());
  return BaseMap{u, prod, std::move(t)};
}

std::vector<BaseMap> split_point(BaseKind k, const std::vector<BaseValue>& xs, const BaseMap& pt) {
  BaseValue u = unit_value(k);
  std::vector<BaseMap> out(xs.size());
  if (k.is_set()) {
    std::int64_t idx = pt.table.at(0);
    for (std::size_t i = xs.size(); i-- > 0;) {
      out[i] = BaseMap{u, xs[i], {idx % xs[i].size}};
      idx /= xs[i].size;
    }
    return out;
  }
  std::size_t off = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = BaseMap{u, xs[i], std::vector<std::int64_t>(pt.table.begin() + off, pt.table.begin() + off + xs[i].size)};
    off += xs[i].size;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- presheaves

BaseMap Presheaf::act(const Mor& f) const {
  const Obj n = domain->size();
  BaseMap m = compose(action.at(f.src * n + f.tgt), tensor(f.m, identity(values.at(f.tgt))));
  m.src = values.at(f.tgt);
  return m;
}

Presheaf presheaf_from_actions(FinCatPtr c, std::vector<BaseValue> values,
                               const std::function<BaseMap(const Mor&)>& act, std::string name) {
  const Obj n = c->size();
  if (static_cast<Obj>(values.size()) != n) throw ShapeError("presheaf needs one value per object");
  Presheaf p;
  p.domain = c;
  p.name = std::move(name);
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      const BaseValue &pa = values[a], &pb = values[b];
      BaseValue h = c->hom(a, b), src = tensor(h, pb);
      const std::int64_t gens = generator_count(h);
      std::vector<BaseMap> maps;
      for (std::int64_t i = 0; i < gens; ++i) {
        BaseMap m = act(c->generator(a, b, i));
        if (!(m.src == pb) || !(m.tgt == pa)) throw ShapeError("presheaf action map is ill-typed");
        maps.push_back(std::move(m));
      }
      p.action.push_back(map_from_generators(src, pa, [&](std::int64_t k) {
        return compose(maps[k / pb.size], point(pb, k % pb.size));
      }));
    }
  p.values = std::move(values);
  return p;
}

Report validate_presheaf(const Presheaf& p) {
  Report r;
  const FinCat& c = *p.domain;
  const Obj n = c.size();
  auto ct = r.open("presheaf.typing", "typing");
  bool shaped = static_cast<Obj>(p.values.size()) == n && static_cast<Obj>(p.action.size()) == n * n;
  r.record(ct, shaped, json{{"presheaf", p.name}});
  if (!shaped) return r;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      const BaseMap& m = p.action[a * n + b];
      r.record(ct, m.src == tensor(c.hom(a, b), p.values[b]) && m.tgt == p.values[a], json{{"objects", {a, b}}});
    }
  if (!r.ok()) return r;
  auto ci = r.open("presheaf.identity", "presheaf-ident");
  for (Obj a = 0; a < n; ++a) r.record(ci, p.act(c.identity(a)) == identity(p.values[a]), json{{"objects", {a}}});
  auto cc = r.open("presheaf.composition", "presheaf-comp");
  for_each_tuple(c.objects(), 3, [&](const std::vector<Obj>& o) {
    for (std::int64_t i = 0; i < c.generator_count(o[0], o[1]); ++i) {
      Mor f = c.generator(o[0], o[1], i);
      for (std::int64_t j = 0; j < c.generator_count(o[1], o[2]); ++j) {
        Mor g = c.generator(o[1], o[2], j);
        r.record(cc, p.act(c.compose(g, f)) == compose(p.act(f), p.act(g)),
                 json{{"objects", o}, {"elements", {i, j}}});
      }
    }
    return true;
  });
  return r;
}

Presheaf representable(FinCatPtr c, Obj a) {
  const Obj n = c->size();
  Presheaf p;
  p.domain = c;
  p.name = "y(" + c->label(a) + ")";
  for (Obj x = 0; x < n; ++x) p.values.push_back(c->hom(x, a));
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) p.action.push_back(compose(c->comp_map(x, y, a), symmetry(c->hom(x, y), c->hom(y, a))));
  return p;
}

Presheaf empty_presheaf(FinCatPtr c) {
  const Obj n = c->size();
  Presheaf p;
  p.domain = c;
  p.name = "0";
  BaseValue z = zero_value(c->base());
  p.values.assign(n, z);
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) p.action.push_back(empty_or_zero(tensor(c->hom(x, y), z), z));
  return p;
}

Presheaf constant_presheaf(FinCatPtr c, const BaseValue& v) {
  const Obj n = c->size();
  Presheaf p;
  p.domain = c;
  p.name = "const" + std::to_string(v.size);
  p.values.assign(n, v);
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) {
      BaseValue h = c->hom(x, y), src = tensor(h, v);
      if (v.kind.is_set()) {
        std::vector<std::int64_t> t(src.size);
        for (std::int64_t k = 0; k < src.size; ++k) t[k] = k % v.size;
        p.action.push_back(function_map(src, v, std::move(t)));
      } else if (h.size == 0) {
        p.action.push_back(zero_map(src, v));
      } else if (x == y && h.size == 1) {
        p.action.push_back(left_unitor(v));
      } else {
        throw ShapeError("constant_presheaf over FinVect needs a discrete domain");
      }
    }
  return p;
}

// ---------------------------------------------------------------- coends

CoendResult coend(const CoendDiagram& d) {
  CoendResult out;
  out.co = d.co;
  out.contra = d.contra;
  std::vector<BaseValue> sv;
  for (int x = 0; x < d.n; ++x) sv.push_back(tensor(d.co[x], d.contra[x]));
  out.slots = coproduct(sv, d.kind);
  std::vector<BaseValue> rv;
  std::vector<BaseMap> la, lb;
  for (Obj x = 0; x < d.n; ++x)
    for (Obj y = 0; y < d.n; ++y)
      for (std::int64_t i = 0; i < d.gens(x, y); ++i) {
        rv.push_back(tensor(d.co[x], d.contra[y]));
        la.push_back(compose(out.slots.injections[y], tensor(d.co_act(x, y, i), identity(d.contra[y]))));
        lb.push_back(compose(out.slots.injections[x], tensor(identity(d.co[x]), d.contra_act(x, y, i))));
      }
  Coproduct rel = coproduct(rv, d.kind);
  out.rel_a = copair(rel, la, out.slots.value);
  out.rel_b = copair(rel, lb, out.slots.value);
  out.quotient = coequalizer(out.rel_a, out.rel_b);
  out.value = out.quotient.value;
  return out;
}

BaseMap CoendResult::inject(Obj d, const BaseMap& pt) const {
  return compose(quotient.projection, compose(slots.injections.at(d), pt));
}

std::vector<CoendTerm> CoendResult::expand(const BaseMap& pt) const {
  BaseMap v = compose(quotient.section, pt);
  std::vector<CoendTerm> out;
  auto locate = [&](std::int64_t e, std::int64_t coeff) {
    for (std::size_t s = 0; s < slots.offsets.size(); ++s) {
      const std::int64_t off = slots.offsets[s], sz = slots.injections[s].src.size;
      if (e >= off && e < off + sz) {
        out.push_back(CoendTerm{static_cast<Obj>(s), e - off, coeff});
        return;
      }
    }
    throw ShapeError("coend representative out of range");
  };
  if (value.kind.is_set()) {
    locate(v.table.at(0), 1);
  } else {
    for (std::int64_t r = 0; r < slots.value.size; ++r)
      if (v.table[r] != 0) locate(r, v.table[r]);
  }
  return out;
}

std::optional<BaseMap> CoendResult::factor(const std::vector<BaseMap>& per_slot, const BaseValue& target) const {
  return factor_through(quotient, rel_a, rel_b, copair(slots, per_slot, target));
}

BaseMap combine(const BaseValue& x, const std::vector<std::pair<std::int64_t, BaseMap>>& terms) {
  if (x.kind.is_set()) {
    if (terms.size() != 1 || terms[0].first != 1) throw ShapeError("combine: a set element needs exactly one term");
    return terms[0].second;
  }
  const int p = x.kind.p;
  std::vector<std::int64_t> t(x.size, 0);
  for (const auto& [c, pt] : terms)
    for (std::int64_t r = 0; r < x.size; ++r) t[r] = fp::norm(t[r] + c * pt.table.at(r), p);
  return BaseMap{unit_value(x.kind), x, std::move(t)};
}

// ---------------------------------------------------------------- component coends

CoendResult gamma_source(const ProduoidalData& p, Obj a, Obj b, Obj c, Obj d, Obj e) {
  const FinCat& C = carrier_of(p);
  auto id = [&](Obj x) { return C.identity(x); };
  return pair_coend(
      C, [&](Obj x, Obj y) { return p.S.value(e, x, y); },
      [&](const Mor& g, const Mor& h) { return p.S.act(id(e), g, h); },
      [&](Obj x) { return p.R.value(x, a, b); }, [&](const Mor& f) { return p.R.act(f, id(a), id(b)); },
      [&](Obj y) { return p.R.value(y, c, d); }, [&](const Mor& f) { return p.R.act(f, id(c), id(d)); });
}

CoendResult gamma_target(const ProduoidalData& p, Obj a, Obj b, Obj c, Obj d, Obj e) {
  const FinCat& C = carrier_of(p);
  auto id = [&](Obj x) { return C.identity(x); };
  return pair_coend(
      C, [&](Obj u, Obj v) { return p.R.value(e, u, v); },
      [&](const Mor& g, const Mor& h) { return p.R.act(id(e), g, h); },
      [&](Obj u) { return p.S.value(u, a, c); }, [&](const Mor& f) { return p.S.act(f, id(a), id(c)); },
      [&](Obj v) { return p.S.value(v, b, d); }, [&](const Mor& f) { return p.S.act(f, id(b), id(d)); });
}

CoendResult delta_target(const ProduoidalData& p, Obj a) {
  const FinCat& C = carrier_of(p);
  return pair_coend(
      C, [&](Obj x, Obj y) { return p.R.value(a, x, y); },
      [&](const Mor& g, const Mor& h) { return p.R.act(C.identity(a), g, h); }, p.H.value, p.H.act, p.H.value,
      p.H.act);
}

CoendResult mu_source(const ProduoidalData& p, Obj a) {
  const FinCat& C = carrier_of(p);
  return pair_coend(
      C, [&](Obj x, Obj y) { return p.S.value(a, x, y); },
      [&](const Mor& g, const Mor& h) { return p.S.act(C.identity(a), g, h); }, p.K.value, p.K.act, p.K.value,
      p.K.act);
}

CoendResult assoc_source(const ProduoidalData& p, const Promodule& s, Obj a, Obj u, Obj v, Obj w) {
  const FinCat& C = carrier_of(p);
  auto id = [&](Obj x) { return C.identity(x); };
  return single_coend(
      C, [&](Obj x) { return s.value(a, x, w); }, [&](const Mor& g) { return s.act(id(a), g, id(w)); },
      [&](Obj x) { return s.value(x, u, v); }, [&](const Mor& f) { return s.act(f, id(u), id(v)); });
}

CoendResult assoc_target(const ProduoidalData& p, const Promodule& s, Obj a, Obj u, Obj v, Obj w) {
  const FinCat& C = carrier_of(p);
  auto id = [&](Obj x) { return C.identity(x); };
  return single_coend(
      C, [&](Obj y) { return s.value(a, u, y); }, [&](const Mor& g) { return s.act(id(a), id(u), g); },
      [&](Obj y) { return s.value(y, v, w); }, [&](const Mor& f) { return s.act(f, id(v), id(w)); });
}

CoendResult lunit_source(const ProduoidalData& p, const Promodule& s, const UnitModule& h, Obj a, Obj b) {
  const FinCat& C = carrier_of(p);
  auto id = [&](Obj x) { return C.identity(x); };
  return single_coend(
      C, [&](Obj x) { return s.value(a, x, b); }, [&](const Mor& g) { return s.act(id(a), g, id(b)); }, h.value,
      h.act);
}

CoendResult runit_source(const ProduoidalData& p, const Promodule& s, const UnitModule& h, Obj a, Obj b) {
  const FinCat& C = carrier_of(p);
  auto id = [&](Obj x) { return C.identity(x); };
  return single_coend(
      C, [&](Obj x) { return s.value(a, b, x); }, [&](const Mor& g) { return s.act(id(a), id(b), g); }, h.value,
      h.act);
}

// ---------------------------------------------------------------- from a duoidal structure

ProduoidalData produoidal_from_duoidal(const DuoidalStructure& d) {
  ProduoidalData p;
  CatPtr c = d.h.cat;
  p.carrier = std::dynamic_pointer_cast<const FinCat>(c);
  if (p.carrier) p.square = tensor_categories(*p.carrier, *p.carrier);
  const Obj n = p.carrier ? p.carrier->size() : 0;
  auto hom_module = [c](const MonoidalStructure& t) {
    Promodule m;
    m.value = [c, t](Obj a, Obj x, Obj y) { return c->hom(a, t.t(x, y)); };
    m.act = [c, t](const Mor& f, const Mor& g, const Mor& h) {
      const Obj a = f.tgt, xy = t.t(g.src, h.src);
      Mor gh = t.t(g, h);
      return map_from_generators(c->hom(a, xy), c->hom(f.src, gh.tgt), [&](std::int64_t i) {
        return c->name_of(compose_all(*c, {f, c->generator(a, xy, i), gh}));
      });
    };
    return m;
  };
  auto unit_module = [c](Obj unit) {
    UnitModule m;
    m.value = [c, unit](Obj a) { return c->hom(a, unit); };
    m.act = [c, unit](const Mor& f) {
      return map_from_generators(c->hom(f.tgt, unit), c->hom(f.src, unit), [&](std::int64_t i) {
        return c->name_of(c->compose(c->generator(f.tgt, unit, i), f));
      });
    };
    return m;
  };
  p.S = hom_module(d.h);
  p.R = hom_module(d.v);
  p.H = unit_module(d.J());
  p.K = unit_module(d.one());
  auto nm = [c](const Mor& f) { return c->name_of(f); };

  p.gamma = [d, c, n, nm](const ProduoidalData& q, Obj a, Obj b, Obj cc, Obj dd, Obj e) {
    CoendResult src = gamma_source(q, a, b, cc, dd, e), tgt = gamma_target(q, a, b, cc, dd, e);
    const Obj U = d.hs(a, cc), V = d.hs(b, dd);
    const Mor g = d.g(a, b, cc, dd);
    const BaseMap ids = tensor(nm(c->identity(U)), nm(c->identity(V)));
    std::vector<BaseMap> per;
    for (Obj x = 0; x < n * n; ++x) {
      const Obj X = x / n, Y = x % n;
      const Obj XY = d.hs(X, Y), AB = d.vs(a, b), CD = d.vs(cc, dd);
      const std::int64_t n2 = c->generator_count(Y, CD), nc = src.contra[x].size;
      per.push_back(map_from_generators(src.slot_value(x), tgt.value, [&](std::int64_t k) {
        auto [si, i1, i2] = split3(k, nc / std::max<std::int64_t>(n2, 1), n2);
        Mor s = c->generator(e, XY, si), r1 = c->generator(X, AB, i1), r2 = c->generator(Y, CD, i2);
        Mor rr = compose_all(*c, {s, d.hs(r1, r2), g});
        return tgt.inject(U * n + V, tensor(nm(rr), ids));
      }));
    }
    return require_factor(src, per, tgt.value, "gamma component");
  };
  p.delta = [d, c, n, nm](const ProduoidalData& q, Obj a) {
    CoendResult tgt = delta_target(q, a);
    const Obj J = d.J();
    const BaseMap ids = tensor(nm(c->identity(J)), nm(c->identity(J)));
    return map_from_generators(c->hom(a, J), tgt.value, [&](std::int64_t i) {
      return tgt.inject(J * n + J, tensor(nm(c->compose(d.delta, c->generator(a, J, i))), ids));
    });
  };
  p.mu = [d, c, n, nm](const ProduoidalData& q, Obj a) {
    CoendResult src = mu_source(q, a);
    const Obj one = d.one();
    BaseValue ka = c->hom(a, one);
    std::vector<BaseMap> per;
    for (Obj x = 0; x < n * n; ++x) {
      const Obj X = x / n, Y = x % n;
      const std::int64_t n1 = c->generator_count(X, one), n2 = c->generator_count(Y, one);
      per.push_back(map_from_generators(src.slot_value(x), ka, [&](std::int64_t k) {
        auto [si, i1, i2] = split3(k, n1, n2);
        Mor s = c->generator(a, d.hs(X, Y), si), k1 = c->generator(X, one, i1), k2 = c->generator(Y, one, i2);
        return nm(compose_all(*c, {s, d.hs(k1, k2), d.mu}));
      }));
    }
    return require_factor(src, per, ka, "mu component");
  };
  p.tau = [d, c, nm](const ProduoidalData&, Obj a) {
    return map_from_generators(c->hom(a, d.J()), c->hom(a, d.one()), [&](std::int64_t i) {
      return nm(c->compose(d.tau, c->generator(a, d.J(), i)));
    });
  };
  p.assoc = [d, c, n, nm](const ProduoidalData& q, int which, Obj a, Obj u, Obj v, Obj w) {
    const MonoidalStructure& t = which == 0 ? d.h : d.v;
    const Promodule& s = q.module(which);
    CoendResult src = assoc_source(q, s, a, u, v, w), tgt = assoc_target(q, s, a, u, v, w);
    const Obj Y = t.t(v, w);
    const BaseMap idY = nm(c->identity(Y));
    std::vector<BaseMap> per;
    for (Obj X = 0; X < n; ++X) {
      const std::int64_t n2 = src.contra[X].size;
      per.push_back(map_from_generators(src.slot_value(X), tgt.value, [&](std::int64_t k) {
        Mor s1 = c->generator(a, t.t(X, w), k / n2), s2 = c->generator(X, t.t(u, v), k % n2);
        Mor x = compose_all(*c, {s1, t.t(s2, t.id(w)), t.a(u, v, w)});
        return tgt.inject(Y, tensor(nm(x), idY));
      }));
    }
    return require_factor(src, per, tgt.value, "associativity component");
  };
  auto unit_comp = [d, c, n, nm](bool left) {
    return [d, c, n, nm, left](const ProduoidalData& q, int which, Obj a, Obj b) {
      const MonoidalStructure& t = which == 0 ? d.h : d.v;
      const Promodule& s = q.module(which);
      const UnitModule& h = q.unit(which);
      CoendResult src = left ? lunit_source(q, s, h, a, b) : runit_source(q, s, h, a, b);
      BaseValue ab = c->hom(a, b);
      std::vector<BaseMap> per;
      for (Obj X = 0; X < n; ++X) {
        const std::int64_t n2 = src.contra[X].size;
        per.push_back(map_from_generators(src.slot_value(X), ab, [&](std::int64_t k) {
          Mor s1 = c->generator(a, left ? t.t(X, b) : t.t(b, X), k / n2), e = c->generator(X, t.unit, k % n2);
          Mor x = left ? compose_all(*c, {s1, t.t(e, t.id(b)), t.l(b)}) : compose_all(*c, {s1, t.t(t.id(b), e), t.r(b)});
          return nm(x);
        }));
      }
      return require_factor(src, per, ab, left ? "left unit component" : "right unit component");
    };
  };
  p.lunit = unit_comp(true);
  p.runit = unit_comp(false);
  return p;
}

// ---------------------------------------------------------------- convolution

Convolution convolve(const ProduoidalData& p, Conv which, const Presheaf& m, const Presheaf& nn) {
  carrier_of(p);
  if (m.domain != p.carrier || nn.domain != p.carrier) throw ShapeError("convolve: presheaf domain mismatch");
  const FinCat& C = carrier_of(p);
  const Obj n = C.size();
  const Promodule& S = p.module(static_cast<int>(which));
  Convolution out;
  std::vector<BaseValue> values;
  for (Obj a = 0; a < n; ++a) {
    out.at.push_back(pair_coend(
        C, [&](Obj x, Obj y) { return S.value(a, x, y); },
        [&](const Mor& g, const Mor& h) { return S.act(C.identity(a), g, h); },
        [&](Obj x) { return m.at(x); }, [&](const Mor& f) { return m.act(f); }, [&](Obj y) { return nn.at(y); },
        [&](const Mor& f) { return nn.act(f); }));
    values.push_back(out.at.back().value);
  }
  auto act = [&](const Mor& f) {
    const Obj a = f.src, b = f.tgt;
    const CoendResult &src = out.at[b], &tgt = out.at[a];
    std::vector<BaseMap> per;
    for (Obj x = 0; x < n * n; ++x) {
      BaseMap sm = S.act(f, C.identity(x / n), C.identity(x % n));
      per.push_back(compose(tgt.quotient.projection,
                            compose(tgt.slots.injections[x], tensor(sm, identity(src.contra[x])))));
    }
    return require_factor(src, per, tgt.value, "convolution action");
  };
  out.result = presheaf_from_actions(p.carrier, std::move(values), act,
                                     "(" + m.name + (which == Conv::Star ? "*" : "o") + nn.name + ")");
  return out;
}

Presheaf day_convolve(const ProduoidalData& p, Conv which, const Presheaf& m, const Presheaf& n) {
  return convolve(p, which, m, n).result;
}

Presheaf unit_presheaf(const ProduoidalData& p, Conv which) {
  const UnitModule& h = p.unit(static_cast<int>(which));
  std::vector<BaseValue> values;
  for (Obj a = 0; a < carrier_of(p).size(); ++a) values.push_back(h.value(a));
  return presheaf_from_actions(p.carrier, std::move(values), h.act, which == Conv::Star ? "J" : "1");
}

// ---------------------------------------------------------------- presheaf category

PresheafCategory::PresheafCategory(FinCatPtr domain) : domain_(std::move(domain)) {}

std::vector<Obj> PresheafCategory::objects() const {
  std::lock_guard<std::mutex> lock(mu_);
  return objects_;
}

void PresheafCategory::set_objects(std::vector<Obj> objs) const {
  std::lock_guard<std::mutex> lock(mu_);
  objects_ = std::move(objs);
}

Obj PresheafCategory::add(Presheaf p) const {
  if (p.domain != domain_) throw ShapeError("presheaf on a different domain");
  std::lock_guard<std::mutex> lock(mu_);
  items_.push_back(std::make_shared<const Presheaf>(std::move(p)));
  return static_cast<Obj>(items_.size()) - 1;
}

const Presheaf& PresheafCategory::presheaf(Obj a) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (a < 0 || a >= static_cast<Obj>(items_.size())) throw ShapeError("unknown presheaf id");
  return *items_[a];
}

std::string PresheafCategory::label(Obj a) const { return presheaf(a).name; }

Mor PresheafCategory::from_components(Obj a, Obj b, const std::vector<BaseMap>& comps) const {
  const Presheaf &P = presheaf(a), &Q = presheaf(b);
  const BaseKind k = base();
  Coproduct cp = coproduct(P.values, k), cq = coproduct(Q.values, k);
  std::vector<BaseMap> legs;
  for (std::size_t x = 0; x < P.values.size(); ++x) {
    if (!(comps.at(x).src == P.values[x]) || !(comps[x].tgt == Q.values[x]))
      throw ShapeError("natural transformation component is ill-typed");
    legs.push_back(duo::compose(cq.injections[x], comps[x]));
  }
  return Mor{a, b, copair(cp, legs, cq.value)};
}

BaseMap PresheafCategory::component(const Mor& f, Obj x) const {
  const Presheaf &P = presheaf(f.src), &Q = presheaf(f.tgt);
  std::int64_t op = 0, oq = 0;
  for (Obj y = 0; y < x; ++y) {
    op += P.values[y].size;
    oq += Q.values[y].size;
  }
  const BaseValue &px = P.values.at(x), &qx = Q.values.at(x);
  if (base().is_set()) {
    std::vector<std::int64_t> t(px.size);
    for (std::int64_t i = 0; i < px.size; ++i) t[i] = f.m.table[op + i] - oq;
    return BaseMap{px, qx, std::move(t)};
  }
  std::vector<std::int64_t> t(qx.size * px.size);
  const std::int64_t w = f.m.src.size;
  for (std::int64_t r = 0; r < qx.size; ++r)
    for (std::int64_t c = 0; c < px.size; ++c) t[r * px.size + c] = f.m.table[(oq + r) * w + op + c];
  return BaseMap{px, qx, std::move(t)};
}

Mor PresheafCategory::identity(Obj a) const {
  return Mor{a, a, duo::identity(coproduct(presheaf(a).values, base()).value)};
}

Mor PresheafCategory::compose(const Mor& g, const Mor& f) const {
  if (f.tgt != g.src) throw ShapeError("compose: codomain/domain mismatch");
  return Mor{f.src, g.tgt, duo::compose(g.m, f.m)};
}

std::optional<Mor> PresheafCategory::inverse(const Mor& f) const {
  auto g = is_invertible(f.m);
  if (!g) return std::nullopt;
  return Mor{f.tgt, f.src, *g};
}

const PresheafCategory::HomData& PresheafCategory::hom_data(Obj a, Obj b) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = homs_.find({a, b});
    if (it != homs_.end()) return *it->second;
  }
  const Presheaf &P = presheaf(a), &Q = presheaf(b);
  const FinCat& C = *domain_;
  const BaseKind k = base();
  const BaseCat names(k, {});
  const Obj n = C.size();
  std::vector<BaseValue> ih;
  for (Obj x = 0; x < n; ++x) ih.push_back(internal_hom(P.values[x], Q.values[x]).value);
  BaseValue prod = product_value(k, ih);
  struct Slot {
    Obj x, y;
    Mor f;
  };
  std::vector<Slot> sq;
  std::vector<BaseValue> tv;
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (std::int64_t i = 0; i < C.generator_count(x, y); ++i) {
        sq.push_back(Slot{x, y, C.generator(x, y, i)});
        tv.push_back(internal_hom(P.values[y], Q.values[x]).value);
      }
  BaseValue tprod = product_value(k, tv);
  std::vector<BaseMap> pf, qf;
  for (const auto& s : sq) {
    pf.push_back(P.act(s.f));
    qf.push_back(Q.act(s.f));
  }
  auto side = [&](bool left) {
    return map_from_generators(prod, tprod, [&](std::int64_t i) {
      auto parts = split_point(k, ih, point(prod, i));
      std::vector<BaseMap> th;
      for (Obj x = 0; x < n; ++x) th.push_back(names.from_name(P.values[x].size, Q.values[x].size, parts[x]).m);
      std::vector<BaseMap> out;
      for (std::size_t j = 0; j < sq.size(); ++j) {
        BaseMap m = left ? duo::compose(th[sq[j].x], pf[j]) : duo::compose(qf[j], th[sq[j].y]);
        out.push_back(names.name_of(Mor{m.src.size, m.tgt.size, m}));
      }
      return product_point(k, tv, out);
    });
  };
  Equalizer e = equalizer(side(true), side(false));
  auto data = std::make_shared<const HomData>(HomData{e.value, e.inclusion});
  std::lock_guard<std::mutex> lock(mu_);
  return *homs_.emplace(std::make_pair(a, b), data).first->second;
}

BaseValue PresheafCategory::hom(Obj a, Obj b) const { return hom_data(a, b).value; }

BaseMap PresheafCategory::name_of(const Mor& f) const {
  const Presheaf &P = presheaf(f.src), &Q = presheaf(f.tgt);
  const BaseKind k = base();
  const BaseCat names(k, {});
  std::vector<BaseValue> ih;
  std::vector<BaseMap> pts;
  for (Obj x = 0; x < static_cast<Obj>(P.values.size()); ++x) {
    ih.push_back(internal_hom(P.values[x], Q.values[x]).value);
    BaseMap c = component(f, x);
    pts.push_back(names.name_of(Mor{c.src.size, c.tgt.size, c}));
  }
  const HomData& h = hom_data(f.src, f.tgt);
  auto x = preimage(h.inclusion, product_point(k, ih, pts));
  if (!x) throw ShapeError("name_of: components are not natural");
  return *x;
}

Mor PresheafCategory::from_name(Obj a, Obj b, const BaseMap& x) const {
  const Presheaf &P = presheaf(a), &Q = presheaf(b);
  const BaseKind k = base();
  const BaseCat names(k, {});
  const HomData& h = hom_data(a, b);
  if (!(x.tgt == h.value) || x.src.size != 1) throw ShapeError("from_name: not an element of hom");
  std::vector<BaseValue> ih;
  for (std::size_t y = 0; y < P.values.size(); ++y) ih.push_back(internal_hom(P.values[y], Q.values[y]).value);
  auto parts = split_point(k, ih, duo::compose(h.inclusion, x));
  std::vector<BaseMap> comps;
  for (std::size_t y = 0; y < P.values.size(); ++y) {
    BaseMap m = names.from_name(P.values[y].size, Q.values[y].size, parts[y]).m;
    m.src = P.values[y];
    m.tgt = Q.values[y];
    comps.push_back(std::move(m));
  }
  return from_components(a, b, comps);
}

// ---------------------------------------------------------------- lifted structure

struct LiftedCache {
  std::mutex mu;
  std::map<std::tuple<int, Obj, Obj>, Obj> conv_ids;
  std::map<Obj, std::shared_ptr<const std::vector<CoendResult>>> coends;
  std::map<std::vector<Obj>, std::shared_ptr<const CoendResult>> comp_coends;
  std::map<std::vector<Obj>, BaseMap> comp_maps;
};

namespace {

struct Lifted {
  ProduoidalData p;
  std::shared_ptr<PresheafCategory> cat;
  std::shared_ptr<LiftedCache> cache;
  Obj unit_ids[2] = {0, 0};

  const FinCat& C() const { return *p.carrier; }
  Obj n() const { return C().size(); }
  const Presheaf& ps(Obj a) const { return cat->presheaf(a); }

  Obj tens(int which, Obj a, Obj b) const {
    const auto key = std::make_tuple(which, a, b);
    {
      std::lock_guard<std::mutex> lock(cache->mu);
      auto it = cache->conv_ids.find(key);
      if (it != cache->conv_ids.end()) return it->second;
    }
    Convolution cv = convolve(p, static_cast<Conv>(which), ps(a), ps(b));
    auto at = std::make_shared<const std::vector<CoendResult>>(std::move(cv.at));
    std::lock_guard<std::mutex> lock(cache->mu);
    auto it = cache->conv_ids.find(key);
    if (it != cache->conv_ids.end()) return it->second;
    Obj id = cat->add(std::move(cv.result));
    cache->conv_ids.emplace(key, id);
    cache->coends.emplace(id, at);
    return id;
  }

  const CoendResult& at(Obj conv, Obj x) const {
    std::lock_guard<std::mutex> lock(cache->mu);
    return cache->coends.at(conv)->at(x);
  }

  const CoendResult& comp_coend(std::vector<Obj> key, const std::function<CoendResult()>& make) const {
    {
      std::lock_guard<std::mutex> lock(cache->mu);
      auto it = cache->comp_coends.find(key);
      if (it != cache->comp_coends.end()) return *it->second;
    }
    auto v = std::make_shared<const CoendResult>(make());
    std::lock_guard<std::mutex> lock(cache->mu);
    return *cache->comp_coends.emplace(std::move(key), v).first->second;
  }

  const BaseMap& comp_map(std::vector<Obj> key, const std::function<BaseMap()>& make) const {
    {
      std::lock_guard<std::mutex> lock(cache->mu);
      auto it = cache->comp_maps.find(key);
      if (it != cache->comp_maps.end()) return it->second;
    }
    BaseMap v = make();
    std::lock_guard<std::mutex> lock(cache->mu);
    return cache->comp_maps.emplace(std::move(key), std::move(v)).first->second;
  }

  BaseMap pt(const BaseValue& x, std::int64_t i) const { return point(x, i); }

  // Map out of the convolution `src` at x given on slot basis elements (slot (X,Y), s, l, r).
  BaseMap out_of(Obj src, Obj x, const BaseValue& target, Obj left, Obj right,
                 const std::function<BaseMap(Obj, Obj, const BaseMap&, const BaseMap&, const BaseMap&)>& rule,
                 const std::string& what) const {
    const CoendResult& c = at(src, x);
    const Obj N = n();
    const Presheaf &L = ps(left), &R = ps(right);
    std::vector<BaseMap> per;
    for (Obj s = 0; s < N * N; ++s) {
      const Obj X = s / N, Y = s % N;
      const BaseValue &co = c.co[s], &lv = L.at(X), &rv = R.at(Y);
      per.push_back(map_from_generators(c.slot_value(s), target, [&](std::int64_t k) {
        auto [i, j, l] = split3(k, lv.size, rv.size);
        return rule(X, Y, pt(co, i), pt(lv, j), pt(rv, l));
      }));
    }
    return require_factor(c, per, target, what);
  }

  Mor tensor_mor(int which, const Mor& f, const Mor& g) const {
    const Obj src = tens(which, f.src, g.src), tgt = tens(which, f.tgt, g.tgt);
    const Obj N = n();
    std::vector<BaseMap> comps;
    for (Obj x = 0; x < N; ++x) {
      const CoendResult& tc = at(tgt, x);
      std::vector<BaseMap> fx, gx;
      comps.push_back(out_of(
          src, x, tc.value, f.src, g.src,
          [&](Obj X, Obj Y, const BaseMap& s, const BaseMap& l, const BaseMap& r) {
            BaseMap fl = compose(cat->component(f, X), l), gr = compose(cat->component(g, Y), r);
            return tc.inject(X * N + Y, tensor(s, tensor(fl, gr)));
          },
          "tensor of morphisms"));
    }
    return cat->from_components(src, tgt, comps);
  }

  Mor assoc(int which, Obj a, Obj b, Obj c) const {
    const Obj ab = tens(which, a, b), bc = tens(which, b, c);
    const Obj src = tens(which, ab, c), tgt = tens(which, a, bc);
    const Obj N = n();
    const Promodule& S = p.module(which);
    std::vector<BaseMap> comps;
    for (Obj A = 0; A < N; ++A) {
      const CoendResult& tc = at(tgt, A);
      comps.push_back(out_of(
          src, A, tc.value, ab, c,
          [&](Obj X, Obj Y, const BaseMap& s, const BaseMap& u, const BaseMap& r) {
            const CoendResult& uc = at(ab, X);
            std::vector<std::pair<std::int64_t, BaseMap>> acc;
            for (const auto& t : uc.expand(u)) {
              const Obj U = t.slot / N, V = t.slot % N;
              auto [i, j, l] = split3(t.index, ps(a).at(U).size, ps(b).at(V).size);
              BaseMap s1 = pt(uc.co[t.slot], i), pa = pt(ps(a).at(U), j), pb = pt(ps(b).at(V), l);
              const CoendResult& as = comp_coend({0, which, A, U, V, Y}, [&] { return assoc_source(p, S, A, U, V, Y); });
              const CoendResult& at2 = comp_coend({1, which, A, U, V, Y}, [&] { return assoc_target(p, S, A, U, V, Y); });
              const BaseMap& am = comp_map({0, which, A, U, V, Y}, [&] { return p.assoc(p, which, A, U, V, Y); });
              BaseMap y = compose(am, as.inject(X, tensor(s, s1)));
              for (const auto& t2 : at2.expand(y)) {
                const Obj W = t2.slot;
                const std::int64_t nt = at2.contra[W].size;
                BaseMap s2 = pt(at2.co[W], t2.index / nt), tt = pt(at2.contra[W], t2.index % nt);
                BaseMap w = at(bc, W).inject(V * N + Y, tensor(tt, tensor(pb, r)));
                acc.emplace_back(t.coeff * t2.coeff, tc.inject(U * N + W, tensor(s2, tensor(pa, w))));
              }
            }
            return combine(tc.value, acc);
          },
          "associator"));
    }
    return cat->from_components(src, tgt, comps);
  }

  Mor unitor(int which, bool left, Obj a) const {
    const Obj J = unit_ids[which];
    const Obj src = left ? tens(which, J, a) : tens(which, a, J);
    const Obj N = n();
    const Promodule& S = p.module(which);
    const UnitModule& H = p.unit(which);
    const Presheaf& P = ps(a);
    std::vector<BaseMap> comps;
    for (Obj A = 0; A < N; ++A) {
      comps.push_back(out_of(
          src, A, P.at(A), left ? J : a, left ? a : J,
          [&](Obj X, Obj Y, const BaseMap& s, const BaseMap& l, const BaseMap& r) {
            // The unit variable is X on the left, Y on the right; the other carries the element of P.
            const Obj B = left ? Y : X, Z = left ? X : Y;
            const BaseMap& h = left ? l : r;
            const BaseMap& x = left ? r : l;
            const Obj tag = left ? 2 : 3;
            const CoendResult& us = comp_coend({tag, which, A, B}, [&] {
              return left ? lunit_source(p, S, H, A, B) : runit_source(p, S, H, A, B);
            });
            const BaseMap& um = comp_map({tag, which, A, B}, [&] {
              return left ? p.lunit(p, which, A, B) : p.runit(p, which, A, B);
            });
            BaseMap g = compose(um, us.inject(Z, tensor(s, h)));
            return compose(P.act(C().from_name(A, B, g)), x);
          },
          left ? "left unitor" : "right unitor"));
    }
    return cat->from_components(src, a, comps);
  }

  Mor gamma(Obj a, Obj b, Obj c, Obj d) const {
    const Obj ab = tens(1, a, b), cd = tens(1, c, d), ac = tens(0, a, c), bd = tens(0, b, d);
    const Obj src = tens(0, ab, cd), tgt = tens(1, ac, bd);
    const Obj N = n();
    std::vector<BaseMap> comps;
    for (Obj E = 0; E < N; ++E) {
      const CoendResult& tc = at(tgt, E);
      comps.push_back(out_of(
          src, E, tc.value, ab, cd,
          [&](Obj X, Obj Y, const BaseMap& s, const BaseMap& u, const BaseMap& w) {
            const CoendResult &uc = at(ab, X), &wc = at(cd, Y);
            std::vector<std::pair<std::int64_t, BaseMap>> acc;
            for (const auto& t1 : uc.expand(u)) {
              const Obj U1 = t1.slot / N, V1 = t1.slot % N;
              auto [i1, j1, l1] = split3(t1.index, ps(a).at(U1).size, ps(b).at(V1).size);
              BaseMap r1 = pt(uc.co[t1.slot], i1), pa = pt(ps(a).at(U1), j1), pb = pt(ps(b).at(V1), l1);
              for (const auto& t2 : wc.expand(w)) {
                const Obj U2 = t2.slot / N, V2 = t2.slot % N;
                auto [i2, j2, l2] = split3(t2.index, ps(c).at(U2).size, ps(d).at(V2).size);
                BaseMap r2 = pt(wc.co[t2.slot], i2), pc = pt(ps(c).at(U2), j2), pd = pt(ps(d).at(V2), l2);
                const std::vector<Obj> key{U1, V1, U2, V2, E};
                const CoendResult& gs = comp_coend({4, U1, V1, U2, V2, E}, [&] { return gamma_source(p, U1, V1, U2, V2, E); });
                const CoendResult& gt = comp_coend({5, U1, V1, U2, V2, E}, [&] { return gamma_target(p, U1, V1, U2, V2, E); });
                const BaseMap& gm = comp_map({4, U1, V1, U2, V2, E}, [&] { return p.gamma(p, U1, V1, U2, V2, E); });
                BaseMap y = compose(gm, gs.inject(X * N + Y, tensor(s, tensor(r1, r2))));
                for (const auto& t3 : gt.expand(y)) {
                  const Obj U = t3.slot / N, V = t3.slot % N;
                  const std::int64_t nv = p.S.value(V, V1, V2).size;
                  auto [ri, si1, si2] = split3(t3.index, gt.contra[t3.slot].size / std::max<std::int64_t>(nv, 1), nv);
                  BaseMap r = pt(gt.co[t3.slot], ri), s1 = pt(p.S.value(U, U1, U2), si1), s2 = pt(p.S.value(V, V1, V2), si2);
                  BaseMap x1 = at(ac, U).inject(U1 * N + U2, tensor(s1, tensor(pa, pc)));
                  BaseMap x2 = at(bd, V).inject(V1 * N + V2, tensor(s2, tensor(pb, pd)));
                  acc.emplace_back(t1.coeff * t2.coeff * t3.coeff, tc.inject(U * N + V, tensor(r, tensor(x1, x2))));
                }
              }
            }
            return combine(tc.value, acc);
          },
          "interchange"));
    }
    return cat->from_components(src, tgt, comps);
  }

  // A component family H(A) -> H'(A) between registered presheaves given by produoidal data.
  Mor family(Obj src, Obj tgt, const std::function<BaseMap(Obj)>& comp) const {
    std::vector<BaseMap> comps;
    for (Obj A = 0; A < n(); ++A) {
      BaseMap m = comp(A);
      if (!(m.src == ps(src).at(A)) || !(m.tgt == ps(tgt).at(A))) throw ShapeError("unit map component is ill-typed");
      m.src = ps(src).at(A);
      m.tgt = ps(tgt).at(A);
      comps.push_back(std::move(m));
    }
    return cat->from_components(src, tgt, comps);
  }
};

MonoidalStructure lifted_monoidal(std::shared_ptr<const Lifted> L, int which) {
  MonoidalStructure m;
  m.cat = L->cat;
  m.name = which == 0 ? "day*" : "dayo";
  m.unit = L->unit_ids[which];
  m.tensor_obj = [L, which](Obj a, Obj b) { return L->tens(which, a, b); };
  m.tensor_mor = [L, which](const Mor& f, const Mor& g) { return L->tensor_mor(which, f, g); };
  m.assoc = [L, which](Obj a, Obj b, Obj c) { return L->assoc(which, a, b, c); };
  m.lunit = [L, which](Obj a) { return L->unitor(which, true, a); };
  m.runit = [L, which](Obj a) { return L->unitor(which, false, a); };
  return m;
}

}  // namespace

LiftedDuoidal lift_duoidal(const ProduoidalData& p) {
  carrier_of(p);
  auto L = std::make_shared<Lifted>();
  L->p = p;
  L->cat = std::make_shared<PresheafCategory>(p.carrier);
  L->cache = std::make_shared<LiftedCache>();
  L->unit_ids[0] = L->cat->add(unit_presheaf(p, Conv::Star));
  L->unit_ids[1] = L->cat->add(unit_presheaf(p, Conv::Circ));
  std::shared_ptr<const Lifted> cl = L;
  LiftedDuoidal out;
  out.p = p;
  out.cat = L->cat;
  out.cache = L->cache;
  out.d.h = lifted_monoidal(cl, 0);
  out.d.v = lifted_monoidal(cl, 1);
  out.d.gamma = [cl](Obj a, Obj b, Obj c, Obj d) { return cl->gamma(a, b, c, d); };
  const Obj J = L->unit_ids[0], one = L->unit_ids[1];
  out.d.mu = L->family(L->tens(0, one, one), one, [&](Obj A) { return p.mu(p, A); });
  out.d.tau = L->family(J, one, [&](Obj A) { return p.tau(p, A); });
  out.d.delta = L->family(J, L->tens(1, J, J), [&](Obj A) { return p.delta(p, A); });
  out.d.name = "presheaves";
  return out;
}

Mor yoneda_comparison(const LiftedDuoidal& l, const DuoidalStructure& d, Conv which, Obj a, Obj b) {
  FinCatPtr c = l.p.carrier;
  const MonoidalStructure& t = which == Conv::Star ? d.h : d.v;
  const Obj ya = l.add(representable(c, a)), yb = l.add(representable(c, b));
  const Obj yab = l.add(representable(c, t.t(a, b)));
  const MonoidalStructure& lm = which == Conv::Star ? l.d.h : l.d.v;
  const Obj src = lm.t(ya, yb);
  std::shared_ptr<const std::vector<CoendResult>> cs;
  {
    std::lock_guard<std::mutex> lock(l.cache->mu);
    cs = l.cache->coends.at(src);
  }
  const Obj N = c->size();
  std::vector<BaseMap> comps;
  for (Obj A = 0; A < N; ++A) {
    const CoendResult& cr = cs->at(A);
    BaseValue tv = c->hom(A, t.t(a, b));
    std::vector<BaseMap> per;
    for (Obj s = 0; s < N * N; ++s) {
      const Obj X = s / N, Y = s % N;
      const std::int64_t nb = c->generator_count(Y, b);
      per.push_back(map_from_generators(cr.slot_value(s), tv, [&](std::int64_t k) {
        auto [i, j, m] = split3(k, c->generator_count(X, a), nb);
        Mor sm = c->generator(A, t.t(X, Y), i), u = c->generator(X, a, j), v = c->generator(Y, b, m);
        return c->name_of(c->compose(t.t(u, v), sm));
      }));
    }
    comps.push_back(require_factor(cr, per, tv, "Yoneda comparison"));
  }
  return l.cat->from_components(src, yab, comps);
}

Report check_presheaf_duoidal_pointwise(const ProduoidalData& p, const std::vector<Presheaf>& witnesses) {
  Report r;
  LiftedDuoidal l = lift_duoidal(p);
  std::vector<Obj> ids;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    r.merge(validate_presheaf(witnesses[i]), "witness" + std::to_string(i));
    ids.push_back(l.add(witnesses[i]));
  }
  if (!r.ok()) return r;
  l.cat->set_objects(ids);
  auto cf = r.open("dayconv.functoriality", "presheaf-functoriality");
  for (int which = 0; which < 2; ++which)
    for_each_tuple(ids, 2, [&](const std::vector<Obj>& o) {
      json where{{"witnesses", {o[0] - 2, o[1] - 2}}, {"tensor", which == 0 ? "*" : "o"}};
      try {
        const MonoidalStructure& m = which == 0 ? l.d.h : l.d.v;
        Report pr = validate_presheaf(l.presheaf(m.t(o[0], o[1])));
        r.record(cf, pr.ok(), where);
      } catch (const ShapeError& e) {
        where["error"] = e.what();
        r.fail(cf, where);
      }
      return true;
    });
  if (!r.ok()) return r;
  // Every lifted component must be well defined on the coends before the axioms can be compared.
  auto wit = [](const std::vector<Obj>& o) {
    json w = json::array();
    for (Obj x : o) w.push_back(x - 2);
    return w;
  };
  auto attempt = [&](std::size_t check, json where, const std::function<void()>& build) {
    try {
      build();
      r.pass(check);
    } catch (const ShapeError& e) {
      where["error"] = e.what();
      r.fail(check, where);
    }
  };
  auto cc = r.open("dayconv.constraints", "lifted-constraints");
  for (int which = 0; which < 2; ++which) {
    const MonoidalStructure& m = which == 0 ? l.d.h : l.d.v;
    const char* t = which == 0 ? "*" : "o";
    for (Obj x : ids) {
      attempt(cc, json{{"witnesses", wit({x})}, {"tensor", t}, {"constraint", "l"}}, [&] { m.l(x); });
      attempt(cc, json{{"witnesses", wit({x})}, {"tensor", t}, {"constraint", "r"}}, [&] { m.r(x); });
    }
    for_each_tuple(ids, 3, [&](const std::vector<Obj>& o) {
      attempt(cc, json{{"witnesses", wit(o)}, {"tensor", t}, {"constraint", "a"}}, [&] { m.a(o[0], o[1], o[2]); });
      return true;
    });
  }
  auto cg = r.open("dayconv.interchange", "interchange");
  for_each_tuple(ids, 4, [&](const std::vector<Obj>& o) {
    attempt(cg, json{{"witnesses", wit(o)}}, [&] { l.d.g(o[0], o[1], o[2], o[3]); });
    return true;
  });
  if (!r.ok()) return r;
  r.merge(validate_duoidal(l.d), "lifted");
  return r;
}

}  // namespace duo
