#include "duo/fincat.hpp"

namespace duo {

namespace {

BaseMap empty_or_zero(const BaseValue& x, const BaseValue& y) {
  if (x.kind.is_set()) {
    if (x.size != 0) throw ShapeError("no map out of a nonempty set into this target");
    return BaseMap{x, y, {}};
  }
  return zero_map(x, y);
}

}  // namespace

// ---------------------------------------------------------------- Category

Mor Category::generator(Obj a, Obj b, std::int64_t i) const {
  return from_name(a, b, point(hom(a, b), i));
}

std::optional<Mor> Category::inverse(const Mor& f) const {
  const Obj a = f.src, b = f.tgt;
  const Mor ia = identity(a), ib = identity(b);
  const std::int64_t n = generator_count(b, a);
  if (base().is_set()) {
    for (std::int64_t i = 0; i < n; ++i) {
      Mor g = generator(b, a, i);
      if (compose(g, f) == ia && compose(f, g) == ib) return g;
    }
    return std::nullopt;
  }
  // Solve g.f = 1, f.g = 1 for g in hom(b,a) by linearity.
  BaseValue haa = hom(a, a), hbb = hom(b, b);
  BaseValue both = make_value(base(), haa.size + hbb.size);
  BaseValue hba = hom(b, a);
  std::vector<std::int64_t> m(both.size * n, 0);
  for (std::int64_t j = 0; j < n; ++j) {
    Mor g = generator(b, a, j);
    BaseMap x = name_of(compose(g, f)), y = name_of(compose(f, g));
    for (std::int64_t r = 0; r < haa.size; ++r) m[r * n + j] = x.table[r];
    for (std::int64_t r = 0; r < hbb.size; ++r) m[(haa.size + r) * n + j] = y.table[r];
  }
  std::vector<std::int64_t> rhs(both.size, 0);
  BaseMap x = name_of(ia), y = name_of(ib);
  for (std::int64_t r = 0; r < haa.size; ++r) rhs[r] = x.table[r];
  for (std::int64_t r = 0; r < hbb.size; ++r) rhs[haa.size + r] = y.table[r];
  auto sol = preimage(matrix_map(hba, both, std::move(m)),
                      matrix_map(unit_value(base()), both, std::move(rhs)));
  if (!sol) return std::nullopt;
  return from_name(b, a, *sol);
}

Mor compose_all(const Category& c, std::initializer_list<Mor> chain) {
  auto it = chain.begin();
  if (it == chain.end()) throw ShapeError("compose_all: empty chain");
  Mor acc = *it;
  for (++it; it != chain.end(); ++it) acc = c.compose(*it, acc);
  return acc;
}

// ---------------------------------------------------------------- FinCat

FinCat::FinCat(BaseKind k, std::vector<std::string> labels, std::vector<BaseValue> homs,
               std::vector<BaseMap> comp, std::vector<BaseMap> ident)
    : kind_(k), labels_(std::move(labels)), homs_(std::move(homs)), comp_(std::move(comp)),
      ident_(std::move(ident)) {
  const std::int64_t n = size();
  if (static_cast<std::int64_t>(homs_.size()) != n * n) throw ShapeError("hom table must be n*n");
  if (static_cast<std::int64_t>(comp_.size()) != n * n * n)
    throw ShapeError("composition table must be n^3");
  if (static_cast<std::int64_t>(ident_.size()) != n) throw ShapeError("identity table must be n");
  BaseValue u = unit_value(k);
  for (const auto& h : homs_)
    if (!(h.kind == k)) throw ShapeError("hom value of the wrong kind");
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c) {
        const BaseMap& m = comp_map(a, b, c);
        if (!(m.src == tensor(hom_value(b, c), hom_value(a, b))) || !(m.tgt == hom_value(a, c)))
          throw ShapeError("composition map " + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + " is ill-typed");
        if (static_cast<std::int64_t>(m.table.size()) !=
            (k.is_set() ? m.src.size : m.src.size * m.tgt.size))
          throw ShapeError("composition table has the wrong length");
      }
  for (Obj a = 0; a < n; ++a)
    if (!(ident_[a].src == u) || !(ident_[a].tgt == hom_value(a, a)))
      throw ShapeError("identity map " + std::to_string(a) + " is ill-typed");
}

void FinCat::check_obj(Obj a) const {
  if (a < 0 || a >= size()) throw ShapeError("object index " + std::to_string(a) + " out of range");
}

std::vector<Obj> FinCat::objects() const {
  std::vector<Obj> v(size());
  for (int i = 0; i < size(); ++i) v[i] = i;
  return v;
}

std::string FinCat::label(Obj a) const {
  check_obj(a);
  return labels_[a];
}

BaseValue FinCat::hom(Obj a, Obj b) const {
  check_obj(a);
  check_obj(b);
  return hom_value(a, b);
}

Mor FinCat::identity(Obj a) const {
  check_obj(a);
  return Mor{a, a, ident_[a]};
}

Mor FinCat::compose(const Mor& g, const Mor& f) const {
  if (f.tgt != g.src) throw ShapeError("compose: " + std::to_string(f.tgt) + " != " + std::to_string(g.src));
  check_obj(f.src);
  check_obj(g.tgt);
  return Mor{f.src, g.tgt, duo::compose(comp_map(f.src, f.tgt, g.tgt), tensor(g.m, f.m))};
}

Mor FinCat::from_name(Obj a, Obj b, const BaseMap& x) const {
  if (!(x.tgt == hom(a, b)) || x.src.size != 1) throw ShapeError("from_name: not an element of hom");
  return Mor{a, b, x};
}

// ---------------------------------------------------------------- BaseCat

BaseCat::BaseCat(BaseKind k, std::vector<Obj> suite) : kind_(k), suite_(std::move(suite)) {
  for (auto a : suite_)
    if (a < 0) throw ShapeError("negative object in suite");
}

BaseValue BaseCat::hom(Obj a, Obj b) const { return internal_hom(value(a), value(b)).value; }

Mor BaseCat::identity(Obj a) const { return Mor{a, a, duo::identity(value(a))}; }

Mor BaseCat::compose(const Mor& g, const Mor& f) const {
  if (f.tgt != g.src) throw ShapeError("compose: codomain/domain mismatch");
  return Mor{f.src, g.tgt, duo::compose(g.m, f.m)};
}

BaseMap BaseCat::name_of(const Mor& f) const {
  BaseValue h = hom(f.src, f.tgt);
  if (kind_.is_set()) {
    std::int64_t idx = 0;
    for (auto v : f.m.table) idx = idx * f.tgt + v;
    return BaseMap{unit_value(kind_), h, {idx}};
  }
  // E_{r,c} has index r*|src|+c, which is the row-major matrix layout.
  return BaseMap{unit_value(kind_), h, f.m.table};
}

Mor BaseCat::from_name(Obj a, Obj b, const BaseMap& x) const {
  BaseValue h = hom(a, b);
  if (!(x.tgt == h) || x.src.size != 1) throw ShapeError("from_name: not an element of hom");
  if (kind_.is_set()) return generator(a, b, x.table[0]);
  return Mor{a, b, BaseMap{value(a), value(b), x.table}};
}

Mor BaseCat::generator(Obj a, Obj b, std::int64_t i) const {
  if (kind_.is_set()) {
    std::vector<std::int64_t> t(a);
    for (std::int64_t j = a - 1; j >= 0; --j) {
      t[j] = i % b;
      i /= b;
    }
    return Mor{a, b, BaseMap{value(a), value(b), std::move(t)}};
  }
  std::vector<std::int64_t> t(a * b, 0);
  t[i] = 1;
  return Mor{a, b, BaseMap{value(a), value(b), std::move(t)}};
}

std::optional<Mor> BaseCat::inverse(const Mor& f) const {
  auto g = is_invertible(f.m);
  if (!g) return std::nullopt;
  return Mor{f.tgt, f.src, *g};
}

// ---------------------------------------------------------------- functors

VFunctor identity_functor(CatPtr c) {
  return VFunctor{c, c, [](Obj a) { return a; }, [](const Mor& f) { return f; }};
}

VFunctor compose_functors(const VFunctor& g, const VFunctor& f) {
  return VFunctor{f.src, g.tgt, [g, f](Obj a) { return g.on_obj(f.on_obj(a)); },
                  [g, f](const Mor& m) { return g.on_mor(f.on_mor(m)); }};
}

VFunctor functor_from_tables(FinCatPtr src, CatPtr tgt, std::vector<Obj> obj_map,
                             std::vector<BaseMap> hom_maps) {
  const int n = src->size();
  if (static_cast<int>(obj_map.size()) != n || static_cast<int>(hom_maps.size()) != n * n)
    throw ShapeError("functor tables have the wrong length");
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      const BaseMap& h = hom_maps[a * n + b];
      if (!(h.src == src->hom(a, b)) || !(h.tgt == tgt->hom(obj_map[a], obj_map[b])))
        throw ShapeError("functor hom map " + std::to_string(a) + "," + std::to_string(b) +
                         " is ill-typed");
    }
  auto om = std::make_shared<std::vector<Obj>>(std::move(obj_map));
  auto hm = std::make_shared<std::vector<BaseMap>>(std::move(hom_maps));
  return VFunctor{src, tgt, [om](Obj a) { return om->at(a); },
                  [src, tgt, om, hm, n](const Mor& f) {
                    const BaseMap& h = hm->at(f.src * n + f.tgt);
                    return tgt->from_name(om->at(f.src), om->at(f.tgt),
                                          duo::compose(h, src->name_of(f)));
                  }};
}

VFunctor discrete_functor(FinCatPtr src, FinCatPtr tgt, std::vector<Obj> obj_map) {
  const int n = src->size();
  if (static_cast<int>(obj_map.size()) != n) throw ShapeError("object map has the wrong length");
  std::vector<BaseMap> hm;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) {
      BaseValue s = src->hom(a, b), t = tgt->hom(obj_map[a], obj_map[b]);
      if (s.size > 1 || (s.size == 1 && t.size != 1)) throw ShapeError("discrete_functor: categories are not discrete");
      hm.push_back(s.size == 1 ? identity(s) : empty_or_zero(s, t));
    }
  return functor_from_tables(src, tgt, std::move(obj_map), std::move(hm));
}

FunctorTables tabulate(const VFunctor& f) {
  if (!f.src->complete()) throw ShapeError("tabulate needs a complete source category");
  FunctorTables t;
  auto objs = f.src->objects();
  for (auto a : objs) t.obj_map.push_back(f.on_obj(a));
  const BaseKind k = f.src->base();
  for (auto a : objs)
    for (auto b : objs) {
      BaseValue hs = f.src->hom(a, b);
      BaseValue ht = f.tgt->hom(f.on_obj(a), f.on_obj(b));
      std::vector<std::int64_t> tab(k.is_set() ? hs.size : hs.size * ht.size, 0);
      for (std::int64_t i = 0; i < hs.size; ++i) {
        BaseMap img = f.tgt->name_of(f.on_mor(f.src->generator(a, b, i)));
        if (k.is_set())
          tab[i] = img.table[0];
        else
          for (std::int64_t r = 0; r < ht.size; ++r) tab[r * hs.size + i] = img.table[r];
      }
      t.hom_maps.push_back(BaseMap{hs, ht, std::move(tab)});
    }
  return t;
}

nlohmann::json mor_json(const Mor& f) {
  return nlohmann::json{{"src", f.src}, {"tgt", f.tgt}, {"table", f.m.table}};
}

// ---------------------------------------------------------------- validators

void for_each_tuple(const std::vector<Obj>& objs, int arity,
                    const std::function<bool(const std::vector<Obj>&)>& visit) {
  if (arity > 0 && objs.empty()) return;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Obj> xs(arity);
  while (true) {
    for (int i = 0; i < arity; ++i) xs[i] = objs[idx[i]];
    if (!visit(xs)) return;
    int i = arity - 1;
    while (i >= 0 && ++idx[i] == objs.size()) idx[i--] = 0;
    if (i < 0) return;
  }
}

Report validate_category(const Category& c) {
  Report r;
  auto ca = r.open("category.assoc", "assoc");
  auto cl = r.open("category.left-unit", "left-unit");
  auto cr = r.open("category.right-unit", "right-unit");
  auto objs = c.objects();
  try {
    for_each_tuple(objs, 2, [&](const std::vector<Obj>& ab) {
      const Obj a = ab[0], b = ab[1];
      for (std::int64_t i = 0; i < c.generator_count(a, b); ++i) {
        Mor f = c.generator(a, b, i);
        nlohmann::json where{{"objects", ab}, {"element", i}};
        r.record(cl, c.compose(c.identity(b), f) == f, where);
        r.record(cr, c.compose(f, c.identity(a)) == f, where);
      }
      return true;
    });
    for_each_tuple(objs, 4, [&](const std::vector<Obj>& o) {
      const std::int64_t nf = c.generator_count(o[0], o[1]), ng = c.generator_count(o[1], o[2]),
                         nh = c.generator_count(o[2], o[3]);
      for (std::int64_t i = 0; i < nf; ++i) {
        Mor f = c.generator(o[0], o[1], i);
        for (std::int64_t j = 0; j < ng; ++j) {
          Mor g = c.generator(o[1], o[2], j);
          Mor gf = c.compose(g, f);
          for (std::int64_t k = 0; k < nh; ++k) {
            Mor h = c.generator(o[2], o[3], k);
            r.record(ca, c.compose(h, gf) == c.compose(c.compose(h, g), f),
                     nlohmann::json{{"objects", o}, {"elements", {i, j, k}}});
          }
        }
      }
      return true;
    });
  } catch (const ShapeError& e) {
    r.abort(ca, e.what());
  }
  return r;
}

Report validate_functor(const VFunctor& f) {
  Report r;
  auto cc = r.open("functor.comp", "functor-comp");
  auto ci = r.open("functor.ident", "functor-ident");
  auto objs = f.src->objects();
  try {
    for (auto a : objs) r.record(ci, f.on_mor(f.src->identity(a)) == f.tgt->identity(f.on_obj(a)),
                                 nlohmann::json{{"object", a}});
    for_each_tuple(objs, 3, [&](const std::vector<Obj>& o) {
      for (std::int64_t i = 0; i < f.src->generator_count(o[0], o[1]); ++i) {
        Mor x = f.src->generator(o[0], o[1], i);
        Mor fx = f.on_mor(x);
        for (std::int64_t j = 0; j < f.src->generator_count(o[1], o[2]); ++j) {
          Mor y = f.src->generator(o[1], o[2], j);
          r.record(cc, f.on_mor(f.src->compose(y, x)) == f.tgt->compose(f.on_mor(y), fx),
                   nlohmann::json{{"objects", o}, {"elements", {i, j}}});
        }
      }
      return true;
    });
  } catch (const ShapeError& e) {
    r.abort(cc, e.what());
  }
  return r;
}

void check_naturality(Report& r, std::size_t check, const Category& dom, const Category& cod,
                      int arity, const std::function<Mor(const std::vector<Mor>&)>& F,
                      const std::function<Mor(const std::vector<Mor>&)>& G,
                      const std::function<Mor(const std::vector<Obj>&)>& theta,
                      const std::vector<Obj>& objs) {
  try {
    for_each_tuple(objs, arity, [&](const std::vector<Obj>& xs) {
      Mor tx = theta(xs);
      std::vector<Mor> fs(arity);
      for (int i = 0; i < arity; ++i) fs[i] = dom.identity(xs[i]);
      for (int v = 0; v < arity; ++v) {
        for (auto b : objs) {
          std::vector<Obj> ys = xs;
          ys[v] = b;
          Mor ty = theta(ys);
          const std::int64_t n = dom.generator_count(xs[v], b);
          for (std::int64_t i = 0; i < n; ++i) {
            std::vector<Mor> gs = fs;
            gs[v] = dom.generator(xs[v], b, i);
            bool ok = cod.compose(ty, F(gs)) == cod.compose(G(gs), tx);
            r.record(check, ok,
                     nlohmann::json{{"objects", xs}, {"variable", v}, {"to", b}, {"element", i}});
          }
        }
      }
      return true;
    });
  } catch (const ShapeError& e) {
    r.abort(check, std::string("naturality: ") + e.what());
  }
}

Report validate_natural(const VNatural& t) {
  Report r;
  auto ct = r.open("natural.typing", "typing");
  auto cn = r.open("natural.square", "naturality");
  if (t.from.src != t.to.src || t.from.tgt != t.to.tgt) {
    r.abort(ct, "functors are not parallel");
    return r;
  }
  const Category& dom = *t.from.src;
  const Category& cod = *t.from.tgt;
  auto objs = dom.objects();
  for (auto a : objs) {
    Mor c = t.component(a);
    r.record(ct, c.src == t.from.on_obj(a) && c.tgt == t.to.on_obj(a), nlohmann::json{{"object", a}});
  }
  if (!r.ok()) return r;
  check_naturality(
      r, cn, dom, cod, 1, [&](const std::vector<Mor>& f) { return t.from.on_mor(f[0]); },
      [&](const std::vector<Mor>& f) { return t.to.on_mor(f[0]); },
      [&](const std::vector<Obj>& x) { return t.component(x[0]); }, objs);
  return r;
}

// ---------------------------------------------------------------- tensor of categories

std::shared_ptr<FinCat> tensor_categories(const FinCat& a, const FinCat& b) {
  if (!(a.base() == b.base())) throw ShapeError("tensor_categories: base mismatch");
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  auto fst = [nb](Obj p) { return p / nb; };
  auto snd = [nb](Obj p) { return p % nb; };
  std::vector<BaseValue> homs;
  for (Obj p = 0; p < n; ++p)
    for (Obj q = 0; q < n; ++q)
      homs.push_back(tensor(a.hom_value(fst(p), fst(q)), b.hom_value(snd(p), snd(q))));
  std::vector<BaseMap> comp;
  for (Obj p = 0; p < n; ++p)
    for (Obj q = 0; q < n; ++q)
      for (Obj s = 0; s < n; ++s) {
        BaseMap swap = middle_four(a.hom_value(fst(q), fst(s)), b.hom_value(snd(q), snd(s)),
                                   a.hom_value(fst(p), fst(q)), b.hom_value(snd(p), snd(q)));
        BaseMap both = tensor(a.comp_map(fst(p), fst(q), fst(s)), b.comp_map(snd(p), snd(q), snd(s)));
        comp.push_back(duo::compose(both, swap));
      }
  std::vector<BaseMap> ident;
  for (Obj p = 0; p < n; ++p) {
    BaseMap i = tensor(a.ident_map(fst(p)), b.ident_map(snd(p)));
    i.src = unit_value(a.base());
    ident.push_back(std::move(i));
  }
  return std::make_shared<FinCat>(a.base(), std::move(labels), std::move(homs), std::move(comp),
                                  std::move(ident));
}

VFunctor tensor_functors(const VFunctor& f, const VFunctor& g, std::shared_ptr<const FinCat> src,
                         std::shared_ptr<const FinCat> tgt) {
  auto fs = std::dynamic_pointer_cast<const FinCat>(f.src);
  auto gs = std::dynamic_pointer_cast<const FinCat>(g.src);
  auto ft = std::dynamic_pointer_cast<const FinCat>(f.tgt);
  auto gt = std::dynamic_pointer_cast<const FinCat>(g.tgt);
  if (!fs || !gs || !ft || !gt) throw ShapeError("tensor_functors needs table categories");
  if (src->size() != fs->size() * gs->size() || tgt->size() != ft->size() * gt->size())
    throw ShapeError("tensor_functors: endpoint sizes do not match");
  FunctorTables tf = tabulate(f), tg = tabulate(g);
  const int nb = gs->size(), nbt = gt->size(), n = src->size();
  std::vector<Obj> obj_map;
  for (Obj p = 0; p < n; ++p) obj_map.push_back(tf.obj_map[p / nb] * nbt + tg.obj_map[p % nb]);
  std::vector<BaseMap> hom_maps;
  for (Obj p = 0; p < n; ++p)
    for (Obj q = 0; q < n; ++q)
      hom_maps.push_back(tensor(tf.hom_maps[(p / nb) * fs->size() + q / nb],
                                tg.hom_maps[(p % nb) * nb + q % nb]));
  return functor_from_tables(src, tgt, std::move(obj_map), std::move(hom_maps));
}

// ---------------------------------------------------------------- standard categories

std::shared_ptr<FinCat> discrete_category(BaseKind k, std::vector<std::string> labels) {
  const int n = static_cast<int>(labels.size());
  BaseValue u = unit_value(k), z = zero_value(k);
  std::vector<BaseValue> homs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) homs.push_back(a == b ? u : z);
  std::vector<BaseMap> comp;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        BaseValue s = tensor(homs[b * n + c], homs[a * n + b]);
        const BaseValue& t = homs[a * n + c];
        comp.push_back(a == b && b == c ? identity(u) : empty_or_zero(s, t));
      }
  std::vector<BaseMap> ident(n, identity(u));
  return std::make_shared<FinCat>(k, std::move(labels), std::move(homs), std::move(comp),
                                  std::move(ident));
}

std::shared_ptr<FinCat> one_object_category(BaseKind k, int n, const std::vector<int>& mult, int unit,
                                            std::string label) {
  if (static_cast<int>(mult.size()) != n * n) throw ShapeError("multiplication table must be n*n");
  for (int v : mult)
    if (v < 0 || v >= n) throw ShapeError("multiplication value out of range");
  if (unit < 0) {
    unit = 0;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = mult[e * n + x] == x && mult[x * n + e] == x;
      if (ok) {
        unit = e;
        break;
      }
    }
  }
  BaseValue h = make_value(k, n);
  BaseValue hh = tensor(h, h);
  BaseMap comp;
  if (k.is_set()) {
    std::vector<std::int64_t> t(mult.begin(), mult.end());
    comp = BaseMap{hh, h, std::move(t)};
  } else {
    std::vector<std::int64_t> t(static_cast<std::size_t>(n) * n * n, 0);
    for (int i = 0; i < n * n; ++i) t[mult[i] * (n * n) + i] = 1;
    comp = BaseMap{hh, h, std::move(t)};
  }
  return std::make_shared<FinCat>(k, std::vector<std::string>{std::move(label)},
                                  std::vector<BaseValue>{h}, std::vector<BaseMap>{comp},
                                  std::vector<BaseMap>{point(h, unit)});
}

std::shared_ptr<FinCat> unit_category(BaseKind k) { return one_object_category(k, 1, {0}, 0, "J"); }

std::shared_ptr<FinCat> finset_category(
    std::vector<std::string> labels, const std::vector<std::int64_t>& hom_sizes,
    const std::function<std::int64_t(Obj, Obj, Obj, std::int64_t, std::int64_t)>& comp,
    const std::vector<std::int64_t>& ident) {
  const int n = static_cast<int>(labels.size());
  const BaseKind k = BaseKind::finset();
  if (static_cast<int>(hom_sizes.size()) != n * n) throw ShapeError("hom size table must be n*n");
  std::vector<BaseValue> homs;
  for (auto s : hom_sizes) homs.push_back(make_value(k, s));
  std::vector<BaseMap> cm;
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c) {
        const BaseValue &hbc = homs[b * n + c], &hab = homs[a * n + b];
        std::vector<std::int64_t> t;
        for (std::int64_t g = 0; g < hbc.size; ++g)
          for (std::int64_t f = 0; f < hab.size; ++f) t.push_back(comp(a, b, c, g, f));
        cm.push_back(function_map(tensor(hbc, hab), homs[a * n + c], std::move(t)));
      }
  std::vector<BaseMap> id;
  for (Obj a = 0; a < n; ++a) id.push_back(point(homs[a * n + a], ident.at(a)));
  return std::make_shared<FinCat>(k, std::move(labels), std::move(homs), std::move(cm), std::move(id));
}

BaseMap map_from_generators(const BaseValue& x, const BaseValue& out,
                            const std::function<BaseMap(std::int64_t)>& name) {
  if (x.kind.is_set()) {
    std::vector<std::int64_t> t(x.size);
    for (std::int64_t i = 0; i < x.size; ++i) t[i] = name(i).table.at(0);
    return BaseMap{x, out, std::move(t)};
  }
  std::vector<std::int64_t> t(x.size * out.size, 0);
  for (std::int64_t i = 0; i < x.size; ++i) {
    BaseMap v = name(i);
    for (std::int64_t r = 0; r < out.size; ++r) t[r * x.size + i] = v.table.at(r);
  }
  return BaseMap{x, out, std::move(t)};
}

std::optional<std::vector<Mor>> all_morphisms(const Category& c, Obj a, Obj b, std::int64_t cap) {
  BaseValue h = c.hom(a, b);
  std::vector<Mor> out;
  if (h.kind.is_set()) {
    if (h.size > cap) return std::nullopt;
    for (std::int64_t i = 0; i < h.size; ++i) out.push_back(c.generator(a, b, i));
    return out;
  }
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < h.size; ++i) {
    total *= h.kind.p;
    if (total > cap) return std::nullopt;
  }
  std::vector<std::int64_t> coords(h.size, 0);
  for (std::int64_t n = 0; n < total; ++n) {
    out.push_back(c.from_name(a, b, vector_point(h, coords)));
    for (std::int64_t i = h.size - 1; i >= 0; --i) {
      if (++coords[i] < h.kind.p) break;
      coords[i] = 0;
    }
  }
  return out;
}

}  // namespace duo
