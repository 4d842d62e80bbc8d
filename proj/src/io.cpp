#include "duo/io.hpp"

#include <memory>
#include <string>
#include <vector>

namespace duo {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

bool has(const json& j, const char* key) { return j.is_object() && j.contains(key); }

std::int64_t integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> integers(const json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(integer(x, what));
  return out;
}

const json& array_of(const json& j, std::size_t len, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  if (j.size() != len) bad(what + " must have " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::string text(const json& j, const std::string& what) {
  if (!j.is_string()) bad(what + " must be a string");
  return j.get<std::string>();
}

FinCatPtr as_fincat(const CatPtr& c, const std::string& what) {
  auto f = std::dynamic_pointer_cast<const FinCat>(c);
  if (!f) bad(what + " needs a table carrier");
  return f;
}

bool is_base_structure(const MonoidalStructure& m) {
  return std::dynamic_pointer_cast<const BaseCat>(m.cat) && (m.name == "cartesian" || m.name == "tensor");
}

json tables_to_json(const MonoidalTables& t) {
  json j;
  j["tensor_obj"] = t.tensor_obj;
  j["unit"] = t.unit;
  for (const char* key : {"tensor_hom", "assoc", "lunit", "runit"}) j[key] = json::array();
  for (const auto& m : t.tensor_hom) j["tensor_hom"].push_back(map_to_json(m));
  for (const auto& m : t.assoc) j["assoc"].push_back(map_to_json(m));
  for (const auto& m : t.lunit) j["lunit"].push_back(map_to_json(m));
  for (const auto& m : t.runit) j["runit"].push_back(map_to_json(m));
  return j;
}

std::vector<BaseMap> maps(BaseKind k, const json& j, std::size_t len, const std::string& what) {
  std::vector<BaseMap> out;
  for (const auto& x : array_of(j, len, what)) out.push_back(map_from_json(k, x));
  return out;
}

MonoidalTables tables_from_json(BaseKind k, const json& j, std::int64_t n) {
  MonoidalTables t;
  const auto N = static_cast<std::size_t>(n);
  t.tensor_obj = integers(array_of(field(j, "tensor_obj"), N * N, "tensor_obj"), "tensor_obj");
  t.unit = integer(field(j, "unit"), "unit");
  t.tensor_hom = maps(k, field(j, "tensor_hom"), N * N * N * N, "tensor_hom");
  t.assoc = maps(k, field(j, "assoc"), N * N * N, "assoc");
  t.lunit = maps(k, field(j, "lunit"), N, "lunit");
  t.runit = maps(k, field(j, "runit"), N, "runit");
  return t;
}

std::vector<Mor> mors(const Category& c, const json& j, std::size_t len, const std::string& what) {
  std::vector<Mor> out;
  for (const auto& x : array_of(j, len, what)) out.push_back(mor_from_json(c, x));
  return out;
}

void expect_type(const Mor& f, Obj src, Obj tgt, const std::string& what) {
  if (f.src != src || f.tgt != tgt)
    bad(what + " has type " + std::to_string(f.src) + " -> " + std::to_string(f.tgt) + ", expected " +
        std::to_string(src) + " -> " + std::to_string(tgt));
}

std::vector<Obj> coordinates(const json& j, std::size_t arity, std::int64_t n, const std::string& what) {
  auto at = integers(array_of(j, arity, what), what);
  for (auto a : at)
    if (n >= 0 && (a < 0 || a >= n)) bad(what + " index out of range");
  return at;
}

std::int64_t carrier_size(const Category& c) {
  return dynamic_cast<const FinCat*>(&c) ? static_cast<std::int64_t>(c.objects().size()) : -1;
}

// {"gamma": [{"at": [a,b,c,d], "mor": M}], "mu": M, "tau": M, "delta": M}
DuoidalStructure apply_overrides(DuoidalStructure d, const json& o) {
  const Category& c = d.c();
  const std::int64_t n = carrier_size(c);
  if (has(o, "gamma"))
    for (const auto& e : field(o, "gamma")) {
      auto at = coordinates(field(e, "at"), 4, n, "gamma override");
      Mor m = mor_from_json(c, field(e, "mor"));
      expect_type(m, d.hs(d.vs(at[0], at[1]), d.vs(at[2], at[3])), d.vs(d.hs(at[0], at[2]), d.hs(at[1], at[3])),
                  "gamma override");
      d = with_gamma(d, at[0], at[1], at[2], at[3], m);
    }
  auto unit_map = [&](const char* key, Mor& slot) {
    if (!has(o, key)) return;
    Mor m = mor_from_json(c, field(o, key));
    expect_type(m, slot.src, slot.tgt, std::string(key) + " override");
    slot = m;
  };
  unit_map("mu", d.mu);
  unit_map("tau", d.tau);
  unit_map("delta", d.delta);
  return d;
}

}  // namespace

const std::vector<std::string>& spec_kinds() {
  static const std::vector<std::string> k{"category", "monoidal", "braided", "duoidal",
                                          "bimonoid", "produoidal", "warping", "witness"};
  return k;
}

SpecFile parse_spec(const std::string& text_in) {
  json j;
  try {
    j = json::parse(text_in);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "version" && it.key() != "base" && it.key() != "kind" && it.key() != "payload")
      bad("unknown top-level field '" + it.key() + "'");
  if (integer(field(j, "version"), "version") != 1) bad("unsupported version");
  SpecFile f;
  const json& b = field(j, "base");
  const std::string type = text(field(b, "type"), "base.type");
  if (type == "finset") {
    f.base = BaseKind::finset();
  } else if (type == "finvect") {
    try {
      f.base = BaseKind::finvect(static_cast<int>(integer(field(b, "p"), "base.p")));
    } catch (const ShapeError& e) {
      bad(e.what());
    }
  } else {
    bad("unknown base type '" + type + "'");
  }
  f.kind = text(field(j, "kind"), "kind");
  bool known = false;
  for (const auto& k : spec_kinds()) known = known || k == f.kind;
  if (!known) bad("unknown kind '" + f.kind + "'");
  f.payload = field(j, "payload");
  return f;
}

std::string serialize_spec(const SpecFile& f) {
  json j;
  j["version"] = 1;
  j["base"] = f.base.is_set() ? json{{"type", "finset"}} : json{{"type", "finvect"}, {"p", f.base.p}};
  j["kind"] = f.kind;
  j["payload"] = f.payload;
  return j.dump(2) + "\n";
}

json map_to_json(const BaseMap& f) {
  return json{{"src", f.src.size}, {"tgt", f.tgt.size}, {"table", f.table}};
}

BaseMap map_from_json(BaseKind k, const json& j) {
  const std::int64_t s = integer(field(j, "src"), "map.src"), t = integer(field(j, "tgt"), "map.tgt");
  if (s < 0 || t < 0) bad("negative map size");
  auto table = integers(field(j, "table"), "map.table");
  try {
    BaseValue x = make_value(k, s), y = make_value(k, t);
    if (k.is_set()) return function_map(x, y, std::move(table));
    for (auto v : table)
      if (v < 0 || v >= k.p) bad("matrix entry out of range");
    return matrix_map(x, y, std::move(table));
  } catch (const ShapeError& e) {
    bad(std::string("map: ") + e.what());
  }
}

json mor_to_json(const Category& c, const Mor& f) {
  (void)c;
  return json{{"src", f.src}, {"tgt", f.tgt}, {"map", map_to_json(f.m)}};
}

Mor mor_from_json(const Category& c, const json& j) {
  Mor f{integer(field(j, "src"), "mor.src"), integer(field(j, "tgt"), "mor.tgt"), map_from_json(c.base(), field(j, "map"))};
  try {
    if (dynamic_cast<const BaseCat*>(&c)) {
      if (f.m.src.size != f.src || f.m.tgt.size != f.tgt) bad("morphism map does not match its objects");
      return f;
    }
    return c.from_name(f.src, f.tgt, f.m);
  } catch (const ShapeError& e) {
    bad(std::string("morphism: ") + e.what());
  }
}

json category_to_json(const Category& c) {
  if (auto b = dynamic_cast<const BaseCat*>(&c)) return json{{"type", "base"}, {"suite", b->objects()}};
  auto f = dynamic_cast<const FinCat*>(&c);
  if (!f) throw ShapeError("only table and base categories can be written");
  const int n = f->size();
  json j{{"type", "tables"}, {"objects", n}};
  j["homs"] = json::array();
  j["comp"] = json::array();
  j["ident"] = json::array();
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) j["homs"].push_back(f->hom_value(a, b).size);
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj d = 0; d < n; ++d) j["comp"].push_back(map_to_json(f->comp_map(a, b, d)));
  for (Obj a = 0; a < n; ++a) j["ident"].push_back(map_to_json(f->ident_map(a)));
  return j;
}

CatPtr category_from_json(BaseKind k, const json& j) {
  const std::string type = text(field(j, "type"), "category.type");
  try {
    if (type == "base") {
      auto suite = integers(field(j, "suite"), "suite");
      if (suite.empty()) bad("empty suite");
      for (auto a : suite) make_value(k, a);  // budget check
      return std::make_shared<BaseCat>(k, std::move(suite));
    }
    if (type != "tables") bad("unknown category type '" + type + "'");
    const std::int64_t n = integer(field(j, "objects"), "objects");
    if (n <= 0) bad("a table category needs objects");
    const auto N = static_cast<std::size_t>(n);
    auto sizes = integers(array_of(field(j, "homs"), N * N, "homs"), "homs");
    std::vector<BaseValue> homs;
    for (auto s : sizes) {
      if (s < 0) bad("negative hom size");
      homs.push_back(make_value(k, s));
    }
    std::vector<std::string> labels;
    for (std::int64_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return std::make_shared<FinCat>(k, std::move(labels), std::move(homs), maps(k, field(j, "comp"), N * N * N, "comp"),
                                    maps(k, field(j, "ident"), N, "ident"));
  } catch (const ShapeError& e) {
    bad(std::string("category: ") + e.what());
  }
}

json monoidal_to_json(const MonoidalStructure& m) {
  json j{{"category", category_to_json(m.c())}};
  if (is_base_structure(m)) {
    j["structure"] = "base";
  } else if (dynamic_cast<const FinCat*>(m.cat.get())) {
    j["tables"] = tables_to_json(tabulate(m));
  } else {
    throw ShapeError("monoidal structure '" + m.name + "' has no file form");
  }
  return j;
}

MonoidalStructure monoidal_from_json(BaseKind k, const json& j) {
  CatPtr c = category_from_json(k, field(j, "category"));
  try {
    if (has(j, "structure")) {
      if (text(field(j, "structure"), "structure") != "base") bad("unknown monoidal structure");
      auto b = std::dynamic_pointer_cast<const BaseCat>(c);
      if (!b) bad("structure 'base' needs a base category");
      return base_monoidal(k, b->objects());
    }
    auto fc = as_fincat(c, "monoidal tables");
    return monoidal_from_tables(fc, tables_from_json(k, field(j, "tables"), fc->size()));
  } catch (const ShapeError& e) {
    bad(std::string("monoidal: ") + e.what());
  }
}

json braided_to_json(const Braiding& b) {
  json j{{"monoidal", monoidal_to_json(b.m)}, {"lax", b.lax}};
  if (is_base_structure(b.m)) {
    j["braiding"] = "symmetric";
    return j;
  }
  j["braiding"] = json::array();
  for (Obj x : b.m.c().objects())
    for (Obj y : b.m.c().objects()) j["braiding"].push_back(mor_to_json(b.m.c(), b.c(x, y)));
  return j;
}

Braiding braided_from_json(BaseKind k, const json& j) {
  MonoidalStructure m = monoidal_from_json(k, field(j, "monoidal"));
  const bool lax = has(j, "lax") && field(j, "lax").is_boolean() && field(j, "lax").get<bool>();
  const json& c = field(j, "braiding");
  if (c.is_string()) {
    if (c.get<std::string>() != "symmetric") bad("unknown braiding '" + c.get<std::string>() + "'");
    if (!is_base_structure(m)) bad("'symmetric' is only a descriptor for base structures");
    Braiding b = symmetric_braiding(m);
    b.lax = lax;
    return b;
  }
  const auto objs = m.c().objects();
  const std::int64_t n = static_cast<std::int64_t>(objs.size());
  auto comps = std::make_shared<std::vector<Mor>>(mors(m.c(), c, static_cast<std::size_t>(n * n), "braiding"));
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y) expect_type((*comps)[x * n + y], m.t(x, y), m.t(y, x), "braiding component");
  return Braiding{m, [comps, n](Obj x, Obj y) { return comps->at(x * n + y); }, lax};
}

json duoidal_to_json(const DuoidalStructure& d) {
  if (is_base_structure(d.h) && d.name == "from_braided(" + d.h.name + ")")
    return json{{"from_braided", braided_to_json(symmetric_braiding(d.h))}};
  if (!dynamic_cast<const FinCat*>(d.h.cat.get())) throw ShapeError("duoidal structure '" + d.name + "' has no file form");
  DuoidalTables t = tabulate(d);
  json j{{"category", category_to_json(d.c())},
         {"horizontal", tables_to_json(t.h)},
         {"vertical", tables_to_json(t.v)},
         {"mu", map_to_json(t.mu)},
         {"tau", map_to_json(t.tau)},
         {"delta", map_to_json(t.delta)}};
  j["gamma"] = json::array();
  for (const auto& g : t.gamma) j["gamma"].push_back(map_to_json(g));
  return j;
}

DuoidalStructure duoidal_from_json(BaseKind k, const json& j) {
  DuoidalStructure d;
  try {
    if (has(j, "from_braided")) {
      d = from_braided(braided_from_json(k, field(j, "from_braided")));
    } else {
      auto fc = as_fincat(category_from_json(k, field(j, "category")), "duoidal tables");
      const auto N = static_cast<std::size_t>(fc->size());
      DuoidalTables t;
      t.h = tables_from_json(k, field(j, "horizontal"), fc->size());
      t.v = tables_from_json(k, field(j, "vertical"), fc->size());
      t.gamma = maps(k, field(j, "gamma"), N * N * N * N, "gamma");
      t.mu = map_from_json(k, field(j, "mu"));
      t.tau = map_from_json(k, field(j, "tau"));
      t.delta = map_from_json(k, field(j, "delta"));
      d = duoidal_from_tables(fc, t);
    }
    if (has(j, "overrides")) d = apply_overrides(d, field(j, "overrides"));
  } catch (const ShapeError& e) {
    bad(std::string("duoidal: ") + e.what());
  }
  return d;
}

json bimonoid_to_json(const Bimonoid& b) {
  const Category& c = b.d.c();
  return json{{"duoidal", duoidal_to_json(b.d)},       {"carrier", b.carrier},
              {"mult", mor_to_json(c, b.mult)},        {"unit", mor_to_json(c, b.unit)},
              {"comult", mor_to_json(c, b.comult)},    {"counit", mor_to_json(c, b.counit)}};
}

Bimonoid bimonoid_from_json(BaseKind k, const json& j) {
  Bimonoid b;
  b.d = duoidal_from_json(k, field(j, "duoidal"));
  const Category& c = b.d.c();
  const Obj M = integer(field(j, "carrier"), "carrier");
  const std::int64_t n = carrier_size(c);
  if (M < 0 || (n >= 0 && M >= n)) bad("carrier out of range");
  b.carrier = M;
  b.mult = mor_from_json(c, field(j, "mult"));
  b.unit = mor_from_json(c, field(j, "unit"));
  b.comult = mor_from_json(c, field(j, "comult"));
  b.counit = mor_from_json(c, field(j, "counit"));
  try {
    expect_type(b.mult, b.d.hs(M, M), M, "mult");
    expect_type(b.unit, b.d.J(), M, "unit");
    expect_type(b.comult, M, b.d.vs(M, M), "comult");
    expect_type(b.counit, M, b.d.one(), "counit");
  } catch (const ShapeError& e) {
    bad(std::string("bimonoid: ") + e.what());
  }
  return b;
}

json presheaf_to_json(const Presheaf& p) {
  json j{{"values", json::array()}, {"action", json::array()}};
  for (const auto& v : p.values) j["values"].push_back(v.size);
  for (const auto& a : p.action) j["action"].push_back(map_to_json(a));
  return j;
}

json produoidal_to_json(const DuoidalStructure& d, const std::vector<Presheaf>& witnesses) {
  json j{{"duoidal", duoidal_to_json(d)}, {"witnesses", json::array()}};
  for (const auto& w : witnesses) j["witnesses"].push_back(presheaf_to_json(w));
  return j;
}

ProduoidalSpec produoidal_from_json(BaseKind k, const json& j) {
  ProduoidalSpec s;
  s.d = duoidal_from_json(k, field(j, "duoidal"));
  auto fc = as_fincat(s.d.h.cat, "produoidal data");
  const Obj n = fc->size();
  const json& ws = field(j, "witnesses");
  if (!ws.is_array()) bad("witnesses must be an array");
  std::optional<ProduoidalData> p;
  int idx = 0;
  for (const auto& w : ws) {
    const std::string what = "witness " + std::to_string(idx++);
    try {
      if (has(w, "representable")) {
        Obj a = integer(field(w, "representable"), what);
        if (a < 0 || a >= n) bad(what + ": object out of range");
        s.witnesses.push_back(representable(fc, a));
      } else if (has(w, "unit")) {
        const std::string u = text(field(w, "unit"), what);
        if (u != "star" && u != "circ") bad(what + ": unit must be 'star' or 'circ'");
        if (!p) p = produoidal_from_duoidal(s.d);
        s.witnesses.push_back(unit_presheaf(*p, u == "star" ? Conv::Star : Conv::Circ));
      } else if (has(w, "empty")) {
        s.witnesses.push_back(empty_presheaf(fc));
      } else {
        Presheaf q;
        q.domain = fc;
        q.name = "W" + std::to_string(idx - 1);
        for (auto v : integers(array_of(field(w, "values"), static_cast<std::size_t>(n), what + ".values"), what)) {
          if (v < 0) bad(what + ": negative size");
          q.values.push_back(make_value(k, v));
        }
        q.action = maps(k, field(w, "action"), static_cast<std::size_t>(n * n), what + ".action");
        for (Obj a = 0; a < n; ++a)
          for (Obj b = 0; b < n; ++b) {
            const BaseMap& act = q.action[a * n + b];
            if (!(act.src == tensor(fc->hom(a, b), q.values[b])) || !(act.tgt == q.values[a]))
              bad(what + ": action " + std::to_string(a) + "," + std::to_string(b) + " is ill-typed");
          }
        s.witnesses.push_back(std::move(q));
      }
    } catch (const ShapeError& e) {
      bad(what + ": " + e.what());
    }
  }
  return s;
}

json warping_to_json(const WarpingData& w, const Braiding* b, const WarpMonoidality* md) {
  const Category& c = w.a.c();
  auto fc = dynamic_cast<const FinCat*>(&c);
  if (!fc) throw ShapeError("only warpings of table structures are written out");
  const auto objs = c.objects();
  FunctorTables ft = tabulate(w.t);
  json j{{"monoidal", monoidal_to_json(w.a)}, {"k", w.k}, {"v0", mor_to_json(c, w.v0)}};
  j["functor"] = json{{"obj", ft.obj_map}, {"hom", json::array()}};
  for (const auto& h : ft.hom_maps) j["functor"]["hom"].push_back(map_to_json(h));
  j["v"] = json::array();
  j["kappa"] = json::array();
  for (Obj x : objs) {
    for (Obj y : objs) j["v"].push_back(mor_to_json(c, w.v(x, y)));
    j["kappa"].push_back(mor_to_json(c, w.kappa(x)));
  }
  if (b && md) {
    j["braiding"] = json::array();
    json m{{"t0", mor_to_json(c, md->t0)},
           {"k_mult", mor_to_json(c, md->k.mult)},
           {"k_unit", mor_to_json(c, md->k.unit)},
           {"t2", json::array()}};
    for (Obj x : objs)
      for (Obj y : objs) {
        j["braiding"].push_back(mor_to_json(c, b->c(x, y)));
        m["t2"].push_back(mor_to_json(c, md->t2(x, y)));
      }
    j["monoidality"] = m;
    j["lax"] = b->lax;
  }
  return j;
}

WarpingSpec warping_from_json(BaseKind k, const json& j) {
  WarpingSpec s;
  MonoidalStructure m = monoidal_from_json(k, field(j, "monoidal"));
  const Category& c = m.c();
  try {
    if (has(j, "preset")) {
      if (text(field(j, "preset"), "preset") != "identity") bad("unknown warping preset");
      s.w = identity_warping(m);
      if (has(j, "monoidality")) {
        if (!is_base_structure(m) && !has(j, "braiding")) bad("monoidality needs a braiding");
        s.braiding = has(j, "braiding") ? braided_from_json(k, json{{"monoidal", field(j, "monoidal")},
                                                                     {"braiding", field(j, "braiding")}})
                                        : symmetric_braiding(m);
        s.monoidality = trivial_monoidality(s.w);
      }
      return s;
    }
    auto fc = as_fincat(m.cat, "explicit warping");
    const Obj n = fc->size();
    const auto N = static_cast<std::size_t>(n);
    const json& f = field(j, "functor");
    auto obj = integers(array_of(field(f, "obj"), N, "functor.obj"), "functor.obj");
    for (auto a : obj)
      if (a < 0 || a >= n) bad("functor object out of range");
    s.w.a = m;
    s.w.t = functor_from_tables(fc, fc, obj, maps(k, field(f, "hom"), N * N, "functor.hom"));
    s.w.k = integer(field(j, "k"), "k");
    if (s.w.k < 0 || s.w.k >= n) bad("k out of range");
    auto v = std::make_shared<std::vector<Mor>>(mors(c, field(j, "v"), N * N, "v"));
    auto kappa = std::make_shared<std::vector<Mor>>(mors(c, field(j, "kappa"), N, "kappa"));
    s.w.v = [v, n](Obj a, Obj b) { return v->at(a * n + b); };
    s.w.kappa = [kappa](Obj a) { return kappa->at(a); };
    s.w.v0 = mor_from_json(c, field(j, "v0"));
    if (has(j, "monoidality")) {
      Braiding b = braided_from_json(k, json{{"monoidal", field(j, "monoidal")},
                                             {"braiding", field(j, "braiding")},
                                             {"lax", has(j, "lax") ? field(j, "lax") : json(false)}});
      b.m = m;
      s.braiding = b;
      const json& md = field(j, "monoidality");
      auto t2 = std::make_shared<std::vector<Mor>>(mors(c, field(md, "t2"), N * N, "t2"));
      WarpMonoidality out;
      out.t2 = [t2, n](Obj a, Obj b) { return t2->at(a * n + b); };
      out.t0 = mor_from_json(c, field(md, "t0"));
      out.k = MonoidObj{s.w.k, mor_from_json(c, field(md, "k_mult")), mor_from_json(c, field(md, "k_unit"))};
      s.monoidality = out;
    }
  } catch (const ShapeError& e) {
    bad(std::string("warping: ") + e.what());
  }
  return s;
}

WitnessSpec witness_from_json(BaseKind k, const json& j) {
  WitnessSpec s;
  s.d = duoidal_from_json(k, field(j, "duoidal"));
  const Category& c = s.d.c();
  const std::int64_t n = carrier_size(c);
  try {
    if (has(j, "witness")) {
      if (text(field(j, "witness"), "witness") != "braided") bad("unknown witness descriptor");
      ClosednessWitness full = braided_closedness_witness(symmetric_braiding(s.d.h));
      const std::string fam = has(j, "families") ? text(field(j, "families"), "families") : "both";
      if (fam != "both" && fam != "ii" && fam != "ii'") bad("families must be 'both', 'ii' or \"ii'\"");
      if (fam != "ii'") {
        s.w.p = full.p;
        s.w.q = full.q;
      }
      if (fam != "ii") {
        s.w.s = full.s;
        s.w.t = full.t;
      }
      if (has(j, "overrides")) {
        const json& o = field(j, "overrides");
        for (auto it = o.begin(); it != o.end(); ++it) {
          const std::string key = it.key();
          const bool ternary = key == "p" || key == "q";
          if (!ternary && key != "s" && key != "t") bad("unknown witness family '" + key + "'");
          for (const auto& e : it.value()) {
            auto at = coordinates(field(e, "at"), ternary ? 3 : 2, n, key + " override");
            Mor m = mor_from_json(c, field(e, "mor"));
            if (ternary) {
              auto& slot = key == "p" ? s.w.p : s.w.q;
              if (!slot) bad("override of an absent family");
              slot = [old = slot, at, m](Obj a, Obj b, Obj d) {
                return a == at[0] && b == at[1] && d == at[2] ? m : old(a, b, d);
              };
            } else {
              auto& slot = key == "s" ? s.w.s : s.w.t;
              if (!slot) bad("override of an absent family");
              slot = [old = slot, at, m](Obj a, Obj b) { return a == at[0] && b == at[1] ? m : old(a, b); };
            }
          }
        }
      }
      return s;
    }
    if (n < 0) bad("explicit witness families need a table carrier");
    const auto N = static_cast<std::size_t>(n);
    auto ternary = [&](const char* key) -> std::function<Mor(Obj, Obj, Obj)> {
      if (!has(j, key)) return {};
      auto v = std::make_shared<std::vector<Mor>>(mors(c, field(j, key), N * N * N, key));
      return [v, n](Obj a, Obj b, Obj d) { return v->at((a * n + b) * n + d); };
    };
    auto binary = [&](const char* key) -> std::function<Mor(Obj, Obj)> {
      if (!has(j, key)) return {};
      auto v = std::make_shared<std::vector<Mor>>(mors(c, field(j, key), N * N, key));
      return [v, n](Obj a, Obj b) { return v->at(a * n + b); };
    };
    s.w = ClosednessWitness{ternary("p"), ternary("q"), binary("s"), binary("t")};
  } catch (const ShapeError& e) {
    bad(std::string("witness: ") + e.what());
  }
  return s;
}

LiftSpec lift_from_json(BaseKind k, const json& j) {
  LiftSpec s{bimonoid_from_json(k, field(j, "lift_bimonoid")), {}};
  const std::int64_t n = carrier_size(s.b.d.c());
  s.carriers = integers(field(j, "carriers"), "carriers");
  for (auto a : s.carriers)
    if (a < 0 || (n >= 0 && a >= n)) bad("carrier out of range");
  return s;
}

std::shared_ptr<FinCat> tabulate_category(const Category& c) {
  const auto objs = c.objects();
  const auto n = static_cast<Obj>(objs.size());
  std::vector<std::string> labels;
  std::vector<BaseValue> homs;
  std::vector<BaseMap> comp, ident;
  for (Obj a : objs) {
    labels.push_back(c.label(a));
    ident.push_back(c.name_of(c.identity(a)));
    for (Obj b : objs) homs.push_back(c.hom(a, b));
  }
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj d = 0; d < n; ++d) {
        const BaseValue &ab = homs[a * n + b], &bd = homs[b * n + d];
        // tensor basis i*|ab|+j is g_i (x) f_j
        comp.push_back(map_from_generators(tensor(bd, ab), homs[a * n + d], [&](std::int64_t k) {
          return c.name_of(c.compose(c.generator(objs[b], objs[d], k / ab.size), c.generator(objs[a], objs[b], k % ab.size)));
        }));
      }
  return std::make_shared<FinCat>(c.base(), std::move(labels), std::move(homs), std::move(comp), std::move(ident));
}

}  // namespace duo
