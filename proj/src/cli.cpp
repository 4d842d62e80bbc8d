#include "duo/cli.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace duo {

namespace {

using json = nlohmann::json;

void require_kind(const SpecFile& f, const std::string& kind, const std::string& who) {
  if (f.kind != kind) throw ParseError(who + " needs a '" + kind + "' file, got '" + f.kind + "'");
}

// Structural failures met while running a check become a failing "typing" entry.
void shape_failure(Report& r, const std::string& id, const ShapeError& e) {
  r.abort(r.open(id, "typing"), e.what());
}

CommandResult run(const std::string& text, const std::function<void(const SpecFile&, CommandResult&)>& body) {
  CommandResult out;
  try {
    SpecFile f = parse_spec(text);
    try {
      body(f, out);
    } catch (const ShapeError& e) {
      shape_failure(out.report, "structure", e);
    }
    out.status = out.report.ok() ? "pass" : "fail";
    out.exit_code = out.report.ok() ? kExitPass : kExitFail;
  } catch (const ParseError& e) {
    out = CommandResult{};
    out.status = "error";
    out.exit_code = kExitParse;
    out.error = std::string("parse error: ") + e.what();
  } catch (const json::exception& e) {
    out = CommandResult{};
    out.status = "error";
    out.exit_code = kExitParse;
    out.error = std::string("parse error: ") + e.what();
  } catch (const BudgetError& e) {
    out = CommandResult{};
    out.status = "error";
    out.exit_code = kExitBudget;
    out.error = std::string("budget exceeded: ") + e.what();
  }
  return out;
}

Report validate_lift_spec(const LiftSpec& ls) {
  auto mc = build_module_category(ls.b.d, ls.b.monoid(), ls.carriers);
  return validate_lifted(lift_bimonoid_to_monoidal(ls.b, mc));
}

void validate_body(const SpecFile& f, CommandResult& out) {
  Report& r = out.report;
  const BaseKind k = f.base;
  const json& p = f.payload;
  if (f.kind == "category") {
    r = validate_category(*category_from_json(k, p));
  } else if (f.kind == "monoidal") {
    r = p.is_object() && p.contains("lift_bimonoid") ? validate_lift_spec(lift_from_json(k, p))
                                                     : validate_monoidal(monoidal_from_json(k, p));
  } else if (f.kind == "braided") {
    Braiding b = braided_from_json(k, p);
    r.merge(validate_monoidal(b.m), "monoidal");
    r.merge(validate_braiding(b), "braiding");
  } else if (f.kind == "duoidal") {
    r = validate_duoidal(duoidal_from_json(k, p));
  } else if (f.kind == "bimonoid") {
    r = validate_bimonoid(bimonoid_from_json(k, p));
  } else if (f.kind == "produoidal") {
    ProduoidalSpec s = produoidal_from_json(k, p);
    r = check_presheaf_duoidal_pointwise(produoidal_from_duoidal(s.d), s.witnesses);
  } else if (f.kind == "warping") {
    WarpingSpec s = warping_from_json(k, p);
    r = validate_warping(s.w);
    if (!r.ok()) return;
    r.merge(validate_monoidal(warp(s.w)), "warped");
    if (!s.monoidality) return;
    r.merge(validate_warp_monoidality(*s.braiding, s.w, *s.monoidality), "monoidality");
    if (!r.ok()) return;
    r.merge(validate_duoidal(duoidal_from_warped_lax_braided(*s.braiding, s.w, *s.monoidality)), "duoidal");
  } else if (f.kind == "witness") {
    WitnessSpec s = witness_from_json(k, p);
    r = check_closedness(s.w, s.d);
  }
}

// Module carriers used by the constructions: suite objects no larger than the bimonoid's carrier.
std::vector<Obj> small_carriers(const Bimonoid& b) {
  std::vector<Obj> out;
  for (Obj a : b.d.c().objects())
    if (a <= b.carrier) out.push_back(a);
  return out;
}

SpecFile spec(BaseKind k, std::string kind, json payload) { return SpecFile{k, std::move(kind), std::move(payload)}; }

void construct_body(const std::string& target, const SpecFile& f, CommandResult& out) {
  Report& r = out.report;
  const BaseKind k = f.base;
  const std::string who = "construct " + target;
  if (target == "from-braided") {
    require_kind(f, "braided", who);
    DuoidalStructure d = from_braided(braided_from_json(k, f.payload));
    r = validate_duoidal(d);
    out.outputs.push_back({"from_braided", spec(k, "duoidal", duoidal_to_json(d))});
  } else if (target == "warp") {
    require_kind(f, "warping", who);
    WarpingSpec s = warping_from_json(k, f.payload);
    r = validate_warping(s.w);
    if (!r.ok()) return;
    MonoidalStructure box = warp(s.w);
    r.merge(validate_monoidal(box), "warped");
    if (!dynamic_cast<const FinCat*>(box.cat.get())) throw ParseError("warp: only table carriers are written out");
    out.outputs.push_back({"warped", spec(k, "monoidal", monoidal_to_json(box))});
  } else if (target == "modules") {
    require_kind(f, "bimonoid", who);
    Bimonoid b = bimonoid_from_json(k, f.payload);
    auto mc = build_module_category(b.d, b.monoid(), small_carriers(b));
    auto tab = tabulate_category(*mc);
    r.merge(validate_category(*tab), "modules");
    out.result = json{{"modules", tab->size()}};
    out.outputs.push_back({"modules", spec(k, "category", category_to_json(*tab))});
  } else if (target == "day-convolve") {
    require_kind(f, "produoidal", who);
    ProduoidalSpec s = produoidal_from_json(k, f.payload);
    if (s.witnesses.size() < 2) throw ParseError("day-convolve needs two witnesses");
    ProduoidalData p = produoidal_from_duoidal(s.d);
    Presheaf star = day_convolve(p, Conv::Star, s.witnesses[0], s.witnesses[1]);
    Presheaf circ = day_convolve(p, Conv::Circ, s.witnesses[0], s.witnesses[1]);
    r.merge(validate_presheaf(star), "star");
    r.merge(validate_presheaf(circ), "circ");
    json sizes{{"star", json::array()}, {"circ", json::array()}};
    for (const auto& v : star.values) sizes["star"].push_back(v.size);
    for (const auto& v : circ.values) sizes["circ"].push_back(v.size);
    out.result = sizes;
    out.outputs.push_back({"convolved", spec(k, "produoidal", produoidal_to_json(s.d, {star, circ}))});
  } else if (target == "lift-bimonoid") {
    require_kind(f, "bimonoid", who);
    LiftSpec ls{bimonoid_from_json(k, f.payload), {}};
    ls.carriers = small_carriers(ls.b);
    r = validate_lift_spec(ls);
    out.outputs.push_back(
        {"lifted", spec(k, "monoidal", json{{"lift_bimonoid", f.payload}, {"carriers", ls.carriers}})});
  } else if (target == "produoidal-from-duoidal") {
    require_kind(f, "duoidal", who);
    DuoidalStructure d = duoidal_from_json(k, f.payload);
    auto fc = std::dynamic_pointer_cast<const FinCat>(d.h.cat);
    if (!fc) throw ParseError("produoidal-from-duoidal needs a table carrier");
    ProduoidalData p = produoidal_from_duoidal(d);
    std::vector<Presheaf> ws;
    for (Obj a = 0; a < fc->size(); ++a) ws.push_back(representable(fc, a));
    ws.push_back(unit_presheaf(p, Conv::Star));
    ws.push_back(unit_presheaf(p, Conv::Circ));
    r = check_presheaf_duoidal_pointwise(p, ws);
    out.outputs.push_back({"produoidal", spec(k, "produoidal", produoidal_to_json(d, ws))});
  } else {
    std::string all;
    for (const auto& t : construct_targets()) all += (all.empty() ? "" : ", ") + t;
    throw ParseError("unknown construction '" + target + "'; expected one of: " + all);
  }
}

// Decode then encode; descriptor payloads with overrides have no canonical re-encoding and are skipped.
std::optional<json> reencode(const SpecFile& f) {
  const BaseKind k = f.base;
  const json& p = f.payload;
  if (p.is_object() && p.dump().find("\"overrides\"") != std::string::npos) return std::nullopt;
  if (f.kind == "category") return category_to_json(*category_from_json(k, p));
  if (f.kind == "monoidal" && !p.contains("lift_bimonoid")) return monoidal_to_json(monoidal_from_json(k, p));
  if (f.kind == "braided") return braided_to_json(braided_from_json(k, p));
  if (f.kind == "duoidal") return duoidal_to_json(duoidal_from_json(k, p));
  if (f.kind == "bimonoid") return bimonoid_to_json(bimonoid_from_json(k, p));
  return std::nullopt;
}

void roundtrip_body(const SpecFile& f, CommandResult& out) {
  Report& r = out.report;
  auto cf = r.open("file.parse-serialize", "parse-serialize");
  const std::string once = serialize_spec(f);
  r.record(cf, serialize_spec(parse_spec(once)) == once, json{{"kind", f.kind}});
  if (auto again = reencode(f)) {
    auto cp = r.open("file.decode-encode", "decode-encode");
    r.record(cp, *again == f.payload, json{{"kind", f.kind}});
  }
  if (f.kind != "bimonoid") return;

  Bimonoid b = bimonoid_from_json(f.base, f.payload);
  auto mc = build_module_category(b.d, b.monoid(), small_carriers(b));
  out.result["modules"] = mc->objects().size();
  try {
    EndResult e = end_of_representable(ModuleCategory(b.d, b.monoid()));
    r.merge(e.report, "end");
    out.result["end_carrier"] = e.carrier.size;
  } catch (const ShapeError& e) {
    shape_failure(r, "end", e);
  }
  LiftedMonoidal l = lift_bimonoid_to_monoidal(b, mc);
  r.merge(validate_lifted(l), "lift");
  Bimonoid back = extract_bimonoid_from_monoidal(l);
  auto ce = r.open("extract.lift", "extract-lift");
  r.record(ce, back.mult == b.mult, json{{"component", "mult"}});
  r.record(ce, back.unit == b.unit, json{{"component", "unit"}});
  r.record(ce, back.comult == b.comult, json{{"component", "comult"}});
  r.record(ce, back.counit == b.counit, json{{"component", "counit"}});
  r.merge(compare_lifts(l, lift_bimonoid_to_monoidal(back, mc)).report, "relift");
}

void classify_body(const SpecFile& f, CommandResult& out) {
  require_kind(f, "bimonoid", "classify");
  Bimonoid b = bimonoid_from_json(f.base, f.payload);
  out.report.merge(validate_bimonoid(b), "bimonoid");
  if (!out.report.ok()) return;
  FusionPair fp = build_fusion(b);
  out.report.merge(validate_fusion(fp), "fusion");
  HopfClass h = classify_hopf(fp);
  out.result = json{{"hopf", h.hopf}, {"left", h.left}, {"right", h.right}};
}

// ---------------------------------------------------------------- fixtures

const std::vector<int> kZ2 = {0, 1, 1, 0};
const std::vector<int> kAbsorb = {0, 1, 1, 1};

DuoidalStructure cartesian(BaseKind k, std::vector<Obj> suite) {
  return from_braided(symmetric_braiding(base_monoidal(k, std::move(suite))));
}

DuoidalStructure discrete(const std::vector<int>& orders) {
  return from_braided(symmetric_braiding(discrete_abelian(BaseKind::finset(), orders)));
}

std::shared_ptr<const BaseCat> base_of(const DuoidalStructure& d) {
  return std::dynamic_pointer_cast<const BaseCat>(d.h.cat);
}

Bimonoid diagonal_bimonoid(const std::vector<int>& mult) {
  DuoidalStructure d = cartesian(BaseKind::finset(), {0, 1, 2, 3, 4});
  MonoidObj mo = table_monoid(d.h, 2, mult, 0);
  ComonoidObj co = diagonal_comonoid(d.h, mo.carrier);
  return Bimonoid{d, mo.carrier, mo.mult, mo.unit, co.comult, co.counit};
}

// One object, End = Z/2, tensor of morphisms is addition, every constraint the generator.
SpecFile broken_pentagon() {
  auto c = one_object_category(BaseKind::finset(), 2, kZ2, 0);
  MonoidalTables t;
  BaseValue e = c->hom_value(0, 0);
  t.tensor_obj = {0};
  t.tensor_hom = {function_map(tensor(e, e), e, {0, 1, 1, 0})};
  t.unit = 0;
  t.assoc = {point(e, 1)};
  t.lunit = {point(e, 0)};
  t.runit = {point(e, 0)};
  return spec(BaseKind::finset(), "monoidal", monoidal_to_json(monoidal_from_tables(c, t)));
}

SpecFile broken_presheaf() {
  DuoidalStructure lax = from_braided(idempotent_lax_braiding());
  auto c = std::dynamic_pointer_cast<const FinCat>(lax.h.cat);
  // P(X) = {0,1} with e acting by the swap, which is not idempotent.
  Presheaf q = presheaf_from_actions(
      c, {make_value(BaseKind::finset(), 1), make_value(BaseKind::finset(), 2)},
      [](const Mor& f) {
        BaseValue v = make_value(BaseKind::finset(), f.src == 0 ? 1 : 2);
        if (f.src == 1 && f.m.table[0] == 1) return function_map(v, v, {1, 0});
        return identity(v);
      },
      "swap");
  return spec(BaseKind::finset(), "produoidal", produoidal_to_json(lax, {representable(c, 1), q}));
}

SpecFile identity_warping_fixture() {
  Braiding br = symmetric_braiding(discrete_abelian(BaseKind::finset(), {3}));
  WarpingData w = identity_warping(br.m);
  WarpMonoidality md = trivial_monoidality(w);
  return spec(BaseKind::finset(), "warping", warping_to_json(w, &br, &md));
}

// The identity warping of BZ/2 (see broken_pentagon) with v replaced by the generator.
SpecFile broken_warping() {
  auto c = one_object_category(BaseKind::finset(), 2, kZ2, 0);
  MonoidalTables t;
  BaseValue e = c->hom_value(0, 0);
  t.tensor_obj = {0};
  t.tensor_hom = {function_map(tensor(e, e), e, {0, 1, 1, 0})};
  t.unit = 0;
  t.assoc = t.lunit = t.runit = {point(e, 0)};
  WarpingData w = identity_warping(monoidal_from_tables(c, t));
  w.v = [c](Obj, Obj) { return c->element(0, 0, 1); };
  return spec(BaseKind::finset(), "warping", warping_to_json(w));
}

SpecFile witness_fixture(bool broken) {
  DuoidalStructure d = cartesian(BaseKind::finset(), broken ? std::vector<Obj>{0, 1, 2} : std::vector<Obj>{0, 1, 2, 3});
  json j{{"duoidal", duoidal_to_json(d)}, {"witness", "braided"}, {"families", broken ? "ii'" : "both"}};
  if (broken) {
    // Twist the X coordinate of X*(JoY) at (2,2): still invertible, no longer natural.
    auto base = base_of(d);
    ClosednessWitness w = braided_closedness_witness(symmetric_braiding(d.h));
    Mor m = base->compose(w.s(2, 2), base->lift(function_map(base->value(4), base->value(4), {2, 3, 0, 1})));
    j["overrides"] = json{{"s", json::array({json{{"at", {2, 2}}, {"mor", mor_to_json(*base, m)}}})}};
  }
  return spec(BaseKind::finset(), "witness", j);
}

// Over FinVect(3) the unit maps of from_braided are scalars 1 -> 1; rescale one of them by 2.
SpecFile scaled_unit_map(const char* which) {
  BaseKind k = BaseKind::finvect(3);
  DuoidalStructure d = cartesian(k, {0, 1, 2});
  auto base = base_of(d);
  json j = duoidal_to_json(d);
  j["overrides"] = json{{which, mor_to_json(*base, base->lift(matrix_map(base->value(1), base->value(1), {2})))}};
  return spec(k, "duoidal", j);
}

const std::map<std::string, std::function<SpecFile()>>& catalog() {
  static const std::map<std::string, std::function<SpecFile()>> c{
      {"z2_cartesian_duoidal",
       [] { return spec(BaseKind::finset(), "duoidal", duoidal_to_json(discrete({2}))); }},
      {"z3_duoidal", [] { return spec(BaseKind::finset(), "duoidal", duoidal_to_json(discrete({3}))); }},
      {"z2xz2_duoidal", [] { return spec(BaseKind::finset(), "duoidal", duoidal_to_json(discrete({2, 2}))); }},
      {"finset3_duoidal",
       [] { return spec(BaseKind::finset(), "duoidal", duoidal_to_json(cartesian(BaseKind::finset(), {0, 1, 2, 3}))); }},
      {"finvect2_duoidal",
       [] {
         BaseKind k = BaseKind::finvect(2);
         return spec(k, "duoidal", duoidal_to_json(cartesian(k, {0, 1, 2})));
       }},
      {"lax_braided_duoidal",
       [] { return spec(BaseKind::finset(), "duoidal", duoidal_to_json(from_braided(idempotent_lax_braiding()))); }},
      {"broken_gamma",
       [] {
         DuoidalStructure d = cartesian(BaseKind::finset(), {0, 1, 2, 3});
         auto base = base_of(d);
         Mor wrong = base->lift(symmetry(base->value(4), base->value(4)));
         json j = duoidal_to_json(d);
         j["overrides"] = json{{"gamma", json::array({json{{"at", {2, 2, 2, 2}}, {"mor", mor_to_json(*base, wrong)}}})}};
         return spec(BaseKind::finset(), "duoidal", j);
       }},
      {"broken_delta",
       [] {
         BaseKind k = BaseKind::finvect(3);
         DuoidalStructure d = cartesian(k, {0, 1, 2});
         auto base = base_of(d);
         json j = duoidal_to_json(d);
         // delta : J -> JoJ rescaled by 2
         j["overrides"] = json{{"delta", mor_to_json(*base, base->lift(matrix_map(base->value(1), base->value(1), {2})))}};
         return spec(k, "duoidal", j);
       }},
      {"broken_mu", [] { return scaled_unit_map("mu"); }},
      {"broken_tau", [] { return scaled_unit_map("tau"); }},
      {"walking_idempotent",
       [] { return spec(BaseKind::finset(), "category", category_to_json(*idempotent_lax_braiding().m.cat)); }},
      {"z3_monoidal",
       [] { return spec(BaseKind::finset(), "monoidal", monoidal_to_json(discrete_abelian(BaseKind::finset(), {3}))); }},
      {"broken_pentagon", broken_pentagon},
      {"lax_braided", [] { return spec(BaseKind::finset(), "braided", braided_to_json(idempotent_lax_braiding())); }},
      {"z2_group_bimonoid",
       [] { return spec(BaseKind::finset(), "bimonoid", bimonoid_to_json(diagonal_bimonoid(kZ2))); }},
      {"absorbing_bimonoid",
       [] { return spec(BaseKind::finset(), "bimonoid", bimonoid_to_json(diagonal_bimonoid(kAbsorb))); }},
      {"broken_bimonoid",
       [] {
         Bimonoid b = diagonal_bimonoid(kZ2);
         auto base = base_of(b.d);
         // x -> (x, x+1)
         b.comult = base->lift(function_map(base->value(2), base->value(4), {1, 2}));
         return spec(BaseKind::finset(), "bimonoid", bimonoid_to_json(b));
       }},
      {"z2_produoidal",
       [] {
         DuoidalStructure d = discrete({2});
         json j{{"duoidal", duoidal_to_json(d)},
                {"witnesses", json::array({json{{"representable", 0}}, json{{"representable", 1}},
                                           json{{"unit", "star"}}})}};
         return spec(BaseKind::finset(), "produoidal", j);
       }},
      {"broken_presheaf", broken_presheaf},
      {"identity_warping", identity_warping_fixture},
      {"z3_shift_warping",
       [] {
         return spec(BaseKind::finset(), "warping",
                     warping_to_json(shift_warping(discrete_abelian(BaseKind::finset(), {3}))));
       }},
      {"broken_warping", broken_warping},
      {"cartesian_witness", [] { return witness_fixture(false); }},
      {"broken_witness", [] { return witness_fixture(true); }},
  };
  return c;
}

}  // namespace

json CommandResult::to_json(const std::vector<std::string>& artifacts) const {
  json j{{"status", status}, {"checks", report.to_json()}, {"artifacts", artifacts}};
  if (!result.is_null()) j["result"] = result;
  if (!error.empty()) j["error"] = error;
  return j;
}

const std::vector<std::string>& construct_targets() {
  static const std::vector<std::string> t{"from-braided",  "warp",          "modules",
                                          "day-convolve", "lift-bimonoid", "produoidal-from-duoidal"};
  return t;
}

CommandResult run_validate(const std::string& text) { return run(text, validate_body); }

CommandResult run_construct(const std::string& target, const std::string& text) {
  return run(text, [&](const SpecFile& f, CommandResult& out) { construct_body(target, f, out); });
}

CommandResult run_roundtrip(const std::string& text) { return run(text, roundtrip_body); }

CommandResult run_classify(const std::string& text) { return run(text, classify_body); }

std::vector<std::string> fixture_catalog() {
  std::vector<std::string> names;
  for (const auto& [name, _] : catalog()) names.push_back(name);
  return names;
}

SpecFile emit_fixture(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) {
    std::string all;
    for (const auto& n : fixture_catalog()) all += (all.empty() ? "" : ", ") + n;
    throw ParseError("unknown fixture '" + name + "'; catalog: " + all);
  }
  return it->second();
}

}  // namespace duo
