// Acceptance run: one PASS/FAIL line per criterion, each against a pinned time limit.
// Usage: acceptance <path to duoidal tool> <fixture directory>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "duo/cli.hpp"
#include "support.hpp"

using namespace duo;
using json = nlohmann::json;

namespace {

// Wall-clock limits in seconds, per criterion.
constexpr std::array<double, 8> kLimit = {0, 10, 30, 60, 20, 20, 10, 10};

std::string g_tool, g_fixtures;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

const std::vector<int> kZ2 = {0, 1, 1, 0};
const std::vector<int> kAbsorb = {0, 1, 1, 1};

DuoidalStructure cartesian(std::vector<Obj> suite) {
  return from_braided(symmetric_braiding(base_monoidal(BaseKind::finset(), std::move(suite))));
}

DuoidalStructure discrete(BaseKind k, const std::vector<int>& orders) {
  return from_braided(symmetric_braiding(discrete_abelian(k, orders)));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- 1

Outcome duoidal_suite() {
  Outcome o;
  o.expect(validate_duoidal(cartesian({0, 1, 2, 3})).ok(), "FinSet<=3 from_braided");
  for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}})
    o.expect(validate_duoidal(discrete(BaseKind::finset(), orders)).ok(),
             "discrete group of order " + std::to_string(orders.size() == 2 ? 4 : orders[0]));
  const std::vector<std::pair<std::string, std::string>> corrupt = {
      {"broken_gamma", "(3)"}, {"broken_delta", "(5)"}, {"broken_mu", "(6)"}, {"broken_tau", "unit-comonoid"}};
  for (const auto& [name, axiom] : corrupt) {
    CommandResult r = run_validate(slurp(g_fixtures + "/" + name + ".json"));
    o.expect(r.status == "fail" && r.report.failed(axiom), name + " should fail " + axiom);
  }
  return o;
}

// ---------------------------------------------------------------- 2

// Independent group test: a two-sided identity exists and every element has a two-sided inverse.
bool oracle_group(const std::vector<std::int64_t>& mult, std::int64_t n) {
  for (std::int64_t e = 0; e < n; ++e) {
    bool unit = true;
    for (std::int64_t x = 0; x < n && unit; ++x) unit = mult[e * n + x] == x && mult[x * n + e] == x;
    if (!unit) continue;
    for (std::int64_t x = 0; x < n; ++x) {
      bool inv = false;
      for (std::int64_t y = 0; y < n && !inv; ++y) inv = mult[x * n + y] == e && mult[y * n + x] == e;
      if (!inv) return false;
    }
    return true;
  }
  return false;
}

Outcome hopf_oracle() {
  Outcome o;
  DuoidalStructure d = cartesian({0, 1, 2});
  std::int64_t monoids = 0, groups = 0;
  for (Obj n = 1; n <= 4; ++n)
    for (const MonoidObj& mo : enumerate_monoids(d.h, n, 1 << 20)) {
      ++monoids;
      ComonoidObj co = diagonal_comonoid(d.h, n);
      Bimonoid b{d, n, mo.mult, mo.unit, co.comult, co.counit};
      const bool group = oracle_group(mo.mult.m.table, n);
      groups += group;
      o.expect(classify_hopf(build_fusion(b)).hopf == group, "disagreement on a monoid of size " + std::to_string(n));
    }
  // Labelled monoid and group structures on 1..4 points.
  o.expect(monoids == 662, "monoid count " + std::to_string(monoids));
  o.expect(groups == 22, "group count " + std::to_string(groups));
  return o;
}

// ---------------------------------------------------------------- 3

Outcome tannaka() {
  Outcome o;
  DuoidalStructure d = cartesian({0, 1, 2, 3, 4});
  std::vector<Bimonoid> cases{unit_bimonoid(d)};
  for (const auto& mult : {kZ2, kAbsorb}) {
    MonoidObj mo = table_monoid(d.h, 2, mult, 0);
    ComonoidObj co = diagonal_comonoid(d.h, 2);
    cases.push_back(Bimonoid{d, 2, mo.mult, mo.unit, co.comult, co.counit});
  }
  for (const Bimonoid& b : cases) {
    const std::string tag = "M of size " + std::to_string(b.carrier);
    EndResult e = end_of_representable(ModuleCategory(d, b.monoid()));
    o.expect(e.report.ok(), tag + ": end report");
    o.expect(e.carrier.size == b.carrier && e.recovered.mult == b.mult && e.recovered.unit == b.unit,
             tag + ": end differs from M");
    std::vector<Obj> carriers;
    for (Obj a = 0; a <= b.carrier; ++a) carriers.push_back(a);
    auto mc = build_module_category(d, b.monoid(), carriers);
    LiftedMonoidal l = lift_bimonoid_to_monoidal(b, mc);
    o.expect(validate_lifted(l).ok(), tag + ": lifted tensor");
    Bimonoid back = extract_bimonoid_from_monoidal(l);
    o.expect(back.mult == b.mult && back.unit == b.unit && back.comult == b.comult && back.counit == b.counit,
             tag + ": extract.lift is not the identity");
    o.expect(compare_lifts(l, lift_bimonoid_to_monoidal(back, mc)).report.ok(), tag + ": lift.extract comparison");
  }
  return o;
}

// ---------------------------------------------------------------- 4

Outcome convolution() {
  Outcome o;
  for (int order : {2, 3}) {
    DuoidalStructure d = discrete(BaseKind::finset(), {order});
    LiftedDuoidal l = lift_duoidal(produoidal_from_duoidal(d));
    for (Obj a = 0; a < order; ++a)
      for (Obj b = 0; b < order; ++b) {
        Mor y = yoneda_comparison(l, d, Conv::Star, a, b);
        bool shape = true;
        for (Obj x = 0; x < order; ++x) shape = shape && l.presheaf(y.src).at(x).size == (x == (a + b) % order ? 1 : 0);
        o.expect(l.cat->is_iso(y) && shape, "Yoneda comparison in Z/" + std::to_string(order));
      }
  }

  MonoidalStructure vec = base_monoidal(BaseKind::finvect(2), {0, 1, 2, 4});
  ConvolutionMonoid conv = convolution_monoid(hom_monoidal(vec), grouplike_comonoid(vec, 2), table_monoid(vec, 2, kZ2, 0));
  o.expect(conv.carrier.size == 4, "F_2[Z/2] hom-space dimension");
  if (conv.carrier.size == 4) {
    // (f*g)(e_k) = f(e_k) g(e_k) in F_2[Z/2]; the basis matrix E_{r,c} has index 2r+c.
    bool same = true;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        int f[2][2] = {}, g[2][2] = {};
        f[a / 2][a % 2] = 1;
        g[b / 2][b % 2] = 1;
        for (int l = 0; l < 2; ++l)
          for (int k = 0; k < 2; ++k) {
            int s = 0;
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j)
                if ((i + j) % 2 == l) s += f[i][k] * g[j][k];
            same = same && conv.mult.table[(l * 2 + k) * 16 + a * 4 + b] == s % 2;
          }
      }
    o.expect(same, "convolution table differs from the oracle");
    // Unit: the counit followed by the algebra unit, e_k |-> e_0.
    o.expect(conv.unit.table == std::vector<std::int64_t>{1, 1, 0, 0}, "convolution unit");
  }

  DuoidalStructure z2 = discrete(BaseKind::finset(), {2});
  auto c = std::dynamic_pointer_cast<const FinCat>(z2.h.cat);
  ProduoidalData p = produoidal_from_duoidal(z2);
  o.expect(check_presheaf_duoidal_pointwise(p, {representable(c, 0), representable(c, 1), unit_presheaf(p, Conv::Star)}).ok(),
           "presheaf duoidal axioms at three witnesses");
  return o;
}

// ---------------------------------------------------------------- 5

Outcome warping() {
  Outcome o;
  MonoidalStructure z3 = discrete_abelian(BaseKind::finset(), {3});
  o.expect(tabulate(warp(identity_warping(z3))) == tabulate(z3), "identity warping of Z/3 changes the tables");
  MonoidalStructure lax = idempotent_lax_braiding().m;
  o.expect(tabulate(warp(identity_warping(lax))) == tabulate(lax), "identity warping of the lax carrier changes the tables");

  WarpingData shift = shift_warping(z3);
  o.expect(validate_warping(shift).ok(), "shift warping");
  MonoidalStructure box = warp(shift);
  o.expect(validate_monoidal(box).ok(), "warped Z/3");
  int triples = 0;
  for_each_tuple(z3.c().objects(), 3, [&](const std::vector<Obj>& x) {
    ++triples;
    Mor a = box.a(x[0], x[1], x[2]);
    o.expect(a.src == box.t(box.t(x[0], x[1]), x[2]) && a.tgt == box.t(x[0], box.t(x[1], x[2])) &&
                 z3.c().is_iso(a),
             "warped associator");
    return true;
  });
  o.expect(triples == 27, "triple count");

  DuoidalStructure fs = cartesian({0, 1, 2});
  ClosednessWitness wit = braided_closedness_witness(symmetric_braiding(fs.h));
  o.expect(validate_monoidal(warp(warping_from_duoidal(fs, wit))).ok(), "warp from FinSet<=2");
  o.expect(compare_warp_to_horizontal(fs, wit).ok(), "warp is not isomorphic to *");

  Braiding br = symmetric_braiding(z3);
  WarpingData id = identity_warping(z3);
  o.expect(validate_duoidal(duoidal_from_warped_lax_braided(br, id, trivial_monoidality(id))).ok(),
           "duoidal structure from the identity warping of Z/3");
  return o;
}

// ---------------------------------------------------------------- 6

Outcome universal_properties() {
  Outcome o;
  for (BaseKind k : {BaseKind::finset(), BaseKind::finvect(2), BaseKind::finvect(3)}) {
    duo::testing::Gen gen(6000 + (k.is_set() ? 1 : k.p));
    auto small = [&](std::int64_t lo) { return make_value(k, gen.range(lo, k.is_set() ? 3 : 2)); };
    for (int i = 0; i < 100; ++i) {
      // A function into the empty set needs an empty domain.
      BaseValue x = small(0), y = small(x.size > 0 && k.is_set() ? 1 : 0), t = make_value(k, 2);
      BaseMap f = gen.map(x, y), g = gen.map(x, y);
      auto q = duo::testing::check_coequalizer_universal(f, g, t);
      o.expect(q.ok, k.name() + " coequalizer #" + std::to_string(i) + ": " + q.why);
      auto e = duo::testing::check_equalizer_universal(f, g, t);
      o.expect(e.ok, k.name() + " equalizer #" + std::to_string(i) + ": " + e.why);
      BaseValue a = small(0), b = small(0), c = small(0);
      auto h = duo::testing::check_internal_hom_universal(a, b, c);
      o.expect(h.ok, k.name() + " internal hom #" + std::to_string(i) + ": " + h.why);
    }
  }
  return o;
}

// ---------------------------------------------------------------- 7

struct Run {
  int code = -1;
  std::string out;
};

Run shell(const std::string& cmd) {
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_coordinates(const json& j) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() == "objects" || it.key() == "witnesses" || has_coordinates(it.value())) return true;
  } else if (j.is_array()) {
    for (const auto& x : j)
      if (has_coordinates(x)) return true;
  }
  return false;
}

Outcome cli_determinism() {
  Outcome o;
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(g_fixtures))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  o.expect(files.size() == fixture_catalog().size(), "fixture directory does not match the catalog");
  for (const auto& path : files) {
    const std::string stem = std::filesystem::path(path).stem().string();
    const std::string text = slurp(path);
    try {
      o.expect(serialize_spec(parse_spec(text)) == text, stem + ": parse/serialize is not bit-exact");
      o.expect(serialize_spec(emit_fixture(stem)) == text, stem + ": differs from the catalog");
    } catch (const std::exception& e) {
      o.expect(false, stem + ": " + e.what());
    }
    const std::string cmd = "'" + g_tool + "' validate '" + path + "'";
    Run a = shell(cmd), b = shell(cmd);
    o.expect(a.out == b.out && a.code == b.code, stem + ": reports differ between runs");
    const bool broken = stem.rfind("broken_", 0) == 0;
    if (!broken) {
      o.expect(a.code == 0, stem + ": exit " + std::to_string(a.code));
      continue;
    }
    o.expect(a.code == 1, stem + ": exit " + std::to_string(a.code) + ", expected 1");
    json r = json::parse(a.out, nullptr, false);
    bool located = false;
    if (r.is_object() && r.contains("checks"))
      for (const auto& c : r["checks"])
        if (c.value("status", "") == "fail" && c.contains("counterexample")) located = located || has_coordinates(c["counterexample"]);
    o.expect(located, stem + ": no counterexample coordinates");
  }
  Run h = shell("'" + g_tool + "' classify --bimonoid '" + g_fixtures + "/z2_group_bimonoid.json'");
  json hr = json::parse(h.out, nullptr, false);
  o.expect(h.code == 0 && hr.is_object() && hr["result"]["hopf"] == true, "classify z2_group_bimonoid");
  Run u = shell("'" + g_tool + "' fixture unknown 2>&1");
  o.expect(u.code == 2 && u.out.find("z2_cartesian_duoidal") != std::string::npos, "unknown fixture message");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <duoidal tool> <fixture dir>\n";
    return 2;
  }
  g_tool = argv[1];
  g_fixtures = argv[2];
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria = {
      {"duoidal axiom suite", duoidal_suite},
      {"Hopf iff group for monoids up to size 4", hopf_oracle},
      {"Tannaka round trips", tannaka},
      {"convolution", convolution},
      {"warping", warping},
      {"base universal properties", universal_properties},
      {"CLI determinism", cli_determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::size_t n = i + 1;
    o.expect(secs < kLimit[n], "over the time limit");
    all = all && o.ok;
    std::printf("criterion %zu %s %.2fs (limit %.0fs) %s\n", n, o.ok ? "PASS" : "FAIL", secs, kLimit[n],
                criteria[i].first.c_str());
    for (const auto& note : o.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
