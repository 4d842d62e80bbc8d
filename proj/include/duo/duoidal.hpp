// Duoidal structures, bimonoids, and duoidal / bimonoidal functors.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "duo/monoidal.hpp"

namespace duo {

struct DuoidalStructure {
  MonoidalStructure h;  // (*, J)
  MonoidalStructure v;  // (o, 1)
  std::function<Mor(Obj, Obj, Obj, Obj)> gamma;  // (AoB)*(CoD) -> (A*C)o(B*D)
  Mor mu;     // 1*1 -> 1
  Mor tau;    // J -> 1
  Mor delta;  // J -> JoJ
  std::string name = "duoidal";

  const Category& c() const { return *h.cat; }
  Obj J() const { return h.unit; }
  Obj one() const { return v.unit; }
  Obj hs(Obj a, Obj b) const { return h.t(a, b); }
  Obj vs(Obj a, Obj b) const { return v.t(a, b); }
  Mor hs(const Mor& f, const Mor& g) const { return h.t(f, g); }
  Mor vs(const Mor& f, const Mor& g) const { return v.t(f, g); }
  Mor g(Obj a, Obj b, Obj c, Obj d) const { return gamma(a, b, c, d); }
  Mor id(Obj a) const { return h.id(a); }
};

struct DuoidalTables {
  MonoidalTables h, v;
  std::vector<BaseMap> gamma;  // ((a*n+b)*n+c)*n+d, names
  BaseMap mu, tau, delta;      // names
  bool operator==(const DuoidalTables&) const = default;
};

DuoidalStructure duoidal_from_tables(FinCatPtr c, const DuoidalTables& t, std::string name = "tables");
DuoidalTables tabulate(const DuoidalStructure& d);

DuoidalStructure with_gamma(DuoidalStructure d, Obj a, Obj b, Obj c, Obj e, Mor replacement);

// Checks gamma naturality, (3)-(6) and the unit monoid/comonoid conditions. The two monoidal
// structures are validated too unless `check_monoidal` is false.
Report validate_duoidal(const DuoidalStructure& d, bool check_monoidal = true);

// * = o = (x), gamma from the middle braiding and re-bracketing, mu = l_I, tau = 1, delta = l_I^-1.
DuoidalStructure from_braided(const Braiding& b);

// Unit category with the trivial duoidal structure.
DuoidalStructure terminal_duoidal(BaseKind k);

struct Bimonoid {
  DuoidalStructure d;
  Obj carrier = 0;
  Mor mult;    // A*A -> A
  Mor unit;    // J -> A
  Mor comult;  // A -> AoA
  Mor counit;  // A -> 1
  MonoidObj monoid() const { return MonoidObj{carrier, mult, unit}; }
  ComonoidObj comonoid() const { return ComonoidObj{carrier, comult, counit}; }
};

// Monoid and comonoid laws, then (8), (9), (10).
Report validate_bimonoid(const Bimonoid& b);
Bimonoid unit_bimonoid(const DuoidalStructure& d);

enum class FunctorMode { Duoidal, Bimonoidal };

// Horizontal part is always lax monoidal: h2 : FA*FB -> F(A*B), h0 : J' -> FJ.
// Vertical part: Duoidal mode lax monoidal v2 : FAoFB -> F(AoB), v0 : 1' -> F1;
// Bimonoidal mode opmonoidal v2 : F(AoB) -> FAoFB, v0 : F1 -> 1'.
struct StructuredFunctor {
  DuoidalStructure src, tgt;
  VFunctor f;
  std::function<Mor(Obj, Obj)> h2;
  Mor h0;
  std::function<Mor(Obj, Obj)> v2;
  Mor v0;
};

Report validate_structured_functor(const StructuredFunctor& s, FunctorMode mode);
StructuredFunctor identity_structured(const DuoidalStructure& d, FunctorMode mode);
// A bimonoid as a bimonoidal functor out of the terminal duoidal category.
StructuredFunctor bimonoid_functor(const Bimonoid& b);

}  // namespace duo
