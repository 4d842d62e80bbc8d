// Presheaves, coends, produoidal data and Day convolution, with the lifted duoidal structure
// checked at finite sets of witness presheaves.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "duo/duoidal.hpp"

namespace duo {

// Contravariant functor C^op -> V on a table category.
struct Presheaf {
  FinCatPtr domain;
  std::vector<BaseValue> values;
  std::vector<BaseMap> action;  // [a*n+b] : hom(a,b)(x)P(b) -> P(a)
  std::string name = "P";

  const BaseValue& at(Obj a) const { return values.at(a); }
  BaseMap act(const Mor& f) const;  // P(tgt f) -> P(src f)
};

Report validate_presheaf(const Presheaf& p);
Presheaf representable(FinCatPtr c, Obj a);  // hom(-, a)
Presheaf empty_presheaf(FinCatPtr c);
// Identity actions; FinVect needs a discrete domain.
Presheaf constant_presheaf(FinCatPtr c, const BaseValue& v);
// Builds the action table from per-generator maps f : a -> b  |->  P(b) -> P(a).
Presheaf presheaf_from_actions(FinCatPtr c, std::vector<BaseValue> values,
                               const std::function<BaseMap(const Mor&)>& act, std::string name);

// ∫^d co(d) (x) contra(d) over a finite index; generators of the index homs are numbered per pair.
struct CoendDiagram {
  BaseKind kind;
  int n = 0;
  std::function<std::int64_t(Obj, Obj)> gens;
  std::vector<BaseValue> co, contra;
  std::function<BaseMap(Obj, Obj, std::int64_t)> co_act;      // i-th f : d -> e gives co(d) -> co(e)
  std::function<BaseMap(Obj, Obj, std::int64_t)> contra_act;  // i-th f : d -> e gives contra(e) -> contra(d)
};

struct CoendTerm {
  Obj slot = 0;
  std::int64_t index = 0;  // basis index in co(slot)(x)contra(slot)
  std::int64_t coeff = 1;
};

struct CoendResult {
  BaseValue value;
  std::vector<BaseValue> co, contra;
  Coproduct slots;  // slot d holds co(d)(x)contra(d)
  BaseMap rel_a, rel_b;
  Coequalizer quotient;

  BaseValue slot_value(Obj d) const { return slots.injections.at(d).src; }
  // Class of a point unit -> co(d)(x)contra(d).
  BaseMap inject(Obj d, const BaseMap& pt) const;
  // A representative of a point unit -> value, as slot terms.
  std::vector<CoendTerm> expand(const BaseMap& pt) const;
  // Map out of the coend from maps out of each slot; nullopt when they do not respect the relations.
  std::optional<BaseMap> factor(const std::vector<BaseMap>& per_slot, const BaseValue& target) const;
};

CoendResult coend(const CoendDiagram& d);

// Sum of coefficient-weighted points unit -> x (FinSet: exactly one term with coefficient 1).
BaseMap combine(const BaseValue& x, const std::vector<std::pair<std::int64_t, BaseMap>>& terms);

// S(A;X,Y): contravariant in A, covariant in X, Y.
struct Promodule {
  std::function<BaseValue(Obj, Obj, Obj)> value;
  // f : A' -> A, g : X -> X', h : Y -> Y' gives S(A;X,Y) -> S(A';X',Y').
  std::function<BaseMap(const Mor&, const Mor&, const Mor&)> act;
};

// H(A): contravariant in A.
struct UnitModule {
  std::function<BaseValue(Obj)> value;
  std::function<BaseMap(const Mor&)> act;  // f : A' -> A gives H(A) -> H(A')
};

struct ProduoidalData;

// Coends the structure components act between.
CoendResult gamma_source(const ProduoidalData& p, Obj a, Obj b, Obj c, Obj d, Obj e);  // ∫ R(X;a,b)R(Y;c,d)S(e;X,Y)
CoendResult gamma_target(const ProduoidalData& p, Obj a, Obj b, Obj c, Obj d, Obj e);  // ∫ S(U;a,c)S(V;b,d)R(e;U,V)
CoendResult delta_target(const ProduoidalData& p, Obj a);                              // ∫ H(X)H(Y)R(a;X,Y)
CoendResult mu_source(const ProduoidalData& p, Obj a);                                 // ∫ K(X)K(Y)S(a;X,Y)
CoendResult assoc_source(const ProduoidalData& p, const Promodule& s, Obj a, Obj u, Obj v, Obj w);  // ∫^X S(X;u,v)S(a;X,w)
CoendResult assoc_target(const ProduoidalData& p, const Promodule& s, Obj a, Obj u, Obj v, Obj w);  // ∫^Y S(Y;v,w)S(a;u,Y)
CoendResult lunit_source(const ProduoidalData& p, const Promodule& s, const UnitModule& h, Obj a, Obj b);  // ∫^X H(X)S(a;X,b)
CoendResult runit_source(const ProduoidalData& p, const Promodule& s, const UnitModule& h, Obj a, Obj b);  // ∫^X H(X)S(a;b,X)

struct ProduoidalData {
  FinCatPtr carrier;
  std::shared_ptr<const FinCat> square;  // carrier (x) carrier, the index of two-variable coends
  Promodule S, R;
  UnitModule H, K;
  std::function<BaseMap(const ProduoidalData&, Obj, Obj, Obj, Obj, Obj)> gamma;  // gamma_source -> gamma_target
  std::function<BaseMap(const ProduoidalData&, Obj)> delta;  // H(a) -> delta_target
  std::function<BaseMap(const ProduoidalData&, Obj)> mu;     // mu_source -> K(a)
  std::function<BaseMap(const ProduoidalData&, Obj)> tau;    // H(a) -> K(a)
  // Pseudomonoid structure of S over H (index 0) and R over K (index 1).
  std::function<BaseMap(const ProduoidalData&, int, Obj, Obj, Obj, Obj)> assoc;  // assoc_source -> assoc_target
  std::function<BaseMap(const ProduoidalData&, int, Obj, Obj)> lunit;  // lunit_source -> hom(a,b)
  std::function<BaseMap(const ProduoidalData&, int, Obj, Obj)> runit;  // runit_source -> hom(a,b)

  const Promodule& module(int which) const { return which == 0 ? S : R; }
  const UnitModule& unit(int which) const { return which == 0 ? H : K; }
};

// S(A;B,C) = F(A, B*C), R(A;B,C) = F(A, BoC), H = F(-,J), K = F(-,1); components from d.
ProduoidalData produoidal_from_duoidal(const DuoidalStructure& d);

enum class Conv { Star = 0, Circ = 1 };

struct Convolution {
  Presheaf result;
  std::vector<CoendResult> at;  // the coend at each object
};

Convolution convolve(const ProduoidalData& p, Conv which, const Presheaf& m, const Presheaf& n);
Presheaf day_convolve(const ProduoidalData& p, Conv which, const Presheaf& m, const Presheaf& n);
Presheaf unit_presheaf(const ProduoidalData& p, Conv which);  // H or K

// Presheaves registered by id; a morphism is the block-diagonal map on the sum of all values.
class PresheafCategory : public Category {
 public:
  explicit PresheafCategory(FinCatPtr domain);

  BaseKind base() const override { return domain_->base(); }
  std::vector<Obj> objects() const override;
  bool complete() const override { return false; }
  std::string label(Obj a) const override;
  BaseValue hom(Obj a, Obj b) const override;
  Mor identity(Obj a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  BaseMap name_of(const Mor& f) const override;
  Mor from_name(Obj a, Obj b, const BaseMap& x) const override;
  std::optional<Mor> inverse(const Mor& f) const override;

  Obj add(Presheaf p) const;
  const Presheaf& presheaf(Obj a) const;
  void set_objects(std::vector<Obj> objs) const;

  // Natural transformation from components, and back.
  Mor from_components(Obj a, Obj b, const std::vector<BaseMap>& comps) const;
  BaseMap component(const Mor& f, Obj x) const;

 private:
  struct HomData {
    BaseValue value;
    BaseMap inclusion;  // into the product of the [P(x), Q(x)]
  };
  const HomData& hom_data(Obj a, Obj b) const;

  FinCatPtr domain_;
  mutable std::mutex mu_;
  mutable std::vector<std::shared_ptr<const Presheaf>> items_;
  mutable std::vector<Obj> objects_;
  mutable std::map<std::pair<Obj, Obj>, std::shared_ptr<const HomData>> homs_;
};

struct LiftedCache;

// The duoidal structure lifted to presheaves, evaluated lazily at registered presheaves.
struct LiftedDuoidal {
  ProduoidalData p;
  std::shared_ptr<PresheafCategory> cat;
  std::shared_ptr<LiftedCache> cache;
  DuoidalStructure d;

  Obj add(const Presheaf& x) const { return cat->add(x); }
  const Presheaf& presheaf(Obj a) const { return cat->presheaf(a); }
};

LiftedDuoidal lift_duoidal(const ProduoidalData& p);

// Comparison y(a) (x) y(b) -> y(a (x) b), [s, u, v] |-> (u (x) v) s, for the produoidal data of d.
// Registers the three representables.
Mor yoneda_comparison(const LiftedDuoidal& l, const DuoidalStructure& d, Conv which, Obj a, Obj b);

// Presheaf functoriality of the witnesses and their convolutions, then the duoidal axioms of the lifted
// structure instantiated at the witnesses.
Report check_presheaf_duoidal_pointwise(const ProduoidalData& p, const std::vector<Presheaf>& witnesses);

}  // namespace duo
