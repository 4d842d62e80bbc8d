// Right modules over a horizontal monoid, the mod/end constructions, and the correspondence between
// bimonoid structures and liftings of the vertical tensor to modules.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "duo/duoidal.hpp"

namespace duo {

// Representing object [Y,Z] with evaluation [Y,Z]*Y -> Z, checked against every suite object W.
struct InternalHomEntry {
  Obj y = 0, z = 0;
  Obj object = 0;
  Mor ev;
};

// Exhaustive search over suite objects and candidate evaluations; nullopt when nothing represents.
std::optional<InternalHomEntry> internal_hom_search(const MonoidalStructure& h, Obj y, Obj z,
                                                    std::int64_t cap = 1 << 16);

struct ModuleObject {
  Obj carrier = 0;
  Mor action;  // carrier*M -> carrier
  bool operator==(const ModuleObject& o) const { return carrier == o.carrier && action == o.action; }
};

// Unit and associativity laws of a right action.
Report validate_module(const DuoidalStructure& d, const MonoidObj& m, const ModuleObject& x);

// Right M-modules, registered by id. A morphism carries the underlying morphism's encoding; homs are the
// equalizer of f |-> f.alpha and f |-> beta.(f*1) inside the underlying hom.
class ModuleCategory : public Category {
 public:
  ModuleCategory(DuoidalStructure d, MonoidObj m);

  BaseKind base() const override { return d_.c().base(); }
  std::vector<Obj> objects() const override;
  bool complete() const override { return false; }
  std::string label(Obj a) const override;
  BaseValue hom(Obj a, Obj b) const override;
  Mor identity(Obj a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  BaseMap name_of(const Mor& f) const override;
  Mor from_name(Obj a, Obj b, const BaseMap& x) const override;
  std::optional<Mor> inverse(const Mor& f) const override;

  const DuoidalStructure& duoidal() const { return d_; }
  const MonoidObj& monoid() const { return m_; }

  // Registers x (deduplicated); throws ShapeError when the action laws fail.
  Obj add(const ModuleObject& x) const;
  const ModuleObject& module(Obj a) const;
  std::size_t registered() const;
  void set_objects(std::vector<Obj> objs) const;

  // M with its multiplication, the object representing U_M.
  Obj regular() const;
  // The module morphism with underlying f, or nullopt when f is not equivariant.
  std::optional<Mor> lift(Obj a, Obj b, const Mor& f) const;
  Mor underlying(const Mor& f) const;
  // Inclusion of hom(a,b) into the underlying hom.
  BaseMap inclusion(Obj a, Obj b) const;

 private:
  struct HomData {
    BaseValue value;
    BaseMap inclusion;
  };
  const HomData& hom_data(Obj a, Obj b) const;

  DuoidalStructure d_;
  MonoidObj m_;
  mutable std::mutex mu_;
  mutable std::vector<std::shared_ptr<const ModuleObject>> items_;
  mutable std::vector<Obj> objects_;
  mutable std::map<std::pair<Obj, Obj>, std::shared_ptr<const HomData>> homs_;
};

using ModuleCatPtr = std::shared_ptr<const ModuleCategory>;

// All actions on the given carriers (default: the suite). Candidate actions come from the whole hom
// when it has at most `cap` elements; over cartesian FinSet the unit law is imposed while enumerating.
std::vector<ModuleObject> enumerate_modules(const DuoidalStructure& d, const MonoidObj& m,
                                            std::vector<Obj> carriers = {}, std::int64_t cap = 1 << 16);
// Registers every enumerated module; the regular module is always registered.
std::shared_ptr<ModuleCategory> build_module_category(const DuoidalStructure& d, const MonoidObj& m,
                                                      std::vector<Obj> carriers = {},
                                                      std::int64_t cap = 1 << 16);

VFunctor forgetful(const ModuleCatPtr& mc);

// Restriction along a monoid morphism f : N -> M, from mc_m to mc_n.
VFunctor mod_of_morphism(const Mor& f, const ModuleCatPtr& mc_m, const std::shared_ptr<ModuleCategory>& mc_n);
// Functoriality and the triangle U_N . mod f = U_M.
Report validate_mod_of_morphism(const VFunctor& modf, const ModuleCatPtr& mc_m, const ModuleCatPtr& mc_n);

// M o N with multiplication (mu o mu).gamma and unit (eta o eta).delta.
MonoidObj monoid_vtensor(const DuoidalStructure& d, const MonoidObj& m, const MonoidObj& n);

struct PhiFunctor {
  ModuleCatPtr m, n;
  std::shared_ptr<ModuleCategory> mn;
  std::function<Obj(Obj, Obj)> on_obj;                    // (A,alpha),(B,beta) |-> (AoB, (alpha o beta).gamma)
  std::function<Mor(const Mor&, const Mor&)> on_mor;      // f, g |-> f o g
};

// Throws ShapeError when mn is not a module category over the vertical tensor of the two monoids.
PhiFunctor phi_monoidal(const ModuleCatPtr& m, const ModuleCatPtr& n, const std::shared_ptr<ModuleCategory>& mn);
// Actions valid, functoriality, and the square U_{MoN} . Phi = o . (U_M o U_N) on objects and generators.
Report validate_phi(const PhiFunctor& phi);

struct EndResult {
  BaseValue carrier;  // module endomorphisms of the representing object
  BaseMap mult, unit; // composition and identity
  BaseMap counit;     // carrier -> U_M(M), f |-> f.eta
  MonoidObj recovered;  // the end transported to M along the counit
  Report report;        // counit invertible, recovered monoid valid and equal to M
};

// Needs the horizontal structure to be the base tensor (J = unit value), so that points of M are M.
EndResult end_of_representable(const ModuleCategory& mc);

// A monoidal structure on modules with U_M strong monoidal into the vertical structure.
struct LiftedMonoidal {
  std::shared_ptr<ModuleCategory> mc;
  MonoidalStructure m;
  std::function<Mor(Obj, Obj)> comp2;  // U(a (x) b) -> Ua o Ub, in the carrier
  Mor comp0;                           // U(I) -> 1
};

// Tensor A o B with action (alpha o beta).gamma.(1*delta), unit 1 with action mu.(1*epsilon).
// Throws ShapeError when validate_bimonoid fails or mc is over a different monoid.
LiftedMonoidal lift_bimonoid_to_monoidal(const Bimonoid& b, const std::shared_ptr<ModuleCategory>& mc);
// validate_monoidal, then invertibility, naturality and coherence of the comparison.
Report validate_lifted(const LiftedMonoidal& l);
// delta from the action on the tensor of the regular module with itself, epsilon from the unit's action.
Bimonoid extract_bimonoid_from_monoidal(const LiftedMonoidal& l);
// The reversed tensor a (x)' b = b (x) a, with comparison through a symmetric braiding of the vertical structure.
LiftedMonoidal reverse_lift(const LiftedMonoidal& l, const Braiding& c);

struct LiftComparison {
  std::function<Mor(Obj, Obj)> theta;  // a (x)_1 b -> a (x)_2 b
  Mor theta0;                          // I_1 -> I_2
  Report report;
};

// Identity-on-objects comparison: the only candidate compatible with both U-comparisons is
// comp2_2^-1 . comp2_1; it is checked to be an equivariant, natural, monoidal isomorphism.
LiftComparison compare_lifts(const LiftedMonoidal& a, const LiftedMonoidal& b);

}  // namespace duo
