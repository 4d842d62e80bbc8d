// Finite V-categories, V-functors and V-natural transformations.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "duo/report.hpp"
#include "duo/vbase.hpp"

namespace duo {

using Obj = std::int64_t;

// A morphism f : src -> tgt. The owning category decides how `m` encodes it.
struct Mor {
  Obj src = 0, tgt = 0;
  BaseMap m;
  bool operator==(const Mor& o) const { return src == o.src && tgt == o.tgt && m == o.m; }
};

class Category {
 public:
  virtual ~Category() = default;

  virtual BaseKind base() const = 0;
  // Objects quantified over by every law check. For lazy categories this is a finite suite.
  virtual std::vector<Obj> objects() const = 0;
  virtual bool complete() const { return true; }
  virtual std::string label(Obj a) const { return std::to_string(a); }

  virtual BaseValue hom(Obj a, Obj b) const = 0;
  virtual Mor identity(Obj a) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;  // g after f

  // unit -> hom(a,b) naming f, and back.
  virtual BaseMap name_of(const Mor& f) const = 0;
  virtual Mor from_name(Obj a, Obj b, const BaseMap& x) const = 0;

  // i-th generator of hom(a,b): an element (FinSet) or a basis vector (FinVect).
  virtual Mor generator(Obj a, Obj b, std::int64_t i) const;
  std::int64_t generator_count(Obj a, Obj b) const { return hom(a, b).size; }
  virtual std::optional<Mor> inverse(const Mor& f) const;

  bool is_iso(const Mor& f) const { return inverse(f).has_value(); }
};

using CatPtr = std::shared_ptr<const Category>;

// Composite of a chain in diagram order: compose_all(c, {f, g, h}) = h.g.f
Mor compose_all(const Category& c, std::initializer_list<Mor> chain);

// Finite category given by explicit tables. Morphisms are points unit -> hom(a,b).
class FinCat : public Category {
 public:
  // comp[(a*n+b)*n+c] : hom(b,c)(x)hom(a,b) -> hom(a,c); ident[a] : unit -> hom(a,a).
  FinCat(BaseKind k, std::vector<std::string> labels, std::vector<BaseValue> homs,
         std::vector<BaseMap> comp, std::vector<BaseMap> ident);

  BaseKind base() const override { return kind_; }
  std::vector<Obj> objects() const override;
  std::string label(Obj a) const override;
  BaseValue hom(Obj a, Obj b) const override;
  Mor identity(Obj a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  BaseMap name_of(const Mor& f) const override { return f.m; }
  Mor from_name(Obj a, Obj b, const BaseMap& x) const override;

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const BaseValue& hom_value(Obj a, Obj b) const { return homs_[a * size() + b]; }
  const BaseMap& comp_map(Obj a, Obj b, Obj c) const { return comp_[(a * size() + b) * size() + c]; }
  const BaseMap& ident_map(Obj a) const { return ident_[a]; }
  // Element f of hom(a,b) as a morphism (FinSet index or FinVect basis index).
  Mor element(Obj a, Obj b, std::int64_t i) const { return generator(a, b, i); }

 private:
  void check_obj(Obj a) const;
  BaseKind kind_;
  std::vector<std::string> labels_;
  std::vector<BaseValue> homs_;
  std::vector<BaseMap> comp_;
  std::vector<BaseMap> ident_;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

// The base V as a category enriched in itself, skeletal: object n is the value of size n.
// Objects are unbounded, so checks range over a finite suite.
class BaseCat : public Category {
 public:
  BaseCat(BaseKind k, std::vector<Obj> suite);

  BaseKind base() const override { return kind_; }
  std::vector<Obj> objects() const override { return suite_; }
  bool complete() const override { return false; }
  BaseValue hom(Obj a, Obj b) const override;
  Mor identity(Obj a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  BaseMap name_of(const Mor& f) const override;
  Mor from_name(Obj a, Obj b, const BaseMap& x) const override;
  Mor generator(Obj a, Obj b, std::int64_t i) const override;
  std::optional<Mor> inverse(const Mor& f) const override;

  BaseValue value(Obj a) const { return make_value(kind_, a); }
  Mor lift(const BaseMap& f) const { return Mor{f.src.size, f.tgt.size, f}; }

 private:
  BaseKind kind_;
  std::vector<Obj> suite_;
};

struct VFunctor {
  CatPtr src, tgt;
  std::function<Obj(Obj)> on_obj;
  std::function<Mor(const Mor&)> on_mor;
};

VFunctor identity_functor(CatPtr c);
VFunctor compose_functors(const VFunctor& g, const VFunctor& f);  // g after f
// hom_maps[a*n+b] : hom(a,b) -> hom(Fa,Fb).
VFunctor functor_from_tables(FinCatPtr src, CatPtr tgt, std::vector<Obj> obj_map,
                             std::vector<BaseMap> hom_maps);
// Functor between discrete categories induced by an object map.
VFunctor discrete_functor(FinCatPtr src, FinCatPtr tgt, std::vector<Obj> obj_map);
struct FunctorTables {
  std::vector<Obj> obj_map;
  std::vector<BaseMap> hom_maps;
  bool operator==(const FunctorTables&) const = default;
};
// Requires a complete source with FinCat-style hom values.
FunctorTables tabulate(const VFunctor& f);

struct VNatural {
  VFunctor from, to;
  std::function<Mor(Obj)> component;
};

Report validate_category(const Category& c);
Report validate_functor(const VFunctor& f);
Report validate_natural(const VNatural& t);

// One-variable-at-a-time naturality of theta : F => G for functors of `arity` variables.
// theta(xs) : F(xs) -> G(xs). Moving one variable along every generator, with identities elsewhere,
// covers joint naturality since a multifunctor's action factors through such moves.
void check_naturality(Report& r, std::size_t check, const Category& dom, const Category& cod,
                      int arity, const std::function<Mor(const std::vector<Mor>&)>& F,
                      const std::function<Mor(const std::vector<Mor>&)>& G,
                      const std::function<Mor(const std::vector<Obj>&)>& theta,
                      const std::vector<Obj>& objs);

// Odometer over objs^arity; the callback returns false to stop early.
void for_each_tuple(const std::vector<Obj>& objs, int arity,
                    const std::function<bool(const std::vector<Obj>&)>& visit);

std::shared_ptr<FinCat> tensor_categories(const FinCat& a, const FinCat& b);
// F(x)G on tensor_categories(src F, src G) -> tensor_categories(tgt F, tgt G).
VFunctor tensor_functors(const VFunctor& f, const VFunctor& g,
                         std::shared_ptr<const FinCat> src, std::shared_ptr<const FinCat> tgt);

// Standard small categories.
std::shared_ptr<FinCat> discrete_category(BaseKind k, std::vector<std::string> labels);
// One object; hom = {0..n-1}, g after f = mult[g*n+f]. FinVect: the linearized monoid.
// unit < 0 searches for a two-sided unit and falls back to element 0.
std::shared_ptr<FinCat> one_object_category(BaseKind k, int n, const std::vector<int>& mult,
                                            int unit = -1, std::string label = "*");
std::shared_ptr<FinCat> unit_category(BaseKind k);
// FinSet category from hom sizes and a composition rule on element indices.
std::shared_ptr<FinCat> finset_category(
    std::vector<std::string> labels, const std::vector<std::int64_t>& hom_sizes,
    const std::function<std::int64_t(Obj, Obj, Obj, std::int64_t, std::int64_t)>& comp,
    const std::vector<std::int64_t>& ident);

nlohmann::json mor_json(const Mor& f);

// The map x -> out sending generator i to the element name(i) : unit -> out.
BaseMap map_from_generators(const BaseValue& x, const BaseValue& out,
                            const std::function<BaseMap(std::int64_t)>& name);
// Every element of hom(a,b) (all vectors for FinVect), or nullopt when there are more than `cap`.
std::optional<std::vector<Mor>> all_morphisms(const Category& c, Obj a, Obj b, std::int64_t cap);

}  // namespace duo
