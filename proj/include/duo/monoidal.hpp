// Monoidal and (lax) braided structures, monoids, comonoids, the monoidal structure on hom,
// and convolution monoids.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "duo/fincat.hpp"

namespace duo {

struct MonoidalStructure {
  CatPtr cat;
  std::function<Obj(Obj, Obj)> tensor_obj;
  std::function<Mor(const Mor&, const Mor&)> tensor_mor;
  Obj unit = 0;
  std::function<Mor(Obj, Obj, Obj)> assoc;  // (AB)C -> A(BC)
  std::function<Mor(Obj)> lunit;            // IA -> A
  std::function<Mor(Obj)> runit;            // AI -> A
  std::string name = "monoidal";

  const Category& c() const { return *cat; }
  Obj t(Obj a, Obj b) const { return tensor_obj(a, b); }
  Mor t(const Mor& f, const Mor& g) const { return tensor_mor(f, g); }
  Mor id(Obj a) const { return cat->identity(a); }
  Mor o(const Mor& g, const Mor& f) const { return cat->compose(g, f); }
  Mor inv(const Mor& f) const;  // throws ShapeError when f has no inverse
  Mor a(Obj x, Obj y, Obj z) const { return assoc(x, y, z); }
  Mor l(Obj x) const { return lunit(x); }
  Mor r(Obj x) const { return runit(x); }
  Mor ainv(Obj x, Obj y, Obj z) const { return inv(assoc(x, y, z)); }
  Mor linv(Obj x) const { return inv(lunit(x)); }
  Mor rinv(Obj x) const { return inv(runit(x)); }
};

// Explicit tables on a FinCat carrier; constraint entries are names unit -> hom.
struct MonoidalTables {
  std::vector<Obj> tensor_obj;       // n*n
  std::vector<BaseMap> tensor_hom;   // ((a*n+a2)*n+b)*n+b2 : hom(a,a2)(x)hom(b,b2) -> hom(ab,a2b2)
  Obj unit = 0;
  std::vector<BaseMap> assoc;        // (a*n+b)*n+c
  std::vector<BaseMap> lunit, runit; // n
  bool operator==(const MonoidalTables&) const = default;
};

MonoidalStructure monoidal_from_tables(FinCatPtr c, const MonoidalTables& t, std::string name = "tables");
MonoidalTables tabulate(const MonoidalStructure& m);

// Returns a copy whose constraint at one tuple is replaced.
MonoidalStructure with_assoc(MonoidalStructure m, Obj x, Obj y, Obj z, Mor replacement);

// Skeletal base category with its own tensor, over the given object suite.
MonoidalStructure base_monoidal(BaseKind k, std::vector<Obj> suite);
// Discrete category on a finite monoid's elements; tensor is multiplication, constraints identities.
MonoidalStructure discrete_monoidal(BaseKind k, std::vector<std::string> labels,
                                    const std::vector<int>& mult);
// Z/n1 x Z/n2 x ... with lexicographic element order.
MonoidalStructure discrete_abelian(BaseKind k, const std::vector<int>& orders);

struct Braiding {
  MonoidalStructure m;
  std::function<Mor(Obj, Obj)> c;  // XY -> YX
  bool lax = false;
};

Braiding symmetric_braiding(const MonoidalStructure& base_or_discrete);

// Objects I, X with XX = X and End(X) = {1, e}, e idempotent; c_{X,X} = e, other components identities.
// A lax braiding whose components are not all invertible.
Braiding idempotent_lax_braiding();

// Tensor functor C(x)C -> C as a VFunctor, for table carriers.
VFunctor tensor_functor(const MonoidalStructure& m, std::shared_ptr<const FinCat> cc);

Report validate_monoidal(const MonoidalStructure& m);
Report validate_braiding(const Braiding& b);

struct MonoidObj {
  Obj carrier = 0;
  Mor mult;  // MM -> M
  Mor unit;  // I -> M
};
struct ComonoidObj {
  Obj carrier = 0;
  Mor comult;  // C -> CC
  Mor counit;  // C -> I
};

Report validate_monoid(const MonoidalStructure& m, const MonoidObj& x);
Report validate_comonoid(const MonoidalStructure& m, const ComonoidObj& x);
Report validate_monoid_morphism(const MonoidalStructure& m, const MonoidObj& from, const MonoidObj& to,
                                const Mor& f);
bool is_commutative(const Braiding& b, const MonoidObj& x);
bool is_cocommutative(const Braiding& b, const ComonoidObj& x);

// Unit object with its canonical monoid / comonoid structure.
MonoidObj unit_monoid(const MonoidalStructure& m);
ComonoidObj unit_comonoid(const MonoidalStructure& m);
// Diagonal comonoid on a set (cartesian FinSet base structure only).
ComonoidObj diagonal_comonoid(const MonoidalStructure& m, Obj carrier);
// Monoid in base_monoidal from a multiplication table on {0..n-1}; FinVect: the monoid algebra.
MonoidObj table_monoid(const MonoidalStructure& m, int n, const std::vector<int>& mult, int unit);
// Group-like comonoid on the monoid algebra basis (FinVect) or diagonal (FinSet).
ComonoidObj grouplike_comonoid(const MonoidalStructure& m, Obj carrier);

// All monoid structures on an object; homs involved must have at most `max_hom` elements.
std::vector<MonoidObj> enumerate_monoids(const MonoidalStructure& m, Obj carrier, std::int64_t max_hom = 64);

struct HomCache;

class HomMonoidalData {
 public:
  explicit HomMonoidalData(MonoidalStructure m);
  const MonoidalStructure& structure() const { return m_; }
  // hom(W,X)(x)hom(Y,Z) -> hom(W(x)Y, X(x)Z).
  BaseMap map(Obj w, Obj x, Obj y, Obj z) const;
  // unit -> hom(I,I), the name of the identity.
  BaseMap j() const;
  // f (box) g evaluated through the materialized map.
  Mor box(const Mor& f, const Mor& g) const;

 private:
  MonoidalStructure m_;
  std::shared_ptr<HomCache> cache_;  // materialized maps, shared by copies
};

HomMonoidalData hom_monoidal(const MonoidalStructure& m);
// The two hom-monoidality axioms, and the braided square when b is given.
Report validate_hom_monoidal(const HomMonoidalData& h, const Braiding* b = nullptr);

struct ConvolutionMonoid {
  BaseValue carrier;  // hom(C, A)
  BaseMap mult;       // carrier (x) carrier -> carrier
  BaseMap unit;       // I -> carrier
  // The same data as a monoid in the base structure.
  MonoidObj as_monoid() const;
};

ConvolutionMonoid convolution_monoid(const HomMonoidalData& h, const ComonoidObj& c, const MonoidObj& a);

}  // namespace duo
