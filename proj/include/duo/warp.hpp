// Warpings of a monoidal category, the warped tensor A[]B = TA(x)B, and duoidal structures from
// warped lax braided categories.
#pragma once

#include <functional>

#include "duo/hopf.hpp"

namespace duo {

struct WarpingData {
  MonoidalStructure a;
  VFunctor t;                          // A -> A
  Obj k = 0;                           // unit of the warped tensor
  std::function<Mor(Obj, Obj)> v;      // T(TA(x)B) -> TA(x)TB
  Mor v0;                              // TK -> I
  std::function<Mor(Obj)> kappa;       // TA(x)K -> A
};

// Typing, naturality and invertibility of v, v0, k, then (21) and (22) on every suite tuple.
Report validate_warping(const WarpingData& w);

// Tensor TA(x)B, unit K, associator (a).(v(x)1), left unitor l.(v0(x)1), right unitor k.
MonoidalStructure warp(const WarpingData& w);

// T = Id, K = I, v = 1, v0 = 1, k = r.
WarpingData identity_warping(const MonoidalStructure& m);

// For T an equivalence: K with TK = I by search over suite objects, v0 an isomorphism TK -> I, and
// k_A the morphism with T(k_A) = r.(1(x)v0).v_{A,K}. Throws ShapeError when the search fails.
WarpingData warping_from_v(const MonoidalStructure& m, const VFunctor& t, std::function<Mor(Obj, Obj)> v,
                           std::int64_t cap = 1 << 12);

// Discrete Z/n (tensor +) with T = +1, K = -1 and identity components.
WarpingData shift_warping(const MonoidalStructure& zn);

// Warping of the vertical structure with T = -*1, K = J. v and k come from the isomorphism
// (W*1)oY -> W*(1oY) -> W*Y supplied by the witness. Throws ShapeError when check_closedness fails.
WarpingData warping_from_duoidal(const DuoidalStructure& d, const ClosednessWitness& w);

// The identity functor, with components A[]B -> A*B from the witness and the identity on the unit,
// is a monoidal natural isomorphism between warp(warping_from_duoidal(d, w)) and the horizontal structure.
Report compare_warp_to_horizontal(const DuoidalStructure& d, const ClosednessWitness& w);

// Monoidal data the warping must carry to give a duoidal structure.
struct WarpMonoidality {
  std::function<Mor(Obj, Obj)> t2;  // TA(x)TB -> T(A(x)B)
  Mor t0;                           // I -> TI
  MonoidObj k;                      // monoid on the warping's K
};

// Identity monoidal structure on T and the unit monoid on K (for T = Id, K = I).
WarpMonoidality trivial_monoidality(const WarpingData& w);

// T monoidal, K a monoid, v monoidal natural, v0 a monoid isomorphism and k monoidal natural,
// with the tensor (x) made monoidal by the lax braiding's middle-four interchange.
Report validate_warp_monoidality(const Braiding& c, const WarpingData& w, const WarpMonoidality& md);

// Horizontal (x), vertical [], gamma = (T2(x)1).(middle four), mu and tau from the monoid K,
// delta = r^-1.T0. Throws ShapeError when validate_warp_monoidality fails.
DuoidalStructure duoidal_from_warped_lax_braided(const Braiding& c, const WarpingData& w,
                                                 const WarpMonoidality& md);

}  // namespace duo
