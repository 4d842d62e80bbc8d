// Fusion morphisms of bimonoids, Hopf classification, and closedness conditions checked from
// supplied isomorphism components.
#pragma once

#include <functional>
#include <utility>

#include "duo/duoidal.hpp"

namespace duo {

struct FusionPair {
  Bimonoid b;
  Mor vl;  // (JoM)*M -> MoM
  Mor vr;  // (MoJ)*M -> MoM
};

FusionPair build_fusion(const Bimonoid& b);

// The fusion maps of the opmonoidal monad -*M at (X,Y):
// vl(X,Y) : (Xo(Y*M))*M -> (X*M)o(Y*M), vr(X,Y) : ((X*M)oY)*M -> (X*M)o(Y*M).
std::pair<Mor, Mor> monad_fusion_instance(const Bimonoid& b, Obj x, Obj y);

// vl(J,J) and vr(J,J) agree with vl and vr after the unit isomorphisms J*M -> M.
Report validate_fusion(const FusionPair& fp);

struct HopfClass {
  bool left = false, right = false, hopf = false;
};

HopfClass classify_hopf(const FusionPair& fp);

// Candidate components. Either family may be omitted; the missing one is derived from the other.
struct ClosednessWitness {
  std::function<Mor(Obj, Obj, Obj)> p;  // (W,X,Y): Xo(W*Y) -> W*(XoY)
  std::function<Mor(Obj, Obj, Obj)> q;  // (W,X,Y): (W*X)oY -> W*(XoY)
  std::function<Mor(Obj, Obj)> s;       // (X,Y): X*(JoY) -> XoY
  std::function<Mor(Obj, Obj)> t;       // (X,Y): Y*(XoJ) -> XoY
};

// Both tensors the same braided structure: components from associators, unitors and the braiding.
ClosednessWitness braided_closedness_witness(const Braiding& b);

// Typing, invertibility and naturality of the supplied and derived components, then the
// consequences 1*(JoX) = X = 1*(XoJ), Jo(X*1) = X = (X*1)oJ and Jo- = -oJ.
// Throws ShapeError when neither family is supplied.
Report check_closedness(const ClosednessWitness& w, const DuoidalStructure& d);

// The two families after filling in whichever was missing.
ClosednessWitness complete_witness(const ClosednessWitness& w, const DuoidalStructure& d);

}  // namespace duo
