#pragma once

#include <functional>
#include <string>
#include <vector>

namespace camplet::cat {

/// A finite category given by executable tables. Composition is in
/// diagram order throughout this library: compose(f, g) is "f then g".
template <typename Obj, typename Mor>
struct CategoryOps {
  std::function<std::vector<Obj>()> objects;
  std::function<std::vector<Mor>(const Obj&, const Obj&)> morphisms;
  std::function<Mor(const Obj&)> identity;
  std::function<Mor(const Mor&, const Mor&)> compose;
  std::function<bool(const Mor&, const Mor&)> equal;
  std::function<Obj(const Mor&)> dom;
  std::function<Obj(const Mor&)> cod;
  std::function<bool(const Obj&, const Obj&)> obj_equal;
  std::function<std::string(const Obj&)> show_obj;
  std::function<std::string(const Mor&)> show_mor;
};

/// Monoidal structure on a category. The associator is fixed in the
/// direction assoc(A,B,C): A@(B@C) -> (A@B)@C across the whole library;
/// inverses are explicit fields, never silently inserted.
template <typename Obj, typename Mor>
struct MonoidalData {
  CategoryOps<Obj, Mor> cat;
  Obj unit;
  std::function<Obj(const Obj&, const Obj&)> tensor_obj;
  std::function<Mor(const Mor&, const Mor&)> tensor_mor;
  std::function<Mor(const Obj&, const Obj&, const Obj&)> assoc;
  std::function<Mor(const Obj&, const Obj&, const Obj&)> assoc_inv;
  std::function<Mor(const Obj&)> left_unit;       // I@A -> A
  std::function<Mor(const Obj&)> left_unit_inv;
  std::function<Mor(const Obj&)> right_unit;      // A@I -> A
  std::function<Mor(const Obj&)> right_unit_inv;
};

/// A right action of a monoidal category on another category, with the
/// two structural isomorphisms
///   act_assoc(X,A,B): X<|(A@B) -> (X<|A)<|B
///   act_unit(X):      X<|I     -> X
template <typename AObj, typename AMor, typename XObj, typename XMor>
struct ActegoryData {
  MonoidalData<AObj, AMor> base;
  CategoryOps<XObj, XMor> acted;
  std::function<XObj(const XObj&, const AObj&)> act_obj;
  std::function<XMor(const XMor&, const AMor&)> act_mor;
  std::function<XMor(const XObj&, const AObj&, const AObj&)> act_assoc;
  std::function<XMor(const XObj&, const AObj&, const AObj&)> act_assoc_inv;
  std::function<XMor(const XObj&)> act_unit;
  std::function<XMor(const XObj&)> act_unit_inv;
};

/// An enrichment of a class of objects in a monoidal base: hom-objects,
/// a composition morphism comp(X,Y,Z): hom(X,Y)@hom(Y,Z) -> hom(X,Z) and
/// a unit morphism unit(X): I -> hom(X,X).
template <typename AObj, typename AMor, typename XObj>
struct EnrichmentData {
  MonoidalData<AObj, AMor> base;
  std::function<std::vector<XObj>()> objects;
  std::function<AObj(const XObj&, const XObj&)> hom;
  std::function<AMor(const XObj&, const XObj&, const XObj&)> comp;
  std::function<AMor(const XObj&)> unit;
  std::function<bool(const XObj&, const XObj&)> xobj_equal;
  std::function<std::string(const XObj&)> show_xobj;
};

/// Copower structure over an enrichment: an object map (X,A) |-> X<|A,
/// a unit A -> hom(X, X<|A), and the two transposes
///   down(X,A,B,Y): (B -> hom(X<|A, Y))  |->  (A@B -> hom(X, Y))
///   up(X,A,B,Y):   (A@B -> hom(X, Y))   |->  (B -> hom(X<|A, Y))
/// which are mutually inverse. B is passed explicitly because tensor
/// objects need not decompose uniquely.
template <typename AObj, typename AMor, typename XObj>
struct CopowerData {
  EnrichmentData<AObj, AMor, XObj> enr;
  std::function<XObj(const XObj&, const AObj&)> copower_obj;
  std::function<AMor(const XObj&, const AObj&)> unit;
  std::function<AMor(const XObj&, const AObj&, const AObj&, const XObj&,
                     const AMor&)>
      down;
  std::function<AMor(const XObj&, const AObj&, const AObj&, const XObj&,
                     const AMor&)>
      up;
};

/// Power structure over an enrichment: an object map (A,Y) |-> A|>Y, a
/// counit A -> hom(A|>Y, Y), and the inverse transpose
///   from_tensor(X,A,B,Y): (B@A -> hom(X,Y)) |-> (B -> hom(X, A|>Y)).
/// The forward transpose is (f @ counit) ; comp and is derived.
template <typename AObj, typename AMor, typename XObj>
struct PowerData {
  EnrichmentData<AObj, AMor, XObj> enr;
  std::function<XObj(const AObj&, const XObj&)> power_obj;
  std::function<AMor(const AObj&, const XObj&)> counit;
  std::function<AMor(const XObj&, const AObj&, const AObj&, const XObj&,
                     const AMor&)>
      from_tensor;
};

/// An adjunction F -| G between two concrete categories, with unit,
/// counit, and the two adjuncts as executable maps per hom-set:
///   left_adjunct(A,Y):  (F A -> Y)  |->  (A -> G Y)
///   right_adjunct(A,Y): (A -> G Y)  |->  (F A -> Y)
template <typename CObj, typename CMor, typename DObj, typename DMor>
struct AdjunctionData {
  CategoryOps<CObj, CMor> src;  // category of F's domain
  CategoryOps<DObj, DMor> dst;
  std::function<DObj(const CObj&)> f_obj;
  std::function<DMor(const CMor&)> f_mor;
  std::function<CObj(const DObj&)> g_obj;
  std::function<CMor(const DMor&)> g_mor;
  std::function<CMor(const CObj&)> unit;    // A -> G(F(A))
  std::function<DMor(const DObj&)> counit;  // F(G(Y)) -> Y
  std::function<CMor(const CObj&, const DObj&, const DMor&)> left_adjunct;
  std::function<DMor(const CObj&, const DObj&, const CMor&)> right_adjunct;
};

/// Per-object family of hom-object adjunctions X<|- -| hom(X,-).
template <typename AObj, typename AMor, typename XObj, typename XMor>
struct HomAdjunctionFamily {
  std::function<AdjunctionData<AObj, AMor, XObj, XMor>(const XObj&)> at;
};

/// Per-object family of action adjunctions -<|A -| A|>-.
template <typename AObj, typename XObj, typename XMor>
struct ActionAdjunctionFamily {
  std::function<AdjunctionData<XObj, XMor, XObj, XMor>(const AObj&)> at;
};

/// Functorial pieces of the power that do not come with a single
/// adjunction record: the contravariant action on base morphisms and the
/// point-evaluation map into a power of a hom-object.
template <typename AObj, typename AMor, typename XObj, typename XMor>
struct PowerFunctorOps {
  // g: A -> B  |->  B|>Y -> A|>Y
  std::function<XMor(const AMor&, const XObj&)> contra;
  // k: Y -> Y' |->  A|>Y -> A|>Y'
  std::function<XMor(const AObj&, const XMor&)> covar;
  // X, Y |-> (X -> hom(X,Y)|>Y), x |-> evaluate-at-x
  std::function<XMor(const XObj&, const XObj&)> point_eval;
};

/// Right-closed structure on a monoidal category: internal homs with
/// curry/uncurry and the evaluation map ev(A,B): A@(A-oB) -> B.
template <typename Obj, typename Mor>
struct ClosedData {
  MonoidalData<Obj, Mor> base;
  std::function<Obj(const Obj&, const Obj&)> internal_hom;
  std::function<Mor(const Obj&, const Obj&)> ev;
  // curry(A,B,C): (A@B -> C) |-> (B -> A-oC)
  std::function<Mor(const Obj&, const Obj&, const Obj&, const Mor&)> curry;
  std::function<Mor(const Obj&, const Obj&, const Obj&, const Mor&)> uncurry;
};

/// A functor of two variables F with a right adjoint in its second
/// argument for every fixed first argument: F(P,-) -| G(P,-).
template <typename PObj, typename PMor, typename ZObj, typename ZMor,
          typename YObj, typename YMor>
struct ParamAdjunctionData {
  CategoryOps<PObj, PMor> param;
  CategoryOps<ZObj, ZMor> zcat;
  CategoryOps<YObj, YMor> ycat;
  std::function<YObj(const PObj&, const ZObj&)> f_obj;
  std::function<YMor(const PMor&, const ZMor&)> f_mor;
  std::function<ZObj(const PObj&, const YObj&)> g_obj;
  std::function<ZMor(const PObj&, const ZObj&)> unit;    // Z -> G(P, F(P,Z))
  std::function<YMor(const PObj&, const YObj&)> counit;  // F(P, G(P,Y)) -> Y
  std::function<ZMor(const PObj&, const ZObj&, const YObj&, const YMor&)>
      left_adjunct;
  std::function<YMor(const PObj&, const ZObj&, const YObj&, const ZMor&)>
      right_adjunct;
};

}  // namespace camplet::cat
