#pragma once

#include <string>
#include <vector>

#include "camplet/cat/structures.hpp"

namespace camplet::cat {

/// A morphism of the ordinary category extracted from an enrichment: a
/// global element I -> hom(dom, cod), tagged with its endpoints (two
/// distinct (dom,cod) pairs may share the same hom-object, so the
/// endpoints cannot be recovered from the element alone).
template <typename XObj, typename AMor>
struct UnderMor {
  XObj dom;
  XObj cod;
  AMor elem;  // I -> hom(dom, cod)
};

/// Post-composition on hom-objects: for a global element k: I->hom(Y,Z)
/// builds hom(W,Y) -> hom(W,Z) as runit_inv ; (1 @ k) ; comp.
template <typename AObj, typename AMor, typename XObj>
AMor hom_post(const EnrichmentData<AObj, AMor, XObj>& enr, const XObj& w,
              const XObj& y, const XObj& z, const AMor& k) {
  const auto& base = enr.base;
  AObj hwy = enr.hom(w, y);
  AMor step = base.cat.compose(base.tensor_mor(base.cat.identity(hwy), k),
                               enr.comp(w, y, z));
  return base.cat.compose(base.right_unit_inv(hwy), step);
}

/// Pre-composition on hom-objects: for a global element k: I->hom(X,Y)
/// builds hom(Y,W) -> hom(X,W) as lunit_inv ; (k @ 1) ; comp.
template <typename AObj, typename AMor, typename XObj>
AMor hom_pre(const EnrichmentData<AObj, AMor, XObj>& enr, const XObj& x,
             const XObj& y, const XObj& w, const AMor& k) {
  const auto& base = enr.base;
  AObj hyw = enr.hom(y, w);
  AMor step = base.cat.compose(base.tensor_mor(k, base.cat.identity(hyw)),
                               enr.comp(x, y, w));
  return base.cat.compose(base.left_unit_inv(hyw), step);
}

/// The ordinary category underlying an enrichment. Morphisms X -> Y are
/// global elements I -> hom(X,Y); composition of f and g is
/// runit_inv(I) ; (f @ g) ; comp and the identity is the enrichment unit.
template <typename AObj, typename AMor, typename XObj>
CategoryOps<XObj, UnderMor<XObj, AMor>> underlying_category(
    const EnrichmentData<AObj, AMor, XObj>& enr) {
  using UM = UnderMor<XObj, AMor>;
  CategoryOps<XObj, UM> ops;
  ops.objects = enr.objects;
  ops.obj_equal = enr.xobj_equal;
  ops.show_obj = enr.show_xobj;
  ops.morphisms = [enr](const XObj& x, const XObj& y) {
    std::vector<UM> out;
    for (const AMor& e :
         enr.base.cat.morphisms(enr.base.unit, enr.hom(x, y)))
      out.push_back(UM{x, y, e});
    return out;
  };
  ops.identity = [enr](const XObj& x) { return UM{x, x, enr.unit(x)}; };
  ops.compose = [enr](const UM& f, const UM& g) {
    const auto& base = enr.base;
    AMor paired = base.tensor_mor(f.elem, g.elem);
    AMor body = base.cat.compose(paired, enr.comp(f.dom, f.cod, g.cod));
    return UM{f.dom, g.cod,
              base.cat.compose(base.right_unit_inv(base.unit), body)};
  };
  ops.equal = [enr](const UM& f, const UM& g) {
    return enr.xobj_equal(f.dom, g.dom) && enr.xobj_equal(f.cod, g.cod) &&
           enr.base.cat.equal(f.elem, g.elem);
  };
  ops.dom = [](const UM& f) { return f.dom; };
  ops.cod = [](const UM& f) { return f.cod; };
  ops.show_mor = [enr](const UM& f) {
    return enr.show_xobj(f.dom) + "=>" + enr.show_xobj(f.cod) + ":" +
           enr.base.cat.show_mor(f.elem);
  };
  return ops;
}

/// Identification of an enrichment's underlying category with a concrete
/// acted category: bracket sends a concrete morphism to its global
/// element, realize inverts it.
template <typename AObj, typename AMor, typename XObj, typename XMor>
struct UnderlyingBridge {
  std::function<AMor(const XMor&)> bracket;
  std::function<XMor(const XObj&, const XObj&, const AMor&)> realize;
};

}  // namespace camplet::cat
