#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "camplet/cat/report.hpp"
#include "camplet/cat/structures.hpp"
#include "camplet/cat/underlying.hpp"

namespace camplet::cat {

struct CheckOptions {
  std::size_t max_objects = 0;  // 0 = use the model's full object list
  std::string note;             // attached to every produced report
};

namespace detail {

template <typename T>
std::vector<T> take(std::vector<T> v, std::size_t n) {
  if (n != 0 && v.size() > n) v.resize(n);
  return v;
}

inline std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

}  // namespace detail

/// Plain category laws: identity and associativity of composition over
/// every enumerable composable tuple.
template <typename Obj, typename Mor>
void check_category(const CategoryOps<Obj, Mor>& cat, const std::string& prefix,
                    LawSuite& suite, const CheckOptions& opts = {}) {
  const auto objs = detail::take(cat.objects(), opts.max_objects);

  suite.run(prefix + ".identity", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs)
      for (const Obj& b : objs) {
        const Mor ida = cat.identity(a);
        const Mor idb = cat.identity(b);
        for (const Mor& f : cat.morphisms(a, b)) {
          auto at = [&] { return detail::join({cat.show_obj(a), cat.show_obj(b), cat.show_mor(f)}); };
          if (!law.check(cat.equal(cat.compose(ida, f), f),
                         [&] { return Counterexample{at(), cat.show_mor(cat.compose(ida, f)), cat.show_mor(f)}; }))
            return;
          if (!law.check(cat.equal(cat.compose(f, idb), f),
                         [&] { return Counterexample{at(), cat.show_mor(cat.compose(f, idb)), cat.show_mor(f)}; }))
            return;
        }
      }
  });

  suite.run(prefix + ".compose-assoc", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs)
      for (const Obj& b : objs)
        for (const Mor& f : cat.morphisms(a, b))
          for (const Obj& c : objs)
            for (const Mor& g : cat.morphisms(b, c))
              for (const Obj& d : objs)
                for (const Mor& h : cat.morphisms(c, d)) {
                  Mor lhs = cat.compose(cat.compose(f, g), h);
                  Mor rhs = cat.compose(f, cat.compose(g, h));
                  if (!law.check(cat.equal(lhs, rhs), [&] {
                        return Counterexample{
                            detail::join({cat.show_mor(f), cat.show_mor(g), cat.show_mor(h)}),
                            cat.show_mor(lhs), cat.show_mor(rhs)};
                      }))
                    return;
                }
  });
}

/// Monoidal laws: functoriality of the tensor, naturality and
/// invertibility of the structural maps, pentagon and triangle.
template <typename Obj, typename Mor>
void check_monoidal(const MonoidalData<Obj, Mor>& m, LawSuite& suite,
                    const CheckOptions& opts = {}) {
  const auto& cat = m.cat;
  const auto objs = detail::take(cat.objects(), opts.max_objects);
  check_category(cat, "monoidal.category", suite, opts);

  suite.run("monoidal.tensor-identity", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs)
      for (const Obj& b : objs) {
        Mor lhs = m.tensor_mor(cat.identity(a), cat.identity(b));
        Mor rhs = cat.identity(m.tensor_obj(a, b));
        if (!law.check(cat.equal(lhs, rhs), [&] {
              return Counterexample{detail::join({cat.show_obj(a), cat.show_obj(b)}),
                                    cat.show_mor(lhs), cat.show_mor(rhs)};
            }))
          return;
      }
  });

  suite.run("monoidal.tensor-interchange", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs)
      for (const Obj& b : objs)
        for (const Mor& f : cat.morphisms(a, b))
          for (const Obj& c : objs)
            for (const Mor& f2 : cat.morphisms(b, c))
              for (const Obj& a2 : objs)
                for (const Obj& b2 : objs)
                  for (const Mor& g : cat.morphisms(a2, b2))
                    for (const Obj& c2 : objs)
                      for (const Mor& g2 : cat.morphisms(b2, c2)) {
                        Mor lhs = m.tensor_mor(cat.compose(f, f2), cat.compose(g, g2));
                        Mor rhs = cat.compose(m.tensor_mor(f, g), m.tensor_mor(f2, g2));
                        if (!law.check(cat.equal(lhs, rhs), [&] {
                              return Counterexample{
                                  detail::join({cat.show_mor(f), cat.show_mor(f2),
                                                cat.show_mor(g), cat.show_mor(g2)}),
                                  cat.show_mor(lhs), cat.show_mor(rhs)};
                            }))
                          return;
                      }
  });

  suite.run("monoidal.assoc-iso", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs)
      for (const Obj& b : objs)
        for (const Obj& c : objs) {
          Mor fwd = m.assoc(a, b, c);
          Mor bwd = m.assoc_inv(a, b, c);
          Mor left = cat.compose(fwd, bwd);
          Mor right = cat.compose(bwd, fwd);
          Mor id_src = cat.identity(m.tensor_obj(a, m.tensor_obj(b, c)));
          Mor id_dst = cat.identity(m.tensor_obj(m.tensor_obj(a, b), c));
          auto at = [&] { return detail::join({cat.show_obj(a), cat.show_obj(b), cat.show_obj(c)}); };
          if (!law.check(cat.equal(left, id_src),
                         [&] { return Counterexample{at(), cat.show_mor(left), cat.show_mor(id_src)}; }))
            return;
          if (!law.check(cat.equal(right, id_dst),
                         [&] { return Counterexample{at(), cat.show_mor(right), cat.show_mor(id_dst)}; }))
            return;
        }
  });

  suite.run("monoidal.unitors-iso", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs) {
      struct Side {
        Mor fwd, bwd;
        Obj src;
      };
      Side sides[2] = {{m.left_unit(a), m.left_unit_inv(a), m.tensor_obj(m.unit, a)},
                       {m.right_unit(a), m.right_unit_inv(a), m.tensor_obj(a, m.unit)}};
      for (const Side& s : sides) {
        Mor round1 = cat.compose(s.fwd, s.bwd);
        Mor round2 = cat.compose(s.bwd, s.fwd);
        if (!law.check(cat.equal(round1, cat.identity(s.src)),
                       [&] { return Counterexample{cat.show_obj(a), cat.show_mor(round1), "identity"}; }))
          return;
        if (!law.check(cat.equal(round2, cat.identity(a)),
                       [&] { return Counterexample{cat.show_obj(a), cat.show_mor(round2), "identity"}; }))
          return;
      }
    }
  });

  suite.run("monoidal.assoc-natural", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs)
      for (const Obj& a2 : objs)
        for (const Mor& f : cat.morphisms(a, a2))
          for (const Obj& b : objs)
            for (const Obj& b2 : objs)
              for (const Mor& g : cat.morphisms(b, b2))
                for (const Obj& c : objs)
                  for (const Obj& c2 : objs)
                    for (const Mor& h : cat.morphisms(c, c2)) {
                      Mor lhs = cat.compose(m.tensor_mor(f, m.tensor_mor(g, h)),
                                            m.assoc(a2, b2, c2));
                      Mor rhs = cat.compose(m.assoc(a, b, c),
                                            m.tensor_mor(m.tensor_mor(f, g), h));
                      if (!law.check(cat.equal(lhs, rhs), [&] {
                            return Counterexample{
                                detail::join({cat.show_mor(f), cat.show_mor(g), cat.show_mor(h)}),
                                cat.show_mor(lhs), cat.show_mor(rhs)};
                          }))
                        return;
                    }
  });

  suite.run("monoidal.unitors-natural", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs)
      for (const Obj& b : objs)
        for (const Mor& f : cat.morphisms(a, b)) {
          Mor idI = cat.identity(m.unit);
          Mor l1 = cat.compose(m.tensor_mor(idI, f), m.left_unit(b));
          Mor l2 = cat.compose(m.left_unit(a), f);
          Mor r1 = cat.compose(m.tensor_mor(f, idI), m.right_unit(b));
          Mor r2 = cat.compose(m.right_unit(a), f);
          if (!law.check(cat.equal(l1, l2),
                         [&] { return Counterexample{cat.show_mor(f), cat.show_mor(l1), cat.show_mor(l2)}; }))
            return;
          if (!law.check(cat.equal(r1, r2),
                         [&] { return Counterexample{cat.show_mor(f), cat.show_mor(r1), cat.show_mor(r2)}; }))
            return;
        }
  });

  suite.run("monoidal.pentagon", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs)
      for (const Obj& b : objs)
        for (const Obj& c : objs)
          for (const Obj& d : objs) {
            Mor route1 = cat.compose(m.assoc(a, b, m.tensor_obj(c, d)),
                                     m.assoc(m.tensor_obj(a, b), c, d));
            Mor route2 = cat.compose(
                m.tensor_mor(cat.identity(a), m.assoc(b, c, d)),
                cat.compose(m.assoc(a, m.tensor_obj(b, c), d),
                            m.tensor_mor(m.assoc(a, b, c), cat.identity(d))));
            if (!law.check(cat.equal(route1, route2), [&] {
                  return Counterexample{
                      detail::join({cat.show_obj(a), cat.show_obj(b), cat.show_obj(c), cat.show_obj(d)}),
                      cat.show_mor(route1), cat.show_mor(route2)};
                }))
              return;
          }
  });

  suite.run("monoidal.triangle", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const Obj& a : objs)
      for (const Obj& b : objs) {
        Mor lhs = cat.compose(m.assoc(a, m.unit, b),
                              m.tensor_mor(m.right_unit(a), cat.identity(b)));
        Mor rhs = m.tensor_mor(cat.identity(a), m.left_unit(b));
        if (!law.check(cat.equal(lhs, rhs), [&] {
              return Counterexample{detail::join({cat.show_obj(a), cat.show_obj(b)}),
                                    cat.show_mor(lhs), cat.show_mor(rhs)};
            }))
          return;
      }
  });
}

/// Actegory laws: functoriality of the action, invertibility and
/// naturality of the structural maps, and the three action coherence
/// diagrams (unit-right, associativity pentagon, unit-left).
template <typename AObj, typename AMor, typename XObj, typename XMor>
void check_actegory(const ActegoryData<AObj, AMor, XObj, XMor>& act,
                    LawSuite& suite, const CheckOptions& opts = {}) {
  const auto& base = act.base;
  const auto& acat = base.cat;
  const auto& xcat = act.acted;
  const auto aobjs = detail::take(acat.objects(), opts.max_objects);
  const auto xobjs = detail::take(xcat.objects(), opts.max_objects);

  suite.run("actegory.functorial", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs) {
        XMor lhs = act.act_mor(xcat.identity(x), acat.identity(a));
        XMor rhs = xcat.identity(act.act_obj(x, a));
        if (!law.check(xcat.equal(lhs, rhs), [&] {
              return Counterexample{detail::join({xcat.show_obj(x), acat.show_obj(a)}),
                                    xcat.show_mor(lhs), xcat.show_mor(rhs)};
            }))
          return;
      }
    for (const XObj& x : xobjs)
      for (const XObj& x2 : xobjs)
        for (const XMor& f : xcat.morphisms(x, x2))
          for (const XObj& x3 : xobjs)
            for (const XMor& f2 : xcat.morphisms(x2, x3))
              for (const AObj& a : aobjs)
                for (const AObj& a2 : aobjs)
                  for (const AMor& h : acat.morphisms(a, a2))
                    for (const AObj& a3 : aobjs)
                      for (const AMor& h2 : acat.morphisms(a2, a3)) {
                        XMor lhs = act.act_mor(xcat.compose(f, f2), acat.compose(h, h2));
                        XMor rhs = xcat.compose(act.act_mor(f, h), act.act_mor(f2, h2));
                        if (!law.check(xcat.equal(lhs, rhs), [&] {
                              return Counterexample{
                                  detail::join({xcat.show_mor(f), xcat.show_mor(f2),
                                                acat.show_mor(h), acat.show_mor(h2)}),
                                  xcat.show_mor(lhs), xcat.show_mor(rhs)};
                            }))
                          return;
                      }
  });

  suite.run("actegory.assoc-iso", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs)
        for (const AObj& b : aobjs) {
          XMor fwd = act.act_assoc(x, a, b);
          XMor bwd = act.act_assoc_inv(x, a, b);
          XMor round1 = xcat.compose(fwd, bwd);
          XMor round2 = xcat.compose(bwd, fwd);
          XMor id_src = xcat.identity(act.act_obj(x, base.tensor_obj(a, b)));
          XMor id_dst = xcat.identity(act.act_obj(act.act_obj(x, a), b));
          auto at = [&] { return detail::join({xcat.show_obj(x), acat.show_obj(a), acat.show_obj(b)}); };
          if (!law.check(xcat.equal(round1, id_src),
                         [&] { return Counterexample{at(), xcat.show_mor(round1), "identity"}; }))
            return;
          if (!law.check(xcat.equal(round2, id_dst),
                         [&] { return Counterexample{at(), xcat.show_mor(round2), "identity"}; }))
            return;
        }
  });

  suite.run("actegory.unit-iso", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs) {
      XMor fwd = act.act_unit(x);
      XMor bwd = act.act_unit_inv(x);
      XMor round1 = xcat.compose(fwd, bwd);
      XMor round2 = xcat.compose(bwd, fwd);
      if (!law.check(xcat.equal(round1, xcat.identity(act.act_obj(x, base.unit))),
                     [&] { return Counterexample{xcat.show_obj(x), xcat.show_mor(round1), "identity"}; }))
        return;
      if (!law.check(xcat.equal(round2, xcat.identity(x)),
                     [&] { return Counterexample{xcat.show_obj(x), xcat.show_mor(round2), "identity"}; }))
        return;
    }
  });

  suite.run("actegory.assoc-natural", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    // Naturality in the acted object.
    for (const XObj& x : xobjs)
      for (const XObj& y : xobjs)
        for (const XMor& f : xcat.morphisms(x, y))
          for (const AObj& a : aobjs)
            for (const AObj& b : aobjs) {
              AMor ida = acat.identity(a);
              AMor idb = acat.identity(b);
              AMor idab = acat.identity(base.tensor_obj(a, b));
              XMor lhs = xcat.compose(act.act_mor(f, idab), act.act_assoc(y, a, b));
              XMor rhs = xcat.compose(act.act_assoc(x, a, b),
                                      act.act_mor(act.act_mor(f, ida), idb));
              if (!law.check(xcat.equal(lhs, rhs), [&] {
                    return Counterexample{
                        detail::join({xcat.show_mor(f), acat.show_obj(a), acat.show_obj(b)}),
                        xcat.show_mor(lhs), xcat.show_mor(rhs)};
                  }))
                return;
            }
    // Naturality in the first tensor argument.
    for (const AObj& a : aobjs)
      for (const AObj& a2 : aobjs)
        for (const AMor& g : acat.morphisms(a, a2))
          for (const XObj& x : xobjs)
            for (const AObj& b : aobjs) {
              XMor idx = xcat.identity(x);
              AMor idb = acat.identity(b);
              XMor lhs = xcat.compose(act.act_mor(idx, base.tensor_mor(g, idb)),
                                      act.act_assoc(x, a2, b));
              XMor rhs = xcat.compose(act.act_assoc(x, a, b),
                                      act.act_mor(act.act_mor(idx, g), idb));
              if (!law.check(xcat.equal(lhs, rhs), [&] {
                    return Counterexample{
                        detail::join({xcat.show_obj(x), acat.show_mor(g), acat.show_obj(b)}),
                        xcat.show_mor(lhs), xcat.show_mor(rhs)};
                  }))
                return;
            }
    // Naturality in the second tensor argument.
    for (const AObj& b : aobjs)
      for (const AObj& b2 : aobjs)
        for (const AMor& h : acat.morphisms(b, b2))
          for (const XObj& x : xobjs)
            for (const AObj& a : aobjs) {
              XMor idx = xcat.identity(x);
              AMor ida = acat.identity(a);
              XMor lhs = xcat.compose(act.act_mor(idx, base.tensor_mor(ida, h)),
                                      act.act_assoc(x, a, b2));
              XMor rhs = xcat.compose(act.act_assoc(x, a, b),
                                      act.act_mor(xcat.identity(act.act_obj(x, a)), h));
              if (!law.check(xcat.equal(lhs, rhs), [&] {
                    return Counterexample{
                        detail::join({xcat.show_obj(x), acat.show_obj(a), acat.show_mor(h)}),
                        xcat.show_mor(lhs), xcat.show_mor(rhs)};
                  }))
                return;
            }
  });

  suite.run("actegory.unit-natural", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const XObj& y : xobjs)
        for (const XMor& f : xcat.morphisms(x, y)) {
          XMor lhs = xcat.compose(act.act_mor(f, acat.identity(base.unit)),
                                  act.act_unit(y));
          XMor rhs = xcat.compose(act.act_unit(x), f);
          if (!law.check(xcat.equal(lhs, rhs),
                         [&] { return Counterexample{xcat.show_mor(f), xcat.show_mor(lhs), xcat.show_mor(rhs)}; }))
            return;
        }
  });

  // Coherence (1): act_assoc ; act_unit = 1 <| right_unit on X<|(A@I).
  suite.run("actegory.coherence-unit-right", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs) {
        XMor lhs = xcat.compose(act.act_assoc(x, a, base.unit),
                                act.act_unit(act.act_obj(x, a)));
        XMor rhs = act.act_mor(xcat.identity(x), base.right_unit(a));
        if (!law.check(xcat.equal(lhs, rhs), [&] {
              return Counterexample{detail::join({xcat.show_obj(x), acat.show_obj(a)}),
                                    xcat.show_mor(lhs), xcat.show_mor(rhs)};
            }))
          return;
      }
  });

  // Coherence (2): (1 <| assoc) ; act_assoc ; (act_assoc <| 1) =
  //                act_assoc ; act_assoc on X<|(A@(B@C)).
  suite.run("actegory.coherence-assoc", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs)
        for (const AObj& b : aobjs)
          for (const AObj& c : aobjs) {
            XMor lhs = xcat.compose(
                act.act_mor(xcat.identity(x), base.assoc(a, b, c)),
                xcat.compose(act.act_assoc(x, base.tensor_obj(a, b), c),
                             act.act_mor(act.act_assoc(x, a, b), acat.identity(c))));
            XMor rhs = xcat.compose(act.act_assoc(x, a, base.tensor_obj(b, c)),
                                    act.act_assoc(act.act_obj(x, a), b, c));
            if (!law.check(xcat.equal(lhs, rhs), [&] {
                  return Counterexample{
                      detail::join({xcat.show_obj(x), acat.show_obj(a), acat.show_obj(b), acat.show_obj(c)}),
                      xcat.show_mor(lhs), xcat.show_mor(rhs)};
                }))
              return;
          }
  });

  // Coherence (3): act_assoc ; (act_unit <| 1) = 1 <| left_unit on X<|(I@A).
  suite.run("actegory.coherence-unit-left", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs) {
        XMor lhs = xcat.compose(act.act_assoc(x, base.unit, a),
                                act.act_mor(act.act_unit(x), acat.identity(a)));
        XMor rhs = act.act_mor(xcat.identity(x), base.left_unit(a));
        if (!law.check(xcat.equal(lhs, rhs), [&] {
              return Counterexample{detail::join({xcat.show_obj(x), acat.show_obj(a)}),
                                    xcat.show_mor(lhs), xcat.show_mor(rhs)};
            }))
          return;
      }
  });
}

/// Enrichment laws with the library's fixed associator orientation:
///   (1 @ comp) ; comp = assoc ; (comp @ 1) ; comp
/// from the hom(X,Y)@(hom(Y,Z)@hom(Z,W)) corner, plus the two unit laws.
template <typename AObj, typename AMor, typename XObj>
void check_enrichment(const EnrichmentData<AObj, AMor, XObj>& enr,
                      LawSuite& suite, const CheckOptions& opts = {}) {
  const auto& base = enr.base;
  const auto& acat = base.cat;
  const auto xobjs = detail::take(enr.objects(), opts.max_objects);

  suite.run("enrichment.compose-assoc", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const XObj& y : xobjs)
        for (const XObj& z : xobjs)
          for (const XObj& w : xobjs) {
            AObj hxy = enr.hom(x, y);
            AObj hyz = enr.hom(y, z);
            AObj hzw = enr.hom(z, w);
            AMor lhs = acat.compose(
                base.tensor_mor(acat.identity(hxy), enr.comp(y, z, w)),
                enr.comp(x, y, w));
            AMor rhs = acat.compose(
                base.assoc(hxy, hyz, hzw),
                acat.compose(base.tensor_mor(enr.comp(x, y, z), acat.identity(hzw)),
                             enr.comp(x, z, w)));
            if (!law.check(acat.equal(lhs, rhs), [&] {
                  return Counterexample{
                      detail::join({enr.show_xobj(x), enr.show_xobj(y), enr.show_xobj(z), enr.show_xobj(w)}),
                      acat.show_mor(lhs), acat.show_mor(rhs)};
                }))
              return;
          }
  });

  suite.run("enrichment.unit-left", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const XObj& y : xobjs) {
        AObj hxy = enr.hom(x, y);
        AMor lhs = acat.compose(base.tensor_mor(enr.unit(x), acat.identity(hxy)),
                                enr.comp(x, x, y));
        AMor rhs = base.left_unit(hxy);
        if (!law.check(acat.equal(lhs, rhs), [&] {
              return Counterexample{detail::join({enr.show_xobj(x), enr.show_xobj(y)}),
                                    acat.show_mor(lhs), acat.show_mor(rhs)};
            }))
          return;
      }
  });

  suite.run("enrichment.unit-right", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const XObj& y : xobjs) {
        AObj hxy = enr.hom(x, y);
        AMor lhs = acat.compose(base.tensor_mor(acat.identity(hxy), enr.unit(y)),
                                enr.comp(x, y, y));
        AMor rhs = base.right_unit(hxy);
        if (!law.check(acat.equal(lhs, rhs), [&] {
              return Counterexample{detail::join({enr.show_xobj(x), enr.show_xobj(y)}),
                                    acat.show_mor(lhs), acat.show_mor(rhs)};
            }))
          return;
      }
  });
}

/// Adjunction laws: triangle identities, the two adjuncts mutually
/// inverse, and naturality of unit and counit.
template <typename CObj, typename CMor, typename DObj, typename DMor>
void check_adjunction(const AdjunctionData<CObj, CMor, DObj, DMor>& adj,
                      const std::string& prefix, LawSuite& suite,
                      const CheckOptions& opts = {}) {
  const auto& src = adj.src;
  const auto& dst = adj.dst;
  const auto cobjs = detail::take(src.objects(), opts.max_objects);
  const auto dobjs = detail::take(dst.objects(), opts.max_objects);

  suite.run(prefix + ".triangles", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const CObj& a : cobjs) {
      DMor lhs = dst.compose(adj.f_mor(adj.unit(a)), adj.counit(adj.f_obj(a)));
      DMor rhs = dst.identity(adj.f_obj(a));
      if (!law.check(dst.equal(lhs, rhs),
                     [&] { return Counterexample{src.show_obj(a), dst.show_mor(lhs), dst.show_mor(rhs)}; }))
        return;
    }
    for (const DObj& y : dobjs) {
      CMor lhs = src.compose(adj.unit(adj.g_obj(y)), adj.g_mor(adj.counit(y)));
      CMor rhs = src.identity(adj.g_obj(y));
      if (!law.check(src.equal(lhs, rhs),
                     [&] { return Counterexample{dst.show_obj(y), src.show_mor(lhs), src.show_mor(rhs)}; }))
        return;
    }
  });

  suite.run(prefix + ".adjuncts-inverse", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const CObj& a : cobjs)
      for (const DObj& y : dobjs) {
        for (const DMor& h : dst.morphisms(adj.f_obj(a), y)) {
          DMor back = adj.right_adjunct(a, y, adj.left_adjunct(a, y, h));
          if (!law.check(dst.equal(back, h),
                         [&] { return Counterexample{dst.show_mor(h), dst.show_mor(back), dst.show_mor(h)}; }))
            return;
        }
        for (const CMor& k : src.morphisms(a, adj.g_obj(y))) {
          CMor back = adj.left_adjunct(a, y, adj.right_adjunct(a, y, k));
          if (!law.check(src.equal(back, k),
                         [&] { return Counterexample{src.show_mor(k), src.show_mor(back), src.show_mor(k)}; }))
            return;
        }
      }
  });

  suite.run(prefix + ".unit-natural", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const CObj& a : cobjs)
      for (const CObj& a2 : cobjs)
        for (const CMor& f : src.morphisms(a, a2)) {
          CMor lhs = src.compose(adj.unit(a), adj.g_mor(adj.f_mor(f)));
          CMor rhs = src.compose(f, adj.unit(a2));
          if (!law.check(src.equal(lhs, rhs),
                         [&] { return Counterexample{src.show_mor(f), src.show_mor(lhs), src.show_mor(rhs)}; }))
            return;
        }
  });

  suite.run(prefix + ".counit-natural", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const DObj& y : dobjs)
      for (const DObj& y2 : dobjs)
        for (const DMor& k : dst.morphisms(y, y2)) {
          DMor lhs = dst.compose(adj.f_mor(adj.g_mor(k)), adj.counit(y2));
          DMor rhs = dst.compose(adj.counit(y), k);
          if (!law.check(dst.equal(lhs, rhs),
                         [&] { return Counterexample{dst.show_mor(k), dst.show_mor(lhs), dst.show_mor(rhs)}; }))
            return;
        }
  });
}

/// Copower transposes are mutually inverse, and down agrees with the
/// unit form (unit @ f) ; comp.
template <typename AObj, typename AMor, typename XObj>
void check_copower_bijection(const CopowerData<AObj, AMor, XObj>& cop,
                             LawSuite& suite, const CheckOptions& opts = {}) {
  const auto& enr = cop.enr;
  const auto& base = enr.base;
  const auto& acat = base.cat;
  const auto xobjs = detail::take(enr.objects(), opts.max_objects);
  const auto aobjs = detail::take(acat.objects(), opts.max_objects);

  suite.run("copower.roundtrips", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs)
        for (const XObj& y : xobjs) {
          XObj xa = cop.copower_obj(x, a);
          AObj hup = enr.hom(xa, y);
          AObj hdn = enr.hom(x, y);
          for (const AObj& b : aobjs) {
            for (const AMor& f : acat.morphisms(b, hup)) {
              AMor down = cop.down(x, a, b, y, f);
              AMor back = cop.up(x, a, b, y, down);
              if (!law.check(acat.equal(back, f),
                             [&] { return Counterexample{acat.show_mor(f), acat.show_mor(back), acat.show_mor(f)}; }))
                return;
            }
            for (const AMor& g : acat.morphisms(base.tensor_obj(a, b), hdn)) {
              AMor up = cop.up(x, a, b, y, g);
              AMor back = cop.down(x, a, b, y, up);
              if (!law.check(acat.equal(back, g),
                             [&] { return Counterexample{acat.show_mor(g), acat.show_mor(back), acat.show_mor(g)}; }))
                return;
            }
          }
        }
  });

  suite.run("copower.unit-form", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs)
        for (const XObj& y : xobjs) {
          XObj xa = cop.copower_obj(x, a);
          AObj hup = enr.hom(xa, y);
          AMor eta = cop.unit(x, a);
          for (const AObj& b : aobjs)
            for (const AMor& f : acat.morphisms(b, hup)) {
              AMor lhs = cop.down(x, a, b, y, f);
              AMor rhs = acat.compose(base.tensor_mor(eta, f), enr.comp(x, xa, y));
              if (!law.check(acat.equal(lhs, rhs), [&] {
                    return Counterexample{
                        detail::join({enr.show_xobj(x), acat.show_obj(a), acat.show_obj(b), enr.show_xobj(y),
                                      acat.show_mor(f)}),
                        acat.show_mor(lhs), acat.show_mor(rhs)};
                  }))
                return;
            }
        }
  });
}

/// Core of the combinator-law check, parameterized by the down/up pair
/// so the same loops can validate a derived pair. Laws (with the fixed
/// associator orientation, reading composites in diagram order):
///   (i)   (1@h) ; down(f)            = down(h ; f)
///   (ii)  h ; up(g)                  = up((1@h) ; g)
///   (iii) assoc ; (down(f)@g) ; comp = down((f@g) ; comp)
///   (iv)  (up(f)@g) ; comp           = up(assoc ; (f@g) ; comp)
/// plus the post-composition variants of (i) and (ii).
template <typename AObj, typename AMor, typename XObj, typename Down,
          typename Up>
void check_combinators_core(const CopowerData<AObj, AMor, XObj>& cop,
                            Down down, Up up, const std::string& prefix,
                            LawSuite& suite, const CheckOptions& opts = {}) {
  const auto& enr = cop.enr;
  const auto& base = enr.base;
  const auto& acat = base.cat;
  const auto xobjs = detail::take(enr.objects(), opts.max_objects);
  const auto aobjs = detail::take(acat.objects(), opts.max_objects);

  suite.run(prefix + ".pre-compose-down", [&](Law& law) {  // (i)
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs) {
        AMor ida = acat.identity(a);
        for (const XObj& y : xobjs) {
          AObj hup = enr.hom(cop.copower_obj(x, a), y);
          for (const AObj& b : aobjs)
            for (const AMor& f : acat.morphisms(b, hup)) {
              AMor downf = down(x, a, b, y, f);
              for (const AObj& b2 : aobjs)
                for (const AMor& h : acat.morphisms(b2, b)) {
                  AMor lhs = acat.compose(base.tensor_mor(ida, h), downf);
                  AMor rhs = down(x, a, b2, y, acat.compose(h, f));
                  if (!law.check(acat.equal(lhs, rhs), [&] {
                        return Counterexample{
                            detail::join({acat.show_mor(h), acat.show_mor(f)}),
                            acat.show_mor(lhs), acat.show_mor(rhs)};
                      }))
                    return;
                }
            }
        }
      }
  });

  suite.run(prefix + ".pre-compose-up", [&](Law& law) {  // (ii)
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs) {
        AMor ida = acat.identity(a);
        for (const XObj& y : xobjs) {
          AObj hdn = enr.hom(x, y);
          for (const AObj& b : aobjs)
            for (const AMor& g : acat.morphisms(base.tensor_obj(a, b), hdn)) {
              AMor upg = up(x, a, b, y, g);
              for (const AObj& b2 : aobjs)
                for (const AMor& h : acat.morphisms(b2, b)) {
                  AMor lhs = acat.compose(h, upg);
                  AMor rhs = up(x, a, b2, y, acat.compose(base.tensor_mor(ida, h), g));
                  if (!law.check(acat.equal(lhs, rhs), [&] {
                        return Counterexample{
                            detail::join({acat.show_mor(h), acat.show_mor(g)}),
                            acat.show_mor(lhs), acat.show_mor(rhs)};
                      }))
                    return;
                }
            }
        }
      }
  });

  suite.run(prefix + ".post-tensor-down", [&](Law& law) {  // (iii)
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs)
        for (const XObj& y : xobjs) {
          XObj xa = cop.copower_obj(x, a);
          AObj hup = enr.hom(xa, y);
          for (const AObj& b : aobjs)
            for (const AMor& f : acat.morphisms(b, hup)) {
              AMor downf = down(x, a, b, y, f);
              for (const XObj& z : xobjs) {
                AObj hyz = enr.hom(y, z);
                AMor m_outer = enr.comp(x, y, z);
                AMor m_inner = enr.comp(xa, y, z);
                for (const AObj& c : aobjs) {
                  AMor as = base.assoc(a, b, c);
                  for (const AMor& g : acat.morphisms(c, hyz)) {
                    AMor lhs = acat.compose(
                        as, acat.compose(base.tensor_mor(downf, g), m_outer));
                    AMor rhs = down(
                        x, a, base.tensor_obj(b, c), z,
                        acat.compose(base.tensor_mor(f, g), m_inner));
                    if (!law.check(acat.equal(lhs, rhs), [&] {
                          return Counterexample{
                              detail::join({acat.show_mor(f), acat.show_mor(g)}),
                              acat.show_mor(lhs), acat.show_mor(rhs)};
                        }))
                      return;
                  }
                }
              }
            }
        }
  });

  suite.run(prefix + ".post-tensor-up", [&](Law& law) {  // (iv)
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs)
        for (const XObj& y : xobjs) {
          XObj xa = cop.copower_obj(x, a);
          AObj hdn = enr.hom(x, y);
          for (const AObj& b : aobjs)
            for (const AMor& f : acat.morphisms(base.tensor_obj(a, b), hdn)) {
              AMor upf = up(x, a, b, y, f);
              for (const XObj& z : xobjs) {
                AObj hyz = enr.hom(y, z);
                AMor m_outer = enr.comp(x, y, z);
                AMor m_inner = enr.comp(xa, y, z);
                for (const AObj& c : aobjs) {
                  AMor as = base.assoc(a, b, c);
                  for (const AMor& g : acat.morphisms(c, hyz)) {
                    AMor lhs = acat.compose(base.tensor_mor(upf, g), m_inner);
                    AMor rhs = up(
                        x, a, base.tensor_obj(b, c), z,
                        acat.compose(as, acat.compose(base.tensor_mor(f, g), m_outer)));
                    if (!law.check(acat.equal(lhs, rhs), [&] {
                          return Counterexample{
                              detail::join({acat.show_mor(f), acat.show_mor(g)}),
                              acat.show_mor(lhs), acat.show_mor(rhs)};
                        }))
                      return;
                  }
                }
              }
            }
        }
  });

  suite.run(prefix + ".post-hom-down", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs) {
        AMor ida = acat.identity(a);
        for (const XObj& y : xobjs) {
          XObj xa = cop.copower_obj(x, a);
          AObj hup = enr.hom(xa, y);
          for (const XObj& z : xobjs)
            for (const AMor& k : acat.morphisms(base.unit, enr.hom(y, z))) {
              AMor post_outer = hom_post(enr, x, y, z, k);
              AMor post_inner = hom_post(enr, xa, y, z, k);
              for (const AObj& b : aobjs)
                for (const AMor& f : acat.morphisms(b, hup)) {
                  AMor downf = down(x, a, b, y, f);
                  for (const AObj& b2 : aobjs)
                    for (const AMor& h : acat.morphisms(b2, b)) {
                      AMor lhs = acat.compose(
                          base.tensor_mor(ida, h), acat.compose(downf, post_outer));
                      AMor rhs = down(
                          x, a, b2, z,
                          acat.compose(h, acat.compose(f, post_inner)));
                      if (!law.check(acat.equal(lhs, rhs), [&] {
                            return Counterexample{
                                detail::join({acat.show_mor(h), acat.show_mor(f), acat.show_mor(k)}),
                                acat.show_mor(lhs), acat.show_mor(rhs)};
                          }))
                        return;
                    }
                }
            }
        }
      }
  });

  suite.run(prefix + ".post-hom-up", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs) {
        AMor ida = acat.identity(a);
        for (const XObj& y : xobjs) {
          XObj xa = cop.copower_obj(x, a);
          AObj hdn = enr.hom(x, y);
          for (const XObj& z : xobjs)
            for (const AMor& k : acat.morphisms(base.unit, enr.hom(y, z))) {
              AMor post_outer = hom_post(enr, x, y, z, k);
              AMor post_inner = hom_post(enr, xa, y, z, k);
              for (const AObj& b : aobjs)
                for (const AMor& g : acat.morphisms(base.tensor_obj(a, b), hdn)) {
                  AMor upg = up(x, a, b, y, g);
                  for (const AObj& b2 : aobjs)
                    for (const AMor& h : acat.morphisms(b2, b)) {
                      AMor lhs = acat.compose(h, acat.compose(upg, post_inner));
                      AMor rhs = up(x, a, b2, z,
                                    acat.compose(base.tensor_mor(ida, h),
                                                 acat.compose(g, post_outer)));
                      if (!law.check(acat.equal(lhs, rhs), [&] {
                            return Counterexample{
                                detail::join({acat.show_mor(h), acat.show_mor(g), acat.show_mor(k)}),
                                acat.show_mor(lhs), acat.show_mor(rhs)};
                          }))
                        return;
                    }
                }
            }
        }
      }
  });
}

/// The combinator laws for the copower data's own transposes.
template <typename AObj, typename AMor, typename XObj>
void check_combinator_laws(const CopowerData<AObj, AMor, XObj>& cop,
                           LawSuite& suite, const CheckOptions& opts = {}) {
  auto down = [&cop](const XObj& x, const AObj& a, const AObj& b, const XObj& y,
                     const AMor& f) { return cop.down(x, a, b, y, f); };
  auto up = [&cop](const XObj& x, const AObj& a, const AObj& b, const XObj& y,
                   const AMor& g) { return cop.up(x, a, b, y, g); };
  check_combinators_core(cop, down, up, "combinators", suite, opts);
}

/// Both directions of the equivalence between the unit presentation and
/// the combinator presentation of copowers:
///  - builds unit' = runit_inv ; down(hom-unit) and checks it reproduces
///    the data's unit and the unit form of down;
///  - re-derives down from the unit and re-checks the combinator laws
///    against the data's up.
template <typename AObj, typename AMor, typename XObj>
void check_unit_combinators_equiv(const CopowerData<AObj, AMor, XObj>& cop,
                                  LawSuite& suite,
                                  const CheckOptions& opts = {}) {
  const auto& enr = cop.enr;
  const auto& base = enr.base;
  const auto& acat = base.cat;
  const auto xobjs = detail::take(enr.objects(), opts.max_objects);
  const auto aobjs = detail::take(acat.objects(), opts.max_objects);

  auto derived_unit = [&](const XObj& x, const AObj& a) {
    XObj xa = cop.copower_obj(x, a);
    AMor down_id = cop.down(x, a, base.unit, xa, enr.unit(xa));
    return acat.compose(base.right_unit_inv(a), down_id);
  };

  suite.run("copower.unit-from-combinators", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs) {
        AMor built = derived_unit(x, a);
        AMor given = cop.unit(x, a);
        if (!law.check(acat.equal(built, given), [&] {
              return Counterexample{detail::join({enr.show_xobj(x), acat.show_obj(a)}),
                                    acat.show_mor(built), acat.show_mor(given)};
            }))
          return;
        // The derived unit also satisfies the unit form of down.
        XObj xa = cop.copower_obj(x, a);
        for (const XObj& y : xobjs) {
          AObj hup = enr.hom(xa, y);
          for (const AObj& b : aobjs)
            for (const AMor& f : acat.morphisms(b, hup)) {
              AMor lhs = cop.down(x, a, b, y, f);
              AMor rhs = acat.compose(base.tensor_mor(built, f), enr.comp(x, xa, y));
              if (!law.check(acat.equal(lhs, rhs), [&] {
                    return Counterexample{acat.show_mor(f), acat.show_mor(lhs), acat.show_mor(rhs)};
                  }))
                return;
            }
        }
      }
  });

  // Unit presentation implies the combinator laws: rebuild down from the
  // unit and run the full combinator family against the data's up.
  auto down_from_unit = [&cop](const XObj& x, const AObj& a, const AObj&,
                               const XObj& y, const AMor& f) {
    const auto& e = cop.enr;
    XObj xa = cop.copower_obj(x, a);
    return e.base.cat.compose(e.base.tensor_mor(cop.unit(x, a), f),
                              e.comp(x, xa, y));
  };
  auto up_data = [&cop](const XObj& x, const AObj& a, const AObj& b,
                        const XObj& y, const AMor& g) {
    return cop.up(x, a, b, y, g);
  };
  check_combinators_core(cop, down_from_unit, up_data, "copower.unit-derived",
                         suite, opts);
}

/// Power transpose (f @ counit) ; comp and its given inverse are
/// mutually inverse on every enumerated hom-set.
template <typename AObj, typename AMor, typename XObj>
void check_power(const PowerData<AObj, AMor, XObj>& pow, LawSuite& suite,
                 const CheckOptions& opts = {}) {
  const auto& enr = pow.enr;
  const auto& base = enr.base;
  const auto& acat = base.cat;
  const auto xobjs = detail::take(enr.objects(), opts.max_objects);
  const auto aobjs = detail::take(acat.objects(), opts.max_objects);

  suite.run("power.roundtrips", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const AObj& a : aobjs)
      for (const XObj& y : xobjs) {
        XObj ay = pow.power_obj(a, y);
        AMor eps = pow.counit(a, y);
        for (const XObj& x : xobjs) {
          AObj hin = enr.hom(x, ay);
          AObj hout = enr.hom(x, y);
          AMor m = enr.comp(x, ay, y);
          auto forward = [&](const AMor& f) {
            return acat.compose(base.tensor_mor(f, eps), m);
          };
          for (const AObj& b : aobjs) {
            for (const AMor& f : acat.morphisms(b, hin)) {
              AMor g = forward(f);
              AMor back = pow.from_tensor(x, a, b, y, g);
              if (!law.check(acat.equal(back, f),
                             [&] { return Counterexample{acat.show_mor(f), acat.show_mor(back), acat.show_mor(f)}; }))
                return;
            }
            for (const AMor& g : acat.morphisms(base.tensor_obj(b, a), hout)) {
              AMor f = pow.from_tensor(x, a, b, y, g);
              AMor back = forward(f);
              if (!law.check(acat.equal(back, g),
                             [&] { return Counterexample{acat.show_mor(g), acat.show_mor(back), acat.show_mor(g)}; }))
                return;
            }
          }
        }
      }
  });
}

/// Hom post-composition slides past the enrichment composition:
///   (1 @ hom_post(k)) ; comp = comp ; hom_post(k).
template <typename AObj, typename AMor, typename XObj>
void check_swap_comp(const EnrichmentData<AObj, AMor, XObj>& enr,
                     LawSuite& suite, const CheckOptions& opts = {}) {
  const auto& base = enr.base;
  const auto& acat = base.cat;
  const auto xobjs = detail::take(enr.objects(), opts.max_objects);

  suite.run("enrichment.swap-comp", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& w : xobjs)
      for (const XObj& w2 : xobjs)
        for (const AMor& k : acat.morphisms(base.unit, enr.hom(w, w2)))
          for (const XObj& u : xobjs)
            for (const XObj& v : xobjs) {
              AObj huv = enr.hom(u, v);
              AMor post_uv = hom_post(enr, v, w, w2, k);
              AMor post_u = hom_post(enr, u, w, w2, k);
              AMor lhs = acat.compose(base.tensor_mor(acat.identity(huv), post_uv),
                                      enr.comp(u, v, w2));
              AMor rhs = acat.compose(enr.comp(u, v, w), post_u);
              if (!law.check(acat.equal(lhs, rhs), [&] {
                    return Counterexample{
                        detail::join({enr.show_xobj(u), enr.show_xobj(v), acat.show_mor(k)}),
                        acat.show_mor(lhs), acat.show_mor(rhs)};
                  }))
                return;
            }
  });
}

/// Closed-base comparison maps between hom(X<|A, Y) and A -o hom(X, Y):
/// alpha = up(ev), beta = curry(down(1)); checks they are mutually
/// inverse, the sliding equation for uncurry(beta), and that the copower
/// unit is recovered from beta.
template <typename AObj, typename AMor, typename XObj>
void check_closed_gamma(const CopowerData<AObj, AMor, XObj>& cop,
                        const ClosedData<AObj, AMor>& closed, LawSuite& suite,
                        const CheckOptions& opts = {}) {
  const auto& enr = cop.enr;
  const auto& base = enr.base;
  const auto& acat = base.cat;
  const auto xobjs = detail::take(enr.objects(), opts.max_objects);
  const auto aobjs = detail::take(acat.objects(), opts.max_objects);

  auto beta = [&](const XObj& x, const AObj& a, const XObj& y) {
    XObj xa = cop.copower_obj(x, a);
    AObj hup = enr.hom(xa, y);
    AMor down_id = cop.down(x, a, hup, y, acat.identity(hup));
    return closed.curry(a, hup, enr.hom(x, y), down_id);
  };

  suite.run("closed.gamma-iso", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs)
        for (const XObj& y : xobjs) {
          XObj xa = cop.copower_obj(x, a);
          AObj hup = enr.hom(xa, y);
          AObj hdn = enr.hom(x, y);
          AObj inner = closed.internal_hom(a, hdn);
          AMor alpha = cop.up(x, a, inner, y, closed.ev(a, hdn));
          AMor b = beta(x, a, y);
          AMor ab = acat.compose(alpha, b);
          AMor ba = acat.compose(b, alpha);
          auto at = [&] { return detail::join({enr.show_xobj(x), acat.show_obj(a), enr.show_xobj(y)}); };
          if (!law.check(acat.equal(ab, acat.identity(inner)),
                         [&] { return Counterexample{at(), acat.show_mor(ab), "identity"}; }))
            return;
          if (!law.check(acat.equal(ba, acat.identity(hup)),
                         [&] { return Counterexample{at(), acat.show_mor(ba), "identity"}; }))
            return;
        }
  });

  suite.run("closed.gamma-slide", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs)
        for (const XObj& y : xobjs)
          for (const XObj& z : xobjs) {
            XObj xa = cop.copower_obj(x, a);
            AObj h1 = enr.hom(xa, y);
            AObj h2 = enr.hom(y, z);
            AMor uy = closed.uncurry(a, h1, enr.hom(x, y), beta(x, a, y));
            AMor uz = closed.uncurry(a, enr.hom(xa, z), enr.hom(x, z), beta(x, a, z));
            AMor lhs = acat.compose(
                base.assoc(a, h1, h2),
                acat.compose(base.tensor_mor(uy, acat.identity(h2)), enr.comp(x, y, z)));
            AMor rhs = acat.compose(
                base.tensor_mor(acat.identity(a), enr.comp(xa, y, z)), uz);
            if (!law.check(acat.equal(lhs, rhs), [&] {
                  return Counterexample{
                      detail::join({enr.show_xobj(x), acat.show_obj(a), enr.show_xobj(y), enr.show_xobj(z)}),
                      acat.show_mor(lhs), acat.show_mor(rhs)};
                }))
              return;
          }
  });

  suite.run("closed.unit-recovered", [&](Law& law) {
    if (!opts.note.empty()) law.note(opts.note);
    for (const XObj& x : xobjs)
      for (const AObj& a : aobjs) {
        XObj xa = cop.copower_obj(x, a);
        AObj hup = enr.hom(xa, xa);
        AMor u = closed.uncurry(a, hup, enr.hom(x, xa), beta(x, a, xa));
        AMor built = acat.compose(
            base.right_unit_inv(a),
            acat.compose(base.tensor_mor(acat.identity(a), enr.unit(xa)), u));
        AMor given = cop.unit(x, a);
        if (!law.check(acat.equal(built, given), [&] {
              return Counterexample{detail::join({enr.show_xobj(x), acat.show_obj(a)}),
                                    acat.show_mor(built), acat.show_mor(given)};
            }))
          return;
      }
  });
}

}  // namespace camplet::cat
