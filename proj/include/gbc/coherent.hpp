#pragma once

// Bicategory axiom suite (pentagon, triangle, interchange) and validation of
// coherent classes of generics and augmentations: completeness of generics
// and augmentations, associator coherence, and the two unitor coherence
// conditions, checked exhaustively over the instance's enumerated cells.

#include <string>
#include <utility>
#include <vector>

#include "gbc/bicategory.hpp"
#include "gbc/report.hpp"

namespace gbc {

namespace detail {

template <typename B>
std::vector<std::pair<typename B::Obj, typename B::Obj>> object_pairs(const B& bb) {
  std::vector<std::pair<typename B::Obj, typename B::Obj>> v;
  for (const auto& x : bb.objects())
    for (const auto& y : bb.objects()) v.emplace_back(x, y);
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// bicategory axiom suite

template <EnumerableBicategory B>
void check_pentagon(const B& bb, Report& report) {
  auto& r = report.add("bicat.pentagon", "pentagon identity for the associator", bb.bound_description());
  for (const auto& v : bb.objects())
    for (const auto& w : bb.objects())
      for (const auto& x : bb.objects())
        for (const auto& y : bb.objects())
          for (const auto& z : bb.objects())
            for (const auto& a : bb.one_cells(v, w))
              for (const auto& b : bb.one_cells(w, x))
                for (const auto& c : bb.one_cells(x, y))
                  for (const auto& d : bb.one_cells(y, z)) {
                    auto lhs = bb.vcomp(bb.associator(bb.hcomp(a, b), c, d),
                                        bb.associator(a, b, bb.hcomp(c, d)));
                    auto rhs = bb.vcomp(
                        bb.vcomp(bb.hcomp2(bb.associator(a, b, c), bb.identity_two(d)),
                                 bb.associator(a, bb.hcomp(b, c), d)),
                        bb.hcomp2(bb.identity_two(a), bb.associator(b, c, d)));
                    ++r.instances;
                    if (!(lhs == rhs) && r.passed) {
                      r.passed = false;
                      r.counterexample = {{"instance", r.instances}};
                    }
                  }
}

template <EnumerableBicategory B>
void check_triangle(const B& bb, Report& report) {
  auto& r = report.add("bicat.triangle", "triangle identity for the unitors", bb.bound_description());
  for (const auto& x : bb.objects())
    for (const auto& y : bb.objects())
      for (const auto& z : bb.objects())
        for (const auto& a : bb.one_cells(x, y))
          for (const auto& b : bb.one_cells(y, z)) {
            auto lhs = bb.vcomp(bb.hcomp2(bb.runitor(a), bb.identity_two(b)),
                                bb.associator(a, bb.identity_one(y), b));
            auto rhs = bb.hcomp2(bb.identity_two(a), bb.lunitor(b));
            ++r.instances;
            if (!(lhs == rhs) && r.passed) {
              r.passed = false;
              r.counterexample = {{"instance", r.instances}};
            }
          }
}

template <EnumerableBicategory B>
void check_interchange(const B& bb, Report& report) {
  auto& r = report.add("bicat.interchange", "middle-four interchange", bb.bound_description());
  for (const auto& x : bb.objects())
    for (const auto& y : bb.objects())
      for (const auto& z : bb.objects()) {
        auto left = bb.one_cells(x, y);
        auto right = bb.one_cells(y, z);
        // vertically composable pairs on each side
        for (const auto& a0 : left)
          for (const auto& a1 : left)
            for (const auto& al : bb.two_cells(a0, a1))
              for (const auto& a2 : left)
                for (const auto& al2 : bb.two_cells(a1, a2))
                  for (const auto& b0 : right)
                    for (const auto& b1 : right)
                      for (const auto& be : bb.two_cells(b0, b1))
                        for (const auto& b2 : right)
                          for (const auto& be2 : bb.two_cells(b1, b2)) {
                            auto lhs = bb.vcomp(bb.hcomp2(al, be), bb.hcomp2(al2, be2));
                            auto rhs = bb.hcomp2(bb.vcomp(al, al2), bb.vcomp(be, be2));
                            ++r.instances;
                            if (!(lhs == rhs) && r.passed) {
                              r.passed = false;
                              r.counterexample = {{"instance", r.instances}};
                            }
                          }
      }
}

template <EnumerableBicategory B>
Report bicategory_axiom_suite(const B& bb) {
  Report report;
  check_pentagon(bb, report);
  check_triangle(bb, report);
  check_interchange(bb, report);
  return report;
}

// ---------------------------------------------------------------------------
// coherent classes

// A materialized class: the chosen generics and augmentations forming
// Delta2/Delta0, stored explicitly so members can be dropped in controls.
template <typename B>
struct CoherentClass {
  std::vector<typename B::Gen> generics;
  std::vector<typename B::Aug> augmentations;

  bool has_generic(const typename B::Gen& d) const {
    for (const auto& g : generics)
      if (g == d) return true;
    return false;
  }
  bool has_augmentation(const typename B::Aug& e) const {
    for (const auto& a : augmentations)
      if (a == e) return true;
    return false;
  }
};

// The full canonical class over the instance's enumerated cells.
template <GenericBicategory B>
CoherentClass<B> default_coherent_class(const B& bb) {
  CoherentClass<B> cls;
  for (const auto& [x, z] : detail::object_pairs(bb))
    for (const auto& c : bb.one_cells(x, z)) {
      for (const auto& d : bb.class_generics(c)) cls.generics.push_back(d);
      for (const auto& e : bb.class_augmentations(c)) cls.augmentations.push_back(e);
    }
  return cls;
}

namespace detail {

// search for class members delta3, delta4 closing the associator square of
// condition (3) for the composable pair (delta1, delta2); returns indices
// into cls.generics or (-1, -1)
template <GenericBicategory B>
std::pair<int, int> associator_witnesses(const B& bb, const CoherentClass<B>& cls,
                                         const typename B::Gen& d1, const typename B::Gen& d2) {
  using One = typename B::One;
  One c = bb.gen_dom(d1);
  One r = bb.gen_right(d1);
  One l = bb.gen_left(d2);
  One m = bb.gen_right(d2);
  One mr = bb.hcomp(m, r);
  auto pasted = bb.vcomp(bb.vcomp(bb.gen_cell(d1), bb.hcomp2(bb.gen_cell(d2), bb.identity_two(r))),
                         bb.associator(l, m, r));
  for (std::size_t i = 0; i < cls.generics.size(); ++i) {
    const auto& d3 = cls.generics[i];
    if (!(bb.gen_dom(d3) == c) || !(bb.gen_left(d3) == l)) continue;
    auto fill = bb.factor_through(d3, pasted, l, mr);
    if (!fill) continue;
    if (!(fill->first == bb.identity_two(l))) continue;
    for (std::size_t j = 0; j < cls.generics.size(); ++j) {
      const auto& d4 = cls.generics[j];
      if (!(bb.gen_dom(d4) == bb.gen_right(d3)) || !(bb.gen_left(d4) == m) ||
          !(bb.gen_right(d4) == r))
        continue;
      if (bb.gen_cell(d4) == fill->second) return {static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {-1, -1};
}

}  // namespace detail

// Exhaustive validation of the five coherence conditions for a class below
// the instance bounds.  Failures carry a counterexample description.
template <GenericBicategory B>
Report validate_coherent_class(const B& bb, const CoherentClass<B>& cls) {
  Report report;
  const std::string bound = bb.bound_description();

  // (1) completeness of generics: every generic 2-cell c' -> a;b is related
  // to a class member by invertible (zeta, zeta1, zeta2)
  {
    auto& r = report.add("class.completeness-of-generics",
                         "every generic is isomorphism-equivalent to a class member", bound);
    for (const auto& [x, z] : detail::object_pairs(bb))
      for (const auto& cprime : bb.one_cells(x, z))
        for (const auto& y : bb.objects())
          for (const auto& a : bb.one_cells(x, y))
            for (const auto& b : bb.one_cells(y, z))
              for (const auto& gamma : bb.two_cells(cprime, bb.hcomp(a, b))) {
                if (!bb.is_generic(gamma, a, b)) continue;
                ++r.instances;
                bool covered = false;
                for (const auto& d : cls.generics) {
                  if (covered) break;
                  auto cdom = bb.gen_dom(d);
                  if (!(bb.src_of(cdom) == bb.src_of(cprime)) ||
                      !(bb.tgt_of(cdom) == bb.tgt_of(cprime)))
                    continue;
                  for (const auto& zeta : bb.two_cells(cdom, cprime)) {
                    if (!bb.is_iso(zeta)) continue;
                    auto fill = bb.factor_through(d, bb.vcomp(zeta, gamma), a, b);
                    if (fill && bb.is_iso(fill->first) && bb.is_iso(fill->second)) {
                      covered = true;
                      break;
                    }
                  }
                }
                if (!covered && r.passed) {
                  r.passed = false;
                  r.counterexample = {{"condition", "completeness-of-generics"},
                                      {"instance", r.instances}};
                }
              }
  }

  // (2) completeness of augmentations
  {
    auto& r = report.add("class.completeness-of-augmentations",
                         "every augmentation factors through a class member by an iso", bound);
    for (const auto& x : bb.objects()) {
      auto unit = bb.identity_one(x);
      for (const auto& nprime : bb.one_cells(x, x))
        for (const auto& eps_prime : bb.two_cells(nprime, unit)) {
          ++r.instances;
          bool covered = false;
          for (const auto& e : cls.augmentations) {
            if (covered) break;
            if (!(bb.aug_obj(e) == x)) continue;
            for (const auto& xi : bb.two_cells(bb.aug_dom(e), nprime))
              if (bb.is_iso(xi) && bb.vcomp(xi, eps_prime) == bb.aug_cell(e)) {
                covered = true;
                break;
              }
          }
          if (!covered && r.passed) {
            r.passed = false;
            r.counterexample = {{"condition", "completeness-of-augmentations"},
                                {"instance", r.instances}};
          }
        }
    }
  }

  // (3) associator coherence
  {
    auto& r = report.add("class.associator-coherence",
                         "composable class generics admit class witnesses closing the associator square",
                         bound);
    for (const auto& d1 : cls.generics)
      for (const auto& d2 : cls.generics) {
        if (!(bb.gen_dom(d2) == bb.gen_left(d1))) continue;
        ++r.instances;
        auto [i3, i4] = detail::associator_witnesses(bb, cls, d1, d2);
        if (i3 < 0 && r.passed) {
          r.passed = false;
          r.counterexample = {{"condition", "associator-coherence"}, {"instance", r.instances}};
        }
        (void)i4;
      }
  }

  // (4) left unitor coherence and (5) right unitor coherence
  std::vector<typename B::One> domains;
  for (const auto& d : cls.generics) {
    bool seen = false;
    for (const auto& c : domains)
      if (c == bb.gen_dom(d)) {
        seen = true;
        break;
      }
    if (!seen) domains.push_back(bb.gen_dom(d));
  }
  {
    auto& r = report.add("class.left-unitor-coherence",
                         "left unitors factor as a class generic followed by a class augmentation",
                         bound);
    for (const auto& c : domains) {
      ++r.instances;
      bool ok = false;
      for (const auto& d : cls.generics) {
        if (ok) break;
        if (!(bb.gen_dom(d) == c) || !(bb.gen_right(d) == c)) continue;
        for (const auto& e : cls.augmentations)
          if (bb.aug_dom(e) == bb.gen_left(d) &&
              bb.vcomp(bb.gen_cell(d), bb.hcomp2(bb.aug_cell(e), bb.identity_two(c))) ==
                  bb.lunitor(c)) {
            ok = true;
            break;
          }
      }
      if (!ok && r.passed) {
        r.passed = false;
        r.counterexample = {{"condition", "left-unitor-coherence"}, {"instance", r.instances}};
      }
    }
  }
  {
    auto& r = report.add("class.right-unitor-coherence",
                         "right unitors factor as a class generic followed by a class augmentation",
                         bound);
    for (const auto& c : domains) {
      ++r.instances;
      bool ok = false;
      for (const auto& d : cls.generics) {
        if (ok) break;
        if (!(bb.gen_dom(d) == c) || !(bb.gen_left(d) == c)) continue;
        for (const auto& e : cls.augmentations)
          if (bb.aug_dom(e) == bb.gen_right(d) &&
              bb.vcomp(bb.gen_cell(d), bb.hcomp2(bb.identity_two(c), bb.aug_cell(e))) ==
                  bb.runitor(c)) {
            ok = true;
            break;
          }
      }
      if (!ok && r.passed) {
        r.passed = false;
        r.counterexample = {{"condition", "right-unitor-coherence"}, {"instance", r.instances}};
      }
    }
  }

  return report;
}

}  // namespace gbc
