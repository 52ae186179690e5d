#pragma once

// Span(FinSet) packaged behind the uniform bicategory-instance interface:
// enumerable truncated hom-categories, the cell algebra (composition,
// constraint cells), and the generic structure (the class of diagonals
// delta_{s,h,t}, augmentations epsilon_h, factorization and fillers).
//
// Bounds: objects are the finite sets of size <= obj_bound, enumerated
// 1-cells have apex <= apex_bound.  The cell algebra itself is total: it
// accepts any cells (such as composites, whose apexes may exceed the bound).

#include <optional>
#include <utility>
#include <vector>

#include "gbc/finset.hpp"
#include "gbc/span.hpp"

namespace gbc {

struct SpanBicat {
  using Obj = FinSet;
  using One = Span;
  using Two = SpanMor;
  using Gen = GenericWitnessSpan;
  using Aug = FinFunction;  // h, presenting (h,h) -> 1_{h.cod}

  int obj_bound = 2;
  int apex_bound = 2;

  std::string bound_description() const {
    return "span objects<=" + std::to_string(obj_bound) + ", apexes<=" + std::to_string(apex_bound);
  }

  // --- enumeration -------------------------------------------------------
  std::vector<Obj> objects() const {
    std::vector<Obj> v;
    for (int i = 0; i <= obj_bound; ++i) v.push_back(FinSet{i});
    return v;
  }
  std::vector<One> one_cells(Obj x, Obj z) const { return enumerate_spans(x, z, apex_bound); }
  std::vector<Two> two_cells(const One& a, const One& b) const { return span_two_cells(a, b); }

  // --- cell algebra ------------------------------------------------------
  Obj src_of(const One& a) const { return a.src(); }
  One dom2(const Two& f) const { return f.src; }
  One cod2(const Two& f) const { return f.dst; }
  Obj tgt_of(const One& a) const { return a.tgt(); }
  One identity_one(Obj x) const { return Span::identity(x); }
  Two identity_two(const One& a) const { return SpanMor::identity(a); }
  Two vcomp(const Two& f, const Two& g) const { return vcompose(f, g); }
  One hcomp(const One& a, const One& b) const { return compose_spans(a, b).composite; }
  Two hcomp2(const Two& f, const Two& g) const { return hcompose_spanmor(f, g); }
  Two associator(const One& a, const One& b, const One& c) const { return span_associator(a, b, c); }
  Two lunitor(const One& a) const { return span_lunitor(a); }
  Two runitor(const One& a) const { return span_runitor(a); }
  bool is_iso(const Two& f) const { return f.is_iso(); }
  Two invert(const Two& f) const { return f.inverted(); }

  // --- generic structure -------------------------------------------------
  std::vector<Gen> class_generics(const One& c) const {
    std::vector<Gen> out;
    for (int y = 0; y <= obj_bound; ++y)
      for (const auto& h : enumerate_functions(c.apex(), FinSet{y})) out.emplace_back(c, h);
    return out;
  }
  std::vector<Aug> class_augmentations(const One& n) const {
    if (n.left == n.right) return {n.left};
    return {};
  }

  One gen_dom(const Gen& d) const { return d.base; }
  One gen_left(const Gen& d) const { return d.left_cell(); }
  One gen_right(const Gen& d) const { return d.right_cell(); }
  Two gen_cell(const Gen& d) const { return generic_2cell(d); }

  One aug_dom(const Aug& e) const { return Span(e, e); }
  Obj aug_obj(const Aug& e) const { return e.cod; }
  Two aug_cell(const Aug& e) const { return augmentation_2cell(e); }
  Aug identity_augmentation(Obj x) const { return FinFunction::identity(x); }

  struct Factorization {
    Gen gen;
    Two left;
    Two right;
  };

  // Canonical generic factorization of gamma : c -> a;b.
  Factorization factor(const Two& gamma, const One& a, const One& b) const {
    auto cs = compose_spans(a, b);
    auto f = factor_2cell(gamma, cs);
    return {f.witness, f.left_mor, f.right_mor};
  }

  // The unique (gamma1, gamma2) with (gamma1;gamma2) . delta = gamma, if any.
  std::optional<std::pair<Two, Two>> factor_through(const Gen& d, const Two& gamma, const One& a,
                                                    const One& b) const {
    if (gamma.src != d.base) return std::nullopt;
    auto cs = compose_spans(a, b);
    if (gamma.dst != cs.composite) return std::nullopt;
    FinFunction c1 = compose(gamma.map, cs.pb.proj1);
    FinFunction c2 = compose(gamma.map, cs.pb.proj2);
    if (compose(c1, a.right) != d.h || compose(c2, b.left) != d.h) return std::nullopt;
    try {
      Two g1(d.left_cell(), a, c1);
      Two g2(d.right_cell(), b, c2);
      if (vcompose(gen_cell(d), hcomp2(g1, g2)) != gamma) return std::nullopt;
      return std::make_pair(std::move(g1), std::move(g2));
    } catch (const error&) {
      return std::nullopt;
    }
  }

  // Generic factorization of the identity 2-cell on a;b, used to rebuild
  // binary constraint cells: id = (proj1;proj2) . delta.
  Factorization identity_factorization(const One& a, const One& b) const {
    auto cs = compose_spans(a, b);
    return factor(SpanMor::identity(cs.composite), a, b);
  }

  // A 2-cell into a composite is generic iff its canonical factorization has
  // invertible components (checked against the brute-force filler property in
  // the test suite).
  bool is_generic(const Two& gamma, const One& a, const One& b) const {
    auto f = factor(gamma, a, b);
    return f.left.is_iso() && f.right.is_iso();
  }
};

}  // namespace gbc
