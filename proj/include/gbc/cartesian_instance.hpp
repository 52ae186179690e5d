#pragma once

// The cartesian monoidal category (FinSet, x, 1), restricted to sets of size
// <= obj_bound and viewed as a one-object bicategory.  1-cells are finite
// sets, 2-cells are functions, horizontal composition is the canonical
// product, generics are the diagonals delta_T : T -> T x T and augmentations
// the unique maps into the terminal set.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbc/bicategory.hpp"
#include "gbc/finset.hpp"

namespace gbc {

struct CartesianBicat {
  using Obj = MonoidalPoint;
  using One = FinSet;
  using Two = FinFunction;
  using Gen = FinSet;  // the 1-cell T carrying delta_T
  using Aug = FinSet;  // the 1-cell T carrying epsilon_T

  int obj_bound = 2;

  std::string bound_description() const { return "cartesian 1-cells<=" + std::to_string(obj_bound); }

  std::vector<Obj> objects() const { return {MonoidalPoint{}}; }
  std::vector<One> one_cells(Obj, Obj) const {
    std::vector<One> v;
    for (int i = 0; i <= obj_bound; ++i) v.push_back(FinSet{i});
    return v;
  }
  std::vector<Two> two_cells(const One& a, const One& b) const { return enumerate_functions(a, b); }

  Obj src_of(const One&) const { return {}; }
  One dom2(const Two& f) const { return f.dom; }
  One cod2(const Two& f) const { return f.cod; }
  Obj tgt_of(const One&) const { return {}; }
  One identity_one(Obj) const { return FinSet{1}; }
  Two identity_two(const One& a) const { return FinFunction::identity(a); }
  Two vcomp(const Two& f, const Two& g) const { return compose(f, g); }
  One hcomp(const One& a, const One& b) const { return product(a, b).apex; }
  Two hcomp2(const Two& f, const Two& g) const {
    auto s = product(f.dom, g.dom);
    auto d = product(f.cod, g.cod);
    std::vector<int> t(static_cast<std::size_t>(s.apex.size));
    for (int k = 0; k < s.apex.size; ++k) {
      auto [i, j] = s.pairs[static_cast<std::size_t>(k)];
      t[static_cast<std::size_t>(k)] = d.pair_index(f(i), g(j));
    }
    return FinFunction(s.apex, d.apex, std::move(t));
  }
  Two associator(const One& a, const One& b, const One& c) const {
    auto ab = product(a, b);
    auto ab_c = product(ab.apex, c);
    auto bc = product(b, c);
    auto a_bc = product(a, bc.apex);
    std::vector<int> t(static_cast<std::size_t>(ab_c.apex.size));
    for (int e = 0; e < ab_c.apex.size; ++e) {
      auto [ij, k] = ab_c.pairs[static_cast<std::size_t>(e)];
      auto [i, j] = ab.pairs[static_cast<std::size_t>(ij)];
      t[static_cast<std::size_t>(e)] = a_bc.pair_index(i, bc.pair_index(j, k));
    }
    return FinFunction(ab_c.apex, a_bc.apex, std::move(t));
  }
  Two lunitor(const One& a) const {
    auto d = product(FinSet{1}, a);
    std::vector<int> t(static_cast<std::size_t>(a.size));
    for (int i = 0; i < a.size; ++i) t[static_cast<std::size_t>(i)] = d.pair_index(0, i);
    return FinFunction(a, d.apex, std::move(t));
  }
  Two runitor(const One& a) const {
    auto d = product(a, FinSet{1});
    std::vector<int> t(static_cast<std::size_t>(a.size));
    for (int i = 0; i < a.size; ++i) t[static_cast<std::size_t>(i)] = d.pair_index(i, 0);
    return FinFunction(a, d.apex, std::move(t));
  }
  bool is_iso(const Two& f) const { return f.is_bijection(); }
  Two invert(const Two& f) const { return f.inverse(); }

  std::vector<Gen> class_generics(const One& c) const { return {c}; }
  std::vector<Aug> class_augmentations(const One& n) const { return {n}; }

  One gen_dom(const Gen& d) const { return d; }
  One gen_left(const Gen& d) const { return d; }
  One gen_right(const Gen& d) const { return d; }
  Two gen_cell(const Gen& d) const {
    auto pr = product(d, d);
    std::vector<int> t(static_cast<std::size_t>(d.size));
    for (int i = 0; i < d.size; ++i) t[static_cast<std::size_t>(i)] = pr.pair_index(i, i);
    return FinFunction(d, pr.apex, std::move(t));
  }

  One aug_dom(const Aug& e) const { return e; }
  Obj aug_obj(const Aug&) const { return {}; }
  Two aug_cell(const Aug& e) const { return FinFunction::constant(e, FinSet{1}, 0); }
  Aug identity_augmentation(Obj) const { return FinSet{1}; }

  struct Factorization {
    Gen gen;
    Two left;
    Two right;
  };

  Factorization factor(const Two& gamma, const One& a, const One& b) const {
    auto pr = product(a, b);
    if (gamma.cod != pr.apex) fail(errc::boundary_mismatch, "factor: 2-cell does not land in a x b");
    return {gamma.dom, compose(gamma, pr.proj1), compose(gamma, pr.proj2)};
  }

  std::optional<std::pair<Two, Two>> factor_through(const Gen& d, const Two& gamma, const One& a,
                                                    const One& b) const {
    if (gamma.dom != d) return std::nullopt;
    auto f = factor(gamma, a, b);
    return std::make_pair(f.left, f.right);
  }

  Factorization identity_factorization(const One& a, const One& b) const {
    auto pr = product(a, b);
    return {pr.apex, pr.proj1, pr.proj2};
  }

  bool is_generic(const Two& gamma, const One& a, const One& b) const {
    auto f = factor(gamma, a, b);
    return f.left.is_bijection() && f.right.is_bijection();
  }
};

}  // namespace gbc
