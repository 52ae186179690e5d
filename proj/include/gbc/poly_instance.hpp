#pragma once

// Poly_c(FinSet) behind the instance interface: cell algebra plus bounded
// enumeration.  Generic middles of polynomials are not globally enumerable
// (the factorization object T varies freely outside the image of p1), so
// this instance deliberately exposes no coherent class; factorization of
// given 2-cells lives in poly.hpp.

#include <string>
#include <vector>

#include "gbc/bicategory.hpp"
#include "gbc/finset.hpp"
#include "gbc/poly.hpp"

namespace gbc {

struct PolyBicat {
  using Obj = FinSet;
  using One = Polynomial;
  using Two = CartPolyMor;

  int obj_bound = 2;
  int e_bound = 2;
  int b_bound = 2;

  std::string bound_description() const {
    return "poly objects<=" + std::to_string(obj_bound) + ", E<=" + std::to_string(e_bound) +
           ", B<=" + std::to_string(b_bound);
  }

  std::vector<Obj> objects() const {
    std::vector<Obj> v;
    for (int i = 0; i <= obj_bound; ++i) v.push_back(FinSet{i});
    return v;
  }
  std::vector<One> one_cells(Obj x, Obj z) const { return enumerate_polynomials(x, z, e_bound, b_bound); }
  std::vector<Two> two_cells(const One& a, const One& b) const { return poly_two_cells(a, b); }

  Obj src_of(const One& a) const { return a.src(); }
  One dom2(const Two& f) const { return f.src; }
  One cod2(const Two& f) const { return f.dst; }
  Obj tgt_of(const One& a) const { return a.tgt(); }
  One identity_one(Obj x) const { return Polynomial::identity(x); }
  Two identity_two(const One& a) const { return CartPolyMor::identity(a); }
  Two vcomp(const Two& f, const Two& g) const { return vcompose(f, g); }
  One hcomp(const One& a, const One& b) const { return compose_polys(a, b).composite; }
  Two hcomp2(const Two& f, const Two& g) const { return hcompose_polymor(f, g); }
  Two associator(const One& a, const One& b, const One& c) const { return poly_associator(a, b, c); }
  Two lunitor(const One& a) const { return poly_lunitor(a); }
  Two runitor(const One& a) const { return poly_runitor(a); }
  bool is_iso(const Two& f) const { return f.is_iso(); }
  Two invert(const Two& f) const { return f.inverted(); }
};

}  // namespace gbc
