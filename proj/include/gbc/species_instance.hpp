#pragma once

// Finite sets and bijections with disjoint union, stored skeletally: the
// one-object bicategory whose 1-cells are the sets [n], 2-cells the
// permutations, and horizontal composition addition with block structure.
// The class of generics holds one splitting [n1+n2] -> [n1] u [n2] per pair,
// realized by the identity permutation on the skeleton; general generics are
// the "sort a subset first" bijections delta_L.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbc/bicategory.hpp"
#include "gbc/finset.hpp"

namespace gbc {

struct SpeciesMor {
  int src = 0;
  int dst = 0;
  std::vector<int> perm;  // bijection [src] -> [dst]; requires src == dst

  SpeciesMor() = default;
  SpeciesMor(int s, int d, std::vector<int> p) : src(s), dst(d), perm(std::move(p)) {
    if (src != dst || static_cast<int>(perm.size()) != src)
      fail(errc::invalid_table, "species 2-cell must be an endo-bijection");
    std::vector<char> seen(static_cast<std::size_t>(src), 0);
    for (int v : perm) {
      if (v < 0 || v >= dst || seen[static_cast<std::size_t>(v)])
        fail(errc::invalid_table, "species 2-cell is not a bijection");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  int operator()(int i) const { return perm[static_cast<std::size_t>(i)]; }

  friend auto operator<=>(const SpeciesMor&, const SpeciesMor&) = default;
};

// delta_L for a subset L of [n]: members of the coherent class are the
// prefix splittings of the skeleton.
struct SpeciesGen {
  int n = 0;
  std::vector<int> left;  // ascending subset of [n]

  friend auto operator<=>(const SpeciesGen&, const SpeciesGen&) = default;
};

struct SpeciesAug {
  friend auto operator<=>(const SpeciesAug&, const SpeciesAug&) = default;
};

struct SpeciesBicat {
  using Obj = MonoidalPoint;
  using One = int;
  using Two = SpeciesMor;
  using Gen = SpeciesGen;
  using Aug = SpeciesAug;

  int obj_bound = 4;

  std::string bound_description() const { return "species 1-cells<=" + std::to_string(obj_bound); }

  std::vector<Obj> objects() const { return {MonoidalPoint{}}; }
  std::vector<One> one_cells(Obj, Obj) const {
    std::vector<One> v;
    for (int i = 0; i <= obj_bound; ++i) v.push_back(i);
    return v;
  }
  std::vector<Two> two_cells(const One& a, const One& b) const {
    std::vector<Two> out;
    if (a != b) return out;
    std::vector<int> perm(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      out.emplace_back(a, b, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  Obj src_of(const One&) const { return {}; }
  One dom2(const Two& f) const { return f.src; }
  One cod2(const Two& f) const { return f.dst; }
  Obj tgt_of(const One&) const { return {}; }
  One identity_one(Obj) const { return 0; }
  Two identity_two(const One& a) const {
    std::vector<int> p(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) p[static_cast<std::size_t>(i)] = i;
    return Two(a, a, std::move(p));
  }
  Two vcomp(const Two& f, const Two& g) const {
    if (f.dst != g.src) fail(errc::boundary_mismatch, "species vcomp: boundary mismatch");
    std::vector<int> p(f.perm.size());
    for (std::size_t i = 0; i < f.perm.size(); ++i) p[i] = g(f.perm[i]);
    return Two(f.src, g.dst, std::move(p));
  }
  One hcomp(const One& a, const One& b) const { return a + b; }
  Two hcomp2(const Two& f, const Two& g) const {
    std::vector<int> p(static_cast<std::size_t>(f.src + g.src));
    for (int i = 0; i < f.src; ++i) p[static_cast<std::size_t>(i)] = f(i);
    for (int i = 0; i < g.src; ++i) p[static_cast<std::size_t>(f.src + i)] = f.dst + g(i);
    return Two(f.src + g.src, f.dst + g.dst, std::move(p));
  }
  Two associator(const One& a, const One& b, const One& c) const { return identity_two(a + b + c); }
  Two lunitor(const One& a) const { return identity_two(a); }
  Two runitor(const One& a) const { return identity_two(a); }
  bool is_iso(const Two&) const { return true; }
  Two invert(const Two& f) const {
    std::vector<int> p(f.perm.size());
    for (std::size_t i = 0; i < f.perm.size(); ++i) p[static_cast<std::size_t>(f.perm[i])] = static_cast<int>(i);
    return Two(f.dst, f.src, std::move(p));
  }

  std::vector<Gen> class_generics(const One& c) const {
    std::vector<Gen> out;
    for (int k = 0; k <= c; ++k) {
      std::vector<int> prefix;
      for (int i = 0; i < k; ++i) prefix.push_back(i);
      out.push_back(Gen{c, std::move(prefix)});
    }
    return out;
  }
  std::vector<Aug> class_augmentations(const One& n) const {
    if (n == 0) return {Aug{}};
    return {};
  }

  One gen_dom(const Gen& d) const { return d.n; }
  One gen_left(const Gen& d) const { return static_cast<int>(d.left.size()); }
  One gen_right(const Gen& d) const { return d.n - static_cast<int>(d.left.size()); }
  Two gen_cell(const Gen& d) const {
    std::vector<int> p(static_cast<std::size_t>(d.n), -1);
    int n1 = static_cast<int>(d.left.size());
    int lrank = 0, rrank = 0;
    std::vector<char> in_left(static_cast<std::size_t>(d.n), 0);
    for (int v : d.left) in_left[static_cast<std::size_t>(v)] = 1;
    for (int i = 0; i < d.n; ++i)
      p[static_cast<std::size_t>(i)] = in_left[static_cast<std::size_t>(i)] ? lrank++ : n1 + rrank++;
    return Two(d.n, d.n, std::move(p));
  }

  One aug_dom(const Aug&) const { return 0; }
  Obj aug_obj(const Aug&) const { return {}; }
  Two aug_cell(const Aug&) const { return identity_two(0); }
  Aug identity_augmentation(Obj) const { return Aug{}; }

  struct Factorization {
    Gen gen;
    Two left;
    Two right;
  };

  Factorization factor(const Two& gamma, const One& a, const One& b) const {
    if (gamma.dst != a + b) fail(errc::boundary_mismatch, "species factor: 2-cell does not land in a+b");
    std::vector<int> left;
    for (int i = 0; i < gamma.src; ++i)
      if (gamma(i) < a) left.push_back(i);
    Gen d{gamma.src, left};
    std::vector<int> s1, s2;
    for (int i = 0; i < gamma.src; ++i)
      if (gamma(i) < a) s1.push_back(gamma(i));
      else s2.push_back(gamma(i) - a);
    return {d, Two(a, a, std::move(s1)), Two(b, b, std::move(s2))};
  }

  std::optional<std::pair<Two, Two>> factor_through(const Gen& d, const Two& gamma, const One& a,
                                                    const One& b) const {
    if (gamma.src != d.n || gamma.dst != a + b) return std::nullopt;
    if (static_cast<int>(d.left.size()) != a) return std::nullopt;
    std::vector<char> in_left(static_cast<std::size_t>(d.n), 0);
    for (int v : d.left) in_left[static_cast<std::size_t>(v)] = 1;
    std::vector<int> s1, s2;
    for (int i = 0; i < d.n; ++i) {
      if (in_left[static_cast<std::size_t>(i)] != (gamma(i) < a ? 1 : 0)) return std::nullopt;
      if (gamma(i) < a) s1.push_back(gamma(i));
      else s2.push_back(gamma(i) - a);
    }
    return std::make_pair(Two(a, a, std::move(s1)), Two(b, b, std::move(s2)));
  }

  Factorization identity_factorization(const One& a, const One& b) const {
    std::vector<int> prefix;
    for (int i = 0; i < a; ++i) prefix.push_back(i);
    return {Gen{a + b, prefix}, identity_two(a), identity_two(b)};
  }

  bool is_generic(const Two&, const One&, const One&) const { return true; }
};

}  // namespace gbc
