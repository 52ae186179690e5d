#pragma once

// Polynomials X <- E -> B -> Z over finite sets with cartesian 2-cells.
// Composition is the Sigma/Pi/Delta composite of the locally cartesian
// closed structure; composites carry a full decode of their B- and E-parts
// (which section over which fiber) so cartesian 2-cells into them can be
// factored into septuples (p1, h, p2, w, x, y, z).

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "gbc/finset.hpp"

namespace gbc {

struct Polynomial {
  FinFunction s;  // E -> X
  FinFunction p;  // E -> B
  FinFunction t;  // B -> Z

  Polynomial() = default;
  Polynomial(FinFunction ss, FinFunction pp, FinFunction tt)
      : s(std::move(ss)), p(std::move(pp)), t(std::move(tt)) {
    if (s.dom != p.dom) fail(errc::invalid_table, "polynomial: s and p have different domains");
    if (p.cod != t.dom) fail(errc::invalid_table, "polynomial: p.cod differs from t.dom");
  }

  FinSet e_set() const { return p.dom; }
  FinSet b_set() const { return p.cod; }
  FinSet src() const { return s.cod; }
  FinSet tgt() const { return t.cod; }

  static Polynomial identity(FinSet x) {
    auto id = FinFunction::identity(x);
    return Polynomial(id, id, id);
  }

  friend auto operator<=>(const Polynomial&, const Polynomial&) = default;
};

struct CartPolyMor {
  Polynomial src;
  Polynomial dst;
  FinFunction f;  // E -> E'
  FinFunction g;  // B -> B'

  CartPolyMor() = default;
  CartPolyMor(Polynomial s0, Polynomial d0, FinFunction ff, FinFunction gg)
      : src(std::move(s0)), dst(std::move(d0)), f(std::move(ff)), g(std::move(gg)) {
    if (src.src() != dst.src() || src.tgt() != dst.tgt())
      fail(errc::boundary_mismatch, "poly 2-cell between polynomials with different boundaries");
    if (f.dom != src.e_set() || f.cod != dst.e_set() || g.dom != src.b_set() || g.cod != dst.b_set())
      fail(errc::invalid_table, "poly 2-cell maps have wrong shapes");
    if (compose(f, dst.s) != src.s) fail(errc::invalid_table, "poly 2-cell: left triangle does not commute");
    if (compose(g, dst.t) != src.t) fail(errc::invalid_table, "poly 2-cell: right triangle does not commute");
    if (compose(src.p, g) != compose(f, dst.p))
      fail(errc::invalid_table, "poly 2-cell: middle square does not commute");
    // the middle square must be a pullback: e |-> (f(e), p(e)) bijects E with
    // the canonical pullback of dst.p along g
    auto pb = pullback(dst.p, g);
    if (pb.apex != src.e_set() || !mediate(pb, f, src.p).is_bijection())
      fail(errc::invalid_table, "poly 2-cell: middle square is not a pullback");
  }

  static CartPolyMor identity(const Polynomial& a) {
    return CartPolyMor(a, a, FinFunction::identity(a.e_set()), FinFunction::identity(a.b_set()));
  }

  bool is_iso() const { return f.is_bijection() && g.is_bijection(); }
  CartPolyMor inverted() const { return CartPolyMor(dst, src, f.inverse(), g.inverse()); }

  friend auto operator<=>(const CartPolyMor&, const CartPolyMor&) = default;
};

inline CartPolyMor vcompose(const CartPolyMor& a, const CartPolyMor& b) {
  if (a.dst != b.src) fail(errc::boundary_mismatch, "vertical composite of non-adjacent poly 2-cells");
  return CartPolyMor(a.src, b.dst, compose(a.f, b.f), compose(a.g, b.g));
}

// ---------------------------------------------------------------------------
// composition of polynomials

// Composite of P : X -> Y and Q : Y -> Z.  Elements of the composite's
// B-part are pairs (b2, beta) with b2 in Q's B and beta a section assigning
// to each e2 in Q's fiber over b2 an element of P's B lying over s2(e2);
// E-part elements are (b_idx, slot, e1).
struct ComposedPoly {
  Polynomial left_factor;
  Polynomial right_factor;
  Polynomial composite;

  std::vector<std::vector<int>> p2_fibers;  // b2 -> e2 list, ascending
  std::vector<int> b_b2;                    // B'' elem -> b2
  std::vector<std::vector<int>> b_beta;     // B'' elem -> b1 per slot of p2_fibers[b2]
  struct EElem {
    int b_idx;
    int slot;
    int e1;
  };
  std::vector<EElem> e_decode;
  std::map<std::vector<int>, int> b_index;  // [b2, beta...] -> B'' elem
  std::map<std::vector<int>, int> e_index;  // [b_idx, slot, e1] -> E'' elem

  int b_elem(int b2, const std::vector<int>& beta) const {
    std::vector<int> key{b2};
    key.insert(key.end(), beta.begin(), beta.end());
    auto it = b_index.find(key);
    if (it == b_index.end()) fail(errc::internal_consistency, "composite B element missing");
    return it->second;
  }
  int e_elem(int b_idx, int slot, int e1) const {
    auto it = e_index.find({b_idx, slot, e1});
    if (it == e_index.end()) fail(errc::internal_consistency, "composite E element missing");
    return it->second;
  }
};

inline ComposedPoly compose_polys(const Polynomial& pl, const Polynomial& ql,
                                  std::size_t cap = default_enumeration_cap) {
  if (pl.tgt() != ql.src()) fail(errc::boundary_mismatch, "compose_polys: middle objects differ");
  ComposedPoly c;
  c.left_factor = pl;
  c.right_factor = ql;

  c.p2_fibers.assign(static_cast<std::size_t>(ql.b_set().size), {});
  for (int e2 = 0; e2 < ql.e_set().size; ++e2)
    c.p2_fibers[static_cast<std::size_t>(ql.p(e2))].push_back(e2);

  // sections via the dependent product of (pullback of t1 along s2) over p2
  auto d = pullback(ql.s, pl.t);  // pairs (e2, b1) with s2(e2) = t1(b1)
  std::vector<std::vector<int>> b1_over_e2(static_cast<std::size_t>(ql.e_set().size));
  for (auto [e2, b1] : d.pairs) b1_over_e2[static_cast<std::size_t>(e2)].push_back(b1);

  std::vector<int> t_table;
  std::vector<int> s_table, p_table;
  for (int b2 = 0; b2 < ql.b_set().size; ++b2) {
    const auto& fiber = c.p2_fibers[static_cast<std::size_t>(b2)];
    std::vector<std::vector<int>> cand;
    for (int e2 : fiber) cand.push_back(b1_over_e2[static_cast<std::size_t>(e2)]);
    count_choices(cand, cap);
    for_each_choice(cand, [&](const std::vector<int>& beta) {
      int b_idx = static_cast<int>(c.b_b2.size());
      std::vector<int> key{b2};
      key.insert(key.end(), beta.begin(), beta.end());
      c.b_index.emplace(std::move(key), b_idx);
      c.b_b2.push_back(b2);
      c.b_beta.push_back(beta);
      t_table.push_back(ql.t(b2));
      for (std::size_t slot = 0; slot < fiber.size(); ++slot)
        for (int e1 = 0; e1 < pl.e_set().size; ++e1)
          if (pl.p(e1) == beta[slot]) {
            int e_idx = static_cast<int>(c.e_decode.size());
            c.e_index.emplace(std::vector<int>{b_idx, static_cast<int>(slot), e1}, e_idx);
            c.e_decode.push_back({b_idx, static_cast<int>(slot), e1});
            s_table.push_back(pl.s(e1));
            p_table.push_back(b_idx);
          }
      if (c.e_decode.size() > cap || c.b_b2.size() > cap)
        fail(errc::enumeration_too_large, "polynomial composite exceeds cap");
    });
  }
  FinSet bset{static_cast<int>(c.b_b2.size())};
  FinSet eset{static_cast<int>(c.e_decode.size())};
  c.composite = Polynomial(FinFunction(eset, pl.src(), std::move(s_table)),
                           FinFunction(eset, bset, std::move(p_table)),
                           FinFunction(bset, ql.tgt(), std::move(t_table)));
  return c;
}

// ---------------------------------------------------------------------------
// polynomial functor evaluation (the oracle for composition)

// Applies Sigma_t Pi_p Delta_s to an object a : A -> X of the slice over X.
// Output elements are pairs (b, sigma) with sigma a section of a over the
// p-fiber of b, mapped to Z by t.
struct ExtensionResult {
  FinFunction out;  // result object over Z
  std::vector<std::vector<int>> p_fibers;
  std::vector<int> elem_b;
  std::vector<std::vector<int>> elem_section;
};

inline ExtensionResult extension_eval(const Polynomial& pl, const FinFunction& input,
                                      std::size_t cap = default_enumeration_cap) {
  if (input.cod != pl.src()) fail(errc::boundary_mismatch, "extension_eval: input is not over the source");
  ExtensionResult r;
  r.p_fibers.assign(static_cast<std::size_t>(pl.b_set().size), {});
  for (int e = 0; e < pl.e_set().size; ++e) r.p_fibers[static_cast<std::size_t>(pl.p(e))].push_back(e);
  std::vector<std::vector<int>> a_over_x(static_cast<std::size_t>(pl.src().size));
  for (int a = 0; a < input.dom.size; ++a) a_over_x[static_cast<std::size_t>(input(a))].push_back(a);

  std::vector<int> table;
  for (int b = 0; b < pl.b_set().size; ++b) {
    std::vector<std::vector<int>> cand;
    for (int e : r.p_fibers[static_cast<std::size_t>(b)]) cand.push_back(a_over_x[static_cast<std::size_t>(pl.s(e))]);
    count_choices(cand, cap);
    for_each_choice(cand, [&](const std::vector<int>& sigma) {
      r.elem_b.push_back(b);
      r.elem_section.push_back(sigma);
      table.push_back(pl.t(b));
    });
    if (r.elem_b.size() > cap) fail(errc::enumeration_too_large, "extension exceeds cap");
  }
  r.out = FinFunction(FinSet{static_cast<int>(r.elem_b.size())}, pl.tgt(), std::move(table));
  return r;
}

// ---------------------------------------------------------------------------
// generics, augmentations, septuples

// delta_{s,p1,h,p2,t} : (s, p1;p2, t) -> (s,p1,h);(h,p2,t) with all four
// component maps of the defining diagram the identity.
struct PolyGenericWitness {
  FinFunction s;   // E -> X
  FinFunction p1;  // E -> T
  FinFunction h;   // T -> Y
  FinFunction p2;  // T -> B
  FinFunction t;   // B -> Z

  PolyGenericWitness() = default;
  PolyGenericWitness(FinFunction s_, FinFunction p1_, FinFunction h_, FinFunction p2_, FinFunction t_)
      : s(std::move(s_)), p1(std::move(p1_)), h(std::move(h_)), p2(std::move(p2_)), t(std::move(t_)) {
    if (s.dom != p1.dom || p1.cod != h.dom || h.dom != p2.dom || p2.cod != t.dom)
      fail(errc::boundary_mismatch, "poly generic witness: maps do not chain");
  }

  Polynomial base() const { return Polynomial(s, compose(p1, p2), t); }
  Polynomial left_cell() const { return Polynomial(s, p1, h); }
  Polynomial right_cell() const { return Polynomial(h, p2, t); }

  friend auto operator<=>(const PolyGenericWitness&, const PolyGenericWitness&) = default;
};

inline ComposedPoly poly_generic_target(const PolyGenericWitness& w,
                                        std::size_t cap = default_enumeration_cap) {
  return compose_polys(w.left_cell(), w.right_cell(), cap);
}

inline CartPolyMor generic_poly_2cell(const PolyGenericWitness& w,
                                      std::size_t cap = default_enumeration_cap) {
  ComposedPoly cp = poly_generic_target(w, cap);
  const Polynomial base = w.base();
  // g sends b to (b, identity section); f sends e to the matching E element
  std::vector<int> g_table(static_cast<std::size_t>(base.b_set().size));
  for (int b = 0; b < base.b_set().size; ++b)
    g_table[static_cast<std::size_t>(b)] = cp.b_elem(b, cp.p2_fibers[static_cast<std::size_t>(b)]);
  std::vector<int> f_table(static_cast<std::size_t>(base.e_set().size));
  for (int e = 0; e < base.e_set().size; ++e) {
    int tau = w.p1(e);
    int b = w.p2(tau);
    const auto& fiber = cp.p2_fibers[static_cast<std::size_t>(b)];
    int slot = -1;
    for (std::size_t k = 0; k < fiber.size(); ++k)
      if (fiber[k] == tau) slot = static_cast<int>(k);
    f_table[static_cast<std::size_t>(e)] = cp.e_elem(g_table[static_cast<std::size_t>(b)], slot, e);
  }
  return CartPolyMor(base, cp.composite,
                     FinFunction(base.e_set(), cp.composite.e_set(), std::move(f_table)),
                     FinFunction(base.b_set(), cp.composite.b_set(), std::move(g_table)));
}

// epsilon_h : (h, 1, h) -> identity polynomial, middle map the identity.
inline CartPolyMor poly_augmentation(const FinFunction& h) {
  Polynomial src(h, FinFunction::identity(h.dom), h);
  return CartPolyMor(src, Polynomial::identity(h.cod), h, h);
}

struct Septuple {
  FinFunction p1;  // E -> T
  FinFunction h;   // T -> Y
  FinFunction p2;  // T -> B
  FinFunction w;   // E -> E of left factor
  FinFunction x;   // T -> B of left factor
  FinFunction y;   // T -> E of right factor
  FinFunction z;   // B -> B of right factor

  friend auto operator<=>(const Septuple&, const Septuple&) = default;
};

// The two cartesian component morphisms encoded by a septuple.
inline CartPolyMor septuple_left_mor(const Septuple& sep, const Polynomial& src,
                                     const Polynomial& left_factor) {
  return CartPolyMor(Polynomial(src.s, sep.p1, sep.h), left_factor, sep.w, sep.x);
}
inline CartPolyMor septuple_right_mor(const Septuple& sep, const Polynomial& src,
                                      const Polynomial& right_factor) {
  return CartPolyMor(Polynomial(sep.h, sep.p2, src.t), right_factor, sep.y, sep.z);
}

inline CartPolyMor hcompose_polymor(const CartPolyMor& alpha, const CartPolyMor& beta,
                                    std::size_t cap = default_enumeration_cap);

// Reads the septuple of a cartesian 2-cell into a tracked composite off the
// provenance.  T is the canonical pullback of the right factor's bundle along
// z; when its projection to the right factor's E-part is a bijection the
// result is relabeled along it, so factoring delta_{s,p1,h,p2,t} returns
// (p1, h, p2, id, id, id, id) on the nose.
inline Septuple factor_cartesian_2cell(const CartPolyMor& phi, const ComposedPoly& cp) {
  if (phi.dst != cp.composite)
    fail(errc::missing_composite_structure, "factor_cartesian_2cell: 2-cell does not land in the tracked composite");
  const Polynomial& p1l = cp.left_factor;
  const Polynomial& p2r = cp.right_factor;
  const Polynomial& src = phi.src;

  Septuple sep;
  // z : B -> B2
  {
    std::vector<int> zt(static_cast<std::size_t>(src.b_set().size));
    for (int b = 0; b < src.b_set().size; ++b) zt[static_cast<std::size_t>(b)] = cp.b_b2[static_cast<std::size_t>(phi.g(b))];
    sep.z = FinFunction(src.b_set(), p2r.b_set(), std::move(zt));
  }
  // T = {(b, e2) : p2(e2) = z(b)} with projections p2 and y
  auto tpb = pullback(sep.z, p2r.p);
  FinFunction p2_raw = tpb.proj1;
  FinFunction y_raw = tpb.proj2;
  FinFunction h_raw = compose(y_raw, p2r.s);
  // x : T -> B1 reads the section stored in g(b) at the slot of e2
  std::vector<int> x_table(static_cast<std::size_t>(tpb.apex.size));
  for (int k = 0; k < tpb.apex.size; ++k) {
    auto [b, e2] = tpb.pairs[static_cast<std::size_t>(k)];
    int bidx = phi.g(b);
    const auto& fiber = cp.p2_fibers[static_cast<std::size_t>(cp.b_b2[static_cast<std::size_t>(bidx)])];
    int slot = -1;
    for (std::size_t m = 0; m < fiber.size(); ++m)
      if (fiber[m] == e2) slot = static_cast<int>(m);
    if (slot < 0) fail(errc::internal_consistency, "factor: fiber slot missing");
    x_table[static_cast<std::size_t>(k)] = cp.b_beta[static_cast<std::size_t>(bidx)][static_cast<std::size_t>(slot)];
  }
  FinFunction x_raw(tpb.apex, p1l.b_set(), std::move(x_table));
  // p1 : E -> T and w : E -> E1 from the E-part decode of f
  std::vector<int> p1_table(static_cast<std::size_t>(src.e_set().size));
  std::vector<int> w_table(static_cast<std::size_t>(src.e_set().size));
  for (int e = 0; e < src.e_set().size; ++e) {
    const auto& d = cp.e_decode[static_cast<std::size_t>(phi.f(e))];
    int e2 = cp.p2_fibers[static_cast<std::size_t>(cp.b_b2[static_cast<std::size_t>(d.b_idx)])][static_cast<std::size_t>(d.slot)];
    int k = tpb.pair_index(src.p(e), e2);
    if (k < 0) fail(errc::internal_consistency, "factor: E element does not sit over its own b");
    p1_table[static_cast<std::size_t>(e)] = k;
    w_table[static_cast<std::size_t>(e)] = d.e1;
  }
  FinFunction p1_raw(src.e_set(), tpb.apex, std::move(p1_table));
  sep.w = FinFunction(src.e_set(), p1l.e_set(), std::move(w_table));

  if (y_raw.is_bijection()) {
    FinFunction rel = y_raw.inverse();  // E2 -> T_raw
    sep.p1 = compose(p1_raw, y_raw);
    sep.p2 = compose(rel, p2_raw);
    sep.h = compose(rel, h_raw);
    sep.x = compose(rel, x_raw);
    sep.y = FinFunction::identity(p2r.e_set());
  } else {
    sep.p1 = p1_raw;
    sep.p2 = p2_raw;
    sep.h = h_raw;
    sep.x = x_raw;
    sep.y = y_raw;
  }

  if (compose(sep.p1, sep.p2) != src.p)
    fail(errc::internal_consistency, "factor: p does not factor as p1;p2");
  // the component morphism constructors re-check all commutation and pullback
  // conditions of the Weber diagram
  (void)septuple_left_mor(sep, src, p1l);
  (void)septuple_right_mor(sep, src, p2r);
  return sep;
}

inline CartPolyMor recompose_septuple(const Septuple& sep, const Polynomial& src,
                                      const ComposedPoly& cp,
                                      std::size_t cap = default_enumeration_cap) {
  PolyGenericWitness w(src.s, sep.p1, sep.h, sep.p2, src.t);
  CartPolyMor delta = generic_poly_2cell(w, cap);
  CartPolyMor pair = hcompose_polymor(septuple_left_mor(sep, src, cp.left_factor),
                                      septuple_right_mor(sep, src, cp.right_factor), cap);
  if (pair.dst != cp.composite)
    fail(errc::internal_consistency, "recompose: whiskered pair misses the tracked composite");
  return vcompose(delta, pair);
}

// ---------------------------------------------------------------------------
// septuple equivalence

struct SeptupleEquivalence {
  FinFunction alpha;  // T -> T', invertible
};

inline std::optional<SeptupleEquivalence> septuples_equivalent(const Septuple& a, const Septuple& b) {
  if (a.w != b.w || a.z != b.z) return std::nullopt;
  if (a.p1.dom != b.p1.dom || a.p2.cod != b.p2.cod || a.h.cod != b.h.cod ||
      a.x.cod != b.x.cod || a.y.cod != b.y.cod)
    return std::nullopt;
  FinSet t = a.p1.cod, t2 = b.p1.cod;
  if (t.size != t2.size) return std::nullopt;

  // alpha must transport every structure map; candidates per element
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(t.size));
  for (int tau = 0; tau < t.size; ++tau)
    for (int tau2 = 0; tau2 < t2.size; ++tau2)
      if (b.p2(tau2) == a.p2(tau) && b.h(tau2) == a.h(tau) && b.x(tau2) == a.x(tau) &&
          b.y(tau2) == a.y(tau))
        cand[static_cast<std::size_t>(tau)].push_back(tau2);
  // elements in the image of p1 are pinned
  for (int e = 0; e < a.p1.dom.size; ++e) {
    auto& c = cand[static_cast<std::size_t>(a.p1(e))];
    int want = b.p1(e);
    std::vector<int> keep;
    for (int v : c)
      if (v == want) keep.push_back(v);
    c = std::move(keep);
  }
  std::vector<FinFunction> found;
  for_each_choice(cand, [&](const std::vector<int>& pick) {
    FinFunction alpha(t, t2, pick);
    if (!alpha.is_bijection()) return;
    if (compose(a.p1, alpha) != b.p1) return;
    found.push_back(std::move(alpha));
  });
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    fail(errc::internal_consistency, "septuple equivalence is not unique");
  return SeptupleEquivalence{found.front()};
}

// ---------------------------------------------------------------------------
// whiskering and constraint cells

inline CartPolyMor hcompose_polymor(const CartPolyMor& alpha, const CartPolyMor& beta,
                                    std::size_t cap) {
  ComposedPoly s = compose_polys(alpha.src, beta.src, cap);
  ComposedPoly d = compose_polys(alpha.dst, beta.dst, cap);
  const Polynomial& q = beta.src;
  const Polynomial& q2 = beta.dst;

  // fiber bijections of beta's middle pullback square: e2 |-> beta.f(e2)
  // identifies the q-fiber over b2 with the q2-fiber over beta.g(b2)
  std::vector<int> g_table(static_cast<std::size_t>(s.composite.b_set().size));
  for (std::size_t bi = 0; bi < s.b_b2.size(); ++bi) {
    int b2 = s.b_b2[bi];
    const auto& beta_sec = s.b_beta[bi];
    const auto& fiber = s.p2_fibers[static_cast<std::size_t>(b2)];
    int b2p = beta.g(b2);
    const auto& fiber2 = d.p2_fibers[static_cast<std::size_t>(b2p)];
    std::vector<int> sec2(fiber2.size(), -1);
    for (std::size_t slot = 0; slot < fiber.size(); ++slot) {
      int e2p = beta.f(fiber[slot]);
      int slot2 = -1;
      for (std::size_t m = 0; m < fiber2.size(); ++m)
        if (fiber2[m] == e2p) slot2 = static_cast<int>(m);
      if (slot2 < 0) fail(errc::internal_consistency, "whisker: fiber image missing");
      sec2[static_cast<std::size_t>(slot2)] = alpha.g(beta_sec[slot]);
    }
    for (int v : sec2)
      if (v < 0) fail(errc::internal_consistency, "whisker: beta's fiber map is not onto");
    g_table[bi] = d.b_elem(b2p, sec2);
  }
  (void)q;
  (void)q2;
  std::vector<int> f_table(static_cast<std::size_t>(s.composite.e_set().size));
  for (std::size_t ei = 0; ei < s.e_decode.size(); ++ei) {
    const auto& de = s.e_decode[ei];
    int b2 = s.b_b2[static_cast<std::size_t>(de.b_idx)];
    int e2 = s.p2_fibers[static_cast<std::size_t>(b2)][static_cast<std::size_t>(de.slot)];
    int bip = g_table[static_cast<std::size_t>(de.b_idx)];
    int e2p = beta.f(e2);
    const auto& fiber2 = d.p2_fibers[static_cast<std::size_t>(d.b_b2[static_cast<std::size_t>(bip)])];
    int slot2 = -1;
    for (std::size_t m = 0; m < fiber2.size(); ++m)
      if (fiber2[m] == e2p) slot2 = static_cast<int>(m);
    f_table[ei] = d.e_elem(bip, slot2, alpha.f(de.e1));
  }
  return CartPolyMor(s.composite, d.composite,
                     FinFunction(s.composite.e_set(), d.composite.e_set(), std::move(f_table)),
                     FinFunction(s.composite.b_set(), d.composite.b_set(), std::move(g_table)));
}

// Right unitor P -> P ; 1_Z.
inline CartPolyMor poly_runitor(const Polynomial& pl, std::size_t cap = default_enumeration_cap) {
  ComposedPoly c = compose_polys(pl, Polynomial::identity(pl.tgt()), cap);
  std::vector<int> g_table(static_cast<std::size_t>(pl.b_set().size));
  for (int b = 0; b < pl.b_set().size; ++b) g_table[static_cast<std::size_t>(b)] = c.b_elem(pl.t(b), {b});
  std::vector<int> f_table(static_cast<std::size_t>(pl.e_set().size));
  for (int e = 0; e < pl.e_set().size; ++e)
    f_table[static_cast<std::size_t>(e)] = c.e_elem(g_table[static_cast<std::size_t>(pl.p(e))], 0, e);
  return CartPolyMor(pl, c.composite,
                     FinFunction(pl.e_set(), c.composite.e_set(), std::move(f_table)),
                     FinFunction(pl.b_set(), c.composite.b_set(), std::move(g_table)));
}

// Left unitor P -> 1_X ; P.
inline CartPolyMor poly_lunitor(const Polynomial& pl, std::size_t cap = default_enumeration_cap) {
  ComposedPoly c = compose_polys(Polynomial::identity(pl.src()), pl, cap);
  std::vector<int> g_table(static_cast<std::size_t>(pl.b_set().size));
  for (int b = 0; b < pl.b_set().size; ++b) {
    // the section over b is forced: each e in the fiber goes to s(e)
    std::vector<int> beta;
    for (int e : c.p2_fibers[static_cast<std::size_t>(b)]) beta.push_back(pl.s(e));
    g_table[static_cast<std::size_t>(b)] = c.b_elem(b, beta);
  }
  std::vector<int> f_table(static_cast<std::size_t>(pl.e_set().size));
  for (int e = 0; e < pl.e_set().size; ++e) {
    const auto& fiber = c.p2_fibers[static_cast<std::size_t>(pl.p(e))];
    int slot = -1;
    for (std::size_t m = 0; m < fiber.size(); ++m)
      if (fiber[m] == e) slot = static_cast<int>(m);
    f_table[static_cast<std::size_t>(e)] = c.e_elem(g_table[static_cast<std::size_t>(pl.p(e))], slot, pl.s(e));
  }
  return CartPolyMor(pl, c.composite,
                     FinFunction(pl.e_set(), c.composite.e_set(), std::move(f_table)),
                     FinFunction(pl.b_set(), c.composite.b_set(), std::move(g_table)));
}

// Canonical associator (P;Q);R -> P;(Q;R), computed by re-associating the
// section trees elementwise.
inline CartPolyMor poly_associator(const Polynomial& pl, const Polynomial& ql, const Polynomial& rl,
                                   std::size_t cap = default_enumeration_cap) {
  ComposedPoly pq = compose_polys(pl, ql, cap);
  ComposedPoly pq_r = compose_polys(pq.composite, rl, cap);
  ComposedPoly qr = compose_polys(ql, rl, cap);
  ComposedPoly p_qr = compose_polys(pl, qr.composite, cap);

  std::vector<int> g_table(static_cast<std::size_t>(pq_r.composite.b_set().size));
  // per left B element, remember where each (slot3, slot2) E-coordinate goes
  std::vector<std::map<std::pair<int, int>, std::pair<int, int>>> slot_map(
      static_cast<std::size_t>(pq_r.composite.b_set().size));
  for (std::size_t bi = 0; bi < pq_r.b_b2.size(); ++bi) {
    int b3 = pq_r.b_b2[bi];
    const auto& sec = pq_r.b_beta[bi];  // per e3 slot: a B element of P;Q
    const auto& fiber3 = pq_r.p2_fibers[static_cast<std::size_t>(b3)];
    // first build the Q;R part: b3 with the q-components of the sections
    std::vector<int> sec_q(fiber3.size());
    for (std::size_t s3 = 0; s3 < fiber3.size(); ++s3) sec_q[s3] = pq.b_b2[static_cast<std::size_t>(sec[s3])];
    int bqr = qr.b_elem(b3, sec_q);
    // then the P part: a section over the (Q;R)-fiber of bqr assigning B(P)
    const auto& fiber_qr = p_qr.p2_fibers[static_cast<std::size_t>(bqr)];
    std::vector<int> sec_p(fiber_qr.size(), -1);
    for (std::size_t s3 = 0; s3 < fiber3.size(); ++s3) {
      const auto& inner = pq.b_beta[static_cast<std::size_t>(sec[s3])];  // per e2 slot: a B element of P
      const auto& fiber2 = pq.p2_fibers[static_cast<std::size_t>(sec_q[s3])];
      for (std::size_t s2 = 0; s2 < fiber2.size(); ++s2) {
        int eqr = qr.e_elem(bqr, static_cast<int>(s3), fiber2[s2]);
        int slot_qr = -1;
        for (std::size_t m = 0; m < fiber_qr.size(); ++m)
          if (fiber_qr[m] == eqr) slot_qr = static_cast<int>(m);
        if (slot_qr < 0) fail(errc::internal_consistency, "associator: Q;R fiber slot missing");
        sec_p[static_cast<std::size_t>(slot_qr)] = inner[s2];
        slot_map[bi][{static_cast<int>(s3), static_cast<int>(s2)}] = {slot_qr, 0};
      }
    }
    for (int v : sec_p)
      if (v < 0) fail(errc::internal_consistency, "associator: section incomplete");
    g_table[bi] = p_qr.b_elem(bqr, sec_p);
  }
  std::vector<int> f_table(static_cast<std::size_t>(pq_r.composite.e_set().size));
  for (std::size_t ei = 0; ei < pq_r.e_decode.size(); ++ei) {
    const auto& de = pq_r.e_decode[ei];       // (b_idx, slot3, e of P;Q)
    const auto& depq = pq.e_decode[static_cast<std::size_t>(de.e1)];  // (b_idx in P;Q, slot2, e1)
    auto it = slot_map[static_cast<std::size_t>(de.b_idx)].find({de.slot, depq.slot});
    if (it == slot_map[static_cast<std::size_t>(de.b_idx)].end())
      fail(errc::internal_consistency, "associator: slot pair missing");
    f_table[ei] = p_qr.e_elem(g_table[static_cast<std::size_t>(de.b_idx)], it->second.first, depq.e1);
  }
  return CartPolyMor(pq_r.composite, p_qr.composite,
                     FinFunction(pq_r.composite.e_set(), p_qr.composite.e_set(), std::move(f_table)),
                     FinFunction(pq_r.composite.b_set(), p_qr.composite.b_set(), std::move(g_table)));
}

// ---------------------------------------------------------------------------
// enumeration

// All cartesian 2-cells src -> dst, found through per-element candidates for
// g and f and validated against the pullback condition.
inline std::vector<CartPolyMor> poly_two_cells(const Polynomial& src, const Polynomial& dst) {
  if (src.src() != dst.src() || src.tgt() != dst.tgt())
    fail(errc::boundary_mismatch, "poly_two_cells: boundaries differ");
  std::vector<CartPolyMor> out;
  std::vector<std::vector<int>> gcand(static_cast<std::size_t>(src.b_set().size));
  for (int b = 0; b < src.b_set().size; ++b)
    for (int b2 = 0; b2 < dst.b_set().size; ++b2)
      if (dst.t(b2) == src.t(b)) gcand[static_cast<std::size_t>(b)].push_back(b2);
  for_each_choice(gcand, [&](const std::vector<int>& gpick) {
    FinFunction g(src.b_set(), dst.b_set(), gpick);
    std::vector<std::vector<int>> fcand(static_cast<std::size_t>(src.e_set().size));
    for (int e = 0; e < src.e_set().size; ++e)
      for (int e2 = 0; e2 < dst.e_set().size; ++e2)
        if (dst.s(e2) == src.s(e) && dst.p(e2) == g(src.p(e)))
          fcand[static_cast<std::size_t>(e)].push_back(e2);
    for_each_choice(fcand, [&](const std::vector<int>& fpick) {
      try {
        out.emplace_back(src, dst, FinFunction(src.e_set(), dst.e_set(), fpick), g);
      } catch (const error& e) {
        if (e.kind() != errc::invalid_table) throw;  // non-pullback squares are skipped
      }
    });
  });
  return out;
}

inline std::vector<Polynomial> enumerate_polynomials(FinSet x, FinSet z, int max_e, int max_b,
                                                     std::size_t cap = default_enumeration_cap) {
  std::vector<Polynomial> out;
  for (int bsize = 0; bsize <= max_b; ++bsize)
    for (int esize = 0; esize <= max_e; ++esize) {
      FinSet e{esize}, b{bsize};
      for (const auto& s : enumerate_functions(e, x, cap))
        for (const auto& p : enumerate_functions(e, b, cap))
          for (const auto& t : enumerate_functions(b, z, cap)) {
            out.emplace_back(s, p, t);
            if (out.size() > cap) fail(errc::enumeration_too_large, "polynomial enumeration exceeds cap");
          }
    }
  return out;
}

}  // namespace gbc
