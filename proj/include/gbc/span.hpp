#pragma once

// The bicategory of spans of finite sets: 1-cells X <- T -> Z, 2-cells the
// apex maps commuting with both legs, composition by canonical pullback.
// Composites carry their pullback provenance so that 2-cells into them can
// be factored through the diagonal generics delta_{s,h,t}.

#include <optional>
#include <utility>
#include <vector>

#include "gbc/finset.hpp"

namespace gbc {

struct Span {
  FinFunction left;   // apex -> X
  FinFunction right;  // apex -> Z

  Span() = default;
  Span(FinFunction l, FinFunction r) : left(std::move(l)), right(std::move(r)) {
    if (left.dom != right.dom) fail(errc::invalid_table, "span legs have different apexes");
  }

  FinSet apex() const { return left.dom; }
  FinSet src() const { return left.cod; }
  FinSet tgt() const { return right.cod; }

  static Span identity(FinSet x) { return Span(FinFunction::identity(x), FinFunction::identity(x)); }

  bool is_identity() const { return left.is_identity() && right.is_identity(); }

  friend auto operator<=>(const Span&, const Span&) = default;
};

struct SpanMor {
  Span src;
  Span dst;
  FinFunction map;  // src.apex -> dst.apex

  SpanMor() = default;
  SpanMor(Span s, Span d, FinFunction m) : src(std::move(s)), dst(std::move(d)), map(std::move(m)) {
    if (src.src() != dst.src() || src.tgt() != dst.tgt())
      fail(errc::boundary_mismatch, "span 2-cell between spans with different boundaries");
    if (map.dom != src.apex() || map.cod != dst.apex())
      fail(errc::invalid_table, "span 2-cell map has wrong apexes");
    if (compose(map, dst.left) != src.left || compose(map, dst.right) != src.right)
      fail(errc::invalid_table, "span 2-cell does not commute with the legs");
  }

  static SpanMor identity(const Span& a) { return SpanMor(a, a, FinFunction::identity(a.apex())); }

  bool is_iso() const { return map.is_bijection(); }
  SpanMor inverted() const { return SpanMor(dst, src, map.inverse()); }

  friend auto operator<=>(const SpanMor&, const SpanMor&) = default;
};

inline SpanMor vcompose(const SpanMor& f, const SpanMor& g) {
  if (f.dst != g.src) fail(errc::boundary_mismatch, "vertical composite of non-adjacent 2-cells");
  return SpanMor(f.src, g.dst, compose(f.map, g.map));
}

// ---------------------------------------------------------------------------
// composition of 1-cells

struct ComposedSpan {
  Span left_factor;
  Span right_factor;
  PullbackResult pb;  // pullback of left_factor.right along right_factor.left
  Span composite;
};

inline ComposedSpan compose_spans(const Span& a, const Span& b) {
  if (a.tgt() != b.src()) fail(errc::boundary_mismatch, "compose_spans: middle objects differ");
  ComposedSpan c;
  c.left_factor = a;
  c.right_factor = b;
  c.pb = pullback(a.right, b.left);
  c.composite = Span(compose(c.pb.proj1, a.left), compose(c.pb.proj2, b.right));
  return c;
}

// Horizontal composite of 2-cells (whiskering), acting pairwise on the
// canonical pullback apexes.
inline SpanMor hcompose_spanmor(const SpanMor& alpha, const SpanMor& beta) {
  ComposedSpan s = compose_spans(alpha.src, beta.src);
  ComposedSpan d = compose_spans(alpha.dst, beta.dst);
  std::vector<int> t(static_cast<std::size_t>(s.composite.apex().size));
  for (int k = 0; k < s.composite.apex().size; ++k) {
    auto [i, j] = s.pb.pairs[static_cast<std::size_t>(k)];
    int m = d.pb.pair_index(alpha.map(i), beta.map(j));
    if (m < 0) fail(errc::internal_consistency, "whiskered pair fell outside the pullback");
    t[static_cast<std::size_t>(k)] = m;
  }
  return SpanMor(s.composite, d.composite,
                 FinFunction(s.composite.apex(), d.composite.apex(), std::move(t)));
}

// ---------------------------------------------------------------------------
// generics and augmentations

// delta_{s,h,t} : (s,t) -> (s,h);(h,t), the diagonal into the pullback.
struct GenericWitnessSpan {
  Span base;      // (s, t)
  FinFunction h;  // base.apex -> Y

  GenericWitnessSpan() = default;
  GenericWitnessSpan(Span b, FinFunction hh) : base(std::move(b)), h(std::move(hh)) {
    if (h.dom != base.apex()) fail(errc::boundary_mismatch, "generic witness: h not defined on the apex");
  }

  Span left_cell() const { return Span(base.left, h); }
  Span right_cell() const { return Span(h, base.right); }

  friend auto operator<=>(const GenericWitnessSpan&, const GenericWitnessSpan&) = default;
};

inline ComposedSpan generic_target(const GenericWitnessSpan& w) {
  return compose_spans(w.left_cell(), w.right_cell());
}

inline SpanMor generic_2cell(const GenericWitnessSpan& w) {
  ComposedSpan c = generic_target(w);
  std::vector<int> t(static_cast<std::size_t>(w.base.apex().size));
  for (int i = 0; i < w.base.apex().size; ++i) {
    int k = c.pb.pair_index(i, i);
    if (k < 0) fail(errc::internal_consistency, "diagonal pair missing from pullback");
    t[static_cast<std::size_t>(i)] = k;
  }
  return SpanMor(w.base, c.composite, FinFunction(w.base.apex(), c.composite.apex(), std::move(t)));
}

// epsilon_h : (h,h) -> 1_X with underlying map h itself.
inline SpanMor augmentation_2cell(const FinFunction& h) {
  return SpanMor(Span(h, h), Span::identity(h.cod), h);
}

// ---------------------------------------------------------------------------
// generic factorization of 2-cells into tracked composites

struct SpanFactorization {
  GenericWitnessSpan witness;
  SpanMor left_mor;   // (s,h) -> left factor
  SpanMor right_mor;  // (h,t) -> right factor
};

inline SpanFactorization factor_2cell(const SpanMor& f, const ComposedSpan& cs) {
  if (f.dst != cs.composite)
    fail(errc::missing_composite_structure, "factor_2cell: 2-cell does not land in the tracked composite");
  FinFunction c1 = compose(f.map, cs.pb.proj1);
  FinFunction c2 = compose(f.map, cs.pb.proj2);
  FinFunction h = compose(c1, cs.left_factor.right);  // = c2 ; right_factor.left
  SpanFactorization r;
  r.witness = GenericWitnessSpan(f.src, h);
  r.left_mor = SpanMor(r.witness.left_cell(), cs.left_factor, std::move(c1));
  r.right_mor = SpanMor(r.witness.right_cell(), cs.right_factor, std::move(c2));
  return r;
}

inline SpanMor recompose(const SpanFactorization& fac) {
  return vcompose(generic_2cell(fac.witness), hcompose_spanmor(fac.left_mor, fac.right_mor));
}

// ---------------------------------------------------------------------------
// fillers

// A commuting square through a generic delta as in the diagonal-filler
// property: gamma : c -> f;g on top, theta_i on the left, phi_i on the right,
// with (phi1;phi2) . gamma = (theta1;theta2) . delta.
struct SpanSquare {
  ComposedSpan fg;  // tracked composite f;g
  SpanMor gamma;    // c -> f;g
  SpanMor phi1;     // f -> m
  SpanMor phi2;     // g -> n
  SpanMor theta1;   // (s,h) -> m
  SpanMor theta2;   // (h,t) -> n
};

inline std::pair<SpanMor, SpanMor> generic_filler(const GenericWitnessSpan& w, const SpanSquare& sq) {
  SpanMor delta = generic_2cell(w);
  if (sq.gamma.src != w.base) fail(errc::invalid_square, "filler: square top does not start at the generic's domain");
  if (sq.gamma.dst != sq.fg.composite)
    fail(errc::missing_composite_structure, "filler: gamma does not land in the tracked composite");
  SpanMor left_path = vcompose(sq.gamma, hcompose_spanmor(sq.phi1, sq.phi2));
  SpanMor right_path = vcompose(delta, hcompose_spanmor(sq.theta1, sq.theta2));
  if (left_path != right_path) fail(errc::invalid_square, "filler: square does not commute");

  FinFunction c1 = compose(sq.gamma.map, sq.fg.pb.proj1);
  FinFunction c2 = compose(sq.gamma.map, sq.fg.pb.proj2);
  // validity of the components is forced by the square; a failure here would
  // contradict genericity of delta
  try {
    SpanMor g1(w.left_cell(), sq.fg.left_factor, c1);
    SpanMor g2(w.right_cell(), sq.fg.right_factor, c2);
    if (vcompose(delta, hcompose_spanmor(g1, g2)) != sq.gamma ||
        vcompose(g1, sq.phi1) != sq.theta1 || vcompose(g2, sq.phi2) != sq.theta2)
      fail(errc::internal_consistency, "filler: computed filler does not close the square");
    return {g1, g2};
  } catch (const error& e) {
    if (e.kind() == errc::invalid_table)
      fail(errc::internal_consistency, "filler: forced components are not 2-cells");
    throw;
  }
}

// ---------------------------------------------------------------------------
// constraint cells

// Canonical associator (a;b);c -> a;(b;c), the mediating bijection between
// the two iterated pullbacks.
inline SpanMor span_associator(const Span& a, const Span& b, const Span& c) {
  ComposedSpan ab = compose_spans(a, b);
  ComposedSpan ab_c = compose_spans(ab.composite, c);
  ComposedSpan bc = compose_spans(b, c);
  ComposedSpan a_bc = compose_spans(a, bc.composite);
  std::vector<int> t(static_cast<std::size_t>(ab_c.composite.apex().size));
  for (int e = 0; e < ab_c.composite.apex().size; ++e) {
    auto [ij, k] = ab_c.pb.pairs[static_cast<std::size_t>(e)];
    auto [i, j] = ab.pb.pairs[static_cast<std::size_t>(ij)];
    int jk = bc.pb.pair_index(j, k);
    if (jk < 0) fail(errc::internal_consistency, "associator: pair missing on the right");
    int m = a_bc.pb.pair_index(i, jk);
    if (m < 0) fail(errc::internal_consistency, "associator: pair missing at the top");
    t[static_cast<std::size_t>(e)] = m;
  }
  return SpanMor(ab_c.composite, a_bc.composite,
                 FinFunction(ab_c.composite.apex(), a_bc.composite.apex(), std::move(t)));
}

// Left unitor a -> 1_X ; a.
inline SpanMor span_lunitor(const Span& a) {
  ComposedSpan c = compose_spans(Span::identity(a.src()), a);
  std::vector<int> t(static_cast<std::size_t>(a.apex().size));
  for (int i = 0; i < a.apex().size; ++i) {
    int k = c.pb.pair_index(a.left(i), i);
    if (k < 0) fail(errc::internal_consistency, "left unitor: pair missing");
    t[static_cast<std::size_t>(i)] = k;
  }
  return SpanMor(a, c.composite, FinFunction(a.apex(), c.composite.apex(), std::move(t)));
}

// Right unitor a -> a ; 1_Y.
inline SpanMor span_runitor(const Span& a) {
  ComposedSpan c = compose_spans(a, Span::identity(a.tgt()));
  std::vector<int> t(static_cast<std::size_t>(a.apex().size));
  for (int i = 0; i < a.apex().size; ++i) {
    int k = c.pb.pair_index(i, a.right(i));
    if (k < 0) fail(errc::internal_consistency, "right unitor: pair missing");
    t[static_cast<std::size_t>(i)] = k;
  }
  return SpanMor(a, c.composite, FinFunction(a.apex(), c.composite.apex(), std::move(t)));
}

// ---------------------------------------------------------------------------
// hom-set enumeration

// All 2-cells a -> b, enumerated through per-element candidate sets instead
// of all |b.apex|^|a.apex| maps.
inline std::vector<SpanMor> span_two_cells(const Span& a, const Span& b) {
  if (a.src() != b.src() || a.tgt() != b.tgt())
    fail(errc::boundary_mismatch, "span_two_cells: boundaries differ");
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(a.apex().size));
  for (int i = 0; i < a.apex().size; ++i)
    for (int j = 0; j < b.apex().size; ++j)
      if (b.left(j) == a.left(i) && b.right(j) == a.right(i))
        cand[static_cast<std::size_t>(i)].push_back(j);
  std::vector<SpanMor> out;
  for_each_choice(cand, [&](const std::vector<int>& pick) {
    out.emplace_back(a, b, FinFunction(a.apex(), b.apex(), pick));
  });
  return out;
}

// All spans X <- T -> Z with |T| <= max_apex, ordered by apex size then legs.
inline std::vector<Span> enumerate_spans(FinSet x, FinSet z, int max_apex,
                                         std::size_t cap = default_enumeration_cap) {
  std::vector<Span> out;
  for (int t = 0; t <= max_apex; ++t) {
    FinSet apex{t};
    for (const auto& l : enumerate_functions(apex, x, cap))
      for (const auto& r : enumerate_functions(apex, z, cap)) {
        out.emplace_back(l, r);
        if (out.size() > cap) fail(errc::enumeration_too_large, "span enumeration exceeds cap");
      }
  }
  return out;
}

}  // namespace gbc
