#pragma once

// Stock oplax functors used as positive instances by the law suites and the
// round-trip checks, and the perturbation helpers that corrupt single
// constraint entries to produce negative controls.

#include <utility>
#include <vector>

#include "gbc/cartesian_instance.hpp"
#include "gbc/oplax.hpp"
#include "gbc/span.hpp"
#include "gbc/span_instance.hpp"

namespace gbc {

// The identity pseudofunctor on any generic instance; all constraints are
// identity 2-cells.
template <GenericBicategory B>
OplaxFunctorData<B, B> identity_oplax(const B& bb) {
  OplaxFunctorData<B, B> L;
  L.src = bb;
  L.tgt = bb;
  L.obj = [](const typename B::Obj& x) { return x; };
  L.one = [](const typename B::One& a) { return a; };
  L.two = [](const typename B::Two& f) { return f; };
  L.phi = [bb](const typename B::One& a, const typename B::One& b) {
    return bb.identity_two(bb.hcomp(a, b));
  };
  L.lambda = [bb](const typename B::Obj& x) { return bb.identity_two(bb.identity_one(x)); };
  return L;
}

// Conjugation of every span by the per-object reversal bijection.  Composites
// are preserved on the nose (the pullback condition is unchanged), so phi is
// the identity while lambda is the nontrivial reversal cell.
inline OplaxFunctorData<SpanBicat, SpanBicat> reversal_oplax(const SpanBicat& bb) {
  auto rho = [](FinSet x) {
    std::vector<int> t(static_cast<std::size_t>(x.size));
    for (int i = 0; i < x.size; ++i) t[static_cast<std::size_t>(i)] = x.size - 1 - i;
    return FinFunction(x, x, std::move(t));
  };
  OplaxFunctorData<SpanBicat, SpanBicat> L;
  L.src = bb;
  L.tgt = bb;
  L.obj = [](const FinSet& x) { return x; };
  L.one = [rho](const Span& a) { return Span(compose(a.left, rho(a.src())), compose(a.right, rho(a.tgt()))); };
  L.two = [L](const SpanMor& f) { return SpanMor(L.one(f.src), L.one(f.dst), f.map); };
  L.phi = [L, bb](const Span& a, const Span& b) { return bb.identity_two(L.one(bb.hcomp(a, b))); };
  L.lambda = [L, rho](const FinSet& x) {
    return SpanMor(L.one(Span::identity(x)), Span::identity(x), rho(x));
  };
  return L;
}

// The pseudofunctor induced by the pullback-preserving endofunctor (-) x W:
// objects and apexes are multiplied by W, and the composition constraint is
// the canonical (invertible) reshuffle between (pb x W) and pb(legs x W).
inline OplaxFunctorData<SpanBicat, SpanBicat> product_oplax(const SpanBicat& bb, FinSet w) {
  auto on_obj = [w](FinSet x) { return product(x, w).apex; };
  auto on_leg = [w](const FinFunction& leg) {
    auto dp = product(leg.dom, w);
    auto cp = product(leg.cod, w);
    std::vector<int> t(static_cast<std::size_t>(dp.apex.size));
    for (int k = 0; k < dp.apex.size; ++k) {
      auto [i, wi] = dp.pairs[static_cast<std::size_t>(k)];
      t[static_cast<std::size_t>(k)] = cp.pair_index(leg(i), wi);
    }
    return FinFunction(dp.apex, cp.apex, std::move(t));
  };
  OplaxFunctorData<SpanBicat, SpanBicat> L;
  L.src = bb;
  L.tgt = bb;
  L.obj = on_obj;
  L.one = [on_leg](const Span& a) { return Span(on_leg(a.left), on_leg(a.right)); };
  L.two = [L, on_leg](const SpanMor& f) {
    return SpanMor(L.one(f.src), L.one(f.dst), on_leg(f.map));
  };
  L.phi = [L, bb, w](const Span& a, const Span& b) {
    auto cs = compose_spans(a, b);
    Span lsrc = L.one(cs.composite);
    auto la = L.one(a);
    auto lb = L.one(b);
    auto ds = compose_spans(la, lb);
    auto ap = product(cs.composite.apex(), w);
    auto ta = product(a.apex(), w);
    auto tb = product(b.apex(), w);
    std::vector<int> t(static_cast<std::size_t>(ap.apex.size));
    for (int k = 0; k < ap.apex.size; ++k) {
      auto [pq, wi] = ap.pairs[static_cast<std::size_t>(k)];
      auto [i, j] = cs.pb.pairs[static_cast<std::size_t>(pq)];
      t[static_cast<std::size_t>(k)] = ds.pb.pair_index(ta.pair_index(i, wi), tb.pair_index(j, wi));
    }
    return SpanMor(lsrc, ds.composite, FinFunction(ap.apex, ds.composite.apex(), std::move(t)));
  };
  L.lambda = [L, bb](const FinSet& x) {
    return bb.identity_two(L.one(Span::identity(x)));
  };
  return L;
}

// ---------------------------------------------------------------------------
// negative controls

inline std::vector<SpanMor> parallel_two_cells(const SpanBicat&, const SpanMor& cur) {
  return span_two_cells(cur.src, cur.dst);
}
inline std::vector<FinFunction> parallel_two_cells(const CartesianBicat&, const FinFunction& cur) {
  return enumerate_functions(cur.dom, cur.cod);
}

// Replaces one entry of a table-backed function with a different parallel
// 2-cell; `salt` rotates the deterministic choice.
template <typename C, typename Cell>
Cell different_parallel(const C& cc, const Cell& cur, std::size_t salt) {
  auto cands = parallel_two_cells(cc, cur);
  std::vector<Cell> others;
  for (const auto& c : cands)
    if (!(c == cur)) others.push_back(c);
  if (others.empty()) fail(errc::internal_consistency, "no parallel cell available for a negative control");
  return others[salt % others.size()];
}

template <typename A, typename C>
ComonadicFunctorData<A, C> perturb_comult(ComonadicFunctorData<A, C> d, const typename A::Gen& at,
                                          std::size_t salt = 0) {
  auto base = d.comult;
  auto bad = different_parallel(d.tgt, base(at), salt);
  d.comult = [base, at, bad](const typename A::Gen& g) { return g == at ? bad : base(g); };
  return d;
}

template <typename A, typename C>
ComonadicFunctorData<A, C> perturb_counit(ComonadicFunctorData<A, C> d, const typename A::Aug& at,
                                          std::size_t salt = 0) {
  auto base = d.counit;
  auto bad = different_parallel(d.tgt, base(at), salt);
  d.counit = [base, at, bad](const typename A::Aug& e) { return e == at ? bad : base(e); };
  return d;
}

template <typename A, typename C>
OplaxFunctorData<A, C> perturb_phi(OplaxFunctorData<A, C> L, const typename A::One& a,
                                   const typename A::One& b, std::size_t salt = 0) {
  auto base = L.phi;
  auto bad = different_parallel(L.tgt, base(a, b), salt);
  L.phi = [base, a, b, bad](const typename A::One& a2, const typename A::One& b2) {
    return (a2 == a && b2 == b) ? bad : base(a2, b2);
  };
  return L;
}

template <typename A, typename C>
OplaxFunctorData<A, C> perturb_lambda(OplaxFunctorData<A, C> L, const typename A::Obj& x,
                                      std::size_t salt = 0) {
  auto base = L.lambda;
  auto bad = different_parallel(L.tgt, base(x), salt);
  L.lambda = [base, x, bad](const typename A::Obj& x2) { return x2 == x ? bad : base(x2); };
  return L;
}

}  // namespace gbc
