#include "doctest.h"
#include "gbc/span.hpp"

using namespace gbc;

namespace {

std::vector<FinSet> sizes(int up_to) {
  std::vector<FinSet> v;
  for (int i = 0; i <= up_to; ++i) v.push_back(FinSet{i});
  return v;
}

}  // namespace

TEST_CASE("compose_spans: shapes and provenance") {
  FinSet x{2}, y{1}, z{3};
  // apexes 2 and 3 over a middle point compose to the product
  Span a(FinFunction::identity(x), FinFunction::constant(x, y, 0));
  Span b(FinFunction::constant(z, y, 0), FinFunction::identity(z));
  auto c = compose_spans(a, b);
  CHECK(c.composite.apex().size == 6);

  // identity span on the left: composite apex is isomorphic to b's
  auto u = compose_spans(Span::identity(y), b);
  CHECK(u.composite.apex().size == b.apex().size);
  CHECK(u.pb.proj2.is_bijection());
  // and the left unitor realizes the iso
  SpanMor lu = span_lunitor(b);
  CHECK(lu.is_iso());
  CHECK(lu.dst == u.composite);

  // shared-apex spans glued along h: composite apex counts h-agreeing pairs
  FinSet t{3}, w{2};
  FinFunction s(t, x, {0, 1, 0}), h(t, w, {0, 0, 1}), tt(t, z, {2, 1, 0});
  auto g = compose_spans(Span(s, h), Span(h, tt));
  CHECK(g.composite.apex().size == 2 * 2 + 1 * 1);

  CHECK_THROWS_AS(compose_spans(a, a), error);
}

TEST_CASE("generic_2cell: diagonal with identity projections") {
  FinSet x{2}, y{2}, z{1}, t{1};
  GenericWitnessSpan w(Span(FinFunction::constant(t, x, 1), FinFunction::constant(t, z, 0)),
                       FinFunction::constant(t, y, 0));
  SpanMor d = generic_2cell(w);
  CHECK(d.map.dom.size == 1);

  // composing the diagonal with both projections gives the identity on T
  for (int ts = 0; ts <= 3; ++ts) {
    FinSet apex{ts};
    FinFunction s(apex, x, std::vector<int>(ts, 0));
    FinFunction h(apex, y, std::vector<int>(ts, 1));
    FinFunction tt(apex, z, std::vector<int>(ts, 0));
    GenericWitnessSpan wit(Span(s, tt), h);
    SpanMor del = generic_2cell(wit);
    auto target = generic_target(wit);
    CHECK(compose(del.map, target.pb.proj1) == FinFunction::identity(apex));
    CHECK(compose(del.map, target.pb.proj2) == FinFunction::identity(apex));
  }
}

TEST_CASE("augmentation_2cell: definition and sub-terminality") {
  FinSet x{2}, t{3};
  FinFunction h(t, x, {0, 1, 1});
  SpanMor eps = augmentation_2cell(h);
  CHECK(eps.map == h);
  CHECK(eps.dst == Span::identity(x));
  CHECK(augmentation_2cell(FinFunction::identity(x)) == SpanMor::identity(Span::identity(x)));

  // at sizes <= 3: the number of 2-cells (u,v) -> 1_X is 1 if u = v else 0
  for (auto xs : sizes(3))
    for (int ts = 0; ts <= 3; ++ts)
      for (const auto& u : enumerate_functions(FinSet{ts}, xs))
        for (const auto& v : enumerate_functions(FinSet{ts}, xs)) {
          auto cells = span_two_cells(Span(u, v), Span::identity(xs));
          CHECK(cells.size() == (u == v ? 1u : 0u));
        }
}

TEST_CASE("factor_2cell: read-off and recomposition") {
  FinSet y{2}, z{2}, t{2};
  FinFunction s = FinFunction::identity(t);
  FinFunction h(t, y, {1, 0});
  FinFunction tt(t, z, {0, 0});
  GenericWitnessSpan w(Span(s, tt), h);
  auto cs = generic_target(w);
  SpanMor delta = generic_2cell(w);

  // factoring the generic itself recovers the witness with identity components
  auto fac = factor_2cell(delta, cs);
  CHECK(fac.witness == w);
  CHECK(fac.left_mor.map.is_identity());
  CHECK(fac.right_mor.map.is_identity());
  CHECK(recompose(fac) == delta);

  // factoring an identity 2-cell on a tracked composite reads off the
  // pullback projections and its middle leg
  SpanMor idc = SpanMor::identity(cs.composite);
  auto fac2 = factor_2cell(idc, cs);
  CHECK(fac2.left_mor.map == cs.pb.proj1);
  CHECK(fac2.right_mor.map == cs.pb.proj2);
  CHECK(fac2.witness.h == compose(cs.pb.proj1, h));
  CHECK(recompose(fac2) == idc);

  // 2-cells not landing in the tracked composite are rejected
  FinFunction k = FinFunction::constant(t, y, 0);
  auto other = compose_spans(Span(s, k), Span(k, tt));
  CHECK_THROWS_AS(factor_2cell(delta, other), error);
}

TEST_CASE("factor_2cell: factor-then-recompose is the identity at sizes <= 2") {
  int checked = 0;
  for (auto xs : sizes(2))
    for (auto ys : sizes(2))
      for (auto zs : sizes(2))
        for (const auto& f : enumerate_spans(xs, ys, 2))
          for (const auto& g : enumerate_spans(ys, zs, 2)) {
            auto cs = compose_spans(f, g);
            for (int cs_apex = 0; cs_apex <= 2; ++cs_apex)
              for (const auto& l : enumerate_functions(FinSet{cs_apex}, xs))
                for (const auto& r : enumerate_functions(FinSet{cs_apex}, zs)) {
                  Span c(l, r);
                  for (const auto& gamma : span_two_cells(c, cs.composite)) {
                    auto fac = factor_2cell(gamma, cs);
                    CHECK(recompose(fac) == gamma);
                    ++checked;
                  }
                }
          }
  CHECK(checked > 1000);  // the sweep is not vacuous
}

TEST_CASE("generic_filler: identity square and known factorizations") {
  FinSet y{2}, z{2}, t{2};
  FinFunction s = FinFunction::constant(t, FinSet{2}, 0);
  FinFunction h(t, y, {1, 1});
  FinFunction tt(t, z, {0, 1});
  GenericWitnessSpan w(Span(s, tt), h);
  auto cs = generic_target(w);
  SpanMor delta = generic_2cell(w);

  SpanSquare sq;
  sq.fg = cs;
  sq.gamma = delta;
  sq.phi1 = SpanMor::identity(w.left_cell());
  sq.phi2 = SpanMor::identity(w.right_cell());
  sq.theta1 = SpanMor::identity(w.left_cell());
  sq.theta2 = SpanMor::identity(w.right_cell());
  auto [g1, g2] = generic_filler(w, sq);
  CHECK(g1.map.is_identity());
  CHECK(g2.map.is_identity());

  // a square built from an arbitrary factored 2-cell recovers its components
  for (const auto& gamma : span_two_cells(Span(s, tt), cs.composite)) {
    auto fac = factor_2cell(gamma, cs);
    if (fac.witness.h != h) continue;
    SpanSquare sq2{cs, gamma, sq.phi1, sq.phi2, fac.left_mor, fac.right_mor};
    auto [a1, a2] = generic_filler(w, sq2);
    CHECK(a1 == fac.left_mor);
    CHECK(a2 == fac.right_mor);
  }

  // non-commuting square is rejected (swap is a valid endocell here because
  // s and h are constant, but it breaks the square equation)
  SpanMor swap_cell(w.left_cell(), w.left_cell(), FinFunction(t, t, {1, 0}));
  SpanSquare bad{cs, delta, swap_cell, sq.phi2, sq.theta1, sq.theta2};
  CHECK_THROWS_AS(generic_filler(w, bad), error);
}

TEST_CASE("associator and unitors: invertible constraint cells") {
  FinSet x{2}, y{2};
  for (const auto& a : enumerate_spans(x, y, 1))
    for (const auto& b : enumerate_spans(y, x, 1))
      for (const auto& c : enumerate_spans(x, y, 1)) {
        SpanMor assoc = span_associator(a, b, c);
        CHECK(assoc.is_iso());
      }
  for (const auto& a : enumerate_spans(x, y, 2)) {
    CHECK(span_lunitor(a).is_iso());
    CHECK(span_runitor(a).is_iso());
  }
}

TEST_CASE("pentagon and triangle at sizes <= 2 (spot sweep)") {
  // the full exhaustive sweep lives in the acceptance suite; here a smaller
  // deterministic slice guards refactors
  FinSet x{2};
  auto spans = enumerate_spans(x, x, 1);
  for (const auto& a : spans)
    for (const auto& b : spans) {
      // triangle: assoc . (runitor a ; b) = a ; lunitor b
      SpanMor lhs = vcompose(hcompose_spanmor(span_runitor(a), SpanMor::identity(b)),
                             span_associator(a, Span::identity(x), b));
      SpanMor rhs = hcompose_spanmor(SpanMor::identity(a), span_lunitor(b));
      CHECK(lhs == rhs);
      for (const auto& c : spans)
        for (const auto& d : spans) {
          SpanMor p1 = vcompose(span_associator(compose_spans(a, b).composite, c, d),
                                span_associator(a, b, compose_spans(c, d).composite));
          SpanMor p2 = vcompose(
              vcompose(hcompose_spanmor(span_associator(a, b, c), SpanMor::identity(d)),
                       span_associator(a, compose_spans(b, c).composite, d)),
              hcompose_spanmor(SpanMor::identity(a), span_associator(b, c, d)));
          CHECK(p1 == p2);
        }
    }
}

TEST_CASE("interchange law for horizontal and vertical composition") {
  FinSet x{2}, y{2};
  auto spans_l = enumerate_spans(x, y, 1);
  auto spans_r = enumerate_spans(y, x, 1);
  int seen = 0;
  for (const auto& a : spans_l)
    for (const auto& a2 : spans_l)
      for (const auto& a3 : spans_l)
        for (const auto& al : span_two_cells(a, a2))
          for (const auto& al2 : span_two_cells(a2, a3))
            for (const auto& b : spans_r)
              for (const auto& b2 : spans_r)
                for (const auto& b3 : spans_r)
                  for (const auto& be : span_two_cells(b, b2))
                    for (const auto& be2 : span_two_cells(b2, b3)) {
                      CHECK(vcompose(hcompose_spanmor(al, be), hcompose_spanmor(al2, be2)) ==
                            hcompose_spanmor(vcompose(al, al2), vcompose(be, be2)));
                      ++seen;
                    }
  CHECK(seen > 0);
}
