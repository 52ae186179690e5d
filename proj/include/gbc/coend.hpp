#pragma once

// Brute-force coends by union-find over the diagonal disjoint sum, Day
// convolution of presheaves on truncated span hom-categories and on the
// species skeleton, the reduced convolution sums indexed by generics, and
// the element-by-element verification that the two agree.

#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gbc/fincat.hpp"
#include "gbc/report.hpp"
#include "gbc/span.hpp"
#include "gbc/span_instance.hpp"
#include "gbc/species_instance.hpp"

namespace gbc {

// ---------------------------------------------------------------------------
// union-find

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) {
    i = find(i);
    j = find(j);
    if (i == j) return;
    if (size_[i] < size_[j]) std::swap(i, j);
    parent_[j] = i;
    size_[i] += size_[j];
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Quotient of 0..n-1 with canonical class numbering: classes are ordered by
// their smallest pre-quotient element.
struct QuotientResult {
  int classes = 0;
  std::vector<int> class_of;  // pre-quotient element -> class id
};

inline QuotientResult quotient(UnionFind& uf) {
  QuotientResult q;
  q.class_of.assign(uf.size(), -1);
  for (std::size_t i = 0; i < uf.size(); ++i) {
    std::size_t r = uf.find(i);
    if (q.class_of[r] < 0) q.class_of[r] = q.classes++;
    q.class_of[i] = q.class_of[r];
  }
  return q;
}

// ---------------------------------------------------------------------------
// coends of two-variable functors on an explicit finite base

// H is contravariant in the first argument and covariant in the second;
// values are 0..size(a,b)-1.
struct TwoVarFunctor {
  const FiniteCategory* base = nullptr;
  std::function<int(int a, int b)> size;
  // f : a -> a' acting on H(a', b) -> H(a, b)
  std::function<int(int f, int b, int x)> act_contra;
  // f : b -> b' acting on H(a, b) -> H(a, b')
  std::function<int(int f, int a, int x)> act_cova;
};

struct CoendResult {
  int classes = 0;
  std::vector<int> offset;    // per object: start of its diagonal block
  std::vector<int> class_of;  // pre-quotient element -> class

  int element(int obj, int x) const { return class_of[static_cast<std::size_t>(offset[static_cast<std::size_t>(obj)] + x)]; }
};

inline CoendResult coend(const TwoVarFunctor& h, std::size_t cap = default_enumeration_cap) {
  const FiniteCategory& cat = *h.base;
  CoendResult r;
  std::size_t total = 0;
  for (int a = 0; a < cat.n_objects; ++a) {
    r.offset.push_back(static_cast<int>(total));
    total += static_cast<std::size_t>(h.size(a, a));
    if (total > cap) fail(errc::enumeration_too_large, "coend exceeds cap");
  }
  UnionFind uf(total);
  // dinaturality: for f : a -> b and x in H(b, a), identify the two images
  for (std::size_t f = 0; f < cat.mors.size(); ++f) {
    int a = cat.mors[f].src;
    int b = cat.mors[f].tgt;
    for (int x = 0; x < h.size(b, a); ++x)
      uf.unite(static_cast<std::size_t>(r.offset[static_cast<std::size_t>(a)] + h.act_contra(static_cast<int>(f), a, x)),
               static_cast<std::size_t>(r.offset[static_cast<std::size_t>(b)] + h.act_cova(static_cast<int>(f), b, x)));
  }
  auto q = quotient(uf);
  r.classes = q.classes;
  r.class_of = std::move(q.class_of);
  return r;
}

// ---------------------------------------------------------------------------
// Day convolution, brute force

// An element of the pre-quotient sum: a pair of hom-category objects, a
// 2-cell gamma : c -> a;b, and values of F at a and G at b.
struct ConvolutionElement {
  int a = 0;
  int b = 0;
  int gamma = 0;
  int u = 0;
  int v = 0;

  friend auto operator<=>(const ConvolutionElement&, const ConvolutionElement&) = default;
};

struct DayConvolution {
  std::vector<ConvolutionElement> elements;
  std::vector<int> class_of;
  int classes = 0;

  int index_of(const ConvolutionElement& e) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == e) return static_cast<int>(i);
    fail(errc::internal_consistency, "convolution element missing");
  }
};

// GF(c) over the truncated span hom-categories on either side of the middle
// object; exact as soon as the truncation contains the representing spans
// (s,h) and (h,t), i.e. N >= apex(c).
inline DayConvolution day_convolve_bruteforce(const SpanHomCat& left, const SpanHomCat& right,
                                              const TablePresheaf& f, const TablePresheaf& g,
                                              const Span& c, std::size_t cap = default_enumeration_cap) {
  if (left.y != right.x) fail(errc::boundary_mismatch, "convolution: hom-categories do not share the middle object");
  if (c.src() != left.x || c.tgt() != right.y)
    fail(errc::boundary_mismatch, "convolution: cell boundary does not match");
  if (c.apex().size > left.apex_bound || c.apex().size > right.apex_bound)
    fail(errc::truncation_too_small,
         "convolution: truncation must contain the representing spans (N >= apex of the cell)");
  f.validate(left.cat);
  g.validate(right.cat);

  DayConvolution day;
  // pre-quotient elements, and per-pair hom caches
  std::vector<std::vector<std::vector<SpanMor>>> homs(left.objects.size());
  std::vector<std::vector<int>> first_index(left.objects.size());
  for (std::size_t a = 0; a < left.objects.size(); ++a) {
    homs[a].resize(right.objects.size());
    first_index[a].assign(right.objects.size(), -1);
    for (std::size_t b = 0; b < right.objects.size(); ++b) {
      auto cs = compose_spans(left.objects[a], right.objects[b]);
      homs[a][b] = span_two_cells(c, cs.composite);
      if (homs[a][b].empty()) continue;
      first_index[a][b] = static_cast<int>(day.elements.size());
      for (std::size_t gi = 0; gi < homs[a][b].size(); ++gi)
        for (int u = 0; u < f.sizes[a]; ++u)
          for (int v = 0; v < g.sizes[b]; ++v) {
            day.elements.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(gi), u, v});
            if (day.elements.size() > cap) fail(errc::enumeration_too_large, "convolution exceeds cap");
          }
    }
  }
  auto flat = [&](int a, int b, int gi, int u, int v) {
    return static_cast<std::size_t>(first_index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) +
           (static_cast<std::size_t>(gi) * static_cast<std::size_t>(f.sizes[static_cast<std::size_t>(a)]) +
            static_cast<std::size_t>(u)) *
               static_cast<std::size_t>(g.sizes[static_cast<std::size_t>(b)]) +
           static_cast<std::size_t>(v);
  };

  UnionFind uf(day.elements.size());
  // relations: for every pair of 2-cells (alpha : a -> a2, beta : b -> b2)
  // and x = (u2, v2, gamma in Hom(c, a;b)):
  //   (F(alpha)(u2), G(beta)(v2), gamma) ~ (u2, v2, gamma;(alpha;beta))
  for (std::size_t fm = 0; fm < left.cells.size(); ++fm) {
    int a = left.cat.mors[fm].src;
    int a2 = left.cat.mors[fm].tgt;
    for (std::size_t gm = 0; gm < right.cells.size(); ++gm) {
      int b = right.cat.mors[gm].src;
      int b2 = right.cat.mors[gm].tgt;
      const auto& src_homs = homs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (src_homs.empty()) continue;
      const auto& dst_homs = homs[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b2)];
      SpanMor whisker = hcompose_spanmor(left.cells[fm], right.cells[gm]);
      for (std::size_t gi = 0; gi < src_homs.size(); ++gi) {
        SpanMor post = vcompose(src_homs[gi], whisker);
        int gi2 = -1;
        for (std::size_t k = 0; k < dst_homs.size(); ++k)
          if (dst_homs[k] == post) gi2 = static_cast<int>(k);
        if (gi2 < 0) fail(errc::internal_consistency, "convolution: postcomposite missing");
        for (int u2 = 0; u2 < f.sizes[static_cast<std::size_t>(a2)]; ++u2)
          for (int v2 = 0; v2 < g.sizes[static_cast<std::size_t>(b2)]; ++v2)
            uf.unite(flat(a, b, static_cast<int>(gi), f.act(static_cast<int>(fm), u2),
                          g.act(static_cast<int>(gm), v2)),
                     flat(a2, b2, gi2, u2, v2));
      }
    }
  }
  auto q = quotient(uf);
  day.classes = q.classes;
  day.class_of = std::move(q.class_of);
  return day;
}

// Species version over the skeleton: gamma ranges over bijections
// [n] -> [a] u [b].
inline DayConvolution day_convolve_bruteforce_species(const SpeciesSkeleton& sk, const TablePresheaf& f,
                                                      const TablePresheaf& g, int n,
                                                      std::size_t cap = default_enumeration_cap) {
  if (n > sk.bound)
    fail(errc::truncation_too_small, "species convolution: skeleton bound below |c|");
  f.validate(sk.cat);
  g.validate(sk.cat);
  SpeciesBicat bb{sk.bound};

  DayConvolution day;
  std::vector<std::vector<std::vector<SpeciesMor>>> homs(sk.cat.n_objects);
  std::vector<std::vector<int>> first_index(sk.cat.n_objects);
  for (int a = 0; a <= sk.bound; ++a) {
    homs[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(sk.bound + 1));
    first_index[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(sk.bound + 1), -1);
    for (int b = 0; b <= sk.bound; ++b) {
      if (a + b != n) continue;
      auto& bucket = homs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      bucket = bb.two_cells(n, a + b);
      first_index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(day.elements.size());
      for (std::size_t gi = 0; gi < bucket.size(); ++gi)
        for (int u = 0; u < f.sizes[static_cast<std::size_t>(a)]; ++u)
          for (int v = 0; v < g.sizes[static_cast<std::size_t>(b)]; ++v) {
            day.elements.push_back({a, b, static_cast<int>(gi), u, v});
            if (day.elements.size() > cap) fail(errc::enumeration_too_large, "convolution exceeds cap");
          }
    }
  }
  auto flat = [&](int a, int b, int gi, int u, int v) {
    return static_cast<std::size_t>(first_index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) +
           (static_cast<std::size_t>(gi) * static_cast<std::size_t>(f.sizes[static_cast<std::size_t>(a)]) +
            static_cast<std::size_t>(u)) *
               static_cast<std::size_t>(g.sizes[static_cast<std::size_t>(b)]) +
           static_cast<std::size_t>(v);
  };

  UnionFind uf(day.elements.size());
  for (std::size_t fm = 0; fm < sk.perms.size(); ++fm) {
    int a = sk.cat.mors[fm].src;
    for (std::size_t gm = 0; gm < sk.perms.size(); ++gm) {
      int b = sk.cat.mors[gm].src;
      if (a + b != n) continue;
      const auto& bucket = homs[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      SpeciesMor whisker = bb.hcomp2(SpeciesMor(a, a, sk.perms[fm]), SpeciesMor(b, b, sk.perms[gm]));
      for (std::size_t gi = 0; gi < bucket.size(); ++gi) {
        SpeciesMor post = bb.vcomp(bucket[gi], whisker);
        int gi2 = -1;
        for (std::size_t k = 0; k < bucket.size(); ++k)
          if (bucket[k] == post) gi2 = static_cast<int>(k);
        for (int u2 = 0; u2 < f.sizes[static_cast<std::size_t>(a)]; ++u2)
          for (int v2 = 0; v2 < g.sizes[static_cast<std::size_t>(b)]; ++v2)
            uf.unite(flat(a, b, static_cast<int>(gi), f.act(static_cast<int>(fm), u2),
                          g.act(static_cast<int>(gm), v2)),
                     flat(a, b, gi2, u2, v2));
      }
    }
  }
  auto q = quotient(uf);
  day.classes = q.classes;
  day.class_of = std::move(q.class_of);
  return day;
}

// ---------------------------------------------------------------------------
// reduced formulas

struct ReducedSummand {
  std::vector<int> tag;  // span: the table of h; species: the subset L
  int left_object = 0;   // object index of l_m in the left hom-category
  int right_object = 0;
  int u = 0;
  int v = 0;
};

struct ReducedConvolution {
  std::vector<ReducedSummand> elements;
};

// GF(s,t) = sum over h : T -> Y of F(s,h) x G(h,t).
inline ReducedConvolution day_convolve_reduced(const SpanHomCat& left, const SpanHomCat& right,
                                               const TablePresheaf& f, const TablePresheaf& g,
                                               const Span& c) {
  if (c.apex().size > left.apex_bound || c.apex().size > right.apex_bound)
    fail(errc::truncation_too_small, "reduced convolution: representing spans exceed the truncation");
  ReducedConvolution out;
  for (const auto& h : enumerate_functions(c.apex(), left.y)) {
    int li = left.object_index(Span(c.left, h));
    int ri = right.object_index(Span(h, c.right));
    for (int u = 0; u < f.sizes[static_cast<std::size_t>(li)]; ++u)
      for (int v = 0; v < g.sizes[static_cast<std::size_t>(ri)]; ++v)
        out.elements.push_back({h.table, li, ri, u, v});
  }
  return out;
}

// GF(n) = sum over decompositions [n] = L u R of F[|L|] x G[|R|].
inline ReducedConvolution day_convolve_reduced_species(const SpeciesSkeleton& sk, const TablePresheaf& f,
                                                       const TablePresheaf& g, int n) {
  if (n > sk.bound) fail(errc::truncation_too_small, "reduced species convolution: bound below |c|");
  ReducedConvolution out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> left;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) left.push_back(i);
    int a = static_cast<int>(left.size());
    int b = n - a;
    for (int u = 0; u < f.sizes[static_cast<std::size_t>(a)]; ++u)
      for (int v = 0; v < g.sizes[static_cast<std::size_t>(b)]; ++v)
        out.elements.push_back({left, a, b, u, v});
  }
  return out;
}

// ---------------------------------------------------------------------------
// the comparison isomorphism

struct ConvolutionIsoReport {
  bool bijective = false;
  int reduced_count = 0;
  int coend_count = 0;
  std::vector<int> forward;  // reduced element -> coend class
  std::vector<int> inverse;  // coend class -> reduced element
};

// Injects each reduced summand along its generic and checks the induced map
// onto coend classes is a bijection.
inline ConvolutionIsoReport verify_convolution_iso(const SpanHomCat& left, const SpanHomCat& right,
                                                   const TablePresheaf& f, const TablePresheaf& g,
                                                   const Span& c,
                                                   std::size_t cap = default_enumeration_cap) {
  auto day = day_convolve_bruteforce(left, right, f, g, c, cap);
  auto reduced = day_convolve_reduced(left, right, f, g, c);
  ConvolutionIsoReport rep;
  rep.reduced_count = static_cast<int>(reduced.elements.size());
  rep.coend_count = day.classes;
  rep.inverse.assign(static_cast<std::size_t>(day.classes), -1);
  rep.bijective = true;
  for (std::size_t i = 0; i < reduced.elements.size(); ++i) {
    const auto& el = reduced.elements[i];
    FinFunction h(c.apex(), left.y, el.tag);
    GenericWitnessSpan w(c, h);
    SpanMor delta = generic_2cell(w);
    // locate delta in Hom(c, l;r)
    auto cs = compose_spans(left.objects[static_cast<std::size_t>(el.left_object)],
                            right.objects[static_cast<std::size_t>(el.right_object)]);
    auto bucket = span_two_cells(c, cs.composite);
    int gi = -1;
    for (std::size_t k = 0; k < bucket.size(); ++k)
      if (bucket[k] == delta) gi = static_cast<int>(k);
    if (gi < 0) fail(errc::internal_consistency, "iso: generic missing from its hom-set");
    int pre = day.index_of({el.left_object, el.right_object, gi, el.u, el.v});
    int cls = day.class_of[static_cast<std::size_t>(pre)];
    rep.forward.push_back(cls);
    if (rep.inverse[static_cast<std::size_t>(cls)] >= 0)
      rep.bijective = false;  // two summands hit one class
    else
      rep.inverse[static_cast<std::size_t>(cls)] = static_cast<int>(i);
  }
  for (int v : rep.inverse)
    if (v < 0) rep.bijective = false;  // a class was missed
  if (rep.reduced_count != rep.coend_count) rep.bijective = false;
  return rep;
}

inline ConvolutionIsoReport verify_convolution_iso_species(const SpeciesSkeleton& sk,
                                                           const TablePresheaf& f,
                                                           const TablePresheaf& g, int n,
                                                           std::size_t cap = default_enumeration_cap) {
  auto day = day_convolve_bruteforce_species(sk, f, g, n, cap);
  auto reduced = day_convolve_reduced_species(sk, f, g, n);
  SpeciesBicat bb{sk.bound};
  ConvolutionIsoReport rep;
  rep.reduced_count = static_cast<int>(reduced.elements.size());
  rep.coend_count = day.classes;
  rep.inverse.assign(static_cast<std::size_t>(day.classes), -1);
  rep.bijective = true;
  for (std::size_t i = 0; i < reduced.elements.size(); ++i) {
    const auto& el = reduced.elements[i];
    SpeciesGen gen{n, el.tag};
    SpeciesMor delta = bb.gen_cell(gen);
    auto bucket = bb.two_cells(n, el.left_object + el.right_object);
    int gi = -1;
    for (std::size_t k = 0; k < bucket.size(); ++k)
      if (bucket[k] == delta) gi = static_cast<int>(k);
    if (gi < 0) fail(errc::internal_consistency, "iso: species generic missing");
    int pre = day.index_of({el.left_object, el.right_object, gi, el.u, el.v});
    int cls = day.class_of[static_cast<std::size_t>(pre)];
    rep.forward.push_back(cls);
    if (rep.inverse[static_cast<std::size_t>(cls)] >= 0)
      rep.bijective = false;
    else
      rep.inverse[static_cast<std::size_t>(cls)] = static_cast<int>(i);
  }
  for (int v : rep.inverse)
    if (v < 0) rep.bijective = false;
  if (rep.reduced_count != rep.coend_count) rep.bijective = false;
  return rep;
}

}  // namespace gbc
