#pragma once

// Explicit finite categories with validated axioms, set-valued presheaves as
// tables, and the truncated hom-categories the convolution layer integrates
// over: spans X <- T -> Y with |T| <= N, and the skeleton of finite sets and
// bijections.

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gbc/finset.hpp"
#include "gbc/span.hpp"

namespace gbc {

struct FiniteCategory {
  struct Mor {
    int src = 0;
    int tgt = 0;
  };

  int n_objects = 0;
  std::vector<Mor> mors;
  std::vector<int> identity;            // object -> morphism id
  std::vector<std::vector<int>> comp;   // comp[f][g] = f;g, or -1 when not composable

  int compose_mor(int f, int g) const {
    int r = comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
    if (r < 0) fail(errc::boundary_mismatch, "finite category: morphisms not composable");
    return r;
  }

  void validate() const {
    if (static_cast<int>(identity.size()) != n_objects)
      fail(errc::invalid_table, "finite category: one identity per object required");
    for (int a = 0; a < n_objects; ++a) {
      int e = identity[static_cast<std::size_t>(a)];
      if (mors[static_cast<std::size_t>(e)].src != a || mors[static_cast<std::size_t>(e)].tgt != a)
        fail(errc::invalid_table, "finite category: identity endpoints wrong");
    }
    const int m = static_cast<int>(mors.size());
    for (int f = 0; f < m; ++f) {
      const auto& mf = mors[static_cast<std::size_t>(f)];
      if (comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(identity[static_cast<std::size_t>(mf.tgt)])] != f ||
          comp[static_cast<std::size_t>(identity[static_cast<std::size_t>(mf.src)])][static_cast<std::size_t>(f)] != f)
        fail(errc::invalid_table, "finite category: unit law fails");
      for (int g = 0; g < m; ++g) {
        const auto& mg = mors[static_cast<std::size_t>(g)];
        if (mf.tgt != mg.src) {
          if (comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] != -1)
            fail(errc::invalid_table, "finite category: composite of non-composable pair");
          continue;
        }
        int fg = comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
        if (fg < 0 || mors[static_cast<std::size_t>(fg)].src != mf.src ||
            mors[static_cast<std::size_t>(fg)].tgt != mg.tgt)
          fail(errc::invalid_table, "finite category: composite endpoints wrong");
        for (int h = 0; h < m; ++h) {
          if (mg.tgt != mors[static_cast<std::size_t>(h)].src) continue;
          if (compose_mor(fg, h) != compose_mor(f, compose_mor(g, h)))
            fail(errc::invalid_table, "finite category: associativity fails");
        }
      }
    }
  }
};

// Contravariant set-valued functor as tables: for f : a -> b the action is a
// function F(b) -> F(a).
struct TablePresheaf {
  std::vector<int> sizes;
  std::vector<std::vector<int>> action;  // per morphism id

  int act(int f, int x) const { return action[static_cast<std::size_t>(f)][static_cast<std::size_t>(x)]; }

  void validate(const FiniteCategory& cat) const {
    if (sizes.size() != static_cast<std::size_t>(cat.n_objects) || action.size() != cat.mors.size())
      fail(errc::invalid_table, "presheaf: table shapes do not match the base");
    for (std::size_t f = 0; f < cat.mors.size(); ++f) {
      const auto& mf = cat.mors[f];
      if (action[f].size() != static_cast<std::size_t>(sizes[static_cast<std::size_t>(mf.tgt)]))
        fail(errc::invalid_table, "presheaf: action domain has wrong size");
      for (int v : action[f])
        if (v < 0 || v >= sizes[static_cast<std::size_t>(mf.src)])
          fail(errc::invalid_table, "presheaf: action lands outside the value set");
    }
    for (int a = 0; a < cat.n_objects; ++a) {
      const auto& id_act = action[static_cast<std::size_t>(cat.identity[static_cast<std::size_t>(a)])];
      for (std::size_t x = 0; x < id_act.size(); ++x)
        if (id_act[x] != static_cast<int>(x)) fail(errc::invalid_table, "presheaf: identity acts nontrivially");
    }
    for (std::size_t f = 0; f < cat.mors.size(); ++f)
      for (std::size_t g = 0; g < cat.mors.size(); ++g) {
        if (cat.mors[f].tgt != cat.mors[g].src) continue;
        int fg = cat.comp[f][g];
        for (int x = 0; x < sizes[static_cast<std::size_t>(cat.mors[g].tgt)]; ++x)
          if (act(static_cast<int>(fg), x) != act(static_cast<int>(f), act(static_cast<int>(g), x)))
            fail(errc::invalid_table, "presheaf: contravariant functoriality fails");
      }
  }
};

inline TablePresheaf constant_presheaf(const FiniteCategory& cat, int size) {
  TablePresheaf p;
  p.sizes.assign(static_cast<std::size_t>(cat.n_objects), size);
  for (const auto& m : cat.mors) {
    (void)m;
    std::vector<int> idt(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idt[static_cast<std::size_t>(i)] = i;
    p.action.push_back(std::move(idt));
  }
  return p;
}

// ---------------------------------------------------------------------------
// truncated span hom-categories

struct SpanHomCat {
  FinSet x, y;
  int apex_bound = 0;
  std::vector<Span> objects;
  std::vector<SpanMor> cells;  // one per morphism, aligned with cat.mors
  FiniteCategory cat;
  std::map<Span, int> object_lookup;
  std::map<std::tuple<int, int, std::vector<int>>, int> mor_lookup;

  int object_index(const Span& s) const {
    auto it = object_lookup.find(s);
    if (it == object_lookup.end())
      fail(errc::truncation_too_small, "span is not an object of the truncated hom-category");
    return it->second;
  }
  int mor_index(int src, int tgt, const std::vector<int>& map_table) const {
    auto it = mor_lookup.find({src, tgt, map_table});
    if (it == mor_lookup.end())
      fail(errc::internal_consistency, "2-cell missing from the truncated hom-category");
    return it->second;
  }
  int mor_index(const SpanMor& f) const {
    return mor_index(object_index(f.src), object_index(f.dst), f.map.table);
  }
};

inline SpanHomCat build_span_homcat(FinSet x, FinSet y, int apex_bound,
                                    std::size_t cap = default_enumeration_cap) {
  SpanHomCat hc;
  hc.x = x;
  hc.y = y;
  hc.apex_bound = apex_bound;
  hc.objects = enumerate_spans(x, y, apex_bound, cap);
  hc.cat.n_objects = static_cast<int>(hc.objects.size());
  for (int i = 0; i < hc.cat.n_objects; ++i)
    hc.object_lookup.emplace(hc.objects[static_cast<std::size_t>(i)], i);
  for (int i = 0; i < hc.cat.n_objects; ++i)
    for (int j = 0; j < hc.cat.n_objects; ++j)
      for (const auto& f : span_two_cells(hc.objects[static_cast<std::size_t>(i)],
                                          hc.objects[static_cast<std::size_t>(j)])) {
        hc.mor_lookup.emplace(std::make_tuple(i, j, f.map.table), static_cast<int>(hc.cells.size()));
        hc.cat.mors.push_back({i, j});
        hc.cells.push_back(f);
        if (hc.cells.size() > cap) fail(errc::enumeration_too_large, "hom-category exceeds cap");
      }
  hc.cat.identity.assign(static_cast<std::size_t>(hc.cat.n_objects), -1);
  const int m = static_cast<int>(hc.cells.size());
  for (int f = 0; f < m; ++f)
    if (hc.cat.mors[static_cast<std::size_t>(f)].src == hc.cat.mors[static_cast<std::size_t>(f)].tgt &&
        hc.cells[static_cast<std::size_t>(f)].map.is_identity())
      hc.cat.identity[static_cast<std::size_t>(hc.cat.mors[static_cast<std::size_t>(f)].src)] = f;
  hc.cat.comp.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const auto& mf = hc.cat.mors[static_cast<std::size_t>(f)];
      const auto& mg = hc.cat.mors[static_cast<std::size_t>(g)];
      if (mf.tgt != mg.src) continue;
      hc.cat.comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] = hc.mor_index(
          mf.src, mg.tgt,
          compose(hc.cells[static_cast<std::size_t>(f)].map, hc.cells[static_cast<std::size_t>(g)].map).table);
    }
  hc.cat.validate();
  return hc;
}

inline TablePresheaf representable_presheaf(const SpanHomCat& hc, const Span& at) {
  // y_at = Hom(-, at); the action of f : a -> b precomposes Hom(b, at)
  TablePresheaf p;
  std::vector<std::vector<SpanMor>> values;
  for (const auto& a : hc.objects) {
    values.push_back(span_two_cells(a, at));
    p.sizes.push_back(static_cast<int>(values.back().size()));
  }
  for (std::size_t f = 0; f < hc.cells.size(); ++f) {
    const auto& mf = hc.cat.mors[f];
    std::vector<int> tab;
    for (const auto& v : values[static_cast<std::size_t>(mf.tgt)]) {
      SpanMor pre = vcompose(hc.cells[f], v);
      int idx = -1;
      const auto& bucket = values[static_cast<std::size_t>(mf.src)];
      for (std::size_t k = 0; k < bucket.size(); ++k)
        if (bucket[k] == pre) idx = static_cast<int>(k);
      if (idx < 0) fail(errc::internal_consistency, "representable: precomposite missing");
      tab.push_back(idx);
    }
    p.action.push_back(std::move(tab));
  }
  p.validate(hc.cat);
  return p;
}

// ---------------------------------------------------------------------------
// the skeleton of finite sets and bijections

struct SpeciesSkeleton {
  int bound = 0;  // objects are 0..bound
  std::vector<std::vector<int>> perms;  // flattened per morphism
  FiniteCategory cat;

  int object_of(int mor) const { return cat.mors[static_cast<std::size_t>(mor)].src; }
  int mor_index(int n, const std::vector<int>& p) const {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (cat.mors[i].src == n && perms[i] == p) return static_cast<int>(i);
    fail(errc::internal_consistency, "permutation missing from the skeleton");
  }
};

inline SpeciesSkeleton build_species_skeleton(int bound) {
  SpeciesSkeleton sk;
  sk.bound = bound;
  sk.cat.n_objects = bound + 1;
  for (int n = 0; n <= bound; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      sk.cat.mors.push_back({n, n});
      sk.perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  sk.cat.identity.assign(static_cast<std::size_t>(bound + 1), -1);
  const int m = static_cast<int>(sk.perms.size());
  for (int f = 0; f < m; ++f) {
    bool isid = true;
    for (std::size_t i = 0; i < sk.perms[static_cast<std::size_t>(f)].size(); ++i)
      if (sk.perms[static_cast<std::size_t>(f)][i] != static_cast<int>(i)) isid = false;
    if (isid) sk.cat.identity[static_cast<std::size_t>(sk.cat.mors[static_cast<std::size_t>(f)].src)] = f;
  }
  sk.cat.comp.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (sk.cat.mors[static_cast<std::size_t>(f)].src != sk.cat.mors[static_cast<std::size_t>(g)].src) continue;
      std::vector<int> fg(sk.perms[static_cast<std::size_t>(f)].size());
      for (std::size_t i = 0; i < fg.size(); ++i)
        fg[i] = sk.perms[static_cast<std::size_t>(g)][static_cast<std::size_t>(sk.perms[static_cast<std::size_t>(f)][i])];
      sk.cat.comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] =
          sk.mor_index(sk.cat.mors[static_cast<std::size_t>(f)].src, fg);
    }
  sk.cat.validate();
  return sk;
}

// Species as a skeletal presheaf: value sets F[n] with symmetric-group
// action tables.
inline TablePresheaf constant_species(const SpeciesSkeleton& sk, int size) {
  return constant_presheaf(sk.cat, size);
}

// F[n] = {0,1} acted on through the sign of the permutation.
inline TablePresheaf sign_species(const SpeciesSkeleton& sk) {
  TablePresheaf p;
  p.sizes.assign(static_cast<std::size_t>(sk.cat.n_objects), 2);
  for (const auto& perm : sk.perms) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    p.action.push_back(inv % 2 == 0 ? std::vector<int>{0, 1} : std::vector<int>{1, 0});
  }
  p.validate(sk.cat);
  return p;
}

// The representable species at [k]: bijections [n] -> [k].
inline TablePresheaf representable_species(const SpeciesSkeleton& sk, int k) {
  TablePresheaf p;
  std::vector<std::vector<std::vector<int>>> values;
  for (int n = 0; n <= sk.bound; ++n) {
    std::vector<std::vector<int>> v;
    if (n == k) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      do {
        v.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    values.push_back(v);
    p.sizes.push_back(static_cast<int>(values.back().size()));
  }
  for (std::size_t f = 0; f < sk.perms.size(); ++f) {
    int n = sk.cat.mors[f].src;
    std::vector<int> tab;
    for (const auto& v : values[static_cast<std::size_t>(n)]) {
      std::vector<int> pre(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        pre[i] = v[static_cast<std::size_t>(sk.perms[f][i])];
      int idx = -1;
      for (std::size_t kk = 0; kk < values[static_cast<std::size_t>(n)].size(); ++kk)
        if (values[static_cast<std::size_t>(n)][kk] == pre) idx = static_cast<int>(kk);
      tab.push_back(idx);
    }
    p.action.push_back(std::move(tab));
  }
  p.validate(sk.cat);
  return p;
}

}  // namespace gbc
