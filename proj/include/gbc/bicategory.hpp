#pragma once

// The uniform interface instances expose to the coherence validator and the
// oplax/comonadic engine.  Instances are plain value types; the concepts
// below document the required surface.
//
//   cell algebra   identity_one/two, vcomp, hcomp, hcomp2, associator,
//                  lunitor (a -> 1;a), runitor (a -> a;1), is_iso, invert
//   enumeration    objects(), one_cells(X,Y) (bounded), two_cells(a,b)
//   generics       class_generics(c), class_augmentations(n), gen_*/aug_*
//                  accessors, factor, factor_through, identity_factorization

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

namespace gbc {

// Shared object type for one-object (monoidal) instances.
struct MonoidalPoint {
  friend auto operator<=>(const MonoidalPoint&, const MonoidalPoint&) = default;
};

template <typename B>
concept Bicategory = requires(const B& b, const typename B::Obj& x, const typename B::One& a,
                              const typename B::Two& f) {
  { b.src_of(a) } -> std::convertible_to<typename B::Obj>;
  { b.tgt_of(a) } -> std::convertible_to<typename B::Obj>;
  { b.dom2(f) } -> std::convertible_to<typename B::One>;
  { b.cod2(f) } -> std::convertible_to<typename B::One>;
  { b.identity_one(x) } -> std::convertible_to<typename B::One>;
  { b.identity_two(a) } -> std::convertible_to<typename B::Two>;
  { b.vcomp(f, f) } -> std::convertible_to<typename B::Two>;
  { b.hcomp(a, a) } -> std::convertible_to<typename B::One>;
  { b.hcomp2(f, f) } -> std::convertible_to<typename B::Two>;
  { b.associator(a, a, a) } -> std::convertible_to<typename B::Two>;
  { b.lunitor(a) } -> std::convertible_to<typename B::Two>;
  { b.runitor(a) } -> std::convertible_to<typename B::Two>;
  { b.is_iso(f) } -> std::convertible_to<bool>;
  { b.invert(f) } -> std::convertible_to<typename B::Two>;
};

template <typename B>
concept EnumerableBicategory = Bicategory<B> && requires(const B& b, const typename B::Obj& x,
                                                         const typename B::One& a) {
  { b.objects() } -> std::convertible_to<std::vector<typename B::Obj>>;
  { b.one_cells(x, x) } -> std::convertible_to<std::vector<typename B::One>>;
  { b.two_cells(a, a) } -> std::convertible_to<std::vector<typename B::Two>>;
};

template <typename B>
concept GenericBicategory = EnumerableBicategory<B> &&
    requires(const B& b, const typename B::Obj& x, const typename B::One& a,
             const typename B::Two& f, const typename B::Gen& d, const typename B::Aug& e) {
  { b.class_generics(a) } -> std::convertible_to<std::vector<typename B::Gen>>;
  { b.class_augmentations(a) } -> std::convertible_to<std::vector<typename B::Aug>>;
  { b.gen_dom(d) } -> std::convertible_to<typename B::One>;
  { b.gen_left(d) } -> std::convertible_to<typename B::One>;
  { b.gen_right(d) } -> std::convertible_to<typename B::One>;
  { b.gen_cell(d) } -> std::convertible_to<typename B::Two>;
  { b.aug_dom(e) } -> std::convertible_to<typename B::One>;
  { b.aug_cell(e) } -> std::convertible_to<typename B::Two>;
  { b.factor(f, a, a) } -> std::convertible_to<typename B::Factorization>;
  { b.factor_through(d, f, a, a) } ->
      std::convertible_to<std::optional<std::pair<typename B::Two, typename B::Two>>>;
  { b.identity_factorization(a, a) } -> std::convertible_to<typename B::Factorization>;
  { b.identity_augmentation(x) } -> std::convertible_to<typename B::Aug>;
  { b.is_generic(f, a, a) } -> std::convertible_to<bool>;
};

}  // namespace gbc
