#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "tmzv/element.hpp"
#include "tmzv/word.hpp"

namespace tmzv {

enum class ProductKind {
  /// The t-stuffle: the trailing (t^2-t) x^{k+l} merge is dropped when both
  /// tails are empty.
  t_stuffle,
  /// The auxiliary product: the x-merge is always kept, so results may end in x.
  o_stuffle,
};

/// Recursive evaluator for the t-stuffle and the auxiliary product on words of
/// H^1, with an optional memo table keyed on the unordered pair of operands.
///
/// An engine is not thread-safe; use one per thread (the free functions below
/// do exactly that).
class ProductEngine {
 public:
  explicit ProductEngine(ProductKind kind, bool memoize = true);
  ~ProductEngine();
  ProductEngine(ProductEngine&&) noexcept;
  ProductEngine& operator=(ProductEngine&&) noexcept;

  ProductKind kind() const { return kind_; }

  /// Throws NotInH1 unless both words are empty or end in y.
  Element multiply(const Word& a, const Word& b);
  /// Bilinear extension; every word of both operands must lie in H^1.
  Element multiply(const Element& a, const Element& b);

  std::size_t cache_size() const;
  void clear_cache();

 private:
  const Element& product(std::string_view a, std::string_view b);
  Element compute(std::string_view a, std::string_view b);

  struct Cache;
  ProductKind kind_;
  bool memoize_;
  std::unique_ptr<Cache> cache_;
};

/// The t-stuffle on words / elements, using a memoizing per-thread engine.
Element stuffle_t(const Word& a, const Word& b);
Element stuffle_t(const Element& a, const Element& b);

/// The auxiliary product (x-merge never suppressed), per-thread engine.
Element stuffle_o(const Word& a, const Word& b);
Element stuffle_o(const Element& a, const Element& b);

/// Drops the per-thread memo tables of the calling thread.
void clear_product_caches();

/// The classical quasi-shuffle product on indices,
///   z_a u * z_b v = z_a (u * z_b v) + z_b (z_a u * v) + z_{a+b} (u * v),
/// coded independently of ProductEngine; coefficients are constants.
Element stuffle_classical(const Index& a, const Index& b);

/// Non-recursive enumeration of the t-stuffle of z-words.
///
/// Each output word is a left-to-right sequence of blocks covering both
/// operands in order. A block is r >= 0 fused pairs (each taking the next part
/// of both operands, weight (t^2-t)) closed by a terminator: the next part of
/// either operand alone, or the next parts of both (weight (1-2t)). The block
/// contributes z of the sum of all parts it consumes.
Element stuffle_combinatorial(const Index& a, const Index& b);

}  // namespace tmzv
