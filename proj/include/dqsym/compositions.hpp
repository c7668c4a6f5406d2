#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dqsym {

/// Finite sequence of positive integers.  The empty composition is the unit
/// of the product.
///
/// Ordering is graded by size, then lexicographic; this is the order used
/// for every enumeration and serialized listing.
class Composition {
 public:
  Composition() = default;
  /// Throws std::invalid_argument if some part is zero.
  explicit Composition(std::vector<unsigned> parts);
  Composition(std::initializer_list<unsigned> parts)
      : Composition(std::vector<unsigned>(parts)) {}

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Sum of parts, |alpha|.
  unsigned size() const noexcept;
  unsigned max_part() const noexcept;

  /// 1-based access, matching alpha_1, ..., alpha_l.
  unsigned part(std::size_t i) const { return parts_.at(i - 1); }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<unsigned> parts_;
};

/// Finite sequence of nonnegative integers.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<unsigned> parts) : parts_(std::move(parts)) {}
  WeakComposition(std::initializer_list<unsigned> parts) : parts_(parts) {}

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  unsigned size() const noexcept;

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Order-preserving injection [source_size] -> [target_size], stored by its
/// strictly increasing list of 1-based images.
class OrderedInjection {
 public:
  OrderedInjection() = default;
  /// Throws std::invalid_argument unless images are strictly increasing and
  /// lie in [1, target_size].
  OrderedInjection(std::size_t target_size, std::vector<std::size_t> images);

  std::size_t source_size() const noexcept { return images_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  /// Image of the 1-based element k.
  std::size_t operator()(std::size_t k) const { return images_.at(k - 1); }
  /// 1-based preimage of i, if i lies in the image.
  std::optional<std::size_t> preimage(std::size_t i) const noexcept;

  friend bool operator==(const OrderedInjection&, const OrderedInjection&) = default;

 private:
  std::size_t target_size_ = 0;
  std::vector<std::size_t> images_;
};

/// Pair (iota, jota) of order-preserving injections into a common [n].
struct InjectionPair {
  OrderedInjection iota;
  OrderedInjection jota;
};

Composition positive_part(const WeakComposition& w);

/// All compositions with at most `max_length` parts, each at most `max_part`,
/// in graded-lex order.
std::vector<Composition> enumerate_compositions(unsigned max_length, unsigned max_part);

/// All compositions of `total` with at most `max_length` parts, each at most
/// `max_part` (lexicographic order).
std::vector<Composition> compositions_of(unsigned total, unsigned max_length, unsigned max_part);

/// All C(n, l) order-preserving injections [l] -> [n], images in lex order.
/// Empty when l > n.
std::vector<OrderedInjection> enumerate_injections(std::size_t l, std::size_t n);

/// Calls `visit` for every pair (iota: [l] -> [n], jota: [m] -> [n]) whose
/// images cover [n].
void for_each_covering_pair(std::size_t l, std::size_t m, std::size_t n,
                            const std::function<void(const InjectionPair&)>& visit);

using CompositionMultiset = std::map<Composition, std::uint64_t>;

/// Overlapping shuffles of alpha and beta with multiplicities.
CompositionMultiset overlapping_shuffles(const Composition& alpha, const Composition& beta);

/// Parses "a1,a2,...".  The empty string is the empty composition.
/// Throws ParseError (see errors.hpp) carrying the 0-based character offset.
Composition parse_composition(const std::string& text);

std::string to_string(const Composition& c);
std::ostream& operator<<(std::ostream& os, const Composition& c);
std::ostream& operator<<(std::ostream& os, const OrderedInjection& f);

}  // namespace dqsym
