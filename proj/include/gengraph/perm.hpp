#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gengraph/bigint.hpp"

namespace gengraph {

// A permutation of {1..n}, stored 0-based: images()[i] is the image of
// point i. Immutable after construction; every operation returns a new
// value, so sharing across threads needs no synchronization.
class Permutation {
public:
  Permutation() : images_{0} {}
  static Permutation identity(int degree);
  // Takes 0-based images; validates that they form a permutation.
  static Permutation from_images(std::vector<uint8_t> images);
  // 1-based images as in the JSON form {"degree": n, "images": [...]}.
  static Permutation from_images_1based(const std::vector<int>& images);

  int degree() const { return static_cast<int>(images_.size()); }
  uint8_t operator[](int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<uint8_t>& images() const { return images_; }
  const uint8_t* data() const { return images_.data(); }

  bool is_identity() const;
  bool is_even() const;
  int parity() const;  // 0 = even, 1 = odd

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on image sequences; matches enumeration order.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<uint8_t> images, bool)
      : images_(std::move(images)) {}
  std::vector<uint8_t> images_;
};

// compose(a, b) maps i to b(a(i)): apply a first, then b. Left-to-right
// composition matches cycle-notation products in group theory software.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
// s^-1 g s under the convention above: cycles of g are relabelled by s.
Permutation conjugate(const Permutation& g, const Permutation& s);
Permutation power(const Permutation& p, long long e);

// The multiset of disjoint-cycle lengths, fixed points included, so
// parts always sum to the degree. Stored descending.
struct CycleShape {
  std::vector<int> parts;

  int degree() const;
  long long element_order() const;  // lcm of parts
  int parity() const;               // sum of (part-1) mod 2
  bool parts_odd_and_distinct() const;
  std::string to_string() const;  // e.g. "9+3" or "1+1+1+1"

  friend bool operator==(const CycleShape&, const CycleShape&) = default;
  friend auto operator<=>(const CycleShape&, const CycleShape&) = default;
};

CycleShape cycle_shape(const Permutation& p);
long long element_order(const Permutation& p);
// Cycles in canonical order: each cycle starts at its least point, cycles
// sorted by least point. Fixed points included only when requested.
std::vector<std::vector<int>> cycles_of(const Permutation& p,
                                        bool include_fixed = false);

// |C_{Sym_n}(g)| for any g of the given shape: product over distinct
// lengths l with multiplicity m of l^m * m!.
BigInt sym_centralizer_order(const CycleShape& shape);

// Text format: cycle notation, 1-based, fixed points omitted, identity
// written "()", e.g. "(1 2 3)(4 5)".
std::string format_cycles(const Permutation& p);
Permutation parse_cycles(const std::string& text, int degree);

// Lexicographic rank of p among all degree! permutations (degree <= 20).
uint64_t lehmer_rank(const Permutation& p);
Permutation lehmer_unrank(int degree, uint64_t rank);

uint64_t factorial_u64(int n);  // n <= 20

}  // namespace gengraph
