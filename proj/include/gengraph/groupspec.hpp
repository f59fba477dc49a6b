#pragma once

#include <string>

#include "gengraph/bigint.hpp"
#include "gengraph/perm.hpp"

namespace gengraph {

enum class Family { Alt, Sym };

std::string family_name(Family f);          // "alt" / "sym"
Family parse_family(const std::string& s);  // accepts "alt"/"sym", case-insensitive

// Names an ambient group Alt_n or Sym_n, n >= 3.
struct GroupSpec {
  Family family;
  int n;

  GroupSpec(Family f, int degree);

  BigInt order() const;
  uint64_t order_u64() const;  // n <= 20
  bool contains(const Permutation& p) const;
  std::string name() const;  // "Alt_7", "Sym_4"

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

}  // namespace gengraph
