#include "gengraph/groupspec.hpp"

#include <algorithm>

#include "gengraph/config.hpp"
#include "gengraph/errors.hpp"

namespace gengraph {

std::string family_name(Family f) { return f == Family::Alt ? "alt" : "sym"; }

Family parse_family(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (t == "alt" || t == "a") return Family::Alt;
  if (t == "sym" || t == "s") return Family::Sym;
  throw input_error("unknown group family \"" + s + "\" (expected alt or sym)");
}

GroupSpec::GroupSpec(Family f, int degree) : family(f), n(degree) {
  if (n < 3 || n > kMaxSupportedDegree)
    throw input_error("group degree must be in [3, " +
                      std::to_string(kMaxSupportedDegree) + "], got " +
                      std::to_string(n));
}

BigInt GroupSpec::order() const {
  BigInt f = factorial_big(n);
  return family == Family::Alt ? f / 2 : f;
}

uint64_t GroupSpec::order_u64() const {
  if (n > 20) throw resource_error("order_u64: degree > 20");
  const uint64_t f = factorial_u64(n);
  return family == Family::Alt ? f / 2 : f;
}

bool GroupSpec::contains(const Permutation& p) const {
  if (p.degree() != n) return false;
  return family == Family::Sym || p.is_even();
}

std::string GroupSpec::name() const {
  return (family == Family::Alt ? std::string("Alt_") : std::string("Sym_")) +
         std::to_string(n);
}

}  // namespace gengraph
