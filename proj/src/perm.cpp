#include "gengraph/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gengraph/config.hpp"
#include "gengraph/errors.hpp"

namespace gengraph {

Permutation Permutation::identity(int degree) {
  if (degree < 1 || degree > kMaxSupportedDegree)
    throw input_error("permutation degree must be in [1, " +
                      std::to_string(kMaxSupportedDegree) + "], got " +
                      std::to_string(degree));
  std::vector<uint8_t> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), uint8_t{0});
  return Permutation(std::move(img), true);
}

Permutation Permutation::from_images(std::vector<uint8_t> images) {
  const size_t n = images.size();
  if (n < 1 || n > static_cast<size_t>(kMaxSupportedDegree))
    throw input_error("permutation degree must be in [1, " +
                      std::to_string(kMaxSupportedDegree) + "], got " +
                      std::to_string(n));
  std::vector<bool> seen(n, false);
  for (uint8_t v : images) {
    if (v >= n || seen[v])
      throw input_error("image sequence is not a permutation of {1.." +
                        std::to_string(n) + "}");
    seen[v] = true;
  }
  return Permutation(std::move(images), true);
}

Permutation Permutation::from_images_1based(const std::vector<int>& images) {
  std::vector<uint8_t> img;
  img.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()))
      throw input_error("1-based image out of range: " + std::to_string(v));
    img.push_back(static_cast<uint8_t>(v - 1));
  }
  return from_images(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

int Permutation::parity() const {
  // sum of (cycle length - 1) over cycles == n - #cycles
  const int n = degree();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    ++cycles;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      j = images_[static_cast<size_t>(j)];
    }
  }
  return (n - cycles) & 1;
}

bool Permutation::is_even() const { return parity() == 0; }

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw input_error("compose: degree mismatch (" +
                      std::to_string(a.degree()) + " vs " +
                      std::to_string(b.degree()) + ")");
  std::vector<uint8_t> img(static_cast<size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) img[static_cast<size_t>(i)] = b[a[i]];
  return Permutation::from_images(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<uint8_t> img(static_cast<size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i)
    img[p[i]] = static_cast<uint8_t>(i);
  return Permutation::from_images(std::move(img));
}

Permutation conjugate(const Permutation& g, const Permutation& s) {
  if (g.degree() != s.degree())
    throw input_error("conjugate: degree mismatch");
  // (s^-1 g s)(x) = s(g(s^-1(x)))
  std::vector<uint8_t> img(static_cast<size_t>(g.degree()));
  for (int i = 0; i < g.degree(); ++i) img[s[i]] = s[g[i]];
  return Permutation::from_images(std::move(img));
}

Permutation power(const Permutation& p, long long e) {
  const long long m = element_order(p);
  e %= m;
  if (e < 0) e += m;
  Permutation acc = Permutation::identity(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

int CycleShape::degree() const {
  int s = 0;
  for (int part : parts) s += part;
  return s;
}

long long CycleShape::element_order() const {
  long long l = 1;
  for (int part : parts) l = std::lcm(l, static_cast<long long>(part));
  return l;
}

int CycleShape::parity() const {
  int s = 0;
  for (int part : parts) s += part - 1;
  return s & 1;
}

bool CycleShape::parts_odd_and_distinct() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] % 2 == 0) return false;
    if (i + 1 < parts.size() && parts[i] == parts[i + 1]) return false;
  }
  return true;
}

std::string CycleShape::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

std::vector<std::vector<int>> cycles_of(const Permutation& p,
                                        bool include_fixed) {
  const int n = p.degree();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      cyc.push_back(j);
      j = p[j];
    }
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

CycleShape cycle_shape(const Permutation& p) {
  CycleShape shape;
  for (const auto& cyc : cycles_of(p, true))
    shape.parts.push_back(static_cast<int>(cyc.size()));
  std::sort(shape.parts.rbegin(), shape.parts.rend());
  return shape;
}

long long element_order(const Permutation& p) {
  return cycle_shape(p).element_order();
}

BigInt sym_centralizer_order(const CycleShape& shape) {
  BigInt r = 1;
  size_t i = 0;
  while (i < shape.parts.size()) {
    size_t j = i;
    while (j < shape.parts.size() && shape.parts[j] == shape.parts[i]) ++j;
    const long long len = shape.parts[i];
    const long long mult = static_cast<long long>(j - i);
    for (long long k = 0; k < mult; ++k) r *= len;
    for (long long k = 2; k <= mult; ++k) r *= k;
    i = j;
  }
  return r;
}

std::string format_cycles(const Permutation& p) {
  const auto cycles = cycles_of(p, false);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1 || degree > kMaxSupportedDegree)
    throw input_error("parse_cycles: bad degree " + std::to_string(degree));
  std::vector<uint8_t> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), uint8_t{0});
  std::vector<bool> used(static_cast<size_t>(degree), false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size())
    throw input_error("parse_cycles: empty permutation string");
  bool any_cycle = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(')
      throw input_error("parse_cycles: expected '(' at position " +
                        std::to_string(pos) + " in \"" + text + "\"");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos == text.size())
        throw input_error("parse_cycles: unterminated cycle in \"" + text + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start)
        throw input_error("parse_cycles: expected point number in \"" + text + "\"");
      int v = std::stoi(text.substr(start, pos - start));
      if (v < 1 || v > degree)
        throw input_error("parse_cycles: point " + std::to_string(v) +
                          " out of range 1.." + std::to_string(degree));
      if (used[static_cast<size_t>(v - 1)])
        throw input_error("parse_cycles: point " + std::to_string(v) +
                          " appears twice");
      used[static_cast<size_t>(v - 1)] = true;
      cyc.push_back(v - 1);
    }
    any_cycle = true;
    if (cyc.size() >= 2) {
      for (size_t i = 0; i < cyc.size(); ++i)
        img[static_cast<size_t>(cyc[i])] =
            static_cast<uint8_t>(cyc[(i + 1) % cyc.size()]);
    }
  }
  if (!any_cycle)
    throw input_error("parse_cycles: no cycles in \"" + text + "\"");
  return Permutation::from_images(std::move(img));
}

uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20)
    throw input_error("factorial_u64: n out of range: " + std::to_string(n));
  uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<uint64_t>(i);
  return r;
}

uint64_t lehmer_rank(const Permutation& p) {
  const int n = p.degree();
  if (n > 20) throw input_error("lehmer_rank: degree > 20");
  uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += static_cast<uint64_t>(smaller) * factorial_u64(n - 1 - i);
  }
  return rank;
}

Permutation lehmer_unrank(int degree, uint64_t rank) {
  if (degree < 1 || degree > 20) throw input_error("lehmer_unrank: bad degree");
  std::vector<uint8_t> pool(static_cast<size_t>(degree));
  std::iota(pool.begin(), pool.end(), uint8_t{0});
  std::vector<uint8_t> img;
  img.reserve(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    const uint64_t f = factorial_u64(degree - 1 - i);
    const size_t idx = static_cast<size_t>(rank / f);
    if (idx >= pool.size()) throw input_error("lehmer_unrank: rank too large");
    rank %= f;
    img.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<ptrdiff_t>(idx));
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace gengraph
