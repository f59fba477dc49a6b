#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gengraph/errors.hpp"
#include "gengraph/group.hpp"
#include "gengraph/perm.hpp"

#include "oracle.hpp"

using namespace gengraph;

TEST_CASE("compose follows the apply-left-first convention") {
  const Permutation a = parse_cycles("(1 2)", 3);
  const Permutation b = parse_cycles("(2 3)", 3);
  CHECK(compose(a, b) == parse_cycles("(1 3 2)", 3));

  const Permutation c = parse_cycles("(1 2 3)", 3);
  CHECK(compose(c, inverse(c)) == Permutation::identity(3));
  CHECK(compose(Permutation::identity(3), c) == c);
  CHECK(compose(c, Permutation::identity(3)) == c);
}

TEST_CASE("compose rejects degree mismatches") {
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  input_error);
}

TEST_CASE("cycle shapes") {
  CHECK(cycle_shape(parse_cycles("(1 2 3)(4 5)", 5)).parts ==
        std::vector<int>{3, 2});
  CHECK(cycle_shape(Permutation::identity(4)).parts ==
        std::vector<int>{1, 1, 1, 1});
  CHECK(cycle_shape(parse_cycles("(1 2 3 4 5 6 7)", 8)).parts ==
        std::vector<int>{7, 1});
  CHECK(cycle_shape(parse_cycles("(1 2 3)(4 5)", 5)).to_string() == "3+2");
}

TEST_CASE("element orders") {
  CHECK(element_order(parse_cycles("(1 2 3)(4 5)", 5)) == 6);
  CHECK(element_order(Permutation::identity(5)) == 1);

  // shape {9,3} in degree 12: lcm is 9; cross-check by repeated composition
  const Permutation g = parse_cycles("(1 2 3 4 5 6 7 8 9)(10 11 12)", 12);
  CHECK(element_order(g) == 9);
  Permutation acc = g;
  int k = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, g);
    ++k;
  }
  CHECK(k == 9);
}

TEST_CASE("parity behaves like a sign homomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Permutation a = lehmer_unrank(n, rng() % factorial_u64(n));
    const Permutation b = lehmer_unrank(n, rng() % factorial_u64(n));
    CHECK(compose(a, b).parity() == (a.parity() ^ b.parity()));
  }
  CHECK(parse_cycles("(1 2)", 4).parity() == 1);
  CHECK(parse_cycles("(1 2 3)", 4).parity() == 0);
}

TEST_CASE("cycle shape is invariant under conjugation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Permutation p = lehmer_unrank(n, rng() % factorial_u64(n));
    const Permutation s = lehmer_unrank(n, rng() % factorial_u64(n));
    CHECK(cycle_shape(conjugate(p, s)) == cycle_shape(p));
  }
}

TEST_CASE("element order divides the group order") {
  const Caps caps;
  for (int n = 3; n <= 6; ++n) {
    const uint64_t group_order = factorial_u64(n);
    for_each_element(GroupSpec(Family::Sym, n), caps, [&](const Permutation& p) {
      CHECK(group_order % static_cast<uint64_t>(element_order(p)) == 0);
    });
  }
}

TEST_CASE("symmetric-group centralizer orders") {
  CHECK(sym_centralizer_order(CycleShape{{7}}) == 7);
  CHECK(sym_centralizer_order(CycleShape{{9, 3}}) == 27);
  CHECK(sym_centralizer_order(CycleShape{{3, 1}}) == 3);
  CHECK(sym_centralizer_order(CycleShape{{1, 1, 1, 1, 1}}) == 120);

  // orbit-stabilizer: |C(shape)| * #elements of that shape = n!
  const Caps caps;
  for (int n = 3; n <= 6; ++n) {
    std::map<std::string, uint64_t> shape_counts;
    for_each_element(GroupSpec(Family::Sym, n), caps, [&](const Permutation& p) {
      ++shape_counts[cycle_shape(p).to_string()];
    });
    for_each_element(GroupSpec(Family::Sym, n), caps, [&](const Permutation& p) {
      const CycleShape shape = cycle_shape(p);
      CHECK(sym_centralizer_order(shape) * shape_counts[shape.to_string()] ==
            factorial_u64(n));
    });
  }
}

TEST_CASE("cycle-notation text format") {
  CHECK(format_cycles(parse_cycles("(1 2 3)(4 5)", 5)) == "(1 2 3)(4 5)");
  CHECK(format_cycles(Permutation::identity(6)) == "()");
  CHECK(parse_cycles("()", 4) == Permutation::identity(4));
  CHECK(parse_cycles(" (2 3) ", 4) == parse_cycles("(2 3)", 4));
  // canonical form: cycles by least point, each starting at its least point
  CHECK(format_cycles(parse_cycles("(5 4)(3 2 1)", 5)) == "(1 3 2)(4 5)");

  CHECK_THROWS_AS(parse_cycles("(1 2", 4), input_error);
  CHECK_THROWS_AS(parse_cycles("(1 9)", 4), input_error);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 4), input_error);
  CHECK_THROWS_AS(parse_cycles("", 4), input_error);
  CHECK_THROWS_AS(parse_cycles("12", 4), input_error);
}

TEST_CASE("1-based image construction") {
  const Permutation p = Permutation::from_images_1based({2, 3, 1});
  CHECK(p == parse_cycles("(1 2 3)", 3));
  CHECK_THROWS_AS(Permutation::from_images_1based({1, 1, 2}), input_error);
  CHECK_THROWS_AS(Permutation::from_images_1based({0, 1, 2}), input_error);
}

TEST_CASE("lehmer rank/unrank round trip in lexicographic order") {
  for (int n : {1, 3, 5}) {
    Permutation prev = Permutation::identity(n);
    for (uint64_t r = 0; r < factorial_u64(n); ++r) {
      const Permutation p = lehmer_unrank(n, r);
      CHECK(lehmer_rank(p) == r);
      if (r > 0) CHECK(prev < p);
      prev = p;
    }
  }
}

TEST_CASE("power matches repeated composition") {
  const Permutation g = parse_cycles("(1 2 3 4 5)(6 7)", 7);
  Permutation acc = Permutation::identity(7);
  for (int e = 0; e < 12; ++e) {
    CHECK(power(g, e) == acc);
    acc = compose(acc, g);
  }
  CHECK(power(g, -1) == inverse(g));
}
