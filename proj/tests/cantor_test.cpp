#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "torusrep/cantor.hpp"

using namespace torusrep;
using testing::letter_space;

namespace {

WeightMultiset random_dyadic_multiset(std::mt19937_64& rng, const OrderedSpace& space,
                                      int max_vectors, long long bound) {
  return torusrep::testing::random_multiset(rng, space, max_vectors, bound);
}

}  // namespace

TEST_CASE("dyadic spaces list binary strings in lexicographic order") {
  CHECK(DyadicSpace(0).space().points() == std::vector<std::string>{""});
  CHECK(DyadicSpace(1).space().points() == std::vector<std::string>{"0", "1"});
  CHECK(DyadicSpace(2).space().points() ==
        std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(DyadicSpace(3).space().size() == 8);
  CHECK(DyadicSpace(2).space().precedes("01", "10"));
  CHECK_THROWS_AS(DyadicSpace(-1), std::invalid_argument);
}

TEST_CASE("dyadic_depth recognizes exactly the full dyadic spaces") {
  CHECK(dyadic_depth(DyadicSpace(0).space()) == 0);
  CHECK(dyadic_depth(DyadicSpace(3).space()) == 3);
  CHECK_FALSE(dyadic_depth(letter_space(2)).has_value());
  CHECK_FALSE(dyadic_depth(OrderedSpace({"00", "01", "11", "10"})).has_value());
  CHECK_FALSE(dyadic_depth(OrderedSpace({"0", "1", "00"})).has_value());
}

TEST_CASE("truncate_point takes prefixes and respects the order") {
  CHECK(truncate_point("0110", 2) == "01");
  CHECK(truncate_point("0110", 4) == "0110");
  CHECK(truncate_point("0110", 0) == "");
  CHECK_THROWS_AS(truncate_point("01", 3), std::invalid_argument);
  CHECK_THROWS_AS(truncate_point("01", -1), std::invalid_argument);

  // Exhaustively: truncation never reverses the lexicographic order.
  for (int depth = 0; depth <= 4; ++depth) {
    const OrderedSpace fine = DyadicSpace(4).space();
    for (const auto& p : fine.points()) {
      for (const auto& q : fine.points()) {
        if (fine.precedes(p, q)) {
          const std::string tp = truncate_point(p, depth);
          const std::string tq = truncate_point(q, depth);
          CHECK((tp == tq || tp < tq));
        }
      }
    }
  }
}

TEST_CASE("coarsen_weights sums entries over cylinders") {
  const OrderedSpace d2 = DyadicSpace(2).space();

  SUBCASE("identity at the same depth") {
    WeightMultiset w(d2);
    w.add({1, 0, -2, 0});
    CHECK(coarsen_weights(w, 2) == w);
  }

  SUBCASE("cancellation produces a fixed vector") {
    WeightMultiset w(d2);
    w.add({1, -1, 0, 0});
    auto coarse = coarsen_weights(w, 1);
    CHECK(coarse.total_count() == 1);
    CHECK(coarse.zero_count() == 1);
  }

  SUBCASE("a single cylinder keeps the summed exponent") {
    WeightMultiset w(d2);
    w.add({2, 3, 0, 0});
    auto coarse = coarsen_weights(w, 1);
    CHECK(coarse.multiplicity({5, 0}) == 1);
  }

  SUBCASE("depth and space validation") {
    WeightMultiset w(d2);
    CHECK_THROWS_AS(coarsen_weights(w, 3), std::invalid_argument);
    CHECK_THROWS_AS(coarsen_weights(w, -1), std::invalid_argument);
    WeightMultiset letters(letter_space(4));
    CHECK_THROWS_AS(coarsen_weights(letters, 1), std::invalid_argument);
  }
}

TEST_CASE("classify_at_depth delegates to the classifier") {
  const OrderedSpace d1 = DyadicSpace(1).space();
  WeightMultiset w(d1);
  w.add({1, 0});
  auto result = classify_at_depth(w);
  CHECK(result.fixed_dim == 0);
  const auto* entry = result.canonical.entry(Signature({1}), 1);
  REQUIRE(entry != nullptr);
  CHECK(entry->has_atom({0}));

  auto empty = classify_at_depth(WeightMultiset(d1));
  CHECK(empty.fixed_dim == 0);
  CHECK(empty.canonical.empty());

  std::mt19937_64 rng(701);
  const OrderedSpace d2 = DyadicSpace(2).space();
  for (int trial = 0; trial < 50; ++trial) {
    WeightMultiset random = random_dyadic_multiset(rng, d2, 10, 4);
    auto via_cantor = classify_at_depth(random);
    auto via_classifier = classify(random);
    CHECK(via_cantor.fixed_dim == via_classifier.fixed_dim);
    CHECK(via_cantor.canonical.entries() == via_classifier.canonical.entries());
  }

  WeightMultiset letters(letter_space(2));
  CHECK_THROWS_AS(classify_at_depth(letters), std::invalid_argument);
}

TEST_CASE("minimal_measure_cantor requires a dyadic space") {
  const OrderedSpace d1 = DyadicSpace(1).space();
  Presentation p(d1);
  p.set_entry(Signature({1}), 1,
              AtomicMeasure::from_atoms(d1, 1, {{{0}, Rational(1)}}));
  auto nu = minimal_measure_cantor(p);
  CHECK(nu.has_atom({0}));
  CHECK(nu.atom_count() == 1);

  Presentation letters(letter_space(2));
  CHECK_THROWS_AS(minimal_measure_cantor(letters), std::invalid_argument);
}

TEST_CASE("coarsening commutes along depth chains and stays canonical") {
  std::mt19937_64 rng(733);
  for (int trial = 0; trial < 60; ++trial) {
    const int top = 2 + static_cast<int>(rng() % 3);  // d' in 2..4
    WeightMultiset w = random_dyadic_multiset(rng, DyadicSpace(top).space(), 8, 5);
    for (int mid = 0; mid <= top; ++mid) {
      for (int low = 0; low <= mid; ++low) {
        CHECK(coarsen_weights(coarsen_weights(w, mid), low) == coarsen_weights(w, low));
      }
    }
    long long previous_fixed = classify_at_depth(w).fixed_dim;
    for (int depth = top; depth-- > 0;) {
      auto coarse = coarsen_weights(w, depth);
      auto result = classify_at_depth(coarse);
      CHECK(validate_presentation(result.canonical).ok());
      // Merging only ever cancels exponents, so the fixed part grows.
      CHECK(result.fixed_dim >= previous_fixed);
      previous_fixed = result.fixed_dim;
    }
  }
}
