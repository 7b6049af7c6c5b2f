#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "torusrep/cantor.hpp"
#include "torusrep/classifier.hpp"
#include "torusrep/io.hpp"

using namespace torusrep;
using io::json;
using testing::letter_space;
using testing::measure_of;
using testing::random_measure;
using testing::random_multiset;
using testing::random_operator;

TEST_CASE("measure documents use the pinned shape") {
  OrderedSpace space = letter_space(2);
  auto m = measure_of(space, 2, {{{"a", "b"}, "3/2"}});
  json j = io::measure_to_json(m);
  CHECK(j.at("space") == json({"a", "b"}));
  CHECK(j.at("arity") == 2);
  CHECK(j.at("atoms").size() == 1);
  CHECK(j.at("atoms")[0].at("tuple") == json({"a", "b"}));
  CHECK(j.at("atoms")[0].at("weight") == "3/2");
  CHECK(io::measure_from_json(j) == m);
}

TEST_CASE("measure parsing round-trips on random measures") {
  std::mt19937_64 rng(811);
  for (int trial = 0; trial < 100; ++trial) {
    OrderedSpace space = letter_space(1 + static_cast<int>(rng() % 4));
    auto m = random_measure(rng, space, 1 + static_cast<int>(rng() % 3), 6);
    CHECK(io::measure_from_json(io::measure_to_json(m)) == m);
  }
}

TEST_CASE("measure parsing rejects malformed documents") {
  json bad_weight = {{"space", {"a"}}, {"arity", 1},
                     {"atoms", {{{"tuple", {"a"}}, {"weight", "0"}}}}};
  CHECK_THROWS_AS(io::measure_from_json(bad_weight), io::ParseError);

  json decimal = {{"space", {"a"}}, {"arity", 1},
                  {"atoms", {{{"tuple", {"a"}}, {"weight", 0.5}}}}};
  CHECK_THROWS_AS(io::measure_from_json(decimal), io::ParseError);

  json unknown_point = {{"space", {"a"}}, {"arity", 1},
                        {"atoms", {{{"tuple", {"z"}}, {"weight", "1"}}}}};
  CHECK_THROWS_AS(io::measure_from_json(unknown_point), io::ParseError);

  json missing = {{"arity", 1}, {"atoms", json::array()}};
  CHECK_THROWS_AS(io::measure_from_json(missing), io::ParseError);
}

TEST_CASE("dyadic measures carry and accept a depth field") {
  const OrderedSpace d2 = DyadicSpace(2).space();
  auto m = AtomicMeasure::from_atoms(d2, 1, {{{3}, Rational(1, 4)}});
  json j = io::measure_to_json(m);
  CHECK(j.at("depth") == 2);

  json depth_only = {{"depth", 1}, {"arity", 1},
                     {"atoms", {{{"tuple", {"0"}}, {"weight", "2"}}}}};
  auto parsed = io::measure_from_json(depth_only);
  CHECK(parsed.space() == DyadicSpace(1).space());
  CHECK(parsed.weight_at({0}) == Rational(2));

  json conflicted = {{"depth", 1}, {"space", {"a", "b"}}, {"arity", 1},
                     {"atoms", json::array()}};
  CHECK_THROWS_AS(io::measure_from_json(conflicted), io::ParseError);
}

TEST_CASE("presentations round-trip with base and entries") {
  OrderedSpace space = letter_space(3);
  Presentation p(space);
  p.set_base(measure_of(space, 1, {{{"a"}, "1"}, {{"b"}, "1/3"}}));
  p.set_entry(Signature({1, 1}), 1, measure_of(space, 2, {{{"a", "b"}, "1"}}));
  p.set_entry(Signature({1, 1}), 2, measure_of(space, 2, {{{"a", "b"}, "1/2"}}));
  p.set_entry(Signature({-2}), 1, measure_of(space, 1, {{{"b"}, "4"}}));

  json j = io::presentation_to_json(p);
  Presentation back = io::presentation_from_json(j);
  CHECK(back.space() == p.space());
  REQUIRE(back.base().has_value());
  CHECK(*back.base() == *p.base());
  CHECK(back.entries() == p.entries());

  // The classification wrapper parses as its presentation.
  WeightMultiset w(space);
  w.add({1, 0, 0});
  auto result = classify(w);
  Presentation unwrapped =
      io::presentation_from_json(io::classification_to_json(result));
  CHECK(unwrapped.entries() == result.canonical.entries());

  json empty = {{"base", nullptr}, {"entries", json::array()}};
  CHECK(io::presentation_from_json(empty).empty());

  json duplicated = j;
  duplicated["entries"].push_back(duplicated["entries"][0]);
  CHECK_THROWS_AS(io::presentation_from_json(duplicated), io::ParseError);
}

TEST_CASE("weight multisets round-trip") {
  std::mt19937_64 rng(823);
  for (int trial = 0; trial < 50; ++trial) {
    OrderedSpace space = letter_space(1 + static_cast<int>(rng() % 5));
    WeightMultiset w = random_multiset(rng, space, 10, 9);
    CHECK(io::weights_from_json(io::weights_to_json(w)) == w);
  }

  json with_depth = {{"depth", 1},
                     {"vectors", {{{"m", {1, -1}}, {"multiplicity", 2}}}}};
  auto parsed = io::weights_from_json(with_depth);
  CHECK(parsed.space() == DyadicSpace(1).space());
  CHECK(parsed.multiplicity({1, -1}) == 2);

  json default_mult = {{"space", {"a"}}, {"vectors", {{{"m", {4}}}}}};
  CHECK(io::weights_from_json(default_mult).multiplicity({4}) == 1);

  json no_space = {{"vectors", json::array()}};
  CHECK_THROWS_AS(io::weights_from_json(no_space), io::ParseError);
}

TEST_CASE("operators round-trip through the keyed format") {
  std::mt19937_64 rng(827);
  for (int trial = 0; trial < 50; ++trial) {
    OrderedSpace x = letter_space(1 + static_cast<int>(rng() % 4));
    OrderedSpace y = letter_space(1 + static_cast<int>(rng() % 3));
    auto op = random_operator(rng, x, y, 4);
    auto back = io::operator_from_json(io::operator_to_json(op));
    CHECK(back.domain() == op.domain());
    CHECK(back.codomain() == op.codomain());
    REQUIRE(back.terms().size() == op.terms().size());
    for (std::size_t t = 0; t < op.terms().size(); ++t) {
      CHECK(back.terms()[t].coefficient == op.terms()[t].coefficient);
      CHECK(back.terms()[t].point_map == op.terms()[t].point_map);
    }
  }

  json partial_sigma = {{"X", {"a"}}, {"Y", {"y0", "y1"}},
                        {"terms", {{{"g", {{"y0", "1"}}}, {"sigma", {{"y0", "a"}}}}}}};
  CHECK_THROWS_AS(io::operator_from_json(partial_sigma), io::ParseError);
}

TEST_CASE("homomorphism matrices round-trip and validate shape") {
  OrderedSpace x = letter_space(2);
  OrderedSpace y = letter_space(3);
  HomomorphismMatrix k(x, y, {{1, 0}, {-2, 5}, {0, 0}});
  auto back = io::homomorphism_from_json(io::homomorphism_to_json(k));
  CHECK(back.entries() == k.entries());
  CHECK(back.domain() == x);
  CHECK(back.codomain() == y);

  json ragged = {{"X", {"a", "b"}}, {"Y", {"y"}}, {"matrix", {{1}}}};
  CHECK_THROWS_AS(io::homomorphism_from_json(ragged), io::ParseError);
}

TEST_CASE("unitary families round-trip exactly") {
  std::mt19937_64 rng(829);
  OrderedSpace space = letter_space(2);
  auto planted = testing::plant_family(rng, space, 3, 64, 16);
  json j = io::family_to_json(planted.family);
  CHECK(j.at("header").at("q") == 64);
  CHECK(j.at("header").at("B") == 16);
  auto back = io::family_from_json(j);
  CHECK(back.dim() == 3);
  for (std::size_t x = 0; x < 2; ++x) {
    CHECK(back.matrices()[x] == planted.family.matrices()[x]);
  }
}

TEST_CASE("file helpers classify i/o and parse failures") {
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), std::runtime_error);

  const std::string path = "/tmp/torusrep_io_test.json";
  io::write_json_file(path, json{{"k", 1}});
  CHECK(io::read_json_file(path) == json{{"k", 1}});

  std::ofstream(path) << "{not json";
  CHECK_THROWS_AS(io::read_json_file(path), io::ParseError);
}
