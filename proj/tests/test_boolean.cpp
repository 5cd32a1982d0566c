#include <random>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "odca/boolean.hpp"

using odca::BooleanOdca;
using odca::InputError;
using odca::Rational;
using odca::Word;

namespace {

// Every word over {a,b} (or a larger alphabet) up to the given length,
// shortest first.
std::vector<Word> all_words(std::size_t letters, std::size_t max_len) {
  std::vector<Word> out = {{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t a = 0; a < letters; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

bool in_l1(const Word& w) {  // a^n b a^n with n > 0
  if (w.size() < 3 || w.size() % 2 == 0) return false;
  const std::size_t n = w.size() / 2;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t expect = (i == n) ? 1 : 0;
    if (w[i] != expect) return false;
  }
  return true;
}

bool in_l3(const Word& w) {  // a^n u b v, u ∈ (b+c)^m, v ∈ (b+c)^2, m > n
  std::size_t n = 0;
  while (n < w.size() && w[n] == 0) ++n;
  for (std::size_t i = n; i < w.size(); ++i) {
    if (w[i] == 0) return false;
  }
  const std::size_t rest = w.size() - n;
  if (rest < 3) return false;
  if (w[w.size() - 3] != 1) return false;
  return rest - 3 > n;
}

BooleanOdca random_boolean(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BooleanOdca b;
  b.alphabet = {'a', 'b'};
  const std::size_t nq = 1 + rng() % 3;
  const std::size_t nc = 1 + rng() % 2;
  for (std::size_t p = 0; p < nc; ++p) b.counter_names.push_back("p" + std::to_string(p));
  b.initial_counter = 0;
  b.fsm_size = nq;
  const std::uint64_t width = (1ull << nq) - 1;
  b.lambda = (rng() & width) | (1ull << (rng() % nq));
  b.eta = rng() & width;
  for (std::size_t p = 0; p < nc; ++p) {
    std::vector<odca::CounterMove> row0, row1;
    for (std::size_t a = 0; a < 2; ++a) {
      row0.push_back({rng() % nc, static_cast<int>(rng() % 2)});
      row1.push_back({rng() % nc, static_cast<int>(rng() % 3) - 1});
    }
    b.delta0.push_back(row0);
    b.delta1.push_back(row1);
  }
  for (std::size_t a = 0; a < 2; ++a) {
    std::vector<std::uint64_t> zero, pos;
    for (std::size_t q = 0; q < nq; ++q) {
      zero.push_back(rng() & width);
      pos.push_back(rng() & width);
    }
    b.delta_zero.push_back(zero);
    b.delta_pos.push_back(pos);
  }
  return b;
}

}  // namespace

TEST_CASE("boolean fixtures are well formed") {
  CHECK(odca::validate(fixtures::l1()).empty());
  CHECK(odca::validate(fixtures::l3()).empty());
}

TEST_CASE("boolean validation rejects out-of-range state sets") {
  auto b = fixtures::l1();
  b.lambda = 1ull << 60;
  CHECK_FALSE(odca::validate(b).empty());
  b = fixtures::l1();
  b.delta_pos[0][1] = 0b1000;
  CHECK_FALSE(odca::validate(b).empty());
  b = fixtures::l1();
  b.delta0[0][0].effect = -1;
  CHECK_FALSE(odca::validate(b).empty());
}

TEST_CASE("membership in a^n b a^n") {
  auto b = fixtures::l1();
  CHECK(odca::bool_eval(b, odca::parse_word(b.alphabet, "aba")));
  CHECK_FALSE(odca::bool_eval(b, odca::parse_word(b.alphabet, "ab")));
  for (const Word& w : all_words(2, 8)) {
    CAPTURE(odca::format_word(b.alphabet, w));
    CHECK(odca::bool_eval(b, w) == in_l1(w));
  }
}

TEST_CASE("membership in the threshold language") {
  auto b = fixtures::l3();
  for (const Word& w : all_words(3, 7)) {
    CAPTURE(odca::format_word(b.alphabet, w));
    CHECK(odca::bool_eval(b, w) == in_l3(w));
  }
}

TEST_CASE("the a^n b a^n machine is deterministic, the threshold machine is not") {
  auto l1 = fixtures::l1();
  CHECK(odca::is_deterministic(l1).deterministic);
  auto l3 = fixtures::l3();
  CHECK_FALSE(odca::is_deterministic(l3).deterministic);
}

TEST_CASE("two simultaneous initial states defeat determinism at any cap") {
  auto b = fixtures::l1();
  b.lambda = 0b011;
  CHECK_FALSE(odca::is_deterministic(b, 1).deterministic);
}

TEST_CASE("determinization produces the full subset machine") {
  auto b = fixtures::l1();
  auto det = odca::determinize(b);
  CHECK(det.fsm_size == 8);
  CHECK(odca::validate(det).empty());
  CHECK(odca::is_deterministic(det).deterministic);
  for (const Word& w : all_words(2, 8)) {
    CAPTURE(odca::format_word(b.alphabet, w));
    CHECK(odca::bool_eval(det, w) == odca::bool_eval(b, w));
  }

  auto reach = odca::reachable_part(det);
  CHECK(reach.fsm_size == 4);  // {q0}, {q1}, {q2} and the empty subset
  CHECK(odca::is_deterministic(reach).deterministic);
  for (const Word& w : all_words(2, 8)) {
    CHECK(odca::bool_eval(reach, w) == odca::bool_eval(b, w));
  }
}

TEST_CASE("determinizing an empty-language machine keeps eta empty") {
  auto b = fixtures::l1();
  b.eta = 0;
  auto det = odca::determinize(b);
  CHECK(det.eta == 0);
  for (const Word& w : all_words(2, 5)) CHECK_FALSE(odca::bool_eval(det, w));
}

TEST_CASE("determinization agrees with the original on random machines") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto b = random_boolean(seed);
    REQUIRE(odca::validate(b).empty());
    auto det = odca::determinize(b);
    CHECK(odca::is_deterministic(det).deterministic);
    for (const Word& w : all_words(2, 8)) {
      CAPTURE(seed);
      CAPTURE(odca::format_word(b.alphabet, w));
      CHECK(odca::bool_eval(det, w) == odca::bool_eval(b, w));
    }
  }
}

TEST_CASE("rational embedding preserves the recognized function") {
  auto det = odca::reachable_part(odca::determinize(fixtures::l1()));
  auto weighted = odca::embed_rational(det);
  CHECK(odca::validate(weighted).empty());
  for (const Word& w : all_words(2, 8)) {
    CHECK(odca::eval(weighted, w) == Rational(odca::bool_eval(det, w) ? 1 : 0));
  }
}

TEST_CASE("rational embedding requires determinism") {
  CHECK_THROWS_AS(odca::embed_rational(fixtures::l3()), InputError);
}

TEST_CASE("a single accept-all state embeds to the constant one function") {
  BooleanOdca b;
  b.alphabet = {'a'};
  b.counter_names = {"p0"};
  b.delta0 = {{{0, 0}}};
  b.delta1 = {{{0, 0}}};
  b.fsm_size = 1;
  b.lambda = 1;
  b.eta = 1;
  b.delta_zero = {{1}};
  b.delta_pos = {{1}};
  auto weighted = odca::embed_rational(b);
  for (const Word& w : all_words(1, 6)) CHECK(odca::eval(weighted, w) == Rational(1));
}

TEST_CASE("boolean equivalence of a machine with itself") {
  auto v = odca::bool_equiv(fixtures::l1(), fixtures::l1(), 16);
  CHECK(v.equivalent);
  auto v3 = odca::bool_equiv(fixtures::l3(), fixtures::l3(), 8);
  CHECK(v3.equivalent);
}

TEST_CASE("flipping the accepting state is caught with the shortest member") {
  auto a = fixtures::l1();
  auto b = fixtures::l1();
  b.eta = 0;
  auto v = odca::bool_equiv(a, b, 16);
  CHECK_FALSE(v.equivalent);
  REQUIRE(v.witness.has_value());
  CHECK(odca::format_word(a.alphabet, *v.witness) == "aba");
}

TEST_CASE("boolean equivalence rejects mismatched alphabets") {
  CHECK_THROWS_AS(odca::bool_equiv(fixtures::l1(), fixtures::l3(), 8), InputError);
}
