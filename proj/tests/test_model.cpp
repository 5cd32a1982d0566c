#include "doctest.h"
#include "fixtures.hpp"
#include "odca/model.hpp"

using odca::Configuration;
using odca::InputError;
using odca::Matrix;
using odca::Rational;
using odca::Vector;
using odca::Word;

namespace {

Vector vec(std::vector<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("word parsing and formatting") {
  auto m = fixtures::pad();
  Word w = odca::parse_word(m.alphabet, "abaaab");
  CHECK(w == Word{0, 1, 0, 0, 0, 1});
  CHECK(odca::format_word(m.alphabet, w) == "abaaab");
  CHECK(odca::parse_word(m.alphabet, "").empty());
  CHECK(odca::format_word(m.alphabet, {}) == "");
  CHECK_THROWS_AS(odca::parse_word(m.alphabet, "abc"), InputError);
}

TEST_CASE("fixture machines are well formed") {
  CHECK(odca::validate(fixtures::pad()).empty());
  CHECK(odca::validate(fixtures::pad_eta2()).empty());
  CHECK(odca::validate(fixtures::epp()).empty());
  CHECK(odca::validate(fixtures::counter_oblivious()).empty());
  CHECK(odca::validate(fixtures::zero_machine({'a', 'b'})).empty());
}

TEST_CASE("validate rejects malformed machines") {
  auto m = fixtures::pad();
  m.lambda.pop_back();
  CHECK_FALSE(odca::validate(m).empty());

  m = fixtures::pad();
  m.delta0[0][0].effect = -1;  // zero-region moves may not decrement
  CHECK_FALSE(odca::validate(m).empty());

  m = fixtures::pad();
  m.delta1[1][1].target = 9;
  CHECK_FALSE(odca::validate(m).empty());

  m = fixtures::pad();
  m.delta_pos[0] = Matrix(3, 3);
  CHECK_FALSE(odca::validate(m).empty());

  m = fixtures::pad();
  m.initial_counter = 5;
  CHECK_FALSE(odca::validate(m).empty());

  m = fixtures::pad();
  m.alphabet = {'a', 'a'};
  CHECK_FALSE(odca::validate(m).empty());
}

TEST_CASE("single step from the initial configuration") {
  auto m = fixtures::pad();
  Configuration c = odca::initial_config(m);
  CHECK(c.x == vec({1, 0, 0, 0}));
  CHECK(c.p == 0);
  CHECK(c.n == 0);

  Configuration d = odca::step(m, c, 0);
  CHECK(d.x == vec({1, 0, 0, 0}));
  CHECK(d.p == 0);
  CHECK(d.n == 1);
}

TEST_CASE("run over abaaab visits the documented configurations") {
  auto m = fixtures::pad();
  Word w = fixtures::word(m, "abaaab");

  struct Expect {
    std::vector<int> x;
    std::size_t p;
    long long n;
  };
  // The third component of state 4 doubles per positive a-step, so the
  // live branch runs 0,1,3 before the final b halves-and-rounds to 6.
  std::vector<Expect> expected = {
      {{1, 0, 0, 0}, 0, 1}, {{0, 1, 0, 0}, 1, 0}, {{0, 0, 1, 0}, 2, 0},
      {{0, 0, 1, 1}, 2, 1}, {{0, 0, 1, 3}, 2, 2}, {{0, 0, 1, 6}, 2, 1},
  };

  Configuration c = odca::initial_config(m);
  for (std::size_t i = 0; i < w.size(); ++i) {
    c = odca::step(m, c, w[i]);
    CAPTURE(i);
    CHECK(c.x == vec(expected[i].x));
    CHECK(c.p == expected[i].p);
    CHECK(c.n == expected[i].n);
  }

  CHECK(odca::eval(m, w) == Rational(6));
}

TEST_CASE("run aggregates counter statistics and the weight effect") {
  auto m = fixtures::pad();
  Word w = fixtures::word(m, "abaaab");
  auto r = odca::run(m, odca::initial_config(m), w);

  CHECK(r.final.x == vec({0, 0, 1, 6}));
  CHECK(r.final.p == 2);
  CHECK(r.final.n == 1);
  CHECK(r.counter_effect == 1);
  CHECK(r.min_counter == 0);
  CHECK(r.max_counter == 2);
  CHECK_FALSE(r.floating);

  Matrix expect(4, 4);
  std::vector<std::vector<int>> rows = {
      {0, 0, 1, 6}, {0, 0, 1, 14}, {0, 0, 1, 46}, {0, 0, 0, 64}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) expect.at(i, j) = rows[i][j];
  }
  CHECK(r.weight_effect == expect);
  CHECK(odca::vec_mat(m.lambda, r.weight_effect) == r.final.x);
}

TEST_CASE("a run that stays positive floats") {
  auto m = fixtures::pad();
  Configuration c{vec({1, 0, 0, 0}), 0, 3};
  auto r = odca::run(m, c, fixtures::word(m, "ab"));
  CHECK(r.floating);
  CHECK(r.counter_effect == 0);
  CHECK(r.final.n == 3);
}

TEST_CASE("prefix power machine counts matched prefixes") {
  auto m = fixtures::epp();
  CHECK(odca::eval(m, fixtures::word(m, "aba")) == Rational(2));
  CHECK(odca::eval(m, {}) == Rational(0));
  CHECK(odca::eval(m, fixtures::word(m, "ab")) == Rational(1));
  CHECK(odca::eval(m, fixtures::word(m, "aabb")) == Rational(1));
}

TEST_CASE("eval_config evaluates from arbitrary configurations") {
  auto m = fixtures::pad();
  Configuration c{vec({0, 0, 1, 3}), 2, 2};
  CHECK(odca::eval_config(m, c, fixtures::word(m, "b")) == Rational(6));
  CHECK(odca::eval_config(m, c, {}) == Rational(3));
}

TEST_CASE("unfolding dimensions for the decimal machine at depth 2") {
  auto m = fixtures::pad();
  auto u = odca::unfold(m, 2);
  CHECK(u.bound == 2);
  CHECK(u.fsm_size == 4);
  CHECK(u.wa.num_controls == 10);  // 3 counter states x levels {0,1,2} plus the sink
  CHECK(u.wa.wa_size == 12);
  CHECK(u.wa.initial_control == u.control_of(0, 0));
  CHECK(u.wa.dead_control == 9);

  // Sink rows are empty so overflowing runs contribute nothing.
  for (std::size_t a = 0; a < 2; ++a) {
    CHECK(u.wa.ctrl[u.wa.dead_control][a] == u.wa.dead_control);
    CHECK(u.wa.steps[u.wa.dead_control][a].empty());
  }
}

TEST_CASE("unfolded machine evaluates like the original below the bound") {
  auto m = fixtures::pad();
  auto u = odca::unfold(m, 8);
  for (const char* text : {"", "a", "b", "ab", "aba", "abaaab", "aabb", "abab", "bbbb"}) {
    Word w = fixtures::word(m, text);
    CAPTURE(text);
    CHECK(odca::eval_controlled(u.wa, w) == odca::eval(m, w));
  }
}

TEST_CASE("unfolding kills runs that climb past the bound") {
  auto m = fixtures::pad();
  auto u = odca::unfold(m, 2);
  // aaa drives the counter to 3 > 2; later letters cannot resurrect it.
  Word w = fixtures::word(m, "aaab");
  CHECK(odca::eval_controlled(u.wa, w) == Rational(0));
  CHECK(odca::eval(m, fixtures::word(m, "aab")) ==
        odca::eval_controlled(u.wa, fixtures::word(m, "aab")));
}

TEST_CASE("unfold_within enforces the cell cap") {
  auto m = fixtures::pad();
  CHECK_THROWS_AS(odca::unfold_within(m, odca::BigInt(1) << 80, 1'000'000),
                  odca::ResourceError);
  auto u = odca::unfold_within(m, odca::BigInt(4), 1'000'000);
  CHECK(u.bound == 4);
}

TEST_CASE("underlying automaton ignores the zero tests") {
  auto m = fixtures::pad();
  auto wa = odca::underlying_wa(m);
  CHECK(wa.size == 12);
  CHECK(wa.delta.size() == 2);
  // Block (p0, ·) on b moves to the p1 block with the positive-region matrix.
  CHECK(wa.delta[1].at(0 * 4 + 0, 1 * 4 + 1) == Rational(1));
  CHECK(wa.eta.size() == 12);
}

TEST_CASE("configurations embed into the unfolding") {
  auto m = fixtures::pad();
  Configuration c{vec({0, 0, 1, 3}), 2, 2};
  auto [control, x] = odca::embed_config(m, c, 4);
  auto u = odca::unfold(m, 4);
  CHECK(control == u.control_of(2, 2));
  CHECK(x.size() == u.wa.wa_size);
  CHECK(x[u.wa_index(2, 2)] == Rational(1));
  CHECK(x[u.wa_index(3, 2)] == Rational(3));
}

TEST_CASE("lift_space places a basis in one counter level") {
  odca::VectorSpace v = odca::VectorSpace::span_of(2, {vec({1, 0})});
  odca::VectorSpace lifted = odca::lift_space(v, 1, 2);
  CHECK(lifted.ambient_dim() == 6);
  CHECK(lifted.dim() == 1);
  CHECK(lifted.basis()[0] == vec({0, 0, 1, 0, 0, 0}));
}
