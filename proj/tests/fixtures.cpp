#include "fixtures.hpp"

namespace fixtures {

using odca::CounterMove;
using odca::Matrix;
using odca::Rational;
using odca::Vector;

namespace {

Matrix mat(std::vector<std::vector<int>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vector vec(std::vector<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

odca::WeightedOdca pad() {
  odca::WeightedOdca m;
  m.alphabet = {'a', 'b'};
  m.counter_names = {"p0", "p1", "p2"};
  m.initial_counter = 0;
  m.delta0 = {{{0, 1}, {0, 0}}, {{2, 0}, {1, 0}}, {{2, 1}, {2, 0}}};
  m.delta1 = {{{0, 1}, {1, -1}}, {{1, -1}, {1, 0}}, {{2, 1}, {2, -1}}};
  m.fsm_size = 4;
  m.lambda = vec({1, 0, 0, 0});
  m.eta = vec({0, 0, 0, 1});
  m.delta_zero = {mat({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}}),
                  mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})};
  m.delta_pos = {mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}}),
                 mat({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}})};
  return m;
}

odca::WeightedOdca pad_eta2() {
  odca::WeightedOdca m = pad();
  m.eta[3] = Rational(2);
  return m;
}

odca::WeightedOdca epp() {
  odca::WeightedOdca m;
  m.alphabet = {'a', 'b'};
  m.counter_names = {"p0", "p1"};
  m.initial_counter = 0;
  m.delta0 = {{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}};
  m.delta1 = {{{0, 1}, {0, -1}}, {{1, -1}, {1, 1}}};
  m.fsm_size = 3;
  m.lambda = vec({1, 0, 0});
  m.eta = vec({0, 1, 1});
  m.delta_zero = {mat({{0, 1, 0}, {0, 2, 0}, {0, 2, 0}}),
                  mat({{0, 0, 1}, {0, 0, 2}, {0, 0, 2}})};
  m.delta_pos = {mat({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                 mat({{0, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  return m;
}

odca::BooleanOdca l1() {
  odca::BooleanOdca b;
  b.alphabet = {'a', 'b'};
  b.counter_names = {"p0", "p1", "p2"};
  b.initial_counter = 0;
  b.delta0 = {{{0, 1}, {0, 0}}, {{2, 0}, {1, 0}}, {{2, 0}, {2, 0}}};
  b.delta1 = {{{0, 1}, {1, -1}}, {{1, -1}, {1, 0}}, {{2, 0}, {2, 0}}};
  b.fsm_size = 3;
  b.lambda = 0b001;
  b.eta = 0b100;
  b.delta_zero = {{0b001, 0b100, 0}, {0, 0, 0}};
  b.delta_pos = {{0b001, 0b010, 0}, {0b010, 0, 0}};
  return b;
}

odca::BooleanOdca l3() {
  odca::BooleanOdca b;
  b.alphabet = {'a', 'b', 'c'};
  b.counter_names = {"p0", "p1"};
  b.initial_counter = 0;
  b.delta0 = {{{0, 1}, {1, 0}, {0, 0}}, {{1, 0}, {1, 0}, {1, 0}}};
  b.delta1 = {{{0, 1}, {0, -1}, {0, -1}}, {{1, 0}, {1, 0}, {1, 0}}};
  b.fsm_size = 6;
  b.lambda = 0b000001;
  b.eta = 0b100000;
  b.delta_zero = {{1, 0, 0, 0, 0, 0},
                  {2, 2 | 8, 2, 16, 32, 0},
                  {2, 2, 2, 16, 32, 0}};
  b.delta_pos = {{1, 0, 0, 0, 0, 0}, {4, 0, 4, 0, 0, 0}, {4, 0, 4, 0, 0, 0}};
  return b;
}

odca::WeightedOdca counter_oblivious() {
  odca::WeightedOdca m;
  m.alphabet = {'a', 'b'};
  m.counter_names = {"p0"};
  m.initial_counter = 0;
  m.delta0 = {{{0, 1}, {0, 0}}};
  m.delta1 = {{{0, 1}, {0, -1}}};
  m.fsm_size = 2;
  m.lambda = vec({1, 0});
  m.eta = vec({0, 1});
  Matrix a = mat({{1, 1}, {0, 1}});
  Matrix b = mat({{1, 0}, {1, 1}});
  m.delta_zero = {a, b};
  m.delta_pos = {a, b};
  return m;
}

odca::WeightedOdca zero_machine(const std::vector<char>& alphabet) {
  odca::WeightedOdca m;
  m.alphabet = alphabet;
  m.counter_names = {"p0"};
  m.initial_counter = 0;
  m.delta0 = {std::vector<CounterMove>(alphabet.size(), CounterMove{0, 0})};
  m.delta1 = {std::vector<CounterMove>(alphabet.size(), CounterMove{0, 0})};
  m.fsm_size = 1;
  m.lambda = vec({1});
  m.eta = vec({0});
  m.delta_zero.assign(alphabet.size(), mat({{1}}));
  m.delta_pos.assign(alphabet.size(), mat({{1}}));
  return m;
}

odca::WeightedOca violating_oca() {
  odca::WeightedOca oca;
  oca.alphabet = {'a'};
  oca.size = 2;
  oca.lambda = vec({1, 1});
  oca.eta = vec({1, 1});
  oca.trans0[{0, 0, 0}] = {1, Rational(1)};
  oca.trans0[{1, 0, 1}] = {1, Rational(1)};
  oca.trans1[{0, 0, 0}] = {1, Rational(1)};
  oca.trans1[{1, 0, 1}] = {-1, Rational(1)};
  return oca;
}

std::string fixture_path(const std::string& name) {
  return std::string(ODCA_FIXTURE_DIR) + "/" + name;
}

odca::Word word(const odca::WeightedOdca& m, const std::string& text) {
  return odca::parse_word(m.alphabet, text);
}

}  // namespace fixtures
