// Acceptance harness: one line of output per criterion, nonzero exit when any
// criterion fails. Differential criteria compare the decision procedures
// against the brute-force baselines on seeded corpora.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "odca/analysis.hpp"
#include "odca/boolean.hpp"
#include "odca/equiv.hpp"
#include "odca/io.hpp"
#include "odca/oracle.hpp"
#include "odca/reach.hpp"
#include "odca/translate.hpp"

using odca::Configuration;
using odca::Rational;
using odca::Vector;
using odca::VectorSpace;
using odca::WeightedOdca;
using odca::Word;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      if (!ok) detail << "; ";
      ok = false;
      detail << msg;
    }
  }
};

std::vector<Word> words_up_to(std::size_t letters, std::size_t max_len) {
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

const std::vector<Rational>& weight_pool() {
  static const std::vector<Rational> pool = {Rational(-1), Rational(0), Rational(1),
                                             Rational(1, 2)};
  return pool;
}

struct ReachInstance {
  WeightedOdca m;
  VectorSpace v;
  std::vector<std::size_t> s;
  std::size_t target = 0;
};

ReachInstance make_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 2654435761ull + 17);
  const std::size_t nq = 1 + rng() % 3;
  const std::size_t nc = 1 + rng() % 3;
  ReachInstance inst{odca::random_odca(nq, nc, 2, weight_pool(), seed), VectorSpace(nq), {}, 0};

  const std::size_t basis_vectors = rng() % (nq + 1);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < basis_vectors; ++i) {
    Vector v(nq);
    for (std::size_t q = 0; q < nq; ++q) v[q] = weight_pool()[rng() % weight_pool().size()];
    basis.push_back(std::move(v));
  }
  inst.v = VectorSpace::span_of(nq, basis);

  while (inst.s.empty()) {
    for (std::size_t p = 0; p < nc; ++p) {
      if (rng() % 2 == 0) inst.s.push_back(p);
    }
  }
  inst.target = rng() % 4;
  return inst;
}

// Shared between criteria 3 and 4.
struct ReachOutcome {
  std::size_t k = 0;
  std::size_t target = 0;
  std::optional<Word> witness;
  long long peak = 0;
};

std::vector<ReachOutcome> g_reach_outcomes;

void criterion_worked_example(Check& c) {
  const WeightedOdca m = fixtures::pad();
  const Word w = fixtures::word(m, "abaaab");
  c.expect(odca::eval(m, w) == Rational(6), "eval(abaaab) != 6");

  const std::vector<std::vector<int>> xs = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                                            {0, 0, 1, 1}, {0, 0, 1, 3}, {0, 0, 1, 6}};
  const std::vector<std::size_t> ps = {0, 1, 2, 2, 2, 2};
  const std::vector<long long> ns = {1, 0, 0, 1, 2, 1};
  Configuration cur = odca::initial_config(m);
  for (std::size_t i = 0; i < w.size(); ++i) {
    cur = odca::step(m, cur, w[i]);
    Vector want;
    for (int x : xs[i]) want.push_back(Rational(x));
    c.expect(cur.x == want && cur.p == ps[i] && cur.n == ns[i],
             "configuration after step " + std::to_string(i + 1) + " is off");
  }

  const odca::RunResult r = odca::run(m, odca::initial_config(m), w);
  c.expect(r.counter_effect == 1, "counter effect != 1");
  odca::Matrix want(4, 4);
  const std::vector<std::vector<int>> rows = {
      {0, 0, 1, 6}, {0, 0, 1, 14}, {0, 0, 1, 46}, {0, 0, 0, 64}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) want.at(i, j) = rows[i][j];
  }
  c.expect(r.weight_effect == want, "weight-effect matrix mismatch");
}

void criterion_unfolding(Check& c) {
  const std::vector<Word> words = words_up_to(2, 8);
  c.expect(words.size() >= 500, "word corpus too small");
  for (const WeightedOdca& m : {fixtures::pad(), fixtures::epp()}) {
    const odca::Unfolding u = odca::unfold(m, 10);
    for (const Word& w : words) {
      if (odca::eval_controlled(u.wa, w) != odca::eval(m, w)) {
        c.expect(false, "unfolding disagrees on " + odca::format_word(m.alphabet, w));
        return;
      }
    }
  }
}

void criterion_reach_differential(Check& c) {
  g_reach_outcomes.clear();
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const ReachInstance inst = make_instance(seed);
    const Configuration start = odca::initial_config(inst.m);
    const odca::ReachResult fast =
        odca::covs_reach(inst.m, start, inst.v, inst.s, inst.target);
    const std::optional<Word> slow =
        odca::brute_reach(inst.m, start, inst.v, inst.s, inst.target, 8, 12);

    if (slow) {
      if (!fast.witness || *fast.witness != *slow) {
        c.expect(false, "seed " + std::to_string(seed) + ": witness mismatch");
        return;
      }
    } else if (fast.witness && fast.witness->size() <= 8) {
      c.expect(false, "seed " + std::to_string(seed) + ": witness missed by the baseline");
      return;
    }

    ReachOutcome out;
    out.k = inst.m.fsm_size * inst.m.num_counter_states();
    out.target = inst.target;
    out.witness = fast.witness;
    if (fast.witness) {
      const odca::RunResult r = odca::run(inst.m, start, *fast.witness);
      out.peak = r.max_counter;
    }
    g_reach_outcomes.push_back(std::move(out));
  }
  c.expect(g_reach_outcomes.size() == 200, "corpus incomplete");
}

void criterion_witness_bounds(Check& c) {
  c.expect(!g_reach_outcomes.empty(), "no witnesses recorded (criterion 3 did not run)");
  std::size_t found = 0;
  for (std::size_t i = 0; i < g_reach_outcomes.size(); ++i) {
    const ReachOutcome& out = g_reach_outcomes[i];
    if (!out.witness) continue;
    ++found;
    const std::size_t k = out.k;
    const std::size_t len_bound = k * k * k + out.target * k;
    c.expect(out.witness->size() <= len_bound,
             "instance " + std::to_string(i + 1) + ": witness longer than K^3 + m*K");
    c.expect(out.peak < static_cast<long long>(out.target + k * k),
             "instance " + std::to_string(i + 1) + ": replay peak reached max(n,m) + K^2");
  }
  c.expect(found > 0, "corpus produced no witnesses at all");
}

void criterion_cover_differential(Check& c) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const ReachInstance inst = make_instance(seed);
    const Configuration start = odca::initial_config(inst.m);
    const odca::ReachResult fast = odca::covs_cover(inst.m, start, inst.v, inst.s);
    const std::optional<Word> slow =
        odca::brute_reach(inst.m, start, inst.v, inst.s, std::nullopt, 8, 12);

    if (slow) {
      if (!fast.witness || *fast.witness != *slow) {
        c.expect(false, "seed " + std::to_string(seed) + ": witness mismatch");
        return;
      }
    } else if (fast.witness && fast.witness->size() <= 8) {
      c.expect(false, "seed " + std::to_string(seed) + ": witness missed by the baseline");
      return;
    }
  }
}

void criterion_equivalence(Check& c) {
  const WeightedOdca pad = fixtures::pad();
  const WeightedOdca perturbed = fixtures::pad_eta2();

  const odca::EquivVerdict v = odca::odca_equiv(pad, perturbed, 8);
  const std::optional<Word> brute = odca::brute_equiv(pad, perturbed, 6);
  c.expect(!v.equivalent && v.witness && v.witness->size() == 4 &&
               odca::format_word(pad.alphabet, *v.witness) == "abaa",
           "perturbed witness is not abaa");
  c.expect(brute && v.witness && *brute == *v.witness, "decision and baseline witnesses differ");
  c.expect(odca::odca_equiv(pad, pad, 8).equivalent, "self-equivalence failed");

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const WeightedOdca a =
        odca::random_odca(1 + rng() % 3, 1 + rng() % 3, 2, weight_pool(), seed);
    const WeightedOdca b =
        odca::random_odca(1 + rng() % 3, 1 + rng() % 3, 2, weight_pool(), seed + 100000);
    const odca::EquivVerdict fast = odca::odca_equiv(a, b, 12);
    const std::optional<Word> slow = odca::brute_equiv(a, b, 8);
    if (fast.equivalent) {
      if (slow) {
        c.expect(false, "seed " + std::to_string(seed) + ": equivalent verdict contradicted");
        return;
      }
    } else if (fast.witness->size() <= 8) {
      if (!slow || *slow != *fast.witness) {
        c.expect(false, "seed " + std::to_string(seed) + ": witness mismatch");
        return;
      }
    } else if (slow) {
      c.expect(false, "seed " + std::to_string(seed) + ": baseline witness missed");
      return;
    }
  }
}

void criterion_regularity(Check& c) {
  c.expect(odca::is_regular(fixtures::counter_oblivious()).regular,
           "counter-oblivious fixture not regular");
  const odca::RegularityResult r = odca::is_regular(fixtures::pad());
  c.expect(!r.regular && r.witness.has_value(), "decimal machine not flagged irregular");

  const WeightedOdca pad = fixtures::pad();
  auto f = [&pad](const Word& w) { return odca::eval(pad, w); };
  const std::vector<std::size_t> frozen = {1, 4, 8, 12};
  for (std::size_t depth = 2; depth <= 5; ++depth) {
    const std::size_t rank = odca::hankel_rank(f, 2, depth);
    c.expect(rank == frozen[depth - 2],
             "hankel rank at depth " + std::to_string(depth) + " drifted");
  }
  for (std::size_t i = 1; i < frozen.size(); ++i) {
    c.expect(frozen[i - 1] < frozen[i], "frozen ranks not strictly increasing");
  }
}

void criterion_covering(Check& c) {
  std::vector<std::pair<std::string, WeightedOdca>> fleet = {
      {"prefix-aware decimal", fixtures::pad()},
      {"accepting-weight variant", fixtures::pad_eta2()},
      {"equal prefix power", fixtures::epp()},
      {"a^n b a^n (embedded)",
       odca::embed_rational(odca::reachable_part(odca::determinize(fixtures::l1())))},
      {"threshold language (embedded)",
       odca::embed_rational(odca::reachable_part(odca::determinize(fixtures::l3())))},
  };
  for (const auto& [name, m] : fleet) {
    c.expect(odca::covers(m, m, 8).covered, name + " does not cover itself");
  }

  const odca::CoverResult fail =
      odca::covers(fixtures::zero_machine({'a', 'b'}), fixtures::pad(), 8);
  c.expect(!fail.covered && fail.failure.has_value() && fail.failure->coveree_state == 0 &&
               fail.failure->basis_index == 0,
           "zero machine covering failure not reported at the first zero-function check");

  c.expect(odca::coverable_equiv(fixtures::pad(), fixtures::pad(), 8).equivalent,
           "coverable_equiv(A,A) false for the decimal machine");
  c.expect(odca::coverable_equiv(fixtures::epp(), fixtures::epp(), 8).equivalent,
           "coverable_equiv(A,A) false for the prefix power machine");
}

void criterion_boolean(Check& c) {
  const odca::BooleanOdca l1 = fixtures::l1();
  const odca::BooleanOdca det = odca::determinize(l1);
  std::size_t compared = 0;
  for (const Word& w : words_up_to(2, 8)) {
    if (w.empty()) continue;
    ++compared;
    if (odca::bool_eval(det, w) != odca::bool_eval(l1, w)) {
      c.expect(false, "determinization differs on " + odca::format_word(l1.alphabet, w));
      return;
    }
  }
  c.expect(compared == 510, "expected 510 nonempty words");
  c.expect(odca::is_deterministic(det).deterministic, "determinize output not deterministic");

  c.expect(odca::bool_equiv(l1, l1, 16).equivalent, "L1 not equivalent to itself");

  odca::BooleanOdca flipped = l1;
  flipped.eta ^= 0b100;  // toggle acceptance of the accepting state
  const odca::EquivVerdict v = odca::bool_equiv(l1, flipped, 16);
  c.expect(!v.equivalent && v.witness &&
               odca::format_word(l1.alphabet, *v.witness) == "aba",
           "flipped-acceptance witness is not aba");
}

void criterion_translation(Check& c) {
  const std::vector<Word> words = words_up_to(2, 8);
  for (const WeightedOdca& m : {fixtures::pad(), fixtures::epp()}) {
    const odca::WeightedOca oca = odca::odca_to_oca(m);
    const WeightedOdca rt = odca::oca_to_odca(oca);
    for (const Word& w : words) {
      if (odca::oca_eval(oca, w) != odca::eval(m, w) || odca::eval(rt, w) != odca::eval(m, w)) {
        c.expect(false, "round trip differs on " + odca::format_word(m.alphabet, w));
        return;
      }
    }
  }

  const auto res = odca::check_counter_determinacy(fixtures::violating_oca());
  const auto* violation = std::get_if<odca::DeterminacyViolation>(&res);
  c.expect(violation != nullptr, "violating automaton accepted");
  if (violation) {
    c.expect(!violation->word.empty() && violation->counter_a != violation->counter_b,
             "violation witness not concrete");
  }
}

std::string strip_comments(const std::string& src) {
  std::string out;
  out.reserve(src.size());
  bool line = false, block = false, str = false;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const char ch = src[i];
    const char next = i + 1 < src.size() ? src[i + 1] : '\0';
    if (line) {
      if (ch == '\n') {
        line = false;
        out += ch;
      }
      continue;
    }
    if (block) {
      if (ch == '*' && next == '/') {
        block = false;
        ++i;
      }
      continue;
    }
    if (str) {
      if (ch == '\\') {
        out += ch;
        if (next) out += next;
        ++i;
        continue;
      }
      if (ch == '"') str = false;
      out += ch;
      continue;
    }
    if (ch == '"') {
      str = true;
      out += ch;
      continue;
    }
    if (ch == '/' && next == '/') {
      line = true;
      ++i;
      continue;
    }
    if (ch == '/' && next == '*') {
      block = true;
      ++i;
      continue;
    }
    out += ch;
  }
  return out;
}

void criterion_exactness(Check& c) {
  // No floating-point types or literals anywhere in the library sources
  // (string literals and comments aside).
  const std::regex fp(R"(\b(float|double)\b|\b\d+\.\d)");
  std::size_t scanned = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(ODCA_CORE_DIR)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext != ".cpp" && ext != ".hpp") continue;
    ++scanned;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string code = strip_comments(buf.str());
    if (std::regex_search(code, fp)) {
      c.expect(false, "floating-point token in " + entry.path().filename().string());
    }
  }
  c.expect(scanned >= 18, "library source scan looks incomplete");

  // Identities that break under any fixed-precision arithmetic.
  Rational third = Rational(1, 3);
  c.expect(third * Rational(3) == Rational(1), "1/3 * 3 != 1");
  Rational tenth_sum;
  for (int i = 0; i < 10; ++i) tenth_sum += Rational(1, 10);
  c.expect(tenth_sum == Rational(1), "ten tenths != 1");
  odca::BigInt big = 1;
  for (int i = 0; i < 64; ++i) big *= 10;
  c.expect(Rational(big) + Rational(1) - Rational(big) == Rational(1),
           "cancellation at 10^64 lost precision");

  static_assert(std::is_same_v<decltype(odca::eval(std::declval<const WeightedOdca&>(),
                                                   std::declval<const Word&>())),
                               Rational>);
}

struct Criterion {
  int number;
  std::string name;
  std::function<void(Check&)> fn;
  double limit_seconds;  // 0 = no stated limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked-example reproduction", criterion_worked_example, 1.0},
      {2, "unfolding soundness", criterion_unfolding, 10.0},
      {3, "reachability differential", criterion_reach_differential, 120.0},
      {4, "witness bound properties", criterion_witness_bounds, 0.0},
      {5, "coverability differential", criterion_cover_differential, 0.0},
      {6, "equivalence", criterion_equivalence, 120.0},
      {7, "regularity", criterion_regularity, 0.0},
      {8, "covering", criterion_covering, 0.0},
      {9, "boolean machines", criterion_boolean, 0.0},
      {10, "translation round trips", criterion_translation, 0.0},
      {11, "exact arithmetic", criterion_exactness, 0.0},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.fn(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs > cr.limit_seconds) {
      check.expect(false, "exceeded the " + std::to_string(cr.limit_seconds) + "s budget");
    }

    std::ostringstream line;
    line << "criterion " << (cr.number < 10 ? " " : "") << cr.number << "  "
         << (check.ok ? "PASS" : "FAIL") << "  ";
    line.setf(std::ios::fixed);
    line.precision(2);
    line << secs << "s  " << cr.name;
    if (!check.ok) line << "  [" << check.detail.str() << "]";
    std::cout << line.str() << "\n";
    if (!check.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
