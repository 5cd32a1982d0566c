#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "odca/analysis.hpp"
#include "odca/boolean.hpp"
#include "odca/equiv.hpp"
#include "odca/errors.hpp"
#include "odca/io.hpp"
#include "odca/oracle.hpp"
#include "odca/reach.hpp"
#include "odca/translate.hpp"

namespace {

using ojson = nlohmann::ordered_json;

constexpr long long kCounterInputCap = 1'000'000;

void print_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

void check_counter_input(long long value, bool allow_large) {
  if (value > kCounterInputCap && !allow_large) {
    throw odca::InputError("counter value " + std::to_string(value) +
                           " exceeds the input cap; pass --allow-large-counters to override");
  }
}

odca::WeightedOdca load_weighted(const std::string& path) {
  return odca::parse_weighted_odca(odca::read_file(path));
}

odca::BooleanOdca load_boolean(const std::string& path) {
  return odca::parse_boolean_odca(odca::read_file(path));
}

std::vector<std::size_t> resolve_targets(const odca::WeightedOdca& m, const std::string& csv) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t end = std::min(csv.find(',', start), csv.size());
    const std::string name = csv.substr(start, end - start);
    if (name.empty()) throw odca::InputError("empty counter state name in --targets");
    const auto it = std::find(m.counter_names.begin(), m.counter_names.end(), name);
    if (it == m.counter_names.end()) {
      throw odca::InputError("counter state \"" + name + "\" is not part of the machine");
    }
    out.push_back(static_cast<std::size_t>(it - m.counter_names.begin()));
    if (end == csv.size()) break;
    start = end + 1;
  }
  return out;
}

ojson witness_json(const odca::WeightedOdca& m, const std::optional<odca::Word>& w) {
  if (!w) return nullptr;
  return odca::format_word(m.alphabet, *w);
}

int cmd_eval(const std::string& file, const std::string& word) {
  const odca::WeightedOdca m = load_weighted(file);
  std::cout << odca::eval(m, odca::parse_word(m.alphabet, word)).str() << "\n";
  return 0;
}

int report_equiv(const odca::WeightedOdca& a, const odca::EquivVerdict& v) {
  ojson out;
  out["verdict"] = v.equivalent ? "equivalent" : "not-equivalent";
  out["witness"] = witness_json(a, v.witness);
  out["bound_used"] = v.bound_used.str();
  out["complete"] = v.complete;
  print_json(out);
  return v.equivalent ? 0 : 1;
}

int cmd_equiv(const std::string& fa, const std::string& fb, std::optional<std::size_t> bound) {
  const odca::WeightedOdca a = load_weighted(fa);
  const odca::WeightedOdca b = load_weighted(fb);
  return report_equiv(a, odca::odca_equiv(a, b, bound));
}

int cmd_bool_equiv(const std::string& fa, const std::string& fb,
                   std::optional<std::size_t> bound) {
  const odca::BooleanOdca a = load_boolean(fa);
  const odca::BooleanOdca b = load_boolean(fb);
  const odca::EquivVerdict v = odca::bool_equiv(a, b, bound);
  ojson out;
  out["verdict"] = v.equivalent ? "equivalent" : "not-equivalent";
  out["witness"] = v.witness ? ojson(odca::format_word(a.alphabet, *v.witness)) : ojson(nullptr);
  out["bound_used"] = v.bound_used.str();
  out["complete"] = v.complete;
  print_json(out);
  return v.equivalent ? 0 : 1;
}

int cmd_reach(const std::string& file, const std::string& config_path,
              const std::string& space_path, const std::string& targets,
              const std::string& counter, std::optional<std::size_t> bound, bool allow_large) {
  const odca::WeightedOdca m = load_weighted(file);
  const odca::ConfigDoc doc = odca::parse_config(odca::read_file(config_path));
  check_counter_input(doc.counter_value, allow_large);
  const odca::Configuration c = odca::resolve_config(m, doc);
  const odca::VectorSpace v = odca::parse_vector_space(odca::read_file(space_path));
  const std::vector<std::size_t> s = resolve_targets(m, targets);

  odca::ReachResult r;
  if (counter == "any") {
    r = odca::covs_cover(m, c, v, s, bound);
  } else {
    long long value = 0;
    try {
      value = std::stoll(counter);
    } catch (const std::exception&) {
      throw odca::InputError("--counter expects a number or \"any\"");
    }
    if (value < 0) throw odca::InputError("--counter must be non-negative");
    check_counter_input(value, allow_large);
    r = odca::covs_reach(m, c, v, s, static_cast<std::size_t>(value), bound);
  }
  ojson out;
  out["verdict"] = r.witness ? "reachable" : "unreachable";
  out["witness"] = witness_json(m, r.witness);
  out["bound_used"] = std::to_string(r.bound_used);
  out["complete"] = r.complete;
  print_json(out);
  return r.witness ? 0 : 1;
}

int cmd_regular(const std::string& file) {
  const odca::WeightedOdca m = load_weighted(file);
  const odca::RegularityResult r = odca::is_regular(m);
  ojson out;
  out["verdict"] = r.regular ? "regular" : "not-regular";
  if (r.witness) {
    out["witness"] = ojson{{"prefix", odca::format_word(m.alphabet, r.witness->first)},
                           {"suffix", odca::format_word(m.alphabet, r.witness->second)}};
  } else {
    out["witness"] = nullptr;
  }
  print_json(out);
  return r.regular ? 0 : 1;
}

ojson cover_json(const odca::WeightedOdca& coverer, const odca::WeightedOdca& coveree,
                 const odca::CoverResult& r) {
  ojson out;
  out["verdict"] = r.covered ? "covered" : "not-covered";
  if (r.covered) {
    ojson partners = ojson::object();
    for (std::size_t q = 0; q < r.partner.size(); ++q) {
      partners[coveree.counter_names[q]] = coverer.counter_names[r.partner[q]];
    }
    out["partners"] = std::move(partners);
  } else {
    out["failure"] = ojson{{"state", coveree.counter_names[r.failure->coveree_state]},
                           {"unit", r.failure->basis_index}};
  }
  return out;
}

int cmd_cover(const std::string& fa, const std::string& fb, std::optional<std::size_t> bound) {
  const odca::WeightedOdca a = load_weighted(fa);
  const odca::WeightedOdca b = load_weighted(fb);
  const odca::CoverResult r = odca::covers(a, b, bound);
  print_json(cover_json(a, b, r));
  return r.covered ? 0 : 1;
}

int cmd_coverable(const std::string& fa, const std::string& fb,
                  std::optional<std::size_t> bound) {
  const odca::WeightedOdca a = load_weighted(fa);
  const odca::WeightedOdca b = load_weighted(fb);
  const odca::CoverableResult r = odca::coverable_equiv(a, b, bound);
  ojson out;
  out["verdict"] = r.equivalent ? "equivalent" : "not-equivalent";
  out["covers"] = cover_json(a, b, r.forward);
  out["covered_by"] = cover_json(b, a, r.backward);
  print_json(out);
  return r.equivalent ? 0 : 1;
}

int cmd_determinize(const std::string& file, const std::string& out_path) {
  const odca::BooleanOdca b = load_boolean(file);
  odca::write_file(out_path, odca::serialize(odca::reachable_part(odca::determinize(b))));
  return 0;
}

int cmd_translate(const std::string& file, const std::string& out_path) {
  const std::string text = odca::read_file(file);
  const std::string type = odca::document_type(text);
  if (type == "weighted-odca") {
    odca::write_file(out_path, odca::serialize(odca::odca_to_oca(odca::parse_weighted_odca(text))));
    return 0;
  }
  if (type == "weighted-oca") {
    const odca::WeightedOca oca = odca::parse_weighted_oca(text);
    try {
      odca::write_file(out_path, odca::serialize(odca::oca_to_odca(oca)));
    } catch (const odca::DeterminacyError& e) {
      ojson out;
      out["verdict"] = "not-counter-deterministic";
      out["witness"] = odca::format_word(oca.alphabet, e.violation.word);
      out["counters"] = ojson::array({e.violation.counter_a, e.violation.counter_b});
      print_json(out);
      return 1;
    }
    return 0;
  }
  throw odca::InputError("translate expects a weighted-odca or weighted-oca document");
}

int cmd_random(std::size_t states, std::size_t counter_states, std::size_t alphabet_size,
               std::uint64_t seed, const std::string& out_path) {
  odca::write_file(out_path,
                   odca::serialize(odca::random_odca(states, counter_states, alphabet_size, seed)));
  return 0;
}

int cmd_oracle_equiv(const std::string& fa, const std::string& fb, std::size_t max_len) {
  const odca::WeightedOdca a = load_weighted(fa);
  const odca::WeightedOdca b = load_weighted(fb);
  if (a.alphabet != b.alphabet) throw odca::InputError("oracle equiv: alphabets differ");
  const std::optional<odca::Word> w = odca::brute_equiv(a, b, max_len);
  ojson out;
  out["verdict"] = w ? "not-equivalent" : "equivalent";
  out["witness"] = witness_json(a, w);
  print_json(out);
  return w ? 1 : 0;
}

int cmd_oracle_reach(const std::string& file, const std::string& config_path,
                     const std::string& space_path, const std::string& targets,
                     const std::string& counter, std::size_t word_cap, std::size_t counter_cap,
                     bool allow_large) {
  const odca::WeightedOdca m = load_weighted(file);
  const odca::ConfigDoc doc = odca::parse_config(odca::read_file(config_path));
  check_counter_input(doc.counter_value, allow_large);
  const odca::Configuration c = odca::resolve_config(m, doc);
  const odca::VectorSpace v = odca::parse_vector_space(odca::read_file(space_path));
  const std::vector<std::size_t> s = resolve_targets(m, targets);
  std::optional<std::size_t> target_counter;
  if (counter != "any") {
    long long value = 0;
    try {
      value = std::stoll(counter);
    } catch (const std::exception&) {
      throw odca::InputError("--counter expects a number or \"any\"");
    }
    if (value < 0) throw odca::InputError("--counter must be non-negative");
    check_counter_input(value, allow_large);
    target_counter = static_cast<std::size_t>(value);
  }
  const std::optional<odca::Word> w =
      odca::brute_reach(m, c, v, s, target_counter, word_cap, counter_cap);
  ojson out;
  out["verdict"] = w ? "reachable" : "unreachable";
  out["witness"] = witness_json(m, w);
  print_json(out);
  return w ? 0 : 1;
}

int cmd_oracle_hankel(const std::string& file, std::size_t depth) {
  const odca::WeightedOdca m = load_weighted(file);
  const std::size_t rank = odca::hankel_rank(
      [&](const odca::Word& w) { return odca::eval(m, w); }, m.num_letters(), depth);
  ojson out;
  out["rank"] = rank;
  print_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted one-deterministic-counter automata toolkit"};
  app.require_subcommand(1);
  bool allow_large = false;
  app.add_flag("--allow-large-counters", allow_large,
               "accept counter inputs above " + std::to_string(kCounterInputCap));

  int code = 0;
  std::string file_a, file_b, word, out_path, config_path, space_path, targets;
  std::string counter = "any";
  std::optional<std::size_t> bound;
  std::size_t max_len = 8, depth = 3, word_cap = 8, counter_cap = 12;
  std::size_t states = 2, counter_states = 2, alphabet_size = 2;
  std::uint64_t seed = 0;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate the machine on a word");
  eval_cmd->add_option("file", file_a, "weighted-odca document")->required();
  eval_cmd->add_option("word", word, "input word (default empty)");
  eval_cmd->callback([&]() { code = cmd_eval(file_a, word); });

  auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two weighted machines");
  equiv_cmd->add_option("a", file_a)->required();
  equiv_cmd->add_option("b", file_b)->required();
  equiv_cmd->add_option("--bound", bound, "counter bound override");
  equiv_cmd->callback([&]() { code = cmd_equiv(file_a, file_b, bound); });

  auto* bool_cmd = app.add_subcommand("bool-equiv", "decide equivalence of two boolean machines");
  bool_cmd->add_option("a", file_a)->required();
  bool_cmd->add_option("b", file_b)->required();
  bool_cmd->add_option("--bound", bound, "counter bound override");
  bool_cmd->callback([&]() { code = cmd_bool_equiv(file_a, file_b, bound); });

  auto* reach_cmd = app.add_subcommand("reach", "co-vector-space reachability / coverability");
  reach_cmd->add_option("file", file_a)->required();
  reach_cmd->add_option("--config", config_path, "start configuration document")->required();
  reach_cmd->add_option("--space", space_path, "vector-space document to escape")->required();
  reach_cmd->add_option("--targets", targets, "comma-separated counter states")->required();
  reach_cmd->add_option("--counter", counter, "target counter value or \"any\"");
  reach_cmd->add_option("--bound", bound, "counter bound override");
  reach_cmd->callback(
      [&]() { code = cmd_reach(file_a, config_path, space_path, targets, counter, bound, allow_large); });

  auto* regular_cmd = app.add_subcommand("regular", "decide regularity");
  regular_cmd->add_option("file", file_a)->required();
  regular_cmd->callback([&]() { code = cmd_regular(file_a); });

  auto* cover_cmd = app.add_subcommand("cover", "does the first machine cover the second");
  cover_cmd->add_option("a", file_a, "coverer")->required();
  cover_cmd->add_option("b", file_b, "coveree")->required();
  cover_cmd->add_option("--bound", bound, "counter bound for the inner equivalence queries");
  cover_cmd->callback([&]() { code = cmd_cover(file_a, file_b, bound); });

  auto* coveq_cmd = app.add_subcommand("coverable-equiv", "mutual covering");
  coveq_cmd->add_option("a", file_a)->required();
  coveq_cmd->add_option("b", file_b)->required();
  coveq_cmd->add_option("--bound", bound, "counter bound for the inner equivalence queries");
  coveq_cmd->callback([&]() { code = cmd_coverable(file_a, file_b, bound); });

  auto* det_cmd = app.add_subcommand("determinize", "determinize a boolean machine");
  det_cmd->add_option("file", file_a)->required();
  det_cmd->add_option("-o,--output", out_path, "output path")->required();
  det_cmd->callback([&]() { code = cmd_determinize(file_a, out_path); });

  auto* trans_cmd = app.add_subcommand("translate", "translate between one-counter forms");
  trans_cmd->add_option("file", file_a)->required();
  trans_cmd->add_option("-o,--output", out_path, "output path")->required();
  trans_cmd->callback([&]() { code = cmd_translate(file_a, out_path); });

  auto* random_cmd = app.add_subcommand("random", "generate a seeded random machine");
  random_cmd->add_option("--states", states, "automaton states")->required();
  random_cmd->add_option("--counter-states", counter_states)->required();
  random_cmd->add_option("--alphabet", alphabet_size, "alphabet size")->required();
  random_cmd->add_option("--seed", seed)->required();
  random_cmd->add_option("-o,--output", out_path, "output path")->required();
  random_cmd->callback(
      [&]() { code = cmd_random(states, counter_states, alphabet_size, seed, out_path); });

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference baselines");
  oracle_cmd->require_subcommand(1);

  auto* oeq_cmd = oracle_cmd->add_subcommand("equiv", "exhaustive differential comparison");
  oeq_cmd->add_option("a", file_a)->required();
  oeq_cmd->add_option("b", file_b)->required();
  oeq_cmd->add_option("--max-len", max_len, "maximum word length");
  oeq_cmd->callback([&]() { code = cmd_oracle_equiv(file_a, file_b, max_len); });

  auto* oreach_cmd = oracle_cmd->add_subcommand("reach", "exhaustive reachability search");
  oreach_cmd->add_option("file", file_a)->required();
  oreach_cmd->add_option("--config", config_path)->required();
  oreach_cmd->add_option("--space", space_path)->required();
  oreach_cmd->add_option("--targets", targets)->required();
  oreach_cmd->add_option("--counter", counter, "target counter value or \"any\"");
  oreach_cmd->add_option("--word-cap", word_cap, "maximum word length");
  oreach_cmd->add_option("--counter-cap", counter_cap, "abandon branches above this counter");
  oreach_cmd->callback([&]() {
    code = cmd_oracle_reach(file_a, config_path, space_path, targets, counter, word_cap,
                            counter_cap, allow_large);
  });

  auto* ohankel_cmd = oracle_cmd->add_subcommand("hankel", "Hankel-matrix rank");
  ohankel_cmd->add_option("file", file_a)->required();
  ohankel_cmd->add_option("--depth", depth, "maximum length of row/column words");
  ohankel_cmd->callback([&]() { code = cmd_oracle_hankel(file_a, depth); });

  auto* orandom_cmd = oracle_cmd->add_subcommand("random", "generate a seeded random machine");
  orandom_cmd->add_option("--states", states)->required();
  orandom_cmd->add_option("--counter-states", counter_states)->required();
  orandom_cmd->add_option("--alphabet", alphabet_size)->required();
  orandom_cmd->add_option("--seed", seed)->required();
  orandom_cmd->add_option("-o,--output", out_path)->required();
  orandom_cmd->callback(
      [&]() { code = cmd_random(states, counter_states, alphabet_size, seed, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const odca::ResourceError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const odca::InputError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
