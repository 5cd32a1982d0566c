#include "odca/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "odca/errors.hpp"

namespace odca {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void check_keys(const json& obj, const std::vector<std::string>& keys, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + " must be an object");
  for (const auto& item : obj.items()) {
    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
      throw InputError("unknown field \"" + item.key() + "\" in " + where);
    }
  }
  for (const std::string& k : keys) {
    if (!obj.contains(k)) throw InputError(where + " is missing \"" + k + "\"");
  }
}

void check_envelope(const json& j, const std::string& type) {
  if (!j.is_object()) throw InputError("document root must be an object");
  if (!j.contains("type") || !j["type"].is_string()) {
    throw InputError("document has no \"type\" field");
  }
  if (j["type"].get<std::string>() != type) {
    throw InputError("expected a " + type + " document, found \"" +
                     j["type"].get<std::string>() + "\"");
  }
  if (!j.contains("version") || j["version"] != json("1")) {
    throw InputError("unsupported document version, expected \"1\"");
  }
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + " must be a string");
  return v.get<std::string>();
}

long long get_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + " must be an integer");
  return v.get<long long>();
}

std::size_t get_size(const json& v, const std::string& where) {
  const long long n = get_int(v, where);
  if (n < 0) throw InputError(where + " must be non-negative");
  return static_cast<std::size_t>(n);
}

char get_letter(const json& v, const std::string& where) {
  const std::string s = get_string(v, where);
  if (s.size() != 1) throw InputError(where + " must be a single symbol");
  return s[0];
}

Rational get_rational(const json& v, const std::string& where) {
  const std::string s = get_string(v, where);
  try {
    return Rational::parse(s);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Vector get_vector(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array() || v.size() != dim) {
    throw InputError(where + " must be an array of " + std::to_string(dim) + " rationals");
  }
  Vector out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out.push_back(get_rational(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Matrix get_matrix(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array() || v.size() != dim) {
    throw InputError(where + " must be an array of " + std::to_string(dim) + " rows");
  }
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Vector row = get_vector(v[i], dim, where + "[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = row[j];
  }
  return m;
}

std::vector<char> get_alphabet(const json& v) {
  if (!v.is_array() || v.empty()) throw InputError("alphabet must be a non-empty array");
  std::vector<char> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(get_letter(v[i], "alphabet[" + std::to_string(i) + "]"));
  }
  if (std::set<char>(out.begin(), out.end()).size() != out.size()) {
    throw InputError("alphabet symbols are not distinct");
  }
  return out;
}

struct CounterPart {
  std::vector<std::string> names;
  std::size_t initial = 0;
  std::vector<std::vector<CounterMove>> delta0;
  std::vector<std::vector<CounterMove>> delta1;
};

std::vector<std::vector<CounterMove>> get_delta(const json& v, const char* name,
                                                const std::vector<std::string>& states,
                                                const std::vector<char>& alphabet, int lo) {
  if (!v.is_object()) throw InputError(std::string(name) + " must be an object");
  for (const auto& item : v.items()) {
    if (std::find(states.begin(), states.end(), item.key()) == states.end()) {
      throw InputError(std::string(name) + " has an entry for unknown state \"" + item.key() +
                       "\"");
    }
  }
  std::vector<std::vector<CounterMove>> out(states.size(),
                                            std::vector<CounterMove>(alphabet.size()));
  for (std::size_t p = 0; p < states.size(); ++p) {
    if (!v.contains(states[p])) {
      throw InputError(std::string(name) + "(" + states[p] + ") is missing");
    }
    const json& row = v[states[p]];
    if (!row.is_object()) throw InputError(std::string(name) + "(" + states[p] + ") must be an object");
    for (const auto& item : row.items()) {
      if (item.key().size() != 1 ||
          std::find(alphabet.begin(), alphabet.end(), item.key()[0]) == alphabet.end()) {
        throw InputError(std::string(name) + "(" + states[p] + ") has an entry for unknown symbol \"" +
                         item.key() + "\"");
      }
    }
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      const std::string letter(1, alphabet[a]);
      const std::string where = std::string(name) + "(" + states[p] + "," + letter + ")";
      if (!row.contains(letter)) throw InputError(where + " is missing");
      check_keys(row[letter], {"target", "effect"}, where);
      const std::string target = get_string(row[letter]["target"], where + " target");
      const auto it = std::find(states.begin(), states.end(), target);
      if (it == states.end()) throw InputError(where + " targets unknown state \"" + target + "\"");
      const long long effect = get_int(row[letter]["effect"], where + " effect");
      if (effect < lo || effect > 1) {
        throw InputError(where + " has effect " + std::to_string(effect));
      }
      out[p][a] = CounterMove{static_cast<std::size_t>(it - states.begin()),
                              static_cast<int>(effect)};
    }
  }
  return out;
}

CounterPart get_counter_part(const json& j, const std::vector<char>& alphabet) {
  const json& c = j["counter"];
  check_keys(c, {"states", "initial", "delta0", "delta1"}, "counter");
  CounterPart out;
  if (!c["states"].is_array() || c["states"].empty()) {
    throw InputError("counter states must be a non-empty array");
  }
  for (std::size_t i = 0; i < c["states"].size(); ++i) {
    out.names.push_back(get_string(c["states"][i], "counter states[" + std::to_string(i) + "]"));
  }
  if (std::set<std::string>(out.names.begin(), out.names.end()).size() != out.names.size()) {
    throw InputError("counter state names are not distinct");
  }
  const std::string initial = get_string(c["initial"], "counter initial");
  const auto it = std::find(out.names.begin(), out.names.end(), initial);
  if (it == out.names.end()) {
    throw InputError("initial counter state \"" + initial + "\" is not declared");
  }
  out.initial = static_cast<std::size_t>(it - out.names.begin());
  out.delta0 = get_delta(c["delta0"], "delta0", out.names, alphabet, 0);
  out.delta1 = get_delta(c["delta1"], "delta1", out.names, alphabet, -1);
  return out;
}

json counter_part_json(const std::vector<std::string>& names, std::size_t initial,
                       const std::vector<std::vector<CounterMove>>& delta0,
                       const std::vector<std::vector<CounterMove>>& delta1,
                       const std::vector<char>& alphabet) {
  auto delta_json = [&](const std::vector<std::vector<CounterMove>>& d) {
    json out = json::object();
    for (std::size_t p = 0; p < names.size(); ++p) {
      json row = json::object();
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        row[std::string(1, alphabet[a])] =
            json{{"target", names[d[p][a].target]}, {"effect", d[p][a].effect}};
      }
      out[names[p]] = std::move(row);
    }
    return out;
  };
  json c;
  c["states"] = names;
  c["initial"] = names[initial];
  c["delta0"] = delta_json(delta0);
  c["delta1"] = delta_json(delta1);
  return c;
}

json alphabet_json(const std::vector<char>& alphabet) {
  json out = json::array();
  for (char a : alphabet) out.push_back(std::string(1, a));
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(r.str());
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

std::uint64_t get_state_set(const json& v, std::size_t size, const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be an array of state indices");
  std::uint64_t mask = 0;
  for (const json& e : v) {
    const std::size_t i = get_size(e, where + " entry");
    if (i >= size) throw InputError(where + " mentions state " + std::to_string(i) +
                                    ", automaton has " + std::to_string(size));
    if ((mask >> i) & 1) throw InputError(where + " repeats state " + std::to_string(i));
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

json state_set_json(std::uint64_t mask, std::size_t size) {
  json out = json::array();
  for (std::size_t i = 0; i < size; ++i) {
    if ((mask >> i) & 1) out.push_back(i);
  }
  return out;
}

void throw_first(const std::vector<std::string>& bad) {
  if (!bad.empty()) throw InputError(bad.front());
}

}  // namespace

std::string document_type(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw InputError("document has no \"type\" field");
  }
  return j["type"].get<std::string>();
}

WeightedOdca parse_weighted_odca(const std::string& text) {
  const json j = parse_json(text);
  check_envelope(j, "weighted-odca");
  check_keys(j, {"type", "version", "alphabet", "counter", "automaton"}, "document");

  WeightedOdca m;
  m.alphabet = get_alphabet(j["alphabet"]);
  CounterPart c = get_counter_part(j, m.alphabet);
  m.counter_names = std::move(c.names);
  m.initial_counter = c.initial;
  m.delta0 = std::move(c.delta0);
  m.delta1 = std::move(c.delta1);

  const json& au = j["automaton"];
  check_keys(au, {"states", "lambda", "eta", "delta"}, "automaton");
  m.fsm_size = get_size(au["states"], "automaton states");
  if (m.fsm_size == 0) throw InputError("automaton states must be positive");
  m.lambda = get_vector(au["lambda"], m.fsm_size, "lambda");
  m.eta = get_vector(au["eta"], m.fsm_size, "eta");
  const json& d = au["delta"];
  if (!d.is_object()) throw InputError("automaton delta must be an object");
  for (const auto& item : d.items()) {
    if (item.key().size() != 1 ||
        std::find(m.alphabet.begin(), m.alphabet.end(), item.key()[0]) == m.alphabet.end()) {
      throw InputError("automaton delta has an entry for unknown symbol \"" + item.key() + "\"");
    }
  }
  for (char a : m.alphabet) {
    const std::string letter(1, a);
    const std::string where = "automaton delta(" + letter + ")";
    if (!d.contains(letter)) throw InputError(where + " is missing");
    check_keys(d[letter], {"zero", "positive"}, where);
    m.delta_zero.push_back(get_matrix(d[letter]["zero"], m.fsm_size, where + " zero"));
    m.delta_pos.push_back(get_matrix(d[letter]["positive"], m.fsm_size, where + " positive"));
  }
  throw_first(validate(m));
  return m;
}

std::string serialize(const WeightedOdca& odca) {
  json j;
  j["type"] = "weighted-odca";
  j["version"] = "1";
  j["alphabet"] = alphabet_json(odca.alphabet);
  j["counter"] = counter_part_json(odca.counter_names, odca.initial_counter, odca.delta0,
                                   odca.delta1, odca.alphabet);
  json au;
  au["states"] = odca.fsm_size;
  au["lambda"] = vector_json(odca.lambda);
  au["eta"] = vector_json(odca.eta);
  json d = json::object();
  for (std::size_t a = 0; a < odca.num_letters(); ++a) {
    d[std::string(1, odca.alphabet[a])] = json{{"zero", matrix_json(odca.delta_zero[a])},
                                               {"positive", matrix_json(odca.delta_pos[a])}};
  }
  au["delta"] = std::move(d);
  j["automaton"] = std::move(au);
  return j.dump(2) + "\n";
}

BooleanOdca parse_boolean_odca(const std::string& text) {
  const json j = parse_json(text);
  check_envelope(j, "boolean-odca");
  check_keys(j, {"type", "version", "alphabet", "counter", "automaton"}, "document");

  BooleanOdca m;
  m.alphabet = get_alphabet(j["alphabet"]);
  CounterPart c = get_counter_part(j, m.alphabet);
  m.counter_names = std::move(c.names);
  m.initial_counter = c.initial;
  m.delta0 = std::move(c.delta0);
  m.delta1 = std::move(c.delta1);

  const json& au = j["automaton"];
  check_keys(au, {"states", "lambda", "eta", "delta"}, "automaton");
  m.fsm_size = get_size(au["states"], "automaton states");
  if (m.fsm_size == 0 || m.fsm_size > 64) {
    throw InputError("automaton states must be between 1 and 64");
  }
  m.lambda = get_state_set(au["lambda"], m.fsm_size, "lambda");
  m.eta = get_state_set(au["eta"], m.fsm_size, "eta");
  const json& d = au["delta"];
  if (!d.is_object()) throw InputError("automaton delta must be an object");
  for (const auto& item : d.items()) {
    if (item.key().size() != 1 ||
        std::find(m.alphabet.begin(), m.alphabet.end(), item.key()[0]) == m.alphabet.end()) {
      throw InputError("automaton delta has an entry for unknown symbol \"" + item.key() + "\"");
    }
  }
  auto rows = [&](const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != m.fsm_size) {
      throw InputError(where + " must be an array of " + std::to_string(m.fsm_size) + " rows");
    }
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < m.fsm_size; ++i) {
      out.push_back(get_state_set(v[i], m.fsm_size, where + "[" + std::to_string(i) + "]"));
    }
    return out;
  };
  for (char a : m.alphabet) {
    const std::string letter(1, a);
    const std::string where = "automaton delta(" + letter + ")";
    if (!d.contains(letter)) throw InputError(where + " is missing");
    check_keys(d[letter], {"zero", "positive"}, where);
    m.delta_zero.push_back(rows(d[letter]["zero"], where + " zero"));
    m.delta_pos.push_back(rows(d[letter]["positive"], where + " positive"));
  }
  throw_first(validate(m));
  return m;
}

std::string serialize(const BooleanOdca& b) {
  json j;
  j["type"] = "boolean-odca";
  j["version"] = "1";
  j["alphabet"] = alphabet_json(b.alphabet);
  j["counter"] =
      counter_part_json(b.counter_names, b.initial_counter, b.delta0, b.delta1, b.alphabet);
  json au;
  au["states"] = b.fsm_size;
  au["lambda"] = state_set_json(b.lambda, b.fsm_size);
  au["eta"] = state_set_json(b.eta, b.fsm_size);
  json d = json::object();
  for (std::size_t a = 0; a < b.num_letters(); ++a) {
    json zero = json::array();
    json pos = json::array();
    for (std::size_t i = 0; i < b.fsm_size; ++i) {
      zero.push_back(state_set_json(b.delta_zero[a][i], b.fsm_size));
      pos.push_back(state_set_json(b.delta_pos[a][i], b.fsm_size));
    }
    d[std::string(1, b.alphabet[a])] = json{{"zero", std::move(zero)}, {"positive", std::move(pos)}};
  }
  au["delta"] = std::move(d);
  j["automaton"] = std::move(au);
  return j.dump(2) + "\n";
}

WeightedOca parse_weighted_oca(const std::string& text) {
  const json j = parse_json(text);
  check_envelope(j, "weighted-oca");
  check_keys(j, {"type", "version", "alphabet", "states", "lambda", "eta", "trans0", "trans1"},
             "document");

  WeightedOca m;
  m.alphabet = get_alphabet(j["alphabet"]);
  m.size = get_size(j["states"], "states");
  if (m.size == 0) throw InputError("states must be positive");
  m.lambda = get_vector(j["lambda"], m.size, "lambda");
  m.eta = get_vector(j["eta"], m.size, "eta");

  auto get_trans = [&](const json& v, const char* name, int lo) {
    if (!v.is_array()) throw InputError(std::string(name) + " must be an array");
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, OcaMove> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const std::string where = std::string(name) + "[" + std::to_string(k) + "]";
      check_keys(v[k], {"from", "letter", "to", "effect", "weight"}, where);
      const std::size_t from = get_size(v[k]["from"], where + " from");
      const std::size_t to = get_size(v[k]["to"], where + " to");
      if (from >= m.size || to >= m.size) throw InputError(where + " is out of range");
      const char letter = get_letter(v[k]["letter"], where + " letter");
      const auto idx = m.letter_index(letter);
      if (!idx) throw InputError(where + " uses unknown symbol \"" + std::string(1, letter) + "\"");
      const long long effect = get_int(v[k]["effect"], where + " effect");
      if (effect < lo || effect > 1) throw InputError(where + " has effect " + std::to_string(effect));
      const Rational w = get_rational(v[k]["weight"], where + " weight");
      if (w.is_zero()) throw InputError(where + " has weight 0; drop absent transitions");
      if (!out.emplace(std::make_tuple(from, *idx, to), OcaMove{static_cast<int>(effect), w})
               .second) {
        throw InputError(where + " repeats an earlier transition");
      }
    }
    return out;
  };
  m.trans0 = get_trans(j["trans0"], "trans0", 0);
  m.trans1 = get_trans(j["trans1"], "trans1", -1);
  throw_first(validate(m));
  return m;
}

std::string serialize(const WeightedOca& oca) {
  json j;
  j["type"] = "weighted-oca";
  j["version"] = "1";
  j["alphabet"] = alphabet_json(oca.alphabet);
  j["states"] = oca.size;
  j["lambda"] = vector_json(oca.lambda);
  j["eta"] = vector_json(oca.eta);
  auto trans_json = [&](const auto& trans) {
    json out = json::array();
    for (const auto& [key, mv] : trans) {
      const auto& [from, a, to] = key;
      out.push_back(json{{"from", from},
                         {"letter", std::string(1, oca.alphabet[a])},
                         {"to", to},
                         {"effect", mv.effect},
                         {"weight", mv.weight.str()}});
    }
    return out;
  };
  j["trans0"] = trans_json(oca.trans0);
  j["trans1"] = trans_json(oca.trans1);
  return j.dump(2) + "\n";
}

VectorSpace parse_vector_space(const std::string& text) {
  const json j = parse_json(text);
  check_envelope(j, "vector-space");
  check_keys(j, {"type", "version", "dimension", "basis"}, "document");
  const std::size_t dim = get_size(j["dimension"], "dimension");
  if (!j["basis"].is_array()) throw InputError("basis must be an array");
  VectorSpace space(dim);
  for (std::size_t i = 0; i < j["basis"].size(); ++i) {
    space.insert(get_vector(j["basis"][i], dim, "basis[" + std::to_string(i) + "]"));
  }
  return space;
}

std::string serialize(const VectorSpace& space) {
  json j;
  j["type"] = "vector-space";
  j["version"] = "1";
  j["dimension"] = space.ambient_dim();
  json basis = json::array();
  for (const Vector& b : space.basis()) basis.push_back(vector_json(b));
  j["basis"] = std::move(basis);
  return j.dump(2) + "\n";
}

ConfigDoc parse_config(const std::string& text) {
  const json j = parse_json(text);
  check_envelope(j, "config");
  check_keys(j, {"type", "version", "vector", "counter_state", "counter_value"}, "document");
  ConfigDoc doc;
  if (!j["vector"].is_array()) throw InputError("vector must be an array");
  doc.x = get_vector(j["vector"], j["vector"].size(), "vector");
  doc.counter_state = get_string(j["counter_state"], "counter_state");
  doc.counter_value = get_int(j["counter_value"], "counter_value");
  if (doc.counter_value < 0) throw InputError("counter_value must be non-negative");
  return doc;
}

std::string serialize(const ConfigDoc& doc) {
  json j;
  j["type"] = "config";
  j["version"] = "1";
  j["vector"] = vector_json(doc.x);
  j["counter_state"] = doc.counter_state;
  j["counter_value"] = doc.counter_value;
  return j.dump(2) + "\n";
}

Configuration resolve_config(const WeightedOdca& odca, const ConfigDoc& doc) {
  const auto it =
      std::find(odca.counter_names.begin(), odca.counter_names.end(), doc.counter_state);
  if (it == odca.counter_names.end()) {
    throw InputError("counter state \"" + doc.counter_state + "\" is not part of the machine");
  }
  if (doc.x.size() != odca.fsm_size) {
    throw InputError("configuration vector has dimension " + std::to_string(doc.x.size()) +
                     ", machine has " + std::to_string(odca.fsm_size) + " states");
  }
  Configuration c;
  c.x = doc.x;
  c.p = static_cast<std::size_t>(it - odca.counter_names.begin());
  c.n = doc.counter_value;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
  if (!out) throw InputError("cannot write file: " + path);
}

}  // namespace odca
