#pragma once

#include <string>

#include "odca/boolean.hpp"
#include "odca/linalg.hpp"
#include "odca/model.hpp"
#include "odca/translate.hpp"

namespace odca {

// JSON documents share an envelope {"type": ..., "version": "1"}. Parsing is
// strict: unknown fields, missing fields, and dimension mismatches are
// InputErrors. Serialization is canonical (fixed key order, canonical
// rationals, two-space indent, trailing newline), so serialize(parse(t))
// round-trips canonical inputs byte for byte.

std::string document_type(const std::string& text);

WeightedOdca parse_weighted_odca(const std::string& text);
BooleanOdca parse_boolean_odca(const std::string& text);
WeightedOca parse_weighted_oca(const std::string& text);
VectorSpace parse_vector_space(const std::string& text);

// Configurations name the counter state; resolve against a machine to run.
struct ConfigDoc {
  Vector x;
  std::string counter_state;
  long long counter_value = 0;
};
ConfigDoc parse_config(const std::string& text);
Configuration resolve_config(const WeightedOdca& odca, const ConfigDoc& doc);

std::string serialize(const WeightedOdca& odca);
std::string serialize(const BooleanOdca& b);
std::string serialize(const WeightedOca& oca);
std::string serialize(const VectorSpace& space);
std::string serialize(const ConfigDoc& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace odca
