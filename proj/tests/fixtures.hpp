#pragma once

#include <string>

#include "odca/boolean.hpp"
#include "odca/model.hpp"
#include "odca/translate.hpp"

namespace fixtures {

// The two weighted machines and two boolean machines from the figures, built
// in code; the JSON files under fixtures/ are their serialized forms.
odca::WeightedOdca pad();       // prefix-aware decimal value function
odca::WeightedOdca pad_eta2();  // same with the accepting weight of q3 doubled
odca::WeightedOdca epp();       // equal-prefix-power counting function

odca::BooleanOdca l1();  // { a^n b a^n | n > 0 }
odca::BooleanOdca l3();  // { a^n u b v : u in (b+c)^m, v in (b+c)^2, m > n }

// Single counter state, sign-independent matrices: the machine is a weighted
// automaton in disguise.
odca::WeightedOdca counter_oblivious();

// Computes the zero function from every initialization.
odca::WeightedOdca zero_machine(const std::vector<char>& alphabet);

// Two initial states whose counter updates disagree once the counter is
// positive; shortest violating word "aa".
odca::WeightedOca violating_oca();

std::string fixture_path(const std::string& name);

odca::Word word(const odca::WeightedOdca& m, const std::string& text);

}  // namespace fixtures
