#pragma once

#include "json.hpp"
#include "qc/rootdata.hpp"

namespace qc {

using Json = nlohmann::ordered_json;

/// Parsed contents of a root-datum spec file.
struct DatumSpec {
  RootSystemSpec spec;
  std::vector<std::vector<int>> galois;  // 0-based permutations of simple indices
};

DatumSpec parse_spec_json(const std::string& text, const std::string& source_name = "<input>");
DatumSpec load_spec_file(const std::string& path);

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Json vec_to_json(const RatVec& v);

/// Vector literal "fw:[c1,...,cr]" (fundamental-(co)weight coefficients) or
/// "amb:[q1,...,qn]" (ambient coordinates).
LatticeVector parse_vector(const std::string& text, const RootDatum& datum, Side side);

/// "swap:a..b,c..d" -> permutation exchanging the two 1-based index ranges.
std::vector<int> parse_swap_generator(const std::string& text, int rank);

}  // namespace qc
