#include "qc/specfile.hpp"

#include <fstream>
#include <sstream>

namespace qc {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw SpecError("rational values must be integers or \"n/d\" strings, got " + j.dump());
}

Json rational_to_json(const Rational& r) {
  if (r.is_integer()) return Json(r.num());
  return Json(r.str());
}

Json vec_to_json(const RatVec& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rational_to_json(v[i]));
  return arr;
}

namespace {

LatticeChoice parse_lattice(const Json& j, const char* key) {
  LatticeChoice choice;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "sc" || s == "simply_connected") {
      choice.kind = LatticeKind::SimplyConnected;
    } else if (s == "adjoint") {
      choice.kind = LatticeKind::Adjoint;
    } else {
      throw SpecError(std::string(key) + ": expected \"sc\", \"adjoint\" or a basis matrix");
    }
    return choice;
  }
  if (!j.is_array() || j.empty())
    throw SpecError(std::string(key) + ": expected \"sc\", \"adjoint\" or a basis matrix");
  choice.kind = LatticeKind::Explicit;
  size_t cols = j.size();
  size_t rows = j.at(0).size();
  choice.basis = RatMat::Zero(static_cast<int>(rows), static_cast<int>(cols));
  for (size_t c = 0; c < cols; ++c) {
    const Json& vec = j.at(c);
    if (!vec.is_array() || vec.size() != rows)
      throw SpecError(std::string(key) + ": basis vectors must have equal length");
    for (size_t rix = 0; rix < rows; ++rix)
      choice.basis(static_cast<int>(rix), static_cast<int>(c)) = rational_from_json(vec.at(rix));
  }
  return choice;
}

}  // namespace

DatumSpec parse_spec_json(const std::string& text, const std::string& source_name) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SpecError(source_name + ": " + e.what());
  }
  try {
    DatumSpec out;
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
      throw SpecError("spec needs a nonempty \"factors\" array");
    for (const Json& f : j["factors"]) {
      std::string type = f.at("type").get<std::string>();
      if (type.size() != 1) throw SpecError("factor type must be a single letter A-G");
      FactorSpec fs;
      fs.type = type[0];
      fs.rank = f.at("rank").get<int>();
      out.spec.factors.push_back(fs);
    }
    out.spec.char_lattice =
        j.contains("char_lattice") ? parse_lattice(j["char_lattice"], "char_lattice")
                                   : LatticeChoice{};
    out.spec.cochar_lattice =
        j.contains("cochar_lattice") ? parse_lattice(j["cochar_lattice"], "cochar_lattice")
                                     : LatticeChoice{};
    if (j.contains("galois")) {
      for (const Json& perm : j["galois"]) {
        std::vector<int> p;
        for (const Json& img : perm) p.push_back(img.get<int>() - 1);  // 1-based on disk
        out.galois.push_back(std::move(p));
      }
    }
    return out;
  } catch (const Json::exception& e) {
    throw SpecError(source_name + ": " + e.what());
  }
}

DatumSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str(), path);
}

LatticeVector parse_vector(const std::string& text, const RootDatum& datum, Side side) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw SpecError("vector literal must look like fw:[...] or amb:[...]");
  std::string head = text.substr(0, colon);
  std::string body = text.substr(colon + 1);
  size_t open = body.find('[');
  size_t close = body.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw SpecError("vector literal must look like fw:[...] or amb:[...]");
  std::string inner = body.substr(open + 1, close - open - 1);

  std::vector<Rational> entries;
  std::string item;
  std::stringstream ss(inner);
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      entries.push_back(Rational::parse(item));
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
  }

  if (head == "amb") {
    if (static_cast<int>(entries.size()) != datum.ambient_dim)
      throw SpecError("amb vector needs " + std::to_string(datum.ambient_dim) +
                      " coordinates, got " + std::to_string(entries.size()));
    RatVec v(datum.ambient_dim);
    for (int i = 0; i < datum.ambient_dim; ++i) v[i] = entries[i];
    return {v, side};
  }
  if (head == "fw") {
    if (static_cast<int>(entries.size()) != datum.rank())
      throw SpecError("fw vector needs " + std::to_string(datum.rank()) +
                      " coefficients, got " + std::to_string(entries.size()));
    const RatMat& basis = side == Side::Character ? datum.fundamental_weights
                                                  : datum.fundamental_coweights;
    RatVec v = RatVec::Zero(datum.ambient_dim);
    for (int i = 0; i < datum.rank(); ++i)
      if (!entries[i].is_zero()) v += basis.col(i) * entries[i];
    return {v, side};
  }
  throw SpecError("unknown vector basis '" + head + "' (use fw or amb)");
}

std::vector<int> parse_swap_generator(const std::string& text, int rank) {
  const std::string prefix = "swap:";
  if (text.rfind(prefix, 0) != 0)
    throw SpecError("galois generator must look like swap:a..b,c..d");
  std::string body = text.substr(prefix.size());
  size_t comma = body.find(',');
  if (comma == std::string::npos)
    throw SpecError("galois generator must look like swap:a..b,c..d");
  auto parse_range = [](const std::string& s) {
    size_t dots = s.find("..");
    if (dots == std::string::npos)
      throw SpecError("range must look like a..b, got '" + s + "'");
    int a = 0, b = 0;
    try {
      a = std::stoi(s.substr(0, dots));
      b = std::stoi(s.substr(dots + 2));
    } catch (const std::exception&) {
      throw SpecError("bad range '" + s + "'");
    }
    if (a < 1 || b < a) throw SpecError("bad range '" + s + "'");
    return std::pair<int, int>{a, b};
  };
  auto [a1, b1] = parse_range(body.substr(0, comma));
  auto [a2, b2] = parse_range(body.substr(comma + 1));
  if (b1 - a1 != b2 - a2) throw SpecError("swap ranges must have equal length");
  if (b1 > rank || b2 > rank) throw SpecError("swap range exceeds the rank");
  std::vector<int> perm(rank);
  for (int i = 0; i < rank; ++i) perm[i] = i;
  for (int k = 0; k <= b1 - a1; ++k) {
    perm[a1 - 1 + k] = a2 - 1 + k;
    perm[a2 - 1 + k] = a1 - 1 + k;
  }
  return perm;
}

}  // namespace qc
