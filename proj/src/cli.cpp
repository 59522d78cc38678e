#include "qc/cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <sstream>

#include "qc/hasse.hpp"
#include "qc/specfile.hpp"

namespace qc {

namespace {

struct CommonOptions {
  std::string spec_path;
  std::vector<std::string> swap_generators;
  std::string format = "text";
};

struct LoadedDatum {
  RootDatum datum;
  GaloisAction galois;
};

LoadedDatum load(const CommonOptions& common) {
  DatumSpec parsed = load_spec_file(common.spec_path);
  LoadedDatum out{build(parsed.spec), {}};
  auto perms = parsed.galois;
  for (const auto& text : common.swap_generators)
    perms.push_back(parse_swap_generator(text, out.datum.rank()));
  out.galois = make_galois(out.datum, perms);
  return out;
}

Side parse_side(const std::string& s) {
  if (s == "char") return Side::Character;
  if (s == "cochar") return Side::Cocharacter;
  throw SpecError("side must be 'char' or 'cochar'");
}

LeviType parse_levi(const std::string& text, int rank) {
  LeviType levi;
  if (text == "none" || text.empty()) return levi;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int idx = 0;
    try {
      idx = std::stoi(item);
    } catch (const std::exception&) {
      throw SpecError("bad Levi index '" + item + "'");
    }
    if (idx < 1 || idx > rank)
      throw SpecError("Levi index out of range 1.." + std::to_string(rank));
    levi.subset.push_back(idx - 1);
  }
  std::sort(levi.subset.begin(), levi.subset.end());
  levi.subset.erase(std::unique(levi.subset.begin(), levi.subset.end()), levi.subset.end());
  return levi;
}

std::string vertex_name(int alpha) { return "a" + std::to_string(alpha + 1); }

std::string vec_str(const RatVec& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

Json levi_to_json(const LeviType& levi) {
  Json arr = Json::array();
  for (int i : levi.subset) arr.push_back(i + 1);
  return arr;
}

Json witness_to_json(const PredicateWitness& w) {
  Json j;
  if (w.kind == PredicateWitness::Kind::CorootPair) {
    j["kind"] = "orbit-pair";
    j["first"] = vec_to_json(w.first);
    j["second"] = vec_to_json(w.second);
    j["value_first"] = rational_to_json(w.value_first);
    j["value_second"] = rational_to_json(w.value_second);
  } else {
    j["kind"] = "ample-violation";
    j["simple_root"] = w.simple_index + 1;
    j["pairing"] = rational_to_json(w.value_first);
  }
  return j;
}

std::string witness_str(const PredicateWitness& w) {
  if (w.kind == PredicateWitness::Kind::CorootPair) {
    return "orbit pair " + vec_str(w.first) + " -> " + w.value_first.str() + ", " +
           vec_str(w.second) + " -> " + w.value_second.str();
  }
  return "simple root " + vertex_name(w.simple_index) + " pairs to " + w.value_first.str() +
         " (needs < 0)";
}

Json classification_to_json(const ClassificationResult& res, const RootDatum& datum) {
  Json j;
  j["quasi_constant"] = res.quasi_constant;
  if (res.quasi_constant) {
    if (res.multiplier) j["multiplier"] = rational_to_json(*res.multiplier);
    Json kinds = Json::array();
    for (size_t f = 0; f < res.kinds.size(); ++f) {
      Json k;
      k["factor"] = type_label(datum.factors[f]);
      switch (res.kinds[f].tag) {
        case KindTag::Trivial: k["kind"] = "trivial"; break;
        case KindTag::Minuscule: k["kind"] = "minuscule"; break;
        case KindTag::Cominuscule: k["kind"] = "cominuscule"; break;
      }
      if (res.kinds[f].vertex >= 0) {
        k["vertex"] = res.kinds[f].vertex + 1;
        k["multiplier"] = rational_to_json(res.kinds[f].multiplier);
      }
      kinds.push_back(std::move(k));
    }
    j["kinds"] = std::move(kinds);
  } else if (res.witness) {
    j["witness"] = witness_to_json(*res.witness);
  }
  return j;
}

void emit(const Json& j, const std::string& format, const std::string& text,
          std::ostream& out) {
  if (format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

// ---------------------------------------------------------------- describe

int cmd_describe(const CommonOptions& common, std::ostream& out) {
  LoadedDatum loaded = load(common);
  const RootDatum& datum = loaded.datum;

  Json j;
  j["command"] = "describe";
  j["datum"] = datum_label(datum);
  j["ambient_dim"] = datum.ambient_dim;
  j["rank"] = datum.rank();
  j["num_roots"] = datum.num_roots();

  std::ostringstream text;
  text << "datum: " << datum_label(datum) << "\n";
  text << "ambient dimension: " << datum.ambient_dim << ", rank: " << datum.rank()
       << ", roots: " << datum.num_roots() << "\n";

  RatMat cartan = cartan_matrix(datum);
  Json cartan_json = Json::array();
  text << "Cartan matrix <a_j, a_i^v>:\n";
  for (int i = 0; i < datum.rank(); ++i) {
    Json row = Json::array();
    text << "  ";
    for (int jj = 0; jj < datum.rank(); ++jj) {
      row.push_back(rational_to_json(cartan(i, jj)));
      text << cartan(i, jj).str() << (jj + 1 < datum.rank() ? " " : "\n");
    }
    cartan_json.push_back(std::move(row));
  }
  j["cartan"] = std::move(cartan_json);

  Json factors = Json::array();
  for (size_t f = 0; f < datum.factors.size(); ++f) {
    const Factor& fac = datum.factors[f];
    const VertexData& vd = vertex_data(datum, static_cast<int>(f));
    Json jf;
    jf["type"] = type_label(fac);
    jf["m"] = vd.m;
    jf["m_dual"] = vd.m_dual;
    Json special = Json::array(), cospecial = Json::array();
    text << "factor " << type_label(fac) << ":\n";
    text << "  highest root " << vec_str(fac.highest_root) << ", multiplicities (";
    for (int i = 0; i < fac.rank; ++i) text << (i ? "," : "") << vd.m[i];
    text << ")\n  highest coroot " << vec_str(fac.highest_coroot) << ", multiplicities (";
    for (int i = 0; i < fac.rank; ++i) text << (i ? "," : "") << vd.m_dual[i];
    text << ")\n  special vertices: {";
    bool first = true;
    for (int i = 0; i < fac.rank; ++i)
      if (vd.special[i]) {
        special.push_back(fac.simple_begin + i + 1);
        text << (first ? "" : ", ") << vertex_name(fac.simple_begin + i);
        first = false;
      }
    text << "}\n  cospecial vertices: {";
    first = true;
    for (int i = 0; i < fac.rank; ++i)
      if (vd.cospecial[i]) {
        cospecial.push_back(fac.simple_begin + i + 1);
        text << (first ? "" : ", ") << vertex_name(fac.simple_begin + i);
        first = false;
      }
    text << "}\n";
    jf["special"] = std::move(special);
    jf["cospecial"] = std::move(cospecial);
    factors.push_back(std::move(jf));
  }
  j["factors"] = std::move(factors);

  Json roots = Json::array();
  text << "roots:\n";
  for (const auto& root : datum.roots) {
    roots.push_back(vec_to_json(root));
    text << "  " << vec_str(root) << "\n";
  }
  j["roots"] = std::move(roots);

  emit(j, common.format, text.str(), out);
  return 0;
}

// ------------------------------------------------------------------- check

struct CheckOptions {
  std::string vector_text;
  std::string side = "char";
  std::string predicate;
  std::int64_t p = 2;
  std::string levi = "none";
  bool require_integral = false;
};

int cmd_check(const CommonOptions& common, const CheckOptions& opt, std::ostream& out) {
  LoadedDatum loaded = load(common);
  const RootDatum& datum = loaded.datum;
  Side side = parse_side(opt.side);
  LatticeVector v = parse_vector(opt.vector_text, datum, side);
  if (opt.require_integral && !in_lattice(datum, v.coords, side))
    throw SpecError("vector does not lie in the chosen lattice");

  bool value = false;
  std::optional<PredicateWitness> witness;
  if (opt.predicate == "minuscule") {
    value = is_minuscule(v, datum);
  } else if (opt.predicate == "cominuscule") {
    value = is_cominuscule(v, datum);
  } else if (opt.predicate == "quasi-constant") {
    Verdict verdict = is_quasi_constant(v, datum, loaded.galois);
    value = verdict.value;
    witness = verdict.witness;
  } else if (opt.predicate == "p-close") {
    value = is_orbitally_p_close(v, opt.p, datum, loaded.galois);
  } else if (opt.predicate == "ample") {
    Verdict verdict = is_L_ample(v, parse_levi(opt.levi, datum.rank()), datum);
    value = verdict.value;
    witness = verdict.witness;
  } else if (opt.predicate == "admissible") {
    value = is_p_L_admissible(v, opt.p, parse_levi(opt.levi, datum.rank()), datum,
                              loaded.galois);
  } else {
    throw SpecError("unknown predicate '" + opt.predicate + "'");
  }

  Json j;
  j["command"] = "check";
  j["predicate"] = opt.predicate;
  j["vector"] = vec_to_json(v.coords);
  j["side"] = opt.side;
  if (opt.predicate == "p-close" || opt.predicate == "admissible") j["p"] = opt.p;
  j["verdict"] = value;
  if (witness) j["witness"] = witness_to_json(*witness);

  std::ostringstream text;
  text << opt.predicate << " " << vec_str(v.coords) << ": " << (value ? "true" : "false")
       << "\n";
  if (witness) text << "witness: " << witness_str(*witness) << "\n";
  emit(j, common.format, text.str(), out);
  return value ? 0 : 1;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const CommonOptions& common, const std::string& vector_text,
                 const std::string& side_text, std::ostream& out) {
  LoadedDatum loaded = load(common);
  Side side = parse_side(side_text);
  LatticeVector v = parse_vector(vector_text, loaded.datum, side);
  ClassificationResult res = classify_general(v, loaded.datum, loaded.galois);

  Json j;
  j["command"] = "classify";
  j["vector"] = vec_to_json(v.coords);
  j["side"] = side_text;
  j["result"] = classification_to_json(res, loaded.datum);

  std::ostringstream text;
  if (res.quasi_constant) {
    text << "quasi-constant";
    if (res.multiplier) text << ", multiplier " << res.multiplier->str();
    text << "\n";
    for (size_t f = 0; f < res.kinds.size(); ++f) {
      text << "  " << type_label(loaded.datum.factors[f]) << ": ";
      switch (res.kinds[f].tag) {
        case KindTag::Trivial: text << "trivial"; break;
        case KindTag::Minuscule:
          text << "minuscule at " << vertex_name(res.kinds[f].vertex) << " x "
               << res.kinds[f].multiplier.str();
          break;
        case KindTag::Cominuscule:
          text << "cominuscule at " << vertex_name(res.kinds[f].vertex) << " x "
               << res.kinds[f].multiplier.str();
          break;
      }
      text << "\n";
    }
  } else {
    text << "not quasi-constant\n";
    if (res.witness) text << "witness: " << witness_str(*res.witness) << "\n";
  }
  emit(j, common.format, text.str(), out);
  return res.quasi_constant ? 0 : 1;
}

// ----------------------------------------------------------------- dualize

int cmd_dualize(const CommonOptions& common, const std::string& ray_text,
                const std::string& side_text, std::ostream& out) {
  LoadedDatum loaded = load(common);
  Side side = parse_side(side_text);
  LatticeVector v = parse_vector(ray_text, loaded.datum, side);
  Ray ray = make_ray(v, loaded.datum);
  Ray dual = side == Side::Cocharacter ? dualize_ray(ray, loaded.datum, loaded.galois)
                                       : dualize_ray_inverse(ray, loaded.datum, loaded.galois);
  LeviType levi = centralizer_levi(side == Side::Cocharacter ? ray : dual, loaded.datum);

  Json j;
  j["command"] = "dualize";
  j["ray"] = vec_to_json(ray.direction);
  j["side"] = side_text;
  j["dual_ray"] = vec_to_json(dual.direction);
  j["dual_side"] = dual.side == Side::Character ? "char" : "cochar";
  j["centralizer_levi"] = levi_to_json(levi);

  std::ostringstream text;
  text << "ray " << vec_str(ray.direction) << " (" << side_text << ")\n";
  text << "dual ray " << vec_str(dual.direction) << " ("
       << (dual.side == Side::Character ? "char" : "cochar") << ")\n";
  text << "centralizer Levi: {";
  for (size_t i = 0; i < levi.subset.size(); ++i)
    text << (i ? ", " : "") << vertex_name(levi.subset[i]);
  text << "}\n";
  emit(j, common.format, text.str(), out);
  return 0;
}

// ------------------------------------------------------------------ bounds

int cmd_bounds(const CommonOptions& common, const std::string& levi_text, bool all_maximal,
               std::ostream& out) {
  LoadedDatum loaded = load(common);
  const RootDatum& datum = loaded.datum;

  std::vector<LeviType> levis;
  if (all_maximal) {
    for (int alpha = 0; alpha < datum.rank(); ++alpha) {
      LeviType levi;
      for (int i = 0; i < datum.rank(); ++i)
        if (i != alpha) levi.subset.push_back(i);
      levis.push_back(std::move(levi));
    }
  } else {
    levis.push_back(parse_levi(levi_text, datum.rank()));
  }

  Json rows = Json::array();
  std::ostringstream text;
  for (const auto& levi : levis) {
    BoundReport report = bound_for_levi(datum, levi, loaded.galois);
    Json j;
    j["levi"] = levi_to_json(levi);
    Json complement = Json::array();
    for (int i : levi.complement(datum.rank())) complement.push_back(i + 1);
    j["complement"] = std::move(complement);
    j["eta"] = vec_to_json(report.eta);
    j["ratio"] = rational_to_json(report.ratio);
    j["min_p"] = report.min_p;
    j["C"] = report.c_bound;
    j["shortcut"] = rational_to_json(report.shortcut);
    j["sufficiency_only"] = report.sufficiency_only;
    rows.push_back(std::move(j));

    text << "levi {";
    for (size_t i = 0; i < levi.subset.size(); ++i)
      text << (i ? ", " : "") << vertex_name(levi.subset[i]);
    text << "}: R = " << report.ratio.str() << ", C = " << report.c_bound
         << ", min admissible p = " << report.min_p
         << ", shortcut pairing = " << report.shortcut.str() << "\n";
  }
  text << "note: C is a sufficiency threshold only; purity below it is undecided here\n";

  Json j;
  j["command"] = "bounds";
  j["datum"] = datum_label(datum);
  j["rows"] = std::move(rows);
  emit(j, common.format, text.str(), out);
  return 0;
}

// ------------------------------------------------------------------- table

int cmd_table(int max_rank, const std::string& format, std::ostream& out) {
  std::vector<TableEntry> entries = full_table(max_rank);

  // group per type by C value, ascending
  struct Row {
    std::string type;
    std::vector<int> vertices;
    std::int64_t c = 0;
  };
  std::vector<Row> rows;
  for (size_t i = 0; i < entries.size();) {
    size_t j = i;
    std::map<std::int64_t, std::vector<int>> groups;
    while (j < entries.size() && entries[j].type == entries[i].type) {
      groups[entries[j].report.c_bound].push_back(entries[j].vertex);
      ++j;
    }
    for (auto& [c, verts] : groups) rows.push_back({entries[i].type, verts, c});
    i = j;
  }

  auto vertex_list = [](const std::vector<int>& verts) {
    std::string s;
    for (size_t i = 0; i < verts.size(); ++i)
      s += (i ? ", " : "") + ("a" + std::to_string(verts[i]));
    return s;
  };

  if (format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j;
      j["type"] = row.type;
      j["vertices"] = row.vertices;
      j["C"] = row.c;
      arr.push_back(std::move(j));
    }
    Json j;
    j["command"] = "table";
    j["max_rank"] = max_rank;
    j["rows"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else if (format == "tsv") {
    out << "type\tvertices\tC\n";
    for (const auto& row : rows) {
      std::string verts;
      for (size_t i = 0; i < row.vertices.size(); ++i)
        verts += (i ? "," : "") + std::to_string(row.vertices[i]);
      out << row.type << "\t" << verts << "\t" << row.c << "\n";
    }
  } else {  // markdown
    out << "| Type | Simple roots | C |\n";
    out << "| ---- | ------------ | - |\n";
    for (const auto& row : rows)
      out << "| " << row.type << " | " << vertex_list(row.vertices) << " | " << row.c
          << " |\n";
  }
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyOptions {
  int coeff_bound = 0;
  bool duality = false;
  bool chain = false;
  std::string side = "char";
  int threads = 0;
};

int cmd_verify(const CommonOptions& common, const VerifyOptions& opt, std::ostream& out) {
  LoadedDatum loaded = load(common);
  const RootDatum& datum = loaded.datum;

  if (opt.duality) {
    DualityReport report = verify_duality(datum, loaded.galois);
    Json j;
    j["command"] = "verify-duality";
    j["datum"] = datum_label(datum);
    j["cocharacter_rays"] = report.cocharacter_checks.size();
    j["character_rays"] = report.character_checks.size();
    j["bijection"] = report.bijection;
    j["all_ok"] = report.all_ok;

    std::ostringstream text;
    text << "duality on " << datum_label(datum) << ": " << report.cocharacter_checks.size()
         << " cocharacter rays, " << report.character_checks.size() << " character rays, "
         << (report.all_ok ? "all checks pass" : "FAILURES") << "\n";
    for (const auto& chk : report.cocharacter_checks) {
      text << "  " << vec_str(chk.ray.direction) << " -> " << vec_str(chk.dual.direction)
           << (chk.ok() ? " ok" : " FAIL") << "\n";
    }
    emit(j, common.format, text.str(), out);
    return report.all_ok ? 0 : 1;
  }

  if (opt.chain) {
    Json factors = Json::array();
    std::ostringstream text;
    bool ok = true;
    for (size_t f = 0; f < datum.factors.size(); ++f) {
      std::vector<int> chain = coroot_chain(datum, static_cast<int>(f));
      RatVec sum = RatVec::Zero(datum.ambient_dim);
      bool factor_ok = true;
      for (int g : chain) {
        sum += datum.simple_coroots.col(g);
        if (datum.coroot_index(sum) < 0) factor_ok = false;
      }
      factor_ok = factor_ok && vec_eq(sum, datum.factors[f].highest_coroot);
      ok = ok && factor_ok;
      Json jf;
      jf["factor"] = type_label(datum.factors[f]);
      Json steps = Json::array();
      for (int g : chain) steps.push_back(g + 1);
      jf["chain"] = std::move(steps);
      jf["ok"] = factor_ok;
      factors.push_back(std::move(jf));
      text << type_label(datum.factors[f]) << ": chain of length " << chain.size() << " (";
      for (size_t i = 0; i < chain.size(); ++i) text << (i ? " " : "") << chain[i] + 1;
      text << ") " << (factor_ok ? "ok" : "FAIL") << "\n";
    }
    Json j;
    j["command"] = "verify-chain";
    j["factors"] = std::move(factors);
    j["all_ok"] = ok;
    emit(j, common.format, text.str(), out);
    return ok ? 0 : 1;
  }

  if (opt.coeff_bound < 1) throw SpecError("verify needs --coeff-bound, --duality or --chain");
  BoxSearchReport report = verify_classification(datum, loaded.galois, opt.coeff_bound,
                                                 parse_side(opt.side), opt.threads);
  Json j;
  j["command"] = "verify-box";
  j["lattice"] = report.lattice_desc;
  j["coeff_bound"] = report.coeff_bound;
  j["total"] = report.total;
  j["quasi_constant"] = report.quasi_constant_count;
  j["quasi_constant_nonzero"] = report.quasi_constant_nonzero;
  j["mismatches"] = report.mismatches.size();
  Json rays = Json::array();
  for (const auto& ray : report.qc_dominant_rays) rays.push_back(vec_to_json(ray));
  j["qc_dominant_rays"] = std::move(rays);
  j["elapsed_seconds"] = report.elapsed_seconds;

  std::ostringstream text;
  text << report.lattice_desc << ", bound " << report.coeff_bound << ": scanned "
       << report.total << " vectors, " << report.quasi_constant_count << " quasi-constant ("
       << report.quasi_constant_nonzero << " nonzero), " << report.mismatches.size()
       << " classifier/oracle mismatches\n";
  for (const auto& ray : report.qc_dominant_rays)
    text << "  quasi-constant dominant ray " << vec_str(ray) << "\n";
  emit(j, common.format, text.str(), out);
  return report.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact root-datum toolkit: quasi-constant (co)characters, ray duality, "
               "purity bounds"};
  app.require_subcommand(1);

  CommonOptions common;
  CheckOptions check_opt;
  VerifyOptions verify_opt;
  std::string vector_text, ray_text, side_text = "char", dualize_side = "cochar";
  std::string levi_text = "none";
  bool all_maximal = false;
  int max_rank = 8;
  std::string table_format = "markdown";

  auto add_common = [&](CLI::App* cmd, bool needs_spec = true) {
    auto* spec = cmd->add_option("--spec", common.spec_path, "root-datum spec file (JSON)");
    if (needs_spec) spec->required();
    cmd->add_option("--galois", common.swap_generators,
                    "extra Galois generator, e.g. swap:1..2,3..4");
    cmd->add_option("--format", common.format, "output format: text or json");
  };

  auto* describe = app.add_subcommand("describe", "print the structure of a root datum");
  add_common(describe);

  auto* check = app.add_subcommand("check", "evaluate a predicate on a vector");
  add_common(check);
  check->add_option("--vector", check_opt.vector_text, "fw:[...] or amb:[...]")->required();
  check->add_option("--side", check_opt.side, "char or cochar");
  check
      ->add_option("--predicate", check_opt.predicate,
                   "minuscule | cominuscule | quasi-constant | p-close | ample | admissible")
      ->required();
  check->add_option("--p", check_opt.p, "prime for p-close / admissible");
  check->add_option("--levi", check_opt.levi, "Levi subset, e.g. 1,2,4 or none");
  check->add_flag("--require-integral", check_opt.require_integral,
                  "reject vectors outside the chosen lattice");

  auto* classify = app.add_subcommand("classify", "classify a vector with certificate");
  add_common(classify);
  classify->add_option("--vector", vector_text, "fw:[...] or amb:[...]")->required();
  classify->add_option("--side", side_text, "char or cochar");

  auto* dualize = app.add_subcommand("dualize", "dual quasi-constant ray");
  add_common(dualize);
  dualize->add_option("--ray", ray_text, "fw:[...] or amb:[...]")->required();
  dualize->add_option("--side", dualize_side, "side of the input ray (default cochar)");

  auto* bounds = app.add_subcommand("bounds", "purity bound for a Levi type");
  add_common(bounds);
  bounds->add_option("--levi", levi_text, "Levi subset, e.g. 1,2,4 or none");
  bounds->add_flag("--all-maximal", all_maximal, "one row per maximal Levi");

  auto* table = app.add_subcommand("table", "purity bound table over all types");
  table->add_option("--max-rank", max_rank, "largest rank to include (default 8)");
  table->add_option("--format", table_format, "markdown, tsv or json");

  auto* verify = app.add_subcommand("verify", "verification harnesses");
  add_common(verify);
  verify->add_option("--coeff-bound", verify_opt.coeff_bound,
                     "box search: classifier against definitional oracle");
  verify->add_flag("--duality", verify_opt.duality, "dual-ray property suite");
  verify->add_flag("--chain", verify_opt.chain, "coroot chain with coroot prefix sums");
  verify->add_option("--side", verify_opt.side, "box search side (default char)");
  verify->add_option("--threads", verify_opt.threads, "worker threads (default QC_THREADS)");

  std::vector<std::string> argv_storage = args;
  std::vector<const char*> argv;
  argv.push_back("qctool");
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (describe->parsed()) return cmd_describe(common, out);
    if (check->parsed()) return cmd_check(common, check_opt, out);
    if (classify->parsed()) return cmd_classify(common, vector_text, side_text, out);
    if (dualize->parsed()) return cmd_dualize(common, ray_text, dualize_side, out);
    if (bounds->parsed()) return cmd_bounds(common, levi_text, all_maximal, out);
    if (table->parsed()) return cmd_table(max_rank, table_format, out);
    if (verify->parsed()) return cmd_verify(common, verify_opt, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace qc
