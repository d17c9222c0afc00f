#include "toricdeg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "toricdeg/errors.hpp"
#include "toricdeg/poly_io.hpp"

namespace toricdeg {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

json rational_vector(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) a.push_back(x.get_num().get_si());
    else a.push_back(rational_string(x));
  }
  return a;
}

json int_vector(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

Integer integer_from_json(const json& x) {
  if (x.is_number_integer()) return Integer(static_cast<long>(x.get<std::int64_t>()));
  if (x.is_string()) return Integer(x.get<std::string>());
  throw DimensionMismatch("matrix entries must be integers");
}

}  // namespace

Ideal parse_ideal_file(const std::string& text) {
  std::optional<VarList> names;
  std::optional<Grading> grading;
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t offset = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    const std::size_t here = offset;
    offset += raw.size() + 1;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("vars:", 0) == 0) {
      if (names) throw SyntaxError(here, "a single vars: line");
      names = split_list(line.substr(5));
      if (names->empty()) throw SyntaxError(here, "at least one variable");
      continue;
    }
    if (line.rfind("grading:", 0) == 0) {
      std::vector<std::int32_t> w;
      for (const auto& s : split_list(line.substr(8))) {
        try {
          w.push_back(std::stoi(s));
        } catch (const std::exception&) {
          throw SyntaxError(here, "integer grading weight");
        }
      }
      grading = Grading(std::move(w));
      continue;
    }
    if (!names) throw SyntaxError(here, "vars: header");
    lines.emplace_back(here + raw.find_first_not_of(" \t"), line);
  }
  if (!names) throw SyntaxError(0, "vars: header");
  if (grading && grading->size() != names->size()) throw DimensionMismatch("grading length differs from variable count");
  auto vars = make_vars(*names);
  std::vector<Polynomial> gens;
  for (const auto& [pos, line] : lines) {
    try {
      gens.push_back(parse_polynomial(line, vars));
    } catch (const SyntaxError& e) {
      throw SyntaxError(pos + e.position(), e.expected());
    }
  }
  return Ideal(vars, std::move(gens), grading);
}

std::string format_ideal_file(const Ideal& I) {
  std::ostringstream os;
  os << "vars: ";
  for (std::size_t i = 0; i < I.nvars(); ++i) os << (i ? ", " : "") << (*I.vars())[i];
  os << "\n";
  if (I.has_grading() && !I.grading().is_standard()) {
    os << "grading: ";
    for (std::size_t i = 0; i < I.grading().size(); ++i) os << (i ? ", " : "") << I.grading().weights()[i];
    os << "\n";
  }
  for (const auto& g : I.gens()) os << format_polynomial(g) << "\n";
  return os.str();
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IOError("write to " + path + " failed");
}

Ideal read_ideal(const std::string& path) {
  const auto text = read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return ideal_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw IOError(path + ": " + e.what());
    }
  }
  return parse_ideal_file(text);
}

json ideal_to_json(const Ideal& I) {
  json j;
  j["vars"] = *I.vars();
  j["gens"] = json::array();
  for (const auto& g : I.gens()) j["gens"].push_back(format_polynomial(g));
  if (I.has_grading() && !I.grading().is_standard()) j["grading"] = I.grading().weights();
  return j;
}

Ideal ideal_from_json(const json& j) {
  auto vars = make_vars(j.at("vars").get<VarList>());
  std::optional<Grading> grading;
  if (j.contains("grading")) grading = Grading(j.at("grading").get<std::vector<std::int32_t>>());
  std::vector<Polynomial> gens;
  for (const auto& g : j.at("gens")) gens.push_back(parse_polynomial(g.get<std::string>(), vars));
  return Ideal(vars, std::move(gens), grading);
}

json matrix_to_json(const IntMatrix& M) {
  json a = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) a.push_back(int_vector(M.row(i)));
  return a;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw DimensionMismatch("matrix must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw DimensionMismatch("matrix rows must be arrays");
    IntVector v;
    for (const auto& x : r) v.push_back(integer_from_json(x));
    rows.push_back(std::move(v));
  }
  return IntMatrix::from_rows(rows);
}

IntMatrix read_matrix(const std::string& path) {
  try {
    return matrix_from_json(json::parse(read_text(path)));
  } catch (const json::exception& e) {
    throw IOError(path + ": " + e.what());
  }
}

json semigroup_to_json(const Semigroup& S) {
  json j;
  if (S.degree_coord()) j["degree_coord"] = *S.degree_coord();
  else j["degree_coord"] = nullptr;
  j["gens"] = json::array();
  for (const auto& g : S.gens()) j["gens"].push_back(int_vector(g));
  if (!S.labels().empty()) j["labels"] = S.labels();
  return j;
}

Semigroup semigroup_from_json(const json& j) {
  std::vector<IntVector> gens;
  for (const auto& g : j.at("gens")) {
    IntVector v;
    for (const auto& x : g) v.push_back(integer_from_json(x));
    gens.push_back(std::move(v));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("degree_coord") && j.at("degree_coord").is_null()) return Semigroup::total_degree(std::move(gens), std::move(labels));
  const std::size_t dc = j.value("degree_coord", std::size_t{0});
  return Semigroup(std::move(gens), dc, std::move(labels));
}

json polytope_to_json(const PolytopeQ& P) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : P.vertices) j["vertices"].push_back(rational_vector(v));
  j["dim_ambient"] = P.dim_ambient;
  if (P.has_halfspaces) {
    j["halfspaces"] = json::array();
    for (const auto& [a, b] : P.halfspaces)
      j["halfspaces"].push_back({{"normal", rational_vector(a)}, {"offset", rational_vector({b})[0]}});
  }
  return j;
}

json moment_dump(const std::vector<MomentSample>& samples, const PolytopeQ& P) {
  json j;
  j["samples"] = json::array();
  for (const auto& s : samples) j["samples"].push_back(s.value);
  j["polytope"] = polytope_to_json(P);
  return j;
}

json to_json(const FamilyIdeal& F) {
  json j;
  j["vars"] = *F.vars;
  j["gens"] = json::array();
  for (const auto& g : F.gens) j["gens"].push_back(format_polynomial(g));
  j["w"] = F.w;
  j["convention"] = to_string(F.convention);
  j["from_groebner_basis"] = F.from_groebner_basis;
  return j;
}

json to_json(const PipelineResult& R) {
  json j;
  j["w"] = R.certificate.w;
  j["base"] = R.certificate.base;
  j["init"] = ideal_to_json(R.init);
  j["semigroup"] = semigroup_to_json(R.semigroup);
  j["toric_matrix"] = matrix_to_json(R.toric_matrix);
  j["homogenized"] = R.homogenized;
  j["toric"] = ideal_to_json(R.toric);
  j["binomial_prime"] = R.binomial_prime;
  return j;
}

json to_json(const std::vector<DimensionRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back({r.m, r.lhs, r.rhs});
  return a;
}

json to_json(const EmbeddingReport& E) {
  json j;
  j["pipeline"] = to_json(E.pipeline);
  j["independent_vars"] = E.independent_vars;
  json names = json::array();
  for (auto i : E.independent_vars) names.push_back((*E.pipeline.init.vars())[i]);
  j["independent_var_names"] = names;
  j["finite_over_subset"] = E.finite_over_subset;
  j["route"] = E.route;
  j["N"] = E.N.fits_slong_p() ? json(E.N.get_si()) : json(E.N.get_str());
  json images = json::object();
  json c = json::object();
  for (std::size_t k = 0; k < E.labels.size(); ++k) {
    images[E.labels[k]] = format_polynomial(E.images[k]);
    c[E.labels[k]] = int_vector(E.c_vectors[k]);
  }
  j["images"] = images;
  j["image_semigroup"] = c;
  j["kernel_check"] = ideal_to_json(E.kernel_check);
  j["dims_checked"] = to_json(E.dims_checked);
  return j;
}

json to_json(const ProjectionReport& R) {
  json j;
  j["w"] = R.w;
  j["limit"] = ideal_to_json(R.limit);
  j["cone_part"] = ideal_to_json(R.cone_part);
  j["closure"] = ideal_to_json(R.closure);
  j["limit_text"] = format_ideal(R.limit);
  j["cone_part_text"] = format_ideal(R.cone_part);
  j["closure_text"] = format_ideal(R.closure);
  j["scheme_check"] = R.scheme_check;
  j["base_locus_empty"] = R.base_locus_empty;
  j["set_check"] = R.set_check;
  return j;
}

}  // namespace toricdeg
