#include "symlie/serialize.hpp"

#include <cctype>
#include <cstdio>

namespace symlie {

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json rows_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Matrix& m) {
  Json out;
  out["field"] = m.field().tag();
  out["rows"] = rows_json(m);
  return out;
}

Json to_json(const HomPoly& f) {
  Json out;
  out["basis"] = Json{{"n", f.n()}, {"d", f.degree()}};
  out["field"] = f.field().tag();
  out["coeffs"] = to_json(f.coeffs());
  return out;
}

namespace {

Json constants_json(const LieTable& t) {
  Json constants = Json::array();
  for (const auto& [key, value] : t.constants()) {
    Json coeffs = Json::array();
    for (std::size_t k = 0; k < value.size(); ++k)
      if (!value[k].is_zero()) coeffs.push_back(Json{{"k", k}, {"value", value[k].to_string()}});
    constants.push_back(Json{{"i", key.first}, {"j", key.second}, {"coeffs", coeffs}});
  }
  return constants;
}

const char* series_kind_name(SeriesKind k) { return k == SeriesKind::Derived ? "derived" : "lower_central"; }

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::Parse, what); }

Scalar scalar_from_json(const Field& field, const Json& j) {
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
  malformed("scalar must be a string or an integer");
}

}  // namespace

Json to_json(const LieTable& t) {
  Json out;
  out["dim"] = t.dim();
  out["labels"] = t.labels();
  out["field"] = t.field().tag();
  out["constants"] = constants_json(t);
  if (t.provenance()) {
    const Provenance& p = *t.provenance();
    Json prov;
    prov["A"] = rows_json(p.a);
    prov["w"] = to_json(p.w);
    prov["lambda"] = p.lambda.to_string();
    prov["d"] = p.degree ? Json(*p.degree) : Json(nullptr);
    if (p.max_degree) prov["max_degree"] = *p.max_degree;
    out["provenance"] = prov;
  } else {
    out["provenance"] = nullptr;
  }
  return out;
}

Json to_json(const SeriesReport& r) {
  return Json{{"kind", series_kind_name(r.kind)}, {"dims", r.dims}, {"terminated_at_zero", r.terminated_at_zero}, {"steps", r.steps}};
}

Json to_json(const Fingerprint& f) {
  Json out;
  out["dim"] = f.dim;
  out["derived_dims"] = f.derived_dims;
  out["lower_central_dims"] = f.lower_central_dims;
  out["upper_central_dims"] = f.upper_central_dims;
  out["center_dim"] = f.center_dim;
  out["derived_algebra_dim"] = f.derived_algebra_dim;
  out["derived_centralizer_dim"] = f.derived_centralizer_dim;
  out["ad_algebra_dim"] = f.ad_algebra_dim;
  out["ad_rank_counts"] = f.ad_rank_counts;
  return out;
}

Json to_json(const HomWitness& w) {
  Json out;
  out["verified"] = w.verified;
  out["source"] = w.source_id;
  out["target"] = w.target_id;
  out["field"] = w.map.field().tag();
  out["map"] = rows_json(w.map);
  return out;
}

Json to_json(const ClassLabel& label) {
  Json out;
  out["family"] = family_name(label.family);
  if (label.parameter) out["c"] = label.parameter->to_string();
  if (!label.detail.empty()) out["detail"] = label.detail;
  return out;
}

Json to_json(const Classification& c) {
  Json out = to_json(c.label);
  out["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  out["fingerprint"] = to_json(c.fingerprint);
  return out;
}

Json to_json(const OrbitReport& r) {
  Json out;
  out["n"] = r.n;
  out["p"] = r.p;
  out["include_zero_w"] = r.include_zero_w;
  out["pair_count"] = r.pair_count;
  out["orbit_count"] = r.orbit_count;
  out["group_order"] = r.group_order;
  Json orbits = Json::array();
  for (std::size_t k = 0; k < r.representatives.size(); ++k) {
    const SeedPair& s = r.representatives[k];
    orbits.push_back(Json{{"A", rows_json(s.matrix())}, {"w", to_json(s.w())}, {"size", r.orbit_sizes[k]}});
  }
  out["orbits"] = orbits;
  return out;
}

Json to_json(const IsoClassReport& r) {
  Json out;
  out["n"] = r.n;
  out["p"] = r.p;
  out["d"] = r.degree;
  out["include_zero_w"] = r.include_zero_w;
  out["orbit_count"] = r.orbit_count;
  out["class_count"] = r.class_count;
  out["inequality_holds"] = r.inequality_holds;
  out["class_of_orbit"] = r.class_of_orbit;
  out["orbits"] = to_json(r.orbits);
  return out;
}

Json analysis_json(const LieTable& t) {
  Json out;
  out["dim"] = t.dim();
  out["field"] = t.field().tag();
  auto violation = check_alternating_jacobi(t);
  out["jacobi"] = Json{{"ok", !violation.has_value()},
                       {"violation", violation ? Json::array({violation->i, violation->j, violation->k}) : Json(nullptr)}};
  SeriesReport derived = derived_series(t);
  SeriesReport lower = lower_central_series(t);
  out["derived_series"] = to_json(derived);
  out["lower_central_series"] = to_json(lower);
  out["solvable"] = derived.terminated_at_zero;
  out["nilpotent"] = lower.terminated_at_zero;
  out["nilpotency_class"] = lower.terminated_at_zero ? Json(lower.steps) : Json(nullptr);
  Subspace z = center(t);
  out["center"] = Json{{"dim", z.dim()}, {"basis", rows_json(z.basis())}};
  out["fingerprint"] = to_json(fingerprint(t));
  return out;
}

LieTable table_from_json(const Json& j) {
  try {
    if (!j.is_object()) malformed("table JSON must be an object");
    Field field = Field::parse(j.at("field").get<std::string>());
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels") && !j.at("labels").is_null()) labels = j.at("labels").get<std::vector<std::string>>();
    else
      for (std::size_t k = 0; k < dim; ++k) labels.push_back("e" + std::to_string(k + 1));
    if (labels.size() != dim) malformed("label count does not match dim");
    LieTable t(field, labels);
    std::size_t last_i = 0, last_j = 0;
    bool first = true;
    for (const auto& entry : j.at("constants")) {
      std::size_t i = entry.at("i").get<std::size_t>();
      std::size_t jj = entry.at("j").get<std::size_t>();
      if (i >= jj || jj >= dim) malformed("constants must satisfy i < j < dim");
      if (!first && std::pair(i, jj) <= std::pair(last_i, last_j)) malformed("constants must be sorted by (i, j) without repeats");
      first = false;
      last_i = i;
      last_j = jj;
      Vec value = zero_vector(field, dim);
      for (const auto& c : entry.at("coeffs")) {
        std::size_t k = c.at("k").get<std::size_t>();
        if (k >= dim) malformed("coefficient index out of range");
        value[k] = scalar_from_json(field, c.at("value"));
      }
      t.set_bracket(i, jj, value);
    }
    if (j.contains("provenance") && !j.at("provenance").is_null()) {
      const Json& p = j.at("provenance");
      Provenance prov;
      prov.a = parse_matrix(field, p.at("A").dump());
      prov.w = parse_vector(field, p.at("w").dump());
      prov.lambda = scalar_from_json(field, p.at("lambda"));
      if (p.contains("d") && !p.at("d").is_null()) prov.degree = p.at("d").get<unsigned>();
      if (p.contains("max_degree") && !p.at("max_degree").is_null()) prov.max_degree = p.at("max_degree").get<unsigned>();
      t.set_provenance(std::move(prov));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("malformed table JSON: ") + e.what());
  }
}

HomPoly hompoly_from_json(const Json& j) {
  try {
    Field field = Field::parse(j.at("field").get<std::string>());
    unsigned n = j.at("basis").at("n").get<unsigned>();
    unsigned d = j.at("basis").at("d").get<unsigned>();
    Vec coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(scalar_from_json(field, c));
    return HomPoly(monomial_basis(n, d), std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("malformed polynomial JSON: ") + e.what());
  }
}

namespace {

// Bracketed lists of atoms; atoms are anything between separators, so the
// scalar grammar ("1/2-3i", "4 mod 7") passes through untouched.
struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
};

class ListParser {
 public:
  explicit ListParser(std::string_view text) : text_(text) {}

  Node parse() {
    Node n = value();
    skip_space();
    if (pos_ != text_.size()) malformed("trailing characters in '" + std::string(text_) + "'");
    return n;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Node value() {
    skip_space();
    if (pos_ >= text_.size()) malformed("unexpected end of input in '" + std::string(text_) + "'");
    if (text_[pos_] == '[') {
      ++pos_;
      Node list;
      list.is_list = true;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
        return list;
      }
      while (true) {
        list.items.push_back(value());
        skip_space();
        if (pos_ >= text_.size()) malformed("unterminated list in '" + std::string(text_) + "'");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ']') {
          ++pos_;
          return list;
        }
        malformed("expected ',' or ']' in '" + std::string(text_) + "'");
      }
    }
    Node atom;
    if (text_[pos_] == '"') {
      std::size_t end = text_.find('"', pos_ + 1);
      if (end == std::string_view::npos) malformed("unterminated string in '" + std::string(text_) + "'");
      atom.atom = std::string(text_.substr(pos_ + 1, end - pos_ - 1));
      pos_ = end + 1;
      return atom;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '[') ++pos_;
    atom.atom = std::string(text_.substr(start, pos_ - start));
    if (atom.atom.find_first_not_of(" \t\r\n") == std::string::npos) malformed("empty entry in '" + std::string(text_) + "'");
    return atom;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Vec atoms_to_vec(const Field& field, const Node& list) {
  if (!list.is_list) malformed("expected a list of scalars");
  Vec v;
  for (const auto& item : list.items) {
    if (item.is_list) malformed("expected a scalar, found a nested list");
    v.push_back(Scalar::parse(field, item.atom));
  }
  return v;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Json parse_object(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("malformed JSON: ") + e.what());
  }
}

void check_field_tag(const Field& field, const Json& obj) {
  if (obj.contains("field") && !(Field::parse(obj.at("field").get<std::string>()) == field))
    throw Error(ErrorCode::FieldMismatch, "input is over " + obj.at("field").get<std::string>() + ", expected " + field.tag());
}

}  // namespace

Matrix parse_matrix(const Field& field, std::string_view text) {
  text = trimmed(text);
  if (!text.empty() && text.front() == '{') {
    Json obj = parse_object(text);
    check_field_tag(field, obj);
    if (!obj.contains("rows")) malformed("matrix object needs \"rows\"");
    return parse_matrix(field, obj.at("rows").dump());
  }
  Node root = ListParser(text).parse();
  if (!root.is_list || root.items.empty()) malformed("matrix must be a nonempty list of rows");
  std::vector<Vec> rows;
  for (const auto& row : root.items) rows.push_back(atoms_to_vec(field, row));
  for (const auto& row : rows)
    if (row.size() != rows.front().size() || row.empty()) malformed("matrix rows must be nonempty and of equal length");
  return Matrix::from_rows(field, rows);
}

Vec parse_vector(const Field& field, std::string_view text) {
  text = trimmed(text);
  if (!text.empty() && text.front() == '{') {
    Json obj = parse_object(text);
    check_field_tag(field, obj);
    if (obj.contains("vector")) return parse_vector(field, obj.at("vector").dump());
    if (obj.contains("rows")) {
      Matrix m = parse_matrix(field, obj.at("rows").dump());
      if (m.cols() == 1) return m.col(0);
      if (m.rows() == 1) return m.row(0);
    }
    malformed("vector object needs \"vector\" or a single-row/column \"rows\"");
  }
  Node root = ListParser(text).parse();
  Vec v = atoms_to_vec(field, root);
  if (v.empty()) malformed("vector must be nonempty");
  return v;
}

std::string table_id(const LieTable& t) {
  std::string canonical = Json{{"dim", t.dim()}, {"field", t.field().tag()}, {"constants", constants_json(t)}}.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace symlie
