#include "mqed/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mqed {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError("model schema error at " + where + ": " + what, 0, 0);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) schema_error(where, "unknown key \"" + key + "\"");
  }
}

double number_at(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) schema_error(where, std::string("missing \"") + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number()) schema_error(where + "/" + key, "expected a number");
  return v.get<double>();
}

LorentzTerm parse_term(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected a term object");
  reject_unknown_keys(j, {"amplitude", "resonance", "damping"}, where);
  return {number_at(j, "amplitude", where), number_at(j, "resonance", where),
          number_at(j, "damping", where)};
}

TermList parse_terms(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of terms");
  TermList out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_term(j[i], where + "/" + std::to_string(i)));
  return out;
}

TensorDispersion parse_dispersion(const json& j, const std::string& where) {
  if (j.is_array()) return TensorDispersion::isotropic(parse_terms(j, where));
  if (!j.is_object()) schema_error(where, "expected a term list or an object");
  reject_unknown_keys(j, {"diagonal", "tensor"}, where);
  if (j.size() != 1) schema_error(where, "expected exactly one of \"diagonal\" or \"tensor\"");
  if (j.contains("diagonal")) {
    const json& d = j.at("diagonal");
    if (!d.is_array() || d.size() != 3) schema_error(where + "/diagonal", "expected 3 term lists");
    return TensorDispersion::diagonal(parse_terms(d[0], where + "/diagonal/0"),
                                      parse_terms(d[1], where + "/diagonal/1"),
                                      parse_terms(d[2], where + "/diagonal/2"));
  }
  const json& t = j.at("tensor");
  if (!t.is_array() || t.size() != 3) schema_error(where + "/tensor", "expected 3 rows");
  TensorDispersion out;
  for (int r = 0; r < 3; ++r) {
    const std::string row_where = where + "/tensor/" + std::to_string(r);
    if (!t[r].is_array() || t[r].size() != 3) schema_error(row_where, "expected 3 term lists");
    for (int c = 0; c < 3; ++c) out.terms[r][c] = parse_terms(t[r][c], row_where + "/" + std::to_string(c));
  }
  return out;
}

Eigen::Matrix3d parse_rotation(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  reject_unknown_keys(j, {"rotation"}, where);
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  if (!j.contains("rotation")) return r;
  const json& m = j.at("rotation");
  if (!m.is_array() || m.size() != 3) schema_error(where + "/rotation", "expected a 3x3 matrix");
  for (int a = 0; a < 3; ++a) {
    if (!m[a].is_array() || m[a].size() != 3) schema_error(where + "/rotation", "expected a 3x3 matrix");
    for (int b = 0; b < 3; ++b) {
      if (!m[a][b].is_number()) schema_error(where + "/rotation", "expected numbers");
      r(a, b) = m[a][b].get<double>();
    }
  }
  return r;
}

void line_column(std::string_view text, std::size_t byte, int& line, int& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

json terms_to_json(const TermList& list) {
  json out = json::array();
  for (const auto& t : list) {
    out.push_back({{"amplitude", t.amplitude}, {"resonance", t.resonance}, {"damping", t.damping}});
  }
  return out;
}

bool same_terms(const TermList& a, const TermList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].amplitude != b[i].amplitude || a[i].resonance != b[i].resonance ||
        a[i].damping != b[i].damping)
      return false;
  }
  return true;
}

json dispersion_to_json(const TensorDispersion& d) {
  bool diagonal = true;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (r != c && !d.terms[r][c].empty()) diagonal = false;
  if (diagonal && same_terms(d.terms[0][0], d.terms[1][1]) && same_terms(d.terms[0][0], d.terms[2][2])) {
    return terms_to_json(d.terms[0][0]);
  }
  if (diagonal) {
    return {{"diagonal", {terms_to_json(d.terms[0][0]), terms_to_json(d.terms[1][1]),
                          terms_to_json(d.terms[2][2])}}};
  }
  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(terms_to_json(d.terms[r][c]));
    rows.push_back(row);
  }
  return {{"tensor", rows}};
}

}  // namespace

MediumModel parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    int line = 0, column = 0;
    line_column(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
    throw ParseError("model JSON syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
  }
  if (!doc.is_object()) schema_error("/", "top level must be an object");
  reject_unknown_keys(doc, {"schema_version", "name", "eps", "mu", "kappa", "chi", "anisotropy"}, "/");

  if (!doc.contains("schema_version")) schema_error("/schema_version", "missing (expected 1)");
  const json& version = doc.at("schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    schema_error("/schema_version", "unsupported schema version (expected 1)");
  }

  MediumModel model;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) schema_error("/name", "expected a string");
    model.name = doc.at("name").get<std::string>();
  }
  if (doc.contains("eps")) model.eps = parse_dispersion(doc.at("eps"), "/eps");
  if (doc.contains("mu")) model.mu = parse_dispersion(doc.at("mu"), "/mu");
  if (doc.contains("kappa")) model.kappa = parse_dispersion(doc.at("kappa"), "/kappa");
  if (doc.contains("chi")) model.chi = parse_dispersion(doc.at("chi"), "/chi");
  if (doc.contains("anisotropy")) model.rotation = parse_rotation(doc.at("anisotropy"), "/anisotropy");

  try {
    model.validate();
  } catch (const InvalidModel& e) {
    schema_error("/", e.what());
  }
  return model;
}

MediumModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string model_to_json(const MediumModel& model, int indent) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["name"] = model.name;
  if (!model.eps.empty()) doc["eps"] = dispersion_to_json(model.eps);
  if (!model.mu.empty()) doc["mu"] = dispersion_to_json(model.mu);
  if (!model.kappa.empty()) doc["kappa"] = dispersion_to_json(model.kappa);
  if (!model.chi.empty()) doc["chi"] = dispersion_to_json(model.chi);
  if (!model.rotation.isIdentity(0.0)) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) rows.push_back({model.rotation(r, 0), model.rotation(r, 1), model.rotation(r, 2)});
    doc["anisotropy"] = {{"rotation", rows}};
  }
  return doc.dump(indent);
}

}  // namespace mqed
