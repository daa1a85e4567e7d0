#include "scd/io.hpp"

#include <fstream>
#include <sstream>

namespace scd {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::malformed_input, std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::malformed_input, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::malformed_input, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::malformed_input, std::string("field '") + key + "' has the wrong type");
  }
}

FieldPtr same_or_new(const Json& j, const FieldPtr& field) {
  const FieldPtr doc = read_field(j);
  if (field && !field->same_as(*doc)) throw Error(ErrorKind::field_mismatch, "document field differs from the context");
  return field ? field : doc;
}

}  // namespace

void write_field(Json& j, const Field& field) {
  j["q"] = field.q();
  if (field.r() > 1) j["modulus"] = field.spec().modulus;
}

FieldPtr read_field(const Json& j) {
  const auto q = get<unsigned>(j, "q");
  std::vector<unsigned> modulus;
  if (j.contains("modulus")) modulus = get<std::vector<unsigned>>(j, "modulus");
  return Field::of_order(q, modulus);
}

Json to_json(const LabelledPartition& lambda) {
  Json j;
  j["family"] = to_string(lambda.family());
  j["n"] = lambda.n();
  write_field(j, *lambda.field());
  Json plus = Json::array();
  for (const Arc& a : lambda.plus()) plus.push_back({a.i, a.j, static_cast<unsigned>(a.label)});
  j["plus"] = plus;
  return j;
}

LabelledPartition partition_from_json(const Json& j, const FieldPtr& field) {
  const FieldPtr f = same_or_new(j, field);
  const Family family = family_from_string(get<std::string>(j, "family"));
  const int n = get<int>(j, "n");
  if (n < 0) throw Error(ErrorKind::malformed_input, "n must be nonnegative");
  std::vector<Arc> plus;
  for (const auto& t : get<Json>(j, "plus")) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::malformed_input, "arcs are [i, j, label] triples");
    const int i = t[0].get<int>(), k = t[1].get<int>();
    const long label = t[2].get<long>();
    if (label < 0 || label >= static_cast<long>(f->q()))
      throw Error(ErrorKind::invalid_partition, "label " + std::to_string(label) + " is not a nonzero element of F_q");
    plus.push_back(Arc{i, k, static_cast<Code>(label)});
  }
  return LabelledPartition::from_plus(family, n, f, std::move(plus));
}

LabelledPartition partition_from_json(const Json& j) { return partition_from_json(j, nullptr); }

Json to_json(const UTMatrix& m) {
  Json j;
  j["size"] = m.size();
  write_field(j, *m.field());
  Json entries = Json::array();
  for (Code c : m.entries()) entries.push_back(static_cast<unsigned>(c));
  j["entries"] = entries;
  return j;
}

UTMatrix matrix_from_json(const Json& j) {
  const FieldPtr f = read_field(j);
  const int size = get<int>(j, "size");
  if (size < 0) throw Error(ErrorKind::malformed_input, "negative matrix size");
  const auto entries = get<std::vector<long>>(j, "entries");
  if (entries.size() != static_cast<std::size_t>(size) * size)
    throw Error(ErrorKind::malformed_input, "expected " + std::to_string(size * size) + " entries");
  UTMatrix m(f, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      const long v = entries[r * size + c];
      if (v < 0 || v >= static_cast<long>(f->q())) throw Error(ErrorKind::malformed_input, "entry outside F_q");
      m.set(r, c, static_cast<Code>(v));
    }
  return m;
}

Json to_json(const CycValue& v) {
  const auto [scale, coeffs] = v.content();
  Json j;
  j["scale"] = scale.get_str();
  Json c = Json::array();
  for (const auto& z : coeffs) {
    if (z.fits_slong_p())
      c.push_back(z.get_si());
    else
      c.push_back(z.get_str());
  }
  j["coeffs"] = c;
  return j;
}

CycValue cyc_from_json(const Json& j, unsigned p) {
  mpq_class scale;
  const auto text = get<std::string>(j, "scale");
  if (scale.set_str(text, 10) != 0) throw Error(ErrorKind::malformed_input, "scale '" + text + "' is not a rational");
  scale.canonicalize();
  std::vector<mpq_class> coeffs;
  for (const auto& c : get<Json>(j, "coeffs")) {
    mpz_class z;
    if (c.is_number_integer())
      z = c.get<long>();
    else if (!c.is_string() || z.set_str(c.get<std::string>(), 10) != 0)
      throw Error(ErrorKind::malformed_input, "cyclotomic coefficients are integers");
    coeffs.emplace_back(z);
  }
  return CycValue(p, std::move(coeffs)).scaled(scale);
}

std::string to_csv_cell(const CycValue& v) {
  const auto [scale, coeffs] = v.content();
  std::string out = scale.get_str() + "|";
  for (std::size_t k = 0; k < coeffs.size(); ++k) out += (k ? " " : "") + coeffs[k].get_str();
  return out;
}

Json to_json(const SCElement& x) {
  Json j;
  j["basis"] = to_string(x.basis());
  j["family"] = to_string(x.family());
  write_field(j, *x.field());
  Json terms = Json::array();
  for (const auto& [lambda, c] : x.terms()) terms.push_back({{"coef", c.get_str()}, {"label", to_json(lambda)}});
  j["terms"] = terms;
  return j;
}

SCElement element_from_json(const Json& j) {
  const Basis basis = basis_from_string(get<std::string>(j, "basis"));
  const FieldPtr f = read_field(j);
  const Json terms = get<Json>(j, "terms");
  if (!terms.is_array()) throw Error(ErrorKind::malformed_input, "'terms' must be an array");
  Family family = Family::D;
  if (j.contains("family"))
    family = family_from_string(get<std::string>(j, "family"));
  else if (!terms.empty())
    family = family_from_string(get<std::string>(get<Json>(terms[0], "label"), "family"));
  SCElement x(family, f, basis);
  for (const auto& t : terms) {
    mpq_class coef;
    const auto s = get<std::string>(t, "coef");
    if (coef.set_str(s, 10) != 0) throw Error(ErrorKind::malformed_input, "coefficient '" + s + "' is not a rational");
    coef.canonicalize();
    const LabelledPartition lambda = partition_from_json(get<Json>(t, "label"), f);
    x.add(lambda, coef);
  }
  return x;
}

Json to_json(const TensorElement& t) {
  Json j;
  j["basis"] = to_string(t.basis());
  j["family"] = to_string(t.family());
  write_field(j, *t.field());
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms())
    terms.push_back({{"coef", c.get_str()}, {"left", to_json(key.first)}, {"right", to_json(key.second)}});
  j["terms"] = terms;
  return j;
}

TensorElement tensor_from_json(const Json& j) {
  const Basis basis = basis_from_string(get<std::string>(j, "basis"));
  const FieldPtr f = read_field(j);
  TensorElement t(family_from_string(get<std::string>(j, "family")), f, basis);
  for (const auto& term : get<Json>(j, "terms")) {
    mpq_class coef;
    const auto s = get<std::string>(term, "coef");
    if (coef.set_str(s, 10) != 0) throw Error(ErrorKind::malformed_input, "coefficient '" + s + "' is not a rational");
    coef.canonicalize();
    t.add(partition_from_json(get<Json>(term, "left"), f), partition_from_json(get<Json>(term, "right"), f), coef);
  }
  return t;
}

Json to_json(const CharTable& table) {
  Json j;
  j["family"] = to_string(table.family);
  j["n"] = table.n;
  write_field(j, *table.field);
  Json labels = Json::array();
  for (const auto& l : table.labels) labels.push_back(to_json(l)["plus"]);
  j["labels"] = labels;
  if (!table.class_sizes.empty()) j["class_sizes"] = table.class_sizes;
  Json rows = Json::array();
  for (const auto& row : table.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(r);
  }
  j["values"] = rows;
  return j;
}

CharTable table_from_json(const Json& j) {
  CharTable t;
  t.family = family_from_string(get<std::string>(j, "family"));
  t.n = get<int>(j, "n");
  t.field = read_field(j);
  for (const auto& plus : get<Json>(j, "labels")) {
    Json doc{{"family", to_string(t.family)}, {"n", t.n}};
    write_field(doc, *t.field);
    doc["plus"] = plus;
    t.labels.push_back(partition_from_json(doc, t.field));
  }
  if (j.contains("class_sizes")) t.class_sizes = get<std::vector<std::uint64_t>>(j, "class_sizes");
  for (const auto& row : get<Json>(j, "values")) {
    std::vector<CycValue> r;
    for (const auto& v : row) r.push_back(cyc_from_json(v, t.field->p()));
    if (r.size() != t.labels.size()) throw Error(ErrorKind::malformed_input, "table row has the wrong length");
    t.values.push_back(std::move(r));
  }
  if (t.values.size() != t.labels.size()) throw Error(ErrorKind::malformed_input, "table has the wrong number of rows");
  return t;
}

std::string to_csv(const CharTable& table) {
  std::ostringstream out;
  out << "chi\\x";
  for (const auto& l : table.labels) out << ",\"" << l.to_string() << "\"";
  out << "\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << "\"" << table.labels[i].to_string() << "\"";
    for (const auto& v : table.values[i]) out << "," << to_csv_cell(v);
    out << "\n";
  }
  if (!table.class_sizes.empty()) {
    out << "class_size";
    for (auto s : table.class_sizes) out << "," << s;
    out << "\n";
  }
  return out.str();
}

Json census_to_json(const GroupTable& table) {
  Json j;
  j["family"] = to_string(table.family);
  j["n"] = table.n;
  write_field(j, *table.field);
  j["order"] = table.order();
  Json classes = Json::array();
  for (std::size_t k = 0; k < table.labels.size(); ++k)
    classes.push_back({{"label", to_json(table.labels[k])},
                       {"size", table.class_sizes[k]},
                       {"representative", to_json(table.elements[table.representatives[k]])}});
  j["classes"] = classes;
  return j;
}

Json to_json(const Report& report) {
  Json j;
  j["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (c.informational) e["informational"] = true;
    e["cases"] = c.cases;
    if (!c.note.empty()) e["note"] = c.note;
    if (!c.failures.empty()) e["failures"] = c.failures;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

Report report_from_json(const Json& j) {
  Report report;
  for (const auto& e : get<Json>(j, "checks")) {
    CheckResult c(get<std::string>(e, "name"));
    c.passed = get<bool>(e, "passed");
    c.informational = e.value("informational", false);
    c.cases = get<std::uint64_t>(e, "cases");
    c.note = e.value("note", std::string());
    if (e.contains("failures")) c.failures = get<std::vector<std::string>>(e, "failures");
    report.checks.push_back(std::move(c));
  }
  return report;
}

Json error_json(ErrorKind kind, const std::string& message) {
  return Json{{"error", {{"kind", to_string(kind)}, {"message", message}}}};
}

}  // namespace scd
