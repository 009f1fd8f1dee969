#include "hopfdouble/serialize.hpp"

#include <fstream>
#include <sstream>

namespace hopfdouble {
namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

void check_format(const Json& j, const char* expected, const std::string& where) {
  const Json& f = field(j, "format", where);
  if (!f.is_string() || f.get<std::string>() != expected)
    fail(where + "/format", std::string("expected \"") + expected + "\"");
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

int get_index(const Json& j, int bound, const std::string& where) {
  int v = get_int(j, where);
  if (v < 0 || v >= bound) fail(where, "index " + std::to_string(v) + " out of range [0," + std::to_string(bound) + ")");
  return v;
}

Scalar get_scalar(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(where, "expected a \"p/q\" string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Vec get_vec(const Json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) fail(where, "expected an array of length " + std::to_string(n));
  Vec v(sz(n));
  for (int i = 0; i < n; ++i) v[sz(i)] = get_scalar(j[sz(i)], where + "/" + std::to_string(i));
  return v;
}

Matrix get_matrix(const Json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) fail(where, "expected " + std::to_string(n) + " rows");
  Matrix m(sz(n), sz(n));
  for (int r = 0; r < n; ++r) {
    Vec row = get_vec(j[sz(r)], n, where + "/" + std::to_string(r));
    for (int c = 0; c < n; ++c) m(sz(r), sz(c)) = row[sz(c)];
  }
  return m;
}

SparseTensor3 get_tensor3(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of [A,B,C,\"p/q\"] entries");
  std::vector<TensorEntry> entries;
  for (std::size_t e = 0; e < j.size(); ++e) {
    std::string at = where + "/" + std::to_string(e);
    const Json& t = j[e];
    if (!t.is_array() || t.size() != 4) fail(at, "expected [A,B,C,\"p/q\"]");
    entries.push_back({get_index(t[0], n, at + "/0"), get_index(t[1], n, at + "/1"), get_index(t[2], n, at + "/2"),
                       get_scalar(t[3], at + "/3")});
  }
  return SparseTensor3({n, n, n}, std::move(entries));
}

Json tensor3_json(const SparseTensor3& t) {
  Json out = Json::array();
  for (const auto& e : t.entries()) out.push_back(Json::array({e.i, e.j, e.k, to_json(e.value)}));
  return out;
}

}  // namespace

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.witness.empty()) e["witness"] = c.witness;
    out.push_back(std::move(e));
  }
  return out;
}

Json hopf_to_json(const HopfData& h) {
  Json out;
  out["format"] = kHopfFormat;
  out["dim"] = h.dim;
  out["labels"] = h.labels;
  out["unit"] = to_json(h.unit);
  out["counit"] = to_json(h.counit);
  out["mult"] = tensor3_json(h.mult);
  out["comult"] = tensor3_json(h.comult);
  Json s = Json::array();
  for (int a = 0; a < h.dim; ++a)
    for (int b = 0; b < h.dim; ++b)
      if (!h.antipode(sz(a), sz(b)).is_zero()) s.push_back(Json::array({a, b, to_json(h.antipode(sz(a), sz(b)))}));
  out["antipode"] = std::move(s);
  return out;
}

HopfData hopf_from_json(const Json& j) {
  const std::string root = "$";
  check_format(j, kHopfFormat, root);
  HopfData h;
  h.dim = get_int(field(j, "dim", root), root + "/dim");
  if (h.dim < 1) fail(root + "/dim", "dimension must be positive");
  const int n = h.dim;
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array() || static_cast<int>(l.size()) != n) fail(root + "/labels", "expected " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) fail(root + "/labels/" + std::to_string(i), "expected a string");
      h.labels.push_back(l[i].get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) h.labels.push_back("e" + std::to_string(i));
  }
  h.unit = get_vec(field(j, "unit", root), n, root + "/unit");
  h.counit = get_vec(field(j, "counit", root), n, root + "/counit");
  h.mult = get_tensor3(field(j, "mult", root), n, root + "/mult");
  h.comult = get_tensor3(field(j, "comult", root), n, root + "/comult");
  const Json& s = field(j, "antipode", root);
  if (!s.is_array()) fail(root + "/antipode", "expected an array of [A,B,\"p/q\"] entries");
  h.antipode = Matrix(sz(n), sz(n));
  for (std::size_t e = 0; e < s.size(); ++e) {
    std::string at = root + "/antipode/" + std::to_string(e);
    if (!s[e].is_array() || s[e].size() != 3) fail(at, "expected [A,B,\"p/q\"]");
    int a = get_index(s[e][0], n, at + "/0");
    int b = get_index(s[e][1], n, at + "/1");
    h.antipode(sz(a), sz(b)) += get_scalar(s[e][2], at + "/2");
  }
  return h;
}

FiniteGroup group_from_json(const Json& j, int max_order) {
  const std::string root = "$";
  check_format(j, kTableFormat, root);
  const Json& t = field(j, "table", root);
  if (!t.is_array() || t.empty()) fail(root + "/table", "expected a non-empty square array");
  const int n = static_cast<int>(t.size());
  if (n > max_order) fail(root + "/table", "order " + std::to_string(n) + " exceeds the bound " + std::to_string(max_order));
  std::vector<std::vector<int>> table(sz(n));
  for (int a = 0; a < n; ++a) {
    std::string at = root + "/table/" + std::to_string(a);
    const Json& row = t[sz(a)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) fail(at, "expected a row of length " + std::to_string(n));
    for (int b = 0; b < n; ++b) table[sz(a)].push_back(get_index(row[sz(b)], n, at + "/" + std::to_string(b)));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array() || static_cast<int>(l.size()) != n) fail(root + "/labels", "expected " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) fail(root + "/labels/" + std::to_string(i), "expected a string");
      labels.push_back(l[i].get<std::string>());
    }
  }
  return group_from_table(std::move(table), std::move(labels), max_order);
}

Json group_to_json(const FiniteGroup& g) {
  Json out;
  out["format"] = kTableFormat;
  out["labels"] = g.labels;
  out["table"] = g.table;
  return out;
}

Json rep_to_json(const DoubleRepresentation& rho) {
  Json out;
  out["format"] = kRepFormat;
  out["algebra"] = hopf_to_json(rho.D->F()->data());
  out["n"] = rho.n;
  Json f = Json::array(), u = Json::array();
  for (const auto& m : rho.rhoF) f.push_back(to_json(m));
  for (const auto& m : rho.rhoU) u.push_back(to_json(m));
  out["rhoF"] = std::move(f);
  out["rhoU"] = std::move(u);
  return out;
}

DoubleRepresentation rep_from_json(const Json& j, const DoublePtr& d) {
  const std::string root = "$";
  check_format(j, kRepFormat, root);
  DoubleRepresentation rho;
  rho.D = d;
  rho.n = get_int(field(j, "n", root), root + "/n");
  if (rho.n < 1) fail(root + "/n", "dimension must be positive");
  const int dim = d->base_dim();
  for (const char* key : {"rhoF", "rhoU"}) {
    const Json& list = field(j, key, root);
    std::string at = root + "/" + key;
    if (!list.is_array() || static_cast<int>(list.size()) != dim)
      fail(at, "expected one matrix per basis element (" + std::to_string(dim) + ")");
    auto& out = std::string(key) == "rhoF" ? rho.rhoF : rho.rhoU;
    for (int a = 0; a < dim; ++a) out.push_back(get_matrix(list[sz(a)], rho.n, at + "/" + std::to_string(a)));
  }
  return rho;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace hopfdouble
