#include "strathom/cli/input.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace strathom::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

int to_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

Integer to_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  bad(where, "expected an integer");
}

int degree_key(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    int d = std::stoi(key, &used);
    if (used == key.size() && d >= 0) return d;
  } catch (const std::exception&) {
  }
  bad(where, "degree key '" + key + "' is not a non-negative integer");
}

Matrix to_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a matrix as an array of rows");
  if (j.size() != rows) bad(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      bad(where, "row " + std::to_string(i) + " should have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = to_integer(row[c], where);
  }
  return m;
}

Matrix square_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a matrix as an array of rows");
  return to_matrix(j, j.size(), j.size(), where);
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) bad(where, "unknown field '" + k + "'");
  }
}

CupAction to_action(const json& j, const GradedBasis& basis, const std::string& where) {
  CupAction a;
  if (!j.is_object()) bad(where, "expected {degree: matrix}");
  for (const auto& [key, m] : j.items()) {
    const int d = degree_key(key, where);
    auto src = basis.find(d), dst = basis.find(d + 2);
    const std::size_t cols = src == basis.end() ? 0 : src->second.size();
    const std::size_t rows = dst == basis.end() ? 0 : dst->second.size();
    a[d] = to_matrix(m, rows, cols, where + "." + key);
  }
  return a;
}

ManifoldAtom to_atom(const std::string& name, const json& j) {
  const std::string where = "atoms." + name;
  check_keys(j, {"dimension", "orientable", "basis", "classes", "mod_p"}, where);
  ManifoldAtom m;
  m.name = name;
  if (!j.contains("dimension") || !j.contains("basis")) bad(where, "needs dimension and basis");
  m.dimension = to_int(j["dimension"], where + ".dimension");
  m.orientable = j.value("orientable", true);
  for (const auto& [key, orders] : j["basis"].items()) {
    if (!orders.is_array()) bad(where + ".basis", "expected a list of orders (0 for Z)");
    auto& v = m.basis[degree_key(key, where + ".basis")];
    for (const auto& o : orders) v.push_back(to_integer(o, where + ".basis." + key));
  }
  if (j.contains("classes"))
    for (const auto& [cls, act] : j["classes"].items())
      m.classes[canonical_class_name(cls)] = to_action(act, m.basis, where + ".classes." + cls);
  if (j.contains("mod_p")) {
    for (const auto& [key, d] : j["mod_p"].items()) {
      const std::string w = where + ".mod_p." + key;
      check_keys(d, {"dims", "classes"}, w);
      const long p = degree_key(key, w);
      if (!is_prime(p)) bad(w, key + " is not a prime");
      ModPData data;
      GradedBasis ones;
      for (const auto& [deg, dim] : d.at("dims").items()) {
        int k = degree_key(deg, w);
        data.dims[k] = static_cast<std::size_t>(to_int(dim, w + ".dims"));
        ones[k] = std::vector<Integer>(data.dims[k], Integer(p));
      }
      if (d.contains("classes"))
        for (const auto& [cls, act] : d["classes"].items())
          data.classes[canonical_class_name(cls)] = to_action(act, ones, w + ".classes." + cls);
      m.mod_p[p] = data;
    }
  }
  m.check();
  return m;
}

std::string id_string(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  bad(where, "vertex ids are strings or integers");
}

RawComplex to_complex(const std::string& name, const json& j) {
  const std::string where = "complexes." + name;
  check_keys(j, {"dimension", "vertices", "simplices", "facets_only"}, where);
  RawComplex r;
  if (!j.contains("dimension") || !j.contains("vertices") || !j.contains("simplices"))
    bad(where, "needs dimension, vertices and simplices");
  r.dimension = to_int(j["dimension"], where + ".dimension");
  r.facets_only = j.value("facets_only", false);
  for (const auto& v : j["vertices"]) {
    check_keys(v, {"id", "level"}, where + ".vertices");
    if (!v.contains("id") || !v.contains("level")) bad(where + ".vertices", "each vertex needs id and level");
    r.vertices.push_back({id_string(v["id"], where + ".vertices"), to_int(v["level"], where + ".vertices")});
  }
  for (const auto& s : j["simplices"]) {
    if (!s.is_array()) bad(where + ".simplices", "each simplex is a list of vertex ids");
    std::vector<std::string> ids;
    for (const auto& v : s) ids.push_back(id_string(v, where + ".simplices"));
    r.simplices.push_back(std::move(ids));
  }
  return r;
}

std::string perversity_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<int>());
  if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(to_int(j[i], "perversity"));
    return s;
  }
  bad("perversity", "expected \"all\", an integer or a list of integers");
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

InputFile parse_input(const std::string& text) {
  InputFile in;
  in.digest = sha256_hex(text);
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ValidationError("empty input");

  if (text[first] != '{') {
    std::string expr;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      expr += line + " ";
    }
    in.expression = expr.substr(expr.find_first_not_of(' '));
    in.expression.erase(in.expression.find_last_not_of(' ') + 1);
    in.space = parse_expression(in.expression);
    return in;
  }

  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ValidationError(line_column(text, e.byte) + ": " + msg);
  }
  check_keys(j, {"space", "complex", "complexes", "atoms", "automorphisms", "perversity", "ring"}, "input");
  if (j.contains("atoms"))
    for (const auto& [name, a] : j["atoms"].items()) in.atoms[name] = to_atom(name, a);
  if (j.contains("complexes"))
    for (const auto& [name, c] : j["complexes"].items()) in.complexes[name] = to_complex(name, c);
  if (j.contains("complex")) in.complexes["complex"] = to_complex("complex", j["complex"]);
  if (j.contains("automorphisms")) {
    for (const auto& [name, f] : j["automorphisms"].items()) {
      AutomorphismData d;
      if (!f.is_object()) bad("automorphisms." + name, "expected {degree: matrix}");
      for (const auto& [key, m] : f.items())
        d.peripheral[degree_key(key, "automorphisms." + name)] = square_matrix(m, "automorphisms." + name + "." + key);
      in.automorphisms[name] = d;
    }
  }
  if (j.contains("perversity")) in.perversity = perversity_text(j["perversity"]);
  if (j.contains("ring")) {
    if (!j["ring"].is_string()) bad("ring", "expected a string");
    in.ring = j["ring"].get<std::string>();
  }
  if (j.contains("space")) {
    if (!j["space"].is_string()) bad("space", "expected an expression string");
    in.expression = j["space"].get<std::string>();
    try {
      in.space = parse_expression(in.expression);
    } catch (const ValidationError& e) {
      throw ValidationError("space: " + std::string(e.what()));
    }
  } else if (in.complexes.count("complex")) {
    in.expression = "complex";
    in.space = parse_expression("complex");
  } else {
    throw ValidationError("input: needs a space expression or a complex");
  }
  return in;
}

InputFile read_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return parse_input(s.str());
}

PerversitySpec parse_perversity(const std::string& text) {
  PerversitySpec spec;
  if (text == "all") {
    spec.all = true;
    return spec;
  }
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      spec.values.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("perversity: '" + item + "' is not an integer");
    }
  }
  if (spec.values.empty()) throw ValidationError("perversity: no values given");
  return spec;
}

}  // namespace strathom::cli
