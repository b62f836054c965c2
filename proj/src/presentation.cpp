#include "hopfmon/presentation.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "hopfmon/error.hpp"
#include "hopfmon/quasitriangular.hpp"
#include "json.hpp"

namespace hopfmon {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::MalformedPresentation, "at " + where + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) malformed(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(where, "missing field \"" + key + "\"");
  return *it;
}

FieldSpec parse_field(const json& j, const std::string& where) {
  if (!j.is_string()) malformed(where, "field must be a string");
  std::string s = j.get<std::string>();
  if (s == "Q") return FieldSpec::rationals();
  const std::string pre = "Q(zeta_";
  if (s.rfind(pre, 0) == 0 && s.size() > pre.size() + 1 && s.back() == ')') {
    std::string n = s.substr(pre.size(), s.size() - pre.size() - 1);
    if (n.find_first_not_of("0123456789") == std::string::npos && n.size() < 6) {
      unsigned v = static_cast<unsigned>(std::stoul(n));
      if (v > 0) return FieldSpec::cyclotomic(v);
    }
  }
  malformed(where, "unknown field \"" + s + "\", expected \"Q\" or \"Q(zeta_n)\"");
}

std::string field_name(FieldSpec f) { return f.is_rationals() ? "Q" : "Q(zeta_" + std::to_string(f.order()) + ")"; }

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) malformed(where, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    malformed(where, e.what());
  }
}

Scalar parse_scalar(const json& j, FieldSpec field, const std::string& where) {
  if (!j.is_array()) return Scalar(parse_rational(j, where));
  if (field.is_rationals()) malformed(where, "coefficient arrays need a cyclotomic field");
  if (j.size() != field.degree()) malformed(where, "expected " + std::to_string(field.degree()) + " coefficients");
  std::vector<Rational> cs;
  for (std::size_t k = 0; k < j.size(); ++k) cs.push_back(parse_rational(j[k], where + "/" + std::to_string(k)));
  return Scalar::from_coefficients(field, std::move(cs));
}

json write_scalar(const Scalar& s) {
  if (s.is_rational()) return s.rational_part().to_string();
  json a = json::array();
  for (const auto& c : s.coefficients()) a.push_back(c.to_string());
  return a;
}

class Labels {
 public:
  Labels(const std::vector<std::string>& labels, const std::string& where) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (!index_.emplace(labels[i], i).second) malformed(where, "duplicate basis label \"" + labels[i] + "\"");
  }
  std::size_t at(const json& j, const std::string& where) const {
    if (!j.is_string()) malformed(where, "expected a basis label");
    return at(j.get<std::string>(), where);
  }
  std::size_t at(const std::string& s, const std::string& where) const {
    auto it = index_.find(s);
    if (it == index_.end()) malformed(where, "unknown basis label \"" + s + "\"");
    return it->second;
  }

 private:
  std::map<std::string, std::size_t> index_;
};

// {"label": scalar, ...}
SparseVec parse_vector(const json& j, const Labels& L, FieldSpec f, const std::string& where) {
  if (!j.is_object()) malformed(where, "expected an object of label: coefficient");
  Accumulator acc;
  for (const auto& [k, v] : j.items()) acc.add(L.at(k, where), parse_scalar(v, f, where + "/" + k));
  return acc.take();
}

// [[left, right, coefficient], ...] over H (x) H
SparseVec parse_pairs(const json& j, const Labels& L, std::size_t n, FieldSpec f, const std::string& where) {
  if (!j.is_array()) malformed(where, "expected an array of [left, right, coefficient]");
  Accumulator acc;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string w = where + "/" + std::to_string(k);
    if (!j[k].is_array() || j[k].size() != 3) malformed(w, "expected [left, right, coefficient]");
    acc.add(L.at(j[k][0], w) * n + L.at(j[k][1], w), parse_scalar(j[k][2], f, w));
  }
  return acc.take();
}

json write_vector(const Algebra& A, const SparseVec& v) {
  json o = json::object();
  for (const auto& [i, c] : v) o[A.label(i)] = write_scalar(c);
  return o;
}

json write_pairs(const Algebra& A, const SparseVec& v) {
  const std::size_t n = A.dim();
  json a = json::array();
  for (const auto& [i, c] : v) a.push_back(json::array({A.label(i / n), A.label(i % n), write_scalar(c)}));
  return a;
}

// Like dump(2), but arrays of scalars stay on one line.
void dump_compact(const json& j, std::string& out, int indent) {
  auto pad = [&](int k) { out.append(static_cast<std::size_t>(k), ' '); };
  auto flat = [](const json& a) {
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, v] : j.items()) {
      pad(indent + 2);
      out += json(key).dump() + ": ";
      dump_compact(v, out, indent + 2);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    pad(indent);
    out += "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      pad(indent + 2);
      dump_compact(j[k], out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    pad(indent);
    out += "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
    out += "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

const TensorElement& Presentation::r_matrix(const std::optional<std::string>& name, std::string* chosen) const {
  if (r_matrices.empty()) throw Error(ErrorCode::NotApplicable, "the file has no R-matrix");
  if (!name) {
    if (chosen) *chosen = r_matrices.front().first;
    return r_matrices.front().second;
  }
  for (const auto& [n, R] : r_matrices)
    if (n == *name) {
      if (chosen) *chosen = n;
      return R;
    }
  throw Error(ErrorCode::NotApplicable, "no R-matrix named \"" + *name + "\"");
}

Presentation parse_presentation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedPresentation, e.what());
  }
  const json& format = member(j, "format", "/");
  if (format != presentation_format) malformed("/format", std::string("expected \"") + presentation_format + "\"");
  const json& version = member(j, "version", "/");
  if (!version.is_number_integer() || version.get<int>() != presentation_version)
    malformed("/version", "unsupported version, expected " + std::to_string(presentation_version));
  const json& kind_j = member(j, "kind", "/");
  if (!kind_j.is_string() || (kind_j != "hopf" && kind_j != "algebra"))
    malformed("/kind", "expected \"hopf\" or \"algebra\"");
  const bool hopf = kind_j == "hopf";
  const json& name_j = member(j, "name", "/");
  if (!name_j.is_string() || name_j.get<std::string>().empty()) malformed("/name", "expected a non-empty string");
  std::string name = name_j.get<std::string>();
  FieldSpec f = parse_field(member(j, "field", "/"), "/field");

  const json& basis = member(j, "basis", "/");
  if (!basis.is_array() || basis.empty()) malformed("/basis", "expected a non-empty array of labels");
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!basis[k].is_string()) malformed("/basis/" + std::to_string(k), "expected a string");
    labels.push_back(basis[k].get<std::string>());
  }
  Labels L(labels, "/basis");
  const std::size_t n = labels.size();

  SparseVec unit = parse_vector(member(j, "unit", "/"), L, f, "/unit");
  std::vector<SparseVec> prods(n * n);
  const json& pj = member(j, "product", "/");
  if (!pj.is_object()) malformed("/product", "expected an object");
  for (const auto& [a, row] : pj.items()) {
    std::size_t i = L.at(a, "/product");
    if (!row.is_object()) malformed("/product/" + a, "expected an object");
    for (const auto& [b, v] : row.items())
      prods[i * n + L.at(b, "/product/" + a)] = parse_vector(v, L, f, "/product/" + a + "/" + b);
  }
  Presentation p;
  p.algebra = std::make_shared<const Algebra>(name, f, labels, std::move(prods), std::move(unit), hopf_space_tag(name));
  if (!hopf) {
    for (const char* k : {"coproduct", "counit", "antipode", "r_matrices"})
      if (j.contains(k)) malformed(std::string("/") + k, "not allowed in an algebra file");
    return p;
  }

  std::vector<SparseVec> coprods(n), anti(n);
  const json& cj = member(j, "coproduct", "/");
  if (!cj.is_object()) malformed("/coproduct", "expected an object");
  for (const auto& [a, v] : cj.items()) coprods[L.at(a, "/coproduct")] = parse_pairs(v, L, n, f, "/coproduct/" + a);
  SparseVec counit = parse_vector(member(j, "counit", "/"), L, f, "/counit");
  const json& sj = member(j, "antipode", "/");
  if (!sj.is_object()) malformed("/antipode", "expected an object");
  for (const auto& [a, v] : sj.items()) anti[L.at(a, "/antipode")] = parse_vector(v, L, f, "/antipode/" + a);
  p.hopf = HopfAlgebra::unchecked(p.algebra, std::move(coprods), std::move(counit), std::move(anti));

  if (j.contains("r_matrices")) {
    const json& rj = j["r_matrices"];
    if (!rj.is_object()) malformed("/r_matrices", "expected an object of name: terms");
    for (const auto& [rn, v] : rj.items())
      p.r_matrices.emplace_back(rn, TensorElement(p.hopf->legs(2), parse_pairs(v, L, n, f, "/r_matrices/" + rn)));
  }
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedPresentation, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_presentation(ss.str());
  } catch (const Error& e) {
    std::string what = e.what();
    throw Error(e.code(), path + ": " + what.substr(what.find(": ") + 2));
  }
}

std::string write_presentation(const Presentation& p) {
  const Algebra& A = *p.algebra;
  const std::size_t n = A.dim();
  json j;
  j["format"] = presentation_format;
  j["version"] = presentation_version;
  j["kind"] = p.hopf ? "hopf" : "algebra";
  j["name"] = A.name();
  j["field"] = field_name(A.field());
  j["basis"] = A.labels();
  j["unit"] = write_vector(A, A.unit());
  json prod = json::object();
  for (std::size_t a = 0; a < n; ++a) {
    json row = json::object();
    for (std::size_t b = 0; b < n; ++b)
      if (!A.product(a, b).empty()) row[A.label(b)] = write_vector(A, A.product(a, b));
    if (!row.empty()) prod[A.label(a)] = std::move(row);
  }
  j["product"] = std::move(prod);
  if (p.hopf) {
    const HopfAlgebra& H = *p.hopf;
    json cop = json::object(), anti = json::object();
    for (std::size_t a = 0; a < n; ++a) {
      cop[A.label(a)] = write_pairs(A, H.coproduct(a));
      if (!H.antipode().column(a).empty()) anti[A.label(a)] = write_vector(A, H.antipode().column(a));
    }
    j["coproduct"] = std::move(cop);
    j["counit"] = write_vector(A, H.counit());
    j["antipode"] = std::move(anti);
    if (!p.r_matrices.empty()) {
      json rs = json::object();
      for (const auto& [name, R] : p.r_matrices) rs[name] = write_pairs(A, R.entries());
      j["r_matrices"] = std::move(rs);
    }
  }
  std::string out;
  dump_compact(j, out, 0);
  return out + "\n";
}

Report validate_presentation(const Presentation& p) {
  Report r(p.algebra->name());
  if (!p.hopf) {
    r.merge(check_algebra_axioms(*p.algebra));
    return r;
  }
  Report h = check_hopf_axioms(*p.hopf);
  r.merge(h);
  for (const auto& [name, R] : p.r_matrices) {
    if (!h.ok()) {
      r.skip("R:" + name, "Hopf axioms fail");
      continue;
    }
    r.merge(check_quasitriangular(*p.hopf, R), name + ".");
  }
  return r;
}

}  // namespace hopfmon
