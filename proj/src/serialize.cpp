#include "bicoalg/serialize.hpp"

#include <fstream>
#include <sstream>

#include "bicoalg/errors.hpp"
#include "json.hpp"

namespace bicoalg {

using nlohmann::json;

namespace {

class Reader {
 public:
  explicit Reader(Field f) : field_(f) {}

  const json& member(const json& obj, const std::string& ptr, const std::string& key) const {
    if (!obj.is_object()) throw SchemaError(ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(ptr + "/" + key, "missing required field");
    return *it;
  }

  std::size_t dim(const json& j, const std::string& ptr) const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
      throw SchemaError(ptr, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
  }

  Scalar scalar(const json& j, const std::string& ptr) const {
    std::string text;
    if (j.is_string()) {
      text = j.get<std::string>();
    } else if (j.is_number_integer()) {
      text = std::to_string(j.get<long long>());
    } else {
      throw SchemaError(ptr, "scalars are strings or integers");
    }
    auto mod = text.find("mod");
    if (mod != std::string::npos) {
      std::string p = text.substr(mod + 3);
      p.erase(0, p.find_first_not_of(' '));
      if (field_.is_rational() || p != std::to_string(field_.p)) {
        throw SchemaError(ptr, "field mismatch: '" + text + "' in a document over " + field_.name());
      }
      text = text.substr(0, mod);
      text.erase(text.find_last_not_of(' ') + 1);
    }
    try {
      return Scalar::parse(text, field_);
    } catch (const std::exception& e) {
      throw SchemaError(ptr, e.what());
    }
  }

  LinMap matrix(const json& j, const std::string& ptr, std::size_t rows, std::size_t cols) const {
    if (!j.is_array()) throw SchemaError(ptr, "expected an array of rows");
    if (j.size() != rows) {
      throw SchemaError(ptr, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    }
    std::vector<Scalar> data;
    data.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const json& row = j[r];
      const std::string rp = ptr + "/" + std::to_string(r);
      if (!row.is_array()) throw SchemaError(rp, "expected a row array");
      if (row.size() != cols) {
        throw SchemaError(rp, "expected " + std::to_string(cols) + " columns, got " + std::to_string(row.size()));
      }
      for (std::size_t c = 0; c < cols; ++c) data.push_back(scalar(row[c], rp + "/" + std::to_string(c)));
    }
    return LinMap(rows, cols, std::move(data));
  }

  std::string label(const json& obj, const std::string& ptr, const std::string& fallback) const {
    auto it = obj.find("label");
    if (it == obj.end()) return fallback;
    if (!it->is_string()) throw SchemaError(ptr + "/label", "expected a string");
    return it->get<std::string>();
  }

  Coalgebra coalgebra(const json& j, const std::string& ptr) const {
    const std::size_t n = dim(member(j, ptr, "dim"), ptr + "/dim");
    LinMap delta = matrix(member(j, ptr, "delta"), ptr + "/delta", n * n, n);
    LinMap counit = matrix(member(j, ptr, "counit"), ptr + "/counit", 1, n);
    return {n, std::move(delta), std::move(counit), label(j, ptr, "C")};
  }

  Bicoalgebroid bicoalgebroid(const json& j, const std::string& ptr) const {
    Coalgebra base = coalgebra(member(j, ptr, "base"), ptr + "/base");
    Coalgebra total = coalgebra(member(j, ptr, "total"), ptr + "/total");
    const std::size_t n = total.dim, c = base.dim;
    LinMap alpha = matrix(member(j, ptr, "alpha"), ptr + "/alpha", c, n);
    LinMap beta = matrix(member(j, ptr, "beta"), ptr + "/beta", c, n);
    LinMap mu = matrix(member(j, ptr, "mu_total"), ptr + "/mu_total", n, n * n);
    LinMap eta = matrix(member(j, ptr, "eta"), ptr + "/eta", n, c);
    return Bicoalgebroid(std::move(base), std::move(total), std::move(alpha), std::move(beta), std::move(mu), std::move(eta),
                         label(j, ptr, "H"));
  }

  Bicomodule bicomodule(const json& j, const std::string& ptr, const Coalgebra& base) const {
    const std::size_t m = dim(member(j, ptr, "dim"), ptr + "/dim");
    LinMap lambda = matrix(member(j, ptr, "lambda"), ptr + "/lambda", base.dim * m, m);
    LinMap rho = matrix(member(j, ptr, "rho"), ptr + "/rho", m * base.dim, m);
    return {m, base, std::move(lambda), std::move(rho), label(j, ptr, "M")};
  }

 private:
  Field field_;
};

Field read_field(const json& doc) {
  auto it = doc.find("field");
  if (it == doc.end()) throw SchemaError("/field", "missing required field");
  if (it->is_string()) {
    if (it->get<std::string>() != "Q") throw SchemaError("/field", "expected \"Q\" or {\"Fp\": p}");
    return Field::rationals();
  }
  if (it->is_object() && it->contains("Fp") && (*it)["Fp"].is_number_unsigned()) {
    try {
      return Field::prime((*it)["Fp"].get<std::uint64_t>());
    } catch (const std::exception& e) {
      throw SchemaError("/field/Fp", e.what());
    }
  }
  throw SchemaError("/field", "expected \"Q\" or {\"Fp\": p}");
}

json write_matrix(const LinMap& f) {
  json rows = json::array();
  for (std::size_t r = 0; r < f.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < f.cols(); ++c) row.push_back(f.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json write_coalgebra(const Coalgebra& c) {
  return {{"dim", c.dim}, {"delta", write_matrix(c.delta)}, {"counit", write_matrix(c.counit)}, {"label", c.label}};
}

json write_bicomodule(const Bicomodule& m) {
  return {{"kind", "bicomodule"}, {"dim", m.dim}, {"lambda", write_matrix(m.lambda)}, {"rho", write_matrix(m.rho)}, {"label", m.label}};
}

}  // namespace

Document parse_document(const std::string& text, const Bicoalgebroid* context) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "document must be an object");
  Document out;
  out.field = read_field(doc);
  const Reader rd(out.field);
  if (doc.contains("coalgebra")) out.coalgebra = rd.coalgebra(doc["coalgebra"], "/coalgebra");
  if (doc.contains("bicoalgebroid")) out.bicoalgebroid = rd.bicoalgebroid(doc["bicoalgebroid"], "/bicoalgebroid");
  const Bicoalgebroid* b = out.bicoalgebroid ? &*out.bicoalgebroid : context;

  const Coalgebra* base = out.coalgebra ? &*out.coalgebra : (b ? &b->base() : nullptr);
  if (doc.contains("comodules")) {
    const json& list = doc["comodules"];
    if (!list.is_array()) throw SchemaError("/comodules", "expected an array");
    if (!base) throw SchemaError("/comodules", "comodules need a coalgebra or bicoalgebroid in this or the context document");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string ptr = "/comodules/" + std::to_string(i);
      const json& e = list[i];
      std::string kind = "bicomodule";
      if (e.is_object() && e.contains("kind")) {
        if (!e["kind"].is_string()) throw SchemaError(ptr + "/kind", "expected a string");
        kind = e["kind"].get<std::string>();
      }
      Bicomodule m = rd.bicomodule(e, ptr, *base);
      if (kind == "bicomodule") {
        out.bicomodules.push_back(std::move(m));
      } else if (kind == "h_comodule") {
        if (!b) throw SchemaError(ptr, "H-comodules need a bicoalgebroid");
        LinMap delta = rd.matrix(rd.member(e, ptr, "delta"), ptr + "/delta", b->n() * m.dim, m.dim);
        std::string l = m.label;
        out.h_comodules.push_back({std::move(m), std::move(delta), l});
      } else {
        throw SchemaError(ptr + "/kind", "expected \"bicomodule\" or \"h_comodule\"");
      }
    }
  }

  if (doc.contains("yd_module")) {
    const std::string ptr = "/yd_module";
    if (!b) throw SchemaError(ptr, "a YD module needs a bicoalgebroid in this or the context document");
    const json& j = doc["yd_module"];
    const std::size_t m = rd.dim(rd.member(j, ptr, "space"), ptr + "/space");
    const std::size_t c = b->c(), n = b->n();
    LinMap rho = rd.matrix(rd.member(j, ptr, "rho"), ptr + "/rho", m * c, m);
    LinMap lambda = rd.matrix(rd.member(j, ptr, "lambda"), ptr + "/lambda", c * m, m);
    LinMap action = rd.matrix(rd.member(j, ptr, "action_total"), ptr + "/action_total", m, m * n);
    LinMap delta = rd.matrix(rd.member(j, ptr, "delta"), ptr + "/delta", n * m, m);
    std::string l = rd.label(j, ptr, "Z");
    HComodule hc{Bicomodule{m, b->base(), std::move(lambda), std::move(rho), l}, std::move(delta), l};
    out.yd_module = make_yd(std::move(hc), std::move(action), *b);
  }

  if (doc.contains("bcc")) {
    const std::string ptr = "/bcc";
    if (!b) throw SchemaError(ptr, "a BCC needs a bicoalgebroid in this or the context document");
    const json& j = doc["bcc"];
    Coalgebra d = rd.coalgebra(rd.member(j, ptr, "coalgebra"), ptr + "/coalgebra");
    const std::size_t e = d.dim, c = b->c(), n = b->n();
    LinMap aug = rd.matrix(rd.member(j, ptr, "augmentation"), ptr + "/augmentation", c, e);
    const json& y = rd.member(j, ptr, "yd");
    LinMap action = rd.matrix(rd.member(y, ptr + "/yd", "action_total"), ptr + "/yd/action_total", e, e * n);
    LinMap delta = rd.matrix(rd.member(y, ptr + "/yd", "delta"), ptr + "/yd/delta", n * e, e);
    out.bcc = make_bcc(std::move(d), std::move(aug), std::move(action), std::move(delta), *b, rd.label(j, ptr, "D"));
    // Stored coactions are optional; when present they must be the π-induced ones.
    for (const char* key : {"rho", "lambda"}) {
      if (!y.contains(key)) continue;
      const bool is_rho = std::string(key) == "rho";
      LinMap given = rd.matrix(y[key], ptr + "/yd/" + key, is_rho ? e * c : c * e, e);
      const LinMap& induced = is_rho ? out.bcc->yd.comodule.module.rho : out.bcc->yd.comodule.module.lambda;
      if (!(given == induced)) throw SchemaError(ptr + "/yd/" + key, "does not match the coaction induced by the augmentation");
    }
  }
  return out;
}

Document read_document(const std::filesystem::path& path, const Bicoalgebroid* context) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), context);
}

std::string write_document(const Document& doc, int indent) {
  json out;
  if (doc.field.is_rational()) {
    out["field"] = "Q";
  } else {
    out["field"] = {{"Fp", doc.field.p}};
  }
  if (doc.coalgebra) out["coalgebra"] = write_coalgebra(*doc.coalgebra);
  if (doc.bicoalgebroid) {
    const Bicoalgebroid& b = *doc.bicoalgebroid;
    out["bicoalgebroid"] = {{"base", write_coalgebra(b.base())},   {"total", write_coalgebra(b.total())},
                            {"alpha", write_matrix(b.alpha())},    {"beta", write_matrix(b.beta())},
                            {"mu_total", write_matrix(b.mu_total())}, {"eta", write_matrix(b.eta())},
                            {"label", b.label()}};
  }
  if (!doc.bicomodules.empty() || !doc.h_comodules.empty()) {
    json list = json::array();
    for (const auto& m : doc.bicomodules) list.push_back(write_bicomodule(m));
    for (const auto& h : doc.h_comodules) {
      json e = write_bicomodule(h.module);
      e["kind"] = "h_comodule";
      e["delta"] = write_matrix(h.delta);
      e["label"] = h.label;
      list.push_back(std::move(e));
    }
    out["comodules"] = std::move(list);
  }
  if (doc.yd_module) {
    const YDModule& z = *doc.yd_module;
    out["yd_module"] = {{"space", z.dim()},
                        {"rho", write_matrix(z.comodule.module.rho)},
                        {"lambda", write_matrix(z.comodule.module.lambda)},
                        {"action_total", write_matrix(z.module.action_total)},
                        {"delta", write_matrix(z.comodule.delta)},
                        {"label", z.label()}};
  }
  if (doc.bcc) {
    const BCCData& d = *doc.bcc;
    out["bcc"] = {{"coalgebra", write_coalgebra(d.coalgebra)},
                  {"augmentation", write_matrix(d.augmentation)},
                  {"yd",
                   {{"action_total", write_matrix(d.yd.module.action_total)},
                    {"delta", write_matrix(d.yd.comodule.delta)},
                    {"rho", write_matrix(d.yd.comodule.module.rho)},
                    {"lambda", write_matrix(d.yd.comodule.module.lambda)}}},
                  {"label", d.yd.label()}};
  }
  return out.dump(indent);
}

std::string report_json(const CheckReport& r, int indent) {
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json e = {{"name", c.name}, {"passed", c.passed()}, {"evaluations", c.evaluations}};
    if (c.witness) {
      e["witness"] = {{"basis_index", c.witness->basis_index}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}, {"note", c.witness->note}};
    } else {
      e["witness"] = nullptr;
    }
    checks.push_back(std::move(e));
  }
  return json{{"passed", r.passed()}, {"checks", std::move(checks)}}.dump(indent);
}

}  // namespace bicoalg
