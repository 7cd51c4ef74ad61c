#include "superrep/specfile.hpp"

#include <fstream>

namespace srep {

namespace {

using nlohmann::json;

GRat parse_scalar_or_throw(const json& j, const std::string& where) {
  if (!j.is_string())
    throw SpecError(where + ": scalar entries are strings like \"1/2\" or "
                            "\"1/2+3*i\"");
  auto z = parse_grat(j.get<std::string>());
  if (!z) throw SpecError(where + ": cannot parse scalar '" +
                          j.get<std::string>() + "'");
  return *z;
}

ExactMatrix parse_matrix(const json& j, size_t dim, FieldTag field,
                         const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw SpecError(where + ": expected " + std::to_string(dim) + " rows");
  ExactMatrix m(dim, dim, field);
  for (size_t i = 0; i < dim; ++i) {
    if (!j[i].is_array() || j[i].size() != dim)
      throw SpecError(where + ": row " + std::to_string(i) + " must have " +
                      std::to_string(dim) + " entries");
    for (size_t k = 0; k < dim; ++k) {
      GRat z = parse_scalar_or_throw(j[i][k], where);
      if (field == FieldTag::RealQ && z.im != 0)
        throw SpecError(where + ": imaginary entry in a RealQ matrix");
      m.at(i, k) = z;
    }
  }
  return m;
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

size_t generator_index(const LieSuperAlgebra& g, const std::string& name,
                       const std::string& where) {
  for (size_t i = 0; i < g.dim(); ++i)
    if (g.names[i] == name) return i;
  throw SpecError(where + ": unknown generator '" + name + "'");
}

}  // namespace

SpecFile parse_spec_json(const json& doc) {
  SpecFile spec;
  if (!doc.is_object()) throw SpecError("top level must be a JSON object");
  std::string field = doc.value("field", "C");
  if (field == "C")
    spec.field = FieldTag::ComplexQi;
  else if (field == "R")
    spec.field = FieldTag::RealQ;
  else
    throw SpecError("field must be \"R\" or \"C\"");

  std::vector<std::string> even, odd;
  json alg = doc.value("algebra", json::object());
  for (const auto& n : alg.value("even", json::array()))
    even.push_back(n.get<std::string>());
  for (const auto& n : alg.value("odd", json::array()))
    odd.push_back(n.get<std::string>());
  spec.algebra = make_algebra(spec.field, even, odd);

  const size_t n = spec.algebra.dim();
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (const auto& br : alg.value("brackets", json::array())) {
    std::string where = "bracket [" + br.value("left", "?") + "," +
                        br.value("right", "?") + "]";
    size_t i = generator_index(spec.algebra, br.at("left"), where);
    size_t j = generator_index(spec.algebra, br.at("right"), where);
    given[i][j] = true;
    for (const auto& [gen, coeff] : br.at("terms").items()) {
      size_t k = generator_index(spec.algebra, gen, where);
      spec.algebra.c[i][j][k] = parse_scalar_or_throw(coeff, where);
    }
  }
  // complete the unstated mirror brackets by super antisymmetry
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!given[i][j] || given[j][i]) continue;
      int sgn = koszul_sign(spec.algebra.parity_of(i),
                            spec.algebra.parity_of(j));
      for (size_t k = 0; k < n; ++k)
        spec.algebra.c[j][i][k] = GRat(-sgn) * spec.algebra.c[i][j][k];
    }
  if (auto rep = check_jacobi(spec.algebra); !rep.ok)
    throw SpecError("algebra: " + rep.message);

  for (const auto& jm : doc.value("modules", json::array())) {
    std::string name = jm.value("name", "?");
    std::string where = "module '" + name + "'";
    NamedModule nm;
    nm.name = name;
    SuperModule& m = nm.module;
    bool graded = jm.value("graded", true);
    size_t p = 0, q = 0;
    if (jm.contains("signature")) {
      p = jm["signature"].at(0).get<size_t>();
      q = jm["signature"].at(1).get<size_t>();
    }
    m.context = ShiftedContext{spec.algebra, {p, q}};
    m.graded = graded;
    if (graded) {
      size_t de = jm.at("dim_even").get<size_t>();
      size_t dodd = jm.at("dim_odd").get<size_t>();
      m.space = SuperSpace{de, dodd, spec.field};
    } else {
      m.space = SuperSpace{jm.at("dim").get<size_t>(), 0, spec.field};
    }
    const json actions = jm.value("actions", json::object());
    auto action_of = [&](const std::string& key,
                         bool required) -> ExactMatrix {
      if (!actions.contains(key)) {
        if (required)
          throw SpecError(where + ": missing action for '" + key + "'");
        return ExactMatrix::zero(m.dim(), m.dim(), spec.field);
      }
      return parse_matrix(actions[key], m.dim(), spec.field,
                          where + " action '" + key + "'");
    };
    for (size_t i = 0; i < spec.algebra.dim(); ++i)
      m.g_action.push_back(action_of(spec.algebra.names[i], false));
    for (size_t k = 1; k <= p; ++k)
      m.e_action.push_back(action_of("e" + std::to_string(k), true));
    for (size_t k = 1; k <= q; ++k)
      m.f_action.push_back(action_of("f" + std::to_string(k), true));
    if (auto rep = validate_module(m); !rep.ok)
      throw SpecError(where + ": " + rep.message);
    spec.modules.push_back(std::move(nm));
  }

  if (doc.contains("samples")) {
    for (const auto& s : doc["samples"].value("lambda", json::array()))
      spec.lambda_samples.push_back(
          parse_scalar_or_throw(s, "samples.lambda"));
  }
  return spec;
}

SpecFile parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("JSON syntax error: ") + e.what());
  }
  return parse_spec_json(doc);
}

json serialize_spec(const SpecFile& spec) {
  json doc;
  doc["field"] = spec.field == FieldTag::RealQ ? "R" : "C";
  json alg;
  alg["even"] = json::array();
  alg["odd"] = json::array();
  for (size_t i = 0; i < spec.algebra.dim(); ++i)
    (i < spec.algebra.n_even ? alg["even"] : alg["odd"])
        .push_back(spec.algebra.names[i]);
  json brackets = json::array();
  for (size_t i = 0; i < spec.algebra.dim(); ++i)
    for (size_t j = i; j < spec.algebra.dim(); ++j) {
      json terms = json::object();
      for (size_t k = 0; k < spec.algebra.dim(); ++k)
        if (!spec.algebra.coeff(i, j, k).is_zero())
          terms[spec.algebra.names[k]] = to_string(spec.algebra.coeff(i, j, k));
      if (!terms.empty())
        brackets.push_back({{"left", spec.algebra.names[i]},
                            {"right", spec.algebra.names[j]},
                            {"terms", terms}});
    }
  alg["brackets"] = std::move(brackets);
  doc["algebra"] = std::move(alg);

  json modules = json::array();
  for (const auto& nm : spec.modules) {
    const SuperModule& m = nm.module;
    json jm;
    jm["name"] = nm.name;
    jm["graded"] = m.graded;
    jm["signature"] = {m.context.signature.p, m.context.signature.q};
    if (m.graded) {
      jm["dim_even"] = m.space.dim_even;
      jm["dim_odd"] = m.space.dim_odd;
    } else {
      jm["dim"] = m.dim();
    }
    json actions;
    for (size_t i = 0; i < spec.algebra.dim(); ++i)
      if (!m.g_action[i].is_zero())
        actions[spec.algebra.names[i]] = matrix_to_json(m.g_action[i]);
    for (size_t k = 0; k < m.e_action.size(); ++k)
      actions["e" + std::to_string(k + 1)] = matrix_to_json(m.e_action[k]);
    for (size_t k = 0; k < m.f_action.size(); ++k)
      actions["f" + std::to_string(k + 1)] = matrix_to_json(m.f_action[k]);
    jm["actions"] = std::move(actions);
    modules.push_back(std::move(jm));
  }
  doc["modules"] = std::move(modules);
  if (!spec.lambda_samples.empty()) {
    json lam = json::array();
    for (const auto& l : spec.lambda_samples) lam.push_back(to_string(l));
    doc["samples"] = {{"lambda", std::move(lam)}};
  }
  return doc;
}

namespace {

SuperModule trivial_graded_module(const LieSuperAlgebra& g, size_t de,
                                  size_t dodd) {
  SuperModule m;
  m.context = ShiftedContext{g, {0, 0}};
  m.space = SuperSpace{de, dodd, g.field};
  m.graded = true;
  m.g_action.assign(g.dim(),
                    ExactMatrix::zero(de + dodd, de + dodd, g.field));
  return m;
}

}  // namespace

SpecFile builtin_spec(const std::string& name, FieldTag field,
                      const std::vector<GRat>& lambda_samples) {
  SpecFile spec;
  spec.field = field;
  if (name == "trivial" || name.rfind("clifford:", 0) == 0) {
    spec.algebra = builtin_trivial(field);
    return spec;
  }
  if (name != "q1") throw SpecError("unknown builtin '" + name + "'");
  spec.algebra = builtin_q1(field);
  spec.lambda_samples = lambda_samples;

  spec.modules.push_back({"I", trivial_graded_module(spec.algebra, 1, 0)});
  spec.modules.push_back({"Pi", trivial_graded_module(spec.algebra, 0, 1)});

  auto ungraded_c = [&](const std::string& nm, const GRat& mu) {
    SuperModule m;
    m.context = ShiftedContext{spec.algebra, {0, 0}};
    m.space = SuperSpace{1, 0, field};
    m.graded = false;
    ExactMatrix h(1, 1, field), qq(1, 1, field);
    h.at(0, 0) = mu * mu;
    qq.at(0, 0) = mu;
    m.g_action = {h, qq};
    spec.modules.push_back({nm, std::move(m)});
  };
  ungraded_c("C0", GRat(0));

  for (const auto& lambda : lambda_samples) {
    auto root = exact_sqrt(lambda);
    if (!root || (field == FieldTag::RealQ && !root->is_real()))
      continue;  // no L_lambda model over this scalar field
    SuperModule m;
    m.context = ShiftedContext{spec.algebra, {0, 0}};
    m.space = SuperSpace{1, 1, field};
    m.graded = true;
    ExactMatrix h(2, 2, field), qq(2, 2, field);
    h.at(0, 0) = lambda;
    h.at(1, 1) = lambda;
    qq.at(0, 1) = *root;
    qq.at(1, 0) = *root;
    m.g_action = {h, qq};
    spec.modules.push_back({"L[" + to_string(lambda) + "]", std::move(m)});
    ungraded_c("C[" + to_string(*root) + "]", *root);
    ungraded_c("C[" + to_string(-*root) + "]", -*root);
  }
  return spec;
}

std::vector<SuperModule> graded_seed_modules(const SpecFile& spec) {
  std::vector<SuperModule> out;
  for (const auto& nm : spec.modules)
    if (nm.module.graded && nm.module.context.signature.total() == 0)
      out.push_back(nm.module);
  return out;
}

std::vector<SuperModule> ungraded_seed_modules(const SpecFile& spec) {
  std::vector<SuperModule> out;
  for (const auto& nm : spec.modules)
    if (!nm.module.graded && nm.module.context.signature.total() == 0)
      out.push_back(nm.module);
  return out;
}

}  // namespace srep
