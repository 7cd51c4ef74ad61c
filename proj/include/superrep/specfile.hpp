#pragma once

#include <string>
#include <vector>

#include "superrep/supermodule.hpp"

// nlohmann::json forward declaration via the single header
#include "json.hpp"

namespace srep {

struct NamedModule {
  std::string name;
  SuperModule module;
};

// Parsed input file: an algebra that passes check_jacobi plus validated
// modules; see data/spec-schema.json for the format.
struct SpecFile {
  FieldTag field = FieldTag::ComplexQi;
  LieSuperAlgebra algebra;
  std::vector<NamedModule> modules;
  std::vector<GRat> lambda_samples;  // optional sample block
};

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SpecFile parse_spec_json(const nlohmann::json& doc);
SpecFile parse_spec_file(const std::string& path);

nlohmann::json serialize_spec(const SpecFile& spec);

// Builtin q(1) and trivial spec files, with L_lambda / C_mu sample modules
// for every lambda whose square root lies in the scalar field.
SpecFile builtin_spec(const std::string& name, FieldTag field,
                      const std::vector<GRat>& lambda_samples);

// Graded / ungraded degree-0 seed modules for a RegistryStore.
std::vector<SuperModule> graded_seed_modules(const SpecFile& spec);
std::vector<SuperModule> ungraded_seed_modules(const SpecFile& spec);

}  // namespace srep
