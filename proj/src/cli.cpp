#include "superrep/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "superrep/kring.hpp"
#include "superrep/specfile.hpp"

namespace srep {

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string input;
  std::string builtin;
  std::string field = "C";
  std::string format = "text";
  std::string degrees = "0..0";
  std::string variant = "six-complex";
  std::string lambdas = "4,-4";
  unsigned seed = 12345;
};

FieldTag parse_field(const std::string& f) {
  if (f == "R") return FieldTag::RealQ;
  if (f == "C") return FieldTag::ComplexQi;
  throw SpecError("--field must be R or C");
}

std::pair<long, long> parse_degree_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      long n = std::stol(s);
      return {n, n};
    }
    long a = std::stol(s.substr(0, dots));
    long b = std::stol(s.substr(dots + 2));
    if (a < 0 || b < a) throw SpecError("bad --degrees range");
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw SpecError("bad --degrees range '" + s + "'");
  }
}

std::vector<GRat> parse_lambdas(const std::string& s) {
  std::vector<GRat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto z = parse_grat(item);
    if (!z) throw SpecError("bad --lambda entry '" + item + "'");
    out.push_back(*z);
  }
  return out;
}

SpecFile load_spec(const CommonOpts& opt) {
  if (!opt.input.empty() && !opt.builtin.empty())
    throw SpecError("choose either --input or --builtin");
  if (!opt.input.empty()) return parse_spec_file(opt.input);
  std::string name = opt.builtin.empty() ? "trivial" : opt.builtin;
  return builtin_spec(name, parse_field(opt.field), parse_lambdas(opt.lambdas));
}

// base Clifford signature for "clifford:p,q" builtins
CliffordSignature base_signature(const CommonOpts& opt) {
  if (opt.builtin.rfind("clifford:", 0) == 0)
    return builtin_context(opt.builtin, parse_field(opt.field)).signature;
  return {0, 0};
}

std::string tag_text(const IrreducibleTag& t) {
  std::string s = t.type_q ? "Q" : "M";
  switch (t.division) {
    case RealDivision::R: s += ", div R"; break;
    case RealDivision::C: s += ", div C"; break;
    case RealDivision::H: s += ", div H"; break;
    case RealDivision::NotApplicable: break;
  }
  s += t.self_dual ? ", self-dual" : ", not self-dual";
  switch (t.involution) {
    case InvolutionVerdict::Yes: s += ", involution yes"; break;
    case InvolutionVerdict::No: s += ", involution no"; break;
    case InvolutionVerdict::Undecided: s += ", involution undecided"; break;
  }
  return s;
}

int emit(const json& doc, const std::string& text, const CommonOpts& opt,
         std::ostream& out) {
  if (opt.format == "json")
    out << doc.dump(2) << "\n";
  else
    out << text;
  return 0;
}

int cmd_validate(const CommonOpts& opt, std::ostream& out) {
  SpecFile spec = load_spec(opt);  // parse already validates everything
  json doc;
  doc["command"] = "validate";
  doc["jacobi"] = "pass";
  doc["modules"] = json::array();
  std::ostringstream text;
  text << "algebra: Jacobi identity pass\n";
  for (const auto& nm : spec.modules) {
    doc["modules"].push_back({{"name", nm.name}, {"status", "pass"}});
    text << "module " << nm.name << ": pass\n";
  }
  emit(doc, text.str(), opt, out);
  return 0;
}

int cmd_classify(const CommonOpts& opt, std::ostream& out) {
  SpecFile spec = load_spec(opt);
  json doc;
  doc["command"] = "classify";
  doc["modules"] = json::array();
  std::ostringstream text;
  for (const auto& nm : spec.modules) {
    CompositionReport rep = composition_factors(nm.module, opt.seed);
    json jm;
    jm["name"] = nm.name;
    jm["factors"] = json::array();
    text << nm.name << ":\n";
    for (const auto& f : rep.factors) {
      json jf;
      jf["multiplicity"] = f.multiplicity;
      jf["certified"] = f.certified;
      std::string dims =
          f.module.graded
              ? "(" + std::to_string(f.module.space.dim_even) + "|" +
                    std::to_string(f.module.space.dim_odd) + ")"
              : std::to_string(f.module.dim());
      jf["dims"] = dims;
      std::string tagtext;
      if (f.module.graded) {
        try {
          IrreducibleTag tag = classify_irreducible(f.module);
          tagtext = tag_text(tag);
          jf["type"] = tag.type_q ? "Q" : "M";
          jf["self_dual"] = tag.self_dual;
        } catch (const std::exception& e) {
          tagtext = std::string("tag error: ") + e.what();
          jf["tag_error"] = e.what();
        }
      }
      jf["note"] = f.note;
      text << "  " << f.multiplicity << " x dim " << dims
           << (f.certified ? " [certified] " : " [presumed] ") << tagtext
           << "\n";
      jm["factors"].push_back(std::move(jf));
    }
    doc["modules"].push_back(std::move(jm));
  }
  emit(doc, text.str(), opt, out);
  return 0;
}

RegistryStore make_store(const CommonOpts& opt, const SpecFile& spec) {
  return RegistryStore(spec.algebra, spec.field, graded_seed_modules(spec),
                       ungraded_seed_modules(spec));
}

int cmd_kgroups(const CommonOpts& opt, std::ostream& out) {
  SpecFile spec = load_spec(opt);
  CliffordSignature base = base_signature(opt);
  RegistryStore store = make_store(opt, spec);
  auto [lo, hi] = parse_degree_range(opt.degrees);
  json doc;
  doc["command"] = "kgroups";
  doc["field"] = field_name(spec.field);
  doc["degrees"] = json::array();
  std::ostringstream text;
  text << "n : rank RZ2 | rank R+ | rank R- | SR\n";
  for (long n = lo; n <= hi; ++n) {
    DegreeGroups g = degree_groups(store, base.p + n, base.q);
    doc["degrees"].push_back({{"n", n},
                              {"rz2_rank", g.rz2_rank},
                              {"rplus_rank", g.rplus_rank},
                              {"rminus_rank", g.rminus_rank},
                              {"sr", g.sr.to_text()}});
    text << n << " : " << g.rz2_rank << " | " << g.rplus_rank << " | "
         << g.rminus_rank << " | " << g.sr.to_text() << "\n";
  }
  emit(doc, text.str(), opt, out);
  return 0;
}

int cmd_abs_table(const CommonOpts& opt, std::ostream& out) {
  CommonOpts o = opt;
  o.builtin = "trivial";
  SpecFile spec = load_spec(o);
  RegistryStore store = make_store(o, spec);
  auto [lo, hi] = parse_degree_range(opt.degrees);
  json doc;
  doc["command"] = "abs-table";
  doc["field"] = field_name(spec.field);
  doc["entries"] = json::array();
  std::ostringstream text;
  for (long n = lo; n <= hi; ++n) {
    DegreeGroups g = degree_groups(store, n, 0);
    doc["entries"].push_back({{"n", n}, {"sr", g.sr.to_text()}});
    text << "SR^{-" << n << "}(pt) = " << g.sr.to_text() << "\n";
  }
  emit(doc, text.str(), opt, out);
  return 0;
}

int cmd_exactseq(const CommonOpts& opt, std::ostream& out) {
  SpecFile spec = load_spec(opt);
  RegistryStore store = make_store(opt, spec);
  SequenceVariant variant;
  if (opt.variant == "six-complex")
    variant = SequenceVariant::SixComplex;
  else if (opt.variant == "six-real")
    variant = SequenceVariant::SixReal;
  else if (opt.variant == "twentyfour")
    variant = SequenceVariant::TwentyFour;
  else
    throw SpecError("--variant must be six-complex, six-real or twentyfour");
  auto [lo, hi] = parse_degree_range(opt.degrees);
  (void)hi;
  ExactSequence seq = build_sequence(store, variant, lo);
  std::vector<NodeVerdict> verdicts = check_exactness(seq);

  json doc;
  doc["command"] = "exactseq";
  doc["variant"] = opt.variant;
  doc["nodes"] = json::array();
  std::ostringstream text;
  bool all = true;
  auto group_of = [&](const std::string& name) -> std::string {
    for (const auto& node : seq.nodes)
      if (node.name == name) return node.invariants.to_text();
    return "?";
  };
  for (const auto& v : verdicts) {
    all = all && v.exact;
    doc["nodes"].push_back({{"name", v.node},
                            {"group", group_of(v.node)},
                            {"exact", v.exact},
                            {"detail", v.detail}});
    text << (v.exact ? "exact " : "FAIL  ") << v.node << " = "
         << group_of(v.node);
    if (!v.detail.empty()) text << "  (" << v.detail << ")";
    text << "\n";
  }
  doc["all_exact"] = all;
  text << (all ? "all nodes exact" : "exactness FAILED") << " ("
       << verdicts.size() << " nodes)\n";
  emit(doc, text.str(), opt, out);
  return all ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact representation groups of Lie superalgebras"};
  app.require_subcommand(1);
  CommonOpts opt;

  auto add_common = [&](CLI::App* sub, bool with_degrees) {
    sub->add_option("--input", opt.input, "spec file (JSON)");
    sub->add_option("--builtin", opt.builtin,
                    "trivial | q1 | clifford:p,q");
    sub->add_option("--field", opt.field, "R | C");
    sub->add_option("--format", opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--lambda", opt.lambdas, "q1 sample values");
    sub->add_option("--seed", opt.seed, "random seed for the factor search");
    if (with_degrees)
      sub->add_option("--degrees", opt.degrees, "degree or range a..b");
  };

  CLI::App* validate = app.add_subcommand("validate", "check algebra/modules");
  add_common(validate, false);
  CLI::App* classify =
      app.add_subcommand("classify", "composition factors and tags");
  add_common(classify, false);
  CLI::App* kgroups =
      app.add_subcommand("kgroups", "per-degree group invariants");
  add_common(kgroups, true);
  CLI::App* exactseq =
      app.add_subcommand("exactseq", "verify a periodic exact sequence");
  add_common(exactseq, true);
  exactseq->add_option("--variant", opt.variant,
                       "six-complex | six-real | twentyfour");
  CLI::App* abs_table =
      app.add_subcommand("abs-table", "SR^{-n} of a point");
  add_common(abs_table, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, out);
    if (classify->parsed()) return cmd_classify(opt, out);
    if (kgroups->parsed()) return cmd_kgroups(opt, out);
    if (exactseq->parsed()) return cmd_exactseq(opt, out);
    if (abs_table->parsed()) return cmd_abs_table(opt, out);
    err << "error: no subcommand\n";
    return 2;
  } catch (const SpecError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace srep
