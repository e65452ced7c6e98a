#include "sdep/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sdep/error.hpp"
#include "sdep/hilbert.hpp"
#include "sdep/io.hpp"
#include "sdep/module.hpp"
#include "sdep/polytope.hpp"
#include "sdep/stanley.hpp"

namespace sdep::cli {

namespace {

constexpr const char* kFormats = R"(File formats (full grammar in docs/formats.md):
  module         {"ring":{"n":2,"field":"Q"|{"Fp":5}}, "g":[1,1] (optional),
                  "module":{"kind":"presentation"|"monomial_ideal"|
                  "quotient_by_monomial_ideal"|"free"|"direct_sum", ...}}
  decomposition  {"summands":[{"vars":[1,2],"shift":[0,1],"mult":1}, ...]}
                 or {"intervals":[{"a":[..],"b":[..],"mult":1}, ...]}
  certificate    module + "g" + "decomposition" + {"witness":{"Y[1,1]":"3", ...}}
  solution       one "name<TAB>value" per line, names as in the .sip export
Exit status: 0 success, 1 negative verdict (not_induced, rejected certificate),
2 error. SDEP_THREADS sets the default for --threads.)";

struct Config {
  std::string module_path;
  std::string second_path;
  std::string field;
  std::string g;
  std::string mode = "auto";
  std::string output;
  std::string max_subset = std::to_string(kDefaultMaxSubset);
  std::size_t depth = 0;
  std::optional<std::size_t> probe_depth;
  std::uint64_t seed = 1;
  int threads = 1;
  bool stanley_check = false;
};

MultiDegree parse_g(const std::string& text, std::size_t n) {
  std::string s = text;
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ','; }, ' ');
  std::istringstream in(s);
  std::vector<int> c;
  for (int v; in >> v;) c.push_back(v);
  if (!in.eof() || c.size() != n) {
    throw Error(ErrorKind::kParse, "--g '" + text + "' is not a degree with " + std::to_string(n) +
                                       " entries");
  }
  return MultiDegree(std::move(c));
}

struct Loaded {
  io::ModuleFile file;
  GradedModule gm;
};

Loaded load(const Config& cfg) {
  std::optional<FieldSpec> field;
  if (!cfg.field.empty()) field = FieldSpec::parse(cfg.field);
  io::ModuleFile mf = io::read_module_file(cfg.module_path, field);
  if (!cfg.g.empty()) mf.g = parse_g(cfg.g, mf.presentation.n);
  GradedModule gm = GradedModule::build(mf.presentation, mf.g, cfg.threads);
  const GDeterminedReport rep = verify_g_determined(gm);
  if (!rep.ok) {
    throw Error(ErrorKind::kPrecondition,
                cfg.module_path + ": not g-determined for g = " + gm.g().to_string() + ": X" +
                    std::to_string(rep.variable + 1) + " is not an isomorphism at " +
                    rep.degree->to_string());
  }
  return {std::move(mf), std::move(gm)};
}

CheckOptions check_options(const Config& cfg) {
  CheckOptions o;
  o.mode = parse_check_mode(cfg.mode);
  o.threads = cfg.threads;
  o.seed = cfg.seed;
  return o;
}

void print_decomposition(std::ostream& out, const HilbertDecomposition& d) {
  HilbertDecomposition c = d;
  c.canonicalize();
  for (const Summand& s : c.summands) out << "  " << s.to_string() << "\n";
}

void print_witness(std::ostream& out, const Assignment& w) {
  for (const auto& [v, s] : w) out << "  " << v.to_string() << " = " << s.to_string() << "\n";
}

std::optional<std::size_t> parse_max_subset(const std::string& text) {
  if (text == "all" || text == "inf") return std::nullopt;
  std::size_t k = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc() || end != text.data() + text.size() || k == 0) {
    throw Error(ErrorKind::kParse, "--max-subset expects a positive integer or 'all'");
  }
  return k;
}

int cmd_info(const Config& cfg, std::ostream& out) {
  std::optional<FieldSpec> field;
  if (!cfg.field.empty()) field = FieldSpec::parse(cfg.field);
  io::ModuleFile mf = io::read_module_file(cfg.module_path, field);
  if (!cfg.g.empty()) mf.g = parse_g(cfg.g, mf.presentation.n);
  const ModulePresentation& p = mf.presentation;
  out << "ring: n = " << p.n << ", field = " << p.field.to_string() << "\n";
  out << "generators: " << p.generators.size() << ", relations: " << p.relations.size() << "\n";
  const GradedModule gm = GradedModule::build(p, mf.g, cfg.threads);
  out << "g = " << gm.g().to_string() << (mf.g ? "" : " (componentwise max of the presentation)")
      << "\n";
  long total = 0;
  for (std::size_t i = 0; i < gm.g_box().size(); ++i) {
    total += static_cast<long>(gm.hilbert_function(gm.g_box().degree(i)));
  }
  out << "sum of dim M_a over [0,g]: " << total << "\n";
  const GDeterminedReport rep = verify_g_determined(gm);
  if (rep.ok) {
    out << "g-determined: yes\n";
  } else {
    out << "g-determined: no (X" << rep.variable + 1 << " is not an isomorphism at "
        << rep.degree->to_string() << ")\n";
  }
  return kExitOk;
}

int cmd_hseries(const Config& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  out << "# a dim M_a, a in [0," << l.gm.g().to_string() << "]\n";
  out << truncated_series(l.gm).to_string();
  return kExitOk;
}

int cmd_hdepth(const Config& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  if (cfg.probe_depth) {
    bool found = false;
    const EnumerationStats st =
        enumerate_partitions(truncated_series(l.gm), *cfg.probe_depth, [&](const HilbertPartition&) {
          found = true;
          return false;
        });
    out << "partition of depth >= " << *cfg.probe_depth << ": " << (found ? "found" : "none")
        << " (" << st.nodes << " search nodes)\n";
    return kExitOk;
  }
  out << "hdepth = " << hdepth(l.gm).to_string() << "\n";
  return kExitOk;
}

int cmd_sdepth(const Config& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  SdepthOptions opts;
  opts.check = check_options(cfg);
  opts.witness.seed = cfg.seed;
  const SdepthResult r = sdepth(l.gm, opts);
  out << "sdepth = " << r.depth.to_string() << "\n";
  out << "decompositions tested: " << r.decompositions_tested << "\n";
  out << "decomposition:\n";
  print_decomposition(out, r.decomposition);
  out << "witness:\n";
  print_witness(out, r.witness.values);
  if (!cfg.output.empty()) {
    io::Certificate cert{l.gm.presentation(), l.gm.g(), r.decomposition, r.witness.values,
                         r.depth};
    io::write_text_file(cfg.output, io::certificate_to_json(cert).dump(2) + "\n");
    out << "certificate: " << cfg.output << "\n";
  }
  return kExitOk;
}

HilbertDecomposition load_decomposition(const Config& cfg, const GradedModule& gm) {
  return io::read_decomposition_file(cfg.second_path, gm.n(), gm.g());
}

int cmd_check(const Config& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const HilbertDecomposition d = load_decomposition(cfg, l.gm);
  const CheckReport r = check_decomposition(l.gm, d, check_options(cfg));
  out << "field: " << l.gm.field().to_string() << "\n";
  out << "mode: " << to_string(r.mode) << "\n";
  out << "verdict: " << (r.induced ? "induced" : "not_induced") << "\n";
  if (r.failing_degree) out << "failing degree: " << r.failing_degree->to_string() << "\n";
  if (r.reduced_product_zero) {
    out << "reduced product zero: " << (*r.reduced_product_zero ? "yes" : "no") << "\n";
  }
  out << "detail: " << r.detail << "\n";
  return r.induced ? kExitOk : kExitNegative;
}

int cmd_certify(const Config& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const HilbertDecomposition d = load_decomposition(cfg, l.gm);
  WitnessOptions wo;
  wo.seed = cfg.seed;
  const StanleyWitness w = extract_witness(l.gm, d, wo);
  io::Certificate cert{l.gm.presentation(), l.gm.g(), d, w.values, std::nullopt};
  const std::string text = io::certificate_to_json(cert).dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    io::write_text_file(cfg.output, text);
    out << "witness:\n";
    print_witness(out, w.values);
    out << "certificate: " << cfg.output << "\n";
  }
  return kExitOk;
}

int cmd_verify_cert(const Config& cfg, std::ostream& out) {
  const io::Certificate cert = io::read_certificate_file(cfg.module_path);
  const GradedModule gm = GradedModule::build(cert.presentation, cert.g, cfg.threads);
  const GDeterminedReport g_rep = verify_g_determined(gm);
  if (!g_rep.ok) {
    out << "rejected: module is not g-determined at " << g_rep.degree->to_string() << "\n";
    return kExitNegative;
  }
  const ValidationResult v = validate_decomposition(cert.decomposition, gm);
  if (!v.ok) {
    out << "rejected: " << v.reason << "\n";
    return kExitNegative;
  }
  const WitnessVerification w = verify_witness(gm, cert.decomposition, cert.witness, cfg.threads);
  if (!w.ok) {
    out << "rejected: A_a is singular at " << w.failing_degree->to_string() << "\n";
    return kExitNegative;
  }
  if (cert.sdepth && *cert.sdepth != cert.decomposition.depth()) {
    out << "rejected: claims sdepth " << cert.sdepth->to_string() << " but the decomposition has depth "
        << cert.decomposition.depth().to_string() << "\n";
    return kExitNegative;
  }
  out << "accepted: " << w.transcript.size() << " degrees, every A_a invertible\n";
  out << "decomposition depth: " << cert.decomposition.depth().to_string() << "\n";
  return kExitOk;
}

int cmd_export(const Config& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const LinearSystem sys =
      build_stanley_inequalities(l.gm, parse_max_subset(cfg.max_subset), cfg.depth, cfg.threads);
  export_ip(sys, cfg.output);
  out << "variables: " << sys.variables.size() << "\n";
  out << "equalities: " << sys.equalities.size() << "\n";
  out << "inequalities: " << sys.inequalities.size()
      << (sys.relaxation() ? " (relaxation: subsets of size <= " + cfg.max_subset + ")" : "")
      << "\n";
  out << "wrote " << cfg.output << ".sip and " << cfg.output << ".lp\n";
  return kExitOk;
}

int cmd_import(const Config& cfg, std::ostream& out) {
  const Loaded l = load(cfg);
  const LinearSystem sys = build_hilbert_system(l.gm, cfg.depth);
  std::ifstream in(cfg.second_path);
  if (!in) throw Error(ErrorKind::kParse, cfg.second_path + ": cannot open");
  const HilbertDecomposition d = import_solution(sys, in, cfg.second_path);
  const ValidationResult v = validate_decomposition(d, l.gm);
  if (!v.ok) throw Error(ErrorKind::kPrecondition, cfg.second_path + ": " + v.reason);
  out << "depth: " << d.depth().to_string() << "\n";
  out << "decomposition:\n";
  print_decomposition(out, d);
  int code = kExitOk;
  if (cfg.stanley_check) {
    const CheckReport r = check_decomposition(l.gm, d, check_options(cfg));
    out << "verdict: " << (r.induced ? "induced" : "not_induced") << "\n";
    if (r.failing_degree) out << "failing degree: " << r.failing_degree->to_string() << "\n";
    if (!r.induced) code = kExitNegative;
  }
  if (!cfg.output.empty()) {
    io::write_text_file(cfg.output, io::decomposition_to_json(d).dump(2) + "\n");
    out << "decomposition file: " << cfg.output << "\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert depth, Stanley depth and Stanley-check for multigraded modules", "sdep"};
  app.footer(kFormats);
  app.require_subcommand(1);
  Config cfg;

  auto add_module = [&](CLI::App* sub) {
    sub->add_option("module", cfg.module_path, "module JSON file")->required();
    sub->add_option("--field", cfg.field, "override the field: Q or F<p>");
    sub->add_option("--g", cfg.g, "override g, e.g. 1,1");
    sub->add_option("--threads", cfg.threads, "worker threads")
        ->envname("SDEP_THREADS")
        ->check(CLI::PositiveNumber);
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode,
                    "auto, symbolic, finite, unified, transversal or randomized");
    sub->add_option("--seed", cfg.seed, "seed for randomized steps");
  };

  CLI::App* info = app.add_subcommand("info", "ring, g and the g-determinedness report");
  add_module(info);
  CLI::App* hs = app.add_subcommand("hseries", "dim M_a for a in [0,g]");
  add_module(hs);
  CLI::App* hd = app.add_subcommand("hdepth", "Hilbert depth by partition search");
  add_module(hd);
  hd->add_option("--depth", cfg.probe_depth, "only decide whether some partition has depth >= s");
  CLI::App* sd = app.add_subcommand("sdepth", "Stanley depth with a witness");
  add_module(sd);
  add_mode(sd);
  sd->add_option("-o,--output", cfg.output, "write a certificate here");
  CLI::App* ck = app.add_subcommand("check", "is a decomposition induced by a Stanley one");
  add_module(ck);
  ck->add_option("decomposition", cfg.second_path, "decomposition JSON file")->required();
  add_mode(ck);
  CLI::App* ce = app.add_subcommand("certify", "find a witness and emit a certificate");
  add_module(ce);
  ce->add_option("decomposition", cfg.second_path, "decomposition JSON file")->required();
  ce->add_option("--seed", cfg.seed, "seed for randomized steps");
  ce->add_option("-o,--output", cfg.output, "certificate path (default: stdout)");
  CLI::App* vc = app.add_subcommand("verify-cert", "re-check a certificate from scratch");
  vc->add_option("certificate", cfg.module_path, "certificate JSON file")->required();
  vc->add_option("--threads", cfg.threads, "worker threads")
      ->envname("SDEP_THREADS")
      ->check(CLI::PositiveNumber);
  CLI::App* ex = app.add_subcommand("export-polytope", "write the integer program (.sip, .lp)");
  add_module(ex);
  ex->add_option("--depth", cfg.depth, "only summands K[Z] with |Z| >= depth");
  ex->add_option("--max-subset", cfg.max_subset, "largest |J| in the subset inequalities, or all");
  ex->add_option("-o,--output", cfg.output, "output stem")->required();
  CLI::App* im = app.add_subcommand("import-solution", "read an integer solution back");
  add_module(im);
  im->add_option("solution", cfg.second_path, "name<TAB>value listing")->required();
  im->add_option("--depth", cfg.depth, "the --depth used for the export");
  im->add_flag("--check", cfg.stanley_check, "also run the Stanley check");
  add_mode(im);
  im->add_option("-o,--output", cfg.output, "write the decomposition JSON here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (info->parsed()) return cmd_info(cfg, out);
    if (hs->parsed()) return cmd_hseries(cfg, out);
    if (hd->parsed()) return cmd_hdepth(cfg, out);
    if (sd->parsed()) return cmd_sdepth(cfg, out);
    if (ck->parsed()) return cmd_check(cfg, out);
    if (ce->parsed()) return cmd_certify(cfg, out);
    if (vc->parsed()) return cmd_verify_cert(cfg, out);
    if (ex->parsed()) return cmd_export(cfg, out);
    if (im->parsed()) return cmd_import(cfg, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace sdep::cli
