// Command line front end: loads JSON descriptions of the structures, runs
// verification suites over them, constructs doubles, generates the built-in
// demo families, and emits reports in a stable schema.
//
// Exit codes: 0 when every check passes, 1 when some check fails, 2 for
// parse, schema, io or usage errors.  Malformed input never escapes as an
// uncaught exception.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hgc/demo.hpp"
#include "hgc/doihopf.hpp"
#include "hgc/double.hpp"
#include "hgc/graded.hpp"
#include "hgc/json_io.hpp"
#include "hgc/verify.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct Options {
  std::string format = "human";  // human | json
  bool full = false;             // lift the per-check witness cap
  std::int64_t seed = 0;         // recorded in every report
  std::string out;               // report path (check/verify), artifact path
                                 // (double/demo); stdout when empty
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hgc::Error("IoError", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof())
    throw hgc::Error("IoError", "cannot read '" + path + "'");
  return buf.str();
}

void spill(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hgc::Error("IoError", "cannot open '" + path + "' for writing");
  out << bytes;
  if (!out.good()) throw hgc::Error("IoError", "cannot write '" + path + "'");
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return "fnv1a64:" + hex;
}

/// Assembles the schema-stable report document.  `extra` carries
/// command-specific fields (kind, suite, form, artifact) in listed order.
hgc::Json make_report(const std::string& command, const std::string& input,
                      const std::string& digest, const Options& opt,
                      const std::vector<std::pair<std::string, std::string>>& extra,
                      const hgc::ValidationReport& rep) {
  hgc::Json doc;
  doc["report"] = "hgc.report";
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["input"] = input;
  doc["digest"] = digest;
  doc["seed"] = opt.seed;
  doc["sampling"] = "exhaustive";
  for (const auto& [key, value] : extra) doc[key] = value;

  std::map<std::string, std::vector<const hgc::CheckFailure*>> by_check;
  for (const auto& f : rep.failures()) by_check[f.check].push_back(&f);

  hgc::Json checks = hgc::Json::array();
  for (const auto& [id, st] : rep.stats()) {
    hgc::Json rec;
    rec["check"] = id;
    rec["status"] = st.failures == 0 ? "pass" : "fail";
    rec["instances"] = st.instances;
    rec["failures"] = st.failures;
    hgc::Json witnesses = hgc::Json::array();
    const auto it = by_check.find(id);
    if (it != by_check.end()) {
      for (const hgc::CheckFailure* f : it->second) {
        hgc::Json w;
        w["witness"] = f->witness;
        w["lhs"] = f->lhs;
        w["rhs"] = f->rhs;
        witnesses.push_back(std::move(w));
      }
    }
    rec["witnesses"] = std::move(witnesses);
    checks.push_back(std::move(rec));
  }
  doc["checks"] = std::move(checks);
  doc["overall"] = rep.ok() ? "pass" : "fail";
  return doc;
}

std::string render_human(const hgc::Json& r, bool full) {
  std::ostringstream os;
  os << "hgc " << r["command"].get<std::string>() << " "
     << r["input"].get<std::string>() << "\n";
  os << "  digest " << r["digest"].get<std::string>() << "  seed "
     << r["seed"].get<std::int64_t>() << "  sampling "
     << r["sampling"].get<std::string>() << "\n";
  for (const auto& [key, value] : r.items()) {
    if (key == "report" || key == "version" || key == "command" ||
        key == "input" || key == "digest" || key == "seed" ||
        key == "sampling" || key == "checks" || key == "overall")
      continue;
    os << "  " << key << " " << value.get<std::string>() << "\n";
  }
  std::size_t failed_checks = 0;
  for (const auto& rec : r["checks"]) {
    const bool pass = rec["status"].get<std::string>() == "pass";
    const auto instances = rec["instances"].get<std::uint64_t>();
    const auto failures = rec["failures"].get<std::uint64_t>();
    os << (pass ? "  pass  " : "  FAIL  ") << rec["check"].get<std::string>();
    if (pass)
      os << "  (" << instances << " instances)\n";
    else
      os << "  (" << failures << " of " << instances << " instances failed)\n";
    if (!pass) {
      ++failed_checks;
      const auto& ws = rec["witnesses"];
      const std::size_t cap = full ? ws.size() : std::min<std::size_t>(3, ws.size());
      for (std::size_t i = 0; i < cap; ++i) {
        os << "          witness: " << ws[i]["witness"].get<std::string>() << "\n";
        const std::string lhs = ws[i]["lhs"].get<std::string>();
        const std::string rhs = ws[i]["rhs"].get<std::string>();
        if (!lhs.empty()) os << "            lhs: " << lhs << "\n";
        if (!rhs.empty()) os << "            rhs: " << rhs << "\n";
      }
      if (cap < ws.size())
        os << "          ... " << (ws.size() - cap)
           << " more witnesses (rerun with --full)\n";
    }
  }
  const bool pass = r["overall"].get<std::string>() == "pass";
  os << (pass ? "overall: PASS" : "overall: FAIL") << " ("
     << r["checks"].size() << " checks";
  if (!pass) os << ", " << failed_checks << " failed";
  os << ")\n";
  return os.str();
}

/// Writes the report where the options say, returning the process exit code.
int deliver(const hgc::Json& report, const Options& opt) {
  const std::string text = opt.format == "json"
                               ? hgc::to_bytes(report)
                               : render_human(report, opt.full);
  if (opt.out.empty())
    std::cout << text;
  else
    spill(opt.out, text);
  return report["overall"].get<std::string>() == "pass" ? 0 : 1;
}

/// Folds a structural Error thrown by a checker into the report instead of
/// letting it escape: deep faults in parseable files are findings, not
/// crashes.
hgc::ValidationReport guarded(const std::string& id,
                              const std::function<hgc::ValidationReport()>& body) {
  try {
    return body();
  } catch (const hgc::Error& e) {
    hgc::ValidationReport rep;
    rep.count(id);
    rep.fail(id, e.what(), "", "");
    return rep;
  }
}

int cmd_check(const std::string& input, const Options& opt) {
  const std::string bytes = slurp(input);
  const std::string digest = fnv1a_hex(bytes);
  const hgc::Json doc = hgc::from_bytes(bytes);
  const std::string kind = hgc::kind_of(doc);

  hgc::ValidationReport rep;
  if (kind == "hopf_gc") {
    const hgc::HopfGC h = hgc::parse_hopf(doc);
    rep = guarded("family.integrity", [&] { return hgc::check_hopf(h); });
  } else if (kind == "graded_algebra") {
    const hgc::GradedAlgebra a = hgc::parse_graded_algebra(doc);
    rep = guarded("algebra.integrity", [&] { return hgc::check_graded_algebra(a); });
  } else if (kind == "graded_module") {
    const hgc::GradedModule m = hgc::parse_graded_module(doc);
    rep = guarded("algebra.integrity", [&] { return hgc::check_graded_algebra(m.alg); });
    rep.merge(guarded("module.integrity", [&] { return hgc::check_graded_module(m); }));
  } else if (kind == "doihopf_datum") {
    const hgc::DoiHopfDatumTk d = hgc::parse_doihopf_datum(doc);
    rep = guarded("datum.integrity", [&] { return hgc::check_doihopf_datum(d); });
  } else if (kind == "yd_module") {
    const hgc::YDModule m = hgc::parse_yd_module(doc);
    rep = guarded("family.integrity", [&] { return hgc::check_hopf(m.h); });
    rep.merge(guarded("module.integrity", [&] { return hgc::check_yd_module(m); }));
  } else {  // drinfeld_double; kind_of rejects anything else
    const hgc::DrinfeldDouble d = hgc::parse_double(doc);
    rep = hgc::run_suite(d, "all");
  }
  return deliver(make_report("check", input, digest, opt, {{"kind", kind}}, rep), opt);
}

int cmd_verify(const std::string& input, const std::string& suite,
               const Options& opt) {
  const std::string bytes = slurp(input);
  const std::string digest = fnv1a_hex(bytes);
  const hgc::Json doc = hgc::from_bytes(bytes);
  const std::string kind = hgc::kind_of(doc);
  if (kind != "drinfeld_double")
    throw hgc::Error("UnsupportedSuite",
                     "suite '" + suite + "' needs a drinfeld_double file, got kind '" +
                         kind + "'");
  const hgc::DrinfeldDouble d = hgc::parse_double(doc);
  const hgc::ValidationReport rep = hgc::run_suite(d, suite);
  return deliver(
      make_report("verify", input, digest, opt, {{"kind", kind}, {"suite", suite}}, rep),
      opt);
}

int cmd_double(const std::string& input, const std::string& form,
               const Options& opt) {
  const std::string bytes = slurp(input);
  const std::string digest = fnv1a_hex(bytes);
  const hgc::Json doc = hgc::from_bytes(bytes);
  if (hgc::kind_of(doc) != "hopf_gc")
    throw hgc::Error("SchemaViolation",
                     "double needs a hopf_gc file, got kind '" + hgc::kind_of(doc) + "'");
  const hgc::HopfGC h = hgc::parse_hopf(doc);

  Options stdout_opt = opt;
  stdout_opt.out.clear();
  hgc::ValidationReport rep = guarded("family.integrity", [&] { return hgc::check_hopf(h); });
  if (!rep.ok())
    return deliver(make_report("double", input, digest, opt,
                               {{"kind", "hopf_gc"}, {"form", form}}, rep),
                   stdout_opt);

  std::vector<std::pair<std::string, std::string>> extra = {{"kind", "hopf_gc"},
                                                            {"form", form}};
  try {
    if (form == "smash" || form == "koppinen") {
      const hgc::DrinfeldDouble d = hgc::build_double(
          h, form == "smash" ? hgc::DoubleForm::Smash : hgc::DoubleForm::Koppinen);
      rep.merge(hgc::run_suite(d, "all"));
      if (rep.ok() && !opt.out.empty()) {
        hgc::save_file(opt.out, hgc::emit_double(d));
        extra.emplace_back("artifact", opt.out);
      }
    } else if (form == "both") {
      const hgc::DrinfeldDouble ds = hgc::build_double(h, hgc::DoubleForm::Smash);
      const hgc::DrinfeldDouble dk = hgc::build_double(h, hgc::DoubleForm::Koppinen);
      rep.merge(hgc::run_suite(ds, "all"));
      rep.merge(hgc::run_suite(dk, "all"));
      rep.merge(guarded("form.agreement", [&] {
        // The shared sections must carry identical coefficients in the two
        // presentations; space labels differ, so compare entries.
        const auto same_entries = [](const auto& a, const auto& b) {
          if (a.size() != b.size()) return false;
          for (const auto& [key, t] : a) {
            const auto it = b.find(key);
            if (it == b.end() || !(it->second.entries == t.entries)) return false;
          }
          return true;
        };
        hgc::ValidationReport r;
        r.merge(hgc::check_alpha(hgc::alpha_iso(hgc::double_datum(h))));
        r.expect_true("form.agreement", "shared sections of the two presentations",
                      same_entries(ds.alg.comult, dk.alg.comult) &&
                          ds.alg.counit == dk.alg.counit &&
                          same_entries(ds.alg.antipode, dk.alg.antipode) &&
                          same_entries(ds.alg.antipode_tw, dk.alg.antipode_tw) &&
                          ds.alg.rmat == dk.alg.rmat && ds.alg.qmat == dk.alg.qmat);
        return r;
      }));
      if (rep.ok() && !opt.out.empty()) {
        hgc::save_file(opt.out, hgc::emit_double(ds));
        extra.emplace_back("artifact", opt.out);
      }
    } else {
      throw hgc::Error("UsageError", "unknown form '" + form +
                                         "' (expected smash, koppinen or both)");
    }
  } catch (const hgc::Error& e) {
    if (e.code() == "UsageError") throw;
    rep.count("double.build");
    rep.fail("double.build", e.what(), "", "");
  }
  // --out names the artifact for this command; the report goes to stdout.
  return deliver(make_report("double", input, digest, opt, extra, rep), stdout_opt);
}

int cmd_demo(const std::string& name, const std::string& group,
             const std::string& field_text, const Options& opt) {
  hgc::Field f = hgc::Field::rationals();
  if (field_text.rfind("fp:", 0) == 0) {
    long p = 0;
    try {
      p = std::stol(field_text.substr(3));
    } catch (const std::exception&) {
      throw hgc::Error("UsageError", "bad field '" + field_text + "'");
    }
    f = hgc::Field::prime(p);
  } else if (field_text != "rational") {
    throw hgc::Error("UsageError",
                     "unknown field '" + field_text + "' (expected rational or fp:p)");
  }
  const hgc::HopfGC h = hgc::demo_hopf(name, group, f);
  const std::string text = hgc::to_bytes(hgc::emit_hopf(h));
  if (opt.out.empty())
    std::cout << text;
  else
    spill(opt.out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant toolkit for group-graded Hopf data: "
               "axiom checking, double construction, demo generators."};
  app.require_subcommand(1);

  Options opt;
  std::string input, suite = "all", form = "koppinen";
  std::string demo_name, demo_group = "e", demo_field = "rational";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Report format: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    sub->add_flag("--full", opt.full, "Print every witness instead of three per check");
    sub->add_option("--seed", opt.seed,
                    "Seed recorded in the report (all checks run exhaustively)");
  };

  CLI::App* c_check = app.add_subcommand("check", "Run the axiom suite matching a file's kind");
  c_check->add_option("file", input, "Input JSON file")->required();
  c_check->add_option("--out", opt.out, "Write the report here instead of stdout");
  add_common(c_check);

  CLI::App* c_double = app.add_subcommand("double", "Construct the double of a Hopf family file");
  c_double->add_option("file", input, "Input hopf_gc JSON file")->required();
  c_double->add_option("--form", form, "Presentation: smash, koppinen, or both (emits smash)")
      ->check(CLI::IsMember({"smash", "koppinen", "both"}));
  c_double->add_option("--out", opt.out, "Write the double artifact here");
  add_common(c_double);

  CLI::App* c_verify = app.add_subcommand("verify", "Run a named verification suite on a double file");
  c_verify->add_option("file", input, "Input drinfeld_double JSON file")->required();
  c_verify->add_option("--suite", suite, "bialgebra, hopf, qt, modules or all")
      ->check(CLI::IsMember(hgc::suite_names()));
  c_verify->add_option("--out", opt.out, "Write the report here instead of stdout");
  add_common(c_verify);

  CLI::App* c_demo = app.add_subcommand("demo", "Emit a built-in example family");
  c_demo->add_option("name", demo_name, "trivial, kc2 or sweedler4")->required();
  c_demo->add_option("--group", demo_group, "Grading group: e, c2, c3 or s3");
  c_demo->add_option("--field", demo_field, "rational or fp:p");
  c_demo->add_option("--out", opt.out, "Write the family here instead of stdout");
  add_common(c_demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_check)) return cmd_check(input, opt);
    if (app.got_subcommand(c_double)) return cmd_double(input, form, opt);
    if (app.got_subcommand(c_verify)) return cmd_verify(input, suite, opt);
    return cmd_demo(demo_name, demo_group, demo_field, opt);
  } catch (const hgc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
