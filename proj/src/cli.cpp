#include "perfcong/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "perfcong/errors.hpp"
#include "perfcong/io.hpp"

namespace perfcong {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitFalsified = 3;

struct Options {
  std::string groupfile;
  std::string congruence;
  std::string element;
  long long kmax = 0;
  long long nmax = 8;
  long long window = 4;
  long long bound = -1;  // default 2*window + k, resolved per command
  long long zbound = 2;
  bool json = false;
};

int cmd_catalog(const Options& opt, std::ostream& out, std::ostream& err) {
  GroupSystem sys = load_group_file(opt.groupfile);
  BrContext s = sys.br_context();
  std::vector<CongruenceSpec> specs;
  if (s.group.is_finite()) {
    specs = catalog(s, opt.kmax, nullptr, opt.zbound);
  } else {
    auto pool = sys.subgroup_pool();
    specs = catalog(s, opt.kmax, &pool, opt.zbound);
  }
  err << "catalog truncated at kmax=" << opt.kmax << "\n";
  if (opt.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& spec : specs) arr.push_back(spec_to_json(s, spec));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& spec : specs) out << format_spec(s, spec) << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& opt, std::ostream& out, std::ostream&) {
  GroupSystem sys = load_group_file(opt.groupfile);
  BrContext s = sys.br_context();
  CongruenceSpec spec = parse_congruence_string(s, sys, opt.congruence);
  PerfectVerdict v = classify(s, spec, opt.nmax);
  if (opt.json) {
    out << verdict_to_json(s, v).dump(2) << "\n";
  } else {
    out << format_verdict(s, v) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  GroupSystem sys = load_group_file(opt.groupfile);
  BrContext s = sys.br_context();
  CongruenceSpec spec = parse_congruence_string(s, sys, opt.congruence);
  long long bound =
      opt.bound >= 0 ? opt.bound : 2 * opt.window + spec.k();
  auto report = falsify_perfectness(s, spec, opt.window, bound, bound);
  if (!report) {
    out << "covered: no falsification within window " << opt.window
        << " bound " << bound << "\n";
    return kExitOk;
  }
  if (opt.json) {
    out << report_to_json(s, *report).dump(2) << "\n";
  } else {
    out << "falsified: pair " << format_br(s, report->x) << " * "
        << format_br(s, report->y) << "\n";
    for (const auto& w : report->uncovered) {
      out << "uncovered " << format_br(s, w) << "\n";
    }
    if (report->bound_relative) {
      err << "factor search is bound-relative for group congruences\n";
    }
  }
  return kExitFalsified;
}

int cmd_witness(const Options& opt, std::ostream& out, std::ostream&) {
  GroupSystem sys = load_group_file(opt.groupfile);
  BrContext s = sys.br_context();
  CongruenceSpec spec = parse_congruence_string(s, sys, opt.congruence);
  BrElement x = parse_br_element(s.group, opt.element);
  WitnessPair w = class_witnesses(s, spec, x);
  out << "left " << format_br(s, w.left) << "\n";
  out << "right " << format_br(s, w.right) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"congruences on Bruck-Reilly extensions: catalog, classify, "
               "verify, witness"};
  app.require_subcommand(1);
  Options opt;

  auto* cat = app.add_subcommand("catalog", "enumerate congruences");
  cat->add_option("groupfile", opt.groupfile)->required();
  cat->add_option("--kmax", opt.kmax);
  cat->add_option("--zbound", opt.zbound);
  cat->add_flag("--json", opt.json);

  auto* cls = app.add_subcommand("classify", "decide perfectness");
  cls->add_option("groupfile", opt.groupfile)->required();
  cls->add_option("congruence", opt.congruence)->required();
  cls->add_option("--nmax", opt.nmax);
  cls->add_flag("--json", opt.json);

  auto* ver = app.add_subcommand("verify", "brute-force set-product check");
  ver->add_option("groupfile", opt.groupfile)->required();
  ver->add_option("congruence", opt.congruence)->required();
  ver->add_option("--window", opt.window);
  ver->add_option("--bound", opt.bound);
  ver->add_flag("--json", opt.json);

  auto* wit = app.add_subcommand("witness", "class-end witnesses");
  wit->add_option("groupfile", opt.groupfile)->required();
  wit->add_option("congruence", opt.congruence)->required();
  wit->add_option("element", opt.element)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (cat->parsed()) return cmd_catalog(opt, out, err);
    if (cls->parsed()) return cmd_classify(opt, out, err);
    if (ver->parsed()) return cmd_verify(opt, out, err);
    return cmd_witness(opt, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace perfcong
