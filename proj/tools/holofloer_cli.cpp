#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "holofloer/alexander.hpp"
#include "holofloer/colored.hpp"
#include "holofloer/complexes.hpp"
#include "holofloer/holonomy.hpp"
#include "holofloer/json_io.hpp"
#include "holofloer/weyl.hpp"

namespace hf = holofloer;

namespace {

struct Options {
  std::string knot;
  std::string knot_file;
  long r = 2;
  long n = 0;
  long s = 0;
  long order = hf::kDefaultOrder;
  long r_max = 12;
  bool unreduced = false;
  bool do_verify = false;
  bool json = false;
  bool no_validate = false;
};

hf::KnotData load_knot(const Options& opt) {
  const std::string target = opt.knot_file.empty() ? opt.knot : opt.knot_file;
  if (target.empty())
    throw std::invalid_argument("no knot given (pass a name or --knot-file)");
  if (opt.knot_file.empty()) {
    try {
      return hf::find_knot(target);
    } catch (const std::out_of_range&) {
      // fall through to file loading
    }
  }
  if (!std::filesystem::exists(target))
    throw std::invalid_argument("unknown knot \"" + target +
                                "\": not a built-in name or an existing file");
  hf::KnotData k = hf::load_knot_file(target);
  if (!opt.no_validate) k.validate();
  return k;
}

void print_json(const hf::Json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string join_middot(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += "·";
    out += p;
  }
  return out;
}

std::vector<std::string> annihilator_factors(const hf::LaurentPoly& delta1,
                                             bool unreduced) {
  std::vector<std::string> out;
  if (unreduced) out.push_back("(M - 1)");
  for (long e : delta1.support())
    out.push_back(e == 0 ? "D_1" : "D_{q^-" + std::to_string(e) + "}");
  return out;
}

int run_alex(const Options& opt) {
  if (opt.r < 1) throw std::invalid_argument("--r must be >= 1");
  const hf::KnotData k = load_knot(opt);
  if (opt.unreduced) {
    hf::TruncatedSeries series =
        hf::colored_unreduced(k.alexander, opt.r, opt.order);
    if (opt.json) {
      hf::Json doc = {{"knot", k.name},
                      {"r", opt.r},
                      {"order", opt.order},
                      {"unreduced", hf::json_of(series)}};
      print_json(doc);
    } else {
      std::cout << series.to_string() << "\n";
    }
  } else {
    hf::LaurentPoly reduced = hf::colored_reduced(k.alexander, opt.r);
    if (opt.json) {
      hf::Json doc = {{"knot", k.name}, {"r", opt.r}, {"reduced", hf::json_of(reduced)}};
      print_json(doc);
    } else {
      std::cout << reduced.to_string() << "\n";
    }
  }
  return 0;
}

int run_cable(const Options& opt) {
  if (opt.r < 1) throw std::invalid_argument("--r must be >= 1");
  if (opt.n == 0 && opt.s == 0)
    throw std::invalid_argument("cable needs --n (s = r*n + 1) or an explicit --s");
  if (opt.n != 0 && opt.s != 0)
    throw std::invalid_argument("--n and --s are mutually exclusive");
  if (opt.n < 0) throw std::invalid_argument("--n must be >= 1");
  const long s = opt.s != 0 ? opt.s : opt.r * opt.n + 1;

  const hf::KnotData k = load_knot(opt);
  hf::AlexanderPoly cabled = hf::cable_alexander(k.alexander, opt.r, s);
  hf::Json defect(nullptr);
  if (opt.n != 0)
    defect = hf::convergence_defect(k.alexander, opt.r, opt.n, opt.order);

  if (opt.json) {
    hf::Json doc = {{"knot", k.name},
                    {"r", opt.r},
                    {"s", s},
                    {"cable", hf::json_of(cabled)},
                    {"positive", hf::json_of(cabled.positive_form())},
                    {"defect", defect}};
    print_json(doc);
  } else {
    std::cout << "(" << opt.r << ", " << s << ")-cable of " << k.name << ": "
              << cabled.symmetric().to_string() << "\n";
    std::cout << "positive form: " << cabled.positive_form().to_string() << "\n";
    if (!defect.is_null())
      std::cout << "agrees with the colored series below q^" << defect.get<long>()
                << " (contract: >= " << (opt.r * opt.n + 1) << ")\n";
  }
  return 0;
}

int run_annihilator(const Options& opt) {
  const hf::KnotData k = load_knot(opt);
  const hf::LaurentPoly delta1 = k.alexander.positive_form();
  const hf::WeylElement op = opt.unreduced ? hf::unreduced_annihilator(delta1)
                                           : hf::knot_annihilator(delta1);
  const std::vector<std::string> factors =
      annihilator_factors(delta1, opt.unreduced);

  std::optional<hf::VerificationReport> report;
  if (opt.do_verify) {
    hf::SeriesSequence seq = opt.unreduced
                                 ? hf::unreduced_sequence(k.alexander, opt.order)
                                 : hf::reduced_sequence(k.alexander, opt.order);
    report = hf::verify_annihilation(op, seq, 1, opt.r_max, opt.order);
  }

  if (opt.json) {
    hf::Json doc = {{"knot", k.name},
                    {"unreduced", opt.unreduced},
                    {"factors", factors},
                    {"operator", hf::json_of(op)},
                    {"pretty", op.to_string()},
                    {"verified", report ? hf::json_of(*report) : hf::Json(nullptr)}};
    print_json(doc);
  } else {
    std::cout << join_middot(factors) << "\n";
    std::cout << "normal form: " << op.to_string() << "\n";
    if (report) {
      if (report->clean) {
        std::cout << "verified clean for r in [1, " << opt.r_max << "] at order "
                  << report->order << "\n";
      } else {
        std::cout << "verification FAILED at r = " << *report->failed_index
                  << ": residual " << report->residual->to_string() << "\n";
      }
    }
  }
  return (report && !report->clean) ? 1 : 0;
}

int run_srcfk(const Options& opt) {
  const hf::KnotData k = load_knot(opt);
  const hf::SplitComplex c = hf::build_colored_complex(k, opt.r);
  if (opt.json) {
    hf::Json doc = {{"knot", k.name}, {"r", opt.r}, {"complex", hf::json_of(c)}};
    print_json(doc);
    return 0;
  }
  std::cout << "S^" << opt.r << " CFK(" << k.name << "): "
            << c.generator_count_finite() << " finite generator(s)"
            << (c.tail ? " plus tail" : "") << "\n";
  for (const hf::PairSummand& p : c.pairs) {
    const hf::Bidegree base = p.base.at(opt.r);
    const hf::Bidegree partner = base + hf::Bidegree{p.t_len, p.q_len};
    std::cout << "  pair " << p.label << ": cycle at " << base.to_string()
              << ", partner at " << partner.to_string() << "\n";
  }
  for (const hf::FreeSummand& f : c.frees)
    std::cout << "  free " << f.label << " at " << f.degree.at(opt.r).to_string()
              << "\n";
  if (c.tail)
    std::cout << "  tail: theta " << c.tail->theta.at(opt.r).to_string() << ", u "
              << c.tail->u_deg.at(opt.r).to_string() << ", xi "
              << c.tail->xi_deg.at(opt.r).to_string() << "\n";
  return 0;
}

int run_poincare(const Options& opt) {
  const hf::KnotData k = load_knot(opt);
  const hf::BigradedPoly p =
      hf::poincare(hf::build_colored_complex(k, opt.r), opt.r, opt.order);
  if (opt.json) {
    hf::Json doc = {{"knot", k.name}, {"r", opt.r}, {"poincare", hf::json_of(p)}};
    print_json(doc);
  } else {
    std::cout << p.to_string() << "\n";
  }
  return 0;
}

int run_euler_check(const Options& opt) {
  const hf::KnotData k = load_knot(opt);
  const hf::EulerCheckReport rep = hf::colored_euler_check(k, opt.r, opt.order);
  if (opt.json) {
    hf::Json doc = hf::json_of(rep);
    doc["knot"] = k.name;
    doc["r"] = opt.r;
    print_json(doc);
  } else if (rep.match) {
    std::cout << "match: euler characteristic = q^" << rep.shift
              << " · colored series (order " << rep.order << ")\n";
  } else {
    std::cout << "MISMATCH: first disagreement at q^"
              << (rep.first_mismatch ? *rep.first_mismatch : -1)
              << " (no monomial normalization fits, order " << rep.order << ")\n";
  }
  return rep.match ? 0 : 1;
}

int run_certify(const Options& opt) {
  const hf::KnotData k = load_knot(opt);
  const hf::HolonomyCertificate cert = hf::certify(k);
  const hf::WeylElement op = hf::decategorify(cert);
  const hf::VerificationReport rep =
      hf::certificate_verify(cert, k, opt.r_max, opt.order);

  if (opt.json) {
    hf::Json doc = hf::json_of(cert);
    doc["decategorified"] = hf::json_of(op);
    doc["verified"] = hf::json_of(rep);
    print_json(doc);
  } else {
    std::cout << "certificate for " << cert.knot << " (" << cert.steps.size()
              << " steps, start index " << cert.start_index << "):\n";
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      const hf::CertificateStep& step = cert.steps[i];
      std::cout << "  " << (i + 1) << ". " << hf::step_kind_name(step.kind)
                << "  shift " << step.shift.to_string() << "  classes "
                << step.classes_before << "\n";
    }
    std::cout << "decategorified: " << op.to_string() << "\n";
    if (rep.clean) {
      std::cout << "verified clean for r in [" << rep.index_lo << ", "
                << rep.index_hi << "] at order " << rep.order << "\n";
    } else {
      std::cout << "verification FAILED at r = " << *rep.failed_index
                << ": residual " << rep.residual->to_string() << "\n";
    }
  }
  return rep.clean ? 0 : 1;
}

int run_verify(const Options& opt) {
  const hf::KnotData k = load_knot(opt);
  struct Check {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Check> checks;

  const hf::LaurentPoly delta1 = k.alexander.positive_form();
  {
    hf::VerificationReport rep =
        hf::verify_annihilation(hf::knot_annihilator(delta1),
                                hf::reduced_sequence(k.alexander, opt.order), 1,
                                opt.r_max, opt.order);
    checks.push_back({"reduced annihilator", rep.clean,
                      rep.clean ? "zero residual"
                                : "residual at r = " + std::to_string(*rep.failed_index)});
  }
  {
    hf::VerificationReport rep =
        hf::verify_annihilation(hf::unreduced_annihilator(delta1),
                                hf::unreduced_sequence(k.alexander, opt.order), 1,
                                opt.r_max, opt.order);
    checks.push_back({"unreduced annihilator", rep.clean,
                      rep.clean ? "zero residual"
                                : "residual at r = " + std::to_string(*rep.failed_index)});
  }
  for (long r : {2L, 3L, 4L}) {
    hf::EulerCheckReport rep = hf::colored_euler_check(k, r, opt.order);
    checks.push_back({"euler characteristic (r = " + std::to_string(r) + ")",
                      rep.match,
                      rep.match ? "normalization q^" + std::to_string(rep.shift)
                                : "first mismatch at q^" +
                                      std::to_string(rep.first_mismatch.value_or(-1))});
  }
  {
    hf::HolonomyCertificate cert = hf::certify(k);
    hf::VerificationReport rep =
        hf::certificate_verify(cert, k, opt.r_max, opt.order);
    checks.push_back({"certificate decategorification", rep.clean,
                      rep.clean ? "zero residual"
                                : "residual at r = " + std::to_string(*rep.failed_index)});
  }

  bool all_ok = true;
  for (const Check& c : checks) all_ok = all_ok && c.ok;

  if (opt.json) {
    hf::Json list = hf::Json::array();
    for (const Check& c : checks)
      list.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    hf::Json doc = {{"knot", k.name}, {"ok", all_ok}, {"checks", list}};
    print_json(doc);
  } else {
    for (const Check& c : checks)
      std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "holofloer: exact colored Alexander polynomials, q-Weyl recurrence "
      "annihilators, stable colored knot Floer complexes, and holonomicity "
      "certificates"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("knot", opt.knot, "Built-in knot name or knot file path");
    cmd->add_option("--knot-file", opt.knot_file,
                    "Knot file path (overrides the positional name)");
    cmd->add_option("--order", opt.order, "Series truncation order")
        ->envname("HOLOFLOER_ORDER")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--json", opt.json, "Emit JSON instead of text");
    cmd->add_flag("--no-validate", opt.no_validate,
                  "Skip the Euler cross-check when loading knot files");
    return cmd;
  };
  auto add_r = [&](CLI::App* cmd) {
    cmd->add_option("--r", opt.r, "Color (cabling width)")->capture_default_str();
  };
  auto add_r_max = [&](CLI::App* cmd) {
    cmd->add_option("--r-max", opt.r_max, "Largest index checked")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  CLI::App* alex = add_common(app.add_subcommand(
      "alex", "Colored Alexander polynomial (reduced, or unreduced series)"));
  add_r(alex);
  alex->add_flag("--unreduced,--colored", opt.unreduced,
                 "Unreduced colored series instead of the reduced polynomial");

  CLI::App* cable = add_common(app.add_subcommand(
      "cable", "Alexander polynomial of the (r, s)-cable, s = r*n + 1 via --n"));
  add_r(cable);
  cable->add_option("--n", opt.n, "Winding count; sets s = r*n + 1");
  cable->add_option("--s", opt.s, "Explicit longitude winding (coprime to r)");

  CLI::App* annihilator = add_common(app.add_subcommand(
      "annihilator", "q-Weyl recurrence operator annihilating the colored sequence"));
  annihilator->add_flag("--unreduced,--colored", opt.unreduced,
                        "Annihilator of the unreduced sequence");
  annihilator->add_flag("--verify", opt.do_verify,
                        "Check the operator against the sequence");
  add_r_max(annihilator);

  CLI::App* srcfk = add_common(app.add_subcommand(
      "srcfk", "Generators of the S^r-colored knot Floer complex"));
  add_r(srcfk);

  CLI::App* poincare = add_common(app.add_subcommand(
      "poincare", "Bigraded Poincare polynomial of the colored complex"));
  add_r(poincare);

  CLI::App* euler_check = add_common(app.add_subcommand(
      "euler-check", "Euler characteristic vs. the colored Alexander series"));
  add_r(euler_check);

  CLI::App* certify_cmd = add_common(app.add_subcommand(
      "certify", "Holonomicity certificate, decategorified and verified"));
  add_r_max(certify_cmd);

  CLI::App* verify_cmd = add_common(app.add_subcommand(
      "verify", "Batch verification: annihilators, Euler checks, certificate"));
  add_r_max(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (alex->parsed()) return run_alex(opt);
    if (cable->parsed()) return run_cable(opt);
    if (annihilator->parsed()) return run_annihilator(opt);
    if (srcfk->parsed()) return run_srcfk(opt);
    if (poincare->parsed()) return run_poincare(opt);
    if (euler_check->parsed()) return run_euler_check(opt);
    if (certify_cmd->parsed()) return run_certify(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command given\n";
  return 2;
}
