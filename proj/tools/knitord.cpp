// knitord: normal forms, cone signs, comparisons and exhaustive order-axiom
// verification for the registered group instances.
//
// Exit codes: 0 success/pass, 1 violations found, 2 usage or parse error,
// 3 rewriting step limit exceeded.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knitord/amalgam_h.hpp"
#include "knitord/instances.hpp"
#include "knitord/verifier.hpp"

namespace {

using namespace knitord;

struct Options {
  std::string group;
  std::vector<std::string> words;
  std::string suite;
  int radius = -1;
  int rh = 3;
  int rk = 3;
  std::string format = "text";
  std::size_t max_violations = 20;
  std::size_t step_limit = kDefaultStepLimit;
  int workers = 1;
  std::string out_path;
};

int default_radius(const Instance& inst) {
  return inst.pair ? 3 : 5;  // sub-minute desk runs
}

std::string sign_text(const Instance& inst, const Element& e) {
  ConeSign s = inst.group.cone_sign(e);
  std::string text = to_string(s);
  if (inst.id == "h-amalgam" && s == ConeSign::Positive) {
    text += std::string(" (class ") +
            to_string(h_cone_class(std::any_cast<const HNormalForm&>(e))) + ")";
  }
  return text;
}

int emit_reports(const std::vector<VerificationReport>& reports,
                 const Options& opt, std::ostream& os) {
  bool failed = false;
  for (const auto& rep : reports) {
    os << (opt.format == "json-lines" ? rep.to_json_line() : rep.to_text())
       << "\n";
    failed = failed || !rep.passed();
  }
  return failed ? 1 : 0;
}

int run(const Options& opt, const std::string& command, std::ostream& os) {
  auto inst = find_instance(opt.group, opt.step_limit);
  if (!inst) {
    std::cerr << "unknown instance '" << opt.group << "'; known:";
    for (const auto& id : instance_ids()) std::cerr << " " << id;
    std::cerr << "\n";
    return 2;
  }
  const CheckOptions checks{opt.workers, opt.max_violations};

  if (command == "nf" || command == "inv" || command == "sign") {
    Element e = inst->parse(opt.words[0]);
    if (command == "inv") e = inst->group.invert(e);
    os << (command == "sign" ? sign_text(*inst, e) : inst->group.show(e))
       << "\n";
    return 0;
  }
  if (command == "mul") {
    Element e = inst->group.multiply(inst->parse(opt.words[0]),
                                     inst->parse(opt.words[1]));
    os << inst->group.show(e) << "\n";
    return 0;
  }
  if (command == "cmp") {
    Element a = inst->parse(opt.words[0]);
    Element b = inst->parse(opt.words[1]);
    Ordering o = inst->group.order_kind == OrderKind::TotalRight
                     ? compare_right(inst->group, a, b)
                     : compare_left(inst->group, a, b);
    os << to_string(o) << "\n";
    return 0;
  }
  if (command == "verify") {
    const int r = opt.radius >= 0 ? opt.radius : default_radius(*inst);
    std::vector<VerificationReport> reports;
    if (opt.suite == "semigroup") {
      PairTag tag = nullptr;
      if (inst->id == "h-amalgam") {
        tag = [](const Element& p, const Element& q) -> std::string {
          HConeClass cp = h_cone_class(std::any_cast<const HNormalForm&>(p));
          HConeClass cq = h_cone_class(std::any_cast<const HNormalForm&>(q));
          if (cp == HConeClass::A) return "A.any";
          return std::string(to_string(cp)) + "." + to_string(cq);
        };
      }
      if (inst->pair) {
        reports.push_back(verify_semigroup_on(
            inst->group, component_ball(*inst->pair, r, r), {r, r}, checks));
      } else {
        reports.push_back(verify_semigroup(inst->group, r, checks, tag));
      }
    } else if (opt.suite == "partition") {
      if (inst->pair) {
        reports.push_back(verify_partition_on(
            inst->group, component_ball(*inst->pair, r, r), {r, r}, checks));
      } else {
        reports.push_back(verify_partition(inst->group, r, checks));
      }
    } else if (opt.suite == "left-invariance") {
      reports.push_back(verify_left_invariance(inst->group, r, checks));
    } else if (opt.suite == "convexity-k") {
      if (!inst->pair) {
        std::cerr << "suite convexity-k needs a product instance\n";
        return 2;
      }
      reports.push_back(verify_convexity_K(*inst->pair, r, checks));
    } else if (opt.suite == "conjugation") {
      reports.push_back(verify_conjugation(inst->group, r, checks));
    } else {
      std::cerr << "unknown suite '" << opt.suite
                << "'; known: semigroup partition left-invariance "
                   "convexity-k conjugation\n";
      return 2;
    }
    return emit_reports(reports, opt, os);
  }
  if (command == "axioms") {
    if (!inst->pair) {
      std::cerr << "axioms needs a product instance\n";
      return 2;
    }
    std::vector<VerificationReport> reports;
    reports.push_back(check_matched_pair(*inst->pair, opt.rh, opt.rk, checks));
    reports.push_back(
        check_alpha_positivity(*inst->pair, opt.rh, opt.rk, checks));
    if (inst->group.order_kind == OrderKind::PartialBi) {
      reports.push_back(
          check_bi_lift_conditions(*inst->pair, opt.rh, opt.rk, checks));
      reports.push_back(
          check_bi_lift_monotonicity(*inst->pair, opt.rh, opt.rk, checks));
    }
    return emit_reports(reports, opt, os);
  }
  std::cerr << "unknown command\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orders on Zappa-Szep products of left-orderable groups"};
  app.require_subcommand(1);

  Options opt;
  std::string command;

  auto add_common = [&](CLI::App* sub, int n_words) {
    sub->add_option("--group", opt.group, "instance id")->required();
    if (n_words > 0) {
      sub->add_option("words", opt.words, "element words")
          ->expected(n_words)
          ->required();
    }
    sub->add_option("--format", opt.format, "text|json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
    sub->add_option("--step-limit", opt.step_limit, "rewrite step budget");
    sub->add_option("--max-violations", opt.max_violations,
                    "violations kept per report");
    sub->add_option("--workers", opt.workers, "parallel workers");
    sub->add_option("--out", opt.out_path, "write output to a file");
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  add_common(app.add_subcommand("nf", "print the canonical form"), 1);
  add_common(app.add_subcommand("sign", "print the cone sign"), 1);
  add_common(app.add_subcommand("cmp", "compare two elements"), 2);
  add_common(app.add_subcommand("mul", "multiply two elements"), 2);
  add_common(app.add_subcommand("inv", "invert an element"), 1);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, 0);
  verify->add_option("--suite", opt.suite, "suite name")->required();
  verify->add_option("--radius", opt.radius, "ball radius");
  auto* axioms =
      app.add_subcommand("axioms", "check matched-pair and lifting conditions");
  add_common(axioms, 0);
  axioms->add_option("--rh", opt.rh, "H-ball radius");
  axioms->add_option("--rk", opt.rk, "K-ball radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      std::cerr << "cannot open '" << opt.out_path << "' for writing\n";
      return 2;
    }
    os = &file;
  }

  try {
    return run(opt, command, *os);
  } catch (const knitord::StepLimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const knitord::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
