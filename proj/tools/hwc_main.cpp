#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hwc/pipeline.hpp"
#include "hwc/specfile.hpp"

namespace {

struct Args {
  std::string field = "rational";
  std::string family;
  std::string spec;
  int d = -1;
  uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  int max_dim = 400;
  bool force = false;
};

hwc::Field parse_field(const std::string& s) {
  if (s == "rational" || s == "Q") return hwc::Field::rationals();
  std::string p = s.rfind("prime:", 0) == 0 ? s.substr(6) : s.rfind("F", 0) == 0 ? s.substr(1) : s;
  uint64_t q = 0;
  try {
    q = std::stoull(p);
  } catch (...) {
    throw CLI::ValidationError("--field", "expected 'rational', 'prime:<p>' or 'F<p>'");
  }
  if (!hwc::is_prime_u64(q)) throw CLI::ValidationError("--field", p + " is not prime");
  return hwc::Field::prime(q);
}

int run(const std::string& command, const Args& a) {
  hwc::BuiltAlgebra B;
  std::string source;
  if (!a.spec.empty()) {
    B = hwc::load_spec(a.spec);
    source = "spec:" + a.spec;
  } else {
    B = hwc::build_family(a.family, parse_field(a.field), a.force);
    source = "family:" + a.family + (a.family.rfind("sl2", 0) == 0 ? "" : " field:" + a.field);
  }
  if (B.A->dim() > a.max_dim && !a.force)
    throw hwc::PreconditionError("algebra of dimension " + std::to_string(B.A->dim()) + " exceeds --max-dim " + std::to_string(a.max_dim) +
                                 " (use --force)");
  hwc::Json rep = hwc::command_report(command, B, source, {a.d, a.seed});
  std::string text = a.format == "text" ? hwc::render_text(rep) : hwc::render_json(rep);
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    std::ofstream os(a.out);
    if (!os) throw std::runtime_error("cannot write " + a.out);
    os << text;
  }
  return rep["ok"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded triangular algebras: cores, cell data, decomposition matrices and highest weight covers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hwc::library_version());
  Args a;
  std::string selected;
  for (const auto& name : hwc::command_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " pipeline");
    auto* src = sub->add_option_group("input");
    src->add_option("--family", a.family, "built-in family: trunc:x:-1:2,y:1:2 | sl2:<p> | mat:<n>");
    src->add_option("--spec", a.spec, "algebra spec file (algspec 1)")->check(CLI::ExistingFile);
    src->require_option(1);
    sub->add_option("--field", a.field, "rational | prime:<p> (ignored for sl2 and spec input)");
    sub->add_option("--d", a.d, "truncation degree d >= N (default N)");
    sub->add_option("--seed", a.seed, "seed for randomized subroutines")->capture_default_str();
    sub->add_option("--out", a.out, "output file (default stdout)");
    sub->add_option("--format", a.format, "json | text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--max-dim", a.max_dim, "refuse larger algebras unless --force")->capture_default_str();
    sub->add_flag("--force", a.force, "lift size caps");
    sub->callback([&selected, name] { selected = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return run(selected, a);
  } catch (const hwc::SpecError& e) {
    std::cerr << "parse error: " << (a.spec.empty() ? "" : a.spec + ":") << e.what() << "\n";
  } catch (const hwc::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
