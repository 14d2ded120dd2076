#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "tamarack/parallel.hpp"
#include "tamarack/report.hpp"

using namespace tamarack;

namespace {

int emit(const ReportDocument &doc, const std::string &format) {
  if (format == "json")
    std::cout << doc.render_json() << "\n";
  else
    std::cout << doc.render_text();
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact Mackey-functor Tor over free incomplete Tambara "
               "functors on cyclic p-groups"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: all)");

  int p = 3, n = 1, gen_level = 0, max_degree = -1;
  long long cutoff = 6;
  bool check_exactness = false;
  std::string format = "text", name, case_name;

  CLI::App *tor = app.add_subcommand("tor", "compute the Tor table");
  tor->add_option("-p", p, "prime");
  tor->add_option("-n", n, "exponent of the group order");
  tor->add_option("--gen-level", gen_level, "level of the polynomial generator");
  tor->add_option("--max-degree", max_degree, "largest homological degree");
  tor->add_option("--format", format, "text or json");

  CLI::App *verify = app.add_subcommand("verify", "run a named golden case");
  verify->add_option("case", case_name, "case name, or 'list'")->required();
  verify->add_option("--format", format, "text or json");

  CLI::App *lewis = app.add_subcommand("lewis", "print a Lewis diagram");
  lewis->add_option("name", name, "module name from the catalog")->required();
  lewis->add_option("-p", p, "prime");
  lewis->add_option("-n", n, "exponent of the group order");
  lewis->add_option("--format", format, "text or json");

  CLI::App *resolution =
      app.add_subcommand("resolution", "build the Koszul-type resolution");
  resolution->add_option("-p", p, "prime");
  resolution->add_option("-n", n, "exponent of the group order");
  resolution->add_option("--gen-level", gen_level, "generator level");
  resolution->add_flag("--check-exactness", check_exactness,
                       "certify graded exactness up to the cutoff");
  resolution->add_option("--cutoff", cutoff, "internal degree cutoff");
  resolution->add_option("--format", format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0) set_thread_count(threads);

  try {
    if (tor->parsed()) {
      Tower t{p, n};
      int maxdeg = max_degree >= 0 ? max_degree : 1;
      if (max_degree < 0) {
        long long len = 0;
        for (int i = 0; i <= n - gen_level; ++i) len += ipow(p, i);
        maxdeg = (int)len;
      }
      return emit(tor_report(t, gen_level, maxdeg), format);
    }
    if (verify->parsed()) {
      if (case_name == "list") {
        for (const auto &c : verification_case_names()) std::cout << c << "\n";
        return 0;
      }
      VerifyOutcome out = run_verification(case_name);
      emit(out.report, format);
      if (!out.pass) {
        std::cout << "FAIL: " << out.diff << "\n";
        return 1;
      }
      std::cout << "PASS " << out.name << "\n";
      return 0;
    }
    if (lewis->parsed()) return emit(lewis_report(name, Tower{p, n}), format);
    if (resolution->parsed())
      return emit(resolution_report(Tower{p, n}, gen_level, check_exactness,
                                    cutoff),
                  format);
  } catch (const std::invalid_argument &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
