#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace {

// resolve --out: write to the file when given, standard output otherwise
int with_output(const std::string& out_path, const std::function<int(std::ostream&)>& fn) {
  if (out_path.empty()) {
    return fn(std::cout);
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tensor commutation matrices, rectangular Gell-Mann systems, and "
               "mechanical verification of the identities relating them"};
  app.require_subcommand(1);

  const auto format_names = std::vector<std::string>{"matrix-market", "json", "text"};
  const auto report_formats = std::vector<std::string>{"json", "text"};

  // gen-tcm
  auto* gen_tcm = app.add_subcommand("gen-tcm", "construct a swap matrix U_{nxp}");
  tcm::cli::GenTcmOptions tcm_options;
  std::string tcm_format = "text", tcm_out;
  gen_tcm->add_option("--n", tcm_options.n, "left factor dimension")
      ->required()
      ->check(CLI::Range(2, 1024));
  gen_tcm->add_option("--p", tcm_options.p, "right factor dimension")
      ->required()
      ->check(CLI::Range(2, 1024));
  gen_tcm->add_option("--method", tcm_options.method, "construction to use")
      ->check(CLI::IsMember({"rule", "elementary", "gellmann"}))
      ->default_val("rule");
  gen_tcm->add_option("--format", tcm_format, "output format")
      ->check(CLI::IsMember(format_names))
      ->default_val("text");
  gen_tcm->add_option("--out", tcm_out, "write to a file instead of standard output");

  // gen-gellmann
  auto* gen_gm = app.add_subcommand("gen-gellmann", "construct an n x p Gell-Mann system");
  tcm::cli::GenGellmannOptions gm_options;
  std::string gm_format = "text", gm_out;
  gen_gm->add_option("--n", gm_options.n, "row count")->required()->check(CLI::Range(2, 1024));
  gen_gm->add_option("--p", gm_options.p, "column count")->required()->check(CLI::Range(2, 1024));
  gen_gm->add_option("--format", gm_format, "output format")
      ->check(CLI::IsMember(format_names))
      ->default_val("text");
  gen_gm->add_option("--out", gm_out, "write to a file instead of standard output");

  // verify
  auto* verify = app.add_subcommand("verify", "verify every identity over a parameter grid");
  tcm::cli::VerifyOptions verify_options;
  std::string verify_format = "text", verify_out;
  verify->add_option("--n-max", verify_options.n_max, "largest n")->check(CLI::Range(2, 16));
  verify->add_option("--p-max", verify_options.p_max, "largest p")->check(CLI::Range(2, 16));
  verify->add_option("--tol", verify_options.tol, "comparison tolerance")
      ->check(CLI::PositiveNumber)
      ->default_val(1e-12);
  verify->add_option("--format", verify_format, "report format")
      ->check(CLI::IsMember(report_formats))
      ->default_val("text");
  verify->add_option("--out", verify_out, "write to a file instead of standard output");

  // bench
  auto* bench = app.add_subcommand("bench", "time dense against matrix-free swap application");
  tcm::cli::BenchOptions bench_options;
  std::string bench_format = "text", bench_out;
  bench->add_option("--n", bench_options.n, "left factor dimension")
      ->check(CLI::Range(2, 1024))
      ->default_val(64);
  bench->add_option("--p", bench_options.p, "right factor dimension")
      ->check(CLI::Range(2, 1024))
      ->default_val(64);
  bench->add_option("--batch", bench_options.batch, "number of applications to time")
      ->check(CLI::Range(1LL, 100'000'000LL))
      ->default_val(1000);
  bench->add_option("--format", bench_format, "output format")
      ->check(CLI::IsMember(report_formats))
      ->default_val("text");
  bench->add_option("--out", bench_out, "write to a file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean; anything else is a usage error
  }

  try {
    if (gen_tcm->parsed()) {
      tcm_options.format = *tcm::cli::parse_format(tcm_format);
      return with_output(tcm_out,
                         [&](std::ostream& out) { return cmd_gen_tcm(tcm_options, out); });
    }
    if (gen_gm->parsed()) {
      gm_options.format = *tcm::cli::parse_format(gm_format);
      return with_output(gm_out,
                         [&](std::ostream& out) { return cmd_gen_gellmann(gm_options, out); });
    }
    if (verify->parsed()) {
      verify_options.format = *tcm::cli::parse_format(verify_format);
      return with_output(verify_out,
                         [&](std::ostream& out) { return cmd_verify(verify_options, out); });
    }
    if (bench->parsed()) {
      bench_options.format = *tcm::cli::parse_format(bench_format);
      return with_output(bench_out,
                         [&](std::ostream& out) { return cmd_bench(bench_options, out); });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
