// Command-line front end.
//
//   isopencil analyze <file> [--samples N] [--tol T] [--out report.json]
//   isopencil range <file> --k K [--samples N] --csv <path>
//   isopencil lax <file> [--steps N] [--out traj.json]
//   isopencil similar <file>
//
// Exit codes: 0 analysis completed, 1 input error, 2 numerical failure.

#include <CLI11.hpp>
#include <exception>
#include <iostream>
#include <json.hpp>
#include <string>

#include "isopencil/errors.hpp"
#include "isopencil/io.hpp"
#include "isopencil/lax.hpp"
#include "isopencil/report.hpp"
#include "isopencil/symmetry.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    isopencil::write_text_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace isopencil;

  CLI::App app{"Isospectrality analysis of the Hermitian pencil Re(e^{-it} B)"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  int samples = kDefaultSamples;
  double tol = kRangeTol;

  auto* analyze = app.add_subcommand("analyze", "Run every isospectrality check and emit a JSON report");
  analyze->add_option("file", file, "Matrix file (JSON)")->required();
  analyze->add_option("--samples", samples, "Angle grid size")->check(CLI::Range(8, 1 << 20));
  analyze->add_option("--tol", tol, "Spectral / disk tolerance")->check(CLI::PositiveNumber);
  analyze->add_option("--out", out_path, "Write the report here instead of stdout");

  int k = 1;
  std::string csv_path;
  auto* range = app.add_subcommand("range", "Export the rank-k support function as CSV");
  range->add_option("file", file, "Matrix file (JSON)")->required();
  range->add_option("--k", k, "Numerical range rank")->required()->check(CLI::PositiveNumber);
  range->add_option("--samples", samples, "Angle grid size")->check(CLI::Range(8, 1 << 20));
  range->add_option("--csv", csv_path, "Output CSV path")->required();

  int steps = kDefaultLaxSteps;
  auto* lax = app.add_subcommand("lax", "Integrate U' = P(t) U and verify the conjugation path");
  lax->add_option("file", file, "Matrix file (JSON)")->required();
  lax->add_option("--steps", steps, "RK4 steps over [0, 2 pi]")->check(CLI::Range(16, 1 << 24));
  lax->add_option("--out", out_path, "Write the trajectory here");

  auto* similar = app.add_subcommand("similar", "Solve [K, B] = -iB and verify e^{-tK} B e^{tK} = e^{it} B");
  similar->add_option("file", file, "Matrix file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const ComplexMatrix b = parse_matrix(file);

    if (*analyze) {
      AnalysisConfig config;
      config.samples = samples;
      config.tol = tol;
      const AnalysisReport report = run_analyze(b, config);
      emit(to_json(report).dump(2) + "\n", out_path);
    } else if (*range) {
      if (k > static_cast<int>(b.size())) {
        std::cerr << "error: --k must not exceed n = " << b.size() << "\n";
        return kExitInput;
      }
      emit_support_csv(b, k, samples, csv_path);
    } else if (*lax) {
      const LaxTrajectory traj = integrate_U(b, steps);
      const bool ok = verify_lax(b, traj, 1e-5);
      std::cout << "steps: " << steps << "\n"
                << "max_similarity_error: " << traj.max_similarity_error << "\n"
                << "max_unitarity_error: " << traj.max_unitarity_error << "\n"
                << "verified (tol 1e-5): " << (ok ? "yes" : "no") << "\n";
      if (!out_path.empty()) write_text_file(out_path, trajectory_to_json(traj).dump() + "\n");
    } else if (*similar) {
      const CommutatorSolution sol = solve_K(b);
      std::cout << "residual: " << sol.residual << "\n"
                << "exists: " << (sol.exists ? "true" : "false") << "\n";
      if (sol.exists) {
        std::cout << "K: " << matrix_to_json(sol.K).dump() << "\n"
                  << "conjugation_error: " << verify_rotation_similarity(b, sol.K, 64) << "\n";
      }
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
