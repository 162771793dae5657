#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "signseq/adversary.hpp"
#include "signseq/highdim.hpp"
#include "signseq/io.hpp"
#include "signseq/oracle.hpp"
#include "signseq/signer.hpp"
#include "signseq/svg.hpp"

namespace {

using namespace signseq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;          // invalid input or usage
constexpr int kExitBoundViolation = 2; // internal error: certified bound broken

NormSpec parse_norm_flag(const std::string& flag) {
  if (flag == "euclidean") return NormSpec::euclidean();
  if (flag == "l1") return NormSpec::l1();
  if (flag == "linf") return NormSpec::linf();
  if (flag.rfind("polygon:", 0) == 0) return load_polygon_norm(flag.substr(8));
  throw std::invalid_argument("unknown norm '" + flag +
                              "' (expected euclidean|l1|linf|polygon:<file>)");
}

// Input source: a file path, '-' for stdin, or 'random:<n>' for n seeded
// unit-ball vectors under the active norm.
std::vector<Vec> read_input(const std::string& input, const NormSpec& spec, std::uint64_t seed) {
  if (input == "-") return parse_vectors(std::cin);
  if (input.rfind("random:", 0) == 0) {
    const std::size_t n = std::stoul(input.substr(7));
    std::mt19937_64 rng(seed);
    std::vector<Vec> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_unit_ball_vector(spec, rng));
    return out;
  }
  return load_vectors(input);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output_path);
  if (!f) throw std::invalid_argument("cannot write output file: " + output_path);
  f << text;
}

int cmd_sign(const std::string& input, const std::string& norm_flag, const std::string& algorithm,
             double tol, const std::string& svg_path, const std::string& output_path,
             std::uint64_t seed) {
  const NormSpec spec = parse_norm_flag(norm_flag);
  const std::vector<Vec> vectors = read_input(input, spec, seed);

  const auto t0 = std::chrono::steady_clock::now();
  const SignResult result = algorithm == "greedy" ? greedy_sign(vectors, spec)
                                                  : sign_sequence(vectors, spec, tol);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  if (!svg_path.empty()) {
    if (!vectors.empty() && vectors.front().dim() != 2) {
      std::cerr << "note: --svg skipped, trajectory rendering is 2D only\n";
    } else {
      std::vector<Vec> points;
      Vec sum = Vec::zero(2);
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (result.signs[i] > 0) {
          sum += vectors[i];
        } else {
          sum -= vectors[i];
        }
        points.push_back(sum);
      }
      const double outline = result.certified_bound
                                 ? *result.certified_bound
                                 : std::max(result.max_partial_norm, 1.0);
      std::ofstream f(svg_path);
      if (!f) throw std::invalid_argument("cannot write svg file: " + svg_path);
      f << trajectory_svg(points, spec, outline);
    }
  }

  emit(run_report(vectors, spec, tol, result, ms).dump(2) + "\n", output_path);

  if (result.certified_bound && result.max_partial_norm > *result.certified_bound + 1e-9) {
    std::cerr << "internal error: certified bound " << format_number(*result.certified_bound)
              << " violated by max partial norm " << format_number(result.max_partial_norm)
              << "\n";
    return kExitBoundViolation;
  }
  return kExitOk;
}

int cmd_adversary(double delta, const std::string& output_path, std::size_t cap) {
  const AdversarySequence seq = build_lower_bound_sequence(AdversaryConfig{delta});

  std::ostream& summary = output_path.empty() ? std::cerr : std::cout;
  if (output_path.empty()) {
    write_vectors(std::cout, seq.vectors);
  } else {
    save_vectors(output_path, seq.vectors);
  }

  const double bound = 3.0 + (std::numbers::sqrt2 - 1.0) / delta;
  const double threshold = std::numbers::sqrt3 - delta;
  summary << "n: " << seq.vectors.size() << "\n";
  summary << "length bound 3 + (sqrt(2)-1)/delta: " << format_number(bound) << "\n";
  if (seq.vectors.size() <= cap) {
    const bool ok = verify_adversary(seq, cap);
    summary << "verification: " << (ok ? "PASS" : "FAIL")
            << " (every sign pattern reaches norm >= " << format_number(threshold)
            << " = sqrt(3) - delta)\n";
    if (!ok) return kExitBoundViolation;
  } else {
    summary << "verification: skipped (n exceeds cap " << cap << ")\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& input, const std::string& norm_flag,
               std::optional<double> threshold, std::size_t cap, std::uint64_t seed) {
  const NormSpec spec = parse_norm_flag(norm_flag);
  const std::vector<Vec> vectors = read_input(input, spec, seed);

  const OracleResult res = brute_force_minmax(vectors, spec, cap);
  std::cout << "n: " << vectors.size() << "\n";
  std::cout << "value: " << format_number(res.value) << "\n";
  std::cout << "witness:";
  for (int s : res.witness_signs) std::cout << (s > 0 ? " +1" : " -1");
  std::cout << "\n";
  std::cout << "nodes: " << res.nodes_explored << "\n";
  if (threshold) {
    const bool all = all_patterns_exceed(vectors, spec, *threshold, cap);
    std::cout << "ALL PATTERNS EXCEED: " << (all ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_highdim(const std::string& norm_flag, std::size_t dim, bool verify,
                const std::string& output_path) {
  HighDimFamily fam;
  if (norm_flag == "max") {
    fam = maxnorm_family(dim);
  } else if (norm_flag == "euclidean") {
    fam = euclidean_family(dim);
  } else {
    throw std::invalid_argument("unknown highdim norm '" + norm_flag +
                                "' (expected max|euclidean)");
  }

  std::string admissible = "unchecked";
  if (verify) {
    const std::optional<bool> ok = verify_family(fam);
    admissible = ok ? (*ok ? "yes" : "no") : "unverified (cap)";
  }
  const double c = fam.sum_norm / static_cast<double>(dim);
  std::cout << "d\tnorm\tadmissible\tsum_norm\tc = sum_norm/d\n";
  std::cout << dim << "\t" << norm_flag << "\t" << admissible << "\t"
            << format_number(fam.sum_norm) << "\t" << format_number(c) << "\n";

  if (!output_path.empty()) save_vectors(output_path, fam.vectors);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign a sequence of unit-ball plane vectors so every partial sum stays small"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for randomized input generation (random:<n> inputs)");

  std::string input = "-";
  std::string norm_flag = "euclidean";
  std::string algorithm = "trapping";
  double tol = kDefaultTol;
  std::string svg_path;
  std::string output_path;
  double delta = 0.0;
  std::optional<double> threshold;
  std::size_t cap = kOracleCap;
  std::size_t dim = 2;
  bool verify = false;

  CLI::App* sign = app.add_subcommand("sign", "sign a vector sequence with certified bounds");
  sign->add_option("input", input, "vector file, '-' for stdin, or random:<n>");
  sign->add_option("--norm", norm_flag, "euclidean|l1|linf|polygon:<file>");
  sign->add_option("--algorithm", algorithm, "trapping|greedy")
      ->check(CLI::IsMember({"trapping", "greedy"}));
  sign->add_option("--tol", tol, "unit-ball tolerance");
  sign->add_option("--svg", svg_path, "write the partial-sum trajectory as SVG");
  sign->add_option("--output", output_path, "write the run report here instead of stdout");

  CLI::App* adv = app.add_subcommand("adversary", "emit a lower-bound sequence for the plane");
  adv->add_option("--delta", delta, "target gap below sqrt(3)")->required();
  adv->add_option("--output", output_path, "write the sequence here instead of stdout");
  adv->add_option("--cap", cap, "oracle cap for the verification step");

  CLI::App* orc = app.add_subcommand("oracle", "exact minimax over all sign patterns");
  orc->add_option("input", input, "vector file, '-' for stdin, or random:<n>");
  orc->add_option("--norm", norm_flag, "euclidean|l1|linf|polygon:<file>");
  orc->add_option("--threshold", [&threshold](const std::vector<std::string>& vals) {
        threshold = std::stod(vals.at(0));
        return true;
      }, "also check whether every pattern reaches this norm");
  orc->add_option("--cap", cap, "maximum sequence length for the search");

  CLI::App* hd = app.add_subcommand("highdim", "explicit admissible families in R^d");
  hd->add_option("--norm", norm_flag, "max|euclidean")->required();
  hd->add_option("--dim", dim, "ambient dimension (>= 2)")->required();
  hd->add_flag("--verify", verify, "run the brute-force admissibility check");
  hd->add_option("--output", output_path, "write the family vectors here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sign->parsed()) {
      return cmd_sign(input, norm_flag, algorithm, tol, svg_path, output_path, seed);
    }
    if (adv->parsed()) {
      if (!(delta > 0.0)) {
        std::cerr << "error: --delta must be > 0\n";
        return kExitUsage;
      }
      return cmd_adversary(delta, output_path, cap);
    }
    if (orc->parsed()) {
      return cmd_oracle(input, norm_flag, threshold, cap, seed);
    }
    if (hd->parsed()) {
      if (dim < 2) {
        std::cerr << "error: --dim must be >= 2\n";
        return kExitUsage;
      }
      return cmd_highdim(norm_flag, dim, verify, output_path);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (use --cap to raise the limit)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
