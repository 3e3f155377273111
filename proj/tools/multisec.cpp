// multisec: class groups, canonical modules and Hilbert tables of
// multi-section rings from a JSON card.
//
// Exit codes: 0 ok, 1 verification failure or internal error,
// 2 invalid input, 3 hypothesis failure, 4 no section oracle.

#include "multisec/card.hpp"
#include "multisec/hilbert.hpp"
#include "multisec/report.hpp"
#include "multisec/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace multisec;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;
constexpr int kHypothesis = 3;
constexpr int kNoOracle = 4;

AnalysisCard load_card(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("card", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_card(buf.str());
}

DegreeWindow parse_box(const std::string& text) {
  DegreeWindow w;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw ValidationError("--box", "expected lo:hi, got '" + part + "'");
    try {
      std::size_t used_lo = 0, used_hi = 0;
      const std::string lo = part.substr(0, colon), hi = part.substr(colon + 1);
      w.lo.push_back(std::stol(lo, &used_lo));
      w.hi.push_back(std::stol(hi, &used_hi));
      if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw ValidationError("--box", "expected integer bounds, got '" + part + "'");
    }
  }
  if (w.lo.empty()) throw ValidationError("--box", "empty box specification");
  return w;
}

int cmd_analyze(const std::string& path, bool json) {
  const AnalysisReport report = analyze(load_card(path));
  std::cout << (json ? report_to_json(report) : report_to_text(report));
  if (!report.hypotheses_hold()) {
    std::cerr << "multisec: hypothesis failure:"
              << (report.hypothesis_T ? "" : " no combination with lambda_i >= 1 is ample;")
              << (report.hypothesis_R ? "" : " no integer combination is ample;") << '\n';
    return kHypothesis;
  }
  for (const auto& h : report.hilbert)
    if (!h.passed) return kFailure;
  return kOk;
}

int cmd_hilbert(const std::string& path, const std::string& ring, const std::string& box) {
  const auto marker = parse_marker(ring);
  if (!marker) throw ValidationError("--ring", "expected T, R, omegaT or omegaR, got '" + ring + "'");
  const MultiSectionSetup setup = to_setup(load_card(path));
  if (!setup.variety.oracle) throw NoOracle("card '" + setup.variety.name + "' has no section oracle");
  DegreeWindow window;
  if (box.empty()) {
    const bool t_side = *marker == HilbertMarker::T || *marker == HilbertMarker::omega_T;
    window = default_window(*marker, t_side ? compute_U(setup) : USet{}, setup.s());
  } else {
    window = parse_box(box);
    if (window.size() != setup.s())
      throw ValidationError("--box", "expected " + std::to_string(setup.s()) + " ranges, got " +
                                         std::to_string(window.size()));
  }
  if (*marker == HilbertMarker::R || *marker == HilbertMarker::omega_R) {
    if (!check_hypothesis_R(setup)) throw HypothesisFailed("no integer combination of the divisors is ample");
  }
  std::cout << hilbert(setup, *marker, window).to_csv();
  return kOk;
}

int cmd_verify(const std::string& name) {
  const auto& names = verify_names();
  if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
    throw ValidationError("example", "unknown example '" + name + "' (veronese, fano-product, gorenstein-grid, blowup, all)");
  return run_verify(name, std::cout).ok() ? kOk : kFailure;
}

int cmd_dump(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ValidationError("dir", "cannot create '" + dir + "': " + ec.message());
  for (const auto& b : builtin_cards()) {
    const fs::path file = fs::path(dir) / (b.key + ".json");
    std::ofstream out(file, std::ios::binary);
    out << card_to_json(b.card);
    if (!out) throw ValidationError("dir", "cannot write '" + file.string() + "'");
    std::cout << file.string() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class groups, canonical modules and Hilbert tables of multi-section rings"};
  app.require_subcommand(1);

  std::string card_path, ring, box, example, dump_dir;
  bool json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a card");
  analyze_cmd->add_option("card", card_path, "Card JSON file")->required();
  analyze_cmd->add_flag("--json", json, "Emit the report as JSON");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert table as CSV");
  hilbert_cmd->add_option("card", card_path, "Card JSON file")->required();
  hilbert_cmd->add_option("--ring", ring, "T, R, omegaT or omegaR")->required();
  hilbert_cmd->add_option("--box", box, "Degree box lo:hi[,lo:hi...] (default depends on the ring)");

  auto* verify_cmd = app.add_subcommand("verify", "Recompute the worked examples");
  verify_cmd->add_option("example", example, "veronese, fano-product, gorenstein-grid, blowup or all")->required();

  auto* cards_cmd = app.add_subcommand("cards", "Builtin cards");
  cards_cmd->require_subcommand(1);
  auto* dump_cmd = cards_cmd->add_subcommand("dump", "Write the builtin cards as JSON files");
  dump_cmd->add_option("dir", dump_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(card_path, json);
    if (*hilbert_cmd) return cmd_hilbert(card_path, ring, box);
    if (*verify_cmd) return cmd_verify(example);
    if (*dump_cmd) return cmd_dump(dump_dir);
  } catch (const ValidationError& e) {
    std::cerr << "multisec: invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const HypothesisFailed& e) {
    std::cerr << "multisec: hypothesis failure: " << e.what() << '\n';
    return kHypothesis;
  } catch (const NoOracle& e) {
    std::cerr << "multisec: " << e.what() << '\n';
    return kNoOracle;
  } catch (const std::exception& e) {
    std::cerr << "multisec: error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
