#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "multisec/card.hpp"
#include "multisec/report.hpp"
#include "multisec/verify.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace multisec;

namespace {

namespace fs = std::filesystem;

const AnalysisCard& builtin(const std::string& key) {
  for (const auto& b : builtin_cards())
    if (b.key == key) return b.card;
  throw std::logic_error("no builtin " + key);
}

std::string field_of(const std::string& text) {
  try {
    parse_card(text);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "";
}

// A minimal valid card with one substitution applied.
std::string card_with(const std::string& from, const std::string& to) {
  std::string s = card_to_json(builtin("fano-product"));
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("multisec_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(MULTISEC_BIN) + " " + args + " > " + out.string() + " 2> " + out.string() + ".err";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("builtin cards round-trip through JSON") {
  REQUIRE(builtin_cards().size() == 3);
  for (const auto& b : builtin_cards()) {
    const std::string text = card_to_json(b.card);
    CHECK(parse_card(text) == b.card);
    CHECK(card_to_json(parse_card(text)) == text);
    CHECK(is_builtin(parse_card(text)));
    CHECK(text.find('\r') == std::string::npos);
  }
  AnalysisCard renamed = builtin("blowup");
  renamed.name = "my blow-up";
  CHECK_FALSE(is_builtin(renamed));
}

TEST_CASE("card validation names the field") {
  CHECK(field_of("not json") == "card");
  CHECK(field_of("[1, 2]") == "card");
  CHECK(field_of(card_with("\"dim\": 3", "\"dim\": 3.0")) == "dim");
  CHECK(field_of(card_with("\"dim\": 3", "\"dim\": 0")) == "dim");
  CHECK(field_of(card_with("\"dim\": 3", "\"dim\": 2")) == "oracle");
  CHECK(field_of(card_with("\"class_rank\": 2", "\"class_rank\": 1")) == "canonical_class");
  CHECK(field_of(card_with("[[1,1],[1,2]]", "[[1,1],[1.5,2]]")) == "divisors[1][0]");
  CHECK(field_of(card_with("[[1,1],[1,2]]", "[[1,1],[1]]")) == "divisors[1]");
  CHECK(field_of(card_with("[[1,1],[1,2]]", "[]")) == "divisors");
  CHECK(field_of(card_with("\"canonical_class\": [-2,-3]", "\"canonical_class\": [-2,\"-3\"]")) ==
        "canonical_class[1]");
  CHECK(field_of(card_with("\"kind\": \"product\"", "\"kind\": \"toric\"")) == "oracle.kind");
  CHECK(field_of(card_with("\"dim\": 3", "\"dim\": 3, \"extra\": 1")) == "extra");
  CHECK(field_of(card_with("\"dim\": 3,", "")) == "dim");
  CHECK(field_of(card_with("\"eff_generators\": [[1,0],[0,1]]", "\"eff_generators\": [[1,0],[0,1],[-1,0]]")) ==
        "eff_generators");
  CHECK(field_of(card_with("\"amp_generators\": [[1,0],[0,1]]", "\"amp_generators\": [[0,1],[-1,1]]")) ==
        "amp_generators");
  // Large integers beyond 64 bits are floats to a JSON parser and must be rejected.
  CHECK(field_of(card_with("[[1,1],[1,2]]", "[[1,1],[1,200000000000000000000]]")) == "divisors[1][1]");
}

TEST_CASE("analysis reports") {
  const auto blowup = analyze(builtin("blowup"));
  CHECK(blowup.hypotheses_hold());
  CHECK_FALSE(blowup.noetherian_assumed);
  CHECK(blowup.noetherian_note == "a famous result of Zariski");
  REQUIRE(blowup.u);
  CHECK(blowup.u->members == std::vector<std::size_t>{0});
  CHECK(blowup.class_group_T->describe() == "Z");
  CHECK(blowup.class_group_R->describe() == "0");
  CHECK(*blowup.canonical_T->shift == make_int_vector({-1, -3}));
  CHECK(blowup.hilbert.size() == 2);
  for (const auto& h : blowup.hilbert) CHECK(h.passed);

  const auto product = analyze(builtin("fano-product"));
  CHECK(product.u->members == std::vector<std::size_t>{0, 1});
  CHECK(product.canonical_T->free);

  AnalysisCard user = builtin("veronese");
  user.name = "P^2 with D = 2H";
  user.divisors = {make_int_vector({2})};
  const auto v = analyze(user);
  CHECK(v.noetherian_assumed);
  CHECK(v.noetherian_note.empty());
  CHECK(v.class_group_T->describe() == "Z/2");
  CHECK_FALSE(v.canonical_T->free);
  CHECK(v.hilbert.empty());

  AnalysisCard bad = builtin("blowup");
  bad.divisors = {make_int_vector({1, 0})};
  const auto failed = analyze(bad);
  CHECK_FALSE(failed.hypothesis_T);
  CHECK_FALSE(failed.u);
  CHECK_FALSE(failed.canonical_T);
}

TEST_CASE("JSON reports round-trip and are deterministic") {
  std::vector<AnalysisCard> cards;
  for (const auto& b : builtin_cards()) cards.push_back(b.card);
  AnalysisCard torsion = builtin("veronese");
  torsion.divisors = {make_int_vector({4})};
  cards.push_back(torsion);
  AnalysisCard r_only = builtin("blowup");
  r_only.divisors = {make_int_vector({1, 0}), make_int_vector({0, -1}), make_int_vector({0, 2})};
  cards.push_back(r_only);
  AnalysisCard no_oracle = builtin("fano-product");
  no_oracle.oracle.reset();
  cards.push_back(no_oracle);

  for (const auto& card : cards) {
    const std::string first = report_to_json(analyze(card));
    CHECK(report_to_json(analyze(card)) == first);
    const std::string again = report_to_json(report_from_json(first));
    CHECK(again == first);
    CHECK(report_to_json(report_from_json(again)) == again);
    CHECK(report_to_text(analyze(card)) == report_to_text(report_from_json(first)));
  }
}

TEST_CASE("report reader rejects inconsistent reports") {
  std::string text = report_to_json(analyze(builtin("blowup")));
  const auto at = text.find("\"free\": true");
  REQUIRE(at != std::string::npos);
  std::string broken = text;
  broken.replace(at, 12, "\"free\": false");
  CHECK_THROWS_AS(report_from_json(broken), ValidationError);
  CHECK_THROWS_AS(report_from_json("{}"), ValidationError);
}

TEST_CASE("verify suite") {
  std::ostringstream out;
  const auto outcome = run_verify("blowup", out);
  CHECK(outcome.ok());
  CHECK(outcome.passed > 10);
  CHECK(out.str().find("FAIL ") == std::string::npos);
  CHECK_THROWS_AS(run_verify("elliptic", out), std::invalid_argument);
}

TEST_CASE("command line exit codes and output") {
  const fs::path dir = scratch();
  const fs::path out = dir / "out.txt";

  REQUIRE(run("cards dump " + (dir / "cards").string(), out) == 0);
  for (const auto& b : builtin_cards()) CHECK(fs::exists(dir / "cards" / (b.key + ".json")));
  const std::string blowup = (dir / "cards" / "blowup.json").string();

  CHECK(run("analyze " + blowup + " --json", out) == 0);
  const std::string json1 = read_file(out);
  CHECK(run("analyze " + blowup + " --json", out) == 0);
  CHECK(read_file(out) == json1);
  CHECK(report_to_json(report_from_json(json1)) == json1);

  CHECK(run("hilbert " + blowup + " --ring T --box 0:2,0:2", out) == 0);
  const std::string csv = read_file(out);
  CHECK(csv.rfind("n_1,n_2,dim\n0,0,1\n", 0) == 0);
  CHECK(csv.find("1,1,2\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
  CHECK(run("hilbert " + blowup + " --ring T --box 1:0,0:2", out) == 0);
  CHECK(read_file(out) == "n_1,n_2,dim\n");

  CHECK(run("hilbert " + blowup + " --ring omega --box 0:1,0:1", out) == 2);
  CHECK(run("hilbert " + blowup + " --ring T --box 0:1", out) == 2);
  CHECK(run("hilbert " + blowup + " --ring T --box a:b,0:1", out) == 2);
  CHECK(run("analyze " + (dir / "missing.json").string(), out) == 2);
  CHECK(run("verify nothing", out) == 2);
  CHECK(run("frobnicate", out) == 2);

  std::string text = read_file(blowup);
  write_file(dir / "dim0.json", std::string(text).replace(text.find("\"dim\": 2"), 8, "\"dim\": 0"));
  CHECK(run("analyze " + (dir / "dim0.json").string(), out) == 2);
  CHECK(read_file(out.string() + ".err").find("dim") != std::string::npos);

  write_file(dir / "float.json", std::string(text).replace(text.find("[[-1,0],[0,1]]"), 14, "[[-1,0],[0,1.0]]"));
  CHECK(run("analyze " + (dir / "float.json").string(), out) == 2);

  write_file(dir / "hyp.json", std::string(text).replace(text.find("[[-1,0],[0,1]]"), 14, "[[1,0]]"));
  CHECK(run("analyze " + (dir / "hyp.json").string(), out) == 3);
  CHECK(run("hilbert " + (dir / "hyp.json").string() + " --ring T --box 0:1", out) == 3);

  const auto oracle = text.find("\"oracle\"");
  const auto divisors = text.find("\"divisors\"");
  write_file(dir / "no_oracle.json", std::string(text).erase(oracle, divisors - oracle));
  CHECK(run("hilbert " + (dir / "no_oracle.json").string() + " --ring T --box 0:1,0:1", out) == 4);
  CHECK(run("analyze " + (dir / "no_oracle.json").string(), out) == 0);

  CHECK(run("verify blowup", out) == 0);
  fs::remove_all(dir);
}
