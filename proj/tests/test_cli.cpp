#include "doctest.h"

#include "hgforge/cli.hpp"
#include "hgforge/io.hpp"

#include "json.hpp"

#include <sstream>

using namespace hgforge;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hgforge");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HGFORGE_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", data("z2_derived.json")}).code == 0);
  const auto bad = run({"--format", "json", "validate", data("bad_sum.json")});
  CHECK(bad.code == 1);
  const auto j = nlohmann::json::parse(bad.out);
  CHECK(j["schema"] == io::kSchema);
  CHECK(j["command"] == "validate");
  CHECK(j["valid"] == false);
  CHECK(j["issues"][0]["kind"] == "ColumnSumNotOne");
  CHECK(j["issues"][0]["detail"] == "9/10");
  CHECK(run({"validate", data("negative.json")}).code == 1);
  CHECK(run({"validate", data("missing.json")}).code == 2);
  CHECK(run({"validate", data("truncated.json")}).code == 2);
  CHECK(run({"validate", data("float_literal.json")}).code == 2);
  CHECK(run({"validate", data("decimal_z2.json")}).code == 0);
}

TEST_CASE("check") {
  const auto all = run({"check", data("z2_derived.json")});
  CHECK(all.code == 0);
  CHECK(all.out.find("condition-a: holds") != std::string::npos);

  const auto semi = run({"--format", "json", "check", data("semilattice.json"), "--property", "condition-a"});
  CHECK(semi.code == 1);
  const auto j = nlohmann::json::parse(semi.out);
  CHECK(j["holds"] == false);

  const auto nonassoc = run({"check", data("nonassoc.json"), "--property", "associative"});
  CHECK(nonassoc.code == 1);
  CHECK(nonassoc.out.find("(1,1,2)") != std::string::npos);

  CHECK(run({"check", data("z2_derived.json"), "--property", "corollaries"}).code == 0);
  CHECK(run({"check", data("z2_derived.json"), "--property", "bogus"}).code == 2);
  CHECK(run({"check", data("bad_sum.json")}).code == 1);
}

TEST_CASE("derive") {
  const auto ok = run({"--out", "cli_test_derived.json", "derive", data("z2.group.json"), data("m_z2.json")});
  CHECK(ok.code == 0);
  CHECK(io::read_file("cli_test_derived.json") == io::read_file(data("z2_derived.json")));

  const auto half = run({"--format", "json", "--out", "cli_test_half.json", "derive", data("z2.group.json"),
                         data("m_half.json")});
  CHECK(half.code == 3);
  auto j = nlohmann::json::parse(half.out);
  CHECK(j["verdict"] == "RepeatedTranslates");
  CHECK(j["translate"] == 2);

  const auto sing = run({"--format", "json", "--out", "cli_test_sing.json", "derive", data("z4.group.json"),
                         data("m_z4_singular.json")});
  CHECK(sing.code == 3);
  j = nlohmann::json::parse(sing.out);
  CHECK(j["verdict"] == "SingularMixture");
  CHECK(j["kernel"] == nlohmann::json::array({"1", "-1", "1", "-1"}));

  CHECK(run({"--out", "cli_test_bad.json", "derive", data("z4.group.json"), data("m_z2.json")}).code == 2);
  CHECK(run({"derive", data("z2.group.json"), data("m_z2.json")}).code == 2);  // --out is required
}

TEST_CASE("recover") {
  const auto ok = run({"--format", "json", "--out", "cli_test_rec.group.json", "recover", data("z2_derived.json"),
                       "--out-measure", "cli_test_rec.measure.json"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["status"] == "recovered");
  CHECK(j["invariant_factors"] == nlohmann::json::array({2}));
  CHECK(j["measure"] == nlohmann::json::array({"3/4", "1/4"}));
  CHECK(j["round_trip"] == "exact");
  CHECK(io::parse_measure(io::read_file("cli_test_rec.measure.json")) ==
        io::parse_measure(io::read_file(data("m_z2.json"))));
  CHECK(io::parse_group(io::read_file("cli_test_rec.group.json")) == cayley_table({2}));

  const auto semi = run({"recover", data("semilattice.json")});
  CHECK(semi.code == 1);
  CHECK(semi.out.find("FailsConditionA") != std::string::npos);
  const auto pert = run({"--format", "json", "recover", data("perturbed.json")});
  CHECK(pert.code == 1);
  CHECK(nlohmann::json::parse(pert.out)["reason"] == "NotAssociative");
}

TEST_CASE("enumerate-groups") {
  const auto r = run({"--format", "json", "enumerate-groups", "16"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 5);
  CHECK(j["groups"][2] == nlohmann::json::array({4, 4}));
  CHECK(run({"enumerate-groups", "64", "--count"}).out == "11\n");
  CHECK(run({"enumerate-groups", "300"}).code == 2);
  CHECK(run({"enumerate-groups", "300", "--cap", "512", "--count"}).out == "4\n");
  CHECK(run({"enumerate-groups", "0"}).code == 2);
}

TEST_CASE("roundtrip") {
  const auto r = run({"--format", "json", "--seed", "7", "roundtrip", "--order", "4", "--trials", "5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == 10);
  CHECK(j["fail"] == 0);

  const auto deg = run({"--format", "json", "roundtrip", "--order", "2", "--trials", "3", "--include-degenerate"});
  CHECK(deg.code == 0);
  CHECK(nlohmann::json::parse(deg.out)["skipped_degenerate"].get<int>() >= 1);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "check", data("z2_derived.json")},
           {"check", data("nonassoc.json")},
           {"--format", "json", "recover", data("z2_derived.json")},
           {"--seed", "3", "roundtrip", "--order", "6", "--trials", "4"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("help and usage") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}
