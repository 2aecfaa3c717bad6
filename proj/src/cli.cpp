#include "hgforge/cli.hpp"

#include "hgforge/checks.hpp"
#include "hgforge/derivation.hpp"
#include "hgforge/io.hpp"
#include "hgforge/recovery.hpp"
#include "hgforge/report.hpp"
#include "hgforge/sampling.hpp"

#include "CLI11.hpp"

#include <ostream>
#include <sstream>

namespace hgforge::cli {

namespace {

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string out;
  std::size_t witness_cap = 16;

  bool json() const { return format == "json"; }
};

ordered_json envelope(const char* command) {
  ordered_json j;
  j["schema"] = io::kSchema;
  j["command"] = command;
  return j;
}

std::string factors_string(const InvariantFactors& f) {
  std::string s = "[";
  for (std::size_t t = 0; t < f.size(); ++t) s += (t ? "," : "") + std::to_string(f[t]);
  return s + "]";
}

std::vector<std::string> measure_strings(const Measure<Rational>& m) {
  std::vector<std::string> v;
  for (std::size_t k = 0; k < m.n(); ++k) v.push_back(to_string(m[k]));
  return v;
}

std::string measure_text(const Measure<Rational>& m) {
  std::string s = "(";
  for (std::size_t k = 0; k < m.n(); ++k) s += (k ? ", " : "") + to_string(m[k]);
  return s + ")";
}

int input_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  return kInputError;
}

// Prints validation issues; returns true when the cube is valid.
bool report_validation(const CubeValidation<Rational>& v, const Globals& g, std::ostream& out,
                       ordered_json* json_sink) {
  if (json_sink) {
    (*json_sink)["valid"] = v.ok();
    ordered_json issues = ordered_json::array();
    for (const auto& issue : v.issues) {
      ordered_json ij;
      ij["kind"] = kind_name(issue.kind);
      ij["i"] = issue.i;
      ij["j"] = issue.j;
      ij["k"] = issue.k;
      ij["detail"] = issue.detail;
      issues.push_back(std::move(ij));
    }
    (*json_sink)["issues"] = std::move(issues);
    return v.ok();
  }
  if (v.ok()) {
    out << "valid: n=" << v.cube->n() << "\n";
    return true;
  }
  out << "invalid: " << v.issues.size() << " issue" << (v.issues.size() == 1 ? "" : "s") << "\n";
  for (const auto& issue : v.issues) {
    out << "  " << kind_name(issue.kind);
    if (issue.kind == ValidationIssue::Kind::NegativeEntry)
      out << " (i,j,k)=" << index_tuple({issue.i, issue.j, issue.k}) << ": " << issue.detail;
    else if (issue.kind == ValidationIssue::Kind::ColumnSumNotOne)
      out << " (i,j)=" << index_tuple({issue.i, issue.j}) << ": sum " << issue.detail;
    else
      out << ": " << issue.detail;
    out << "\n";
  }
  (void)g;
  return false;
}

// Parses and validates a cube file. Returns nullopt after reporting; `code`
// is then the exit code to use.
std::optional<StructureCube<Rational>> load_cube(const std::string& path, const Globals& g,
                                                 std::ostream& out, std::ostream& err,
                                                 ordered_json* json_sink, int& code) {
  io::CubeDocument doc;
  try {
    doc = io::parse_cube(io::read_file(path));
  } catch (const Error& e) {
    code = input_error(err, path + ": " + e.what());
    return std::nullopt;
  }
  auto v = io::validate_document(doc);
  if (!v.ok()) {
    report_validation(v, g, out, json_sink);
    code = kRejected;
    return std::nullopt;
  }
  return std::move(v.cube);
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const std::string& path, const Globals& g, std::ostream& out, std::ostream& err) {
  io::CubeDocument doc;
  try {
    doc = io::parse_cube(io::read_file(path));
  } catch (const Error& e) {
    return input_error(err, path + ": " + e.what());
  }
  const auto v = io::validate_document(doc);
  ordered_json j = envelope("validate");
  const bool ok = report_validation(v, g, out, g.json() ? &j : nullptr);
  if (g.json()) emit_json(out, j);
  return ok ? kSuccess : kRejected;
}

int cmd_check(const std::string& path, const std::string& property, const Globals& g,
              std::ostream& out, std::ostream& err) {
  ordered_json j = envelope("check");
  int code = kSuccess;
  auto cube = load_cube(path, g, out, err, g.json() ? &j : nullptr, code);
  if (!cube) {
    if (g.json() && code == kRejected) emit_json(out, j);
    return code;
  }
  const CheckOptions opts{g.witness_cap};
  const bool all = property == "all";
  bool holds = true;
  ordered_json props = ordered_json::array();
  std::string text;

  auto add = [&](const PropertyReport& r) {
    holds = holds && r.holds;
    props.push_back(to_json(r));
    text += to_text(r);
  };

  if (all || property == "commutative") add(is_commutative(*cube, opts));
  if (all || property == "associative") {
    add(is_associative_matrix(*cube, opts));
    add(is_associative_bruteforce(*cube, opts));
  }
  if (all || property == "condition-a") {
    const auto a = satisfies_condition_A(*cube);
    auto r = to_property_report(a, cube->n(), opts);
    holds = holds && r.holds;
    auto rj = to_json(r);
    rj["detail"] = to_json(a);
    props.push_back(std::move(rj));
    std::ostringstream ranks;
    ranks << "  distinct columns " << a.distinct_columns << ", left ranks [";
    for (std::size_t i = 0; i < a.left_ranks.size(); ++i) ranks << (i ? "," : "") << a.left_ranks[i];
    ranks << "], right ranks [";
    for (std::size_t i = 0; i < a.right_ranks.size(); ++i) ranks << (i ? "," : "") << a.right_ranks[i];
    ranks << "]\n";
    text += to_text(r) + ranks.str();
  }
  if (all || property == "corollaries") {
    const auto reports = check_corollaries(*cube, opts);
    bool all_hold = true;
    ordered_json sub = ordered_json::array();
    std::string sub_text;
    for (const auto& r : reports) {
      all_hold = all_hold && r.holds;
      sub.push_back(to_json(r));
      sub_text += to_text(r, "  ");
    }
    holds = holds && all_hold;
    ordered_json cj;
    cj["property"] = "corollaries";
    cj["holds"] = all_hold;
    cj["reports"] = std::move(sub);
    props.push_back(std::move(cj));
    text += std::string("corollaries: ") + (all_hold ? "holds" : "fails") + "\n" + sub_text;
  }

  if (g.json()) {
    j["holds"] = holds;
    j["properties"] = std::move(props);
    emit_json(out, j);
  } else {
    out << text;
  }
  return holds ? kSuccess : kRejected;
}

int cmd_derive(const std::string& group_path, const std::string& measure_path, const Globals& g,
               std::ostream& out, std::ostream& err) {
  if (g.out.empty()) return input_error(err, "derive needs --out <cube file>");
  std::optional<CayleyTable> table;
  std::optional<Measure<Rational>> measure;
  try {
    table.emplace(io::parse_group(io::read_file(group_path)));
  } catch (const Error& e) {
    return input_error(err, group_path + ": " + e.what());
  }
  try {
    measure.emplace(io::parse_measure(io::read_file(measure_path)));
  } catch (const Error& e) {
    return input_error(err, measure_path + ": " + e.what());
  }
  if (measure->n() != table->n())
    return input_error(err, "group has order " + std::to_string(table->n()) + " but measure has " +
                                std::to_string(measure->n()) + " states");

  const auto cube = derive_cube(*table, *measure);
  const auto verdict = degeneracy_check(*table, *measure);
  try {
    io::write_file(g.out, io::serialize_cube(cube));
  } catch (const Error& e) {
    return input_error(err, e.what());
  }

  const char* kind = kind_name<Rational>(verdict.kind);
  std::string kernel;
  if (verdict.kernel) kernel = detail::vector_string(*verdict.kernel);
  if (g.json()) {
    ordered_json j = envelope("derive");
    j["n"] = table->n();
    j["verdict"] = kind;
    if (verdict.translate) j["translate"] = verdict.translate;
    if (verdict.kernel) {
      std::vector<std::string> kv;
      for (Eigen::Index k = 0; k < verdict.kernel->size(); ++k) kv.push_back(to_string((*verdict.kernel)(k)));
      j["kernel"] = kv;
    }
    j["out"] = g.out;
    emit_json(out, j);
  } else {
    out << "verdict: " << kind;
    if (verdict.translate) out << " (h = " << verdict.translate << ")";
    if (verdict.kernel) out << " (kernel " << kernel << ")";
    out << "\nwrote " << g.out << "\n";
  }
  return verdict.degenerate() ? kDegenerate : kSuccess;
}

int cmd_recover(const std::string& path, const std::string& out_measure, const Globals& g,
                std::ostream& out, std::ostream& err) {
  io::CubeDocument doc;
  try {
    doc = io::parse_cube(io::read_file(path));
  } catch (const Error& e) {
    return input_error(err, path + ": " + e.what());
  }
  const auto v = io::validate_document(doc);
  RecoveryResult<Rational> result{NotDerived{RejectReason::FailsValidation, {}, {}}};
  if (v.ok()) {
    result = recover(*v.cube);
  } else {
    const auto& issue = v.issues.front();
    std::vector<std::size_t> witness;
    for (auto idx : {issue.i, issue.j, issue.k})
      if (idx) witness.push_back(idx);
    result.outcome = NotDerived{RejectReason::FailsValidation, std::move(witness),
                                std::string(kind_name(issue.kind)) + " " + issue.detail};
  }

  ordered_json j = envelope("recover");
  if (result.recovered()) {
    const auto& rec = result.value();
    try {
      if (!g.out.empty()) io::write_file(g.out, io::serialize_group(rec.table));
      if (!out_measure.empty()) io::write_file(out_measure, io::serialize_measure(rec.measure));
    } catch (const Error& e) {
      return input_error(err, e.what());
    }
    if (g.json()) {
      j["status"] = "recovered";
      j["invariant_factors"] = rec.factors;
      j["cayley_table"] = rec.table.to_one_based();
      j["measure"] = measure_strings(rec.measure);
      j["round_trip"] = "exact";
      emit_json(out, j);
    } else {
      out << "status: recovered\n"
          << "invariant_factors: " << factors_string(rec.factors) << "\n"
          << "measure: " << measure_text(rec.measure) << "\n"
          << "cayley_table:\n";
      for (const auto& row : rec.table.to_one_based()) {
        out << " ";
        for (auto x : row) out << " " << x;
        out << "\n";
      }
      out << "round-trip: exact\n";
    }
    return kSuccess;
  }

  const NotDerived& nd = result.rejection();
  if (g.json()) {
    j["status"] = "not-derived";
    j["reason"] = reason_name(nd.reason);
    j["witness"] = nd.witness;
    j["detail"] = nd.detail;
    emit_json(out, j);
  } else {
    out << "status: not derived\n"
        << "reason: " << reason_name(nd.reason) << "\n";
    if (!nd.witness.empty()) out << "witness: " << index_tuple(nd.witness) << "\n";
    out << "detail: " << nd.detail << "\n";
  }
  return kRejected;
}

int cmd_enumerate(std::size_t n, bool count_only, std::size_t cap, const Globals& g,
                  std::ostream& out, std::ostream& err) {
  std::vector<InvariantFactors> groups;
  try {
    groups = enumerate_abelian_groups(n, cap);
  } catch (const Error& e) {
    return input_error(err, e.what());
  }
  if (g.json()) {
    ordered_json j = envelope("enumerate-groups");
    j["n"] = n;
    j["count"] = groups.size();
    if (!count_only) {
      ordered_json list = ordered_json::array();
      for (const auto& f : groups) list.push_back(f);
      j["groups"] = std::move(list);
    }
    emit_json(out, j);
  } else if (count_only) {
    out << groups.size() << "\n";
  } else {
    for (const auto& f : groups) out << factors_string(f) << "\n";
  }
  return kSuccess;
}

struct RoundTripTally {
  std::size_t pass = 0, fail = 0, degenerate = 0;
};

int cmd_roundtrip(std::size_t n, std::size_t trials, bool include_degenerate, std::uint64_t grid,
                  std::size_t cap, const Globals& g, std::ostream& out, std::ostream& err) {
  std::vector<InvariantFactors> groups;
  try {
    groups = enumerate_abelian_groups(n, cap);
  } catch (const Error& e) {
    return input_error(err, e.what());
  }
  MeasureSampler sampler(g.seed, grid);
  RoundTripTally total;
  ordered_json per_group = ordered_json::array();
  std::string text;

  for (const auto& factors : groups) {
    const auto table = cayley_table(factors);
    RoundTripTally tally;
    std::vector<std::string> failures;

    auto run_one = [&](const Measure<Rational>& m) {
      if (degeneracy_check(table, m).degenerate()) {
        ++tally.degenerate;
        return;
      }
      const auto result = recover(derive_cube(table, m));
      if (result.recovered() && result.value().table == table && result.value().measure == m &&
          result.value().factors == factors) {
        ++tally.pass;
      } else {
        ++tally.fail;
        failures.push_back(measure_text(m) + (result.recovered()
                                                  ? std::string(": recovered a different (group, measure)")
                                                  : std::string(": ") + reason_name(result.rejection().reason)));
      }
    };

    if (include_degenerate) run_one(Measure<Rational>::uniform(n));
    for (std::size_t t = 0; t < trials; ++t) {
      if (include_degenerate) {
        run_one(sampler.sample(n));
      } else {
        try {
          run_one(sampler.sample_nondegenerate(table));
        } catch (const Error& e) {
          return input_error(err, e.what());
        }
      }
    }

    total.pass += tally.pass;
    total.fail += tally.fail;
    total.degenerate += tally.degenerate;
    ordered_json gj;
    gj["invariant_factors"] = factors;
    gj["pass"] = tally.pass;
    gj["fail"] = tally.fail;
    gj["skipped_degenerate"] = tally.degenerate;
    gj["failures"] = failures;
    per_group.push_back(std::move(gj));
    text += factors_string(factors) + ": " + std::to_string(tally.pass) + " pass, " +
            std::to_string(tally.fail) + " fail, " + std::to_string(tally.degenerate) +
            " skipped-degenerate\n";
    for (const auto& f : failures) text += "  FAIL " + f + "\n";
  }

  const std::size_t attempted = total.pass + total.fail;
  if (g.json()) {
    ordered_json j = envelope("roundtrip");
    j["order"] = n;
    j["trials"] = trials;
    j["seed"] = g.seed;
    j["grid"] = grid;
    j["groups"] = std::move(per_group);
    j["pass"] = total.pass;
    j["fail"] = total.fail;
    j["skipped_degenerate"] = total.degenerate;
    emit_json(out, j);
  } else {
    out << text << "total: " << total.pass << "/" << attempted << " pass, " << total.fail
        << " fail, " << total.degenerate << " skipped-degenerate\n";
  }
  return total.fail == 0 ? kSuccess : kRejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite commutative semihypergroups: validate, check, derive and recover structure cubes"};
  app.name(args.empty() ? "hgforge" : args.front());
  app.require_subcommand(1);

  Globals g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for random measures");
  app.add_option("--out", g.out, "Output file (cube for derive, group for recover)");
  app.add_option("--witness-cap", g.witness_cap, "Maximum witnesses listed per property");

  std::string cube_path, group_path, measure_path, out_measure, property = "all";
  std::size_t order = 0, trials = 20, cap = kDefaultOrderCap;
  std::uint64_t grid = kDefaultGrid;
  bool count_only = false, include_degenerate = false;

  auto* validate = app.add_subcommand("validate", "Check nonnegativity and column sums of a cube");
  validate->add_option("cube", cube_path, "Cube file")->required();

  auto* check = app.add_subcommand("check", "Decide commutativity, associativity, condition (A), corollaries");
  check->add_option("cube", cube_path, "Cube file")->required();
  check->add_option("--property", property, "Which properties to check")
      ->check(CLI::IsMember({"all", "commutative", "associative", "condition-a", "corollaries"}));

  auto* derive = app.add_subcommand("derive", "Build the cube of {m * g_i} from a group and a measure");
  derive->add_option("group", group_path, "Group file")->required();
  derive->add_option("measure", measure_path, "Measure file")->required();

  auto* rec = app.add_subcommand("recover", "Recover the group and measure behind a cube");
  rec->add_option("cube", cube_path, "Cube file")->required();
  rec->add_option("--out-measure", out_measure, "Where to write the recovered measure");

  auto* enumerate = app.add_subcommand("enumerate-groups", "List abelian groups of order n");
  enumerate->add_option("n", order, "Group order")->required();
  enumerate->add_flag("--count", count_only, "Print only the number of groups");
  enumerate->add_option("--cap", cap, "Largest accepted order");

  auto* roundtrip = app.add_subcommand("roundtrip", "Derive-then-recover on random measures");
  roundtrip->add_option("--order", order, "Group order")->required();
  roundtrip->add_option("--trials", trials, "Measures per group");
  roundtrip->add_flag("--include-degenerate", include_degenerate,
                      "Do not reject degenerate measures; count them as skipped");
  roundtrip->add_option("--grid", grid, "Denominator grid for random weights")->check(CLI::PositiveNumber);
  roundtrip->add_option("--cap", cap, "Largest accepted order");

  for (auto* sub : {validate, check, derive, rec, enumerate, roundtrip}) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(cube_path, g, out, err);
    if (*check) return cmd_check(cube_path, property, g, out, err);
    if (*derive) return cmd_derive(group_path, measure_path, g, out, err);
    if (*rec) return cmd_recover(cube_path, out_measure, g, out, err);
    if (*enumerate) return cmd_enumerate(order, count_only, cap, g, out, err);
    if (*roundtrip) {
      if (order == 0 || order > cap) return input_error(err, "--order must be in 1.." + std::to_string(cap));
      return cmd_roundtrip(order, trials, include_degenerate, grid, cap, g, out, err);
    }
  } catch (const std::exception& e) {
    return input_error(err, e.what());
  }
  return kInputError;
}

}  // namespace hgforge::cli
