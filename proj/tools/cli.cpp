#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "prejj/classification.hpp"
#include "prejj/double_construction.hpp"
#include "prejj/io.hpp"
#include "prejj/matched_pairs.hpp"
#include "prejj/representations.hpp"

namespace prejj::cli {

namespace {

using io::Json;

struct Globals {
  std::string field;
  std::string out;
  std::size_t max_witnesses = default_max_witnesses;

  std::optional<Field> field_override() const {
    if (field.empty())
      return std::nullopt;
    return Field::parse(field);
  }
};

class UsageError : public Error {
public:
  using Error::Error;
};

Json envelope(const std::string &verb, const std::vector<std::string> &inputs, Json flags) {
  return Json{{"schema_version", io::schema_version},
              {"command", Json{{"verb", verb}, {"inputs", inputs}, {"flags", std::move(flags)}}}};
}

void emit(const Globals &g, const std::string &text, std::ostream &out) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f)
    throw UsageError("cannot write " + g.out);
  f << text;
}

// Concatenates the envelope with the payload keys.
Json merge(Json base, const Json &payload) {
  for (auto it = payload.begin(); it != payload.end(); ++it)
    base[it.key()] = it.value();
  return base;
}

enum class Subject { algebra, bimodule, rep, prejj_matched_pair, jj_matched_pair };

Subject detect(const Json &j) {
  if (j.contains("lA"))
    return Subject::prejj_matched_pair;
  if (j.contains("G") && j.contains("mu"))
    return Subject::jj_matched_pair;
  if (j.contains("l") && j.contains("r"))
    return Subject::bimodule;
  if (j.contains("rho") && j.contains("algebra"))
    return Subject::rep;
  return Subject::algebra;
}

std::string subject_name(Subject s) {
  switch (s) {
  case Subject::algebra:
    return "algebra";
  case Subject::bimodule:
    return "bimodule";
  case Subject::rep:
    return "rep";
  case Subject::prejj_matched_pair:
    return "prejj_matched_pair";
  case Subject::jj_matched_pair:
    return "jj_matched_pair";
  }
  return "algebra";
}

int cmd_check(const Globals &g, const std::string &file, const std::string &identity, const std::string &equations,
              std::ostream &out) {
  Json in = io::read_json_file(file);
  Subject subject = detect(in);
  auto f = g.field_override();
  std::vector<CheckReport> reports;
  switch (subject) {
  case Subject::algebra: {
    Algebra a = io::algebra_from_json(in, f);
    if (identity == "all")
      for (IdentityKind k : all_identity_kinds())
        reports.push_back(check_identity(a, k, g.max_witnesses));
    else
      reports.push_back(check_identity(a, parse_identity_kind(identity), g.max_witnesses));
    break;
  }
  case Subject::bimodule:
    reports.push_back(check_prejj_bimodule(io::bimodule_from_json(in, f), g.max_witnesses));
    break;
  case Subject::rep:
    reports.push_back(check_jj_rep(io::rep_from_json(in, f), g.max_witnesses));
    break;
  case Subject::prejj_matched_pair: {
    EquationSet set = equations == "printed" ? EquationSet::printed : EquationSet::derived;
    reports.push_back(evaluate_prejj_matched_pair(io::prejj_matched_pair_from_json(in, f), set, g.max_witnesses));
    break;
  }
  case Subject::jj_matched_pair:
    reports.push_back(evaluate_jj_matched_pair(io::jj_matched_pair_from_json(in, f), g.max_witnesses));
    break;
  }
  bool passed = true;
  Json rs = Json::array();
  for (const auto &r : reports) {
    passed = passed && r.passed;
    rs.push_back(io::to_json(r));
  }
  Json flags{{"identity", identity}, {"equations", equations}, {"field", g.field}, {"max_witnesses", g.max_witnesses}};
  Json doc = merge(envelope("check", {file}, flags),
                   Json{{"subject", subject_name(subject)}, {"passed", passed}, {"reports", rs}});
  emit(g, io::dump(doc), out);
  return passed ? pass : failed;
}

int cmd_subadjacent(const Globals &g, const std::string &file, bool halved, std::ostream &out) {
  Algebra a = io::algebra_from_json(io::read_json_file(file), g.field_override());
  Algebra s = sub_adjacent(a, halved);
  CheckReport r = check_identity(s, IdentityKind::jj, g.max_witnesses);
  Json doc = merge(envelope("subadjacent", {file}, Json{{"halved", halved}, {"field", g.field}}), io::to_json(s));
  doc["report"] = io::to_json(r);
  emit(g, io::dump(doc), out);
  return r.passed ? pass : failed;
}

int cmd_semidirect(const Globals &g, const std::string &file, std::ostream &out) {
  Json in = io::read_json_file(file);
  Subject subject = detect(in);
  Algebra result(Field::rationals(), 1);
  CheckReport r;
  if (subject == Subject::bimodule) {
    PreJJBimodule bm = io::bimodule_from_json(in, g.field_override());
    r = check_prejj_bimodule(bm, g.max_witnesses);
    result = prejj_semidirect(bm);
  } else if (subject == Subject::rep) {
    JJRep rep = io::rep_from_json(in, g.field_override());
    r = check_jj_rep(rep, g.max_witnesses);
    if (!r.passed) {
      Json doc = merge(envelope("semidirect", {file}, Json{{"field", g.field}}), Json{{"report", io::to_json(r)}});
      emit(g, io::dump(doc), out);
      return failed;
    }
    result = jj_semidirect(rep);
  } else {
    throw UsageError("semidirect expects a bimodule (keys l, r) or a representation (key rho)");
  }
  Json doc = merge(envelope("semidirect", {file}, Json{{"field", g.field}}), io::to_json(result));
  doc["report"] = io::to_json(r);
  emit(g, io::dump(doc), out);
  return r.passed ? pass : failed;
}

int cmd_double(const Globals &g, const std::string &fa, const std::string &fb, bool jj, bool enforce,
               const std::string &table, std::ostream &out, std::ostream &err) {
  auto f = g.field_override();
  Algebra a = io::algebra_from_json(io::read_json_file(fa), f);
  Algebra b = io::algebra_from_json(io::read_json_file(fb), f ? f : std::optional<Field>(a.field()));
  if (a.dim() != b.dim())
    throw UsageError("double: dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) +
                     " differ");
  PreconditionMode mode = enforce ? PreconditionMode::enforce : PreconditionMode::report;
  Json flags{{"jj", jj}, {"enforce", enforce}, {"conformance", table}, {"field", g.field}};
  std::vector<std::string> inputs{fa, fb};
  if (!table.empty())
    inputs.push_back(table);

  std::optional<DoubleConstruction> d;
  try {
    d = jj ? build_jj_double(a, b, mode) : build_prejj_double(a, b, mode);
  } catch (const PreconditionError &e) {
    Json doc = merge(envelope("double", inputs, flags), Json{{"passed", false}, {"precondition_failures", e.failures()}});
    emit(g, io::dump(doc), out);
    err << "double: " << e.what() << "\n";
    return failed;
  }

  CheckReport inv = check_invariance(*d, g.max_witnesses);
  CheckReport ident =
      check_identity(d->ambient, jj ? IdentityKind::jj : IdentityKind::left_pre_jj, g.max_witnesses);
  Json doc = merge(envelope("double", inputs, flags), io::to_json(*d));
  doc["invariance"] = io::to_json(inv);
  doc["ambient_check"] = io::to_json(ident);
  doc["table"] = io::render_table(d->ambient);
  if (!jj) {
    DoubleEquivalence eq = double_equivalence(a, b);
    doc["equivalence"] = Json{{"ambient_prejj", eq.ambient_prejj},
                              {"dual_matched_pair", eq.dual_matched_pair},
                              {"neg_ad_jj_matched_pair", eq.neg_ad_jj_matched_pair},
                              {"coincide", eq.coincide()}};
  }
  std::size_t mismatches = 0;
  if (!table.empty()) {
    Json rows = Json::array();
    for (const auto &e : conformance_diff(d->ambient, io::table_from_json(io::read_json_file(table), d->ambient))) {
      mismatches += !e.match;
      rows.push_back(io::to_json(d->ambient, e));
    }
    doc["conformance"] = rows;
    doc["conformance_mismatches"] = mismatches;
  }
  bool passed = inv.passed && ident.passed && mismatches == 0;
  doc["passed"] = passed;
  emit(g, io::dump(doc), out);
  return passed ? pass : failed;
}

int cmd_classify(const Globals &g, std::size_t dim, std::uint64_t prime, const std::string &kind, unsigned workers,
                 std::ostream &out, std::ostream &err) {
  Field f = prime ? Field::prime(prime) : g.field_override().value_or(Field::rationals());
  if (!f.is_prime())
    throw UsageError("classify needs --prime p or --field F_p");
  SearchOptions opts;
  opts.workers = workers;
  std::vector<IdentityKind> kinds;
  if (kind == "both")
    kinds = {IdentityKind::antiassociative, IdentityKind::left_pre_jj};
  else
    kinds = {parse_identity_kind(kind)};

  auto start = std::chrono::steady_clock::now();
  Json censuses = Json::array();
  std::vector<std::vector<ConstantTuple>> solutions;
  for (IdentityKind k : kinds) {
    censuses.push_back(io::to_json(classify(dim, f, k, opts)));
    if (kinds.size() > 1)
      solutions.push_back(enumerate_solutions(dim, f, k, opts));
  }
  Json flags{{"dim", dim}, {"field", f.to_string()}, {"kind", kind}};
  Json doc = merge(envelope("classify", {}, flags), Json{{"censuses", censuses}});
  if (kinds.size() > 1) {
    Json missing = Json::array();
    for (const auto &t : missing_from(solutions[0], solutions[1]))
      missing.push_back(io::to_json(t));
    doc["comparison"] = Json{{"antiassoc_not_left_prejj", missing},
                             {"left_prejj_only", solutions[1].size() - (solutions[0].size() - missing.size())},
                             {"solution_sets_equal", missing.empty() && solutions[0] == solutions[1]}};
  }
  emit(g, io::dump(doc), out);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "classify: " << secs << " s\n";
  return pass;
}

int cmd_iso(const Globals &g, const std::string &fa, const std::string &fb, std::int64_t bound, std::ostream &out) {
  auto f = g.field_override();
  Algebra a = io::algebra_from_json(io::read_json_file(fa), f);
  Algebra b = io::algebra_from_json(io::read_json_file(fb), f ? f : std::optional<Field>(a.field()));
  if (a.dim() != b.dim())
    throw UsageError("iso: dimensions differ");
  auto p = find_isomorphism(a, b, bound);
  Json doc = merge(envelope("iso", {fa, fb}, Json{{"bound", bound}, {"field", g.field}}),
                   Json{{"isomorphic", p.has_value()}, {"matrix", p ? io::to_json(*p) : Json()}});
  emit(g, io::dump(doc), out);
  return p ? pass : failed;
}

int cmd_table(const Globals &g, const std::string &file, std::ostream &out) {
  Algebra a = io::algebra_from_json(io::read_json_file(file), g.field_override());
  emit(g, io::render_table(a), out);
  return pass;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact checks and constructions for JJ and pre-JJ algebras", "prejj"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--field", g.field, "Field for all inputs: rational, F_p or p");
  app.add_option("--out", g.out, "Write the result here instead of stdout");
  app.add_option("--max-witnesses", g.max_witnesses, "Witnesses kept per report")->check(CLI::NonNegativeNumber);

  std::string file, file2, identity = "left-prejj", equations = "derived", table, kind = "antiassoc";
  bool halved = false, jj = false, enforce = false;
  std::size_t dim = 2;
  std::uint64_t prime = 0;
  unsigned workers = 0;
  std::int64_t bound = 2;

  auto *check = app.add_subcommand("check", "Check an algebra, bimodule, representation or matched pair");
  check->add_option("file", file)->required();
  check->add_option("--identity", identity, "antiassoc, left-prejj, right-prejj, jj, operad or all");
  check->add_option("--equations", equations, "Matched-pair equations: derived or printed")
      ->check(CLI::IsMember({"derived", "printed"}));

  auto *sub = app.add_subcommand("subadjacent", "Sub-adjacent JJ algebra");
  sub->add_option("file", file)->required();
  sub->add_flag("--halved", halved, "Use (xy + yx)/2");

  auto *semi = app.add_subcommand("semidirect", "Semidirect sum of a bimodule or representation");
  semi->add_option("file", file)->required();

  auto *dbl = app.add_subcommand("double", "Double construction on A + A*");
  dbl->add_option("A", file)->required();
  dbl->add_option("Astar", file2)->required();
  dbl->add_flag("--jj", jj, "Build the JJ double");
  dbl->add_flag("--enforce", enforce, "Fail when the inputs violate the preconditions");
  dbl->add_option("--conformance", table, "Table fixture to diff against");

  auto *cls = app.add_subcommand("classify", "GL-orbit census over a prime field");
  cls->add_option("--dim", dim)->check(CLI::Range(1, 2));
  cls->add_option("--prime", prime);
  cls->add_option("--kind", kind, "An identity kind or both");
  cls->add_option("--workers", workers);

  auto *iso = app.add_subcommand("iso", "Search for an isomorphism A -> B");
  iso->add_option("A", file)->required();
  iso->add_option("B", file2)->required();
  iso->add_option("--bound", bound, "Entry bound for the rational scan")->check(CLI::NonNegativeNumber);

  auto *tbl = app.add_subcommand("table", "Print the multiplication table");
  tbl->add_option("file", file)->required();

  std::vector<std::string> argv_store{"prejj"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &s : argv_store)
    argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? pass : usage;
  }

  try {
    if (*check)
      return cmd_check(g, file, identity, equations, out);
    if (*sub)
      return cmd_subadjacent(g, file, halved, out);
    if (*semi)
      return cmd_semidirect(g, file, out);
    if (*dbl)
      return cmd_double(g, file, file2, jj, enforce, table, out, err);
    if (*cls)
      return cmd_classify(g, dim, prime, kind, workers, out, err);
    if (*iso)
      return cmd_iso(g, file, file2, bound, out);
    if (*tbl)
      return cmd_table(g, file, out);
  } catch (const InfeasibleSearch &e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

} // namespace prejj::cli
