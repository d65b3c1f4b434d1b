#include "helly/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "helly/json_io.hpp"

namespace helly::cli {

std::string to_string(Status s) {
  switch (s) {
  case Status::Ok:
    return "ok";
  case Status::InvalidInput:
    return "invalid-input";
  case Status::Inconclusive:
    return "inconclusive";
  case Status::Counterexample:
    break;
  }
  return "counterexample";
}

int exit_code(Status s) {
  switch (s) {
  case Status::Ok:
    return 0;
  case Status::InvalidInput:
    return 2;
  case Status::Inconclusive:
    return 3;
  case Status::Counterexample:
    break;
  }
  return 4;
}

namespace {

using io::Json;

struct Result {
  Status status = Status::Ok;
  Json payload = Json::object();
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidInput("cannot read input file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t cap = 1'000'000;
  std::string output = "json";
};

Result cmd_bound(unsigned n, std::uint64_t k) {
  return {Status::Ok, io::to_json(c_report(n, k))};
}

Result cmd_witness(unsigned n, bool verify_flag, bool scaled) {
  auto W = build_witness(n);
  Result r;
  r.payload["witness"] = io::to_json(W);
  if (scaled)
    r.payload["scaled"] = io::polyhedron_json(W.integer_scaled());
  if (verify_flag) {
    auto report = verify(W);
    r.payload["verification"] = io::to_json(report);
    r.payload["norm_check"] = norm_check(W);
    if (!report.all_ok() || !norm_check(W))
      r.status = Status::Counterexample;
  }
  return r;
}

Status enum_status(const EnumOutcome &o) {
  if (std::holds_alternative<EnumCapExceeded>(o) ||
      std::holds_alternative<EnumUnboundedInconclusive>(o))
    return Status::Inconclusive;
  return Status::Ok;
}

Result cmd_enumerate(const std::string &path, bool interior, const Globals &g) {
  auto P = io::parse_polyhedron(read_file(path));
  EnumOptions options;
  options.cap = g.cap;
  auto outcome = interior ? interior_integer_points(P, options) : enumerate(P, options);
  return {enum_status(outcome), io::to_json(outcome)};
}

Result cmd_certificate(const std::string &path, const std::string &mode,
                       std::optional<std::size_t> size_limit, const Globals &g) {
  auto P = io::parse_polyhedron(read_file(path));
  EnumOptions options;
  options.cap = g.cap;
  auto cert = mode == "minimum" ? minimum_certificate(P, size_limit.value_or(P.size()), options)
                                : greedy_certificate(P, options);
  Result r{Status::Ok, Json{{"mode", mode}}};
  r.payload.update(io::to_json(cert));
  if (!is_valid(cert.verdict))
    r.status = Status::Inconclusive;
  else if (!cert.within_bound)
    r.status = Status::Counterexample;
  return r;
}

Result cmd_lemma(const std::string &name, std::size_t n, std::size_t k, std::size_t trials,
                 unsigned threads, bool exhaustive, const Globals &g) {
  auto kind = parse_lemma_kind(name);
  if (!kind)
    throw InvalidInput("unknown lemma '" + name + "' (expected shp|midpoint|split1|split2|main)");
  Result r;
  auto report = run_campaign(*kind, n, k, trials, g.seed, threads);
  r.payload = io::to_json(report);
  bool failed = !report.counterexamples.empty();
  if (exhaustive) {
    auto grid = exhaustive_small_grid();
    r.payload["exhaustive"] = io::to_json(grid);
    failed = failed || !grid.counterexamples.empty();
  }
  if (failed)
    r.status = Status::Counterexample;
  return r;
}

Result cmd_lbest(const std::string &path, std::size_t l, const std::string &algo,
                 const Globals &g) {
  auto inst = io::parse_ilp(read_file(path));
  ClarksonOptions options;
  options.seed = g.seed;
  auto basis = algo == "brute" ? brute_force_basis(inst, l) : clarkson_basis(inst, l, options);
  Result r{Status::Ok, Json{{"algo", algo}, {"l", l}}};
  r.payload.update(io::to_json(basis));
  if (!basis.verified || Integer(static_cast<unsigned long>(basis.indices.size())) > basis.bound)
    r.status = Status::Counterexample;
  return r;
}

Result cmd_axioms(const std::optional<std::string> &path, std::size_t n, std::size_t m,
                  std::int64_t u, std::size_t l, std::size_t trials, const Globals &g) {
  std::optional<ILPInstance> inst;
  if (path) {
    inst = io::parse_ilp(read_file(*path));
  } else {
    Rng rng(derive_seed(g.seed, 0));
    inst = random_instance(n, m, u, rng);
  }
  auto report = violator_axiom_check(*inst, l, trials, g.seed);
  Result r{Status::Ok, Json{{"l", l}, {"instance", io::ilp_json(*inst)}}};
  r.payload.update(io::to_json(report));
  if (!report.ok())
    r.status = Status::Counterexample;
  return r;
}

void emit(std::ostream &out, Status status, const std::string &command, const Json &payload) {
  Json doc{{"status", to_string(status)}, {"command", command}};
  doc.update(payload);
  out << doc.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact lattice-point and Helly-number toolkit", "helly"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Master seed for randomised commands");
  app.add_option("--cap", g.cap, "Enumeration cap")->check(CLI::Range(std::uint64_t{1}, ~std::uint64_t{0}));
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json"}));

  std::function<Result()> action;
  std::string command;
  auto sub = [&](const char *name, const char *help) {
    auto *s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&command, name] { command = name; });
    return s;
  };

  unsigned bound_n = 0;
  std::uint64_t bound_k = 0;
  auto *bound = sub("bound", "Bound report for c(n,k)");
  bound->add_option("--n", bound_n)->required()->check(CLI::Range(1u, 4096u));
  bound->add_option("--k", bound_k)->required();

  unsigned witness_n = 0;
  bool witness_verify = false, witness_scaled = false;
  auto *witness = sub("witness", "Lower-bound polytope for k = 1");
  witness->add_option("--n", witness_n)->required()->check(CLI::Range(2u, 12u));
  witness->add_flag("--verify", witness_verify);
  witness->add_flag("--scaled", witness_scaled);

  std::string enum_input;
  bool enum_interior = false;
  auto *enumerate_cmd = sub("enumerate", "Integer points of a polyhedron");
  enumerate_cmd->add_option("--input", enum_input)->required();
  enumerate_cmd->add_flag("--interior", enum_interior);

  std::string cert_input, cert_mode = "greedy";
  std::optional<std::size_t> cert_limit;
  auto *certificate = sub("certificate", "Constraint subset with the same integer points");
  certificate->add_option("--input", cert_input)->required();
  certificate->add_option("--mode", cert_mode)->check(CLI::IsMember({"greedy", "minimum"}));
  certificate->add_option("--size-limit", cert_limit);

  std::string lemma_name;
  std::size_t lemma_n = 2, lemma_k = 1, lemma_trials = 100;
  unsigned lemma_threads = 1;
  bool lemma_exhaustive = false;
  auto *lemma = sub("lemma-lab", "Randomised lemma campaigns");
  lemma->add_option("--lemma", lemma_name)->required();
  lemma->add_option("--n", lemma_n);
  lemma->add_option("--k", lemma_k);
  lemma->add_option("--trials", lemma_trials);
  lemma->add_option("--threads", lemma_threads)->check(CLI::Range(1u, 256u));
  lemma->add_flag("--exhaustive", lemma_exhaustive);

  std::string lbest_input, lbest_algo = "clarkson";
  std::size_t lbest_l = 1;
  auto *lbest = sub("lbest", "Basis for the l best points of an integer program");
  lbest->add_option("--input", lbest_input)->required();
  lbest->add_option("--l", lbest_l)->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  lbest->add_option("--algo", lbest_algo)->check(CLI::IsMember({"clarkson", "brute"}));

  std::optional<std::string> ax_input;
  std::size_t ax_n = 2, ax_m = 10, ax_l = 2, ax_trials = 1000;
  std::int64_t ax_u = 3;
  auto *axioms = sub("axioms", "Violator-space axiom check");
  axioms->add_option("--input", ax_input);
  axioms->add_option("--n", ax_n);
  axioms->add_option("--m", ax_m);
  axioms->add_option("--u", ax_u);
  axioms->add_option("--l", ax_l)->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  axioms->add_option("--trials", ax_trials);

  std::vector<std::string> argv_store{"helly"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    err << app.help();
    emit(out, Status::Ok, "help", Json::object());
    return exit_code(Status::Ok);
  } catch (const CLI::ParseError &e) {
    err << e.what() << '\n';
    emit(out, Status::InvalidInput, command.empty() ? "unknown" : command,
         Json{{"error", e.what()}});
    return exit_code(Status::InvalidInput);
  }

  Result result;
  try {
    if (command == "bound")
      result = cmd_bound(bound_n, bound_k);
    else if (command == "witness")
      result = cmd_witness(witness_n, witness_verify, witness_scaled);
    else if (command == "enumerate")
      result = cmd_enumerate(enum_input, enum_interior, g);
    else if (command == "certificate")
      result = cmd_certificate(cert_input, cert_mode, cert_limit, g);
    else if (command == "lemma-lab")
      result = cmd_lemma(lemma_name, lemma_n, lemma_k, lemma_trials, lemma_threads,
                         lemma_exhaustive, g);
    else if (command == "lbest")
      result = cmd_lbest(lbest_input, lbest_l, lbest_algo, g);
    else
      result = cmd_axioms(ax_input, ax_n, ax_m, ax_u, ax_l, ax_trials, g);
  } catch (const InvalidInput &e) {
    result = {Status::InvalidInput, Json{{"error", e.what()}}};
  } catch (const PreconditionError &e) {
    result = {Status::InvalidInput, Json{{"error", e.what()}}};
  } catch (const std::overflow_error &e) {
    result = {Status::InvalidInput, Json{{"error", e.what()}}};
  } catch (const SearchLimitExceeded &e) {
    result = {Status::Inconclusive, Json{{"error", e.what()}}};
  } catch (const std::exception &e) {
    result = {Status::Counterexample, Json{{"error", e.what()}}};
  }
  if (result.payload.contains("error"))
    err << command << ": " << result.payload["error"].get<std::string>() << '\n';
  emit(out, result.status, command, result.payload);
  return exit_code(result.status);
}

} // namespace helly::cli
