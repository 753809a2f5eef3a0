// eqlog: batch front end for equilibrium-logic reasoning.
//
// Machine output is a single JSON object on stdout; human diagnostics go
// to stderr. Exit codes: 0 success / query answered true, 1 query
// answered false, 2 usage or parse error, 3 precondition violation,
// 4 internal verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <eqlog/eqlog.hpp>

namespace {

using nlohmann::ordered_json;

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_precondition = 3;
constexpr int exit_internal = 4;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// '-' reads stdin, an existing file path reads the file, anything else
// is taken as inline text.
std::string load_text(const std::string& arg) {
  if (arg == "-") {
    return read_all(std::cin);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) {
      throw io_error("cannot read '" + arg + "'");
    }
    return read_all(in);
  }
  return arg;
}

eqlog::FormulaPtr load_formula(const std::string& arg) {
  return eqlog::parse_formula(load_text(arg));
}

eqlog::Program load_program(const std::string& arg) {
  return eqlog::parse_program(load_text(arg));
}

std::size_t max_atoms_from_env() {
  const char* env = std::getenv("EQLOG_MAX_ATOMS");
  if (env == nullptr || *env == '\0') {
    return eqlog::Limits{}.max_atoms;
  }
  try {
    const long long value = std::stoll(env);
    if (value < 0) {
      throw std::invalid_argument("negative");
    }
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw io_error(std::string("invalid EQLOG_MAX_ATOMS value '") + env + "'");
  }
}

struct Opts {
  std::vector<std::string> formulas;
  std::string program;
  std::string query;
  std::string premise;
  std::string conclusion;
  std::string interpolant;
  std::string models_json;
  std::vector<std::string> vocab;
  std::vector<std::string> onto;
  std::vector<std::string> forget;
  std::string mode;
  std::size_t max_atoms = 16;
  bool simplify = false;
};

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

eqlog::Theory gather_theory(const Opts& o) {
  eqlog::Theory t;
  for (const auto& f : o.formulas) {
    t.push_back(load_formula(f));
  }
  if (!o.program.empty()) {
    for (auto& f : eqlog::program_to_theory(load_program(o.program))) {
      t.push_back(std::move(f));
    }
  }
  return t;
}

eqlog::Vocabulary forced_vocab(const Opts& o) {
  return eqlog::Vocabulary(o.vocab);
}

int run_models(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::Theory t = gather_theory(o);
  const eqlog::Vocabulary v = vocabulary_of(t).unioned(forced_vocab(o));
  std::cout << eqlog::to_json(eqlog::models_of(t, v, lim)) << "\n";
  return exit_true;
}

int run_eqmodels(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::Theory t = gather_theory(o);
  const eqlog::Vocabulary v = vocabulary_of(t).unioned(forced_vocab(o));
  std::cout << eqlog::to_json(eqlog::equilibrium_models(t, v, lim)) << "\n";
  return exit_true;
}

int run_entails(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::Theory t = gather_theory(o);
  const eqlog::FormulaPtr q = load_formula(o.query);
  const auto mode = eqlog::entailment_mode_from_string(
      o.mode.empty() ? "cw" : o.mode);
  const eqlog::EntailmentResult res =
      eqlog::entails_ex(t, q, *mode, forced_vocab(o), lim);
  ordered_json j;
  j["entails"] = res.holds;
  j["mode"] = eqlog::to_string(res.mode);
  j["fallback"] = res.used_fallback;
  emit(j);
  return res.holds ? exit_true : exit_false;
}

int run_interpolate(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::FormulaPtr a = load_formula(o.premise);
  const eqlog::FormulaPtr b = load_formula(o.conclusion);
  const std::string mode = o.mode.empty() ? "cw" : o.mode;

  eqlog::InterpolationResult r;
  if (mode == "base") {
    r.interpolant = eqlog::ht_interpolant(a, b, lim);
    r.mode = eqlog::EntailmentMode::base;
    r.shared_vocab = vocabulary_of(*a).intersected(vocabulary_of(*b));
    r.fresh_query_atoms = vocabulary_of(*b).minus(vocabulary_of(*a)).atoms();
  } else if (mode == "cw") {
    r = vocabulary_of(*a).includes(vocabulary_of(*b))
            ? eqlog::interpolant_cw_subvocab(a, b, lim)
            : eqlog::interpolant_cw(a, b, lim);
  } else {
    r = eqlog::interpolant_ow(a, b, lim);
  }
  if (o.simplify) {
    r.interpolant = eqlog::dedupe_disjuncts(r.interpolant);
  }
  const eqlog::VerifyReport verified = eqlog::verify_interpolant(a, b, r, lim);
  if (!verified.ok) {
    throw eqlog::internal_error("interpolant failed re-verification: " +
                                verified.reason);
  }
  ordered_json j;
  j["interpolant"] = render_formula(r.interpolant);
  j["mode"] = eqlog::to_string(r.mode);
  j["verified"] = verified.ok;
  emit(j);
  return exit_true;
}

int run_define(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::Vocabulary v = forced_vocab(o);
  ordered_json parsed;
  try {
    parsed = ordered_json::parse(load_text(o.models_json));
  } catch (const nlohmann::json::exception& e) {
    throw io_error(std::string("invalid model JSON: ") + e.what());
  }
  if (!parsed.is_array()) {
    throw io_error("invalid model JSON: expected an array of objects");
  }
  std::vector<eqlog::Interpretation> members;
  for (const auto& entry : parsed) {
    const std::vector<std::string> here =
        entry.value("here", std::vector<std::string>{});
    const std::vector<std::string> there =
        entry.value("there", std::vector<std::string>{});
    members.push_back(eqlog::Interpretation::from_atoms(v, here, there));
  }
  eqlog::FormulaPtr g = eqlog::define_set(
      eqlog::ClosedModelSet(eqlog::ModelSet(v, std::move(members))));
  if (o.simplify) {
    g = eqlog::dedupe_disjuncts(g);
  }
  ordered_json j;
  j["formula"] = render_formula(g);
  emit(j);
  return exit_true;
}

int run_project(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::Theory t = gather_theory(o);
  eqlog::FormulaPtr g = eqlog::project(t, eqlog::Vocabulary(o.onto), lim);
  if (o.simplify) {
    g = eqlog::dedupe_disjuncts(g);
  }
  ordered_json j;
  j["formula"] = render_formula(g);
  emit(j);
  return exit_true;
}

int run_program2theory(const Opts& o) {
  const eqlog::Program p = load_program(o.program);
  ordered_json formulas = ordered_json::array();
  for (const auto& f : eqlog::program_to_theory(p)) {
    formulas.push_back(render_formula(f));
  }
  ordered_json j;
  j["formulas"] = std::move(formulas);
  emit(j);
  return exit_true;
}

int run_answersets(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::Program p = load_program(o.program);
  const eqlog::Vocabulary v = vocabulary_of(p).unioned(forced_vocab(o));
  ordered_json sets = ordered_json::array();
  for (const auto& as : eqlog::answer_sets(p, v, lim)) {
    sets.push_back(as);
  }
  ordered_json j;
  j["vocab"] = v.atoms();
  j["answer_sets"] = std::move(sets);
  emit(j);
  return exit_true;
}

int run_query(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::Program p = load_program(o.program);
  const eqlog::FormulaPtr q = load_formula(o.query);
  const std::string mode = o.mode.empty() ? "as" : o.mode;
  eqlog::EntailmentResult res;
  if (mode == "as") {
    res = eqlog::entails_as_ex(p, q, lim);
  } else {
    res = eqlog::entails_ex(eqlog::program_to_theory(p), q,
                            *eqlog::entailment_mode_from_string(mode),
                            forced_vocab(o), lim);
  }
  ordered_json j;
  j["entails"] = res.holds;
  j["mode"] = mode;
  j["fallback"] = res.used_fallback;
  emit(j);
  return res.holds ? exit_true : exit_false;
}

ordered_json forget_result_json(const eqlog::ForgetResult& r) {
  ordered_json rules = ordered_json::array();
  for (const auto& rule : r.program.rules) {
    rules.push_back(render_rule(rule));
  }
  ordered_json sets = ordered_json::array();
  for (const auto& s : r.minimal_sets) {
    sets.push_back(s);
  }
  ordered_json j;
  j["program"] = std::move(rules);
  j["minimal_sets"] = std::move(sets);
  j["forgotten"] = r.forgotten;
  j["retained_vocab"] = r.retained_vocab.atoms();
  return j;
}

int run_forget(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::Program p = load_program(o.program);
  emit(forget_result_json(eqlog::forget_set(p, o.forget, lim)));
  return exit_true;
}

int run_uniform(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::Program p = load_program(o.program);
  emit(forget_result_json(
      eqlog::uniform_interpolant_program(p, eqlog::Vocabulary(o.onto), lim)));
  return exit_true;
}

int run_check(const Opts& o) {
  const eqlog::Limits lim{o.max_atoms};
  const eqlog::FormulaPtr a = load_formula(o.premise);
  const eqlog::FormulaPtr b = load_formula(o.conclusion);
  eqlog::InterpolationResult r;
  r.interpolant = load_formula(o.interpolant);
  r.mode = *eqlog::entailment_mode_from_string(o.mode.empty() ? "cw" : o.mode);
  r.shared_vocab = vocabulary_of(*a).intersected(vocabulary_of(*b));
  r.fresh_query_atoms = vocabulary_of(*b).minus(vocabulary_of(*a)).atoms();
  const eqlog::VerifyReport v = eqlog::verify_interpolant(a, b, r, lim);
  ordered_json j;
  j["verified"] = v.ok;
  if (!v.ok) {
    j["reason"] = v.reason;
  }
  emit(j);
  return v.ok ? exit_true : exit_false;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t env_max_atoms = 16;
  try {
    env_max_atoms = max_atoms_from_env();
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }

  Opts o;
  o.max_atoms = env_max_atoms;

  CLI::App app{"equilibrium logic and answer-set reasoning toolkit"};
  app.set_version_flag("--version", "eqlog 0.1.0");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--max-atoms", o.max_atoms,
                    "enumeration cap (env EQLOG_MAX_ATOMS)");
  };
  auto add_vocab = [&](CLI::App* cmd) {
    cmd->add_option("--vocab", o.vocab, "extra atoms forced into the vocabulary")
        ->delimiter(',');
  };
  auto add_simplify = [&](CLI::App* cmd) {
    cmd->add_flag("--simplify", o.simplify,
                  "drop syntactically duplicate disjuncts from output");
  };
  const std::string input_help = "inline text, a file path, or '-' for stdin";

  CLI::App* models = app.add_subcommand("models", "HT models of a theory");
  models->add_option("-f,--formula", o.formulas, input_help);
  models->add_option("-p,--program", o.program, input_help);
  add_vocab(models);
  add_common(models);

  CLI::App* eqmodels =
      app.add_subcommand("eqmodels", "equilibrium models of a theory");
  eqmodels->add_option("-f,--formula", o.formulas, input_help);
  eqmodels->add_option("-p,--program", o.program, input_help);
  add_vocab(eqmodels);
  add_common(eqmodels);

  CLI::App* entails = app.add_subcommand("entails", "theory entailment");
  entails->add_option("-f,--formula", o.formulas, input_help);
  entails->add_option("-p,--program", o.program, input_help);
  entails->add_option("-q,--query", o.query, input_help)->required();
  entails->add_option("--mode", o.mode, "cw|ow|base (default cw)")
      ->check(CLI::IsMember({"cw", "ow", "base"}));
  add_vocab(entails);
  add_common(entails);

  CLI::App* interpolate =
      app.add_subcommand("interpolate", "construct and verify an interpolant");
  interpolate->add_option("-a,--premise", o.premise, input_help)->required();
  interpolate->add_option("-b,--conclusion", o.conclusion, input_help)
      ->required();
  interpolate->add_option("--mode", o.mode, "cw|ow|base (default cw)")
      ->check(CLI::IsMember({"cw", "ow", "base"}));
  add_simplify(interpolate);
  add_common(interpolate);

  CLI::App* define =
      app.add_subcommand("define", "formula defining a closed model set");
  define->add_option("--vocab", o.vocab, "vocabulary of the model set")
      ->delimiter(',')
      ->required();
  define
      ->add_option("-m,--models", o.models_json,
                   "JSON array of {\"here\":[],\"there\":[]} (" + input_help +
                       ")")
      ->required();
  add_simplify(define);
  add_common(define);

  CLI::App* project = app.add_subcommand(
      "project", "strongest consequence over a sub-vocabulary");
  project->add_option("-f,--formula", o.formulas, input_help);
  project->add_option("-p,--program", o.program, input_help);
  project->add_option("--onto", o.onto, "target atoms")
      ->delimiter(',')
      ->required();
  add_simplify(project);
  add_common(project);

  CLI::App* p2t = app.add_subcommand("program2theory",
                                     "translate program rules to formulas");
  p2t->add_option("-p,--program", o.program, input_help)->required();

  CLI::App* answersets =
      app.add_subcommand("answersets", "answer sets of a program");
  answersets->add_option("-p,--program", o.program, input_help)->required();
  add_vocab(answersets);
  add_common(answersets);

  CLI::App* query = app.add_subcommand("query", "program entailment");
  query->add_option("-p,--program", o.program, input_help)->required();
  query->add_option("-q,--query", o.query, input_help)->required();
  query->add_option("--mode", o.mode, "as|cw|ow|base (default as)")
      ->check(CLI::IsMember({"as", "cw", "ow", "base"}));
  add_vocab(query);
  add_common(query);

  CLI::App* forget =
      app.add_subcommand("forget", "forget atoms from a program");
  forget->add_option("-p,--program", o.program, input_help)->required();
  forget->add_option("-x,--atoms", o.forget, "atoms to forget")
      ->delimiter(',')
      ->required();
  add_common(forget);

  CLI::App* uniform = app.add_subcommand(
      "uniform", "uniform interpolant program for a query vocabulary");
  uniform->add_option("-p,--program", o.program, input_help)->required();
  uniform->add_option("--onto", o.onto, "query vocabulary")
      ->delimiter(',')
      ->required();
  add_common(uniform);

  CLI::App* check =
      app.add_subcommand("check", "re-verify a candidate interpolant");
  check->add_option("-a,--premise", o.premise, input_help)->required();
  check->add_option("-b,--conclusion", o.conclusion, input_help)->required();
  check->add_option("-i,--interpolant", o.interpolant, input_help)->required();
  check->add_option("--mode", o.mode, "cw|ow|base (default cw)")
      ->check(CLI::IsMember({"cw", "ow", "base"}));
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (app.got_subcommand(models)) return run_models(o);
    if (app.got_subcommand(eqmodels)) return run_eqmodels(o);
    if (app.got_subcommand(entails)) return run_entails(o);
    if (app.got_subcommand(interpolate)) return run_interpolate(o);
    if (app.got_subcommand(define)) return run_define(o);
    if (app.got_subcommand(project)) return run_project(o);
    if (app.got_subcommand(p2t)) return run_program2theory(o);
    if (app.got_subcommand(answersets)) return run_answersets(o);
    if (app.got_subcommand(query)) return run_query(o);
    if (app.got_subcommand(forget)) return run_forget(o);
    if (app.got_subcommand(uniform)) return run_uniform(o);
    if (app.got_subcommand(check)) return run_check(o);
    std::cerr << "error: no command\n";
    return exit_usage;
  } catch (const eqlog::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const eqlog::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const eqlog::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_precondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
