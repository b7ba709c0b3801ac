#include "cmprob/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "cmprob/quiver.hpp"
#include "cmprob/verify.hpp"

namespace cmprob {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int weight = -1;
  std::string shape;
  std::string oracle = "rank1";
  int dim = 2;
  std::string q = "symbolic";
  std::string format;
  std::string out;
  std::string in;
  std::string m, l;
  std::string axis = "both";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  bool unsafe = false;
};

// Options each command accepts besides --format and --out.
const std::map<std::string, std::set<std::string>>& allowed_options() {
  static const std::map<std::string, std::set<std::string>> table = [] {
    std::set<std::string> verify{"--weight", "--oracle", "--dim", "--q",
                                 "--unsafe-bounds"};
    std::set<std::string> functoriality = verify;
    functoriality.insert({"--samples", "--seed"});
    return std::map<std::string, std::set<std::string>>{
        {"enumerate", {"--weight", "--shape"}},
        {"poset", {"--weight", "--axis"}},
        {"sup", {"--m", "--l"}},
        {"verify relations", verify},
        {"verify path-independence", verify},
        {"verify coherence", verify},
        {"verify bialgebra", verify},
        {"verify functoriality", functoriality},
        {"rep check", {"--in"}},
        {"rep from-phi-psi", {"--in"}},
        {"rep to-phi-psi", {"--in"}},
    };
  }();
  return table;
}

const std::map<std::string, std::set<std::string>>& allowed_formats() {
  static const std::map<std::string, std::set<std::string>> table{
      {"enumerate", {"json", "text"}},
      {"poset", {"dot", "json", "text"}},
      {"sup", {"json", "text"}},
      {"verify", {"json", "text"}},
      {"rep check", {"json", "text"}},
      {"rep from-phi-psi", {"json"}},
      {"rep to-phi-psi", {"json"}},
  };
  return table;
}

// Default caps on --weight, chosen so that a full run stays under a minute
// on one core.
int weight_cap(const std::string& suite, const std::string& oracle, int dim) {
  if (oracle == "rank1")
    return (suite == "relations" || suite == "path-independence") ? 5 : 6;
  return dim <= 3 ? 4 : 3;
}

std::optional<Rational> parse_q(const std::string& s) {
  if (s == "symbolic") return std::nullopt;
  try {
    return parse_rational(s);
  } catch (const Error&) {
    throw UsageError("--q must be 'symbolic' or a rational number, got '" + s + "'");
  }
}

std::shared_ptr<const BialgebraOracle> make_oracle(const Options& o, bool dim_given) {
  std::optional<Rational> q = parse_q(o.q);
  try {
    if (o.oracle == "rank1") {
      if (dim_given && o.dim != 1) throw UsageError("--dim applies to the shuffle oracle only");
      return rank1_oracle(q);
    }
    if (o.dim < 1) throw UsageError("--dim must be positive");
    return shuffle_oracle(o.dim, q);
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
}

std::pair<std::size_t, std::size_t> parse_shape(const std::string& s) {
  std::size_t r = 0, c = 0;
  char x = 0;
  std::istringstream is(s);
  if (!(is >> r >> x >> c) || x != 'x' || !is.eof() || r == 0 || c == 0)
    throw UsageError("--shape must look like RxC, got '" + s + "'");
  return {r, c};
}

ContingencyMatrix parse_matrix_arg(const std::string& name, const std::string& s) {
  try {
    return matrix_from_json(Json::parse(s));
  } catch (const Json::exception&) {
    throw UsageError(name + " is not JSON: " + s);
  } catch (const Error& e) {
    throw UsageError(name + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw UsageError(path + " is not valid JSON: " + e.what());
  }
}

std::string text_of(const ContingencyMatrix& m) { return m.key(); }

std::string poset_json(int n, const std::vector<Axis>& axes) {
  Json objects = Json::array();
  auto all = enumerate(n);
  for (const auto& m : all) objects.push_back(m.key());
  Json j{{"weight", n}, {"objects", objects}};
  for (Axis axis : axes) {
    Json edges = Json::array();
    for (const auto& m : all)
      for (std::size_t k = 1; k < m.lines(axis); ++k)
        edges.push_back(Json{{"from", m.key()},
                             {"to", contract(m, axis, k).key()},
                             {"k", k},
                             {"anodyne", is_anodyne_step(m, axis, k)}});
    j[axis == Axis::Horizontal ? "horizontal" : "vertical"] = edges;
  }
  return j.dump(2) + "\n";
}

std::string poset_text(int n, const std::vector<Axis>& axes) {
  std::ostringstream os;
  for (Axis axis : axes)
    for (const auto& m : enumerate(n))
      for (std::size_t k = 1; k < m.lines(axis); ++k)
        os << axis_name(axis) << " k=" << k << ' ' << m.key() << " -> "
           << contract(m, axis, k).key()
           << (is_anodyne_step(m, axis, k) ? " anodyne" : "") << '\n';
  return os.str();
}

Report single_failure(const std::string& suite, const std::string& instance,
                      const std::string& note) {
  Report r;
  r.add(CheckResult{suite, instance, false, nullptr, nullptr, note});
  return r;
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err)
      : o_(o), out_(out), err_(err) {}

  // Writes the main output to --out or standard output.
  void emit(const std::string& s) {
    if (o_.out.empty()) {
      out_ << s;
      return;
    }
    std::ofstream f(o_.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o_.out);
    f << s;
  }

  // JSON report to the destination, summary alongside; or the summary alone.
  int emit_report(const Report& r) {
    if (o_.format == "text") {
      emit(r.summary());
    } else {
      emit(r.to_json().dump(2) + "\n");
      (o_.out.empty() ? err_ : out_) << r.summary();
    }
    return r.ok() ? kExitOk : kExitFailure;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

int execute(const std::string& cmd, const Options& o, const std::set<std::string>& given,
            std::ostream& out, std::ostream& err) {
  Runner runner(o, out, err);

  if (cmd == "enumerate") {
    if (o.weight < 0) throw UsageError("enumerate needs --weight >= 0");
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    if (given.count("--shape")) shape = parse_shape(o.shape);
    auto all = enumerate(o.weight, shape);
    if (o.format == "text") {
      std::string s;
      for (const auto& m : all) s += text_of(m) + "\n";
      runner.emit(s);
    } else {
      Json j = Json::array();
      for (const auto& m : all) j.push_back(to_json(m));
      runner.emit(j.dump(2) + "\n");
    }
    return kExitOk;
  }

  if (cmd == "poset") {
    if (o.weight < 0) throw UsageError("poset needs --weight >= 0");
    std::vector<Axis> axes;
    if (o.axis == "horizontal" || o.axis == "both") axes.push_back(Axis::Horizontal);
    if (o.axis == "vertical" || o.axis == "both") axes.push_back(Axis::Vertical);
    if (o.format == "json") {
      runner.emit(poset_json(o.weight, axes));
    } else if (o.format == "text") {
      runner.emit(poset_text(o.weight, axes));
    } else {
      std::string s;
      for (Axis a : axes) s += poset_dot(o.weight, a);
      runner.emit(s);
    }
    return kExitOk;
  }

  if (cmd == "sup") {
    if (!given.count("--m") || !given.count("--l")) throw UsageError("sup needs --m and --l");
    ContingencyMatrix m = parse_matrix_arg("--m", o.m), l = parse_matrix_arg("--l", o.l);
    if (m.weight() != l.weight()) throw UsageError("--m and --l have different weights");
    auto n = meet(m, l);
    if (!n) {
      err << "error: " << m.key() << " and " << l.key() << " have no common contraction\n";
      return kExitFailure;
    }
    auto sup = sup_set(m, l);
    if (o.format == "text") {
      std::string s = "meet " + n->key() + "\n";
      for (const auto& x : sup) s += text_of(x) + "\n";
      runner.emit(s);
    } else {
      Json arr = Json::array();
      for (const auto& x : sup) arr.push_back(to_json(x));
      Json j{{"m", to_json(m)}, {"l", to_json(l)},
             {"meet", to_json(*n)}, {"sup", arr}};
      runner.emit(j.dump(2) + "\n");
    }
    return kExitOk;
  }

  if (cmd.rfind("verify ", 0) == 0) {
    std::string suite = cmd.substr(7);
    if (o.oracle != "rank1" && o.oracle != "shuffle")
      throw UsageError("--oracle must be rank1 or shuffle");
    if (o.weight < 1) throw UsageError("verify needs --weight >= 1");
    int cap = weight_cap(suite, o.oracle, o.dim);
    if (o.weight > cap && !o.unsafe)
      throw UsageError("--weight " + std::to_string(o.weight) + " exceeds the cap " +
                       std::to_string(cap) + " for this suite and oracle; pass --unsafe-bounds");
    Evaluator ev(make_oracle(o, given.count("--dim") > 0));
    Report r;
    if (suite == "relations") r = verify_relations(ev, o.weight);
    else if (suite == "path-independence") r = verify_path_independence_all(ev, o.weight);
    else if (suite == "coherence") r = verify_coherence(ev, o.weight);
    else if (suite == "bialgebra") r = verify_a_bialgebra(ev, o.weight);
    else r = verify_functoriality(ev, o.weight, o.samples, o.seed);
    return runner.emit_report(r);
  }

  // rep subcommands
  if (!given.count("--in")) throw UsageError(cmd + " needs --in");
  Json input = read_json_file(o.in);
  try {
    if (cmd == "rep check") {
      Representation rep = representation_from_json(input);
      Report r;
      try {
        r = check_representation(rep);
      } catch (const IncompleteData& e) {
        r = single_failure("rep-complete", "n=" + std::to_string(rep.n),
                           std::string("IncompleteData: ") + e.what());
      }
      return runner.emit_report(r);
    }
    if (cmd == "rep from-phi-psi") {
      PhiPsiDiagram d = phi_psi_from_json(input);
      try {
        runner.emit(to_json(from_phi_psi(d)).dump(2) + "\n");
        return kExitOk;
      } catch (const SingularT& e) {
        return runner.emit_report(
            single_failure("from-phi-psi", "T_Psi", std::string("SingularT: ") + e.what()));
      }
    }
    Representation rep = representation_from_json(input);
    try {
      runner.emit(to_json(to_phi_psi(rep)).dump(2) + "\n");
      return kExitOk;
    } catch (const CheckFailed& e) {
      return runner.emit_report(
          single_failure("to-phi-psi", "n=" + std::to_string(rep.n),
                         std::string("CheckFailed: ") + e.what()));
    }
  } catch (const ParseError& e) {
    throw UsageError(o.in + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Contingency matrices, their category and its evaluations", "cmprob"};
  app.fallthrough();
  app.require_subcommand(1);

  std::map<std::string, CLI::Option*> opts;
  opts["--weight"] = app.add_option("--weight", o.weight, "Total weight n");
  opts["--shape"] = app.add_option("--shape", o.shape, "Restrict to RxC matrices");
  opts["--oracle"] = app.add_option("--oracle", o.oracle, "rank1 or shuffle")
                         ->check(CLI::IsMember({"rank1", "shuffle"}));
  opts["--dim"] = app.add_option("--dim", o.dim, "Alphabet size of the shuffle oracle");
  opts["--q"] = app.add_option("--q", o.q, "'symbolic' or a rational value");
  opts["--format"] = app.add_option("--format", o.format, "json, dot or text")
                         ->check(CLI::IsMember({"json", "dot", "text"}));
  opts["--out"] = app.add_option("--out", o.out, "Output file");
  opts["--in"] = app.add_option("--in", o.in, "Input JSON file");
  opts["--m"] = app.add_option("--m", o.m, "Matrix M as nested JSON arrays");
  opts["--l"] = app.add_option("--l", o.l, "Matrix L as nested JSON arrays");
  opts["--axis"] = app.add_option("--axis", o.axis, "horizontal, vertical or both")
                       ->check(CLI::IsMember({"horizontal", "vertical", "both"}));
  opts["--samples"] = app.add_option("--samples", o.samples, "Random word pairs");
  opts["--seed"] = app.add_option("--seed", o.seed, "Random seed");
  opts["--unsafe-bounds"] = app.add_flag("--unsafe-bounds", o.unsafe, "Lift the weight caps");

  app.add_subcommand("enumerate", "List CM_n");
  app.add_subcommand("poset", "Hasse diagrams of both orders");
  app.add_subcommand("sup", "Meet and Sup of two matrices");
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  for (const char* s : {"relations", "path-independence", "coherence", "bialgebra",
                        "functoriality"})
    verify->add_subcommand(s);
  CLI::App* rep = app.add_subcommand("rep", "Representations of weight n");
  rep->require_subcommand(1);
  rep->add_subcommand("check", "Check the relations");
  rep->add_subcommand("from-phi-psi", "Representation of a (Phi, Psi) diagram");
  rep->add_subcommand("to-phi-psi", "(Phi, Psi) diagram of a weight-2 representation");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::string cmd;
  for (CLI::App* sub : app.get_subcommands()) {
    cmd = sub->get_name();
    for (CLI::App* leaf : sub->get_subcommands()) cmd += " " + leaf->get_name();
  }
  std::set<std::string> given;
  for (const auto& [name, opt] : opts)
    if (opt->count() > 0) given.insert(name);

  try {
    const auto& allowed = allowed_options().at(cmd);
    for (const auto& name : given)
      if (name != "--format" && name != "--out" && !allowed.count(name))
        throw UsageError(name + " is not valid for '" + cmd + "'");
    std::string family = cmd.rfind("verify ", 0) == 0 ? "verify" : cmd;
    const auto& formats = allowed_formats().at(family);
    if (o.format.empty()) o.format = family == "poset" ? "dot" : "json";
    if (!formats.count(o.format))
      throw UsageError("--format " + o.format + " is not valid for '" + cmd + "'");
    return execute(cmd, o, given, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << "Run with --help for usage.\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cmprob
