#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmprob/cli.hpp"
#include "cmprob/quiver.hpp"

using namespace cmprob;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "cmprob_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& s) {
  std::ofstream f(p);
  f << s;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("enumerate") {
  Outcome o = call({"enumerate", "--weight", "2", "--format", "json"});
  CHECK(o.code == 0);
  Json j = Json::parse(o.out);
  REQUIRE(j.size() == 5);
  auto all = enumerate(2);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(matrix_from_json(j[i]) == all[i]);

  Outcome t = call({"enumerate", "--weight", "3", "--format", "text"});
  CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 33);
  Outcome s = call({"enumerate", "--weight", "3", "--shape", "2x2"});
  CHECK(Json::parse(s.out).size() == enumerate(3, std::make_pair(2u, 2u)).size());
}

TEST_CASE("poset and sup") {
  Outcome d = call({"poset", "--weight", "2"});
  CHECK(d.code == 0);
  CHECK(d.out == poset_dot(2, Axis::Horizontal) + poset_dot(2, Axis::Vertical));
  Outcome h = call({"poset", "--weight", "3", "--format", "dot", "--axis", "horizontal"});
  CHECK(h.out == poset_dot(3, Axis::Horizontal));

  Outcome t = call({"poset", "--weight", "3", "--format", "text"});
  std::size_t edges = 0;
  for (const auto& m : enumerate(3)) edges += m.rows() - 1 + m.cols() - 1;
  CHECK(std::count(t.out.begin(), t.out.end(), '\n') == static_cast<long>(edges));
  Json pj = Json::parse(call({"poset", "--weight", "2", "--format", "json"}).out);
  CHECK(pj["horizontal"].size() == 3);
  CHECK(pj["vertical"].size() == 3);

  Outcome s = call({"sup", "--m", "[[1],[1]]", "--l", "[[1,1]]"});
  CHECK(s.code == 0);
  Json j = Json::parse(s.out);
  CHECK(matrix_from_json(j["meet"]) == validate({{2}}));
  REQUIRE(j["sup"].size() == 2);
  auto sup = sup_set(validate({{1}, {1}}), validate({{1, 1}}));
  CHECK(matrix_from_json(j["sup"][0]) == sup[0]);
  CHECK(matrix_from_json(j["sup"][1]) == sup[1]);
  Outcome none = call({"sup", "--m", "[[1,1]]", "--l", "[[1],[1]]", "--format", "text"});
  CHECK(none.code == 1);
  CHECK(none.out.empty());
  CHECK(none.err.find("no common contraction") != std::string::npos);
}

TEST_CASE("verify agrees with the library") {
  Outcome o = call({"verify", "relations", "--weight", "4", "--oracle", "rank1", "--q",
                    "symbolic"});
  CHECK(o.code == 0);
  Report api = verify_relations(Evaluator(rank1_oracle()), 4);
  CHECK(o.out == api.to_json().dump(2) + "\n");
  CHECK(o.err == api.summary());
  CHECK(call({"verify", "relations", "--weight", "4"}).out == o.out);

  Outcome c = call({"verify", "coherence", "--weight", "3", "--oracle", "shuffle", "--dim",
                    "2", "--q", "2", "--format", "text"});
  CHECK(c.code == 0);
  CHECK(c.out == verify_coherence(Evaluator(shuffle_oracle(2, Rational(2))), 3).summary());

  Outcome b = call({"verify", "bialgebra", "--weight", "3", "--q", "-1/2"});
  CHECK(b.code == 0);
  CHECK(b.out ==
        verify_a_bialgebra(Evaluator(rank1_oracle(Rational(-1, 2))), 3).to_json().dump(2) +
            "\n");

  Outcome p = call({"verify", "path-independence", "--weight", "3", "--oracle", "shuffle"});
  CHECK(p.code == 0);
  Outcome f = call({"verify", "functoriality", "--weight", "3", "--samples", "20", "--seed",
                    "9", "--format", "text"});
  CHECK(f.code == 0);
  CHECK(f.out == verify_functoriality(Evaluator(rank1_oracle()), 3, 20, 9).summary());

  fs::path out = scratch("report.json");
  Outcome w = call({"verify", "coherence", "--weight", "2", "--out", out.string()});
  CHECK(w.code == 0);
  Report api2 = verify_coherence(Evaluator(rank1_oracle()), 2);
  CHECK(read_file(out) == api2.to_json().dump(2) + "\n");
  CHECK(w.out == api2.summary());
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"enumerate"}).code == 2);
  CHECK(call({"enumerate", "--weight", "2", "--format", "dot"}).code == 2);
  CHECK(call({"enumerate", "--weight", "2", "--oracle", "rank1"}).code == 2);
  CHECK(call({"enumerate", "--weight", "2", "--shape", "2by2"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"verify", "--weight", "2"}).code == 2);
  CHECK(call({"verify", "relations"}).code == 2);
  CHECK(call({"verify", "relations", "--weight", "2", "--oracle", "cubic"}).code == 2);
  CHECK(call({"verify", "relations", "--weight", "2", "--dim", "3"}).code == 2);
  CHECK(call({"verify", "relations", "--weight", "2", "--q", "1"}).code == 2);
  CHECK(call({"verify", "relations", "--weight", "2", "--q", "0"}).code == 2);
  CHECK(call({"verify", "relations", "--weight", "2", "--q", "x"}).code == 2);
  CHECK(call({"verify", "relations", "--weight", "2", "--samples", "3"}).code == 2);
  CHECK(call({"verify", "relations", "--weight", "2", "--in", "x.json"}).code == 2);
  CHECK(call({"sup", "--m", "[[1]]"}).code == 2);
  CHECK(call({"sup", "--m", "[[1]]", "--l", "[[0]]"}).code == 2);
  CHECK(call({"sup", "--m", "[[1]]", "--l", "[[1,1]]"}).code == 2);
  CHECK(call({"rep", "check"}).code == 2);
  CHECK(call({"rep", "check", "--in", scratch("missing.json").string()}).code == 2);

  Outcome cap = call({"verify", "relations", "--weight", "6"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("--unsafe-bounds") != std::string::npos);
  CHECK(call({"verify", "coherence", "--weight", "5", "--oracle", "shuffle"}).code == 2);

  Outcome help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("rep commands") {
  fs::path singular = scratch("singular.json");
  write_file(singular, R"({"phi":1,"psi":1,"a":[["1"]],"b":[["1"]]})");
  Outcome s = call({"rep", "from-phi-psi", "--in", singular.string()});
  CHECK(s.code == 1);
  CHECK(s.out.find("SingularT") != std::string::npos);
  CHECK(Json::parse(s.out)[0]["status"] == "fail");

  PhiPsiDiagram d{1, 2, QMatrix(2, 1), QMatrix(1, 2)};
  d.a(0, 0) = Rational(3);
  d.b(0, 1) = Rational(1, 2);
  fs::path diag = scratch("diag.json");
  write_file(diag, to_json(d).dump());
  fs::path rep = scratch("rep.json");
  Outcome f = call({"rep", "from-phi-psi", "--in", diag.string(), "--out", rep.string()});
  CHECK(f.code == 0);
  CHECK(representation_from_json(Json::parse(read_file(rep))) == from_phi_psi(d));

  Outcome c = call({"rep", "check", "--in", rep.string(), "--format", "text"});
  CHECK(c.code == 0);
  CHECK(c.out == check_representation(from_phi_psi(d)).summary());
  Outcome t = call({"rep", "to-phi-psi", "--in", rep.string()});
  CHECK(t.code == 0);
  CHECK(phi_psi_from_json(Json::parse(t.out)) == d);

  Representation ones;
  ones.n = 2;
  for (const auto& m : enumerate(2)) ones.spaces[m] = 1;
  for (const auto& g : generator_keys(2)) ones.generators[g] = QMatrix::identity(1);
  fs::path bad = scratch("ones.json");
  write_file(bad, to_json(ones).dump());
  CHECK(call({"rep", "check", "--in", bad.string()}).code == 1);
  Outcome tf = call({"rep", "to-phi-psi", "--in", bad.string()});
  CHECK(tf.code == 1);
  CHECK(tf.out.find("CheckFailed") != std::string::npos);

  Representation partial = ones;
  partial.generators.erase(partial.generators.begin());
  fs::path inc = scratch("partial.json");
  write_file(inc, to_json(partial).dump());
  Outcome ic = call({"rep", "check", "--in", inc.string()});
  CHECK(ic.code == 1);
  CHECK(ic.out.find("IncompleteData") != std::string::npos);

  fs::path junk = scratch("junk.json");
  write_file(junk, "{not json");
  CHECK(call({"rep", "check", "--in", junk.string()}).code == 2);
  write_file(junk, R"({"phi":1})");
  CHECK(call({"rep", "from-phi-psi", "--in", junk.string()}).code == 2);
}
