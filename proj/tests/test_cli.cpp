#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "liesalg/cli_dispatch.hpp"
#include "liesalg/constructions.hpp"

using namespace liesalg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("liesalg_test_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string write(const std::string& name, const std::string& content) const {
    fs::path f = path / name;
    std::ofstream out(f);
    out << content;
    return f.string();
  }
  std::string write(const std::string& name, const Json& j) const {
    return write(name, dump_json(j));
  }
};

}  // namespace

TEST_CASE("construct vn through the CLI") {
  CliResult r = run_cli({"construct", "vn", "--n", "4"});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["dim"] == 4);
  CHECK(j["schema_version"] == 1);
  CHECK(j.contains("phi"));
  CHECK(j["phi"]["entries"][0][3] == "1");
  CHECK(j["provenance"]["n"] == 4);
}

TEST_CASE("jacobi subcommand") {
  TempDir tmp;
  SUBCASE("valid table passes") {
    std::string f = tmp.write("sl2.json", algebra_to_json(build_sl2().alg));
    CliResult r = run_cli({"jacobi", "--input", f});
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.output)["pass"] == true);
  }
  SUBCASE("broken table exits 1 with the failing triple") {
    Json bad{{"field", "Q"},
             {"dim", 3},
             {"brackets", Json{{"0,1", Json{{"2", "1"}}}, {"0,2", Json{{"0", "1"}}}}}};
    std::string f = tmp.write("bad.json", bad);
    CliResult r = run_cli({"jacobi", "--input", f});
    CHECK(r.exit_code == 1);
    Json j = Json::parse(r.output);
    CHECK(j["pass"] == false);
    CHECK(j["triple"] == Json::array({0, 1, 2}));
  }
  SUBCASE("malformed JSON exits 2") {
    std::string f = tmp.write("broken.json", std::string("{ not json"));
    CliResult r = run_cli({"jacobi", "--input", f});
    CHECK(r.exit_code == 2);
    CHECK(Json::parse(r.output)["error"]["kind"] == "schema");
  }
  SUBCASE("schema violations report the offending path") {
    Json bad{{"field", "Q"}, {"dim", 2}, {"brackets", Json{{"0,1", Json{{"7", "1"}}}}}};
    std::string f = tmp.write("oob.json", bad);
    CliResult r = run_cli({"jacobi", "--input", f});
    CHECK(r.exit_code == 2);
    Json j = Json::parse(r.output);
    CHECK(j["error"]["kind"] == "schema");
    CHECK(std::string(j["error"]["path"]).find("brackets") != std::string::npos);
  }
}

TEST_CASE("decide haagerup through the CLI") {
  TempDir tmp;
  TaggedAlgebra g = semidirect(build_sl2().alg, LieAlgebra::abelian(2), build_vn(2).rep.actions);
  std::string f = tmp.write("sl2_v2.json", tagged_to_json(g));
  CliResult r = run_cli({"decide", "haagerup", "--input", f});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["answer"] == "no");
  CHECK(j["reason"] == "not M-decomposed");
  CHECK(!j["witness"].is_null());
  SUBCASE("same input through decide discrete-haagerup") {
    CliResult r2 = run_cli({"decide", "discrete-haagerup", "--input", f});
    CHECK(Json::parse(r2.output)["answer"] == "no");
  }
  SUBCASE("byte-identical output across runs") {
    CliResult again = run_cli({"decide", "haagerup", "--input", f});
    CHECK(again.output == r.output);
  }
}

TEST_CASE("invariant-forms and minimal-check subcommands") {
  TempDir tmp;
  CliResult vn = run_cli({"construct", "vn", "--n", "4"});
  std::string f = tmp.write("v4.json", vn.output);
  CliResult forms = run_cli({"invariant-forms", "--input", f, "--class", "alternating"});
  REQUIRE(forms.exit_code == 0);
  CHECK(Json::parse(forms.output)["dim"] == 1);

  CliResult h5 = run_cli({"construct", "heisenberg", "--dim", "5"});
  std::string hf = tmp.write("h5.json", h5.output);
  CliResult mc = run_cli({"minimal-check", "--input", hf});
  REQUIRE(mc.exit_code == 0);
  CHECK(Json::parse(mc.output)["verdict"] == "minimal");

  CliResult canon = run_cli({"canonicalize", "--input", hf});
  REQUIRE(canon.exit_code == 0);
  Json cj = Json::parse(canon.output);
  CHECK(cj["presentation"]["module"]["dim"] == 4);
  CHECK(cj["presentation"]["Z"]["dim"] == 0);
}

TEST_CASE("iso-test subcommand") {
  TempDir tmp;
  Representation v = direct_sum(build_vn(2).rep, build_vn(4).rep);
  HModulePresentation p = h_of_module(v);
  Matrix l1(1, 2), l2(1, 2);
  l1.at(0, 0) = Scalar(1);
  l1.at(0, 1) = Scalar(1);
  l2.at(0, 0) = Scalar(1);
  l2.at(0, 1) = Scalar(2);
  std::string left =
      tmp.write("p.json", presentation_to_json(with_center_killed(p, Subspace::from_rows(l1))));
  std::string right =
      tmp.write("q.json", presentation_to_json(with_center_killed(p, Subspace::from_rows(l2))));
  CliResult r = run_cli({"iso-test", "--left", left, "--right", right});
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.output);
  CHECK(j["result"] == "isomorphic");
  CHECK(!j["certificate"].is_null());
}

TEST_CASE("corpus runner") {
  TempDir tmp;
  SUBCASE("empty corpus passes with a warning") {
    fs::create_directories(tmp.path / "cases");
    CliResult r = run_corpus(tmp.path.string());
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["total"] == 0);
    CHECK(j["warning"] == "empty corpus");
  }
  SUBCASE("passing and tampered cases") {
    fs::create_directories(tmp.path / "cases");
    fs::create_directories(tmp.path / "fixtures");
    tmp.write("fixtures/sl2.json", algebra_to_json(build_sl2().alg));
    Json good{{"name", "sl2_haagerup"},
              {"args", Json::array({"decide", "haagerup", "--input", "fixtures/sl2.json"})},
              {"expected_subset", Json{{"answer", "yes"}}}};
    tmp.write("cases/a_good.json", good);
    CliResult r = run_corpus(tmp.path.string());
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.output)["passed"] == 1);

    Json bad = good;
    bad["name"] = "tampered";
    bad["expected_subset"] = Json{{"answer", "no"}};
    tmp.write("cases/b_bad.json", bad);
    CliResult r2 = run_corpus(tmp.path.string());
    CHECK(r2.exit_code == 1);
    Json j2 = Json::parse(r2.output);
    CHECK(j2["failed"] == 1);
    bool named = false;
    for (const auto& c : j2["cases"])
      if (c["name"] == "tampered" && c["pass"] == false) named = true;
    CHECK(named);
  }
}

TEST_CASE("levi-verify and witness subcommands") {
  TempDir tmp;
  TaggedAlgebra g = semidirect(build_heisenberg(5));
  std::string f = tmp.write("sl2_h5.json", tagged_to_json(g));
  CliResult lv = run_cli({"levi-verify", "--input", f});
  REQUIRE(lv.exit_code == 0);
  Json j = Json::parse(lv.output);
  CHECK(j["factors"][0]["entry"] == "sl2(R)");
  CHECK(j["radical"]["dim"] == 5);

  CliResult w = run_cli({"witness", "--input", f});
  REQUIRE(w.exit_code == 0);
  CHECK(Json::parse(w.output)["witness"]["model"] == "sl2xh_5");

  SUBCASE("explicit --levi file overrides the embedded tag") {
    std::string bare = tmp.write("bare.json", algebra_to_json(g.alg));
    std::string levi = tmp.write("levi.json", subspace_to_json(*g.levi));
    CliResult r = run_cli({"decide", "haagerup", "--input", bare, "--levi", levi});
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.output)["answer"] == "no");
  }
  SUBCASE("missing Levi on a mixed algebra is a domain error") {
    std::string bare = tmp.write("bare2.json", algebra_to_json(g.alg));
    CliResult r = run_cli({"decide", "haagerup", "--input", bare});
    CHECK(r.exit_code == 1);
    CHECK(Json::parse(r.output)["error"]["kind"] == "domain");
  }
  SUBCASE("a Jacobi-violating table is a domain error for decide") {
    Json bad{{"field", "Q"},
             {"dim", 3},
             {"brackets", Json{{"0,1", Json{{"2", "1"}}}, {"0,2", Json{{"0", "1"}}}}}};
    std::string f2 = tmp.write("nonlie.json", bad);
    CliResult r = run_cli({"decide", "haagerup", "--input", f2});
    CHECK(r.exit_code == 1);
    CHECK(Json::parse(r.output)["error"]["kind"] == "domain");
  }
  SUBCASE("solvable input needs no Levi and is a yes on both questions") {
    std::string ab = tmp.write("abelian.json", algebra_to_json(LieAlgebra::abelian(3)));
    CHECK(Json::parse(run_cli({"decide", "haagerup", "--input", ab}).output)["answer"] == "yes");
    CHECK(Json::parse(run_cli({"decide", "discrete-haagerup", "--input", ab}).output)["answer"] ==
          "yes");
  }
}
