#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "catkit/json_io.hpp"

using namespace catkit;
namespace io = catkit::jsonio;

namespace {

std::string bin() {
  if (const char* p = std::getenv("CATKIT_BIN")) return p;
  return "./catkit";
}

int run(const std::string& args, const std::string& out_file = "/dev/null") {
  const std::string cmd = bin() + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A relabeling of the pointed-set theory at N=2 whose category laws hold but
// whose point-tupling bijection is broken.
algebra::LawTheory broken_tupling_theory() {
  algebra::TabMonad t = algebra::tabulate(algebra::pointed_presentation(), 2, 8);
  algebra::LawTheory l = algebra::monad_to_theory(t);
  const int r[3] = {0, 1, 1};
  auto c = std::make_shared<fincat::FinCategory>();
  c->name = "broken-tupling";
  c->n_obj = 3;
  c->hom.assign(3, std::vector<int>(3));
  c->id.resize(3);
  for (int a = 0; a < 3; ++a) {
    c->id[a] = l.cat->id[r[a]];
    for (int b = 0; b < 3; ++b) c->hom[a][b] = l.cat->hom[r[a]][r[b]];
  }
  c->comp.resize(3);
  for (int a = 0; a < 3; ++a) {
    c->comp[a].resize(3);
    for (int b = 0; b < 3; ++b) {
      c->comp[a][b].resize(3);
      for (int k = 0; k < 3; ++k) c->comp[a][b][k] = l.cat->comp[r[a]][r[b]][r[k]];
    }
  }
  algebra::LawTheory bad;
  bad.N = 2;
  bad.name = "broken-tupling";
  bad.base = l.base;
  bad.trunc = l.trunc;
  bad.cat = c;
  bad.J.src = bad.trunc;
  bad.J.dst = c;
  bad.J.name = "J";
  bad.J.obj_map = {0, 1, 2};
  bad.J.mor_map.resize(3);
  for (int n = 0; n < 3; ++n) {
    bad.J.mor_map[n].resize(3);
    for (int m = 0; m < 3; ++m) {
      bad.J.mor_map[n][m].resize(bad.trunc->hom[n][m]);
      for (int u = 0; u < bad.trunc->hom[n][m]; ++u) {
        std::vector<int> uv = finset::tuple_decode(u, n, m);
        std::vector<int> w(r[m]);
        for (int i = 0; i < r[m]; ++i) w[i] = std::min(uv[i], r[n] - 1);
        long long code = finset::tuple_code(w, r[n]);
        bad.J.mor_map[n][m][u] = l.J.mor_map[r[n]][r[m]][code];
      }
    }
  }
  return bad;
}

const std::string FIX = "../fixtures/";

}  // namespace

TEST_CASE("tabulate: pointed sets at N=3") {
  const int rc = run("tabulate -i " + FIX + "pointed.json --max-arity 3 -o /tmp/cli_pointed.json",
                     "/tmp/cli_out.txt");
  CHECK(rc == 0);
  CHECK(slurp("/tmp/cli_out.txt").find("sizes 1 2 3 4") != std::string::npos);
  const algebra::TabMonad t = io::tabmonad_from_json(io::load_file("/tmp/cli_pointed.json"));
  CHECK(t.tsize == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("tabulate: empty signature at N=2") {
  const int rc = run("tabulate -i " + FIX + "empty.json --max-arity 2", "/tmp/cli_out.txt");
  CHECK(rc == 0);
  CHECK(slurp("/tmp/cli_out.txt").find("sizes 0 1 2") != std::string::npos);
}

TEST_CASE("tabulate: monoid is rejected with exit 3") {
  const int rc = run("tabulate -i " + FIX + "monoid.json --max-arity 2 --term-depth 6",
                     "/tmp/cli_out.txt");
  CHECK(rc == 3);
  CHECK(slurp("/tmp/cli_out.txt").find("not locally finite within bounds") != std::string::npos);
}

TEST_CASE("tabulate: malformed input gives exit 2") {
  {
    std::ofstream bad("/tmp/cli_bad.json");
    bad << "{ this is not json";
  }
  CHECK(run("tabulate -i /tmp/cli_bad.json") == 2);
  CHECK(run("tabulate -i /tmp/does_not_exist.json") == 2);
  // Wrong kind: a lattice where a presentation is expected.
  CHECK(run("tabulate -i " + FIX + "companion_top.json") == 2);
}

TEST_CASE("tabulate output is byte-identical across runs") {
  REQUIRE(run("tabulate -i " + FIX + "semilattice.json --max-arity 2 -o /tmp/cli_a.json") == 0);
  REQUIRE(run("tabulate -i " + FIX + "semilattice.json --max-arity 2 -o /tmp/cli_b.json") == 0);
  CHECK(slurp("/tmp/cli_a.json") == slurp("/tmp/cli_b.json"));
  CHECK_FALSE(slurp("/tmp/cli_a.json").empty());
}

TEST_CASE("roundtrip: tabulated monad file passes") {
  REQUIRE(run("tabulate -i " + FIX + "pointed.json --max-arity 2 -o /tmp/cli_rt.json") == 0);
  CHECK(run("roundtrip -i /tmp/cli_rt.json") == 0);
}

TEST_CASE("roundtrip: exhaustive enumeration over chain2") {
  const int rc = run("roundtrip --exhaustive-base chain2", "/tmp/cli_out.txt");
  CHECK(rc == 0);
  const std::string out = slurp("/tmp/cli_out.txt");
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(out.find("PASS monad -> theory -> monad isomorphism") != std::string::npos);
}

TEST_CASE("roundtrip: corrupted theory fails with exit 1 naming the invariant") {
  io::save_file("/tmp/cli_broken.json", io::theory_to_json(broken_tupling_theory()));
  const int rc = run("roundtrip -i /tmp/cli_broken.json", "/tmp/cli_out.txt");
  CHECK(rc == 1);
  CHECK(slurp("/tmp/cli_out.txt").find("tupling") != std::string::npos);
}

TEST_CASE("check: gamma-int suite on the parfl fixture") {
  CHECK(run("check -i " + FIX + "parfl_chain2.json --suite gamma-int --extent-family chain2") ==
        0);
}

TEST_CASE("check: duality suite on the companion fixture") {
  CHECK(run("check -i " + FIX + "companion_top.json --suite duality") == 0);
}

TEST_CASE("check: triangle suite on the semilattice presentation") {
  CHECK(run("check -i " + FIX + "semilattice.json --suite triangle --max-arity 2 --carrier 2") ==
        0);
}

TEST_CASE("check: unknown suite is malformed input") {
  CHECK(run("check -i " + FIX + "semilattice.json --suite nonsense") == 2);
}

TEST_CASE("environment cap forces a resource error") {
  const std::string cmd = "env CATKIT_MAX_CANDIDATES=1 " + bin() + " check -i " + FIX +
                          "semilattice.json --suite triangle --max-arity 2 --carrier 2 "
                          "> /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  // With a one-candidate cap the model enumeration cannot complete.
  CHECK(WEXITSTATUS(status) == 3);
}
