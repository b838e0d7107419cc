#include <doctest.h>

#include "support.hpp"
#include "vvjack/io.hpp"

using namespace vvjack;
using namespace testsupport;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/10") == q("0.1"));
  CHECK(parse_rational("-2/4") == q("-1/2"));
  CHECK(parse_rational("-1e-2") == q("-1/100"));
  CHECK(to_string(parse_rational("6/8")) == "3/4");
  CHECK(to_string(parse_rational("4")) == "4");
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("argument parsing") {
  CHECK(io::parse_partition("2,2,1").parts() == std::vector<int>{2, 2, 1});
  CHECK_THROWS_AS(io::parse_partition("1,2"), InvalidShape);
  CHECK_THROWS_AS(io::parse_partition(""), InvalidShape);
  CHECK(io::parse_composition("0, -1,3") == Composition{0, -1, 3});
  CHECK_THROWS_AS(io::parse_composition("0,x"), InvalidArgument);
  Representation rep(Partition({2, 2}));
  CHECK(io::parse_tableau(rep, "T1") == 1);
  CHECK(io::parse_tableau(rep, "0") == 0);
  CHECK(io::parse_tableau(rep, "0,-1,1,0") == 1);
  CHECK_THROWS_AS(io::parse_tableau(rep, "T2"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_tableau(rep, "0,0,0,0"), InvalidArgument);
}

TEST_CASE("reports") {
  auto c = ctx({2, 1}, "1/10");
  YangBaxterGraph g(c);
  std::vector<int> a{0, 1, 1};
  io::json r = io::nsjp_report(g, a, 0);
  CHECK(r["spectral_vector"] == io::json::array({"1", "21/10", "19/10"}));
  CHECK(r["tableau"]["name"] == "T0");
  CHECK(r["polynomial"]["terms"].size() == g.nsjp(a, 0).term_count());
  CHECK(r.dump() == io::nsjp_report(g, a, 0).dump());

  io::json n = io::norm_report(g, a, 1);
  CHECK(n["agree"] == true);

  io::json t = io::tableaux_report(Partition({2, 2}));
  CHECK(t["tableaux"].size() == 2);
  CHECK(t["tableaux"][1]["content"] == io::json::array({0, -1, 1, 0}));

  io::json cnt = io::count_report(Partition({3, 2}), 8, false, nullptr);
  CHECK(cnt["series"] == io::json::array({0, 0, 1, 2, 4, 7, 12, 18, 27}));

  io::json e = io::error(InadmissibleKappa("x"));
  CHECK(e["error"] == "inadmissible_kappa");
}
