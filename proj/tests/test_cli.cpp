#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "ordcone/json_io.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ordcone::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

json vectors(std::vector<std::vector<std::string>> vs) { return json(vs); }

}  // namespace

TEST_CASE("analyze") {
  const auto o = run({"analyze", fixture("orthant3")});
  CHECK(o.code == 0);
  CHECK(o.report()["semisimple"] == true);
  CHECK(o.report()["radical_basis"] == json::array());

  const auto h = run({"analyze", fixture("halfplane")});
  CHECK(h.code == 2);
  CHECK(h.report()["semisimple"] == false);
  CHECK(h.report()["radical_basis"] == vectors({{"1", "0"}}));

  const auto text = run({"analyze", fixture("orthant2"), "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("semisimple: true") != std::string::npos);
}

TEST_CASE("input errors exit with 1") {
  const auto bad = run({"analyze", fixture("malformed")});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("line 2, column 1") != std::string::npos);

  CHECK(run({"analyze", fixture("does_not_exist")}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"norm", "--cone", fixture("orthant2"), "--point", "1,2,3"}).code == 1);
  CHECK(run({"soc", "--ray", "0,0,1"}).code == 1);
  CHECK(run({"soc", "--ray", "1,0,1", "--format", "yaml"}).code == 1);
}

TEST_CASE("semantic errors carry a location") {
  try {
    ordcone::parse_cone_spec(R"({"dim": 2, "generators": [["1", "0"], ["0", "x"]]})");
    FAIL("expected an error");
  } catch (const ordcone::InputError& e) {
    CHECK(std::string(e.what()).find("/generators/1/1") != std::string::npos);
  }
  CHECK_THROWS_AS(ordcone::parse_cone_spec(R"({"dim": 2, "generators": [[1.5, 0]]})"), ordcone::InputError);
  CHECK_THROWS_AS(ordcone::parse_cone_spec(R"({"dim": 2})"), ordcone::InputError);
  // representations disagree
  CHECK_THROWS_AS(ordcone::parse_cone_spec(R"({"dim": 2, "generators": [[1, 0]], "halfspaces": [[1, 0]]})"),
                  ordcone::InputError);
}

TEST_CASE("dual") {
  const auto d = run({"dual", fixture("wedge")});
  CHECK(d.code == 0);
  CHECK(d.report()["dual"]["generators"] == vectors({{"1", "-1"}, {"0", "1"}}));
}

TEST_CASE("represent") {
  const auto o = run({"represent", fixture("orthant3")});
  CHECK(o.code == 0);
  CHECK(o.report()["representation"]["rows"] == vectors({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}));
  CHECK(o.report()["verdict"]["injective"] == true);

  const auto h = run({"represent", fixture("halfplane"), "--mode", "positive"});
  CHECK(h.code == 2);
  CHECK(h.report()["feasible"] == false);
  CHECK(h.report()["representation"].is_null());
  CHECK(h.report()["certificate"] == vectors({{"1", "0"}}));

  const auto ice = run({"represent", fixture("ice_cream_closure"), "--mode", "bipositive"});
  CHECK(ice.code == 2);
  CHECK(ice.report()["representation"]["rows"] == vectors({{"-1", "0"}}));
  CHECK(ice.report()["verdict"]["bipositive"] == true);
  CHECK(ice.report()["certificate"] == vectors({{"0", "1"}}));

  const auto pyr = run({"represent", fixture("pyramid"), "--mode", "bipositive"});
  CHECK(pyr.code == 0);
  CHECK(pyr.report()["representation"]["rows"].size() == 4);
  CHECK(pyr.report()["verdict"]["injective"] == true);
}

TEST_CASE("norm") {
  const auto n = run({"norm", "--cone", fixture("orthant2"), "--norm", "ellinf", "--point", "-1,0"});
  CHECK(n.code == 0);
  CHECK(n.report()["value"] == "1");
  const auto h = run({"norm", "--cone", fixture("halfplane"), "--norm", "ell1", "--point", "3,-1/2"});
  CHECK(h.report()["value"] == "1/2");
  CHECK(h.report()["definite"] == false);
}

TEST_CASE("quotient") {
  const auto e1 = run({"quotient", "--cone", fixture("orthant2"), "--kernel", "1,0"});
  CHECK(e1.code == 0);
  CHECK(e1.report()["pushforward"]["generators"] == vectors({{"1"}}));

  const auto diag = run({"quotient", "--cone", fixture("orthant2"), "--kernel", "1,1"});
  CHECK(diag.code == 2);
  CHECK(diag.report()["proper"] == false);
  CHECK_FALSE(diag.report()["missing_direction"].is_null());

  CHECK(run({"quotient", "--cone", fixture("orthant3"), "--kernel", "0,0,1"}).code == 0);
  CHECK(run({"quotient", "--cone", fixture("orthant2"), "--kernel", "1,0;0,1"}).code == 1);
}

TEST_CASE("soc") {
  const auto s = run({"soc", "--ray", "1,0,1"});
  CHECK(s.code == 2);
  const json r = s.report();
  CHECK(r["proper"] == true);
  CHECK(r["closed"] == false);
  CHECK(r["semisimple"] == false);
  CHECK(r["perp_positive_dim"] == 1);
  CHECK(r["witness_membership"]["member"] == false);
  CHECK(r["interior_membership"]["member"] == true);

  const auto q = run({"soc", "--ray", "3,4,5", "--point", "0,0"});
  CHECK(q.report()["query"]["member"] == true);

  const auto interior = run({"soc", "--ray", "0,0,1", "--allow-interior"});
  CHECK(interior.code == 2);
  CHECK(interior.report()["proper"] == false);
}

TEST_CASE("lab") {
  const auto d = run({"lab", "density", "--g", "0,-1", "--a", "1", "--b", "2", "--eps", "1"});
  CHECK(d.code == 0);
  CHECK(d.report()["n"] == 2);
  CHECK(d.report()["p"] == json({"1", "0", "1"}));
  CHECK(d.report()["coefficient_distance"] == "1");
  CHECK(run({"lab", "density", "--a", "0"}).code == 1);

  const auto c = run({"lab", "completion", "--n-max", "4", "--grid", "1001"});
  CHECK(c.code == 0);
  CHECK(c.report()["approximate"] == true);
  CHECK(c.report()["pairs"].size() == 6);

  const auto e = run({"lab", "envelope", "--window", "5"});
  CHECK(e.code == 0);
  CHECK(e.report()["certified"] == true);
  CHECK(e.report()["envelope"]["breakpoints"] == json({"0", "1", "3/2", "2", "8/3", "3", "15/4", "4", "24/5", "5"}));
  CHECK(e.report()["rho_envelope"] == "5");
}

TEST_CASE("reports are deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"analyze", fixture("pyramid")}, {"soc", "--ray", "3,4,5"}, {"lab", "envelope"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.out.find("timing") == std::string::npos);
  }
  CHECK(run({"--timing", "analyze", fixture("orthant2")}).report().contains("timing_ms"));
}

TEST_CASE("cone files round-trip through the canonical form") {
  for (const char* name : {"orthant2", "orthant3", "halfplane", "wedge", "ice_cream_closure", "pyramid"}) {
    const auto spec = ordcone::parse_cone_spec(ordcone::read_file(fixture(name)));
    const std::string once = ordcone::serialize(spec);
    const auto again = ordcone::parse_cone_spec(once);
    CHECK(again.cone == spec.cone);
    CHECK(again.name == spec.name);
    CHECK(ordcone::serialize(again) == once);
  }
}

TEST_CASE("representation files") {
  const auto r = ordcone::representation_from_json(json::parse(R"({"domain_dim": 2, "rows": [["1", "0"], [0, 1]]})"));
  CHECK(r.omega_labels() == std::vector<std::string>{"w0", "w1"});
  CHECK(ordcone::representation_from_json(ordcone::to_json(r)) == r);
  CHECK_THROWS_AS(ordcone::representation_from_json(json::parse(R"({"domain_dim": 2, "rows": [["1"]]})")),
                  ordcone::InputError);
  CHECK_THROWS_AS(
      ordcone::representation_from_json(json::parse(R"({"domain_dim": 1, "rows": [[1]], "labels": ["a", "b"]})")),
      ordcone::InputError);
}
