#include <doctest.h>

#include "agroup/error.hpp"
#include "commands.hpp"
#include "group_expr.hpp"

using namespace agroup;
using namespace agroup::cli;

namespace {

CommandOptions json_options() {
  CommandOptions o;
  o.json = true;
  return o;
}

}  // namespace

TEST_CASE("group expressions") {
  CHECK(parse_group("cyclic(6)").order() == 6);
  CHECK(parse_group(" direct( cyclic(2) , cyclic(3) ) ").order() == 6);
  CHECK(parse_group("field(2,4)").order() == 16);
  CHECK(parse_group("scalar(2,4,15)").order() == 240);
  CHECK(parse_group("metacyclic(3,4,2)").order() == 12);
  CHECK(parse_group("component(5,2,2)").order() == 50);
  CHECK(parse_group("pair(5,2,2,4)").order() == 4000);
  CHECK(parse_group("5,2,3,2,4").order() == 12000);
  for (const char* bad : {"", "cyclic", "cyclic(6", "cyclic(6))", "torus(3)", "direct(cyclic(2))",
                          "cyclic(x)"}) {
    CAPTURE(bad);
    try {
      parse_group(bad);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  CHECK(grammar_help().find("metacyclic") != std::string::npos);
}

TEST_CASE("verify") {
  const CommandResult a = run_verify("5,2,3,2,4", json_options());
  CHECK(a.exit_code == kExitOk);
  const Json ja = Json::parse(a.output);
  CHECK(ja.at("order") == 12000);
  CHECK(ja.at("a_prime").at("is_a_prime") == false);

  const CommandResult b = run_verify("13,3,2,1,3", json_options());
  CHECK(b.exit_code == kExitOk);
  const Json jb = Json::parse(b.output);
  CHECK(jb.at("order") == 27378);
  CHECK(jb.at("factorizations").at("centralizer_cr").at("order") == 78);

  const CommandResult bad = run_verify("5,2,3,1,4", json_options());
  CHECK(bad.exit_code == kExitInvalidInput);
  CHECK(bad.error.find("does not divide") != std::string::npos);
  CHECK(run_verify("5,2,3", json_options()).exit_code == kExitInvalidInput);

  CommandOptions capped = json_options();
  capped.limits.element_cap = 5000;
  CHECK(run_verify("5,2,3,2,4", capped).exit_code == kExitResourceCap);

  const CommandResult text = run_verify("5,2,3,2,4", {});
  CHECK(text.exit_code == kExitOk);
  CHECK(text.output.find("order: 12000") != std::string::npos);
  CHECK(text.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify JSON is schema-stable and round-trips") {
  const CommandResult r = run_verify("5,2,3,2,4", json_options());
  const Json j = Json::parse(r.output);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"params", "order", "structure", "sylow", "factorizations",
                                         "a_prime", "steinitz"});
  CHECK(j.dump(2) + "\n" == r.output);
  CHECK(verify_exit_code(j) == r.exit_code);
  CHECK(render_verify_text(j) == run_verify("5,2,3,2,4", {}).output);
  CHECK(r.output.find('\r') == std::string::npos);
}

TEST_CASE("exit code is a function of the report") {
  const Json base = verify_report({5, 2, 3, 2, 4});
  CHECK(verify_exit_code(base) == kExitOk);
  auto flipped = [&](auto&& edit) {
    Json j = base;
    edit(j);
    return verify_exit_code(j);
  };
  CHECK(flipped([](Json& j) { j["structure"]["is_a_group"] = false; }) == kExitCheckFailed);
  CHECK(flipped([](Json& j) { j["structure"]["derived_length"] = 3; }) == kExitCheckFailed);
  CHECK(flipped([](Json& j) { j["sylow"][0]["normal"] = true; }) == kExitCheckFailed);
  CHECK(flipped([](Json& j) { j["factorizations"]["direct_factor_pairs"].push_back(Json::array({2, 6000})); }) ==
        kExitCheckFailed);
  CHECK(flipped([](Json& j) { j["a_prime"]["is_a_prime"] = true; }) == kExitCheckFailed);
  CHECK(flipped([](Json& j) { j["factorizations"]["centralizer_cr"]["order"] = 60; }) == kExitCheckFailed);
  CHECK(flipped([](Json& j) { j["steinitz"]["all_checks_pass"] = false; }) == kExitCheckFailed);
}

TEST_CASE("verify is deterministic") {
  CHECK(run_verify("5,2,3,2,4", json_options()).output ==
        run_verify("5,2,3,2,4", json_options()).output);
}

TEST_CASE("search") {
  const CommandResult r = run_search(30000, json_options());
  CHECK(r.exit_code == kExitOk);
  const Json j = Json::parse(r.output);
  std::vector<std::uint64_t> orders;
  for (const auto& row : j.at("results")) orders.push_back(row.at("order"));
  CHECK(orders == std::vector<std::uint64_t>{12000, 12000, 18816, 18816, 27378, 27378});
  CHECK(Json::parse(run_search(100, json_options()).output).at("results").empty());
  CHECK(run_search(0, {}).exit_code == kExitInvalidInput);
  CHECK(run_search(100, {}).output.empty());
}

TEST_CASE("decompose") {
  const CommandResult pair = run_decompose("pair(5,2,2,4)", json_options());
  CHECK(pair.exit_code == kExitOk);
  const Json j = Json::parse(pair.output);
  CHECK(j.at("components")[0].at("order") == 50);
  CHECK(j.at("components")[1].at("order") == 80);

  const Json c6 = Json::parse(run_decompose("cyclic(6)", json_options()).output);
  CHECK(c6.at("components")[0].at("order") == 2);
  CHECK(c6.at("components")[1].at("order") == 3);

  const CommandResult three = run_decompose("5,2,3,2,4", {});
  CHECK(three.exit_code == kExitCheckFailed);
  CHECK(three.error.find("TooManyPrimes") != std::string::npos);
  CHECK(run_decompose("cyclic(", {}).exit_code == kExitInvalidInput);
  CHECK(run_decompose("component(5,3,1)", {}).exit_code == kExitInvalidInput);
}
