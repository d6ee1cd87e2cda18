#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mevfair/errors.hpp"
#include "mevfair/serialize.hpp"

using namespace mevfair;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("payoff and set round trip") {
  const auto f = random_payoff(4, 9);
  const auto back = payoff_from_json(Json::parse(dump(to_json(f))));
  CHECK(back.values() == f.values());

  const OrderingSet a(4, {3, 1, 17});
  CHECK(ordering_set_from_json(to_json(a)) == a);
  CHECK(to_json(a)["members"] == Json{1, 3, 17});
}

TEST_CASE("spectrum round trip is exact") {
  const auto s = transform(random_payoff(4, 2));
  const auto back = spectrum_from_json(Json::parse(dump(to_json(s))));
  REQUIRE(back.blocks.size() == s.blocks.size());
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    CHECK(back.blocks[i].shape == s.blocks[i].shape);
    CHECK(back.blocks[i].coefficients == s.blocks[i].coefficients);
  }
}

TEST_CASE("reader diagnostics") {
  CHECK_THROWS_AS(payoff_from_json(Json{{"n", 3}}), SpecError);
  CHECK_THROWS_AS(payoff_from_json(Json{{"n", 3}, {"values", {1, 2}}}), DimensionError);
  CHECK_THROWS_WITH_AS(vote_profile_from_json(Json::parse(R"({"n_tx":3,"validators":[[1,2,3],[1,1,2]]})")),
                       doctest::Contains("validators[1]"), SpecError);
  const auto v = vote_profile_from_json(Json::parse(R"({"n_tx":3,"validators":[[2,1,3]]})"));
  CHECK(v.validators[0].one_line() == std::vector<int>{2, 1, 3});

  const auto bad = temp_file("mevfair_bad.json", "{\n  \"n\": 3,\n  \"values\": [1, 2,,]\n}\n");
  CHECK_THROWS_WITH_AS(read_json_file(bad), doctest::Contains("mevfair_bad.json:3:"), SpecError);
  CHECK_THROWS_AS(read_file_bytes("/nonexistent/mevfair.json"), SpecError);
}

TEST_CASE("model readers") {
  const auto m = cfmm_from_json(Json::parse(R"({"deltas":[1,-2],"gamma":0.01})"));
  CHECK(m.deltas == std::vector<double>{1, -2});
  CHECK(m.gamma == 0.01);
  CHECK(m.p0 == 100.0);
  const auto terms = junta_terms_from_json(Json::parse(R"({"terms":[{"constraints":[[1,2],[2,1]],"coefficient":2}]})"));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].constraints == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
  CHECK(terms[0].coefficient == 2.0);
  CHECK_THROWS_AS(junta_terms_from_json(Json::parse(R"({"terms":[{"constraints":[[1]]}]})")), SpecError);
  CHECK_THROWS_AS(liquidation_from_json(Json::parse(R"({"c":1})")), SpecError);
}
