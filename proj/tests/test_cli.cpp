#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mzv/rational.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = mzv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream stream(text);
    for (std::string line; std::getline(stream, line);) out.push_back(line);
    return out;
}

void check_reduced(const std::string& text) {
    const mzv::BigRational value = mzv::parse_fraction(text);
    CHECK(mzv::to_fraction_string(value) == text);
    CHECK(text.find('/') != std::string::npos);
    CHECK(text.substr(text.find('/') + 1).front() != '-');
}

}  // namespace

TEST_CASE("range and schedule parsing") {
    CHECK(mzv::cli::parse_range("0..10").hi == 10);
    CHECK(mzv::cli::parse_range("4").lo == 4);
    CHECK_THROWS_AS(mzv::cli::parse_range("5..2"), std::invalid_argument);
    CHECK_THROWS_AS(mzv::cli::parse_range("a..2"), std::invalid_argument);
    CHECK(mzv::cli::parse_schedule("10,100,1000") == std::vector<std::uint32_t>{10, 100, 1000});
    CHECK_THROWS_AS(mzv::cli::parse_schedule("100,50"), std::invalid_argument);
    CHECK(mzv::cli::thread_budget() >= 1);
}

TEST_CASE("verify s-identity report") {
    const auto r = invoke({"verify", "s-identity", "--abc", "3,1,2", "--p", "0..2", "--q", "0..2", "--m", "0..10"});
    REQUIRE(r.code == 0);
    const auto report = nlohmann::json::parse(r.out);
    for (const char* key : {"command", "params", "cases", "all_passed", "elapsed_ms"}) CHECK(report.contains(key));
    CHECK(report["command"] == "verify s-identity");
    CHECK(report["all_passed"] == true);
    CHECK(report["params"]["a"] == 3);
    REQUIRE(report["cases"].size() == 99);
    for (const auto& c : report["cases"]) {
        CHECK(c["equal"] == true);
        check_reduced(c["lhs"].get<std::string>());
        check_reduced(c["rhs"].get<std::string>());
    }
}

TEST_CASE("every verify kind passes on a small grid") {
    for (const char* kind : {"t-identity", "frs", "frt"}) {
        CHECK(invoke({"verify", kind, "--p", "0..1", "--q", "0..1", "--m", "0..4"}).code == 0);
    }
    CHECK(invoke({"verify", "gen", "--m", "0..5", "--bounds", "3,3"}).code == 0);
    CHECK(invoke({"verify", "symmetric", "--m", "0..5", "--bounds", "3,3", "--abc", "4,2,3"}).code == 0);
    const auto hom = invoke({"verify", "homomorphism", "--count", "5", "--m", "0..3", "--seed", "3"});
    CHECK(hom.code == 0);
    CHECK(nlohmann::json::parse(hom.out)["cases"].size() == 20);
}

TEST_CASE("verify exit codes") {
    CHECK(invoke({"verify", "s-identity", "--p", "0..1", "--q", "0..1", "--m", "0..3", "--corrupt-coefficient"}).code ==
          1);
    CHECK(invoke({"verify", "frt", "--p", "0..1", "--q", "0..1", "--corrupt-coefficient"}).code == 1);
    const auto bad = invoke({"verify", "s-identity", "--abc", "3,1,1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("a+b must equal 2c") != std::string::npos);
    CHECK(invoke({"verify", "s-identity", "--abc", "1,3,2"}).code == 2);
    CHECK(invoke({"verify", "bogus"}).code == 2);
    CHECK(invoke({"verify", "s-identity", "--p", "3..1"}).code == 2);
    CHECK(invoke({"verify", "gen", "--corrupt-coefficient"}).code == 2);
    CHECK(invoke({"verify", "s-identity", "--format", "xml"}).code == 2);
    CHECK(invoke({}).code == 2);
}

TEST_CASE("csv output") {
    const auto r = invoke({"verify", "s-identity", "--p", "0..1", "--q", "0", "--m", "0..2", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "p,q,m,lhs,rhs,equal");
    CHECK(rows[1] == "0,0,0,1/1,1/1,true");
}

TEST_CASE("eval") {
    auto r = invoke({"eval", "zeta", "--index", "2,1", "--m", "2"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[0] == "1/4");
    CHECK(lines(r.out)[1] == "0.25");

    CHECK(lines(invoke({"eval", "zeta-star", "--index", "2,2", "--m", "2"}).out)[0] == "21/16");
    CHECK(lines(invoke({"eval", "s-star", "--p", "1", "--q", "0", "--m", "2"}).out)[0] == "19/16");
    CHECK(lines(invoke({"eval", "bernoulli", "--n", "12"}).out)[0] == "-691/2730");
    CHECK(lines(invoke({"eval", "beta", "--r", "2"}).out)[0] == "7/360");

    r = invoke({"eval", "closed", "--p", "1", "--q", "0"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out)[0] == "1/360 * pi^4");
    CHECK(std::stod(lines(r.out)[1]) == doctest::Approx(0.2705808084277845));
    CHECK(lines(invoke({"eval", "closed", "--kind", "s-star", "--p", "1", "--q", "0"}).out)[0] == "1/72 * pi^4");

    CHECK(invoke({"eval", "zeta", "--index", "0,1", "--m", "3"}).code == 2);
    CHECK(invoke({"eval", "closed", "--kind", "t"}).code == 2);
}

TEST_CASE("converge") {
    const auto r = invoke({"converge", "--abc", "3,1,2", "--p", "0", "--q", "1", "--m", "10,100"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "m,truncated_over_pi_power,closed_form,abs_error");
    CHECK(rows[1].rfind("10,", 0) == 0);
    CHECK(invoke({"converge", "--m", "100,50"}).code == 2);
    CHECK(invoke({"converge", "--abc", "4,2,3", "--m", "10"}).code == 2);
    CHECK(invoke({"converge"}).code == 2);
}

TEST_CASE("cache file") {
    const auto path = (std::filesystem::temp_directory_path() / "mzv_cli_cache.bin").string();
    std::filesystem::remove(path);
    const auto first = invoke({"--cache", path, "eval", "s-star", "--p", "1", "--q", "1", "--m", "30"});
    REQUIRE(first.code == 0);
    CHECK(std::filesystem::exists(path));
    const auto second = invoke({"--cache", path, "eval", "s-star", "--p", "1", "--q", "1", "--m", "40"});
    const auto fresh = invoke({"eval", "s-star", "--p", "1", "--q", "1", "--m", "40"});
    CHECK(second.out == fresh.out);
    {
        std::ofstream corrupt(path, std::ios::binary | std::ios::trunc);
        corrupt << "garbage";
    }
    CHECK(invoke({"--cache", path, "eval", "zeta", "--index", "2", "--m", "3"}).code == 2);
    std::filesystem::remove(path);
}
