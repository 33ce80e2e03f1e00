#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "eulerian2/bfile.hpp"
#include "eulerian2/combinatorics.hpp"

using namespace eulerian2;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_path(const std::string& name) { return std::string(EULERIAN2_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("parse_bfile")
{
    std::istringstream in("# header\n\n1 1\n2 -3\r\n  # indented comment\n3 123456789012345678901234567890\n");
    const auto ref = parse_bfile(in, "A000000");
    CHECK(ref.sequence_id == "A000000");
    REQUIRE(ref.values.size() == 3);
    CHECK(ref.values[1] == -3);
    CHECK(ref.values[2] == ExactInt("123456789012345678901234567890"));

    std::istringstream bad_token("1 1\n2 x\n");
    CHECK_THROWS_AS(parse_bfile(bad_token), BFileError);
    std::istringstream gap("1 1\n3 1\n");
    CHECK_THROWS_AS(parse_bfile(gap), BFileError);
    std::istringstream missing("1\n");
    CHECK_THROWS_AS(parse_bfile(missing), BFileError);
    std::istringstream extra("1 1 1\n");
    CHECK_THROWS_AS(parse_bfile(extra), BFileError);
    CHECK_THROWS_AS(read_bfile(data_path("does_not_exist.txt")), BFileError);
}

TEST_CASE("compare_with_triangle")
{
    ReferenceData ref{"x", {1, 1, 2, 1, 8, 6}};
    auto cmp = compare_with_triangle(ref);
    CHECK(cmp.compared == 6);
    CHECK_FALSE(cmp.divergence);

    cmp = compare_with_triangle(ref, 2);
    CHECK(cmp.compared == 3);

    ref.values[4] = 7;
    cmp = compare_with_triangle(ref);
    REQUIRE(cmp.divergence);
    CHECK(cmp.divergence->position == 5);
    CHECK(cmp.divergence->row == 3);
    CHECK(cmp.divergence->column == 2);
}

TEST_CASE("table")
{
    auto r = run_cli({"table", "--max-n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n1 2\n1 8 6\n");

    r = run_cli({"table", "--max-n", "1", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run_cli({"table", "--max-n", "4", "--format", "csv"});
    CHECK(r.out == "1\n1,2\n1,8,6\n1,22,58,24\n");

    r = run_cli({"table", "--max-n", "4"});
    CHECK(r.out == " 1\n 1  2\n 1  8  6\n 1 22 58 24\n");

    CHECK(run_cli({"table", "--max-n", "0"}).code == 2);
    CHECK(run_cli({"table"}).code == 2);
    CHECK(run_cli({"table", "--max-n", "3", "--format", "xml"}).code == 2);
    CHECK(run_cli({"table", "--max-n", "three"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("table json round-trips")
{
    const auto r = run_cli({"table", "--max-n", "30", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 30);
    for (Index n = 1; n <= 30; ++n) {
        const auto& row = j[n - 1];
        REQUIRE(row.size() == static_cast<std::size_t>(n));
        for (Index m = 1; m <= n; ++m) {
            CHECK(ExactInt(row[m - 1].get<std::string>()) == eulerian2_rec(n, m));
        }
    }
}

TEST_CASE("check")
{
    auto r = run_cli({"check", "stirling", "--max-n", "10", "--max-m", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "PASS stirling n_max=10 m_max=10 (121 cases)\n");

    CHECK(run_cli({"check", "bogus"}).code == 2);
    CHECK(run_cli({"check", "tree", "--max-n", "-1"}).code == 2);

    r = run_cli({"check", "all", "--max-n", "8", "--max-m", "8", "--box-n", "5", "--box-t", "5", "--format", "json"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.contains("identity"));
        CHECK(j["passed"] == true);
        ++count;
    }
    CHECK(count >= 6);

    r = run_cli({"check", "printed-quad-sum", "--max-n", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("identity,status,cases,counterexample,lhs,rhs\nprinted-quad-sum,info,5,", 0) == 0);
}

TEST_CASE("gf")
{
    auto r = run_cli({"gf", "--box-n", "0", "--box-t", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run_cli({"gf", "--box-n", "2", "--box-t", "2"});
    CHECK(r.out == "1 0 0\n0 1 0\n0 1 2\n");

    r = run_cli({"gf", "--box-n", "4", "--box-t", "4", "--compare"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);

    r = run_cli({"gf", "--box-n", "3", "--box-t", "3", "--compare", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 16);
    for (const auto& cell : j) {
        CHECK(cell["match"] == true);
    }

    CHECK(run_cli({"gf", "--box-n", "-1", "--box-t", "2"}).code == 2);
}

TEST_CASE("oeis")
{
    auto r = run_cli({"oeis", "--file", EULERIAN2_REFERENCE_FILE});
    CHECK(r.code == 0);
    CHECK(r.out == "A008517: 55 values compared, all match\n");

    r = run_cli({"oeis", "--file", EULERIAN2_REFERENCE_FILE, "--max-rows", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("6 values compared") != std::string::npos);

    r = run_cli({"oeis", "--file", data_path("A008517_corrupt.txt")});
    CHECK(r.code == 1);
    CHECK(r.out.find("divergence at index 12 (row 5, column 2)") != std::string::npos);

    r = run_cli({"oeis", "--file", data_path("empty.txt")});
    CHECK(r.code == 0);
    CHECK(r.err.find("0 values compared") != std::string::npos);

    CHECK(run_cli({"oeis", "--file", data_path("malformed_token.txt")}).code == 2);
    CHECK(run_cli({"oeis", "--file", data_path("noncontiguous.txt")}).code == 2);
    CHECK(run_cli({"oeis", "--file", data_path("missing.txt")}).code == 2);
    CHECK(run_cli({"oeis"}).code == 2);
}
