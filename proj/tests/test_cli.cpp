// Runs the command line tool as a subprocess.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(HYPELA_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("sample: orbitlike default")
{
    Run r = run("sample --k 0.8");
    REQUIRE(r.code == 0);
    auto rows = csv(r.out);
    REQUIRE(rows.size() == 1001);
    CHECK(rows[0] == std::vector<std::string>{"s", "gamma1", "gamma2", "phi", "kappa"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::stod(rows[i][2]) > 0.0);
    }
}

TEST_CASE("sample: wavelike curvature changes sign")
{
    Run r = run("sample --family wavelike --k 0.8");
    REQUIRE(r.code == 0);
    auto rows = csv(r.out);
    int changes = 0;
    for (std::size_t i = 2; i < rows.size(); ++i) {
        if ((std::stod(rows[i][4]) > 0) != (std::stod(rows[i - 1][4]) > 0)) {
            ++changes;
        }
    }
    CHECK(changes > 0);
}

TEST_CASE("sample: zero count and bad parameters")
{
    Run empty = run("sample --count 0");
    CHECK(empty.code == 0);
    CHECK(empty.out == "s,gamma1,gamma2,phi,kappa\n");
    CHECK(run("sample --k 1.2").code == 2);
    CHECK(run("sample --family helix").code == 2);
    CHECK(run("sample --initial 0,-1,0").code == 2);
    CHECK(run("sample --rotation 3/7").code == 2);
}

TEST_CASE("sample: svg")
{
    Run r = run("--format svg sample --enclosure");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.out.find("<polyline") != std::string::npos);
    CHECK(r.out.find("<circle") != std::string::npos);
}

TEST_CASE("sample: rational rotation target")
{
    Run r = run("--format json sample --rotation 2/3 --count 3");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"k\": 0.93624672") != std::string::npos);
}

TEST_CASE("table")
{
    Run pub = run("table --published-only");
    REQUIRE(pub.code == 0);
    CHECK(csv(pub.out).size() == 27);
    Run all = run("table --max-n 20");
    CHECK(csv(all.out).size() == 28);
    CHECK(run("--format svg table").code == 2);
    CHECK(run("table --max-n 0").code == 2);
}

TEST_CASE("intersections")
{
    Run r = run("intersections 2 3");
    REQUIRE(r.code == 0);
    auto rows = csv(r.out);
    CHECK(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"l", "p", "s", "partner_s", "x", "y"});
    CHECK(run("intersections 3 4").code == 2);
}

TEST_CASE("dirichlet")
{
    Run r = run("dirichlet --a1 0 --b1 0 --l-max 4 --grid 10 --path-samples 5");
    REQUIRE(r.code == 0);
    CHECK(r.out.front() == '[');
    CHECK(r.out.find("\"path\"") != std::string::npos);
    Run none = run("dirichlet --a1 0 --b1 0 --k-max 0.3 --l-max 1 --grid 8");
    CHECK(none.code == 0);
    CHECK(none.out == "[]\n");
    CHECK(run("dirichlet --a2 -1").code == 2);
}

TEST_CASE("output is deterministic")
{
    CHECK(run("table").out == run("table --threads 3").out);
    CHECK(run("--format json dirichlet --a1 0 --b1 0 --l-max 3 --grid 8 --path-samples 3").out ==
          run("--format json dirichlet --a1 0 --b1 0 --l-max 3 --grid 8 --path-samples 3").out);
}

TEST_CASE("verify")
{
    Run r = run("verify all");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"passed\": true") != std::string::npos);
    CHECK(run("verify nonsense").code == 2);
}
