#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " " + std::string(CHESSHOM_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe)) res.out += buf.data();
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string temp_cache()
{
    auto dir = std::filesystem::temp_directory_path() / "chesshom-cli-cache";
    std::filesystem::remove_all(dir);
    return dir.string();
}

}  // namespace

TEST_CASE("betti subcommand prints the group json")
{
    std::string cache = temp_cache();
    auto r = run_cli("--cache-dir " + cache +
                     " betti --complex chessboard --m 5 --n 5 --dim 2 --ring Z");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"free\":0,\"torsion\":[3]}\n");

    auto human = run_cli("--format human --cache-dir " + cache +
                         " betti --complex chessboard --m 5 --n 5 --dim 2 --ring Z");
    CHECK(human.out == "Z_3\n");

    auto r2 = run_cli("--cache-dir " + cache +
                      " betti --complex matching --N 7 --dim 1 --ring Z");
    CHECK(r2.out == "{\"free\":0,\"torsion\":[3]}\n");

    auto r3 = run_cli("--cache-dir " + cache +
                      " betti --complex chessboard --m 2 --n 2 --dim 0 --ring Z");
    CHECK(r3.out == "{\"free\":1,\"torsion\":[]}\n");

    // cached rerun must agree byte for byte
    auto again = run_cli("--cache-dir " + cache +
                         " betti --complex chessboard --m 5 --n 5 --dim 2 --ring Z");
    CHECK(again.out == r.out);
    CHECK(std::filesystem::exists(cache));
    std::filesystem::remove_all(cache);
}

TEST_CASE("invalid specs exit with the usage code")
{
    auto r = run_cli("betti --complex chessboard --m 0 --n 3 --dim 1");
    CHECK(r.exit_code == 2);
    auto r2 = run_cli("betti --complex nosuch --m 2 --n 2 --dim 0");
    CHECK(r2.exit_code == 2);
    auto r3 = run_cli("verify not-a-case");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("cycle subcommand checks and orders recipes")
{
    auto check = run_cli("cycle gamma_3r:2 --check");
    CHECK(check.exit_code == 0);
    CHECK(check.out == "cycle\n");

    auto order = run_cli("cycle rho --order --complex gamma --m 5 --n 5");
    CHECK(order.exit_code == 0);
    CHECK(order.out == "Finite(3)\n");

    auto print = run_cli("cycle gamma_mn:1,2");
    CHECK(print.exit_code == 0);
    CHECK(print.out.find("\"terms\"") != std::string::npos);
}

TEST_CASE("faces subcommand emits canonical json")
{
    auto r = run_cli("faces --complex chessboard --m 2 --n 2 --dim 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[[[1,1],[2,2]],[[1,2],[2,1]]]\n");
}

TEST_CASE("verify subcommand runs cases and reports failures by exit code")
{
    std::string cache = temp_cache();
    auto r = run_cli("--cache-dir " + cache + " verify m55");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] m55") != std::string::npos);

    auto lst = run_cli("verify --list");
    CHECK(lst.exit_code == 0);
    CHECK(lst.out.find("connectivity") != std::string::npos);
    std::filesystem::remove_all(cache);
}

TEST_CASE("verification evidence is independent of the thread count")
{
    std::string a = run_cli("--format json --threads 1 verify chains").out;
    std::string b = run_cli("--format json --threads 4 verify chains", "CHESSHOM_THREADS=4").out;
    // strip the timing fields before comparing
    auto strip = [](std::string s) {
        for (std::string::size_type pos = 0; (pos = s.find("\"seconds\"", pos)) != std::string::npos;) {
            auto end = s.find_first_of(",}", pos);
            s.erase(pos, end - pos);
        }
        return s;
    };
    CHECK(strip(a) == strip(b));
}

TEST_CASE("table1 respects the face budget")
{
    std::string cache = temp_cache();
    auto r = run_cli("--cache-dir " + cache + " table1 --row 5 --max-m 7 --max-faces 1000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("skipped: estimated faces") != std::string::npos);
    std::filesystem::remove_all(cache);
}

TEST_CASE("audit subcommands")
{
    auto pair = run_cli("--format tsv audit-pair --pair gamma --m 3 --n 3 --p 3");
    CHECK(pair.exit_code == 0);
    CHECK(pair.out.rfind("degree\tnode", 0) == 0);

    auto dmt = run_cli("audit-dmt --m 5 --n 5 --d 2");
    CHECK(dmt.exit_code == 0);
    CHECK(dmt.out.find("\"holds\":true") != std::string::npos);
}

TEST_CASE("betti refuses oversized boards with an estimate")
{
    auto r = run_cli("betti --complex chessboard --m 9 --n 9 --dim 4 --max-faces 100000");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());  // the refusal goes to stderr
}

TEST_CASE("non-cycle recipes fail the check with exit code 1")
{
    auto r = run_cli("cycle gamma12:2,3,4,5 --check");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "not a cycle\n");
}
