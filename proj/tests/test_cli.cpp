#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// End-to-end checks of the installed command line, exact exit codes included.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(DPGRAPH_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data_file(const std::string& name) {
    return std::string(DPGRAPH_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("analyze reports the fixture's missing order") {
    const RunResult r = run_cli("analyze " + data_file("c7_pendant.edges"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dp: no; missing order 6") != std::string::npos);
    CHECK(r.output.find("gap pair: (5,7)") != std::string::npos);
    CHECK(r.output.find("sdp: no") != std::string::npos);
}

TEST_CASE("analyze stock graphs") {
    const RunResult k4 = run_cli("analyze K4");
    CHECK(k4.exit_code == 0);
    CHECK(k4.output.find("dp: yes") != std::string::npos);
    CHECK(k4.output.find("sdp: yes") != std::string::npos);

    const RunResult c6 = run_cli("analyze C6");
    CHECK(c6.exit_code == 0);
    CHECK(c6.output.find("dp: no") != std::string::npos);
    CHECK(c6.output.find("gap pair: (4,6)") != std::string::npos);
}

TEST_CASE("analyze rejects disconnected and malformed input") {
    const RunResult disconnected = run_cli("analyze " + data_file("two_isolated.edges"));
    CHECK(disconnected.exit_code == 1);
    CHECK(disconnected.output.find("error") != std::string::npos);

    const RunResult garbage = run_cli("analyze not-a-graph-at-all");
    CHECK(garbage.exit_code == 1);
}

TEST_CASE("analyze emits JSON when asked") {
    const RunResult r = run_cli("analyze c7+e --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"dp\": false") != std::string::npos);
    CHECK(r.output.find("\"missing_orders\": [") != std::string::npos);
}

TEST_CASE("product subcommand") {
    const RunResult cart = run_cli("product --cart P2 P2");
    CHECK(cart.exit_code == 0);
    CHECK(cart.output.find("Cr") == 0); // row-major C4 labeling

    const RunResult lex = run_cli("product --lex K2 K2");
    CHECK(lex.exit_code == 0);
    CHECK(lex.output.substr(0, 2) == "C~"); // K4

    const RunResult fixture = run_cli("product --cart c7+e P2 --output edges");
    CHECK(fixture.exit_code == 0);
    CHECK(fixture.output.find("16 24") != std::string::npos);
    CHECK(fixture.output.find("index u*2+x") != std::string::npos);

    const RunResult both = run_cli("product --lex --cart P2 P2");
    CHECK(both.exit_code == 1);

    const RunResult dot = run_cli("product --cart P2 P3 --output dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("graph g {") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes") {
    const RunResult unknown = run_cli("verify nonsense");
    CHECK(unknown.exit_code == 1);
    CHECK(unknown.output.find("unknown claim") != std::string::npos);

    const RunResult thm1 = run_cli("verify thm1 --max-left 3 --max-right 2 --jobs 2");
    CHECK(thm1.exit_code == 0);
    CHECK(thm1.output.find("result: HOLDS") != std::string::npos);

    const RunResult eq1 = run_cli("verify eq1 --max-left 3 --max-right 2 --json");
    CHECK(eq1.exit_code == 0);
    CHECK(eq1.output.find("\"holds\": true") != std::string::npos);
}

TEST_CASE("hunt subcommand") {
    const RunResult capped = run_cli("hunt --max-left 30 --max-right 30");
    CHECK(capped.exit_code == 1);
    CHECK(capped.output.find("exceeds the cap") != std::string::npos);

    const RunResult small = run_cli("hunt --max-left 3 --max-right 3");
    CHECK(small.exit_code == 0);
    CHECK(small.output.find("result: CONSISTENT") != std::string::npos);
    CHECK(small.output.find("pairs checked: 16") != std::string::npos);
}

TEST_CASE("one-indexed ingestion shifts vertices") {
    const RunResult r = run_cli("analyze " + data_file("p3_one_indexed.edges") + " --one-indexed");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dp: yes") != std::string::npos);
}

TEST_CASE("repeated runs with identical flags and seed emit identical reports") {
    auto strip_elapsed = [](std::string text) {
        const size_t pos = text.find("\"elapsed_seconds\"");
        if (pos != std::string::npos) {
            text.erase(pos, text.find('\n', pos) - pos);
        }
        return text;
    };
    const std::string args = "verify eq1 --max-left 3 --max-right 2 --seed 7 --json";
    const RunResult first = run_cli(args);
    const RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(strip_elapsed(first.output) == strip_elapsed(second.output));

    const RunResult hunt_a = run_cli("hunt --max-left 3 --max-right 3 --json");
    const RunResult hunt_b = run_cli("hunt --max-left 3 --max-right 3 --jobs 2 --json");
    for (const char* field : {"\"consistent\": true", "\"pairs_checked\": 16",
                              "\"counterexamples\": []", "\"catalog_checksum\""}) {
        CHECK(hunt_a.output.find(field) != std::string::npos);
        CHECK(hunt_b.output.find(field) != std::string::npos);
    }
}

TEST_CASE("external graph6 catalogs feed verify and hunt") {
    const std::string catalog = data_file("catalog_small.g6"); // K2, P3, K3
    const RunResult verify =
        run_cli("verify thm1 --catalog " + catalog + " --max-right 2");
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("instances checked: 9") != std::string::npos);

    const RunResult hunt =
        run_cli("hunt --catalog " + catalog + " --catalog-right " + catalog);
    CHECK(hunt.exit_code == 0);
    CHECK(hunt.output.find("pairs checked: 9") != std::string::npos);
}
