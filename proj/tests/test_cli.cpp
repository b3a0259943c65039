#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("RADFORD_CLI");
    REQUIRE(p != nullptr);
    return p;
}

int run(const std::string& args, std::string* output = nullptr) {
    const std::string cmd = cli_path() + " " + args + " > /tmp/radford_cli_out.txt 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream f("/tmp/radford_cli_out.txt");
        *output = std::string(std::istreambuf_iterator<char>(f), {});
    }
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("simples command") {
    std::string out;
    CHECK(run("simples --n 2 --m 2", &out) == 0);
    CHECK(out.find("all 16 simple modules verified") != std::string::npos);
}

TEST_CASE("module command and exit codes") {
    std::string out;
    CHECK(run("module --n 2 --m 2 --i 3 --j 1 --verify --dot /tmp/radford_v31.dot", &out) == 0);
    CHECK(out.find("wrote /tmp/radford_v31.dot") != std::string::npos);
    std::ifstream dot("/tmp/radford_v31.dot");
    const std::string dots(std::istreambuf_iterator<char>(dot), {});
    CHECK(dots.find("digraph") != std::string::npos);
    CHECK(dots.find("action=\"x\"") != std::string::npos);

    // projective of a full-size simple is rejected with exit 3
    CHECK(run("module --n 2 --m 2 --i 3 --j 1 --projective") == 3);

    CHECK(run("module --n 2 --m 2 --i 1 --j 2 --projective", &out) == 0);
    CHECK(out.find("composition factors: V(1,2) V(2,0) V(0,0) V(1,2)") != std::string::npos);
    CHECK(out.find("socle: V(1,2)") != std::string::npos);
}

TEST_CASE("transport and dims commands") {
    std::string out;
    CHECK(run("transport --n 2 --m 2 --i 1 --j 2", &out) == 0);
    CHECK(out.find("braid equation: pass") != std::string::npos);
    CHECK(out.find("disconnected") != std::string::npos);

    CHECK(run("dims --n 2 --m 2 --i 2 --j 1 --max-degree 8", &out) == 0);
    CHECK(out.find("1 2 2 2 1 0") != std::string::npos);
    CHECK(out.find("total dimension 8") != std::string::npos);

    // capacity budget surfaces as exit 4
    CHECK(run("--budget 16 dims --n 2 --m 2 --i 0 --j 1 --max-degree 12") == 4);
}

TEST_CASE("double command") {
    std::string out;
    CHECK(run("double --n 2 --m 3 --check", &out) == 0);
    CHECK(out.find("dim 144") != std::string::npos);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(out.find("xX = w Xx + (1 - Ug)") != std::string::npos);

    // same seed, same transcript
    std::string out1, out2;
    CHECK(run("--seed 7 double --n 2 --m 2 --check", &out1) == 0);
    CHECK(run("--seed 7 double --n 2 --m 2 --check", &out2) == 0);
    CHECK(out1 == out2);

    // JSON structure-constant export
    CHECK(run("double --n 2 --m 2 --dump /tmp/radford_d22.json", &out) == 0);
    std::ifstream f("/tmp/radford_d22.json");
    const std::string js(std::istreambuf_iterator<char>(f), {});
    CHECK(js.find("\"dim\": 64") != std::string::npos);
    CHECK(js.find("\"field_order\": 4") != std::string::npos);
    for (const char* key : {"\"basis\"", "\"mult\"", "\"comult\"", "\"antipode\""})
        CHECK(js.find(key) != std::string::npos);
}

TEST_CASE("reproduce command") {
    std::string out1;
    CHECK(run("reproduce thm22", &out1) == 0);
    CHECK(out1.find("V(1,2)  dim B(V) = 2") != std::string::npos);
    CHECK(out1.find("V(2,1)  dim B(V) = 8") != std::string::npos);
    CHECK(out1.find("reproduction consistent") != std::string::npos);
}

TEST_CASE("classify output is deterministic") {
    std::string out1, out2;
    CHECK(run("--json classify --m 2 --i 2 --j 3", &out1) == 0);
    CHECK(run("--json classify --m 2 --i 2 --j 3", &out2) == 0);
    CHECK(out1 == out2);
}

TEST_CASE("classify json output") {
    std::string out;
    CHECK(run("--json classify --m 2 --i 3 --j 1", &out) == 0);
    CHECK(out.find("\"finite\": true") != std::string::npos);
    CHECK(out.find("\"nichols_dim\": 8") != std::string::npos);
    CHECK(out.find("\"presentation_verified\": true") != std::string::npos);
}
