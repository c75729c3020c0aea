#include "helpers.hpp"

#include "ode/expr_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace testutil;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ODESHIFT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& content) {
    static int counter = 0;
    std::string path = "cli_test_tmp_" + std::to_string(counter++) + ".txt";
    std::ofstream f(path);
    f << content;
    return path;
}

const char* kE2 = "\"x''' - 5*x'' + 3*x' + 9*x = t^5 * e^(3t)\"";

} // namespace

TEST_CASE("solve prints the worked-example solution") {
    const RunResult r = run(std::string("solve ") + kE2 + " --format plain");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(" + render_plain(e2_solution().real_part()) + ")*e^(3t)\n");
}

TEST_CASE("solve the homogeneous marker") {
    const RunResult r = run("solve \"x' = 0\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("solve with roots appends the general solution") {
    const RunResult r = run(std::string("solve ") + kE2 + " --roots \"3:2,-1:1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "c1*(e^(3t)) + c2*((t)*e^(3t)) + c3*(e^(-1t)) + (" +
                       render_plain(e2_solution().real_part()) + ")*e^(3t)\n");
}

TEST_CASE("verify rejects the printed E1 solution") {
    const std::string candidate = render_plain(
        realize(e1_printed_q(), cx(1, 3), rat(5), Projection::ImagPart));
    const std::string path = temp_file(candidate);
    const RunResult r = run("verify \"x'' - 2*x' + 2*x = t^2 * e^(1t) * sin(3t + 5)\""
                            " --candidate " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") == 0);
    CHECK(r.out.find("residual:") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("solve output piped back through verify passes") {
    const char* corpus[] = {
        "x''' - 5*x'' + 3*x' + 9*x = t^5 * e^(3t)",
        "x'' + 2*x' + 2*x = e^(-1t)*sin(1t)",
        "x'' - 2*x' + 2*x = t^2 * e^(1t) * sin(3t + 5)",
        "x' + x = t^3 + (t)*cos(2t) + e^(5t)",
        "x'''' + x = t * e^(1t) * cos(1t - 3/2)",
        "x' = 1",
    };
    for (const char* problem : corpus) {
        CAPTURE(problem);
        const RunResult solved = run(std::string("solve \"") + problem + "\"");
        REQUIRE(solved.exit_code == 0);
        std::string sol = solved.out;
        if (!sol.empty() && sol.back() == '\n')
            sol.pop_back();
        const std::string path = temp_file(sol);
        const RunResult verified =
            run(std::string("verify \"") + problem + "\" --candidate " + path);
        CHECK(verified.exit_code == 0);
        CHECK(verified.out == "PASS\n");
        std::remove(path.c_str());
    }
}

TEST_CASE("homogeneous command") {
    const RunResult r = run("homogeneous \"x'' - 2*x' + 2*x = 0\" --roots \"1+1i:1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "e^(1t)*cos(1t)\ne^(1t)*sin(1t)\n");

    const RunResult bad = run(std::string("homogeneous ") + kE2 + " --roots \"2:3\"");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("input errors exit with status 2") {
    CHECK(run("solve \"x'' + = t\"").exit_code == 2);
    CHECK(run("solve --input missing_file.txt").exit_code == 2);
}

TEST_CASE("reading the problem from stdin and a file") {
    const std::string path = temp_file("x' = 1");
    CHECK(run("solve --input " + path).out == "(t)\n");
    std::remove(path.c_str());
    const RunResult piped = run("solve - < /dev/null");
    CHECK(piped.exit_code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::string args = std::string("solve ") + kE2 + " --trace --format structured";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}
