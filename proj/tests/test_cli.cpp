#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <semiconvex/scene_io.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using namespace semiconvex;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Spawns the installed binary, captures stdout (stderr discarded unless merged).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(CLI_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[512];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool starts_with(const std::string& text, const std::string& prefix) {
    return text.rfind(prefix, 0) == 0;
}

bool mentions(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check reports verdicts with distinct exit codes") {
    RunResult shadowed = run_cli("check fixture:compass_disks --point 0,0");
    CHECK(shadowed.exit_code == 3);
    CHECK(shadowed.out == "shadowed\n");

    RunResult free_far = run_cli("check fixture:compass_disks --point 10,0");
    CHECK(free_far.exit_code == 0);
    CHECK(starts_with(free_far.out, "free direction="));

    CHECK(run_cli("check fixture:pinwheel_rects --point 0,0").exit_code == 3);

    // Mode overrides travel through files written by the fixture subcommand.
    REQUIRE(run_cli("fixture compass_disks --mode open --out cli_open_compass.json").exit_code ==
            0);
    RunResult open_center = run_cli("check cli_open_compass.json --point 0,0");
    CHECK(open_center.exit_code == 0);
    CHECK(starts_with(open_center.out, "free direction="));
}

TEST_CASE("weak distinguishes passing and failing scenes") {
    RunResult pin = run_cli("weak fixture:pinwheel_rects --samples 48");
    CHECK(pin.exit_code == 0);
    CHECK(starts_with(pin.out, "pass tested="));

    RunResult hooks = run_cli("weak fixture:hook_pair --samples 48");
    CHECK(hooks.exit_code == 3);
    CHECK(starts_with(hooks.out, "fail tested="));
    CHECK(mentions(hooks.out, "failures="));
    CHECK(mentions(hooks.out, "first=(-2, "));
}

TEST_CASE("shadow and hull write inspectable artifacts") {
    RunResult shadow =
        run_cli("shadow fixture:compass_disks --resolution 0.2 --svg cli_shadow.svg");
    CHECK(shadow.exit_code == 0);
    CHECK(mentions(shadow.out, "cells="));
    CHECK(mentions(shadow.out, "components=1"));
    CHECK(starts_with(slurp("cli_shadow.svg"), "<svg"));

    RunResult hull = run_cli("hull fixture:compass_disks --resolution 0.2 --pgm cli_hull.pgm");
    CHECK(hull.exit_code == 0);
    CHECK(mentions(hull.out, "converged=1"));
    CHECK(mentions(hull.out, "last_delta=0"));
    CHECK(starts_with(slurp("cli_hull.pgm"), "P2\n"));

    RunResult capped = run_cli("hull fixture:pinwheel_rects --resolution 0.05 --max-iter 1");
    CHECK(capped.exit_code == 3);
    CHECK(mentions(capped.out, "converged=0"));
}

TEST_CASE("supports lists rays and honors the inner filter") {
    RunResult all = run_cli("supports fixture:compass_disks --point 0,0");
    CHECK(all.exit_code == 0);
    CHECK(starts_with(all.out, "rays=4\n"));
    CHECK(mentions(all.out, "angle=45 "));
    CHECK(mentions(all.out, "t=1.41421356"));

    RunResult inner = run_cli("supports fixture:compass_disks --point 0,0 --inner");
    CHECK(inner.exit_code == 0);
    CHECK(inner.out == "rays=0\n");
}

TEST_CASE("audit prints the report and emits deterministic csv") {
    std::string args = "audit fixture:pinwheel_rects --resolution 0.1 --samples 32";
    RunResult a = run_cli(args + " --csv cli_audit_a.csv");
    CHECK(a.exit_code == 0);
    CHECK(mentions(a.out, "all_consistent=true"));

    RunResult b = run_cli(args + " --csv cli_audit_b.csv");
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);

    std::string csv = slurp("cli_audit_a.csv");
    CHECK(starts_with(csv, "check,applicable,consistent,details\n"));
    CHECK(csv == slurp("cli_audit_b.csv"));
}

TEST_CASE("solve-shadow finds the three-disk ring deterministically") {
    std::string args = "solve-shadow --kmax 4 --mode closed --out cli_ring_a.json";
    RunResult a = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(starts_with(a.out, "k_min=3 mode=closed margin="));

    RunResult b = run_cli("solve-shadow --kmax 4 --mode closed --out cli_ring_b.json");
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);

    std::string ring_text = slurp("cli_ring_a.json");
    CHECK(ring_text == slurp("cli_ring_b.json"));
    Scene ring = parse_scene(ring_text);
    CHECK(ring.obstacles.size() == 3);

    RunResult infeasible = run_cli("solve-shadow --kmax 2 --mode open");
    CHECK(infeasible.exit_code == 3);
    CHECK(starts_with(infeasible.out, "k_min=none mode=open\n"));
    CHECK(mentions(infeasible.out, "k=2 best_margin=-"));
}

TEST_CASE("fixture writes canonical scene files") {
    REQUIRE(run_cli("fixture hook_pair --out cli_hooks.json").exit_code == 0);
    CHECK(slurp("cli_hooks.json") == serialize_scene(fixture("hook_pair")));

    // The written file reloads through the generic path with the same verdicts.
    RunResult reread = run_cli("check cli_hooks.json --point 0,0");
    CHECK(reread.exit_code == 3);
}

TEST_CASE("failures map to usage and parse exit codes") {
    CHECK(run_cli("").exit_code == 1);                                     // missing subcommand
    CHECK(run_cli("check fixture:compass_disks").exit_code == 1);         // missing --point
    CHECK(run_cli("check fixture:compass_disks --point xy").exit_code == 1);
    CHECK(run_cli("fixture compass_disks").exit_code == 1);               // missing --out
    CHECK(run_cli("solve-shadow --kmax 3 --mode sideways").exit_code == 1);
    CHECK(run_cli("weak fixture:compass_disks --bogus-flag").exit_code == 1);

    CHECK(run_cli("check fixture:no_such_scene --point 0,0").exit_code == 2);
    CHECK(run_cli("check cli_missing_file.json --point 0,0").exit_code == 2);

    std::ofstream("cli_junk.json") << "{ this is not json";
    CHECK(run_cli("check cli_junk.json --point 0,0").exit_code == 2);

    std::ofstream("cli_bad_scene.json") << "{\"obstacles\": [{\"kind\": \"disk\","
                                           " \"center\": [0, 0], \"radius\": -1}]}";
    CHECK(run_cli("check cli_bad_scene.json --point 0,0").exit_code == 2);
}
