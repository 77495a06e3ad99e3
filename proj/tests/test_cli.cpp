// End-to-end tests driving the installed binary through a shell.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hilbert3/cube_io.hpp"

namespace h3 = hilbert3;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

// Runs the CLI with the given arguments, capturing stdout (stderr is
// discarded unless merge_stderr).
CmdResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string("\"") + HILBERT3_CLI_PATH + "\" " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {};
    CmdResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

fs::path temp_path(const std::string& name) {
    return fs::path(::testing::TempDir()) / name;
}

std::vector<char> slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(CliEncode, PaperExample) {
    CmdResult r = run_cli("encode 3 3 1 --depth 2");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "51\n");

    r = run_cli("encode 3 3 1 --depth 2 --octal");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "63\n");

    r = run_cli("encode 0 0 0 --depth 5");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0\n");
}

TEST(CliEncode, Formats) {
    EXPECT_EQ(run_cli("encode 3 3 1 --depth 2 --format csv").out, "h\n51\n");
    EXPECT_EQ(run_cli("encode 3 3 1 --depth 2 --format jsonl").out, "{\"h\":51}\n");
    EXPECT_EQ(run_cli("encode 3 3 1 --depth 2 --octal --format jsonl").out, "{\"h\":\"63\"}\n");
}

TEST(CliEncode, InputErrorsExitTwo) {
    EXPECT_EQ(run_cli("encode 4 0 0 --depth 2").status, 2);      // outside the cube
    EXPECT_EQ(run_cli("encode 1 1 --depth 2").status, 2);        // missing coordinate
    EXPECT_EQ(run_cli("encode 1 1 1 --depth 0").status, 2);      // depth under range
    EXPECT_EQ(run_cli("encode 1 1 1 --depth 21").status, 2);     // depth over range
    EXPECT_EQ(run_cli("encode -1 0 0 --depth 2").status, 2);     // negative coordinate
    EXPECT_EQ(run_cli("encode a b c --depth 2").status, 2);      // non-numeric
    const CmdResult diag = run_cli("encode 4 0 0 --depth 2", /*merge_stderr=*/true);
    EXPECT_NE(diag.out.find("outside"), std::string::npos);
}

TEST(CliDecode, PaperExamples) {
    EXPECT_EQ(run_cli("decode 37 --depth 2").out, "0 3 2\n");
    EXPECT_EQ(run_cli("decode 63 --depth 2").out, "0 3 0\n");
    EXPECT_EQ(run_cli("decode 0 --depth 3").out, "0 0 0\n");
    EXPECT_EQ(run_cli("decode 37 --depth 2 --format csv").out, "x,y,z\n0,3,2\n");
    EXPECT_EQ(run_cli("decode 37 --depth 2 --format jsonl").out, "{\"x\":0,\"y\":3,\"z\":2}\n");
}

TEST(CliDecode, IndexOutOfRangeExitsTwo) {
    EXPECT_EQ(run_cli("decode 64 --depth 2").status, 2);
    EXPECT_EQ(run_cli("decode -1 --depth 2").status, 2);
}

TEST(CliPath, EmitsTheCurve) {
    const CmdResult r = run_cli("path --depth 2");
    EXPECT_EQ(r.status, 0);
    const std::vector<std::string> lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 64u);
    EXPECT_EQ(lines[0], "0 0 0 0");
    EXPECT_EQ(lines[37], "37 0 3 2");
    EXPECT_EQ(lines[63], "63 0 3 0");
}

TEST(CliPath, OracleMatchesDecode) {
    for (int depth : {1, 2, 3}) {
        const std::string d = std::to_string(depth);
        const CmdResult via_decode = run_cli("path --depth " + d + " --source decode");
        const CmdResult via_oracle = run_cli("path --depth " + d + " --source oracle");
        EXPECT_EQ(via_decode.status, 0);
        EXPECT_EQ(via_oracle.status, 0);
        EXPECT_EQ(via_decode.out, via_oracle.out) << "depth " << depth;
    }
    // --oracle is shorthand for --source oracle, and the two spellings
    // cannot be mixed.
    EXPECT_EQ(run_cli("path --depth 2 --oracle").out, run_cli("path --depth 2 --source oracle").out);
    EXPECT_EQ(run_cli("path --depth 2 --source decode --oracle").status, 2);
}

TEST(CliPath, FormatsAndLimits) {
    const CmdResult csv = run_cli("path --depth 1 --format csv");
    const std::vector<std::string> lines = lines_of(csv.out);
    ASSERT_EQ(lines.size(), 9u);
    EXPECT_EQ(lines[0], "h,x,y,z");
    EXPECT_EQ(lines[1], "0,0,0,0");

    const CmdResult jsonl = run_cli("path --depth 1 --format jsonl");
    EXPECT_EQ(lines_of(jsonl.out)[1], "{\"h\":1,\"x\":1,\"y\":0,\"z\":0}");

    EXPECT_EQ(run_cli("path --depth 11").status, 2);
    EXPECT_EQ(run_cli("path --depth 8 --source oracle").status, 2);
    EXPECT_EQ(run_cli("path --depth 2 --source turtle").status, 2);  // unknown source
}

TEST(CliVerify, PassesOnTheRealImplementation) {
    for (int depth : {1, 2}) {
        const CmdResult r = run_cli("verify --depth " + std::to_string(depth));
        EXPECT_EQ(r.status, 0) << r.out;
        EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
        EXPECT_NE(r.out.find("bijection"), std::string::npos);
        EXPECT_NE(r.out.find("table_vs_matrix"), std::string::npos);
    }
    EXPECT_EQ(run_cli("verify --depth 5").status, 2);  // over the exhaustive cap
}

TEST(CliVerify, InjectedFaultExitsOne) {
    const CmdResult r = run_cli("verify --depth 2 --inject-fault");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("counterexample"), std::string::npos);
    EXPECT_NE(r.out.find("checks failed"), std::string::npos);
}

TEST(CliReorder, RoundTripIsByteIdentical) {
    const fs::path original = temp_path("cli-original.cube");
    const fs::path hilbert = temp_path("cli-hilbert.cube");
    const fs::path back = temp_path("cli-back.cube");

    h3::CubeArray a(h3::Depth(2), h3::Layout::row_major);
    std::mt19937_64 rng(20240818);
    for (auto& v : a.data) v = rng();
    h3::write_cube(original, a);

    const std::string files = "\"" + original.string() + "\" \"" + hilbert.string() + "\"";
    EXPECT_EQ(run_cli("reorder " + files + " --direction to-hilbert").status, 0);
    const std::string files2 = "\"" + hilbert.string() + "\" \"" + back.string() + "\"";
    EXPECT_EQ(run_cli("reorder " + files2 + " --direction to-row-major").status, 0);

    EXPECT_EQ(slurp(original), slurp(back));
    EXPECT_NE(slurp(original), slurp(hilbert));  // permutation actually moved data
}

TEST(CliReorder, RejectsBadInputs) {
    const fs::path missing = temp_path("cli-missing.cube");
    const fs::path out = temp_path("cli-out.cube");
    const std::string files = "\"" + missing.string() + "\" \"" + out.string() + "\"";
    EXPECT_EQ(run_cli("reorder " + files + " --direction to-hilbert").status, 2);

    // Wrong direction for the file's layout.
    const fs::path hilbert_file = temp_path("cli-already.cube");
    h3::write_cube(hilbert_file, h3::CubeArray(h3::Depth(1), h3::Layout::hilbert));
    const std::string files2 = "\"" + hilbert_file.string() + "\" \"" + out.string() + "\"";
    const CmdResult r = run_cli("reorder " + files2 + " --direction to-hilbert", true);
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("layout"), std::string::npos);

    // Corrupted magic.
    const fs::path bad = temp_path("cli-bad.cube");
    h3::write_cube(bad, h3::CubeArray(h3::Depth(1), h3::Layout::row_major));
    {
        std::fstream f(bad, std::ios::binary | std::ios::in | std::ios::out);
        f.put('X');
    }
    const std::string files3 = "\"" + bad.string() + "\" \"" + out.string() + "\"";
    const CmdResult r2 = run_cli("reorder " + files3 + " --direction to-hilbert", true);
    EXPECT_EQ(r2.status, 2);
    EXPECT_NE(r2.out.find("magic"), std::string::npos);

    // Missing --direction entirely.
    EXPECT_EQ(run_cli("reorder " + files3).status, 2);
}

TEST(CliPartition, FrozenExamples) {
    const CmdResult two = run_cli("partition --depth 1 --parts 2");
    EXPECT_EQ(two.status, 0);
    const std::vector<std::string> lines = lines_of(two.out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0], "0 0 4 4 4 16");
    EXPECT_EQ(lines[1], "1 4 8 4 4 16");

    const CmdResult eight = run_cli("partition --depth 2 --parts 8");
    ASSERT_EQ(lines_of(eight.out).size(), 8u);
    EXPECT_EQ(lines_of(eight.out)[0], "0 0 8 8 8 24");

    const CmdResult csv = run_cli("partition --depth 1 --parts 1 --format csv");
    EXPECT_EQ(lines_of(csv.out)[0], "part,h_begin,h_end,count,bbox_volume,surface");
    EXPECT_EQ(lines_of(csv.out)[1], "0,0,8,8,8,24");

    const CmdResult jsonl = run_cli("partition --depth 1 --parts 2 --format jsonl");
    EXPECT_EQ(lines_of(jsonl.out)[0],
              "{\"part\":0,\"h_begin\":0,\"h_end\":4,\"count\":4,\"bbox_volume\":4,"
              "\"surface\":16}");
}

TEST(CliPartition, RejectsBadPartCounts) {
    EXPECT_EQ(run_cli("partition --depth 1 --parts 0").status, 2);
    EXPECT_EQ(run_cli("partition --depth 1 --parts 9").status, 2);
    EXPECT_EQ(run_cli("partition --depth 9 --parts 2").status, 2);  // over the depth cap
}

TEST(CliGeneral, UsageAndHelp) {
    EXPECT_EQ(run_cli("").status, 2);               // a subcommand is required
    EXPECT_EQ(run_cli("frobnicate").status, 2);     // unknown subcommand
    EXPECT_EQ(run_cli("--help").status, 0);
    const CmdResult help = run_cli("--help");
    EXPECT_NE(help.out.find("encode"), std::string::npos);
    EXPECT_NE(help.out.find("partition"), std::string::npos);
}
