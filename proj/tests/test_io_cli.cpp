// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "depthlab/cli.hpp"
#include "depthlab/csv.hpp"
#include "depthlab/rng.hpp"

using namespace depthlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("depthlab_test_" + std::to_string(Rng(std::random_device{}()).next_u64() % 1000000));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str() + err.str();
    return code;
}

}  // namespace

TEST_CASE("dataset reading", "[cli]") {
    TempDir tmp;
    write_file(tmp.file("ok.csv"), "1.0,2.0\n3.0,4.0\n");
    Dataset d = read_dataset(tmp.file("ok.csv"));
    REQUIRE(d.size() == 2);
    REQUIRE(d.dim() == 2);
    REQUIRE(d.at(1, 1) == 4.0);

    write_file(tmp.file("ragged.csv"), "1.0\n2.0,3.0\n");
    try {
        read_dataset(tmp.file("ragged.csv"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    }

    write_file(tmp.file("nan.csv"), "nan,0\n");
    REQUIRE_THROWS_AS(read_dataset(tmp.file("nan.csv")), ValueError);
    write_file(tmp.file("inf.csv"), "1,inf\n");
    REQUIRE_THROWS_AS(read_dataset(tmp.file("inf.csv")), ValueError);

    write_file(tmp.file("empty.csv"), "");
    REQUIRE_THROWS_AS(read_dataset(tmp.file("empty.csv")), EmptyInputError);

    write_file(tmp.file("junk.csv"), "1.0,abc\n");
    REQUIRE_THROWS_AS(read_dataset(tmp.file("junk.csv")), ParseError);
}

TEST_CASE("dataset write/read round-trip is exact", "[cli]") {
    TempDir tmp;
    Rng rng(16180);
    std::vector<Point> pts;
    for (int i = 0; i < 40; ++i)
        pts.push_back({rng.gaussian() * 1e-7, rng.gaussian() * 1e9, rng.uniform01()});
    Dataset data(pts);
    write_dataset(tmp.file("rt.csv"), data);
    Dataset back = read_dataset(tmp.file("rt.csv"));
    REQUIRE(back.size() == data.size());
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) REQUIRE(back.at(i, j) == data.at(i, j));
}

TEST_CASE("depth subcommand", "[cli]") {
    TempDir tmp;
    write_file(tmp.file("sq.csv"), "1,1\n1,-1\n-1,1\n-1,-1\n");
    std::string out;
    int code = run_cli({"depth", "--input", tmp.file("sq.csv"), "--point", "0.0,0.0", "--method",
                        "exact2d", "--out", tmp.file("d.csv")},
                       &out);
    REQUIRE(code == 0);
    REQUIRE(out.find("0.5") == 0);

    std::string csv = read_file(tmp.file("d.csv"));
    REQUIRE(csv.rfind("# depthlab 0.1.0 seed=none cmd=depth --input", 0) == 0);
    REQUIRE(csv.find("x1,x2,depth,method,w1,w2") != std::string::npos);
    REQUIRE(csv.find("exact2d") != std::string::npos);

    // approx without a seed is a usage error
    REQUIRE(run_cli({"depth", "--input", tmp.file("sq.csv"), "--point", "0,0", "--method",
                     "approx"}) == 2);
    // unknown flag
    REQUIRE(run_cli({"depth", "--input", tmp.file("sq.csv"), "--point", "0,0", "--method",
                     "exact2d", "--bogus", "1"}) == 2);
    // missing file is a data error
    REQUIRE(run_cli({"depth", "--input", tmp.file("missing.csv"), "--point", "0,0", "--method",
                     "exact2d"}) == 3);
    // bad method
    REQUIRE(run_cli({"depth", "--input", tmp.file("sq.csv"), "--point", "0,0", "--method",
                     "magic"}) == 2);
    // dimension mismatch is a data error
    REQUIRE(run_cli({"depth", "--input", tmp.file("sq.csv"), "--point", "0,0,0", "--method",
                     "exact2d"}) == 3);
}

TEST_CASE("median and symtest subcommands", "[cli]") {
    TempDir tmp;
    write_file(tmp.file("sq.csv"), "1,1\n1,-1\n-1,1\n-1,-1\n0,0.5\n0,-0.5\n");
    std::string out;
    REQUIRE(run_cli({"median", "--input", tmp.file("sq.csv")}) == 2);  // seed required
    int code = run_cli({"median", "--input", tmp.file("sq.csv"), "--seed", "5", "--out",
                        tmp.file("m.csv")},
                       &out);
    REQUIRE(code == 0);
    REQUIRE(read_file(tmp.file("m.csv")).find("m1,m2,depth,method,candidates") !=
            std::string::npos);

    code = run_cli({"symtest", "--input", tmp.file("sq.csv"), "--seed", "5", "--bootstrap", "30",
                    "--alpha", "0.05", "--out", tmp.file("s.csv")},
                   &out);
    REQUIRE(code == 0);
    REQUIRE(out.find("p_value") != std::string::npos);
    REQUIRE(read_file(tmp.file("s.csv")).find("delta_n,p_value,alpha,reject") !=
            std::string::npos);
}

TEST_CASE("diagnose subcommand", "[cli]") {
    TempDir tmp;
    std::string out;
    int code = run_cli({"diagnose", "--p", "2", "--n", "120", "--seed", "3", "--qgrid",
                        "0.1:0.9:0.1", "--out", tmp.file("q.csv")},
                       &out);
    REQUIRE(code == 0);
    REQUIRE(out.find("area_deviation") != std::string::npos);
    std::string csv = read_file(tmp.file("q.csv"));
    REQUIRE(csv.find("q,r,area_cumulative") != std::string::npos);
    // 9 data rows + comment + header
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 11);

    // sampling without a seed is a usage error
    REQUIRE(run_cli({"diagnose", "--p", "2", "--n", "50", "--out", tmp.file("x.csv")}) == 2);
    // bad qgrid
    REQUIRE(run_cli({"diagnose", "--p", "2", "--n", "50", "--seed", "1", "--qgrid", "0.5:0.1",
                     "--out", tmp.file("x.csv")}) == 2);
}

TEST_CASE("contours subcommand writes grid, polylines and svg", "[cli]") {
    TempDir tmp;
    std::string out;
    int code = run_cli({"contours", "--p", "2", "--n", "120", "--grid", "24", "--levels",
                        "0.1,0.3", "--seed", "9", "--out", tmp.file("c.csv"), "--svg",
                        tmp.file("c.svg")},
                       &out);
    REQUIRE(code == 0);
    std::string csv = read_file(tmp.file("c.csv"));
    REQUIRE(csv.find("gx,gy,depth,density") != std::string::npos);
    // comment + header + 24*24 rows
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 2 + 24 * 24);
    std::string poly = read_file(tmp.file("c_polylines.csv"));
    REQUIRE(poly.find("level,polyline,vertex,x,y") != std::string::npos);
    std::string svg = read_file(tmp.file("c.svg"));
    REQUIRE(svg.find("<svg") == 0);
    REQUIRE(svg.find("polyline") != std::string::npos);

    REQUIRE(run_cli({"contours", "--p", "2", "--n", "50", "--out", tmp.file("c2.csv")}) == 2);
}

TEST_CASE("infdim subcommand", "[cli]") {
    TempDir tmp;
    std::string out;
    int code = run_cli({"infdim", "--dmax", "200", "--draws", "8", "--seed", "2", "--out",
                        tmp.file("i.csv")},
                       &out);
    REQUIRE(code == 0);
    std::string csv = read_file(tmp.file("i.csv"));
    REQUIRE(csv.find("draw,d,bound") != std::string::npos);
    // d grid {10, 100, 200}: 8 draws x 3 rows + comment + header
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 2 + 24);
    REQUIRE(run_cli({"infdim", "--profile", "weird", "--seed", "1", "--out",
                     tmp.file("j.csv")}) == 2);
}

TEST_CASE("study subcommand", "[cli]") {
    TempDir tmp;
    write_file(tmp.file("s.cfg"),
               "# tiny smoke study\n"
               "dist = D1s\n"
               "d = 2\n"
               "n = 16\n"
               "alpha = 0.05,0.2\n"
               "M = 10\n"
               "replications = 2\n"
               "seed = 77\n");
    std::string out;
    int code = run_cli({"study", "--config", tmp.file("s.cfg"), "--out", tmp.file("t.csv")}, &out);
    REQUIRE(code == 0);
    std::string csv = read_file(tmp.file("t.csv"));
    REQUIRE(csv.find("dist,d,n,alpha,rate,R,M,seed") != std::string::npos);
    REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 2 + 2);

    write_file(tmp.file("bad1.cfg"), "dist = D9\nd=2\nn=16\nalpha=0.05\nM=5\nreplications=1\nseed=1\n");
    REQUIRE(run_cli({"study", "--config", tmp.file("bad1.cfg"), "--out", tmp.file("t2.csv")}) == 2);
    write_file(tmp.file("bad2.cfg"), "frobnicate = 3\n");
    REQUIRE(run_cli({"study", "--config", tmp.file("bad2.cfg"), "--out", tmp.file("t3.csv")}) == 2);
    write_file(tmp.file("bad3.cfg"), "dist = D1s\nd=2\nn=16\nalpha=0.05\nM=5\nreplications=1\n");
    REQUIRE(run_cli({"study", "--config", tmp.file("bad3.cfg"), "--out", tmp.file("t4.csv")}) == 2);
}

TEST_CASE("outputs are byte-identical across thread counts", "[cli]") {
    TempDir tmp;
    write_file(tmp.file("s.cfg"),
               "dist = D6\nd = 2\nn = 20\nalpha = 0.05\nM = 15\nreplications = 4\nseed = 99\n");
    auto run_with = [&](const std::string& threads, const std::string& suffix) {
        REQUIRE(run_cli({"study", "--config", tmp.file("s.cfg"), "--out",
                         tmp.file("t" + suffix + ".csv"), "--threads", threads}) == 0);
        REQUIRE(run_cli({"contours", "--p", "1", "--n", "60", "--grid", "12", "--levels", "0.2",
                         "--seed", "4", "--out", tmp.file("c" + suffix + ".csv"), "--threads",
                         threads}) == 0);
        REQUIRE(run_cli({"diagnose", "--p", "2", "--n", "80", "--seed", "6", "--out",
                         tmp.file("q" + suffix + ".csv"), "--threads", threads}) == 0);
    };
    run_with("1", "A");
    run_with("4", "B");
    REQUIRE(read_file(tmp.file("tA.csv")) == read_file(tmp.file("tB.csv")));
    REQUIRE(read_file(tmp.file("cA.csv")) == read_file(tmp.file("cB.csv")));
    REQUIRE(read_file(tmp.file("qA.csv")) == read_file(tmp.file("qB.csv")));
}
