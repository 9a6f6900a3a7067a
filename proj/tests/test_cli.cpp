#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "fracfield/cli.hpp"

using fracfield::cli::run;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("fracfield_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("check suites pass and write reports", "[cli]") {
    TempDir tmp;
    for (const std::string suite :
         {"gauge", "bianchi", "vector-identities", "continuity", "el", "asymmetric"}) {
        const std::string out = tmp.file(suite + ".json");
        const int rc = run({"check", "--suite", suite, "--alpha", "0.5", "--beta", "0.5",
                            "--seed", "7", "--out", out});
        INFO("suite " << suite);
        CHECK(rc == 0);
        const auto doc = fracfield::ordered_json::parse(slurp(out));
        CHECK(doc.at("suite") == suite);
        CHECK(doc.at("pass") == true);
        CHECK(doc.at("residual_norms").size() == 6);
        // canonical key order
        const std::vector<std::string> expected{"gauss", "ampere", "no_monopole",
                                                "faraday", "bianchi", "continuity"};
        std::vector<std::string> got;
        for (auto it = doc.at("residual_norms").begin(); it != doc.at("residual_norms").end();
             ++it)
            got.push_back(it.key());
        CHECK(got == expected);
    }
}

TEST_CASE("identical configuration gives byte-identical output", "[cli]") {
    TempDir tmp;
    const std::string out1 = tmp.file("r1.json");
    const std::string out2 = tmp.file("r2.json");
    const std::vector<std::string> base{"check", "--suite", "gauge", "--grid", "6,6,6,6",
                                        "--alpha", "0.5", "--seed", "42"};
    auto with_out = [&](const std::string& o) {
        auto v = base;
        v.push_back("--out");
        v.push_back(o);
        return v;
    };
    REQUIRE(run(with_out(out1)) == 0);
    REQUIRE(run(with_out(out2)) == 0);
    CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("JSON config supplies defaults and flags override it", "[cli]") {
    TempDir tmp;
    const std::string cfg = tmp.file("cfg.json");
    std::ofstream(cfg) << R"({"suite": "gauge", "grid": [6,6,6,6], "alpha": 0.5,)"
                       << R"( "seed": 42, "tol": "1e-12"})";

    const std::string from_cfg = tmp.file("from_cfg.json");
    const std::string from_flags = tmp.file("from_flags.json");
    REQUIRE(run({"check", "--config", cfg, "--out", from_cfg}) == 0);
    REQUIRE(run({"check", "--suite", "gauge", "--grid", "6,6,6,6", "--alpha", "0.5",
                 "--seed", "42", "--tol", "1e-12", "--out", from_flags}) == 0);
    CHECK(slurp(from_cfg) == slurp(from_flags));

    SECTION("explicit flag wins over the config value") {
        const std::string overridden = tmp.file("override.json");
        const std::string direct = tmp.file("direct.json");
        REQUIRE(run({"check", "--config", cfg, "--seed", "43", "--out", overridden}) == 0);
        REQUIRE(run({"check", "--suite", "gauge", "--grid", "6,6,6,6", "--alpha", "0.5",
                     "--seed", "43", "--tol", "1e-12", "--out", direct}) == 0);
        CHECK(slurp(overridden) == slurp(direct));
        CHECK(slurp(overridden) != slurp(from_cfg));
    }
}

TEST_CASE("exit codes", "[cli]") {
    TempDir tmp;
    SECTION("suite failure is exit 1") {
        // an impossible tolerance forces a failing report
        CHECK(run({"check", "--suite", "gauge", "--grid", "5,5,5,5", "--alpha", "0.5",
                   "--tol", "0", "--out", tmp.file("fail.json")}) == 1);
    }
    SECTION("usage errors are exit 2") {
        CHECK(run({"definitely-not-a-command"}) == 2);
        CHECK(run({"check", "--suite", "nope", "--out", tmp.file("x.json")}) == 2);
        CHECK(run({"check", "--suite", "gauge", "--alpha", "2.0"}) == 2);
        CHECK(run({"check", "--suite", "gauge", "--grid", "8,8"}) == 2);
    }
    SECTION("unreadable input is exit 2") {
        CHECK(run({"deriv", "--input", tmp.file("absent.csv")}) == 2);
        CHECK(run({"wave", "--init", tmp.file("u.csv") + "," + tmp.file("v.csv")}) == 2);
    }
}

TEST_CASE("deriv matches the library operator", "[cli]") {
    TempDir tmp;
    fracfield::SampledLine f;
    f.origin = 0.0;
    f.h = 1.0 / 63;
    f.values.resize(64);
    for (int i = 0; i < 64; ++i) f.values[i] = f.x(i) * f.x(i);
    const std::string in = tmp.file("in.csv");
    fracfield::write_sampled_line_csv(in, f);

    const std::string out = tmp.file("out.csv");
    REQUIRE(run({"deriv", "--input", in, "--op", "left", "--alpha", "0.5", "--out", out}) == 0);
    const fracfield::SampledLine got = fracfield::read_sampled_line_csv(out);
    const fracfield::SampledLine expect = fracfield::left_rl_deriv(f, 0.5);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK_THAT(got.values[i], Catch::Matchers::WithinRel(expect.values[i], 1e-15));
}

TEST_CASE("dispersion sweep emits omega = |k| c at order one", "[cli]") {
    TempDir tmp;
    const std::string out = tmp.file("disp.csv");
    REQUIRE(run({"dispersion", "--alpha", "1", "--kmax", "4", "--c", "1", "--out", out}) == 0);
    CHECK(slurp(out) == "k,alpha,omega\n0,1,0\n1,1,1\n2,1,2\n3,1,3\n4,1,4\n");
}

TEST_CASE("wave subcommand reproduces the solver output", "[cli]") {
    TempDir tmp;
    const double L = 2.0 * M_PI;
    fracfield::SampledLine u0, v0;
    u0.h = v0.h = L / 16;
    u0.values.resize(16);
    v0.values.assign(16, 0.0);
    for (int i = 0; i < 16; ++i) u0.values[i] = std::cos(u0.x(i));
    const std::string u_path = tmp.file("u0.csv");
    const std::string v_path = tmp.file("v0.csv");
    fracfield::write_sampled_line_csv(u_path, u0);
    fracfield::write_sampled_line_csv(v_path, v0);

    const std::string out = tmp.file("wave.csv");
    REQUIRE(run({"wave", "--alpha", "0.5", "--modes", "3", "--L", "6.283185307179586",
                 "--t-end", "1", "--dt-out", "0.25", "--init", u_path + "," + v_path,
                 "--out", out}) == 0);

    fracfield::WaveConfig cfg;
    cfg.alpha = 0.5;
    cfg.n_modes = 3;
    cfg.L = 6.283185307179586;
    cfg.t_samples = {0.0, 0.25, 0.5, 0.75, 1.0};
    // compare against the solver run on the same round-tripped inputs the
    // CLI parsed
    const auto u0_read = fracfield::read_sampled_line_csv(u_path);
    const auto v0_read = fracfield::read_sampled_line_csv(v_path);
    std::ostringstream expect;
    fracfield::write_wave_series_csv(expect, fracfield::solve_wave(u0_read, v0_read, cfg));
    CHECK(slurp(out) == expect.str());
}

TEST_CASE("thread cap does not change the bytes produced", "[cli]") {
    TempDir tmp;
    const std::string in_process = tmp.file("inproc.json");
    REQUIRE(run({"check", "--suite", "gauge", "--grid", "8,8,8,8", "--alpha", "0.5",
                 "--seed", "11", "--out", in_process}) == 0);

    const std::string capped = tmp.file("capped.json");
    const std::string cmd = std::string("FRACFIELD_THREADS=1 ") + FRACFIELD_CLI_PATH +
                            " check --suite gauge --grid 8,8,8,8 --alpha 0.5 --seed 11"
                            " --out " + capped;
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(slurp(capped) == slurp(in_process));
}

TEST_CASE("gateaux subcommand emits the report schema", "[cli]") {
    TempDir tmp;
    const std::string out = tmp.file("gateaux.json");
    REQUIRE(run({"gateaux", "--grid", "5,5,5,5", "--alpha", "0.5", "--seed", "3",
                 "--out", out}) == 0);
    const auto doc = fracfield::ordered_json::parse(slurp(out));
    REQUIRE(doc.contains("epsilons"));
    REQUIRE(doc.contains("gaps"));
    REQUIRE(doc.contains("inner_product"));
    REQUIRE(doc.at("pass") == true);
    CHECK(doc.at("epsilons").size() == 3);
    CHECK(doc.at("gaps").size() == 3);
}
