#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fracfield/io.hpp"
#include "fracfield/rng.hpp"

using namespace fracfield;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("fracfield_io_" + std::to_string(::getpid()) + "_" +
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

TEST_CASE("sampled line CSV round trip", "[io]") {
    TempDir tmp;
    SampledLine f;
    f.origin = -1.5;
    f.h = 0.25;
    f.values = {0.0, 1.0, -2.5, 0.125, 3.14159, 1e-17};
    const std::string path = tmp.file("line.csv");
    write_sampled_line_csv(path, f);

    const SampledLine back = read_sampled_line_csv(path);
    REQUIRE(back.size() == f.size());
    CHECK(back.origin == f.origin);
    CHECK_THAT(back.h, Catch::Matchers::WithinRel(f.h, 1e-15));
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(back.values[i] == f.values[i]);

    SECTION("output uses LF endings and the required header") {
        const std::string text = slurp(path);
        CHECK(text.rfind("x,value\n", 0) == 0);
        CHECK(text.find('\r') == std::string::npos);
    }

    SECTION("writing twice is byte-identical") {
        const std::string again = tmp.file("line2.csv");
        write_sampled_line_csv(again, f);
        CHECK(slurp(again) == slurp(path));
    }
}

TEST_CASE("sampled line CSV rejects malformed input with file and row", "[io]") {
    TempDir tmp;

    SECTION("missing header") {
        const std::string path = tmp.file("noheader.csv");
        std::ofstream(path) << "0,1\n1,2\n";
        try {
            read_sampled_line_csv(path);
            FAIL("expected a parse error");
        } catch (const std::runtime_error& e) {
            const std::string msg = e.what();
            CHECK(msg.find(path) != std::string::npos);
            CHECK(msg.find(":1:") != std::string::npos);
        }
    }

    SECTION("bad number names the row") {
        const std::string path = tmp.file("badnum.csv");
        std::ofstream(path) << "x,value\n0,1\n0.5,oops\n";
        try {
            read_sampled_line_csv(path);
            FAIL("expected a parse error");
        } catch (const std::runtime_error& e) {
            const std::string msg = e.what();
            CHECK(msg.find(":3:") != std::string::npos);
        }
    }

    SECTION("wrong column count") {
        const std::string path = tmp.file("cols.csv");
        std::ofstream(path) << "x,value\n0,1,2\n";
        CHECK_THROWS_AS(read_sampled_line_csv(path), std::runtime_error);
    }

    SECTION("non-uniform spacing") {
        const std::string path = tmp.file("nonuniform.csv");
        std::ofstream(path) << "x,value\n0,1\n0.1,2\n0.35,3\n";
        CHECK_THROWS_AS(read_sampled_line_csv(path), std::runtime_error);
    }

    SECTION("missing file") {
        CHECK_THROWS_AS(read_sampled_line_csv(tmp.file("absent.csv")), std::runtime_error);
    }

    SECTION("CRLF input is tolerated") {
        const std::string path = tmp.file("crlf.csv");
        std::ofstream(path, std::ios::binary) << "x,value\r\n0,1\r\n0.5,2\r\n1,3\r\n";
        const SampledLine f = read_sampled_line_csv(path);
        REQUIRE(f.size() == 3);
        CHECK(f.values[2] == 3.0);
    }
}

TEST_CASE("field snapshot CSV and sidecar round trip", "[io]") {
    TempDir tmp;
    const Grid g = Grid::box({2, 3, 4, 5}, {0, -1, 0, 0}, {1, 1, 2, 1});
    const FracScheme s = FracScheme::uniform(0.5, 0.75, g.a, g.b);
    Rng rng(77);
    const ScalarField f = random_field(g, rng);

    const std::string csv = tmp.file("component.csv");
    const std::string sidecar = tmp.file("component.json");
    write_field_component_csv(csv, f);
    write_snapshot_sidecar(sidecar, g, s);

    const auto [g2, s2] = read_snapshot_sidecar(sidecar);
    CHECK(g2.same_as(g));
    CHECK(s2.alpha == s.alpha);
    CHECK(s2.beta == s.beta);

    const ScalarField back = read_field_component_csv(csv, g2);
    CHECK(max_abs_diff(f, back) == 0.0);

    SECTION("header is the index-value schema") {
        CHECK(slurp(csv).rfind("i0,i1,i2,i3,value\n", 0) == 0);
    }
}

TEST_CASE("wave series CSV layout", "[io]") {
    TempDir tmp;
    WaveConfig cfg;
    cfg.alpha = 1.0;
    cfg.n_modes = 1;
    cfg.t_samples = {0.0, 0.5};
    SampledLine u0;
    u0.h = cfg.L / 8;
    u0.values.resize(8);
    for (int i = 0; i < 8; ++i) u0.values[i] = std::cos(u0.x(i));
    SampledLine v0 = u0;
    v0.values.assign(8, 0.0);

    const WaveSeries series = solve_wave(u0, v0, cfg);
    const std::string path = tmp.file("wave.csv");
    write_wave_series_csv(path, series);
    const std::string text = slurp(path);
    CHECK(text.rfind("t,x,u\n", 0) == 0);
    // header plus one row per (time, sample)
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 2 * 8);
}

TEST_CASE("dispersion CSV layout", "[io]") {
    std::ostringstream os;
    write_dispersion_csv(os, {{0.0, 1.0, 0.0}, {1.0, 1.0, 1.0}, {2.0, 0.5, 1.0}});
    CHECK(os.str() == "k,alpha,omega\n0,1,0\n1,1,1\n2,0.5,1\n");
}
