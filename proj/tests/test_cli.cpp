#include <degen/fixtures.hpp>
#include <degen/json_io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DEGEN_CLI_PATH
#error "DEGEN_CLI_PATH must be defined"
#endif

using namespace degen;
namespace fx = degen::fixtures;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "degen_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out = work_dir() / "cli_output.txt";
    std::string cmd = std::string(DEGEN_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

std::string write_doc(const std::string& name, const Json& doc) {
    fs::path p = work_dir() / name;
    save_file(p.string(), doc);
    return p.string();
}

} // namespace

TEST_CASE("validate: exit codes 0, 1 and 2") {
    auto f = fx::k3_chain(3);
    std::string good = write_doc("k3_chain3.json", to_json(f.config, f.transfers));
    CHECK(run("validate " + good).exit_code == 0);

    // genus-formula violation: a genus-0 curve with no triple points
    auto broken = fx::k3_tetrahedron();
    broken.config.triple_points.clear();
    for (auto& curve : broken.config.double_curves) curve.triple_point_count = 0;
    std::string bad = write_doc("broken.json", to_json(broken.config, broken.transfers));
    auto r = run("validate " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("genus-formula") != std::string::npos);

    fs::path malformed = work_dir() / "malformed.json";
    std::ofstream(malformed) << "{ not json";
    CHECK(run("validate " + malformed.string()).exit_code == 2);
    CHECK(run("validate " + (work_dir() / "does_not_exist.json").string()).exit_code == 2);
}

TEST_CASE("classify reports type, index and agreement") {
    auto f = fx::k3_type1();
    std::string path = write_doc("k3_type1.json", to_json(f.config, f.transfers));
    auto r = run("classify " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("type: I") != std::string::npos);
    CHECK(r.output.find("monodromy index: 1") != std::string::npos);
    CHECK(r.output.find("(ok)") != std::string::npos);

    auto rp2 = fx::enriques_rp2();
    std::string rp2_path = write_doc("enriques_rp2.json", to_json(rp2.config, rp2.transfers));
    auto r2 = run("classify " + rp2_path);
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("type: III") != std::string::npos);
    CHECK(r2.output.find("RealProjectivePlane") != std::string::npos);
    CHECK(r2.output.find("via canonical cover") != std::string::npos);

    // the rejected abelian chain exits 1
    auto anti = fx::abelian_chain(3);
    std::string anti_path = write_doc("abelian_chain3.json", to_json(anti.config, anti.transfers));
    CHECK(run("classify " + anti_path).exit_code == 1);
}

TEST_CASE("every example generator output passes validate and classify") {
    fs::path dir = work_dir() / "examples";
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> examples = {
        {"k3_chain 3", "k3_chain3.json"},
        {"k3_tetrahedron", "k3_tetrahedron.json"},
        {"abelian_cycle 4", "abelian_cycle4.json"},
        {"abelian_csaszar", "abelian_csaszar.json"},
        {"enriques_chain 3", "enriques_chain3.json"},
        {"enriques_rp2", "enriques_rp2.json"},
        {"bielliptic_cycle 4", "bielliptic_cycle4.json"},
        {"bielliptic_klein", "bielliptic_klein.json"},
        {"cy3_simplex_boundary", "cy3_simplex_boundary.json"},
    };
    for (const auto& [args, file] : examples) {
        auto r = run("examples " + args + " -o " + dir.string());
        REQUIRE(r.exit_code == 0);
        std::string path = (dir / file).string();
        CHECK(run("validate " + path).exit_code == 0);
        if (file.rfind("cy3", 0) == 0)
            CHECK(run("cy3 " + path).exit_code == 0);
        else
            CHECK(run("classify " + path).exit_code == 0);
    }
    CHECK(run("examples no_such_fixture -o " + dir.string()).exit_code == 2);
}

TEST_CASE("json output is byte-identical across runs") {
    auto f = fx::abelian_cycle(3);
    std::string path = write_doc("abelian_cycle3.json", to_json(f.config, f.transfers));
    auto a = run("classify --format json " + path);
    auto b = run("classify --format json " + path);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
    CHECK(a.output.front() == '{');
}

TEST_CASE("spectral and coherent subcommands run on fixtures") {
    auto f = fx::abelian_cycle(4);
    std::string path = write_doc("abelian_cycle4.json", to_json(f.config, f.transfers));
    auto r = run("spectral " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("E2 dims:") != std::string::npos);
    auto c = run("coherent " + path);
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("(1, 2, 1)") != std::string::npos);

    // characteristic 2 is rejected as a semantic failure
    CHECK(run("coherent --field-char 2 " + path).exit_code == 1);
}

TEST_CASE("cover subcommand validates pairs and checks type transfer") {
    std::string path = write_doc("k3_over_enriques_rp2.json",
                                 to_json(covers::k3_over_enriques_rp2()));
    auto r = run("cover " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("type transfer: pass") != std::string::npos);

    auto broken = covers::abelian_over_bielliptic_cycle(3);
    broken.component_map[0].base = (broken.component_map[0].base + 1) % 3;
    std::string bad = write_doc("broken_cover.json", to_json(broken));
    CHECK(run("cover " + bad).exit_code == 1);

    // a surface file is the wrong kind
    auto f = fx::k3_chain(2);
    std::string surface = write_doc("k3_chain2.json", to_json(f.config, f.transfers));
    CHECK(run("cover " + surface).exit_code == 2);
}

TEST_CASE("neron subcommand prints the dictionary") {
    auto r = run("neron");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Type I") != std::string::npos);
    CHECK(r.output.find("Type III") != std::string::npos);
    CHECK(run("neron --rank 1").exit_code == 0);
    CHECK(run("neron --rank 7").exit_code == 2);
}

TEST_CASE("cy3 subcommand accepts the sphere and rejects the torus") {
    std::string sphere = write_doc("cy3_sphere.json", to_json(fx::cy3_simplex_boundary()));
    auto r = run("cy3 " + sphere);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Type IV") != std::string::npos);
    CHECK(r.output.find("N^3 != 0") != std::string::npos);

    std::string torus = write_doc("cy3_torus.json", to_json(fx::cy3_three_torus()));
    auto t = run("cy3 " + torus);
    CHECK(t.exit_code == 1);
    CHECK(t.output.find("REJECTED") != std::string::npos);
}
