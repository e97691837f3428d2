// End-to-end checks of the droplet-fall binary: subcommand wiring and the
// documented exit codes (0 ok, 2 config, 4 domain exit, 5 stability).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(QDF_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "qdf_cli" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("help and version exit cleanly") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("--version") == 0);
}

TEST_CASE("analytic subcommand writes its outputs") {
    const fs::path dir = fresh_dir("analytic");
    const int rc = run_cli("analytic --set evolution.n_steps=100 --set grid.n=512 "
                           "--set grid.dx=0.065 --set droplet.G1=1 --set droplet.G2=1 "
                           "--set 'diagnostics.probes=[5]' --out " +
                           dir.string());
    CHECK(rc == 0);
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "timeseries.csv"));
    CHECK(fs::exists(dir / "probe_5.csv"));
}

TEST_CASE("probes outside the grid are load-time config errors") {
    // default probe x = 20 does not fit this grid
    CHECK(run_cli("analytic --set grid.n=512 --set grid.dx=0.065") == 2);
}

TEST_CASE("config errors exit with code 2") {
    CHECK(run_cli("evolve --set grid.n=1000") == 2);                       // not a power of two
    CHECK(run_cli("evolve --set potential.bogus=1") == 2);                 // unknown key
    CHECK(run_cli("evolve --set droplet.N=1 --set droplet.mu_ratio=0.5") == 2);
    CHECK(run_cli("preset fig99") == 2);
    CHECK(run_cli("evolve --config /nonexistent.json") == 2);
}

TEST_CASE("domain exit maps to code 4") {
    const fs::path dir = fresh_dir("exit4");
    // +-32 domain with k_max ~ 50; the a = 9.8 droplet reaches the guard
    // band at t ~ 2.5 with momentum ~ 25, well inside the band limit
    const int rc = run_cli(
        "evolve --set grid.n=1024 --set grid.dx=0.0625 --set droplet.G1=1 --set droplet.G2=1 "
        "--set droplet.mu_ratio=0.9 --set potential.variant=constant --set potential.a=9.8 "
        "--set evolution.dt=0.0005 --set evolution.n_steps=6000 --set evolution.record_every=200 "
        "--out " +
        dir.string());
    CHECK(rc == 4);
}

TEST_CASE("stability enforcement maps to code 5") {
    const fs::path dir = fresh_dir("exit5");
    const int rc = run_cli(
        "stability --enforce --threshold 1e-12 --set grid.n=1024 --set grid.dx=0.065 "
        "--set droplet.G1=1 --set droplet.G2=1 --set potential.variant=constant "
        "--set potential.a=2.0 --set evolution.dt=0.0005 --set evolution.n_steps=200 "
        "--set noise.n_realizations=2 --out " +
        dir.string());
    CHECK(rc == 5);
    CHECK(fs::exists(dir / "stability_report.json"));
}
