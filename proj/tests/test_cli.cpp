#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "klrc/cartan.hpp"
#include "klrc/io.hpp"
#include "klrc/klr_algebra.hpp"
#include "klrc_cli/cli.hpp"

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = klrc_cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) {
    return std::string(KLRC_DATA_DIR) + "/" + name;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream stream(path);
    stream << text;
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("datum validate accepts the shipped data files") {
    for (const std::string name : {"sl2.json", "a2.json", "b2.json", "g2.json",
                                   "a1affine.json"}) {
        const CliResult result = run({"datum", "validate", "--datum", data_file(name)});
        CHECK(result.exit_code == 0);
        CHECK(result.out.find("valid rank=") == 0);
    }
    const CliResult json = run({"datum", "validate", "--datum", data_file("a2.json"),
                                "--format", "json"});
    CHECK(json.exit_code == 0);
    CHECK(json.out == "{\"labels\":[\"1\",\"2\"],\"bilinear\":[[2,-1],[-1,2]]}\n");
}

TEST_CASE("char simple prints the structure character") {
    const CliResult result = run({"char", "simple", "--datum", data_file("a2.json"),
                                  "--i", "1", "--j", "2", "--c", "1", "--n", "0"});
    CHECK(result.exit_code == 0);
    CHECK(result.out == "(1)*[1,2]\n");
}

TEST_CASE("char shuffle merges two word characters") {
    const CliResult result = run({"char", "shuffle", "--datum", data_file("a2.json"),
                                  "--left", "1,2", "--right", "1"});
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("[1,1,2]") != std::string::npos);
    CHECK(result.out.find("[1,2,1]") != std::string::npos);
    CHECK(result.out.find("q+q^-1") != std::string::npos);
}

TEST_CASE("char stats reports the per-vertex statistics") {
    const CliResult result = run({"char", "stats", "--datum", data_file("a2.json"),
                                  "--i", "1", "--j", "2", "--c", "2", "--n", "1"});
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("i=1 eps=1 eps_vee=2") != std::string::npos);

    const CliResult from_file = [&] {
        const klrc::CartanDatum d = klrc::load_datum(data_file("a2.json"));
        klrc::Character ch(klrc::RootVector({1, 1}));
        ch.add_term({0, 1}, klrc::LaurentPoly::one());
        const auto path = write_temp("klrc_cli_char.json", klrc::character_to_json(d, ch));
        return run({"char", "stats", "--datum", data_file("a2.json"), "--input", path.string()});
    }();
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.out.find("i=1 eps=0 eps_vee=1 wt=-1 jump=0") != std::string::npos);
}

TEST_CASE("char serre kills the degree a+1 structure character") {
    const CliResult result = run({"char", "serre", "--datum", data_file("a2.json"),
                                  "--i", "1", "--j", "2", "--c", "2", "--n", "1"});
    CHECK(result.exit_code == 0);
    CHECK(result.out == "0\n");
}

TEST_CASE("klr multiply consumes element files and emits JSON") {
    const klrc::CartanDatum d = klrc::load_datum(data_file("sl2.json"));
    const klrc::KlrAlgebra algebra(d);
    const auto lhs = write_temp("klrc_cli_lhs.json",
                                klrc::klr_element_to_json(d, algebra.dot_generator({0, 0}, 0)));
    const auto rhs = write_temp(
        "klrc_cli_rhs.json", klrc::klr_element_to_json(d, algebra.crossing_generator({0, 0}, 0)));
    const CliResult result = run({"klr", "multiply", "--datum", data_file("sl2.json"),
                                  "--lhs", lhs.string(), "--rhs", rhs.string()});
    CHECK(result.exit_code == 0);
    const klrc::KlrElement product = klrc::klr_element_from_json(d, result.out);
    klrc::KlrElement expected(klrc::RootVector({2}));
    expected.add_term(klrc::PbwMonomial{{0, 0}, {0}, {0, 1}}, 1);
    expected.add_term(klrc::PbwMonomial{{0, 0}, {}, {0, 0}}, 1);
    CHECK(product == expected);
}

TEST_CASE("klr dim prints the graded dimension series") {
    const CliResult result = run({"klr", "dim", "--datum", data_file("sl2.json"),
                                  "--nu", "2", "--max-deg", "4"});
    CHECK(result.exit_code == 0);
    CHECK(result.out == "q^-2+3+5*q^2+7*q^4\n");
}

TEST_CASE("klr cyclotomic-dim emits the CSV row from the build") {
    const CliResult result = run({"klr", "cyclotomic-dim", "--datum", data_file("sl2.json"),
                                  "--lambda", "2", "--nu", "2", "--format", "csv"});
    CHECK(result.exit_code == 0);
    CHECK(result.out == "nu,lambda,dim,graded_dim\n\"2\",\"2\",4,q^-2+2+q^2\n");

    const CliResult plain = run({"klr", "cyclotomic-dim", "--datum", data_file("sl2.json"),
                                 "--lambda", "2", "--nu", "2"});
    CHECK(plain.out == "4\n");
}

TEST_CASE("klr nilpotency lists strand nilpotency degrees") {
    const CliResult result = run({"klr", "nilpotency", "--datum", data_file("sl2.json"),
                                  "--lambda", "2", "--nu", "2"});
    CHECK(result.exit_code == 0);
    CHECK(result.out == "2,2\n");
    const CliResult csv = run({"klr", "nilpotency", "--datum", data_file("sl2.json"),
                               "--lambda", "2", "--nu", "2", "--format", "csv"});
    CHECK(csv.out == "strand,nilpotency\n1,2\n2,2\n");
}

TEST_CASE("crystal graph renders DOT deterministically") {
    const std::vector<std::string> args{"crystal", "graph", "--datum", data_file("sl2.json"),
                                        "--depth", "2"};
    const CliResult first = run(args);
    const CliResult second = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("digraph crystal {") == 0);

    const CliResult json = run({"crystal", "graph", "--datum", data_file("a2.json"),
                                "--lambda", "1,0", "--depth", "6", "--format", "json"});
    CHECK(json.exit_code == 0);
    CHECK(json.out.find("\"complete\":true") != std::string::npos);
    CHECK(json.err.empty());

    const CliResult truncated = run({"crystal", "graph", "--datum", data_file("a2.json"),
                                     "--lambda", "1,1", "--depth", "1"});
    CHECK(truncated.exit_code == 0);
    CHECK(truncated.err.find("WARNING IncompleteCrystal") == 0);
}

TEST_CASE("crystal mult counts nodes of one weight") {
    const CliResult result = run({"crystal", "mult", "--datum", data_file("a2.json"),
                                  "--lambda", "1,1", "--nu", "1,1"});
    CHECK(result.exit_code == 0);
    CHECK(result.out == "2\n");

    const CliResult binf = run({"crystal", "mult", "--datum", data_file("a2.json"),
                                "--nu", "2,1"});
    CHECK(binf.exit_code == 0);
    CHECK(binf.out == "2\n");
}

TEST_CASE("crystal verify reports suite results and exit status") {
    const CliResult result = run({"crystal", "verify", "--datum", data_file("a2.json"),
                                  "--suite", "C", "--depth", "4"});
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("suite=C") == 0);
    CHECK(result.out.find("PASS") != std::string::npos);

    for (const std::string suite : {"KS", "PSI", "JUMP", "EPSJUMP"}) {
        const CliResult other = run({"crystal", "verify", "--datum", data_file("b2.json"),
                                     "--suite", suite, "--depth", "3"});
        CHECK(other.exit_code == 0);
        CHECK(other.out.find("PASS") != std::string::npos);
    }
}

TEST_CASE("usage problems exit with code one and an ERROR line") {
    const CliResult missing = run({"char", "simple", "--i", "1", "--j", "2", "--c", "1",
                                   "--n", "0"});
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("ERROR UsageError") == 0);

    const CliResult negative = run({"crystal", "mult", "--datum", data_file("a2.json"),
                                    "--nu", "1,-1"});
    CHECK(negative.exit_code == 1);
    CHECK(negative.err.find("ERROR UsageError") == 0);

    const CliResult unknown = run({"char", "simple", "--datum", data_file("a2.json"),
                                   "--i", "3", "--j", "2", "--c", "1", "--n", "0"});
    CHECK(unknown.exit_code == 1);
    CHECK(unknown.err.find("ERROR UnknownVertex") == 0);

    const CliResult missing_file = run({"datum", "validate", "--datum", "/nonexistent.json"});
    CHECK(missing_file.exit_code == 1);
    CHECK(missing_file.err.find("ERROR UsageError") == 0);

    const CliResult bad_range = run({"char", "simple", "--datum", data_file("a2.json"),
                                     "--i", "1", "--j", "2", "--c", "1", "--n", "5"});
    CHECK(bad_range.exit_code == 1);
    CHECK(bad_range.err.find("ERROR IndexOutOfRange") == 0);
}

TEST_CASE("resource exhaustion exits with code two") {
    setenv("KLR_CRYSTAL_CAP_MB", "0", 1);
    const CliResult result = run({"klr", "cyclotomic-dim", "--datum", data_file("sl2.json"),
                                  "--lambda", "2", "--nu", "2"});
    unsetenv("KLR_CRYSTAL_CAP_MB");
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("ERROR CapExceeded") == 0);
}

TEST_CASE("help is printed on request") {
    const CliResult result = run({"--help"});
    CHECK(result.exit_code == 0);
    CHECK(!result.out.empty());
}

TEST_CASE("output lands in a file when requested") {
    const auto path = std::filesystem::temp_directory_path() / "klrc_cli_out.txt";
    std::filesystem::remove(path);
    const CliResult result = run({"char", "serre", "--datum", data_file("a2.json"), "--i", "1",
                                  "--j", "2", "--c", "2", "--n", "1", "--output", path.string()});
    CHECK(result.exit_code == 0);
    CHECK(result.out.empty());
    std::ifstream stream(path);
    std::string content((std::istreambuf_iterator<char>(stream)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "0\n");
    std::filesystem::remove(path);
}

}  // TEST_SUITE
