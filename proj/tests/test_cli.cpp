// Drives the installed CLI binary end to end: wire formats, determinism and
// the exit-code contract (0 ok, 2 non-convergence, 64 usage, 65 data).

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout (stderr discarded unless merged)
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string command = std::string(CTRANS_CLI_PATH) + " " + args +
                                (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string floyd() { return std::string(CTRANS_TEST_DATA_DIR) + "/floyd.txt"; }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << contents;
    return path;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, sep)) fields.push_back(field);
    return fields;
}

}  // namespace

TEST_CASE("fit emits the result as JSON") {
    const auto run = run_cli("fit " + floyd() + " --family mg");
    CHECK(run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(run.output);
    CHECK(parsed["family"] == "mg");
    CHECK(std::abs(parsed["neg_log_lik"].get<double>() - 380.665) < 0.01);
    CHECK(std::abs(parsed["alpha"].get<double>() - 0.719) < 0.005);
    CHECK(parsed["converged"] == true);
    CHECK(parsed["x0"] == 318.0);
}

TEST_CASE("fit exit codes") {
    CHECK(run_cli("fit " + floyd() + " --family nope").exit_code == 64);
    CHECK(run_cli("fit /no/such/file.txt --family mg").exit_code == 65);

    const auto empty = temp_file("ctrans_cli_empty.txt", "# nothing here\n");
    CHECK(run_cli("fit " + empty.string() + " --family mg").exit_code == 65);

    const auto junk = temp_file("ctrans_cli_junk.txt", "318\n726\nnot-a-number\n");
    const auto bad = run_cli("fit " + junk.string() + " --family mg", true);
    CHECK(bad.exit_code == 65);
    CHECK(bad.output.find("line 3") != std::string::npos);

    const auto tiny = temp_file("ctrans_cli_tiny.txt", "5\n");
    CHECK(run_cli("fit " + tiny.string() + " --family mg").exit_code == 65);

    // capping the barrier loop forces a non-converged (but still printed) fit
    const auto capped = run_cli("fit " + floyd() + " --family mg --max-outer 1");
    CHECK(capped.exit_code == 2);
    CHECK(nlohmann::json::parse(capped.output)["converged"] == false);
}

TEST_CASE("compare emits a ranked TSV") {
    const auto run = run_cli("compare " + floyd() + " --set modified");
    CHECK(run.exit_code == 0);
    const auto lines = lines_of(run.output);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] ==
          "family\tnegloglik\taic\taicc\tbic\trank_negloglik\trank_aic\trank_aicc\trank_bic");
    // the equivalent triple shares rank 1 everywhere
    for (int i = 1; i <= 3; ++i) {
        const auto fields = split(lines[i], '\t');
        REQUIRE(fields.size() == 9);
        const bool triple = fields[0] == "mg" || fields[0] == "mr18a" || fields[0] == "mr18b";
        CHECK(triple);
        CHECK(fields[1] == "380.665");
        CHECK(fields[5] == "1");
        CHECK(fields[6] == "1");
        CHECK(fields[7] == "1");
        CHECK(fields[8] == "1");
    }
    const auto last = split(lines[8], '\t');
    CHECK(last[0] == "pareto");
    CHECK(last[5] == "8");

    // byte-identical across runs
    CHECK(run_cli("compare " + floyd() + " --set modified").output == run.output);
}

TEST_CASE("compare on the unmodified set and bad flags") {
    const auto run = run_cli("compare " + floyd() + " --set unmodified");
    CHECK(run.exit_code == 0);
    const auto lines = lines_of(run.output);
    REQUIRE(lines.size() == 9);
    CHECK(split(lines[1], '\t')[0] == "g");
    const auto last = split(lines[8], '\t');
    CHECK(last[0] == "pareto");
    CHECK(last[5] == "8");
    CHECK(last[6] == "8");

    CHECK(run_cli("compare " + floyd() + " --set bogus").exit_code == 64);

    const auto single = temp_file("ctrans_cli_single.txt", "5\n");
    CHECK(run_cli("compare " + single.string()).exit_code == 65);
}

TEST_CASE("scan writes the validity CSV") {
    const auto run = run_cli("scan g --x=-0.5:4.5:0.1 --y=-3.5:3.5:0.1");
    CHECK(run.exit_code == 0);
    const auto lines = lines_of(run.output);
    REQUIRE(lines.size() == 1 + 51 * 71);
    CHECK(lines[0] == "param1,param2,valid");
    // spot checks: inside the modified range vs clearly outside
    CHECK(run.output.find("\n1,1,1\n") != std::string::npos);
    CHECK(run.output.find("\n4.5,3.5,0\n") != std::string::npos);

    const auto strip = run_cli("scan ma --x=-1.5:3.5:0.1");
    CHECK(strip.exit_code == 0);
    const auto strip_lines = lines_of(strip.output);
    REQUIRE(strip_lines.size() == 52);
    CHECK(strip_lines[0] == "param1,valid");
    for (std::size_t i = 1; i < strip_lines.size(); ++i) {
        const auto fields = split(strip_lines[i], ',');
        const double lambda = std::stod(fields[0]);
        const bool expected = lambda >= -1.0 - 1e-9 && lambda <= 3.0 + 1e-9;
        CHECK(fields[1] == (expected ? "1" : "0"));
    }
}

TEST_CASE("scan usage errors") {
    CHECK(run_cli("scan g --x=0:1:0").exit_code == 64);
    CHECK(run_cli("scan g --x=1:0:0.1").exit_code == 64);
    CHECK(run_cli("scan g --x=abc").exit_code == 64);
    CHECK(run_cli("scan g --x=0:1:0.1").exit_code == 64);  // missing --y for arity 2
    CHECK(run_cli("scan ma --x=0:1:0.1 --y=0:1:0.1").exit_code == 64);
    CHECK(run_cli("scan nope --x=0:1:0.1").exit_code == 64);
}

TEST_CASE("sample is deterministic and validates parameters") {
    const std::string args = "sample mg --params 1,1 --baseline pareto:1,1 -n 3 --seed 7";
    const auto first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(lines_of(first.output).size() == 3);
    CHECK(run_cli(args).output == first.output);

    // boundary of the extended range is accepted
    CHECK(run_cli("sample ma --params 3 --baseline pareto:1,1 -n 2 --seed 1").exit_code == 0);
    // inside the published range but with an invalid kernel: refused
    CHECK(run_cli("sample g --params 0,-0.5 --baseline pareto:1,1 -n 2 --seed 1").exit_code ==
          64);
    CHECK(run_cli("sample g --params 0,-0.5 --baseline pareto:1,1 -n 2 --seed 1 --unchecked")
              .exit_code == 0);
    // outside the range: refused without --unchecked
    CHECK(run_cli("sample qt --params 2 --baseline pareto:1,1 -n 2 --seed 1").exit_code == 64);
    CHECK(run_cli("sample mg --params 1,1 -n 0 --seed 1").exit_code == 64);
    CHECK(run_cli("sample mg --params 1,1 --baseline cauchy:0,1 -n 2").exit_code == 64);
}

TEST_CASE("sample output re-ingests as a data file") {
    const auto run = run_cli("sample mg --params 0.5,1.5 --baseline pareto:318,0.7 -n 50 --seed 9");
    REQUIRE(run.exit_code == 0);
    const auto path = temp_file("ctrans_cli_roundtrip.txt", run.output);
    const auto reparsed = run_cli("fit " + path.string() + " --family pareto");
    CHECK(reparsed.exit_code == 0);
    CHECK(nlohmann::json::parse(reparsed.output)["n"] == 50);
}

TEST_CASE("curves reproduce the invalid-cdf pathology and model agreement") {
    const auto g = run_cli("curves " + floyd() + " --families g --points 533 --from 318 --to 850");
    CHECK(g.exit_code == 0);
    const auto lines = lines_of(g.output);
    std::size_t header_row = 0;
    while (header_row < lines.size() && lines[header_row].rfind("# hist,", 0) == 0) ++header_row;
    REQUIRE(lines[header_row] == "x,g_cdf,g_pdf");
    REQUIRE(lines.size() == header_row + 1 + 533);
    bool negative_cdf_in_interval = false;
    for (std::size_t i = header_row + 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        const double x = std::stod(fields[0]);
        const double cdf = std::stod(fields[1]);
        if (cdf < 0.0) {
            CHECK(x > 370.0);
            CHECK(x < 643.0);
            negative_cdf_in_interval = true;
        }
    }
    CHECK(negative_cdf_in_interval);

    const auto mg = run_cli("curves " + floyd() + " --families mg --points 200");
    CHECK(mg.exit_code == 0);
    double prev = -1.0;
    bool monotone = true;
    for (const auto& line : lines_of(mg.output)) {
        if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
        const double cdf = std::stod(split(line, ',')[1]);
        monotone = monotone && cdf >= prev - 1e-12 && cdf >= 0.0 && cdf <= 1.0;
        prev = cdf;
    }
    CHECK(monotone);

    const auto pair = run_cli("curves " + floyd() + " --families mg,mr18a --points 100");
    CHECK(pair.exit_code == 0);
    for (const auto& line : lines_of(pair.output)) {
        if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
        const auto fields = split(line, ',');
        REQUIRE(fields.size() == 5);
        CHECK(std::abs(std::stod(fields[1]) - std::stod(fields[3])) < 1e-9);
    }
}

TEST_CASE("curves validates the requested range") {
    CHECK(run_cli("curves " + floyd() + " --families mg --from 100 --to 850").exit_code == 64);
    CHECK(run_cli("curves " + floyd() + " --families mg --from 318 --to 100000").exit_code == 64);
    CHECK(run_cli("curves " + floyd() + " --families mg --from 850 --to 318").exit_code == 64);
}

TEST_CASE("the --out flag redirects output to a file") {
    const auto path = std::filesystem::temp_directory_path() / "ctrans_cli_out.csv";
    std::filesystem::remove(path);
    const auto run = run_cli("scan ma --x=-1.5:3.5:0.1 --out " + path.string());
    CHECK(run.exit_code == 0);
    CHECK(run.output.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "param1,valid");
}

TEST_CASE("check-data accepts the reference file and rejects others") {
    CHECK(run_cli("check-data " + floyd()).exit_code == 0);
    const auto other = temp_file("ctrans_cli_other.txt", "1\n2\n3\n4\n5\n");
    CHECK(run_cli("check-data " + other.string()).exit_code == 65);
}

TEST_CASE("usage errors from the argument parser") {
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("fit").exit_code == 64);
    CHECK(run_cli("--help").exit_code == 0);
}
