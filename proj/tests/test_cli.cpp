// End-to-end exercise of the command-line surface: exit-code contract,
// output schema, determinism, and the user-supplied r-matrix path.
//
// Usage: test_cli <path-to-cli-binary>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "pass" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <cli-binary>\n");
        return 2;
    }
    std::string cli = argv[1];
    std::string tmp = "cli_test_out";

    expect(run(cli + " list > /dev/null") == 0, "list exits 0");
    expect(run(cli + " verify twist-eq --twist PprimeRtilde --reps fund > /dev/null") == 0,
           "verify twist-eq --twist PprimeRtilde exits 0");
    expect(run(cli + " verify nonsense > /dev/null 2>&1") == 2, "unknown check exits 2");
    expect(run(cli + " verify twist-eq --twist Zork > /dev/null 2>&1") == 2,
           "unknown twist name exits 2");
    expect(run(cli + " bogus-subcommand > /dev/null 2>&1") == 2, "unknown subcommand exits 2");
    expect(run(cli + " eval --expr 'exp(' > /dev/null 2>&1") == 2, "parse error exits 2");
    expect(run(cli + " --help > /dev/null") == 0, "help exits 0");

    // a user-supplied non-solution of the classical equation: exit 1
    {
        std::ofstream f(tmp + ".json");
        f << R"({"entries": [{"a": "E12", "b": "E21", "value": "1"}]})";
        f.close();
        expect(run(cli + " cybe --r-file " + tmp + ".json > /dev/null") == 1,
               "cybe of a non-solution exits 1");
        expect(run(cli + " cybe --r Pprime > /dev/null") == 0, "cybe of a real solution exits 0");
    }

    // dual table markdown contains recorded extended-family rows
    {
        expect(run(cli + " dual --r Etheta --format md --out " + tmp + ".md") == 0,
               "dual --r Etheta exits 0");
        std::string md = slurp(tmp + ".md");
        expect(md.find("[X12, X21] | X31") != std::string::npos,
               "dual table markdown contains [X12, X21] = X31");
        expect(md.find("theta") != std::string::npos, "dual table markdown is symbolic in theta");
    }

    // JSON report schema
    {
        expect(run(cli + " verify dual-table --table Pprime --format json --out " + tmp + ".json") == 0,
               "verify dual-table emits json");
        auto j = nlohmann::json::parse(slurp(tmp + ".json"));
        bool schema = j.is_array() && !j.empty();
        if (schema) {
            const auto& r = j[0];
            schema = r.contains("check") && r["check"].is_string() && r.contains("inputs") &&
                     r["inputs"].is_object() && r.contains("status") &&
                     (r["status"] == "pass" || r["status"] == "fail" || r["status"] == "error") &&
                     r.contains("witness") && (r["witness"].is_object() || r["witness"].is_null()) &&
                     r.contains("reps") && r["reps"].is_array() && r.contains("elapsed_ms") &&
                     r["elapsed_ms"].is_number_integer();
        }
        expect(schema, "report json matches the documented schema");
    }

    // determinism: byte-identical md output across runs (timing zeroed)
    {
        expect(run(cli + " verify coproduct-table --table Ecan --no-timing --format md --out " +
                   tmp + "1.md") == 0,
               "first run exits 0");
        expect(run(cli + " verify coproduct-table --table Ecan --no-timing --format md --out " +
                   tmp + "2.md") == 0,
               "second run exits 0");
        std::string a = slurp(tmp + "1.md"), b = slurp(tmp + "2.md");
        expect(!a.empty() && a == b, "repeated runs are byte-identical");
        expect(a.find("## [pass]") != std::string::npos, "markdown sections carry a status badge");
    }

    // parameter specialization through the CLI surface
    expect(run(cli + " verify twist-eq --twist PprimeRtilde --param lambda=1/2 --reps fund "
                     "> /dev/null") == 0,
           "verify with --param lambda=1/2 exits 0");
    expect(run(cli + " verify twist-eq --twist PprimeRtilde --param lambda=1/0 > /dev/null 2>&1") != 0,
           "division by zero in a binding is rejected");

    // expression evaluation round trip
    {
        expect(run(cli + " eval --expr 'exp(H (x) sigma)' --legs fund,fund --out " + tmp +
                   ".json") == 0,
               "eval exits 0");
        auto j = nlohmann::json::parse(slurp(tmp + ".json"));
        expect(j.is_array() && j.size() == 9 && j[0].size() == 9, "eval emits a 9x9 matrix");
    }

    std::remove((tmp + ".json").c_str());
    std::remove((tmp + ".md").c_str());
    std::remove((tmp + "1.md").c_str());
    std::remove((tmp + "2.md").c_str());

    if (failures == 0) {
        std::printf("cli: all surface checks pass\n");
        return 0;
    }
    std::printf("cli: %d check(s) failing\n", failures);
    return 1;
}
