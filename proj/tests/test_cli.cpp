#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffr/cli.hpp"
#include "ffr/poly_io.hpp"
#include "ffr/polynomial.hpp"

using namespace ffr;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/ffr_clitest_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    std::string slurp() const {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    void write(const std::string& text) const {
        std::ofstream out(path);
        out << text;
    }
};

int run_cli(std::initializer_list<std::string> args) {
    return run(std::vector<std::string>(args));
}

}  // namespace

TEST_CASE("convolve writes the closed-form product") {
    TempFile out("conv.json");
    CHECK(run_cli({"convolve", "--d", "1", "--k", "0", "--p", "1", "--q", "2",
                   "--out", out.path}) == 0);
    const ExactPolynomial conv = parse_polynomial_json(out.slurp(), out.path);
    CHECK(conv == from_roots({Rational(3)}, Rational(1)));
}

TEST_CASE("convolve round trips its own output") {
    TempFile first("rt1.json"), second("rt2.json");
    CHECK(run_cli({"convolve", "--d", "3", "--k", "2", "--p", "1,2,3", "--q",
                   "1/2,1/2,4", "--out", first.path}) == 0);
    const ExactPolynomial direct = parse_polynomial_json(first.slurp(), first.path);
    // Feed the emitted file back in against the identity element.
    CHECK(run_cli({"convolve", "--d", "3", "--k", "2", "--p", first.path, "--q",
                   "0,0,0", "--out", second.path}) == 0);
    CHECK(parse_polynomial_json(second.slurp(), second.path) == direct);
}

TEST_CASE("theta reports the closed-form instance") {
    TempFile rep("theta.json");
    CHECK(run_cli({"theta", "--n", "0", "--alpha", "1", "--roots", "3", "--report",
                   rep.path}) == 0);
    const json j = json::parse(rep.slurp());
    CHECK(j["schema"] == 1);
    CHECK(j["op"] == "theta");
    CHECK(double(j["theta"]) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("phi flags the unverified regime and equality window") {
    TempFile rep("phi.json");
    CHECK(run_cli({"phi", "--n", "2", "--k", "1", "--d", "3", "--alpha", "1", "--p",
                   "1,2,3", "--q", "1,1,2", "--report", rep.path}) == 0);
    const json j = json::parse(rep.slurp());
    CHECK(j["unverified_regime"] == true);

    TempFile rep2("phi2.json");
    CHECK(run_cli({"phi", "--n", "2", "--k", "2", "--d", "3", "--alpha", "1", "--p",
                   "0,0,0", "--q", "0,0,0", "--report", rep2.path}) == 0);
    const json j2 = json::parse(rep2.slurp());
    CHECK(j2["unverified_regime"] == false);
    CHECK(j2["potential_equality_case"] == true);
}

TEST_CASE("gegenbauer demands exactly one mode") {
    TempFile rep("geg.json");
    CHECK(run_cli({"gegenbauer", "--d", "2", "--alpha", "7/2", "--maxroot",
                   "--report", rep.path}) == 0);
    const json j = json::parse(rep.slurp());
    CHECK(double(j["maxroot"]) == doctest::Approx(1.0 / 3).epsilon(1e-10));

    CHECK(run_cli({"gegenbauer", "--d", "2", "--alpha", "1"}) == 2);
    CHECK(run_cli({"gegenbauer", "--d", "2", "--alpha", "1", "--maxroot", "--eval",
                   "1"}) == 2);

    TempFile rep2("geg2.json");
    CHECK(run_cli({"gegenbauer", "--d", "3", "--alpha", "3/2", "--eval", "1",
                   "--report", rep2.path}) == 0);
    CHECK(json::parse(rep2.slurp())["value_exact"] == "10");
}

TEST_CASE("pinch emits exact rationals") {
    TempFile rep("pinch.json");
    CHECK(run_cli({"pinch", "--n", "1", "--alpha", "1", "--roots", "1,2,4",
                   "--report", rep.path}) == 0);
    const json j = json::parse(rep.slurp());
    CHECK(j["roots_exact"] == true);
    CHECK(j["a"] == "2");
    CHECK(j["b"] == "4");
    const ExactPolynomial tilde = parse_polynomial_json(j["p_tilde"].dump(), "tilde");
    const ExactPolynomial hat = parse_polynomial_json(j["p_hat"].dump(), "hat");
    CHECK(tilde + hat ==
          from_roots({Rational(1), Rational(2), Rational(4)}, Rational(1)));
}

TEST_CASE("verify exit codes and report shape") {
    TempFile rep("verify.json");
    CHECK(run_cli({"verify", "--claim", "basictheta", "--trials", "5", "--seed", "9",
                   "--report", rep.path}) == 0);
    const json j = json::parse(rep.slurp());
    CHECK(j["schema"] == 1);
    CHECK(j["claim"] == "basictheta");
    CHECK(j["trials"] == 5);
    CHECK(j["failures"] == 0);
    CHECK(j["spec"]["d_max"] == 8);

    CHECK(run_cli({"verify", "--claim", "nonsense", "--trials", "1"}) == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"convolve", "--d", "1", "--p", "1"}) == 2);
    CHECK(run_cli({"frobnicate"}) == 2);
    CHECK(run_cli({"theta", "--n", "0", "--alpha", "0", "--roots", "1"}) == 2);
    CHECK(run_cli({"theta", "--n", "0", "--alpha", "1"}) == 2);
    TempFile bad("bad.json");
    bad.write("{broken");
    CHECK(run_cli({"theta", "--n", "0", "--alpha", "1", "--p", bad.path}) == 2);
}

TEST_CASE("sweep emits headed CSV and rejects empty ranges") {
    TempFile csv("sweep.csv");
    CHECK(run_cli({"sweep", "--op", "gegenbauer", "--d-lo", "1", "--d-hi", "5",
                   "--theta", "1", "--out", csv.path}) == 0);
    const std::string text = csv.slurp();
    CHECK(text.rfind("# columns: d,theta,maxroot,gamma_theta,cauchy_at_x,bound_at_x",
                     0) == 0);
    int rows = 0;
    double prev = -1.0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++rows;
        const auto first = line.find(','), second = line.find(',', line.find(',') + 1);
        const double maxroot = std::stod(line.substr(second + 1));
        CHECK(maxroot > prev);
        prev = maxroot;
        (void)first;
    }
    CHECK(rows == 5);

    CHECK(run_cli({"sweep", "--op", "gegenbauer", "--d-lo", "5", "--d-hi", "1"}) == 2);
    CHECK(run_cli({"sweep", "--op", "phi", "--p", "1,2", "--q", "1,3", "--d", "2",
                   "--n", "1", "--alpha-lo", "1", "--alpha-hi", "0.5", "--steps",
                   "3"}) == 2);
    CHECK(run_cli({"sweep", "--op", "mystery", "--d-lo", "1", "--d-hi", "2"}) == 2);
}

TEST_CASE("sweep phi grid stays positive") {
    TempFile csv("phisweep.csv");
    CHECK(run_cli({"sweep", "--op", "phi", "--p", "1,2", "--q", "1,3", "--d", "2",
                   "--n", "1", "--alpha-lo", "0.5", "--alpha-hi", "2", "--steps", "4",
                   "--out", csv.path}) == 0);
    std::istringstream lines(csv.slurp());
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++rows;
        const double value = std::stod(line.substr(line.find(',') + 1));
        CHECK(value > 0.0);
    }
    CHECK(rows == 4);
}
