#include "confrac/json_io.hpp"

#include "test_support.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace confrac;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CONFRAC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::string> coeff_strings(const Json& j) { return j.at("coeffs").get<std::vector<std::string>>(); }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("confrac_test_" + name);
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("hermite") {
    auto r = run("hermite --m 6 --alpha 1/2 --method ode");
    CHECK(r.status == 0);
    CHECK(coeff_strings(Json::parse(r.out)) == std::vector<std::string>{"-120", "0", "720", "0", "-480", "0", "64"});

    r = run("hermite --m 5 --method substitution");
    CHECK(r.status == 0);
    CHECK(coeff_strings(Json::parse(r.out)) == std::vector<std::string>{"0", "120", "0", "-160", "0", "32"});

    r = run("hermite --m 0 --method all");
    CHECK(r.status == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.at("agree") == true);
    REQUIRE(j.at("methods").size() == 4);
    for (const auto& [name, poly] : j.at("methods").items()) {
        CAPTURE(name);
        CHECK(coeff_strings(poly) == std::vector<std::string>{"1"});
    }
}

TEST_CASE("solve") {
    const std::string p = R"('{"alpha":"1/2","x0":"0","coeffs":["0","-1","0","0","0","0","0","0"]}')";
    const std::string q = R"('{"alpha":"1/2","x0":"0","coeffs":["-1","0","0","0","0","0","0","0"]}')";
    auto r = run("solve --p " + p + " --q " + q + " --c0 1 --c1 0 --order 6");
    REQUIRE(r.status == 0);
    auto j = Json::parse(r.out);
    CHECK(series_from_json(j.at("solution")) == test::series("1/2", {"1", "0", "2", "0", "4/3", "0", "8/15"}));
    CHECK(j.at("residual_ok_through") == 4);
    CHECK(j.at("radius").is_null());

    r = run("solve --p " + p + " --q " + q + " --c0 0 --c1 0 --order 4");
    REQUIRE(r.status == 0);
    CHECK(series_from_json(Json::parse(r.out).at("solution")).is_zero());

    SUBCASE("from files, alpha = 1, exp(x^2/2)") {
        std::string pc = R"({"alpha":"1","x0":"0","coeffs":["0","-1")";
        std::string qc = R"({"alpha":"1","x0":"0","coeffs":["-1")";
        for (int k = 0; k < 29; ++k) pc += R"(,"0")";
        for (int k = 0; k < 30; ++k) qc += R"(,"0")";
        const auto pf = temp_file("p.json", pc + "]}");
        const auto qf = temp_file("q.json", qc + "]}");
        r = run("solve --p " + pf.string() + " --q " + qf.string() + " --c0 1 --c1 0 --order 30");
        REQUIRE(r.status == 0);
        j = Json::parse(r.out);
        CHECK(j.at("radius") == "inf");
        const auto y = series_from_json(j.at("solution"));
        CHECK(y[8] == Rational(1, 384));

        const auto yf = temp_file("y.json", r.out);
        r = run("eval --series " + yf.string() + " --from 0 --to 1 --samples 3");
        REQUIRE(r.status == 0);
        std::istringstream csv(r.out);
        std::string line;
        std::getline(csv, line);
        CHECK(line == "x,y");
        std::vector<std::pair<double, double>> rows;
        while (std::getline(csv, line)) {
            double x = 0;
            double v = 0;
            REQUIRE(std::sscanf(line.c_str(), "%lf,%lf", &x, &v) == 2);
            rows.emplace_back(x, v);
        }
        REQUIRE(rows.size() == 3);
        CHECK(rows[2].first == 1.0);
        CHECK(std::abs(rows[2].second - std::exp(0.5)) < 1e-12);
    }

    r = run("solve --p " + p + " --q " + q + " --order 20");
    CHECK(r.status == 2);
}

TEST_CASE("eval") {
    auto r = run(R"(eval --series '{"alpha":"1/2","x0":"0","coeffs":["5/2"]}' --from 0 --to 3 --samples 4)");
    REQUIRE(r.status == 0);
    CHECK(r.out == "x,y\n0,2.5\n1,2.5\n2,2.5\n3,2.5\n");

    r = run("hermite --m 2 --alpha 1");
    const auto hf = temp_file("h2.json", r.out);
    r = run("eval --series " + hf.string() + " --from 1 --to 2 --samples 2");
    REQUIRE(r.status == 0);
    CHECK(r.out == "x,y\n1,2\n2,14\n");

    r = run(R"(eval --series '{"alpha":"1/2","x0":"0","coeffs":["0","1"]}' --from -1 --to 1)");
    CHECK(r.status == 2);
}

TEST_CASE("check") {
    CHECK(run("check --suite hermite --m-max 10").status == 0);
    const auto r = run("check --suite orthogonality --j 1 --m-max 6");
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out).at("ok") == true);
    CHECK(run("check --suite nonsense").status == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").status == 2);
    CHECK(run("hermite").status == 2);
    CHECK(run("hermite --m 3 --alpha 3/2").status == 2);
    CHECK(run("hermite --m 3 --alpha x").status == 2);
    CHECK(run("hermite --m 3 --method fourier").status == 2);
    CHECK(run("solve --p '{' --q '{}'").status == 2);
    CHECK(run("hermite --help").status == 0);
}

}
