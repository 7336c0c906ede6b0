#include "support.hpp"

#include "infsing/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace infsing;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_family(const std::string& name, const std::string& text)
{
    fs::path p = fs::temp_directory_path() / ("infsing_test_" + name + ".fam");
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("analyze writes a versioned JSON report")
{
    Run r = cli({"analyze", infsing::testing::corpus_path("cubic_product.fam"), "--s", "1", "--s", "0", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["family"]["vars"] == json::array({"x", "y"}));
    REQUIRE(j["ledgers"].size() == 2);
    CHECK(j["ledgers"][0]["s"] == "0");
    CHECK(j["ledgers"][0]["lambda"]["value"] == 3);
    CHECK(j["ledgers"][1]["mu"]["value"] == 1);
    CHECK(j["findings"].empty());
}

TEST_CASE("analyze renders markdown by default and can also write JSON to a file")
{
    fs::path out = fs::temp_directory_path() / "infsing_test_report.json";
    Run r = cli({"analyze", infsing::testing::corpus_path("mixed_quintic.fam"), "--s", "1", "--json", out.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("| μ | 5 |") != std::string::npos);
    json j = json::parse(slurp(out));
    CHECK(j["ledgers"][0]["mu"]["value"] == 5);
}

TEST_CASE("single-quantity commands")
{
    std::string fam = infsing::testing::corpus_path("quartic_product.fam");
    CHECK(cli({"mu", fam, "--s", "1"}).out == "0\n");
    CHECK(cli({"lambda", fam, "--s", "1"}).out == "4\n");
    CHECK(cli({"atypical", fam, "--s", "1"}).out == "0, -1/4\n");
    std::string cubic = infsing::testing::corpus_path("cubic_product.fam");
    Run a = cli({"atypical", cubic, "--s", "1"});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("roots of") != std::string::npos);
    CHECK(cli({"mu", fam}).code == kExitUnsupported);
}

TEST_CASE("audit exit codes")
{
    Run cgst = cli({"audit", infsing::testing::corpus_path("quartic_surface.fam"), "--samples", "0, 1"});
    CHECK(cgst.code == kExitOk);
    CHECK(cgst.out.find("| cgst | violated |") != std::string::npos);

    std::string mismatch = temp_family("mismatch", "vars = x, y\nf = (x*y)^3 + s*x*y + x\nexpect.lambda.1 = 7\n");
    CHECK(cli({"audit", mismatch, "--samples", "0,1"}).code == kExitContradiction);

    Run ok = cli({"audit", infsing::testing::corpus_path("cubic_product.fam"), "--samples", "0,1", "--format", "json"});
    CHECK(ok.code == kExitOk);
    json j = json::parse(ok.out);
    CHECK(j["derived"]["mu_lambda_constant"] == true);
    CHECK(cli({"audit", infsing::testing::corpus_path("cubic_product.fam"), "--samples", "1,2"}).code ==
          kExitUnsupported);
}

TEST_CASE("input errors exit with code 2")
{
    std::string constant = temp_family("constant", "vars = x, y\nf = 3 + s\n");
    Run c = cli({"analyze", constant, "--s", "1"});
    CHECK(c.code == kExitUnsupported);
    CHECK(c.err.find("degree 0 unsupported") != std::string::npos);

    std::string broken = temp_family("broken", "vars = x, y\nf = x +\n");
    Run b = cli({"analyze", broken});
    CHECK(b.code == kExitUnsupported);
    CHECK(b.err.find("line 2") != std::string::npos);

    CHECK(cli({"analyze", "/nonexistent/file.fam"}).code == kExitUnsupported);
    CHECK(cli({"frobnicate"}).code == kExitUnsupported);
    CHECK(cli({"analyze", infsing::testing::corpus_path("cubic_product.fam"), "--s", "1/0"}).code == kExitUnsupported);
}

TEST_CASE("golden reports compare structurally")
{
    for (const auto& entry : fs::directory_iterator(INFSING_CORPUS_DIR)) {
        if (entry.path().extension() != ".fam")
            continue;
        fs::path golden = fs::path(INFSING_CORPUS_DIR) / "golden" / (entry.path().stem().string() + ".json");
        CAPTURE(entry.path().string());
        REQUIRE(fs::exists(golden));
        Run r = cli({"analyze", entry.path().string(), "--format", "json"});
        REQUIRE(r.code == kExitOk);
        CHECK(json::parse(r.out) == json::parse(slurp(golden)));
    }
}
