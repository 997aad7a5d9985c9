#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "f2alg/cli.hpp"
#include "f2alg/spaces.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int status = f2alg::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

// Temp-dir fixture; files are cleaned up with the directory.
struct TempDir {
    fs::path dir;
    TempDir()
    {
        dir = fs::temp_directory_path() /
              ("f2alg-test-" + std::to_string(::getpid()) + "-" +
               std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    static int& counter()
    {
        static int c = 0;
        return c;
    }
    std::string write(const std::string& name, std::string_view content) const
    {
        fs::path p = dir / name;
        std::ofstream f(p);
        f << content;
        return p.string();
    }
};

}  // namespace

TEST_CASE("cli evaluates the operations from the model file")
{
    TempDir tmp;
    std::string bpu4 = tmp.write("bpu4.alg", f2alg::model_text(f2alg::ModelId::BPU4));

    auto q2 = run_cli({"q", bpu4, "2", "x3"});
    CHECK(q2.status == 0);
    CHECK(q2.out == "x5^2\n");

    auto sq2 = run_cli({"sq", bpu4, "2", "x3"});
    CHECK(sq2.status == 0);
    CHECK(sq2.out == "x5\n");

    auto nf = run_cli({"nf", bpu4, "x9^2"});
    CHECK(nf.status == 0);
    CHECK(nf.out == "x3^2*x12 + x5^2*x8\n");
}

TEST_CASE("cli adem prints the admissible form")
{
    auto one = run_cli({"adem", "Sq1 Sq2"});
    CHECK(one.status == 0);
    CHECK(one.out == "Sq3\n");

    auto two = run_cli({"adem", "Sq2 Sq2"});
    CHECK(two.status == 0);
    CHECK(two.out == "Sq3 Sq1\n");

    auto zero = run_cli({"adem", "Sq1 Sq1"});
    CHECK(zero.status == 0);
    CHECK(zero.out == "0\n");
}

TEST_CASE("cli basis output for an empty degree")
{
    TempDir tmp;
    std::string bpu4 = tmp.write("bpu4.alg", f2alg::model_text(f2alg::ModelId::BPU4));

    auto empty = run_cli({"basis", bpu4, "--degree", "7"});
    CHECK(empty.status == 0);
    CHECK(empty.out == "dim 0\n(empty)\n");

    auto ten = run_cli({"basis", bpu4, "--degree", "10"});
    CHECK(ten.status == 0);
    CHECK(ten.out == "dim 3\nx2^5\nx2*x8\nx5^2\n");
}

TEST_CASE("cli poincare and max-degree flag")
{
    TempDir tmp;
    std::string bpu4 = tmp.write("bpu4.alg", f2alg::model_text(f2alg::ModelId::BPU4));

    auto series = run_cli({"poincare", bpu4, "--through", "10"});
    CHECK(series.status == 0);
    CHECK(series.out == "1 0 1 1 1 1 2 0 3 2 3\n");

    // the bound is honored: degree 22 is reachable only with a raised bound
    auto blocked = run_cli({"poincare", bpu4, "--through", "22"});
    CHECK(blocked.status == 2);
    auto raised = run_cli({"poincare", bpu4, "--through", "22", "--max-degree", "22"});
    CHECK(raised.status == 0);
}

TEST_CASE("cli kunneth and quotient write loadable files")
{
    TempDir tmp;
    std::string bpu4 = tmp.write("bpu4.alg", f2alg::model_text(f2alg::ModelId::BPU4));
    std::string bs1 = tmp.write("bs1.alg", f2alg::model_text(f2alg::ModelId::BS1));
    std::string prod = (tmp.dir / "prod.alg").string();
    std::string quot = (tmp.dir / "quot.alg").string();

    auto kunneth = run_cli({"kunneth", bpu4, bs1, "-o", prod});
    CHECK(kunneth.status == 0);
    CHECK(kunneth.out.find("7 generators") != std::string::npos);

    auto quotient = run_cli({"quotient", prod, "--kill", "t", "-o", quot});
    CHECK(quotient.status == 0);

    auto series = run_cli({"poincare", quot, "--through", "10"});
    CHECK(series.status == 0);
    CHECK(series.out == "1 0 1 1 1 1 2 0 3 2 3\n");
}

TEST_CASE("cli kunneth reports renamed generators")
{
    TempDir tmp;
    std::string bs1 = tmp.write("bs1.alg", f2alg::model_text(f2alg::ModelId::BS1));
    std::string out = (tmp.dir / "square.alg").string();
    auto result = run_cli({"kunneth", bs1, bs1, "-o", out});
    CHECK(result.status == 0);
    CHECK(result.out.find("renamed t -> t_1") != std::string::npos);
}

TEST_CASE("cli check-table exit codes")
{
    TempDir tmp;
    std::string good = tmp.write("bpu4.alg", f2alg::model_text(f2alg::ModelId::BPU4));
    auto ok = run_cli({"check-table", good, "--through", "12"});
    CHECK(ok.status == 0);
    CHECK(ok.out.find("violations: 0") != std::string::npos);

    std::string text(f2alg::model_text(f2alg::ModelId::BPU4));
    auto pos = text.find("sq 1 x5 = x3^2");
    text.replace(pos, std::string("sq 1 x5 = x3^2").size(), "sq 1 x5 = 0");
    std::string bad = tmp.write("bad.alg", text);
    auto fail = run_cli({"check-table", bad, "--through", "12"});
    CHECK(fail.status == 1);
    CHECK(fail.out.find("violation: Sq1 Sq2 on x3") != std::string::npos);
}

TEST_CASE("cli model prints the bundled text verbatim")
{
    auto bpu4 = run_cli({"model", "BPU4"});
    CHECK(bpu4.status == 0);
    CHECK(bpu4.out == std::string(f2alg::model_text(f2alg::ModelId::BPU4)));

    auto unknown = run_cli({"model", "BPU5"});
    CHECK(unknown.status == 2);
    CHECK(unknown.err.find("unknown model") != std::string::npos);
}

TEST_CASE("cli verify-paper text, json and exit status")
{
    auto text = run_cli({"verify-paper"});
    CHECK(text.status == 0);
    CHECK(text.out.find("overall: PASS (10/10 checks)") != std::string::npos);

    auto json_run = run_cli({"verify-paper", "--json"});
    CHECK(json_run.status == 0);
    auto doc = nlohmann::json::parse(json_run.out);
    REQUIRE(doc.contains("checks"));
    REQUIRE(doc.contains("overall"));
    CHECK(doc["overall"].get<bool>());
    REQUIRE(doc["checks"].is_array());
    CHECK(doc["checks"].size() == 10);
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("statement"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("value"));
        CHECK(c["pass"].is_boolean());
    }

    TempDir tmp;
    std::string text2(f2alg::model_text(f2alg::ModelId::BPU4));
    auto pos = text2.find("rel x2*x3\n");
    text2.replace(pos, std::string("rel x2*x3\n").size(), "");
    std::string mutated = tmp.write("mutated.alg", text2);
    auto failed = run_cli({"verify-paper", "--model", mutated});
    CHECK(failed.status == 1);
    CHECK(failed.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli rejects bad usage and bad input with status 2")
{
    auto unknown_verb = run_cli({"frobnicate"});
    CHECK(unknown_verb.status == 2);

    auto missing_arg = run_cli({"basis"});
    CHECK(missing_arg.status == 2);

    TempDir tmp;
    std::string broken = tmp.write("broken.alg", "gen x 1\nrel y\n");
    auto parse_fail = run_cli({"basis", broken, "--degree", "1"});
    CHECK(parse_fail.status == 2);
    CHECK(parse_fail.err.find("line 2") != std::string::npos);

    std::string bpu4 = tmp.write("bpu4.alg", f2alg::model_text(f2alg::ModelId::BPU4));
    auto unknown_sq = run_cli({"sq", bpu4, "1", "x2"});
    CHECK(unknown_sq.status == 2);
    CHECK(unknown_sq.err.find("unknown Steenrod value") != std::string::npos);

    auto missing_file = run_cli({"nf", (tmp.dir / "nope.alg").string(), "x2"});
    CHECK(missing_file.status == 2);
}

TEST_CASE("cli help exits zero")
{
    auto help = run_cli({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("basis") != std::string::npos);
}
