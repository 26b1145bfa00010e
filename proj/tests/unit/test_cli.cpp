#include "support.hpp"

#include "virmtc/cli.hpp"
#include "virmtc/errors.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <unistd.h>

using namespace virmtc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    fs::path d = fs::temp_directory_path() / ("virmtc-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

const std::vector<std::vector<std::string>> kCommands = {
    {"info", "3", "4"},
    {"info", "7", "9", "--format", "md"},
    {"smatrix", "4", "5"},
    {"smatrix", "5", "7", "--float", "--format", "csv"},
    {"fusion", "6", "7", "--format", "csv"},
    {"subcats", "5", "6"},
    {"subcats", "7", "8", "--format", "md"},
    {"extension", "9"},
    {"extension", "10", "--verify"},
    {"glue", "5", "6", "C1", "6", "7", "C3", "--format", "md"},
    {"glue-scan", "--nmax", "8"},
    {"report", "2", "7", "--qmax", "9"},
    {"export", "5", "6"},
};

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("info 3 4") {
        Run r = run({"info", "3", "4", "--no-cache"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["c"] == "1/2");
        std::vector<std::string> h;
        for (const auto& s : j["simples"]) h.push_back(s["h"]);
        CHECK(h == std::vector<std::string>{"0/1", "1/16", "1/2"});
    }

    TEST_CASE("subcats 5 6 --format json") {
        Run r = run({"subcats", "5", "6", "--no-cache"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j.size() == 6);
        std::vector<std::string> modular;
        for (const auto& rec : j) {
            CHECK(rec.contains("center"));
            CHECK(rec.contains("fsexp"));
            if (rec["modular"].get<bool>()) modular.push_back(rec["name"]);
        }
        std::sort(modular.begin(), modular.end());
        CHECK(modular == std::vector<std::string>{"C1", "C4"});
    }

    TEST_CASE("glue 4 5 C2 5 6 C4") {
        Run r = run({"glue", "4", "5", "C2", "5", "6", "C4", "--no-cache"});
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.size() == 1);
        CHECK(j[0]["integral"] == true);
        CHECK(j[0]["weights"] == nlohmann::json::array({"0/1", "2/1"}));
        CHECK(j[0]["bijection"][0] == nlohmann::json::array({"1,1", "1,1"}));
    }

    TEST_CASE("exit codes") {
        CHECK(run({"info", "4", "6"}).code == 2);
        CHECK(run({"info", "1", "6"}).code == 2);
        CHECK(run({"info", "x", "6"}).code == 2);
        CHECK(run({"extension", "7"}).code == 2);
        CHECK(run({"glue", "4", "5", "C9", "5", "6", "C4"}).code == 2);
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"info", "3", "4", "--format", "xml"}).code == 2);
        CHECK(run({"--help"}).code == 0);
        Run bad = run({"subcats", "6", "9"});
        CHECK(bad.code == 2);
        CHECK(bad.err.find("coprime") != std::string::npos);
    }

    TEST_CASE("empty report range") {
        Run r = run({"report", "9", "5", "--no-cache"});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
    }

    TEST_CASE("report tables") {
        Run r = run({"report", "5", "5", "--qmax", "7", "--no-cache"});
        REQUIRE(r.code == 0);
        // p, q odd
        const auto at = r.out.find("## C_{5,7}");
        REQUIRE(at != std::string::npos);
        const std::string sec = r.out.substr(at);
        CHECK(sec.find("| C3 | FULL | FULL | C3 |") != std::string::npos);
        CHECK(sec.find("| C4 | FULL | C6 | C3 |") != std::string::npos);
        CHECK(sec.find("| C5 | C1 | C1 | C5 |") != std::string::npos);
        Run small = run({"report", "2", "4", "--qmax", "5", "--no-cache"});
        CHECK(small.out.find("## C_{2,3}") != std::string::npos);
        CHECK(small.out.find("Nontrivial premodular subcategories: 0.") != std::string::npos);
    }

    TEST_CASE("report matches the golden file") {
        Run r = run({"report", "2", "12", "--qmax", "13", "--no-cache"});
        REQUIRE(r.code == 0);
        CHECK(r.out == slurp(fs::path(VIRMTC_GOLDEN) / "report_2_12_q13.md"));
        Run s = run({"glue-scan", "--nmax", "10", "--format", "md"});
        CHECK(s.out == slurp(fs::path(VIRMTC_GOLDEN) / "glue_scan_10.md"));
    }

    TEST_CASE("every command is byte identical across reruns and cache on/off") {
        const fs::path dir = scratch("cache");
        ::setenv("VIRMTC_CACHE", dir.c_str(), 1);
        for (const auto& cmd : kCommands) {
            CAPTURE(cmd[0]);
            Cache::clear_memory();
            Run cold = run(cmd);
            Cache::clear_memory();
            Run warm = run(cmd);
            auto off_args = cmd;
            off_args.push_back("--no-cache");
            Run off = run(off_args);
            CHECK(cold.code == 0);
            CHECK(cold.out == warm.out);
            CHECK(cold.out == off.out);
        }
        CHECK(fs::exists(dir / "v1" / "C_5_6.json"));
        ::setenv("VIRMTC_CACHE", "off", 1);
        Run disabled = run({"info", "3", "5"});
        CHECK(disabled.code == 0);
        fs::remove_all(dir);
        ::unsetenv("VIRMTC_CACHE");
    }

    TEST_CASE("a category read back from disk equals the computed one") {
        const fs::path dir = scratch("reload");
        Cache c(dir);
        auto first = c.category(7, 10);
        CHECK(fs::exists(c.file(7, 10)));
        Cache::clear_memory();
        auto again = c.category(7, 10);
        CHECK(again != first);
        CHECK(again->ring == first->ring);
        CHECK(again->data.s_float() == first->data.s_float());
        CHECK(again->dims == first->dims);
        fs::remove_all(dir);
    }

    TEST_CASE("a corrupt cache file is ignored") {
        const fs::path dir = scratch("corrupt");
        Cache c(dir);
        fs::create_directories(c.file(4, 7).parent_path());
        std::ofstream(c.file(4, 7)) << "{not json";
        auto C = c.category(4, 7);
        CHECK(C->model.rank() == 9);
        CHECK(C->ring == minimal_fusion_ring(MinimalModel(4, 7)));
        fs::remove_all(dir);
    }

    TEST_CASE("export round trip") {
        const fs::path dir = scratch("export");
        const std::string f = (dir / "m.json").string();
        REQUIRE(run({"export", "5", "7", "-o", f, "--no-cache"}).code == 0);
        Run back = run({"export", "--import", f});
        CHECK(back.code == 0);
        CHECK(back.out == slurp(f));

        MinimalCategory C(6, 7);
        MinimalCategory D = import_modular_data(export_modular_data(C));
        CHECK(D.model == C.model);
        CHECK(D.ring == C.ring);
        CHECK(D.data.s_float() == C.data.s_float());
        CHECK(D.dims == C.dims);

        auto j = export_modular_data(C);
        j["simples"][2]["h"] = "1/3";
        CHECK_THROWS_AS(import_modular_data(j), ValidationError);
        std::ofstream(dir / "bad.json") << "[";
        CHECK(run({"export", "--import", (dir / "bad.json").string()}).code == 2);
        fs::remove_all(dir);
    }

    TEST_CASE("extension dump and verify") {
        const fs::path dir = scratch("ext");
        const std::string f = (dir / "ring.json").string();
        Run r = run({"extension", "9", "--dump-ring", f, "--verify", "--format", "md"});
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
        auto j = nlohmann::json::parse(slurp(f));
        CHECK(j["simples"].size() == 16);
        CHECK(j["ambiguity_log"].size() > 0);
        fs::remove_all(dir);
    }

    TEST_CASE("serializers") {
        CHECK(rational_json(Rational(0)) == "0/1");
        CHECK(rational_from_json("-3/6") == testing::R("-1/2"));
        CHECK_THROWS_AS(rational_from_json(3), ValidationError);
        CycloNumber x = make_sin(1, 5) * make_sin(2, 7);
        CHECK(cyclo_from_json(cyclo_json(x)) == x);
        auto j = cyclo_json(CycloNumber(12, testing::R("1/2")));
        CHECK(j["N"] == 12);
        CHECK(j["coeffs"] == nlohmann::json{{"0", "1/2"}});
        CHECK(cyclo_json(CycloNumber(5))["coeffs"].empty());
        CHECK_THROWS_AS(cyclo_from_json(nlohmann::json{{"N", 0}, {"coeffs", nlohmann::json::object()}}), ValidationError);
        CHECK(label_json({2, 3}) == "2,3");
        CHECK(label_from_json("2,3") == KacLabel{2, 3});
        CHECK(model_json(MinimalModel(5, 4)) == nlohmann::json{{"p", 4}, {"q", 5}});
        CHECK(fmt12(1.0 / 3) == "0.333333333333");
        CHECK(fmt12(-0.0) == "0");
    }
}
