#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Out {
    int code = -1;
    std::string out;
    std::string log;
};

Out run(std::vector<std::string> args) {
    std::ostringstream out, log;
    Out r;
    r.code = ndga::cli::run(args, out, log);
    r.out = out.str();
    r.log = log.str();
    return r;
}

std::string data(const std::string& name) { return std::string(NDGA_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("every registered operation maps to a parser subcommand") {
    auto paths = ndga::cli::command_paths();
    std::set<std::string> known(paths.begin(), paths.end());
    std::set<std::string> ops;
    for (const auto& e : ndga::cli::operation_registry()) {
        CAPTURE(e.operation);
        CHECK(known.count(e.command) == 1);
        ops.insert(e.operation);
    }
    for (const char* op : {"normal_form", "mul", "diamond", "mc_coefficient", "enumerate_paths", "kernel", "omega_space",
                           "delta_apply", "cohomology", "is_3_lie", "deform_de_rham", "algebroid_identities"})
        CHECK(ops.count(op) == 1);
    for (const std::string& p : paths) {
        CAPTURE(p);
        std::vector<std::string> args;
        std::istringstream words(p);
        for (std::string w; words >> w;) args.push_back(w);
        args.push_back("--help");
        CHECK(run(args).code == ndga::cli::kOk);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({"ncomplex", "check", "--input", data("three_complex.json")}).code == 0);
    CHECK(run({"ncomplex", "check", "--input", data("bad_complex.json")}).code == 1);
    CHECK(run({"ncomplex", "check", "--input", data("missing.json")}).code == 2);
    CHECK(run({"algebra", "nf", "--omega", "3,1", "--poly", "x1 +"}).code == 2);
    CHECK(run({"algebra", "nf", "--omega", "3,1", "--poly", "x7"}).code == 2);
    CHECK(run({"mc", "--N", "3", "--coeff", "1,a"}).code == 2);
    CHECK(run({"mc"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"forms", "omega", "--N", "3", "--n", "-1"}).code == 2);
    CHECK(run({"lie", "identities", "--tangent", "2", "--order", "5"}).code == 2);
}

TEST_CASE("worked commands") {
    Out mc = run({"mc", "--N", "3"});
    CHECK(mc.code == 0);
    CHECK(mc.out.find("(d2(e) + d(e)e + e^3) + (d(e) + e^2) d + e d^2 = 0") != std::string::npos);

    Out nf = run({"algebra", "nf", "--omega", "3,1", "--poly", "d2x1 * x1 * d2x1"});
    CHECK(nf.code == 0);
    CHECK(nf.out.find("0") != std::string::npos);

    Out delta = run({"forms", "delta", "--N", "3", "--n", "1", "--input", data("form.txt")});
    CHECK(delta.code == 0);
    CHECK(delta.out.find("d1m1") != std::string::npos);

    Out sl2 = run({"lie", "check3", "--input", data("sl2.json"), "--json"});
    REQUIRE(sl2.code == 0);
    auto j = nlohmann::json::parse(sl2.out);
    CHECK(j["result"]["jacobi"] == true);
    CHECK(j["result"]["three_lie_shuffle"] == true);

    Out h = run({"ncomplex", "cohomology", "--input", data("three_complex.json"), "--p", "1", "--json"});
    CHECK(h.code == 0);
    CHECK(run({"kernel", "--graph", data("triangle.json"), "--n", "3", "--from", "a", "--to", "a", "--method", "both"}).code ==
          0);
    CHECK(run({"forms", "sset", "--input", data("interval.json"), "--degree", "0", "--poly-bound", "1"}).code == 0);
    CHECK(run({"algebra", "nilpotency", "--pres", data("dga3.json")}).code == 0);
    CHECK(run({"lie", "deform", "--input", data("square_zero.json"), "--infinitesimal"}).code == 0);
}

TEST_CASE("JSON envelope is deterministic and timing stays in the log") {
    std::vector<std::string> args{"infinitesimal", "--N", "6", "--json"};
    Out a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    for (const char* key : {"command", "inputs_digest", "result", "checks", "ok"}) CHECK(j.contains(key));
    CHECK(j["ok"] == true);
    CHECK(j["inputs_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK(a.out.find("finished in") == std::string::npos);
    CHECK(a.log.find("finished in") != std::string::npos);

    // the digest follows file contents
    Out c1 = run({"ncomplex", "check", "--input", data("three_complex.json"), "--json"});
    Out c2 = run({"ncomplex", "check", "--input", data("bad_complex.json"), "--json"});
    CHECK(nlohmann::json::parse(c1.out)["inputs_digest"] != nlohmann::json::parse(c2.out)["inputs_digest"]);
    CHECK(nlohmann::json::parse(c2.out)["ok"] == false);
}

TEST_CASE("verify-paper: filter and mutation canary") {
    Out one = run({"verify-paper", "--filter", "1"});
    CHECK(one.code == 0);
    CHECK(one.out.find("criterion 1 ") != std::string::npos);
    CHECK(one.out.find("criterion 2 ") == std::string::npos);

    Out mutated = run({"verify-paper", "--filter", "1", "--mutate-weights"});
    CHECK(mutated.code != 0);
    CHECK(mutated.out.find("first failing check: 1:") != std::string::npos);
    CHECK(run({"verify-paper", "--filter", "pathsum", "--mutate-weights"}).code != 0);

    Out group = run({"verify-paper", "--filter", "pathsum", "--json"});
    auto j = nlohmann::json::parse(group.out);
    for (const auto& c : j["result"]["criteria"]) CHECK(c["group"] == "pathsum");
    CHECK(j["result"]["criteria"].size() == 5);

    CHECK(run({"verify-paper", "--filter", "nothing"}).code == 2);
}
