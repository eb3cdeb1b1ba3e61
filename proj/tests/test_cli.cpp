#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "weilk3/fixtures.hpp"
#include "weilk3/json_io.hpp"
#include "weilk3/weil.hpp"

using namespace weilk3;

namespace {

const WeilContext kCtx(2, 2, 2);

RatPoly standard_fixture() { return RatPoly{1, -2, 16} * pow(RatPoly{1, -4}, 21); }
RatPoly phi6_fixture() { return RatPoly{1, -2, 16} * pow(RatPoly{1, -4}, 19) * RatPoly{1, -4, 16}; }

struct CliRun {
    int code = -1;
    std::string out;
};

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() / ("weilk3_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string write(const std::string& name, const std::string& body) const {
        const auto p = path_ / name;
        std::ofstream(p) << body;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

CliRun run_cli(const std::string& args, const std::string& err_file) {
    const std::string cmd = std::string(WEILK3_CLI_PATH) + " " + args + " 2>" + err_file;
    CliRun r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Json, PolynomialInputRoundTrip) {
    const PolynomialInput in{standard_fixture(), kCtx};
    EXPECT_EQ(polynomial_input_from_json(json::parse(to_json(in).dump())), in);
}

TEST(Json, ReportRoundTrip) {
    for (const RatPoly& f : {standard_fixture(), phi6_fixture(), pow(RatPoly{1, -4}, 23)}) {
        const WeilReport rep = analyze(f, kCtx);
        EXPECT_EQ(report_from_json(json::parse(to_json(rep).dump())), rep);
    }
}

TEST(Json, StructureRoundTrip) {
    const EigenStructure st{21, 1};
    EXPECT_EQ(structure_from_json(to_json(st)), st);
}

TEST(Json, SchemaErrorsCarryPointer) {
    auto pointer_of = [](const json& j) {
        try {
            polynomial_input_from_json(j);
        } catch (const SchemaError& e) {
            return e.pointer();
        }
        return std::string("none");
    };
    EXPECT_EQ(pointer_of(json{{"coeffs", {"1", "1/2"}}, {"p", 2}, {"m", 2}}), "/coeffs/1");
    EXPECT_EQ(pointer_of(json{{"coeffs", {"1", "x"}}, {"p", 2}, {"m", 2}}), "/coeffs/1");
    EXPECT_EQ(pointer_of(json{{"coeffs", {"1"}}, {"p", 4}, {"m", 2}}), "/p");
    EXPECT_EQ(pointer_of(json{{"coeffs", {"1"}}, {"m", 2}}), "/p");
    EXPECT_EQ(pointer_of(json{{"coeffs", "1"}, {"p", 2}, {"m", 2}}), "/coeffs");
}

TEST(Fixtures, Examples) {
    FixtureSpec spec;
    const auto f = gen_fixtures(spec);
    ASSERT_EQ(f.size(), 1U);
    EXPECT_EQ(f[0].p2m, standard_fixture());
    spec.p = 3;
    EXPECT_EQ(gen_fixtures(spec)[0].k3_factor, (RatPoly{1, -3, 81}));
    spec.p = 2;
    spec.k3_factor_degree = 4;
    EXPECT_EQ(gen_fixtures(spec)[0].k3_factor, (RatPoly{1, -2, 0, -32, 256}));
}

TEST(Fixtures, Errors) {
    FixtureSpec spec;
    spec.coefficient_bound = 0;
    EXPECT_THROW(gen_fixtures(spec), Error);
    spec.coefficient_bound = 64;
    spec.m = 1;
    EXPECT_THROW(gen_fixtures(spec), Error);
    spec.m = 2;
    spec.middle_factor_degrees = {10, 10};
    EXPECT_THROW(gen_fixtures(spec), Error);
}

TEST(Fixtures, DeterministicAndReanalyzable) {
    FixtureSpec spec;
    spec.count = 4;
    const auto a = gen_fixtures(spec);
    const auto b = gen_fixtures(spec);
    ASSERT_EQ(a.size(), 4U);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].p2m, b[i].p2m);
        const WeilReport rep = analyze(a[i].p2m, a[i].ctx);
        EXPECT_TRUE(rep.k3_type);
        EXPECT_TRUE(rep.semistable);
        EXPECT_EQ(rep.ptr_irreducible, Irreducibility::Proved);
        EXPECT_EQ(rep.a + rep.ptr.degree(), 23);
    }
}

TEST(Binary, AnalyzeAndTateDim) {
    TempDir dir;
    const std::string err = dir.file("err");
    const std::string in = dir.write("std.json", to_json(PolynomialInput{standard_fixture(), kCtx}).dump());
    CliRun r = run_cli("analyze " + in, err);
    ASSERT_EQ(r.code, 0) << slurp(err);
    const json rep = json::parse(r.out);
    EXPECT_EQ(rep.at("a"), 21);
    EXPECT_TRUE(rep.at("k3_type").get<bool>());

    const std::string st = dir.write("st.json", R"({"a": 21, "k": 1})");
    r = run_cli("tate-dim " + st + " --r 2 --m 4", err);
    ASSERT_EQ(r.code, 0) << slurp(err);
    EXPECT_EQ(json::parse(r.out).at("tate_dim"), "447");
    r = run_cli("tate-dim " + st + " --r 1 --m 2", err);
    EXPECT_EQ(json::parse(r.out).at("tate_dim"), "21");
    r = run_cli("tate-dim " + in + " --r 1 --m 0", err);
    EXPECT_EQ(json::parse(r.out).at("tate_dim"), "1");
}

TEST(Binary, ExitCodes) {
    TempDir dir;
    const std::string err = dir.file("err");
    const std::string bad = dir.write("bad.json", R"({"coeffs": ["1", "1/2"], "p": 2, "m": 2})");
    CliRun r = run_cli("analyze " + bad, err);
    EXPECT_EQ(r.code, 2);
    const json e = json::parse(slurp(err));
    EXPECT_EQ(e.at("error"), "SchemaError");
    EXPECT_EQ(e.at("pointer"), "/coeffs/1");

    const std::string phi6 = dir.write("phi6.json", to_json(PolynomialInput{phi6_fixture(), kCtx}).dump());
    r = run_cli("tate-dim " + phi6 + " --r 2 --m 4", err);
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(json::parse(slurp(err)).at("error"), "HypothesesNotMet");
    r = run_cli("tate-dim " + phi6 + " --r 2 --m 4 --use-base-change", err);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).at("tate_dim"), "447");

    const std::string big = dir.write("big.json", R"({"a": 21, "k": 1})");
    r = run_cli("decompose-check " + big + " --r 3 --m 6", err);
    EXPECT_EQ(r.code, 4);
    r = run_cli("tate-dim " + big + " --r 9 --m 6", err);
    EXPECT_EQ(r.code, 2);
}

TEST(Binary, VerifySpanAndVerify) {
    TempDir dir;
    const std::string err = dir.file("err");
    CliRun r = run_cli("verify-span --a 21 --k 1", err);
    ASSERT_EQ(r.code, 0) << slurp(err);
    EXPECT_TRUE(json::parse(r.out).at("spans").get<bool>());
    r = run_cli("verify-span --a 1 --k 2 --J 3", err);
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(json::parse(slurp(err)).at("error"), "JTooSmall");

    const std::string in = dir.write("std.json", to_json(PolynomialInput{standard_fixture(), kCtx}).dump());
    r = run_cli("verify " + in, err);
    ASSERT_EQ(r.code, 0) << slurp(err);
    const json v = json::parse(r.out);
    EXPECT_TRUE(v.at("all_passed").get<bool>());
    EXPECT_TRUE(v.at("checks").at("decomposable").contains("skipped"));
    r = run_cli("verify " + in + " --J 0", err);
    EXPECT_EQ(r.code, 2);
}

TEST(Binary, GenFixturesMatchesLibrary) {
    TempDir dir;
    const std::string err = dir.file("err");
    const CliRun r = run_cli("gen-fixtures --count 2", err);
    ASSERT_EQ(r.code, 0) << slurp(err);
    const json arr = json::parse(r.out);
    FixtureSpec spec;
    spec.count = 2;
    const auto lib = gen_fixtures(spec);
    ASSERT_EQ(arr.size(), lib.size());
    for (std::size_t i = 0; i < lib.size(); ++i) EXPECT_EQ(polynomial_input_from_json(arr[i]).poly, lib[i].p2m);
    EXPECT_EQ(run_cli("gen-fixtures --bound 0", err).code, 2);
}
