#include "helpers.hpp"

#include "ainf/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace ainf;

namespace {

ErrorCode code_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("document parsed");
    return ErrorCode::SyntaxError;
}

std::string message_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

const char* kMinimal = R"({"ring": {"kind": "Z"}, "algebra": {"basis": [{"name": "u", "degree": 0}]}})";

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(AINFTY_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = std::string(TEST_TMP_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("a minimal document loads with zero operations") {
    Structure s = parse_document(kMinimal);
    CHECK(s.algebra->module()->size() == 1);
    CHECK(s.algebra->operations().empty());
    CHECK(s.options == Options{});
    CHECK(s.ring == Ring::integers());
}

TEST_CASE("load-time diagnostics") {
    CHECK(code_of("{") == ErrorCode::SyntaxError);
    CHECK(code_of(R"({"ring": {"kind": "Zp", "p": 4}, "algebra": {"basis": []}})") == ErrorCode::NotPrime);
    CHECK(code_of(R"({"ring": {"kind": "Q"}, "algebra": {"basis": []}})") == ErrorCode::SyntaxError);
    const std::string wrong_degree = R"({"ring": {"kind": "Z"}, "algebra": {"basis": [{"name": "u", "degree": 0}],
        "ops": {"2": [{"inputs": ["u", "u"], "output": {"u": "1"}}, {"inputs": ["u", "u"], "output": {"u": "1"}}],
                "3": [{"inputs": ["u", "u", "u"], "output": {"u": "1"}}]}}})";
    CHECK(code_of(wrong_degree) == ErrorCode::DegreeMismatch);
    CHECK(message_of(wrong_degree).find("algebra.ops.3[0]") != std::string::npos);
    const std::string unknown = R"({"ring": {"kind": "Z"}, "algebra": {"basis": [{"name": "u", "degree": 0}],
        "ops": {"2": [{"inputs": ["u", "v"], "output": {"u": "1"}}]}}})";
    CHECK(code_of(unknown) == ErrorCode::UnknownName);
    CHECK(message_of(unknown).find("algebra.ops.2[0].inputs") != std::string::npos);
    const std::string bad_coeff = R"({"ring": {"kind": "Z"}, "algebra": {"basis": [{"name": "u", "degree": 0}],
        "ops": {"2": [{"inputs": ["u", "u"], "output": {"u": "1.5"}}]}}})";
    CHECK(code_of(bad_coeff) == ErrorCode::SyntaxError);
    const std::string reserved = R"({"ring": {"kind": "Z"}, "algebra": {"basis": [{"name": "u", "degree": 0}]},
        "bimodules": {"dual": {"basis": []}}})";
    CHECK(code_of(reserved) == ErrorCode::SyntaxError);
}

TEST_CASE("big coefficients survive as decimal strings") {
    const std::string doc = R"({"ring": {"kind": "Z"}, "algebra": {"basis": [{"name": "u", "degree": 0}],
        "ops": {"2": [{"inputs": ["u", "u"], "output": {"u": "123456789012345678901234567890"}}]}}})";
    Structure s = parse_document(doc);
    CHECK(s.algebra->op(2)->lookup({0, 0})->coefficient(0) == Scalar("123456789012345678901234567890"));
    CHECK(serialize_document(s).find("\"123456789012345678901234567890\"") != std::string::npos);
}

TEST_CASE("fixtures round-trip and validate") {
    for (const auto& name : all_fixture_names())
        for (const Ring& ring : {Ring::integers(), testing::z2()}) {
            const std::string text = emit_fixture(name, ring);
            Structure s = parse_document(text);
            CHECK(serialize_document(s) == text);
            CommandOptions o;
            o.max_r = 5;
            o.max_rs = 3;
            Report r = run_command("validate", s, o);
            INFO(name << "\n" << r.text());
            CHECK(r.exit_code == 0);
        }
    CHECK_THROWS_AS(emit_fixture("nope"), Error);
}

TEST_CASE("reports are deterministic") {
    Structure s = parse_document(emit_fixture("quasi_iso_pair"));
    CommandOptions o;
    o.length = 3;
    o.seed = 5;
    Report a = run_command("verify", s, o), b = run_command("verify", s, o);
    CHECK(a.text() == b.text());
    CHECK(a.exit_code == 0);
    CHECK(a.text().find("time ") == std::string::npos);
}

TEST_CASE("verify names the first failing identity of a corrupted document") {
    auto doc = nlohmann::json::parse(emit_fixture("exterior2"));
    for (auto& entry : doc["algebra"]["ops"]["2"])
        if (entry["inputs"] == nlohmann::json::array({"x", "1"})) entry["output"]["x"] = "1";
    Structure s = parse_document(doc.dump());
    CommandOptions o;
    o.length = 2;
    Report r = run_command("verify", s, o);
    CHECK(r.exit_code == 1);
    CHECK(r.text().find("first failure: A-infinity equation") != std::string::npos);
}

TEST_CASE("hh on the dual numbers over Z/2 matches a dense computation") {
    Structure s = build_fixture("dual_numbers", testing::z2());
    CommandOptions o;
    o.length = 3;
    o.degrees = std::pair<long, long>{-2, 4};
    Report r = run_command("hh", s, o);
    // C_j spanned by words with j - 1 letters; b is the classical boundary mod 2
    const oracle::Algebra alg = oracle::dual_numbers();
    std::map<long, std::vector<Word>> blocks;
    for (int n = 0; n <= 3; ++n) {
        WordSpace space(std::vector<int>(n + 1, 2));
        for (std::uint64_t k = 0; k < space.count(); ++k) blocks[n + 1].push_back(space.at(k));
    }
    auto rank_of = [&](long j) {
        if (!blocks.count(j) || !blocks.count(j - 1)) return 0;
        const auto& src = blocks[j];
        const auto& tgt = blocks[j - 1];
        std::vector<std::vector<long>> m(tgt.size(), std::vector<long>(src.size(), 0));
        for (std::size_t c = 0; c < src.size(); ++c)
            for (const auto& [u, x] : oracle::classical_boundary(alg, src[c]))
                m[std::find(tgt.begin(), tgt.end(), u) - tgt.begin()][c] = x;
        return oracle::rank_mod_p(m, 2);
    };
    REQUIRE(r.rows.size() == 4);
    for (const auto& row : r.rows) {
        const long j = row.degree;
        CHECK(row.free_rank == static_cast<int>(blocks[j].size()) - rank_of(j) - rank_of(j + 1));
    }
    CHECK(r.csv().rfind("object,degree,free_rank,torsion,verdict\n", 0) == 0);
}

TEST_CASE("degree ranges") {
    CHECK(parse_degree_range("-2..4") == std::pair<long, long>{-2, 4});
    CHECK_THROWS_AS(parse_degree_range("3..1"), Error);
    CHECK_THROWS_AS(parse_degree_range("3-4"), Error);
}

TEST_CASE("cup and cohomology commands") {
    Structure s = build_fixture("exterior1");
    CommandOptions o;
    o.names = {"u", "fx"};
    Report r = run_command("cup", s, o);
    CHECK(r.exit_code == 0);
    CHECK(r.text().find("PASS Leibniz u,fx") != std::string::npos);
    o.names = {"u", "missing"};
    CHECK_THROWS_AS(run_command("cup", s, o), Error);
    CommandOptions c;
    c.length = 2;
    Report h = run_command("cohomology", s, c);
    CHECK(h.exit_code == 0);
    CHECK_FALSE(h.rows.empty());
}

TEST_CASE("the ainfty executable: exit codes and byte-identical output") {
    Run fix = run("fixture quasi_iso_pair");
    REQUIRE(fix.code == 0);
    const std::string path = write_temp("qip.json", fix.out);
    Run a = run("spectral " + path + " --module M --length 2"), b = run("spectral " + path + " --module M --length 2");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run("fixture nope").code == 2);
    CHECK(run("hh /nonexistent.json").code == 2);
    CHECK(run("hh " + path + " --module nope").code == 2);

    auto doc = nlohmann::json::parse(run("fixture exterior1").out);
    for (auto& entry : doc["algebra"]["ops"]["2"])
        if (entry["inputs"] == nlohmann::json::array({"x", "1"})) entry["output"]["x"] = "1";
    const std::string bad = write_temp("bad.json", doc.dump());
    Run v = run("verify " + bad + " --length 2");
    CHECK(v.code == 1);
    CHECK(v.out.find("first failure") != std::string::npos);

    const std::string csv = std::string(TEST_TMP_DIR) + "/hh.csv";
    CHECK(run("hh " + path + " --length 2 --csv " + csv).code == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "object,degree,free_rank,torsion,verdict");
}
