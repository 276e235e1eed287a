#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "kindep/cli.hpp"
#include "kindep/constructions.hpp"
#include "kindep/error.hpp"
#include "kindep/graph_io.hpp"
#include "kindep/report.hpp"

using namespace kindep;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

// Validator for the subset of JSON Schema the committed schema uses:
// type, enum, const, pattern, minimum, properties, required,
// additionalProperties, items, oneOf and local $ref.
class MiniSchema {
public:
    explicit MiniSchema(json root) : root_(std::move(root)) {}

    bool validate(const json& doc, std::string& why) const { return check(root_, doc, "$", why); }

private:
    json root_;

    static bool type_matches(const std::string& t, const json& v) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "integer") return v.is_number_integer();
        if (t == "number") return v.is_number();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        return false;
    }

    bool check(const json& s, const json& v, const std::string& at, std::string& why) const {
        if (s.contains("$ref")) {
            const auto ref = s["$ref"].get<std::string>();
            const std::string prefix = "#/definitions/";
            REQUIRE(ref.rfind(prefix, 0) == 0);
            return check(root_["definitions"][ref.substr(prefix.size())], v, at, why);
        }
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array()) {
                for (const auto& t : s["type"]) ok = ok || type_matches(t.get<std::string>(), v);
            } else {
                ok = type_matches(s["type"].get<std::string>(), v);
            }
            if (!ok) return fail(why, at, "wrong type");
        }
        if (s.contains("const") && v != s["const"]) return fail(why, at, "const mismatch");
        if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
            return fail(why, at, "not in enum: " + v.dump());
        if (s.contains("pattern") && v.is_string() && !std::regex_match(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
            return fail(why, at, "pattern mismatch");
        if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
            return fail(why, at, "below minimum");
        if (v.is_object()) {
            if (s.contains("required"))
                for (const auto& key : s["required"])
                    if (!v.contains(key.get<std::string>())) return fail(why, at, "missing " + key.get<std::string>());
            const json props = s.value("properties", json::object());
            for (const auto& [key, val] : v.items()) {
                if (props.contains(key)) {
                    if (!check(props[key], val, at + "." + key, why)) return false;
                } else if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
                    return fail(why, at, "unexpected key " + key);
                }
            }
        }
        if (v.is_array() && s.contains("items")) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!check(s["items"], v[i], at + "[" + std::to_string(i) + "]", why)) return false;
        }
        if (s.contains("oneOf")) {
            int matches = 0;
            std::string inner;
            for (const auto& alt : s["oneOf"]) {
                std::string ignored;
                if (check(alt, v, at, ignored)) ++matches;
                else inner = ignored;
            }
            if (matches != 1) return fail(why, at, "oneOf matched " + std::to_string(matches) + " (" + inner + ")");
        }
        return true;
    }

    static bool fail(std::string& why, const std::string& at, const std::string& msg) {
        why = at + ": " + msg;
        return false;
    }
};

const MiniSchema& schema() {
    static const MiniSchema s = [] {
        std::ifstream f(KINDEP_SCHEMA_PATH);
        REQUIRE(f.good());
        return MiniSchema(json::parse(f));
    }();
    return s;
}

void check_schema(const std::string& text) {
    const auto doc = json::parse(text);
    std::string why;
    const bool ok = schema().validate(doc, why);
    CHECK_MESSAGE(ok, why);
}

const std::string kC6 = write_graph6(cycle_graph(6));

}  // namespace

TEST_CASE("grid line parsing") {
    const auto p = cli::parse_grid_line("family=g1 r=3 l=1 t=2");
    CHECK(p.family == Family::g1);
    CHECK(p.r == 3);
    CHECK(p.t == 2);
    CHECK(cli::parse_grid_line("family=join-chain sizes=2,3,1").sizes == std::vector<std::int32_t>{2, 3, 1});
    CHECK_THROWS_AS(cli::parse_grid_line("r=3"), ParseError);
    CHECK_THROWS_AS(cli::parse_grid_line("family=g1 r"), ParseError);
    CHECK_THROWS_AS(cli::parse_grid_line("family=g1 q=4"), ParseError);
    CHECK_THROWS_AS(cli::parse_grid_line("family=g1 r=x"), ParseError);
    CHECK_THROWS_AS(cli::parse_grid_line("family=h1"), PreconditionError);
}

TEST_CASE("batch verification") {
    std::istringstream grid("# header\nfamily=g1 r=3 l=1\n\nfamily=comb n=10\nfamily=g4 r=2 l=1\nfamily=star n=8 k=1\n");
    const auto s = cli::batch_verify(grid);
    CHECK(s.lines.size() == 4);
    CHECK(s.passed == 3);
    CHECK(s.rejected == 1);
    CHECK(s.lines[2].line_no == 5);
    CHECK(s.lines[2].error.find("line 5") != std::string::npos);
    CHECK_FALSE(s.ok());
}

TEST_CASE("gen") {
    const auto r = run_cli({"gen", "--family", "g1", "--r", "3", "--l", "1", "--t", "1"});
    CHECK(r.code == cli::kOk);
    CHECK(parse_graph6(r.out) == build_g1(3, 1, 1));

    const auto j = run_cli({"gen", "--family", "comb", "--n", "10", "--format", "json"});
    CHECK(j.code == cli::kOk);
    check_schema(j.out);
    CHECK(json::parse(j.out)["payload"]["n"] == 10);

    const auto dot = run_cli({"gen", "--family", "star", "--n", "4", "--format", "dot"});
    CHECK(dot.out.rfind("graph G {", 0) == 0);
    CHECK(run_cli({"gen", "--family", "subdiv-comb", "--k", "4", "--spine", "3", "--format", "edgelist"}).out.rfind("9 8\n", 0) == 0);

    const auto rnd1 = run_cli({"gen", "--family", "random", "--n", "12", "--p", "1/4", "--seed", "9"});
    const auto rnd2 = run_cli({"gen", "--family", "random", "--n", "12", "--p", "0.25", "--seed", "9"});
    CHECK(rnd1.code == cli::kOk);
    CHECK(rnd1.out == rnd2.out);
    CHECK(is_connected(parse_graph6(rnd1.out)));

    CHECK(run_cli({"gen", "--family", "random", "--n", "12", "--p", "0.25"}).code == cli::kUsageError);
    CHECK(run_cli({"gen", "--family", "g1", "--r", "2", "--l", "1"}).code == cli::kDomainError);
    CHECK(run_cli({"gen", "--family", "g4", "--r", "3", "--k", "4"}).code == cli::kDomainError);
    CHECK(run_cli({"gen", "--family", "nope"}).code != cli::kOk);
}

TEST_CASE("solve") {
    const auto r = run_cli({"solve", "--k", "2", "--method", "exact"}, kC6 + "\n");
    CHECK(r.code == cli::kOk);
    check_schema(r.out);
    const auto doc = json::parse(r.out);
    CHECK(doc["payload"]["alpha"] == 2);
    CHECK(doc["payload_type"] == "solve_result");
    CHECK(doc["command"]["verb"] == "solve");

    const auto txt = run_cli({"solve", "--k", "2", "--format", "text", "--graph6", kC6});
    CHECK(txt.out.rfind("alpha_2 = 2", 0) == 0);

    const auto edge = run_cli({"solve", "--k", "1", "--method", "brute"}, "3 2\n0 1\n1 2\n");
    CHECK(json::parse(edge.out)["payload"]["alpha"] == 2);

    const auto big = write_graph6(path_graph(kBruteForceCap + 2));
    CHECK(run_cli({"solve", "--k", "2", "--method", "brute", "--graph6", big}).code == cli::kCapError);
    CHECK(run_cli({"solve", "--k", "1", "--max-nodes", "2", "--graph6", write_graph6(cycle_graph(40))}).code ==
          cli::kCapError);
    CHECK(run_cli({"solve", "--graph6", kC6}).code == cli::kUsageError);
    CHECK(run_cli({"solve", "--k", "2", "--graph6", "D?"}).code == cli::kDomainError);
    CHECK(run_cli({"solve", "--k", "2", "--input", "/nonexistent/graph.g6"}).code == cli::kDomainError);
    CHECK(run_cli({}).code == cli::kUsageError);
    CHECK(run_cli({"frobnicate"}).code == cli::kUsageError);
}

TEST_CASE("power and chroma") {
    const auto p = run_cli({"power", "--k", "2", "--format", "edgelist", "--graph6", write_graph6(path_graph(4))});
    CHECK(p.out == "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n");
    const auto pj = run_cli({"power", "--k", "2", "--format", "json", "--graph6", kC6});
    check_schema(pj.out);

    const auto c = run_cli({"chroma", "--k", "2", "--graph6", write_graph6(petersen_graph())});
    CHECK(c.code == cli::kOk);
    check_schema(c.out);
    CHECK(json::parse(c.out)["payload"]["num_colors"] == 10);
    const auto g = run_cli({"chroma", "--k", "2", "--method", "greedy", "--format", "text", "--graph6", kC6});
    CHECK(g.out.find("(greedy)") != std::string::npos);
}

TEST_CASE("bounds") {
    const auto r = run_cli({"bounds", "--k", "2", "--exact", "--graph6", write_graph6(build_g1(3, 1, 1))});
    CHECK(r.code == cli::kOk);
    check_schema(r.out);
    const auto payload = json::parse(r.out)["payload"];
    CHECK(payload["exact_alpha"] == 3);
    CHECK(payload["bounds"].size() == 6);
    const auto tight = payload["tight"];
    CHECK(std::find(tight.begin(), tight.end(), "T2_CASE3") != tight.end());
    CHECK(payload["layer_audit"].is_object());

    const auto no_exact = run_cli({"bounds", "--k", "2", "--graph6", kC6});
    CHECK(json::parse(no_exact.out)["payload"]["layer_audit"].is_null());
    CHECK(json::parse(no_exact.out)["payload"]["exact_alpha"].is_null());

    const auto audit = run_cli({"bounds", "--k", "10", "--exact", "--graph6", write_graph6(path_graph(12))});
    check_schema(audit.out);
    CHECK(json::parse(audit.out)["payload"]["layer_audit"]["rows"].size() == 2);

    const auto text = run_cli({"bounds", "--k", "2", "--exact", "--format", "text", "--graph6", write_graph6(build_g1(3, 1, 1))});
    CHECK(text.out.find("tight") != std::string::npos);
    CHECK(text.out.find("REGULAR_ALPHA2") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    const auto ok = run_cli({"verify", "--family", "g4", "--r", "3", "--l", "1"});
    CHECK(ok.code == cli::kOk);
    check_schema(ok.out);
    CHECK(json::parse(ok.out)["payload"]["verdict"] == "passed");

    const auto capped = run_cli({"verify", "--family", "g1", "--r", "4", "--l", "2", "--max-nodes", "2"});
    CHECK(capped.code == cli::kCapError);
    check_schema(capped.out);
    CHECK(json::parse(capped.out)["payload"]["verdict"] == "indeterminate");

    CHECK(run_cli({"verify", "--family", "g1", "--r", "3", "--l", "1", "--k", "3"}).code == cli::kDomainError);
    const auto text = run_cli({"verify", "--family", "comb", "--n", "10", "--format", "text"});
    CHECK(text.out.find("comb: passed") == 0);
}

TEST_CASE("batch verb") {
    const auto dir = std::filesystem::temp_directory_path() / "kindep_cli_test";
    std::filesystem::create_directories(dir);
    const auto good = (dir / "good.grid").string();
    const auto bad = (dir / "bad.grid").string();
    std::ofstream(good) << "family=g5 r=3 l=1\nfamily=subdiv-star k=3 legs=3\n";
    std::ofstream(bad) << "family=g5 r=3 l=1\nfamily=g5 r=3\n";

    const auto g = run_cli({"batch", "--grid", good});
    CHECK(g.code == cli::kOk);
    check_schema(g.out);
    CHECK(json::parse(g.out)["payload"]["passed"] == 2);

    const auto b = run_cli({"batch", "--grid", bad, "--format", "text"});
    CHECK(b.code == cli::kDomainError);
    CHECK(b.err.find("line 2") != std::string::npos);
    CHECK(run_cli({"batch", "--grid", (dir / "missing.grid").string()}).code == cli::kDomainError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("property: JSON output is deterministic apart from timing") {
    const std::vector<std::vector<std::string>> invocations{
        {"gen", "--family", "g1", "--r", "3", "--l", "1", "--format", "json"},
        {"gen", "--family", "random", "--n", "14", "--p", "3/10", "--seed", "4", "--format", "json"},
        {"solve", "--k", "3", "--graph6", write_graph6(build_g4(3, 1, 1))},
        {"bounds", "--k", "4", "--exact", "--graph6", write_graph6(build_g5(4, 1, 1))},
        {"verify", "--family", "g5", "--r", "4", "--l", "1"},
    };
    for (const auto& args : invocations) {
        const auto a = json::parse(run_cli(args).out);
        const auto b = json::parse(run_cli(args).out);
        check_schema(a.dump());
        CHECK(without_timing(a).dump() == without_timing(b).dump());
        CHECK(a["command"]["argv"] == json(args));
    }
}
