#include "kindep/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kindep/bounds.hpp"
#include "kindep/error.hpp"
#include "kindep/graph_io.hpp"
#include "kindep/layers.hpp"
#include "kindep/random_graph.hpp"
#include "kindep/report.hpp"
#include "kindep/solver.hpp"

namespace kindep::cli {
namespace {

using nlohmann::json;

struct FamilyOptions {
    std::string family;
    std::optional<std::int32_t> r, l, t, n, spine, legs;
    std::string sizes;
    std::string p = "1/2";
    std::optional<std::uint64_t> seed;
};

struct InputOptions {
    std::string path;
    std::string graph6;
};

std::vector<std::int32_t> parse_int_list(std::string_view text, std::size_t column) {
    std::vector<std::int32_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        std::int32_t value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ParseError("expected a comma-separated integer list, got \"" + std::string(text) + "\"", column + pos);
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

EdgeProbability parse_probability(const std::string& text) {
    EdgeProbability p;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            // decimal: scale to an exact fraction over 10^digits
            const auto dot = text.find('.');
            const std::string digits = dot == std::string::npos ? text : text.substr(0, dot) + text.substr(dot + 1);
            const std::size_t places = dot == std::string::npos ? 0 : text.size() - dot - 1;
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || places > 12) {
                throw PreconditionError("bad probability");
            }
            p.num = std::stoull(digits);
            p.den = 1;
            for (std::size_t i = 0; i < places; ++i) p.den *= 10;
        } else {
            p.num = std::stoull(text.substr(0, slash));
            p.den = std::stoull(text.substr(slash + 1));
        }
    } catch (const std::logic_error&) {
        throw PreconditionError("edge probability must look like 0.3 or 3/10, got \"" + text + "\"");
    }
    if (p.den == 0 || p.num > p.den) throw PreconditionError("edge probability must lie in [0,1], got " + text);
    return p;
}

FamilyParams to_params(const FamilyOptions& o, std::optional<std::int32_t> k) {
    FamilyParams p;
    p.family = parse_family(o.family);
    p.r = o.r;
    p.l = o.l;
    p.t = o.t;
    p.n = o.n;
    p.spine = o.spine;
    p.legs = o.legs;
    p.k = k;
    if (!o.sizes.empty()) p.sizes = parse_int_list(o.sizes, 0);
    return p;
}

void add_family_options(CLI::App* app, FamilyOptions& o, bool allow_random) {
    app->add_option("--family", o.family,
                    allow_random ? "join-chain|comb|subdiv-comb|star|subdiv-star|g1|g4|g5|random"
                                 : "join-chain|comb|subdiv-comb|star|subdiv-star|g1|g4|g5")
        ->required();
    app->add_option("--r", o.r, "regular degree (g1/g4/g5)");
    app->add_option("--l", o.l, "layer multiplicity l (g1/g4/g5)");
    app->add_option("--t", o.t, "number of disjoint copies (g1/g4/g5)");
    app->add_option("--n", o.n, "vertex count (comb, star, random)");
    app->add_option("--spine", o.spine, "spine length (subdiv-comb)");
    app->add_option("--legs", o.legs, "number of legs (subdiv-star)");
    app->add_option("--sizes", o.sizes, "inner block sizes, comma separated (join-chain)");
    if (allow_random) {
        app->add_option("--p", o.p, "edge probability for random graphs, e.g. 0.3 or 3/10");
        app->add_option("--seed", o.seed, "seed for random graphs (mandatory)");
    }
}

void add_input_options(CLI::App* app, InputOptions& in) {
    auto* path = app->add_option("--input", in.path, "graph file (graph6 or edge list); default: stdin");
    auto* inline_g6 = app->add_option("--graph6", in.graph6, "inline graph6 string");
    path->excludes(inline_g6);
}

Graph read_graph(const InputOptions& opts, std::istream& in) {
    if (!opts.graph6.empty()) return parse_graph6(opts.graph6);
    std::ostringstream buf;
    if (!opts.path.empty()) {
        std::ifstream file(opts.path);
        if (!file) throw PreconditionError("cannot open input file " + opts.path);
        buf << file.rdbuf();
    } else {
        buf << in.rdbuf();
    }
    return parse_graph_text(buf.str());
}

void emit_graph(const Graph& g, const std::string& format, std::ostream& out, const std::string& verb,
                const std::vector<std::string>& args, std::int64_t ms) {
    if (format == "graph6") out << write_graph6(g) << '\n';
    else if (format == "dot") out << to_dot(g);
    else if (format == "edgelist") out << write_edge_list(g);
    else out << make_report(verb, args, "graph", to_json(g), ms).dump(2) << '\n';
}

std::string join(const VertexSet& s) {
    std::ostringstream o;
    for (std::size_t i = 0; i < s.size(); ++i) o << (i ? " " : "") << s[i];
    return o.str();
}

void print_bound_table(const BoundReport& r, std::ostream& out) {
    out << "n=" << r.n << " k=" << r.k << " delta=" << r.min_degree << " Delta=" << r.max_degree
        << " diameter=" << (r.diameter ? std::to_string(*r.diameter) : "inf") << " chi_k=" << r.chi_k
        << (r.chi_exact ? "" : " (greedy)") << '\n';
    out << std::left << std::setw(17) << "case" << std::setw(22) << "subcase" << std::setw(7) << "dir" << std::setw(12)
        << "value" << std::setw(7) << "int" << "applies\n";
    for (const auto& b : r.bounds) {
        out << std::setw(17) << to_string(b.case_id) << std::setw(22) << (b.subcase.empty() ? "-" : b.subcase)
            << std::setw(7) << to_string(b.direction) << std::setw(12) << rational_string(b.value) << std::setw(7)
            << b.floor_value << (b.applicable ? "yes" : "no");
        const bool tight = std::find(r.tight.begin(), r.tight.end(), b.case_id) != r.tight.end();
        if (tight) out << "  tight";
        out << '\n';
    }
    if (r.exact_alpha) out << "alpha_k = " << *r.exact_alpha << "  witness: " << join(r.witness) << '\n';
}

void print_certificate(const Certificate& c, std::ostream& out) {
    out << to_string(c.params.family) << ": " << to_string(c.verdict) << '\n';
    for (const auto& ch : c.checks) out << "  " << (ch.ok ? "ok  " : "FAIL") << ' ' << ch.name << " (" << ch.detail << ")\n";
}

int certificate_exit(const Certificate& c) {
    switch (c.verdict) {
        case Verdict::passed: return kOk;
        case Verdict::failed: return kDomainError;
        case Verdict::indeterminate: return kCapError;
    }
    return kDomainError;
}

json batch_json(const BatchSummary& s) {
    json lines = json::array();
    for (const auto& l : s.lines) {
        json row = {{"line", l.line_no}, {"text", l.text}};
        if (l.certificate) {
            row["verdict"] = to_string(l.certificate->verdict);
            row["certificate"] = to_json(*l.certificate);
        } else {
            row["verdict"] = "rejected";
            row["error"] = l.error;
        }
        lines.push_back(row);
    }
    return {{"lines", lines},
            {"passed", s.passed},
            {"failed", s.failed},
            {"indeterminate", s.indeterminate},
            {"rejected", s.rejected}};
}

void print_batch_table(const BatchSummary& s, std::ostream& out) {
    out << std::left << std::setw(6) << "line" << std::setw(15) << "verdict" << std::setw(8) << "alpha" << "params\n";
    for (const auto& l : s.lines) {
        std::string verdict = l.certificate ? to_string(l.certificate->verdict) : "rejected";
        std::string alpha = l.certificate && l.certificate->achieved_alpha ? std::to_string(*l.certificate->achieved_alpha) : "-";
        out << std::setw(6) << l.line_no << std::setw(15) << verdict << std::setw(8) << alpha << l.text;
        if (!l.error.empty()) out << "  [" << l.error << "]";
        out << '\n';
    }
    out << "passed " << s.passed << ", failed " << s.failed << ", indeterminate " << s.indeterminate << ", rejected "
        << s.rejected << '\n';
}

}  // namespace

FamilyParams parse_grid_line(std::string_view line) {
    FamilyParams p;
    bool have_family = false;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto start = line.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) break;
        const auto end = std::min(line.find_first_of(" \t\r", start), line.size());
        const auto token = line.substr(start, end - start);
        const auto eq = token.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == token.size()) {
            throw ParseError("expected key=value, got \"" + std::string(token) + "\"", start);
        }
        const std::string key(token.substr(0, eq));
        const auto value = token.substr(eq + 1);
        if (key == "family") {
            p.family = parse_family(std::string(value));
            have_family = true;
        } else if (key == "sizes") {
            p.sizes = parse_int_list(value, start + eq + 1);
        } else {
            const auto ints = parse_int_list(value, start + eq + 1);
            if (ints.size() != 1) throw ParseError("key " + key + " takes one integer", start);
            const auto v = ints.front();
            if (key == "r") p.r = v;
            else if (key == "k") p.k = v;
            else if (key == "l") p.l = v;
            else if (key == "t") p.t = v;
            else if (key == "n") p.n = v;
            else if (key == "spine") p.spine = v;
            else if (key == "legs") p.legs = v;
            else throw ParseError("unknown key \"" + key + "\"", start);
        }
        pos = end;
    }
    if (!have_family) throw ParseError("grid line has no family=", 0);
    return p;
}

BatchSummary batch_verify(std::istream& grid, const ExactOptions& options) {
    BatchSummary s;
    std::string text;
    std::size_t line_no = 0;
    while (std::getline(grid, text)) {
        ++line_no;
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#') continue;
        BatchLine row;
        row.line_no = line_no;
        row.text = text.substr(first, text.find_last_not_of(" \t\r") + 1 - first);
        try {
            const auto params = normalize(parse_grid_line(text));
            row.certificate = verify_construction(generate(params), params, options);
            switch (row.certificate->verdict) {
                case Verdict::passed: ++s.passed; break;
                case Verdict::failed: ++s.failed; break;
                case Verdict::indeterminate: ++s.indeterminate; break;
            }
        } catch (const std::exception& e) {
            row.error = "line " + std::to_string(line_no) + ": " + e.what();
            ++s.rejected;
        }
        s.lines.push_back(std::move(row));
    }
    return s;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compute, bound and certify k-independence numbers of graphs."};
    app.name("kindep");
    app.require_subcommand(1, 1);

    FamilyOptions fam;
    InputOptions input;
    std::optional<std::int32_t> k;
    std::string method;
    std::string format;
    bool exact = false;
    std::optional<std::uint64_t> max_nodes;
    std::string grid_path;

    auto* gen = app.add_subcommand("gen", "generate a construction (or a seeded random connected graph)");
    add_family_options(gen, fam, true);
    gen->add_option("--format", format, "graph6|dot|edgelist|json")
        ->check(CLI::IsMember({"graph6", "dot", "edgelist", "json"}))
        ->default_str("graph6");

    auto* solve = app.add_subcommand("solve", "compute alpha_k of an input graph");
    solve->add_option("--k", k, "distance parameter")->required();
    solve->add_option("--method", method, "exact|brute|greedy")->check(CLI::IsMember({"exact", "brute", "greedy"}));
    solve->add_option("--max-nodes", max_nodes, "branch-and-bound node budget");
    solve->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    add_input_options(solve, input);

    auto* power = app.add_subcommand("power", "emit the graph power G^k");
    power->add_option("--k", k, "distance parameter")->required();
    power->add_option("--format", format, "graph6|dot|edgelist|json")
        ->check(CLI::IsMember({"graph6", "dot", "edgelist", "json"}));
    add_input_options(power, input);

    auto* bounds = app.add_subcommand("bounds", "evaluate every alpha_k bound on an input graph");
    bounds->add_option("--k", k, "distance parameter")->required();
    bounds->add_flag("--exact", exact, "also solve alpha_k exactly and mark tight bounds");
    bounds->add_option("--max-nodes", max_nodes, "branch-and-bound node budget");
    bounds->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    add_input_options(bounds, input);

    auto* chroma = app.add_subcommand("chroma", "k-distance chromatic number");
    chroma->add_option("--k", k, "distance parameter")->required();
    chroma->add_option("--method", method, "exact|greedy")->check(CLI::IsMember({"exact", "greedy"}));
    chroma->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    add_input_options(chroma, input);

    auto* verify = app.add_subcommand("verify", "generate a construction and certify its claimed alpha_k");
    add_family_options(verify, fam, false);
    verify->add_option("--k", k, "distance parameter (must match the family)");
    verify->add_option("--max-nodes", max_nodes, "branch-and-bound node budget");
    verify->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* batch = app.add_subcommand("batch", "verify every parameter line of a grid file");
    batch->add_option("--grid", grid_path, "grid file, one key=value parameter set per line")->required();
    batch->add_option("--max-nodes", max_nodes, "branch-and-bound node budget per line");
    batch->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));

    gen->add_option("--k", k, "distance parameter (subdiv-comb, subdiv-star, or instead of --l)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    const auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    };
    const ExactOptions exact_opts{max_nodes};

    try {
        if (gen->parsed()) {
            if (format.empty()) format = "graph6";
            Graph g;
            if (fam.family == "random") {
                if (!fam.seed) {
                    err << "gen --family random requires --seed\n";
                    return kUsageError;
                }
                if (!fam.n) {
                    err << "gen --family random requires --n\n";
                    return kUsageError;
                }
                g = random_connected_graph(*fam.n, parse_probability(fam.p), *fam.seed);
            } else {
                g = generate(to_params(fam, k));
            }
            emit_graph(g, format, out, "gen", args, elapsed_ms());
            return kOk;
        }
        if (solve->parsed()) {
            const Graph g = read_graph(input, in);
            SolveResult r;
            if (method.empty() || method == "exact") r = alpha_k_exact(g, *k, exact_opts);
            else if (method == "brute") r = alpha_k_bruteforce(g, *k);
            else r = alpha_k_greedy(g, *k);
            if (format == "text") {
                out << "alpha_" << *k << " = " << r.alpha << " (" << to_string(r.method) << ")\nwitness: " << join(r.witness)
                    << '\n';
            } else {
                out << make_report("solve", args, "solve_result", to_json(r, *k), elapsed_ms()).dump(2) << '\n';
            }
            return kOk;
        }
        if (power->parsed()) {
            const Graph g = read_graph(input, in);
            emit_graph(graph_power(g, *k), format.empty() ? "graph6" : format, out, "power", args, elapsed_ms());
            return kOk;
        }
        if (bounds->parsed()) {
            const Graph g = read_graph(input, in);
            const auto rep = bound_report(g, *k, exact, exact_opts);
            if (format == "text") {
                print_bound_table(rep, out);
                return kOk;
            }
            json payload = to_json(rep);
            payload["layer_audit"] = nullptr;
            if (rep.exact_alpha) {
                try {
                    payload["layer_audit"] = to_json(check_layer_inequalities(g, rep.witness, *k));
                } catch (const PreconditionError&) {
                    // audit preconditions (connected, diam >= k+1) not met
                }
            }
            out << make_report("bounds", args, "bound_report", payload, elapsed_ms()).dump(2) << '\n';
            return kOk;
        }
        if (chroma->parsed()) {
            const Graph g = read_graph(input, in);
            const auto r = method == "greedy" ? chi_k_greedy(g, *k) : chi_k_exact(g, *k);
            if (format == "text") {
                out << "chi_" << *k << " = " << r.num_colors << (r.exact ? " (exact)" : " (greedy)") << '\n';
            } else {
                out << make_report("chroma", args, "coloring_result", to_json(r, *k), elapsed_ms()).dump(2) << '\n';
            }
            return kOk;
        }
        if (verify->parsed()) {
            const auto params = normalize(to_params(fam, k));
            ExactOptions opts = exact_opts;
            if (!opts.max_nodes) opts.max_nodes = kDefaultVerifyNodeBudget;
            const auto cert = verify_construction(generate(params), params, opts);
            if (format == "text") print_certificate(cert, out);
            else out << make_report("verify", args, "certificate", to_json(cert), elapsed_ms()).dump(2) << '\n';
            if (cert.verdict == Verdict::failed) err << "verification failed at " << cert.first_failure() << '\n';
            if (cert.verdict == Verdict::indeterminate) err << "verification indeterminate: alpha search hit the node budget\n";
            return certificate_exit(cert);
        }
        if (batch->parsed()) {
            std::ifstream grid(grid_path);
            if (!grid) throw PreconditionError("cannot open grid file " + grid_path);
            ExactOptions opts = exact_opts;
            if (!opts.max_nodes) opts.max_nodes = kDefaultVerifyNodeBudget;
            const auto summary = batch_verify(grid, opts);
            if (format == "text") print_batch_table(summary, out);
            else out << make_report("batch", args, "batch_summary", batch_json(summary), elapsed_ms()).dump(2) << '\n';
            for (const auto& l : summary.lines)
                if (!l.error.empty()) err << l.error << '\n';
            return summary.ok() ? kOk : kDomainError;
        }
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace kindep::cli
