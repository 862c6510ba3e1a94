// repcol: command-line front end for the representatives coloring library.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "repcol/repcol.hpp"

namespace fs = std::filesystem;
using namespace repcol;

namespace {

constexpr int kExitFail = 2;
constexpr int kExitInconclusive = 3;

struct Caps
{
    int odd = 9;
    int internal = 9;
    int cf = 6;
};

Caps parse_caps(const std::string& text)
{
    Caps caps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("--caps entry '" + item + "' is not key=value");
        std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidInput("--caps value in '" + item + "' is not an integer");
        }
        if (value < 0) throw InvalidInput("--caps values must be nonnegative");
        if (key == "odd")
            caps.odd = value;
        else if (key == "internal")
            caps.internal = value;
        else if (key == "cf")
            caps.cf = value;
        else
            throw InvalidInput("unknown --caps key '" + key + "'");
    }
    return caps;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/** FNV-1a 64-bit, hex. */
std::string digest(const std::string& bytes)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream ss;
    ss << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return ss.str();
}

/** Parses a side file, prefixing errors with its path. */
template <typename Parse>
auto load(const std::string& path, Parse&& parse)
{
    std::istringstream in(read_file(path));
    try {
        return parse(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

/** Writes through a temporary file and renames it into place. */
void write_atomic(const std::string& path, const std::string& text)
{
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw InvalidInput("cannot write " + path);
        out << text;
    }
    fs::rename(tmp, target);
}

void emit(const std::string& out_path, const std::string& text)
{
    if (out_path.empty())
        std::cout << text;
    else
        write_atomic(out_path, text);
}

Json ordering_json(const VertexOrdering& ord)
{
    Json a = Json::array();
    for (Vertex v : ord.sequence()) a.push_back(v + 1);
    return a;
}

VertexSet parse_set(const std::string& text, int n)
{
    VertexSet s;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int v = 0;
        try {
            v = std::stoi(tok);
        } catch (const std::exception&) {
            throw InvalidInput("--set entry '" + tok + "' is not a vertex id");
        }
        if (v < 1 || v > n) throw InvalidInput("--set entry " + tok + " out of range");
        s.push_back(v - 1);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Problem parse_problem_kind(const std::string& name, const Graph& g, const std::string& weights_path,
                           const std::string& precoloring_path)
{
    if (name == "coloring") return ColoringProblem{};
    if (name == "max_coloring" || name == "maxcol") {
        if (weights_path.empty()) throw InvalidInput("max-coloring needs --weights");
        return MaxColoringProblem{load(weights_path, [&](std::istream& in) { return parse_weights(in, g.order()); })};
    }
    if (name == "precolor_ext" || name == "preext") {
        if (precoloring_path.empty()) throw InvalidInput("precoloring extension needs --precoloring");
        return PrecolorExtProblem{load(precoloring_path, [&](std::istream& in) { return parse_precoloring(in, g.order()); })};
    }
    throw InvalidInput("unknown problem '" + name + "'");
}

/** Explicit ordering, else the one the problem calls for. */
VertexOrdering resolve_ordering(const Graph& g, const std::string& path, const Problem& problem)
{
    if (!path.empty()) return load(path, [&](std::istream& in) { return parse_ordering(in, g.order()); });
    if (const auto* mc = std::get_if<MaxColoringProblem>(&problem)) return ordering_by_weight(g, mc->weights);
    if (const auto* pe = std::get_if<PrecolorExtProblem>(&problem)) return ordering_consistent(g, pe->precoloring);
    return ordering_identity(g);
}

struct Options
{
    std::uint64_t seed = 1;
    std::string caps_text = "odd=9,internal=9,cf=6";
    std::string format = "json";
    bool timing = false;

    std::string graph;
    std::string ordering;
    std::string weights;
    std::string precoloring;
    std::string out;
    std::string problem = "coloring";
    std::string variant = "compact";
    std::string method = "exact";
    std::string check;
    std::string mode = "auto";
    int probes = 200;
    std::string inequality;
    std::string set;
    std::string point;
    std::string families = "model,odd-set,internal,clique-family";
    int max_n = 6;
};

class Runner
{
    public:
        explicit Runner(const Options& o) : o_(o), caps_(parse_caps(o.caps_text)) {}

        int build_rep_cmd()
        {
            Graph g = graph();
            VertexOrdering ord = resolve_ordering(g, o_.ordering, ColoringProblem{});
            RepGraph r = build_rep(g, ord);
            emit(o_.out, to_json(r).dump(2) + "\n");
            (o_.out.empty() ? std::cerr : std::cout)
                << "arcs: " << r.size() << ", edges: " << r.adjacency.size() << "\n";
            return 0;
        }

        int export_lp_cmd()
        {
            if (o_.out.empty()) throw InvalidInput("export-lp needs --out");
            Graph g = graph();
            Problem problem = parse_problem_kind(o_.problem, g, o_.weights, o_.precoloring);
            VertexOrdering ord = resolve_ordering(g, o_.ordering, problem);
            Variant variant = o_.variant == "original" ? Variant::original
                              : o_.variant == "compact" ? Variant::compact
                              : throw InvalidInput("unknown variant '" + o_.variant + "'");
            ModelSpec m = build_model(g, ord, variant, problem);
            write_atomic(o_.out, export_lp(m));
            Json side{{"problem", m.problem},
                      {"variant", o_.variant},
                      {"ordering", ordering_json(ord)},
                      {"sense", m.objective.maximize ? "maximize" : "minimize"},
                      {"objective_offset", to_string(m.objective.offset)},
                      {"variables", m.variables.size()},
                      {"constraints", m.constraints.size()},
                      {"fixings", m.fixings.size()}};
            write_atomic(o_.out + ".json", side.dump(2) + "\n");
            return 0;
        }

        int classify_cmd()
        {
            Graph g = graph();
            Graph co = complement(g);
            Json res{{"n", g.order()},
                     {"m", g.size()},
                     {"alpha_le_2", !contains_subgraph(co, Pattern::triangle)},
                     {"co_K4_diamond_paw_free", is_co_k4_diamond_paw_free(g)},
                     {"co_kite_free", !contains_subgraph(co, Pattern::kite)},
                     {"co_claw_free", !contains_subgraph(co, Pattern::claw)}};
            if (auto dec = cojoin_decompose(g)) {
                Json triples = Json::array();
                for (const auto& t : dec->triples) triples.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
                res["decomposition"] = Json{{"rest", vertex_set_json(dec->rest)}, {"triples", triples}};
            }
            emit(o_.out, report("classify", res).dump(2) + "\n");
            return 0;
        }

        int verify_cmd()
        {
            Graph g = graph();
            Json params{{"check", o_.check}};
            Verdict v;
            std::optional<VertexOrdering> ord;
            try {
                v = run_check(g, ord, params);
            } catch (const CapExceeded& e) {
                v.pass = false;
                v.exhausted = false;
                v.witness = e.what();
            }
            std::string result = !v.exhausted ? "inconclusive" : v.pass ? "pass" : "fail";
            Json rep = report("verify", Json::object());
            rep["check"] = o_.check;
            rep["graph"] = o_.graph;
            rep["ordering"] = ord ? ordering_json(*ord) : Json();
            rep["parameters"].update(params);
            rep["result"] = result;
            rep["witnesses"] = v.witness.empty() ? Json::array() : Json::array({v.witness});
            rep["exhausted"] = v.exhausted;
            rep.erase("results");
            emit(o_.out, rep.dump(2) + "\n");
            return !v.exhausted ? kExitInconclusive : v.pass ? 0 : kExitFail;
        }

        int solve_cmd()
        {
            Graph g = graph();
            Problem problem = parse_problem_kind(o_.problem, g, o_.weights, o_.precoloring);
            Json res;
            try {
                ColoringSolution s;
                if (o_.method == "matching") {
                    if (std::holds_alternative<MaxColoringProblem>(problem))
                        throw InvalidInput("the matching method covers coloring and precoloring extension only");
                    if (const auto* pe = std::get_if<PrecolorExtProblem>(&problem))
                        s = solve_precolor_ext_matching(g, pe->precoloring);
                    else
                        s = solve_coloring_matching(g);
                } else if (o_.method == "exact") {
                    s = solve_exact(g, resolve_ordering(g, o_.ordering, problem), problem);
                } else {
                    throw InvalidInput("unknown method '" + o_.method + "'");
                }
                res = to_json(s);
                res["status"] = "optimal";
                res["ordering"] = ordering_json(s.ordering);
            } catch (const Infeasible& e) {
                res = Json{{"status", "infeasible"}, {"reason", e.what()}};
            }
            emit(o_.out, res.dump(2) + "\n");
            return 0;
        }

        int separate_cmd()
        {
            Graph g = graph();
            VertexOrdering ord = resolve_ordering(g, o_.ordering, ColoringProblem{});
            if (o_.point.empty()) throw InvalidInput("separate needs --point");
            PointVector p = load(o_.point, [](std::istream& in) {
                try {
                    return point_from_json(Json::parse(in));
                } catch (const Json::exception& e) {
                    throw ParseError(e.what());
                }
            });
            SeparationFamilies fam{false, false, false, false};
            std::stringstream ss(o_.families);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "model") fam.model_rows = true;
                else if (item == "odd-set") fam.odd_set = true;
                else if (item == "internal") fam.internal = true;
                else if (item == "clique-family") fam.clique_family = true;
                else if (!item.empty()) throw InvalidInput("unknown family '" + item + "'");
            }
            SeparationResult r = separate_bruteforce(g, ord, p, fam, SeparationCaps{caps_.odd, caps_.internal, caps_.cf});
            Json res{{"violated", r.cut ? to_json(*r.cut) : Json()},
                     {"violation", to_string(r.violation)},
                     {"exhausted", r.exhausted}};
            Json rep = report("separate", res);
            rep["exhausted"] = r.exhausted;
            emit(o_.out, rep.dump(2) + "\n");
            return 0;
        }

        int facet_cmd()
        {
            Graph g = graph();
            VertexOrdering ord = resolve_ordering(g, o_.ordering, ColoringProblem{});
            if (o_.set.empty()) throw InvalidInput("facet needs --set");
            VertexSet s = parse_set(o_.set, g.order());
            LinearInequality ineq = internal_inequality(g, ord, s);
            Json res{{"set", vertex_set_json(s)},
                     {"inequality", to_json(ineq)},
                     {"sufficient_condition", std::string(certificate_name(internal_facet_sufficient(g, s)))}};
            bool exhausted = true;
            try {
                res["is_facet"] = is_facet(ineq, g, ord);
            } catch (const CapExceeded& e) {
                res["is_facet"] = Json();
                res["cap"] = e.what();
                exhausted = false;
            }
            Json rep = report("facet", res);
            rep["ordering"] = ordering_json(ord);
            rep["exhausted"] = exhausted;
            emit(o_.out, rep.dump(2) + "\n");
            return exhausted ? 0 : kExitInconclusive;
        }

        int corpus_cmd()
        {
            if (o_.max_n < 1 || o_.max_n > 7) throw InvalidInput("corpus supports 1 <= --max-n <= 7");
            if (o_.out.empty()) throw InvalidInput("corpus needs --out");
            fs::create_directories(o_.out);
            Json counts = Json::object();
            int total = 0;
            for (int n = 1; n <= o_.max_n; ++n) {
                std::vector<Graph> graphs = connected_graphs(n);
                counts[std::to_string(n)] = graphs.size();
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    std::ostringstream name, text;
                    name << "n" << n << "_" << std::setw(4) << std::setfill('0') << i + 1 << ".col";
                    write_dimacs(text, graphs[i], "connected graph " + std::to_string(i + 1) + " on " + std::to_string(n) + " vertices");
                    write_atomic((fs::path(o_.out) / name.str()).string(), text.str());
                    ++total;
                }
            }
            Json named = Json::array();
            for (const NamedGraph& ng : named_graphs()) {
                std::ostringstream text;
                write_dimacs(text, ng.graph, ng.name);
                write_atomic((fs::path(o_.out) / (ng.name + ".col")).string(), text.str());
                named.push_back(ng.name + ".col");
            }
            Json res{{"connected_counts", counts}, {"connected_total", total}, {"named", named}};
            std::cout << report("corpus", res).dump(2) << "\n";
            return 0;
        }

    private:
        Graph graph()
        {
            if (o_.graph.empty()) throw InvalidInput("missing graph file");
            std::string text = read_file(o_.graph);
            inputs_[o_.graph] = digest(text);
            try {
                return parse_dimacs(text);
            } catch (const ParseError& e) {
                throw ParseError(o_.graph + ": " + e.what());
            }
        }

        void note_input(const std::string& path)
        {
            if (!path.empty()) inputs_[path] = digest(read_file(path));
        }

        Json report(const std::string& command, Json results)
        {
            for (const std::string* p : {&o_.ordering, &o_.weights, &o_.precoloring, &o_.inequality, &o_.point})
                note_input(*p);
            Json inputs = Json::object();
            for (const auto& [path, d] : inputs_) inputs[path] = d;
            Json rep{{"command", command},
                     {"inputs", inputs},
                     {"parameters", Json{{"caps", Json{{"odd", caps_.odd}, {"internal", caps_.internal}, {"cf", caps_.cf}}}}},
                     {"results", std::move(results)},
                     {"seed", o_.seed}};
            if (o_.timing)
                rep["wall_time_ms"] =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
            return rep;
        }

        std::variant<LpObjectiveProbe, HullCompare> pick_mode(const Graph& g, const VertexOrdering& ord, Json& params)
        {
            std::string mode = o_.mode;
            if (mode == "auto") mode = build_rep(g, ord).size() <= HullCompare{}.max_arcs ? "hull" : "probe";
            params["mode"] = mode;
            if (mode == "hull") return HullCompare{};
            if (mode == "probe") {
                params["probes"] = o_.probes;
                return LpObjectiveProbe{o_.probes, o_.seed};
            }
            throw InvalidInput("unknown --mode '" + o_.mode + "' (auto, hull, probe)");
        }

        Verdict run_check(const Graph& g, std::optional<VertexOrdering>& ord, Json& params)
        {
            const std::string& c = o_.check;
            if (c == "preext") {
                if (o_.precoloring.empty()) throw InvalidInput("--check preext needs --precoloring");
                Precoloring rho = load(o_.precoloring, [&](std::istream& in) { return parse_precoloring(in, g.order()); });
                ord = resolve_ordering(g, o_.ordering, PrecolorExtProblem{rho});
                return verify_preext_identity(g, rho, *ord);
            }
            ord = resolve_ordering(g, o_.ordering, ColoringProblem{});
            if (c == "coltostab") return verify_coltostab(g, *ord);
            if (c == "match-subset") return verify_match_subset(g, *ord);
            if (c == "edmonds-complete") {
                params["odd_set_cap"] = caps_.odd;
                auto system = orient_on_arcs(matching_system(complement(g), caps_.odd), *ord);
                return verify_characterization(g, *ord, system, pick_mode(g, *ord, params));
            }
            if (c == "copaw-complete") {
                auto aux = build_H_G(g, *ord);
                if (!aux) throw InvalidInput("complement contains K4, diamond or paw; the decomposition does not apply");
                if (!linegraph_matches_rep(*aux, build_rep(g, *ord)))
                    return {false, "L(H) does not match R under the natural map", true};
                params["odd_set_cap"] = caps_.odd;
                auto system = map_to_arcs(matching_system(aux->graph, caps_.odd), *aux);
                return verify_characterization(g, *ord, system, pick_mode(g, *ord, params));
            }
            if (c == "quasiline-complete") return quasiline_check(g, *ord, params);
            if (c == "facet") {
                LinearInequality ineq;
                if (!o_.inequality.empty()) {
                    ineq = load(o_.inequality, [](std::istream& in) {
                        try {
                            return inequality_from_json(Json::parse(in));
                        } catch (const Json::exception& e) {
                            throw ParseError(e.what());
                        }
                    });
                } else if (!o_.set.empty()) {
                    ineq = internal_inequality(g, *ord, parse_set(o_.set, g.order()));
                } else {
                    throw InvalidInput("--check facet needs --inequality or --set");
                }
                params["inequality"] = to_json(ineq);
                bool facet = is_facet(ineq, g, *ord);
                return {facet, facet ? "" : "not a facet of the coloring polytope", true};
            }
            throw InvalidInput("unknown check '" + c + "'");
        }

        /** Clique-family system with cap escalation on failure. */
        Verdict quasiline_check(const Graph& g, const VertexOrdering& ord, Json& params)
        {
            constexpr std::size_t kRowBudget = 20000;
            auto mode = pick_mode(g, ord, params);
            int cap = caps_.cf;
            for (;;) {
                CliqueFamilySystem sys = clique_family_system(g, ord, cap);
                params["cf_family_cap"] = cap;
                params["rows"] = sys.rows.size();
                Verdict v = verify_characterization(g, ord, sys.rows, mode);
                v.exhausted = sys.exhausted;
                if (v.pass || sys.exhausted) return v;
                CliqueFamilySystem next = clique_family_system(g, ord, cap + 1);
                if (next.rows.size() > kRowBudget) return v;
                ++cap;
            }
        }

        const Options& o_;
        Caps caps_;
        std::map<std::string, std::string> inputs_;
        std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Representatives formulation toolkit for vertex coloring"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "Seed for pseudo-random objectives and samples");
    app.add_option("--caps", o.caps_text, "Search caps, e.g. odd=9,internal=9,cf=6");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json"}));
    app.add_flag("--timing", o.timing, "Include wall time in reports (breaks byte-identical output)");

    auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", o.graph, "DIMACS .col file")->required(); };
    auto out_opt = [&](CLI::App* sub) { sub->add_option("-o,--out", o.out, "Output file (default stdout)"); };
    auto ord_opt = [&](CLI::App* sub) { sub->add_option("--ordering", o.ordering, "Ordering file"); };
    auto problem_opts = [&](CLI::App* sub) {
        sub->add_option("--problem", o.problem, "coloring, max_coloring or precolor_ext");
        sub->add_option("--weights", o.weights, "Weights file");
        sub->add_option("--precoloring", o.precoloring, "Precoloring file");
    };

    CLI::App* build = app.add_subcommand("build-rep", "Build the representatives graph R");
    graph_arg(build);
    ord_opt(build);
    out_opt(build);

    CLI::App* lp = app.add_subcommand("export-lp", "Write the model as a CPLEX LP file plus a JSON sidecar");
    graph_arg(lp);
    ord_opt(lp);
    problem_opts(lp);
    lp->add_option("--variant", o.variant, "compact or original");
    out_opt(lp);

    CLI::App* classify = app.add_subcommand("classify", "Report the structural classes the graph belongs to");
    graph_arg(classify);
    out_opt(classify);

    CLI::App* verify = app.add_subcommand("verify", "Run an exact verification; exit 0 pass, 2 fail, 3 inconclusive");
    graph_arg(verify);
    ord_opt(verify);
    verify->add_option("--check", o.check, "coltostab, match-subset, preext, edmonds-complete, copaw-complete, "
                                           "quasiline-complete or facet")
        ->required();
    verify->add_option("--precoloring", o.precoloring, "Precoloring file");
    verify->add_option("--mode", o.mode, "auto, hull or probe");
    verify->add_option("--probes", o.probes, "Number of LP objectives in probe mode");
    verify->add_option("--inequality", o.inequality, "Inequality JSON for --check facet");
    verify->add_option("--set", o.set, "Vertex set S (1-indexed, comma separated) for --check facet");
    out_opt(verify);

    CLI::App* solve = app.add_subcommand("solve", "Solve coloring, max-coloring or precoloring extension");
    graph_arg(solve);
    ord_opt(solve);
    problem_opts(solve);
    solve->add_option("--method", o.method, "matching or exact");
    out_opt(solve);

    CLI::App* separate = app.add_subcommand("separate", "Search for an inequality violated by a point");
    graph_arg(separate);
    ord_opt(separate);
    separate->add_option("--point", o.point, "Point JSON")->required();
    separate->add_option("--families", o.families, "Comma separated: model, odd-set, internal, clique-family");
    out_opt(separate);

    CLI::App* facet = app.add_subcommand("facet", "Internal inequality over S and its facet status");
    graph_arg(facet);
    ord_opt(facet);
    facet->add_option("--set", o.set, "Vertex set S (1-indexed, comma separated)")->required();
    out_opt(facet);

    CLI::App* corpus = app.add_subcommand("corpus", "Write connected graphs up to isomorphism and named instances");
    corpus->add_option("--max-n", o.max_n, "Largest order (at most 7)");
    corpus->add_option("--out", o.out, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Runner run(o);
        if (*build) return run.build_rep_cmd();
        if (*lp) return run.export_lp_cmd();
        if (*classify) return run.classify_cmd();
        if (*verify) return run.verify_cmd();
        if (*solve) return run.solve_cmd();
        if (*separate) return run.separate_cmd();
        if (*facet) return run.facet_cmd();
        if (*corpus) return run.corpus_cmd();
    } catch (const CapExceeded& e) {
        std::cerr << "repcol: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "repcol: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
