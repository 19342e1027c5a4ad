// cerlab command-line front end.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 size-guard refusal.

#include "cerlab/cerlab.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace cerlab;

namespace {

enum ExitCode { ok = 0, mismatch = 1, usage = 2, refused = 3 };

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// A fixture name or a path to a hypergraph JSON file.
Hypergraph load_graph(const std::string &source)
{
    const auto &names = fixture_names();
    if (std::find(names.begin(), names.end(), source) != names.end())
        return fixture(source);
    return parse_hypergraph(read_file(source));
}

void emit(const std::string &text, const std::string &out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw InvalidArgument("cannot write '" + out + "'");
    f << text;
}

void emit_json(const Json &j, const std::string &out) { emit(j.dump(2) + "\n", out); }

NodeSet parse_nodes(const std::string &text)
{
    std::vector<NodeId> ids;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) {
            try {
                ids.push_back(std::stoi(item));
            } catch (const std::exception &) {
                throw InvalidArgument("bad node '" + item + "'");
            }
        }
    return NodeSet(ids);
}

/// "1,2,4;2,3,4;1,3,4"
std::vector<Edge> parse_edge_list(const std::string &text)
{
    std::vector<Edge> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';'))
        out.push_back(parse_nodes(item));
    return out;
}

Json var_list(std::vector<Var> vars)
{
    std::sort(vars.begin(), vars.end());
    Json j = Json::array();
    for (const Var &v : vars)
        j.push_back(v.name());
    return j;
}

Json renaming_json(const std::map<Var, Var> &m)
{
    Json j = Json::object();
    for (const auto &[a, b] : m)
        j[a.name()] = b.name();
    return j;
}

Json cycle_json(const CycleCandidate &c)
{
    return edges_to_json(c.edges());
}

int cmd_gen(const std::string &family, const std::vector<int> &params, int nodes, int edges, std::uint64_t seed,
            const std::string &out)
{
    auto param = [&](std::size_t i) {
        if (params.size() <= i)
            throw InvalidArgument("family '" + family + "' needs " + std::to_string(i + 1) + " parameter(s)");
        return params[i];
    };
    Hypergraph g;
    if (family == "almostfull")
        g = almost_full_hypergraph(param(0));
    else if (family == "complete")
        g = complete_hypergraph(param(0));
    else if (family == "cycle")
        g = cycle_graph(param(0));
    else if (family == "hyperpath")
        g = hyperpath(param(0), param(1));
    else if (family == "random") {
        g = random_hypergraph(nodes, edges, seed);
        std::cerr << "random hypergraph: nodes " << nodes << " edges " << edges << " seed " << seed << "\n";
    } else
        g = fixture(family);
    emit(write_hypergraph(g), out);
    return ok;
}

int cmd_classify(const std::string &input, const std::string &out)
{
    Hypergraph g = load_graph(input);
    Json j{{"graph", hypergraph_to_json(g)}, {"alpha_acyclic", false}, {"berge_acyclic", is_berge_acyclic(g)}};
    if (auto o = running_intersection_ordering(g)) {
        j["alpha_acyclic"] = true;
        Json order = Json::array();
        for (std::size_t i = 0; i < o->order.size(); ++i) {
            Json step{{"edge", nodeset_to_json(o->order[i])}};
            if (i > 0)
                step["parent"] = nodeset_to_json(o->order[static_cast<std::size_t>(o->witness[i])]);
            order.push_back(step);
        }
        j["ordering"] = order;
    } else if (auto c = find_simple_cycle(g, g.num_edges())) {
        j["simple_cycle"] = cycle_json(*c);
    }
    emit_json(j, out);
    return ok;
}

int cmd_cycles(const std::string &input, const std::string &kind, std::size_t max_len, bool reduce,
               const std::string &out)
{
    Hypergraph g = load_graph(input);
    if (max_len == 0)
        max_len = g.num_edges();
    std::optional<CycleCandidate> c = kind == "alpha" ? find_alpha_cycle(g, max_len) : find_simple_cycle(g, max_len);
    Json j{{"kind", kind}, {"cycle", nullptr}};
    if (c) {
        j["cycle"] = cycle_json(*c);
        j["alpha_cycle"] = is_alpha_cycle(g, *c);
        j["simple_cycle"] = is_simple_cycle(g, *c);
        if (is_alpha_cycle(g, *c))
            j["chordless"] = is_chordless_alpha_cycle(g, *c);
        if (reduce) {
            Json steps = Json::array();
            Hypergraph h = g;
            CycleCandidate cur = *c;
            while (cur.length() > 3) {
                CycleReduction r = reduce_simple_cycle(h, cur);
                steps.push_back({{"graph", hypergraph_to_json(r.graph)}, {"cycle", cycle_json(r.cycle)}});
                h = r.graph;
                cur = r.cycle;
            }
            j["reductions"] = steps;
        }
    }
    emit_json(j, out);
    return ok;
}

int cmd_build(const std::string &input, const std::string &relaxation, const std::string &out)
{
    Hypergraph g = load_graph(input);
    if (relaxation == "mp-vertices") {
        emit(write_points(space_of(g), mp_vertices(g)), out);
        return ok;
    }
    Polyhedron p;
    if (relaxation == "mplp")
        p = standard_linearization(g);
    else if (relaxation == "mccormick")
        p = mccormick(g);
    else if (relaxation == "cer")
        p = cer(g);
    else {
        auto max = maximal_edges(g);
        require(max.size() == 1, "the RLT description needs a hypergraph with a single maximal edge");
        p = rlt_complete_polytope(max.front());
    }
    emit(write_polyhedron(p.canonical()), out);
    return ok;
}

int cmd_transform(const std::string &input, NodeId fix, const std::string &contract_spec,
                  const std::string &expand_spec, const std::string &switch_spec, const std::string &out)
{
    Hypergraph g = load_graph(input);
    Json j;
    if (fix >= 0) {
        FixResult r = fix_node(g, fix);
        j = {{"operation", "fix"},
             {"graph", hypergraph_to_json(r.graph)},
             {"pin", r.pin.pins.front().to_string()},
             {"dropped", nodeset_to_json(r.induced.dropped)},
             {"eliminated_mp", var_list(r.eliminated_mp)},
             {"renaming_mp", renaming_json(r.renaming_mp)},
             {"eliminated_cer", var_list(r.eliminated_cer)}};
    } else if (!contract_spec.empty()) {
        auto colon = contract_spec.find(':');
        require(colon != std::string::npos, "contraction is given as w:u");
        NodeId w = std::stoi(contract_spec.substr(0, colon)), u = std::stoi(contract_spec.substr(colon + 1));
        ContractResult r = contract(g, w, u);
        j = {{"operation", "contract"},
             {"graph", hypergraph_to_json(r.raw)},
             {"completed", hypergraph_to_json(r.completed)},
             {"pin", r.pin.pins.front().to_string()},
             {"eliminated_mp", var_list(r.eliminated_mp)},
             {"renaming_mp", renaming_json(r.renaming_mp)},
             {"eliminated_cer", var_list(r.eliminated_cer)},
             {"renaming_cer", renaming_json(r.renaming_cer)}};
    } else if (!expand_spec.empty()) {
        auto colon = expand_spec.find(':');
        require(colon != std::string::npos, "expansion is given as w:a,b,...");
        NodeId w = std::stoi(expand_spec.substr(0, colon));
        NodeSet f = parse_nodes(expand_spec.substr(colon + 1));
        ExpandResult r = expand(g, w, f);
        j = {{"operation", "expand"}, {"graph", hypergraph_to_json(r.graph)}, {"renaming", renaming_json(r.renaming)}};
    } else {
        NodeSet u = parse_nodes(switch_spec);
        Hypergraph closed = completion(g);
        AffineMap phi = switching_map(closed, u);
        Json image = Json::object();
        for (const auto &[v, e] : phi.image)
            image[v.name()] = e.to_string();
        std::set<LinearInequality> rows, mapped;
        const Polyhedron relax = cer(g);
        for (const auto &c : relax.constraints()) {
            rows.insert(c.normalized());
            mapped.insert(apply_to_inequality(phi, c));
        }
        j = {{"operation", "switch"}, {"set", nodeset_to_json(u)}, {"image", image}, {"cer_invariant", rows == mapped}};
        emit_json(j, out);
        return rows == mapped ? ok : mismatch;
    }
    emit_json(j, out);
    return ok;
}

int cmd_cuts(const std::string &input, const std::string &cycle_spec, bool orbit, const std::vector<std::string> &certify,
             const std::string &out)
{
    Hypergraph g = load_graph(input);
    Hypergraph closed = completion(g);
    std::vector<Edge> edges;
    if (!cycle_spec.empty()) {
        edges = parse_edge_list(cycle_spec);
    } else {
        auto c = find_alpha_cycle(g, 3);
        if (!c)
            c = find_alpha_cycle(closed, 3);
        require(c.has_value(), "no alpha-cycle of length three found");
        edges = c->edges();
    }
    require(edges.size() == 3, "a triangle cycle has three edges");
    TriangleCycle cycle = normalize_triangle_cycle(closed, edges[0], edges[1], edges[2]);
    const Hypergraph support = cycle.support();
    auto base = generalized_triangle(cycle);
    std::vector<LinearInequality> ineqs(base.begin(), base.end());
    if (orbit)
        ineqs = switching_orbit(support, ineqs);
    auto wants = [&](const std::string &k) { return std::find(certify.begin(), certify.end(), k) != certify.end(); };

    const Polyhedron relaxation = cer(support);
    bool all_ok = true;
    Json list = Json::array();
    for (const auto &c : ineqs) {
        Json item{{"inequality", c.to_string()}};
        if (wants("validity")) {
            auto v = validity_certificate(support, c);
            item["valid"] = v.valid;
            all_ok = all_ok && v.valid;
        }
        if (wants("facet")) {
            auto f = facet_certificate(support, c);
            item["facet"] = {{"facet", f.facet}, {"rank", f.tight_dimension}, {"expected", f.expected}};
            all_ok = all_ok && f.facet;
        }
        if (wants("cg")) {
            auto cg = check_cg_cut(relaxation, c);
            item["cg"] = {{"cg", cg.is_cg}, {"optimum", to_string(cg.optimum)}, {"rhs", to_string(cg.cut.rhs())}};
            all_ok = all_ok && cg.is_cg;
        }
        list.push_back(item);
    }
    Json j{{"cycle", edges_to_json({cycle.edges().begin(), cycle.edges().end()})},
           {"support", hypergraph_to_json(support)},
           {"orbit_size", ineqs.size()},
           {"inequalities", list}};
    if (wants("aggregation")) {
        Json aggs = Json::array();
        for (int which = 1; which <= 4; ++which) {
            auto a = gtri_aggregation_certificate(closed, cycle, which);
            Json terms = Json::array();
            for (const auto &t : a.terms)
                terms.push_back({{"subset", nodeset_to_json(t.subset)},
                                 {"edge", nodeset_to_json(t.edge)},
                                 {"multiplier", to_string(t.multiplier)},
                                 {"group", t.group}});
            aggs.push_back({{"which", which},
                            {"cycle", edges_to_json({a.cycle.begin(), a.cycle.end()})},
                            {"switching", nodeset_to_json(a.switching)},
                            {"target", a.target.to_string() + " >= 0"},
                            {"cut", a.cut.to_string()},
                            {"verified", a.verified},
                            {"rows", terms}});
        }
        j["aggregation"] = aggs;
    }
    emit_json(j, out);
    return all_ok ? ok : mismatch;
}

/// Worker count from CERLAB_JOBS; unset means one.
unsigned jobs_from_env()
{
    const char *text = std::getenv("CERLAB_JOBS");
    if (!text || !*text)
        return 1;
    try {
        std::size_t used = 0;
        int n = std::stoi(text, &used);
        if (used == std::string(text).size() && n >= 1)
            return static_cast<unsigned>(n);
    } catch (const std::exception &) {
    }
    throw InvalidArgument(std::string("CERLAB_JOBS must be a positive integer, got '") + text + "'");
}

struct FixtureRun {
    Json report;
    std::string row;
    bool concordant = true;
    std::exception_ptr error;
};

FixtureRun run_fixture(const std::string &name, bool all, VerifyMode mode, std::size_t samples, std::uint64_t seed)
{
    FixtureRun run;
    Hypergraph g = load_graph(name);
    const bool acyclic = is_alpha_acyclic(g);
    ExtensionVerdict v;
    try {
        v = check_extension(g, mode, samples, seed);
    } catch (const SizeGuard &e) {
        if (!all)
            throw;
        run.report = {{"fixture", name}, {"graph", hypergraph_to_json(g)}, {"verdict", "skipped"}, {"reason", e.what()}};
        run.row = name + "\t" + (acyclic ? "yes" : "no") + "\tskipped\t-\n";
        return run;
    }
    if (v.status != ExtensionVerdict::Status::inconclusive && (v.status == ExtensionVerdict::Status::extension) != acyclic)
        run.concordant = false;
    run.report = verdict_to_json(name, g, v);
    run.row = name + "\t" + (acyclic ? "yes" : "no") + "\t" + to_string(v.status) + "\t" +
              (v.status == ExtensionVerdict::Status::not_extension ? to_string(v.gap()) : "-") + "\n";
    return run;
}

int cmd_verify(const std::vector<std::string> &sources, bool all, const std::string &mode_name, std::size_t samples,
               std::uint64_t seed, const std::string &format, const std::string &out)
{
    std::vector<std::string> names = sources;
    if (all)
        names = fixture_names();
    const VerifyMode mode = mode_name == "exact" ? VerifyMode::exact : VerifyMode::sampled;
    const unsigned jobs = std::min<unsigned>(jobs_from_env(), static_cast<unsigned>(std::max<std::size_t>(names.size(), 1)));

    // workers fill their own slots; the main thread is the only writer
    std::vector<FixtureRun> runs(names.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < names.size(); i = next++) {
            try {
                runs[i] = run_fixture(names[i], all, mode, samples, seed);
            } catch (...) {
                runs[i].error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t)
        pool.emplace_back(work);
    work();
    for (auto &t : pool)
        t.join();

    Json reports = Json::array();
    std::string table;
    bool concordant = true;
    for (auto &run : runs) {
        if (run.error)
            std::rethrow_exception(run.error);
        reports.push_back(run.report);
        table += run.row;
        concordant = concordant && run.concordant;
    }
    if (format == "text")
        emit("fixture\talpha-acyclic\tverdict\tgap\n" + table, out);
    else
        emit_json(reports, out);
    return concordant ? ok : mismatch;
}

/// Artifact files, or directories whose *.json files are read in name order.
std::vector<Json> load_bundle(const std::vector<std::string> &paths)
{
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto &p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> found;
            for (const auto &entry : fs::directory_iterator(p))
                if (entry.is_regular_file() && entry.path().extension() == ".json")
                    found.push_back(entry.path().string());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(p);
        }
    }
    std::vector<Json> docs;
    for (const auto &f : files) {
        try {
            docs.push_back(Json::parse(read_file(f)));
        } catch (const Json::exception &e) {
            throw InvalidArgument("corrupt bundle: '" + f + "' is not JSON (" + e.what() + ")");
        }
    }
    return docs;
}

int cmd_report(const std::vector<std::string> &paths, const std::string &format, const std::string &out)
{
    Report r = build_report(load_bundle(paths));
    if (format == "json")
        emit_json(r.to_json(), out);
    else
        emit(r.to_text(), out);
    return r.all_revalidated() ? ok : mismatch;
}

int cmd_cert(const std::string &kind, const std::vector<std::string> &args, std::size_t samples, std::uint64_t seed,
             const std::string &out)
{
    auto arg = [&](std::size_t i) {
        if (args.size() <= i)
            throw InvalidArgument("certificate '" + kind + "' needs " + std::to_string(i + 1) + " argument(s)");
        return args[i];
    };
    Json j;
    int code = ok;
    if (kind == "almostfull") {
        int n = std::stoi(arg(0));
        auto c = almostfull_certificate(n);
        j = {{"graph", hypergraph_to_json(c.graph)},
             {"inequality", c.inequality.to_string()},
             {"point", point_to_json(c.point)},
             {"violation", to_string(c.violation)}};
    } else if (kind == "berge") {
        Hypergraph g = load_graph(arg(0));
        auto v = check_berge_tightness(g, samples, seed);
        j = {{"berge_acyclic", v.expected}, {"tight", v.tight}, {"checked", v.checked}};
        if (!v.tight) {
            j["objective"] = v.objective.to_string();
            j["lp_value"] = to_string(v.lp_value);
            j["ip_value"] = to_string(v.ip_value);
        }
        code = v.tight == v.expected ? ok : mismatch;
    } else if (kind == "decomposition") {
        Hypergraph g = load_graph(arg(0));
        Hypergraph g1 = section_hypergraph(g, parse_nodes(arg(1)));
        Hypergraph g2 = section_hypergraph(g, parse_nodes(arg(2)));
        auto v = check_decomposition(g, g1, g2);
        j = {{"decomposes", v.decomposes},
             {"syntactic", v.syntactic},
             {"facets", v.facets},
             {"facets_first", v.facets_first},
             {"facets_second", v.facets_second}};
        code = v.decomposes ? ok : mismatch;
    } else if (kind == "cg") {
        Polyhedron p = parse_polyhedron(read_file(arg(0)));
        auto c = check_cg_cut(p, parse_inequality(arg(1)));
        j = {{"cg", c.is_cg}, {"status", to_string(c.status)}, {"optimum", to_string(c.optimum)}};
        if (c.status == LpStatus::optimal)
            j["point"] = point_to_json(c.point);
    } else {
        throw InvalidArgument("unknown certificate '" + kind + "' (almostfull, berge, decomposition, cg)");
    }
    emit_json(j, out);
    return code;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Polyhedral relaxations of binary polynomial optimization problems"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out;
    app.add_option("-o,--output", out, "Output file (default: stdout)");

    std::string family;
    std::vector<int> params;
    int nodes = 6, edges = 6;
    std::uint64_t seed = 1;
    auto *gen = app.add_subcommand("gen", "Generate a hypergraph");
    gen->add_option("family", family, "Fixture name or family (almostfull, complete, cycle, hyperpath, random)")
        ->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--nodes", nodes, "Nodes of a random hypergraph");
    gen->add_option("--edges", edges, "Edges of a random hypergraph");
    gen->add_option("--seed", seed, "Random seed");

    std::string input;
    auto *classify = app.add_subcommand("classify", "Alpha- and Berge-acyclicity with witnesses");
    classify->add_option("input", input, "Hypergraph file or fixture name")->required();

    std::string kind = "simple";
    std::size_t max_len = 0;
    bool reduce = false;
    auto *cycles = app.add_subcommand("cycles", "Search for a shortest cycle");
    cycles->add_option("input", input, "Hypergraph file or fixture name")->required();
    cycles->add_option("--kind", kind, "simple or alpha")->check(CLI::IsMember({"simple", "alpha"}));
    cycles->add_option("--max-len", max_len, "Longest cycle to search (default: |E|)");
    cycles->add_flag("--reduce", reduce, "Reduce the cycle to length three");

    auto *build = app.add_subcommand("build", "Write a relaxation or the multilinear set");
    build->add_option("input", input, "Hypergraph file or fixture name")->required();
    bool b_mplp = false, b_mcc = false, b_cer = false, b_rlt = false, b_vert = false;
    auto *f1 = build->add_flag("--mplp", b_mplp, "Standard linearization");
    auto *f2 = build->add_flag("--mccormick", b_mcc, "McCormick relaxation of a graph");
    auto *f3 = build->add_flag("--cer", b_cer, "Complete edge relaxation");
    auto *f4 = build->add_flag("--rlt", b_rlt, "RLT description of a single maximal edge");
    auto *f5 = build->add_flag("--mp-vertices", b_vert, "Binary points of the multilinear set");
    std::vector<CLI::Option *> rel{f1, f2, f3, f4, f5};
    for (auto *a : rel)
        for (auto *b : rel)
            if (a != b)
                a->excludes(b);

    NodeId fix = -1;
    std::string contract_spec, expand_spec, switch_spec;
    auto *transform = app.add_subcommand("transform", "Node fixing, contraction, expansion or switching");
    transform->add_option("input", input, "Hypergraph file or fixture name")->required();
    auto *t1 = transform->add_option("--fix", fix, "Fix a node to one");
    auto *t2 = transform->add_option("--contract", contract_spec, "Contract w to u, as w:u");
    auto *t3 = transform->add_option("--expand", expand_spec, "Expand w to new nodes, as w:a,b,...");
    auto *t4 = transform->add_option("--switch", switch_spec, "Switching set, as a,b,...");
    std::vector<CLI::Option *> tr{t1, t2, t3, t4};
    for (auto *a : tr)
        for (auto *b : tr)
            if (a != b)
                a->excludes(b);

    std::string cycle_spec;
    bool orbit = false;
    std::vector<std::string> certify;
    auto *cuts = app.add_subcommand("cuts", "Generalized triangle inequalities with certificates");
    cuts->add_option("input", input, "Hypergraph file or fixture name")->required();
    cuts->add_option("--cycle", cycle_spec, "Cycle edges, as 1,2,4;2,3,4;1,3,4 (default: search)");
    cuts->add_flag("--orbit", orbit, "Use the full switching orbit");
    cuts->add_option("--certify", certify, "validity, facet, cg, aggregation")
        ->delimiter(',')
        ->check(CLI::IsMember({"validity", "facet", "cg", "aggregation"}));

    std::vector<std::string> sources;
    bool all = false;
    std::string mode = "exact", format = "json";
    std::size_t samples = 200;
    auto *verify = app.add_subcommand("verify", "Is the complete edge relaxation an extension?");
    verify->add_option("--fixture", sources, "Fixture names or hypergraph files");
    verify->add_flag("--all", all, "Run the fixture registry");
    verify->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    verify->add_option("--samples", samples, "Random objectives in sampled mode");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> bundle;
    std::string report_format = "text";
    auto *report = app.add_subcommand("report", "Re-validate run artifacts and summarize them");
    report->add_option("artifacts", bundle, "Artifact files or directories of *.json files");
    report->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"json", "text"}));

    std::string cert_kind;
    std::vector<std::string> cert_args;
    auto *cert = app.add_subcommand("cert", "Standalone certificates");
    cert->add_option("kind", cert_kind, "almostfull N | berge G | decomposition G V1 V2 | cg FILE INEQ")->required();
    cert->add_option("args", cert_args, "Arguments");
    cert->add_option("--samples", samples, "Random objectives");
    cert->add_option("--seed", seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*gen)
            return cmd_gen(family, params, nodes, edges, seed, out);
        if (*classify)
            return cmd_classify(input, out);
        if (*cycles)
            return cmd_cycles(input, kind, max_len, reduce, out);
        if (*build) {
            std::string r = b_mplp ? "mplp" : b_mcc ? "mccormick" : b_cer ? "cer" : b_rlt ? "rlt" : b_vert ? "mp-vertices" : "";
            if (r.empty())
                throw InvalidArgument("build needs one of --mplp, --mccormick, --cer, --rlt, --mp-vertices");
            return cmd_build(input, r, out);
        }
        if (*transform) {
            if (fix < 0 && contract_spec.empty() && expand_spec.empty() && switch_spec.empty())
                throw InvalidArgument("transform needs one of --fix, --contract, --expand, --switch");
            return cmd_transform(input, fix, contract_spec, expand_spec, switch_spec, out);
        }
        if (*cuts)
            return cmd_cuts(input, cycle_spec, orbit, certify, out);
        if (*verify) {
            if (sources.empty() && !all)
                throw InvalidArgument("verify needs --fixture or --all");
            return cmd_verify(sources, all, mode, samples, seed, format, out);
        }
        if (*report)
            return cmd_report(bundle, report_format, out);
        if (*cert)
            return cmd_cert(cert_kind, cert_args, samples, seed, out);
    } catch (const VerificationFailure &e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return mismatch;
    } catch (const SizeGuard &e) {
        std::cerr << "refused: " << e.what() << "\n";
        return refused;
    } catch (const std::logic_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
