#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "twoside/selftest.hpp"

namespace twoside {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string command;
    std::vector<std::string> relations, files;
    std::string params, action = "validate", side = "right", format = "text", output;
    std::uint64_t seed = kDefaultSeed;
    int max_degree = -1, dmax = 4, window = 6, power = 0, jobs = 1, count = 10, criterion = 0;
    bool timing = false, all_cells = false;
};

// A module read from the command line, with the echo used in reports.
struct Input {
    Json echo;
    TwoSidedVS module;
    std::optional<Embedding> embedding;
};

Json matrix_json(const KMatrix& M) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(to_string(M(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json vec_json(const KVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json term_list_json(const BiPoly& F) {
    Json out = Json::array();
    for (const auto& [c, i, j] : to_term_list(F)) out.push_back(Json::array({c, i, j}));
    return out;
}

std::string poly_string(const KPoly& p) { return to_string(BiPoly::from_kpoly(p)); }

Input embedding_input(const Embedding& e, Json echo) {
    return Input{std::move(echo), vs_from_embedding(e), e};
}

TwoSidedVS module_from_record(const Json& rec, std::uint64_t seed) {
    if (!rec.is_object()) fail(ErrorKind::Validation, "module record must be a JSON object");
    // a bare embedding record carries only F and an optional name
    std::string kind = rec.contains("kind") ? rec.at("kind").get<std::string>() : "embedding";
    if (kind == "embedding") {
        std::vector<std::tuple<std::string, int, int>> terms;
        for (const auto& t : rec.at("F")) {
            std::string c = t.at(0).is_string() ? t.at(0).get<std::string>() : t.at(0).dump();
            terms.emplace_back(c, t.at(1).get<int>(), t.at(2).get<int>());
        }
        return vs_from_embedding(Embedding(from_term_list(terms), seed));
    }
    if (kind == "raw") {
        std::size_t n = rec.at("n").get<std::size_t>();
        const Json& T = rec.at("T");
        if (T.size() != n) fail(ErrorKind::Validation, "raw module: T must have n rows");
        KMatrix M(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (T.at(i).size() != n) fail(ErrorKind::Validation, "raw module: T must have n columns");
            for (std::size_t j = 0; j < n; ++j) M(i, j) = parse_ratfunc(T.at(i).at(j).get<std::string>());
        }
        return make_raw(M);
    }
    if (kind == "sum") {
        std::vector<TwoSidedVS> parts;
        for (const auto& p : rec.at("parts")) parts.push_back(module_from_record(p, seed));
        if (parts.empty()) fail(ErrorKind::Validation, "sum module needs parts");
        return direct_sum(parts);
    }
    fail(ErrorKind::Validation, "unknown module kind '" + kind + "'");
}

std::vector<Input> read_inputs(const Options& o) {
    std::vector<Input> out;
    for (const auto& r : o.relations) {
        Embedding e(parse_bipoly(r), o.seed);
        out.push_back(embedding_input(e, Json{{"relation", to_string(e.relation())}}));
    }
    if (!o.params.empty()) {
        FamilyParams p = parse_family_params(o.params);
        out.push_back(embedding_input(family_embedding(p), Json{{"params", to_string(p)}}));
    }
    for (const auto& path : o.files) {
        std::ifstream in(path);
        if (!in) fail(ErrorKind::Validation, "cannot read module file '" + path + "'");
        Json rec;
        try {
            rec = Json::parse(in);
        } catch (const Json::exception& ex) {
            fail(ErrorKind::Validation, "module file '" + path + "' is not valid JSON");
        }
        try {
            TwoSidedVS V = module_from_record(rec, o.seed);
            std::optional<Embedding> e = V.provenance().embedding;
            out.push_back(Input{Json{{"file", rec}}, V, e});
        } catch (const Json::exception& ex) {
            fail(ErrorKind::Validation, "module file '" + path + "' does not match the module schema");
        }
    }
    return out;
}

Input single_input(const Options& o) {
    std::vector<Input> in = read_inputs(o);
    if (in.size() != 1) fail(ErrorKind::Validation, "this command takes exactly one module");
    return in.front();
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        fail(ErrorKind::Internal, "digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

Json embedding_json(const Embedding& e) {
    Json j{{"relation", to_string(e.relation())},
           {"terms", term_list_json(e.relation())},
           {"n", e.n()},
           {"m", e.m()},
           {"cert", to_string(e.cert())}};
    if (!e.witnesses().empty()) j["witnesses"] = e.witnesses();
    return j;
}

const char* kind_name(Provenance::Kind k) {
    switch (k) {
        case Provenance::Kind::FromEmbedding: return "embedding";
        case Provenance::Kind::Tensor: return "tensor";
        case Provenance::Kind::DirectSum: return "sum";
        case Provenance::Kind::DualOf: return "dual";
        case Provenance::Kind::Raw: return "raw";
    }
    return "raw";
}

struct Outcome {
    Json results = Json::object();
    Json notes = Json::array();
    int exit_code = 0;
    // CSV table, when the command has one
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

void note_tier(Outcome& out, const std::optional<Embedding>& e) {
    if (e && e->cert() == CertTier::AssumedWithWitnessChecks)
        out.notes.push_back("irreducibility of F rests on specialization witnesses (" + to_string(e->cert()) + ")");
}

Json module_json(const TwoSidedVS& V) {
    Json j{{"kind", kind_name(V.provenance().kind)}, {"n", V.n()}, {"T", matrix_json(V.T())}};
    if (V.provenance().embedding) j["embedding"] = embedding_json(*V.provenance().embedding);
    return j;
}

Outcome cmd_validate(const Options& o) {
    Outcome out;
    Json mods = Json::array();
    for (const auto& in : read_inputs(o)) {
        Json j = module_json(in.module);
        j["dims"] = Json::array({dims(in.module).left, dims(in.module).right});
        mods.push_back(j);
        note_tier(out, in.embedding);
    }
    if (mods.empty()) fail(ErrorKind::Validation, "no module given: use --relation, --params or --file");
    out.results["valid"] = true;
    out.results["modules"] = mods;
    return out;
}

Outcome cmd_info(const Options& o) {
    Outcome out;
    Input in = single_input(o);
    const TwoSidedVS& V = in.module;
    Dims d = dims(V);
    Tri simple = is_simple(V);
    out.results["module"] = module_json(V);
    out.results["dims"] = Json::array({d.left, d.right});
    out.results["rank"] = d.left == d.right ? Json(d.left) : Json(nullptr);
    out.results["simple"] = to_string(simple);
    out.results["charpoly"] = poly_string(charpoly(V.T()));
    Json inv = Json::array();
    for (const auto& f : similarity_invariants(V.T())) inv.push_back(poly_string(f));
    out.results["invariant_factors"] = inv;
    if (in.embedding) {
        out.results["dual_relation"] = to_string(swap_dual(*in.embedding).relation());
        out.results["phi"] = matrix_json(phi_matrix(*in.embedding));
    }
    note_tier(out, in.embedding);
    if (simple == Tri::Unknown) {
        out.notes.push_back("simplicity undetermined at certification tier");
        out.exit_code = 3;
    }
    return out;
}

Outcome cmd_dual(const Options& o) {
    Outcome out;
    Input in = single_input(o);
    if (o.side != "left" && o.side != "right") fail(ErrorKind::Validation, "--side must be left or right");
    int power = o.power != 0 ? o.power : (o.side == "left" ? -1 : 1);
    TwoSidedVS D = iterated_dual(in.module, power, o.seed);
    out.results["power"] = power;
    if (D.provenance().embedding) out.results["relation"] = to_string(D.provenance().embedding->relation());
    out.results["dims"] = Json::array({dims(D).left, dims(D).right});
    out.results["module"] = module_json(D);
    note_tier(out, in.embedding);
    return out;
}

Outcome cmd_iso(const Options& o) {
    Outcome out;
    std::vector<Input> in = read_inputs(o);
    if (in.size() != 2) fail(ErrorKind::Validation, "iso takes exactly two modules");
    auto w = iso_test(in[0].module, in[1].module);
    out.results["isomorphic"] = w.has_value();
    out.results["witness"] = w ? matrix_json(w->P) : Json(nullptr);
    return out;
}

Outcome cmd_adjoint(const Options& o) {
    Outcome out;
    Input in = single_input(o);
    const TwoSidedVS& V = in.module;
    AdjunctionData data = adjunction_data(V, o.seed);
    UnitElement eta = unit_element(data);
    TriangleReport tri = triangle_check(data, eta.coords, o.seed);
    bool central = is_central(eta);
    std::size_t qdim = sub_closure(*eta.ambient, KMatrix(1, eta.coords.size(), eta.coords)).dim();
    std::vector<RatFunc> samples{RatFunc(1), RatFunc::t(), RatFunc::t() * RatFunc::t(),
                                 RatFunc(1) / (RatFunc::t() + RatFunc(1))};
    ABReport ab = ab_identity_check(V, data.basis, samples);
    out.results["basis"] = matrix_json(data.basis.vectors);
    out.results["A"] = matrix_json(data.basis.rightT);
    out.results["B"] = matrix_json(data.basis.leftT);
    out.results["dual_model"] = module_json(*data.model);
    out.results["unit"] = vec_json(eta.coords);
    out.results["triangle"] = tri.ok;
    if (!tri.ok) out.results["triangle_detail"] = tri.detail;
    out.results["central"] = central;
    out.results["unit_span_dim"] = qdim;
    out.results["ab_inverse"] = ab.ok;
    if (!ab.ok) out.results["ab_detail"] = ab.detail;
    note_tier(out, in.embedding);
    if (!tri.ok || !central || qdim != 1 || !ab.ok) out.exit_code = 1;
    return out;
}

Outcome cmd_ncsym(const Options& o) {
    Outcome out;
    Input in = single_input(o);
    if (!in.embedding) fail(ErrorKind::Validation, "ncsym needs an embedding");
    const Embedding& e = *in.embedding;
    bool exists = ncsym_exists_check(e, o.window);
    out.results["exists"] = exists;
    out.results["window"] = o.window;
    if (!exists) {
        out.results["dims"] = Json::array({e.n(), e.m()});
        return out;
    }
    NcTruncation tr = ncsym_truncation(e, o.dmax, NcOptions{o.seed, false});
    MultReport mult = multiplication_consistency(tr);
    out.results["dmax"] = o.dmax;
    out.results["q_even"] = matrix_json(tr.q[0]);
    out.results["q_odd"] = matrix_json(tr.q[1]);
    Json cells = Json::array();
    out.csv_header = {"i", "j", "dimB", "dimR", "dimA"};
    for (const auto& c : tr.cells) {
        if (!o.all_cells && c.i != 0) continue;
        cells.push_back(Json{{"i", c.i}, {"j", c.j}, {"dimB", c.dimB}, {"dimR", c.dimR}, {"dimA", c.dimA}});
        out.csv_rows.push_back({std::to_string(c.i), std::to_string(c.j), std::to_string(c.dimB), std::to_string(c.dimR),
                                std::to_string(c.dimA)});
    }
    out.results["cells"] = cells;
    out.results["multiplication_consistent"] = mult.ok;
    if (!mult.ok) {
        out.results["multiplication_detail"] = mult.detail;
        out.exit_code = 1;
    }
    note_tier(out, in.embedding);
    return out;
}

Json sweep_item(const FamilyParams& p) {
    Embedding e = family_embedding(p);
    RatFunc m = family_m(p);
    Dims d = dims(vs_from_embedding(e));
    return Json{{"params", to_string(p)},       {"relation", to_string(e.relation())},
                {"dims", Json::array({d.left, d.right})}, {"lueroth_degree", lueroth_degree(m)},
                {"m_square", is_square_in_K(m)}, {"cert", to_string(e.cert())}};
}

Outcome cmd_family(const Options& o) {
    if (o.action == "sweep") {
        if (o.count < 0) fail(ErrorKind::Validation, "--count must be nonnegative");
        if (o.jobs < 1) fail(ErrorKind::Validation, "--jobs must be positive");
        std::mt19937_64 rng(o.seed);
        std::vector<FamilyParams> ps;
        for (int i = 0; i < o.count; ++i) ps.push_back(random_family_params(rng));
        std::vector<Json> items(ps.size());
        std::vector<std::string> errors(ps.size());
        std::vector<std::thread> pool;
        for (int w = 0; w < o.jobs; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < ps.size(); i += static_cast<std::size_t>(o.jobs)) {
                    try {
                        items[i] = sweep_item(ps[i]);
                    } catch (const std::exception& ex) {
                        errors[i] = ex.what();
                    }
                }
            });
        for (auto& t : pool) t.join();
        Outcome out;
        out.csv_header = {"index", "params", "left", "right", "lueroth_degree", "m_square"};
        Json arr = Json::array();
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (!errors[i].empty()) fail(ErrorKind::Internal, "sweep item " + std::to_string(i) + ": " + errors[i]);
            arr.push_back(items[i]);
            out.csv_rows.push_back({std::to_string(i), "\"" + items[i]["params"].get<std::string>() + "\"",
                                    items[i]["dims"][0].dump(), items[i]["dims"][1].dump(),
                                    items[i]["lueroth_degree"].dump(), items[i]["m_square"].dump()});
        }
        out.results["count"] = o.count;
        out.results["tuples"] = arr;
        return out;
    }
    if (o.params.empty()) fail(ErrorKind::Validation, "family needs --params a,b,... (alpha,a,b,c,d,e,f)");
    Options single = o;
    single.relations.clear();
    single.files.clear();
    if (o.action == "validate") {
        Outcome out;
        FamilyParams p = parse_family_params(o.params);
        Json item = sweep_item(p);
        out.results = item;
        return out;
    }
    if (o.action == "info") return cmd_info(single);
    if (o.action == "dual") return cmd_dual(single);
    if (o.action == "adjoint-check") return cmd_adjoint(single);
    if (o.action == "ncsym") return cmd_ncsym(single);
    fail(ErrorKind::Validation, "unknown family action '" + o.action + "'");
}

Outcome cmd_selftest(const Options& o) {
    Outcome out;
    std::vector<CriterionResult> rs;
    if (o.criterion != 0)
        rs.push_back(run_criterion(o.criterion, o.seed));
    else
        rs = run_acceptance(o.seed);
    Json arr = Json::array();
    out.csv_header = {"criterion", "title", "pass"};
    bool all = true;
    for (const auto& r : rs) {
        Json j{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}};
        if (!r.pass) j["detail"] = r.detail;
        if (o.timing) j["seconds"] = r.seconds;
        arr.push_back(j);
        out.csv_rows.push_back({std::to_string(r.id), "\"" + r.title + "\"", r.pass ? "true" : "false"});
        all = all && r.pass;
    }
    out.results["criteria"] = arr;
    out.results["all_pass"] = all;
    if (!all) out.exit_code = 1;
    return out;
}

void render_text(const Json& j, std::ostream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (v.is_object()) {
            os << pad << it.key() << ":\n";
            render_text(v, os, indent + 2);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            os << pad << it.key() << ":\n";
            for (const auto& item : v) {
                os << pad << "  -\n";
                render_text(item, os, indent + 4);
            }
        } else if (v.is_string()) {
            os << pad << it.key() << ": " << v.get<std::string>() << "\n";
        } else {
            os << pad << it.key() << ": " << v.dump() << "\n";
        }
    }
}

void flatten_csv(const Json& j, const std::string& prefix, std::vector<std::vector<std::string>>& rows) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it.value().is_object())
            flatten_csv(it.value(), key, rows);
        else {
            std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
            std::string quoted = "\"";
            for (char c : v) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            rows.push_back({key, quoted + "\""});
        }
    }
}

std::string render(const Options& o, const Json& report, const Outcome& out) {
    std::ostringstream os;
    if (o.format == "json") {
        os << report.dump(2) << "\n";
    } else if (o.format == "csv") {
        std::vector<std::vector<std::string>> rows = out.csv_rows;
        std::vector<std::string> header = out.csv_header;
        if (header.empty()) {
            header = {"key", "value"};
            flatten_csv(out.results, "", rows);
        }
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
        os << "\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << "\n";
        }
    } else {
        render_text(report, os, 0);
    }
    return os.str();
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::Validation: return 2;
        case ErrorKind::Tier: return 3;
        case ErrorKind::Resource: return 4;
        case ErrorKind::Internal: return 1;
    }
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Two-sided vector spaces over Q(t): validation, duals, adjunctions and truncations."};
    app.name("twoside");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Seed for randomized steps")->capture_default_str();
    app.add_option("--max-degree", o.max_degree, "Cap for the coordinate degree sweep (default 40 or TWOSIDE_MAX_DEGREE)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    app.add_option("--output", o.output, "Write the report to this file");
    app.add_flag("--timing", o.timing, "Include elapsed time in the report");

    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("--relation,-r", o.relations, "Relation F(x, y), e.g. \"(x^2+2)*y^2 - (x^2+1)\"");
        sub->add_option("--file,-f", o.files, "Module file (JSON record)");
        sub->add_option("--params,-p", o.params, "Family parameters alpha,a,b,c,d,e,f");
    };
    auto* validate = app.add_subcommand("validate", "Validate relations, family parameters or module files");
    add_inputs(validate);
    auto* family = app.add_subcommand("family", "Rank-2 family lambda(t) = alpha + sqrt((a t^2 + b t + c)/(d t^2 + e t + f))");
    family->add_option("--params,-p", o.params, "alpha,a,b,c,d,e,f");
    family->add_option("action", o.action, "validate | info | dual | adjoint-check | ncsym | sweep")->capture_default_str();
    family->add_option("--count", o.count, "Number of random tuples for sweep")->capture_default_str();
    family->add_option("--jobs", o.jobs, "Worker threads for sweep")->capture_default_str();
    family->add_option("--side", o.side, "Side for the dual action");
    family->add_option("--dmax", o.dmax, "Truncation degree for the ncsym action");
    family->add_option("--window", o.window, "Dual window for the ncsym action");
    auto* info = app.add_subcommand("info", "Dimensions, rank, simplicity and invariants of a module");
    add_inputs(info);
    auto* dualc = app.add_subcommand("dual", "Left or right dual, or an iterated dual");
    add_inputs(dualc);
    dualc->add_option("--side", o.side, "left | right")->capture_default_str();
    dualc->add_option("--power", o.power, "Iterated dual index i (positive: right, negative: left)");
    auto* iso = app.add_subcommand("iso", "Isomorphism test between two modules");
    add_inputs(iso);
    auto* adj = app.add_subcommand("adjoint-check", "Unit, counit and triangle identities");
    add_inputs(adj);
    auto* nc = app.add_subcommand("ncsym", "Truncation of the non-commutative symmetric algebra");
    add_inputs(nc);
    nc->add_option("--dmax", o.dmax, "Largest degree")->capture_default_str();
    nc->add_option("--window", o.window, "Dual window for the existence check")->capture_default_str();
    nc->add_flag("--all-cells", o.all_cells, "Report every cell, not only i = 0");
    auto* self = app.add_subcommand("selftest", "Run the acceptance suite on the built-in corpus");
    self->add_option("--criterion", o.criterion, "Run a single criterion (1-10)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    o.command = app.get_subcommands().front()->get_name();

    auto start = std::chrono::steady_clock::now();
    try {
        if (o.max_degree >= 0) setenv("TWOSIDE_MAX_DEGREE", std::to_string(o.max_degree).c_str(), 1);
        if (o.dmax < 0) fail(ErrorKind::Validation, "--dmax must be nonnegative");
        if (o.window < 0) fail(ErrorKind::Validation, "--window must be nonnegative");
        Outcome res;
        if (o.command == "validate")
            res = cmd_validate(o);
        else if (o.command == "family")
            res = cmd_family(o);
        else if (o.command == "info")
            res = cmd_info(o);
        else if (o.command == "dual")
            res = cmd_dual(o);
        else if (o.command == "iso")
            res = cmd_iso(o);
        else if (o.command == "adjoint-check")
            res = cmd_adjoint(o);
        else if (o.command == "ncsym")
            res = cmd_ncsym(o);
        else
            res = cmd_selftest(o);

        Json input{{"command", o.command}, {"seed", o.seed}};
        if (!o.relations.empty()) input["relations"] = o.relations;
        if (!o.params.empty()) input["params"] = o.params;
        if (!o.files.empty()) input["files"] = o.files;
        if (o.command == "family") input["action"] = o.action;
        if (o.command == "family" && o.action == "sweep") input["count"] = o.count;
        if (o.command == "dual") input["side"] = o.side, input["power"] = o.power;
        if (o.command == "ncsym" || o.command == "family") input["dmax"] = o.dmax, input["window"] = o.window;
        if (o.max_degree >= 0) input["max_degree"] = o.max_degree;

        Json report{{"schema", 1}, {"command", o.command}, {"input", input}, {"digest", sha256_hex(input.dump())},
                    {"results", res.results}, {"notes", res.notes}};
        if (o.timing)
            report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string text = render(o, report, res);
        if (o.output.empty()) {
            out << text;
        } else {
            std::ofstream f(o.output, std::ios::binary);
            if (!f) fail(ErrorKind::Validation, "cannot write '" + o.output + "'");
            f << text;
        }
        return res.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace twoside
