#include "jobs.hpp"
#include "reproduce.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace kronecker;
using namespace kronecker::cli;

namespace {

enum Exit { ok = 0, internal = 1, mismatch = 2, resource = 3, usage = 4 };

int fail(Exit code, const std::string& type, const std::string& message, Json extra = Json::object()) {
    Json e{{"type", type}, {"message", message}, {"exit_code", static_cast<int>(code)}};
    e.update(extra);
    std::cerr << Json{{"error", e}}.dump() << '\n';
    return code;
}

struct Common {
    int n = 1, r1 = 1, r2 = 1;
    std::string output;
    bool no_cache = false;
    bool print_json = false;
};

void add_spec(CLI::App* c, Common& o, JobConfig& cfg, bool grading) {
    c->add_option("--n", o.n, "number of arrows")->check(CLI::PositiveNumber);
    c->add_option("--r1", o.r1, "dimension at the source")->check(CLI::PositiveNumber);
    c->add_option("--r2", o.r2, "dimension at the target")->check(CLI::PositiveNumber);
    if (grading) c->add_option("--grading", cfg.grading, "gc, c0, c2 or a grading artifact");
    c->add_option("--max-degree", cfg.max_degree, "highest height searched for generators")->check(CLI::PositiveNumber);
    c->add_option("--certify-window", cfg.certify_window, "extra heights scanned to certify")->check(CLI::NonNegativeNumber);
    c->add_option("--max-points", cfg.limits.max_points, "cap on enumerated lattice points")->check(CLI::PositiveNumber);
    c->add_option("--max-nodes", cfg.limits.max_nodes, "cap on search nodes")->check(CLI::PositiveNumber);
    c->add_option("--max-orbit", cfg.max_orbit, "cap on terms of a semi-invariant expansion")->check(CLI::PositiveNumber);
    c->add_option("--output-dir", cfg.output_dir, "directory for artifacts");
    c->add_option("--output", o.output, "artifact path (overrides --output-dir)");
    c->add_flag("--no-cache", o.no_cache, "ignore the cache directory");
    c->add_flag("--json", o.print_json, "print the artifact instead of a summary");
}

void emit(const Json& artifact, const std::string& name, const Common& o, const JobConfig& cfg) {
    const std::filesystem::path p = o.output.empty() ? cfg.output_dir / (name + ".json") : std::filesystem::path(o.output);
    write_artifact(p, artifact);
    if (o.print_json) {
        std::cout << artifact.dump(1) << '\n';
    } else {
        std::cout << summarize(artifact) << "\n(artifact: " << p.string() << ")\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kronecker moduli: tableaux cones, toric degenerations, matching fields and mirrors"};
    app.require_subcommand(1);
    app.set_version_flag("--version", code_version());

    JobConfig cfg;
    Common o;
    std::string input;
    std::size_t terms = 20;
    std::int64_t verify_max_degree = 1'000'000;
    std::string example;
    bool slow = false;

    auto* cone = app.add_subcommand("cone", "cone of semi-standard pair exponents (or the matching-field cone)");
    auto* gens = app.add_subcommand("generators", "Hilbert basis by degree slices");
    auto* poly = app.add_subcommand("polytope", "height-1 slice polytope");
    auto* fan = app.add_subcommand("fan", "normal fan of the slice polytope");
    auto* cls = app.add_subcommand("classify", "Fano / Gorenstein / terminal classification of the fan");
    auto* mir = app.add_subcommand("mirror", "coefficient-1 Laurent polynomial on conv(rays)");
    auto* per = app.add_subcommand("period", "classical period of a mirror polynomial");
    auto* sag = app.add_subcommand("verify-sagbi", "matching-field SAGBI verification pipeline");
    auto* rep = app.add_subcommand("reproduce", "recompute a published example and diff every constant");

    for (auto* c : {cone, gens, poly, fan, cls, mir, per, sag}) add_spec(c, o, cfg, true);
    for (auto* c : {gens, poly, fan, cls, mir, per}) c->add_option("--input", input, "upstream artifact instead of recomputing");
    per->add_option("--terms", terms, "number of coefficients c_0 .. c_{N-1}")->check(CLI::PositiveNumber);
    sag->add_option("--verify-max-degree", verify_max_degree, "skip leading-monomial checks above this height");
    rep->add_option("example", example, "K323-gc | K423-gc | K323-mf | K423-mf")->required();
    rep->add_flag("--slow", slow, "also run degree-3 expansions and the 12-variable period");
    rep->add_option("--output-dir", cfg.output_dir, "directory for the report");
    rep->add_flag("--no-cache", o.no_cache, "ignore the cache directory");
    rep->add_flag("--json", o.print_json, "print the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(usage, "usage", e.what());
    }

    try {
        cfg.spec = QuiverSpec(o.n, o.r1, o.r2);
        cfg.use_cache = !o.no_cache;
        Stages st(cfg);
        const bool from_input = !input.empty();
        const Json upstream = from_input ? read_artifact(input) : Json();
        if (rep->parsed()) {
            ReproOptions ro;
            ro.slow = slow;
            ro.use_cache = !o.no_cache;
            const ReproReport r = reproduce(example, ro);
            write_artifact(cfg.output_dir / ("reproduce-" + r.example + ".json"), r.to_json());
            if (o.print_json) {
                std::cout << r.to_json().dump(1) << '\n';
            } else {
                std::cout << r.text();
            }
            return r.pass() ? ok : fail(mismatch, "mismatch", r.example + " does not match the published constants");
        }
        if (cone->parsed()) emit(st.cone(), "cone", o, cfg);
        if (gens->parsed()) emit(from_input ? generators_from(upstream, cfg) : st.generators(), "generators", o, cfg);
        if (poly->parsed()) emit(from_input ? polytope_from(upstream, cfg) : st.polytope(), "polytope", o, cfg);
        if (fan->parsed()) emit(from_input ? fan_from(upstream) : st.fan(), "fan", o, cfg);
        if (cls->parsed()) emit(from_input ? classify_from(upstream, cfg) : st.classify(), "toric", o, cfg);
        if (mir->parsed()) emit(from_input ? mirror_from(upstream, cfg) : st.mirror(), "mirror", o, cfg);
        if (per->parsed()) emit(from_input ? period_from(upstream, terms) : st.period(terms), "period", o, cfg);
        if (sag->parsed()) {
            const Json a = st.sagbi(verify_max_degree);
            emit(a, "sagbi", o, cfg);
            if (!a.at("data").at("failures").empty()) return fail(mismatch, "sagbi", "verification reported failures");
        }
        return ok;
    } catch (const ResourceLimitError& e) {
        return fail(resource, "resource_cap", e.what(), Json{{"cap", e.cap_name()}, {"limit", e.cap()}, {"partial", e.partial()}});
    } catch (const UsageError& e) {
        return fail(usage, "usage", e.what());
    } catch (const MismatchError& e) {
        return fail(mismatch, "mismatch", e.what());
    } catch (const SchemaError& e) {
        return fail(usage, "schema", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(usage, "invalid_argument", e.what());
    } catch (const UnsupportedError& e) {
        return fail(usage, "unsupported", e.what());
    } catch (const std::exception& e) {
        return fail(internal, "internal", e.what());
    }
}
