#include <CLI11.hpp>

#include "sharpmax/cli.hpp"

namespace {

void add_common(CLI::App* cmd, sharpmax::RunSpec& spec) {
    cmd->add_option("--jobs", spec.jobs, "worker threads (0 = hardware)");
    cmd->add_option("-o,--output", spec.output_path, "output file (default stdout)");
    cmd->add_option("--seed", spec.cfg.seed, "search seed");
    cmd->add_option("--restarts", spec.cfg.restarts, "ascent restarts / scan candidates");
    cmd->add_option("--step", spec.cfg.grid_step, "grid step for oracle searches");
    cmd->add_option("--tol", spec.tol, "tolerance for tail-bounded results");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp constants for maximal operators on finite graphs and on Z"};
    app.require_subcommand(1);

    sharpmax::RunSpec spec;

    auto* norm = app.add_subcommand("norm", "operator-norm estimates for a graph");
    norm->add_option("--graph", spec.graph_source, "family:size or edge-list path")->required();
    norm->add_option("--p", spec.p, "exponent")->required();
    norm->add_option("--method", spec.method, "formula|structured|oracle|ascent");
    add_common(norm, spec);

    auto* var = app.add_subcommand("var", "variation-constant estimates for a graph");
    var->add_option("--graph", spec.graph_source, "family:size or edge-list path")->required();
    var->add_option("--p", spec.p, "exponent")->required();
    var->add_option("--method", spec.method, "oracle|ascent|delta");
    add_common(var, spec);

    auto* formula = app.add_subcommand("star-formula", "closed-form star norm for p in (1,2]");
    formula->add_option("--n", spec.n, "number of vertices")->required();
    formula->add_option("--p", spec.p, "exponent")->required();
    add_common(formula, spec);

    auto* complete = app.add_subcommand("complete-structured", "two-valued complete-graph search");
    complete->add_option("--n", spec.n, "number of vertices")->required();
    complete->add_option("--p", spec.p, "exponent")->required();
    add_common(complete, spec);

    auto* constants = app.add_subcommand("constants", "closed-form constants and bounds");
    constants->add_option("--n", spec.n, "number of vertices")->required();
    constants->add_option("--p", spec.p, "exponent");
    add_common(constants, spec);

    auto* asym = app.add_subcommand("asymptotics", "large-p limits");
    asym->add_option("--n", spec.n, "number of vertices")->required();
    asym->add_option("--p", spec.p, "exponent for the one-parameter sup");
    add_common(asym, spec);

    auto* atlas = app.add_subcommand("atlas", "scan all connected graphs on n vertices");
    atlas->add_option("--n", spec.n, "number of vertices")->required();
    atlas->add_option("--p", spec.p, "exponent")->required();
    atlas->add_option("--summary", spec.summary_path, "summary csv path");
    add_common(atlas, spec);

    auto* zline = app.add_subcommand("zline-check", "integer-line maximal operator checks");
    zline->add_option("--op", spec.zline_op,
                      "var-norm|lipschitz-half|lipschitz-centered|variation|maximal")
        ->required();
    zline->add_option("--f", spec.lattice_f, "delta|indicator:LEN|tent:K|path.json");
    zline->add_option("--p", spec.p, "exponent");
    add_common(zline, spec);

    auto* conj = app.add_subcommand("conjecture-scan", "probe the variation conjecture on Z");
    conj->add_option("--p", spec.p, "exponent in (1/2, 1]")->required();
    add_common(conj, spec);

    auto* sweep = app.add_subcommand("sweep", "tabulate a quantity over a p range");
    std::string spec_file;
    sweep->add_option("--spec", spec_file, "JSON run-spec file");
    sweep->add_option("--graph", spec.graph_source, "family:size or edge-list path");
    sweep->add_option("--n", spec.n, "number of vertices");
    sweep->add_option("--quantity", spec.quantity,
                      "formula-p|star-lower|st-lower|st-upper|norm-star-p");
    sweep->add_option("--p-from", spec.p_from, "range start");
    sweep->add_option("--p-to", spec.p_to, "range end");
    sweep->add_option("--p-step", spec.p_step, "range step");
    add_common(sweep, spec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(norm)) spec.command = "norm";
    if (app.got_subcommand(var)) spec.command = "var";
    if (app.got_subcommand(formula)) spec.command = "star-formula";
    if (app.got_subcommand(complete)) spec.command = "complete-structured";
    if (app.got_subcommand(constants)) spec.command = "constants";
    if (app.got_subcommand(asym)) spec.command = "asymptotics";
    if (app.got_subcommand(atlas)) spec.command = "atlas";
    if (app.got_subcommand(zline)) spec.command = "zline-check";
    if (app.got_subcommand(conj)) spec.command = "conjecture-scan";
    if (app.got_subcommand(sweep)) {
        spec.command = "sweep";
        if (!spec_file.empty()) {
            try {
                sharpmax::RunSpec loaded = sharpmax::run_spec_from_json_file(spec_file);
                loaded.command = "sweep";
                if (!spec.output_path.empty()) loaded.output_path = spec.output_path;
                return sharpmax::run(loaded);
            } catch (const std::exception& e) {
                std::cerr << "validation error: " << e.what() << '\n';
                return 2;
            }
        }
    }

    return sharpmax::run(spec);
}
