#include "sharpmax/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "sharpmax/atlas.hpp"
#include "sharpmax/constants.hpp"
#include "sharpmax/errors.hpp"
#include "sharpmax/json_io.hpp"
#include "sharpmax/zline.hpp"

namespace sharpmax {

namespace {

Graph load_graph(const std::string& source) {
    if (source.empty()) throw validation_error("no graph given (use --graph family:size or a path)");
    auto colon = source.find(':');
    if (colon != std::string::npos && source.find('/') == std::string::npos &&
        source.find('.') == std::string::npos) {
        Family fam = family_from_string(source.substr(0, colon));
        int size = 0;
        try {
            size = std::stoi(source.substr(colon + 1));
        } catch (const std::exception&) {
            throw validation_error("bad graph size in '" + source + "'");
        }
        return build_named(fam, size);
    }
    std::ifstream in(source);
    if (!in) throw validation_error("cannot open graph file: " + source);
    if (source.size() > 5 && source.substr(source.size() - 5) == ".json") {
        json j = json::parse(in, nullptr, true, true);
        return graph_from_json(j);
    }
    return read_edge_list_text(in);
}

LatticeFunction load_lattice(const std::string& spec) {
    if (spec == "delta") return lattice_delta(0);
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        long long arg = 0;
        try {
            arg = std::stoll(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw validation_error("bad lattice parameter in '" + spec + "'");
        }
        if (kind == "indicator") return lattice_indicator(0, arg);
        if (kind == "tent") return lattice_tent(arg);
        throw validation_error("unknown lattice function '" + kind + "'");
    }
    std::ifstream in(spec);
    if (!in) throw validation_error("cannot open lattice file: " + spec);
    return lattice_from_json(json::parse(in, nullptr, true, true));
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw validation_error("cannot open output file: " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit(const RunSpec& spec, const json& result) {
    json envelope = {{"command", spec.command}, {"result", result}};
    write_text(spec.output_path, envelope.dump(2));
}

json run_norm(const RunSpec& spec) {
    if (spec.method == "formula") {
        int n = spec.n;
        if (n == 0) {
            Graph g = load_graph(spec.graph_source);
            n = g.n;
        }
        StarFormula sf = star_norm_formula(n, spec.p);
        return {{"value", sf.value}, {"x_star", sf.x_star}, {"heuristic", sf.heuristic}};
    }
    if (spec.method == "structured") {
        Graph g = load_graph(spec.graph_source);
        std::vector<int> cls = interchange_classes(g);
        int nclasses = 1 + *std::max_element(cls.begin(), cls.end());
        SearchResult r;
        if (nclasses == 1)
            r = complete_norm_structured(g.n, spec.p);
        else if (nclasses == 2 && g.edge_count() == g.n - 1)
            r = star_norm_structured(g.n, spec.p);
        else
            throw validation_error("structured norm search covers stars and complete graphs");
        return search_result_to_json(r);
    }
    Graph g = load_graph(spec.graph_source);
    if (spec.method == "oracle")
        return search_result_to_json(grid_oracle_norm(g, spec.p, spec.cfg.grid_step, spec.jobs));
    if (spec.method == "ascent" || spec.method.empty())
        return search_result_to_json(ascent_norm(g, spec.p, spec.cfg, spec.jobs));
    throw validation_error("unknown norm method '" + spec.method + "'");
}

json run_var(const RunSpec& spec) {
    Graph g = load_graph(spec.graph_source);
    if (spec.method == "oracle")
        return search_result_to_json(grid_oracle_variation(g, spec.p, spec.cfg.grid_step, spec.jobs));
    if (spec.method == "delta") {
        double best = 0.0;
        int arg = 0;
        for (int v = 0; v < g.n; ++v) {
            double r = delta_variation_ratio(g, spec.p, v);
            if (r > best) {
                best = r;
                arg = v;
            }
        }
        return {{"best_value", best}, {"vertex", arg}, {"objective", "variation_ratio"},
                {"p", spec.p}, {"structure_note", "delta floor"}};
    }
    if (spec.method == "ascent" || spec.method.empty())
        return search_result_to_json(ascent_variation(g, spec.p, spec.cfg, spec.jobs));
    throw validation_error("unknown var method '" + spec.method + "'");
}

json run_constants(const RunSpec& spec) {
    int n = spec.n;
    if (n < 2) throw validation_error("constants: give --n >= 2");
    json rows = json::array();
    if (spec.p >= 1.0) {
        auto [lo, hi] = soria_tradacete_star_bounds(n, spec.p);
        rows.push_back(constant_row("star_norm_p_lower", n, spec.p, lo, true));
        rows.push_back(constant_row("star_norm_p_upper", n, spec.p, hi, true));
        if (n >= 3)
            rows.push_back(constant_row("star_lower_bound", n, spec.p, star_lower_bound(n, spec.p), true));
    }
    if (n >= 3)
        rows.push_back(constant_row("star_var2_constant", n, 2.0, star_var2_constant(n), true));
    rows.push_back(constant_row("kn_var_constant", n, std::nullopt, kn_var_constant(n), true));
    if (spec.p > 0.5 && spec.p <= 1.0) {
        TailBound cp = cp_constant(spec.p, spec.tol);
        rows.push_back(constant_row("cp_constant", 0, spec.p, cp.value, false,
                                    {{"error", cp.error}, {"terms_used", cp.terms_used}}));
    }
    return rows;
}

json run_asymptotics(const RunSpec& spec) {
    int n = spec.n;
    if (n < 3) throw validation_error("asymptotics: give --n >= 3");
    json rows = json::array();
    KnLimit kn = kn_limit(n);
    rows.push_back(constant_row("kn_limit", n, std::nullopt, kn.value, true,
                                {{"alpha_star", kn.alpha_star}, {"k_star", kn.k_star}}));
    StarLimit sl = star_limit(n);
    rows.push_back(constant_row("star_limit", n, std::nullopt, sl.value, sl.exact));
    if (spec.p >= 1.0) {
        StarNormStar ns = star_norm_star(n, spec.p);
        rows.push_back(constant_row("star_norm_star", n, spec.p, ns.value, false,
                                    {{"y_star", ns.y_star}, {"attained", ns.attained}}));
    }
    return rows;
}

json run_atlas(const RunSpec& spec) {
    if (spec.n < 2) throw validation_error("atlas: give --n >= 2");
    AtlasScan scan = scan_variation_constants(spec.n, spec.p, spec.cfg, spec.jobs);
    std::ostringstream lines;
    for (const auto& rec : scan.records) lines << atlas_record_to_json(rec).dump() << '\n';
    if (!spec.output_path.empty()) write_text(spec.output_path, lines.str());
    if (!spec.summary_path.empty()) {
        std::ostringstream csv;
        csv << "n,p,c_hat,C_hat,argmin_code,argmax_code\n";
        csv << spec.n << ',' << spec.p << ',' << scan.c_hat << ',' << scan.C_hat << ','
            << scan.argmin_code << ',' << scan.argmax_code << '\n';
        write_text(spec.summary_path, csv.str());
    }
    return {{"n", spec.n},       {"p", spec.p},
            {"graphs", scan.records.size()}, {"c_hat", scan.c_hat},
            {"C_hat", scan.C_hat},           {"argmin_code", scan.argmin_code},
            {"argmax_code", scan.argmax_code}};
}

json run_zline(const RunSpec& spec) {
    LatticeFunction f = load_lattice(spec.lattice_f);
    if (spec.zline_op == "lipschitz-half") return bound_report_to_json(check_lipschitz_half(f));
    if (spec.zline_op == "lipschitz-centered")
        return bound_report_to_json(check_lipschitz_centered(f));
    if (spec.zline_op == "var-norm")
        return bound_report_to_json(check_var_norm_bound(f, spec.p, spec.tol));
    if (spec.zline_op == "variation") {
        TailBound t = maximal_variation(f, spec.p, spec.tol);
        return tail_bound_to_json(t);
    }
    if (spec.zline_op == "maximal") {
        long long margin = (f.hi() - f.lo()) + 10;
        json j;
        j["window_lo"] = f.lo() - margin;
        j["window_hi"] = f.hi() + margin;
        j["centered"] = centered_maximal_z(f, f.lo() - margin, f.hi() + margin);
        j["uncentered"] = uncentered_maximal_z(f, f.lo() - margin, f.hi() + margin);
        return j;
    }
    throw validation_error("unknown zline op '" + spec.zline_op + "'");
}

json run_conjecture(const RunSpec& spec) {
    ConjectureScanResult r = conjecture_scan(spec.p, spec.cfg);
    if (r.violation)
        std::cerr << "WARNING: observed ratio " << r.max_ratio
                  << " exceeds the conjectured constant " << r.conjectured_constant << '\n';
    return {{"max_ratio", r.max_ratio},
            {"argmax", lattice_to_json(r.argmax)},
            {"conjectured_constant", r.conjectured_constant},
            {"violation", r.violation},
            {"candidates", r.candidates}};
}

int run_sweep(const RunSpec& spec) {
    if (!(spec.p_step > 0) || spec.p_to < spec.p_from)
        throw validation_error("sweep: need p_from <= p_to and positive p_step");
    int n = spec.n;
    if (n == 0 && !spec.graph_source.empty()) n = load_graph(spec.graph_source).n;
    if (n < 3) throw validation_error("sweep: give --n >= 3 or a graph");
    std::ostringstream csv;
    csv << "p,value\n";
    csv.precision(12);
    for (double p = spec.p_from; p <= spec.p_to + 1e-12; p += spec.p_step) {
        double value = 0.0;
        if (spec.quantity == "formula-p") {
            StarFormula sf = star_norm_formula(n, p);
            value = std::pow(sf.value, p);
        } else if (spec.quantity == "star-lower") {
            value = star_lower_bound(n, p);
        } else if (spec.quantity == "st-lower") {
            value = soria_tradacete_star_bounds(n, p).first;
        } else if (spec.quantity == "st-upper") {
            value = soria_tradacete_star_bounds(n, p).second;
        } else if (spec.quantity == "norm-star-p") {
            value = std::pow(star_norm_star(n, p).value, p);
        } else {
            throw validation_error("unknown sweep quantity '" + spec.quantity + "'");
        }
        csv << p << ',' << value << '\n';
    }
    write_text(spec.output_path, csv.str());
    return 0;
}

}  // namespace

RunSpec run_spec_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open run spec: " + path);
    json j = json::parse(in, nullptr, true, true);
    RunSpec spec;
    spec.command = j.value("command", "");
    spec.graph_source = j.value("graph", "");
    spec.n = j.value("n", 0);
    spec.p = j.value("p", 2.0);
    spec.p_from = j.value("p_from", 1.0);
    spec.p_to = j.value("p_to", 0.0);
    spec.p_step = j.value("p_step", 0.0);
    spec.method = j.value("method", "");
    spec.zline_op = j.value("op", "");
    spec.lattice_f = j.value("f", "delta");
    spec.quantity = j.value("quantity", "");
    spec.tol = j.value("tol", 1e-9);
    spec.cfg.grid_step = j.value("step", spec.cfg.grid_step);
    spec.cfg.restarts = j.value("restarts", spec.cfg.restarts);
    spec.cfg.max_iters = j.value("max_iters", spec.cfg.max_iters);
    spec.cfg.tolerance = j.value("tolerance", spec.cfg.tolerance);
    spec.cfg.seed = j.value("seed", spec.cfg.seed);
    spec.jobs = j.value("jobs", 0);
    spec.output_path = j.value("output", "");
    spec.summary_path = j.value("summary", "");
    spec.format = j.value("format", "json");
    return spec;
}

int run(const RunSpec& spec) {
    try {
        if (spec.command == "norm") {
            emit(spec, run_norm(spec));
        } else if (spec.command == "var") {
            emit(spec, run_var(spec));
        } else if (spec.command == "star-formula") {
            StarFormula sf = star_norm_formula(spec.n, spec.p);
            emit(spec, {{"value", sf.value}, {"x_star", sf.x_star}, {"heuristic", sf.heuristic}});
        } else if (spec.command == "complete-structured") {
            emit(spec, search_result_to_json(complete_norm_structured(spec.n, spec.p)));
        } else if (spec.command == "constants") {
            emit(spec, run_constants(spec));
        } else if (spec.command == "asymptotics") {
            emit(spec, run_asymptotics(spec));
        } else if (spec.command == "atlas") {
            emit(spec, run_atlas(spec));
        } else if (spec.command == "zline-check") {
            emit(spec, run_zline(spec));
        } else if (spec.command == "conjecture-scan") {
            emit(spec, run_conjecture(spec));
        } else if (spec.command == "sweep") {
            return run_sweep(spec);
        } else {
            throw validation_error("unknown command '" + spec.command + "'");
        }
        return 0;
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}

}  // namespace sharpmax
