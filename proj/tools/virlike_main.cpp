// Command line surface for the exact Virasoro-like algebra engine:
// bracket evaluation, Jacobi scans, closure witnesses, family actions,
// window verification, table I/O, classification and rigidity sweeps.
//
// Exit codes: 0 = pass/success, 1 = residual or non-certified target found,
// 2 = invalid input. Output is deterministic and written in full or not at
// all; VIRLIKE_THREADS overrides the worker count.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "virlike/parallel.hpp"
#include "virlike/serialize.hpp"

namespace {

using namespace virlike;

std::vector<long> parse_longs(const std::string& text, std::size_t count, const std::string& what) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (...) {
            throw std::invalid_argument(what + ": '" + item + "' is not an integer");
        }
        if (pos != item.size()) throw std::invalid_argument(what + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    if (count != 0 && out.size() != count)
        throw std::invalid_argument(what + ": expected " + std::to_string(count) + " comma-separated integers");
    return out;
}

Window parse_window(const std::string& text) {
    const auto v = parse_longs(text, 4, "--window");
    for (const long radius : v)
        if (radius < 0) throw std::invalid_argument("--window: radii must be non-negative");
    return Window::symmetric(v[0], v[1], v[2], v[3]);
}

IndexBox parse_box(const std::string& text) {
    const auto v = parse_longs(text, 4, "--box");
    if (v[0] > v[1] || v[2] > v[3]) throw std::invalid_argument("--box: empty range");
    return IndexBox{v[0], v[1], v[2], v[3]};
}

std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::from_string(item));
    if (out.empty()) throw std::invalid_argument("--grid: empty");
    return out;
}

FamilySpec parse_family(const std::string& family, const std::string& a, const std::string& lambda,
                        const std::string& mu) {
    const auto id = family_from_name(family);
    if (!id) throw std::invalid_argument("unknown family '" + family + "' (expected F1..F7)");
    FamilySpec spec;
    spec.id = *id;
    spec.a = Rational::from_string(a);
    spec.lambda = Rational::from_string(lambda);
    spec.mu = Rational::from_string(mu);
    require_valid(spec);
    return spec;
}

std::string csv_escape(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (const char c : v) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    out += '"';
    return out;
}

std::string lie_element_csv(const LieElement& e) {
    std::ostringstream os;
    os << "alpha,beta,coeff\n";
    Rational central(0);
    for (const auto& [idx, c] : e.terms()) {
        if (idx.central) {
            central = c;
            continue;
        }
        os << idx.alpha << ',' << idx.beta << ',' << c.str() << '\n';
    }
    os << "c,," << central.str() << '\n';
    return os.str();
}

std::string mod_vector_csv(const ModVector& v) {
    std::ostringstream os;
    os << "m,n,coeff\n";
    for (const auto& [key, c] : v.terms()) os << key.first << ',' << key.second << ',' << c.str() << '\n';
    return os.str();
}

/// Exhaustive Jacobi scan over basis triples with |alpha| <= box, |beta| <= box.
ResidualReport jacobi_scan(long box, std::size_t& triples) {
    std::vector<std::pair<long, long>> gens;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) gens.emplace_back(a, b);
    triples = gens.size() * gens.size() * gens.size();
    auto entries = parallel_collect<ReportEntry>(gens.size(), [&](std::size_t chunk) {
        std::vector<ReportEntry> out;
        const auto [a1, b1] = gens[chunk];
        const LieElement x = LieElement::generator(a1, b1);
        for (const auto& [a2, b2] : gens) {
            const LieElement y = LieElement::generator(a2, b2);
            for (const auto& [a3, b3] : gens) {
                const LieElement z = LieElement::generator(a3, b3);
                const LieElement defect = jacobi_defect(x, y, z);
                if (!defect.is_zero()) {
                    std::ostringstream os;
                    bool first = true;
                    for (const auto& [idx, c] : defect.terms()) {
                        if (!first) os << ';';
                        first = false;
                        if (idx.central) os << "c:" << c.str();
                        else os << '(' << idx.alpha << ',' << idx.beta << "):" << c.str();
                    }
                    out.push_back({EquationId::Axiom, a1, b1, a2, b2, a3, b3, os.str()});
                }
            }
        }
        return out;
    });
    ResidualReport report;
    report.entries = std::move(entries);
    report.sort_entries();
    return report;
}

int run(int argc, char** argv) {
    CLI::App app{"exact computation and verification engine for the non-graded Virasoro-like algebra"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // bracket
    auto* cmd_bracket = app.add_subcommand("bracket", "evaluate [L_{a1,b1}, L_{a2,b2}]");
    long a1 = 0, b1 = 0, a2 = 0, b2 = 0;
    cmd_bracket->add_option("--a1", a1)->required();
    cmd_bracket->add_option("--b1", b1)->required();
    cmd_bracket->add_option("--a2", a2)->required();
    cmd_bracket->add_option("--b2", b2)->required();

    // jacobi
    auto* cmd_jacobi = app.add_subcommand("jacobi", "exhaustive Jacobi scan over a generator box");
    long jacobi_box = 2;
    cmd_jacobi->add_option("--box", jacobi_box, "scan |alpha|, |beta| <= box")->required();

    // closure
    auto* cmd_closure = app.add_subcommand("closure", "subalgebra generation witness");
    long cl_m = 0, cl_n = 0;
    int cl_rounds = 3;
    std::string cl_variant = "S", cl_box, cl_band;
    cmd_closure->add_option("--m", cl_m)->required();
    cmd_closure->add_option("--n", cl_n)->required();
    cmd_closure->add_option("--variant", cl_variant)->check(CLI::IsMember({"S", "S_prime"}));
    cmd_closure->add_option("--box", cl_box, "alpha_min,alpha_max,beta_min,beta_max")->required();
    cmd_closure->add_option("--rounds", cl_rounds);
    cmd_closure->add_option("--band-k", cl_band, "comma-separated k >= 3 for the band targets");

    // ghw-set
    auto* cmd_ghw = app.add_subcommand("ghw-set", "GHW vanishing-set enumeration");
    std::string ghw_basis;
    long ghw_k1 = 0, ghw_k2 = 0;
    cmd_ghw->add_option("--basis", ghw_basis, "a1x,a1y,a2x,a2y")->required();
    cmd_ghw->add_option("--k1", ghw_k1)->required();
    cmd_ghw->add_option("--k2", ghw_k2)->required();

    // shared family flags
    std::string fam = "F1", fam_a = "0", fam_lambda = "0", fam_mu = "0";
    auto add_family_flags = [&](CLI::App* cmd) {
        cmd->add_option("--family", fam, "F1..F7")->required();
        cmd->add_option("--a", fam_a, "rational, F1 only");
        cmd->add_option("--lambda", fam_lambda, "rational");
        cmd->add_option("--mu", fam_mu, "rational");
    };

    // act
    auto* cmd_act = app.add_subcommand("act", "apply L_{r,s} to a module basis vector");
    long act_r = 0, act_s = 0, act_m = 0, act_n = 0;
    add_family_flags(cmd_act);
    cmd_act->add_option("--r", act_r)->required();
    cmd_act->add_option("--s", act_s)->required();
    cmd_act->add_option("--m", act_m)->required();
    cmd_act->add_option("--n", act_n)->required();

    // tabulate
    auto* cmd_tab = app.add_subcommand("tabulate", "tabulate family coefficients over a window");
    std::string tab_window = "3,3,2,2", tab_out;
    add_family_flags(cmd_tab);
    cmd_tab->add_option("--window", tab_window, "M,N,R,S meaning m,n in [-M,M] etc.");
    cmd_tab->add_option("--out", tab_out, "write the table to this file instead of stdout");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run all residual checks");
    std::string ver_window = "3,3,2,2", ver_table;
    std::string ver_fam, ver_a = "0", ver_lambda = "0", ver_mu = "0";
    cmd_verify->add_option("--family", ver_fam, "F1..F7");
    cmd_verify->add_option("--a", ver_a);
    cmd_verify->add_option("--lambda", ver_lambda);
    cmd_verify->add_option("--mu", ver_mu);
    cmd_verify->add_option("--window", ver_window);
    cmd_verify->add_option("--table", ver_table, "verify a saved table instead of a family");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "recover (family, parameters) from a table");
    std::string cls_table;
    cmd_classify->add_option("--table", cls_table)->required();

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "rigidity sweep of a built-in deformation");
    std::string sw_deformation, sw_lambda, sw_mu = "0", sw_grid, sw_window = "3,3,3,3";
    cmd_sweep->add_option("--deformation", sw_deformation)->required()
        ->check(CLI::IsMember({"D_APRIME", "D_APRIME_B"}));
    cmd_sweep->add_option("--lambda", sw_lambda)->required();
    cmd_sweep->add_option("--mu", sw_mu);
    cmd_sweep->add_option("--grid", sw_grid, "comma-separated rationals, must contain 0")->required();
    cmd_sweep->add_option("--window", sw_window);

    // let --format appear after the subcommand name
    for (CLI::App* sub : {cmd_bracket, cmd_jacobi, cmd_closure, cmd_ghw, cmd_act, cmd_tab,
                          cmd_verify, cmd_classify, cmd_sweep})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    std::string out;
    int exit_code = 0;

    if (cmd_bracket->parsed()) {
        const LieElement result = bracket_basis(a1, b1, a2, b2);
        out = format == "csv" ? lie_element_csv(result) : to_json_string(result) + "\n";
    } else if (cmd_jacobi->parsed()) {
        if (jacobi_box < 0) throw std::invalid_argument("--box must be non-negative");
        std::size_t triples = 0;
        const ResidualReport report = jacobi_scan(jacobi_box, triples);
        if (format == "csv") {
            out = to_csv(report);
        } else {
            nlohmann::ordered_json j;
            j["pass"] = report.pass();
            j["box"] = jacobi_box;
            j["triples_checked"] = triples;
            j["entries"] = nlohmann::ordered_json::parse(to_json_string(report))["entries"];
            out = j.dump(2) + "\n";
        }
        exit_code = report.pass() ? 0 : 1;
    } else if (cmd_closure->parsed()) {
        const IndexBox box = parse_box(cl_box);
        const auto variant = cl_variant == "S" ? WitnessVariant::S : WitnessVariant::SPrime;
        std::vector<long> band;
        if (!cl_band.empty()) band = parse_longs(cl_band, 0, "--band-k");
        const WitnessReport report = generation_witness(cl_m, cl_n, variant, box, cl_rounds, band);
        out = format == "csv" ? to_csv(report) : to_json_string(report) + "\n";
        exit_code = report.all_certified() ? 0 : 1;
    } else if (cmd_ghw->parsed()) {
        const auto v = parse_longs(ghw_basis, 4, "--basis");
        const LatticeBasis basis{{v[0], v[1]}, {v[2], v[3]}};
        const auto set = ghw_vanishing_set(basis, ghw_k1, ghw_k2);
        if (format == "csv") {
            std::ostringstream os;
            os << "alpha,beta\n";
            for (const auto& [a, b] : set) os << a << ',' << b << '\n';
            out = os.str();
        } else {
            out = to_json_string(set) + "\n";
        }
    } else if (cmd_act->parsed()) {
        const FamilySpec spec = parse_family(fam, fam_a, fam_lambda, fam_mu);
        const ModVector result = act_generator(spec, act_r, act_s, ModVector::unit(act_m, act_n));
        out = format == "csv" ? mod_vector_csv(result) : to_json_string(result) + "\n";
    } else if (cmd_tab->parsed()) {
        const FamilySpec spec = parse_family(fam, fam_a, fam_lambda, fam_mu);
        const ActionTable table = tabulate(spec, parse_window(tab_window));
        if (!tab_out.empty()) {
            save_table(table, tab_out);
            out = "";
        } else {
            out = to_json_string(table) + "\n";
        }
    } else if (cmd_verify->parsed()) {
        ResidualReport merged;
        if (!ver_table.empty()) {
            if (!ver_fam.empty())
                throw std::invalid_argument("verify: give either --table or --family, not both");
            const ActionTable table = load_table(ver_table);
            merged.merge(fg_equation_residual(table));
            merged.merge(normalization_check(table));
            merged.merge(module_axiom_residual(table_action(table), table.window()));
            merged.merge(grading_check(table_action(table), table.window()));
        } else {
            if (ver_fam.empty()) throw std::invalid_argument("verify: --family or --table required");
            const FamilySpec spec = parse_family(ver_fam, ver_a, ver_lambda, ver_mu);
            const Window w = parse_window(ver_window);
            const ActionTable table = tabulate(spec, w);
            merged.merge(module_axiom_residual(spec, w));
            merged.merge(fg_equation_residual(table));
            merged.merge(normalization_check(table));
            merged.merge(grading_check(spec, w));
        }
        merged.sort_entries();
        out = format == "csv" ? to_csv(merged) : to_json_string(merged) + "\n";
        exit_code = merged.pass() ? 0 : 1;
    } else if (cmd_classify->parsed()) {
        const ActionTable table = load_table(cls_table);
        const ClassifyResult result = fit_family(table);
        if (format == "csv") {
            std::ostringstream os;
            os << "family,paper_label,a,lambda,mu\n";
            for (const FamilySpec& m : result.matches)
                os << family_name(m.id) << ',' << csv_escape(std::string(family_paper_label(m.id)))
                   << ',' << m.a.str() << ',' << m.lambda.str() << ',' << m.mu.str() << '\n';
            out = os.str();
        } else {
            out = to_json_string(result) + "\n";
        }
        exit_code = result.matches.empty() ? 1 : 0;
    } else if (cmd_sweep->parsed()) {
        const auto id = deformation_from_name(sw_deformation);
        const SweepReport report =
            rigidity_sweep(*id, Rational::from_string(sw_lambda), Rational::from_string(sw_mu),
                           parse_grid(sw_grid), parse_window(sw_window));
        out = format == "csv" ? to_csv(report) : to_json_string(report) + "\n";
        exit_code = report.rigid() ? 0 : 1;
    }

    std::cout << out;
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
