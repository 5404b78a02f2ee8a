#include "gog/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "gog/calculus.hpp"
#include "gog/decomposition.hpp"
#include "gog/errors.hpp"
#include "gog/gogfile.hpp"
#include "gog/oracle/enumerate.hpp"
#include "gog/oracle/hom_count.hpp"
#include "gog/oracle/irreps.hpp"
#include "gog/verify.hpp"

namespace gog {

namespace {

void print_issue(std::ostream& o, const std::string& kind, const Issue& issue) {
    o << kind << ": ";
    if (!issue.where.empty()) o << issue.where << ": ";
    o << issue.what << "\n";
}

// Loads and validates; prints violations to out and returns false when the
// graph is invalid.  Warnings and notes go to err so reports stay clean.
bool load_valid_graph(const std::string& path, std::ostream& out, std::ostream& err,
                      GraphOfGroups& g) {
    g = load_gog_file(path);
    const ValidationReport report = validate(g);
    for (const Issue& w : report.warnings) print_issue(err, "warning", w);
    for (const Issue& n : report.notes) print_issue(err, "note", n);
    if (!report.valid()) {
        for (const Issue& v : report.violations) print_issue(out, "violation", v);
        return false;
    }
    return true;
}

int cmd_invariants(const std::string& path, std::ostream& out, std::ostream& err) {
    GraphOfGroups g;
    if (!load_valid_graph(path, out, err, g)) return 1;
    const InvariantReport r = invariant_report(g);
    out << "omega = " << (r.omega ? r.omega->str() : "undefined:" + r.omega_reason) << "\n";
    out << "rg = " << r.rank_gradient.str() << "\n";
    out << "b1l2 = " << r.l2_betti.str() << "\n";
    out << "vb = " << r.betti_volume.str() << "\n";
    out << "vc = " << (r.vc ? r.vc->str() : "undefined:" + r.vc_reason) << "\n";
    return (r.omega && r.vc) ? 0 : 2;
}

int cmd_decompose(const std::string& kind, const std::vector<long long>& params,
                  std::ostream& out, std::ostream& err) {
    FreeProductDecomposition d;
    if (kind == "free-product") {
        if (params.size() != 3) {
            err << "error: decompose free-product takes <m> <n> <s>\n";
            return 3;
        }
        d = free_product_finite_index(params[0], params[1], params[2]);
    } else if (kind == "hnn") {
        if (params.size() != 2) {
            err << "error: decompose hnn takes <k> <c>\n";
            return 3;
        }
        d = hnn_finite_index(params[0], params[1]);
    } else {
        if (params.size() != 3) {
            err << "error: decompose amalgam takes <n1> <n2> <c>\n";
            return 3;
        }
        d = amalgam_finite_index(params[0], params[1], params[2]);
    }
    out << d.str() << "\n";
    return 0;
}

int cmd_mednykh(const std::string& group, long long genus, bool brute, std::ostream& out) {
    const oracle::FiniteGroupTable c = oracle::build_group(group);
    const long long formula = oracle::mednykh_eval(genus, c);
    out << "formula = " << formula << "\n";
    if (!brute) return 0;
    const long long count = oracle::hom_count_surface(genus, c);
    out << "brute_force = " << count << "\n";
    out << (formula == count ? "MATCH" : "MISMATCH") << "\n";
    return formula == count ? 0 : 1;
}

int cmd_enumerate(const std::string& name_a, const std::string& name_b, long long max_index,
                  const oracle::EnumerationBudget& budget, std::ostream& out) {
    const oracle::FiniteGroupTable a = oracle::build_group(name_a);
    const oracle::FiniteGroupTable b = oracle::build_group(name_b);
    for (long long s = 1; s <= max_index; ++s)
        for (const auto& cert : oracle::enumerate_subgroups(a, b, s, budget))
            out << cert.str() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
    const std::vector<CheckResult> results =
        suite.empty() ? run_all_verify_suites() : run_verify_suite(suite);
    long long passed = 0;
    for (const CheckResult& r : results) {
        if (r.pass) {
            ++passed;
            out << "PASS " << r.suite << ": " << r.check << "\n";
        } else {
            out << "FAIL " << r.suite << ": " << r.check << " (" << r.detail << ")\n";
        }
    }
    out << "passed " << passed << "/" << results.size() << "\n";
    return passed == static_cast<long long>(results.size()) ? 0 : 1;
}

int cmd_bounds(const std::string& path, long long norm_override, long long fix_index,
               const std::string& fix_omega, std::ostream& out, std::ostream& err) {
    GraphOfGroups g;
    if (!load_valid_graph(path, out, err, g)) return 1;
    std::optional<long long> norm =
        norm_override > 0 ? std::optional<long long>(norm_override) : graph_norm(g);
    const Rational rg = rank_gradient_graph(g);
    out << "norm = " << (norm ? std::to_string(*norm) : "unbounded") << "\n";
    out << "rg = " << rg.str() << "\n";
    bool undefined = false;
    if (norm) {
        out << "accessibility_edges = " << accessibility_edge_bound(*norm, rg) << "\n";
    } else {
        out << "accessibility_edges = undefined:norm unbounded\n";
        undefined = true;
    }
    if (fix_index > 0)
        out << "fix_complexity = "
            << fixed_subgroup_complexity_bound(fix_index, Rational::parse(fix_omega)).str()
            << "\n";
    return undefined ? 2 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of fundamental groups of graphs of groups"};
    app.name("gogcalc");
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for enumeration loops")
        ->check(CLI::PositiveNumber);
    app.require_subcommand(1);

    CLI::App* inv = app.add_subcommand("invariants", "invariant report for a graph file");
    std::string inv_file;
    inv->add_option("file", inv_file, "graph description file")->required();

    CLI::App* dec =
        app.add_subcommand("decompose", "finite-index subgroup free-product decompositions");
    std::string dec_kind;
    std::vector<long long> dec_params;
    dec->add_option("kind", dec_kind, "free-product | hnn | amalgam")
        ->required()
        ->check(CLI::IsMember({"free-product", "hnn", "amalgam"}));
    dec->add_option("params", dec_params, "free-product <m> <n> <s>, hnn <k> <c>, amalgam <n1> <n2> <c>");

    CLI::App* med = app.add_subcommand("mednykh", "surface-group homomorphism counts");
    std::string med_group;
    long long med_genus = 0;
    bool med_brute = false;
    med->add_option("group", med_group, "target group catalog name")
        ->required()
        ->check(CLI::IsMember(oracle::catalog_names()));
    med->add_option("genus", med_genus, "surface genus")->required()->check(CLI::NonNegativeNumber);
    med->add_flag("--brute-force", med_brute, "also count by exhaustive tuple search");

    CLI::App* enu = app.add_subcommand("enumerate-subgroups",
                                       "finite-index subgroups of a free product of two groups");
    std::string enu_a, enu_b;
    long long enu_max = 0;
    oracle::EnumerationBudget budget;
    enu->add_option("A", enu_a, "first factor catalog name")
        ->required()
        ->check(CLI::IsMember(oracle::catalog_names()));
    enu->add_option("B", enu_b, "second factor catalog name")
        ->required()
        ->check(CLI::IsMember(oracle::catalog_names()));
    enu->add_option("--max-index", enu_max, "enumerate subgroups of index 1..s")
        ->required()
        ->check(CLI::PositiveNumber);
    enu->add_option("--max-degree", budget.max_degree, "budget: largest permitted index")
        ->check(CLI::PositiveNumber);
    enu->add_option("--max-pairs", budget.max_pairs, "budget: largest permitted action pair count")
        ->check(CLI::PositiveNumber);

    CLI::App* ver = app.add_subcommand("verify", "oracle cross-check suites");
    std::string ver_suite;
    ver->add_option("--suite", ver_suite, "run one suite")
        ->check(CLI::IsMember(verify_suite_names()));

    CLI::App* bnd = app.add_subcommand("bounds", "splitting bounds for a graph file");
    std::string bnd_file;
    long long bnd_norm = 0, fix_index = 0;
    std::string fix_omega;
    bnd->add_option("file", bnd_file, "graph description file")->required();
    bnd->add_option("--norm", bnd_norm, "override the finite-subgroup bound")
        ->check(CLI::PositiveNumber);
    CLI::Option* fix_index_opt =
        bnd->add_option("--fix-index", fix_index, "index of the preserved subgroup")
            ->check(CLI::PositiveNumber);
    CLI::Option* fix_omega_opt =
        bnd->add_option("--fix-omega", fix_omega, "omega of the preserved subgroup");
    fix_index_opt->needs(fix_omega_opt);
    fix_omega_opt->needs(fix_index_opt);

    std::vector<const char*> argv = {"gogcalc"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 3;
    }

    try {
        oracle::set_default_threads(threads);
        if (inv->parsed()) return cmd_invariants(inv_file, out, err);
        if (dec->parsed()) return cmd_decompose(dec_kind, dec_params, out, err);
        if (med->parsed()) return cmd_mednykh(med_group, med_genus, med_brute, out);
        if (enu->parsed()) return cmd_enumerate(enu_a, enu_b, enu_max, budget, out);
        if (ver->parsed()) return cmd_verify(ver_suite, out);
        if (bnd->parsed()) return cmd_bounds(bnd_file, bnd_norm, fix_index, fix_omega, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const undefined_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace gog
