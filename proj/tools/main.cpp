// Command line driver: tree/measure generation, Poisson transforms, the
// inverse boundary-value map, verification, and experiment tables.
//
// Exit codes: 0 success, 2 usage, 3 domain error (bad files/ids), 4 numeric
// regime error (z^2 in {0,1}, q >= |z|^2, overflow). All outputs are written
// atomically and are byte-identical across runs for identical inputs.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treepoisson/boundary.hpp"
#include "treepoisson/hoelder.hpp"
#include "treepoisson/io.hpp"
#include "treepoisson/poisson.hpp"

using namespace treepoisson;

namespace {

Complex parse_z(const std::string& text) { return parse_complex_pair(text); }

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw DomainError("empty id in list '" + text + "'");
        ids.push_back(static_cast<int>(std::stol(tok)));
    }
    return ids;
}

std::string csv_cell(double x) { return format_double(x); }

// ------------------------------------------------------------- subcommands

int run_gen_tree(const std::string& regular_arg, const std::string& parents_path,
                 const std::string& out) {
    Tree tree = [&] {
        if (!regular_arg.empty()) {
            const auto ids = parse_id_list(regular_arg);
            if (ids.size() != 2) throw DomainError("--regular expects q,depth");
            return Tree::regular(ids[0], ids[1]);
        }
        std::ifstream in(parents_path);
        if (!in) throw DomainError("cannot open '" + parents_path + "'");
        std::vector<std::pair<int, int>> edges;
        long child = 0, parent = 0;
        while (in >> child >> parent)
            edges.emplace_back(static_cast<int>(child), static_cast<int>(parent));
        return Tree::from_parents(edges);
    }();
    write_tree_file(out, tree);
    return 0;
}

int run_gen_measure(const std::string& tree_path, std::optional<int> dirac_leaf,
                    bool rotation, int center, bool random, std::optional<std::uint64_t> seed,
                    const std::string& out) {
    Tree tree = read_tree_file(tree_path);
    if ((dirac_leaf ? 1 : 0) + (rotation ? 1 : 0) + (random ? 1 : 0) != 1)
        throw DomainError("choose exactly one of --dirac, --rotation-invariant, --random");
    if (random && !seed) throw DomainError("--random needs --seed for reproducibility");
    BoundaryMeasure mu = dirac_leaf ? BoundaryMeasure::dirac(tree, *dirac_leaf)
                         : rotation ? BoundaryMeasure::rotation_invariant(tree, center)
                                    : BoundaryMeasure::random_uniform(tree, *seed);
    write_measure_file(out, mu);
    return 0;
}

int run_transform(const std::string& tree_path, const std::string& measure_path,
                  const std::string& z_text, const std::string& out) {
    Tree tree = read_tree_file(tree_path);
    BoundaryMeasure mu = read_measure_file(measure_path, tree);
    write_vertex_function_file(out, poisson_transform(parse_z(z_text), mu));
    return 0;
}

int run_invert(const std::string& tree_path, const std::string& vfun_path,
               const std::string& z_text, const std::string& out) {
    Tree tree = read_tree_file(tree_path);
    VertexFunction f = read_vertex_function_file(vfun_path, tree);
    const Complex z = parse_z(z_text);
    EdgeCoefficients mu = beta(z, f);
    EigenCharacterization rep = check_eigen_characterization(z, f);

    if (!out.empty()) {
        std::ostringstream text;
        text << "BETA " << tree.vertex_count() - 1 << '\n';
        for (int v = 1; v < tree.vertex_count(); ++v)
            text << v << ' ' << format_double(mu.at_child(v).real()) << ' '
                 << format_double(mu.at_child(v).imag()) << '\n';
        write_text_file_atomic(out, text.str());
    }
    std::cout << "max_compat_violation " << format_double(rep.max_compat_violation) << '\n'
              << "root_condition_gap " << format_double(rep.root_condition_gap) << '\n';
    return 0;
}

int run_verify(const std::string& tree_path, const std::string& measure_path,
               const std::string& z_text, double tol) {
    Tree tree = read_tree_file(tree_path);
    BoundaryMeasure mu = read_measure_file(measure_path, tree);
    const Complex z = parse_z(z_text);

    double flow_scale = 0.0;
    for (int v = 1; v < tree.vertex_count(); ++v)
        flow_scale = std::max(flow_scale, std::abs(mu.cylinder(v)));
    const double roundtrip = roundtrip_measure(z, mu);
    const double roundtrip_rel = roundtrip / std::max(1.0, flow_scale);

    VertexFunction f = poisson_transform(z, mu);
    const double residual_rel = max_relative_eigen_residual(f, z);

    const bool ok = roundtrip_rel <= tol && residual_rel <= tol;
    std::cout << "roundtrip_max_discrepancy " << format_double(roundtrip) << '\n'
              << "roundtrip_relative " << format_double(roundtrip_rel) << '\n'
              << "eigen_residual_relative " << format_double(residual_rel) << '\n'
              << "tolerance " << format_double(tol) << '\n'
              << "status " << (ok ? "OK" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

int run_limit_table(const std::string& tree_path, const std::string& measure_path,
                    const std::string& z_text, std::optional<int> vertex,
                    const std::string& clopen_text, int k_max, const std::string& out) {
    Tree tree = read_tree_file(tree_path);
    BoundaryMeasure mu = read_measure_file(measure_path, tree);
    const Complex z = parse_z(z_text);
    VertexFunction f = poisson_transform(z, mu);

    if ((vertex ? 1 : 0) + (clopen_text.empty() ? 0 : 1) != 1)
        throw DomainError("choose exactly one of --vertex, --clopen");

    std::vector<Complex> estimates;
    Complex truth;
    if (vertex) {
        estimates = limit_recover_vertex(z, f, *vertex, k_max);
        truth = mu.cylinder(*vertex);
    } else {
        ClopenSet u(tree, parse_id_list(clopen_text));
        estimates = limit_recover_clopen(z, f, u, k_max);
        truth = mu.evaluate(u);
    }

    std::ostringstream csv;
    csv << "k,estimate_re,estimate_im,abs_error,error_ratio\n";
    double prev_err = 0.0;
    for (std::size_t k = 0; k < estimates.size(); ++k) {
        const double err = std::abs(estimates[k] - truth);
        const double ratio = k == 0 ? std::nan("") : err / prev_err;
        csv << k << ',' << csv_cell(estimates[k].real()) << ',' << csv_cell(estimates[k].imag())
            << ',' << csv_cell(err) << ',' << csv_cell(ratio) << '\n';
        prev_err = err;
    }
    write_text_file_atomic(out, csv.str());
    return 0;
}

int run_envelope(const std::string& tree_path, const std::string& measure_path,
                 const std::string& vfun_path, std::optional<double> theta,
                 const std::string& out) {
    Tree tree = read_tree_file(tree_path);
    if (measure_path.empty() == vfun_path.empty())
        throw DomainError("choose exactly one of --measure, --vfun");

    std::vector<double> maxima;
    const char* value_col;
    const char* fit_col;
    if (!measure_path.empty()) {
        BoundaryMeasure mu = read_measure_file(measure_path, tree);
        maxima = level_abs_maxima(tree, mu.cylinders());
        value_col = "a_n";
        fit_col = "K_hat";
    } else {
        VertexFunction f = read_vertex_function_file(vfun_path, tree);
        maxima = level_abs_maxima(tree, f.values());
        value_col = "b_n";
        fit_col = "G_hat";
    }

    std::ostringstream csv;
    csv << "n," << value_col << ',' << fit_col << '\n';
    for (std::size_t n = 0; n < maxima.size(); ++n) {
        const std::vector<double> prefix(maxima.begin(), maxima.begin() + n + 1);
        const double running = n == 0 ? std::nan("") : fit_envelope(prefix).base;
        csv << n << ',' << csv_cell(maxima[n]) << ',' << csv_cell(running) << '\n';
    }
    write_text_file_atomic(out, csv.str());

    if (theta && !measure_path.empty()) {
        const GrowthEnvelope env = fit_envelope(maxima);
        const double bound = 1.0 / (env.base * std::max(1, tree.q_max()));
        std::cout << "theta " << format_double(*theta) << '\n'
                  << "theta_bound " << format_double(bound) << '\n'
                  << "theta_ok " << (*theta < bound ? 1 : 0) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson transforms on truncated trees of bounded degree"};
    app.require_subcommand(1);

    auto* gen_tree = app.add_subcommand("gen-tree", "generate a tree file");
    std::string regular_arg, parents_path, gt_out;
    auto* opt_regular = gen_tree->add_option("--regular", regular_arg, "q,depth");
    auto* opt_parents =
        gen_tree->add_option("--parents", parents_path, "file of 'child parent' lines");
    opt_regular->excludes(opt_parents);
    gen_tree->add_option("--out", gt_out)->required();

    auto* gen_measure = app.add_subcommand("gen-measure", "generate a measure file");
    std::string gm_tree, gm_out;
    std::optional<int> gm_dirac;
    bool gm_rotation = false;
    bool gm_random = false;
    int gm_center = 0;
    std::optional<std::uint64_t> gm_seed;
    gen_measure->add_option("--tree", gm_tree)->required();
    gen_measure->add_option("--dirac", gm_dirac, "leaf id of a Dirac measure");
    gen_measure->add_flag("--rotation-invariant", gm_rotation);
    gen_measure->add_option("--center", gm_center, "center vertex (default o)");
    gen_measure->add_flag("--random", gm_random, "i.i.d. uniform leaf masses");
    gen_measure->add_option("--seed", gm_seed, "splitmix64 seed, mandatory with --random");
    gen_measure->add_option("--out", gm_out)->required();

    auto* transform = app.add_subcommand("transform", "Poisson transform of a measure");
    std::string tr_tree, tr_measure, tr_z, tr_out;
    transform->add_option("--tree", tr_tree)->required();
    transform->add_option("--measure", tr_measure)->required();
    transform->add_option("--z", tr_z, "re,im")->required();
    transform->add_option("--out", tr_out)->required();

    auto* invert = app.add_subcommand("invert", "boundary value map of a vertex function");
    std::string in_tree, in_vfun, in_z, in_out;
    invert->add_option("--tree", in_tree)->required();
    invert->add_option("--vfun", in_vfun)->required();
    invert->add_option("--z", in_z, "re,im")->required();
    invert->add_option("--out", in_out, "edge coefficient listing");

    auto* verify = app.add_subcommand("verify", "roundtrip + eigen residual summary");
    std::string ve_tree, ve_measure, ve_z;
    double ve_tol = 1e-10;
    verify->add_option("--tree", ve_tree)->required();
    verify->add_option("--measure", ve_measure)->required();
    verify->add_option("--z", ve_z, "re,im")->required();
    verify->add_option("--tol", ve_tol, "acceptance tolerance (default 1e-10)");

    auto* limit = app.add_subcommand("limit-table", "limit recovery estimates as CSV");
    std::string lt_tree, lt_measure, lt_z, lt_clopen, lt_out;
    std::optional<int> lt_vertex;
    int lt_kmax = 0;
    limit->add_option("--tree", lt_tree)->required();
    limit->add_option("--measure", lt_measure)->required();
    limit->add_option("--z", lt_z, "re,im")->required();
    limit->add_option("--vertex", lt_vertex, "recover mu(Omega_o(x))");
    limit->add_option("--clopen", lt_clopen, "comma separated antichain ids");
    limit->add_option("--kmax", lt_kmax)->required();
    limit->add_option("--out", lt_out)->required();

    auto* envelope = app.add_subcommand("envelope", "growth envelope table as CSV");
    std::string en_tree, en_measure, en_vfun, en_out;
    std::optional<double> en_theta;
    envelope->add_option("--tree", en_tree)->required();
    envelope->add_option("--measure", en_measure);
    envelope->add_option("--vfun", en_vfun);
    envelope->add_option("--theta", en_theta, "check theta < 1/(K_hat q_max)");
    envelope->add_option("--out", en_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (gen_tree->parsed()) {
            if (regular_arg.empty() == parents_path.empty())
                throw DomainError("choose exactly one of --regular, --parents");
            return run_gen_tree(regular_arg, parents_path, gt_out);
        }
        if (gen_measure->parsed())
            return run_gen_measure(gm_tree, gm_dirac, gm_rotation, gm_center, gm_random,
                                   gm_seed, gm_out);
        if (transform->parsed()) return run_transform(tr_tree, tr_measure, tr_z, tr_out);
        if (invert->parsed()) return run_invert(in_tree, in_vfun, in_z, in_out);
        if (verify->parsed()) return run_verify(ve_tree, ve_measure, ve_z, ve_tol);
        if (limit->parsed())
            return run_limit_table(lt_tree, lt_measure, lt_z, lt_vertex, lt_clopen, lt_kmax,
                                   lt_out);
        return run_envelope(en_tree, en_measure, en_vfun, en_theta, en_out);
    } catch (const NumericRegimeError& e) {
        std::cerr << "numeric regime error: " << e.what() << '\n';
        return 4;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
