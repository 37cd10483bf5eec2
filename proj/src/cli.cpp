#include "brk/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "brk/atkinson.hpp"
#include "brk/border.hpp"
#include "brk/catalog.hpp"
#include "brk/constructions.hpp"
#include "brk/criticality.hpp"
#include "brk/invariants.hpp"
#include "brk/io.hpp"

namespace brkit {

namespace {

QVec parse_covector(const std::string& s) {
    QVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(),
                                 [](unsigned char ch) { return std::isspace(ch); }),
                  tok.end());
        v.push_back(parse_rat(tok));
    }
    if (v.empty()) throw std::runtime_error("empty covector '" + s + "'");
    return v;
}

std::vector<QVec> parse_covectors(const std::vector<std::string>& ss) {
    std::vector<QVec> out;
    out.reserve(ss.size());
    for (const auto& s : ss) out.push_back(parse_covector(s));
    return out;
}

std::string column_str(const std::vector<MultiPoly>& col) {
    std::string s = "[";
    for (size_t i = 0; i < col.size(); ++i) {
        if (i) s += ", ";
        s += poly_str(col[i]);
    }
    return s + "]";
}

void print_space_header(std::ostream& out, const SpaceOfMatrices& e) {
    out << "space: " << e.rows() << " x " << e.cols() << " in " << e.nvars()
        << " variables\n";
}

int run_catalog(std::ostream& out, const std::string& name,
                const std::vector<long>& params) {
    if (name.empty()) {
        for (const auto& entry : catalog::entries()) {
            out << std::left << std::setw(19) << entry.name << std::setw(8)
                << entry.kind << std::setw(12)
                << (entry.params.empty() ? "-" : entry.params) << entry.brief
                << "\n";
        }
        return 0;
    }
    catalog::Item item = catalog::build(name, params);
    if (item.is_space)
        write_space(out, item.space);
    else
        write_tensor(out, item.tensor);
    return 0;
}

int run_rank(std::ostream& out, const std::string& path) {
    SpaceOfMatrices e = read_space_file(path);
    print_space_header(out, e);
    RankCertificate cert = certified_bounded_rank(e);
    if (cert.minors > 0)
        out << "bounded rank: " << cert.rank << " (certified by vanishing of all "
            << cert.rank + 1 << "-minors)\n";
    else
        out << "bounded rank: " << cert.rank << " (maximal for the format)\n";
    return 0;
}

int run_atkinson(std::ostream& out, const std::string& path, std::uint64_t seed) {
    SpaceOfMatrices e = read_space_file(path);
    print_space_header(out, e);
    AtkinsonForm f = to_normal_form(e, seed);
    if (!verify_normal_form(f)) {
        out << "normal form FAILED symbolic verification\n";
        return 1;
    }
    out << "normal form verified: z = 0 and u x^k w = 0 for 0 <= k < " << f.r
        << "\n";
    AtkinsonNumbers nums = atkinson_numbers(f);
    bool ok = nums.at_l + nums.at_r <= f.r;
    out << "at_L=" << nums.at_l << " at_R=" << nums.at_r << " r=" << f.r
        << "; at_L+at_R ≤ r: " << (ok ? "OK" : "FAIL") << "\n";
    DInvariants d = d_invariants(f);
    out << "d_U=" << d.d_u << " d_W=" << d.d_w << " d_UW=" << d.d_uw << "\n";
    std::vector<std::string> flags = imprimitivity_screen(f);
    out << "imprimitivity screen: ";
    if (flags.empty()) {
        out << "none";
    } else {
        for (size_t i = 0; i < flags.size(); ++i)
            out << (i ? "; " : "") << flags[i];
    }
    out << "\n";
    ExpandabilityReport ex = expandability_screen(f);
    out << "expandability screen: ann=" << ex.ann_dim << " at_L=" << ex.at_l
        << " threshold=" << ex.threshold << (ex.fires ? "; fired" : "; not fired")
        << "\n";
    return ok ? 0 : 1;
}

int run_annihilator(std::ostream& out, const std::string& path, int degree) {
    SpaceOfMatrices e = read_space_file(path);
    print_space_header(out, e);
    GradedAnnihilator g = graded_annihilator(e, degree);
    out << "degree " << degree << " annihilator: solutions " << g.solutions.size()
        << ", lower-degree part " << g.submodule.size() << ", primitive "
        << g.primitive.size() << "\n";
    if (g.primitive.empty()) {
        out << "primitive generators: none\n";
    } else {
        out << "primitive generators:\n";
        for (const auto& col : g.primitive) out << "  " << column_str(col) << "\n";
    }
    return 0;
}

int run_kernel(std::ostream& out, std::ostream& err, const std::string& path) {
    SpaceOfMatrices e = read_space_file(path);
    KernelPair kp;
    try {
        kp = corank1_kernel(e);
    } catch (const std::domain_error& ex) {
        err << "brk: " << ex.what() << "\n";
        return 2;
    }
    print_space_header(out, e);
    out << "right kernel (degree " << kp.right.degree
        << "): " << column_str(kp.right.v) << "\n";
    out << "left kernel (degree " << kp.left.degree
        << "): " << column_str(kp.left.v) << "\n";
    return 0;
}

int run_blowup(std::ostream& out, const std::string& path,
               const std::string& family, int k, std::uint64_t seed) {
    SpaceOfMatrices e = read_space_file(path);
    const CommutingFamily fam = family == "A"   ? family_a()
                                : family == "B" ? family_b()
                                                : random_commuting_family(
                                                      e.nvars(), seed, k);
    write_space(out, blowup(e, fam));
    return 0;
}

int run_kron(std::ostream& out, const std::string& path1,
             const std::string& path2) {
    Tensor3 t1 = read_tensor_file(path1);
    Tensor3 t2 = read_tensor_file(path2);
    KronBoundedReport r = kron_bounded_report(t1, t2);
    out << "product space: " << r.rows << " x " << r.cols << "\n";
    out << "bounded rank: " << r.rank << "; factor bound: " << r.factor_rank
        << " * " << r.other_dim << " = " << r.bound
        << "; tight: " << (r.tight ? "yes" : "no") << "\n";
    return 0;
}

int run_symmetry(std::ostream& out, const std::string& path) {
    Tensor3 t = read_tensor_file(path);
    SymmetryReport s = symmetry_algebra(t);
    out << "tensor: " << t.dim(0) << " x " << t.dim(1) << " x " << t.dim(2)
        << "\n";
    out << "symmetry algebra: extended " << s.extended << ", actual " << s.actual
        << "\n";
    return 0;
}

int run_koszul(std::ostream& out, const std::string& path, int p, int restrict_dim,
               std::uint64_t seed) {
    Tensor3 t = read_tensor_file(path);
    int rd = restrict_dim > 0 ? restrict_dim : t.dim(0);
    long b = koszul_bound(t, p, rd, seed);
    out << "koszul bound (p=" << p << ", restrict " << rd << "): R̄ ≥ " << b
        << "\n";
    return 0;
}

int run_strassen(std::ostream& out, const std::string& path,
                 const std::string& factor,
                 const std::vector<std::string>& covector_args,
                 std::uint64_t seed) {
    Tensor3 t = read_tensor_file(path);
    Factor f = parse_factor(factor);
    if (covector_args.empty()) {
        long b = strassen_bound(t, f, seed);
        out << "strassen bound (factor " << factor_name(f) << "): R̄ ≥ " << b
            << "\n";
        return 0;
    }
    SubstitutionReport rep =
        border_substitution_check(t, f, parse_covectors(covector_args), seed);
    out << "strassen bound (factor " << factor_name(f) << "): R̄ ≥ " << rep.base
        << "\n";
    for (size_t i = 0; i < rep.preserved.size(); ++i)
        out << "covector " << i + 1 << ": "
            << (rep.preserved[i] ? "preserved" : "not preserved") << "\n";
    out << "substitution bound: R̄ ≥ " << rep.final_bound << "\n";
    return 0;
}

int run_rnd(std::ostream& out, const std::string& path, std::uint64_t seed,
            int samples) {
    SpaceOfMatrices e = read_space_file(path);
    RndResult r = rnd_space(e, seed, samples);
    out << "space dim " << r.dim_space << ", rank-neutral intersection dim "
        << r.dim_intersection << ", contained: " << (r.contained ? "yes" : "no")
        << "\n";
    out << "certified maximal: " << (r.certified ? "yes" : "no") << "\n";
    return r.certified ? 0 : 1;
}

int run_border_check(std::ostream& out, const std::string& cert_path,
                     const std::string& tensor_path) {
    Decomposition d = read_cert_file(cert_path);
    Tensor3 t = read_tensor_file(tensor_path);
    CheckResult res = check_decomposition(d, t);
    if (res.ok) {
        out << "certificate VERIFIED: R̄ ≤ " << res.upper_bound << " at scale t^"
            << res.scale << "\n";
        return 0;
    }
    out << "certificate FAILED: " << res.failure << "\n";
    return 1;
}

int run_bounds(std::ostream& out, const std::string& tensor_path,
               const std::vector<std::string>& cert_paths,
               const std::string& factor,
               const std::vector<std::string>& covector_args, int p,
               int restrict_dim, std::uint64_t seed) {
    Tensor3 t = read_tensor_file(tensor_path);
    std::vector<Decomposition> certs;
    certs.reserve(cert_paths.size());
    for (const auto& cp : cert_paths) certs.push_back(read_cert_file(cp));
    BoundsOptions opt;
    opt.strassen_factor = opt.substitution_factor = parse_factor(factor);
    opt.covectors = parse_covectors(covector_args);
    opt.koszul_p = p;
    opt.koszul_restrict = restrict_dim > 0 ? restrict_dim : t.dim(0);
    opt.seed = seed;
    BoundsReport rep = bounds_report(t, certs, opt);
    out << bounds_report_text(rep);
    return rep.failures.empty() ? 0 : 1;
}

}  // namespace

int brk_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for spaces of matrices of bounded rank"};
    app.name("brk");
    app.require_subcommand(1);

    std::string name, spath, tpath, tpath2, cpath;
    std::vector<long> params;
    std::vector<std::string> covectors, cert_paths;
    std::string family = "A", factor = "B";
    std::uint64_t seed = 0;
    int degree = 1, p = 1, bounds_p = 0, restrict_dim = 0, samples = 60, order = 2;

    auto add_seed = [&](CLI::App* c) {
        c->add_option("--seed", seed, "random seed")->capture_default_str();
    };

    CLI::App* c_catalog =
        app.add_subcommand("catalog", "list builtin spaces and tensors, or print one");
    c_catalog->add_option("name", name, "registry name");
    c_catalog->add_option("params", params, "integer parameters");

    CLI::App* c_rank = app.add_subcommand("rank", "certified bounded rank of a space");
    c_rank->add_option("space", spath, "space file")->required();

    CLI::App* c_atkinson =
        app.add_subcommand("atkinson", "normal form of a space and its invariants");
    c_atkinson->add_option("space", spath, "space file")->required();
    add_seed(c_atkinson);

    CLI::App* c_annihilator =
        app.add_subcommand("annihilator", "graded annihilator of a space");
    c_annihilator->add_option("space", spath, "space file")->required();
    c_annihilator->add_option("--degree", degree, "homogeneous degree")
        ->capture_default_str();

    CLI::App* c_kernel =
        app.add_subcommand("kernel", "kernel pair of a square corank-one space");
    c_kernel->add_option("space", spath, "space file")->required();

    CLI::App* c_blowup =
        app.add_subcommand("blowup", "blow up a space by a commuting matrix family");
    c_blowup->add_option("space", spath, "space file")->required();
    c_blowup->add_option("--family", family, "named family A or B, or random")
        ->check(CLI::IsMember({"A", "B", "random"}))
        ->capture_default_str();
    c_blowup->add_option("--order", order, "matrix size of the random family")
        ->capture_default_str();
    add_seed(c_blowup);

    CLI::App* c_kron =
        app.add_subcommand("kron", "bounded rank of a Kronecker product");
    c_kron->add_option("tensor", tpath, "tensor file")->required();
    c_kron->add_option("tensor2", tpath2, "second tensor file")->required();

    CLI::App* c_symmetry =
        app.add_subcommand("symmetry", "symmetry Lie algebra dimensions");
    c_symmetry->add_option("tensor", tpath, "tensor file")->required();

    CLI::App* c_koszul =
        app.add_subcommand("koszul", "Koszul map lower bound on border rank");
    c_koszul->add_option("tensor", tpath, "tensor file")->required();
    c_koszul->add_option("--p", p, "exterior power")->capture_default_str();
    c_koszul->add_option("--restrict-dim", restrict_dim,
                         "restricted first-factor dimension (default: full)");
    add_seed(c_koszul);

    CLI::App* c_strassen = app.add_subcommand(
        "strassen", "commutator lower bound, optionally substitution-refined");
    c_strassen->add_option("tensor", tpath, "tensor file")->required();
    c_strassen->add_option("covectors", covectors,
                           "covectors as comma-separated rationals");
    c_strassen->add_option("--factor", factor, "factor to slice along (A, B, C)")
        ->check(CLI::IsMember({"A", "B", "C"}))
        ->capture_default_str();
    add_seed(c_strassen);

    CLI::App* c_rnd =
        app.add_subcommand("rnd", "rank-neutral directions maximality certificate");
    c_rnd->add_option("space", spath, "space file")->required();
    c_rnd->add_option("--samples", samples, "sampling budget")->capture_default_str();
    add_seed(c_rnd);

    CLI::App* c_border_check = app.add_subcommand(
        "border-check", "verify a border decomposition certificate");
    c_border_check->add_option("cert", cpath, "certificate file")->required();
    c_border_check->add_option("tensor", tpath, "tensor file")->required();

    CLI::App* c_bounds =
        app.add_subcommand("bounds", "combined lower and upper bound report");
    c_bounds->add_option("tensor", tpath, "tensor file")->required();
    c_bounds->add_option("certs", cert_paths, "certificate files");
    c_bounds->add_option("--factor", factor, "factor for the commutator bound")
        ->check(CLI::IsMember({"A", "B", "C"}))
        ->capture_default_str();
    c_bounds->add_option("--covector", covectors,
                         "substitution covector (repeatable)");
    c_bounds->add_option("--p", bounds_p, "Koszul exterior power, 0 to disable")
        ->capture_default_str();
    c_bounds->add_option("--restrict-dim", restrict_dim,
                         "Koszul restricted dimension (default: full)");
    add_seed(c_bounds);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            const CLI::App* h = &app;
            while (!h->get_subcommands().empty()) h = h->get_subcommands()[0];
            out << h->help();
            return 0;
        }
        err << "brk: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_catalog) return run_catalog(out, name, params);
        if (*c_rank) return run_rank(out, spath);
        if (*c_atkinson) return run_atkinson(out, spath, seed);
        if (*c_annihilator) return run_annihilator(out, spath, degree);
        if (*c_kernel) return run_kernel(out, err, spath);
        if (*c_blowup) return run_blowup(out, spath, family, order, seed);
        if (*c_kron) return run_kron(out, tpath, tpath2);
        if (*c_symmetry) return run_symmetry(out, tpath);
        if (*c_koszul) return run_koszul(out, tpath, p, restrict_dim, seed);
        if (*c_strassen) return run_strassen(out, tpath, factor, covectors, seed);
        if (*c_rnd) return run_rnd(out, spath, seed, samples);
        if (*c_border_check) return run_border_check(out, cpath, tpath);
        if (*c_bounds)
            return run_bounds(out, tpath, cert_paths, factor, covectors, bounds_p,
                              restrict_dim, seed);
    } catch (const std::exception& e) {
        err << "brk: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace brkit
