// phc: verification suites and file-based evaluation for the curvature library.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phc/complexify.hpp"
#include "phc/realize.hpp"
#include "phc/tvdecomp.hpp"

using json = nlohmann::ordered_json;
using namespace phc;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Check {
    std::string name;
    bool pass;
    std::string witness;  // offending sample / index tuple when failing
};

struct Report {
    std::string suite;
    json meta = json::object();
    std::vector<Check> checks;
    double seconds = 0;

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }
    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }

    json to_json() const {
        json j;
        j["suite"] = suite;
        j["version"] = kVersion;
        j["meta"] = meta;
        j["checks"] = json::array();
        for (const auto& c : checks) {
            json rec;
            rec["name"] = c.name;
            rec["status"] = c.pass ? "pass" : "fail";
            if (!c.pass && !c.witness.empty()) rec["witness"] = c.witness;
            j["checks"].push_back(rec);
        }
        j["status"] = passed() ? "pass" : "fail";
        j["timing_seconds"] = seconds;
        return j;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "suite " << suite << "\n";
        for (auto it = meta.begin(); it != meta.end(); ++it)
            out << "  " << it.key() << ": " << it.value().dump() << "\n";
        std::size_t ok = 0;
        for (const auto& c : checks) {
            out << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
            if (!c.pass && !c.witness.empty()) out << "  [" << c.witness << "]";
            out << "\n";
            if (c.pass) ++ok;
        }
        out << (passed() ? "PASS" : "FAIL") << " (" << ok << "/" << checks.size()
            << " checks, " << seconds << "s)\n";
        return out.str();
    }
};

void require_model_dim(std::size_t dim) {
    if (dim != 4 && dim != 6 && dim != 8)
        throw UnsupportedDimension("dimension must be 4, 6 or 8");
}

std::vector<Rational> origin(std::size_t dim) { return std::vector<Rational>(dim, Rational(0)); }

std::string point_to_string(const std::vector<Rational>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(p[i]);
    }
    return s + ")";
}

// Nonsingular rational point near the origin; resamples past singular draws.
std::vector<Rational> nonsingular_point(const PolyMetric& m, std::mt19937_64& rng) {
    for (int tries = 0; tries < 64; ++tries) {
        std::vector<Rational> p = random_point(m.dim, rng);
        try {
            jet_at(m, p);
            return p;
        } catch (const SingularAtPoint&) {
        }
    }
    throw SingularAtPoint("no nonsingular sample point found");
}

// Polynomial metric loader. Format:
// { "dim": 4, "components": [ {"i": 1, "j": 1,
//   "monomials": [ [[0,0,0,0], "-1"], [[2,0,0,0], "1/2"] ]}, ... ] }
// Indices are 1-based; entries with i <= j are mirrored to (j, i).
PolyMetric load_metric_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open metric file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("metric file: ") + e.what());
    }
    if (!j.contains("dim") || !j.contains("components"))
        throw ParseError("metric file: missing \"dim\" or \"components\"");
    const std::size_t dim = j["dim"].get<std::size_t>();
    require_model_dim(dim);
    PolyMetric m(dim);
    for (auto& p : m.components) p = Poly(dim);
    for (const auto& comp : j["components"]) {
        const std::size_t i = comp.at("i").get<std::size_t>();
        const std::size_t k = comp.at("j").get<std::size_t>();
        if (i < 1 || k < 1 || i > dim || k > dim)
            throw ParseError("metric file: component index out of range");
        Poly poly(dim);
        for (const auto& mono : comp.at("monomials")) {
            std::vector<unsigned> exp = mono.at(0).get<std::vector<unsigned>>();
            if (exp.size() != dim)
                throw ParseError("metric file: exponent vector length mismatch");
            poly.add_term(exp, parse_rational(mono.at(1).get<std::string>()));
        }
        m.at(i - 1, k - 1) = poly;
        if (i != k) m.at(k - 1, i - 1) = poly;
    }
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            m.background(a, b) = m.at(a, b).eval(origin(dim));
    return m;
}

Report run_verify_gray(std::size_t dim, std::uint64_t seed, std::size_t samples,
                       const std::string& metric_file) {
    require_model_dim(dim);
    const Structure s = standard_para_hermitian(dim / 2);
    Report rep;
    rep.suite = "verify-gray";
    rep.meta["dim"] = dim;
    rep.meta["kind"] = "para-hermitian";

    if (!metric_file.empty()) {
        // Single-metric mode: the Gray identity for a user-supplied metric.
        PolyMetric m = load_metric_json(metric_file);
        if (m.dim != dim) throw ParseError("metric file dimension does not match --dim");
        rep.meta["metric"] = metric_file;
        std::mt19937_64 rng(seed);
        Tensor4 r0 = riemann_at(m, origin(dim));
        rep.add("curvature-at-origin-is-algebraic", is_algebraic_curvature(r0));
        rep.add("gray-identity-at-origin", satisfies_gray(r0, s));
        bool pts_ok = true;
        std::string witness;
        for (std::size_t k = 0; k < 8 && pts_ok; ++k) {
            std::vector<Rational> p = nonsingular_point(m, rng);
            Tensor4 r = riemann_at(m, p);
            if (!is_algebraic_curvature(r) || !satisfies_gray(r, s)) {
                pts_ok = false;
                witness = "point " + point_to_string(p);
            }
        }
        rep.add("gray-identity-at-random-points", pts_ok, witness);
        return rep;
    }

    if (samples == 0) samples = dim == 4 ? 200 : dim == 6 ? 50 : 10;
    rep.meta["seed"] = seed;
    rep.meta["samples"] = samples;
    std::mt19937_64 rng(seed);

    bool real_ok = true, gray0_ok = true, graypt_ok = true, domega_ok = true;
    std::string w_real, w_gray0, w_graypt, w_domega;
    const std::size_t points_per_metric = 3;
    for (std::size_t k = 0; k < samples; ++k) {
        const std::string tag = "sample " + std::to_string(k);
        Tensor4 theta = random_realization_theta(s, rng);
        PolyMetric m = realization_metric(theta, s);
        Tensor4 r0 = riemann_at(m, origin(dim));
        if (real_ok && !(r0 - p_operator(theta)).is_zero_tensor()) {
            real_ok = false;
            w_real = tag;
        }
        if (gray0_ok && !satisfies_gray(r0, s)) {
            gray0_ok = false;
            w_gray0 = tag;
        }
        if (domega_ok && !d_kaehler_at(m, s, origin(dim)).is_zero_tensor()) {
            domega_ok = false;
            w_domega = tag;
        }
        for (std::size_t p = 0; p < points_per_metric && graypt_ok; ++p) {
            std::vector<Rational> pt = nonsingular_point(m, rng);
            Tensor4 r = riemann_at(m, pt);
            if (!is_algebraic_curvature(r) || !satisfies_gray(r, s)) {
                graypt_ok = false;
                w_graypt = tag + ", point " + point_to_string(pt);
            }
        }
    }
    rep.add("realization-curvature-equals-operator-image", real_ok, w_real);
    rep.add("gray-identity-at-origin", gray0_ok, w_gray0);
    rep.add("gray-identity-at-random-points", graypt_ok, w_graypt);
    rep.add("kaehler-form-derivative-vanishes-at-origin", domega_ok, w_domega);

    // Higher-degree polynomial metrics: the Gray identity away from the
    // quadratic realization family.
    bool poly_ok = true;
    std::string w_poly;
    for (unsigned degree : {3u, 4u}) {
        for (std::size_t k = 0; k < 5 && poly_ok; ++k) {
            PolyMetric m = random_para_metric(s, degree, rng);
            for (std::size_t p = 0; p < points_per_metric && poly_ok; ++p) {
                std::vector<Rational> pt = nonsingular_point(m, rng);
                Tensor4 r = riemann_at(m, pt);
                if (!is_algebraic_curvature(r) || !satisfies_gray(r, s)) {
                    poly_ok = false;
                    w_poly = "degree " + std::to_string(degree) + ", sample " +
                             std::to_string(k) + ", point " + point_to_string(pt);
                }
            }
        }
    }
    rep.add("gray-identity-for-degree-3-4-metrics", poly_ok, w_poly);
    return rep;
}

Report run_verify_main(std::size_t dim) {
    require_model_dim(dim);
    const Structure s = standard_para_hermitian(dim / 2);
    const CurvatureSpace& space = CurvatureSpace::get(s);
    Report rep;
    rep.suite = "verify-main";
    rep.meta["dim"] = dim;
    rep.meta["kind"] = "para-hermitian";

    Subspace p = p_image_subspace_coords(s, -1);
    Subspace g = gray_kernel_subspace_coords(s);
    Subspace w7 = w7_subspace_coords(s);
    rep.meta["dim_curvature_space"] = space.dim();
    rep.meta["dim_realizable"] = p.dim();
    rep.meta["dim_gray_kernel"] = g.dim();
    rep.meta["dim_w7"] = w7.dim();

    rep.add("realizable-equals-gray-kernel", subspace_equal(p, g));
    rep.add("gray-kernel-is-w7-orthocomplement",
            subspace_equal(g, orthogonal_complement(w7, space.gram())));
    rep.add("gray-kernel-meets-w7-trivially", intersect(g, w7).dim() == 0);
    rep.add("dimensions-sum-to-curvature-space", p.dim() + w7.dim() == space.dim());
    return rep;
}

Report run_catalog(const std::string& label) {
    Report rep;
    rep.suite = "catalog";
    std::vector<const ExampleCatalogEntry*> entries;
    if (label.empty()) {
        for (const auto& e : catalog()) entries.push_back(&e);
    } else {
        entries.push_back(&catalog_entry(label));  // throws LabelAbsent
    }
    json labels = json::array();
    for (const auto* e : entries) labels.push_back(e->label);
    rep.meta["entries"] = labels;
    for (const auto* e : entries)
        for (const auto& [name, ok] : evaluate_catalog_entry(*e))
            rep.add(e->label + ": " + name, ok);
    return rep;
}

Report run_decompose(const std::string& path, std::size_t dim, StructureKind kind) {
    require_model_dim(dim);
    const Structure s = kind == StructureKind::ParaHermitian
                            ? standard_para_hermitian(dim / 2)
                            : standard_hermitian(0, dim / 2);
    Tensor4 t = read_tensor4_file(path, dim);  // throws ParseError
    if (!is_algebraic_curvature(t))
        throw NotCurvatureTensor("input tensor violates the curvature symmetries");

    Report rep;
    rep.suite = "decompose";
    rep.meta["dim"] = dim;
    rep.meta["kind"] = s.is_para() ? "para-hermitian" : "hermitian";
    rep.meta["input"] = path;

    RicciData rd = ricci(t, s);
    rep.meta["tau"] = rat_to_string(rd.tau);
    rep.meta["tau_star"] = rat_to_string(rd.tau_star);
    json rho = json::array(), rho_star = json::array();
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            if (!is_zero(rd.rho.at(a, b)))
                rho.push_back({a + 1, b + 1, rat_to_string(rd.rho.at(a, b))});
            if (!is_zero(rd.rho_star.at(a, b)))
                rho_star.push_back({a + 1, b + 1, rat_to_string(rd.rho_star.at(a, b))});
        }
    rep.meta["rho"] = rho;
    rep.meta["rho_star"] = rho_star;

    ModuleTable table = module_table(s);
    Tensor4 reassembled(dim);
    json modules = json::array();
    for (const auto& [name, module] : table.modules) {
        Tensor4 comp = component_in(t, name, table);
        reassembled = reassembled + comp;
        json entries = json::array();
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b)
                for (std::size_t c = 0; c < dim; ++c)
                    for (std::size_t e = 0; e < dim; ++e)
                        if (!is_zero(comp.at(a, b, c, e)))
                            entries.push_back({a + 1, b + 1, c + 1, e + 1,
                                               rat_to_string(comp.at(a, b, c, e))});
        json rec;
        rec["module"] = name;
        rec["module_dim"] = module.dim();
        rec["nonzero"] = !comp.is_zero_tensor();
        rec["norm"] = rat_to_string(tensor_inner_product(comp, comp, s));
        rec["entries"] = entries;
        modules.push_back(rec);
        rep.add("component in " + name + (comp.is_zero_tensor() ? " (zero)" : " (nonzero)"),
                true);
    }
    rep.meta["components"] = modules;
    rep.add("components-reassemble-input", (reassembled - t).is_zero_tensor());
    return rep;
}

Report run_transfer(std::size_t dim, std::uint64_t seed, std::size_t samples) {
    if (dim % 2 != 0 || dim == 0 || dim > 8)
        throw UnsupportedDimension("dimension must be 2, 4, 6 or 8");
    const std::size_t n = dim / 2;
    const Structure source = standard_hermitian(0, n);
    Report rep;
    rep.suite = "transfer";
    rep.meta["dim"] = dim;
    rep.meta["source"] = "hermitian (definite)";
    rep.meta["target"] = "para-hermitian";
    rep.meta["seed"] = seed;
    if (samples == 0) samples = 20;
    rep.meta["samples"] = samples;

    TransferMap map = transfer_structure(source);
    rep.add("structure-transfer-consistent", validate(map.target).empty());
    rep.add("curvature-transfer-bijective", transfer_curvature_bijective(map));

    // 2-tensor eigenspace swap: S^2_eps and Lambda^2_eps land in the opposite
    // target eigenspace, real and imaginary parts separately.
    const SignedPerm jt = map.target.j_perm();
    bool swap_ok = true;
    std::string w_swap;
    auto eigen_check = [&](const Tensor2& part, int eps, const std::string& tag) {
        if (part.is_zero_tensor()) return;
        if (!(j_pullback2(part, jt) + part * Rational(eps)).is_zero_tensor()) {
            swap_ok = false;
            if (w_swap.empty()) w_swap = tag;
        }
    };
    for (int eps : {+1, -1}) {
        for (const Tensor2& b : sym2_eigen_basis(source, eps)) {
            GaussTensor2 image = transfer_two_tensor(b, map);
            eigen_check(real_part(image), eps, "sym eps=" + std::to_string(eps));
            eigen_check(imag_part(image), eps, "sym eps=" + std::to_string(eps));
        }
        for (const Tensor2& b : alt2_eigen_basis(source, eps)) {
            GaussTensor2 image = transfer_two_tensor(b, map);
            eigen_check(real_part(image), eps, "alt eps=" + std::to_string(eps));
            eigen_check(imag_part(image), eps, "alt eps=" + std::to_string(eps));
        }
    }
    rep.add("two-tensor-eigenspace-swap", swap_ok, w_swap);

    // Gray correspondence: the Hermitian Gray kernel transfers onto the para
    // Gray kernel (both parts land inside it, jointly spanning it).
    const CurvatureSpace& src_space = CurvatureSpace::get(source);
    const CurvatureSpace& dst_space = CurvatureSpace::get(map.target);
    Subspace gh = gray_kernel_subspace_coords(source);
    Subspace gp = gray_kernel_subspace_coords(map.target);
    rep.meta["dim_gray_kernel_hermitian"] = gh.dim();
    rep.meta["dim_gray_kernel_para"] = gp.dim();

    bool parts_in = true;
    std::string w_parts;
    Matrix stacked(2 * gh.dim(), dst_space.dim());
    for (std::size_t k = 0; k < gh.dim(); ++k) {
        GaussTensor4 image =
            transfer_curvature(src_space.from_coords(gh.basis_row(k)), map);
        for (const Tensor4& part : {real_part(image), imag_part(image)}) {
            if (part.is_zero_tensor()) continue;
            std::vector<Rational> c = dst_space.coords(part);
            if (!gp.contains(c) || !satisfies_gray(part, map.target)) {
                parts_in = false;
                if (w_parts.empty()) w_parts = "basis vector " + std::to_string(k);
            }
        }
        std::vector<Rational> cre = dst_space.coords(real_part(image));
        std::vector<Rational> cim = dst_space.coords(imag_part(image));
        for (std::size_t j = 0; j < dst_space.dim(); ++j) {
            stacked(2 * k, j) = cre[j];
            stacked(2 * k + 1, j) = cim[j];
        }
    }
    rep.add("gray-kernel-transfers-into-para-gray-kernel", parts_in, w_parts);
    rep.add("gray-kernel-transfer-spans", Subspace::span(stacked).dim() == gp.dim());

    // Random elements of the Hermitian Gray kernel, same correspondence.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    bool random_ok = true;
    std::string w_random;
    for (std::size_t k = 0; k < samples && gh.dim() > 0; ++k) {
        std::vector<Rational> c(src_space.dim(), Rational(0));
        for (std::size_t i = 0; i < gh.dim(); ++i) {
            int v = coeff(rng);
            if (v == 0) continue;
            std::vector<Rational> row = gh.basis_row(i);
            for (std::size_t j = 0; j < c.size(); ++j) c[j] += Rational(v) * row[j];
        }
        GaussTensor4 image = transfer_curvature(src_space.from_coords(c), map);
        if (!satisfies_gray(real_part(image), map.target) ||
            !satisfies_gray(imag_part(image), map.target)) {
            random_ok = false;
            w_random = "sample " + std::to_string(k);
            break;
        }
    }
    rep.add("gray-correspondence-on-random-elements", random_ok, w_random);
    return rep;
}

Report run_module_table(std::size_t dim, StructureKind kind) {
    require_model_dim(dim);
    const Structure s = kind == StructureKind::ParaHermitian
                            ? standard_para_hermitian(dim / 2)
                            : standard_hermitian(0, dim / 2);
    Report rep;
    rep.suite = "module-table";
    rep.meta["dim"] = dim;
    rep.meta["kind"] = s.is_para() ? "para-hermitian" : "hermitian";

    ModuleTable table = module_table(s);  // construction self-validates
    const CurvatureSpace& space = CurvatureSpace::get(s);
    json modules = json::object();
    std::size_t total = 0;
    for (const auto& [name, module] : table.modules) {
        modules[name] = module.dim();
        total += module.dim();
    }
    rep.meta["modules"] = modules;
    rep.meta["module_count"] = table.module_count;
    rep.meta["dim_curvature_space"] = space.dim();
    rep.add("table-construction-validates", true);
    rep.add("dimensions-sum-to-curvature-space", total == space.dim());
    return rep;
}

int emit(Report rep, double seconds, const std::string& format, const std::string& out) {
    rep.seconds = seconds;
    if (format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw ParseError("cannot open output file: " + out);
        f << rep.to_json().dump(2) << "\n";
    }
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of para-Hermitian curvature identities"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::size_t dim = 4;
    std::uint64_t seed = 20260823;
    std::size_t samples = 0;
    std::string out, format = "text", label, tensor_file, metric_file, kind_name = "para";

    auto add_common = [&](CLI::App* cmd, bool with_dim = true) {
        if (with_dim) cmd->add_option("--dim", dim, "real dimension 2n");
        cmd->add_option("--out", out, "write the JSON report to this path");
        cmd->add_option("--format", format, "stdout format")
            ->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App* vgray = app.add_subcommand("verify-gray",
                                         "Gray identity suites for realized and random "
                                         "polynomial metrics");
    add_common(vgray);
    vgray->add_option("--seed", seed, "random seed");
    vgray->add_option("--samples", samples, "sample count (0 = per-dimension default)");
    vgray->add_option("--metric", metric_file, "check a single metric file instead");

    CLI::App* vmain = app.add_subcommand(
        "verify-main", "realizable subspace = Gray kernel = W7 orthocomplement");
    add_common(vmain);

    CLI::App* cat = app.add_subcommand("catalog", "evaluate worked examples");
    cat->add_option("label", label, "catalog label (default: all entries)");
    add_common(cat, false);

    CLI::App* dec = app.add_subcommand("decompose", "decompose a curvature tensor file");
    dec->add_option("file", tensor_file, "tensor file, lines \"a b c d p/q\"")->required();
    add_common(dec);
    dec->add_option("--kind", kind_name, "structure kind")
        ->check(CLI::IsMember({"para", "hermitian"}));

    CLI::App* tra = app.add_subcommand("transfer",
                                       "Hermitian-to-para complexification round-trip");
    add_common(tra);
    tra->add_option("--seed", seed, "random seed");
    tra->add_option("--samples", samples, "random Gray-kernel samples (0 = default)");

    CLI::App* mod = app.add_subcommand("module-table", "curvature module decomposition");
    add_common(mod);
    mod->add_option("--kind", kind_name, "structure kind")
        ->check(CLI::IsMember({"para", "hermitian"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const StructureKind kind = kind_name == "hermitian" ? StructureKind::Hermitian
                                                            : StructureKind::ParaHermitian;
        const auto start = std::chrono::steady_clock::now();
        Report rep;
        if (*vgray)
            rep = run_verify_gray(dim, seed, samples, metric_file);
        else if (*vmain)
            rep = run_verify_main(dim);
        else if (*cat)
            rep = run_catalog(label);
        else if (*dec)
            rep = run_decompose(tensor_file, dim, kind);
        else if (*tra)
            rep = run_transfer(dim, seed, samples);
        else
            rep = run_module_table(dim, kind);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return emit(std::move(rep), seconds, format, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
