#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "slrep/grading.hpp"
#include "slrep/serialize.hpp"

// slrep: exact workbench for semilinear symmetric-group module calculus.
// Exit codes: 0 success, 1 domain error, 2 resource cap, 64 usage.

namespace {

using namespace slrep;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SLREP_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

int run_trivialize(const std::string& path, std::uint64_t seed) {
    json j = load_json(path);
    CocycleModule m = cocycle_module_from_json(j);
    TrivializationWitness w = speiser_trivialize(m, seed);
    std::cout << to_json(w, m.level()).dump(2) << "\n";
    return 0;
}

int run_classify(const std::string& path, std::uint64_t seed) {
    json j = load_json(path);
    CocycleModule m = cocycle_module_from_json(j);
    DifferenceModule dm{m};
    Classification c = classify_module(dm, seed);
    std::cout << classification_to_json(c).dump(2) << "\n";
    return 0;
}

int run_decompose_product(int a, int b) {
    PermModuleExpr e = product_decompose(a, b);
    std::cout << to_json(e).dump(2) << "\n";
    // One row per s, plus the dimension identity at the smallest level.
    for (const auto& [s, mult] : e.kappa)
        std::cout << "s = " << s << "  multiplicity " << mult.get_str() << "\n";
    int n = std::max(a + b, 1);
    std::cout << "dimension identity at level " << n << ": "
              << (product_dimension_identity(a, b, n) ? "ok" : "FAILED") << "\n";
    return 0;
}

int run_decompose_tensor_power(int N, int n) {
    auto a = binomial_basis_coeffs(N);
    std::cout << "a-coefficients: [";
    for (size_t i = 0; i < a.size(); ++i) std::cout << (i ? ", " : "") << a[i].get_str();
    std::cout << "]\n";
    if (N >= 1 && n >= 0) {
        int level = std::max(n, N + 1);
        AlphaMapResult alpha = alpha_map_matrix(N, level);
        std::cout << "alpha map at level " << level << ": rank " << alpha.rank << " of "
                  << alpha.matrix.rows() << (alpha.bijective ? " (bijective)" : " (NOT bijective)")
                  << "\n";
    }
    return 0;
}

int run_grade(const std::string& expr, int degree, int level) {
    RatFunc f = level > 0 ? parse_ratfunc(expr, level) : parse_ratfunc(expr);
    GradedSlice slice = project_degree(f, degree);
    std::cout << slice.value.str() << "\n";
    return 0;
}

int run_split_squares(const std::string& expr, int level) {
    RatFunc f = level > 0 ? parse_ratfunc(expr, level) : parse_ratfunc(expr);
    auto parts = square_subfield_decompose(f);
    json out = json::object();
    for (const auto& [support, coeff] : parts) {
        std::string key = "[";
        for (size_t i = 0; i < support.size(); ++i)
            key += (i ? "," : "") + std::to_string(support[i]);
        key += "]";
        out[key] = coeff.str();
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_growth(long q, long v, int n, int N) {
    GrowthParams params{q, v};
    std::cout << embedding_count(params, n, N).get_str() << "\n";
    return 0;
}

int run_subgroup_canon(const std::string& path, int level) {
    json j = load_json(path);
    OpenSubgroupSpec spec = subgroup_spec_from_json(j, level);
    CanonicalOpenSubgroup canon = canonicalize_open_subgroup(spec, level);
    std::cout << to_json(canon).dump(2) << "\n";
    return 0;
}

int run_check_all(int level, std::uint64_t seed);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"slrep: exact semilinear symmetric-group module workbench"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();

    auto* trivialize = app.add_subcommand("trivialize", "trivialize a cocycle module");
    std::string trivialize_path;
    trivialize->add_option("module", trivialize_path, "module JSON file")->required();
    trivialize->add_option("--seed", seed, "probe seed");

    auto* classify = app.add_subcommand("classify", "classify a difference module");
    std::string classify_path;
    classify->add_option("module", classify_path, "module JSON file")->required();
    classify->add_option("--seed", seed, "solver seed");

    auto* decompose = app.add_subcommand("decompose", "module decompositions");
    auto* product = decompose->add_subcommand("product", "product of two basic objects");
    int prod_a = 0, prod_b = 0;
    product->add_option("a", prod_a)->required();
    product->add_option("b", prod_b)->required();
    auto* tensor = decompose->add_subcommand("tensor-power", "tensor power of the point object");
    int tp_N = 0, tp_level = 0;
    tensor->add_option("N", tp_N)->required();
    tensor->add_option("--level", tp_level, "realization level");

    auto* grade = app.add_subcommand("grade", "homogeneous degree projection");
    std::string grade_expr;
    int grade_degree = 0, grade_level = 0;
    grade->add_option("expr", grade_expr, "rational function")->required();
    grade->add_option("--degree", grade_degree, "target degree")->required();
    grade->add_option("--level", grade_level, "variable count (inferred when omitted)");

    auto* split = app.add_subcommand("split-squares", "squares-subfield decomposition");
    std::string split_expr;
    int split_level = 0;
    split->add_option("expr", split_expr, "rational function")->required();
    split->add_option("--level", split_level, "variable count (inferred when omitted)");

    auto* growth = app.add_subcommand("growth", "embedding counts");
    long g_q = 1, g_v = 0;
    int g_n = 0, g_N = 0;
    growth->add_option("--q", g_q, "1 or a prime power");
    growth->add_option("--v", g_v, "fixed-subspace dimension (q > 1 only)");
    growth->add_option("--n", g_n)->required();
    growth->add_option("--N", g_N)->required();

    auto* subgroup = app.add_subcommand("subgroup", "open subgroup operations");
    auto* canon = subgroup->add_subcommand("canon", "canonical (T, H) form");
    std::string canon_path;
    int canon_level = 0;
    canon->add_option("spec", canon_path, "subgroup spec JSON file")->required();
    canon->add_option("--level", canon_level, "ambient level")->required();

    auto* check = app.add_subcommand("check", "run invariant suites");
    auto* check_all = check->add_subcommand("all", "run the full invariant suite");
    int check_level = 4;
    check_all->add_option("--level", check_level, "level for field/action suites");
    check_all->add_option("--seed", seed, "suite seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 64;
    }

    try {
        if (*trivialize) return run_trivialize(trivialize_path, seed);
        if (*classify) return run_classify(classify_path, seed);
        if (*product) return run_decompose_product(prod_a, prod_b);
        if (*tensor) return run_decompose_tensor_power(tp_N, tp_level);
        if (*grade) return run_grade(grade_expr, grade_degree, grade_level);
        if (*split) return run_split_squares(split_expr, split_level);
        if (*growth) return run_growth(g_q, g_v, g_n, g_N);
        if (*canon) return run_subgroup_canon(canon_path, canon_level);
        if (*check_all) return run_check_all(check_level, seed);
        std::cerr << "unknown command\n";
        return 64;
    } catch (const slrep::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const slrep::inconsistency_error& e) {
        std::cerr << "inconsistency error (this is a bug): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

struct SuiteReport {
    int passed = 0;
    int failed = 0;
    void item(const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        (ok ? passed : failed) += 1;
    }
};

int run_check_all(int level, std::uint64_t seed) {
    SuiteReport report;
    const int n = std::max(2, std::min(level, 5));
    SeededSource src(seed);

    auto random_poly = [&](int vars) {
        MultiPoly p = MultiPoly::constant(make_rational(src.next_int(-9, 9)), vars);
        for (int v = 1; v <= vars; ++v) {
            long c = src.next_int(-9, 9);
            if (c != 0) p = p + MultiPoly::variable(v, vars) * make_rational(c);
        }
        return p;
    };
    auto random_ratfunc = [&](int vars) {
        MultiPoly den(vars);
        while (den.is_zero()) den = random_poly(vars);
        return RatFunc(random_poly(vars), den);
    };

    {
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            RatFunc f = random_ratfunc(n), g = random_ratfunc(n), h = random_ratfunc(n);
            ok = ((f + g) * h == f * h + g * h);
            if (!f.is_zero()) ok = ok && (f / f).is_one();
        }
        report.item("field axioms (distributivity, f/f = 1)", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            RatFunc f = random_ratfunc(n), g = random_ratfunc(n);
            std::vector<int> im1(n), im2(n);
            for (int i = 0; i < n; ++i) im1[i] = im2[i] = i + 1;
            for (int i = 0; i < n; ++i) std::swap(im1[i], im1[src.next_int(0, n - 1)]);
            for (int i = 0; i < n; ++i) std::swap(im2[i], im2[src.next_int(0, n - 1)]);
            Permutation p{im1}, q{im2};
            ok = apply_permutation(p, f * g) == apply_permutation(p, f) * apply_permutation(p, g) &&
                 apply_permutation(p * q, f) == apply_permutation(p, apply_permutation(q, f));
        }
        report.item("permutation action is multiplicative and composes", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            RatFunc f = random_ratfunc(n);
            if (f.is_zero()) continue;
            int v = degree_valuation(f);
            RatFunc resum(n);
            for (int d = 3; d >= -v - 3; --d) resum = resum + project_degree(f, d).value;
            RatFunc diff = f - resum;
            ok = diff.is_zero() || degree_valuation(diff) > v + 3;
        }
        report.item("graded projection reconstructs to depth", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            RatFunc f = random_ratfunc(std::min(n, 3));
            if (f.is_zero()) continue;
            auto parts = square_subfield_decompose(f);
            RatFunc resum(f.nvars());
            for (const auto& [support, c] : parts) {
                ok = ok && has_even_parity(c);
                RatFunc mono = RatFunc::constant(Rational(1), f.nvars());
                for (int t : support) mono = mono * RatFunc::variable(t, f.nvars());
                resum = resum + mono * c;
            }
            ok = ok && resum == f;
        }
        report.item("squares decomposition resums with even parity", ok);
    }
    {
        bool ok = true;
        for (int a = 0; a <= 3 && ok; ++a)
            for (int b = 0; b <= 3 && ok; ++b)
                for (int lev = a + b; lev <= 8 && ok; ++lev)
                    ok = product_dimension_identity(a, b, lev);
        report.item("product decomposition dimension identity", ok);
    }
    {
        bool ok = true;
        for (int N = 0; N <= 2 && ok; ++N) ok = alpha_map_matrix(N, N + 2).bijective;
        report.item("alpha map exact full rank (small levels)", ok);
    }
    {
        bool ok = omega_iso_check(2, std::max(3, n));
        report.item("differential-forms equivariance (N = 2)", ok);
    }
    {
        bool ok = true;
        for (int trial = 0; trial < 5 && ok; ++trial) {
            // Unit triangular with one variable diagonal entry: invertible,
            // monomial determinant.
            RfMatrix phi = RfMatrix::identity(2, 3);
            phi.at(0, 1) = RatFunc::from_poly(random_poly(3));
            phi.at(1, 1) = RatFunc::variable(1 + trial % 3, 3);
            CocycleModule mod = coboundary_from(phi, 3);
            TrivializationWitness w = speiser_trivialize(mod, seed + trial);
            ok = witness_is_valid(mod, w);
        }
        report.item("cocycle round trip (coboundary -> witness)", ok);
    }
    {
        DifferenceModule m = standard_sum({2, 1}, 3);
        Classification c = classify_module(m, seed);
        report.item("unipotent classification of a standard sum",
                    c.jordan == std::vector<int>{2, 1});
    }

    std::cout << report.passed << " passed, " << report.failed << " failed\n";
    return report.failed == 0 ? 0 : 1;
}

} // namespace
