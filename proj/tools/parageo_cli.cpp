// parageo: paracomplex projective geometry and the geometry of finite
// probability distributions from the command line.

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "parageo/io.hpp"
#include "parageo/numerics.hpp"
#include "parageo/paracomplex.hpp"
#include "parageo/projective.hpp"
#include "parageo/pseudo_metric.hpp"
#include "parageo/stat_manifold.hpp"
#include "parageo/verify.hpp"

namespace {

using namespace parageo;

// argument-shape problems discovered after CLI11 parsing; exit code 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PcArgs {
    std::string op;
    std::string a;
    std::string b;
    std::string format = "text";
};

int run_pc(const PcArgs& args) {
    const Paracomplex a = parse_paracomplex(args.a);
    const bool needs_b = args.op == "add" || args.op == "sub" || args.op == "mul" ||
                         args.op == "div";
    if (needs_b && args.b.empty())
        throw UsageError("pc " + args.op + " needs two operands");
    Paracomplex out;
    if (args.op == "add")
        out = a + parse_paracomplex(args.b);
    else if (args.op == "sub")
        out = a - parse_paracomplex(args.b);
    else if (args.op == "mul")
        out = a * parse_paracomplex(args.b);
    else if (args.op == "div")
        out = a / parse_paracomplex(args.b);
    else if (args.op == "conj")
        out = conj(a);
    else if (args.op == "inv")
        out = inv(a);
    else  // show
        out = a;
    if (args.format == "json") {
        nlohmann::json j{{"x", out.x()}, {"y", out.y()},
                         {"plus", out.plus()}, {"minus", out.minus()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string_xy(out) << " = " << to_string_idempotent(out) << "\n";
    }
    return 0;
}

struct DistArgs {
    std::string metric = "bhattacharyya";
    std::string file_a;
    std::string file_b;
    double radius = 1.0;
    std::string format = "json";
};

int run_dist(const DistArgs& args) {
    const ProbDist a = load_prob(args.file_a);
    const ProbDist b = load_prob(args.file_b);
    double value = 0.0;
    if (args.metric == "bhattacharyya") {
        value = bhattacharyya_affinity(a, b);
    } else if (args.metric == "fisher_rao") {
        value = fisher_rao_distance(a, b);
    } else if (args.metric == "hermitian") {
        value = hermitian_distance(embed_projective(a), embed_projective(b), args.radius);
    } else if (args.metric == "cross_ratio") {
        value = cross_ratio_distance(embed_projective(a), embed_projective(b),
                                     Hyperquadric::identity(a.atoms()), args.radius);
    } else {
        throw ParseError("unknown metric '" + args.metric + "'");
    }
    if (args.format == "csv")
        std::cout << "metric,value\n" << args.metric << "," << format_double(value) << "\n";
    else
        std::cout << nlohmann::json{{"metric", args.metric}, {"value", value}}.dump()
                  << "\n";
    return 0;
}

struct GeodesicArgs {
    std::string q;
    double s_max = 1.0;
    int steps = 100;
    std::string file_p0;
    std::string output;
    std::string format = "csv";
};

int run_geodesic(const GeodesicArgs& args) {
    const ProbDist p0 = load_prob(args.file_p0);
    const Eigen::VectorXd q = parse_vector(args.q);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!args.output.empty()) {
        file.open(args.output);
        if (!file) throw ParseError("cannot open output '" + args.output + "'");
        out = &file;
    }
    if (args.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int k = 0; k <= args.steps; ++k) {
            const double s = k == 0 ? 0.0 : args.s_max * static_cast<double>(k) / args.steps;
            const ProbDist p = simplex_geodesic(p0, q, s);
            rows.push_back({{"s", s},
                            {"p", std::vector<double>(p.p().data(),
                                                      p.p().data() + p.p().size())}});
        }
        *out << rows.dump() << "\n";
    } else {
        write_geodesic_trace(*out, p0, q, args.s_max, args.steps);
    }
    return 0;
}

struct SignatureArgs {
    std::string gram_file;
    std::string bnl;
    double tol = 1e-10;
    std::string format = "text";
};

int run_signature(const SignatureArgs& args) {
    Eigen::MatrixXd gram;
    if (!args.bnl.empty()) {
        const Eigen::VectorXd nl = parse_vector(args.bnl);
        if (nl.size() != 2) throw ParseError("--bnl expects 'n,l'");
        const int n = static_cast<int>(nl[0]);
        const int l = static_cast<int>(nl[1]);
        if (n < 1 || l < 0 || l > n) throw ParseError("--bnl out of range");
        Eigen::VectorXd diag = Eigen::VectorXd::Ones(n);
        diag.head(l).setConstant(-1.0);
        gram = diag.asDiagonal();
    } else if (!args.gram_file.empty()) {
        gram = load_gram(args.gram_file);
    } else {
        throw ParseError("signature needs a gram JSON file or --bnl");
    }
    const Signature sig = signature_of_gram(gram, args.tol);
    if (args.format == "json")
        std::cout << nlohmann::json{{"neg", sig.neg}, {"zero", sig.zero}, {"pos", sig.pos}}
                         .dump()
                  << "\n";
    else
        std::cout << "(" << sig.neg << "," << sig.zero << "," << sig.pos << ")\n";
    return 0;
}

struct CausalArgs {
    std::string bnl = "";
    std::string x;
    double tol = -1.0;
    std::string format = "text";
};

int run_causal(const CausalArgs& args) {
    const Eigen::VectorXd x = parse_vector(args.x);
    int n = static_cast<int>(x.size());
    int l = 1;
    if (!args.bnl.empty()) {
        const Eigen::VectorXd nl = parse_vector(args.bnl);
        if (nl.size() != 2) throw ParseError("--bnl expects 'n,l'");
        n = static_cast<int>(nl[0]);
        l = static_cast<int>(nl[1]);
    }
    const CausalClass cls = causal_class(BilinearForm::canonical(n, l), x, args.tol);
    if (args.format == "json")
        std::cout << nlohmann::json{{"class", to_string(cls)}}.dump() << "\n";
    else
        std::cout << to_string(cls) << "\n";
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::vector<std::string> tol;
};

int run_verify(const VerifyArgs& args) {
    std::map<std::string, double> overrides;
    for (const std::string& spec : args.tol) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw UsageError("--tol expects name=value, got '" + spec + "'");
        try {
            overrides[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("--tol value in '" + spec + "' is not a number");
        }
    }
    std::vector<std::string> names;
    if (args.suite == "all")
        names = suite_names();
    else
        names.push_back(args.suite);

    // suites are independent; fan out and merge deterministically by the
    // requested order
    std::vector<std::future<SuiteReport>> futures;
    futures.reserve(names.size());
    for (const std::string& name : names)
        futures.push_back(std::async(std::launch::async, [&, name] {
            return run_suite(name, args.seed, overrides);
        }));
    std::vector<SuiteReport> reports;
    reports.reserve(names.size());
    for (auto& f : futures) reports.push_back(f.get());

    bool all_pass = true;
    for (const SuiteReport& r : reports) {
        all_pass = all_pass && r.all_pass();
        std::cerr << "suite " << r.suite << ": " << (r.all_pass() ? "PASS" : "FAIL")
                  << " (" << r.cases << " cases, " << format_double(r.wall_seconds)
                  << " s)\n";
    }
    if (reports.size() == 1) {
        std::cout << report_to_json(reports[0]).dump() << "\n";
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const SuiteReport& r : reports) arr.push_back(report_to_json(r));
        std::cout << arr.dump() << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"paracomplex projective geometry and the statistical manifold"};
    app.require_subcommand(1);

    PcArgs pc_args;
    CLI::App* pc = app.add_subcommand("pc", "paracomplex arithmetic");
    pc->add_option("op", pc_args.op, "add|sub|mul|div|conj|inv|show")
        ->required()
        ->check(CLI::IsMember({"add", "sub", "mul", "div", "conj", "inv", "show"}));
    pc->add_option("a", pc_args.a, "first operand, e.g. '2+1eps' or '(3|1)'")->required();
    pc->add_option("b", pc_args.b, "second operand for binary ops");
    pc->add_option("--format", pc_args.format)->check(CLI::IsMember({"text", "json"}));

    DistArgs dist_args;
    CLI::App* dist = app.add_subcommand("dist", "distance between two distributions");
    dist->add_option("--metric", dist_args.metric)
        ->check(CLI::IsMember({"bhattacharyya", "fisher_rao", "hermitian", "cross_ratio"}));
    dist->add_option("--radius", dist_args.radius, "curvature radius for projective metrics");
    dist->add_option("a", dist_args.file_a, "distribution JSON")->required();
    dist->add_option("b", dist_args.file_b, "distribution JSON")->required();
    dist->add_option("--format", dist_args.format)->check(CLI::IsMember({"json", "csv"}));

    GeodesicArgs geo_args;
    CLI::App* geo = app.add_subcommand("geodesic", "trace an exponential tilt geodesic");
    geo->add_option("--q", geo_args.q, "direction, comma separated")->required();
    geo->add_option("--s-max", geo_args.s_max, "final parameter value");
    geo->add_option("--steps", geo_args.steps, "number of steps")->check(CLI::PositiveNumber);
    geo->add_option("p0", geo_args.file_p0, "start distribution JSON")->required();
    geo->add_option("--output", geo_args.output, "write the trace to a file");
    geo->add_option("--format", geo_args.format)->check(CLI::IsMember({"csv", "json"}));

    SignatureArgs sig_args;
    CLI::App* sig = app.add_subcommand("signature", "signature of a symmetric Gram matrix");
    sig->add_option("gram", sig_args.gram_file, "Gram matrix JSON");
    sig->add_option("--bnl", sig_args.bnl, "canonical form 'n,l'");
    sig->add_option("--tol", sig_args.tol, "eigenvalue zero tolerance");
    sig->add_option("--format", sig_args.format)->check(CLI::IsMember({"text", "json"}));

    CausalArgs causal_args;
    CLI::App* causal = app.add_subcommand("causal", "causal class of a vector");
    causal->add_option("--bnl", causal_args.bnl, "form 'n,l' (default: dim(x),1)");
    causal->add_option("--x", causal_args.x, "vector, comma separated")->required();
    causal->add_option("--tol", causal_args.tol, "null tolerance (default scale-relative)");
    causal->add_option("--format", causal_args.format)
        ->check(CLI::IsMember({"text", "json"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", verify_args.suite, "suite name or 'all'");
    verify->add_option("--seed", verify_args.seed, "random seed (required)")->required();
    verify->add_option("--tol", verify_args.tol, "override: property=value")
        ->take_all();

    try {
        app.parse(argc, argv);
        if (pc->parsed()) return run_pc(pc_args);
        if (dist->parsed()) return run_dist(dist_args);
        if (geo->parsed()) return run_geodesic(geo_args);
        if (sig->parsed()) return run_signature(sig_args);
        if (causal->parsed()) return run_causal(causal_args);
        if (verify->parsed()) return run_verify(verify_args);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const parageo::Error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
