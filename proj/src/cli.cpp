#include "bsf/cli.hpp"

#include "bsf/bare.hpp"
#include "bsf/bijections.hpp"
#include "bsf/covariance.hpp"
#include "bsf/errors.hpp"
#include "bsf/triangular.hpp"
#include "bsf/trees.hpp"
#include "bsf/wigner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bsf {

namespace {

using nlohmann::json;

constexpr const char* kVersion = BSF_VERSION;

struct CommonOptions {
    std::string format = "text";
    std::string output;
    unsigned cap = default_max_tree_size();
};

struct EnumerateOptions {
    std::string kind = "plane";
    unsigned n = 0;
    std::string psi = "geometric";
};

struct VerifyOptions {
    std::string suite;
    unsigned max_n = 8;
    unsigned order = 10;
    std::string l_poly;
    std::string psi;
    int inverse_power = -1;
    std::string cov;
    std::string beta2 = "2";
    std::string law;
    unsigned perturb_k = 0;
    std::string perturb_delta = "1";
};

struct SeriesOptions {
    std::string weights = "one";
    std::string psi = "geometric";
    unsigned order = 8;
};

struct WignerOptions {
    unsigned k = 2;
    unsigned dimension = 200;
    unsigned trials = 400;
    std::string cov = "inverse-linear";
    std::string beta2 = "2";
    std::string law = "delta1";
    std::uint64_t seed = 7;
    double slack = kDefaultSlack;
    std::vector<unsigned> sweep_k;
    std::vector<unsigned> sweep_n;
    unsigned workers = 0;
};

struct TriangularOptions {
    unsigned max_n = 7;
    unsigned order = 10;
};

struct DyckOptions {
    std::string tree;
    std::string path;
    unsigned k = 0;
};

/// Carries a report to the chosen sink and remembers the exit code.
class Emitter {
public:
    Emitter(const CommonOptions& common, std::ostream& out) : common_(common), out_(out) {}

    std::ostream& stream() {
        if (common_.output.empty()) return out_;
        if (!file_) {
            file_ = std::make_unique<std::ofstream>(common_.output, std::ios::binary);
            if (!*file_) throw ValidationError("cannot open output file '" + common_.output + "'");
        }
        return *file_;
    }

private:
    const CommonOptions& common_;
    std::ostream& out_;
    std::unique_ptr<std::ofstream> file_;
};

json envelope(const std::string& command, const json& config) {
    return {{"version", kVersion}, {"command", command}, {"config", config}, {"config_hash", fnv1a_hex(config.dump())}};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const CommonOptions& common, const EnumerateOptions& opt, Emitter& emit) {
    const SeriesSpec psi = SeriesSpec::parse(opt.psi);
    json config = {{"kind", opt.kind}, {"n", opt.n}, {"psi", psi.describe()}, {"cap", common.cap}};

    struct Row {
        std::string encoding;
        Integer factorial, sigma, alpha, kappa;
        Rational delta;
    };
    std::vector<Row> rows;
    auto add = [&](const std::string& encoding, const RootedTreeShape& shape, const Rational& delta) {
        rows.push_back({encoding, tree_factorial(shape), symmetry_factor(shape), alpha_count(shape),
                        kappa_count(shape), delta});
    };
    if (opt.kind == "plane") {
        for (auto& t : enumerate_plane_trees(opt.n, common.cap))
            add(t.encoding(), shape_of(t), elementary_differential(t, psi));
    } else if (opt.kind == "shapes") {
        for (auto& s : enumerate_rooted_shapes(opt.n, common.cap))
            add(s.encoding(), s, elementary_differential(s, psi));
    } else {
        throw ValidationError("--kind must be plane or shapes");
    }

    auto& out = emit.stream();
    if (common.format == "json") {
        json j = envelope("enumerate", config);
        json arr = json::array();
        for (auto& r : rows)
            arr.push_back({{"encoding", r.encoding},
                           {"tree_factorial", r.factorial.str()},
                           {"sigma", r.sigma.str()},
                           {"alpha", r.alpha.str()},
                           {"kappa", r.kappa.str()},
                           {"delta", to_json(r.delta)}});
        j["count"] = rows.size();
        j["trees"] = arr;
        out << j.dump(2) << "\n";
    } else if (common.format == "csv") {
        out << "encoding,tree_factorial,sigma,alpha,kappa,delta\n";
        for (auto& r : rows)
            out << r.encoding << "," << r.factorial << "," << r.sigma << "," << r.alpha << "," << r.kappa << ","
                << to_string(r.delta) << "\n";
    } else {
        out << "# bsf " << kVersion << " enumerate kind=" << opt.kind << " n=" << opt.n << " psi=" << psi.describe()
            << " (" << rows.size() << " trees)\n";
        out << std::left << std::setw(2 * static_cast<int>(opt.n) + 2) << "encoding" << " t!      sigma   alpha   kappa   delta\n";
        for (auto& r : rows)
            out << std::left << std::setw(2 * static_cast<int>(opt.n) + 2) << r.encoding << " " << std::setw(7)
                << r.factorial.str() << " " << std::setw(7) << r.sigma.str() << " " << std::setw(7) << r.alpha.str()
                << " " << std::setw(7) << r.kappa.str() << " " << to_string(r.delta) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- verify

std::vector<VerificationReport> run_suite(const CommonOptions& common, const VerifyOptions& opt) {
    std::vector<VerificationReport> reports;
    const unsigned cap = common.cap;
    const std::string& suite = opt.suite;

    if (suite == "identities") {
        reports.push_back(verify_identities(opt.max_n, cap));
    } else if (suite == "master-ode") {
        std::vector<Polynomial> ls;
        if (!opt.l_poly.empty())
            ls.push_back(parse_polynomial(opt.l_poly));
        else
            ls = {Polynomial{0, 1}, Polynomial{1}, Polynomial{0, 0, 1}};
        std::vector<SeriesSpec> psis;
        if (!opt.psi.empty())
            psis.push_back(SeriesSpec::parse(opt.psi));
        else
            psis = {SeriesSpec::geometric(), SeriesSpec::exponential(), SeriesSpec::polynomial({1, 1, 1})};
        for (auto& l : ls) {
            for (auto& psi : psis) {
                std::optional<BareWeights> weights;
                if (opt.perturb_k > 0)
                    weights = BareWeights::master(l, opt.order).perturbed(opt.perturb_k, parse_rational(opt.perturb_delta));
                reports.push_back(verify_master_ode(l, psi, opt.order, weights, cap));
            }
        }
    } else if (suite == "inversion") {
        std::vector<unsigned> powers = opt.inverse_power >= 0 ? std::vector<unsigned>{unsigned(opt.inverse_power)}
                                                              : std::vector<unsigned>{0, 1, 2};
        std::vector<SeriesSpec> psis;
        if (!opt.psi.empty())
            psis.push_back(SeriesSpec::parse(opt.psi));
        else
            psis = {SeriesSpec::geometric(), SeriesSpec::exponential()};
        for (unsigned l : powers)
            for (auto& psi : psis) reports.push_back(verify_inverse_factorial_ode(l, psi, opt.order, cap));
    } else if (suite == "special-bare") {
        const auto cov = CovarianceSpec::parse(opt.cov.empty() ? "inverse-linear" : opt.cov, parse_rational(opt.beta2));
        reports.push_back(verify_special_bare(opt.max_n, cov, cap));
    } else if (suite == "fond-lemma") {
        std::vector<std::pair<CovarianceSpec, DiagonalLaw>> cases;
        if (!opt.cov.empty() || !opt.law.empty()) {
            cases.emplace_back(CovarianceSpec::parse(opt.cov.empty() ? "constant" : opt.cov, parse_rational(opt.beta2)),
                               DiagonalLaw::parse(opt.law.empty() ? "delta1" : opt.law));
        } else {
            cases.emplace_back(CovarianceSpec::constant_one(1), DiagonalLaw::point_mass_one());
            cases.emplace_back(CovarianceSpec::inverse_linear(2), DiagonalLaw::point_mass_one());
            cases.emplace_back(CovarianceSpec::constant_one(1),
                               DiagonalLaw::discrete({{Rational(1, 2), Rational(1, 2)}, {Rational(3, 2), Rational(1, 2)}}));
        }
        for (auto& [cov, law] : cases) reports.push_back(verify_fond_lemma(cov, law, opt.order, cap));
    } else if (suite == "dk8") {
        reports.push_back(verify_dk8_closed_form(opt.max_n, cap));
        reports.push_back(verify_dk8_inversion(opt.order, cap));
    } else {
        throw ValidationError("unknown suite '" + suite + "'");
    }
    return reports;
}

int cmd_verify(const CommonOptions& common, const VerifyOptions& opt, Emitter& emit, std::ostream& err) {
    json config = {{"suite", opt.suite}, {"max_n", opt.max_n}, {"order", opt.order}, {"cap", common.cap}};
    if (!opt.l_poly.empty()) config["L"] = opt.l_poly;
    if (!opt.psi.empty()) config["psi"] = opt.psi;
    if (opt.inverse_power >= 0) config["l"] = opt.inverse_power;
    if (!opt.cov.empty()) config["cov"] = opt.cov;
    if (!opt.law.empty()) config["law"] = opt.law;
    if (opt.suite == "special-bare" || opt.suite == "fond-lemma") config["beta2"] = opt.beta2;
    if (opt.perturb_k > 0) config["perturb"] = {{"k", opt.perturb_k}, {"delta", opt.perturb_delta}};

    const auto reports = run_suite(common, opt);
    bool all_exact = true;
    for (auto& r : reports) all_exact = all_exact && r.exact();

    auto& out = emit.stream();
    if (common.format == "json") {
        json j = envelope("verify", config);
        json arr = json::array();
        for (auto& r : reports) arr.push_back(to_json(r));
        j["reports"] = arr;
        j["status"] = all_exact ? "exact" : "fail";
        out << j.dump(2) << "\n";
    } else {
        out << "# bsf " << kVersion << " verify " << opt.suite << " config_hash=" << fnv1a_hex(config.dump()) << "\n";
        for (auto& r : reports) {
            out << (r.exact() ? "exact " : "FAIL  ") << r.statement << "  " << r.parameters.dump() << " order="
                << r.order;
            if (r.first_mismatch)
                out << "  first mismatch n=" << r.first_mismatch->n << " lhs=" << to_string(r.first_mismatch->lhs)
                    << " rhs=" << to_string(r.first_mismatch->rhs);
            out << "\n";
        }
    }
    if (!all_exact) {
        for (auto& r : reports) {
            if (!r.first_mismatch) continue;
            err << "verification failed: " << r.statement << " " << r.parameters.dump() << ": first mismatch at n = "
                << r.first_mismatch->n << " (lhs " << to_string(r.first_mismatch->lhs) << ", rhs "
                << to_string(r.first_mismatch->rhs) << ")\n";
            break;
        }
        return kExitVerificationFailed;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- series

int cmd_series(const CommonOptions& common, const SeriesOptions& opt, Emitter& emit) {
    const SeriesSpec psi = SeriesSpec::parse(opt.psi);
    const BareWeights weights = BareWeights::parse(opt.weights, opt.order);
    json config = {{"weights", weights.describe()}, {"psi", psi.describe()}, {"order", opt.order}, {"cap", common.cap}};

    const TruncatedSeries fast = generating_coefficients(weights, psi, opt.order);
    const TruncatedSeries brute = generating_series_bruteforce(weights, psi, opt.order, common.cap);
    bool agree = true;
    for (unsigned n = 1; n <= opt.order; ++n) agree = agree && fast[n] == brute[n];

    auto& out = emit.stream();
    if (common.format == "json") {
        json j = envelope("series", config);
        j["fast"] = to_json(fast);
        j["bruteforce"] = to_json(brute);
        j["agree"] = agree;
        out << j.dump(2) << "\n";
    } else if (common.format == "csv") {
        out << "n,fast,bruteforce,agree\n";
        for (unsigned n = 1; n <= opt.order; ++n)
            out << n << "," << to_string(fast[n]) << "," << to_string(brute[n]) << "," << (fast[n] == brute[n] ? "yes" : "no")
                << "\n";
    } else {
        out << "# bsf " << kVersion << " series weights=" << weights.describe() << " psi=" << psi.describe() << "\n";
        out << "Y = " << fast.to_string() << "\n";
        out << std::left << std::setw(4) << "n" << std::setw(22) << "fast" << std::setw(22) << "bruteforce" << "agree\n";
        for (unsigned n = 1; n <= opt.order; ++n)
            out << std::left << std::setw(4) << n << std::setw(22) << to_string(fast[n]) << std::setw(22)
                << to_string(brute[n]) << (fast[n] == brute[n] ? "yes" : "no") << "\n";
    }
    return agree ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- wigner

int cmd_wigner(const CommonOptions& common, const WignerOptions& opt, Emitter& emit) {
    const auto cov = CovarianceSpec::parse(opt.cov, parse_rational(opt.beta2));
    const auto law = DiagonalLaw::parse(opt.law);
    const std::vector<unsigned> ks = opt.sweep_k.empty() ? std::vector<unsigned>{opt.k} : opt.sweep_k;
    const std::vector<unsigned> ns = opt.sweep_n.empty() ? std::vector<unsigned>{opt.dimension} : opt.sweep_n;
    // Fail on an unusable covariance before any simulation work.
    for (unsigned k : ks) process_factor(cov, k);

    json config = {{"k", ks},
                   {"N", ns},
                   {"trials", opt.trials},
                   {"cov", opt.cov},
                   {"beta2", to_string(cov.beta2())},
                   {"law", law.describe()},
                   {"seed", opt.seed},
                   {"slack", opt.slack},
                   {"cap", common.cap}};

    json rows = json::array();
    bool all_pass = true;
    for (unsigned n : ns) {
        for (unsigned k : ks) {
            const auto cmp = compare_sim_limit(k, cov, law, n, opt.trials, opt.seed, opt.slack, opt.workers);
            all_pass = all_pass && cmp.pass;
            rows.push_back({{"params", {{"k", k}, {"N", n}, {"trials", opt.trials}, {"cov", cov.describe()},
                                        {"law", law.describe()}, {"seed", opt.seed}}},
                            {"mean", cmp.estimate.mean},
                            {"stderr", cmp.estimate.standard_error},
                            {"exact_limit", to_string(cmp.exact)},
                            {"exact_limit_value", cmp.exact_value},
                            {"z", cmp.z},
                            {"tolerance", cmp.tolerance},
                            {"pass", cmp.pass}});
        }
    }

    auto& out = emit.stream();
    if (common.format == "csv") {
        out << "k,N,trials,mean,stderr,exact_limit,z,pass\n";
        char buf[256];
        for (auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%u,%u,%u,%.10g,%.6g,%s,%.4f,%s\n", r["params"]["k"].get<unsigned>(),
                          r["params"]["N"].get<unsigned>(), opt.trials, r["mean"].get<double>(),
                          r["stderr"].get<double>(), csv_escape(r["exact_limit"].get<std::string>()).c_str(),
                          r["z"].get<double>(), r["pass"].get<bool>() ? "pass" : "fail");
            out << buf;
        }
    } else if (common.format == "json") {
        json j = envelope("wigner", config);
        j["seed"] = opt.seed;
        j["generator"] = kGeneratorName;
        if (rows.size() == 1) {
            for (auto& [key, value] : rows[0].items()) j[key] = value;
        } else {
            j["rows"] = rows;
        }
        j["status"] = all_pass ? "pass" : "fail";
        out << j.dump(2) << "\n";
    } else {
        out << "# bsf " << kVersion << " wigner cov=" << cov.describe() << " law=" << law.describe()
            << " seed=" << opt.seed << " generator=" << kGeneratorName << " config_hash=" << fnv1a_hex(config.dump())
            << "\n";
        char buf[256];
        for (auto& r : rows) {
            std::snprintf(buf, sizeof buf, "k=%-3u N=%-5u mean=%-12.6f stderr=%-10.6f limit=%-10s z=%-8.3f %s\n",
                          r["params"]["k"].get<unsigned>(), r["params"]["N"].get<unsigned>(), r["mean"].get<double>(),
                          r["stderr"].get<double>(), r["exact_limit"].get<std::string>().c_str(), r["z"].get<double>(),
                          r["pass"].get<bool>() ? "pass" : "FAIL");
            out << buf;
        }
    }
    return all_pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- triangular

int cmd_triangular(const CommonOptions& common, const TriangularOptions& opt, Emitter& emit) {
    json config = {{"max_n", opt.max_n}, {"order", opt.order}, {"cap", common.cap}};
    const auto closed = verify_dk8_closed_form(opt.max_n, common.cap);
    const auto inversion = verify_dk8_inversion(opt.order, common.cap);
    const bool ok = closed.exact() && inversion.exact();

    auto& out = emit.stream();
    if (common.format == "json") {
        json j = envelope("triangular", config);
        j["reports"] = json::array({to_json(closed), to_json(inversion)});
        j["status"] = ok ? "exact" : "fail";
        out << j.dump(2) << "\n";
    } else {
        if (common.format != "csv") out << "# bsf " << kVersion << " triangular moments tau((TT*)^n)\n";
        out << "n,numerator,denominator,closed_form_match\n";
        for (auto& row : closed.details["moments"]) {
            const unsigned n = row["n"].get<unsigned>();
            const Rational m = parse_rational(row["moment"].get<std::string>());
            out << n << "," << numerator_of(m) << "," << denominator_of(m) << ","
                << (m == dh_closed_form(n) ? "true" : "false") << "\n";
        }
        if (common.format != "csv")
            out << "# inversion G(s/(1-Y0)) = s to order " << opt.order << ": "
                << (inversion.exact() ? "exact" : "fail") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- dyck

json involution_json(const NonCrossingInvolution& s) { return s.images(); }

int cmd_dyck(const CommonOptions& common, const DyckOptions& opt, Emitter& emit) {
    json config = {{"tree", opt.tree}, {"path", opt.path}, {"k", opt.k}};
    auto& out = emit.stream();

    std::vector<PlaneTree> trees;
    if (!opt.tree.empty()) trees.push_back(PlaneTree::from_encoding(opt.tree));
    if (!opt.path.empty()) trees.push_back(dyck_to_plane_tree(DyckPath::parse(opt.path)));
    if (opt.tree.empty() && opt.path.empty()) {
        if (opt.k + 1 > common.cap) throw RangeError("k + 1 exceeds the enumeration cap");
        trees = enumerate_plane_trees(opt.k + 1, common.cap);
    }

    bool ok = true;
    json rows = json::array();
    for (auto& t : trees) {
        const DyckPath c = plane_tree_to_dyck(t);
        const NonCrossingInvolution sigma = dyck_to_involution(c);
        const bool round_trip = dyck_to_plane_tree(c) == t && plane_tree_to_dyck(dyck_to_plane_tree(c)) == c;
        const bool same_sigma = sigma == tree_involution(t);
        ok = ok && round_trip && same_sigma;
        rows.push_back({{"tree", t.encoding()},
                        {"dyck", c.to_string()},
                        {"involution", involution_json(sigma)},
                        {"round_trip", round_trip},
                        {"walk_matches_involution", same_sigma}});
    }

    if (common.format == "json") {
        json j = envelope("dyck", config);
        j["rows"] = rows;
        j["status"] = ok ? "pass" : "fail";
        out << j.dump(2) << "\n";
    } else if (common.format == "csv") {
        out << "tree,dyck,involution,round_trip\n";
        for (auto& r : rows) out << r["tree"].get<std::string>() << "," << r["dyck"].get<std::string>() << ","
                                 << csv_escape(r["involution"].dump()) << "," << (r["round_trip"].get<bool>() ? "yes" : "no") << "\n";
    } else {
        out << "# bsf " << kVersion << " dyck (" << rows.size() << " trees)\n";
        for (auto& r : rows)
            out << r["tree"].get<std::string>() << "  " << r["dyck"].get<std::string>() << "  "
                << r["involution"].dump() << "  " << (r["round_trip"].get<bool>() ? "round-trip ok" : "ROUND-TRIP FAILED")
                << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact workbench for simply generated trees, bare Green functions and B-series", "bsf"};
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config", "", "INI-style key = value file; command line flags take precedence");
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output,-o", common.output, "Write the report to this file instead of stdout");
    app.add_option("--cap", common.cap, "Enumeration cap on tree size (env BSF_MAX_N)")->check(CLI::PositiveNumber);

    EnumerateOptions en;
    auto* enumerate = app.add_subcommand("enumerate", "List plane trees or rooted shapes with their statistics");
    enumerate->add_option("--kind", en.kind, "plane or shapes")->check(CLI::IsMember({"plane", "shapes"}));
    enumerate->add_option("--n", en.n, "Number of nodes")->required();
    enumerate->add_option("--psi", en.psi, "Degree function for the delta column");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run an exact verification suite");
    verify->add_option("suite", vo.suite, "identities, master-ode, inversion, special-bare, fond-lemma, dk8")
        ->required()
        ->check(CLI::IsMember({"identities", "master-ode", "inversion", "special-bare", "fond-lemma", "dk8"}));
    verify->add_option("--max-n", vo.max_n, "Largest tree size / moment index checked");
    verify->add_option("--order", vo.order, "Series order");
    verify->add_option("--L", vo.l_poly, "Master function coefficients L0,L1,... (master-ode)");
    verify->add_option("--psi", vo.psi, "Degree function (master-ode, inversion)");
    verify->add_option("--l", vo.inverse_power, "Inverse tree factorial power (inversion)");
    verify->add_option("--cov", vo.cov, "Covariance family (special-bare, fond-lemma)");
    verify->add_option("--beta2", vo.beta2, "Variance beta^2");
    verify->add_option("--law", vo.law, "Diagonal law: delta1 or v:p,v:p,... (fond-lemma)");
    verify->add_option("--perturb-k", vo.perturb_k, "Negative control: shift B_k (master-ode)");
    verify->add_option("--perturb-delta", vo.perturb_delta, "Shift applied by --perturb-k");

    SeriesOptions so;
    auto* series = app.add_subcommand("series", "Generating-function coefficients, fast recursion vs enumeration");
    series->add_option("--weights", so.weights,
                       "one, factorial, master:L0,L1,..., inverse-factorial:l, geometric:rho, explicit:B1,B2,...");
    series->add_option("--psi", so.psi, "geometric, exponential, poly:c0,c1,..., explicit:c0,c1,...");
    series->add_option("--order", so.order, "Series order M");

    WignerOptions wo;
    auto* wigner = app.add_subcommand("wigner", "Monte Carlo traces of Wigner processes against the exact limits");
    wigner->add_option("--k", wo.k, "Word length (number of matrices in the product)")->check(CLI::PositiveNumber);
    wigner->add_option("--N", wo.dimension, "Matrix dimension")->check(CLI::PositiveNumber);
    wigner->add_option("--trials", wo.trials, "Monte Carlo trials")->check(CLI::Range(2u, 100000000u));
    wigner->add_option("--cov", wo.cov, "constant, inverse-linear, geometric:rho, table:r0,r1,...");
    wigner->add_option("--beta2", wo.beta2, "Variance beta^2");
    wigner->add_option("--law", wo.law, "Diagonal law: delta1 or v:p,v:p,...");
    wigner->add_option("--seed", wo.seed, "Master seed");
    wigner->add_option("--slack", wo.slack, "Finite-N slack C in 3 stderr + C/N");
    wigner->add_option("--sweep-k", wo.sweep_k, "Word lengths to sweep")->delimiter(',');
    wigner->add_option("--sweep-N", wo.sweep_n, "Dimensions to sweep")->delimiter(',');
    wigner->add_option("--workers", wo.workers, "Worker threads (0 = hardware concurrency)");

    TriangularOptions to;
    auto* triangular = app.add_subcommand("triangular", "Triangular-operator moments and the inversion identity");
    triangular->add_option("--max-n", to.max_n, "Largest moment index");
    triangular->add_option("--order", to.order, "Order of the inversion check");

    DyckOptions dy;
    auto* dyck = app.add_subcommand("dyck", "Tree / Dyck path / involution round trips");
    dyck->add_option("--tree", dy.tree, "Plane tree encoding, e.g. (()(()))");
    dyck->add_option("--path", dy.path, "Dyck word, e.g. UUDD");
    dyck->add_option("--k", dy.k, "Round-trip every plane tree on k+1 nodes");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "bsf: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        Emitter emit(common, out);
        if (*enumerate) return cmd_enumerate(common, en, emit);
        if (*verify) return cmd_verify(common, vo, emit, err);
        if (*series) return cmd_series(common, so, emit);
        if (*wigner) return cmd_wigner(common, wo, emit);
        if (*triangular) return cmd_triangular(common, to, emit);
        if (*dyck) return cmd_dyck(common, dy, emit);
    } catch (const RangeError& e) {
        err << "bsf: range error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotPositiveDefiniteError& e) {
        err << "bsf: invalid covariance: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "bsf: invalid parameter: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CompositionDomainError& e) {
        err << "bsf: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bsf
