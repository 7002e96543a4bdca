// Command-line front end: exact subspace-profile counts, defect dimensions,
// and brute-force verification over small finite fields.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <qprofile/qprofile.hpp>

using namespace qprofile;

namespace {

FieldCtx field_from_spec(const std::string& spec) {
    auto caret = spec.find('^');
    if (caret != std::string::npos) {
        unsigned long p = std::stoul(spec.substr(0, caret));
        unsigned long e = std::stoul(spec.substr(caret + 1));
        return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
    }
    return make_field_from_q(std::stoul(spec));
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("QPROFILE_BUDGET")) return std::stoull(env);
    return kDefaultBudget;
}

void emit(const json& j, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int report_status(const VerificationReport& rep) { return rep.pass ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subspace profiles, defect dimensions and exact counts over F_q"};
    app.require_subcommand(1);

    std::string qspec = "2", format = "text", poly_arg, matrix_arg, subspace_arg, map_arg;
    std::string mu_arg;
    std::size_t n = 0, k = 0, m = 0, d = 0, trials = 100;
    std::uint64_t budget = default_budget(), seed = 1;
    bool brute = false;

    auto add_q = [&](CLI::App* cmd) { cmd->add_option("--q", qspec, "field size, N or P^E"); };
    auto add_fmt = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "enumeration budget");
    };

    auto* c_sigma = app.add_subcommand("sigma", "count subspaces with a given profile");
    c_sigma->add_option("--mu", mu_arg, "partition, e.g. 2,1")->required();
    add_q(c_sigma); add_fmt(c_sigma);

    auto* c_table = app.add_subcommand("sigma-table", "sigma for every partition of n");
    c_table->add_option("--n", n, "ambient dimension")->required();
    add_q(c_table); add_fmt(c_table);

    auto* c_verify = app.add_subcommand("verify", "check sigma against brute-force enumeration");
    c_verify->add_option("--n", n)->required();
    c_verify->add_option("--poly", poly_arg, "irreducible char poly, coefficient codes");
    add_q(c_verify); add_fmt(c_verify); add_budget(c_verify);

    auto* c_split = app.add_subcommand("splitting", "count m-dimensional splitting subspaces");
    c_split->add_option("--m", m)->required();
    c_split->add_option("--d", d)->required();
    c_split->add_flag("--brute", brute, "cross-check against enumeration");
    add_q(c_split); add_fmt(c_split); add_budget(c_split);

    auto* c_whit = app.add_subcommand("whittaker", "q-Whittaker coefficients of p_n");
    c_whit->add_option("--n", n)->required();
    add_fmt(c_whit);

    auto* c_profile = app.add_subcommand("profile", "T-profile of a subspace");
    c_profile->add_option("--matrix", matrix_arg, "operator, rows ; entries , (or @file)")->required();
    c_profile->add_option("--subspace", subspace_arg, "generator rows (or @file)")->required();
    add_q(c_profile); add_fmt(c_profile);

    auto* c_defect = app.add_subcommand("defect", "defect dimensions of a partial map");
    c_defect->add_option("--map", map_arg, "domain generators | images, e.g. 1,0,0|0,1,0")->required();
    add_q(c_defect); add_fmt(c_defect);

    auto* c_enum = app.add_subcommand("enumerate", "list k-dimensional subspaces of F_q^n");
    c_enum->add_option("--n", n)->required();
    c_enum->add_option("--k", k)->required();
    add_q(c_enum); add_fmt(c_enum); add_budget(c_enum);

    auto* c_self = app.add_subcommand("selftest", "orbit-stabilizer, duality and polynomiality suites");
    c_self->add_option("--trials", trials, "random duality trials");
    c_self->add_option("--seed", seed, "random seed");
    add_q(c_self); add_fmt(c_self); add_budget(c_self);

    try {
        app.parse(argc, argv);

        if (*c_sigma) {
            Partition mu = parse_partition(mu_arg);
            FieldCtx F = field_from_spec(qspec);
            QPolynomial p = sigma_poly(mu);
            BigInt v = sigma_value(mu, F.q);
            json j{{"mu", partition_to_json(mu)},
                   {"q", F.q},
                   {"polynomial", qpoly_to_json(p)},
                   {"polynomial_pretty", p.to_string()},
                   {"value", v.str()}};
            emit(j, v.str() + "\n" + p.to_string() + "\n", format == "json");
            return 0;
        }

        if (*c_table) {
            FieldCtx F = field_from_spec(qspec);
            json rows = json::array();
            std::string text;
            QPolynomial colsum_total;
            bool colsums_ok = true;
            for (std::size_t kk = 0; kk + 1 <= n; ++kk) {
                QPolynomial colsum;
                for (const auto& mu : partitions_with_first_part(n, n - kk))
                    colsum = colsum + sigma_poly(mu);
                colsums_ok = colsums_ok && colsum == q_binomial(n, n - kk);
            }
            for (const auto& mu : partitions_of(n)) {
                QPolynomial p = sigma_poly(mu);
                BigInt v = p.eval(F.q);
                rows.push_back(json{{"mu", partition_to_json(mu)},
                                    {"polynomial", qpoly_to_json(p)},
                                    {"polynomial_pretty", p.to_string()},
                                    {"value", v.str()}});
                text += mu.to_string() + "  " + v.str() + "  " + p.to_string() + "\n";
            }
            text += std::string("column sums vs q-binomials: ") + (colsums_ok ? "ok" : "MISMATCH") + "\n";
            json j{{"n", n}, {"q", F.q}, {"rows", rows}, {"column_sums_ok", colsums_ok}};
            emit(j, text, format == "json");
            return colsums_ok ? 0 : 1;
        }

        if (*c_verify) {
            FieldCtx F = field_from_spec(qspec);
            std::optional<PolyFq> f;
            if (!poly_arg.empty()) f = parse_poly(F, poly_arg);
            VerificationReport rep = verify_sigma(F, n, f, budget);
            emit(report_to_json(rep), report_to_text(rep), format == "json");
            return report_status(rep);
        }

        if (*c_split) {
            FieldCtx F = field_from_spec(qspec);
            BigInt v = splitting_count(m, d, F.q);
            json j{{"m", m}, {"d", d}, {"q", F.q}, {"value", v.str()}};
            std::string text = v.str() + "\n";
            bool ok = true;
            if (brute) {
                PolyFq f = smallest_irreducible(F, m * d);
                BigInt bv = splitting_brute(F, m, d, f, budget);
                ok = bv == v;
                j["brute"] = bv.str();
                j["match"] = ok;
                text += "brute: " + bv.str() + (ok ? " (ok)\n" : " (MISMATCH)\n");
            }
            emit(j, text, format == "json");
            return ok ? 0 : 1;
        }

        if (*c_whit) {
            json rows = json::array();
            std::string text;
            for (const auto& mu : partitions_of(n)) {
                SignedQPolynomial c = whittaker_coefficient(mu);
                rows.push_back(json{{"mu", partition_to_json(mu)},
                                    {"sign", c.sign},
                                    {"magnitude", qpoly_to_json(c.magnitude)},
                                    {"pretty", c.to_string()}});
                text += mu.to_string() + "  " + c.to_string() + "\n";
            }
            emit(json{{"n", n}, {"rows", rows}}, text, format == "json");
            return 0;
        }

        if (*c_profile) {
            FieldCtx F = field_from_spec(qspec);
            MatrixFq t = parse_matrix(F, matrix_arg);
            MatrixFq gens = parse_matrix(F, subspace_arg);
            std::vector<VecFq> rows;
            for (std::size_t i = 0; i < gens.nrows; ++i) rows.push_back(gens.row(i));
            Subspace w = span(F, gens.ncols, rows);
            Partition mu = profile(t, w);
            emit(json{{"profile", partition_to_json(mu)}}, mu.to_string() + "\n",
                 format == "json");
            return 0;
        }

        if (*c_defect) {
            FieldCtx F = field_from_spec(qspec);
            std::string arg = resolve_arg(map_arg);
            auto bar = arg.find('|');
            if (bar == std::string::npos)
                throw CLI::ValidationError("--map", "expected '<domain-gens>|<images>'");
            MatrixFq gens = parse_matrix(F, arg.substr(0, bar));
            MatrixFq imgs = parse_matrix(F, arg.substr(bar + 1));
            if (gens.nrows != imgs.nrows || gens.ncols != imgs.ncols)
                throw CLI::ValidationError("--map", "generator and image blocks must have equal shape");
            std::vector<VecFq> g, y;
            for (std::size_t i = 0; i < gens.nrows; ++i) {
                g.push_back(gens.row(i));
                y.push_back(imgs.row(i));
            }
            PartialMap pm = partial_map_from_action(F, gens.ncols, g, y);
            DefectChain dc = defect_chain(pm);
            Partition mu = defect_dimensions(pm);
            auto ifs = invariant_factors(pm);
            bool simple = is_simple_map(pm);
            json jf = json::array();
            std::string tf;
            for (const auto& fpoly : ifs) {
                jf.push_back(format_poly_coeffs(fpoly));
                tf += (tf.empty() ? "" : "; ") + format_poly_pretty(fpoly);
            }
            json j{{"defect_dimensions", partition_to_json(mu)},
                   {"ell", dc.ell},
                   {"invariant_factors", jf},
                   {"simple", simple}};
            emit(j,
                 mu.to_string() + "\nell = " + std::to_string(dc.ell) +
                     "\ninvariant factors: " + tf + "\nsimple: " + (simple ? "yes" : "no") + "\n",
                 format == "json");
            return 0;
        }

        if (*c_enum) {
            FieldCtx F = field_from_spec(qspec);
            json rows = json::array();
            std::string text;
            for_each_subspace(F, n, k, [&](const Subspace& s) {
                rows.push_back(format_matrix(s.basis));
                text += format_matrix(s.basis) + "\n";
            }, budget);
            emit(json{{"n", n}, {"k", k}, {"q", F.q}, {"subspaces", rows}}, text,
                 format == "json");
            return 0;
        }

        if (*c_self) {
            FieldCtx F = field_from_spec(qspec);
            bool ok = true;
            std::string text;
            for (std::size_t nn = 0; nn <= 10; ++nn)
                for (std::size_t kk = 0; kk <= nn; ++kk)
                    ok = ok && orbit_stabilizer_identity_check(nn, kk);
            text += std::string("orbit-stabilizer identities (n <= 10): ") + (ok ? "ok" : "FAIL") + "\n";
            bool poly_ok = true;
            for (std::size_t nn = 1; nn <= 12; ++nn)
                for (const auto& mu : partitions_of(nn)) {
                    sigma_poly(mu);              // throws on nonzero remainder
                    whittaker_coefficient(mu);
                    std::size_t esum = 0;
                    for (std::size_t jx = 1; jx < mu.length(); ++jx)
                        esum += mu.parts[jx] * (mu.parts[jx] - 1) / 2;
                    poly_ok = poly_ok &&
                              sigma_poly(mu) == whittaker_coefficient(mu).magnitude *
                                                    QPolynomial::monomial(1, esum);
                }
            text += std::string("polynomiality + whittaker consistency (n <= 12): ") +
                    (poly_ok ? "ok" : "FAIL") + "\n";
            VerificationReport dual = verify_duality(F, 3, trials, seed, budget);
            text += report_to_text(dual);
            bool pass = ok && poly_ok && dual.pass;
            json j{{"orbit_stabilizer_ok", ok},
                   {"polynomiality_ok", poly_ok},
                   {"duality", report_to_json(dual)},
                   {"pass", pass}};
            emit(j, text, format == "json");
            return pass ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
