// Command-line surface of the entangled phase-space toolkit.
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entps/analytic.hpp"
#include "entps/cli_config.hpp"
#include "entps/fockspace.hpp"
#include "entps/phasespace.hpp"
#include "entps/quadrature.hpp"
#include "entps/verify.hpp"

namespace {

using namespace entps;

constexpr int kExitCheckFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitUsage = 64;

struct CommonFlags {
    std::string config_path;
    std::optional<double> alpha, beta, gamma, delta, kappa;
    std::string sigma_text, tau_text;
    int cutoff = 0;  // 0: take from config
};

void add_param_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file");
    cmd->add_option("--alpha", f.alpha, "representation parameter alpha");
    cmd->add_option("--beta", f.beta, "representation parameter beta");
    cmd->add_option("--gamma", f.gamma, "representation parameter gamma");
    cmd->add_option("--delta", f.delta, "representation parameter delta");
    cmd->add_option("--kappa", f.kappa, "Husimi-family parameter (sets all four)");
}

void add_label_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--sigma", f.sigma_text, "sigma label as re,im");
    cmd->add_option("--tau", f.tau_text, "tau label as re,im");
    cmd->add_option("--cutoff", f.cutoff, "Fock cutoff per mode");
}

RunConfig resolve(const CommonFlags& f) {
    RunConfig cfg;
    if (!f.config_path.empty()) {
        cfg = load_config(f.config_path);
    }
    const bool any_greek = f.alpha || f.beta || f.gamma || f.delta;
    if (any_greek && f.kappa) {
        throw DomainError("give either --kappa or the four Greek flags, not both");
    }
    if (f.kappa) {
        cfg.params = husimi_params(*f.kappa);
    } else if (any_greek) {
        if (!(f.alpha && f.beta && f.gamma && f.delta)) {
            throw CLI::RequiredError("--alpha/--beta/--gamma/--delta (all four)");
        }
        cfg.params = validate_params(*f.alpha, *f.beta, *f.gamma, *f.delta);
    }
    if (!f.sigma_text.empty()) cfg.sigma = parse_complex(f.sigma_text);
    if (!f.tau_text.empty()) cfg.tau = parse_complex(f.tau_text);
    if (f.cutoff > 0) cfg.cutoff = f.cutoff;
    return cfg;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw DomainError("cannot open output file " + path);
    return file;
}

// ---- params check ---------------------------------------------------------

int run_params_check(const CommonFlags& f) {
    if (!f.kappa && !(f.alpha && f.beta && f.gamma && f.delta) &&
        f.config_path.empty()) {
        std::cerr << "params check: give --kappa or all of "
                     "--alpha/--beta/--gamma/--delta\n";
        return kExitUsage;
    }
    RepParams p = [&] {
        try {
            return resolve(f).params;
        } catch (const Error& e) {
            std::cout << "invalid: " << e.what() << "\n";
            std::exit(kExitInvalidInput);
        }
    }();
    std::cout << std::setprecision(17);
    std::cout << "valid parameters: alpha=" << p.alpha() << " beta=" << p.beta()
              << " gamma=" << p.gamma() << " delta=" << p.delta() << "\n";
    std::cout << "-alpha*beta*gamma*delta = " << p.neg_abgd() << "\n";
    std::cout << "beta*gamma + alpha*delta = " << p.bg_plus_ad() << "\n";
    if (std::abs(p.bg_plus_ad()) < 1e-12) {
        std::cout << "note: canonical coherent regime (the |Gamma> kets are "
                     "two-mode coherent states)\n";
    }
    if (std::abs(p.beta() - 1.0) < 1e-12 && std::abs(p.delta() + 1.0) < 1e-12) {
        std::cout << "Husimi-family kappa = " << p.alpha() / p.gamma() << "\n";
    }
    return 0;
}

// ---- state coeffs ---------------------------------------------------------

int run_state_coeffs(const CommonFlags& f, const std::string& kind,
                     const std::string& label_text, const std::string& z2_text,
                     const std::string& out_path) {
    const RunConfig cfg = resolve(f);
    TwoModeState s = [&] {
        if (kind == "gamma") {
            return gamma_state({cfg.sigma, cfg.tau}, cfg.params, cfg.cutoff);
        }
        if (kind == "eta") return eta_state({parse_complex(label_text)}, cfg.cutoff);
        if (kind == "xi") return xi_state({parse_complex(label_text)}, cfg.cutoff);
        if (kind == "coherent") {
            return coherent_state(parse_complex(label_text), parse_complex(z2_text),
                                  cfg.cutoff);
        }
        throw DomainError("unknown state kind \"" + kind + "\"");
    }();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const complexd& c : s.coeffs()) {
        coeffs.push_back({c.real(), c.imag()});
    }
    nlohmann::json j{{"cutoff", s.cutoff()}, {"coeffs", std::move(coeffs)}};
    std::ofstream file;
    open_sink(out_path.empty() ? cfg.output_path : out_path, file)
        << j.dump(2) << "\n";
    return 0;
}

// ---- wigner grid ----------------------------------------------------------

struct Axis {
    double lo = -1.0, hi = 1.0;
    int n = 3;
};

Axis parse_axis(const std::string& text) {
    Axis a;
    if (text.empty()) return a;
    std::istringstream in(text);
    char c1 = 0, c2 = 0;
    if (!(in >> a.lo >> c1 >> a.hi >> c2 >> a.n) || c1 != ':' || c2 != ':' ||
        a.n < 1 || !in.eof()) {
        throw DomainError("axis spec must be min:max:count, got \"" + text + "\"");
    }
    return a;
}

double axis_value(const Axis& a, int k) {
    return a.n == 1 ? a.lo : a.lo + (a.hi - a.lo) * k / (a.n - 1.0);
}

int run_wigner_grid(const CommonFlags& f, const std::string (&axes_text)[4],
                    bool numeric, int order, const std::string& out_path) {
    const RunConfig cfg = resolve(f);
    Axis axes[4];
    for (int i = 0; i < 4; ++i) axes[i] = parse_axis(axes_text[i]);
    const GammaLabel L{cfg.sigma, cfg.tau};

    std::optional<phasespace::EtaOverlapTable> table;
    std::optional<quadrature::PlaneRule> rule;
    if (numeric) {
        table.emplace(gamma_state(L, cfg.params, cfg.cutoff));
        const double rate =
            -cfg.params.alpha() * cfg.params.delta() /
            (cfg.params.beta() * cfg.params.gamma());
        rule = quadrature::gauss_hermite_plane(order > 0 ? order : cfg.order2d,
                                               1.0 / std::sqrt(rate));
    }

    std::ofstream file;
    std::ostream& os = open_sink(out_path.empty() ? cfg.output_path : out_path, file);
    os << "rho_re,rho_im,vsig_re,vsig_im,W_analytic,W_numeric,abs_err\n";
    os << std::setprecision(17);
    for (int a = 0; a < axes[0].n; ++a) {
        for (int b = 0; b < axes[1].n; ++b) {
            for (int c = 0; c < axes[2].n; ++c) {
                for (int d = 0; d < axes[3].n; ++d) {
                    const PhasePoint pt{
                        complexd{axis_value(axes[0], a), axis_value(axes[1], b)},
                        complexd{axis_value(axes[2], c), axis_value(axes[3], d)}};
                    const double wa = analytic::gamma_wigner(pt, L, cfg.params);
                    os << pt.rho.real() << ',' << pt.rho.imag() << ','
                       << pt.varsigma.real() << ',' << pt.varsigma.imag() << ','
                       << wa << ',';
                    if (numeric) {
                        const double wn = phasespace::wigner_numeric(*table, pt, *rule);
                        os << wn << ',' << std::abs(wa - wn) << "\n";
                    } else {
                        os << "nan,nan\n";
                    }
                }
            }
        }
    }
    return 0;
}

// ---- overlap --------------------------------------------------------------

int run_overlap(const CommonFlags& f, const std::string& kind,
                const std::string& sigma2_text, const std::string& tau2_text,
                const std::string& eta_text, const std::string& xi_text,
                const std::string& z1_text, const std::string& z2_text,
                bool oracle) {
    const RunConfig cfg = resolve(f);
    const GammaLabel L{cfg.sigma, cfg.tau};
    const int N = cfg.cutoff;
    complexd closed{}, fock{};
    if (kind == "gamma-gamma") {
        const GammaLabel Lp{parse_complex(sigma2_text), parse_complex(tau2_text)};
        closed = analytic::gamma_gamma_inner(L, Lp, cfg.params);
        if (oracle) {
            fock = inner(gamma_state(L, cfg.params, N), gamma_state(Lp, cfg.params, N));
        }
    } else if (kind == "gamma-coherent") {
        const complexd z1 = parse_complex(z1_text), z2 = parse_complex(z2_text);
        closed = analytic::gamma_coherent_overlap(L, cfg.params, z1, z2);
        if (oracle) {
            fock = inner(gamma_state(L, cfg.params, N), coherent_state(z1, z2, N));
        }
    } else if (kind == "eta-gamma") {
        const EtaLabel eta{parse_complex(eta_text)};
        closed = analytic::eta_gamma_overlap(eta, L, cfg.params);
        if (oracle) fock = inner(eta_state(eta, N), gamma_state(L, cfg.params, N));
    } else if (kind == "xi-gamma") {
        const XiLabel xi{parse_complex(xi_text)};
        closed = analytic::xi_gamma_overlap(xi, L, cfg.params);
        if (oracle) fock = inner(xi_state(xi, N), gamma_state(L, cfg.params, N));
    } else if (kind == "eta-xi") {
        const EtaLabel eta{parse_complex(eta_text)};
        const XiLabel xi{parse_complex(xi_text)};
        closed = analytic::eta_xi_overlap(xi, eta);
        if (oracle) fock = inner(xi_state(xi, N), eta_state(eta, N));
    } else {
        throw DomainError("unknown overlap kind \"" + kind + "\"");
    }
    std::cout << std::setprecision(17);
    std::cout << "closed form: " << closed.real() << (closed.imag() < 0 ? " - " : " + ")
              << std::abs(closed.imag()) << "i\n";
    if (oracle) {
        std::cout << "Fock oracle (cutoff " << N << "): " << fock.real()
                  << (fock.imag() < 0 ? " - " : " + ") << std::abs(fock.imag())
                  << "i\n";
        std::cout << "abs difference: " << std::abs(closed - fock) << "\n";
    }
    return 0;
}

// ---- moments --------------------------------------------------------------

int run_moments(const CommonFlags& f) {
    const RunConfig cfg = resolve(f);
    const analytic::MomentSet m = analytic::gamma_moments({cfg.sigma, cfg.tau},
                                                          cfg.params);
    std::cout << std::setprecision(17);
    std::cout << "<Q->  = " << m.meanQminus << "   <Q-^2> = " << m.meanQminusSq << "\n";
    std::cout << "<P->  = " << m.meanPminus << "   <P-^2> = " << m.meanPminusSq << "\n";
    std::cout << "<Q+>  = " << m.meanQplus << "   <Q+^2> = " << m.meanQplusSq << "\n";
    std::cout << "<P+>  = " << m.meanPplus << "   <P+^2> = " << m.meanPplusSq << "\n";
    std::cout << "var(Q-)*var(P-) = " << m.varQminus() * m.varPminus() << "\n";
    std::cout << "var(Q+)*var(P+) = " << m.varQplus() * m.varPplus() << "\n";
    return 0;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const CommonFlags& f, const std::string& tier_text,
               std::optional<std::uint64_t> seed, const std::string& only,
               const std::string& out_path) {
    RunConfig cfg = resolve(f);
    verify::RunOptions opt;
    opt.tier = cfg.tier;
    opt.seed = cfg.seed;
    if (!tier_text.empty()) {
        if (tier_text == "quick") {
            opt.tier = verify::Tier::quick;
        } else if (tier_text == "full") {
            opt.tier = verify::Tier::full;
        } else {
            throw DomainError("tier must be quick or full");
        }
    }
    if (seed) opt.seed = *seed;

    std::vector<verify::CheckReport> reports = verify::run_all(opt);
    if (!only.empty()) {
        std::erase_if(reports, [&](const verify::CheckReport& r) {
            return r.name.find(only) == std::string::npos;
        });
        if (reports.empty()) {
            throw DomainError("no check matches --only " + only);
        }
    }
    verify::print_reports(std::cout, reports);
    const std::string path = out_path.empty() ? cfg.output_path : out_path;
    if (!path.empty()) {
        std::ofstream file;
        open_sink(path, file) << verify::reports_to_json(reports) << "\n";
    }
    for (const auto& r : reports) {
        if (!r.passed) return kExitCheckFailure;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entangled phase-space representation toolkit"};
    app.require_subcommand(1);

    int threads = 1;
    if (const char* env = std::getenv("ENTPS_THREADS")) {
        threads = std::atoi(env);
    }
    app.add_option("--threads", threads,
                   "worker count (results are reduction-order independent)");

    CommonFlags pf;
    CLI::App* params_cmd = app.add_subcommand("params", "parameter utilities");
    CLI::App* params_check = params_cmd->add_subcommand("check", "validate parameters");
    add_param_flags(params_check, pf);

    CommonFlags sf;
    std::string state_kind = "gamma", state_label, state_z2, state_out;
    CLI::App* state_cmd = app.add_subcommand("state", "state construction");
    CLI::App* state_coeffs = state_cmd->add_subcommand("coeffs", "emit coefficients");
    add_param_flags(state_coeffs, sf);
    add_label_flags(state_coeffs, sf);
    state_coeffs->add_option("--kind", state_kind, "gamma|eta|xi|coherent");
    state_coeffs->add_option("--label", state_label, "eta/xi/z1 label as re,im");
    state_coeffs->add_option("--z2", state_z2, "second coherent label as re,im");
    state_coeffs->add_option("--output", state_out, "output file (default stdout)");

    CommonFlags wf;
    std::string waxes[4], wigner_out;
    bool wigner_numeric_flag = false;
    int wigner_order = 0;
    CLI::App* wigner_cmd = app.add_subcommand("wigner", "Wigner function");
    CLI::App* wigner_grid = wigner_cmd->add_subcommand("grid", "emit a CSV grid");
    add_param_flags(wigner_grid, wf);
    add_label_flags(wigner_grid, wf);
    wigner_grid->add_option("--rho-re", waxes[0], "axis spec min:max:count");
    wigner_grid->add_option("--rho-im", waxes[1], "axis spec min:max:count");
    wigner_grid->add_option("--vsig-re", waxes[2], "axis spec min:max:count");
    wigner_grid->add_option("--vsig-im", waxes[3], "axis spec min:max:count");
    wigner_grid->add_flag("--numeric", wigner_numeric_flag,
                          "also evaluate the quadrature transform");
    wigner_grid->add_option("--order", wigner_order, "quadrature order");
    wigner_grid->add_option("--output", wigner_out, "output file (default stdout)");

    CommonFlags of;
    std::string ov_kind = "gamma-gamma", ov_sigma2, ov_tau2, ov_eta, ov_xi, ov_z1, ov_z2;
    bool ov_oracle = false;
    CLI::App* overlap_cmd = app.add_subcommand("overlap", "closed-form overlaps");
    add_param_flags(overlap_cmd, of);
    add_label_flags(overlap_cmd, of);
    overlap_cmd->add_option("--kind", ov_kind,
                            "gamma-gamma|gamma-coherent|eta-gamma|xi-gamma|eta-xi");
    overlap_cmd->add_option("--sigma2", ov_sigma2, "second sigma label");
    overlap_cmd->add_option("--tau2", ov_tau2, "second tau label");
    overlap_cmd->add_option("--eta", ov_eta, "eta label as re,im");
    overlap_cmd->add_option("--xi", ov_xi, "xi label as re,im");
    overlap_cmd->add_option("--z1", ov_z1, "first coherent label");
    overlap_cmd->add_option("--z2", ov_z2, "second coherent label");
    overlap_cmd->add_flag("--oracle", ov_oracle, "also print the Fock inner product");

    CommonFlags mf;
    CLI::App* moments_cmd = app.add_subcommand("moments", "quadrature moments");
    add_param_flags(moments_cmd, mf);
    add_label_flags(moments_cmd, mf);

    CommonFlags vf;
    std::string verify_tier, verify_only, verify_out;
    std::optional<std::uint64_t> verify_seed;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the check suite");
    verify_cmd->add_option("--config", vf.config_path, "JSON config file");
    verify_cmd->add_option("--tier", verify_tier, "quick|full");
    verify_cmd->add_option("--seed", verify_seed, "label-draw seed");
    verify_cmd->add_option("--only", verify_only, "run checks whose name contains this");
    verify_cmd->add_option("--output", verify_out, "JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (params_check->parsed()) return run_params_check(pf);
        if (state_coeffs->parsed()) {
            return run_state_coeffs(sf, state_kind, state_label, state_z2, state_out);
        }
        if (wigner_grid->parsed()) {
            return run_wigner_grid(wf, waxes, wigner_numeric_flag, wigner_order,
                                   wigner_out);
        }
        if (overlap_cmd->parsed()) {
            return run_overlap(of, ov_kind, ov_sigma2, ov_tau2, ov_eta, ov_xi, ov_z1,
                               ov_z2, ov_oracle);
        }
        if (moments_cmd->parsed()) return run_moments(mf);
        if (verify_cmd->parsed()) {
            return run_verify(vf, verify_tier, verify_seed, verify_only, verify_out);
        }
        std::cerr << "missing subcommand\n";
        return kExitUsage;
    } catch (const CLI::RequiredError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
