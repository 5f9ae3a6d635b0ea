#include "viscowave/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "format.hpp"
#include "viscowave/dispersion.hpp"
#include "viscowave/errors.hpp"
#include "viscowave/greens.hpp"
#include "viscowave/measures.hpp"
#include "viscowave/verification.hpp"
#include "viscowave/wavenumber.hpp"

namespace viscowave::cli {

namespace {

using nlohmann::json;

constexpr double kMHz = 1e6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string model;
    std::optional<double> a, alpha, b, gamma, tau, cinf, A, C, lo, hi;
    double rho = 1.0;
    std::string range = "1e-3:1e3";
    int ppd = 20;
    std::string format;  ///< csv, json; empty picks the command default
    std::string output;
    std::optional<double> x, T;
    int n = 1 << 14;
    int dim = 1;
    bool taper = false;
};

const std::set<std::string> kModels = {"cole-cole",   "sls",       "havriliak-negami", "cole-davidson",
                                       "power-law",   "finite-band", "synthetic-bad"};

double need(const std::optional<double>& v, const char* flag, const std::string& model) {
    if (!v) throw UsageError("model '" + model + "' requires --" + std::string(flag));
    return *v;
}

RelaxationModel make_model(const RunConfig& c) {
    const auto& m = c.model;
    try {
        if (m == "cole-cole")
            return ColeCole::from_c_inf(need(c.a, "a", m), need(c.alpha, "alpha", m), need(c.tau, "tau", m),
                                        need(c.cinf, "cinf", m), c.rho);
        if (m == "sls")
            return StandardLinearSolid::from_c_inf(need(c.a, "a", m), need(c.tau, "tau", m), need(c.cinf, "cinf", m),
                                                   c.rho);
        if (m == "havriliak-negami")
            return HavriliakNegami::from_c_inf(need(c.b, "b", m), need(c.alpha, "alpha", m), need(c.gamma, "gamma", m),
                                               need(c.tau, "tau", m), need(c.cinf, "cinf", m), c.rho);
        if (m == "cole-davidson")
            return ColeDavidson::from_c_inf(need(c.b, "b", m), need(c.gamma, "gamma", m), need(c.tau, "tau", m),
                                            need(c.cinf, "cinf", m), c.rho);
        if (m == "power-law") return PowerLawMeasure(need(c.A, "A", m), need(c.gamma, "gamma", m), c.cinf.value_or(kInf), c.rho);
        if (m == "finite-band")
            return FiniteBand(need(c.C, "C", m), need(c.lo, "lo", m), need(c.hi, "hi", m), need(c.cinf, "cinf", m), c.rho);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (m == "synthetic-bad") throw UsageError("model 'synthetic-bad' is only accepted by 'verify'");
    throw UsageError("unknown model '" + m + "'");
}

// kappa = p/(1 + p): bounded at infinity, so kappa^2/p is not a CBF.
ComplexWaveNumber synthetic_bad() {
    return ComplexWaveNumber::custom("synthetic-bad", [](cplx p) { return p / (1.0 + p); }, 1.0, 1.0, 1.0);
}

std::pair<double, double> parse_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("--range must look like lo:hi");
    double lo = 0.0, hi = 0.0;
    try {
        std::size_t used = 0;
        lo = std::stod(s.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("trailing text");
        const std::string rest = s.substr(colon + 1);
        hi = std::stod(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("trailing text");
    } catch (const std::logic_error&) {
        throw UsageError("--range must look like lo:hi, got '" + s + "'");
    }
    if (!(lo > 0.0) || !std::isfinite(hi) || !(hi > lo)) throw UsageError("--range is empty or not positive: '" + s + "'");
    return {lo, hi};
}

// key=value lines ('#' comments) or a flat JSON object.
std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    std::map<std::string, std::string> kv;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw UsageError("malformed JSON config '" + path + "': " + e.what());
        }
        if (!j.is_object()) throw UsageError("JSON config must be an object");
        for (auto& [k, v] : j.items()) {
            if (v.is_string()) kv[k] = v.get<std::string>();
            else if (v.is_boolean()) kv[k] = v.get<bool>() ? "true" : "false";
            else if (v.is_number()) kv[k] = v.dump();
            else throw UsageError("config key '" + k + "' must be a scalar");
        }
        return kv;
    }
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(lines, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

// Flags given on the command line win over the config file.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::optional<std::string> path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file name");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (!path || rest.empty()) return rest;
    std::set<std::string> given;
    for (const auto& a : rest) {
        if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
    }
    std::vector<std::string> merged{rest.front()};
    for (const auto& [k, v] : load_config(*path)) {
        if (given.count(k)) continue;
        if (k == "taper") {
            if (v == "true" || v == "1") merged.push_back("--taper");
            continue;
        }
        merged.push_back("--" + k);
        merged.push_back(v);
    }
    merged.insert(merged.end(), rest.begin() + 1, rest.end());
    return merged;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string canonical(const std::string& command, const RunConfig& c) {
    std::ostringstream os;
    auto opt = [&os](const char* k, const std::optional<double>& v) {
        if (v) os << ";" << k << "=" << fmt17(*v);
    };
    os << "command=" << command << ";model=" << c.model;
    opt("a", c.a);
    opt("alpha", c.alpha);
    opt("b", c.b);
    opt("gamma", c.gamma);
    opt("tau", c.tau);
    opt("cinf", c.cinf);
    opt("A", c.A);
    opt("C", c.C);
    opt("lo", c.lo);
    opt("hi", c.hi);
    os << ";rho=" << fmt17(c.rho);
    if (command == "curves" || command == "spectrum") os << ";range=" << c.range << ";ppd=" << c.ppd;
    if (command == "greens") {
        opt("x", c.x);
        opt("T", c.T);
        os << ";n=" << c.n << ";dim=" << c.dim << ";taper=" << c.taper;
    }
    os << ";format=" << c.format;
    return os.str();
}

json model_object(const RelaxationModel& model) {
    json j;
    std::istringstream in(describe(model));
    std::string item;
    while (std::getline(in, item, ';')) {
        const auto eq = item.find('=');
        const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
        if (k == "model") j[k] = v;
        else if (v == "inf") j[k] = "inf";
        else j[k] = std::stod(v);
    }
    return j;
}

void write_table(std::ostream& os, const RunConfig& c, const std::string& command, const std::string& model_desc,
                 const std::vector<std::string>& cols, const std::vector<std::vector<double>>& rows) {
    const std::string hash = fnv1a_hex(canonical(command, c));
    if (c.format == "json") {
        json j;
        j["schema"] = 1;
        j["command"] = command;
        j["model"] = json::parse(model_desc);
        j["config_hash"] = hash;
        j["columns"] = cols;
        json data = json::array();
        for (const auto& r : rows) {
            json row = json::array();
            for (double v : r) row.push_back(std::isfinite(v) ? json(v) : json(fmt17(v)));
            data.push_back(row);
        }
        j["rows"] = data;
        os << j.dump(2) << "\n";
        return;
    }
    os << "# viscowave " << command << "\n";
    os << "# model: " << model_desc << "\n";
    os << "# config_hash: " << hash << "\n";
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << fmt17(r[i]);
        os << "\n";
    }
}

int cmd_curves(const RunConfig& c, std::ostream& out) {
    const auto model = make_model(c);
    const auto [lo, hi] = parse_range(c.range);
    const auto grid = log_grid(lo * kMHz, hi * kMHz, c.ppd);
    const auto cv = curve(model, grid);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < grid.size(); ++i)
        rows.push_back({grid[i] / kMHz, cv.attenuation[i], cv.dispersion[i], cv.phase_speed[i]});
    write_table(out, c, "curves", model_json(model),
                {"omega_MHz", "attenuation_per_m", "dispersion_per_m", "phase_speed_m_per_s"}, rows);
    return kOk;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    const auto model = make_model(c);
    const auto [lo, hi] = parse_range(c.range);
    const auto grid = log_grid(lo * kMHz, hi * kMHz, c.ppd);
    const auto m = measure_of(model);
    std::vector<std::vector<double>> rows;
    for (double r : grid) rows.push_back({r, m(r)});
    write_table(out, c, "spectrum", model_json(model), {"r_per_s", "density"}, rows);
    return kOk;
}

int cmd_greens(const RunConfig& c, std::ostream& out) {
    const auto model = make_model(c);
    if (!c.x || !c.T) throw UsageError("greens requires --x and --T");
    if (c.dim != 1 && c.dim != 3) throw UsageError("--dim must be 1 or 3");
    GreenOptions opt;
    opt.n_samples = c.n;
    opt.T = *c.T;
    opt.taper = c.taper;
    const auto w = ComplexWaveNumber::from_model(model);
    Waveform wf;
    try {
        wf = c.dim == 1 ? green1d(w, *c.x, opt) : green3d(w, *c.x, opt);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string hash = fnv1a_hex(canonical("greens", c));
    if (c.format == "json") {
        json j;
        j["schema"] = 1;
        j["command"] = "greens";
        j["model"] = json::parse(model_json(model));
        j["config_hash"] = hash;
        j["dim"] = wf.dim;
        j["x_m"] = wf.x;
        j["wavefront_time_s"] = wf.wavefront_time ? json(*wf.wavefront_time) : json("none");
        j["dc_step_amplitude"] = wf.dc_step_amplitude ? json(*wf.dc_step_amplitude) : json("none");
        j["wavefront_impulse"] = wf.wavefront_impulse;
        j["t_seconds"] = wf.t;
        j["u"] = wf.u;
        out << j.dump() << "\n";
        return kOk;
    }
    out << "# viscowave greens\n# config_hash: " << hash << "\n";
    write_csv(out, wf, model_json(model));
    return kOk;
}

// Time scale on which the medium departs from its high-frequency behaviour.
double time_scale(const RelaxationModel& model) {
    if (auto t = relaxation_time(model)) return *t;
    if (auto* fb = std::get_if<FiniteBand>(&model)) return 1.0 / fb->b_hi;
    const auto& pl = std::get<PowerLawMeasure>(model);
    // crossover of a p^gamma against p/c_inf
    const double k = pl.a_coef * std::numbers::pi * pl.gamma_exp / std::sin(std::numbers::pi * pl.gamma_exp);
    return std::pow(k * pl.c_inf, -1.0 / (1.0 - pl.gamma_exp));
}

// Pre-wavefront amplitude of the 1D and 3D Green's functions at a distance of
// a few hundred wavefront-speed relaxation lengths, refining the grid until
// the spectrum is resolved.
CheckReport causality_report(const RelaxationModel& model) {
    const auto w = ComplexWaveNumber::from_model(model);
    const double ts = time_scale(model);
    const double x = 200.0 * w.c_inf() * ts;
    CheckReport rep;
    rep.name = "causality";
    rep.tolerance = 1e-6;
    for (int dim : {1, 3}) {
        GreenOptions opt;
        opt.T = 2.0 * x / w.c_inf();
        std::optional<Waveform> wf;
        std::string last_error;
        for (int n = 1 << 14; n <= 1 << 18 && !wf; n *= 2) {
            opt.n_samples = n;
            try {
                wf = dim == 1 ? green1d(w, x, opt) : green3d(w, x, opt);
            } catch (const NumericalError& e) {
                last_error = e.what();
            }
        }
        if (!wf) throw NumericalError("causality check: " + last_error, kInf);
        const double v = causality_metric(*wf);
        if (v > rep.worst_violation) {
            rep.worst_violation = v;
            rep.location = "dim=" + std::to_string(dim) + ",x=" + fmt17(x);
        }
        rep.grid += (rep.grid.empty() ? "" : "; ") + std::string("dim=") + std::to_string(dim) +
                    " n=" + std::to_string(opt.n_samples) + " T=" + fmt17(opt.T);
    }
    rep.pass = rep.worst_violation <= rep.tolerance;
    return rep;
}

CheckReport kk_report(const RelaxationModel& model) {
    const auto m = measure_of(model);
    const double s = 1.0 / time_scale(model);
    CheckReport rep;
    rep.name = "kramers-kronig";
    rep.tolerance = 1e-2;
    rep.grid = "(omega, omega0)/scale in {(0.1,1), (1,10), (10,0.5)}, scale=" + fmt17(s);
    const std::pair<double, double> pairs[] = {{0.1, 1.0}, {1.0, 10.0}, {10.0, 0.5}};
    for (auto [o, o0] : pairs) {
        const auto r = kk_check(m, o * s, o0 * s);
        const double rel = r.residual / std::max(std::abs(r.lhs), 1e-300);
        if (rel > rep.worst_violation) {
            rep.worst_violation = rel;
            rep.location = "omega=" + fmt17(o * s) + ",omega0=" + fmt17(o0 * s);
        }
    }
    rep.pass = rep.worst_violation <= rep.tolerance;
    return rep;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    std::optional<RelaxationModel> model;
    ComplexWaveNumber w = c.model == "synthetic-bad" ? synthetic_bad() : ComplexWaveNumber::from_model(*(model = make_model(c)));
    const double scale = model ? 1.0 / time_scale(*model) : 1.0;
    const auto hp = log_polar_grid(scale, 12.0, 40, 25);
    const auto ra = real_axis_grid(scale, 12.0, 1000);

    std::vector<CheckReport> reports;
    std::vector<std::string> skipped;
    reports.push_back(cm_check_relaxation(w, hp, ra));
    for (auto& r : admissibility_battery(w, hp, ra)) reports.push_back(std::move(r));
    reports.push_back(minimum_phase_check(w, default_omega_rect(scale)));
    if (model) {
        reports.push_back(kk_report(*model));
        if (std::isfinite(w.c_inf())) reports.push_back(causality_report(*model));
        else skipped.push_back("causality: no wavefront (c_inf infinite)");
    } else {
        skipped.push_back("kramers-kronig: no spectral measure");
        skipped.push_back("causality: no spectral measure");
    }

    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    const std::string hash = fnv1a_hex(canonical("verify", c));
    if (c.format == "csv") {
        out << "# viscowave verify\n# model: " << (model ? model_json(*model) : "{\"model\":\"synthetic-bad\"}") << "\n";
        out << "# config_hash: " << hash << "\n";
        out << "check,pass,worst_violation,tolerance,location\n";
        for (const auto& r : reports)
            out << r.name << "," << (r.pass ? "true" : "false") << "," << fmt17(r.worst_violation) << ","
                << fmt17(r.tolerance) << ",\"" << r.location << "\"\n";
        for (const auto& s : skipped) out << "# skipped " << s << "\n";
    } else {
        json j;
        j["schema"] = 1;
        j["command"] = "verify";
        j["model"] = model ? json::parse(model_json(*model)) : json{{"model", "synthetic-bad"}};
        j["config_hash"] = hash;
        j["pass"] = pass;
        j["checks"] = json::array();
        for (const auto& r : reports) j["checks"].push_back(json::parse(r.to_json()));
        j["skipped"] = skipped;
        out << j.dump(2) << "\n";
    }
    return pass ? kOk : kVerificationFailed;
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--model", c.model, "Model family")->required()->check(CLI::IsMember(kModels));
    sub->add_option("--a", c.a, "Cole-Cole/SLS modulus ratio G0/G_inf (> 1)");
    sub->add_option("--alpha", c.alpha, "Cole-Cole/Havriliak-Negami exponent");
    sub->add_option("--b", c.b, "Havriliak-Negami/Cole-Davidson relaxation strength (0 < b < 1)");
    sub->add_option("--gamma", c.gamma, "Havriliak-Negami/Cole-Davidson exponent; power-law exponent");
    sub->add_option("--tau", c.tau, "Relaxation time [s]");
    sub->add_option("--cinf", c.cinf, "Wavefront speed c_inf [m/s]");
    sub->add_option("--rho", c.rho, "Density [kg/m^3]")->capture_default_str();
    sub->add_option("--A", c.A, "Power-law measure coefficient");
    sub->add_option("--C", c.C, "Finite-band density level");
    sub->add_option("--lo", c.lo, "Finite-band lower edge [1/s]");
    sub->add_option("--hi", c.hi, "Finite-band upper edge [1/s]");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
    sub->add_option("--config", "key=value or JSON file; command-line flags take precedence");
}

}  // namespace

std::string model_json(const RelaxationModel& model) { return model_object(model).dump(); }

std::string config_hash(const std::string& text) { return fnv1a_hex(text); }

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{
        "viscowave: attenuation, dispersion and Green's functions of viscoelastic media.\n"
        "Frequencies on the command line and in tables are angular frequencies in MHz\n"
        "(omega [rad/s] = 1e6 x value); everything else is SI.",
        "viscowave"};
    app.require_subcommand(1);

    auto* curves = app.add_subcommand("curves", "Attenuation, dispersion and phase speed on a log grid");
    add_common(curves, c);
    curves->add_option("--range", c.range, "lo:hi angular frequency [MHz]")->capture_default_str();
    curves->add_option("--ppd", c.ppd, "Points per decade")->check(CLI::Range(1, 10000))->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "Spectral density h(r) on a log grid");
    add_common(spectrum, c);
    spectrum->add_option("--range", c.range, "lo:hi relaxation rate r [1e6/s]")->capture_default_str();
    spectrum->add_option("--ppd", c.ppd, "Points per decade")->check(CLI::Range(1, 10000))->capture_default_str();

    auto* greens = app.add_subcommand("greens", "Time-domain Green's function at distance x");
    add_common(greens, c);
    greens->add_option("--x", c.x, "Distance [m]");
    greens->add_option("--T", c.T, "Time window [s]");
    greens->add_option("--n", c.n, "Number of samples (power of two >= 4096)")->capture_default_str();
    greens->add_option("--dim", c.dim, "1 or 3")->capture_default_str();
    greens->add_flag("--taper", c.taper, "Raised-cosine taper over the top 10% of the band");

    auto* verify = app.add_subcommand("verify", "Run the admissibility, K-K, minimum-phase and causality checks");
    add_common(verify, c);

    std::vector<std::string> args;
    try {
        args = merge_config(args_in);
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    if (c.format.empty()) c.format = verify->parsed() ? "json" : "csv";

    std::ofstream file;
    std::ostream* os = &out;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) {
            err << "error: cannot open '" << c.output << "' for writing\n";
            return kUsageError;
        }
        os = &file;
    }
    try {
        if (curves->parsed()) return cmd_curves(c, *os);
        if (spectrum->parsed()) return cmd_spectrum(c, *os);
        if (greens->parsed()) return cmd_greens(c, *os);
        return cmd_verify(c, *os);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "numerical error: " << e.what() << "\n";
        return kNumericalError;
    }
}

}  // namespace viscowave::cli
