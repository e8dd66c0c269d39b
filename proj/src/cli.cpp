#include "qcr/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcr/contextuality.hpp"
#include "qcr/errors.hpp"
#include "qcr/nonlocal.hpp"
#include "qcr/ontic.hpp"
#include "qcr/sim.hpp"
#include "qcr/tradeoff.hpp"

namespace qcr {

namespace {

using json = nlohmann::ordered_json;

// bad flag values, unreadable files: exit code 2
struct ArgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string &s) {
    double v = 0.0;
    const char *b = s.data();
    const char *e = s.data() + s.size();
    while (b < e && *b == ' ')
        ++b;
    while (e > b && e[-1] == ' ')
        --e;
    if (b < e && *b == '+')
        ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || b == e)
        throw ArgError("not a number: '" + s + "'");
    return v;
}

std::vector<double> parse_list(const std::string &s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(item));
    if (out.empty())
        throw ArgError("empty list");
    return out;
}

Vec3 parse_vec3(const std::string &s) {
    if (s == "x" || s == "+x")
        return Vec3::UnitX();
    if (s == "y" || s == "+y")
        return Vec3::UnitY();
    if (s == "z" || s == "+z")
        return Vec3::UnitZ();
    if (s == "-x")
        return -Vec3::UnitX();
    if (s == "-y")
        return -Vec3::UnitY();
    if (s == "-z")
        return -Vec3::UnitZ();
    const auto v = parse_list(s);
    if (v.size() != 3)
        throw ArgError("expected three comma-separated components: '" + s + "'");
    return Vec3(v[0], v[1], v[2]);
}

MeasurementAxis parse_axis(const std::string &s) {
    const Vec3 v = parse_vec3(s);
    if (v.norm() == 0.0)
        throw ArgError("axis must be nonzero: '" + s + "'");
    return MeasurementAxis::from_direction(v);
}

DensityMatrix load_density(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ArgError("cannot open density file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ArgError("malformed density file: " + std::string(e.what()));
    }
    if (!j.is_array() || (j.size() != 2 && j.size() != 4))
        throw ArgError("density file must hold a 2x2 or 4x4 array");
    const int n = static_cast<int>(j.size());
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != n)
            throw ArgError("density file rows must have " + std::to_string(n) + " entries");
        for (int c = 0; c < n; ++c) {
            const auto &e = j[r][c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ArgError("density entries must be [re, im] pairs");
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return DensityMatrix(m);
}

struct StateInput {
    std::string bloch;
    std::optional<double> beta;
    std::string density;

    void add_to(CLI::App *sub) {
        auto *ob = sub->add_option("--bloch", bloch, "single-qubit Bloch vector x,y,z");
        auto *obeta = sub->add_option("--beta", beta, "family state parameter in [0, 0.5]");
        auto *od = sub->add_option("--density", density, "JSON file with a 2x2 or 4x4 [re, im] matrix");
        ob->excludes(obeta)->excludes(od);
        obeta->excludes(od);
    }

    bool any() const { return !bloch.empty() || beta || !density.empty(); }

    BlochVector single_qubit() const {
        if (!bloch.empty()) {
            BlochVector s(parse_vec3(bloch));
            if (!s.is_state())
                throw DomainError("Bloch vector has norm > 1");
            return s;
        }
        if (beta)
            return density_to_bloch(partial_trace(family_density(*beta), Subsystem::A));
        if (!density.empty()) {
            const DensityMatrix rho = load_density(density);
            return density_to_bloch(rho.dim() == 2 ? rho : partial_trace(rho, Subsystem::A));
        }
        throw ArgError("a state is required: --bloch, --beta or --density");
    }

    DensityMatrix two_qubit() const {
        if (beta)
            return family_density(*beta);
        if (!density.empty()) {
            DensityMatrix rho = load_density(density);
            if (rho.dim() != 4)
                throw ArgError("a two-qubit (4x4) density matrix is required");
            return rho;
        }
        throw ArgError("a two-qubit state is required: --beta or --density");
    }
};

class Writer {
  public:
    explicit Writer(int precision) : precision_(precision) {
    }
    json num(double v) const { return round_sig(v, precision_); }
    json vec(const Vec3 &v) const { return json::array({num(v.x()), num(v.y()), num(v.z())}); }
    std::string csv(double v) const {
        char buf[64];
        auto r = std::to_chars(buf, buf + sizeof buf, round_sig(v, precision_), std::chars_format::general,
                               precision_);
        return std::string(buf, r.ptr);
    }

  private:
    int precision_;
};

json verdict_json(const Writer &w, const std::string &name, const BlochVector &s, const Verdict &v) {
    json j;
    j["criterion"] = name;
    j["state"] = w.vec(s.vec());
    j["witness"] = w.num(v.witness);
    j["threshold"] = w.num(v.threshold);
    j["verdict"] = to_string(v.tag);
    return j;
}

json df_json(const Writer &w, const BlochVector &s) {
    const double d = probability_difference_indicator(s);
    json j;
    j["criterion"] = "df";
    j["state"] = w.vec(s.vec());
    j["D_f"] = w.num(d);
    j["verdict"] = to_string(d > 0.0 ? VerdictTag::Contextual : VerdictTag::Noncontextual);
    return j;
}

void emit(std::ostream &out, const json &j) {
    out << j.dump(2) << "\n";
}

}  // namespace

double round_sig(double v, int digits) {
    if (!std::isfinite(v) || v == 0.0)
        return v;
    digits = std::clamp(digits, 1, 17);
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, digits - 1);
    double out = v;
    std::from_chars(buf, r.ptr, out);
    return out;
}

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Preparation contextuality, entanglement and Bell nonlocality toolkit", "qcr"};
    app.require_subcommand(1);
    app.fallthrough();
    int precision = 6;
    app.add_option("--precision", precision, "significant digits in numeric output")
        ->check(CLI::Range(1, 17));

    // criterion
    auto *crit = app.add_subcommand("criterion", "evaluate a contextuality criterion on a qubit state");
    StateInput crit_state;
    crit_state.add_to(crit);
    std::string crit_kind = "faithful";
    crit->add_option("--kind", crit_kind, "faithful|expectation|sufficient|joint|df|all")
        ->check(CLI::IsMember({"faithful", "expectation", "sufficient", "joint", "df", "all"}));
    std::string crit_a1 = "x", crit_a2 = "z";
    crit->add_option("--axis1", crit_a1, "first axis for sufficient/joint (default x)");
    crit->add_option("--axis2", crit_a2, "second axis for sufficient/joint (default z)");

    // set
    auto *set = app.add_subcommand("set", "build a four-state set");
    StateInput set_state;
    set_state.add_to(set);
    std::string set_sym = "b2";
    set->add_option("--symmetry", set_sym, "b2|a1sq")->check(CLI::IsMember({"b2", "a1sq"}));
    std::string set_a1 = "x", set_a2 = "z", set_r;
    set->add_option("--axis1", set_a1, "M1' for a1sq (default x)");
    set->add_option("--axis2", set_a2, "M2' for a1sq (default z)");
    set->add_option("--r", set_r, "complementary axis R for b2 (default: canonical)");

    // ontic
    auto *ontic = app.add_subcommand("ontic", "noncontextual ontic model for <M1> = m");
    StateInput ontic_state;
    ontic_state.add_to(ontic);
    std::optional<double> ontic_m;
    auto *om = ontic->add_option("--m", ontic_m, "<M1> in [0, sqrt2/2]");
    std::string ontic_method = "lp";
    ontic->add_option("--method", ontic_method, "lp|grid")->check(CLI::IsMember({"lp", "grid"}));
    double ontic_step = 1e-3;
    ontic->add_option("--grid-step", ontic_step, "grid step for --method grid");
    om->excludes(ontic->get_option("--bloch"))->excludes(ontic->get_option("--beta"))->excludes(
        ontic->get_option("--density"));

    // chsh
    auto *chsh = app.add_subcommand("chsh", "maximal CHSH value and optimal settings");
    StateInput chsh_state;
    chsh_state.add_to(chsh);

    // eur-bound
    auto *eur = app.add_subcommand("eur-bound", "memory-assisted uncertainty bound on S(A|B)");
    StateInput eur_state;
    eur_state.add_to(eur);
    std::string eur_q, eur_r, eur_mbp = "z", eur_mb = "x";
    eur->add_option("--q", eur_q, "Alice axis Q");
    eur->add_option("--r", eur_r, "Alice axis R");
    eur->add_option("--mbp", eur_mbp, "Bob axis paired with Q (default z)");
    eur->add_option("--mb", eur_mb, "Bob axis paired with R (default x)");
    bool eur_opt = false;
    eur->add_flag("--optimize", eur_opt, "also minimize over Bob's axes");

    // tradeoff
    auto *trade = app.add_subcommand("tradeoff", "trade-off quantities of a two-qubit state");
    StateInput trade_state;
    trade_state.add_to(trade);

    // sweep
    auto *sw = app.add_subcommand("sweep", "tabulate the family over beta");
    std::string sw_betas = "default13", sw_format = "csv";
    sw->add_option("--betas", sw_betas, "comma list or default13");
    sw->add_option("--format", sw_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // simulate
    auto *sim = app.add_subcommand("simulate", "shot-based replica of the experiment");
    double sim_beta = 0.0;
    sim->add_option("--beta", sim_beta, "family state parameter")->required();
    ExperimentConfig cfg;
    sim->add_option("--shots", cfg.shots, "shots per setting")->check(CLI::PositiveNumber);
    sim->add_option("--repeats", cfg.repeats, "independent repeats")->check(CLI::PositiveNumber);
    sim->add_option("--seed", cfg.seed, "master seed");
    sim->add_option("--p-depol", cfg.noise.p_depol, "depolarizing probability per qubit")
        ->check(CLI::Range(0.0, 1.0));
    std::string sim_mode = "ent", sim_readout, sim_format = "csv";
    sim->add_option("--mode", sim_mode, "ent|bell")->check(CLI::IsMember({"ent", "bell"}));
    sim->add_option("--readout", sim_readout, "f0A,f1A,f0B,f1B");
    sim->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sim->add_option("--format", sim_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // region
    auto *reg = app.add_subcommand("region", "classify a point (H(Q), H(R))");
    double reg_hq = 0, reg_hr = 0;
    reg->add_option("--hq", reg_hq, "H(Q) in bits")->required();
    reg->add_option("--hr", reg_hr, "H(R) in bits")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::Success &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const Writer w(precision);
    try {
        if (crit->parsed()) {
            const BlochVector s = crit_state.single_qubit();
            auto a1 = [&] { return parse_axis(crit_a1); };
            auto a2 = [&] { return parse_axis(crit_a2); };
            json j;
            if (crit_kind == "faithful")
                j = verdict_json(w, "faithful", s, faithful_criterion(s));
            else if (crit_kind == "expectation")
                j = verdict_json(w, "expectation", s, expectation_criterion(s));
            else if (crit_kind == "sufficient")
                j = verdict_json(w, "sufficient", s, sufficient_criterion(s, a1(), a2()));
            else if (crit_kind == "joint")
                j = verdict_json(w, "joint", s, joint_predictability(s, a1(), a2()));
            else if (crit_kind == "df")
                j = df_json(w, s);
            else {
                j["state"] = w.vec(s.vec());
                j["faithful"] = verdict_json(w, "faithful", s, faithful_criterion(s));
                j["expectation"] = verdict_json(w, "expectation", s, expectation_criterion(s));
                j["sufficient"] = verdict_json(w, "sufficient", s, sufficient_criterion(s, a1(), a2()));
                j["joint"] = verdict_json(w, "joint", s, joint_predictability(s, a1(), a2()));
                j["df"] = df_json(w, s);
            }
            emit(out, j);
        } else if (set->parsed()) {
            const BlochVector s = set_state.single_qubit();
            FourStateSet fs = set_sym == "a1sq" ? a1sq_orbit_set(s, parse_axis(set_a1), parse_axis(set_a2))
                              : set_r.empty()   ? b2_orbit_set(s)
                                                : b2_orbit_set(s, parse_axis(set_r));
            json j;
            j["symmetry"] = to_string(fs.symmetry);
            j["states"] = json::array();
            for (const auto &st : fs.states)
                j["states"].push_back(w.vec(st.vec()));
            j["axis1"] = w.vec(fs.axis1.vec());
            j["axis2"] = w.vec(fs.axis2.vec());
            emit(out, j);
        } else if (ontic->parsed()) {
            double m = 0.0;
            if (ontic_m)
                m = *ontic_m;
            else if (ontic_state.any())
                m = expectation_criterion(ontic_state.single_qubit()).witness;
            else
                throw ArgError("ontic needs --m or a state");
            const bool feasible =
                feasibility_oracle(m, ontic_method == "grid" ? OracleMethod::Grid : OracleMethod::LP, ontic_step);
            json j;
            j["m"] = w.num(m);
            j["feasible"] = feasible;
            const auto model = construct_model(m);
            if (model) {
                json mj;
                json mus = json::array();
                for (const auto &mu : model->mu)
                    mus.push_back(json::array({w.num(mu[0]), w.num(mu[1]), w.num(mu[2]), w.num(mu[3])}));
                mj["mu"] = mus;
                for (auto [k, v] : {std::pair{"a", model->a}, {"b", model->b}, {"c", model->c}, {"d", model->d},
                                    {"kappa", model->kappa}, {"nu", model->nu}, {"tau", model->tau}})
                    mj[k] = w.num(v);
                j["model"] = mj;
                const ModelReport rep = verify_model(*model, m);
                j["report"] = {{"valid_distributions", rep.valid_distributions},
                               {"equal_predictability", rep.equal_predictability},
                               {"preparation_equivalence", rep.preparation_equivalence}};
            } else {
                j["model"] = nullptr;
                j["report"] = nullptr;
            }
            emit(out, j);
        } else if (chsh->parsed()) {
            const DensityMatrix rho = chsh_state.two_qubit();
            const CorrelationMatrix T = correlation_matrix(rho);
            const double M = horodecki_parameter(T);
            json j;
            j["M"] = w.num(M);
            j["chsh_max"] = w.num(chsh_max(rho));
            if (M > 1e-12) {
                const CHSHSetting s = optimal_settings(rho);
                j["settings"] = {{"A0", w.vec(s.A0.vec())},
                                 {"A1", w.vec(s.A1.vec())},
                                 {"B0", w.vec(s.B0.vec())},
                                 {"B1", w.vec(s.B1.vec())}};
                j["value"] = w.num(chsh_value(rho, s));
            } else {
                j["settings"] = nullptr;
                j["value"] = w.num(0.0);
            }
            emit(out, j);
        } else if (eur->parsed()) {
            const DensityMatrix rho = eur_state.two_qubit();
            MeasurementAxis Q = family_Q(), R = family_R();
            if (!eur_state.beta) {
                const OptimalFrame f = optimal_frame(density_to_bloch(partial_trace(rho, Subsystem::A)));
                Q = f.Q;
                R = f.R;
            }
            if (!eur_q.empty())
                Q = parse_axis(eur_q);
            if (!eur_r.empty())
                R = parse_axis(eur_r);
            const MeasurementAxis MBp = parse_axis(eur_mbp), MB = parse_axis(eur_mb);
            json j;
            j["bound"] = w.num(eur_memory_bound(rho, Q, R, MBp, MB));
            j["S_AB"] = w.num(conditional_entropy(rho));
            j["Q"] = w.vec(Q.vec());
            j["R"] = w.vec(R.vec());
            j["MBp"] = w.vec(MBp.vec());
            j["MB"] = w.vec(MB.vec());
            if (eur_opt) {
                const MemoryMeasurementPair p = optimize_memory_measurements(rho, Q, R);
                j["optimized"] = {{"bound", w.num(p.bound)}, {"MBp", w.vec(p.MBp.vec())}, {"MB", w.vec(p.MB.vec())}};
            }
            emit(out, j);
        } else if (trade->parsed()) {
            const DensityMatrix rho = trade_state.two_qubit();
            json j;
            j["H_QR"] = w.num(h_qr(rho));
            j["S_AB"] = w.num(conditional_entropy(rho));
            j["chsh_max"] = w.num(chsh_max(rho));
            j["t2"] = w.num(theorem2_value(rho));
            j["t3"] = w.num(theorem3_value(rho));
            emit(out, j);
        } else if (sw->parsed()) {
            const std::vector<double> betas = sw_betas == "default13" ? default_betas() : parse_list(sw_betas);
            const auto rows = sweep(betas);
            if (sw_format == "json") {
                json arr = json::array();
                for (const auto &r : rows)
                    arr.push_back({{"beta", w.num(r.beta)},
                                   {"H_QR", w.num(r.H_QR)},
                                   {"S_AB_bound", w.num(r.S_AB_bound)},
                                   {"chsh_max", w.num(r.chsh_max)},
                                   {"t2", w.num(r.t2)},
                                   {"t3", w.num(r.t3)}});
                emit(out, arr);
            } else {
                out << "beta,H_QR,S_AB_bound,chsh_max,t2,t3\n";
                for (const auto &r : rows)
                    out << w.csv(r.beta) << ',' << w.csv(r.H_QR) << ',' << w.csv(r.S_AB_bound) << ','
                        << w.csv(r.chsh_max) << ',' << w.csv(r.t2) << ',' << w.csv(r.t3) << "\n";
            }
        } else if (sim->parsed()) {
            if (!sim_readout.empty()) {
                const auto f = parse_list(sim_readout);
                if (f.size() != 4)
                    throw ArgError("--readout needs f0A,f1A,f0B,f1B");
                cfg.readout_a = {f[0], f[1]};
                cfg.readout_b = {f[2], f[3]};
            }
            const Mode mode = sim_mode == "bell" ? Mode::Bell : Mode::Entanglement;
            const ExperimentResult res = run_experiment(sim_beta, cfg, mode);
            const std::string second = mode == Mode::Bell ? "chsh" : "S_AB_bound";
            const Estimate &e2 = mode == Mode::Bell ? res.chsh : res.bound;
            const std::vector<std::pair<std::string, const Estimate *>> cols = {
                {"H_QR", &res.H_QR}, {second, &e2}, {"D_f", &res.D_f}};
            if (sim_format == "json") {
                json j;
                j["beta"] = w.num(res.beta);
                j["mode"] = sim_mode;
                j["shots"] = cfg.shots;
                j["repeats"] = cfg.repeats;
                j["seed"] = cfg.seed;
                for (const auto &[name, e] : cols)
                    j[name] = {{"mean", w.num(e->mean)}, {"se", w.num(e->se)}, {"reference", w.num(e->reference)}};
                emit(out, j);
            } else {
                out << "beta";
                for (const auto &c : cols)
                    out << ',' << c.first << ',' << c.first << "_se," << c.first << "_ref";
                out << "\n" << w.csv(res.beta);
                for (const auto &c : cols)
                    out << ',' << w.csv(c.second->mean) << ',' << w.csv(c.second->se) << ','
                        << w.csv(c.second->reference);
                out << "\n";
            }
        } else if (reg->parsed()) {
            const RegionLabel label = classify_region(reg_hq, reg_hr);
            json j;
            j["hQ"] = w.num(reg_hq);
            j["hR"] = w.num(reg_hr);
            j["x"] = w.num(1.0 - 2.0 * inverse_binary_entropy(reg_hq));
            j["y"] = w.num(1.0 - 2.0 * inverse_binary_entropy(reg_hr));
            j["label"] = to_string(label);
            emit(out, j);
        }
    } catch (const ArgError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const DataQualityError &e) {
        err << "data error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qcr
