// Command-line front end: one subcommand per family of checks. Exit status
// 0 when every check passes, 1 on a failed check, 2 on a usage error.

#include "bmw/br2.hpp"
#include "bmw/cellular.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace bmw;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int r = 1;
    int n = 2;
    std::string preset;
    int seed = 0;
    int alpha = 1;
    long precision = kDefaultPrecision;
    std::string format = "json";
    std::string out;
    // command specific
    bool count = false;
    int order = -1;
    int ell = 0;
    bool zero_omega = false;
};

struct Output {
    bool pass = true;
    std::string text;
};

int max_n() {
    if (const char* v = std::getenv("BMW_MAX_N")) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw UsageError("BMW_MAX_N is not an integer");
        }
    }
    return 6;
}

GroundParams<Rational> load_params(Config& cfg) {
    GenericChoice choice;
    if (!cfg.preset.empty()) {
        std::ifstream in(cfg.preset);
        if (!in) throw UsageError("cannot read preset " + cfg.preset);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            choice = parse_preset(ss.str());
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        cfg.r = static_cast<int>(choice.k.size());
        cfg.alpha = choice.alpha;
    } else {
        if (cfg.r < 1 || cfg.r % 2 == 0) throw UsageError("--r must be a positive odd integer");
        choice = generic_choice(cfg.r, cfg.n, cfg.seed, cfg.alpha);
    }
    if (cfg.n < 0 || cfg.n > max_n()) throw UsageError("--n must lie in [0, " + std::to_string(max_n()) + "]");
    return make_params(choice);
}

json params_header(const Config& cfg, const GroundParams<Rational>& p) {
    json j;
    j["r"] = p.r();
    j["n"] = cfg.n;
    j["q"] = p.q().to_string();
    j["alpha"] = p.alpha();
    json u = json::array();
    for (const auto& x : p.u()) u.push_back(x.to_string());
    j["u"] = u;
    return j;
}

json headed(const std::string& command, const Config& cfg, const GroundParams<Rational>& p) {
    json j;
    j["command"] = command;
    const json header = params_header(cfg, p);
    for (const auto& [k, v] : header.items()) j[k] = v;
    return j;
}

std::string lambda_string(const RPartition& l) { return l.to_string(); }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

json width_json(double w) { return std::isinf(w) ? json(nullptr) : json(w); }

void require_json(const Config& cfg, const std::string& command) {
    if (cfg.format != "json") throw UsageError("command " + command + " only writes json");
}

Output cmd_params(Config& cfg) {
    const auto p = load_params(cfg);
    const int r = p.r();
    const int lo = -2 * r;
    const int hi = 3 * r;
    const auto adm = check_admissible(p, -2 * r, 2 * r, 3 * r);
    Output o;
    o.pass = adm.all_pass;
    if (cfg.format == "csv") {
        std::string s = "a,omega\n";
        for (int a = lo; a <= hi; ++a) s += std::to_string(a) + "," + p.omega(a).to_string() + "\n";
        o.text = s;
        return o;
    }
    json j = headed("params", cfg, p);
    j["generic"] = is_generic(p.u(), p.q(), std::max(cfg.n, 1));
    j["delta"] = p.delta().to_string();
    j["rho"] = p.rho().to_string();
    j["omega_range"] = {lo, hi};
    json om = json::array();
    for (int a = lo; a <= hi; ++a) om.push_back(p.omega(a).to_string());
    j["omega"] = om;
    json a;
    a["b_range"] = {-2 * r, 2 * r};
    a["a_max"] = 3 * r;
    a["equations"] = adm.entries.size();
    a["pass"] = adm.all_pass;
    if (adm.first_failure) {
        a["first_failure"] = {{"family", adm.first_failure->family},
                              {"index", adm.first_failure->index},
                              {"defect", adm.first_failure->defect}};
    }
    j["admissibility"] = a;
    j["pass"] = o.pass;
    o.text = j.dump(2) + "\n";
    return o;
}

json step_json(const Step& st) { return json::array({st.sign, st.node.s, st.node.i, st.node.j}); }

Output cmd_tabs(Config& cfg) {
    if (cfg.r < 1 || cfg.r % 2 == 0) throw UsageError("--r must be a positive odd integer");
    if (cfg.n < 0 || cfg.n > max_n()) throw UsageError("--n must lie in [0, " + std::to_string(max_n()) + "]");
    const int r = cfg.r;
    const int n = cfg.n;
    long long total = 0;
    json shapes_j = json::array();
    std::string csv = "r,n,f,lambda,count\n";
    for (const Shape& sh : shapes(n, r)) {
        const auto tabs = enumerate_updown(n, sh.lambda);
        const auto c = static_cast<long long>(tabs.size());
        total += c * c;
        csv += std::to_string(r) + "," + std::to_string(n) + "," + std::to_string(sh.f) + "," +
               csv_quote(lambda_string(sh.lambda)) + "," + std::to_string(c) + "\n";
        json s;
        s["f"] = sh.f;
        s["lambda"] = lambda_string(sh.lambda);
        s["count"] = c;
        if (!cfg.count) {
            json list = json::array();
            for (const auto& t : tabs) {
                json steps = json::array();
                for (const Step& st : t.steps()) steps.push_back(step_json(st));
                list.push_back(steps);
            }
            s["tableaux"] = list;
        }
        shapes_j.push_back(s);
    }
    const long long expected = bmw_dimension(n, r);
    Output o;
    o.pass = total == expected;
    if (cfg.format == "csv") {
        o.text = csv;
        return o;
    }
    json j;
    j["command"] = "tabs";
    j["r"] = r;
    j["n"] = n;
    j["shapes"] = shapes_j;
    j["sum_count_sq"] = total;
    j["expected"] = expected;
    j["pass"] = o.pass;
    o.text = j.dump(2) + "\n";
    return o;
}

Output cmd_rep(Config& cfg) {
    const auto p = load_params(cfg);
    Output o;
    json shapes_j = json::array();
    std::string csv = "f,lambda,relation,instances,max_width_log2,pass\n";
    for (const Shape& sh : shapes(cfg.n, p.r())) {
        const auto rep = verify_shape(sh, cfg.n, p, cfg.precision);
        json s;
        s["f"] = sh.f;
        s["lambda"] = lambda_string(sh.lambda);
        s["dim"] = rep.dim;
        s["precision_bits"] = rep.precision;
        json rels = json::array();
        for (const auto& r : rep.relations) {
            json x;
            x["name"] = r.name;
            x["instances"] = r.instances;
            x["exact"] = r.exact;
            x["max_width_log2"] = width_json(r.worst_width_log2);
            x["pass"] = r.pass;
            if (!r.pass) x["detail"] = r.detail;
            rels.push_back(x);
            std::ostringstream w;
            if (std::isinf(r.worst_width_log2)) w << "-inf";
            else w << r.worst_width_log2;
            csv += std::to_string(sh.f) + "," + csv_quote(lambda_string(sh.lambda)) + "," + r.name + "," +
                   std::to_string(r.instances) + "," + w.str() + "," + (r.pass ? "true" : "false") + "\n";
        }
        s["relations"] = rels;
        s["pass"] = rep.all_pass();
        o.pass = o.pass && rep.all_pass();
        shapes_j.push_back(s);
    }
    if (cfg.format == "csv") {
        o.text = csv;
        return o;
    }
    json j = headed("rep", cfg, p);
    j["precision_bits"] = cfg.precision;
    j["shapes"] = shapes_j;
    j["pass"] = o.pass;
    o.text = j.dump(2) + "\n";
    return o;
}

Output cmd_identities(Config& cfg) {
    require_json(cfg, "identities");
    const auto p = load_params(cfg);
    Output o;
    const auto suite = identity_suite(cfg.n, p);
    json items = json::array();
    for (const auto& it : suite.items) {
        json x;
        x["name"] = it.name;
        x["instances"] = it.instances;
        x["failures"] = it.failures;
        if (it.failures > 0) x["first_failure"] = it.first_failure;
        items.push_back(x);
    }
    o.pass = suite.all_pass();
    // power identities on the ball backend
    std::map<std::string, std::pair<long, bool>> power;
    for (const Shape& sh : shapes(cfg.n, p.r())) {
        const auto rep = verify_shape(sh, cfg.n, p, cfg.precision);
        for (const auto& r : rep.relations) {
            if (r.name.rfind("power_", 0) != 0) continue;
            auto& slot = power[r.name];
            if (slot.first == 0) slot.second = true;
            slot.first += r.instances;
            slot.second = slot.second && r.pass;
        }
    }
    json pw = json::array();
    for (const auto& [name, v] : power) {
        pw.push_back({{"name", name}, {"instances", v.first}, {"pass", v.second}});
        o.pass = o.pass && v.second;
    }
    json j = headed("identities", cfg, p);
    j["exact"] = items;
    j["power_identities"] = pw;
    j["pass"] = o.pass;
    o.text = j.dump(2) + "\n";
    return o;
}

Output cmd_omega(Config& cfg) {
    require_json(cfg, "omega");
    const auto p = load_params(cfg);
    const int order = cfg.order >= 0 ? cfg.order : 4 * p.r();
    Output o;
    json shapes_j = json::array();
    std::string failure;
    for (const Shape& sh : shapes(cfg.n, p.r())) {
        json s;
        s["f"] = sh.f;
        s["lambda"] = lambda_string(sh.lambda);
        try {
            const auto tab = omega_k_table(sh, cfg.n, p, order);
            std::map<std::pair<int, RPartition>, std::vector<Rational>> classes;
            for (std::size_t si = 0; si < tab.basis.size(); ++si) {
                const auto shp = tab.basis[si].shapes();
                for (int k = 1; k <= cfg.n; ++k) {
                    const auto key = std::make_pair(k, shp[static_cast<std::size_t>(k - 1)]);
                    const auto& vals = tab.value[si][static_cast<std::size_t>(k - 1)];
                    auto it = classes.find(key);
                    if (it == classes.end()) classes.emplace(key, vals);
                    else if (it->second != vals) {
                        o.pass = false;
                        failure = "omega_k not constant on the class k=" + std::to_string(k);
                    }
                }
                for (int a = 0; a <= order; ++a)
                    if (!(tab.value[si][0][static_cast<std::size_t>(a)] == p.omega(a))) {
                        o.pass = false;
                        failure = "omega_1^(a) differs from omega_a at a=" + std::to_string(a);
                    }
            }
            json cl = json::array();
            for (const auto& [key, vals] : classes) {
                json v = json::array();
                for (const auto& x : vals) v.push_back(x.to_string());
                cl.push_back({{"k", key.first}, {"before", key.second.to_string()}, {"omega", v}});
            }
            s["classes"] = cl;
            s["pass"] = true;
        } catch (const OmegaMismatch& e) {
            s["pass"] = false;
            s["detail"] = e.what();
            o.pass = false;
        }
        shapes_j.push_back(s);
    }
    json j = headed("omega", cfg, p);
    j["order"] = order;
    j["shapes"] = shapes_j;
    if (!failure.empty()) j["detail"] = failure;
    j["pass"] = o.pass;
    o.text = j.dump(2) + "\n";
    return o;
}

Output cmd_br2(Config& cfg) {
    require_json(cfg, "br2");
    const auto p = load_params(cfg);
    const auto c = br2_census(p);
    Output o;
    o.pass = c.all_pass() && c.sum_dim_sq == static_cast<std::size_t>(3 * p.r() * p.r());
    json mods = json::array();
    for (std::size_t i = 0; i < c.modules.size(); ++i) {
        json m;
        m["label"] = c.modules[i].label;
        m["dim"] = c.modules[i].dim();
        json failed = json::array();
        long inst = 0;
        for (const auto& r : c.relations[i]) {
            inst += r.instances;
            if (!r.pass) failed.push_back({{"name", r.name}, {"detail", r.detail}});
        }
        m["relation_instances"] = inst;
        m["pass"] = failed.empty();
        if (!failed.empty()) m["failures"] = failed;
        mods.push_back(m);
    }
    json j = headed("br2", cfg, p);
    j["modules"] = mods;
    j["onedim"] = c.onedim;
    j["twodim"] = c.twodim;
    j["big"] = c.big;
    j["sum_dim_sq"] = c.sum_dim_sq;
    j["expected"] = 3 * p.r() * p.r();
    j["pass"] = o.pass;
    o.text = j.dump(2) + "\n";
    return o;
}

Output cmd_basis(Config& cfg) {
    if (cfg.r < 1 || cfg.r % 2 == 0) throw UsageError("--r must be a positive odd integer");
    if (cfg.n < 0 || cfg.n > max_n()) throw UsageError("--n must lie in [0, " + std::to_string(max_n()) + "]");
    const auto rows = basis_counts(cfg.n, cfg.r);
    long long total = 0;
    std::string csv = "f,lambda,std_tableaux,r_pow_f,cosets,delta\n";
    json rj = json::array();
    for (const auto& c : rows) {
        total += c.delta * c.delta;
        csv += std::to_string(c.shape.f) + "," + csv_quote(lambda_string(c.shape.lambda)) + "," +
               std::to_string(c.std_tableaux) + "," + std::to_string(c.r_pow_f) + "," + std::to_string(c.cosets) + "," +
               std::to_string(c.delta) + "\n";
        rj.push_back({{"f", c.shape.f},
                      {"lambda", lambda_string(c.shape.lambda)},
                      {"std_tableaux", c.std_tableaux},
                      {"r_pow_f", c.r_pow_f},
                      {"cosets", c.cosets},
                      {"delta", c.delta}});
    }
    Output o;
    o.pass = total == bmw_dimension(cfg.n, cfg.r);
    if (cfg.format == "csv") {
        o.text = csv;
        return o;
    }
    json j;
    j["command"] = "basis";
    j["r"] = cfg.r;
    j["n"] = cfg.n;
    j["rows"] = rj;
    j["total"] = total;
    j["expected"] = bmw_dimension(cfg.n, cfg.r);
    j["pass"] = o.pass;
    o.text = j.dump(2) + "\n";
    return o;
}

Output cmd_rank(Config& cfg) {
    require_json(cfg, "rank");
    const auto p = load_params(cfg);
    const auto rep = rank_certify(cfg.n, p, cfg.precision);
    Output o;
    o.pass = rep.certified;
    json j;
    j["command"] = "rank";
    j["r"] = rep.r;
    j["n"] = rep.n;
    j["D"] = rep.D;
    j["words"] = rep.words;
    j["rank_certified"] = rep.rank_certified;
    j["certified"] = rep.certified;
    j["precision_bits"] = rep.precision_bits;
    j["elapsed"] = rep.elapsed;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    j["pass"] = o.pass;
    o.text = j.dump(2) + "\n";
    return o;
}

Output cmd_gram(Config& cfg) {
    require_json(cfg, "gram");
    const auto p = load_params(cfg);
    if (cfg.n <= 0 || cfg.n % 2 != 0) throw UsageError("gram needs an even positive --n");
    if (std::abs(cfg.ell) > p.r() - 1) throw UsageError("gram needs |--ell| <= r - 1");
    std::function<Rational(int)> zero;
    if (cfg.zero_omega) zero = [](int) { return Rational(0); };
    const auto g = gram_half(cfg.n, cfg.ell, p, zero, cfg.precision);
    Output o;
    o.pass = g.cross_check_pass;
    json j = headed("gram", cfg, p);
    j["ell"] = g.ell;
    j["omega_override"] = cfg.zero_omega ? "zero" : "none";
    j["value"] = g.value.to_string();
    j["vanishes"] = g.vanishes;
    j["phi_half_zero"] = g.vanishes;
    j["cross_checked"] = g.cross_checked;
    j["cross_check_pass"] = g.cross_check_pass;
    j["pass"] = o.pass;
    o.text = j.dump(2) + "\n";
    return o;
}

Output cmd_classify(Config& cfg) {
    const auto p = load_params(cfg);
    std::function<Rational(int)> om = [&p](int a) { return p.omega(a); };
    if (cfg.zero_omega) om = [](int) { return Rational(0); };
    const auto labels = classify(cfg.n, p.r(), om);
    const auto all = shapes(cfg.n, p.r());
    Output o;
    if (cfg.format == "csv") {
        std::string s = "f,lambda\n";
        for (const auto& sh : labels) s += std::to_string(sh.f) + "," + csv_quote(lambda_string(sh.lambda)) + "\n";
        o.text = s;
        return o;
    }
    json lj = json::array();
    for (const auto& sh : labels) lj.push_back({{"f", sh.f}, {"lambda", lambda_string(sh.lambda)}});
    json ex = json::array();
    for (const auto& sh : all)
        if (std::find(labels.begin(), labels.end(), sh) == labels.end())
            ex.push_back({{"f", sh.f}, {"lambda", lambda_string(sh.lambda)}});
    json j = headed("classify", cfg, p);
    j["omega_override"] = cfg.zero_omega ? "zero" : "none";
    j["labels"] = lj;
    j["count"] = labels.size();
    j["excluded"] = ex;
    j["pass"] = true;
    o.text = j.dump(2) + "\n";
    return o;
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seminormal representations and cellular bases of cyclotomic BMW algebras"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--r", cfg.r, "number of cyclotomic parameters (odd)");
        sub->add_option("--n", cfg.n, "number of strands");
        sub->add_option("--preset", cfg.preset, "parameter preset file")->check(CLI::ExistingFile);
        sub->add_option("--seed", cfg.seed, "offset of q in the generic specialization")->check(CLI::NonNegativeNumber);
        sub->add_option("--alpha", cfg.alpha, "sign in rho^{-1} = alpha * prod u")->check(CLI::IsMember({1, -1}));
        sub->add_option("--precision", cfg.precision, "ball precision in bits")->check(CLI::Range(64L, 65536L));
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    };

    struct Cmd {
        const char* name;
        const char* help;
        Output (*run)(Config&);
    };
    const std::vector<Cmd> cmds = {
        {"params", "omega values and admissibility", cmd_params},
        {"tabs", "up-down tableaux and counts", cmd_tabs},
        {"rep", "build the seminormal modules and verify the relations", cmd_rep},
        {"identities", "exact identity suites and power identities", cmd_identities},
        {"omega", "omega_k tables, three routes", cmd_omega},
        {"br2", "two-strand irreducible modules and the 3r^2 count", cmd_br2},
        {"basis", "cellular basis index counts", cmd_basis},
        {"rank", "certified rank of the cellular words", cmd_rank},
        {"gram", "Gram value for f = n/2", cmd_gram},
        {"classify", "labels of the irreducible modules", cmd_classify},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& c : cmds) {
        auto* sub = app.add_subcommand(c.name, c.help);
        common(sub);
        subs[c.name] = sub;
    }
    subs["tabs"]->add_flag("--count", cfg.count, "counts only");
    subs["omega"]->add_option("--order", cfg.order, "series order (default 4r)")->check(CLI::NonNegativeNumber);
    subs["gram"]->add_option("--ell", cfg.ell, "exponent l");
    subs["gram"]->add_flag("--zero-omega", cfg.zero_omega, "use omega_i = 0 for every i");
    subs["classify"]->add_flag("--zero-omega", cfg.zero_omega, "use omega_i = 0 for every i");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (const auto& c : cmds) {
        if (!subs[c.name]->parsed()) continue;
        try {
            const Output o = c.run(cfg);
            emit(cfg, o.text);
            return o.pass ? 0 : 1;
        } catch (const UsageError& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return 2;
        } catch (const std::invalid_argument& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            json j;
            j["command"] = c.name;
            j["pass"] = false;
            j["error"] = e.what();
            try {
                emit(cfg, j.dump(2) + "\n");
            } catch (const std::exception&) {
                std::cout << j.dump(2) << "\n";
            }
            return 1;
        }
    }
    return 2;
}
