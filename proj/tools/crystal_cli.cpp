#include <CLI11.hpp>

#include <crystal/crystal.hpp>

#include <iostream>
#include <random>

using namespace crystal;
using io::json;

namespace {

struct VerificationFailure : std::runtime_error {
    json detail;
    VerificationFailure(const std::string& what, json d) : std::runtime_error(what), detail(std::move(d)) {}
};

struct Options {
    std::string format = "text";
    bool trace = false;
    int jobs = 1;
    unsigned seed = 20240601;
    bool timing = false;
};

Options opt;

void emit(const json& j, const std::string& text) {
    if (opt.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string tableau_text(const Tableau& t) {
    std::string s;
    for (auto& r : t.rows) {
        for (size_t k = 0; k < r.size(); ++k) s += (k ? " " : "") + std::to_string(r[k]);
        s += "\n";
    }
    return s;
}

// columns read bottom to top, separated by '|'
std::string columns_text(const Tableau& t) {
    std::string s;
    auto cols = t.columns();
    for (size_t k = 0; k < cols.size(); ++k) {
        if (k) s += "|";
        for (auto it = cols[k].rbegin(); it != cols[k].rend(); ++it) s += std::to_string(*it) + (cols[k].size() > 1 && *it >= 10 ? "," : "");
    }
    return s;
}

std::string path_text(const Path& p) {
    std::string s;
    for (int k = p.length() - 1; k >= 0; --k) {
        if (k != p.length() - 1) s += " (x) ";
        s += columns_text(p.b[k]);
    }
    return s;
}

std::string ints_text(const std::vector<int>& v) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::string rc_text(const RC& rc, const Rects& Rt, int levels) {
    std::string out;
    auto nu = rc.parts();
    for (int k = 1; k <= levels; ++k) {
        if (k > 1) out += " ; ";
        bool first = true;
        for (auto& s : rc.level(k)) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(vacancy(nu, Rt, k, s.len)) + "|" + std::to_string(s.len) + "|" + std::to_string(s.rig);
        }
    }
    return out;
}

struct LRInput {
    Tableau t;
    Rects R;
    Partition lambda;
};

LRInput load_lr(const std::string& arg) {
    json j = io::load_json_arg(arg);
    LRInput in{io::tableau_from_json(j.at("tableau")), io::rects_from_json(j.at("R")), {}};
    if (j.contains("lambda")) in.lambda = j["lambda"].get<Partition>();
    else in.lambda = in.t.shape();
    if (in.t.shape() != trim(in.lambda)) throw std::invalid_argument("tableau shape differs from lambda");
    if (!is_lr_tableau(in.t, in.R)) throw std::invalid_argument("tableau is not an LR tableau for the given R");
    return in;
}

VTag load_tag(const std::string& type, int n) { return parse_vtag(type, n); }

// ---- commands ----

int cmd_insert(const std::string& word, int n) {
    Word w = io::parse_ints(word);
    for (int x : w)
        if (x < 1 || (n > 0 && x > n)) throw std::invalid_argument("letter " + std::to_string(x) + " out of range");
    Tableau p = insert(w);
    json cols = json::array();
    for (auto& c : p.columns()) cols.push_back(c);
    emit({{"rows", io::to_json(p)}, {"columns", cols}}, columns_text(p) + "\n");
    return 0;
}

int cmd_rmatrix(const std::string& path_arg, const std::string& left, const std::string& right, int n) {
    Path p;
    if (path_arg.empty()) {
        if (left.empty() || right.empty() || n < 1) throw std::invalid_argument("give --path, or --left, --right and --n");
        Column l = io::parse_ints(left), r = io::parse_ints(right);
        std::sort(l.begin(), l.end());
        std::sort(r.begin(), r.end());
        Rect rl{static_cast<int>(l.size()), 1}, rr{static_cast<int>(r.size()), 1};
        p = make_pair(n, Tableau::from_columns({l}), rl, Tableau::from_columns({r}), rr);
    } else {
        p = io::path_from_json(io::load_json_arg(path_arg));
    }
    if (p.length() != 2) throw std::invalid_argument("the R-matrix acts on two factors");
    Path s = rmatrix(p);
    json out{{"input", io::to_json(p)}, {"output", io::to_json(s)}, {"local_energy", local_energy(p)}};
    std::string text = path_text(p) + "  ->  " + path_text(s) + "\nH = " + std::to_string(local_energy(p)) + "\n";
    if (p.R[0].s == 1 && p.R[1].s == 1) {
        auto [nl, nr] = rmatrix_single_column(p.b[1].columns()[0], p.b[0].columns()[0]);
        bool agree = s.b[1].columns()[0] == nl && s.b[0].columns()[0] == nr;
        out["single_column"] = {{"left", nl}, {"right", nr}, {"agrees", agree}};
        if (!agree) throw VerificationFailure("single column algorithm disagrees with the R-matrix", out);
    }
    emit(out, text);
    return 0;
}

int cmd_energy(const std::string& path_arg) {
    Path p = io::path_from_json(io::load_json_arg(path_arg));
    json H = json::array();
    for (int k = 1; k < p.length(); ++k) H.push_back(H_k(p, k));
    int E = energy_E(p), D = intrinsic_D(p);
    emit({{"path", io::to_json(p)}, {"E", E}, {"D", D}, {"H", H}},
         "E = " + std::to_string(E) + "\nD = " + std::to_string(D) + "\n");
    return 0;
}

int cmd_onedim(int n, const std::string& R, const std::string& lambda, bool kostka_mode) {
    Rects rs = io::parse_rects(R);
    Partition lam = trim(io::parse_ints(lambda));
    QLaurent x = kostka_mode ? kostka(n, lam, rs) : onedim_sum(n, rs, lam);
    emit({{kostka_mode ? "K" : "X", io::to_json(x)}}, x.str() + "\n");
    return 0;
}

int cmd_rc_to(const std::string& lr_arg, const std::string& path_arg, bool trace, const std::vector<int>& steps) {
    std::vector<TraceStep> tr;
    RC rc;
    Rects Rlr;
    json out;
    if (!path_arg.empty()) {
        Path p = io::path_from_json(io::load_json_arg(path_arg));
        if (!is_highest(p)) throw std::invalid_argument("path is not of highest weight");
        Tableau t = path_to_lr(p);
        Rlr = transpose(p.R);
        rc = phi_bar_lr(t, Rlr, trace ? &tr : nullptr);
        out["lr"] = io::to_json(t);
    } else {
        auto in = load_lr(lr_arg);
        Rlr = in.R;
        rc = phi_bar_lr(in.t, Rlr, trace ? &tr : nullptr);
    }
    Rects Rt = transpose(Rlr);
    int levels = rc.levels();
    for (auto& st : tr) levels = std::max(levels, st.rc.levels());
    out["R"] = io::to_json(Rlr);
    out["rc"] = io::to_json(rc, &Rt, levels);
    out["cocharge"] = cocharge(rc);
    std::string text;
    if (trace) {
        out["trace"] = io::trace_to_json(tr);
        json kept = json::array();
        for (auto& st : tr) {
            if (!steps.empty() && std::find(steps.begin(), steps.end(), st.x) == steps.end()) continue;
            text += std::to_string(st.x) + "\t" + rc_text(st.rc, st.Rt, levels) + "\n";
        }
        if (!steps.empty()) {
            json all = out["trace"];
            for (auto& j : all)
                if (std::find(steps.begin(), steps.end(), j["x"].get<int>()) != steps.end()) kept.push_back(j);
            out["trace"] = kept;
        }
    } else {
        text = rc_text(rc, Rt, levels) + "\n";
    }
    emit(out, text);
    return 0;
}

int cmd_rc_from(const std::string& rc_arg) {
    json j = io::load_json_arg(rc_arg);
    RC rc = io::rc_from_json(j.at("rc"));
    Rects Rlr = io::rects_from_json(j.at("R"));
    Partition lam = j.at("lambda").get<Partition>();
    Tableau t = phi_bar_lr_inverse(rc, Rlr, lam);
    json out{{"lr", io::to_json(t)}};
    std::string text = tableau_text(t);
    if (j.contains("n")) {
        Path p = lr_to_path(t, Rlr, j["n"].get<int>());
        out["path"] = io::to_json(p);
        text += path_text(p) + "\n";
    }
    emit(out, text);
    return 0;
}

int cmd_rc_dual(const std::string& lr_arg, int n) {
    auto in = load_lr(lr_arg);
    if (n < 1) throw std::invalid_argument("--n is required");
    auto [tw, Rw] = wedge_lr(in.t, in.R, n);
    RC a = phi_bar_lr(tw, Rw), b = wedge_rc(phi_bar_lr(in.t, in.R), n);
    Rects Rt = transpose(Rw);
    json out{{"lr", io::to_json(tw)}, {"R", io::to_json(Rw)}, {"rc", io::to_json(a, &Rt)}, {"square_commutes", a == b}};
    if (a != b) throw VerificationFailure("wedge does not commute with the bijection", out);
    emit(out, tableau_text(tw) + rc_text(a, Rt, a.levels()) + "\n");
    return 0;
}

int cmd_rc_comp(const std::string& rc_arg) {
    json j = io::load_json_arg(rc_arg);
    RC rc = io::rc_from_json(j.at("rc"));
    Rects Rt = transpose(io::rects_from_json(j.at("R")));
    RC c = comp(rc, Rt);
    emit({{"rc", io::to_json(c, &Rt)}, {"cocharge", cocharge(c)}}, rc_text(c, Rt, c.levels()) + "\n");
    return 0;
}

int cmd_charge(const std::string& lr_arg) {
    auto in = load_lr(lr_arg);
    int ce = charge_energy(in.t, in.R), cd = charge_direct(in.t, in.R);
    int cc = cocharge(phi_tilde_lr(in.t, in.R));
    json out{{"charge", cd}, {"charge_energy", ce}, {"cc_phi_tilde", cc}};
    if (ce != cd || cd != cc) throw VerificationFailure("charge statistics disagree", out);
    emit(out, "charge = " + std::to_string(cd) + "\n");
    return 0;
}

json vgraph_json(const VTag& t, const std::vector<Path>& V) {
    std::map<Path, size_t> idx;
    for (size_t k = 0; k < V.size(); ++k) idx[V[k]] = k;
    json nodes = json::array(), edges = json::array();
    for (size_t k = 0; k < V.size(); ++k) {
        json tabs = json::array();
        for (int f = V[k].length() - 1; f >= 0; --f) tabs.push_back(io::to_json(V[k].b[f]));
        nodes.push_back({{"id", k}, {"tableaux", tabs}, {"weight", virtual_weight(t, V[k])}, {"D_x2", virtual_D2x(t, V[k])}});
        for (int i = 0; i <= t.n; ++i)
            if (auto y = virtual_f(t, i, V[k])) edges.push_back({{"from", k}, {"to", idx.at(*y)}, {"i", i}});
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

int cmd_virtual_generate(const VTag& t, int r, int s, const std::string& out_file) {
    auto V = generate_V(t, r, s);
    json g{{"tag", t.name()}, {"n", t.n}, {"r", r}, {"s", s}, {"ambient", io::to_json(ambient_rects(t, r, s))}};
    json body = vgraph_json(t, V);
    g["nodes"] = body["nodes"];
    g["edges"] = body["edges"];
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw std::invalid_argument("cannot write '" + out_file + "'");
        f << g.dump(2) << "\n";
    }
    std::string text = t.name() + " n=" + std::to_string(t.n) + " V^{" + std::to_string(r) + "," + std::to_string(s) +
                       "}: " + std::to_string(V.size()) + " elements, " + std::to_string(g["edges"].size()) + " edges\n";
    if (opt.format == "json" && !out_file.empty())
        emit({{"nodes", V.size()}, {"edges", g["edges"].size()}, {"out", out_file}}, text);
    else emit(g, text);
    return 0;
}

int cmd_virtual_member(const VTag& t, int r, int s, const std::string& path_arg, int samples) {
    if (!path_arg.empty()) {
        Path p = io::path_from_json(io::load_json_arg(path_arg));
        check_ambient(t, p);
        bool m = member_V(t, r, s, p);
        bool al = is_aligned(t, p);
        emit({{"member", m}, {"aligned", al}},
             std::string("member = ") + (m ? "true" : "false") + "\naligned = " + (al ? "true" : "false") + "\n");
        return 0;
    }
    if (samples < 1) throw std::invalid_argument("give --path or --samples");
    // random ambient elements, predicate against generation
    auto V = generate_V(t, r, s);
    std::set<Path> gen(V.begin(), V.end());
    std::vector<Path> all;
    for_each_path(t.N(), ambient_rects(t, r, s), [&](const Path& p) { all.push_back(p); });
    std::mt19937 rng(opt.seed);
    int agree = 0;
    for (int k = 0; k < samples; ++k) {
        const Path& p = all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
        bool m = member_V(t, r, s, p);
        if (m != (gen.count(p) > 0))
            throw VerificationFailure("membership predicate disagrees with generation",
                                      {{"element", io::to_json(p)}, {"predicate", m}});
        ++agree;
    }
    emit({{"samples", samples}, {"seed", opt.seed}, {"agree", agree}},
         std::to_string(agree) + "/" + std::to_string(samples) + " samples agree\n");
    return 0;
}

json components_json(const std::vector<VComponent>& cs) {
    json a = json::array();
    for (auto& c : cs) a.push_back({{"weight", c.weight}, {"D_x2", c.D2x}});
    return a;
}

int cmd_virtual_decompose(const VTag& t, int r, int s) {
    auto got = decompose(t, r, s), want = expected_decomposition(t, r, s);
    json out{{"tag", t.name()}, {"n", t.n}, {"r", r}, {"s", s}, {"components", components_json(got)},
             {"expected", components_json(want)}, {"match", got == want}};
    if (got != want) throw VerificationFailure("decomposition differs from the prescribed one", out);
    std::string text;
    for (auto& c : got) text += "(" + ints_text(c.weight) + ")  D = " + std::to_string(c.D2x) + "/2\n";
    emit(out, text);
    return 0;
}

int cmd_fermionic_m(const VTag& t, const std::string& R, const std::string& weight) {
    VRects rs = io::to_vrects(io::parse_rects(R));
    auto w = io::parse_ints(weight);
    if (static_cast<int>(w.size()) != t.n) throw std::invalid_argument("--Lambda needs n coordinates");
    json out{{"tag", t.name()}, {"n", t.n}, {"R", io::to_json(rs)}, {"Lambda", w}};
    QLaurent m;
    if (t.type == VType::A2D) {
        m = M_Atd(t.n, w, rs);
        out["m_atd"] = io::to_json(m);
    } else {
        m = M_sum(t, w, rs);
        QLaurent m2 = M_mform(t, w, rs);
        out["m_sum"] = io::to_json(m);
        out["m_mform"] = io::to_json(m2);
        if (m != m2) throw VerificationFailure("configuration sum and {m} form disagree", out);
    }
    emit(out, m.str() + "\n");
    return 0;
}

int cmd_verify_xm(const VTag& t, const std::string& R, const std::string& weight) {
    VRects rs = io::to_vrects(io::parse_rects(R));
    for (auto& x : rs)
        if (x.r > t.n) throw std::invalid_argument("column height exceeds n");
    std::optional<std::vector<int>> only;
    if (!weight.empty()) {
        only = io::parse_ints(weight);
        if (static_cast<int>(only->size()) != t.n) throw std::invalid_argument("--Lambda needs n coordinates");
    }
    auto rep = verify_XM(t, rs, only, opt.jobs);
    json out = io::to_json(rep, opt.timing);
    std::string text;
    for (auto& r : rep.rows)
        text += "(" + ints_text(r.weight) + ")  " + r.m.str() + (r.ok() ? "" : "   MISMATCH") + "\n";
    text += std::string("verdict: ") + out["verdict"].get<std::string>() + "\n";
    if (!rep.ok()) throw VerificationFailure("X = M failed", out);
    emit(out, text);
    return 0;
}

int cmd_graph(int n, const std::string& R, const std::string& out_file) {
    auto g = affine_graph(n, io::parse_rects(R), max_nodes());
    json nodes = json::array(), edges = json::array();
    for (size_t k = 0; k < g.nodes.size(); ++k) nodes.push_back({{"id", k}, {"element", io::to_json(g.nodes[k])}});
    for (auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.label}});
    json j{{"n", n}, {"R", io::to_json(io::parse_rects(R))}, {"nodes", nodes}, {"edges", edges}};
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw std::invalid_argument("cannot write '" + out_file + "'");
        f << j.dump(2) << "\n";
    }
    emit(out_file.empty() ? j : json{{"nodes", g.nodes.size()}, {"edges", g.edges.size()}, {"out", out_file}},
         std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.edges.size()) + " edges\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystal: affine crystals, rigged configurations, virtual crystals and fermionic formulas"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", opt.jobs, "worker threads for verify-xm")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for sampled checks");
    app.add_flag("--timing", opt.timing, "include runtime_ms in reports");

    std::string steps, word, path, left, right, R, lambda, lr, rc, out, type, weight;
    int n = 0, r = 1, s = 1, samples = 0;

    auto* ins = app.add_subcommand("insert", "Schensted insertion of a word");
    ins->add_option("--word", word, "comma separated letters")->required();
    ins->add_option("--n", n, "alphabet size");

    auto* rm = app.add_subcommand("rmatrix", "combinatorial R-matrix on two factors");
    rm->add_option("--path", path, "path JSON (file or literal)");
    rm->add_option("--left", left, "left column letters");
    rm->add_option("--right", right, "right column letters");
    rm->add_option("--n", n, "alphabet size");

    auto* en = app.add_subcommand("energy", "energy of a tensor product element");
    en->add_option("--path", path, "path JSON (file or literal)")->required();

    auto* od = app.add_subcommand("onedim", "one dimensional sum X");
    auto* ko = app.add_subcommand("kostka", "generalized Kostka polynomial");
    for (auto* c : {od, ko}) {
        c->add_option("--n", n)->required();
        c->add_option("--R", R, "rectangles, e.g. \"2x1,1x3\"")->required();
        c->add_option("--lambda", lambda, "partition")->required();
    }

    auto* rcc = app.add_subcommand("rc", "rigged configurations");
    rcc->require_subcommand(1);
    auto* rc_to = rcc->add_subcommand("to", "LR tableau or path to rigged configuration");
    auto* rc_tr = rcc->add_subcommand("trace", "same as 'to --trace'");
    for (auto* c : {rc_to, rc_tr}) {
        c->add_option("--lr", lr, "LR JSON {tableau, R, lambda}");
        c->add_option("--path", path, "highest weight path JSON");
        c->add_option("--steps", steps, "only these steps of the trace, e.g. \"6,7,9\"");
    }
    rc_to->add_flag("--trace", opt.trace, "dump intermediate configurations");
    auto* rc_from = rcc->add_subcommand("from", "rigged configuration to LR tableau");
    rc_from->add_option("--rc", rc, "JSON {rc, R, lambda[, n]}")->required();
    auto* rc_dual = rcc->add_subcommand("dual", "wedge duality");
    rc_dual->add_option("--lr", lr)->required();
    rc_dual->add_option("--n", n)->required();
    auto* rc_comp = rcc->add_subcommand("comp", "complement riggings");
    rc_comp->add_option("--rc", rc, "JSON {rc, R}")->required();

    auto* ch = app.add_subcommand("charge", "charge of an LR tableau");
    ch->add_option("--lr", lr)->required();

    auto* vir = app.add_subcommand("virtual", "virtual crystals");
    vir->require_subcommand(1);
    auto* vgen = vir->add_subcommand("generate", "generate V^{r,s}");
    auto* vmem = vir->add_subcommand("member", "membership test");
    auto* vdec = vir->add_subcommand("decompose", "classical decomposition and energies");
    for (auto* c : {vgen, vmem, vdec}) {
        c->add_option("--type", type, "D2, A2, A2D or C1")->required();
        c->add_option("--n", n)->required();
        c->add_option("--r", r)->required();
        c->add_option("--s", s);
    }
    vgen->add_option("--out", out, "write the graph JSON here");
    vmem->add_option("--path", path, "ambient element JSON");
    vmem->add_option("--samples", samples, "sample random ambient elements instead");

    auto* fer = app.add_subcommand("fermionic", "fermionic formulas");
    fer->require_subcommand(1);
    auto* fm = fer->add_subcommand("m", "fermionic sum M");
    auto* fx = fer->add_subcommand("verify-xm", "three-way X = M check");
    for (auto* c : {fm, fx}) {
        c->add_option("--type", type)->required();
        c->add_option("--n", n)->required();
        c->add_option("--R", R, "columns, e.g. \"1,1\" or rectangles \"2x1\"")->required();
    }
    fm->add_option("--Lambda,--weight", weight, "fundamental weight coordinates")->required();
    fx->add_option("--Lambda,--weight", weight, "restrict to one weight");

    auto* gr = app.add_subcommand("graph", "affine type A crystal graph of B_R");
    gr->add_option("--n", n)->required();
    gr->add_option("--R", R)->required();
    gr->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*ins) return cmd_insert(word, n);
        if (*rm) return cmd_rmatrix(path, left, right, n);
        if (*en) return cmd_energy(path);
        if (*od) return cmd_onedim(n, R, lambda, false);
        if (*ko) return cmd_onedim(n, R, lambda, true);
        if (*rc_to || *rc_tr) {
            if (lr.empty() == path.empty()) throw std::invalid_argument("give exactly one of --lr, --path");
            return cmd_rc_to(lr, path, opt.trace || *rc_tr, io::parse_ints(steps));
        }
        if (*rc_from) return cmd_rc_from(rc);
        if (*rc_dual) return cmd_rc_dual(lr, n);
        if (*rc_comp) return cmd_rc_comp(rc);
        if (*ch) return cmd_charge(lr);
        if (*vgen) return cmd_virtual_generate(load_tag(type, n), r, s, out);
        if (*vmem) return cmd_virtual_member(load_tag(type, n), r, s, path, samples);
        if (*vdec) return cmd_virtual_decompose(load_tag(type, n), r, s);
        if (*fm) return cmd_fermionic_m(load_tag(type, n), R, weight);
        if (*fx) return cmd_verify_xm(load_tag(type, n), R, weight);
        if (*gr) return cmd_graph(n, R, out);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        std::cout << e.detail.dump(2) << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << app.help();
    return 2;
}
