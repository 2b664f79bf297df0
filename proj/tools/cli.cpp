#include "cli.hpp"

#include "CLI11.hpp"

#include "lucaszeta/continuation.hpp"
#include "lucaszeta/errors.hpp"
#include "lucaszeta/jsonio.hpp"
#include "lucaszeta/residues.hpp"
#include "lucaszeta/special.hpp"
#include "lucaszeta/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace lucaszeta::cli {

namespace {

long default_prec() {
    if (const char* env = std::getenv("LUCASZETA_PREC")) {
        long p = std::atol(env);
        if (p >= 32) return p;
    }
    return 128;
}

Complex parse_complex(const std::string& text, long prec) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        return Complex{Real::parse(text, prec), Real::of(0L, prec)};
    return Complex{Real::parse(text.substr(0, comma), prec),
                   Real::parse(text.substr(comma + 1), prec)};
}

AdditiveCharacter parse_additive(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) return AdditiveCharacter(parse_rational(text), Rational(0));
    return AdditiveCharacter(parse_rational(text.substr(0, comma)),
                             parse_rational(text.substr(comma + 1)));
}

MultiPoint parse_point(const std::vector<std::string>& coords, long prec) {
    std::vector<Complex> s;
    for (const auto& c : coords) s.push_back(parse_complex(c, prec));
    return MultiPoint(std::move(s));
}

struct CommonOpts {
    std::string p = "1", q_param = "-1";
    long prec = default_prec();
    double eps = 1e-24;
    std::string format = "json";
    long initial_cutoff = 16;
    long max_cutoff = 4096;
    double guard = 1e-6;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_params = true) {
    if (with_params) {
        cmd->add_option("--P", c.p, "Lucas parameter P (rational)");
        cmd->add_option("--Q", c.q_param, "Lucas parameter Q (rational)");
    }
    cmd->add_option("--prec", c.prec, "working precision in bits (>= 32)");
    cmd->add_option("--eps", c.eps, "target accuracy for truncation");
    cmd->add_option("--format", c.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--initial-cutoff", c.initial_cutoff, "initial k-sum cutoff");
    cmd->add_option("--max-cutoff", c.max_cutoff, "maximum cutoff before giving up");
    cmd->add_option("--guard", c.guard, "pole guard radius");
}

LucasParams params_of(const CommonOpts& c) {
    if (c.prec < 32) fail(ErrorCode::BadInput, "precision must be >= 32 bits");
    return LucasParams::validate(parse_rational(c.p), parse_rational(c.q_param));
}

TruncationPolicy policy_of(const CommonOpts& c) {
    TruncationPolicy pol;
    pol.initial_cutoff = c.initial_cutoff;
    pol.max_cutoff = c.max_cutoff;
    pol.eps = c.eps;
    pol.pole_guard_radius = c.guard;
    return pol;
}

void emit(const CommonOpts& c, const std::string& target, const Json& inputs,
          const EvalResult& r, std::ostream& out) {
    if (c.format == "csv") {
        out << "target,inputs,value_re,value_im,bound,status\n";
        std::string in = inputs.dump();
        std::string quoted = "\"";
        for (char ch : in) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
        quoted += "\"";
        out << target << "," << quoted << "," << r.value.re.str() << "," << r.value.im.str()
            << "," << bound_str(r.truncation_tail_bound) << ",ok\n";
        return;
    }
    Json j{{"target", target},
           {"params", Json{{"P", c.p}, {"Q", c.q_param}}},
           {"inputs", inputs},
           {"value", complex_to_json(r.value, c.prec)},
           {"tail_bound", bound_str(r.truncation_tail_bound)},
           {"rounding_bound", bound_str(r.rounding_bound)},
           {"terms_used", r.terms_used},
           {"status", "ok"}};
    out << j.dump(2) << "\n";
}

std::vector<DirichletCharacter> parse_char_tuple(const std::vector<std::string>& specs) {
    std::vector<DirichletCharacter> chars;
    for (const auto& s : specs) chars.push_back(character_by_spec(s));
    return chars;
}

int cmd_eval_zeta(const CommonOpts& c, long q, std::vector<long> r,
                  const std::vector<std::string>& s_raw, const std::string& mode,
                  std::ostream& out) {
    LucasParams lp = params_of(c);
    MultiPoint s = parse_point(s_raw, c.prec + 32);
    if (r.empty()) r.assign(s.depth(), 1);
    ShiftSpec shift(q, r);
    Json inputs{{"q", q}, {"r", r}, {"s", Json::array()}, {"mode", mode}};
    for (const auto& z : s.s) inputs["s"].push_back(complex_to_json(z, c.prec));

    EvalResult res;
    if (mode == "direct" || (mode == "auto" && in_domain(s, 1e-9))) {
        OracleOptions oo;
        oo.prec = c.prec;
        oo.eps = c.eps;
        LucasSequenceCache cache(lp);
        res = direct_shifted_zeta(cache, shift, s, oo);
    } else {
        res = shifted_zeta_cont(lp, shift, s, policy_of(c), c.prec);
    }
    emit(c, "eval-zeta", inputs, res, out);
    return 0;
}

int cmd_eval_L(const CommonOpts& c, const std::vector<std::string>& chi_specs,
               const std::vector<std::string>& s_raw, const std::string& mode,
               std::ostream& out) {
    LucasParams lp = params_of(c);
    auto chars = parse_char_tuple(chi_specs);
    MultiPoint s = parse_point(s_raw, c.prec + 32);
    Json inputs{{"chi", chi_specs}, {"s", Json::array()}, {"mode", mode}};
    for (const auto& z : s.s) inputs["s"].push_back(complex_to_json(z, c.prec));

    EvalResult res;
    if (mode == "direct" || (mode == "auto" && in_domain(s, 1e-9))) {
        OracleOptions oo;
        oo.prec = c.prec;
        oo.eps = c.eps;
        LucasSequenceCache cache(lp);
        res = direct_dirichlet_L(cache, chars, s, oo);
    } else {
        res = dirichlet_L_cont(lp, chars, s, policy_of(c), c.prec);
    }
    emit(c, "eval-L", inputs, res, out);
    return 0;
}

int cmd_eval_additive(const CommonOpts& c, const std::vector<std::string>& f_specs,
                      const std::vector<std::string>& s_raw, const std::string& mode,
                      std::ostream& out) {
    LucasParams lp = params_of(c);
    std::vector<AdditiveCharacter> fs;
    for (const auto& f : f_specs) fs.push_back(parse_additive(f));
    AdditiveTuple tuple(std::move(fs));
    MultiPoint s = parse_point(s_raw, c.prec + 32);
    Json inputs{{"f", f_specs}, {"s", Json::array()}, {"mode", mode}};
    for (const auto& z : s.s) inputs["s"].push_back(complex_to_json(z, c.prec));

    EvalResult res;
    if (mode == "direct" || (mode == "auto" && in_domain(s, 1e-9))) {
        OracleOptions oo;
        oo.prec = c.prec;
        oo.eps = c.eps;
        LucasSequenceCache cache(lp);
        res = direct_additive_L(cache, tuple, s, oo);
    } else {
        res = additive_L_cont(lp, tuple, s, policy_of(c), c.prec);
    }
    emit(c, "eval-additive", inputs, res, out);
    return 0;
}

int cmd_poles(const CommonOpts& c, const std::string& variant,
              const std::vector<std::string>& f_specs, long q, long j, long kmax, long nmax,
              const std::string& window_raw, std::ostream& out) {
    LucasParams lp = params_of(c);
    PoleWindow win{-10, 2, -10, 10};
    if (!window_raw.empty()) {
        std::istringstream is(window_raw);
        char comma;
        if (!(is >> win.re_min >> comma >> win.re_max >> comma >> win.im_min >> comma >>
              win.im_max))
            fail(ErrorCode::BadInput, "window must be remin,remax,immin,immax");
    }
    std::vector<PoleHyperplane> poles;
    if (variant == "zeta") {
        poles = enumerate_poles_zeta(lp, q, j, kmax, nmax, win, c.prec);
    } else {
        std::vector<AdditiveCharacter> fs;
        for (const auto& f : f_specs) fs.push_back(parse_additive(f));
        AdditiveTuple tuple(std::move(fs));
        poles = enumerate_poles_additive(lp, tuple, j, kmax, nmax, win, c.prec);
    }
    Json arr = Json::array();
    for (const auto& h : poles) {
        Json g = Json::array();
        for (auto [kk, nn] : h.generators) g.push_back(Json{{"k", kk}, {"n", nn}});
        arr.push_back(Json{{"j", h.j},
                           {"k_sum", h.k_sum},
                           {"n", h.n},
                           {"ell", h.ell},
                           {"location", complex_to_json(h.location, c.prec)},
                           {"generators", g}});
    }
    Json j_out{{"target", "poles"},
               {"params", Json{{"P", c.p}, {"Q", c.q_param}}},
               {"variant", variant},
               {"count", poles.size()},
               {"hyperplanes", arr},
               {"status", "ok"}};
    out << j_out.dump(2) << "\n";
    return 0;
}

int cmd_residue(const CommonOpts& c, const std::string& variant,
                const std::vector<std::string>& chi_specs,
                const std::vector<std::string>& f_specs, long j, long kprime, long n,
                const std::vector<std::string>& at_raw, std::ostream& out) {
    LucasParams lp = params_of(c);
    ResidueOptions opt;
    opt.prec = c.prec;
    opt.policy = policy_of(c);
    std::vector<Complex> at;
    for (const auto& a : at_raw) at.push_back(parse_complex(a, c.prec + 32));

    ResidueValue rv;
    if (variant == "dirichlet-last") {
        rv = residue_dirichlet_last(lp, parse_char_tuple(chi_specs), at, kprime, n, opt);
    } else if (variant == "dirichlet-inner") {
        rv = residue_dirichlet_inner(lp, parse_char_tuple(chi_specs), j, kprime, n, at, opt);
    } else if (variant == "additive-last" || variant == "additive-inner") {
        std::vector<AdditiveCharacter> fs;
        for (const auto& f : f_specs) fs.push_back(parse_additive(f));
        AdditiveTuple tuple(std::move(fs));
        rv = (variant == "additive-last")
                 ? residue_additive_last(lp, tuple, at, kprime, n, opt)
                 : residue_additive_inner(lp, tuple, j, kprime, n, at, opt);
    } else {
        fail(ErrorCode::BadInput, "unknown residue variant: " + variant);
    }
    Json j_out{{"target", "residue"},
               {"params", Json{{"P", c.p}, {"Q", c.q_param}}},
               {"variant", variant},
               {"k_prime", kprime},
               {"n", n},
               {"closed_form", complex_to_json(rv.closed_form, c.prec)},
               {"numeric_check", complex_to_json(rv.numeric_check, c.prec)},
               {"rel_error", bound_str(rv.rel_error)},
               {"status", "ok"}};
    out << j_out.dump(2) << "\n";
    return 0;
}

int cmd_special(const CommonOpts& c, long q, const std::vector<long>& r,
                const std::vector<std::string>& chi_specs,
                const std::vector<std::string>& f_specs, const std::vector<long>& m_raw,
                std::ostream& out) {
    LucasParams lp = params_of(c);
    NegIntPoint m{std::vector<long>(m_raw)};
    Json j_out{{"target", "special"}, {"params", Json{{"P", c.p}, {"Q", c.q_param}}}};
    j_out["m"] = m_raw;

    if (!chi_specs.empty()) {
        auto chars = parse_char_tuple(chi_specs);
        Rational v = special_L_quadratic(lp, chars, m);
        j_out["chi"] = chi_specs;
        j_out["value"] = rational_str(v);
        j_out["rational"] = true;
        j_out["holomorphic"] = true;
    } else if (!f_specs.empty()) {
        std::vector<AdditiveCharacter> fs;
        for (const auto& f : f_specs) fs.push_back(parse_additive(f));
        AdditiveTuple tuple(std::move(fs));
        Rational v = special_additive(lp, tuple, m);
        j_out["f"] = f_specs;
        j_out["value"] = rational_str(v);
        j_out["rational"] = true;
        j_out["holomorphic"] = true;
    } else {
        std::vector<long> rr = r.empty() ? std::vector<long>(m.depth(), 1) : r;
        ShiftSpec shift(q, rr);
        j_out["q"] = q;
        j_out["r"] = rr;
        SpecialValueResult sv = special_zeta_exact(lp, shift, m);
        bool holo = holomorphic_at_neg(lp, q, m);
        j_out["holomorphic"] = holo;
        j_out["singular"] = sv.singular;
        if (sv.singular) {
            j_out["status"] = "singular";
            out << j_out.dump(2) << "\n";
            return 0;
        }
        SymmetrizedValue sym = symmetrized_special_zeta(lp, shift, m);
        bool galois_ok = galois_audit(sym.terms, m) && sym.result.value == sv.value;
        j_out["value"] = sv.is_rational ? rational_str(sv.value.rational_part()) : sv.value.str();
        j_out["rational"] = sv.is_rational;
        j_out["galois_ok"] = galois_ok;
        if (sv.requires_validation) j_out["requires_validation"] = true;
    }
    j_out["status"] = "ok";
    out << j_out.dump(2) << "\n";
    return 0;
}

int cmd_characters(const CommonOpts& c, long q, std::ostream& out) {
    auto group = UnitGroup::build(q);
    auto chars = enumerate_characters(q);
    Json factors = Json::array();
    for (const auto& f : group->factors())
        factors.push_back(Json{{"generator", f.generator}, {"order", f.order}});
    Json arr = Json::array();
    for (std::size_t i = 0; i < chars.size(); ++i) {
        Json values = Json::array();
        for (long x = 0; x < q; ++x) {
            auto e = chars[i].value_exponent(x);
            if (!e)
                values.push_back(Json{{"n", x}, {"value", "0"}});
            else
                values.push_back(
                    Json{{"n", x},
                         {"value", "zeta_" + std::to_string(chars[i].value_order()) + "^" +
                                       std::to_string(*e)}});
        }
        arr.push_back(Json{{"index", i},
                           {"spec", std::to_string(q) + ":" + std::to_string(i)},
                           {"exponents", chars[i].exponents()},
                           {"principal", chars[i].is_principal()},
                           {"quadratic", chars[i].is_quadratic()},
                           {"values", values}});
    }
    Json j{{"target", "characters"},
           {"q", q},
           {"phi", group->phi()},
           {"factors", factors},
           {"characters", arr},
           {"status", "ok"}};
    out << j.dump(2) << "\n";
    (void)c;
    return 0;
}

int cmd_verify(const CommonOpts& c, const std::string& suite, long max_depth,
               unsigned long long seed, bool quick, std::ostream& out) {
    verify::SuiteConfig cfg;
    cfg.prec = c.prec;
    cfg.seed = seed;
    cfg.max_depth = max_depth;
    cfg.quick = quick;
    auto results = verify::run_suites(suite, cfg);
    bool all_ok = true;
    Json arr = Json::array();
    for (const auto& sr : results) {
        for (const auto& ck : sr.checks) {
            out << "[" << (ck.passed ? "PASS" : "FAIL") << "] " << sr.suite << ": " << ck.name
                << " (" << ck.detail << ")\n";
            arr.push_back(Json{{"suite", sr.suite},
                               {"check", ck.name},
                               {"passed", ck.passed},
                               {"detail", ck.detail}});
            if (!ck.passed) all_ok = false;
        }
    }
    out << (all_ok ? "all checks passed\n" : "FAILURES present\n");
    return all_ok ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"multiple Lucas Dirichlet series: evaluation, continuation, poles, "
                 "residues and exact special values"};
    app.require_subcommand(1);

    CommonOpts c;

    // eval-zeta
    auto* ez = app.add_subcommand("eval-zeta", "shifted / multiple Lucas zeta value");
    long ez_q = 1;
    std::vector<long> ez_r;
    std::vector<std::string> ez_s;
    std::string ez_mode = "auto";
    add_common(ez, c);
    ez->add_option("--q", ez_q, "shift modulus (1 = plain multiple zeta)");
    ez->add_option("--r", ez_r, "shift residues r_1..r_d")->delimiter(',');
    ez->add_option("--s", ez_s, "coordinates s_1..s_d, each re[,im]")->required()->delimiter(';');
    ez->add_option("--mode", ez_mode, "direct | continuation | auto")
        ->check(CLI::IsMember({"direct", "continuation", "auto"}));

    // eval-L
    auto* el = app.add_subcommand("eval-L", "Dirichlet-character Lucas L-function value");
    std::vector<std::string> el_chi, el_s;
    std::string el_mode = "auto";
    add_common(el, c);
    el->add_option("--chi", el_chi, "characters, one q:index or q:quadratic per depth")
        ->required()
        ->delimiter(';');
    el->add_option("--s", el_s, "coordinates s_1..s_d")->required()->delimiter(';');
    el->add_option("--mode", el_mode, "direct | continuation | auto")
        ->check(CLI::IsMember({"direct", "continuation", "auto"}));

    // eval-additive
    auto* ea = app.add_subcommand("eval-additive", "additive-character Lucas L-function value");
    std::vector<std::string> ea_f, ea_s;
    std::string ea_mode = "auto";
    add_common(ea, c);
    ea->add_option("--f", ea_f, "f_i(1) values, rational re[,im] per depth")
        ->required()
        ->delimiter(';');
    ea->add_option("--s", ea_s, "coordinates s_1..s_d")->required()->delimiter(';');
    ea->add_option("--mode", ea_mode, "direct | continuation | auto")
        ->check(CLI::IsMember({"direct", "continuation", "auto"}));

    // poles
    auto* pl = app.add_subcommand("poles", "enumerate singular hyperplanes");
    std::string pl_variant = "zeta", pl_window;
    long pl_q = 1, pl_j = 1, pl_kmax = 4, pl_nmax = 4;
    std::vector<std::string> pl_f;
    add_common(pl, c);
    pl->add_option("--variant", pl_variant, "zeta | additive")
        ->check(CLI::IsMember({"zeta", "additive"}));
    pl->add_option("--q", pl_q, "shift modulus for the zeta variant");
    pl->add_option("--f", pl_f, "additive characters for the additive variant")->delimiter(';');
    pl->add_option("--j", pl_j, "suffix index of the hyperplane family");
    pl->add_option("--kmax", pl_kmax, "bound on the k-sum");
    pl->add_option("--nmax", pl_nmax, "bound on |n|");
    pl->add_option("--window", pl_window, "remin,remax,immin,immax");

    // residue
    auto* rs = app.add_subcommand("residue", "closed-form residue with contour cross-check");
    std::string rs_variant;
    std::vector<std::string> rs_chi, rs_f, rs_at;
    long rs_j = 1, rs_k = 0, rs_n = 0;
    add_common(rs, c);
    rs->add_option("--variant", rs_variant,
                   "dirichlet-last | dirichlet-inner | additive-last | additive-inner")
        ->required();
    rs->add_option("--chi", rs_chi, "characters for the dirichlet variants")->delimiter(';');
    rs->add_option("--f", rs_f, "additive characters for the additive variants")->delimiter(';');
    rs->add_option("--j", rs_j, "suffix index for the inner variants");
    rs->add_option("--kprime", rs_k, "k-sum of the hyperplane");
    rs->add_option("--n", rs_n, "integer n of the hyperplane");
    rs->add_option("--at", rs_at, "fixed coordinates (partial point / free variables)")
        ->delimiter(';');

    // special
    auto* sp = app.add_subcommand("special", "exact special value at negative integers");
    long sp_q = 1;
    std::vector<long> sp_r, sp_m;
    std::vector<std::string> sp_chi, sp_f;
    add_common(sp, c);
    sp->add_option("--q", sp_q, "shift modulus");
    sp->add_option("--r", sp_r, "shift residues")->delimiter(',');
    sp->add_option("--chi", sp_chi, "quadratic/principal characters")->delimiter(';');
    sp->add_option("--f", sp_f, "rational additive characters")->delimiter(';');
    sp->add_option("--m", sp_m, "positive integers m_1..m_d (point is -m)")
        ->required()
        ->delimiter(',');

    // characters
    auto* ch = app.add_subcommand("characters", "list the character group mod q");
    long ch_q = 2;
    add_common(ch, c, false);
    ch->add_option("--q", ch_q, "modulus")->required();

    // verify
    auto* vf = app.add_subcommand("verify", "run the identity suites");
    std::string vf_suite = "all";
    long vf_depth = 3;
    unsigned long long vf_seed = 2026;
    bool vf_quick = false;
    add_common(vf, c, true);
    vf->add_option("--suite", vf_suite,
                   "oracle | decomposition | residues | real-axis | special | galois | "
                   "predicate | classical | all");
    vf->add_option("--max-depth", vf_depth, "depth bound for randomized sweeps");
    vf->add_option("--seed", vf_seed, "seed for randomized sweeps");
    vf->add_flag("--quick", vf_quick, "smaller grids (smoke mode)");

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        Json diag{{"error", Json{{"code", "Usage"}, {"message", e.what()}}}};
        err << diag.dump() << "\n";
        return 1;
    }

    try {
        if (ez->parsed()) return cmd_eval_zeta(c, ez_q, ez_r, ez_s, ez_mode, out);
        if (el->parsed()) return cmd_eval_L(c, el_chi, el_s, el_mode, out);
        if (ea->parsed()) return cmd_eval_additive(c, ea_f, ea_s, ea_mode, out);
        if (pl->parsed())
            return cmd_poles(c, pl_variant, pl_f, pl_q, pl_j, pl_kmax, pl_nmax, pl_window, out);
        if (rs->parsed())
            return cmd_residue(c, rs_variant, rs_chi, rs_f, rs_j, rs_k, rs_n, rs_at, out);
        if (sp->parsed()) return cmd_special(c, sp_q, sp_r, sp_chi, sp_f, sp_m, out);
        if (ch->parsed()) return cmd_characters(c, ch_q, out);
        if (vf->parsed()) return cmd_verify(c, vf_suite, vf_depth, vf_seed, vf_quick, out);
    } catch (const Error& e) {
        Json diag{{"error", Json{{"code", error_code_name(e.code())}, {"message", e.what()}}}};
        err << diag.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json diag{{"error", Json{{"code", "Internal"}, {"message", e.what()}}}};
        err << diag.dump() << "\n";
        return 1;
    }
    return 1;
}

} // namespace lucaszeta::cli
