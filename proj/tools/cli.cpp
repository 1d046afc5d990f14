#include "cli.hpp"

#include "desing/continuation.hpp"
#include "desing/desing.hpp"
#include "desing/diffdesing.hpp"
#include "desing/errors.hpp"
#include "desing/linalg.hpp"
#include "desing/parse.hpp"
#include "desing/selftest.hpp"
#include "desing/singanalysis.hpp"

#include "CLI11.hpp"

#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace desing::cli {

namespace {

json poly_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs())
        a.push_back(c.str());
    return a;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("polynomial must be a JSON array of rationals", 0);
    std::vector<Rat> c;
    for (const auto& x : j) {
        if (!x.is_string())
            throw ParseError("rational coefficients must be strings", 0);
        c.push_back(Rat::parse(x.get<std::string>()));
    }
    return Poly(std::move(c));
}

json ratfun_json(const RatFun& f) {
    if (f.is_polynomial())
        return poly_json(f.num());
    return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

RatFun ratfun_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den"))
            throw ParseError("rational function object needs num and den", 0);
        Poly den = poly_from_json(j.at("den"));
        if (den.is_zero())
            throw DomainError("zero denominator");
        return RatFun(poly_from_json(j.at("num")), den);
    }
    return RatFun(poly_from_json(j));
}

template <class Op>
json op_json(const Op& op, const char* ring) {
    json coeffs = json::array();
    for (const auto& c : op.coeffs())
        coeffs.push_back(ratfun_json(c));
    return json{{"ring", ring}, {"coeffs", coeffs}};
}

std::vector<RatFun> coeffs_from_json(const json& j, const char* ring) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw ParseError("operator JSON needs a coeffs array", 0);
    if (j.contains("ring") && j.at("ring") != ring)
        throw DomainError(std::string("operator JSON is not in the ") + ring + " ring");
    std::vector<RatFun> c;
    for (const auto& x : j.at("coeffs"))
        c.push_back(ratfun_from_json(x));
    return c;
}

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Rat parse_rat_flag(const std::string& text, const char* flag) {
    try {
        return Rat::parse(text);
    } catch (const DomainError&) {
        throw ParseError(std::string("bad value for ") + flag + ": '" + text + "'", 0);
    }
}

std::vector<Rat> parse_csv(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_rat_flag(item, "--init"));
    return out;
}

json rats_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.str());
    return a;
}

std::string join(const std::vector<Rat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].str();
    return s;
}

// Shared state of one invocation.
struct Ctx {
    std::istream& in;
    std::ostream& out;
    std::string ring = "shift";
    bool as_json = false;

    std::string source(const std::string& arg) {
        if (arg == "-")
            return read_all(in);
        return arg;
    }

    static bool is_json_text(const std::string& s) {
        auto p = s.find_first_not_of(" \t\r\n");
        return p != std::string::npos && s[p] == '{';
    }

    ShiftOp shift_op(const std::string& arg) {
        std::string s = source(arg);
        if (is_json_text(s))
            return shift_from_json(parse_json(s));
        return parse_shift(s);
    }

    DiffOp diff_op(const std::string& arg) {
        std::string s = source(arg);
        if (is_json_text(s))
            return diff_from_json(parse_json(s));
        return parse_diff(s);
    }

    static json parse_json(const std::string& s) {
        try {
            return json::parse(s);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
    }

    bool diff() const { return ring == "diff"; }

    void emit(const json& j) { out << j.dump(2) << "\n"; }
};

json relation_json(const RelationMatrix& m) {
    json cols = json::array();
    for (const auto& [i, j] : m.columns)
        cols.push_back(json::array({i, j}));
    json rows = json::array();
    for (const auto& r : m.rows) {
        json row = json::array();
        for (const auto& x : integer_row(r))
            row.push_back(x.get_str());
        rows.push_back(row);
    }
    return json{{"columns", cols}, {"rows", rows}};
}

std::string relation_text(const RelationMatrix& m, const Rat& q) {
    std::string s;
    for (const auto& r : m.rows) {
        auto ints = integer_row(r);
        std::string line;
        for (std::size_t c = 0; c < ints.size(); ++c) {
            if (ints[c] == 0)
                continue;
            const auto& [i, j] = m.columns[c];
            std::string name = "F[" + (q + Rat(i)).str() + "," + std::to_string(j) + "]";
            mpz_class a = abs(ints[c]);
            std::string coef = a == 1 ? "" : a.get_str() + "*";
            if (line.empty())
                line = (ints[c] < 0 ? "-" : "") + coef + name;
            else
                line += (ints[c] < 0 ? " - " : " + ") + coef + name;
        }
        s += "  " + line + " = 0\n";
    }
    return s;
}

void cmd_singularities(Ctx& c, const std::string& arg) {
    if (c.diff()) {
        DiffOp L = c.diff_op(arg).monic();
        Poly den = Poly::constant(Rat(1));
        for (const auto& x : L.coeffs())
            den = lcm(den, x.den());
        RationalRoots rr = rational_roots(den);
        json pts = json::array();
        std::string text = "singular points:\n";
        for (const auto& r : rr.roots) {
            LocalData d = local_exponents(L, r.root);
            bool app = is_apparent_diff(L, r.root);
            pts.push_back({{"point", r.root.str()},
                           {"regular", d.regular},
                           {"exponents", rats_json(d.exponents)},
                           {"series_dim", d.series_dim},
                           {"apparent", app}});
            text += "  " + r.root.str() + ": " + (d.regular ? "regular" : "irregular") + ", exponents {" +
                    join(d.exponents) + "}, " + (app ? "apparent" : "not apparent") + "\n";
        }
        if (rr.cofactor.degree() > 0)
            text += "undecided (irrational) factor: " + rr.cofactor.str() + "\n";
        if (c.as_json)
            c.emit({{"ring", "diff"}, {"points", pts}, {"undecided", rr.cofactor.str()}});
        else
            c.out << text;
        return;
    }
    ShiftOp L = c.shift_op(arg);
    SingularityData s = singularity_data(L);
    Classification cl = classify_singularities(L);
    auto verdicts = [](const std::vector<SingularityVerdict>& v) {
        json a = json::array();
        for (const auto& x : v)
            a.push_back({{"point", x.point.str()}, {"multiplicity", x.multiplicity}, {"apparent", x.apparent}});
        return a;
    };
    auto opt = [](const std::optional<Rat>& r) { return r ? json(r->str()) : json(nullptr); };
    if (c.as_json) {
        c.emit({{"ring", "shift"},
                {"t", verdicts(cl.t)},
                {"l", verdicts(cl.l)},
                {"t_undecided", cl.t_undecided.str()},
                {"l_undecided", cl.l_undecided.str()},
                {"kappa_upper", opt(s.kappa_upper)},
                {"iota_lower", opt(s.iota_lower)}});
        return;
    }
    auto list = [&](const char* title, const std::vector<SingularityVerdict>& v, const Poly& undecided) {
        c.out << title << ":\n";
        if (v.empty())
            c.out << "  (none rational)\n";
        for (const auto& x : v)
            c.out << "  " << x.point << " (multiplicity " << x.multiplicity << "): "
                  << (x.apparent ? "apparent" : "not apparent") << "\n";
        if (undecided.degree() > 0)
            c.out << "  undecided irrational factor: " << undecided.str() << "\n";
    };
    list("t-singularities", cl.t, cl.t_undecided);
    list("l-singularities", cl.l, cl.l_undecided);
    if (s.kappa_upper)
        c.out << "kappa_upper: " << *s.kappa_upper << "\niota_lower: " << *s.iota_lower << "\n";
}

void cmd_apparent(Ctx& c, const std::string& arg, const std::string& sigma_text, const std::string& side_text) {
    const Rat sigma = parse_rat_flag(sigma_text, "--sigma");
    if (c.diff()) {
        DiffOp L = c.diff_op(arg);
        LocalData d = local_exponents(L, sigma);
        bool app = is_apparent_diff(L, sigma);
        if (c.as_json)
            c.emit({{"ring", "diff"},
                    {"sigma", sigma.str()},
                    {"ordinary", d.ordinary},
                    {"exponents", rats_json(d.exponents)},
                    {"series_dim", d.series_dim},
                    {"apparent", app}});
        else
            c.out << (d.ordinary ? "ordinary point" : app ? "apparent" : "not apparent") << "\nexponents: {"
                  << join(d.exponents) << "}\n";
        return;
    }
    ShiftOp L = c.shift_op(arg);
    Side side = parse_side(side_text);
    if (side == Side::lt)
        throw DomainError("apparent takes --side t or --side l");
    ApparentnessReport rep = side == Side::t ? analyze_t(L, sigma) : analyze_l(L, sigma);
    const Rat q = rep.sigma + Rat(rep.q_offset);
    if (c.as_json) {
        c.emit({{"ring", "shift"},
                {"sigma", sigma.str()},
                {"side", side_name(side)},
                {"tested_point", rep.sigma.str()},
                {"q", q.str()},
                {"apparent", rep.apparent},
                {"relations", relation_json(rep.relations)}});
        return;
    }
    c.out << (rep.apparent ? "apparent" : "not apparent") << "\n";
    if (side == Side::l)
        c.out << "tested as t-singularity " << rep.sigma << " of the reflected operator\n";
    c.out << "q = " << q << "\n";
    if (!rep.relations.empty())
        c.out << "relations:\n" << relation_text(rep.relations, q);
}

json desing_json(const DesingResult& r) {
    return {{"output", to_json(r.output)},
            {"text", r.output.str()},
            {"dispersion", r.dispersion_used},
            {"kept_factor", r.kept_factor.str()},
            {"removed_factor", r.removed_factor.str()},
            {"cofactor", r.cofactor.str()}};
}

void cmd_desing(Ctx& c, const std::string& arg, Side side) {
    ShiftOp L = c.shift_op(arg);
    if (side == Side::lt) {
        BothResult b = desing_both(L);
        if (c.as_json)
            c.emit({{"output", to_json(b.output)},
                    {"text", b.output.str()},
                    {"m", b.m},
                    {"l_t", b.t.output.str()},
                    {"l_l", b.l.output.str()}});
        else
            c.out << b.output.str() << "\n";
        return;
    }
    DesingResult r = side == Side::t ? t_desing(L) : l_desing(L);
    if (c.as_json)
        c.emit(desing_json(r));
    else
        c.out << r.output.str() << "\n";
}

void cmd_complete(Ctx& c, const std::string& arg, const std::string& side_text) {
    if (c.diff()) {
        DCompleteness d = is_completely_d_desingularizable(c.diff_op(arg));
        if (c.as_json)
            c.emit({{"complete", d.complete}, {"witness", to_json(d.witness)}, {"text", d.witness.str()}});
        else
            c.out << "complete: " << (d.complete ? "yes" : "no") << "\nwitness: " << d.witness.str() << "\n";
        return;
    }
    Side side = parse_side(side_text);
    Completeness r = is_completely_desingularizable(c.shift_op(arg), side);
    if (c.as_json)
        c.emit({{"side", side_name(side)},
                {"complete", r.complete},
                {"witness", to_json(r.witness)},
                {"text", r.witness.str()}});
    else
        c.out << "complete " << side_name(side) << "-desingularization: " << (r.complete ? "yes" : "no")
              << "\nwitness: " << r.witness.str() << "\n";
}

template <class Op>
void report_division(Ctx& c, const Op& q, const Op& r) {
    if (c.as_json)
        c.emit({{"quotient", to_json(q)}, {"remainder", to_json(r)}, {"exact", r.is_zero()}});
    else
        c.out << "quotient: " << (q.is_zero() ? "0" : q.str()) << "\nremainder: " << (r.is_zero() ? "0" : r.str())
              << "\n";
}

void cmd_rdivide(Ctx& c, const std::string& a, const std::string& b) {
    if (a == "-" && b == "-")
        throw DomainError("only one operand can come from stdin");
    if (c.diff()) {
        auto qr = right_divrem(c.diff_op(a), c.diff_op(b));
        report_division(c, qr.quotient, qr.remainder);
    } else {
        auto qr = right_divrem(c.shift_op(a), c.shift_op(b));
        report_division(c, qr.quotient, qr.remainder);
    }
}

void cmd_extend(Ctx& c, const std::string& arg, const std::string& dir_text, const std::string& init,
                const std::string& base_text, int count, bool via_desing) {
    ShiftOp L = c.shift_op(arg);
    Direction dir;
    if (dir_text == "right")
        dir = Direction::right;
    else if (dir_text == "left")
        dir = Direction::left;
    else
        throw ParseError("--dir must be left or right", 0);
    SequenceWindow w{parse_rat_flag(base_text, "--base"), parse_csv(init), {}};
    Extension e = via_desing ? extend_via_desing(L, w, dir, count) : extend(L, w, dir, count);
    // index of the k-th produced value
    auto index_of = [&](std::size_t k) {
        return dir == Direction::right ? w.base + Rat(static_cast<long>(w.values.size() + k))
                                       : w.base - Rat(static_cast<long>(k + 1));
    };
    if (c.as_json) {
        json vals = json::array();
        for (std::size_t k = 0; k < e.values.size(); ++k)
            vals.push_back({{"index", index_of(k).str()}, {"value", e.values[k].str()}});
        c.emit({{"values", vals},
                {"blocked_at", e.blocked_at ? json(e.blocked_at->str()) : json(nullptr)},
                {"driver", e.driver.str()},
                {"denominator_primes", [&] {
                     json a = json::array();
                     for (const auto& p : denominator_primes(e.values))
                         a.push_back(p.get_str());
                     return a;
                 }()}});
        return;
    }
    for (std::size_t k = 0; k < e.values.size(); ++k)
        c.out << "u(" << index_of(k) << ") = " << e.values[k] << "\n";
    if (e.blocked_at)
        c.out << "blocked: singularity at " << *e.blocked_at
              << (via_desing ? " (not removable by the desingularization)\n"
                             : " (try --desing to continue with a desingularization)\n");
}

void cmd_ddesing(Ctx& c, const std::string& arg) {
    DDesingResult r = d_desing(c.diff_op(arg));
    if (c.as_json) {
        c.emit({{"monic", to_json(r.monic)},
                {"cleared", to_json(r.cleared)},
                {"text", r.monic.str()},
                {"apparent", rats_json(r.apparent)},
                {"m", r.m},
                {"l1", r.l1.str()},
                {"l3", r.l3.str()}});
        return;
    }
    c.out << r.monic.str() << "\n";
    if (!(r.cleared == r.monic))
        c.out << "cleared: " << r.cleared.str() << "\n";
}

int cmd_selftest(Ctx& c) {
    auto results = run_selftest();
    int failed = 0;
    json arr = json::array();
    for (const auto& r : results) {
        failed += r.passed ? 0 : 1;
        if (c.as_json)
            arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
            c.out << (r.passed ? "PASS  " : "FAIL  ") << r.name << (r.detail.empty() ? "" : ": " + r.detail)
                  << "\n";
    }
    if (c.as_json)
        c.emit({{"fixtures", arr}, {"failed", failed}});
    else
        c.out << results.size() - failed << "/" << results.size() << " fixtures passed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

json to_json(const ShiftOp& op) { return op_json(op, "shift"); }
json to_json(const DiffOp& op) { return op_json(op, "diff"); }

ShiftOp shift_from_json(const json& j) {
    try {
        return ShiftOp(coeffs_from_json(j, "shift"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed operator JSON: ") + e.what(), 0);
    }
}

DiffOp diff_from_json(const json& j) {
    try {
        return DiffOp(coeffs_from_json(j, "diff"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed operator JSON: ") + e.what(), 0);
    }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Desingularization of linear difference and differential operators"};
    app.require_subcommand(1);
    Ctx c{in, out};
    std::string op, op2, sigma, side = "t", dir = "right", init, base = "0";
    int count = 1;
    bool via_desing = false;

    auto common = [&](CLI::App* s, bool ring_flag) {
        if (ring_flag)
            s->add_option("--ring", c.ring, "shift or diff")->check(CLI::IsMember({"shift", "diff"}));
        s->add_flag("--json", c.as_json, "machine-readable output");
    };
    auto operand = [&](CLI::App* s) {
        s->add_option("operator", op, "operator expression, JSON object, or - for stdin")->required();
    };

    auto* sing = app.add_subcommand("singularities", "list singular points and their apparentness");
    common(sing, true);
    operand(sing);

    auto* app_cmd = app.add_subcommand("apparent", "decide whether one singular point is apparent");
    common(app_cmd, true);
    app_cmd->add_option("--sigma", sigma, "the singular point (rational)")->required()->allow_extra_args(false);
    app_cmd->add_option("--side", side, "t or l (shift ring)");
    operand(app_cmd);

    auto* td = app.add_subcommand("tdesing", "t-desingularization");
    common(td, false);
    operand(td);
    auto* ld = app.add_subcommand("ldesing", "l-desingularization");
    common(ld, false);
    operand(ld);
    auto* both = app.add_subcommand("desingboth", "desingularization at both ends");
    common(both, false);
    operand(both);

    auto* comp = app.add_subcommand("complete", "decide complete desingularizability");
    common(comp, true);
    comp->add_option("--side", side, "t, l or lt (shift ring)");
    operand(comp);

    auto* rdiv = app.add_subcommand("rdivide", "right division A = Q*B + R");
    common(rdiv, true);
    rdiv->add_option("dividend", op, "A")->required();
    rdiv->add_option("divisor", op2, "B")->required();

    auto* ext = app.add_subcommand("extend", "continue a sequence with the recurrence");
    common(ext, false);
    ext->add_option("--dir", dir, "left or right");
    ext->add_option("--init", init, "comma-separated initial values u(base), u(base+1), ...")->required();
    ext->add_option("--base", base, "index of the first initial value");
    ext->add_option("--count", count, "number of new values")->check(CLI::NonNegativeNumber);
    ext->add_flag("--desing", via_desing, "drive with the desingularized operator");
    operand(ext);

    auto* dd = app.add_subcommand("ddesing", "desingularize a differential operator");
    common(dd, false);
    operand(dd);

    auto* self = app.add_subcommand("selftest", "run the embedded regression fixtures");
    common(self, false);

    std::vector<const char*> argv{"desing"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*sing)
            cmd_singularities(c, op);
        else if (*app_cmd)
            cmd_apparent(c, op, sigma, side);
        else if (*td)
            cmd_desing(c, op, Side::t);
        else if (*ld)
            cmd_desing(c, op, Side::l);
        else if (*both)
            cmd_desing(c, op, Side::lt);
        else if (*comp)
            cmd_complete(c, op, *comp->get_option("--side") ? side : std::string("lt"));
        else if (*rdiv)
            cmd_rdivide(c, op, op2);
        else if (*ext)
            cmd_extend(c, op, dir, init, base, count, via_desing);
        else if (*dd) {
            c.ring = "diff";
            cmd_ddesing(c, op);
        } else if (*self)
            return cmd_selftest(c);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedAlgebraicPoint& e) {
        err << "unsupported algebraic point: " << e.what() << "\n";
        return 4;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace desing::cli
