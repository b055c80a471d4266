#include "qdeform/cli.hpp"

#include "qdeform/lab.hpp"
#include "qdeform/qrational.hpp"
#include "qdeform/qsurd.hpp"
#include "qdeform/tables.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <sstream>

namespace qdeform {

namespace {

using nlohmann::json;

json poly_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json coeff;
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max())
            coeff = c.convert_to<std::int64_t>();
        else
            coeff = c.str();
        terms.push_back(json::array({e, coeff}));
    }
    return terms;
}

json mat_json(const QMat2& m) {
    return {{"a", poly_json(m.a)},
            {"b", poly_json(m.b)},
            {"c", poly_json(m.c)},
            {"d", poly_json(m.d)}};
}

json series_json(const QSeries& s) {
    json j;
    j["order"] = s.order();
    j["coeffs"] = poly_json(LaurentPoly::from_terms(s.terms()));
    return j;
}

json value_json(const QUnit& u, const RatFn& f) {
    return {{"sign", u.sign}, {"q_power", u.exp}, {"unit", u.str()},
            {"R", poly_json(f.num)}, {"R_str", f.num.str_compact()},
            {"S", poly_json(f.den)}, {"S_str", f.den.str_compact()}};
}

// Parses "M[c1,...]" / "M+[a1,...]" matrix words, or a generator word.
QMat2 parse_matrix_spec(const std::string& text) {
    if (text.rfind("M+[", 0) == 0 && text.back() == ']') {
        CFWord w = parse_cf_word(text.substr(2));
        return m_pos_word(w.coeffs);
    }
    if (text.rfind("M[", 0) == 0 && text.back() == ']') {
        CFWord w = parse_cf_word(text.substr(1));
        return m_neg_word(w.coeffs);
    }
    return q_deform_word_raw(parse_group_word(text));
}

struct Output {
    std::ostream& out;
    bool as_json = false;
    json j;

    void text(const std::string& line) {
        if (!as_json) out << line << "\n";
    }
    ~Output() {
        if (as_json) out << j.dump(2) << "\n";
    }
};

void cmd_qrat(const std::string& frac, Output& o) {
    const Rational x = parse_fraction(frac);
    const CanonicalQRational v = q_rational(x);
    o.text("[" + x.str() + "]_q = " + v.str(true));
    if (o.as_json) {
        o.j = value_json(v.unit(), RatFn{v.R, v.S});
        o.j["input"] = x.str();
        o.j["N"] = v.n;
        o.j["value"] = v.str(true);
    }
}

void cmd_cf(const std::string& frac, const std::string& flavor, Output& o) {
    const Rational x = parse_fraction(frac);
    CFWord w;
    if (flavor == "reg")
        w = regular_cf(x.num, x.den);
    else if (flavor == "neg")
        w = negative_cf(x.num, x.den);
    else
        throw std::invalid_argument("flavor must be 'reg' or 'neg'");
    o.text(x.str() + " = " + w.str());
    if (o.as_json)
        o.j = {{"input", x.str()},
               {"flavor", flavor},
               {"coeffs", w.coeffs},
               {"word", w.str()}};
}

void cmd_qcf(const std::string& word_text, Output& o) {
    const CFWord w = parse_cf_word(word_text);
    auto [u, f] = w.flavor == CFFlavor::Regular ? eval_regular_cf_q(w)
                                                : eval_negative_cf_q(w);
    o.text(w.str() + "_q = " + ratfn_str(u, f, true));
    if (o.as_json) {
        o.j = value_json(u, f);
        o.j["word"] = w.str();
        o.j["classical"] = eval_cf_classical(w).str();
    }
}

void cmd_mat(const std::string& spec, Output& o) {
    const QMat2 m = parse_matrix_spec(spec);
    auto det = m.det_unit();
    o.text(m.str());
    o.text("det = " + (det ? det->str() : std::string("(non-unit)")));
    if (o.as_json) {
        o.j = mat_json(m);
        o.j["det"] = det ? det->str() : "non-unit";
    }
}

void cmd_trace(const std::string& spec, Output& o) {
    const QMat2 m = parse_matrix_spec(spec);
    const LaurentPoly tr = m.trace();
    o.text("trace = " + tr.str_compact());
    o.text(std::string("palindrome: ") + (tr.is_palindrome() ? "yes" : "no"));
    o.text(std::string("nonnegative: ") + (tr.has_nonneg_coeffs() ? "yes" : "no"));
    o.text(std::string("unimodal: ") + (tr.is_unimodal() ? "yes" : "no"));
    if (o.as_json)
        o.j = {{"trace", poly_json(tr)},
               {"trace_str", tr.str_compact()},
               {"palindrome", tr.is_palindrome()},
               {"nonnegative", tr.has_nonneg_coeffs()},
               {"unimodal", tr.is_unimodal()}};
}

void cmd_quad(const std::string& surd_text, Output& o) {
    const Surd x = parse_surd(surd_text);
    const PeriodicCF cf = periodic_negative_cf(x);
    const QSurd y = q_quadratic(x);
    o.text("x = " + x.str());
    o.text("negative continued fraction: " + cf.str());
    o.text("[x]_q = " + y.str());
    if (o.as_json)
        o.j = {{"input", x.str()},
               {"preperiod", cf.preperiod},
               {"period", cf.period},
               {"R", poly_json(y.R)},
               {"P", poly_json(y.P)},
               {"S", poly_json(y.S)},
               {"R_str", y.R.str_compact()},
               {"P_str", y.P.str_compact()},
               {"S_str", y.S.str_compact()},
               {"branch", y.branch > 0 ? "+" : "-"},
               {"value", y.str()}};
}

void cmd_series(const std::string& number, const std::string& stdin_flavor,
                std::int64_t order, std::istream& in, Output& o) {
    QSeries s;
    if (!stdin_flavor.empty()) {
        const CFFlavor fl = stdin_flavor == "reg" ? CFFlavor::Regular : CFFlavor::Negative;
        if (stdin_flavor != "reg" && stdin_flavor != "neg")
            throw std::invalid_argument("stdin flavor must be 'reg' or 'neg'");
        s = q_series_from_cf(
            fl,
            [&in]() -> std::optional<std::int64_t> {
                std::int64_t c;
                if (in >> c) return c;
                return std::nullopt;
            },
            order);
    } else if (number.empty()) {
        throw std::invalid_argument("series: give a number or --stdin-cf");
    } else if (number.find("sqrt") != std::string::npos) {
        s = qsurd_series(q_quadratic(parse_surd(number)), order);
    } else if (!number.empty() && number.front() == '[') {
        s = q_series_from_cf(parse_cf_word(number), order);
    } else {
        s = q_rational(parse_fraction(number)).series(order);
    }
    o.text(s.str());
    if (o.as_json) {
        o.j = series_json(s);
        o.j["input"] = number.empty() ? "stdin" : number;
    }
}

int cmd_scan(const ScanSpec& spec, Output& o) {
    const ScanReport r = scan_traces(spec);
    if (o.as_json)
        o.j = json::parse(r.to_json());
    else
        o.out << r.to_text();
    return r.theorem_failed() ? 3 : 0;
}

void cmd_cohn(const std::string& word_text, Output& o) {
    const QMat2 m = cohn_matrix(parse_cohn_word(word_text));
    const LaurentPoly tr = m.trace();
    auto quot = exact_divide(tr, q_int(3));
    o.text(m.str());
    o.text("trace = " + tr.str_compact());
    o.text("trace/[3]_q = " + (quot ? quot->str_compact() : std::string("not divisible")));
    if (o.as_json) {
        o.j = mat_json(m);
        o.j["trace"] = poly_json(tr);
        o.j["trace_str"] = tr.str_compact();
        o.j["trace_div_q3"] = quot ? json(quot->str_compact()) : json(nullptr);
    }
}

void cmd_divcheck(const std::vector<std::string>& targets,
                  const std::vector<std::string>& by, Output& o) {
    std::vector<LaurentPoly> ts, cs;
    for (const auto& t : targets) ts.push_back(parse_poly(t));
    for (const auto& c : by) cs.push_back(parse_poly(c));
    const DivisibilityReport rep = divisibility_report(std::move(ts), std::move(cs));
    if (o.as_json)
        o.j = json::parse(rep.to_json());
    else
        o.out << rep.to_text();
}

int cmd_repro(const std::string& which, Output& o) {
    std::vector<std::string> names =
        which == "all" ? table_names() : std::vector<std::string>{which};
    bool all_pass = true;
    json jtables = json::array();
    for (const auto& name : names) {
        const TableResult t = run_table(name);
        all_pass = all_pass && t.pass;
        if (o.as_json) {
            json rows = json::array();
            for (const auto& r : t.rows)
                rows.push_back({{"label", r.label},
                                {"expected", r.expected},
                                {"actual", r.actual},
                                {"pass", r.pass}});
            jtables.push_back({{"name", t.name}, {"pass", t.pass}, {"rows", rows}});
        } else {
            o.out << "table " << t.name << ": " << (t.pass ? "PASS" : "FAIL") << "\n";
            for (const auto& r : t.rows) {
                o.out << "  [" << (r.pass ? "ok" : "DIFF") << "] " << r.label << "\n";
                if (!r.pass) {
                    o.out << "     expected: " << r.expected << "\n";
                    o.out << "     actual:   " << r.actual << "\n";
                }
            }
        }
    }
    if (o.as_json) o.j = {{"tables", jtables}, {"pass", all_pass}};
    return all_pass ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-deformations of rationals, quadratic irrationals and the "
                 "modular group"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    std::string frac, flavor = "reg", word, spec, surd, number, stdin_flavor, table = "all";
    std::int64_t order = 10;
    ScanSpec scan;
    std::vector<std::string> targets, by;
    std::string checks = "palindrome,positive,unimodal,reversal";
    std::string hypothesis = "interior";
    std::uint64_t sample = 0;

    auto* c_qrat = app.add_subcommand("qrat", "canonical form of [r/s]_q");
    c_qrat->add_option("fraction", frac, "rational r/s")->required();

    auto* c_cf = app.add_subcommand("cf", "continued fraction expansion of r/s");
    c_cf->add_option("fraction", frac, "rational r/s")->required();
    c_cf->add_option("--flavor", flavor, "reg|neg")->capture_default_str();

    auto* c_qcf = app.add_subcommand("qcf", "q-evaluation of a continued fraction word");
    c_qcf->add_option("word", word, "[a1,a2,...] or [[c1,c2,...]]")->required();

    auto* c_mat = app.add_subcommand("mat", "q-deformed matrix of a word");
    c_mat->add_option("spec", spec, "M[c1,...], M+[a1,...], or generators like 'R^2 S L'")
        ->required();

    auto* c_trace = app.add_subcommand("trace", "trace of a q-deformed matrix");
    c_trace->add_option("spec", spec, "same input as mat")->required();

    auto* c_quad = app.add_subcommand("quad", "closed form of a q-quadratic irrational");
    c_quad->add_option("surd", surd, "e.g. \"(1+sqrt(5))/2\" or \"sqrt(2)\"")->required();

    auto* c_series = app.add_subcommand("series", "series expansion of a q-number");
    c_series->add_option("number", number, "fraction, surd, or CF word");
    c_series->add_option("--order", order, "truncation order")->capture_default_str();
    c_series->add_option("--stdin-cf", stdin_flavor,
                         "read CF coefficients from stdin (reg|neg)");

    auto* c_scan = app.add_subcommand("scan", "trace scan over negative CF words");
    c_scan->add_option("--kmin", scan.k_min, "minimal word length")->capture_default_str();
    c_scan->add_option("--kmax", scan.k_max, "maximal word length")->capture_default_str();
    c_scan->add_option("--cmin", scan.c_min, "minimal coefficient")->capture_default_str();
    c_scan->add_option("--cmax", scan.c_max, "maximal coefficient")->capture_default_str();
    c_scan->add_option("--checks", checks, "comma list: palindrome,positive,unimodal,reversal")
        ->capture_default_str();
    c_scan->add_option("--hypothesis", hypothesis, "interior|all")->capture_default_str();
    c_scan->add_option("--cap", scan.cap, "enumeration cap")->capture_default_str();
    c_scan->add_option("--sample", sample, "sampled mode with this many words");
    c_scan->add_option("--seed", scan.seed, "seed for sampled mode")->capture_default_str();
    c_scan->add_option("--threads", scan.threads, "worker threads (0 = auto)")
        ->capture_default_str();

    auto* c_cohn = app.add_subcommand("cohn", "q-deformed Cohn matrix of an A/B word");
    c_cohn->add_option("word", word, "e.g. AAB")->required();

    auto* c_div = app.add_subcommand("divcheck", "exact divisibility table");
    c_div->add_option("--target", targets, "target polynomial(s)")->required();
    c_div->add_option("--by", by, "candidate divisor(s)")->required();

    auto* c_repro = app.add_subcommand("repro", "replay built-in reference tables");
    c_repro->add_option("table", table, "table name or 'all'")->capture_default_str();
    bool list_tables = false;
    c_repro->add_flag("--list", list_tables, "list table names");

    try {
        // CLI11 consumes the argument vector back to front.
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        Output o{out, as_json, json::object()};
        if (c_qrat->parsed()) {
            cmd_qrat(frac, o);
        } else if (c_cf->parsed()) {
            cmd_cf(frac, flavor, o);
        } else if (c_qcf->parsed()) {
            cmd_qcf(word, o);
        } else if (c_mat->parsed()) {
            cmd_mat(spec, o);
        } else if (c_trace->parsed()) {
            cmd_trace(spec, o);
        } else if (c_quad->parsed()) {
            cmd_quad(surd, o);
        } else if (c_series->parsed()) {
            cmd_series(number, stdin_flavor, order, std::cin, o);
        } else if (c_scan->parsed()) {
            scan.hypothesis = hypothesis == "all" ? ScanHypothesis::AllIntegers
                                                  : ScanHypothesis::InteriorAtLeast2;
            if (sample > 0) scan.sample_count = sample;
            scan.checks.clear();
            std::istringstream cs(checks);
            std::string item;
            while (std::getline(cs, item, ',')) {
                if (item == "palindrome") scan.checks.insert(TraceCheck::Palindrome);
                else if (item == "positive") scan.checks.insert(TraceCheck::Positive);
                else if (item == "unimodal") scan.checks.insert(TraceCheck::Unimodal);
                else if (item == "reversal") scan.checks.insert(TraceCheck::ReversalEquality);
                else throw std::invalid_argument("unknown check '" + item + "'");
            }
            return cmd_scan(scan, o);
        } else if (c_cohn->parsed()) {
            cmd_cohn(word, o);
        } else if (c_div->parsed()) {
            cmd_divcheck(targets, by, o);
        } else if (c_repro->parsed()) {
            if (list_tables) {
                for (const auto& name : table_names()) o.text(name);
                if (as_json) o.j = {{"tables", table_names()}};
                return 0;
            }
            return cmd_repro(table, o);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qdeform
