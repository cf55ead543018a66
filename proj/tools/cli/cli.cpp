/*
   Copyright 2026 The wstack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "../verify/suite.hpp"
#include "report.hpp"
#include "wstack/motive.hpp"
#include "wstack/selfmaps.hpp"
#include "wstack/weierstrass.hpp"

namespace wstack::cli {

using nlohmann::json;

namespace {

struct Globals {
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 0;
    std::string format;
    std::string out_path;
    bool timing = false;
};

unsigned env_workers() {
    const char* v = std::getenv("WSTACK_WORKERS");
    if (!v || !*v) return 0;
    try {
        return static_cast<unsigned>(std::stoul(v));
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, std::string("WSTACK_WORKERS is not a number: '") + v + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
    return parts;
}

Format format_or(const Globals& g, Format fallback) { return g.format.empty() ? fallback : parse_format(g.format); }

std::string git_name(GitClass c) { return std::string(git_class_name(c)); }

json form_json(const BinForm& f) { return {{"coeffs", f.coeff_list()}, {"form", f.to_string()}}; }

json moebius_json(const Moebius& m) {
    return json::array({m.a(), m.b(), m.c(), m.d()});
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

/// Key/value rendering of a flat JSON object, one "key: value" line each.
std::string text_lines(const json& j) {
    std::ostringstream os;
    for (const auto& [k, v] : j.items()) {
        if (v.is_structured()) continue;
        os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return os.str();
}

// ------------------------------------------------------------------ commands

struct CountArgs {
    std::string lambda = "4,6";
    unsigned n = 1;
    std::string q;
    std::string stratum;
    std::string method = "sieve";
    std::string budget;
};

int emit_batch(const std::vector<CountReport>& reports, const Globals& g, std::string& text) {
    text = emit_reports(reports, format_or(g, Format::Json), g.timing);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const CountReport& r) { return r.ok(); });
    return ok ? kExitOk : kExitMismatch;
}

CountOptions count_options(const Globals& g, const std::string& budget) {
    CountOptions opt;
    opt.workers = g.workers;
    if (!budget.empty()) {
        try {
            opt.brute_budget = mpz_class(budget);
        } catch (const std::invalid_argument&) {
            throw Error(ErrorCode::Parse, "budget is not an integer: '" + budget + "'");
        }
    }
    return opt;
}

int run_count(const CountModel& model, const std::string& qs, const std::string& method, const std::string& budget,
              const Globals& g, std::string& text) {
    model.validate();
    const Method m = parse_method(method);
    const CountOptions opt = count_options(g, budget);
    std::vector<CountReport> reports;
    for (const std::string& q : split(qs, ',')) reports.push_back(verify_report(model, parse_field(q), m, opt));
    return emit_batch(reports, g, text);
}

int cmd_motive(const std::string& lambda, unsigned n, const std::string& q, const std::string& of, bool selfmap,
               const Globals& g, std::string& text) {
    MotiveResult r{MotiveExpr(), false};
    json j;
    if (selfmap) {
        r = motive_selfmap_moduli(n);
        j["selfmap_degree"] = n;
    } else {
        const WeightVector lam = parse_weights(lambda);
        j["lambda"] = lam.weights();
        j["n"] = n;
        if (of == "moduli")
            r = motive_moduli(lam, n);
        else if (of == "hom")
            r = MotiveResult{motive_hom(lam, n), false};
        else if (of == "ambient")
            r = MotiveResult{motive_ambient(lam, n), false};
        else
            throw Error(ErrorCode::InvalidArgument, "--of must be moduli, hom or ambient");
    }
    j["of"] = selfmap ? "selfmap_moduli" : of;
    j["expression"] = r.value.to_string();
    j["empirical"] = r.empirical;
    if (!q.empty()) {
        const long qv = std::stol(q);
        j["q"] = qv;
        j["value"] = rational_string(specialize(r.value, qv));
    }
    switch (format_or(g, Format::Text)) {
        case Format::Json: text = dump_json(j); break;
        case Format::Csv:
            text = "expression,empirical,q,value\n" + csv_escape(r.value.to_string()) + "," +
                   (r.empirical ? "true" : "false") + "," + (q.empty() ? "" : q) + "," +
                   (q.empty() ? "" : j["value"].get<std::string>()) + "\n";
            break;
        case Format::Text:
            text = r.value.to_string() + "\n";
            if (r.empirical) text += "empirical: true\n";
            if (!q.empty()) text += "at q = " + q + ": " + j["value"].get<std::string>() + "\n";
            break;
    }
    return kExitOk;
}

struct ClassifyArgs {
    std::string q;
    unsigned n = 1;
    std::string A, B;
    std::string lambda;
    std::string forms;
};

json fiber_table(const WeierstrassDatum& w, std::uint64_t seed) {
    json rows = json::array();
    for (const FiberEntry& e : fiber_survey(w, seed))
        rows.push_back({{"point", e.point.to_string()},
                        {"degree", e.degree},
                        {"ord_a", e.ord_a == kInfiniteOrder ? json("inf") : json(e.ord_a)},
                        {"ord_b", e.ord_b == kInfiniteOrder ? json("inf") : json(e.ord_b)},
                        {"ord_delta", e.ord_delta},
                        {"fiber", e.fiber.name()}});
    return rows;
}

std::string render_classification(const json& j, const char* table_key, Format f) {
    switch (f) {
        case Format::Json: return dump_json(j);
        case Format::Csv: {
            // The fiber table for Weierstrass data, otherwise a single row.
            std::ostringstream os;
            if (table_key && j.contains(table_key)) {
                os << "point,degree,ord_a,ord_b,ord_delta,fiber\n";
                for (const auto& r : j[table_key]) {
                    auto s = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
                    os << csv_escape(s(r["point"])) << "," << s(r["degree"]) << "," << s(r["ord_a"]) << ","
                       << s(r["ord_b"]) << "," << s(r["ord_delta"]) << "," << s(r["fiber"]) << "\n";
                }
            } else {
                std::string head, row;
                for (const auto& [k, v] : j.items()) {
                    if (v.is_structured()) continue;
                    head += (head.empty() ? "" : ",") + k;
                    row += (row.empty() ? "" : ",") + csv_escape(v.is_string() ? v.get<std::string>() : v.dump());
                }
                os << head << "\n" << row << "\n";
            }
            return os.str();
        }
        case Format::Text: {
            std::string s = text_lines(j);
            if (table_key && j.contains(table_key)) {
                s += "fibers:\n";
                for (const auto& r : j[table_key]) {
                    auto v = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
                    s += "  " + v(r["point"]) + "  deg " + v(r["degree"]) + "  ord " + v(r["ord_a"]) + "," +
                         v(r["ord_b"]) + "," + v(r["ord_delta"]) + "  " + v(r["fiber"]) + "\n";
                }
            }
            return s;
        }
    }
    return {};
}

int cmd_classify(const ClassifyArgs& a, const Globals& g, std::string& text) {
    const Field f = parse_field(a.q);
    json j = {{"field", f.name()}, {"n", a.n}};
    const bool weierstrass = !a.A.empty() || !a.B.empty();
    if (weierstrass == !a.forms.empty())
        throw Error(ErrorCode::InvalidArgument, "give either --A and --B, or --forms");
    if (weierstrass) {
        if (a.A.empty() || a.B.empty()) throw Error(ErrorCode::InvalidArgument, "--A and --B go together");
        if (!a.lambda.empty() && !(parse_weights(a.lambda) == WeightVector({4, 6})))
            throw Error(ErrorCode::InvalidArgument, "--A/--B data have weights 4,6");
        const WeierstrassDatum w = parse_weierstrass(f, a.n, a.A, a.B);
        const HomTuple t = w.as_tuple();
        j["A"] = form_json(w.A());
        j["B"] = form_json(w.B());
        j["discriminant"] = form_json(w.discriminant());
        j["stratum"] = std::string(stratum_label_name(stratum_classify(w)));
        j["git_class"] = git_name(hm_classify(t));
        j["base_point_free"] = base_point_free(t);
        j["stabilizer_verdict"] = std::string(stabilizer_verdict_name(stabilizer_verdict(t)));
        if (!w.discriminant().is_zero()) j["fibers"] = fiber_table(w, g.seed);
        return text = render_classification(j, "fibers", format_or(g, Format::Json)), kExitOk;
    }
    const WeightVector lam = parse_weights(a.lambda.empty() ? "4,6" : a.lambda);
    const HomTuple t = parse_tuple(f, lam, a.n, a.forms);
    j["lambda"] = lam.weights();
    j["forms"] = json::array();
    for (const BinForm& u : t.forms()) j["forms"].push_back(form_json(u));
    j["git_class"] = git_name(hm_classify(t));
    j["base_point_free"] = base_point_free(t);
    j["stabilizer_verdict"] = std::string(stabilizer_verdict_name(stabilizer_verdict(t)));
    text = render_classification(j, nullptr, format_or(g, Format::Json));
    return kExitOk;
}

int cmd_stab(const ClassifyArgs& a, const Globals& g, std::string& text) {
    const Field f = parse_field(a.q);
    HomTuple t = [&] {
        if (!a.forms.empty()) return parse_tuple(f, parse_weights(a.lambda.empty() ? "4,6" : a.lambda), a.n, a.forms);
        if (a.A.empty() || a.B.empty()) throw Error(ErrorCode::InvalidArgument, "give --forms, or --A and --B");
        return parse_weierstrass(f, a.n, a.A, a.B).as_tuple();
    }();
    const std::vector<Moebius> stab = pgl2_stabilizer(t, g.workers);
    json elems = json::array();
    for (const Moebius& m : stab) elems.push_back(moebius_json(m));
    const std::uint64_t p = f.characteristic();
    json j = {{"field", f.name()},
              {"lambda", t.lam().weights()},
              {"n", t.n()},
              {"stabilizer_order", stab.size()},
              {"in_regime", stabilizer_regime(t.lam(), t.n(), p)},
              {"verdict", std::string(stabilizer_verdict_name(stabilizer_verdict(t)))},
              {"elements", elems}};
    text = render_classification(j, nullptr, format_or(g, Format::Json));
    return kExitOk;
}

int cmd_selfmap_classify(const Field& f, unsigned n, const std::string& F, const std::string& G, const Globals& g,
                         std::string& text) {
    const RatSelfMap m = parse_selfmap(f, n, F, G);
    json j = {{"field", f.name()}, {"n", n}, {"map", m.to_string()}, {"morphism", m.is_morphism()}};
    if (m.is_morphism()) {
        j["fix"] = form_json(fix_divisor(m));
        j["crit"] = form_json(crit_divisor(m));
        j["tameness"] = std::string(selfmap_tameness_name(selfmap_tameness(m)));
        j["stabilizer_order"] = selfmap_stabilizer(m, g.workers).size();
    }
    text = render_classification(j, nullptr, format_or(g, Format::Json));
    return kExitOk;
}

// ------------------------------------------------------------- verify-suite

int cmd_verify_suite(const std::string& criteria, const std::string& golden_out, const Globals& g,
                     std::ostream& err, std::string& text) {
    verify::SuiteOptions opt;
    opt.workers = g.workers;
    opt.seed = g.seed;
    if (!criteria.empty())
        for (const std::string& c : split(criteria, ',')) {
            int id = 0;
            try {
                id = std::stoi(c);
            } catch (const std::exception&) {
                throw Error(ErrorCode::Parse, "criterion is not a number: '" + c + "'");
            }
            if (id < 1 || id > verify::kCriterionCount)
                throw Error(ErrorCode::InvalidArgument, "no criterion " + c);
            opt.criteria.push_back(id);
        }
    verify::Suite suite(opt);
    const Format f = format_or(g, Format::Text);
    const auto results = suite.run_all([&](const verify::CriterionResult& r) { err << verify::result_line(r) << "\n"; });
    bool ok = true;
    json all = json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        json e = {{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"summary", r.summary},
                  {"evidence", r.evidence}};
        if (g.timing) e["seconds"] = r.seconds;
        if (!golden_out.empty()) {
            const std::string path = golden_out + "/" + verify::golden_name(r.id);
            std::ofstream os(path, std::ios::binary);
            if (!(os << dump_json(r.evidence))) throw Error(ErrorCode::Io, "cannot write " + path);
        }
        all.push_back(e);
    }
    switch (f) {
        case Format::Json: text = dump_json(all); break;
        case Format::Csv:
            text = "criterion,title,passed,summary\n";
            for (const auto& r : results)
                text += std::to_string(r.id) + "," + csv_escape(r.title) + "," + (r.passed ? "true" : "false") +
                        "," + csv_escape(r.summary) + "\n";
            break;
        case Format::Text:
            for (const auto& r : results) text += verify::result_line(r) + "\n";
            break;
    }
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weierstrass fibration strata, GIT stability and point counts over finite fields", "wstack"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Seed for factorization splitting")->capture_default_str();
    app.add_option("--workers", g.workers, "Worker threads (default: WSTACK_WORKERS, else all cores)");
    app.add_option("--format", g.format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", g.out_path, "Write the report to this file");
    app.add_flag("--timing", g.timing, "Include wall-clock timings");

    CountArgs ca;
    auto* count = app.add_subcommand("count", "Count points of a stratum and compare with the formula");
    count->add_option("--lambda", ca.lambda, "Weights, e.g. 4,6")->capture_default_str();
    count->add_option("--n", ca.n, "Degree")->capture_default_str();
    count->add_option("--q", ca.q, "Field order, or a comma list for a batch")->required();
    count->add_option("--stratum", ca.stratum, "all, bpf, morphism, delta, min, sf, stable or semistable")
        ->required();
    count->add_option("--method", ca.method, "brute or sieve")->capture_default_str();
    count->add_option("--budget", ca.budget, "Largest tuple space BRUTE may enumerate");

    std::string m_lambda = "4,6", m_q, m_of = "moduli";
    unsigned m_n = 1;
    bool m_selfmap = false;
    auto* motive = app.add_subcommand("motive", "Print a motivic class and optionally specialize L to q");
    motive->add_option("--lambda", m_lambda, "Weights")->capture_default_str();
    motive->add_option("--n", m_n, "Degree")->capture_default_str();
    motive->add_option("--q", m_q, "Specialize L to this integer");
    motive->add_option("--of", m_of, "moduli, hom or ambient")->capture_default_str();
    motive->add_flag("--selfmap", m_selfmap, "Moduli of degree-n self-maps of P^1");

    ClassifyArgs cl;
    auto add_point_options = [&](CLI::App* sub) {
        sub->add_option("--q", cl.q, "Field, p or p^k")->required();
        sub->add_option("--n", cl.n, "Degree")->capture_default_str();
        sub->add_option("--A", cl.A, "Coefficients of A, X-ascending");
        sub->add_option("--B", cl.B, "Coefficients of B, X-ascending");
        sub->add_option("--lambda", cl.lambda, "Weights for --forms (default 4,6)");
        sub->add_option("--forms", cl.forms, "Semicolon separated coefficient lists");
    };
    auto* classify = app.add_subcommand("classify", "Stratum, GIT class, stabilizer verdict and fiber table");
    add_point_options(classify);
    auto* stab = app.add_subcommand("stab", "Enumerate the PGL2(F_q) stabilizer of a point");
    add_point_options(stab);

    auto* selfmaps = app.add_subcommand("selfmaps", "Rational self-maps of P^1");
    selfmaps->require_subcommand(1);
    std::string s_q, s_F, s_G, s_method = "sieve", s_budget;
    unsigned s_n = 2;
    auto* s_classify = selfmaps->add_subcommand("classify", "Fixed and critical divisors, tameness, stabilizer");
    s_classify->add_option("--q", s_q, "Field")->required();
    s_classify->add_option("--n", s_n, "Degree")->capture_default_str();
    s_classify->add_option("--F", s_F, "Coefficients of F")->required();
    s_classify->add_option("--G", s_G, "Coefficients of G")->required();
    auto* s_count = selfmaps->add_subcommand("count", "Count degree-n morphisms up to conjugation");
    s_count->add_option("--q", s_q, "Field order, or a comma list")->required();
    s_count->add_option("--n", s_n, "Degree")->capture_default_str();
    s_count->add_option("--method", s_method, "brute or sieve")->capture_default_str();
    s_count->add_option("--budget", s_budget, "Largest tuple space BRUTE may enumerate");

    std::string v_criteria, v_golden;
    auto* verify = app.add_subcommand("verify-suite", "Run the acceptance criteria");
    verify->add_option("--criteria", v_criteria, "Comma list of criteria (default all)");
    verify->add_option("--write-golden", v_golden, "Write each criterion's evidence into this directory");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    }

    try {
        if (app.count("--workers") == 0) g.workers = env_workers();
        std::string text;
        int status = kExitOk;
        if (*count) {
            const CountModel model = CountModel::hom(parse_weights(ca.lambda), ca.n, parse_stratum(ca.stratum));
            status = run_count(model, ca.q, ca.method, ca.budget, g, text);
        } else if (*motive) {
            status = cmd_motive(m_lambda, m_n, m_q, m_of, m_selfmap, g, text);
        } else if (*classify) {
            status = cmd_classify(cl, g, text);
        } else if (*stab) {
            status = cmd_stab(cl, g, text);
        } else if (*s_classify) {
            status = cmd_selfmap_classify(parse_field(s_q), s_n, s_F, s_G, g, text);
        } else if (*s_count) {
            status = run_count(CountModel::selfmap(s_n, Stratum::Morphism), s_q, s_method, s_budget, g, text);
        } else if (*verify) {
            status = cmd_verify_suite(v_criteria, v_golden, g, err, text);
        }
        if (g.out_path.empty()) {
            out << text;
        } else {
            std::ofstream os(g.out_path, std::ios::binary);
            if (!(os << text)) throw Error(ErrorCode::Io, "cannot write " + g.out_path);
        }
        return status;
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace wstack::cli
