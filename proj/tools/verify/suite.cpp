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

#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>

#include "oracles.hpp"
#include "wstack/motive.hpp"
#include "wstack/weierstrass.hpp"

namespace wstack::verify {

using nlohmann::json;

namespace {

// Random instances are fixed so evidence is comparable with the goldens.
constexpr std::uint64_t kSampleSeed = 0x7e57da7aULL;

mpz_class pw(std::uint64_t q, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), e);
    return r;
}

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(const mpq_class& v) { return rational_string(v); }

CountModel weier(Stratum s) { return CountModel::hom(WeightVector({4, 6}), 1, s); }

const mpz_class& label(const std::array<mpz_class, 4>& a, StratumLabel l) { return a[static_cast<int>(l)]; }

}  // namespace

Suite::Suite(SuiteOptions opt) : opt_(std::move(opt)) { count_opt_.workers = opt_.workers; }

std::string Suite::title(int id) {
    static const char* titles[] = {
        "stable Weierstrass count is q^8",
        "Hom stack count is q^9(q^2-1)",
        "bound chain for the minimal and nonsingular strata",
        "level (1,3) count is q^2",
        "degree-2 self-map count is q^2",
        "moduli motive closed forms",
        "Hilbert-Mumford classification properties",
        "extremal fibration fixtures",
        "fiber surveys and minimalization",
        "fat point stabilizer criterion",
        "gcd and threshold tests agree with point enumeration",
    };
    if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
    return titles[id - 1];
}

std::string golden_name(int id) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "criterion_%02d.json", id);
    return buf;
}

std::string result_line(const CriterionResult& r) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d", r.id);
    return "criterion " + std::string(buf) + " " + (r.passed ? "PASS" : "FAIL") + "  " + r.title + "  " + r.summary;
}

const std::array<mpz_class, 4>& Suite::weierstrass_labels_q5() {
    if (!labels_q5_) labels_q5_ = weierstrass_label_counts(1, make_field(5), count_opt_);
    return *labels_q5_;
}

CriterionResult Suite::run(int id) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r{id, title(id), true, "", json::object(), 0};
    bool ok = true;
    try {
        switch (id) {
            case 1: r.evidence = stable_count(ok); break;
            case 2: r.evidence = hom_count(ok); break;
            case 3: r.evidence = bound_chain(ok); break;
            case 4: r.evidence = level_13(ok); break;
            case 5: r.evidence = self_maps(ok); break;
            case 6: r.evidence = motive_identities(ok); break;
            case 7: r.evidence = git_properties(ok); break;
            case 8: r.evidence = extremal_fixtures(ok); break;
            case 9: r.evidence = fiber_surveys(ok); break;
            case 10: r.evidence = fat_points(ok); break;
            case 11: r.evidence = oracle_equivalence(ok); break;
        }
        r.summary = r.evidence.value("summary", "");
    } catch (const Error& e) {
        ok = false;
        r.summary = std::string("error ") + std::string(error_code_name(e.code())) + ": " + e.what();
    }
    r.passed = ok;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> Suite::run_all(const std::function<void(const CriterionResult&)>& done) {
    std::vector<int> ids = opt_.criteria;
    if (ids.empty())
        for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
    std::vector<CriterionResult> out;
    for (int id : ids) {
        out.push_back(run(id));
        if (done) done(out.back());
    }
    return out;
}

// ------------------------------------------------------------ 1: U_SF

json Suite::stable_count(bool& ok) {
    json rows = json::array();
    for (std::uint64_t q : {5u, 7u, 13u}) {
        const Field f = make_field(q);
        const mpz_class expected = mpz_class(static_cast<unsigned long>(q - 1)) * pw(q, 9) * (pw(q, 2) - 1);
        const mpz_class sieve = cone_count(weier(Stratum::USf), f, Method::Sieve, count_opt_);
        json row = {{"q", q}, {"expected_cone", str(expected)}, {"sieve_cone", str(sieve)}};
        bool row_ok = sieve == expected;
        mpz_class raw = sieve;
        if (q == 5) {
            raw = label(weierstrass_labels_q5(), StratumLabel::Sf);
            row["brute_cone"] = str(raw);
            row_ok = row_ok && raw == sieve;
        }
        const mpq_class w = weighted_count(raw, q, GroupKind::GL2);
        row["weighted_count"] = str(w);
        row_ok = row_ok && w == mpq_class(pw(q, 8));
        row["ok"] = row_ok;
        ok = ok && row_ok;
        rows.push_back(row);
    }
    return {{"rows", rows}, {"summary", ok ? "cone = (q-1)q^9(q^2-1), weighted = q^8 at q = 5, 7, 13; BRUTE = SIEVE at 5"
                                           : "count mismatch"}};
}

// ------------------------------------------------------------ 2: Hom count

json Suite::hom_count(bool& ok) {
    json rows = json::array();
    const CountModel bpf = CountModel::hom(WeightVector({4, 6}), 1, Stratum::BasepointFree);
    for (std::uint64_t q : {5u, 7u, 13u}) {
        const Field f = make_field(q);
        const mpz_class cone = q == 5 ? label(weierstrass_labels_q5(), StratumLabel::Sf)
                                      : cone_count(bpf, f, Method::Sieve, count_opt_);
        const mpq_class hom = mpq_class(cone) / static_cast<unsigned long>(q - 1);
        const mpq_class expected(pw(q, 9) * (pw(q, 2) - 1));
        const mpq_class motive = specialize(motive_hom(bpf.lam, 1), static_cast<long>(q));
        const bool row_ok = hom == expected && motive == expected;
        ok = ok && row_ok;
        rows.push_back({{"q", q},
                        {"method", q == 5 ? "BRUTE" : "SIEVE"},
                        {"hom_count", str(hom)},
                        {"expected", str(expected)},
                        {"motive_specialized", str(motive)},
                        {"ok", row_ok}});
    }
    return {{"rows", rows}, {"summary", ok ? "cone/(q-1) = q^9(q^2-1) = specialized Hom class at q = 5, 7, 13"
                                           : "count mismatch"}};
}

// ------------------------------------------------------------ 3: bounds

json Suite::bound_chain(bool& ok) {
    json rows = json::array();
    for (std::uint64_t q : {5u, 7u}) {
        const Field f = make_field(q);
        mpz_class cmin = cone_count(weier(Stratum::UMin), f, Method::Sieve, count_opt_);
        mpz_class cdelta = cone_count(weier(Stratum::UDelta), f, Method::Sieve, count_opt_);
        json row = {{"q", q}};
        bool row_ok = true;
        if (q == 5) {
            const auto& L = weierstrass_labels_q5();
            const mpz_class bmin = label(L, StratumLabel::MinNotSf) + label(L, StratumLabel::Sf);
            const mpz_class bdelta = bmin + label(L, StratumLabel::DeltaOnly);
            mpz_class total = 0;
            for (const auto& v : L) total += v;
            row["brute_labels"] = {{"DISCRIMINANT_ZERO", str(label(L, StratumLabel::DiscriminantZero))},
                                   {"DELTA_ONLY", str(label(L, StratumLabel::DeltaOnly))},
                                   {"MIN_NOT_SF", str(label(L, StratumLabel::MinNotSf))},
                                   {"SF", str(label(L, StratumLabel::Sf))}};
            row["labels_cover_cone"] = total == pw(q, 12) - 1;
            row["brute_equals_sieve"] = bmin == cmin && bdelta == cdelta;
            row_ok = total == pw(q, 12) - 1 && bmin == cmin && bdelta == cdelta;
        }
        const mpq_class lower(pw(q, 8));
        const mpq_class wmin = weighted_count(cmin, q, GroupKind::GL2);
        const mpq_class wdelta = weighted_count(cdelta, q, GroupKind::GL2);
        const mpq_class upper = specialize(motive_ambient(WeightVector({4, 6}), 1), static_cast<long>(q));
        const bool chain = lower <= wmin && wmin <= wdelta && wdelta <= upper;
        row_ok = row_ok && chain;
        row["lower"] = str(lower);
        row["weighted_min"] = str(wmin);
        row["weighted_delta"] = str(wdelta);
        row["upper"] = str(upper);
        row["ok"] = row_ok;
        ok = ok && row_ok;
        rows.push_back(row);
    }
    return {{"rows", rows},
            {"summary", ok ? "q^8 <= #U_min <= #U_delta <= (q^12-1)/(q(q-1)(q^2-1)) at q = 5, 7" : "chain violated"}};
}

// ------------------------------------------------------------ 4: (1,3)

json Suite::level_13(bool& ok) {
    json rows = json::array();
    const CountModel m = CountModel::hom(WeightVector({1, 3}), 1, Stratum::BasepointFree);
    std::mt19937_64 rng(kSampleSeed);
    for (std::uint64_t q : {5u, 7u}) {
        const Field f = make_field(q);
        const mpz_class sieve = cone_count(m, f, Method::Sieve, count_opt_);
        const mpz_class brute = cone_count(m, f, Method::Brute, count_opt_);
        const mpq_class w = weighted_count(sieve, q, GroupKind::GL2);
        // Per-row spot checks of the sieve against direct enumeration.
        int row_checks = 0, row_failures = 0;
        for (int i = 0; i < 10; ++i) {
            const HomTuple t = sample_tuple(f, m.lam, 1, rng, i % 2 == 0);
            ++row_checks;
            if (companion_count(m, t[0], Method::Sieve) != companion_count(m, t[0], Method::Brute)) ++row_failures;
        }
        const bool row_ok = sieve == brute && w == mpq_class(static_cast<unsigned long>(q * q)) && row_failures == 0;
        ok = ok && row_ok;
        rows.push_back({{"q", q},
                        {"sieve_cone", str(sieve)},
                        {"brute_cone", str(brute)},
                        {"weighted_count", str(w)},
                        {"row_checks", row_checks},
                        {"row_failures", row_failures},
                        {"ok", row_ok}});
    }
    return {{"rows", rows}, {"summary", ok ? "weighted basepoint-free count = q^2 at q = 5, 7; BRUTE = SIEVE" : "mismatch"}};
}

// ------------------------------------------------------------ 5: self-maps

json Suite::self_maps(bool& ok) {
    json rows = json::array();
    for (std::uint64_t q : {5u, 7u}) {
        const Field f = make_field(q);
        const CountModel m2 = CountModel::selfmap(2, Stratum::Morphism), m1 = CountModel::selfmap(1, Stratum::Morphism);
        const mpz_class b2 = cone_count(m2, f, Method::Brute, count_opt_);
        const mpz_class s2 = cone_count(m2, f, Method::Sieve, count_opt_);
        const mpq_class w2 = weighted_count(b2, q, GroupKind::GL2);
        const mpz_class c1 = cone_count(m1, f, Method::Brute, count_opt_);
        const BurnsideResult burn = burnside_check(m1, f);
        const bool row_ok = b2 == s2 && w2 == mpq_class(static_cast<unsigned long>(q * q)) &&
                            c1 == group_order(GroupKind::GL2, q) && burn.consistent;
        ok = ok && row_ok;
        rows.push_back({{"q", q},
                        {"degree2_cone", str(b2)},
                        {"degree2_weighted", str(w2)},
                        {"degree1_cone", str(c1)},
                        {"gl2_order", str(group_order(GroupKind::GL2, q))},
                        {"degree1_orbit_sum", str(burn.orbit_sum)},
                        {"degree1_orbits", str(burn.orbits)},
                        {"ok", row_ok}});
    }
    return {{"rows", rows},
            {"summary", ok ? "weighted degree-2 morphism count = q^2, degree-1 cone = |GL2| at q = 5, 7" : "mismatch"}};
}

// ------------------------------------------------------------ 6: motives

json Suite::motive_identities(bool& ok) {
    int checked = 0, failures = 0;
    json failed = json::array();
    std::vector<unsigned> w;
    // Every weight multiset with entries <= 7 and N + 1 <= 5 coordinates.
    std::function<void(std::size_t)> rec = [&](std::size_t len) {
        if (w.size() == len) {
            const WeightVector lam(w);
            for (unsigned n = 1; n <= 9; n += 2) {
                ++checked;
                const MotiveExpr quotient = motive_hom(lam, n) / motive_group(GroupName::PGL2);
                if (quotient != motive_moduli_closed_form(lam, n) || !quotient.is_polynomial()) {
                    ++failures;
                    if (failed.size() < 10) failed.push_back(lam.to_string() + " n=" + std::to_string(n));
                }
            }
            return;
        }
        for (unsigned x = w.empty() ? 1 : w.back(); x <= 7; ++x) {
            w.push_back(x);
            rec(len);
            w.pop_back();
        }
    };
    for (std::size_t len = 2; len <= 5; ++len) rec(len);

    // Low-dimensional table.
    const MotiveExpr L = MotiveExpr::L(), one = MotiveExpr::integer(1);
    const std::vector<std::pair<WeightVector, MotiveExpr>> table = {
        {WeightVector({4, 6}), MotiveExpr::L(8)},
        {WeightVector({1, 2, 3}), MotiveExpr::L(3) * (MotiveExpr::L(2) + L + one)},
        {WeightVector({1, 1, 1, 1}), MotiveExpr::L(0) * (MotiveExpr::L(4) + MotiveExpr::L(3) +
                                                          MotiveExpr::integer(2) * MotiveExpr::L(2) + L + one)},
        {WeightVector({2, 3, 4, 5}), MotiveExpr::L(10) * (MotiveExpr::L(4) + MotiveExpr::L(3) +
                                                           MotiveExpr::integer(2) * MotiveExpr::L(2) + L + one)},
    };
    json rows = json::array();
    for (const auto& [lam, expected] : table) {
        const MotiveResult got = motive_moduli(lam, 1);
        const bool row_ok = got.value == expected && !got.empirical;
        if (!row_ok) ++failures;
        rows.push_back({{"lambda", lam.to_string()}, {"n", 1}, {"motive", got.value.to_string()}, {"ok", row_ok}});
    }
    ok = failures == 0;
    return {{"closed_form_checks", checked},
            {"failures", failures},
            {"failed", failed},
            {"table", rows},
            {"summary", std::to_string(checked) + " quotient identities, " + std::to_string(failures) + " failures"}};
}

// ------------------------------------------------------------ 7: GIT

json Suite::git_properties(bool& ok) {
    const std::vector<std::pair<WeightVector, unsigned>> configs = {
        {WeightVector({4, 6}), 1}, {WeightVector({1, 3}), 1}, {WeightVector({1, 1}), 3},
        {WeightVector({1, 2}), 2}, {WeightVector({1, 1, 1}), 1}, {WeightVector({1, 3, 5}), 1}};
    const int per_config = 10000;
    std::mt19937_64 rng(kSampleSeed + 7);
    json rows = json::array();
    long total_violations = 0;
    for (std::uint64_t q : {5u, 7u, 13u}) {
        const Field f = make_field(q);
        for (const auto& [lam, n] : configs) {
            bool all_odd = n % 2 == 1;
            for (unsigned x : lam.weights()) all_odd = all_odd && x % 2 == 1;
            long invariance = 0, odd_semistable = 0, bpf_unstable = 0;
            std::map<std::string, int> classes;
            for (int i = 0; i < per_config; ++i) {
                const HomTuple t = sample_tuple(f, lam, n, rng, i % 2 == 0);
                const GitClass c = hm_classify(t);
                ++classes[std::string(git_class_name(c))];
                if (hm_classify(hom_substitute(t, sample_moebius(f, rng))) != c) ++invariance;
                if (all_odd && c == GitClass::StrictlySemistable) ++odd_semistable;
                if (base_point_free(t) && c != GitClass::Stable) ++bpf_unstable;
            }
            total_violations += invariance + odd_semistable + bpf_unstable;
            rows.push_back({{"q", q},
                            {"lambda", lam.to_string()},
                            {"n", n},
                            {"samples", per_config},
                            {"classes", classes},
                            {"invariance_violations", invariance},
                            {"odd_semistable_violations", odd_semistable},
                            {"basepoint_free_not_stable", bpf_unstable}});
        }
    }
    ok = total_violations == 0;
    return {{"rows", rows},
            {"summary", std::to_string(rows.size()) + " configurations x " + std::to_string(per_config) +
                            " tuples, " + std::to_string(total_violations) + " violations"}};
}

// ------------------------------------------------------------ 8: fixtures

json Suite::extremal_fixtures(bool& ok) {
    const Field f = make_field(13);
    const WeightVector lam({4, 6});
    auto mono = [&](unsigned i, unsigned j) { return BinForm::monomial(f, i, j); };
    struct Fixture {
        std::string name;
        BinForm A, B;
    };
    const std::vector<Fixture> fixtures = {
        {"[0:XY^5]", BinForm(f, 4), mono(1, 5)},
        {"[XY^3:0]", mono(1, 3), BinForm(f, 6)},
        {"[0:X^2Y^4]", BinForm(f, 4), mono(2, 4)},
    };
    json rows = json::array();
    for (const auto& fx : fixtures) {
        const HomTuple t(lam, 1, {fx.A, fx.B});
        const StabilizerVerdict v = stabilizer_verdict(t);
        const StratumLabel s = stratum_classify(WeierstrassDatum(1, fx.A, fx.B));
        const bool row_ok = v == StabilizerVerdict::NotFiniteReducedTame && s == StratumLabel::MinNotSf;
        ok = ok && row_ok;
        rows.push_back({{"datum", fx.name},
                        {"verdict", std::string(stabilizer_verdict_name(v))},
                        {"stratum", std::string(stratum_label_name(s))},
                        {"ok", row_ok}});
    }
    // The family [a0 X^2Y^2 : a1 X^3Y^3] over every a0, a1 != 0.
    std::map<std::string, int> family_strata;
    int family_bad = 0;
    for (Rep a0 = 1; a0 < 13; ++a0)
        for (Rep a1 = 1; a1 < 13; ++a1) {
            const HomTuple t(lam, 1, {mono(2, 2).scaled(a0), mono(3, 3).scaled(a1)});
            if (stabilizer_verdict(t) != StabilizerVerdict::NotFiniteReducedTame) ++family_bad;
            ++family_strata[std::string(stratum_label_name(stratum_classify(WeierstrassDatum(1, t[0], t[1]))))];
        }
    ok = ok && family_bad == 0;
    // mu_{12n} fixture [X^{4n} : Y^{6n}].
    json mu = json::array();
    for (std::uint64_t q : {5u, 13u}) {
        const Field g = make_field(q);
        for (unsigned n : {1u, 2u}) {
            const HomTuple t(lam, n, {BinForm::monomial(g, 4 * n, 0), BinForm::monomial(g, 0, 6 * n)});
            const std::size_t order = pgl2_stabilizer(t, opt_.workers).size();
            const std::uint64_t d = std::gcd<std::uint64_t>(12 * n, q - 1);
            const bool row_ok = order % d == 0;
            ok = ok && row_ok;
            mu.push_back({{"q", q}, {"n", n}, {"stabilizer_order", order}, {"gcd", d}, {"ok", row_ok}});
        }
    }
    return {{"fixtures", rows},
            {"family_strata", family_strata},
            {"family_not_tame_failures", family_bad},
            {"mu_fixture", mu},
            {"summary", ok ? "all fixtures NOT_FINITE_REDUCED_TAME, stabilizer orders divisible by gcd(12n, q-1)"
                           : "fixture mismatch"}};
}

// ------------------------------------------------------------ 9: surveys

json Suite::fiber_surveys(bool& ok) {
    std::mt19937_64 rng(kSampleSeed + 9);
    json rows = json::array();
    long violations = 0;
    for (std::uint64_t q : {5u, 7u, 13u}) {
        const Field f = make_field(q);
        long degree_failures = 0, sf_additive = 0, minimal_failures = 0, minimalized = 0, non_fibration = 0;
        std::map<std::string, int> labels;
        for (int i = 0; i < 1000; ++i) {
            const unsigned n = 1 + i % 2;
            WeierstrassDatum w = sample_datum(f, n, rng, i % 3 != 0);
            if (i % 5 == 0 && n == 2) {
                // Non-minimal by construction: U^4 A', U^6 B' with deg U = 1.
                const WeierstrassDatum base = sample_datum(f, 1, rng, false);
                std::uniform_int_distribution<Rep> c(0, static_cast<Rep>(q - 1));
                const Rep a = c(rng), b = c(rng);
                const BinForm U = BinForm::linear(f, a == 0 && b == 0 ? 1 : a, b);
                w = WeierstrassDatum(2, base.A() * U.pow(4), base.B() * U.pow(6));
            }
            const StratumLabel label = stratum_classify(w);
            ++labels[std::string(stratum_label_name(label))];
            unsigned total = 0;
            for (const auto& e : fiber_survey(w, opt_.seed)) {
                total += e.degree * e.ord_delta;
                if (label == StratumLabel::Sf && !e.fiber.is_multiplicative_or_smooth()) ++sf_additive;
            }
            if (total != 12 * n) ++degree_failures;
            try {
                const Minimalization m = minimalize(w);
                if (m.U.degree() > 0) ++minimalized;
                const bool inverse = m.datum.A() * m.U.pow(4) == w.A() && m.datum.B() * m.U.pow(6) == w.B() &&
                                     m.datum.n() + m.U.degree() == n;
                const Minimalization again = minimalize(m.datum);
                const bool idempotent = again.U.degree() == 0 && again.datum.A() == m.datum.A() &&
                                        again.datum.B() == m.datum.B();
                if (!inverse || !idempotent) ++minimal_failures;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NonFibration) throw;
                ++non_fibration;
            }
        }
        violations += degree_failures + sf_additive + minimal_failures;
        rows.push_back({{"q", q},
                        {"data", 1000},
                        {"labels", labels},
                        {"degree_failures", degree_failures},
                        {"sf_with_additive_fiber", sf_additive},
                        {"minimalized", minimalized},
                        {"non_fibration", non_fibration},
                        {"minimalize_failures", minimal_failures}});
    }
    ok = violations == 0;
    return {{"rows", rows},
            {"summary", "3000 data, " + std::to_string(violations) + " violations of sum deg*ord(Delta) = 12n, "
                                                                     "SF fiber types or minimalization"}};
}

// ------------------------------------------------------------ 10: fat points

json Suite::fat_points(bool& ok) {
    json rows = json::array();
    for (std::uint64_t p : {5u, 7u}) {
        const Field f = make_field(p);
        const BinForm X = BinForm::monomial(f, 1, 0), Y = BinForm::monomial(f, 0, 1);
        const BinForm Z = X * (X - Y).pow(static_cast<unsigned>(p)) * Y;
        const FatPointVerdict v = fatpoint_finite_reduced(bf_factor(Z), p);
        const bool row_ok = v == FatPointVerdict::NotFiniteReduced;
        ok = ok && row_ok;
        rows.push_back({{"scheme", "X(X-Y)^p Y"}, {"p", p}, {"verdict", std::string(fatpoint_verdict_name(v))}, {"ok", row_ok}});
    }
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const Field f = make_field(p);
        const BinForm X = BinForm::monomial(f, 1, 0), Y = BinForm::monomial(f, 0, 1);
        const FatPointVerdict v = fatpoint_finite_reduced(bf_factor(X * Y * (X - Y)), p);
        const bool row_ok = v == FatPointVerdict::FiniteReduced;
        ok = ok && row_ok;
        rows.push_back({{"scheme", "XY(X-Y)"}, {"p", p}, {"verdict", std::string(fatpoint_verdict_name(v))}, {"ok", row_ok}});
    }
    return {{"rows", rows}, {"summary", ok ? "X(X-Y)^pY not finite reduced at p = 5, 7; XY(X-Y) finite reduced at all tested p"
                                           : "verdict mismatch"}};
}

// ------------------------------------------------------------ 11: oracles

json Suite::oracle_equivalence(bool& ok) {
    std::mt19937_64 rng(kSampleSeed + 11);
    const WeightVector lam({4, 6});
    json rows = json::array();
    long disagreements = 0;
    for (std::uint64_t q : {5u, 7u}) {
        const Field f = make_field(q);
        const PointOracle oracle(q, 6);
        long bpf_dis = 0, git_dis = 0, stratum_dis = 0;
        std::map<std::string, int> classes;
        for (int i = 0; i < 1000; ++i) {
            const HomTuple t = sample_tuple(f, lam, 1, rng, i % 2 == 0);
            if (base_point_free(t) == oracle.has_common_zero(t)) ++bpf_dis;
            const GitClass c = hm_classify(t);
            ++classes[std::string(git_class_name(c))];
            if (c != oracle.git_class(t)) ++git_dis;
            const WeierstrassDatum w(1, t[0], t[1]);
            if (stratum_classify(w) != oracle.weierstrass_label(w)) ++stratum_dis;
        }
        disagreements += bpf_dis + git_dis + stratum_dis;
        rows.push_back({{"q", q},
                        {"instances", 1000},
                        {"max_extension_degree", 6},
                        {"classes", classes},
                        {"common_zero_disagreements", bpf_dis},
                        {"git_disagreements", git_dis},
                        {"stratum_disagreements", stratum_dis}});
    }
    ok = disagreements == 0;
    return {{"rows", rows},
            {"summary", "2000 instances over P^1(F_{q^k}), k <= 6: " + std::to_string(disagreements) + " disagreements"}};
}

}  // namespace wstack::verify
