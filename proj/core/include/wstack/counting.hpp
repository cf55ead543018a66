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

#ifndef WSTACK_COUNTING_HPP
#define WSTACK_COUNTING_HPP

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wstack/homstack.hpp"
#include "wstack/motive.hpp"

namespace wstack {

enum class ModelKind { HomWeighted, SelfMap };

enum class Stratum { AllNonzero, BasepointFree, Morphism, UDelta, UMin, USf, GitStable, GitSemistable };

std::string_view model_kind_name(ModelKind k) noexcept;
std::string_view stratum_name(Stratum s) noexcept;
/// Accepts the canonical names ("U_SF") and short forms ("sf", "min",
/// "delta", "bpf", "morphism", "all", "stable", "semistable").
Stratum parse_stratum(std::string_view text);

/// A locus of coefficient tuples. Self-maps of degree n are tuples (F, G) of
/// forms of degree n, i.e. the coordinates of the weights (1, 1).
struct CountModel {
    ModelKind kind;
    WeightVector lam;
    unsigned n;
    Stratum stratum;

    static CountModel hom(WeightVector lam, unsigned n, Stratum s);
    static CountModel selfmap(unsigned n, Stratum s);

    /// Degrees of the coordinate forms.
    std::vector<unsigned> degrees() const;
    /// Total number of coefficients.
    unsigned coefficient_count() const;
    bool is_weierstrass_shape() const;
    /// Throws InvalidArgument for strata that do not apply to the model.
    void validate() const;
    /// Throws NotPrime / UnsupportedCharacteristic for unusable fields.
    void validate_field(const Field& f) const;
    std::string to_string() const;

    friend bool operator==(const CountModel& a, const CountModel& b) noexcept {
        return a.kind == b.kind && a.lam == b.lam && a.n == b.n && a.stratum == b.stratum;
    }
};

enum class Method { Brute, Sieve };
std::string_view method_name(Method m) noexcept;
Method parse_method(std::string_view text);

struct CountOptions {
    unsigned workers = 0;
    /// BRUTE refuses coefficient spaces larger than this.
    mpz_class brute_budget = mpz_class("4000000000");
    /// Use the specialized two-coordinate kernel when it applies.
    bool fast_kernel = true;
};

/// Number of nonzero coefficient tuples in the stratum.
mpz_class cone_count(const CountModel& model, const Field& f, Method method, const CountOptions& opt = {});

/// Per-label tuple counts of stratum_classify over the whole nonzero cone of
/// Weierstrass data of degree n, indexed by StratumLabel. Brute force only.
std::array<mpz_class, 4> weierstrass_label_counts(unsigned n, const Field& f, const CountOptions& opt = {});

/// Number of second coordinates u_1 with (u_0, u_1) in the stratum, for a
/// two-coordinate model and a fixed first coordinate.
mpz_class companion_count(const CountModel& model, const BinForm& u0, Method method);

enum class GroupKind { GL2, PGL2, Gm };
std::string_view group_kind_name(GroupKind g) noexcept;
mpz_class group_order(GroupKind g, std::uint64_t q);
/// raw / |group(F_q)| as an exact rational.
mpq_class weighted_count(const mpz_class& raw, std::uint64_t q, GroupKind g);

struct BoundCheck {
    mpq_class lower, upper;
    bool satisfied;
};

struct CountReport {
    CountModel model;
    std::uint64_t q;
    std::string field;
    Method method;
    mpz_class raw_cone_count;
    GroupKind group;
    mpz_class group_order;
    mpq_class weighted_count;
    /// Exact prediction, set only where a closed formula is asserted.
    std::optional<mpq_class> predicted;
    std::optional<bool> match;
    std::optional<BoundCheck> bounds;
    /// Parity outside the proven range: the formula value is shown next to
    /// the count but never checked.
    bool empirical = false;
    std::optional<mpq_class> formula_value;
    std::optional<double> wall_time;

    /// No checked prediction failed.
    bool ok() const noexcept;

    friend bool operator==(const CountReport& a, const CountReport& b);
};

/// cone_count, weighted count and whichever prediction applies.
CountReport verify_report(const CountModel& model, const Field& f, Method method, const CountOptions& opt = {});

struct BurnsideOptions {
    /// Added to every stabilizer order; a nonzero value simulates a broken
    /// stabilizer computation.
    int stabilizer_offset = 0;
    std::uint64_t max_cone = 10'000'000;
};

struct BurnsideResult {
    mpz_class orbits;
    /// Sum over orbits of 1 / |Stab|.
    mpq_class orbit_sum;
    /// raw / |GL_2(F_q)|.
    mpq_class cone_ratio;
    bool consistent;
};

/// Orbit decomposition of the stratum under GL_2(F_q) by direct enumeration.
BurnsideResult burnside_check(const CountModel& model, const Field& f, const BurnsideOptions& opt = {});

}  // namespace wstack

#endif  // WSTACK_COUNTING_HPP
