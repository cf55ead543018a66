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

#ifndef WSTACK_HOMSTACK_HPP
#define WSTACK_HOMSTACK_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wstack/binform.hpp"

namespace wstack {

/// Weights (lambda_0, ..., lambda_N) of a weighted projective stack, N >= 1.
class WeightVector {
   public:
    explicit WeightVector(std::vector<unsigned> weights);

    std::size_t size() const noexcept { return w_.size(); }
    /// N, i.e. size() - 1.
    unsigned top_index() const noexcept { return static_cast<unsigned>(w_.size() - 1); }
    unsigned operator[](std::size_t i) const { return w_.at(i); }
    const std::vector<unsigned>& weights() const noexcept { return w_; }
    /// |lambda| = sum of weights.
    unsigned total() const noexcept;
    /// Dimension of the coefficient space sum (n lambda_i + 1).
    unsigned coefficient_count(unsigned n) const noexcept;
    /// Largest lcm(lambda_i, lambda_j) over i < j.
    std::uint64_t max_pair_lcm() const noexcept;
    /// "4,6"
    std::string to_string() const;

    friend bool operator==(const WeightVector& a, const WeightVector& b) noexcept { return a.w_ == b.w_; }

   private:
    std::vector<unsigned> w_;
};

/// Parses "4,6".
WeightVector parse_weights(std::string_view text);

/// Forms (u_0, ..., u_N) with deg u_i = n lambda_i, not all zero.
class HomTuple {
   public:
    HomTuple(WeightVector lam, unsigned n, std::vector<BinForm> forms);

    const WeightVector& lam() const noexcept { return lam_; }
    unsigned n() const noexcept { return n_; }
    const std::vector<BinForm>& forms() const noexcept { return u_; }
    const BinForm& operator[](std::size_t i) const { return u_.at(i); }
    const Field& field() const noexcept { return u_.front().field(); }
    std::string to_string() const;

    friend bool operator==(const HomTuple& a, const HomTuple& b) noexcept {
        return a.lam_ == b.lam_ && a.n_ == b.n_ && a.u_ == b.u_;
    }

   private:
    WeightVector lam_;
    unsigned n_;
    std::vector<BinForm> u_;
};

/// Parses semicolon separated coefficient lists, one per coordinate.
HomTuple parse_tuple(const Field& f, const WeightVector& lam, unsigned n, std::string_view text);

/// (u_i(aX + bY, cX + dY))_i.
HomTuple hom_substitute(const HomTuple& t, const Moebius& g);

/// True iff the u_i have no common zero on P^1 over the algebraic closure.
bool base_point_free(const HomTuple& t);

/// u_i = a_i U^{lambda_i / ell} for every i.
struct ConstancyWitness {
    unsigned ell;
    BinForm U;
    std::vector<Rep> a;
    /// Distinct geometric roots of U.
    unsigned degenerate_support;
};

/// Witness that the induced rational map P^1 -> P(lambda) is constant, or
/// nullopt when it is finite. U is monic.
std::optional<ConstancyWitness> constancy_witness(const HomTuple& t);

enum class GitClass { Unstable, StrictlySemistable, Stable };
std::string_view git_class_name(GitClass c) noexcept;

/// Hilbert-Mumford classification under PGL_2, from multiplicity thresholds
/// ord_p(u_i) > n lambda_i / 2 (semistability) and >= n lambda_i / 2
/// (stability); zero coordinates vanish to infinite order everywhere.
GitClass hm_classify(const HomTuple& t);

enum class StabilizerVerdict { FiniteReducedTame, NotFiniteReducedTame, OutOfRegime };
std::string_view stabilizer_verdict_name(StabilizerVerdict v) noexcept;

/// True iff char_p = 0 or char_p > n * max lcm(lambda_i, lambda_j).
bool stabilizer_regime(const WeightVector& lam, unsigned n, std::uint64_t char_p) noexcept;

/// Finite, reduced and tame stabilizer unless the map is constant with a
/// U supported on at most two points. char_p = 0 stands for characteristic 0.
StabilizerVerdict stabilizer_verdict(const HomTuple& t, std::uint64_t char_p);
/// Uses the characteristic of the tuple's field.
StabilizerVerdict stabilizer_verdict(const HomTuple& t);

/// Every g in PGL_2(F_q) with u_i o g = mu^{lambda_i} u_i for some mu in
/// F_q^*, in pgl2_enumerate order. workers = 0 picks the default.
std::vector<Moebius> pgl2_stabilizer(const HomTuple& t, unsigned workers = 0);

enum class FatPointVerdict { FiniteReduced, NotFiniteReduced };
std::string_view fatpoint_verdict_name(FatPointVerdict v) noexcept;

/// Number of geometric points of the divisor whose multiplicity is prime to
/// char_p (every point when char_p = 0).
unsigned tame_point_count(const Factorization& fact, std::uint64_t char_p) noexcept;
/// FiniteReduced iff tame_point_count >= 3.
FatPointVerdict fatpoint_finite_reduced(const Factorization& fact, std::uint64_t char_p);

}  // namespace wstack

#endif  // WSTACK_HOMSTACK_HPP
