#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qfib/arithmetic.hpp"

namespace qfib {

/// A place of Q: the real place or a finite place at a prime p.
struct Place {
    std::int64_t p = 0; // 0 encodes the real place

    static Place real() { return Place{0}; }
    static Place finite(std::int64_t prime);

    bool is_real() const { return p == 0; }
    bool operator==(const Place&) const = default;
    auto operator<=>(const Place&) const = default;
};

/// Diagonal quadratic form a_0 x_0^2 + ... + a_{r-1} x_{r-1}^2 with r in
/// {3,4}, all coefficients nonzero and |a_i| <= 2^31 so pairwise products
/// stay in 64 bits.
class DiagonalForm {
public:
    static constexpr std::int64_t coeff_bound = std::int64_t{1} << 31;

    DiagonalForm(std::initializer_list<std::int64_t> coeffs);
    explicit DiagonalForm(std::span<const std::int64_t> coeffs);

    int rank() const { return rank_; }
    std::int64_t coeff(int i) const { return a_[i]; }
    std::span<const std::int64_t> coefficients() const {
        return {a_.data(), static_cast<std::size_t>(rank_)};
    }

private:
    int rank_;
    std::array<std::int64_t, 4> a_;
};

/// Per-place solubility verdicts for a form, with the adelic conjunction.
struct SolubilityReport {
    DiagonalForm form;
    bool real_soluble = false;
    std::map<std::int64_t, bool> prime_verdicts;
    bool everywhere_soluble = false;
};

/// Hilbert symbol (a,b)_v in {-1,+1}: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution over the completion at v. Classical valuation /
/// residue-symbol evaluation, no point search.
int hilbert_symbol(std::int64_t a, std::int64_t b, Place v);

/// Product of hilbert_symbol over all coefficient pairs i < j.
int hasse_invariant(const DiagonalForm& form, Place v);

/// True iff n is a square in the completion at v.
bool square_class_is_square(std::int64_t n, Place v);

/// True iff the form has a nontrivial zero over the completion at v.
bool is_isotropic(const DiagonalForm& form, Place v);

/// The real place, 2, and every odd prime dividing a coefficient; the form
/// is isotropic at every omitted place. Pass a table covering max|a_i| to
/// skip trial division.
std::vector<Place> relevant_places(const DiagonalForm& form,
                                   const SpfTable* table = nullptr);

SolubilityReport is_locally_soluble_everywhere(const DiagonalForm& form,
                                               const SpfTable* table = nullptr);

} // namespace qfib
