#include "qfib/local_solubility.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qfib {
namespace {

// valuation and unit part without primality re-checks (hot path helper)
std::pair<int, std::int64_t> split_valuation(std::int64_t n, std::int64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return {v, n};
}

int eps_mod2(std::int64_t u) { // (u-1)/2 mod 2 for odd u (sign included)
    std::int64_t r = ((u - 1) / 2) % 2;
    return r < 0 ? -r : r;
}

int omega_mod2(std::int64_t u) { // (u^2-1)/8 mod 2 for odd u
    std::int64_t m = u % 8;
    if (m < 0)
        m += 8;
    return (m == 3 || m == 5) ? 1 : 0;
}

} // namespace

Place Place::finite(std::int64_t prime) {
    if (prime < 2 || !is_prime(static_cast<std::uint64_t>(prime)))
        throw std::domain_error("Place::finite: p must be prime");
    return Place{prime};
}

DiagonalForm::DiagonalForm(std::initializer_list<std::int64_t> coeffs)
    : DiagonalForm(std::span<const std::int64_t>(coeffs.begin(),
                                                 coeffs.size())) {}

DiagonalForm::DiagonalForm(std::span<const std::int64_t> coeffs) {
    if (coeffs.size() != 3 && coeffs.size() != 4)
        throw std::domain_error("DiagonalForm: rank must be 3 or 4");
    rank_ = static_cast<int>(coeffs.size());
    a_.fill(0);
    for (int i = 0; i < rank_; ++i) {
        std::int64_t c = coeffs[i];
        if (c == 0)
            throw std::domain_error("DiagonalForm: zero coefficient");
        if (c > coeff_bound || c < -coeff_bound)
            throw std::domain_error("DiagonalForm: |coefficient| > 2^31");
        a_[i] = c;
    }
}

int hilbert_symbol(std::int64_t a, std::int64_t b, Place v) {
    if (a == 0 || b == 0)
        throw std::domain_error("hilbert_symbol: arguments must be nonzero");
    if (v.is_real())
        return (a < 0 && b < 0) ? -1 : 1;
    std::int64_t p = v.p;
    if (p == 2) {
        auto [al, u] = split_valuation(a, 2);
        auto [be, w] = split_valuation(b, 2);
        int e = (eps_mod2(u) * eps_mod2(w) + al * omega_mod2(w) +
                 be * omega_mod2(u)) % 2;
        return e ? -1 : 1;
    }
    auto [al, u] = split_valuation(a, p);
    auto [be, w] = split_valuation(b, p);
    int s = 1;
    if ((al & 1) && (be & 1) && ((p - 1) / 2) % 2 == 1)
        s = -s;
    if (be & 1)
        s *= legendre_symbol(u, p);
    if (al & 1)
        s *= legendre_symbol(w, p);
    return s;
}

int hasse_invariant(const DiagonalForm& form, Place v) {
    int s = 1;
    for (int i = 0; i < form.rank(); ++i)
        for (int j = i + 1; j < form.rank(); ++j)
            s *= hilbert_symbol(form.coeff(i), form.coeff(j), v);
    return s;
}

bool square_class_is_square(std::int64_t n, Place v) {
    if (n == 0)
        throw std::domain_error("square_class_is_square: n must be nonzero");
    if (v.is_real())
        return n > 0;
    auto [val, u] = split_valuation(n, v.p);
    if (val & 1)
        return false;
    if (v.p == 2) {
        std::int64_t m = u % 8;
        if (m < 0)
            m += 8;
        return m == 1;
    }
    return legendre_symbol(u, v.p) == 1;
}

namespace {

// Square class of prod a_i at v, valuation-wise: the literal product of four
// 2^31-bounded coefficients can overflow.
bool product_square_class_is_square(const DiagonalForm& form, Place v) {
    if (v.is_real()) {
        int neg = 0;
        for (std::int64_t c : form.coefficients())
            if (c < 0)
                ++neg;
        return neg % 2 == 0;
    }
    std::int64_t p = v.p;
    int val = 0;
    std::int64_t sign = 1;
    std::uint64_t unit_prod = 1; // odd/unit parts multiplied mod 8 or mod p
    std::uint64_t mod = p == 2 ? 8 : static_cast<std::uint64_t>(p);
    for (std::int64_t c : form.coefficients()) {
        auto [cv, cu] = split_valuation(c, p);
        val += cv;
        if (cu < 0) {
            sign = -sign;
            cu = -cu;
        }
        unit_prod = unit_prod * (static_cast<std::uint64_t>(cu) % mod) % mod;
    }
    if (val & 1)
        return false;
    std::int64_t u = static_cast<std::int64_t>(unit_prod);
    if (sign < 0)
        u = -u;
    if (p == 2) {
        std::int64_t m = u % 8;
        if (m < 0)
            m += 8;
        return m == 1;
    }
    return legendre_symbol(u, p) == 1;
}

} // namespace

bool is_isotropic(const DiagonalForm& form, Place v) {
    if (v.is_real()) {
        bool pos = false, neg = false;
        for (std::int64_t c : form.coefficients())
            (c > 0 ? pos : neg) = true;
        return pos && neg;
    }
    if (form.rank() == 3) {
        // a0 x^2 + a1 y^2 = -a2 z^2 is solvable iff (-a0 a2, -a1 a2)_v = +1
        return hilbert_symbol(-form.coeff(0) * form.coeff(2),
                              -form.coeff(1) * form.coeff(2), v) == 1;
    }
    // rank 4: anisotropic iff disc is a square in Q_v and the Hasse
    // invariant equals -(-1,-1)_v
    if (!product_square_class_is_square(form, v))
        return true;
    return hasse_invariant(form, v) != -hilbert_symbol(-1, -1, v);
}

std::vector<Place> relevant_places(const DiagonalForm& form,
                                   const SpfTable* table) {
    std::vector<std::int64_t> odd;
    for (std::int64_t c : form.coefficients()) {
        std::uint64_t n = static_cast<std::uint64_t>(c < 0 ? -c : c);
        while (n % 2 == 0)
            n /= 2;
        if (table && n <= table->limit()) {
            while (n > 1) {
                std::uint32_t p = table->spf(n);
                odd.push_back(p);
                while (n % p == 0)
                    n /= p;
            }
        } else {
            for (std::uint64_t d = 3; d * d <= n; d += 2) {
                if (n % d == 0) {
                    odd.push_back(static_cast<std::int64_t>(d));
                    while (n % d == 0)
                        n /= d;
                }
            }
            if (n > 1)
                odd.push_back(static_cast<std::int64_t>(n));
        }
    }
    std::sort(odd.begin(), odd.end());
    odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
    std::vector<Place> places;
    places.push_back(Place::real());
    places.push_back(Place{2});
    for (std::int64_t p : odd)
        places.push_back(Place{p});
    return places;
}

SolubilityReport is_locally_soluble_everywhere(const DiagonalForm& form,
                                               const SpfTable* table) {
    SolubilityReport report{form};
    report.everywhere_soluble = true;
    for (Place v : relevant_places(form, table)) {
        bool ok = is_isotropic(form, v);
        if (v.is_real())
            report.real_soluble = ok;
        else
            report.prime_verdicts[v.p] = ok;
        report.everywhere_soluble = report.everywhere_soluble && ok;
    }
    return report;
}

} // namespace qfib
