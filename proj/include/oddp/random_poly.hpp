/*
 * random_poly.hpp
 * ---------------
 * Seeded random polynomials for the axiom checkers and property tests.
 * Coefficients are rationals with numerator and denominator bounded by 16;
 * each sample index derives its own stream from the base seed, so samples
 * are reproducible independently of evaluation order.
 */
#pragma once

#include <oddp/superpoly.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oddp {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stream for sample `index` of run `seed`.
inline std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 1)));
}

class RandomPolySource {
public:
    /// `odd_family`/`even_families` select which variables may appear;
    /// odd degree is capped by `dim`, total even degree by `max_even_degree`.
    RandomPolySource(int dim, std::vector<Family> even_families, std::vector<Family> odd_families,
                     int max_even_degree = 3)
        : dim_(dim),
          even_families_(std::move(even_families)),
          odd_families_(std::move(odd_families)),
          max_even_degree_(max_even_degree) {}

    Scalar coefficient(std::mt19937_64& rng) const {
        const long long num = 1 + static_cast<long long>(rng() % 16);
        const long long den = 1 + static_cast<long long>(rng() % 16);
        const long long sign = (rng() & 1) ? 1 : -1;
        return Scalar(Rational(sign * num, den));
    }

    /// Nonzero homogeneous polynomial of the requested parity (0 or 1).
    SuperPolynomial homogeneous(std::mt19937_64& rng, int parity_bit) const {
        for (;;) {
            SuperPolynomial p;
            const int terms = 1 + static_cast<int>(rng() % 3);
            for (int t = 0; t < terms; ++t) {
                SuperMonomial m;
                fill_odd(rng, m, parity_bit);
                fill_even(rng, m);
                p.add_term(m, coefficient(rng));
            }
            if (!p.is_zero())
                return p;
        }
    }

    /// Homogeneous with random parity; always even when no odd family is allowed.
    SuperPolynomial sample(std::mt19937_64& rng) const {
        const int parity_bit = odd_families_.empty() ? 0 : static_cast<int>(rng() % 2);
        return homogeneous(rng, parity_bit);
    }

private:
    void fill_odd(std::mt19937_64& rng, SuperMonomial& m, int parity_bit) const {
        if (odd_families_.empty())
            return;
        const Family fam = odd_families_[rng() % odd_families_.size()];
        // degree uniform over {parity_bit, parity_bit + 2, ...} up to dim
        const int steps = (dim_ - parity_bit) / 2 + 1;
        const int degree = parity_bit + 2 * static_cast<int>(rng() % steps);
        std::uint64_t mask = 0;
        while (std::popcount(mask) < degree)
            mask |= std::uint64_t{1} << (rng() % dim_);
        (fam == Family::Theta ? m.theta : m.small_theta) = mask;
    }

    void fill_even(std::mt19937_64& rng, SuperMonomial& m) const {
        if (even_families_.empty())
            return;
        const int degree = static_cast<int>(rng() % (max_even_degree_ + 1));
        for (int d = 0; d < degree; ++d) {
            const Family fam = even_families_[rng() % even_families_.size()];
            const int index = 1 + static_cast<int>(rng() % dim_);
            bool merged = false;
            for (auto& [v, e] : m.even) {
                if (v == VariableId{fam, index}) {
                    ++e;
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                m.even.emplace_back(VariableId{fam, index}, 1);
                std::sort(m.even.begin(), m.even.end());
            }
        }
    }

    int dim_;
    std::vector<Family> even_families_;
    std::vector<Family> odd_families_;
    int max_even_degree_;
};

}  // namespace oddp
