#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace gwcount {

using Rational = mpq_class;

/// A net (rank 3 linear series) of polynomials of degree at most d in an
/// affine coordinate xi. Row r holds the coefficients beta_0..beta_d of the
/// r-th basis polynomial.
class PolySeries {
public:
    using Coefficients = std::vector<Rational>;

    /// Throws DomainError on shape problems, RankDeficientError if the three
    /// rows are linearly dependent.
    PolySeries(int degree, std::array<Coefficients, 3> basis);

    int degree() const noexcept { return degree_; }
    const std::array<Coefficients, 3>& basis() const noexcept { return basis_; }
    const Coefficients& row(std::size_t r) const { return basis_.at(r); }

private:
    int degree_;
    std::array<Coefficients, 3> basis_;
};

/// Where a vanishing sequence is taken: xi = value, or xi = infinity.
struct SeriesPoint {
    bool at_infinity = true;
    Rational value;

    static SeriesPoint infinity() { return {}; }
    static SeriesPoint finite(Rational v) { return {false, std::move(v)}; }
};

/// Distinct vanishing orders a_0 < a_1 < a_2 of the series at a point.
struct VanishingSequence {
    std::array<int, 3> orders{};

    int operator[](std::size_t i) const { return orders.at(i); }
    bool has_base_point() const noexcept { return orders[0] > 0; }
    friend bool operator==(const VanishingSequence&, const VanishingSequence&) = default;
};

VanishingSequence vanishing_sequence(const PolySeries& series, const SeriesPoint& point);

/// A constant K with beta_{d-1} + K beta_d = 0 on every element. When both
/// top coefficients vanish on the whole series, any K works; K is then
/// reported as 0 with `degenerate` set.
struct RootSumRelation {
    Rational k;
    bool degenerate = false;
};

std::optional<RootSumRelation> root_sum_relation(const PolySeries& series);

/// True iff a root-sum relation exists. Whenever it does and the series has
/// no base point at infinity, verifies that the sequence at infinity has
/// a_1 >= 2 and throws InconsistencyError otherwise.
bool check_root_sum_criterion(const PolySeries& series);

/// Sum of the roots -beta_{d-1}/beta_d of a polynomial of exact degree d,
/// or nullopt when beta_d = 0.
std::optional<Rational> root_sum(std::span<const Rational> coefficients);

/// Coefficients of p(xi + shift), given those of p(xi).
PolySeries::Coefficients taylor_shift(std::span<const Rational> coefficients, const Rational& shift);

/// Applies taylor_shift to every basis row.
PolySeries translate(const PolySeries& series, const Rational& shift);

/// Rank of up to three coefficient rows of equal length.
int series_rank(const std::array<PolySeries::Coefficients, 3>& rows);

}  // namespace gwcount
