#include "gwcount/series.hpp"

#include "gwcount/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace gwcount {

namespace {

using Rows = std::array<PolySeries::Coefficients, 3>;

// Row-reduces in place, scanning columns from index 0 upward, and returns the
// pivot columns. Each pivot is the lowest nonzero index of its reduced row, so
// the pivots are the distinct "lowest index" values attained in the span.
std::vector<int> lowest_index_pivots(Rows rows) {
    std::vector<int> pivots;
    const std::size_t width = rows[0].size();
    std::size_t next = 0;
    for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
        std::size_t found = next;
        while (found < rows.size() && sgn(rows[found][col]) == 0) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (std::size_t r = next + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][col]) == 0) {
                continue;
            }
            const Rational factor = rows[r][col] / rows[next][col];
            for (std::size_t c = col; c < width; ++c) {
                rows[r][c] -= factor * rows[next][c];
            }
        }
        pivots.push_back(static_cast<int>(col));
        ++next;
    }
    return pivots;
}

}  // namespace

int series_rank(const Rows& rows) {
    return static_cast<int>(lowest_index_pivots(rows).size());
}

PolySeries::PolySeries(int degree, std::array<Coefficients, 3> basis)
    : degree_(degree), basis_(std::move(basis)) {
    if (degree_ < 1) {
        throw DomainError("series degree must be >= 1, got " + std::to_string(degree_));
    }
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        if (basis_[r].size() != static_cast<std::size_t>(degree_) + 1) {
            throw DomainError("basis row " + std::to_string(r) + " has " +
                              std::to_string(basis_[r].size()) + " coefficients, expected " +
                              std::to_string(degree_ + 1));
        }
        for (auto& c : basis_[r]) {
            c.canonicalize();
        }
    }
    if (series_rank(basis_) != 3) {
        throw RankDeficientError("basis does not span a net (rank " +
                                 std::to_string(series_rank(basis_)) + " < 3)");
    }
}

PolySeries::Coefficients taylor_shift(std::span<const Rational> coefficients, const Rational& shift) {
    // q_m = sum_{n >= m} C(n, m) shift^{n-m} p_n
    const std::size_t n = coefficients.size();
    PolySeries::Coefficients out(n, Rational(0));
    std::vector<Rational> powers(n, Rational(1));
    for (std::size_t i = 1; i < n; ++i) {
        powers[i] = powers[i - 1] * shift;
    }
    mpz_class binom;
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = m; k < n; ++k) {
            if (sgn(coefficients[k]) == 0) {
                continue;
            }
            mpz_bin_uiui(binom.get_mpz_t(), k, m);
            out[m] += Rational(binom) * powers[k - m] * coefficients[k];
        }
    }
    return out;
}

PolySeries translate(const PolySeries& series, const Rational& shift) {
    std::array<PolySeries::Coefficients, 3> rows;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        rows[r] = taylor_shift(series.row(r), shift);
    }
    return PolySeries(series.degree(), std::move(rows));
}

VanishingSequence vanishing_sequence(const PolySeries& series, const SeriesPoint& point) {
    Rows local;
    for (std::size_t r = 0; r < local.size(); ++r) {
        if (point.at_infinity) {
            // In the chart 1/xi the order of a polynomial is d - deg.
            local[r].assign(series.row(r).rbegin(), series.row(r).rend());
        } else {
            local[r] = taylor_shift(series.row(r), point.value);
        }
    }
    const std::vector<int> pivots = lowest_index_pivots(std::move(local));
    if (pivots.size() != 3) {
        throw RankDeficientError("basis does not span a net");
    }
    VanishingSequence seq;
    std::copy(pivots.begin(), pivots.end(), seq.orders.begin());
    return seq;
}

std::optional<Rational> root_sum(std::span<const Rational> coefficients) {
    if (coefficients.size() < 2 || sgn(coefficients.back()) == 0) {
        return std::nullopt;
    }
    Rational sum = -coefficients[coefficients.size() - 2] / coefficients.back();
    return sum;
}

std::optional<RootSumRelation> root_sum_relation(const PolySeries& series) {
    const std::size_t top = static_cast<std::size_t>(series.degree());
    const auto& rows = series.basis();

    const auto leading = std::find_if(rows.begin(), rows.end(),
                                      [&](const auto& row) { return sgn(row[top]) != 0; });
    if (leading == rows.end()) {
        const bool sub_vanishes = std::all_of(rows.begin(), rows.end(),
                                              [&](const auto& row) { return sgn(row[top - 1]) == 0; });
        if (sub_vanishes) {
            return RootSumRelation{Rational(0), true};
        }
        return std::nullopt;
    }

    Rational k = -(*leading)[top - 1] / (*leading)[top];
    for (const auto& row : rows) {
        if (row[top - 1] + k * row[top] != 0) {
            return std::nullopt;
        }
    }
    return RootSumRelation{std::move(k), false};
}

bool check_root_sum_criterion(const PolySeries& series) {
    const bool holds = root_sum_relation(series).has_value();
    if (holds) {
        const VanishingSequence seq = vanishing_sequence(series, SeriesPoint::infinity());
        if (!seq.has_base_point() && seq[1] < 2) {
            throw InconsistencyError("root-sum relation holds but a_1 = " + std::to_string(seq[1]) +
                                     " < 2 at infinity");
        }
    }
    return holds;
}

}  // namespace gwcount
