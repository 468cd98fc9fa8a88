#include "gwcount/invariants.hpp"

#include "gwcount/errors.hpp"

#include <string>

namespace gwcount {

Count binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Count result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

int aut_factor(JClass j) noexcept {
    switch (j) {
        case JClass::Generic: return 1;
        case JClass::JZero: return 3;
        case JClass::J1728: return 2;
    }
    return 1;
}

std::string_view to_string(JClass j) noexcept {
    switch (j) {
        case JClass::Generic: return "generic";
        case JClass::JZero: return "0";
        case JClass::J1728: return "1728";
    }
    return "generic";
}

RecursionTable::RecursionTable() : values_{Count(0), Count(1)} {}

RecursionTable RecursionTable::from_values(std::vector<Count> values_from_degree_one) {
    RecursionTable table;
    table.values_.assign(1, Count(0));
    table.values_.insert(table.values_.end(),
                         std::make_move_iterator(values_from_degree_one.begin()),
                         std::make_move_iterator(values_from_degree_one.end()));
    return table;
}

const Count& RecursionTable::at(int d) const {
    if (d < 1 || d > max_degree()) {
        throw DomainError("degree " + std::to_string(d) + " not in table (max " +
                          std::to_string(max_degree()) + ")");
    }
    return values_[static_cast<std::size_t>(d)];
}

Count RecursionTable::derive(int d) const {
    if (d < 1) {
        throw DomainError("rational counts need d >= 1, got " + std::to_string(d));
    }
    if (d == 1) {
        return 1;
    }
    if (d - 1 > max_degree()) {
        throw DomainError("deriving N_" + std::to_string(d) + " needs entries up to " +
                          std::to_string(d - 1));
    }
    // N_d = sum_{i+j=d} N_i N_j (i^2 j^2 C(3d-4, 3i-2) - i^3 j C(3d-4, 3i-1))
    const std::int64_t top = 3 * static_cast<std::int64_t>(d) - 4;
    Count sum = 0;
    Count weight;
    for (std::int64_t i = 1; i < d; ++i) {
        const std::int64_t j = d - i;
        const Count ij = i * j;
        weight = ij * ij * binomial(top, 3 * i - 2);
        weight -= Count(i * i) * ij * binomial(top, 3 * i - 1);
        sum += values_[static_cast<std::size_t>(i)] * values_[static_cast<std::size_t>(j)] * weight;
    }
    return sum;
}

void RecursionTable::fill_to(int d) {
    if (values_.size() < 2) {
        values_.assign({Count(0), Count(1)});
    }
    values_.reserve(static_cast<std::size_t>(d) + 1);
    while (max_degree() < d) {
        Count next = derive(max_degree() + 1);
        values_.push_back(std::move(next));
    }
}

Count rational_count(int d, RecursionTable& table) {
    if (d < 1) {
        throw DomainError("rational counts need d >= 1, got " + std::to_string(d));
    }
    table.fill_to(d);
    return table.at(d);
}

namespace {

void require_elliptic_degree(int d) {
    if (d < 3) {
        throw DomainError("elliptic counts are defined for d >= 3, got d = " + std::to_string(d));
    }
}

}  // namespace

Count zt_invariant(int d, RecursionTable& table) {
    require_elliptic_degree(d);
    return binomial(d - 1, 2) * rational_count(d, table);
}

Count elliptic_count(int d, JClass j, RecursionTable& table) {
    require_elliptic_degree(d);
    const Count numerator = zt_invariant(d, table);
    const unsigned long divisor = static_cast<unsigned long>(aut_factor(j));
    Count quotient;
    mpz_fdiv_q_ui(quotient.get_mpz_t(), numerator.get_mpz_t(), divisor);
    if (quotient * divisor != numerator) {
        throw InconsistencyError("C(d-1,2) N_d is not divisible by " + std::to_string(divisor) +
                                 " at d = " + std::to_string(d));
    }
    return quotient;
}

namespace {

unsigned mod3(const Count& value) {
    return static_cast<unsigned>(mpz_fdiv_ui(value.get_mpz_t(), 3));
}

}  // namespace

std::vector<DivisibilityRow> divisibility_report(int d_max, RecursionTable& table) {
    if (d_max < 3) {
        throw DomainError("divisibility report needs d_max >= 3, got " + std::to_string(d_max));
    }
    table.fill_to(d_max);
    std::vector<DivisibilityRow> rows;
    rows.reserve(static_cast<std::size_t>(d_max) - 2);
    for (int d = 3; d <= d_max; ++d) {
        DivisibilityRow row;
        row.d = d;
        row.nd_mod3 = mod3(table.at(d));
        row.d_mod3 = static_cast<unsigned>(d % 3);
        row.binom_mod3 = mod3(binomial(d - 1, 2));
        row.flagged = (row.nd_mod3 == 0) != (row.d_mod3 == 0);
        rows.push_back(row);
    }
    return rows;
}

std::vector<DivisibilityRow> divisibility_report(int d_max) {
    RecursionTable table;
    return divisibility_report(d_max, table);
}

}  // namespace gwcount
