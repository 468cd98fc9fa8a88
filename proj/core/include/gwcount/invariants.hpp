#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string_view>
#include <vector>

namespace gwcount {

using Count = mpz_class;

/// Exact binomial coefficient; zero outside 0 <= k <= n.
Count binomial(std::int64_t n, std::int64_t k);

/// j-invariant classes for which elliptic counts are defined. The nodal
/// curve (j = infinity) is not a member; its content is zt_invariant().
enum class JClass { Generic, JZero, J1728 };

inline constexpr JClass kAllJClasses[] = {JClass::Generic, JClass::JZero, JClass::J1728};

/// Order of the extra automorphism group: 1, 3 and 2 respectively.
int aut_factor(JClass j) noexcept;

/// CLI spelling: "generic", "0", "1728".
std::string_view to_string(JClass j) noexcept;

/// Dense memo of rational curve counts N_1..N_max.
///
/// Filling is single-writer. Once filled to a degree, const access from
/// several threads is safe.
class RecursionTable {
public:
    RecursionTable();

    /// Highest degree currently stored.
    int max_degree() const noexcept { return static_cast<int>(values_.size()) - 1; }

    /// Extends the table so that max_degree() >= d.
    void fill_to(int d);

    /// Stored N_d; throws DomainError if d is outside 1..max_degree().
    const Count& at(int d) const;

    /// Evaluates the recursion for N_d from the stored lower entries
    /// without modifying the table. Requires d - 1 <= max_degree().
    Count derive(int d) const;

    /// Replaces the contents with externally supplied values N_1..N_n.
    /// No validation; see load_recursion_cache for the checked path.
    static RecursionTable from_values(std::vector<Count> values_from_degree_one);

private:
    std::vector<Count> values_;  // values_[0] unused
};

/// N_d, the number of degree d rational plane curves through 3d-1 points.
/// Fills `table` up to d.
Count rational_count(int d, RecursionTable& table);

/// E_{d,j} = C(d-1,2) N_d / aut_factor(j), with the division checked.
Count elliptic_count(int d, JClass j, RecursionTable& table);

/// Z.T = C(d-1,2) N_d, the top intersection on the closure of the
/// irreducible-domain locus.
Count zt_invariant(int d, RecursionTable& table);

struct DivisibilityRow {
    int d = 0;
    unsigned nd_mod3 = 0;
    unsigned d_mod3 = 0;
    unsigned binom_mod3 = 0;  // C(d-1, 2) mod 3
    // (N_d == 0 mod 3) disagrees with (d == 0 mod 3).
    bool flagged = false;
};

std::vector<DivisibilityRow> divisibility_report(int d_max, RecursionTable& table);
std::vector<DivisibilityRow> divisibility_report(int d_max);

}  // namespace gwcount
