#ifndef RIFFLE_PATHS_HPP
#define RIFFLE_PATHS_HPP

#include <cstdint>
#include <vector>

#include "riffle/qpolynomial.hpp"
#include "riffle/rational.hpp"

namespace riffle
{

inline constexpr int kMaxPathLength = 22;

/// Lattice path with +1/-1 steps from altitude 0; negative altitudes allowed.
class DyckPath
{
  public:
    /// Path of `length` steps whose step k+1 is down iff bit k of word is set.
    DyckPath(std::uint64_t word, int length);

    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<int>& steps() const { return steps_; }
    int final_altitude() const;

    /// Down steps that arrive at altitude -1 or -2.
    int down_visits_low() const;
    /// Indices k >= 1 with altitude y_k = 0.
    int returns_to_zero() const;

  private:
    std::vector<int> steps_;
};

enum class PathStatistic
{
    DownVisitsLow,
    ReturnsToZero,
};

/// sum over all paths from 0 to m2-m1 of q^statistic. Paths are visited in
/// ascending word order; `workers` splits the word range, and the integer
/// reduction keeps the result independent of the split.
QPolynomial path_statistic_poly(int m1, int m2, PathStatistic stat, int workers = 1);

/// Law of the number of down-steps arriving at altitude -1 or -2.
ExactPmf y_oracle_pmf(int m1, int m2, int workers = 1);
QPolynomial y_oracle_poly(int m1, int m2, int workers = 1);

/// Law of the number of returns to altitude 0.
ExactPmf w_oracle_pmf(int m1, int m2, int workers = 1);

struct ShiftRelationReport
{
    int m1;
    int m2;
    mpq_class total_variation;
    double total_variation_double;
};

/// Total-variation distance between Y_{m1,m2} and W_{m1-1,m2} + 2.
/// Requires m1 >= m2 + 2. Diagnostic only; the two laws are not equal.
ShiftRelationReport shift_relation_check(int m1, int m2);

} // namespace riffle

#endif
