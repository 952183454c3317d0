#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>

#include "noc/code.hpp"
#include "noc/errors.hpp"

namespace noc {

// All bound arithmetic is exact: big integers for counts and powers, big
// rationals for the real-valued bounds, and floors/ceilings by integer
// comparison. No operation in this header touches floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// base^exp for exp >= 0.
BigInt ipow(const BigInt& base, int exp);

// Renders "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const BigRat& r);

// How the per-length maxima feeding a summed bound were obtained.
enum class BoundSource { Exact, LevenshteinFloor };

struct LevenshteinBound {
    BigRat value;  // (n-1)^(n-1) * q^n / n^n, exactly
    BigInt floor_value;
};

// Upper bound on the maximum size of a fixed-length code: the exact rational
// (n-1)^(n-1) * q^n / n^n together with its floor. Requires n, q >= 2.
LevenshteinBound levenshtein_upper(int n, int q);

// Size of the classic lower-bound construction: (q-1)^(n-1). Requires n, q >= 2.
BigInt classic_lower_size(int n, int q);

// Sum of per-length maxima over lengths m..n. C_values must supply every
// length in the range (missing entry -> DomainError). Requires 2 <= m <= n.
BigInt trivial_sum_upper(int m, int n, int q, const std::map<int, BigInt>& C_values);

// ceil(log_q c) as the smallest t >= 0 with q^t >= c, by integer power
// comparison. Requires c >= 1 and q >= 2.
int entropy_avg_lower(const BigInt& c, int q);

// Mean codeword length of a non-empty code, as an exact rational.
BigRat average_length(const Code& S);

struct BoundReport {
    int n = 0;
    int q = 0;
    BigRat levenshtein_value;
    BigInt levenshtein_floor;
    BigInt classic_lower;
    std::optional<BigInt> exact_max;            // from search, when available
    std::optional<BigInt> trivial_sum;          // over lengths [trivial_m, n]
    int trivial_m = 0;                          // meaningful iff trivial_sum set
    BoundSource trivial_source = BoundSource::LevenshteinFloor;
};

// Assembles the closed-form bounds for (n, q); when exact_max is supplied the
// sandwich classic_lower <= exact_max <= levenshtein_floor is asserted
// (violation -> InvariantError, it would indicate a search or bound bug).
BoundReport bound_report(int n, int q, std::optional<BigInt> exact_max = std::nullopt);

struct LengthReport {
    BigInt code_size;   // number of codewords
    int q = 0;
    BigRat avg_length;  // exact mean length
    int entropy_floor;  // ceil(log_q code_size)
    int n = 0;          // maximum codeword length
    int bracket_low;    // n - 2
    bool trend_holds;   // entropy_floor >= n - 2 at this finite q (datum, not a theorem)
};

// Measures a non-empty code and asserts entropy_floor <= avg_length <= n,
// which holds for every non-overlapping code (violation -> InvariantError).
// The caller is responsible for verifying non-overlap first.
LengthReport length_report(const Code& S);

// Exact check of (q-1)^(n-2) > q^(n-3), the finite-q condition certifying
// that a code of size (q-1)^(n-2) already forces entropy_floor >= n - 2.
// Requires n >= 3 and q >= 2.
bool entropy_trend_holds(int n, int q);

} // namespace noc
