#include "noc/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace noc {

BigInt ipow(const BigInt& base, int exp) {
    if (exp < 0) throw DomainError("ipow requires a non-negative exponent");
    BigInt out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

std::string to_fraction_string(const BigRat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

LevenshteinBound levenshtein_upper(int n, int q) {
    if (n < 2 || q < 2) throw DomainError("levenshtein_upper requires n >= 2 and q >= 2");
    const BigInt num = ipow(n - 1, n - 1) * ipow(q, n);
    const BigInt den = ipow(n, n);
    return {BigRat(num, den), num / den};
}

BigInt classic_lower_size(int n, int q) {
    if (n < 2 || q < 2) throw DomainError("classic_lower_size requires n >= 2 and q >= 2");
    return ipow(q - 1, n - 1);
}

BigInt trivial_sum_upper(int m, int n, int q, const std::map<int, BigInt>& C_values) {
    if (m < 2 || m > n) throw DomainError("trivial_sum_upper requires 2 <= m <= n");
    if (q < 2) throw DomainError("trivial_sum_upper requires q >= 2");
    BigInt total = 0;
    for (int len = m; len <= n; ++len) {
        const auto it = C_values.find(len);
        if (it == C_values.end())
            throw DomainError("trivial_sum_upper: no maximum supplied for length " +
                              std::to_string(len));
        total += it->second;
    }
    return total;
}

int entropy_avg_lower(const BigInt& c, int q) {
    if (c < 1) throw DomainError("entropy_avg_lower requires a cardinality >= 1");
    if (q < 2) throw DomainError("entropy_avg_lower requires q >= 2");
    int t = 0;
    BigInt power = 1;
    while (power < c) {
        power *= q;
        ++t;
    }
    return t;
}

BigRat average_length(const Code& S) {
    if (S.is_empty()) throw DomainError("average_length of an empty code is undefined");
    BigInt total = 0;
    for (const Word& w : S.words()) total += static_cast<unsigned long>(w.size());
    return BigRat(total, BigInt(static_cast<unsigned long>(S.size())));
}

BoundReport bound_report(int n, int q, std::optional<BigInt> exact_max) {
    const LevenshteinBound lev = levenshtein_upper(n, q);
    BoundReport report;
    report.n = n;
    report.q = q;
    report.levenshtein_value = lev.value;
    report.levenshtein_floor = lev.floor_value;
    report.classic_lower = classic_lower_size(n, q);
    if (exact_max) {
        if (*exact_max < report.classic_lower || *exact_max > report.levenshtein_floor)
            throw InvariantError("exact maximum " + exact_max->str() +
                                 " falls outside [" + report.classic_lower.str() + ", " +
                                 report.levenshtein_floor.str() + "] for n=" +
                                 std::to_string(n) + " q=" + std::to_string(q));
        report.exact_max = std::move(exact_max);
    }
    return report;
}

LengthReport length_report(const Code& S) {
    if (S.is_empty()) throw DomainError("length_report of an empty code is undefined");
    LengthReport report;
    report.code_size = static_cast<unsigned long>(S.size());
    report.q = S.q();
    report.avg_length = average_length(S);
    report.entropy_floor = entropy_avg_lower(report.code_size, S.q());
    report.n = S.max_len();
    report.bracket_low = report.n - 2;
    report.trend_holds = report.entropy_floor >= report.bracket_low;
    if (BigRat(report.entropy_floor) > report.avg_length || report.avg_length > BigRat(report.n))
        throw InvariantError("average length " + to_fraction_string(report.avg_length) +
                             " escapes [" + std::to_string(report.entropy_floor) + ", " +
                             std::to_string(report.n) + "]");
    return report;
}

bool entropy_trend_holds(int n, int q) {
    if (n < 3 || q < 2) throw DomainError("entropy_trend_holds requires n >= 3 and q >= 2");
    return ipow(q - 1, n - 2) > ipow(q, n - 3);
}

} // namespace noc
