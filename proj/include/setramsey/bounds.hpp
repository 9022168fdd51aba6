#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "setramsey/bigint.hpp"
#include "setramsey/errors.hpp"

namespace setramsey {

enum class BoundDirection { lower, upper };

/// One evaluated bound formula. `value` is exact (floor for lower bounds,
/// ceiling for upper bounds, as stated per formula); huge values may instead
/// be reported as base^exponent without materializing the digits.
struct BoundReport {
    std::string name;
    BoundDirection direction = BoundDirection::lower;
    std::map<std::string, std::string> params;
    std::optional<BigInt> value;
    std::optional<std::pair<BigInt, BigInt>> power_form; // (base, exponent)
    std::string provenance; // human-readable formula

    bool has_value() const { return value.has_value(); }
};

inline std::string bound_direction_name(BoundDirection d) {
    return d == BoundDirection::lower ? "lower" : "upper";
}

inline void write_bound_report(std::ostream& out, const BoundReport& report) {
    out << "{\"name\":\"" << report.name << "\",\"direction\":\""
        << bound_direction_name(report.direction) << "\",\"params\":{";
    bool first = true;
    for (const auto& [key, val] : report.params) {
        if (!first) out << ',';
        first = false;
        out << '"' << key << "\":" << val;
    }
    out << '}';
    if (report.value)
        out << ",\"value\":\"" << report.value->str() << '"';
    if (report.power_form)
        out << ",\"value_pow\":{\"base\":\"" << report.power_form->first.str()
            << "\",\"exponent\":\"" << report.power_form->second.str() << "\"}";
    out << ",\"provenance\":\"" << report.provenance << "\"}\n";
}

inline std::string bound_report_to_string(const BoundReport& report) {
    std::ostringstream os;
    write_bound_report(os, report);
    return os.str();
}

namespace detail {

inline std::map<std::string, std::string> nrs_params(long long n, long long r, long long s) {
    return {{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"s", std::to_string(s)}};
}

} // namespace detail

/// ceil((r/(r-s)) * (r/s)^((n-2)r+1)), valid for any r > s >= 1, n >= 3.
inline BoundReport simple_upper(long long n, long long r, long long s) {
    if (!(r > s && s >= 1)) throw std::invalid_argument("simple_upper: need r > s >= 1");
    if (n < 3) throw std::invalid_argument("simple_upper: need n >= 3");
    const std::uint64_t expo = static_cast<std::uint64_t>((n - 2) * r + 1);
    const BigInt numerator = big_pow(r, expo + 1);
    const BigInt denominator = (BigInt(r) - s) * big_pow(s, expo);
    BoundReport report;
    report.name = "ratio-power-upper";
    report.direction = BoundDirection::upper;
    report.params = detail::nrs_params(n, r, s);
    report.value = ceil_div(numerator, denominator);
    report.provenance = "ceil((r/(r-s))*(r/s)^((n-2)r+1))";
    return report;
}

/// ceil((r/(r-s))^E) with E = ceil(500 n (r-s)^2 / r); requires s > 9r/10.
/// The rational exponent is rounded up to the next integer before
/// exponentiation, so the reported value is a valid upper bound.
inline BoundReport upper_s_large(long long n, long long r, long long s) {
    if (!(10 * s > 9 * r)) throw std::invalid_argument("upper_s_large: requires s > 9r/10");
    if (n < 3) throw std::invalid_argument("upper_s_large: need n >= 3");
    const BigInt exponent = ceil_div(BigInt(500) * n * (r - s) * (r - s), BigInt(r));
    const std::uint64_t expo = exponent.convert_to<std::uint64_t>();
    BoundReport report;
    report.name = "near-complete-upper";
    report.direction = BoundDirection::upper;
    report.params = detail::nrs_params(n, r, s);
    report.params["exponent"] = exponent.str();
    report.value = ceil_div(big_pow(r, expo), big_pow(r - s, expo));
    report.provenance = "ceil((r/(r-s))^ceil(500n(r-s)^2/r))";
    return report;
}

/// floor((a/b)^((n-1)/2) * (n!/a)^(1/n)), valid when b >= a/2 and n! >= a.
/// Evaluated exactly: the value's 2n-th power is the rational
/// a^(n(n-1)) (n!)^2 / (b^(n(n-1)) a^2), whose integer 2n-th root is taken.
inline BoundReport first_moment_lower(long long n, long long a, long long b) {
    if (!(a >= b && b >= 1)) throw std::invalid_argument("first_moment_lower: need a >= b >= 1");
    if (n < 3) throw std::invalid_argument("first_moment_lower: need n >= 3");
    if (2 * b < a)
        throw std::invalid_argument("first_moment_lower: validity requires b >= a/2");
    if (n > 2000) throw ResourceLimitError("first_moment_lower: n too large to evaluate exactly");
    const BigInt fact = big_factorial(static_cast<std::uint64_t>(n));
    if (fact < a)
        throw std::invalid_argument("first_moment_lower: validity requires n! >= a");
    const std::uint64_t e = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
    const BigInt p = big_pow(a, e) * fact * fact;
    const BigInt q = big_pow(b, e) * BigInt(a) * a;
    BoundReport report;
    report.name = "first-moment-lower";
    report.direction = BoundDirection::lower;
    report.params = {{"n", std::to_string(n)}, {"a", std::to_string(a)}, {"b", std::to_string(b)}};
    report.value = floor_root_rational(p, q, 2 * static_cast<std::uint64_t>(n));
    report.provenance = "floor((a/b)^((n-1)/2)*(n!/a)^(1/n))";
    return report;
}

/// The two-regime recipe for constructing lower bounds. In the product
/// regime the plan names exact code parameters: a base palette (a, b) with
/// b = a-1, a rounded palette (r', s') divisible by (a, b), and the code
/// shape (m, d) = (r'/a, s'/b) to feed into the product construction with a
/// q-ary alphabet, q = (vertices of the best (a,b) base) .
struct LowerBoundPlan {
    enum class Regime { direct_first_moment, product_of_codes };
    Regime regime = Regime::direct_first_moment;
    long long n = 0, r = 0, s = 0;
    long long a = 0, b = 0;
    long long r_prime = 0, s_prime = 0;
    long long m = 0, d = 0;
    /// r'/a - s'/b, the exponent the product chain applies to (base size - 1).
    BigRational exponent{0};
};

/// Regime split: direct first-moment when s > r - 8*sqrt(r), i.e.
/// (r-s)^2 < 64r; otherwise the product-of-codes recipe with
/// a = floor(16r/(r-s)), b = a-1, r' the largest multiple of a that is <= r,
/// s' the smallest multiple of b that is >= s.
inline LowerBoundPlan lower_bound_plan(long long n, long long r, long long s) {
    if (!(r > s && s >= 1)) throw std::invalid_argument("lower_bound_plan: need r > s >= 1");
    LowerBoundPlan plan;
    plan.n = n;
    plan.r = r;
    plan.s = s;
    if ((r - s) * (r - s) < 64 * r) {
        plan.regime = LowerBoundPlan::Regime::direct_first_moment;
        plan.a = r;
        plan.b = s;
        return plan;
    }
    plan.regime = LowerBoundPlan::Regime::product_of_codes;
    plan.a = (16 * r) / (r - s);
    plan.b = plan.a - 1;
    plan.r_prime = (r / plan.a) * plan.a;
    plan.s_prime = ((s + plan.b - 1) / plan.b) * plan.b;
    plan.m = plan.r_prime / plan.a;
    plan.d = plan.s_prime / plan.b;
    plan.exponent = BigRational(plan.r_prime, plan.a) - BigRational(plan.s_prime, plan.b);
    return plan;
}

/// The exact rational inequality r'/a - s'/b >= (r-s)^2 / (64 r) the product
/// regime relies on.
inline bool plan_gap_inequality_holds(const LowerBoundPlan& plan) {
    if (plan.regime != LowerBoundPlan::Regime::product_of_codes)
        throw std::invalid_argument("plan_gap_inequality_holds: product regime only");
    return plan.exponent * 64 * plan.r >= BigRational((plan.r - plan.s) * (plan.r - plan.s));
}

/// Edge count of the balanced complete (n-1)-partite graph on N vertices,
/// which is the maximum edge count of any K_n-free graph on N vertices.
inline BigInt turan_number(long long N, long long n) {
    if (n < 2) throw std::invalid_argument("turan_number: need n >= 2");
    if (N < 0) throw std::invalid_argument("turan_number: need N >= 0");
    const long long parts = n - 1;
    if (N <= parts) return BigInt(N) * (N - 1) / 2; // complete graph is K_n-free
    const long long q = N / parts;
    const long long rem = N % parts;
    const BigInt total = BigInt(N) * (N - 1) / 2;
    const BigInt inside = BigInt(rem) * q * (q + 1) / 2 + BigInt(parts - rem) * q * (q - 1) / 2;
    return total - inside;
}

/// Least N >= n with s * C(N,2) strictly greater than r * ex(N, K_n), found
/// by an ascending scan; nullopt when no such N exists below `scan_limit`.
inline std::optional<BoundReport> turan_upper(long long n, long long r, long long s,
                                              long long scan_limit = 100000) {
    if (!(r > s && s >= 1)) throw std::invalid_argument("turan_upper: need r > s >= 1");
    if (n < 2) throw std::invalid_argument("turan_upper: need n >= 2");
    for (long long N = n; N <= scan_limit; ++N) {
        const BigInt pairs = BigInt(N) * (N - 1) / 2;
        if (BigInt(s) * pairs > BigInt(r) * turan_number(N, n)) {
            BoundReport report;
            report.name = "turan-density-upper";
            report.direction = BoundDirection::upper;
            report.params = detail::nrs_params(n, r, s);
            report.value = BigInt(N);
            report.provenance = "least N with s*C(N,2) > r*ex(N,K_n)";
            return report;
        }
    }
    return std::nullopt;
}

/// n itself, whenever (r-s)*C(n,2) < r forces one color onto all edges of
/// any K_n; nullopt otherwise.
inline std::optional<long long> trivial_value(long long n, long long r, long long s) {
    if (!(r > s && s >= 1)) throw std::invalid_argument("trivial_value: need r > s >= 1");
    if (n < 2) throw std::invalid_argument("trivial_value: need n >= 2");
    const BigInt pairs = BigInt(n) * (n - 1) / 2;
    if ((BigInt(r) - s) * pairs < r) return n;
    return std::nullopt;
}

/// Combines two single-color-per-edge lower bounds for the same n:
/// values v1, v2 yield (v1-1)(v2-1)+1 for the merged palette r1+r2.
inline BoundReport lefmann_product(const BoundReport& lb1, const BoundReport& lb2) {
    auto field = [](const BoundReport& rep, const char* key) -> long long {
        auto it = rep.params.find(key);
        if (it == rep.params.end())
            throw std::invalid_argument(std::string("lefmann_product: report lacks param ") + key);
        return std::stoll(it->second);
    };
    if (lb1.direction != BoundDirection::lower || lb2.direction != BoundDirection::lower)
        throw std::invalid_argument("lefmann_product: both reports must be lower bounds");
    if (!lb1.value || !lb2.value)
        throw std::invalid_argument("lefmann_product: both reports must carry values");
    const long long n = field(lb1, "n");
    if (n != field(lb2, "n"))
        throw std::invalid_argument("lefmann_product: reports must share n");
    for (const auto* rep : {&lb1, &lb2}) {
        auto it = rep->params.find("s");
        if (it != rep->params.end() && it->second != "1")
            throw std::invalid_argument("lefmann_product: requires s = 1 on both sides");
    }
    const long long r1 = field(lb1, "r");
    const long long r2 = field(lb2, "r");
    BoundReport report;
    report.name = "product-lower";
    report.direction = BoundDirection::lower;
    report.params = detail::nrs_params(n, r1 + r2, 1);
    report.value = (*lb1.value - 1) * (*lb2.value - 1) + 1;
    report.provenance = "(v1-1)*(v2-1)+1 from lower bounds for r1 and r2 colors";
    return report;
}

/// C(r,s)^C(base_value, k-1): an upper bound for uniformity k given a
/// certified upper bound `base_value` for uniformity k-1 at clique size n-1.
/// Refuses to materialize more than `digit_budget` decimal digits and then
/// reports base and exponent instead.
inline BoundReport hypergraph_upper(long long n, int k, long long r, long long s,
                                    long long base_value, long long digit_budget = 100000) {
    if (k < 3) throw std::invalid_argument("hypergraph_upper: need k >= 3");
    if (!(r > s && s >= 1)) throw std::invalid_argument("hypergraph_upper: need r > s >= 1");
    if (base_value < k - 1)
        throw std::invalid_argument("hypergraph_upper: base_value below k-1");
    const BigInt base = big_binomial(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(s));
    const BigInt exponent = big_binomial(static_cast<std::uint64_t>(base_value),
                                         static_cast<std::uint64_t>(k - 1));
    BoundReport report;
    report.name = "hypergraph-recursion-upper";
    report.direction = BoundDirection::upper;
    report.params = detail::nrs_params(n, r, s);
    report.params["k"] = std::to_string(k);
    report.params["base_value"] = std::to_string(base_value);
    report.provenance = "C(r,s)^C(base_value,k-1)";
    // decimal digits ~= exponent * bits(base) * log10(2); stay on the safe side
    const BigInt bits_estimate = exponent * (msb(base) + 1);
    if (base > 1 && bits_estimate > BigInt(digit_budget) * 4) {
        report.power_form = {base, exponent};
        return report;
    }
    report.value = big_pow(base, exponent.convert_to<std::uint64_t>());
    return report;
}

} // namespace setramsey
