// Acceptance run: one line per criterion, exit status 0 only if all pass.
// Every comparison is exact; time limits are wall-clock.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "eulerian2/bfile.hpp"
#include "eulerian2/combinatorics.hpp"
#include "eulerian2/identities.hpp"
#include "eulerian2/report_io.hpp"
#include "eulerian2/series.hpp"
#include "random_series.hpp"

using namespace eulerian2;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome from_reports(std::initializer_list<IdentityReport> reports)
{
    Outcome o{true, {}};
    for (const auto& r : reports) {
        if (!o.detail.empty()) {
            o.detail += "; ";
        }
        o.detail += to_plain(r);
        o.ok = o.ok && r.passed();
    }
    return o;
}

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, {}};
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_seconds <= 0 || elapsed < limit_seconds;
    const bool ok = outcome.ok && in_time;
    if (!ok) {
        ++failures;
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << elapsed << " s";
    if (limit_seconds > 0) {
        std::cout << ", limit " << limit_seconds << " s";
    }
    std::cout << ")\n       " << outcome.detail << '\n';
}

// Ratio of passing trials; every trial must pass.
Outcome property(const std::string& name, int trials, const std::function<bool(std::mt19937&)>& trial)
{
    std::mt19937 rng(0x5eed + static_cast<unsigned>(name.size()));
    int passed = 0;
    for (int i = 0; i < trials; ++i) {
        passed += trial(rng) ? 1 : 0;
    }
    return {passed == trials, name + ": " + std::to_string(passed) + "/" + std::to_string(trials)};
}

}  // namespace

int main()
{
    using testing_support::random_series;
    using testing_support::random_unit;

    criterion("AC1", "table rows 1..10 equal the vendored A008517 prefix", 1.0, [] {
        const auto ref = read_bfile(EULERIAN2_REFERENCE_FILE);
        std::ostringstream out;
        std::ostringstream err;
        cli::RunConfig config;
        config.max_n = 10;
        config.format = cli::Format::Csv;
        if (cli::cmd_table(config, out, err) != 0) {
            return Outcome{false, "table command failed: " + err.str()};
        }
        std::vector<ExactInt> emitted;
        std::istringstream rows(out.str());
        std::string row;
        while (std::getline(rows, row)) {
            std::istringstream cells(row);
            std::string cell;
            while (std::getline(cells, cell, ',')) {
                emitted.emplace_back(cell);
            }
        }
        const bool ok = emitted == ref.values && emitted.size() == 55;
        return Outcome{ok, std::to_string(emitted.size()) + " emitted values vs " + std::to_string(ref.values.size()) +
                               " reference values"};
    });

    criterion("AC2", "first explicit formula equals the recurrence, 0<=m<=n<=30", 10.0,
              [] { return from_reports({check_explicit_a(30)}); });

    criterion("AC3", "second explicit formula equals the recurrence, 0<=m<=n<=30, n>=1", 10.0,
              [] { return from_reports({check_explicit_b(30)}); });

    criterion("AC4", "EGF coefficients of the Lambert-W closed form equal <<n,m>> on 12x12", 60.0,
              [] { return from_reports({check_gf_coeffs(12, 12)}); });

    criterion("AC5", "derivative of the antiderivative (11x12) and compositional inverse (10x10)", 0, [] {
        return from_reports({check_gf_derivative(12, 12), check_compositional_inverse(10, 10)});
    });

    criterion("AC6", "Lagrange D(n,m,k) equals series powers, k=1..4, 8x8", 0,
              [] { return from_reports({check_lagrange(8, 8, 4)}); });

    criterion("AC7", "w e^w = x to order 15; 1/(1+W(-x)) coefficients n^n/n! to n=20", 0, [] {
        return from_reports({check_lambert_functional(15), check_tree_series(20)});
    });

    criterion("AC8", "Stirling identity for all n+m<=40", 0, [] {
        // The 40x40 rectangle contains every (n,m) with n+m <= 40.
        return from_reports({check_stirling_identity(40, 40)});
    });

    criterion("AC9", "tree identity for 1<=n<=25", 0, [] { return from_reports({check_tree_identity(25)}); });

    criterion("AC10", "alternating r-sum vanishes for 1<=m<=20; r(n,m)=0 for n>m", 0, [] {
        return from_reports({check_alternating_identity(20), check_r_support(20)});
    });

    criterion("AC11", "series-engine property suites", 0, [&] {
        const Outcome parts[] = {
            property("ring laws 6x6", 20,
                     [](std::mt19937& rng) {
                         const auto a = random_series(rng, 6, 6);
                         const auto b = random_series(rng, 6, 6);
                         const auto c = random_series(rng, 6, 6);
                         return a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) &&
                                (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
                     }),
            property("Leibniz 6x6", 20,
                     [](std::mt19937& rng) {
                         const auto a = random_series(rng, 6, 6);
                         const auto b = random_series(rng, 6, 6);
                         return derivative_x(a * b) ==
                                derivative_x(a) * b.truncated(5, 6) + a.truncated(5, 6) * derivative_x(b);
                     }),
            property("reciprocal 8x8", 20,
                     [](std::mt19937& rng) {
                         const auto a = random_unit(rng, 8, 8);
                         return a * reciprocal(a) == BivariateSeries::one(8, 8);
                     }),
            property("exp 6x6", 20,
                     [](std::mt19937& rng) {
                         const auto a = random_series(rng, 6, 6, true);
                         const auto b = random_series(rng, 6, 6, true);
                         return exp(a + b) == exp(a) * exp(b);
                     }),
        };
        Outcome all{true, {}};
        for (const auto& p : parts) {
            all.ok = all.ok && p.ok;
            all.detail += (all.detail.empty() ? "" : "; ") + p.detail;
        }
        return all;
    });

    criterion("AC12", "printed quadruple sum evaluated for n<=10 (informational)", 0, [] {
        const auto report = check_printed_quad_sum(10);
        const bool emitted = report.cases == 11 && is_informational(report.id);
        return Outcome{emitted, to_plain(report) + " | " + to_json(report).dump()};
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
