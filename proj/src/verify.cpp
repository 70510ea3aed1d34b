#include "mdtrees/verify.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace mdtrees {

namespace {

using Clock = std::chrono::steady_clock;

std::string dec(const BigNat& v) { return v.get_str(); }

std::string join_row(const std::vector<BigNat>& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += dec(row[i]);
    }
    return out;
}

// Census rendered over an explicit key range so gaps show up as 0.
std::string join_census(const std::map<int, BigNat>& census, int k_lo, int k_hi) {
    std::vector<BigNat> row;
    for (int k = k_lo; k <= k_hi; ++k) {
        auto it = census.find(k);
        row.push_back(it == census.end() ? BigNat(0) : it->second);
    }
    return join_row(row);
}

struct SuiteBuilder {
    VerificationReport report;
    Clock::time_point start = Clock::now();

    explicit SuiteBuilder(std::string suite) { report.suite = std::move(suite); }

    void add(std::string id, std::string params, std::string expected, std::string actual,
             std::string note = {}) {
        VerificationCheck c;
        c.id = std::move(id);
        c.params = std::move(params);
        c.passed = expected == actual;
        c.expected = std::move(expected);
        c.actual = std::move(actual);
        c.note = std::move(note);
        report.checks.push_back(std::move(c));
    }

    VerificationReport finish() {
        report.all_passed = true;
        for (const auto& c : report.checks) {
            report.all_passed = report.all_passed && c.passed;
        }
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return std::move(report);
    }
};

CountTriangle built(TriangleKind kind, int max_n, const VerifyOptions& opts) {
    CountTriangle t = build_triangle(kind, max_n);
    if (opts.fault && opts.fault->kind == kind) {
        const int n = opts.fault->n;
        const int k = opts.fault->k;
        const int k_hi = kind == TriangleKind::R ? n - 1 : n;
        if (n >= t.first_row() && n <= max_n && k >= 0 && k <= k_hi) {
            t.entry(n, k) += 1;
        }
    }
    return t;
}

void require_within_cap(int max_n, const VerifyOptions& opts, const char* suite) {
    if (max_n > opts.enumeration_cap) {
        throw CapExceeded(std::string(suite) + ": max_n = " + std::to_string(max_n) +
                          " exceeds the enumeration cap " +
                          std::to_string(opts.enumeration_cap));
    }
}

std::string param_n(int n) { return "n=" + std::to_string(n); }

}  // namespace

VerificationReport verify_row_sums(int max_n, const VerifyOptions& opts) {
    if (max_n < 0) {
        throw std::invalid_argument("verify_row_sums: max_n must be nonnegative");
    }
    SuiteBuilder suite("rowsum");
    const CountTriangle o = built(TriangleKind::O, max_n, opts);
    for (int n = 0; n <= max_n; ++n) {
        const BigNat expected = rising_factorial(n + 1, n);
        suite.add("closed-forms", param_n(n), dec(expected),
                  dec(factorial(n + 1) * catalan(n)));
        BigNat sum = 0;
        for (const auto& v : o.row(n)) {
            sum += v;
        }
        suite.add("rowsum", param_n(n), dec(expected), dec(sum));
    }
    return suite.finish();
}

VerificationReport verify_against_oracles(int max_n, const VerifyOptions& opts) {
    if (max_n < 0) {
        throw std::invalid_argument("verify_against_oracles: max_n must be nonnegative");
    }
    require_within_cap(max_n, opts, "verify_against_oracles");
    SuiteBuilder suite("oracle");
    const CountTriangle o = built(TriangleKind::O, max_n, opts);
    const CountTriangle z = built(TriangleKind::Z, max_n, opts);
    const CountTriangle f = built(TriangleKind::F, max_n, opts);

    suite.add("f-empty", param_n(0), "1", dec(f.at(0, 0)));
    for (int n = 0; n <= max_n; ++n) {
        const auto o_census = tabulate_family(Family::O, n, std::nullopt, opts.enumeration_cap);
        suite.add("o-row", param_n(n), join_census(o_census.census, 0, n), join_row(o.row(n)));

        const auto z_census = tabulate_family(Family::Z, n, std::nullopt, opts.enumeration_cap);
        suite.add("z-row", param_n(n), join_census(z_census.census, 0, n), join_row(z.row(n)));

        if (n >= 1) {
            suite.add("f-zero-column", param_n(n), "0", dec(f.at(n, 0)));
            const auto f_census =
                tabulate_family(Family::F, n, std::nullopt, opts.enumeration_cap);
            std::vector<BigNat> f_row(f.row(n).begin() + 1, f.row(n).end());
            suite.add("f-row", param_n(n), join_census(f_census.census, 1, n),
                      join_row(f_row));
            suite.add("f-diagonal", param_n(n) + ",k=" + std::to_string(n),
                      dec(f_census.census.count(n) ? f_census.census.at(n) : BigNat(0)),
                      dec(f.at(n, n)),
                      "adopted boundary value; the literal binomial-times-product form "
                      "evaluates to " + std::to_string(n) + " at k = n");
        }
    }
    return suite.finish();
}

VerificationReport verify_shor_link(int max_n, const VerifyOptions& opts) {
    if (max_n < 0) {
        throw std::invalid_argument("verify_shor_link: max_n must be nonnegative");
    }
    SuiteBuilder suite("shor");
    const CountTriangle z = built(TriangleKind::Z, max_n, opts);
    const CountTriangle r = built(TriangleKind::R, max_n + 1, opts);
    for (int n = 0; n <= max_n; ++n) {
        // r row n+1 has entries k = 0..n, exactly matching z row n.
        suite.add("shor-row", param_n(n), join_row(z.row(n)), join_row(r.row(n + 1)));
    }
    const int census_max = std::min(max_n, opts.enumeration_cap);
    for (int n = 1; n <= census_max; ++n) {
        const auto census =
            tabulate_family(Family::RootedUnordered, n, std::nullopt, opts.enumeration_cap);
        suite.add("r-census-row", param_n(n), join_census(census.census, 0, n - 1),
                  join_row(r.row(n)));
    }
    return suite.finish();
}

VerificationReport verify_ramanujan(int max_n, const VerifyOptions& opts) {
    if (max_n < 1) {
        throw std::invalid_argument("verify_ramanujan: max_n must be at least 1");
    }
    SuiteBuilder suite("ramanujan");
    const CountTriangle r = built(TriangleKind::R, max_n, opts);
    std::vector<IntPolynomial> polys;
    polys.reserve(max_n);
    for (int n = 1; n <= max_n; ++n) {
        polys.push_back(ramanujan_poly(n));
        // Coefficient vector padded to the full row length n (k = 0..n-1).
        std::vector<BigNat> coeffs;
        for (int k = 0; k < n; ++k) {
            coeffs.push_back(polys.back().coefficient(k));
        }
        suite.add("poly-row", param_n(n), join_row(r.row(n)), join_row(coeffs));
    }
    for (int n = 1; n < max_n; ++n) {
        // The differential step must reproduce the two-term recurrence
        // c(n+1,k) = n c(n,k) + (n+k-1) c(n,k-1) on the coefficients alone.
        std::vector<BigNat> stepped, actual;
        for (int k = 0; k <= n; ++k) {
            stepped.push_back(n * polys[n - 1].coefficient(k) +
                              (n + k - 1) * polys[n - 1].coefficient(k - 1));
            actual.push_back(polys[n].coefficient(k));
        }
        suite.add("poly-step", param_n(n + 1), join_row(stepped), join_row(actual));
    }
    return suite.finish();
}

VerificationReport verify_decomposition(int max_n, const VerifyOptions& opts) {
    if (max_n < 0) {
        throw std::invalid_argument("verify_decomposition: max_n must be nonnegative");
    }
    require_within_cap(max_n, opts, "verify_decomposition");
    SuiteBuilder suite("decomposition");
    const CountTriangle z = built(TriangleKind::Z, max_n, opts);

    for (int n = 0; n <= max_n; ++n) {
        std::map<std::pair<int, int>, BigNat> groups;  // (k, m) -> count
        BigNat total = 0;
        BigNat roundtrips = 0;
        std::vector<int> labels(n + 1);
        for (int i = 0; i <= n; ++i) {
            labels[i] = i;
        }
        enumerate_ordered_trees(labels, [&](const OrderedTree& t) {
            const int k = md_subtree(t).md_edge_count;
            auto [z_part, y_part] = split_md(t);
            const int m = static_cast<int>(labels_of(z_part).size()) - 1;
            groups[{k, m}] += 1;
            total += 1;
            if (graft(z_part, y_part) == t) {
                roundtrips += 1;
            }
        });
        suite.add("graft-roundtrip", param_n(n), dec(total), dec(roundtrips));
        for (int k = 0; k <= n; ++k) {
            for (int m = k; m <= n; ++m) {
                const BigNat expected = binomial(n + 1, m + 1) * z.at(m, k) *
                                        prescribed_root_forest_count(n - k, m - k);
                auto it = groups.find({k, m});
                const BigNat observed = it == groups.end() ? BigNat(0) : it->second;
                suite.add("group-size",
                          param_n(n) + ",k=" + std::to_string(k) + ",m=" + std::to_string(m),
                          dec(expected), dec(observed));
            }
        }
    }
    return suite.finish();
}

std::vector<VerificationReport> verify_all(int max_n, const VerifyOptions& opts) {
    const int census_max = std::min(max_n, opts.enumeration_cap);
    std::vector<VerificationReport> reports;
    reports.push_back(verify_row_sums(max_n, opts));
    reports.push_back(verify_against_oracles(census_max, opts));
    reports.push_back(verify_shor_link(max_n, opts));
    reports.push_back(verify_ramanujan(std::max(max_n, 1), opts));
    reports.push_back(verify_decomposition(census_max, opts));
    return reports;
}

std::string report_json(const VerificationReport& report, int indent) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json jc{{"id", c.id},
                          {"params", c.params},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"passed", c.passed}};
        if (!c.note.empty()) {
            jc["note"] = c.note;
        }
        checks.push_back(std::move(jc));
    }
    nlohmann::json j{{"suite", report.suite},
                     {"checks", std::move(checks)},
                     {"all_passed", report.all_passed},
                     {"elapsed_ms", report.elapsed_ms}};
    return j.dump(indent);
}

}  // namespace mdtrees
