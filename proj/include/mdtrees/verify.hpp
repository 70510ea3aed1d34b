#ifndef MDTREES_VERIFY_HPP
#define MDTREES_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mdtrees/enumerate.hpp"
#include "mdtrees/tables.hpp"

namespace mdtrees {

struct VerificationCheck {
    std::string id;
    std::string params;
    std::string expected;
    std::string actual;
    bool passed = false;
    std::string note;  // empty means no annotation
};

struct VerificationReport {
    std::string suite;
    std::vector<VerificationCheck> checks;
    bool all_passed = false;
    double elapsed_ms = 0.0;
};

/// Adds 1 to a single formula-side triangle entry before the suites
/// compare anything.  Exists so a harness can prove the failure path is
/// live; never set in normal operation.
struct FaultInjection {
    TriangleKind kind = TriangleKind::O;
    int n = 0;
    int k = 0;
};

struct VerifyOptions {
    int enumeration_cap = kDefaultEnumerationCap;
    std::optional<FaultInjection> fault;
};

/// Row sums of the o triangle against the two closed forms of the total
/// ordered-tree count, exact, no enumeration.
VerificationReport verify_row_sums(int max_n, const VerifyOptions& opts = {});

/// o, z, f triangles against exhaustive censuses for every n <= max_n
/// (max_n must not exceed the enumeration cap).  The f diagonal carries an
/// annotation: the literal closed form evaluates to n there while direct
/// enumeration gives 1, which is the adopted value.
VerificationReport verify_against_oracles(int max_n, const VerifyOptions& opts = {});

/// z(n,k) = r(n+1,k) for all k <= n <= max_n at the recurrence level, plus
/// improper-edge censuses for the r rows within the enumeration cap.
VerificationReport verify_shor_link(int max_n, const VerifyOptions& opts = {});

/// Ramanujan polynomial coefficients against the r rows, plus the
/// coefficient recurrence step reproduced from the differential form.
VerificationReport verify_ramanujan(int max_n, const VerifyOptions& opts = {});

/// Groups all trees on {0..n} by (decreasing edges k, split-part size m+1)
/// and checks each group size against the corresponding summand of the
/// o(n,k) formula; also checks the graft-of-decompose round trip on every
/// tree.  max_n must not exceed the enumeration cap.
VerificationReport verify_decomposition(int max_n, const VerifyOptions& opts = {});

/// All five suites.  Enumeration-backed suites run at
/// min(max_n, enumeration_cap); the formula-level suites run at max_n.
std::vector<VerificationReport> verify_all(int max_n, const VerifyOptions& opts = {});

/// {suite, checks:[{id, params, expected, actual, passed, note?}],
/// all_passed, elapsed_ms}; big integers rendered as decimal strings.
std::string report_json(const VerificationReport& report, int indent = -1);

/// JSON array of report objects.
std::string reports_json(const std::vector<VerificationReport>& reports, int indent = -1);

}  // namespace mdtrees

#endif
