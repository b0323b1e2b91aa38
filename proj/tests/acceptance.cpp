// Acceptance runner: executes every verification suite and prints one
// pass/fail line per criterion.  Exit status is the number of failures.

#include <algorithm>
#include <cstdio>

#include <kbessel/verify.hpp>

using kbessel::SuiteResult;

namespace {

int report(int n, const char* what, const SuiteResult& res)
{
    double worst = 0;
    for (const auto& row : res.rows)
        if (row.threshold > 0)
            worst = std::max(worst, row.measured / row.threshold);
    std::printf("[%s] criterion-%d %s (%s, %zu checks, worst margin %.3g)\n",
                res.pass ? "PASS" : "FAIL", n, what, res.suite.c_str(),
                res.rows.size(), worst);
    if (!res.pass)
        for (const auto& row : res.rows)
            if (!row.pass)
                std::printf("         %s p=(%g, %g, %g) measured %.6g threshold %.6g\n",
                            row.label.c_str(), row.p1, row.p2, row.p3,
                            row.measured, row.threshold);
    return res.pass ? 0 : 1;
}

} // namespace

int main()
{
    int failures = 0;
    failures += report(1, "monotonic dominant term halves its relative error in y",
                       kbessel::verify_mono_decay());
    failures += report(2, "coalescent branch matches the closed-form constant",
                       kbessel::verify_branch_constant());
    failures += report(3, "oscillatory bracket decays under the envelope norm",
                       kbessel::verify_osc_decay());
    failures += report(4, "uniform evaluators reproduce the coalescence limits",
                       kbessel::verify_uniform_limits());
    failures += report(5, "uniform formula holds across the transition window",
                       kbessel::verify_uniform_window());
    failures += report(6, "small-y and coarse envelopes dominate the oracle",
                       kbessel::verify_envelopes());
    failures += report(7, "series and contour oracles agree on the overlap strip",
                       kbessel::verify_dual_oracle());
    failures += report(8, "Fourier evaluator matches the definition-level sum",
                       kbessel::verify_eisenstein_cross());
    failures += report(9, "mode-sum tail decays at the first-mode rate",
                       kbessel::verify_eisenstein_decay());
    failures += report(10, "coefficient mass follows the bound shape",
                       kbessel::verify_coefficient_shape());
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
