#include <math.h>
#include <stdio.h>
#include <string.h>

#include "unisolve.h"

int main(void) {
    const double coeffs[] = {1.0, -2.049888, 3.1010205, 11.313708};
    UnisolveReport *report = NULL;
    if (unisolve_solve_coeffs(coeffs, 4, UNISOLVE_METHOD_AUTO, &report) != UNISOLVE_STATUS_OK) {
        fprintf(stderr, "solve failed: %s\n", unisolve_last_error());
        return 1;
    }
    if (unisolve_report_root_count(report) != 3) return 2;
    double re = 0.0, im = 0.0;
    if (unisolve_report_root(report, 0, &re, &im) != UNISOLVE_STATUS_OK) return 3;
    if (fabs(re + 1.41421) > 1e-4 || im != 0.0) return 4;
    char *json = unisolve_report_json(report, false);
    if (json == NULL || strstr(json, "\"roots\"") == NULL) return 5;
    unisolve_string_free(json);
    unisolve_report_free(report);

    report = NULL;
    if (unisolve_solve_text("x^5 + 1", UNISOLVE_METHOD_UNIFIED_STRICT, &report) != UNISOLVE_STATUS_UNSUPPORTED_DEGREE) return 6;
    if (report != NULL) return 7;
    printf("ok\n");
    return 0;
}
