#include <stdio.h>
#include "tclink.h"

int main(void) {
    TclChart *chart = NULL;
    if (tcl_chart_new(4, "1 2 2 2 3", "(1 2 3)^4", &chart) != TCL_STATUS_OK) return 1;
    int64_t phi[3];
    if (tcl_chart_cocycle(chart, phi) != TCL_STATUS_OK) return 2;
    printf("%lld %lld %lld\n", (long long)phi[0], (long long)phi[1], (long long)phi[2]);
    tcl_chart_free(chart);

    if (tcl_chart_new(4, "1 3", "D^4", &chart) != TCL_STATUS_OK) return 3;
    char *ab = NULL;
    if (tcl_chart_abelianization(chart, true, &ab) != TCL_STATUS_OK) return 4;
    printf("%s\n", ab);
    tcl_string_free(ab);
    tcl_chart_free(chart);

    if (tcl_chart_new(3, "1", "2", &chart) != TCL_STATUS_NOT_COMMUTING) return 5;
    char *msg = tcl_last_error_message();
    if (msg == NULL) return 6;
    tcl_string_free(msg);
    return 0;
}
