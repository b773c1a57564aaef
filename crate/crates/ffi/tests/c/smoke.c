#include <stdio.h>
#include <string.h>

#include "jordan_strata.h"

int main(void) {
    double v = 0.0;
    if (js_phi(JS_KIND_A_TYPE, 0.0, 2.0, 0.785398163397448, &v) != JS_OK) return 10;
    printf("phi %.12f\n", v);

    JsMinimax *m = NULL;
    if (js_minimax_solve(JS_KIND_A_TYPE, 0, 1e-12, &m) != JS_OK) return 11;
    printf("q0 %.9f d0 %.9f\n", js_minimax_param(m), js_minimax_deviation(m));
    js_minimax_free(m);

    JsCertificate *c = NULL;
    if (js_certify(JS_LEMMA_GB, 0, 1, 8, 5, &c) != JS_OK) return 12;
    printf("poly %s roots %zu\n", js_certificate_polynomial(c), js_certificate_root_count(c));
    js_certificate_free(c);

    if (js_phi(99, 0.1, 1.0, 0.5, &v) != JS_ERR_INVALID_ARGUMENT) return 13;
    if (strlen(js_last_error()) == 0) return 14;
    return 0;
}
