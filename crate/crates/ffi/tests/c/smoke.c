#include <math.h>
#include <stdio.h>
#include <string.h>

#include "bskernel.h"

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                \
        }                                                            \
    } while (0)

int main(void) {
    BskEval e;
    CHECK(bsk_kernel(-0.5, 1.0, &e) == BSK_OK);
    CHECK(fabs(e.value - exp(1.0)) < 1e-15);

    BskWrightSpec *spec = bsk_wright_new();
    CHECK(bsk_wright_push_upper(spec, 1.0, 1.0) == BSK_OK);
    CHECK(bsk_wright_push_lower(spec, 1.0, 1.0) == BSK_OK);
    CHECK(bsk_wright_eval(spec, 1.0, 1e-15, &e) == BSK_OK);
    CHECK(fabs(e.value - exp(1.0)) < 1e-15);
    bsk_wright_free(spec);

    BskMsmParams p = {0.0, 0.0, 0.0, 0.0, 1.0};
    BskIntegrand f = {BSK_MONOMIAL, 0.0, 0.0, 2.0};
    BskImage *img = NULL;
    CHECK(bsk_msm_image_new(BSK_LEFT, p, f, &img) == BSK_OK);
    CHECK(bsk_image_eval(img, 3.0, &e) == BSK_OK);
    CHECK(e.value == 4.5);
    CHECK(bsk_image_eval(img, -1.0, &e) == BSK_DOMAIN);
    CHECK(strlen(bsk_last_error_message()) > 0);
    bsk_image_free(img);

    double g;
    CHECK(bsk_gamma(0.0, &g) == BSK_POLE);

    char *json = NULL;
    bool passed = false;
    CHECK(bsk_run_suite("kernel-identities", 0.0, &json, &passed) == BSK_OK);
    CHECK(passed);
    CHECK(strstr(json, "\"suite\":\"kernel-identities\"") != NULL);
    bsk_string_free(json);
    CHECK(bsk_run_suite("nonexistent", 0.0, &json, &passed) == BSK_UNKNOWN_SUITE);

    puts("ok");
    return 0;
}
