#include <stdio.h>
#include <string.h>
#include "nilhecke.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "check failed at line %d: %s\n",     \
                    __LINE__, #cond);                            \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    NhGroup *g = NULL;
    size_t order = 0;
    char *cert = NULL;
    char *residual = NULL;
    bool ok = false;

    CHECK(nh_group_from_preset("I2_5", &g) == NH_STATUS_OK);
    CHECK(nh_group_order(g, &order) == NH_STATUS_OK && order == 10);
    CHECK(nh_certify_json(g, 1, 2, &cert) == NH_STATUS_OK);
    CHECK(nh_check_cert_json(cert, &ok, &residual) == NH_STATUS_OK && ok);
    nh_string_free(residual);
    nh_string_free(cert);
    nh_group_free(g);

    CHECK(nh_group_from_preset("nope", &g) == NH_STATUS_INVALID_INPUT);
    CHECK(strstr(nh_last_error_message(), "nope") != NULL);
    printf("ok\n");
    return 0;
}
