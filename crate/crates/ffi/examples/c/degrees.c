/* Prints the degree tables of a group over F_p^m for m = 1..max_m.
 *
 *   cc degrees.c -I../../include -L<target>/debug -labelreps_ffi -lpthread -ldl -lm
 *   ./a.out C9xC5 2 12
 */
#include <stdio.h>
#include <stdlib.h>

#include "abelreps.h"

static int fail(AbelrepsStatus status) {
    const char *msg = abelreps_last_error_message();
    fprintf(stderr, "%s: %s\n", abelreps_status_name(status), msg ? msg : "");
    return (int)status;
}

int main(int argc, char **argv) {
    const char *spec = argc > 1 ? argv[1] : "C9xC5";
    uint64_t p = argc > 2 ? strtoull(argv[2], NULL, 10) : 2;
    uint32_t max_m = argc > 3 ? (uint32_t)strtoul(argv[3], NULL, 10) : 12;

    AbelrepsGroup *group = NULL;
    AbelrepsStatus status = abelreps_group_parse(spec, &group);
    if (status != ABELREPS_STATUS_OK) {
        return fail(status);
    }

    for (uint32_t m = 1; m <= max_m; m++) {
        AbelrepsTable *table = NULL;
        AbelrepsTable *orbits = NULL;
        status = abelreps_degree_table(group, p, m, &table);
        if (status != ABELREPS_STATUS_OK) {
            abelreps_group_free(group);
            return fail(status);
        }
        status = abelreps_frobenius_orbits(group, p, m, 10000000, &orbits);
        if (status != ABELREPS_STATUS_OK) {
            abelreps_table_free(table);
            abelreps_group_free(group);
            return fail(status);
        }
        char *compact = NULL;
        abelreps_table_compact(table, &compact);
        printf("m=%u: %s [%s]\n", m, compact,
               abelreps_table_equal(table, orbits) ? "MATCH" : "MISMATCH");
        abelreps_string_free(compact);
        abelreps_table_free(orbits);
        abelreps_table_free(table);
    }
    abelreps_group_free(group);
    return 0;
}
