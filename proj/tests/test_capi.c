/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "dynconf/dynconf.h"

static int failures = 0;

#define CHECK(cond)                                                  \
    do {                                                             \
        if (!(cond)) {                                               \
            fprintf(stderr, "%s:%d: FAILED %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                              \
        }                                                            \
    } while (0)

static int contains(const char* s, const char* needle) { return s && strstr(s, needle) != NULL; }

static void diagrams_and_quivers(void) {
    char* s = NULL;
    CHECK(dc_dynkin_json("E6", &s) == DC_OK);
    CHECK(contains(s, "\"rank\": 6"));
    dc_string_free(s);

    CHECK(dc_dynkin_json("E9", &s) == DC_ERR_ILLEGAL_RANK);
    CHECK(strlen(dc_last_error()) > 0);
    CHECK(strcmp(dc_status_name(DC_ERR_ILLEGAL_RANK), "IllegalRank") == 0);

    dc_quiver* q = NULL;
    CHECK(dc_quiver_quotient("A5", "tau4", &q) == DC_OK);
    CHECK(dc_quiver_vertex_count(q) == 20);
    int ok = 0;
    char* detail = NULL;
    CHECK(dc_quiver_check_translation(q, &ok, &detail) == DC_OK);
    CHECK(ok == 1);
    dc_string_free(detail);

    int v = -1;
    CHECK(dc_quiver_find_label(q, "[1 3]", &v) == DC_OK);
    CHECK(v >= 0 && v < 20);
    CHECK(dc_quiver_find_label(q, "[9 9]", &v) == DC_ERR_UNKNOWN_VERTEX);

    CHECK(dc_quiver_export(q, DC_FORMAT_DOT, NULL, 0, &s) == DC_OK);
    CHECK(contains(s, "digraph"));
    dc_string_free(s);
    CHECK(dc_quiver_export(q, DC_FORMAT_JSON, NULL, 0, &s) == DC_OK);
    dc_quiver* back = NULL;
    CHECK(dc_quiver_from_json(s, &back) == DC_OK);
    CHECK(dc_quiver_vertex_count(back) == 20);
    dc_quiver_free(back);
    dc_string_free(s);
    dc_quiver_free(q);

    CHECK(dc_quiver_quotient("A4", "tau3rho", &q) == DC_ERR_ILLEGAL_GROUP);
    CHECK(dc_quiver_quotient(NULL, "tau3", &q) == DC_ERR_INVALID_ARGUMENT);

    int adm = 0;
    CHECK(dc_quiver_weakly_admissible("D4", "tau3rho", &adm, &detail) == DC_OK);
    CHECK(adm == 1);
    dc_string_free(detail);
}

static void hom_length(void) {
    dc_quiver* q = NULL;
    CHECK(dc_quiver_quotient("E6", "tau5rho", &q) == DC_OK);
    int n = dc_quiver_vertex_count(q);
    for (int x = 0; x < n; ++x) {
        int w = -1, m = 0, ok = 0;
        int64_t h = -1;
        CHECK(dc_omega(q, x, &w, &m) == DC_OK);
        CHECK(dc_h_value(q, w, x, &h) == DC_OK);
        CHECK(h >= 1);
        CHECK(m >= 1);
        CHECK(dc_h_value(q, x, x, &h) == DC_OK);
        CHECK(h >= 1);
        CHECK(dc_sign_pattern(q, x, &ok) == DC_OK);
        CHECK(ok == 1);
    }
    char* s = NULL;
    CHECK(dc_h_table_json(q, 0, &s) == DC_OK);
    CHECK(contains(s, "omega"));
    dc_string_free(s);
    int64_t h = 0;
    CHECK(dc_h_value(q, 0, n, &h) == DC_ERR_UNKNOWN_VERTEX);
    dc_quiver_free(q);

    CHECK(dc_cover_h("A3", 0, 1, DC_FORMAT_JSON, &s) == DC_OK);
    dc_string_free(s);
}

static void brauer(void) {
    char* s = NULL;
    CHECK(dc_brauer_count(DC_FAMILY_PLAIN, 10, 0, &s) == DC_OK);
    CHECK(strcmp(s, "2188") == 0);
    dc_string_free(s);
    CHECK(dc_brauer_count(DC_FAMILY_SYMMETRIC, 10, 1, &s) == DC_OK);
    CHECK(strcmp(s, "17303") == 0);
    dc_string_free(s);
    CHECK(dc_brauer_count(DC_FAMILY_CROSSING, 10, 1, &s) == DC_OK);
    CHECK(strcmp(s, "6765") == 0);
    dc_string_free(s);
    CHECK(dc_brauer_enumerate(DC_FAMILY_CROSSING, 2, DC_FORMAT_JSON, &s) == DC_OK);
    CHECK(contains(s, "["));
    dc_string_free(s);
    CHECK(dc_brauer_count(DC_FAMILY_PLAIN, -1, 0, &s) == DC_ERR_INVALID_ARGUMENT);
}

static void configurations(void) {
    dc_quiver* q = NULL;
    CHECK(dc_quiver_quotient("D4", "tau4", &q) == DC_OK);
    dc_config_list* list = NULL;
    CHECK(dc_config_enumerate(q, 2, 60.0, &list) == DC_OK);
    CHECK(dc_config_list_size(list) == 7);
    size_t orbits = 0;
    CHECK(dc_config_list_count_mod_tau(list, &orbits) == DC_OK);
    CHECK(orbits == 5);
    char* s = NULL;
    CHECK(dc_config_list_classes(list, &s) == DC_OK);
    CHECK(contains(s, "class1") && contains(s, "class2"));
    dc_string_free(s);

    const int* members = NULL;
    size_t count = 0;
    CHECK(dc_config_list_get(list, 0, &members, &count) == DC_OK);
    int verdict = 0;
    CHECK(dc_config_check(q, members, count, &verdict, &s) == DC_OK);
    CHECK(verdict == 1);
    dc_string_free(s);
    CHECK(dc_config_list_get(list, 7, &members, &count) == DC_ERR_INVALID_ARGUMENT);

    int one = members[0];
    CHECK(dc_config_check(q, &one, 1, &verdict, &s) == DC_OK);
    CHECK(verdict == 0);
    dc_string_free(s);

    int* parsed = NULL;
    CHECK(dc_config_parse(q, "{\"members\": [\"[1 3]+\", \"[3 1]+\", \"[2 4]-\", \"[4 2]-\"]}", &parsed, &count) == DC_OK);
    CHECK(count == 4);
    CHECK(dc_config_check(q, parsed, count, &verdict, &s) == DC_OK);
    CHECK(verdict == 1);
    dc_string_free(s);
    dc_int_array_free(parsed);

    CHECK(dc_config_list_json(list, &s) == DC_OK);
    CHECK(contains(s, "\"count\": 7"));
    dc_string_free(s);
    dc_config_list_free(list);
    dc_quiver_free(q);

    int all_ok = 0;
    CHECK(dc_bijection_report("A5", &s, &all_ok) == DC_OK);
    CHECK(all_ok == 1);
    dc_string_free(s);
    CHECK(dc_bijection_report("E6", &s, &all_ok) == DC_ERR_NOT_CLASSICAL_TYPE);
}

static void exceptional(void) {
    char* table = NULL;
    int match = 0;
    CHECK(dc_exceptional_run("G2,F4", 2, 60.0, 0, NULL, &table, &match) == DC_OK);
    CHECK(match == 1);
    CHECK(contains(table, "25"));
    dc_string_free(table);
    CHECK(dc_exceptional_run("", 1, 60.0, 1, NULL, &table, &match) == DC_OK);
    CHECK(contains(table, "112"));
    dc_string_free(table);
}

int main(void) {
    diagrams_and_quivers();
    hom_length();
    brauer();
    configurations();
    exceptional();
    if (failures) {
        fprintf(stderr, "%d checks failed\n", failures);
        return 1;
    }
    printf("all C API checks passed\n");
    return 0;
}
