/* C interface to the dynconf library.
 *
 * Every function returns a dc_status. Objects are opaque and owned by the
 * caller once returned; release them with the matching *_free function.
 * Strings returned through char** are heap allocated and released with
 * dc_string_free. dc_last_error() describes the most recent failure on the
 * calling thread.
 */
#ifndef DYNCONF_H
#define DYNCONF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DC_API __declspec(dllexport)
#else
#define DC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
    DC_OK = 0,
    DC_ERR_ILLEGAL_RANK,
    DC_ERR_ILLEGAL_GROUP,
    DC_ERR_NOT_WEAKLY_ADMISSIBLE,
    DC_ERR_NOT_CLASSICAL_TYPE,
    DC_ERR_INVALID_CONFIGURATION,
    DC_ERR_NON_TERMINATING,
    DC_ERR_UNKNOWN_VERTEX,
    DC_ERR_NOT_A_CONFIGURATION,
    DC_ERR_NOT_PLAIN,
    DC_ERR_WRONG_CLASS,
    DC_ERR_NOT_G_STABLE,
    DC_ERR_COUNT_MISMATCH,
    DC_ERR_CLIPPED,
    DC_ERR_OVERFLOW,
    DC_ERR_PARSE,
    DC_ERR_IO,
    DC_ERR_INVALID_ARGUMENT,
    DC_ERR_TIME_BUDGET,
    DC_ERR_INTERNAL = 99
} dc_status;

typedef enum dc_format { DC_FORMAT_JSON = 0, DC_FORMAT_DOT = 1, DC_FORMAT_ASCII = 2 } dc_format;

typedef enum dc_family { DC_FAMILY_PLAIN = 0, DC_FAMILY_SYMMETRIC = 1, DC_FAMILY_CROSSING = 2 } dc_family;

typedef struct dc_quiver dc_quiver;
typedef struct dc_config_list dc_config_list;

DC_API const char* dc_status_name(dc_status status);
DC_API const char* dc_last_error(void);
DC_API void dc_string_free(char* s);

/* Diagrams and quivers. type_name is "A5", "E6", ...; group is "tau5rho" etc. */
DC_API dc_status dc_dynkin_json(const char* type_name, char** out_json);
DC_API dc_status dc_quiver_quotient(const char* type_name, const char* group, dc_quiver** out);
DC_API dc_status dc_quiver_window(const char* type_name, int64_t first_column, int columns, dc_quiver** out);
DC_API dc_status dc_quiver_from_json(const char* json_text, dc_quiver** out);
DC_API dc_status dc_quiver_attach(const dc_quiver* q, const int* members, size_t count, dc_quiver** out);
DC_API void dc_quiver_free(dc_quiver* q);
DC_API int dc_quiver_vertex_count(const dc_quiver* q);
DC_API dc_status dc_quiver_export(const dc_quiver* q, dc_format format, const int* highlight, size_t count,
                                  char** out);
DC_API dc_status dc_quiver_check_translation(const dc_quiver* q, int* ok, char** detail);
/* Vertex with the given column and diagram vertex, or by label text such as "[1 3]" or "[2 4]+". */
DC_API dc_status dc_quiver_find(const dc_quiver* q, int64_t column, int node, int* out_vertex);
DC_API dc_status dc_quiver_find_label(const dc_quiver* q, const char* label, int* out_vertex);
DC_API dc_status dc_quiver_weakly_admissible(const char* type_name, const char* group, int* admissible,
                                             char** detail);

/* Hom-length on a finite stable quiver. */
DC_API dc_status dc_h_value(const dc_quiver* q, int y, int x, int64_t* out);
DC_API dc_status dc_h_table_json(const dc_quiver* q, int x, char** out_json);
DC_API dc_status dc_omega(const dc_quiver* q, int x, int* out_vertex, int* out_m);
/* theta rows and the grid of h(-, x) as text. */
DC_API dc_status dc_h_render(const dc_quiver* q, int x, char** out_text);
DC_API dc_status dc_sign_pattern(const dc_quiver* q, int x, int* ok);
/* Hom-length on the infinite cover, base given by column and diagram vertex. */
DC_API dc_status dc_cover_h(const char* type_name, int64_t column, int node, dc_format format, char** out);

/* Brauer relations. */
DC_API dc_status dc_brauer_enumerate(dc_family family, int n, dc_format format, char** out);
DC_API dc_status dc_brauer_count(dc_family family, int n, int closed_form, char** out_decimal);

/* Configurations. */
DC_API dc_status dc_config_check(const dc_quiver* q, const int* members, size_t count, int* verdict,
                                 char** report_json);
DC_API dc_status dc_config_parse(const dc_quiver* q, const char* json_text, int** members, size_t* count);
DC_API void dc_int_array_free(int* members);
DC_API dc_status dc_config_enumerate(const dc_quiver* q, int workers, double time_budget_seconds,
                                     dc_config_list** out);
DC_API void dc_config_list_free(dc_config_list* list);
DC_API size_t dc_config_list_size(const dc_config_list* list);
DC_API dc_status dc_config_list_get(const dc_config_list* list, size_t index, const int** members, size_t* count);
DC_API dc_status dc_config_list_count_mod_tau(const dc_config_list* list, size_t* out);
DC_API dc_status dc_config_list_json(const dc_config_list* list, char** out_json);
DC_API dc_status dc_config_list_classes(const dc_config_list* list, char** out_json);
/* Round-trip report for the classical bijections; type_name e.g. "A5". */
DC_API dc_status dc_bijection_report(const char* type_name, char** out_text, int* all_ok);

/* Exceptional enumerations and the published-number check. */
DC_API dc_status dc_exceptional_run(const char* only_csv, int workers, double time_budget_seconds, int dry_run,
                                    const char* out_dir, char** table_text, int* all_match);
DC_API dc_status dc_verify(const char* skip_csv, int inject_fault, int workers, double time_budget_seconds,
                           char** matrix_text, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* DYNCONF_H */
