/* ssmthom: exact-arithmetic engine for SSM-Thom polynomials of
 * multisingularities, image Milnor numbers of quasihomogeneous germs, and the
 * interpolation solver for the master series and A0-tower.
 *
 * All functions return ssmthom_status; on failure ssmthom_last_error() holds
 * a message for the calling thread. Out-parameters are written only on
 * SSMTHOM_OK. Strings and handles returned through out-parameters are owned
 * by the caller and released with the matching _free function.
 */
#ifndef SSMTHOM_H
#define SSMTHOM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssmthom_status {
  SSMTHOM_OK = 0,
  SSMTHOM_ERR_INVALID = 1, /* bad arguments, grammar or precondition violations */
  SSMTHOM_ERR_SCHEMA = 2,  /* malformed input files */
  SSMTHOM_ERR_COMPUTE = 3, /* underdetermined / inconsistent / non-divisible / non-finite */
  SSMTHOM_ERR_MISSING = 4, /* required table or catalog entry is absent */
  SSMTHOM_ERR_IO = 5,
  SSMTHOM_ERR_INTERNAL = 6
} ssmthom_status;

typedef struct ssmthom_series ssmthom_series; /* opaque truncated graded series */
typedef struct ssmthom_table ssmthom_table;   /* opaque multisingularity -> series table */

const char* ssmthom_last_error(void);
void ssmthom_string_free(char* s);
void ssmthom_series_free(ssmthom_series* s);
void ssmthom_table_free(ssmthom_table* t);

/* Fixture directory override (falls back to $SSMTHOM_FIXTURE_DIR, then the
 * compiled-in default). */
int ssmthom_set_fixture_dir(const char* dir);
int ssmthom_fixture_dir(char** out);

/* Interpolation solver. The master series is the empty-multisingularity row;
 * the tower solve returns rows A0^0 .. A0^height. report_json may be NULL. */
int ssmthom_solve_master(int l, int degree, ssmthom_series** out, char** report_json);
int ssmthom_solve_tower(int l, int degree, int height, ssmthom_table** out, char** report_json);

/* Series and table IO (canonical JSON; load/store round-trips bit-exactly). */
int ssmthom_series_load(const char* path, ssmthom_series** out);
int ssmthom_series_store(const ssmthom_series* s, const char* path);
int ssmthom_series_to_json(const ssmthom_series* s, char** out);
int ssmthom_series_from_json(const char* json_text, ssmthom_series** out);
int ssmthom_series_render(const ssmthom_series* s, int compress_exponents, char** out);
int ssmthom_table_load(const char* path, ssmthom_table** out);
int ssmthom_table_store(const ssmthom_table* t, const char* path);
int ssmthom_table_to_json(const ssmthom_table* t, char** out);
int ssmthom_table_entry(const ssmthom_table* t, const char* multisingularity,
                        ssmthom_series** out);
int ssmthom_table_info(const ssmthom_table* t, int* l, int* truncation, char** flavor);
/* Canonical renderings of the table keys, newline separated. */
int ssmthom_table_keys(const ssmthom_table* t, char** out);

/* Structure calculus. psi uses the multisingularity grammar; a distinguished
 * prefix ("A1:A0*A1") selects the source polynomial. assemble_source derives
 * its R-data from the S-table when r_table is NULL. */
int ssmthom_assemble_target(const ssmthom_table* s_table, const char* psi, int degree,
                            ssmthom_series** out);
int ssmthom_assemble_source(const ssmthom_table* r_table, const ssmthom_table* s_table,
                            const char* psi, int degree, ssmthom_series** out);
int ssmthom_f_map(const ssmthom_series* s, ssmthom_series** out);
int ssmthom_ff_map(const ssmthom_series* s, int degree, ssmthom_series** out);
int ssmthom_r_from_s(const ssmthom_series* s, int degree, ssmthom_series** out);

/* Interpolation verification of an S-table against the bundled prototypes;
 * *pass is 1 when every check holds. */
int ssmthom_verify_table(const ssmthom_table* t, int degree, int* pass, char** report_json);

/* Prototype of a bundled monosingularity: human-readable weight lists and a
 * JSON dump. presentation may be NULL for the solver presentation. */
int ssmthom_prototype_render(const char* name, int l, const char* presentation, char** text,
                             char** json_out);

/* Mond pipeline: K-polynomial set as JSON; exact image Milnor number with an
 * integrality verdict (*valid is 1 for a nonnegative integer result). */
int ssmthom_kpolys(int max_degree, char** json_out);
int ssmthom_image_milnor(int m, const long* weights, const long* degrees, char** value,
                         int* valid);

/* Re-derivation self-test of every bundled fixture. */
int ssmthom_fixtures_selftest(int* pass, char** report);

#ifdef __cplusplus
}
#endif

#endif /* SSMTHOM_H */
