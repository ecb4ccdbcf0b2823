#ifndef SMBD_H
#define SMBD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Encodes an infinite game value.
 */
#define SMBD_INFINITY UINT32_MAX

/**
 * Game selector: Dominator starts.
 */
#define SMBD_GAME_D 0

/**
 * Game selector: Staller starts.
 */
#define SMBD_GAME_S 1

typedef enum SmbdStatus {
  SMBD_STATUS_OK = 0,
  SMBD_STATUS_NULL_POINTER = 1,
  SMBD_STATUS_PARSE = 2,
  SMBD_STATUS_CAP_EXCEEDED = 3,
  SMBD_STATUS_NOT_A_TREE = 4,
  SMBD_STATUS_INVALID = 5,
  SMBD_STATUS_UTF8 = 6,
  SMBD_STATUS_PANIC = 7,
} SmbdStatus;

/**
 * Opaque graph handle.
 */
typedef struct SmbdGraph SmbdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *smbd_last_error(void);

/**
 * Parses a graph6 string into a new handle.
 *
 * # Safety
 * `s` must be a NUL-terminated string and the output pointer valid.
 */
enum SmbdStatus smbd_graph_from_graph6(const char *s, struct SmbdGraph **out_graph);

/**
 * Parses an edge list (`n <count>` header, one `u v` pair per line).
 *
 * # Safety
 * `s` must be a NUL-terminated string and the output pointer valid.
 */
enum SmbdStatus smbd_graph_from_edge_list(const char *s, struct SmbdGraph **out_graph);

/**
 * Releases a handle; NULL is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void smbd_graph_free(struct SmbdGraph *g);

/**
 * Number of vertices, 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
uint32_t smbd_graph_vertex_count(const struct SmbdGraph *g);

/**
 * graph6 encoding; release with `smbd_string_free`.
 *
 * # Safety
 * `g` must be a live handle and the output pointer valid.
 */
enum SmbdStatus smbd_graph_to_graph6(const struct SmbdGraph *g, char **out_str);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library.
 */
void smbd_string_free(char *s);

/**
 * `γ_SMB` by exact search; `cap` bounds the vertex count.
 *
 * # Safety
 * `g` must be a live handle and `value` a valid pointer.
 */
enum SmbdStatus smbd_gamma_smb(const struct SmbdGraph *g, uint32_t cap, uint32_t *value);

/**
 * `γ'_SMB` by exact search; `cap` bounds the vertex count.
 *
 * # Safety
 * `g` must be a live handle and `value` a valid pointer.
 */
enum SmbdStatus smbd_gamma_smb_prime(const struct SmbdGraph *g, uint32_t cap, uint32_t *value);

/**
 * `γ'_SMB` of a tree from its minimum-rank substructure.
 *
 * # Safety
 * `g` must be a live handle and `value` a valid pointer.
 */
enum SmbdStatus smbd_gamma_prime_via_structure(const struct SmbdGraph *g, uint32_t *value);

/**
 * Value of `P_n` in the given game.
 *
 * # Safety
 * `value` must be a valid pointer.
 */
enum SmbdStatus smbd_path_value(uint32_t n, uint32_t game_sel, uint32_t *value);

/**
 * S-game value of `S(n_1, ..., n_l)`. When the value is open, `is_open`
 * is set to 1 and `lower`/`upper` hold the bounds; otherwise `is_open` is
 * 0 and `value` holds it.
 *
 * # Safety
 * `branches` must point to `len` values; the outputs must be valid.
 */
enum SmbdStatus smbd_star_value(const uint32_t *branches,
                                size_t len,
                                uint32_t *value,
                                uint32_t *is_open,
                                uint32_t *lower,
                                uint32_t *upper);

/**
 * Value of the all-even star `S(n_1, n_2, n_3)`; `t1` is set to 1 for
 * the larger value class.
 *
 * # Safety
 * The outputs must be valid pointers.
 */
enum SmbdStatus smbd_all_even3_value(uint32_t n1,
                                     uint32_t n2,
                                     uint32_t n3,
                                     uint32_t *value,
                                     uint32_t *t1);

/**
 * Upper bound for an all-even star with at least three branches.
 *
 * # Safety
 * `branches` must point to `len` values and `value` be valid.
 */
enum SmbdStatus smbd_all_even_upper_bound(const uint32_t *branches, size_t len, uint32_t *value);

/**
 * Both values of a caterpillar from its clean odd paths.
 *
 * # Safety
 * `g` must be a live handle and the outputs valid.
 */
enum SmbdStatus smbd_caterpillar_values(const struct SmbdGraph *g,
                                        uint32_t *gamma_smb,
                                        uint32_t *gamma_smb_prime);

/**
 * Builds `Z(l, p)` into a new handle and reports its value.
 *
 * # Safety
 * The outputs must be valid pointers.
 */
enum SmbdStatus smbd_z_family(uint32_t l,
                              uint32_t p,
                              struct SmbdGraph **out_graph,
                              uint32_t *expected);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SMBD_H */
