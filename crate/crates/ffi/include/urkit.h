#ifndef URKIT_H
#define URKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum UrkStatus {
  UrkStatus_Ok = 0,
  UrkStatus_NullPointer = 1,
  UrkStatus_InvalidArgument = 2,
  UrkStatus_DegenerateDyad = 3,
  UrkStatus_Overflow = 4,
} UrkStatus;

/**
 * Opaque multiplicity table handle.
 */
typedef struct UrkMultiplicityTable UrkMultiplicityTable;

/**
 * Crate version as a NUL-terminated static string.
 */
const char *urk_version(void);

/**
 * Null four-vector of a spinor. `spinor` holds `re0, im0, re1, im1`; `out`
 * receives `k0, k1, k2, k3`.
 *
 * # Safety
 * `spinor` must point to 4 readable doubles and `out` to 4 writable ones.
 */
enum UrkStatus urk_spinor_to_null(const double *spinor, double *out);

/**
 * Real orthonormal tetrad of a dyad. `dyad` holds the two spinors as
 * `u_re0, u_im0, u_re1, u_im1, v_re0, v_im0, v_re1, v_im1`; `out` receives
 * the legs `t, x, y, z`, each as four consecutive components (16 doubles).
 * The dyad is rescaled to symplectic norm one first; a degenerate pair is
 * rejected.
 *
 * # Safety
 * `dyad` must point to 8 readable doubles and `out` to 16 writable ones.
 */
enum UrkStatus urk_dyad_to_real_tetrad(const double *dyad, double *out);

/**
 * Lorentz matrix induced by an element of SL(2,C). `matrix` holds the 2x2
 * complex entries row-major as `re, im` pairs (8 doubles); `out` receives
 * the 4x4 transformation row-major (16 doubles). Rejects matrices whose
 * determinant is not 1 within the library tolerance.
 *
 * # Safety
 * `matrix` must point to 8 readable doubles and `out` to 16 writable ones.
 */
enum UrkStatus urk_induced_lorentz(const double *matrix, double *out);

/**
 * Max-norm residual of the discrete wave operator on a plane wave with
 * carrier `k` (4 doubles), spacing `h` and `extent` points per axis.
 *
 * # Safety
 * `k` must point to 4 readable doubles and `out` to one writable double.
 */
enum UrkStatus urk_kg_residual(const double *k, double h, uintptr_t extent, double *out);

/**
 * Builds the multiplicity table of `n` tensored binary alternatives.
 * Returns null for `n = 0` or `n > 4096`.
 */
struct UrkMultiplicityTable *urk_multiplicity_new(uint32_t n);

/**
 * Number of distinct spin blocks in the table; 0 for a null handle.
 *
 * # Safety
 * `table` must be null or a handle from [`urk_multiplicity_new`].
 */
uintptr_t urk_multiplicity_len(const struct UrkMultiplicityTable *table);

/**
 * Entry `idx` of the table in increasing-spin order: twice the spin label
 * and the multiplicity. Fails with `Overflow` when the exact count does not
 * fit in 64 bits.
 *
 * # Safety
 * `table` must be a handle from [`urk_multiplicity_new`]; the out pointers
 * must each reference writable storage.
 */
enum UrkStatus urk_multiplicity_entry(const struct UrkMultiplicityTable *table,
                                      uintptr_t idx,
                                      uint32_t *out_twice_j,
                                      uint64_t *out_count);

/**
 * Whether the table satisfies the exact dimension sum rule.
 *
 * # Safety
 * `table` must be null or a handle from [`urk_multiplicity_new`].
 */
bool urk_multiplicity_sum_rule_holds(const struct UrkMultiplicityTable *table);

/**
 * Releases a table handle. Null is allowed.
 *
 * # Safety
 * `table` must be null or an unreleased handle from
 * [`urk_multiplicity_new`].
 */
void urk_multiplicity_free(struct UrkMultiplicityTable *table);

/**
 * The seven fiducial decimal exponents, in the order: urs per nucleon,
 * total urs, nucleon count, cutoff over radius, holographic nucleon bits,
 * holographic electron bits, electron entropy bits.
 *
 * # Safety
 * `out` must point to 7 writable 64-bit integers.
 */
enum UrkStatus urk_cosmic_fiducial_exponents(int64_t *out);

/**
 * Dimension of the truncated Fock space with total occupation at most
 * `n_max` over the four dyad modes.
 */
uint64_t urk_fock_dimension(uint32_t n_max);

#endif /* URKIT_H */
