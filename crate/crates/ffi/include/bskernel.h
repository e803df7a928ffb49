#ifndef BSKERNEL_H
#define BSKERNEL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `BSK_OK` is zero; everything else is a failure.
 */
typedef enum BskStatus {
  BSK_OK = 0,
  BSK_NULL_POINTER = 1,
  BSK_INVALID_UTF8 = 2,
  BSK_POLE = 3,
  BSK_OVERFLOW = 4,
  BSK_DOMAIN = 5,
  BSK_DOMAIN_UNSUPPORTED = 6,
  BSK_CONVERGENCE = 7,
  BSK_TERM_CAP = 8,
  BSK_PRECONDITION = 9,
  BSK_QUADRATURE = 10,
  BSK_UNKNOWN_SUITE = 11,
  BSK_INVALID_ARGUMENT = 12,
  BSK_PANIC = 13,
} BskStatus;

typedef enum BskSide {
  BSK_LEFT = 0,
  BSK_RIGHT = 1,
} BskSide;

typedef enum BskKind {
  BSK_MONOMIAL = 0,
  BSK_BS_KERNEL = 1,
  BSK_EXP = 2,
  BSK_EXPM1 = 3,
  BSK_I0_PLUS_L0 = 4,
  BSK_TWO_I1_PLUS_TWO_L1 = 5,
} BskKind;

/**
 * Opaque closed-form operator image, evaluable at any `x > 0`.
 */
typedef struct BskImage BskImage;

/**
 * Opaque Fox-Wright parameter list.
 */
typedef struct BskWrightSpec BskWrightSpec;

/**
 * A value with its truncation diagnostics.
 */
typedef struct BskEval {
  double value;
  double abs_error_est;
  size_t terms_used;
} BskEval;

typedef struct BskMsmParams {
  double alpha;
  double alpha_prime;
  double beta;
  double beta_prime;
  double gamma;
} BskMsmParams;

/**
 * `t^{rho−1} K(w)`; `nu` and `lambda` are read only for `BSK_BS_KERNEL`.
 */
typedef struct BskIntegrand {
  enum BskKind kind;
  double nu;
  double lambda;
  double rho;
} BskIntegrand;

typedef struct BskPathwayParams {
  double eta;
  double a;
  double pathway_alpha;
} BskPathwayParams;

typedef struct BskDensityParams {
  double gamma_shape;
  double delta;
  double beta_shape;
  double a;
  double pathway_alpha;
} BskDensityParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, empty if none. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *bsk_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bsk_version(void);

/**
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_gamma(double x, double *out);

/**
 * `S_ν(u)`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_kernel(double nu, double u, struct BskEval *out);

/**
 * `J_ν(z)`, or `I_ν(z)` when `modified` is nonzero.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_bessel(double nu, double z, bool modified, struct BskEval *out);

/**
 * `H_ν(z)`, or `L_ν(z)` when `modified` is nonzero.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_struve(double nu, double z, bool modified, struct BskEval *out);

/**
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_hyp2f1(double a, double b, double c, double z, struct BskEval *out);

/**
 * Appell `F3(α, α′, β, β′; γ; x, y)`.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_appell_f3(double alpha,
                             double alpha_prime,
                             double beta,
                             double beta_prime,
                             double gamma,
                             double x,
                             double y,
                             struct BskEval *out);

/**
 * Empty spec; append pairs with [`bsk_wright_push_upper`] and
 * [`bsk_wright_push_lower`]. Never returns null.
 */
struct BskWrightSpec *bsk_wright_new(void);

/**
 * # Safety
 * `spec` must be null or come from [`bsk_wright_new`] and not be freed yet.
 */
void bsk_wright_free(struct BskWrightSpec *spec);

/**
 * # Safety
 * `spec` must be a live handle.
 */
enum BskStatus bsk_wright_push_upper(struct BskWrightSpec *spec, double a, double slope);

/**
 * # Safety
 * `spec` must be a live handle.
 */
enum BskStatus bsk_wright_push_lower(struct BskWrightSpec *spec, double b, double slope);

/**
 * `Σ lower slopes − Σ upper slopes`; the series is entire iff this is > −1.
 *
 * # Safety
 * `spec` must be a live handle and `out` valid for a write.
 */
enum BskStatus bsk_wright_delta(const struct BskWrightSpec *spec, double *out);

/**
 * `pΨq(z)` summed to relative tolerance `tol`.
 *
 * # Safety
 * `spec` must be a live handle and `out` valid for a write.
 */
enum BskStatus bsk_wright_eval(const struct BskWrightSpec *spec,
                               double z,
                               double tol,
                               struct BskEval *out);

/**
 * Closed-form MSM image of `integrand` on the given side. On success
 * `*out` owns a new handle to release with [`bsk_image_free`].
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_msm_image_new(enum BskSide side_,
                                 struct BskMsmParams params,
                                 struct BskIntegrand integrand_,
                                 struct BskImage **out);

/**
 * Closed-form pathway image; ownership as for [`bsk_msm_image_new`].
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_pathway_image_new(struct BskPathwayParams params,
                                     struct BskIntegrand integrand_,
                                     struct BskImage **out);

/**
 * # Safety
 * `image` must be null or a handle not yet freed.
 */
void bsk_image_free(struct BskImage *image);

/**
 * # Safety
 * `image` must be a live handle and `out` valid for a write.
 */
enum BskStatus bsk_image_eval(const struct BskImage *image, double x, struct BskEval *out);

/**
 * Reference value of the MSM image by quadrature of the defining integral.
 *
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_msm_quadrature(enum BskSide side_,
                                  struct BskMsmParams params,
                                  struct BskIntegrand integrand_,
                                  double x,
                                  struct BskEval *out);

/**
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_pathway_quadrature(struct BskPathwayParams params,
                                      struct BskIntegrand integrand_,
                                      double x,
                                      struct BskEval *out);

/**
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_density(struct BskDensityParams params, double x, double *out);

/**
 * # Safety
 * `out` must be valid for a write.
 */
enum BskStatus bsk_density_norm_const(struct BskDensityParams params, double *out);

/**
 * Runs a verification suite and writes its JSON report to `*out_json`,
 * to be released with [`bsk_string_free`]. `tolerance_override <= 0`
 * keeps the default tolerances. `*passed` is set to whether every row met
 * its expectation.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `out_json` and `passed` must be
 * valid for writes.
 */
enum BskStatus bsk_run_suite(const char *suite,
                             double tolerance_override,
                             char **out_json,
                             bool *passed);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void bsk_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BSKERNEL_H */
