/* C interface to the dcenter library. All handles are opaque; every call
 * returns a dc_status and, on failure, leaves a message retrievable with
 * dc_last_error() on the calling thread. Strings returned through char**
 * outputs are owned by the caller and released with dc_string_free(). */
#ifndef DCENTER_DCENTER_H
#define DCENTER_DCENTER_H

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
  DC_ERR_EMPTY_INPUT = 1,
  DC_ERR_DOMAIN = 2,
  DC_ERR_PRECONDITION = 3,
  DC_ERR_BOUNDED_COMPUTATION = 4,
  DC_ERR_AMBIGUITY = 5,
  DC_ERR_BOUNDARY = 6,
  DC_ERR_SPECIAL_CASE = 7,
  DC_ERR_SIZE = 8,
  DC_ERR_SOLVER = 9,
  DC_ERR_CENSUS = 10,
  DC_ERR_CLASSIFICATION = 11,
  DC_ERR_PORTRAIT_INVALID = 12,
  DC_ERR_IO = 13,
  DC_ERR_INVALID_ARGUMENT = 14,
  DC_ERR_INTERNAL = 15
} dc_status;

DC_API const char* dc_version(void);
DC_API const char* dc_status_name(dc_status status);
/* Message of the last failed call on this thread; "" if none. */
DC_API const char* dc_last_error(void);
DC_API void dc_string_free(char* s);

/* ---- H-compositions ---- */

typedef struct dc_hcomp_list dc_hcomp_list;

/* Exact sum over H(n) and d^n - 1 as decimal strings. */
DC_API dc_status dc_identity_check(unsigned n, unsigned d, char** lhs, char** rhs, int* equal);

DC_API dc_status dc_hcomp_enumerate(unsigned n, dc_hcomp_list** out);
DC_API size_t dc_hcomp_size(const dc_hcomp_list* list);
/* Copies up to cap parts of element i into parts; *len receives the length. */
DC_API dc_status dc_hcomp_parts(const dc_hcomp_list* list, size_t i, unsigned* parts, size_t cap, size_t* len);
DC_API dc_status dc_hcomp_omega(const dc_hcomp_list* list, size_t i, unsigned* omega);
DC_API dc_status dc_hcomp_term_value(const dc_hcomp_list* list, size_t i, unsigned d, char** value);
/* Count assembled from rotation sets, itineraries and angle pairs. */
DC_API dc_status dc_hcomp_prop32(const dc_hcomp_list* list, size_t i, unsigned d, char** rotation_sets,
                                 char** itineraries, char** angle_pairs, char** total);
DC_API void dc_hcomp_free(dc_hcomp_list* list);

/* ---- power series ---- */

typedef enum dc_series_kind {
  DC_SERIES_G = 0,           /* triple sum, param = d */
  DC_SERIES_CLOSED_FORM = 1, /* (d-1)z/((1-dz)(1-z)), param = d */
  DC_SERIES_LAMBERT = 2,     /* param ignored */
  DC_SERIES_BOUNDED = 3      /* param = b, param2 = s */
} dc_series_kind;

typedef struct dc_series dc_series;

DC_API dc_status dc_series_create(dc_series_kind kind, unsigned param, unsigned param2, unsigned order,
                                  dc_series** out);
DC_API unsigned dc_series_order(const dc_series* s);
/* Coefficient k as "p/q" or "p". */
DC_API dc_status dc_series_coeff(const dc_series* s, unsigned k, char** value);
DC_API void dc_series_free(dc_series* s);

/* ---- rotation sets ---- */

typedef struct dc_rotation_sets dc_rotation_sets;

DC_API dc_status dc_rotation_sets_enumerate(unsigned d, unsigned p, unsigned q, dc_rotation_sets** out);
DC_API size_t dc_rotation_sets_size(const dc_rotation_sets* sets);
/* Space-separated angles of set i, e.g. "1/8 3/8". */
DC_API dc_status dc_rotation_sets_angles(const dc_rotation_sets* sets, size_t i, char** angles);
DC_API dc_status dc_rotation_sets_widest_gap(const dc_rotation_sets* sets, size_t i, char** tau_minus,
                                             char** tau_plus, int* contains_zero);
DC_API void dc_rotation_sets_free(dc_rotation_sets* sets);

/* ---- centers ---- */

typedef struct dc_solver_config {
  unsigned long degree_cap;
  double residual_tolerance;
  double separation;
  double period_band;
  double gap_factor;
  unsigned max_iterations;
  unsigned newton_iterations;
  unsigned max_restarts;
} dc_solver_config;

typedef struct dc_center {
  double re;
  double im;
  unsigned exact_period;
  double residual;
} dc_center;

typedef struct dc_centers dc_centers;

DC_API dc_solver_config dc_solver_config_default(void);
/* cfg may be NULL for defaults. */
DC_API dc_status dc_centers_find(unsigned d, unsigned n, const dc_solver_config* cfg, dc_centers** out);
DC_API size_t dc_centers_size(const dc_centers* centers);
DC_API dc_status dc_centers_get(const dc_centers* centers, size_t i, dc_center* out);
DC_API dc_status dc_centers_write_csv(const dc_centers* centers, const char* path);
DC_API void dc_centers_free(dc_centers* centers);

/* ---- rendering ---- */

typedef struct dc_viewport {
  double center_re;
  double center_im;
  double half_width;
  unsigned width;
  unsigned height;
  unsigned max_iter;
  double escape_radius;
} dc_viewport;

DC_API dc_viewport dc_viewport_default(void);
/* Writes a binary PPM; overlay_orbit > 0 marks z_1..z_overlay_orbit. */
DC_API dc_status dc_render_julia(double c_re, double c_im, unsigned d, const dc_viewport* vp, unsigned overlay_orbit,
                                 const char* path);

/* ---- acceptance report ---- */

typedef struct dc_report dc_report;

/* Runs every acceptance check with default bounds; scratch_dir may be NULL. */
DC_API dc_status dc_verify_all(const char* scratch_dir, dc_report** out);
DC_API int dc_report_passed(const dc_report* report);
DC_API dc_status dc_report_json(const dc_report* report, char** json);
DC_API dc_status dc_report_text(const dc_report* report, char** text);
DC_API void dc_report_free(dc_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DCENTER_DCENTER_H */
