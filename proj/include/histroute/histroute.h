/* Compact routing on r-visibility graphs of histogram polygons. */
#ifndef HISTROUTE_H
#define HISTROUTE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define HR_API __attribute__((visibility("default")))
#else
#define HR_API
#endif

typedef enum hr_status {
  HR_OK = 0,
  HR_INVALID_ARGUMENT = 1,
  HR_PARSE_ERROR = 2,
  HR_INVALID_POLYGON = 3,
  HR_IO_ERROR = 4,
  HR_ROUTE_ERROR = 5,
  HR_INTERNAL_ERROR = 6
} hr_status;

typedef enum hr_kind { HR_SIMPLE = 0, HR_DOUBLE = 1 } hr_kind;

typedef struct hr_polygon hr_polygon;
typedef struct hr_scheme hr_scheme;

/* Message for the last failed call on this thread; never NULL. */
HR_API const char* hr_last_error(void);
HR_API const char* hr_status_name(hr_status status);

/* Strings returned through char** are owned by the caller. */
HR_API void hr_string_free(char* s);

/* Polygons. Parsing validates; HR_INVALID_POLYGON names the violated
   invariant in hr_last_error(). */
HR_API hr_status hr_polygon_parse(const char* text, hr_polygon** out);
HR_API hr_status hr_polygon_read(const char* path, hr_polygon** out);
HR_API hr_status hr_polygon_generate(hr_kind kind, int n, uint64_t seed, hr_polygon** out);
HR_API hr_status hr_polygon_write(const hr_polygon* p, char** text);
HR_API int hr_polygon_size(const hr_polygon* p);
HR_API hr_kind hr_polygon_kind(const hr_polygon* p);
HR_API void hr_polygon_free(hr_polygon* p);

/* Schemes. A double scheme may be built from a simple polygon, which is
   then read as a double histogram with a flat top chain. */
HR_API hr_status hr_scheme_build(const hr_polygon* p, hr_kind kind, hr_scheme** out);
HR_API hr_status hr_scheme_parse(const char* dump, hr_scheme** out);
HR_API hr_status hr_scheme_read(const char* path, hr_scheme** out);
HR_API hr_status hr_scheme_dump(const hr_scheme* s, char** text);
HR_API int hr_scheme_size(const hr_scheme* s);
HR_API hr_kind hr_scheme_kind(const hr_scheme* s);
HR_API void hr_scheme_free(hr_scheme* s);

/* Largest encodings over all vertices, with the budgets they must meet. */
typedef struct hr_sizes {
  int width; /* ceil(log2 n) */
  size_t label_bits, table_bits, header_bits;
  size_t label_bound, table_bound, header_bound;
} hr_sizes;
HR_API hr_status hr_scheme_sizes(const hr_scheme* s, hr_sizes* out);

/* True when the first argument names a scheme dump rather than a polygon. */
HR_API int hr_text_is_scheme(const char* text);

typedef struct hr_route_result {
  int* trace; /* from, ..., to; empty when from == to */
  size_t length;
  int routed; /* hops */
  int bfs;    /* shortest distance in the scheme's graph */
  size_t max_header_bits;
} hr_route_result;

/* HR_ROUTE_ERROR covers firewall breaches, protocol violations and the hop
   limit; the partial trace is still returned. */
HR_API hr_status hr_route(const hr_scheme* s, int from, int to, hr_route_result* out);
HR_API void hr_route_result_free(hr_route_result* r);

typedef struct hr_verify_options {
  size_t sample_pairs; /* 0: all ordered pairs */
  uint64_t seed;
  unsigned threads; /* 0: hardware concurrency */
  int want_csv;
} hr_verify_options;

typedef struct hr_verify_result {
  size_t pairs;
  size_t failures;
  size_t two_step_stalls;
  double max_stretch;
  double mean_stretch;
  char* summary;       /* key=value lines */
  char* csv;           /* NULL unless requested */
  char* failure_text;  /* one line per kept failure */
} hr_verify_result;

HR_API hr_status hr_verify(const hr_scheme* s, const hr_verify_options* opt, hr_verify_result* out);
HR_API void hr_verify_result_free(hr_verify_result* r);

#ifdef __cplusplus
}
#endif

#endif
