#ifndef BRAUERLIE_BRAUERLIE_H
#define BRAUERLIE_BRAUERLIE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BL_API __declspec(dllexport)
#else
#define BL_API __attribute__((visibility("default")))
#endif

typedef enum bl_status {
  BL_OK = 0,
  BL_ERR_PARSE,
  BL_ERR_TYPE,
  BL_ERR_ORIENTATION,
  BL_ERR_BOUNDARY,
  BL_ERR_FLAVOR,
  BL_ERR_UNSUPPORTED_RING,
  BL_ERR_DIMENSION,
  BL_ERR_NOT_IDEMPOTENT,
  BL_ERR_SHAPE,
  BL_ERR_VALIDATION,
  BL_ERR_PRECONDITION,
  BL_ERR_UNSPECIALIZED_DELTA,
  BL_ERR_IO,
  BL_ERR_INVALID_ARGUMENT,
  BL_ERR_INTERNAL
} bl_status;

typedef struct bl_options bl_options;
typedef struct bl_morphism bl_morphism;
typedef struct bl_result bl_result;

BL_API const char* bl_version(void);
BL_API const char* bl_status_name(bl_status s);

/* Message of the last failure on this thread; "" when none. */
BL_API const char* bl_last_error(void);
/* Character offset for parse errors, -1 otherwise. */
BL_API int bl_last_error_position(void);

BL_API bl_options* bl_options_new(void);
BL_API void bl_options_free(bl_options* o);
/* "generic" clears the value. */
BL_API bl_status bl_options_set_delta(bl_options* o, const char* delta);
BL_API bl_status bl_options_set_n(bl_options* o, int n);
BL_API bl_status bl_options_set_degree_bound(bl_options* o, int d);
/* text, json or tikz */
BL_API bl_status bl_options_set_format(bl_options* o, const char* format);

BL_API bl_status bl_morphism_parse(const char* expr, bl_morphism** out);
BL_API bl_status bl_morphism_compose(const bl_morphism* f, const bl_morphism* g, bl_morphism** out);
BL_API bl_status bl_morphism_tensor(const bl_morphism* f, const bl_morphism* g, bl_morphism** out);
BL_API bl_status bl_morphism_equal(const bl_morphism* f, const bl_morphism* g, int* out);
/* Rendered with the options' format and delta; free with bl_string_free. */
BL_API bl_status bl_morphism_render(const bl_morphism* f, const bl_options* o, char** out);
BL_API void bl_morphism_free(bl_morphism* f);
BL_API void bl_string_free(char* s);

/* Each command fills a result; options may be NULL for defaults. */
BL_API bl_status bl_normalize(const char* expr, const bl_options* o, bl_result** out);
/* suite: lie-axioms, current or equivariant; input_json may be NULL. */
BL_API bl_status bl_verify(const char* suite, const char* input_json, const bl_options* o, bl_result** out);
BL_API bl_status bl_kernel(const char* word, const bl_options* o, bl_result** out);
BL_API bl_status bl_solve(const char* problem_json, const bl_options* o, bl_result** out);
/* id: all or a manifest id. */
BL_API bl_status bl_reproduce(const char* id, const bl_options* o, bl_result** out);

BL_API int bl_result_passed(const bl_result* r);
BL_API const char* bl_result_json(const bl_result* r);
BL_API const char* bl_result_text(const bl_result* r);
BL_API void bl_result_free(bl_result* r);

#ifdef __cplusplus
}
#endif

#endif
