#ifndef GENTOP_H
#define GENTOP_H

#if defined(GENTOP_BUILDING)
#define GENTOP_API __attribute__((visibility("default")))
#else
#define GENTOP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gentop_space gentop_space;

typedef enum gentop_status {
    GENTOP_OK = 0,
    GENTOP_E_PARSE = 1,
    GENTOP_E_VALIDATION = 2,
    GENTOP_E_STRUCTURAL = 3,
    GENTOP_E_PRECONDITION = 4,
    GENTOP_E_RESOURCE = 5,
    GENTOP_E_UNKNOWN_ID = 6,
    GENTOP_E_ARGUMENT = 7,
    GENTOP_E_INTERNAL = 8
} gentop_status;

/* Message for the last failing call on this thread; "" when none. */
GENTOP_API const char* gentop_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
GENTOP_API void gentop_string_free(char* s);

GENTOP_API int gentop_ground_cap(void);
GENTOP_API gentop_status gentop_set_ground_cap(int cap);

/* Spaces: {"ground":[..],"opens":[[..],..]} */
GENTOP_API gentop_status gentop_space_from_json(const char* json, gentop_space** out);
GENTOP_API gentop_status gentop_space_to_json(const gentop_space* s, char** out);
GENTOP_API int gentop_space_size(const gentop_space* s);
GENTOP_API int gentop_space_equal(const gentop_space* a, const gentop_space* b);
GENTOP_API void gentop_space_free(gentop_space* s);

/* Verdict JSON with witness. */
GENTOP_API gentop_status gentop_check_axiom(const gentop_space* s, const char* axiom, char** out);

/* Builds a space from a base, closure table, monotone map, enlargement,
   neighbourhood system or chain description. */
GENTOP_API gentop_status gentop_construct(const char* json, char** out);

/* Each takes a JSON array of spaces and returns a space. */
GENTOP_API gentop_status gentop_product(const char* spaces, char** out);
GENTOP_API gentop_status gentop_sum(const char* spaces, char** out);
GENTOP_API gentop_status gentop_join(const char* spaces, char** out);
GENTOP_API gentop_status gentop_meet(const char* spaces, int trace, char** out);

/* subset: JSON label array. */
GENTOP_API gentop_status gentop_subspace(const gentop_space* s, const char* subset, char** out);
/* classes: JSON object point -> class label. */
GENTOP_API gentop_status gentop_quotient(const gentop_space* s, const char* classes, int trace, char** out);

/* Both product forms and the coincidence verdicts. */
GENTOP_API gentop_status gentop_csaszar(const char* spaces, char** out);

GENTOP_API gentop_status gentop_embed(const gentop_space* s, int reduced, char** out);
/* budget: "n", "aleph0" or "aleph1". */
GENTOP_API gentop_status gentop_compact(const gentop_space* s, const char* budget, char** out);

/* Report JSON; *ok is 1 when no counterexample was found. */
GENTOP_API gentop_status gentop_verify(const char* id, unsigned long long seed, long long trials, int exhaustive, char** out,
                            int* ok);
/* Report JSON; *found is 1 when a counterexample was found. */
GENTOP_API gentop_status gentop_hunt(const char* id, int max_ground, char** out, int* found);
/* 1 when the stored counterexample still reproduces. */
GENTOP_API gentop_status gentop_recheck(const char* counterexample, int* reproduces);
/* JSON array of ids. */
GENTOP_API gentop_status gentop_property_ids(char** out);
GENTOP_API gentop_status gentop_hunt_ids(char** out);

/* All GTs on {0..n-1}, n <= 3. */
GENTOP_API gentop_status gentop_enumerate(int n, char** out);

#ifdef __cplusplus
}
#endif

#endif
