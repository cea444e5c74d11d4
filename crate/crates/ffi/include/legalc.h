#ifndef LEGALC_H
#define LEGALC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a call. Values match the command line's exit codes where they
// overlap.
typedef enum LegalcStatus {
  LEGALC_STATUS_OK = 0,
  // The document does not follow the grammar.
  LEGALC_STATUS_REJECTED = 1,
  // The bytes are not valid UTF-8 or contain characters XML cannot carry.
  LEGALC_STATUS_INVALID_INPUT = 2,
  LEGALC_STATUS_NULL_ARGUMENT = 3,
  LEGALC_STATUS_INVALID_OPTION = 4,
  // An internal error; the message holds the panic text.
  LEGALC_STATUS_PANIC = 5,
} LegalcStatus;

// Outcome of a compile or validate call. Opaque to C.
typedef struct LegalcCompilation LegalcCompilation;

// Output settings. `root_tag` may be NULL for the default.
typedef struct LegalcEmitOptions {
  const char *root_tag;
  uint32_t indent;
  bool xml_declaration;
} LegalcEmitOptions;

// Default output settings: root `document`, indent 2, XML declaration on.
struct LegalcEmitOptions legalc_emit_options_default(void);

// Compiles `len` bytes at `input` to XML.
//
// # Safety
// `input` must point to `len` readable bytes (it may be NULL when `len` is
// 0). `source_name` and `options` may be NULL; otherwise they must point to
// a NUL-terminated string and a valid options struct. `out` must be NULL or
// writable.
enum LegalcStatus legalc_compile(const uint8_t *input,
                                 size_t len,
                                 const char *source_name,
                                 const struct LegalcEmitOptions *options,
                                 struct LegalcCompilation **out);

// Checks `input` against the grammar without producing output.
//
// # Safety
// As for [`legalc_compile`].
enum LegalcStatus legalc_validate(const uint8_t *input,
                                  size_t len,
                                  const char *source_name,
                                  struct LegalcCompilation **out);

// # Safety
// `c` must be NULL or a live handle.
enum LegalcStatus legalc_compilation_status(const struct LegalcCompilation *c);

// The NUL-terminated XML, or NULL if there is none. Its byte length, without
// the terminator, goes to `len` when that is non-null. Owned by `c`.
//
// # Safety
// `c` must be NULL or a live handle; `len` must be NULL or writable.
const char *legalc_compilation_output(const struct LegalcCompilation *c, size_t *len);

// Number of rendered messages.
//
// # Safety
// `c` must be NULL or a live handle.
size_t legalc_compilation_diagnostic_count(const struct LegalcCompilation *c);

// Message `index` rendered with its source excerpt, or NULL when out of
// range. Owned by `c`.
//
// # Safety
// `c` must be NULL or a live handle.
const char *legalc_compilation_diagnostic(const struct LegalcCompilation *c, size_t index);

// # Safety
// `c` must be NULL or a handle not yet freed.
void legalc_compilation_free(struct LegalcCompilation *c);

// Copy of `text` with Arabic-Indic digits replaced by ASCII ones, or NULL if
// `text` is NULL or not UTF-8. Free with [`legalc_string_free`].
//
// # Safety
// `text` must be NULL or a NUL-terminated string.
char *legalc_to_western_digits(const char *text);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void legalc_string_free(char *s);

// Library version as a static NUL-terminated string.
const char *legalc_version(void);

#endif  /* LEGALC_H */
