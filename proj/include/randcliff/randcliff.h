#ifndef RANDCLIFF_H
#define RANDCLIFF_H

/* C interface to the random-Clifford code toolkit. All functions return a
 * status code; outputs are written through pointers only on RC_OK. Returned
 * strings are heap-allocated and must be released with rc_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
  RC_OK = 0,
  RC_INVALID_ARGUMENT = 1,
  RC_RUNTIME_ERROR = 2,
  RC_INTERNAL_ERROR = 3
} rc_status;

/* Message for the most recent failure on this thread. Never NULL. */
const char* rc_last_error(void);

void rc_string_free(char* s);

/* Canonical two-qubit Clifford gate table (11,520 entries, fixed order). */
typedef struct rc_table rc_table;
/* An ordered two-qubit gate list over n qubits. */
typedef struct rc_circuit rc_circuit;

rc_status rc_table_create(rc_table** out);
void rc_table_free(rc_table* table);
rc_status rc_table_size(const rc_table* table, size_t* out);
rc_status rc_table_checksum(const rc_table* table, char** out);
/* Number of gates g with g mu g' = +/- nu, for nonzero two-qubit Pauli codes
 * (bit 0: x on the first qubit, bit 1: z on the first, bits 2-3 likewise for
 * the second). */
rc_status rc_table_transfer_count(const rc_table* table, unsigned mu_code, unsigned nu_code,
                                  size_t* out);

rc_status rc_circuit_sample(const rc_table* table, size_t n, size_t t, uint64_t seed,
                            rc_circuit** out);
rc_status rc_circuit_from_json(const rc_table* table, const char* json, rc_circuit** out);
void rc_circuit_free(rc_circuit* c);
rc_status rc_circuit_to_json(const rc_table* table, const rc_circuit* c, char** out_json);
rc_status rc_circuit_qubits(const rc_circuit* c, size_t* out);
rc_status rc_circuit_gate_count(const rc_circuit* c, size_t* out);
/* {"scheduler":..,"depth":..,"layer_sizes":[..]}; asap selects the
 * earliest-layer scheduler instead of the strict sequential one. */
rc_status rc_circuit_parallelize(const rc_circuit* c, int asap, char** out_json);

/* Distance of the code encoded by the circuit (logical qubits 0..k-1). The
 * reports are JSON documents. budget/workers/samples semantics follow the
 * library defaults when 0. */
rc_status rc_distance_exact(const rc_table* table, const rc_circuit* c, size_t k, uint64_t budget,
                            unsigned workers, char** out_json);
rc_status rc_distance_monte_carlo(const rc_table* table, const rc_circuit* c, size_t k,
                                  uint64_t samples, uint64_t seed, char** out_json);
/* Dense statevector codeword check; out = first violating error weight, or
 * d_max + 1 when all weights through d_max pass. */
rc_status rc_kl_oracle_distance(const rc_circuit* c, size_t k, size_t d_max, size_t* out);
rc_status rc_gv_rate_bound(double delta, double* out);

/* Weight-transition chain. probs buffers hold n + 1 doubles (index =
 * weight). */
rc_status rc_chain_transition_row(size_t n, size_t ell, double* down, double* stay, double* up);
rc_status rc_chain_evolve(size_t n, size_t ell0, size_t t, double* probs);
rc_status rc_chain_stationary(size_t n, double* probs);
/* Exact-rational row as JSON {"numerators":[..],"denominator":..,"probs":[..]}
 * (n <= 64). */
rc_status rc_chain_evolve_exact(size_t n, size_t ell0, size_t t, char** out_json);

rc_status rc_union_bound(size_t n, size_t k, size_t d, size_t t, double* out);
rc_status rc_union_bound_exact(size_t n, size_t k, size_t d, size_t t, double* out);
rc_status rc_closed_form_bound(size_t n, size_t k, size_t d, double delta, double* out);
/* Mixing-bound check over all start weights and target weights <= 3n/4;
 * pass t = 0 to derive t from c. Report JSON lists any violations. */
rc_status rc_check_mixing(size_t n, size_t t, double delta, double eta, double c,
                          char** out_json);

/* Batch experiments. config_json follows the documented config schema; the
 * report JSON is also written to the config's output_path when set. out_ok
 * is 1 iff every invariant asserted by the experiment held. */
rc_status rc_experiment_run(const char* config_json, char** out_report_json, int* out_ok);

#ifdef __cplusplus
}
#endif

#endif /* RANDCLIFF_H */
