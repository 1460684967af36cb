#pragma once

#include <cstdint>

// Dense kernels behind the tensor ops. Every kernel has a serial reference
// and an OpenMP variant that partitions output rows; per-element accumulation
// order is identical in both, so results match bit for bit and the parallel
// path can be validated against the serial one directly (see tests and
// tools/bench_kernels).
namespace charlab::kern {

// Global switch (default on). The serial reference is always available
// through the *_serial entry points regardless of this setting.
void set_parallel(bool enabled);
bool parallel_enabled();

// C[m x n] = A[m x k] * B[k x n]            (accumulate: C +=)
void matmul(const double* a, const double* b, double* c, int m, int k, int n,
            bool accumulate = false);
void matmul_serial(const double* a, const double* b, double* c, int m, int k,
                   int n, bool accumulate = false);

// C[m x n] = A[m x k] * B[n x k]^T
void matmul_nt(const double* a, const double* b, double* c, int m, int k,
               int n, bool accumulate = false);
void matmul_nt_serial(const double* a, const double* b, double* c, int m,
                      int k, int n, bool accumulate = false);

// C[m x n] = A[k x m]^T * B[k x n]
void matmul_tn(const double* a, const double* b, double* c, int m, int k,
               int n, bool accumulate = false);
void matmul_tn_serial(const double* a, const double* b, double* c, int m,
                      int k, int n, bool accumulate = false);

// Multiply-accumulate counter (2 flops per MAC), incremented by the matmul
// family. Used by the efficiency bench and the bottleneck-property check.
void reset_flops();
uint64_t flops();

}  // namespace charlab::kern
