#pragma once
#include <cstddef>

// Dense kernels behind the layer library. Each kernel has a serial
// reference (_ref) and an OpenMP driver that splits the independent outer
// loop; both call the same per-row inner routine, so results are bitwise
// identical for any thread count. Accumulation order inside one output
// element is fixed (ascending k, eight-way unrolled partial sums combined
// pairwise).
namespace nn::kernels {

// Global switch, defaults to parallel when OpenMP is compiled in.
void set_parallel(bool on);
bool parallel_enabled();

// C[M,N] = A[M,K] . B[N,K]^T   (rows of B are dotted with rows of A)
void gemm_nt(int M, int N, int K, const double* A, const double* B, double* C);
void gemm_nt_ref(int M, int N, int K, const double* A, const double* B, double* C);

// C[M,N] = A[M,K] . B[K,N]
void gemm_nn(int M, int N, int K, const double* A, const double* B, double* C);
void gemm_nn_ref(int M, int N, int K, const double* A, const double* B, double* C);

// C[M,N] = sum_b A[b,m] * B[b,n]   (A is [L,M], B is [L,N]; gradient of W)
void gemm_tn(int L, int M, int N, const double* A, const double* B, double* C);
void gemm_tn_ref(int L, int M, int N, const double* A, const double* B, double* C);

} // namespace nn::kernels
