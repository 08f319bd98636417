#include "ofdmnet/kernels.hpp"

#include <atomic>

namespace nn::kernels {

namespace {

std::atomic<bool> g_parallel{true};

// Fixed-order dot product: eight independent partial sums over k = 0..K,
// combined pairwise. The order never depends on thread count or tile size.
inline double dot8(const double* a, const double* b, int n) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0, s6 = 0, s7 = 0;
    int k = 0;
    for (; k + 8 <= n; k += 8) {
        s0 += a[k + 0] * b[k + 0];
        s1 += a[k + 1] * b[k + 1];
        s2 += a[k + 2] * b[k + 2];
        s3 += a[k + 3] * b[k + 3];
        s4 += a[k + 4] * b[k + 4];
        s5 += a[k + 5] * b[k + 5];
        s6 += a[k + 6] * b[k + 6];
        s7 += a[k + 7] * b[k + 7];
    }
    double s = ((s0 + s1) + (s2 + s3)) + ((s4 + s5) + (s6 + s7));
    for (; k < n; ++k) s += a[k] * b[k];
    return s;
}

inline void nt_row(int N, int K, const double* a, const double* B, double* c) {
    for (int j = 0; j < N; ++j) c[j] = dot8(a, B + (size_t)j * K, K);
}

inline void nn_row(int N, int K, const double* a, const double* B, double* c) {
    for (int j = 0; j < N; ++j) c[j] = 0.0;
    for (int k = 0; k < K; ++k) {
        double av = a[k];
        const double* b = B + (size_t)k * N;
        for (int j = 0; j < N; ++j) c[j] += av * b[j];
    }
}

inline void tn_row(int L, int M, int N, int m, const double* A, const double* B,
                   double* c) {
    for (int j = 0; j < N; ++j) c[j] = 0.0;
    for (int b = 0; b < L; ++b) {
        double av = A[(size_t)b * M + m];
        const double* br = B + (size_t)b * N;
        for (int j = 0; j < N; ++j) c[j] += av * br[j];
    }
}

} // namespace

void set_parallel(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

void gemm_nt_ref(int M, int N, int K, const double* A, const double* B, double* C) {
    for (int i = 0; i < M; ++i)
        nt_row(N, K, A + (size_t)i * K, B, C + (size_t)i * N);
}

void gemm_nt(int M, int N, int K, const double* A, const double* B, double* C) {
    if (!parallel_enabled()) { gemm_nt_ref(M, N, K, A, B, C); return; }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < M; ++i)
        nt_row(N, K, A + (size_t)i * K, B, C + (size_t)i * N);
}

void gemm_nn_ref(int M, int N, int K, const double* A, const double* B, double* C) {
    for (int i = 0; i < M; ++i)
        nn_row(N, K, A + (size_t)i * K, B, C + (size_t)i * N);
}

void gemm_nn(int M, int N, int K, const double* A, const double* B, double* C) {
    if (!parallel_enabled()) { gemm_nn_ref(M, N, K, A, B, C); return; }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < M; ++i)
        nn_row(N, K, A + (size_t)i * K, B, C + (size_t)i * N);
}

void gemm_tn_ref(int L, int M, int N, const double* A, const double* B, double* C) {
    for (int m = 0; m < M; ++m)
        tn_row(L, M, N, m, A, B, C + (size_t)m * N);
}

void gemm_tn(int L, int M, int N, const double* A, const double* B, double* C) {
    if (!parallel_enabled()) { gemm_tn_ref(L, M, N, A, B, C); return; }
#pragma omp parallel for schedule(static)
    for (int m = 0; m < M; ++m)
        tn_row(L, M, N, m, A, B, C + (size_t)m * N);
}

} // namespace nn::kernels
