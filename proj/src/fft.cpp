#include "zhl/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace zhl {
namespace {

// FFTW plan creation is not thread safe; executions on distinct buffers are.
// Plans are created once per (shape, direction) against an owned scratch
// buffer and executed in place on it.
std::mutex g_plan_mutex;

struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t size = 0;
};

std::map<std::tuple<int, int, int>, PlanEntry>& plan_cache() {
    static std::map<std::tuple<int, int, int>, PlanEntry> cache;
    return cache;
}

PlanEntry& get_plan(int n0, int n1, int sign) {
    auto key = std::make_tuple(n0, n1, sign);
    auto& cache = plan_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    PlanEntry e;
    e.size = static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1 > 0 ? n1 : 1);
    e.buf = fftw_alloc_complex(e.size);
    if (!e.buf) throw std::runtime_error("fftw_alloc_complex failed");
    if (n1 > 0)
        e.plan = fftw_plan_dft_2d(n0, n1, e.buf, e.buf, sign, FFTW_ESTIMATE);
    else
        e.plan = fftw_plan_dft_1d(n0, e.buf, e.buf, sign, FFTW_ESTIMATE);
    if (!e.plan) throw std::runtime_error("fftw plan creation failed");
    return cache.emplace(key, e).first->second;
}

void run(std::vector<cplx>& data, int n0, int n1, int sign) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    PlanEntry& e = get_plan(n0, n1, sign);
    if (data.size() != e.size) throw std::invalid_argument("fft: size mismatch");
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    for (std::size_t i = 0; i < e.size; ++i) {
        e.buf[i][0] = raw[i][0];
        e.buf[i][1] = raw[i][1];
    }
    fftw_execute(e.plan);
    for (std::size_t i = 0; i < e.size; ++i) {
        raw[i][0] = e.buf[i][0];
        raw[i][1] = e.buf[i][1];
    }
}

}  // namespace

void fft_forward(std::vector<cplx>& data) { run(data, static_cast<int>(data.size()), 0, FFTW_FORWARD); }
void fft_backward(std::vector<cplx>& data) { run(data, static_cast<int>(data.size()), 0, FFTW_BACKWARD); }
void fft2_forward(std::vector<cplx>& data, int n0, int n1) { run(data, n0, n1, FFTW_FORWARD); }
void fft2_backward(std::vector<cplx>& data, int n0, int n1) { run(data, n0, n1, FFTW_BACKWARD); }

}  // namespace zhl
