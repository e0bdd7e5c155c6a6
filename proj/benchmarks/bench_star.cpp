#include "shuffly/psi.hpp"
#include "shuffly/specialize.hpp"

#include <benchmark/benchmark.h>

using namespace shuffly;

namespace {

shuffle_element word_image(const dynkin_diagram& d, std::vector<std::pair<int, int>> letters) {
    return psi_word(d, generator_word{std::move(letters)});
}

void BM_star_coset(benchmark::State& state) {
    dynkin_diagram d("00");
    shuffle_element a = word_image(d, {{1, 0}, {1, 1}});
    shuffle_element b = word_image(d, {{1, 2}, {1, 0}});
    for (auto _ : state) benchmark::DoNotOptimize(star(a, b));
}

void BM_star_naive(benchmark::State& state) {
    dynkin_diagram d("00");
    shuffle_element a = word_image(d, {{1, 0}, {1, 1}});
    shuffle_element b = word_image(d, {{1, 2}, {1, 0}});
    for (auto _ : state) benchmark::DoNotOptimize(star_naive(a, b));
}

void BM_phi(benchmark::State& state) {
    dynkin_diagram d("001");
    shuffle_element f = word_image(d, {{1, 1}, {2, 0}, {2, 1}, {1, 0}});
    degree_vector dd;
    dd.set({1, 2}, 2);
    for (auto _ : state) benchmark::DoNotOptimize(phi(f, dd));
}

void BM_divide_exact(benchmark::State& state) {
    dynkin_diagram d("00");
    shuffle_element f = word_image(d, {{1, 0}, {1, 1}, {1, 2}});
    poly den = poly::var(variable::x(1, 1)) - poly::var(variable::x(1, 2));
    poly num = f.numerator() * den;
    for (auto _ : state) benchmark::DoNotOptimize(divide_exact(num, den));
}

} // namespace

BENCHMARK(BM_star_coset);
BENCHMARK(BM_star_naive);
BENCHMARK(BM_phi);
BENCHMARK(BM_divide_exact);
BENCHMARK_MAIN();
