// Serial vs OpenMP kernels on the default 256-200-2 network.
#include <benchmark/benchmark.h>

#include <vector>

#include "genesis/config.hpp"
#include "genesis/kernels.hpp"
#include "genesis/network.hpp"

using namespace genesis;
using fxp::Fixed16;

namespace
{

struct Data
{
    std::size_t n_pre = 256;
    std::size_t n_post = 200;
    std::vector<Synapse<Fixed16>> syn;
    std::vector<std::uint32_t> active;
    std::vector<Fixed16> u;
    std::vector<NeuronState<Fxp16Arith>> post;
    std::vector<fxp::Trace8> pre_tr;

    Data()
            : syn(n_pre * n_post), u(n_post), post(n_post), pre_tr(n_pre)
    {
        Rng rng(1);
        for (auto &s : syn) {
            s.w = Fixed16::from_real(rng.uniform(-0.4, 0.4));
        }
        for (std::uint32_t j = 0; j < n_pre; ++j) {
            if (rng.bernoulli(0.25)) {
                active.push_back(j);
            }
            pre_tr[j] = fxp::Trace8::from_raw(static_cast<std::uint8_t>(rng.below(101)));
        }
        for (auto &x : u) {
            x = Fixed16::from_real(rng.uniform(-0.5, 0.5));
        }
    }
};

template <kernels::Mode M>
void accumulate(benchmark::State &state)
{
    Data d;
    std::vector<Fixed16> sums(d.n_post);
    for (auto _ : state) {
        if constexpr (M == kernels::Mode::serial) {
            kernels::serial::accumulate<Fixed16>(d.syn, d.n_post, d.active, sums);
        } else {
            kernels::parallel::accumulate<Fixed16>(d.syn, d.n_post, d.active, sums);
        }
        benchmark::DoNotOptimize(sums.data());
    }
}

template <kernels::Mode M>
void update_rows(benchmark::State &state)
{
    Data d;
    PlasticityParams<Fixed16> p;
    for (auto _ : state) {
        if constexpr (M == kernels::Mode::serial) {
            kernels::serial::update_rows<Fxp16Arith>(d.syn, d.n_post, d.active, d.u, d.post, p);
        } else {
            kernels::parallel::update_rows<Fxp16Arith>(d.syn, d.n_post, d.active, d.u, d.post, p);
        }
        benchmark::DoNotOptimize(d.syn.data());
    }
}

template <kernels::Mode M>
void consolidate(benchmark::State &state)
{
    Data d;
    PlasticityParams<Fixed16> p;
    for (auto _ : state) {
        if constexpr (M == kernels::Mode::serial) {
            kernels::serial::consolidate<Fxp16Arith>(d.syn, d.n_post, d.pre_tr, d.post, p);
        } else {
            kernels::parallel::consolidate<Fxp16Arith>(d.syn, d.n_post, d.pre_tr, d.post, p);
        }
        benchmark::DoNotOptimize(d.syn.data());
    }
}

template <kernels::Mode M>
void train_sample(benchmark::State &state)
{
    RunConfig c;
    Network<Fxp16Arith> net(c.shape(), c.network_params<Fixed16>(), c.init(), 1, M);
    data::SpikeSample s;
    s.n_inputs = 256;
    s.timesteps = 50;
    s.spikes.resize(256 * 50);
    Rng rng(2);
    for (auto &x : s.spikes) {
        x = rng.bernoulli(0.1) ? 1 : 0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(net.run_sample(s, 1, true).prediction);
    }
}

} // namespace

BENCHMARK(accumulate<kernels::Mode::serial>);
BENCHMARK(accumulate<kernels::Mode::parallel>);
BENCHMARK(update_rows<kernels::Mode::serial>);
BENCHMARK(update_rows<kernels::Mode::parallel>);
BENCHMARK(consolidate<kernels::Mode::serial>);
BENCHMARK(consolidate<kernels::Mode::parallel>);
BENCHMARK(train_sample<kernels::Mode::serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(train_sample<kernels::Mode::parallel>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
