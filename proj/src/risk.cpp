#include "steinlab/risk.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "steinlab/rng.hpp"

namespace steinlab {

namespace {

constexpr long kChunk = 4096;

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("STEINLAB_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

struct ChunkSums {
    // per estimator: sum(loss), sum(loss^2), sum(sure), sum(sure^2)
    std::vector<double> loss, loss2, sure, sure2;
    // per estimator: sum(loss - sure), sum((loss - sure)^2)
    std::vector<double> gsum, gsum2;
    // vs estimator 0: sum(diff), sum(diff^2)
    std::vector<double> dsum, dsum2;

    void init(std::size_t ne) {
        loss.assign(ne, 0.0);
        loss2.assign(ne, 0.0);
        sure.assign(ne, 0.0);
        sure2.assign(ne, 0.0);
        gsum.assign(ne, 0.0);
        gsum2.assign(ne, 0.0);
        dsum.assign(ne, 0.0);
        dsum2.assign(ne, 0.0);
    }
};

}  // namespace

RiskComparison mc_risk_compare(const std::vector<const ShrinkageEstimator*>& ests,
                               double mu_norm, long n, std::uint64_t seed,
                               int threads) {
    if (ests.empty()) throw std::invalid_argument("mc_risk_compare: no estimators");
    if (n < 1000) throw std::invalid_argument("mc_risk_compare: n >= 1000 required");
    const int d = ests[0]->dim();
    for (const auto* e : ests)
        if (e->dim() != d)
            throw std::invalid_argument("mc_risk_compare: dimension mismatch");
    const std::size_t ne = ests.size();

    const long nchunks = (n + kChunk - 1) / kChunk;
    std::vector<ChunkSums> partial(nchunks);

    auto run_chunk = [&](long ci) {
        ChunkSums s;
        s.init(ne);
        std::vector<double> z(d);
        const long begin = ci * kChunk;
        const long end = std::min(n, begin + kChunk);
        for (long i = begin; i < end; ++i) {
            rng::CounterRng r(seed, static_cast<std::uint64_t>(i));
            r.fill_normal(z);
            double w = 0.0;
            {
                const double x0 = mu_norm + z[0];
                w = x0 * x0;
                for (int j = 1; j < d; ++j) w += z[j] * z[j];
            }
            double loss0 = 0.0;
            for (std::size_t e = 0; e < ne; ++e) {
                const double mult = ests[e]->multiplier(w);
                // loss = |mult*x - mu|^2 with x = mu + z, mu on axis 0
                const double x0 = mu_norm + z[0];
                double loss = (mult * x0 - mu_norm) * (mult * x0 - mu_norm);
                for (int j = 1; j < d; ++j) loss += mult * z[j] * mult * z[j];
                const double sure = ests[e]->sure(w);
                s.loss[e] += loss;
                s.loss2[e] += loss * loss;
                s.sure[e] += sure;
                s.sure2[e] += sure * sure;
                const double gap = loss - sure;
                s.gsum[e] += gap;
                s.gsum2[e] += gap * gap;
                if (e == 0) {
                    loss0 = loss;
                } else {
                    const double diff = loss - loss0;
                    s.dsum[e] += diff;
                    s.dsum2[e] += diff * diff;
                }
            }
        }
        partial[ci] = std::move(s);
    };

    const int nthreads = resolve_threads(threads);
    if (nthreads <= 1) {
        for (long ci = 0; ci < nchunks; ++ci) run_chunk(ci);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long> next{0};
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (long ci = next.fetch_add(1); ci < nchunks; ci = next.fetch_add(1))
                    run_chunk(ci);
            });
        for (auto& th : pool) th.join();
    }

    // fixed reduction order: chunk index
    ChunkSums total;
    total.init(ne);
    for (long ci = 0; ci < nchunks; ++ci) {
        for (std::size_t e = 0; e < ne; ++e) {
            total.loss[e] += partial[ci].loss[e];
            total.loss2[e] += partial[ci].loss2[e];
            total.sure[e] += partial[ci].sure[e];
            total.sure2[e] += partial[ci].sure2[e];
            total.gsum[e] += partial[ci].gsum[e];
            total.gsum2[e] += partial[ci].gsum2[e];
            total.dsum[e] += partial[ci].dsum[e];
            total.dsum2[e] += partial[ci].dsum2[e];
        }
    }

    auto se_of = [&](double sum, double sumsq) {
        const double var = (sumsq - sum * sum / n) / (n - 1.0);
        return std::sqrt(std::max(var, 0.0) / n);
    };

    RiskComparison out;
    out.points.resize(ne);
    out.diff.assign(ne, 0.0);
    out.diff_se.assign(ne, 0.0);
    for (std::size_t e = 0; e < ne; ++e) {
        RiskPoint& pt = out.points[e];
        pt.mu_norm = mu_norm;
        pt.n = n;
        pt.seed = seed;
        pt.risk = total.loss[e] / n;
        pt.se = se_of(total.loss[e], total.loss2[e]);
        pt.mean_sure = total.sure[e] / n;
        pt.sure_se = se_of(total.sure[e], total.sure2[e]);
        pt.gap = total.gsum[e] / n;
        pt.gap_se = se_of(total.gsum[e], total.gsum2[e]);
        if (e > 0) {
            out.diff[e] = total.dsum[e] / n;
            out.diff_se[e] = se_of(total.dsum[e], total.dsum2[e]);
        }
    }
    return out;
}

RiskPoint mc_risk(const ShrinkageEstimator& est, double mu_norm, long n,
                  std::uint64_t seed, int threads) {
    return mc_risk_compare({&est}, mu_norm, n, seed, threads).points[0];
}

}  // namespace steinlab
