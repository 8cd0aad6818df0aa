#include "jetlab/count.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>

namespace jetlab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

struct CompiledFactor {
    int var;
    std::uint32_t exp;
};

struct CompiledTerm {
    std::uint64_t coeff;
    std::vector<CompiledFactor> factors;
};

using CompiledPoly = std::vector<CompiledTerm>;

/// Generators flattened to variable indices and residue coefficients.
std::vector<CompiledPoly> compile_generators(const std::vector<Polynomial>& gens,
                                             const std::vector<JetVariable>& vars,
                                             std::uint64_t q) {
    if (!is_prime_u64(q)) fail(ErrorCode::InvalidSpec, "q must be prime");
    std::map<VarKey, int> index;
    for (std::size_t i = 0; i < vars.size(); ++i)
        index.emplace(vars[i].key(), static_cast<int>(i));
    if (index.size() != vars.size())
        fail(ErrorCode::InvalidSpec, "repeated variable in the enumeration list");

    std::vector<CompiledPoly> out;
    for (const Polynomial& g : gens) {
        if (!g.field().is_prime_field() || g.field().prime() != q)
            fail(ErrorCode::FieldMismatch, "generators must live over F_q");
        CompiledPoly cp;
        for (const Term& t : g.terms()) {
            CompiledTerm ct;
            ct.coeff = std::get<std::uint64_t>(t.coeff);
            for (const auto& [key, exp] : t.mono.entries()) {
                auto it = index.find(key);
                if (it == index.end())
                    fail(ErrorCode::UnboundVariable,
                         "generator variable " + var_name(key) + " is not enumerated");
                ct.factors.push_back({it->second, exp});
            }
            cp.push_back(std::move(ct));
        }
        out.push_back(std::move(cp));
    }
    return out;
}

bool all_vanish(const std::vector<CompiledPoly>& gens,
                const std::vector<std::uint64_t>& point, std::uint64_t q) {
    for (const CompiledPoly& g : gens) {
        std::uint64_t acc = 0;
        for (const CompiledTerm& t : g) {
            std::uint64_t v = t.coeff;
            for (const CompiledFactor& f : t.factors) {
                std::uint64_t base = point[f.var];
                for (std::uint32_t e = 0; e < f.exp && v != 0; ++e)
                    v = mulmod(v, base, q);
                if (v == 0) break;
            }
            acc += v;
            if (acc >= q) acc -= q;
        }
        if (acc != 0) return false;
    }
    return true;
}

/// Exact count over the odometer index range [begin, end).
std::uint64_t count_range(const std::vector<CompiledPoly>& gens, std::size_t nvars,
                          std::uint64_t q, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> point(nvars, 0);
    std::uint64_t idx = begin;
    for (std::size_t i = 0; i < nvars; ++i) {
        point[i] = idx % q;
        idx /= q;
    }
    std::uint64_t hits = 0;
    for (std::uint64_t at = begin; at < end; ++at) {
        if (all_vanish(gens, point, q)) ++hits;
        std::size_t i = 0;
        while (i < nvars && ++point[i] == q) point[i++] = 0;
    }
    return hits;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t sample_range(const std::vector<CompiledPoly>& gens, std::size_t nvars,
                           std::uint64_t q, std::uint64_t samples,
                           std::uint64_t stream_seed) {
    std::mt19937_64 rng(stream_seed);
    std::vector<std::uint64_t> point(nvars);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < nvars; ++i) point[i] = rng() % q;
        if (all_vanish(gens, point, q)) ++hits;
    }
    return hits;
}

/// z with P(|N(0,1)| <= z) = confidence, by Newton iteration on erf.
double normal_quantile(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0))
        fail(ErrorCode::InvalidSpec, "confidence must lie in (0, 1)");
    double z = 1.0;
    for (int it = 0; it < 100; ++it) {
        double f = std::erf(z / std::sqrt(2.0)) - confidence;
        if (std::abs(f) < 1e-14) break;
        double deriv = std::sqrt(2.0 / M_PI) * std::exp(-z * z / 2.0);
        z -= f / deriv;
    }
    return z;
}

std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e, std::uint64_t limit,
                          const char* what) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / q) fail(ErrorCode::TooLarge, what);
        r *= q;
    }
    return r;
}

int check_workers(int workers) {
    if (workers < 1) fail(ErrorCode::InvalidSpec, "worker count must be positive");
    return workers;
}

std::uint64_t enumerate_exact(const std::vector<Polynomial>& gens,
                              const std::vector<JetVariable>& vars, std::uint64_t q,
                              int workers, std::uint64_t cap) {
    auto compiled = compile_generators(gens, vars, q);
    std::uint64_t total =
        checked_pow(q, vars.size(), cap, "enumeration size exceeds the cap");

    check_workers(workers);
    std::uint64_t w = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1));
    std::vector<std::uint64_t> partial(w, 0);
    std::vector<std::thread> pool;
    for (std::uint64_t i = 0; i < w; ++i) {
        std::uint64_t begin = total / w * i + std::min(total % w, i);
        std::uint64_t end = total / w * (i + 1) + std::min(total % w, i + 1);
        pool.emplace_back([&, i, begin, end] {
            partial[i] = count_range(compiled, vars.size(), q, begin, end);
        });
    }
    for (auto& t : pool) t.join();
    std::uint64_t hits = 0;
    for (std::uint64_t h : partial) hits += h;
    return hits;
}

} // namespace

PointCountReport exhaustive_count(const std::vector<Polynomial>& gens,
                                  const std::vector<JetVariable>& vars, std::uint64_t q,
                                  int workers, std::uint64_t cap) {
    std::uint64_t hits = enumerate_exact(gens, vars, q, workers, cap);
    return {q, static_cast<int>(vars.size()), static_cast<double>(hits), std::nullopt};
}

PointCountReport monte_carlo_count(const std::vector<Polynomial>& gens,
                                   const std::vector<JetVariable>& vars, std::uint64_t q,
                                   std::uint64_t samples, double confidence,
                                   std::uint64_t seed, int workers) {
    auto compiled = compile_generators(gens, vars, q);
    if (samples < 1) fail(ErrorCode::InvalidSpec, "need at least one sample");
    double z = normal_quantile(confidence);
    check_workers(workers);

    std::uint64_t state = seed;
    std::uint64_t w = std::min<std::uint64_t>(workers, samples);
    std::vector<std::uint64_t> stream(w), partial(w, 0);
    for (auto& s : stream) s = splitmix64(state);

    std::vector<std::thread> pool;
    for (std::uint64_t i = 0; i < w; ++i) {
        std::uint64_t share = samples / w + (i < samples % w ? 1 : 0);
        pool.emplace_back([&, i, share] {
            partial[i] = sample_range(compiled, vars.size(), q, share, stream[i]);
        });
    }
    for (auto& t : pool) t.join();
    std::uint64_t hits = 0;
    for (std::uint64_t h : partial) hits += h;

    double space = std::pow(static_cast<double>(q), static_cast<double>(vars.size()));
    double phat = static_cast<double>(hits) / static_cast<double>(samples);
    double half = z * space * std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples));
    MonteCarloInfo info{samples, hits, confidence, half, seed, workers};
    return {q, static_cast<int>(vars.size()), space * phat, info};
}

DimEstimate dim_estimate(const std::vector<PointCountReport>& reports) {
    std::vector<double> xs, ys;
    for (const PointCountReport& r : reports) {
        if (r.count <= 0.0)
            fail(ErrorCode::Undefined, "zero count makes the log fit undefined");
        xs.push_back(std::log(static_cast<double>(r.q)));
        ys.push_back(std::log(r.count));
    }
    std::vector<double> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2)
        fail(ErrorCode::InvalidSpec, "dimension fit needs counts at two or more primes");

    double n = static_cast<double>(xs.size());
    double xbar = 0, ybar = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= n;
    ybar /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    double slope = sxy / sxx;
    double intercept = ybar - slope * xbar;
    double rss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (intercept + slope * xs[i]);
        rss += e * e;
    }
    return {slope, std::sqrt(rss / n)};
}

OriginFiberCountReport origin_fiber_count_check(const DeterminantalSpec& spec, int m,
                                                int d, std::uint64_t q, int workers,
                                                std::uint64_t cap) {
    if (d != spec.rank_bound + 1)
        fail(ErrorCode::InvalidSpec, "generator degree must be the rank bound plus one");
    if (m < d) fail(ErrorCode::OrderTooSmall, "fiber product structure needs m >= d");
    CoefficientField field = CoefficientField::prime_field(q);

    JetIdealPresentation pres = jet_ideal_generators(spec, m, field);
    RankPoint origin = RankPoint::standard(field, spec.rows, spec.cols, 0);
    FiberPresentation fiber = fiber_ideal_over_point(pres, origin);
    std::vector<JetVariable> fiber_vars;
    for (const JetVariable& v : variable_universe(spec.rows, spec.cols, m))
        if (v.order >= 1) fiber_vars.push_back(v);
    std::uint64_t left = enumerate_exact(fiber.generators, fiber_vars, q, workers, cap);

    JetIdealPresentation lower = jet_ideal_generators(spec, m - d, field);
    std::uint64_t jets =
        enumerate_exact(lower.generators, lower.variables, q, workers, cap);

    std::uint64_t n = static_cast<std::uint64_t>(spec.rows) * spec.cols;
    std::uint64_t factor = checked_pow(q, n * (d - 1), UINT64_MAX / (jets ? jets : 1),
                                       "product side overflows");
    std::uint64_t right = jets * factor;
    return {q, left, jets, factor, right, left == right};
}

} // namespace jetlab
