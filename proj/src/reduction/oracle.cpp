#include <mutex>
#include <random>
#include <string>

#include "homcsp/errors.hpp"
#include "homcsp/pipeline.hpp"

namespace homcsp {

std::string to_string(MnPolicy p) {
    switch (p) {
    case MnPolicy::zero: return "zero";
    case MnPolicy::upper_bound: return "upper_bound";
    case MnPolicy::random: return "random";
    }
    return "unknown";
}

std::string to_string(ErrorModel m) {
    switch (m) {
    case ErrorModel::exact: return "exact";
    case ErrorModel::uniform: return "uniform";
    case ErrorModel::adversarial_high: return "adversarial_high";
    case ErrorModel::adversarial_low: return "adversarial_low";
    }
    return "unknown";
}

ExactHomCounter synthetic_hom_counter(MnPolicy policy, std::uint64_t seed) {
    struct Rng {
        std::mutex mutex;
        gmp_randclass gen{gmp_randinit_mt};
    };
    auto rng = std::make_shared<Rng>();
    rng->gen.seed(seed);
    return [policy, rng](const ReductionInstance& inst) {
        const BigCount n_cliques = inst.graph.count_cliques(inst.params.k);
        BigCount m = mc_total(inst.params, n_cliques);
        switch (policy) {
        case MnPolicy::zero: break;
        case MnPolicy::upper_bound: m += cached_mn_upper_bound(inst.params); break;
        case MnPolicy::random: {
            const mpz_class bound = cached_mn_upper_bound(inst.params).raw() + 1;
            std::lock_guard<std::mutex> lock(rng->mutex);
            m += BigCount(rng->gen.get_z_range(bound));
            break;
        }
        }
        return m;
    };
}

struct NoiseSource::State {
    ErrorModel model;
    Rational failure_prob;
    std::mt19937_64 rng;
    std::mutex mutex;
};

NoiseSource::NoiseSource(ErrorModel model, Rational failure_prob, std::uint64_t seed)
    : state_(std::make_shared<State>()) {
    if (failure_prob < 0 || failure_prob > Rational(1, 4))
        throw InvalidInput("failure probability must lie in [0, 1/4]");
    state_->model = model;
    state_->failure_prob = failure_prob;
    state_->rng.seed(seed);
}

OracleResponse NoiseSource::perturb(const BigCount& f, const Rational& delta) {
    if (delta < 0 || delta >= 1) throw InvalidInput("oracle tolerance must satisfy 0 <= delta < 1");
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto& rng = state_->rng;
    // fail when u / 2^64 < failure_prob
    const mpz_class u(std::to_string(rng()), 10);
    mpz_class two64;
    mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
    const Rational& fp = state_->failure_prob;
    if (u * fp.get_den() < fp.get_num() * two64) {
        const bool high = (rng() & 1U) != 0;
        if (f.is_zero()) return {BigCount(1), false};
        return {high ? BigCount(2) * f + BigCount(1) : BigCount(0), false};
    }
    if (state_->model == ErrorModel::exact || delta == 0 || f.is_zero()) return {f, true};
    // delta = p/q; D = q * 2^32; |a| <= p * 2^32 - 1 < delta * D
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, 32);
    const mpz_class denom = delta.get_den() * scale;
    const mpz_class reach = delta.get_num() * scale - 1;
    mpz_class a;
    switch (state_->model) {
    case ErrorModel::adversarial_high: a = reach; break;
    case ErrorModel::adversarial_low: a = -reach; break;
    default: {
        const mpz_class r1(std::to_string(rng()), 10), r2(std::to_string(rng()), 10);
        mpz_class draw = r1 * two64 + r2;
        mpz_class span = 2 * reach + 1;
        a = draw % span - reach;
        break;
    }
    }
    mpz_class shift;
    const mpz_class product = f.raw() * a;
    mpz_tdiv_q(shift.get_mpz_t(), product.get_mpz_t(), denom.get_mpz_t());
    return {BigCount(mpz_class(f.raw() + shift)), true};
}

HomOracle simulated_oracle(ExactHomCounter counter, ErrorModel model, Rational failure_prob, std::uint64_t seed) {
    NoiseSource noise(model, std::move(failure_prob), seed);
    return [counter = std::move(counter), noise](const ReductionInstance& inst, const Rational& delta) mutable {
        return noise.perturb(counter(inst), delta);
    };
}

CliqueOracle simulated_clique_oracle(ErrorModel model, Rational failure_prob, std::uint64_t seed) {
    NoiseSource noise(model, std::move(failure_prob), seed);
    return [noise](const CompressedGraph& g, std::size_t k, const Rational& delta) mutable {
        return noise.perturb(g.count_cliques(k), delta);
    };
}

}  // namespace homcsp
