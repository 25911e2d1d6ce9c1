#include "lsemid/verify.hpp"

#include <sstream>

#include "lsemid/errors.hpp"
#include "lsemid/rng.hpp"

namespace lsemid {

ParameterSample sample_params(const MixedGraph& g, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    ParameterSample s;
    s.seed = rng_seed;
    for (const auto& e : g.directed) s.lambda_values[e] = random_small_nonzero(rng);
    for (const auto& e : g.bidirected) s.omega_values[e] = random_small_nonzero(rng);
    // strict diagonal dominance forces positive definiteness
    for (int v = 1; v <= g.p; ++v) {
        Rational row_sum = 0;
        for (const auto& [a, b] : g.bidirected)
            if (a == v || b == v) row_sum += abs(s.omega_values.at({a, b}));
        s.omega_values[{v, v}] = row_sum + random_small_positive(rng);
    }
    return s;
}

RationalMatrix omega_matrix(const MixedGraph& g, const ParameterSample& sample) {
    RationalMatrix m(g.p + 1, std::vector<Rational>(g.p + 1, Rational(0)));
    for (const auto& [e, val] : sample.omega_values) {
        m[e.first][e.second] = val;
        m[e.second][e.first] = val;
    }
    return m;
}

RationalMatrix covariance_exact(const MixedGraph& g, const ParameterSample& sample) {
    const int p = g.p;
    // M = (I - Lambda)^{-1} as the exact nilpotent series
    RationalMatrix lambda(p + 1, std::vector<Rational>(p + 1, Rational(0)));
    for (const auto& [e, val] : sample.lambda_values) lambda[e.first][e.second] = val;
    RationalMatrix m(p + 1, std::vector<Rational>(p + 1, Rational(0)));
    RationalMatrix power = m;
    for (int v = 1; v <= p; ++v) m[v][v] = power[v][v] = 1;
    for (int k = 1; k < p; ++k) {
        RationalMatrix next(p + 1, std::vector<Rational>(p + 1, Rational(0)));
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= p; ++j)
                for (const auto& [e, val] : sample.lambda_values)
                    if (e.second == j && power[i][e.first] != 0)
                        next[i][j] += power[i][e.first] * val;
        power = std::move(next);
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= p; ++j) m[i][j] += power[i][j];
    }
    const RationalMatrix omega = omega_matrix(g, sample);
    RationalMatrix om(p + 1, std::vector<Rational>(p + 1, Rational(0)));  // Omega * M
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            for (int k = 1; k <= p; ++k)
                if (omega[i][k] != 0 && m[k][j] != 0) om[i][j] += omega[i][k] * m[k][j];
    RationalMatrix sigma(p + 1, std::vector<Rational>(p + 1, Rational(0)));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            for (int k = 1; k <= p; ++k)
                if (m[k][i] != 0 && om[k][j] != 0) sigma[i][j] += m[k][i] * om[k][j];
    return sigma;
}

bool is_positive_definite(const RationalMatrix& m) {
    const int p = static_cast<int>(m.size()) - 1;
    RationalMatrix a = m;
    for (int k = 1; k <= p; ++k) {
        if (a[k][k] <= 0) return false;
        for (int i = k + 1; i <= p; ++i) {
            if (a[i][k] == 0) continue;
            const Rational factor = a[i][k] / a[k][k];
            for (int j = k; j <= p; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    return true;
}

std::vector<Rational> full_assignment(const VariableTable& t, const ParameterSample& sample,
                                      const RationalMatrix& sigma) {
    std::vector<Rational> values(t.size(), Rational(0));
    for (int id = 0; id < t.size(); ++id) {
        const VarInfo& vi = t.info(id);
        switch (vi.kind) {
            case VarKind::Lambda: values[id] = sample.lambda_values.at({vi.u, vi.v}); break;
            case VarKind::Omega: values[id] = sample.omega_values.at({vi.u, vi.v}); break;
            case VarKind::Sigma: values[id] = sigma[vi.u][vi.v]; break;
            case VarKind::Hom: values[id] = 1; break;
            case VarKind::Generic: break;
        }
    }
    return values;
}

VerificationResult check_formulas(const MixedGraph& g, const IdentificationReport& report,
                                  int trials, std::uint64_t rng_seed) {
    VerificationResult out;
    out.trials = trials;
    const VariableTable& t = *report.table;
    for (int trial = 0; trial < trials; ++trial) {
        int zero_streak = 0;
        std::uint64_t attempt = 0;
        for (;;) {
            const std::uint64_t seed = rng_seed + 7919ull * trial + 1000099ull * attempt;
            const ParameterSample sample = sample_params(g, seed);
            const RationalMatrix sigma = covariance_exact(g, sample);
            std::vector<Rational> values(t.size(), Rational(0));
            for (int id : t.sigma_ids()) values[id] = sigma[t.info(id).u][t.info(id).v];
            if (t.h_id() >= 0) values[t.h_id()] = 1;

            bool zero_denominator = false;
            for (int var : report.identification_order) {
                const ParamResult* pr = report.find(var);
                if (!pr || !pr->formula) continue;
                const Rational den = pr->formula->denominator.evaluate(values);
                if (den == 0) {
                    zero_denominator = true;
                    if (++zero_streak >= 5)
                        throw PersistentZeroDenominator(
                            "denominator of " + t.name(var) +
                            " vanished in 5 consecutive resamples; the formula is invalid");
                    break;
                }
                const Rational val = pr->formula->numerator.evaluate(values) / den;
                const VarInfo& vi = t.info(var);
                const Rational truth = vi.kind == VarKind::Lambda
                                           ? sample.lambda_values.at({vi.u, vi.v})
                                           : sample.omega_values.at({vi.u, vi.v});
                if (val != truth) {
                    std::ostringstream msg;
                    msg << t.name(var) << " recovered as " << val.get_str() << " but sampled as "
                        << truth.get_str() << " (trial " << trial << ", seed " << seed << ")";
                    out.counterexample = msg.str();
                    out.passed = false;
                    return out;
                }
                values[var] = val;  // later formulas may reference it
            }
            if (!zero_denominator) break;
            ++attempt;
        }
    }
    out.passed = true;
    return out;
}

}  // namespace lsemid
