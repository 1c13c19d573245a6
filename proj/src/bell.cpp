// Copyright 2026 The cvbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvbell/bell.hpp"

#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "cvbell/error.hpp"

namespace cvbell {

std::array<double, 8> DisplacementSet::to_array() const {
    return {z1.re, z1.im, z2.re, z2.im, z1p.re, z1p.im, z2p.re, z2p.im};
}

DisplacementSet DisplacementSet::from_array(const std::array<double, 8> &x) {
    return {{x[0], x[1]}, {x[2], x[3]}, {x[4], x[5]}, {x[6], x[7]}};
}

double DisplacementSet::norm() const { return std::sqrt(z1.norm2() + z2.norm2() + z1p.norm2() + z2p.norm2()); }

bool DisplacementSet::finite() const { return z1.finite() && z2.finite() && z1p.finite() && z2p.finite(); }

double bell_chsh(const TwoModeQuasiprob &two, const DisplacementSet &d) {
    if (two.kind != Ordering::Wigner) throw InvalidArgument("bell_chsh: needs a Wigner-kind two-mode function");
    const auto &W = two.eval;
    return kPi * kPi / 4.0 * (W(d.z1, d.z2) + W(d.z1, d.z2p) + W(d.z1p, d.z2) - W(d.z1p, d.z2p));
}

double bell_ch(const TwoModeQuasiprob &two, const DisplacementSet &d) {
    if (two.kind != Ordering::Q) throw InvalidArgument("bell_ch: needs a Q-kind two-mode function");
    const auto &Q = two.eval;
    return kPi * kPi * (Q(d.z1, d.z2) + Q(d.z1, d.z2p) + Q(d.z1p, d.z2) - Q(d.z1p, d.z2p)) -
           kPi * (marginal(two, 1, d.z1) + marginal(two, 2, d.z2));
}

const char *to_string(Functional f) { return f == Functional::Chsh ? "chsh" : "ch"; }

const char *to_string(ChSense s) { return s == ChSense::Magnitude ? "magnitude" : "upper"; }

namespace {

constexpr double kStartHalfWidth = 1.5;
constexpr double kTieTolerance = 1e-9;
constexpr double kInitialStep = 0.2;
constexpr double kRestartStep = 0.05;
constexpr double kSimplexSize = 1e-7;
constexpr double kStallGain = 1e-14;
constexpr int kStallIterations = 500;
constexpr double kPenalty = 1e3;

double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * (index % base);
        index /= base;
    }
    return r;
}

struct LocalResult {
    std::array<double, 8> x{};
    double score = -HUGE_VAL;
    bool converged = false;
};

struct Problem {
    const std::function<double(const DisplacementSet &)> *score;
    double box;
};

double penalty(const std::array<double, 8> &x, double box) {
    double p = 0.0;
    for (int k = 0; k < 8; k += 2) {
        const double excess = std::hypot(x[k], x[k + 1]) - box;
        if (excess > 0.0) p += excess * excess;
    }
    return kPenalty * p;
}

double gsl_objective(const gsl_vector *v, void *params) {
    const auto *pb = static_cast<const Problem *>(params);
    std::array<double, 8> x;
    for (int k = 0; k < 8; ++k) x[k] = gsl_vector_get(v, k);
    const double s = (*pb->score)(DisplacementSet::from_array(x));
    if (!std::isfinite(s)) return HUGE_VAL;
    return -s + penalty(x, pb->box);
}

// One simplex descent; returns false when the iteration cap was hit.
bool descend(const Problem &pb, std::array<double, 8> &x, double &fmin, double step, int max_iter) {
    gsl_multimin_function fn{&gsl_objective, 8, const_cast<Problem *>(&pb)};
    gsl_vector *x0 = gsl_vector_alloc(8);
    gsl_vector *ss = gsl_vector_alloc(8);
    for (int k = 0; k < 8; ++k) gsl_vector_set(x0, k, x[k]);
    gsl_vector_set_all(ss, step);
    gsl_multimin_fminimizer *m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 8);
    gsl_multimin_fminimizer_set(m, &fn, x0, ss);
    bool done = false;
    // A simplex lying along an exactly flat direction never shrinks; stop
    // once the best value has not moved for kStallIterations.
    double best = HUGE_VAL;
    int last_gain = 0;
    for (int it = 0; it < max_iter; ++it) {
        if (gsl_multimin_fminimizer_iterate(m) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), kSimplexSize) == GSL_SUCCESS) {
            done = true;
            break;
        }
        if (m->fval < best - kStallGain) {
            best = m->fval;
            last_gain = it;
        } else if (it - last_gain >= kStallIterations) {
            done = true;
            break;
        }
    }
    for (int k = 0; k < 8; ++k) x[k] = gsl_vector_get(m->x, k);
    fmin = m->fval;
    gsl_multimin_fminimizer_free(m);
    gsl_vector_free(ss);
    gsl_vector_free(x0);
    return done;
}

LocalResult local_search(const Problem &pb, std::array<double, 8> x, const OptimizerOptions &opts) {
    double f1 = 0.0, f2 = 0.0;
    const bool ok1 = descend(pb, x, f1, kInitialStep, opts.max_iterations);
    const bool ok2 = descend(pb, x, f2, kRestartStep, opts.max_iterations);
    LocalResult r;
    r.x = x;
    r.score = -std::min(f1, f2);
    r.converged = ok1 && ok2 && std::isfinite(f2) && (f1 - f2) <= opts.tol && penalty(x, pb.box) == 0.0;
    return r;
}

}  // namespace

std::array<double, 8> start_point(int i, std::uint64_t seed) {
    std::array<double, 8> x{};
    if (i < 0) throw InvalidArgument("start_point: negative index");
    if (i < kSymmetricSeeds) {
        static constexpr double kS[3] = {0.0, 0.25, 0.6};
        static constexpr double kSp[4] = {-0.6, -0.25, 0.25, 0.6};
        const int axis = i / 24;         // 0: real displacements, 1: imaginary
        const int mirrored = (i % 24) / 12;  // z2 = z1 or z2 = -z1
        const int k = i % 12;
        const double s = kS[k / 4], sp = kSp[k % 4];
        const double sign = mirrored ? -1.0 : 1.0;
        x[0 + axis] = s;
        x[2 + axis] = sign * s;
        x[4 + axis] = sp;
        x[6 + axis] = sign * sp;
        return x;
    }
    i -= kSymmetricSeeds;
    if (i < kHaltonStarts) {
        static constexpr int kBases[8] = {2, 3, 5, 7, 11, 13, 17, 19};
        for (int k = 0; k < 8; ++k) x[k] = kStartHalfWidth * (2.0 * halton(i + 1, kBases[k]) - 1.0);
        return x;
    }
    i -= kHaltonStarts;
    std::mt19937_64 rng(seed);
    rng.discard(static_cast<unsigned long long>(i) * 8);
    for (int k = 0; k < 8; ++k) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        x[k] = kStartHalfWidth * (2.0 * u - 1.0);
    }
    return x;
}

BellResult maximize(const std::function<double(const DisplacementSet &)> &score,
                    const std::function<double(const DisplacementSet &)> &value, const OptimizerOptions &opts) {
    if (opts.starts < 1) throw InvalidArgument("optimizer: starts must be >= 1");
    if (!(opts.box > 0.0)) throw InvalidArgument("optimizer: box must be positive");
    const Problem pb{&score, opts.box};
    std::vector<LocalResult> results(static_cast<std::size_t>(opts.starts));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < opts.starts; i = next++) results[i] = local_search(pb, start_point(i, opts.seed), opts);
    };
    const int jobs = std::clamp(opts.jobs, 1, opts.starts);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }

    // Serial reduction in index order.
    int best = -1;
    double best_norm = 0.0;
    BellResult out;
    for (int i = 0; i < opts.starts; ++i) {
        const auto &r = results[i];
        if (r.converged) ++out.converged_starts;
        if (!std::isfinite(r.score) || penalty(r.x, opts.box) > 0.0) continue;
        const double nrm = DisplacementSet::from_array(r.x).norm();
        if (best < 0 || r.score > results[best].score + kTieTolerance ||
            (r.score >= results[best].score - kTieTolerance && nrm < best_norm)) {
            best = i;
            best_norm = nrm;
        }
    }
    out.starts_used = opts.starts;
    if (best < 0) return out;
    out.argmax = DisplacementSet::from_array(results[best].x);
    out.value = value(out.argmax);
    out.converged = results[best].converged;
    return out;
}

BellResult optimize(Functional f, const TwoModeQuasiprob &two, const OptimizerOptions &opts) {
    if (f == Functional::Chsh) {
        if (two.kind != Ordering::Wigner) throw InvalidArgument("optimize: CHSH needs a Wigner-kind state");
        auto value = [&two](const DisplacementSet &d) { return bell_chsh(two, d); };
        auto score = [&two](const DisplacementSet &d) { return std::abs(bell_chsh(two, d)); };
        return maximize(score, value, opts);
    }
    if (two.kind != Ordering::Q) throw InvalidArgument("optimize: CH needs a Q-kind state");
    auto value = [&two](const DisplacementSet &d) { return bell_ch(two, d); };
    if (opts.ch_sense == ChSense::Upper) return maximize(value, value, opts);
    auto score = [&two](const DisplacementSet &d) { return std::abs(bell_ch(two, d)); };
    return maximize(score, value, opts);
}

bool violates(Functional f, double value) {
    // Rounding can push a local optimum a few ulps past the bound.
    constexpr double slack = 1e-9;
    if (f == Functional::Chsh) return std::abs(value) > kChshClassicalBound + slack;
    return value < -1.0 - slack || value > slack;
}

}  // namespace cvbell
