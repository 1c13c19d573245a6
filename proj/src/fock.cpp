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

#include "cvbell/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <vector>

#include "cvbell/error.hpp"

namespace cvbell::fock {

namespace {

constexpr int kSqueezePadding = 60;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int isqrt_exact(Eigen::Index n) {
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (static_cast<Eigen::Index>(d) * d != n) throw InvalidArgument("FockState: two-mode size is not a square");
    return d;
}

void require_modes(const FockState &s, int modes, const char *who) {
    if (s.modes() != modes)
        throw InvalidArgument(std::string(who) + ": expected a " + (modes == 1 ? "single" : "two") + "-mode state");
}

void guard(PhasePoint z, int cutoff) {
    if (!(z.norm2() < 0.1 * cutoff))
        throw CutoffError("displacement |z|^2 = " + std::to_string(z.norm2()) + " too large for cutoff " +
                          std::to_string(cutoff));
}

Eigen::MatrixXd annihilation(int dim) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Eigen::MatrixXd squeeze_full(double r, int dim) {
    const Eigen::MatrixXd a = annihilation(dim);
    const Eigen::MatrixXd a2 = a * a;
    const Eigen::MatrixXd g = 0.5 * r * (a2 - a2.transpose());
    return g.exp();
}

// Per total-photon-number blocks of the beam-splitter unitary.
struct BsBlocks {
    int dim;
    std::vector<std::vector<int>> index;  // two-mode indices of block N
    std::vector<Eigen::MatrixXd> unitary;

    BsBlocks(double theta, int d) : dim(d) {
        for (int N = 0; N <= 2 * (d - 1); ++N) {
            const int lo = std::max(0, N - (d - 1));
            const int hi = std::min(N, d - 1);
            const int m = hi - lo + 1;
            std::vector<int> idx(m);
            Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, m);
            for (int i = 0; i < m; ++i) {
                const int n = lo + i;  // photons in mode 1
                idx[i] = n * d + (N - n);
                // a^dag b |n, N-n> and b^dag a |n, N-n>
                if (i + 1 < m) g(i + 1, i) += 0.5 * theta * std::sqrt(double(n + 1) * double(N - n));
                if (i > 0) g(i - 1, i) -= 0.5 * theta * std::sqrt(double(n) * double(N - n + 1));
            }
            index.push_back(std::move(idx));
            unitary.push_back(g.exp());
        }
    }

    void apply(Vector &psi) const {
        for (std::size_t b = 0; b < index.size(); ++b) {
            const auto &idx = index[b];
            Vector in(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) in[i] = psi[idx[i]];
            const Vector out = unitary[b].cast<cplx>() * in;
            for (std::size_t i = 0; i < idx.size(); ++i) psi[idx[i]] = out[i];
        }
    }

    Matrix dense() const {
        Matrix u = Matrix::Zero(dim * dim, dim * dim);
        for (std::size_t b = 0; b < index.size(); ++b) {
            const auto &idx = index[b];
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < idx.size(); ++j) u(idx[i], idx[j]) = unitary[b](i, j);
        }
        return u;
    }
};

double click_weight(int n, double epsilon) { return 1.0 - std::pow(1.0 - epsilon, n); }

}  // namespace

FockState::FockState(Matrix rho, int modes) : rho_(std::move(rho)), modes_(modes) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) throw InvalidArgument("FockState: matrix must be square");
    if (modes == 1)
        dim_ = static_cast<int>(rho_.rows());
    else if (modes == 2)
        dim_ = isqrt_exact(rho_.rows());
    else
        throw InvalidArgument("FockState: modes must be 1 or 2");
}

FockState FockState::pure(const Vector &psi, int modes) { return FockState(psi * psi.adjoint(), modes); }

double FockState::trace() const { return rho_.trace().real(); }

double FockState::hermiticity_error() const { return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff(); }

double FockState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double FockState::tail_mass() const {
    const int top = std::max(1, static_cast<int>(std::ceil(0.1 * dim_)));
    const int first = dim_ - top;
    double s = 0.0;
    if (modes_ == 1) {
        for (int n = first; n < dim_; ++n) s += rho_(n, n).real();
        return s;
    }
    for (int n1 = 0; n1 < dim_; ++n1)
        for (int n2 = 0; n2 < dim_; ++n2)
            if (n1 >= first || n2 >= first) s += rho_(n1 * dim_ + n2, n1 * dim_ + n2).real();
    return s;
}

Vector number_state(int n, int dim) {
    if (n < 0 || n >= dim) throw InvalidArgument("number_state: n outside the truncated space");
    Vector v = Vector::Zero(dim);
    v[n] = 1.0;
    return v;
}

Vector coherent(cplx beta, int dim) {
    Vector v(dim);
    cplx c = std::exp(-0.5 * std::norm(beta));
    for (int n = 0; n < dim; ++n) {
        v[n] = c;
        c *= beta / std::sqrt(static_cast<double>(n + 1));
    }
    return v;
}

Vector cat(double alpha, Parity parity, int dim) {
    const double s = parity == Parity::Even ? 1.0 : -1.0;
    Vector v = coherent(alpha, dim) + s * coherent(-alpha, dim);
    return v / v.norm();
}

Matrix squeeze_operator(double r, int dim) {
    return squeeze_full(r, dim + kSqueezePadding).topLeftCorner(dim, dim).cast<cplx>();
}

Vector photon_added_squeezed(double r, int dim) {
    const int big = dim + kSqueezePadding;
    const Eigen::VectorXd sq = squeeze_full(r, big).col(0);
    const Eigen::VectorXd added = annihilation(big).transpose() * sq;
    Vector v = added.head(dim).cast<cplx>();
    return v / v.norm();
}

FockState squeezed_thermal(const GaussianVariances &v, int cutoff) {
    v.validate();
    const int dim = cutoff + 1;
    const int big = dim + kSqueezePadding;
    const double nbar = 0.5 * (std::sqrt(v.A * v.B) - 1.0);
    const double rg = 0.25 * std::log(v.A / v.B);
    Eigen::VectorXd p(big);
    if (nbar <= 0.0) {
        p.setZero();
        p[0] = 1.0;
    } else {
        const double q = nbar / (nbar + 1.0);
        for (int n = 0; n < big; ++n) p[n] = std::pow(q, n) / (nbar + 1.0);
    }
    const Eigen::MatrixXd s = squeeze_full(rg, big);
    const Eigen::MatrixXd rho = s * p.asDiagonal() * s.transpose();
    return FockState(rho.topLeftCorner(dim, dim).cast<cplx>(), 1);
}

namespace {

bool is_pure_model(const StateModel &m) {
    return std::holds_alternative<model::Vacuum>(m.value) || std::holds_alternative<model::Scs>(m.value) ||
           std::holds_alternative<model::PurePsgs>(m.value);
}

FockState build_at(const StateModel &m, int cutoff) {
    const int dim = cutoff + 1;
    return std::visit(
        overloaded{
            [&](const model::Vacuum &) { return FockState::pure(number_state(0, dim), 1); },
            [&](const model::Scs &s) { return FockState::pure(cat(s.alpha, s.parity, dim), 1); },
            [&](const model::PurePsgs &s) {
                const Vector psi = squeeze_operator(s.r, dim) * number_state(1, dim);
                return FockState::pure(psi, 1);
            },
            [&](const model::Gaussian &s) { return squeezed_thermal(s.variances, cutoff); },
            [&](const model::KimConditional &s) {
                return herald(squeezed_thermal(s.variances, cutoff), s.T, 1.0).first;
            },
            [&](const model::LossyPsgs &s) {
                // The lossy family's r stretches the Wigner function along z_r.
                const Vector in = squeeze_operator(-s.r, dim) * number_state(0, dim);
                return herald(FockState::pure(in, 1), s.T, s.epsilon).first;
            },
            [&](const model::DarkMix &s) {
                const Matrix rho = s.pm * build_at(*s.base, cutoff).matrix() +
                                   (1.0 - s.pm) * build_at(*s.reference, cutoff).matrix();
                return FockState(rho, 1);
            },
        },
        m.value);
}

}  // namespace

FockState build_state(const StateModel &m, int cutoff, TailLimits limits) {
    m.validate();
    if (cutoff < 1 || cutoff > kMaxCutoff) throw InvalidArgument("build_state: cutoff must lie in [1, 100]");
    const double limit = is_pure_model(m) ? limits.pure : limits.mixed;
    for (int c = cutoff;; c = std::min(2 * c, kMaxCutoff)) {
        FockState s = build_at(m, c);
        if (s.tail_mass() < limit) return s;
        if (c == kMaxCutoff)
            throw CutoffError("build_state: tail mass " + std::to_string(s.tail_mass()) + " at cutoff " +
                              std::to_string(c) + " for " + m.describe());
    }
}

Matrix beam_splitter(const BeamSplitterConfig &bs, int dim) { return BsBlocks(bs.theta, dim).dense(); }

FockState apply_bs(const FockState &two, double T) {
    return apply_bs(two, BeamSplitterConfig::from_transmittivity(T));
}

FockState apply_bs(const FockState &two, const BeamSplitterConfig &bs) {
    require_modes(two, 2, "apply_bs");
    const Matrix u = beam_splitter(bs, two.dim());
    return FockState(u * two.matrix() * u.adjoint(), 2);
}

FockState tensor(const FockState &a, const FockState &b) {
    require_modes(a, 1, "tensor");
    require_modes(b, 1, "tensor");
    if (a.dim() != b.dim()) throw InvalidArgument("tensor: modes must share the cutoff");
    const int d = a.dim();
    Matrix out(d * d, d * d);
    for (int i1 = 0; i1 < d; ++i1)
        for (int j1 = 0; j1 < d; ++j1)
            out.block(i1 * d, j1 * d, d, d) = a.matrix()(i1, j1) * b.matrix();
    return FockState(std::move(out), 2);
}

FockState partial_trace(const FockState &two, int keep_mode) {
    require_modes(two, 2, "partial_trace");
    if (keep_mode != 1 && keep_mode != 2) throw InvalidArgument("partial_trace: keep_mode must be 1 or 2");
    const int d = two.dim();
    const Matrix &r = two.matrix();
    Matrix out = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                out(i, j) += keep_mode == 1 ? r(i * d + k, j * d + k) : r(k * d + i, k * d + j);
    return FockState(std::move(out), 1);
}

std::pair<FockState, double> condition_click(const FockState &two, double epsilon) {
    require_modes(two, 2, "condition_click");
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InvalidArgument("condition_click: epsilon must lie in (0, 1]");
    const int d = two.dim();
    const Matrix &r = two.matrix();
    Matrix out = Matrix::Zero(d, d);
    for (int k = 1; k < d; ++k) {
        const double w = click_weight(k, epsilon);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out(i, j) += w * r(i * d + k, j * d + k);
    }
    const double prob = out.trace().real();
    if (!(prob >= 1e-14)) throw ZeroProbabilityError("condition_click: click probability below 1e-14");
    return {FockState(out / prob, 1), prob};
}

std::pair<FockState, double> herald(const FockState &single, double T, double epsilon) {
    require_modes(single, 1, "herald");
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InvalidArgument("herald: epsilon must lie in (0, 1]");
    const int d = single.dim();
    const BsBlocks bs(BeamSplitterConfig::from_transmittivity(T).theta, d);
    Eigen::SelfAdjointEigenSolver<Matrix> es(single.matrix());
    Matrix out = Matrix::Zero(d, d);
    for (int e = 0; e < d; ++e) {
        const double p = es.eigenvalues()[e];
        if (p <= 1e-18) continue;
        Vector psi = Vector::Zero(d * d);
        for (int n = 0; n < d; ++n) psi[n * d] = es.eigenvectors()(n, e);
        bs.apply(psi);
        for (int k = 1; k < d; ++k) {
            Vector phi(d);
            for (int n = 0; n < d; ++n) phi[n] = psi[n * d + k];
            out += (p * click_weight(k, epsilon)) * phi * phi.adjoint();
        }
    }
    const double prob = out.trace().real();
    if (!(prob >= 1e-14)) throw ZeroProbabilityError("herald: click probability below 1e-14");
    return {FockState(out / prob, 1), prob};
}

FockState split_5050(const FockState &single) {
    require_modes(single, 1, "split_5050");
    // theta = -pi/2 sends |b, 0> to |b/sqrt2, +b/sqrt2>, i.e.
    // |n, 0> -> sum_k 2^{-n/2} sqrt(C(n, k)) |k, n - k>. Applied to the
    // eigenvectors of rho; the dense beam splitter gives the same state.
    const int d = single.dim();
    Eigen::MatrixXd amp = Eigen::MatrixXd::Zero(d, d);  // amp(n, k)
    for (int n = 0; n < d; ++n)
        for (int k = 0; k <= n; ++k)
            amp(n, k) = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) -
                                 0.5 * n * std::log(2.0));
    Eigen::SelfAdjointEigenSolver<Matrix> es(single.matrix());
    Matrix rho = Matrix::Zero(d * d, d * d);
    for (int e = 0; e < d; ++e) {
        const double w = es.eigenvalues()(e);
        if (std::abs(w) < 1e-18) continue;
        const Vector &v = es.eigenvectors().col(e);
        Vector out = Vector::Zero(d * d);
        for (int n = 0; n < d; ++n)
            for (int k = 0; k <= n; ++k) out(k * d + (n - k)) += amp(n, k) * v(n);
        rho.noalias() += w * out * out.adjoint();
    }
    return FockState(std::move(rho), 2);
}

Matrix displacement(cplx alpha, int dim) {
    Matrix d(dim, dim);
    const double x = std::norm(alpha);
    const double mag = std::abs(alpha);
    const double phase = std::arg(alpha);
    const double damp = std::exp(-0.5 * x);
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            const int lo = std::min(m, n);
            const int k = std::abs(m - n);
            double v = damp * std::assoc_laguerre(static_cast<unsigned>(lo), static_cast<unsigned>(k), x);
            if (k > 0) {
                if (mag == 0.0) {
                    d(m, n) = 0.0;
                    continue;
                }
                v *= std::exp(0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + k + 1.0)) + k * std::log(mag));
            }
            // m >= n: alpha^{m-n}; m < n: (-alpha*)^{n-m}.
            const double ph = m >= n ? k * phase : k * (kPi - phase);
            d(m, n) = cplx(v * std::cos(ph), v * std::sin(ph));
        }
    }
    return d;
}

double displaced_parity(const FockState &single, PhasePoint z) {
    require_modes(single, 1, "displaced_parity");
    guard(z, single.cutoff());
    const int d = single.dim();
    const Matrix D = displacement(2.0 * z.complex(), d);
    cplx s = 0.0;
    for (int j = 0; j < d; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        for (int k = 0; k < d; ++k) s += sign * single.matrix()(j, k) * D(k, j);
    }
    return s.real();
}

double displaced_vacuum_overlap(const FockState &single, PhasePoint z) {
    require_modes(single, 1, "displaced_vacuum_overlap");
    guard(z, single.cutoff());
    const Vector c = coherent(z.complex(), single.dim());
    return (c.adjoint() * single.matrix() * c)(0, 0).real();
}

double displaced_parity(const FockState &two, PhasePoint z1, PhasePoint z2) {
    require_modes(two, 2, "displaced_parity");
    guard(z1, two.cutoff());
    guard(z2, two.cutoff());
    const int d = two.dim();
    Matrix m1 = displacement(2.0 * z1.complex(), d);
    Matrix m2 = displacement(2.0 * z2.complex(), d);
    for (int j = 1; j < d; j += 2) {
        m1.col(j) *= -1.0;
        m2.col(j) *= -1.0;
    }
    // Tr[rho (M1 x M2)] = sum rho_{(j1 j2),(k1 k2)} M1_{k1 j1} M2_{k2 j2}
    const Matrix &r = two.matrix();
    cplx s = 0.0;
    for (int j1 = 0; j1 < d; ++j1)
        for (int k1 = 0; k1 < d; ++k1) {
            const cplx a = m1(k1, j1);
            cplx inner = 0.0;
            for (int j2 = 0; j2 < d; ++j2)
                for (int k2 = 0; k2 < d; ++k2) inner += r(j1 * d + j2, k1 * d + k2) * m2(k2, j2);
            s += a * inner;
        }
    return s.real();
}

double displaced_vacuum_overlap(const FockState &two, PhasePoint z1, PhasePoint z2) {
    require_modes(two, 2, "displaced_vacuum_overlap");
    guard(z1, two.cutoff());
    guard(z2, two.cutoff());
    const int d = two.dim();
    const Vector c1 = coherent(z1.complex(), d);
    const Vector c2 = coherent(z2.complex(), d);
    Vector c(d * d);
    for (int i = 0; i < d; ++i) c.segment(i * d, d) = c1[i] * c2;
    return (c.adjoint() * two.matrix() * c)(0, 0).real();
}

cplx characteristic(const FockState &single, PhasePoint eta) {
    require_modes(single, 1, "characteristic");
    const Matrix D = displacement(eta.complex(), single.dim());
    return (single.matrix() * D).trace();
}

double quasiprob(const FockState &s, Ordering j, PhasePoint z) {
    return j == Ordering::Wigner ? wigner(s, z) : husimi(s, z);
}

}  // namespace cvbell::fock
