#include <cmath>

#include "doctest.h"
#include "mimcool/model.hpp"
#include "support.hpp"

using namespace mim;

TEST_CASE("drive envelope starts at zero and hits 2iE/Delta at half period") {
    const SystemParams p = testsup::fig2_params();
    CHECK(std::abs(drive_envelope(p, 1, 0.0)) == 0.0);
    const double t_half = M_PI / p.delta1;
    const Complex want = 2.0 * kI * p.E1 / p.delta1;
    CHECK(std::abs(drive_envelope(p, 1, t_half) - want) <
          1e-12 * std::abs(want));
}

TEST_CASE("drive envelope stays inside the 2E/|Delta| disc") {
    const SystemParams p = testsup::fig2_params();
    const double bound = 2.0 * p.E2 / std::abs(p.delta2);
    for (int k = 0; k <= 500; ++k) {
        const double t = 0.013 * k;
        CHECK(std::abs(drive_envelope(p, 2, t)) <= bound * (1.0 + 1e-12));
    }
}

TEST_CASE("drive envelope period average equals iE/Delta") {
    const SystemParams p = testsup::fig2_params();
    const double T = 2.0 * M_PI / p.delta1;
    const int n = 4000;
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k)
        acc += drive_envelope(p, 1, (k + 0.5) * T / n);
    acc /= static_cast<double>(n);
    const Complex want = kI * p.E1 / p.delta1;
    CHECK(std::abs(acc - want) < 1e-6 * std::abs(want));
}

TEST_CASE("drive envelope equals the integral of E_j e^{i Delta_j t}") {
    // Simpson quadrature of the defining integrand, dE/dt = E_j e^{i Delta t}.
    SystemParams p = testsup::fig2_params();
    p.E1 = 1e7;
    p.delta1 = 100.0;
    const double t = 0.005;
    const int n = 2000;
    const double h = t / n;
    Complex acc = 0.0;
    auto f = [&](double s) { return p.E1 * std::exp(kI * p.delta1 * s); };
    acc += f(0.0) + f(t);
    for (int k = 1; k < n; ++k) acc += (k % 2 ? 4.0 : 2.0) * f(k * h);
    acc *= h / 3.0;
    const Complex direct = drive_envelope(p, 1, t);
    CHECK(std::abs(direct - acc) < 1e-9 * std::abs(direct));
}

TEST_CASE("undriven drift matrix is the constant damping diagonal") {
    SystemParams p = testsup::cooling_params(100.0, 0.0, 0.0, 2.0);
    for (double t : {0.0, 0.37, 5.0}) {
        const Mat6 M = drift_matrix(p, t);
        using namespace mode;
        CHECK(M(a1, a1) == Complex(-p.kappa1));
        CHECK(M(a1d, a1d) == Complex(-p.kappa1));
        CHECK(M(b, b) == Complex(-p.gamma_m));
        CHECK(M(bd, bd) == Complex(-p.gamma_m));
        CHECK(M(a2, a2) == Complex(-p.kappa2));
        CHECK(M(a2d, a2d) == Complex(-p.kappa2));
        double off = 0.0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (i != j) off = std::max(off, std::abs(M(i, j)));
        CHECK(off == 0.0);
    }
}

TEST_CASE("at t=0 only tunneling and damping survive") {
    const SystemParams p = testsup::fig2_params();
    const Mat6 M = drift_matrix(p, 0.0);
    using namespace mode;
    CHECK(std::abs(M(a1, a2) - (-kI * p.J)) < 1e-15);
    CHECK(std::abs(M(a2, a1) - (-kI * p.J)) < 1e-15);
    CHECK(std::abs(M(a1d, a2d) - (kI * p.J)) < 1e-15);
    CHECK(std::abs(M(a1, b)) == 0.0);
    CHECK(std::abs(M(a1, bd)) == 0.0);
    CHECK(std::abs(M(b, a1)) == 0.0);
    CHECK(std::abs(M(b, a2)) == 0.0);
    CHECK(std::abs(M(a2, b)) == 0.0);
}

TEST_CASE("drift matrix preserves the adjoint pairing of the mode order") {
    const SystemParams p = testsup::fig2_params();
    for (double t : {0.11, 1.7, 9.3}) {
        const Mat6 M = drift_matrix(p, t);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                const Complex mirror =
                    std::conj(M(mode::conj_index(i), mode::conj_index(j)));
                CHECK(std::abs(M(i, j) - mirror) < 1e-14 * (1.0 + std::abs(M(i, j))));
            }
    }
}

TEST_CASE("drive vector vanishes at t=0 and pairs conjugates") {
    const SystemParams p = testsup::fig2_params();
    CHECK(drive_vector(p, 0.0).norm() == 0.0);
    const Vec6 l = drive_vector(p, 1.37);
    using namespace mode;
    CHECK(std::abs(l(a1d) - std::conj(l(a1))) < 1e-14 * (1.0 + std::abs(l(a1))));
    CHECK(std::abs(l(bd) - std::conj(l(b))) < 1e-14 * (1.0 + std::abs(l(b))));
    CHECK(std::abs(l(a2d) - std::conj(l(a2))) < 1e-14 * (1.0 + std::abs(l(a2))));
}

TEST_CASE("equal drives at equal detunings give no mechanical drive") {
    SystemParams p = testsup::fig2_params();
    p.delta1 = p.delta2 = 50.0;
    p.E1 = p.E2 = 3e6;
    for (double t : {0.2, 0.9, 4.4})
        CHECK(std::abs(drive_vector(p, t)(mode::b)) < 1e-20);
}

TEST_CASE("drive vector matches term-by-term evaluation") {
    const SystemParams p = testsup::fig2_params();
    const double t = 0.83;
    const Complex e1 = drive_envelope(p, 1, t);
    const Complex e2 = drive_envelope(p, 2, t);
    const Complex Jf =
        -kI * p.J * std::exp(-kI * (p.delta2 - p.delta1) * t);
    const Vec6 l = drive_vector(p, t);
    using namespace mode;
    const Complex w1 = Jf * e2 - p.kappa1 * e1;
    const Complex wm = kI * p.gm * std::exp(kI * p.omega_m * t) *
                       (std::norm(e1) - std::norm(e2));
    const Complex w2 = -std::conj(Jf) * e1 - p.kappa2 * e2;
    CHECK(std::abs(l(a1) - w1) < 1e-12 * (1.0 + std::abs(w1)));
    CHECK(std::abs(l(b) - wm) < 1e-12 * (1.0 + std::abs(wm)));
    CHECK(std::abs(l(a2) - w2) < 1e-12 * (1.0 + std::abs(w2)));
}

TEST_CASE("diffusion matrix holds exactly four nonzero entries") {
    const SystemParams p = testsup::cooling_params(100.0, 1.0, 1.0, 1.5);
    const Mat6 D = diffusion_matrix(p);
    using namespace mode;
    CHECK(D(a1, a1d) == Complex(2.0 * p.kappa1));
    CHECK(D(b, bd) == Complex(2.0 * p.gamma_m * (p.n_th + 1.0)));
    CHECK(D(bd, b) == Complex(2.0 * p.gamma_m * p.n_th));
    CHECK(D(a2, a2d) == Complex(2.0 * p.kappa2));
    int nonzero = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (D(i, j) != Complex(0.0)) ++nonzero;
    CHECK(nonzero == 4);
}

TEST_CASE("initial moments encode vacuum cavities and a thermal membrane") {
    SystemParams p = testsup::cooling_params(100.0, 1.0, 1.0, 1.5);
    using namespace mode;
    SUBCASE("thermal") {
        const Mat6 S = initial_moments(p);
        CHECK(S(b, bd) == Complex(101.0));
        CHECK(S(bd, b) == Complex(100.0));
    }
    SUBCASE("mechanical vacuum") {
        p.n_th = 0.0;
        const Mat6 S = initial_moments(p);
        CHECK(S(b, bd) == Complex(1.0));
        CHECK(S(bd, b) == Complex(0.0));
    }
    const Mat6 S = initial_moments(p);
    CHECK(S(a1, a1d) - S(a1d, a1) == Complex(1.0));
    CHECK(S(b, bd) - S(bd, b) == Complex(1.0));
    CHECK(S(a2, a2d) - S(a2d, a2) == Complex(1.0));
}

TEST_CASE("omega_max picks the fastest coefficient frequency") {
    SystemParams p = testsup::fig2_params();
    CHECK(omega_max(p) == 55.0);
    p.delta1 = -120.0;
    CHECK(omega_max(p) == 175.0);  // |delta2 - delta1|
    CHECK(default_max_step(p) == doctest::Approx(2.0 * M_PI / 175.0 / 20.0));
}

TEST_CASE("sample grid covers an endpoint off the regular spacing") {
    const auto g = sample_grid(1.0, 0.3);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g[3] == doctest::Approx(0.9));
    CHECK(g.back() == 1.0);
    const auto h = sample_grid(1.0, 0.25);
    REQUIRE(h.size() == 5);
    CHECK(h.back() == 1.0);
}
