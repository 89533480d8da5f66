import math

import numpy as np
import pytest

from softdeco import (
    CutoffSet,
    DecoherenceReport,
    FourVector,
    InterferometerGeometry,
    IRDivergenceError,
    PhotonMomentum,
    QuadratureSpec,
    angular_integral,
    atanh_over_x,
    closed_forms,
    decoherence_report,
    delta_current,
    divergence_coefficient,
    gamma_cross_term,
    gamma_dressed,
    gamma_full,
    gamma_hard,
    gamma_kernel,
    gamma_sub,
    gamma_variant,
)
from softdeco.numerics import E2_ELECTRON

FAST = QuadratureSpec(n_theta=16, n_phi=32)


def test_cutoffs_validation():
    CutoffSet(omega_uv=1.0)
    with pytest.raises(ValueError):
        CutoffSet(omega_uv=1.0, lambda_ir=-0.1)
    with pytest.raises(ValueError):
        CutoffSet(omega_uv=1.0, lambda_ir=2.0)
    with pytest.raises(ValueError):
        CutoffSet(omega_uv=1.0, beta=0.0)


def test_kernel_nonnegative_and_transverse():
    rng = np.random.default_rng(3)
    for _ in range(100):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        q = PhotonMomentum(float(10.0 ** rng.uniform(-2, 1)), n)
        comps = rng.normal(size=4) + 1j * rng.normal(size=4)
        dj = FourVector(*comps)
        val = gamma_kernel(dj, q)
        assert val >= 0.0
        # adding any multiple of q (gauge shift) leaves the kernel unchanged
        c = complex(rng.normal(), rng.normal())
        shifted = dj + c * q.four_vector()
        assert gamma_kernel(shifted, q) == pytest.approx(val, rel=1e-10, abs=1e-12)


def test_angular_integral_vs_closed_form():
    for v in (0.05, 0.2, 0.5, 0.8):
        g = InterferometerGeometry(v, 1.0)
        got = angular_integral(g).value
        x12 = 1.0 / (1.0 - v * v)
        v12 = math.sqrt(1.0 - 1.0 / x12**2)
        want = 8.0 * math.pi * (atanh_over_x(v12) - 1.0)
        assert got == pytest.approx(want, rel=1e-8)


def test_angular_integral_small_v_limit():
    v = 1e-3
    g = InterferometerGeometry(v, 1.0)
    got = angular_integral(g).value
    assert got == pytest.approx((16.0 * math.pi / 3.0) * v * v, rel=1e-5)


def test_angular_kernel_consistency():
    # the vectorized bracket equals the transverse-kernel bilinear of the
    # exact current difference with the phases stripped (dipole, omega^2
    # scaled out), checked at scattered directions
    from softdeco.decoherence import angular_bracket

    g = InterferometerGeometry(0.4, 1.0)
    f = angular_bracket(g)
    rng = np.random.default_rng(11)
    for _ in range(20):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        omega = 0.7
        q = PhotonMomentum(omega, n)
        qv = q.four_vector()
        B = g.Xdot_1 / qv.dot(g.Xdot_1) - g.Xdot_2 / qv.dot(g.Xdot_2)
        want = omega**2 * gamma_kernel(B, q)
        got = float(f(*(np.asarray([c]) for c in n))[0])
        assert got == pytest.approx(want, rel=1e-10)


def test_dressed_vs_closed_form():
    for l, tau, uv in ((0.01, 1.0, 50.0), (0.3, 2.0, 20.0), (1.0, 100.0, 10.0)):
        g = InterferometerGeometry(l, tau)
        cut = CutoffSet(omega_uv=uv)
        got = gamma_dressed(g, cut).value
        want = closed_forms(g, cut).dressed
        assert got == pytest.approx(want, rel=1e-6)


def test_sub_and_hard_vs_closed_form():
    g = InterferometerGeometry(0.3, 2.0)
    cut = CutoffSet(omega_uv=20.0)
    cf = closed_forms(g, cut)
    assert gamma_sub(g, cut).value == pytest.approx(cf.sub, rel=1e-8)
    assert gamma_hard(g, cut).value == pytest.approx(cf.hard, rel=1e-8)


def test_cross_term_completeness():
    # dressed = sub + hard + interference, term by term from the same engine
    g = InterferometerGeometry(0.2, 3.0)
    cut = CutoffSet(omega_uv=15.0)
    d = gamma_dressed(g, cut).value
    s = gamma_sub(g, cut).value
    h = gamma_hard(g, cut).value
    x = gamma_cross_term(g, cut).value
    assert s + h + x == pytest.approx(d, rel=1e-8)


def test_dressing_is_decoupling():
    # the dressed value is literally the generic engine with the divergent
    # piece removed from the parts set; no separate formula is involved
    g = InterferometerGeometry(0.2, 3.0)
    cut = CutoffSet(omega_uv=15.0)
    a = gamma_dressed(g, cut).value
    b = gamma_variant(g, cut, parts=("sub", "hard"), lo=0.0).value
    assert a == b


def test_full_requires_ir_cutoff():
    g = InterferometerGeometry(0.2, 3.0)
    cut = CutoffSet(omega_uv=15.0, lambda_ir=0.0)
    with pytest.raises(IRDivergenceError):
        gamma_full(g, cut)
    # but a motionless particle decoheres nothing, cutoff or not
    g0 = InterferometerGeometry(0.0, 3.0)
    assert gamma_full(g0, cut).value == 0.0


def test_full_with_cutoff_and_ln2_increment():
    g = InterferometerGeometry(0.2, 3.0)
    e2 = E2_ELECTRON
    ang = closed_forms(g, CutoffSet(omega_uv=15.0), e2).angular_exact
    b_want = e2 * ang / (32.0 * math.pi**3)
    lam = 1e-5
    g1 = gamma_full(g, CutoffSet(omega_uv=15.0, lambda_ir=lam)).value
    g2 = gamma_full(g, CutoffSet(omega_uv=15.0, lambda_ir=lam / 2.0)).value
    assert g2 - g1 == pytest.approx(b_want * math.log(2.0), rel=1e-6)


def test_divergence_fit_full():
    g = InterferometerGeometry(0.2, 3.0)
    cut = CutoffSet(omega_uv=15.0, lambda_ir=1e-4)
    fit = divergence_coefficient(g, cut, variant="full")
    e2 = E2_ELECTRON
    want = e2 * closed_forms(g, cut, e2).angular_exact / (32.0 * math.pi**3)
    assert fit.ok
    assert fit.coefficient == pytest.approx(want, rel=1e-3)


def test_divergence_fit_dressed_is_flat():
    g = InterferometerGeometry(0.2, 3.0)
    cut = CutoffSet(omega_uv=15.0, lambda_ir=1e-4)
    fit = divergence_coefficient(g, cut, variant="dressed")
    bound = 1e-4 * E2_ELECTRON * g.v**2
    assert abs(fit.coefficient) <= bound
    with pytest.raises(ValueError):
        divergence_coefficient(g, CutoffSet(omega_uv=15.0), variant="full")
    with pytest.raises(ValueError):
        divergence_coefficient(g, cut, variant="nope")


def test_finite_temperature_monotone_and_zero_limit():
    g = InterferometerGeometry(0.2, 3.0)
    vals = []
    for beta in (5.0, 50.0, 500.0):
        vals.append(gamma_dressed(g, CutoffSet(omega_uv=15.0, beta=beta)).value)
    assert vals[0] >= vals[1] >= vals[2]
    cold = gamma_dressed(g, CutoffSet(omega_uv=15.0, beta=1e7)).value
    zero = gamma_dressed(g, CutoffSet(omega_uv=15.0)).value
    assert cold == pytest.approx(zero, rel=1e-6)
    assert vals[0] > zero


def test_nonnegativity_random_configurations():
    rng = np.random.default_rng(19)
    for _ in range(60):
        tau = float(10.0 ** rng.uniform(-1, 2))
        l = float(rng.uniform(0.0, 0.9)) * tau
        uv = float(10.0 ** rng.uniform(-1, 2))
        g = InterferometerGeometry(l, tau)
        cut = CutoffSet(omega_uv=uv)
        for fn in (gamma_dressed, gamma_sub, gamma_hard):
            assert fn(g, cut, FAST).value >= -1e-15


def test_report_assembly():
    g = InterferometerGeometry(0.2, 3.0)
    cut = CutoffSet(omega_uv=15.0, lambda_ir=1e-4)
    rep = decoherence_report(g, cut)
    assert rep.gamma_full is not None and rep.gamma_full > 0
    assert set(rep.errors) == {
        "gamma_full",
        "gamma_dressed",
        "gamma_sub",
        "gamma_hard",
    }
    assert rep.converged
    rep0 = decoherence_report(g, CutoffSet(omega_uv=15.0))
    assert rep0.gamma_full is None


def test_report_rejects_negative_values():
    g = InterferometerGeometry(0.2, 3.0)
    cf = closed_forms(g, CutoffSet(omega_uv=15.0))
    with pytest.raises(ValueError):
        DecoherenceReport(
            gamma_full=None,
            gamma_dressed=-1.0,
            gamma_sub=0.0,
            gamma_hard=0.0,
            closed=cf,
        )


def test_kernel_route_matches_scalar_route():
    # the production frequency x angular factorization must agree with a
    # direct double integral of the transverse kernel of the dressed dipole
    # current difference, built vector by vector
    from softdeco import delta_current_parts
    from softdeco.numerics import freq_integrate, sphere_integrate

    g = InterferometerGeometry(0.2, 1.0)
    cut = CutoffSet(omega_uv=2.0)
    spec = QuadratureSpec(n_theta=8, n_phi=16)

    def outer(nx, ny, nz):
        out = np.empty_like(nx)
        for i in range(len(nx)):
            n = (nx[i], ny[i], nz[i])

            def inner(omega):
                vals = np.empty_like(omega)
                for k, om in enumerate(omega):
                    q = PhotonMomentum(float(om), n)
                    parts = delta_current_parts(g, q)
                    dj = parts.j_sub + parts.j_hard
                    # measure: Int d^3q/(2 omega (2 pi)^3) -> one omega per
                    # unit solid angle after the 1/4 prefactor
                    vals[k] = om * gamma_kernel(dj, q)
                return vals

            out[i] = freq_integrate(inner, 0.0, cut.omega_uv, g.tau, spec).value
        return out

    direct = sphere_integrate(outer, spec).value * E2_ELECTRON / (
        4.0 * (2.0 * math.pi) ** 3
    )
    engine = gamma_dressed(g, cut, spec).value
    assert direct == pytest.approx(engine, rel=1e-6)
