import numpy as np
import pytest

from rosenlab.background import (
    AngleProfile, BackgroundParams, GeometryError, MetricField, assemble_gb,
    background_bundle, check_signature, christoffel_numeric, det33,
    gauge_correction_F, gauge_source_Hb, inv33, ricci_gb, ricci_numeric,
    ricci_qq_leading, _cart_to_polar_tensor,
)
from rosenlab.grids import PolarGrid, null_components

RNG = np.random.default_rng(42)


def generic_params(n=32, amp_b=0.02, amp_j=0.01):
    b = AngleProfile.from_function(
        lambda th: amp_b * (-1.0 + 0.4 * np.cos(th) + 0.3 * np.sin(2 * th)), n)
    J = AngleProfile.from_function(
        lambda th: amp_j * (1.0 + 0.5 * np.sin(th) - 0.2 * np.cos(3 * th)), n)
    return BackgroundParams(b, J)


class TestAngleProfile:
    def test_samples_fourier_consistency(self):
        p = generic_params().b
        back = np.fft.irfft(p.fourier, p.n)
        assert np.max(np.abs(back - p.samples)) < 1e-12

    def test_eval_matches_samples(self):
        p = generic_params().b
        assert np.max(np.abs(p.eval(p.theta) - p.samples)) < 1e-12

    def test_spectral_derivative(self):
        p = AngleProfile.from_function(lambda th: np.sin(3 * th) + 0.2 * np.cos(th), 64)
        d = p.derivative()
        exact = 3 * np.cos(3 * p.theta) - 0.2 * np.sin(p.theta)
        assert np.max(np.abs(d.samples - exact)) < 1e-10

    def test_text_round_trip_bit_exact(self):
        p = AngleProfile(RNG.normal(size=32))
        p2 = AngleProfile.from_text(p.to_text())
        assert np.array_equal(p.samples, p2.samples)

    def test_fourier_round_trip_bit_exact(self):
        p = AngleProfile(RNG.normal(size=32))
        p2 = AngleProfile.from_fourier_bytes(p.to_fourier_bytes())
        assert np.max(np.abs(p.samples - p2.samples)) < 1e-15
        assert np.array_equal(p.fourier, p2.fourier)

    def test_moments(self):
        p = AngleProfile.from_function(lambda th: 0.5 + 2 * np.cos(th) - np.sin(th), 64)
        assert abs(p.moment("1") - np.pi * 2 * 0.5) < 1e-12
        assert abs(p.moment("cos") - 2 * np.pi) < 1e-12
        assert abs(p.moment("sin") + np.pi) < 1e-12

    def test_projection_removes_low_modes(self):
        p = generic_params().b
        pp = p.project_out_low_modes()
        assert abs(pp.moment("1")) < 1e-12
        assert abs(pp.moment("cos")) < 1e-12
        assert abs(pp.moment("sin")) < 1e-12


class TestAssemble:
    def test_trivial_is_minkowski_cartesian(self):
        g = assemble_gb(BackgroundParams.trivial(), 2.0, PolarGrid(1.0, 5.0, 16, 8))
        assert np.allclose(g.components, np.diag([-1.0, 1, 1]), atol=0)

    def test_trivial_is_minkowski_polar(self):
        grid = PolarGrid(1.0, 5.0, 16, 8)
        g = assemble_gb(BackgroundParams.trivial(), 2.0, grid, chart="polar")
        r, _ = grid.mesh()
        assert np.allclose(g.components[..., 2, 2], r ** 2)

    def test_q_below_one_is_minkowski(self):
        # at t=10, radii up to 10.9 have q < 1: corrections vanish identically
        grid = PolarGrid(1.0, 10.9, 32, 16)
        g = assemble_gb(generic_params(), 10.0, grid)
        assert np.max(np.abs(g.components - np.diag([-1.0, 1, 1]))) == 0.0

    def test_angular_radius_direct_substitution(self):
        # b = 0.01, J = 0, q = 3 at r = 100: g_thth = (100 + 0.03)^2
        grid = PolarGrid(100.0, 101.0, 8, 8)
        params = BackgroundParams(AngleProfile.constant(0.01), AngleProfile.zero())
        g = assemble_gb(params, 97.0, grid, chart="polar")
        assert abs(g.components[0, 0, 2, 2] - 100.03 ** 2) < 1e-9

    def test_degenerate_radius_raises_with_location(self):
        params = BackgroundParams(AngleProfile.constant(-1.2), AngleProfile.zero())
        grid = PolarGrid(1.0, 200.0, 64, 8)
        with pytest.raises(GeometryError) as err:
            assemble_gb(params, 0.0, grid)
        assert "r=" in str(err.value)

    def test_chart_covariance(self):
        # polar and cartesian views related by the exact Jacobian
        grid = PolarGrid(5.0, 20.0, 32, 16)
        params = generic_params()
        gc = assemble_gb(params, 3.0, grid).components
        gp = assemble_gb(params, 3.0, grid, chart="polar").components
        gp_from_c = _cart_to_polar_tensor(gc, grid)
        assert np.max(np.abs(gp_from_c - gp)) < 1e-11


class TestRicci:
    def test_trivial_ricci_zero(self):
        grid = PolarGrid(1.0, 5.0, 16, 8)
        Rqq, Rqth, R = ricci_gb(BackgroundParams.trivial(), 1.0, grid)
        assert np.max(np.abs(R)) == 0.0

    def test_support_property(self):
        # closed forms vanish identically off the band 1 <= q <= 2
        grid = PolarGrid(2.0, 42.0, 200, 16)
        t = 8.0
        Rqq, Rqth, _ = ricci_gb(generic_params(), t, grid)
        q = grid.r - t
        outside = (q < 0.99) | (q > 2.01)
        assert np.max(np.abs(Rqq[outside, :])) < 1e-15
        assert np.max(np.abs(Rqth[outside, :])) < 1e-15
        inside = (q > 1.2) & (q < 1.8)
        assert np.max(np.abs(Rqq[inside, :])) > 1e-7

    def test_leading_term_dominates(self):
        grid = PolarGrid(30.0, 80.0, 256, 32)
        t = 29.5
        params = generic_params()
        Rqq, _, _ = ricci_gb(params, t, grid)
        lead = ricci_qq_leading(params, t, grid)
        band = (grid.r - t > 1.0) & (grid.r - t < 2.0)
        num = np.max(np.abs((Rqq - lead)[band, :]))
        den = np.max(np.abs(lead[band, :]))
        assert num < 0.1 * den  # remainder is O(1/r^2) vs O(1/r)

    def test_closed_vs_numeric_ricci_converges(self):
        params = generic_params()
        t = 3.0
        errs = []
        for n_r, n_th in ((128, 16), (256, 32)):
            grid = PolarGrid(2.0, 8.0, n_r, n_th)
            Rqq, Rqth, Rpol = ricci_gb(params, t, grid, chart="polar")

            def assemble(tk):
                return assemble_gb(params, tk, grid, chart="polar").components

            Rnum = ricci_numeric(assemble, grid, t, dt=0.5 * grid.h_r)
            interior = (slice(3, -3), slice(None))
            errs.append(np.max(np.abs((Rpol - Rnum)[interior])))
        order = np.log2(errs[0] / errs[1])
        assert order > 1.9, (errs, order)

    def test_all_other_null_components_vanish(self):
        # the only nonzero null-frame entries of the polar Ricci are qq and q-theta
        grid = PolarGrid(4.0, 10.0, 64, 16)
        t = 3.5
        Rqq, Rqth, Rpol = ricci_gb(generic_params(), t, grid, chart="polar")
        # s-s, s-theta and theta-theta contractions: e_s = (d_t + d_r)/2
        Rss = 0.25 * (Rpol[..., 0, 0] + 2 * Rpol[..., 0, 1] + Rpol[..., 1, 1])
        Rsth = 0.5 * (Rpol[..., 0, 2] + Rpol[..., 1, 2])
        Rthth = Rpol[..., 2, 2]
        scale = max(np.max(np.abs(Rqq)), 1e-30)
        assert np.max(np.abs(Rss)) < 1e-8 * scale
        assert np.max(np.abs(Rsth)) < 1e-8 * scale
        assert np.max(np.abs(Rthth)) < 1e-8 * scale


class TestGaugeSource:
    def test_trivial_hbar_cartesian_zero(self):
        grid = PolarGrid(1.0, 5.0, 16, 8)
        gt = MetricField(grid, np.zeros(grid.shape + (3, 3)), "cartesian", 1.0)
        H, F = gauge_source_Hb(BackgroundParams.trivial(), gt, 1.0, grid)
        assert np.max(np.abs(H)) == 0.0 and np.max(np.abs(F)) == 0.0

    def test_trivial_hbar_polar(self):
        grid = PolarGrid(1.0, 5.0, 16, 8)
        bundle = background_bundle(BackgroundParams.trivial(), 1.0, grid, ("hbar_pol",))
        r, _ = grid.mesh()
        assert np.max(np.abs(bundle["hbar_pol"][..., 1] + 1.0 / r)) < 1e-14

    def test_hbar_vs_fd_christoffels(self):
        params = generic_params()
        t = 3.0
        errs = []
        for n_r, n_th in ((128, 16), (256, 32)):
            grid = PolarGrid(2.0, 8.0, n_r, n_th)
            bundle = background_bundle(params, t, grid, ("hbar_pol",))
            slices = [assemble_gb(params, t + k * 0.5 * grid.h_r, grid, "polar").components
                      for k in range(-2, 3)]
            Gam, gi, g, _ = christoffel_numeric(slices, grid, 0.5 * grid.h_r)
            Hnum = np.einsum("...lb,...alb->...a", gi, Gam)
            interior = (slice(3, -3), slice(None))
            errs.append(np.max(np.abs((bundle["hbar_pol"] - Hnum)[interior])))
        assert np.log2(errs[0] / errs[1]) > 1.9

    def test_F_zero_for_zero_perturbation(self):
        grid = PolarGrid(2.0, 8.0, 32, 16)
        gt = MetricField(grid, np.zeros(grid.shape + (3, 3)), "cartesian", 3.0)
        F = gauge_correction_F(generic_params(), gt, 3.0, grid)
        assert np.max(np.abs(F)) == 0.0

    def test_F_linearity_exact(self):
        grid = PolarGrid(2.0, 8.0, 32, 16)
        params = generic_params()
        comp = RNG.normal(size=grid.shape + (3, 3)) * 1e-3
        comp = 0.5 * (comp + np.swapaxes(comp, -1, -2))
        gt = MetricField(grid, comp, "cartesian", 3.0)
        gt2 = MetricField(grid, 2.0 * comp, "cartesian", 3.0)  # power of two: exact
        F1 = gauge_correction_F(params, gt, 3.0, grid)
        F2 = gauge_correction_F(params, gt2, 3.0, grid)
        assert np.array_equal(F2, 2.0 * F1)

    def test_F_vanishes_for_constant_profiles(self):
        grid = PolarGrid(2.0, 8.0, 32, 16)
        params = BackgroundParams(AngleProfile.constant(0.01), AngleProfile.constant(0.02))
        comp = RNG.normal(size=grid.shape + (3, 3)) * 1e-3
        comp = 0.5 * (comp + np.swapaxes(comp, -1, -2))
        gt = MetricField(grid, comp, "cartesian", 3.0)
        F = gauge_correction_F(params, gt, 3.0, grid)
        assert np.max(np.abs(F)) < 1e-16

    def test_linear_expansion_vs_brute_force(self):
        # W[gt] := linear-in-gt terms of H(g_b + gt) - Hbar with the derivative
        # on the background.  Brute force: directional derivative of the full
        # contraction minus the d(gt) part, all by finite differences.
        params = generic_params()
        t = 3.0
        grid = PolarGrid(2.0, 8.0, 192, 32)
        r, th = grid.mesh()
        # smooth compact perturbation (cartesian components)
        bump = np.exp(-((r - 5.0) / 1.2) ** 2) * (1 + 0.3 * np.cos(th))
        comp = np.zeros(grid.shape + (3, 3))
        comp[..., 0, 0] = 0.7 * bump
        comp[..., 1, 1] = -0.4 * bump
        comp[..., 0, 2] = comp[..., 2, 0] = 0.5 * bump
        comp[..., 1, 2] = comp[..., 2, 1] = -0.2 * bump
        gt = MetricField(grid, comp, "cartesian", t)
        gt_pol = _cart_to_polar_tensor(comp, grid)

        # production path: full W (not the frozen difference)
        from rosenlab.background import _profile_args, pack_sym, _polar_to_cart_vector
        from rosenlab._gbsym import eval_bundle

        rr, tth, q, chi_vals, b_vals, j_vals = _profile_args(params, t, grid)
        gpol = pack_sym(eval_bundle("gpol", t, rr, tth, chi_vals, b_vals, j_vals), grid.shape)
        gam_vals = eval_bundle("gamma_pol", t, rr, tth, chi_vals, b_vals, j_vals)
        Gam = np.zeros(grid.shape + (3, 3, 3))
        for a in range(3):
            Gam[..., a, :, :] = pack_sym(gam_vals[6 * a:6 * (a + 1)], grid.shape)
        dg_vals = eval_bundle("dgpol", t, rr, tth, chi_vals, b_vals, j_vals)
        dgb = np.zeros(grid.shape + (3, 3, 3))
        for c in range(3):
            dgb[..., c, :, :] = pack_sym(dg_vals[6 * c:6 * (c + 1)], grid.shape)
        gi = inv33(gpol)
        dgi = -np.einsum("...lm,...mn,...nb->...lb", gi, gt_pol, gi)
        W = (np.einsum("...lb,...alb->...a", dgi, Gam)
             + 0.5 * (np.einsum("...lb,...ar,...lrb->...a", gi, dgi, dgb)
                      + np.einsum("...lb,...ar,...brl->...a", gi, dgi, dgb)
                      - np.einsum("...lb,...ar,...rlb->...a", gi, dgi, dgb)))

        # brute force: dH[gt] by centered difference of FD-Christoffel contractions
        def H_of(eps):
            dt = 0.5 * grid.h_r
            slices = [assemble_gb(params, t + k * dt, grid, "polar").components
                      + eps * gt_pol for k in range(-2, 3)]
            Gm, gin, _, _ = christoffel_numeric(slices, grid, dt)
            return np.einsum("...lb,...alb->...a", gin, Gm)

        eps = 1e-4
        dH = (H_of(eps) - H_of(-eps)) / (2 * eps)
        # the d(gt) part: (1/2) g^{ar} g^{lb} (d_l gt_rb + d_b gt_rl - d_r gt_lb)
        from rosenlab.grids import d_r, d_theta
        dgt = np.zeros(grid.shape + (3, 3, 3))
        for i in range(3):
            for j in range(3):
                dgt[..., 1, i, j] = d_r(gt_pol[..., i, j], grid)
                dgt[..., 2, i, j] = d_theta(gt_pol[..., i, j], grid)
        V = 0.5 * (np.einsum("...ar,...lb,...lrb->...a", gi, gi, dgt)
                   + np.einsum("...ar,...lb,...brl->...a", gi, gi, dgt)
                   - np.einsum("...ar,...lb,...rlb->...a", gi, gi, dgt))
        interior = (slice(3, -3), slice(None))
        err = np.max(np.abs((dH - V - W)[interior]))
        scale = np.max(np.abs(W)) + 1e-12
        assert err < 5e-3 * scale + 1e-9, (err, scale)


class TestSignature:
    def test_minkowski_margin_one(self):
        grid = PolarGrid(1.0, 5.0, 16, 8)
        rep = check_signature(MetricField.minkowski(grid))
        assert rep.ok and abs(rep.margin - 1.0) < 1e-14

    def test_background_ok(self):
        grid = PolarGrid(1.0, 50.0, 64, 16)
        params = BackgroundParams(AngleProfile.constant(0.1), AngleProfile.zero())
        rep = check_signature(assemble_gb(params, 0.0, grid))
        assert rep.ok

    def test_degenerate_point_flagged(self):
        grid = PolarGrid(1.0, 5.0, 16, 8)
        g = MetricField.minkowski(grid)
        g.components[3, 4] = np.diag([-1.0, 1.0, 0.0])  # degenerate spatial block
        rep = check_signature(g)
        assert not rep.ok
        assert rep.n_violations >= 1
        assert abs(rep.worst_point[0] - grid.r[3]) < 1e-12


class TestInv33:
    def test_matches_numpy(self):
        m = RNG.normal(size=(40, 3, 3)) + 4 * np.eye(3)
        assert np.max(np.abs(inv33(m) - np.linalg.inv(m))) < 1e-10

    def test_det(self):
        m = RNG.normal(size=(40, 3, 3)) + 4 * np.eye(3)
        assert np.max(np.abs(det33(m) - np.linalg.det(m))) < 1e-10


@pytest.mark.slow
def test_generated_kernels_match_live_sympy_build():
    """The frozen kernels agree with a fresh symbolic derivation."""
    from rosenlab._gbsym import lambdify_bundle, eval_bundle

    rng = np.random.default_rng(1)
    t = 2.3
    r = rng.uniform(3.0, 9.0, size=7)
    th = rng.uniform(0.0, 2 * np.pi, size=7)
    chi_vals = [rng.normal(size=7) for _ in range(5)]
    b_vals = [0.01 * rng.normal(size=7) for _ in range(4)]
    j_vals = [0.01 * rng.normal(size=7) for _ in range(4)]
    for name in ("gpol", "gamma_pol", "hbar_pol", "ricci_pol",
                 "gcart", "dgcart", "ddgcart", "hbar_cart", "dhbar_cart", "ricci_cart"):
        live = lambdify_bundle(name)(t, r, th, *chi_vals, *b_vals, *j_vals)
        frozen = eval_bundle(name, t, r, th, chi_vals, b_vals, j_vals)
        for a, b in zip(live, frozen):
            a = np.broadcast_to(np.asarray(a, float), (7,))
            b = np.broadcast_to(np.asarray(b, float), (7,))
            assert np.max(np.abs(a - b)) < 1e-9 * max(1.0, np.max(np.abs(a)))
