from fractions import Fraction

import pytest

from twistr import linalg, qrep
from twistr.liealg import eps, family_spec, inner, wscale
from twistr.scalars import QSample

from conftest import seed_rep

Q = Fraction


class TestSeedStructure:
    def test_dimensions(self):
        assert seed_rep("a2even", 2).dim == 5
        assert seed_rep("a2odd", 3).dim == 6
        assert seed_rep("d2", 2).dim == 4
        assert seed_rep("d2", 3).dim == 8

    def test_highest_weights(self):
        assert seed_rep("a2even", 3).lam == eps(1, 3)
        assert seed_rep("a2odd", 3).lam == eps(1, 3)
        assert seed_rep("d2", 3).lam == (Q(1, 2),) * 3

    def test_weight_multiset_is_weyl_orbit(self):
        rep = seed_rep("a2even", 2)
        want = {eps(1, 2), eps(2, 2), wscale(eps(1, 2), Q(-1)),
                wscale(eps(2, 2), Q(-1)), (Q(0), Q(0))}
        assert set(rep.weights) == want

    def test_spinor_weights(self):
        rep = seed_rep("d2", 2)
        assert set(rep.weights) == {
            (Q(1, 2), Q(1, 2)), (Q(1, 2), Q(-1, 2)),
            (Q(-1, 2), Q(1, 2)), (Q(-1, 2), Q(-1, 2))}

    def test_h_eigenvalues_match_weights(self):
        rep = seed_rep("d2", 3)
        for p in range(rep.dim):
            for i in range(rep.spec.l + 1):
                assert rep.h_eig(i, p) == inner(rep.weights[p],
                                                rep.spec.alpha[i])


class TestQuantumRelations:
    @pytest.mark.parametrize("w", [Q(2), Q(-3, 2), Q(5, 7)])
    def test_all_families_pass(self, grid_case, w):
        rep = seed_rep(*grid_case)
        report = qrep.check_quantum_relations(rep, QSample(w))
        bad = [r["relation"] for r in report if not r["ok"]]
        assert not bad, bad

    def test_detects_broken_generator(self):
        """Negative control: corrupting one raising matrix must be caught."""
        rep = seed_rep("a2even", 2)
        e = [list(map(list, m)) for m in rep.e]
        e[1][0][1] += 1
        broken = qrep.Representation(rep.spec, rep.lam, rep.dim,
                                     tuple(e), rep.f, rep.weights)
        report = qrep.check_quantum_relations(broken, QSample(Q(2)))
        assert any(not r["ok"] for r in report)


class TestAffineAction:
    def test_e0_lowers_by_theta0(self, grid_case):
        """e0 shifts weights by -theta0 (the affine root alpha0 = -theta0)."""
        rep = seed_rep(*grid_case)
        spec = rep.spec
        for p in range(rep.dim):
            for r in range(rep.dim):
                if rep.e[0][p][r]:
                    diff = tuple(a - b for a, b in
                                 zip(rep.weights[p], rep.weights[r]))
                    assert diff == spec.alpha[0]

    def test_rescaling_invariance_of_relations(self):
        """Reciprocal rescaling e0 -> 2 e0, f0 -> f0/2 preserves everything."""
        rep = seed_rep("d2", 2)
        e = [list(map(list, m)) for m in rep.e]
        f = [list(map(list, m)) for m in rep.f]
        e[0] = linalg.mat_scale(e[0], Q(2))
        f[0] = linalg.mat_scale(f[0], Q(1, 2))
        scaled = qrep.Representation(rep.spec, rep.lam, rep.dim,
                                     tuple(e), tuple(f), rep.weights)
        report = qrep.check_quantum_relations(scaled, QSample(Q(2)))
        assert all(r["ok"] for r in report)

    def test_spinor_build_is_deterministic(self):
        spec = family_spec("d2", 3)
        a = qrep.build_seed_rep(spec)
        b = qrep.build_seed_rep(spec)
        assert a.e == b.e and a.f == b.f
