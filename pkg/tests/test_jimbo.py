import random
from fractions import Fraction

import pytest

from twistr import jimbo, linalg, tensor, tpg
from twistr.scalars import QSample
from twistr.tensor import TensorModule, permutation_operator

from conftest import seed_rep

Q = Fraction


class TestSolve:
    def test_unique_solution_small_case(self, qs):
        rep = seed_rep("a2even", 1)
        res = jimbo.solve_rmatrix(rep, qs, Q(3, 5))
        assert res.nullity == 1
        assert len(res.R) == 9

    def test_weight_block_structure(self, qs):
        rep = seed_rep("a2odd", 3)
        res = jimbo.solve_rmatrix(rep, qs, Q(2, 7))
        T = TensorModule.of(rep, rep)
        for p in range(T.dim):
            for r in range(T.dim):
                if res.R[p][r]:
                    assert T.weights[p] == T.weights[r]

    def test_intertwines_all_generators(self, qs):
        rep = seed_rep("d2", 2)
        u = Q(3, 4)
        res = jimbo.solve_rmatrix(rep, qs, u)
        T = TensorModule.of(rep, rep)
        gens = [("e", i) for i in range(1, 3)] + \
               [("f", i) for i in range(1, 3)] + [("e", 0), ("f", 0)]
        for kind, i in gens:
            uu = u if i == 0 else None
            A = tensor.coproduct_action(T, kind, i, qs, u=uu)
            B = tensor.coproduct_action(T, kind, i, qs, u=uu, transpose=True)
            lhs = linalg.mat_mul(res.R, A)
            rhs = linalg.mat_mul(B, res.R)
            assert lhs == rhs, (kind, i)

    def test_rcheck_at_one_is_identity(self, qs):
        """With the symmetric coproduct, P itself intertwines at u = 1."""
        rep = seed_rep("a2even", 2)
        res = jimbo.solve_rmatrix(rep, qs, Q(1))
        assert res.Rcheck == linalg.identity(len(res.Rcheck))

    def test_generator_rescaling_invariance(self, qs):
        """e0 -> 2 e0, f0 -> f0/2 leaves the solved R unchanged."""
        from twistr import qrep
        rep = seed_rep("d2", 2)
        e = [list(map(list, m)) for m in rep.e]
        f = [list(map(list, m)) for m in rep.f]
        e[0] = linalg.mat_scale(e[0], Q(2))
        f[0] = linalg.mat_scale(f[0], Q(1, 2))
        scaled = qrep.Representation(rep.spec, rep.lam, rep.dim,
                                     tuple(e), tuple(f), rep.weights)
        u = Q(5, 3)
        assert jimbo.solve_rmatrix(rep, qs, u).R == \
            jimbo.solve_rmatrix(scaled, qs, u).R


class TestChecks:
    def test_ybe_exact(self, ybe_case, qs):
        rep = seed_rep(*ybe_case)
        out = jimbo.check_ybe(rep, qs, Q(3, 5), Q(-2, 7))
        assert out["ok"] and out["residual_entries"] == 0

    def test_ybe_detects_corruption(self, qs):
        """Negative control: a corrupted R-matrix must fail the triple test."""
        rep = seed_rep("a2even", 1)
        u, v = Q(3, 5), Q(-2, 7)
        Ru = jimbo.solve_rmatrix(rep, qs, u).R
        Rv = jimbo.solve_rmatrix(rep, qs, v).R
        bad = [list(row) for row in jimbo.solve_rmatrix(rep, qs, u * v).R]
        bad[0][0] += 1
        d = rep.dim
        r12 = jimbo._embed_three(Ru, d, (0, 1))
        r13 = jimbo._embed_three(bad, d, (0, 2))
        r23 = jimbo._embed_three(Rv, d, (1, 2))
        lhs = jimbo._sparse_mul(jimbo._sparse_mul(r12, r13), r23)
        rhs = jimbo._sparse_mul(jimbo._sparse_mul(r23, r13), r12)
        assert lhs != rhs

    def test_unitarity(self, ybe_case, qs):
        rep = seed_rep(*ybe_case)
        assert jimbo.check_unitarity(rep, qs, Q(4, 9))["ok"]

    def test_spectral_agreement(self, ybe_case, qs):
        rep = seed_rep(*ybe_case)
        assert jimbo.spectral_compare(rep, qs, Q(3, 7))["ok"]

    def test_parity_matches_graph_and_classical(self, ybe_case, qs):
        rep = seed_rep(*ybe_case)
        spectrum = jimbo.parity_spectrum(rep, qs)
        graph = tpg.build_graph(rep.spec, rep.spec.seed_params())
        assert spectrum == {n.nu: n.parity for n in graph.nodes}
        T = TensorModule.of(rep, rep)
        assert spectrum == tensor.classical_parity_signs(T)

    def test_parity_independent_of_w_sign(self):
        rep = seed_rep("a2odd", 3)
        a = jimbo.parity_spectrum(rep, QSample(Q(3, 2)))
        b = jimbo.parity_spectrum(rep, QSample(Q(-3, 2)))
        assert a == b


class TestSampling:
    def test_streams_are_deterministic(self):
        a = random.Random(42)
        b = random.Random(42)
        assert [jimbo.sample_w(a) for _ in range(10)] == \
            [jimbo.sample_w(b) for _ in range(10)]

    def test_samples_avoid_degenerate_values(self):
        rng = random.Random(0)
        for _ in range(200):
            assert jimbo.sample_w(rng) not in (0, 1, -1)
            assert jimbo.sample_u(rng) not in (0, 1, -1)

    def test_with_retries_recovers(self):
        calls = []

        def flaky(rng):
            calls.append(1)
            if len(calls) < 3:
                raise jimbo.SolveError("degenerate")
            return "ok"

        assert jimbo.with_retries(flaky, random.Random(0)) == "ok"

    def test_with_retries_gives_up(self):
        def always(rng):
            raise jimbo.SolveError("degenerate")
        with pytest.raises(jimbo.SolveError):
            jimbo.with_retries(always, random.Random(0), attempts=2)
