import cmath
import math
import random
from fractions import Fraction

import pytest

from octaboson.partitions import enumerate_partitions, multiplicity
from octaboson.qboson import (
    RELATION_IDS,
    LatticeFunction,
    annihilate,
    apply_hamiltonian,
    create,
    eigen_residual,
    energy,
    hamiltonian_from_operators,
    number_op,
    scattering_factors,
    scattering_matrix,
    sector_inner_product,
    verify_relation,
    wave_function,
    wave_function_dump,
)
from octaboson.qkernels import ParamSet, qinteger, quadratic_norm

F = Fraction


def test_lattice_function_basics():
    f = LatticeFunction.delta((2, 1))
    assert f((2, 1)) == 1 and f((1, 1)) == 0
    assert (f - f).is_zero
    with pytest.raises(ValueError):
        LatticeFunction(2, {(1,): F(1)})


def test_lattice_function_complex_mode(params4):
    f = LatticeFunction(1, {(0,): 1 + 2j, (1,): -0.5j})
    g = annihilate(0, f, params4)
    assert abs(g(()) - (1 + 2j) / (1 - float(params4.t))) < 1e-15
    assert (f - f).is_zero
    assert f.scale(2j)((0,)) == 2j * (1 + 2j)


def test_annihilate_examples(params4, params2):
    t = params4.t
    f = LatticeFunction.delta((0,))
    out = annihilate(0, f, params4)
    assert out.n == 0
    assert out(()) == 1 / (1 - t)

    g = LatticeFunction.delta((3,))
    assert annihilate(3, g, params4)(()) == 1

    # vacuum convention
    assert annihilate(0, LatticeFunction.delta(()), params4).is_zero

    # reduced profile drops the denominator
    out2 = annihilate(0, LatticeFunction.delta((0,)), params2)
    assert out2(()) == 1


def test_create_examples(params4, params2):
    f = LatticeFunction.delta((3, 1))
    out = create(2, f, params4)
    assert out((3, 2, 1)) == qinteger(1, params4.q)

    # doubled part picks up the q-integer of the multiplicity
    out = create(3, f, params4)
    assert out((3, 3, 1)) == qinteger(2, params4.q)

    # two-parameter boundary creation
    f0 = LatticeFunction.delta((2,))
    out2 = create(0, f0, params2)
    m0 = 1
    assert out2((2, 0)) == qinteger(1, params2.q) * (
        1 - params2.ts[0] * params2.ts[1] * params2.q ** (m0 - 1)
    )


def test_number_op(params4):
    f = LatticeFunction.delta((2, 2, 0))
    assert number_op(3, f, params4)((2, 2, 0)) == 1
    assert number_op(2, f, params4)((2, 2, 0)) == params4.q**2
    g = LatticeFunction(2, {(1, 0): F(2), (2, 1): F(-1, 3)})
    ab = number_op(0, number_op(1, g, params4), params4)
    ba = number_op(1, number_op(0, g, params4), params4)
    assert (ab - ba).is_zero


def test_adjointness(params4):
    # <create(l) f, g> == <f, annihilate(l) g> on delta bases
    for sector in (0, 1, 2):
        for l in range(5):
            for mu in enumerate_partitions(sector, 4):
                f = LatticeFunction.delta(mu)
                cf = create(l, f, params4)
                for nu in enumerate_partitions(sector + 1, 4):
                    g = LatticeFunction.delta(nu)
                    assert sector_inner_product(cf, g, params4) == sector_inner_product(
                        f, annihilate(l, g, params4), params4
                    )


@pytest.mark.parametrize("relation_id", RELATION_IDS)
def test_relations_default_params(relation_id, params4):
    exchange = relation_id in ("d1", "d2", "e1", "e2")
    for n in (1, 2, 3):
        pairs = (
            [(l, k) for l in range(3) for k in range(l + 1, 4)]
            if exchange
            else [(l, k) for l in range(3) for k in range(3)]
        )
        for l, k in pairs:
            report = verify_relation(relation_id, l, k, n, 3, params4)
            assert report.passed, (relation_id, l, k, n, report.max_residual)


def test_relations_multi_params(param_triple):
    # full sweep (n <= 3, parts <= 4, sites <= 5) at the two non-default
    # generic parameter points; the default point is swept by the
    # acceptance suite
    for params in param_triple[1:]:
        for relation_id in RELATION_IDS:
            if relation_id in ("d1", "d2", "e1", "e2"):
                pairs = [(l, k) for l in range(5) for k in range(l + 1, 6)]
            elif relation_id in ("b", "c"):
                pairs = [(l, 0) for l in range(6)]
            else:
                pairs = [(l, k) for l in range(6) for k in range(6)]
            for n in (1, 2, 3):
                for l, k in pairs:
                    report = verify_relation(relation_id, l, k, n, 4, params)
                    assert report.passed, (relation_id, l, k, n, report.max_residual)


def test_relation_validation(params4):
    with pytest.raises(ValueError):
        verify_relation("zz", 0, 1, 2, 3, params4)
    with pytest.raises(ValueError):
        verify_relation("d1", 1, 1, 2, 3, params4)


def test_ultralocality_breakdown_and_restoration(params4, params3, params2):
    # full profile: the untwisted exchange fails on some basis state
    report = verify_relation("d1", 0, 1, 2, 3, params4, twisted=False)
    assert not report.passed
    # and the twisted relation repairs it exactly
    assert verify_relation("d1", 0, 1, 2, 3, params4, twisted=True).passed
    # one vanishing boundary coupling restores plain commutativity
    for params in (params3, params2):
        for rid in ("d1", "d2", "e1", "e2"):
            report = verify_relation(rid, 0, 1, 2, 3, params, twisted=False)
            assert report.passed, (rid, params.profile, report.max_residual)


def test_hamiltonian_two_param_rows(params2):
    # rows of the matrix: (Hf)(lam) for a function with generic support
    t1, t2 = params2.ts[0], params2.ts[1]
    f = LatticeFunction(1, {(k,): F(k + 2) for k in range(5)})
    hf = apply_hamiltonian(f, params2)
    for k in (1, 2, 3):
        assert hf((k,)) == f((k + 1,)) + f((k - 1,))
    assert hf((0,)) == (1 - t1 * t2) * f((1,)) + (t1 + t2) * qinteger(
        1, params2.q
    ) * f((0,))


def test_hamiltonian_distinct_bulk_parts(params4):
    # with all parts >= 2 and distinct every rate is 1 and the potential is 0
    lam = (4, 3, 2)
    neighbors = [(5, 3, 2), (4, 4, 2), (4, 3, 3), (3, 3, 2), (4, 2, 2), (4, 3, 1)]
    f = LatticeFunction(3, {mu: F(1) for mu in neighbors + [lam]})
    hf = apply_hamiltonian(f, params4)
    assert hf(lam) == sum(f(mu) for mu in neighbors)


def test_operator_assembled_hamiltonian(params4, params3, params2):
    for params in (params4, params3, params2):
        for n in (1, 2, 3):
            for mu in enumerate_partitions(n, 4):
                f = LatticeFunction.delta(mu)
                direct = apply_hamiltonian(f, params)
                assembled = hamiltonian_from_operators(f, params)
                assert (direct - assembled).is_zero, (params.profile, mu)


def test_hamiltonian_symmetry(params4):
    for n in (1, 2):
        lams = enumerate_partitions(n, 4)
        images = {
            lam: apply_hamiltonian(LatticeFunction.delta(lam), params4) for lam in lams
        }
        for lam in lams:
            for mu in lams:
                lhs = sector_inner_product(images[lam], LatticeFunction.delta(mu), params4)
                rhs = sector_inner_product(LatticeFunction.delta(lam), images[mu], params4)
                assert lhs == rhs


def test_wave_function_examples(params4):
    n0 = quadratic_norm((0, 0), params4)
    for xi in ((0.3, 1.2), (2.0, -0.4)):
        assert abs(wave_function(xi, (0, 0), params4) - 1 / float(n0)) < 1e-14

    # closed form at n=1: (2cos(xi) + const)/norm
    t1, t2, t3, t4 = (float(t) for t in params4.ts)
    e1 = t1 + t2 + t3 + t4
    e3 = t1 * t2 * t3 + t1 * t2 * t4 + t1 * t3 * t4 + t2 * t3 * t4
    e4 = t1 * t2 * t3 * t4
    xi = math.pi / 2
    expected = (2 * math.cos(xi) + (e3 - e1) / (1 - e4)) / float(
        quadratic_norm((1,), params4)
    )
    assert abs(wave_function((xi,), (1,), params4) - expected) < 1e-14

    # group invariance in the spectral parameter
    a = wave_function((0.7, 2.1), (2, 1), params4)
    b = wave_function((-2.1, 0.7), (2, 1), params4)
    assert abs(a - b) < 1e-12


def test_wave_function_dump(params4):
    dump = wave_function_dump((1.0,), [(0,), (1,)], params4)
    assert set(dump) == {"xi", "values"}
    assert dump["values"][0]["lambda"] == [0]
    assert {"lambda", "re", "im"} == set(dump["values"][0])


def test_eigen_residual_examples(params4):
    report = eigen_residual((1.0,), [(0,), (1,), (2,), (3,)], params4)
    assert float(report.max_residual) < 1e-12
    report2 = eigen_residual((0.7, 2.1), enumerate_partitions(2, 3), params4)
    assert float(report2.max_residual) < 1e-10
    assert abs(energy((math.pi / 2, math.pi / 2))) < 1e-15


def test_eigen_residual_other_profiles(params3, params2):
    for params in (params3, params2):
        report = eigen_residual((0.9, 1.7), enumerate_partitions(2, 3), params)
        assert report.passed, report.max_residual


def test_scattering_factors(params4, params2):
    s, s0 = scattering_factors(0.0, params4)
    assert abs(s - 1) < 1e-15 and abs(s0 - 1) < 1e-15
    s_pi, _ = scattering_factors(math.pi, params4)
    assert abs(s_pi - 1) < 1e-15
    rng = random.Random(7)
    for _ in range(100):
        x = rng.uniform(-8, 8)
        s, s0 = scattering_factors(x, params4)
        assert abs(abs(s) - 1) < 1e-12
        assert abs(abs(s0) - 1) < 1e-12
        _, s0_two = scattering_factors(x, params2)
        assert abs(abs(s0_two) - 1) < 1e-12
        # two-parameter boundary factor is the explicit two-factor ratio
        t1, t2 = (float(t) for t in params2.ts[:2])
        direct = ((1 - t1 * cmath.exp(-1j * x)) * (1 - t2 * cmath.exp(-1j * x))) / (
            (1 - t1 * cmath.exp(1j * x)) * (1 - t2 * cmath.exp(1j * x))
        )
        assert abs(s0_two - direct) < 1e-12


def test_scattering_matrix(params4):
    xi1 = (0.8,)
    _, s0 = scattering_factors(0.8, params4)
    assert abs(scattering_matrix(xi1, params4) - s0) < 1e-15

    rng = random.Random(11)
    for n in (1, 2, 3):
        xi = [rng.uniform(-5, 5) for _ in range(n)]
        value = scattering_matrix(xi, params4)
        assert abs(abs(value) - 1) < 1e-12

    # product structure: pairwise bulk factors times boundary factors
    xi = (0.4, 1.9, -2.5)
    expected = 1 + 0j
    for j in range(3):
        for k in range(j + 1, 3):
            expected *= scattering_factors(xi[j] - xi[k], params4)[0]
            expected *= scattering_factors(xi[j] + xi[k], params4)[0]
        expected *= scattering_factors(xi[j], params4)[1]
    assert abs(scattering_matrix(xi, params4) - expected) < 1e-13
