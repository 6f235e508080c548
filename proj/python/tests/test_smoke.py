import pytest

import qshelf


def naive_product(k, i, n):
    # the infinite product behind shelf 0, expanded with plain ints
    p = [1] + [0] * (n - 1)

    def mul(c, e):
        for t in range(n - 1, e - 1, -1):
            p[t] += c * p[t - e]

    for t in range(1, n):
        if t % 2:
            mul(1, t)
        else:
            for u in range(t, n):
                p[u] += p[u - t]
    m = 4 * k - 2
    for base in (2 * k - 2 * i + 1, 2 * k + 2 * i - 3, m):
        for e in range(base, n, m):
            mul(-1, e)
    return p


@pytest.mark.parametrize("k,i", [(2, 2), (3, 2), (3, 3), (4, 3)])
def test_product_side_matches_naive_and_partition_count(k, i):
    want = naive_product(k, i, 21)
    assert qshelf.product_side(k, i, 21) == want
    assert qshelf.partition_count_identity(k, i, 20) == want


def test_closed_forms_and_recursion():
    it = qshelf.iterate_shelves(3, 2, 40)
    w = it["effective_prec"]
    assert w > 0
    for i in range(1, 4):
        assert it["officials"][i - 1][:w] == qshelf.closed_form_G(3, 2, i, w)
    for i in range(2, 4):
        assert it["ghosts"][i - 2][:w] == qshelf.closed_form_ghost(3, 2, i, w)
    assert qshelf.closed_form_G(3, 1, 3, 30) == qshelf.closed_form_G(3, 2, 1, 30)


def test_big_coefficients_come_back_as_python_ints():
    s = qshelf.product_side(2, 1, 2200)
    assert all(isinstance(c, int) for c in s)
    assert s[-1] > 2**63
    assert s[:40] == naive_product(2, 1, 40)


def test_valuation():
    r = qshelf.valuation(4, 2, 4, 30)
    assert r["required"] == 7 and r["pass"]


def test_matrices():
    A, B = qshelf.matrix_A(4, 1), qshelf.matrix_B(4, 1)
    assert A[0] == [{}, {0: 1}, {}, {4: 1}]
    assert B[2] == [{}, {-2: 1}, {}, {-2: -1}]
    h = qshelf.h_matrix(3, 0, 2)
    assert all(c >= 0 for row in h for entry in row for c in entry.values())


def test_partition_oracles_match_h():
    h = qshelf.h_matrix(3, 0, 2)
    for i in range(1, 4):
        count = qshelf.partition_count_h12(3, i, 2, 0, 12)
        poly = {}
        for e, c in h[i - 1][0].items():
            poly[e] = poly.get(e, 0) + c
        for e, c in h[i - 1][1].items():
            poly[e] = poly.get(e, 0) + c
        assert count == [poly.get(e, 0) for e in range(13)]


def test_trivariate_and_dictionary():
    j = qshelf.J(3, 2, 12)
    over = qshelf.overpartition_count(3, 2, 11)
    assert {key: c for key, c in j.items() if key[2] <= 11} == over
    assert qshelf.specialize(3, 3, 1, 20) == qshelf.closed_form_G(3, 1, 1, 20)
    assert qshelf.ghost_position_one(3, 0, 20) == qshelf.closed_form_G(3, 0, 2, 20)


def test_run_suite_report_and_errors():
    rep = qshelf.run_suite("identities", k="2..3", degree=30, nmax=10)
    assert rep["summary"]["fail"] == 0
    assert all(c["anchor"] for c in rep["checks"])
    bad = qshelf.run_suite("identities", k="2", degree=30, nmax=10, faults=["identities.jtp.k2.i1:rhs:4"])
    failed = [c for c in bad["checks"] if c["status"] == "FAIL"]
    assert len(failed) == 1 and failed[0]["mismatch"]["exponent"] == 4
    with pytest.raises(qshelf.ConfigError):
        qshelf.run_suite("shelves", k="4", degree=10, shelves="3")
    with pytest.raises(qshelf.Error):
        qshelf.run_suite("nope")
