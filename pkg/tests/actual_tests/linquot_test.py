import itertools

import pytest

from depthlab import InvalidOrderingError, ResourceLimitError, UnsupportedInputError
from depthlab.constructions import VeroneseSpec, all_posets, chain_poset, delta, squarefree_veronese, veronese_type
from depthlab.constructions.families import predicted_sqfree_veronese
from depthlab.linquot import (
    check_exchange,
    depth_by_linear_quotients,
    find_linear_quotients_order,
    is_polymatroidal,
    partial_depth_bound,
    revlex_order,
    verify_linear_quotients,
)
from depthlab.monomials import power, product

from ..conftest import ideal


def test_revlex_triangle(lab_q, triangle):
    assert revlex_order(triangle) == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
    cert = lab_q.linquot.revlex(triangle)
    assert cert.valid
    assert cert.colons == ((1,), (0,))
    assert cert.q_list == (1, 1)
    assert cert.q == 1
    assert lab_q.linquot.depth(cert, 3) == 1


def test_certificate_text(triangle):
    cert = verify_linear_quotients(triangle, revlex_order(triangle))
    lines = cert.format_text(triangle.ambient.names).splitlines()
    assert lines[0] == "valid: yes"
    assert lines[1] == "1: x1 x2"
    assert lines[2] == "2: x1 x3  colon=(x2) q_2=1"
    assert lines[-1] == "q: 1"


def test_principal_ideal():
    i = ideal(3, [1, 2, 2])
    cert = verify_linear_quotients(i, [0])
    assert cert.valid and cert.q == 0
    assert depth_by_linear_quotients(cert, 3) == 2


def test_violation_reported():
    i = ideal(4, [1, 2], [3, 4])
    cert = verify_linear_quotients(i, i.gens)
    assert not cert.valid
    assert cert.violation == (2, ((1, 1, 0, 0),))
    assert "violation at step 2" in cert.format_text(i.ambient.names)
    with pytest.raises(InvalidOrderingError):
        depth_by_linear_quotients(cert, 4)
    assert find_linear_quotients_order(i) is None


def test_invalid_orderings(triangle):
    with pytest.raises(InvalidOrderingError):
        verify_linear_quotients(triangle, [0, 1])
    with pytest.raises(InvalidOrderingError):
        verify_linear_quotients(triangle, [0, 0, 1])
    with pytest.raises(InvalidOrderingError):
        verify_linear_quotients(triangle, [0, 1, 7])
    mixed = ideal(3, [1], [2, 3])
    with pytest.raises(InvalidOrderingError) as e:
        verify_linear_quotients(mixed, [(0, 1, 1), (1, 0, 0)])
    assert e.value.step == 2


def test_mixed_degrees(lab_q):
    i = ideal(3, [1], [2, 3])
    cert = verify_linear_quotients(i, i.gens)
    assert cert.valid and cert.q == 1
    assert depth_by_linear_quotients(cert, 3) == lab_q.oracle.depth(i)


def test_search(lab_q, triangle):
    cert = lab_q.linquot.search(triangle)
    assert cert is not None and cert.valid
    assert cert.q == 1
    assert sorted(cert.ordering) == sorted(triangle.gens)
    with pytest.raises(ResourceLimitError) as e:
        find_linear_quotients_order(triangle, cap=1)
    assert e.value.cap_name == "search"


def test_search_matches_oracle(lab_q):
    for i in (
        ideal(4, [1, 2], [2, 3], [3, 4]),
        ideal(4, [1, 2], [1, 3], [1, 4], [2, 3]),
        ideal(5, [1, 2], [2, 3], [3, 4], [4, 5], [1, 5]),
    ):
        cert = find_linear_quotients_order(i)
        if cert is not None:
            assert depth_by_linear_quotients(cert, i.n) == lab_q.oracle.depth(i)


def test_partial_bound(lab_q, triangle):
    assert partial_depth_bound(triangle, [(1, 1, 0), (1, 0, 1)]) == 1
    assert partial_depth_bound(triangle, [0], check_linear_resolution=True) == 2
    assert lab_q.linquot.partial_bound(triangle, [0]) >= lab_q.oracle.depth(triangle)
    with pytest.raises(InvalidOrderingError):
        partial_depth_bound(triangle, [(1, 1, 1)])
    with pytest.raises(InvalidOrderingError):
        partial_depth_bound(ideal(4, [1, 2], [3, 4]), [0, 1])
    with pytest.raises(UnsupportedInputError):
        partial_depth_bound(ideal(4, [1, 2], [3, 4]), [0], check_linear_resolution=True)


def test_exchange_property():
    assert is_polymatroidal(squarefree_veronese(4, 2))
    ok, witness = check_exchange(ideal(4, [1, 2], [3, 4]))
    assert not ok
    assert (witness.u, witness.v, witness.i) == ((1, 1, 0, 0), (0, 0, 1, 1), 0)
    assert check_exchange(ideal(3, [1], [2, 3])) == (False, None)
    assert revlex_order(ideal(3, [1], [2, 3], [2, 2])) == ((1, 0, 0), (0, 2, 0), (0, 1, 1))


@pytest.mark.parametrize("n", (3, 4, 5))
def test_sqfree_veronese_powers_by_revlex(n):
    for d in range(2, n):
        i = squarefree_veronese(n, d)
        for k in (1, 2):
            cert = verify_linear_quotients(power(i, k), revlex_order(power(i, k)))
            assert cert.valid
            assert depth_by_linear_quotients(cert, n) == predicted_sqfree_veronese(n, d, k)


def test_poset_power_order(lab_q):
    for n in (1, 2, 3):
        for p in all_posets(n):
            for k in (1, 2):
                cert = lab_q.linquot.poset_power(p, k)
                assert cert.valid
                assert cert.q == delta(p, k)[0]
    cert = lab_q.linquot.poset_power(chain_poset(2), 1)
    assert cert.ordering == ((0, 0, 1, 1), (1, 0, 0, 1), (1, 1, 0, 0))


@pytest.mark.parametrize(
    "i",
    (
        ideal(4, [1, 2], [2, 3], [3, 4]),
        ideal(4, [1, 2], [1, 3], [2, 3], [3, 4]),
        squarefree_veronese(4, 2),
        power(ideal(3, [1], [2]), 2),
    ),
)
def test_q_does_not_depend_on_the_certificate(i):
    qs = set()
    for ordering in itertools.permutations(range(len(i.gens))):
        cert = verify_linear_quotients(i, ordering)
        if cert.valid:
            qs.add(cert.q)
    assert len(qs) == 1
    search = find_linear_quotients_order(i)
    assert search is not None and qs == {search.q}


@pytest.mark.parametrize(
    "first, second",
    (
        (ideal(4, [1], [2]), ideal(4, [3], [4])),
        (squarefree_veronese(4, 2), squarefree_veronese(4, 3)),
        (veronese_type(VeroneseSpec(3, 2, (1, 1, 2))), veronese_type(VeroneseSpec(3, 3, (1, 2, 2)))),
        (squarefree_veronese(4, 2), veronese_type(VeroneseSpec(4, 3, (1, 1, 2, 3)))),
        (ideal(4, [1, 2], [1, 3], [2, 3]), ideal(4, [1], [4])),
    ),
)
def test_product_of_polymatroidal_ideals(first, second):
    assert is_polymatroidal(first) and is_polymatroidal(second)
    both = product(first, second)
    assert is_polymatroidal(both)
    assert verify_linear_quotients(both, revlex_order(both)).valid
