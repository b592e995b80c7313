import pytest

import logging_pool
from algebra import isomorphism
from algebra.yokonuma_algebra import YParams


def test_split_chunks():
    chunks = logging_pool.split_chunks(list(range(10)), 4)
    assert [len(c) for c in chunks] == [3, 3, 2, 2]
    assert sum(chunks, []) == list(range(10))


def test_single_job_runs_inline():
    run = logging_pool.pool_runner(1)
    assert run(lambda params, items: [params + i for i in items], 10, [1, 2]) == [11, 12]


@pytest.mark.slow
def test_pool_matches_serial_sweep():
    params = YParams(2, 2, 1, (0,))
    pairs = isomorphism.all_pairs(8)
    parallel = isomorphism.verify_homomorphism(params, pairs, logging_pool.pool_runner(2))
    serial = isomorphism.verify_homomorphism(params, pairs)
    assert parallel.passed and serial.passed
    assert parallel.checked == serial.checked == 64
