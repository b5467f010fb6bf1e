"""Bit-table sweep kernels: correctness, backend parity, worker parity."""

import random

import numpy as np
import pytest

from cayley8p.domain import induced_permutations
from cayley8p.kernels import (
    ENV_FLAG,
    HAS_NUMBA,
    active_backend,
    apply_perm_to_mask,
    bit_tables,
    sweep_minimal_count,
    sweep_minimal_masks,
    warmup,
)

# C3 rotation on 3 bits: orbits are {000}, {111}, weight-1, weight-2
ROTATION3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


def test_apply_perm_to_mask():
    assert apply_perm_to_mask(0b001, [2, 0, 1]) == 0b100
    assert apply_perm_to_mask(0b011, [2, 0, 1]) == 0b101
    assert apply_perm_to_mask(0, [1, 0]) == 0


def test_bit_tables_reproduce_every_image():
    perms = induced_permutations(3)
    tlo, thi, lo_bits, lo_mask = bit_tables(perms)
    assert tlo.shape == (24, 1 << 6)
    rng = random.Random(20260815)
    masks = [0, 1, (1 << 12) - 1] + [rng.randrange(1 << 12) for _ in range(200)]
    for m in masks:
        for a, perm in enumerate(perms):
            img = int(tlo[a, m & lo_mask] | thi[a, m >> lo_bits])
            assert img == apply_perm_to_mask(m, perm)


def test_sweep_identity_only_keeps_everything():
    assert sweep_minimal_count([list(range(8))]) == 1 << 8


def test_sweep_rotation_orbits():
    assert sweep_minimal_count(ROTATION3) == 4
    masks = sweep_minimal_masks(ROTATION3)
    assert masks.tolist() == [0b000, 0b001, 0b011, 0b111]


def test_sweep_counts_induced_action_orbits():
    perms = induced_permutations(3)
    assert sweep_minimal_count(perms) == 624
    masks = sweep_minimal_masks(perms)
    assert len(masks) == 624
    assert np.all(np.diff(masks) > 0)
    # spot-check: each representative is the smallest mask in its expanded orbit
    rng = random.Random(7)
    for m in rng.sample(masks.tolist(), 25):
        orbit = {apply_perm_to_mask(m, perm) for perm in perms}
        assert min(orbit) == m


def test_minimal_masks_agree_with_count():
    for p in (3,):
        perms = induced_permutations(p)
        assert len(sweep_minimal_masks(perms)) == sweep_minimal_count(perms)


@pytest.mark.parametrize("workers", [2, 3, 4, 7])
def test_worker_split_is_bit_identical(workers):
    perms = induced_permutations(3)
    assert sweep_minimal_count(perms, workers=workers) == 624
    base = sweep_minimal_masks(perms, workers=1)
    assert np.array_equal(sweep_minimal_masks(perms, workers=workers), base)


def test_numpy_backend_matches_default(monkeypatch):
    perms = induced_permutations(3)
    base_count = sweep_minimal_count(perms)
    base_masks = sweep_minimal_masks(perms)
    monkeypatch.setenv(ENV_FLAG, "numpy")
    assert active_backend() == "numpy"
    assert sweep_minimal_count(perms, workers=2) == base_count
    assert np.array_equal(sweep_minimal_masks(perms, workers=2), base_masks)


@pytest.mark.skipif(not HAS_NUMBA, reason="numba not installed")
def test_backends_identical_up_to_p5(monkeypatch):
    for p in (3, 5):
        perms = induced_permutations(p)
        results = {}
        for backend in ("numba", "numpy"):
            monkeypatch.setenv(ENV_FLAG, backend)
            assert active_backend() == backend
            results[backend] = (
                sweep_minimal_count(perms),
                sweep_minimal_masks(perms),
            )
        assert results["numba"][0] == results["numpy"][0]
        assert np.array_equal(results["numba"][1], results["numpy"][1])


def test_active_backend_validation(monkeypatch):
    monkeypatch.setenv(ENV_FLAG, "cuda")
    with pytest.raises(ValueError):
        active_backend()
    monkeypatch.delenv(ENV_FLAG)
    assert active_backend() in ("numba", "numpy")


def test_warmup_runs():
    warmup()
