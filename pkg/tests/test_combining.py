import numpy as np
import pytest
from hypothesis import given, strategies as st

from mimocap import (
    AntennaConfig,
    Bandwidth,
    BranchSet,
    CombinerKind,
    Snr,
    ValidationError,
    chunk_rng,
    combine_snr,
    combined_capacity,
    draw_channel,
    siso_capacity,
)

B1 = Bandwidth(1.0)

amplitude_lists = st.lists(
    st.floats(min_value=0.0, max_value=100.0), min_size=1, max_size=8
)


def test_worked_examples():
    two = BranchSet((1.0, 2.0), 1.0)
    assert combine_snr(CombinerKind.SELECTION, two, 1.0).linear == pytest.approx(4.0)
    assert combine_snr(CombinerKind.MAXIMAL_RATIO, two, 1.0).linear == pytest.approx(5.0)
    equal = BranchSet((1.0, 1.0), 1.0)
    assert combine_snr(CombinerKind.EQUAL_GAIN, equal, 1.0).linear == pytest.approx(2.0)


def test_combined_capacity_examples():
    mrc = BranchSet((1.0, np.sqrt(2.0)), 1.0)
    c = combined_capacity(CombinerKind.MAXIMAL_RATIO, mrc, B1, 1.0)
    assert c.bits_per_second == pytest.approx(2.0, abs=1e-12)
    dead = BranchSet((0.0, 0.0), 1.0)
    assert combined_capacity(CombinerKind.SELECTION, dead, B1, 1.0).bits_per_second == 0.0


def test_validation():
    with pytest.raises(ValidationError):
        BranchSet((), 1.0)
    with pytest.raises(ValidationError):
        BranchSet((1.0,), 0.0)
    with pytest.raises(ValidationError):
        BranchSet((-1.0,), 1.0)
    with pytest.raises(ValidationError):
        combine_snr(CombinerKind.SELECTION, BranchSet((1.0,), 1.0), 0.0)


@given(amplitude_lists, st.floats(min_value=0.1, max_value=10.0))
def test_mrc_dominates(amps, noise):
    branches = BranchSet(tuple(amps), noise)
    sel = combine_snr(CombinerKind.SELECTION, branches).linear
    mrc = combine_snr(CombinerKind.MAXIMAL_RATIO, branches).linear
    egc = combine_snr(CombinerKind.EQUAL_GAIN, branches).linear
    assert mrc >= sel
    assert mrc >= egc * (1 - 1e-12)


@given(st.floats(min_value=0.0, max_value=100.0), st.floats(min_value=0.1, max_value=10.0))
def test_single_branch_schemes_coincide(a, noise):
    branches = BranchSet((a,), noise)
    values = {
        kind: combine_snr(kind, branches).linear
        for kind in CombinerKind
    }
    assert values[CombinerKind.SELECTION] == values[CombinerKind.MAXIMAL_RATIO]
    assert values[CombinerKind.SELECTION] == pytest.approx(values[CombinerKind.EQUAL_GAIN], rel=1e-12)
    cap = combined_capacity(CombinerKind.SELECTION, branches, B1).bits_per_second
    assert cap == siso_capacity(B1, Snr(a * a / noise)).bits_per_second


@given(amplitude_lists, st.floats(min_value=0.0, max_value=10.0))
def test_adding_a_branch_never_hurts_sel_mrc(amps, extra):
    base = BranchSet(tuple(amps), 1.0)
    bigger = BranchSet(tuple(amps) + (extra,), 1.0)
    for kind in (CombinerKind.SELECTION, CombinerKind.MAXIMAL_RATIO):
        assert combine_snr(kind, bigger).linear >= combine_snr(kind, base).linear


def test_egc_vs_selection_has_no_fixed_order():
    lopsided = BranchSet((1.0, 0.0), 1.0)
    assert (
        combine_snr(CombinerKind.EQUAL_GAIN, lopsided).linear
        < combine_snr(CombinerKind.SELECTION, lopsided).linear
    )
    balanced = BranchSet((1.0, 1.0), 1.0)
    assert (
        combine_snr(CombinerKind.EQUAL_GAIN, balanced).linear
        > combine_snr(CombinerKind.SELECTION, balanced).linear
    )


def test_mrc_dominates_over_rayleigh_draws():
    rng = chunk_rng(2718, 0)
    means = {kind: 0.0 for kind in CombinerKind}
    for _ in range(10000):
        h = draw_channel(AntennaConfig(1, 2), rng)
        branches = BranchSet(tuple(np.abs(h.gains[:, 0])), 1.0)
        caps = {
            kind: combined_capacity(kind, branches, B1).bits_per_second
            for kind in CombinerKind
        }
        assert caps[CombinerKind.MAXIMAL_RATIO] >= caps[CombinerKind.SELECTION]
        assert caps[CombinerKind.MAXIMAL_RATIO] >= caps[CombinerKind.EQUAL_GAIN] - 1e-12
        for kind, c in caps.items():
            means[kind] += c
    assert means[CombinerKind.MAXIMAL_RATIO] >= means[CombinerKind.SELECTION]
    assert means[CombinerKind.MAXIMAL_RATIO] >= means[CombinerKind.EQUAL_GAIN]
