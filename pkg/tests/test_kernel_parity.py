"""Compiled kernel vs pure-Python kernel: byte-identical reports.

Every scan must produce exactly the same JSON whichever kernel executes it;
the compiled path is an optimization, never a semantic change.  Skipped
when the extension was not built.
"""

import pytest

from ultrachain import GenConfig, PadicField, RationalField, TadicField, TrivialField, scan
from ultrachain._kernel import active_kernel, have_fast
from ultrachain.spaces import parse_norm

pytestmark = pytest.mark.skipif(
    not have_fast(), reason="compiled kernel not built or disabled"
)


CASES = [
    (
        "padic2-sup-dim2-exhaustive",
        GenConfig(field=PadicField(2), dim=2, v_max=2, unit_bound=2, exhaustive=True),
        ("na1", "na2", "steps"),
    ),
    (
        "padic3-weighted-sup",
        GenConfig(
            field=PadicField(3), spec=parse_norm("sup:1,1/3"), dim=2,
            v_max=1, unit_bound=1, exhaustive=True,
        ),
        ("na1", "na2", "steps", "collapse"),
    ),
    (
        "rationals-l1-random",
        GenConfig(
            field=RationalField(), spec=parse_norm("l1"), dim=3, seed=7,
            unit_bound=4, samples=3000,
        ),
        ("mal1", "mal2"),
    ),
    (
        "rationals-linf-tarski-grid",
        GenConfig(
            field=RationalField(), spec=parse_norm("linf"), dim=1,
            v_max=0, unit_bound=8, exhaustive=True,
        ),
        ("tarski", "mal1", "mal2"),
    ),
    (
        "tadic3-sup-exhaustive",
        GenConfig(field=TadicField(3), dim=2, v_max=1, unit_bound=1, exhaustive=True),
        ("na1", "na2", "steps", "collapse"),
    ),
    (
        "trivial-random",
        GenConfig(field=TrivialField(), dim=2, unit_bound=3, seed=11, samples=2000),
        ("na1", "na2", "steps", "collapse"),
    ),
]


@pytest.mark.parametrize("label, cfg, checks", CASES, ids=[c[0] for c in CASES])
def test_fast_and_pure_kernels_agree(label, cfg, checks, monkeypatch):
    assert active_kernel() == "fast"
    fast_json = scan(cfg, checks).to_json()
    monkeypatch.setenv("ULTRACHAIN_PURE_KERNEL", "1")
    assert active_kernel() == "pure"
    pure_json = scan(cfg, checks).to_json()
    assert fast_json == pure_json


def test_kernels_agree_with_threads(monkeypatch):
    cfg = GenConfig(field=PadicField(5), dim=2, v_max=2, unit_bound=2, exhaustive=True)
    checks = ("na1", "na2", "steps", "collapse")
    monkeypatch.setenv("ULTRACHAIN_THREADS", "4")
    fast_json = scan(cfg, checks).to_json()
    monkeypatch.setenv("ULTRACHAIN_PURE_KERNEL", "1")
    pure_json = scan(cfg, checks).to_json()
    monkeypatch.delenv("ULTRACHAIN_THREADS")
    single_json = scan(cfg, checks).to_json()
    assert fast_json == pure_json == single_json


def test_pure_kernel_env_toggle(monkeypatch):
    assert have_fast()
    monkeypatch.setenv("ULTRACHAIN_PURE_KERNEL", "1")
    assert not have_fast()
    assert active_kernel() == "pure"
