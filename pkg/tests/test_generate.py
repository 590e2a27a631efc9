from dimstruct.core import DimensionStructure, check_axioms, check_pre_axioms
from dimstruct.generate import generate_random, random_lattice, random_structure, shrink
from dimstruct.io import emit_structure


def test_deterministic_in_seed():
    for mode in ("valid_principal", "valid_general", "raw", "pre"):
        a = emit_structure(generate_random(11, (6, 6), mode))
        b = emit_structure(generate_random(11, (6, 6), mode))
        assert a == b


def test_valid_modes_validate_and_respect_limits():
    for seed in range(300):
        for mode in ("valid_principal", "valid_general"):
            D = generate_random(seed, (5, 4), mode)
            assert isinstance(D, DimensionStructure)
            assert check_axioms(D).ok
            assert len(D.poset) <= 5 and len(D.points) <= 4


def test_pre_mode_is_pre_valid_and_sometimes_misses_ax3():
    misses = 0
    for seed in range(300):
        c = generate_random(seed, (6, 4), "pre")
        rep = check_pre_axioms(c)
        assert rep.pre_ok
        misses += not rep.ax3
    assert misses > 20


def test_random_lattice_is_lattice():
    for seed in range(100):
        assert random_lattice(seed).is_lattice()


def test_shrink_keeps_failure_and_reduces():
    c = random_structure(5, 6, 6, "raw")
    failing = lambda k: not check_axioms(k).ok
    assert failing(c)
    small = shrink(c, failing)
    assert failing(small)
    assert len(small.points) == 1 and len(small.poset) <= 2
