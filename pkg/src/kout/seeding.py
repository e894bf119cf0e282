"""Deterministic 64-bit seed derivation for reproducible experiments.

Every random quantity in a sweep is drawn from a generator seeded by a value
derived here, so results are identical regardless of execution order or the
number of workers.  The mixer is SplitMix64 (Steele, Lea & Flood 2014), a
fixed full-avalanche permutation of the 64-bit integers:

    mix(z):  z += 0x9E3779B97F4A7C15
             z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
             z = (z ^ (z >> 27)) * 0x94D049BB133111EB
             return z ^ (z >> 31)          (all mod 2**64)

A sequence of words is folded left to right: h = mix(h ^ mix(word)), starting
from h = mix(master).  Two streams are derived per trial:

    graph stream:    (master, STREAM_GRAPH,  model, n, k, gamma, index)
    deletion stream: (master, STREAM_DELETE,        n, k, gamma, index)

The deletion stream deliberately omits the model word so a K-out trial and
its Erdos-Renyi counterpart at the same (k, index) delete the same node set,
which is what makes the paired comparison a paired comparison.
"""

from __future__ import annotations

MASK64 = 0xFFFFFFFFFFFFFFFF

# stream tags
STREAM_GRAPH = 0x01
STREAM_DELETE = 0x02

# model tags
MODEL_WORDS = {"kout": 0x10, "er": 0x20}


def check_seed(seed: int) -> int:
    """Validate an unsigned 64-bit master seed and return it."""
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise TypeError(f"seed must be an integer, got {type(seed).__name__}")
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed must be in [0, 2**64): {seed}")
    return seed


def mix64(z: int) -> int:
    """One SplitMix64 step: a fixed avalanche permutation of 64-bit ints."""
    z = (z + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def fold_word(h: int, w: int) -> int:
    """One step of the left fold: absorb a word into the running hash."""
    return mix64(h ^ mix64(w & MASK64))


def fold(master: int, *words: int) -> int:
    """Fold integer words into a single derived 64-bit seed."""
    h = mix64(master & MASK64)
    for w in words:
        h = fold_word(h, w)
    return h


def cell_prefixes(master: int, model: str, n: int, k: int, gamma: int) -> tuple[int, int]:
    """Per-cell fold prefixes; absorbing a trial index yields its seeds.

    ``fold_word(prefix, index)`` equals the corresponding stream of
    :func:`trial_seeds` -- the fold is split before its last word so sweep
    loops do not re-fold the five constant words every trial.
    """
    graph_prefix = fold(master, STREAM_GRAPH, MODEL_WORDS[model], n, k, gamma)
    deletion_prefix = fold(master, STREAM_DELETE, n, k, gamma)
    return graph_prefix, deletion_prefix


def trial_seeds(
    master: int, model: str, n: int, k: int, gamma: int, index: int
) -> tuple[int, int]:
    """Return (graph_seed, deletion_seed) for one trial of a sweep cell.

    The graph seed depends on the model; the deletion seed does not, so
    paired models at equal (k, index) share deletion realizations.
    """
    graph_prefix, deletion_prefix = cell_prefixes(master, model, n, k, gamma)
    return fold_word(graph_prefix, index), fold_word(deletion_prefix, index)
