import functools

import pytest

from sigmalat.corpus import builtin_corpus, corpus_entry
from sigmalat.sigma import SigmaPartition

GRID = ("sigma1", "pi:[2,3]", "pi:[2,3,5]", "classes=[[3],[7]];rest=one-class")

# independent prime -> class labels for the grid, used by the oracles
CLASS_FN = {
    "sigma1": lambda p: p,
    "pi:[2,3]": lambda p: p in (2, 3),
    "pi:[2,3,5]": lambda p: p in (2, 3, 5),
    "classes=[[3],[7]];rest=one-class": lambda p: p if p in (3, 7) else 0,
}


@functools.lru_cache(maxsize=None)
def group(name):
    return corpus_entry(name).build()


def names(max_order):
    return [e.name for e in builtin_corpus(max_order)]


def sigma(spec):
    return SigmaPartition.parse(spec)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("SIGMALAT_CACHE_DIR", str(d))
    return d
