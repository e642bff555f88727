import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from patternrace import Distribution, Pattern, coin, make_system, uniform, validate_system
from patternrace.errors import ValidationError


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args))


def pytest_terminal_summary(terminalreporter):
    lines = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" not in props or (key == "passed" and rep.when != "call"):
                continue
            n, title = props["criterion"]
            status = "PASS" if key == "passed" else "FAIL"
            if status == "FAIL" or n not in lines:
                lines[n] = (status, title)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            status, title = lines[n]
            terminalreporter.write_line(f"[{status}] criterion {n:>2}: {title}")


# --- fixtures ------------------------------------------------------------------

@pytest.fixture
def fair_penney():
    return make_system(coin(), ["THH", "HTH", "HHT"])


@pytest.fixture
def dna_uniform():
    return make_system(uniform("ACGT"), ["ACG", "ATG", "AG"])


# --- random systems ----------------------------------------------------------------

LETTERS = "abcd"


def random_distribution(rng, k):
    weights = [rng.randint(1, 9) for _ in range(k)]
    total = sum(weights)
    return Distribution.from_mapping({LETTERS[i]: Fraction(w, total) for i, w in enumerate(weights)})


def random_system(rng, max_m=4, max_len=6):
    """Rejection-sample a reduced system; alphabet 2-4 letters, m <= max_m, lengths <= max_len."""
    while True:
        k = rng.randint(2, 4)
        dist = random_distribution(rng, k)
        m = rng.randint(1, max_m)
        pats = [
            Pattern(tuple(rng.choice(LETTERS[:k]) for _ in range(rng.randint(1, max_len))))
            for _ in range(m)
        ]
        try:
            return validate_system(dist, pats)
        except ValidationError:
            continue


def random_corpus(n, seed=20240917, **kw):
    rng = random.Random(seed)
    return [random_system(rng, **kw) for _ in range(n)]


@st.composite
def systems(draw, max_m=4, max_len=5):
    k = draw(st.integers(2, 4))
    weights = draw(st.lists(st.integers(1, 9), min_size=k, max_size=k))
    total = sum(weights)
    dist = Distribution.from_mapping({LETTERS[i]: Fraction(w, total) for i, w in enumerate(weights)})
    words = draw(
        st.lists(
            st.lists(st.integers(0, k - 1), min_size=1, max_size=max_len).map(
                lambda xs: tuple(LETTERS[x] for x in xs)
            ),
            min_size=1,
            max_size=max_m,
            unique=True,
        )
    )
    pats = [Pattern(w) for w in words]
    try:
        return validate_system(dist, pats)
    except ValidationError:
        from hypothesis import reject

        reject()


# --- brute-force oracle ------------------------------------------------------------

def brute_force_first_hits(sys, n_max):
    """Pr(tau = n, pattern i wins) for n <= n_max by enumerating every word of length n_max."""
    letters = sys.dist.alphabet.letters
    probs = sys.dist.mapping
    p = [[Fraction(0)] * sys.m for _ in range(n_max + 1)]
    words = [a.symbols for a in sys.patterns]
    for seq in itertools.product(letters, repeat=n_max):
        w = Fraction(1)
        for x in seq:
            w *= probs[x]
        if not w:
            continue
        hit = None
        for n in range(1, n_max + 1):
            for i, pat in enumerate(words):
                if n >= len(pat) and seq[n - len(pat):n] == pat:
                    hit = (n, i)
                    break
            if hit:
                break
        if hit:
            p[hit[0]][hit[1]] += w
    q = [Fraction(1)]
    for n in range(1, n_max + 1):
        q.append(q[-1] - sum(p[n]))
    return p, q
