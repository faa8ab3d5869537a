"""Hypothesis strategies producing pairs of braid words whose closures are
related by one Reidemeister move (or a planar isotopy)."""

from hypothesis import strategies as st


def _gens(n):
    return [g for i in range(1, n) for g in (i, -i)]


@st.composite
def braid_word(draw, n, max_len):
    return draw(st.lists(st.sampled_from(_gens(n)), min_size=0, max_size=max_len))


@st.composite
def move_pairs(draw, max_strands=3, max_len=5):
    """((n, word), (n', word'), move name)."""
    n = draw(st.integers(2, max_strands))
    word = draw(braid_word(n, max_len))
    move = draw(st.sampled_from(["R1+", "R1-", "R2", "R3", "conj"] if n >= 3 else ["R1+", "R1-", "R2", "conj"]))
    if move in ("R1+", "R1-"):
        g = n if move == "R1+" else -n
        return (n, word), (n + 1, word + [g]), move
    if move == "R2":
        pos = draw(st.integers(0, len(word)))
        g = draw(st.sampled_from(_gens(n)))
        return (n, word), (n, word[:pos] + [g, -g] + word[pos:]), move
    if move == "R3":
        i = draw(st.integers(1, n - 2))
        s = draw(st.sampled_from([1, -1]))
        pos = draw(st.integers(0, len(word)))
        left = [s * i, s * (i + 1), s * i]
        right = [s * (i + 1), s * i, s * (i + 1)]
        return (n, word[:pos] + left + word[pos:]), (n, word[:pos] + right + word[pos:]), move
    if not word:
        word = [1]
    k = draw(st.integers(0, len(word) - 1))
    return (n, word), (n, word[k:] + word[:k]), move
