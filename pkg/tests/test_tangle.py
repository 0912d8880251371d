import pytest
from hypothesis import given, strategies as st

from linksgould import catalog
from linksgould.ring import ONE, ZERO, NotYFree, Substitution, Y, mono, substitute
from linksgould.tangle import (BraidParseError, BraidWord, Chirality, NotScalarMultiple,
                               TooManyStrands, braid_network, close_to_tangle, detect_chirality,
                               eval_braid, lg_invariant, lg_of_network, reflect)
from linksgould.tensor import ContractionNetwork, Tensor


@st.composite
def braids(draw, max_strands=3, max_len=6):
    n = draw(st.integers(2, max_strands))
    gens = st.integers(1, n - 1).flatmap(lambda g: st.sampled_from([g, -g]))
    return BraidWord(n, tuple(draw(st.lists(gens, max_size=max_len))))


def test_parse():
    w = BraidWord.parse("n=3; 1 -2 1 -2")
    assert w == BraidWord(3, (1, -2, 1, -2))
    assert str(w) == "n=3; 1 -2 1 -2"
    assert BraidWord.parse("1 1 1") == BraidWord(2, (1, 1, 1))
    assert BraidWord.parse("n=1;") == BraidWord(1, ())


@pytest.mark.parametrize("text, message", [
    ("n=2; 7", "generator 7 out of range for 2 strands"),
    ("n=3; 1 x", "bad generator token 'x'"),
    ("n=2; 0", "generator 0"),
    ("n=zz; 1", "bad strand count"),
])
def test_parse_errors(text, message):
    with pytest.raises(BraidParseError, match=message):
        BraidWord.parse(text)


def test_eval_braid_examples():
    assert eval_braid(BraidWord(1)) == Tensor.identity(1)
    assert eval_braid(BraidWord(2, (1, 1, -1, -1))) == Tensor.identity(2)
    assert eval_braid(BraidWord(3, (1, 2, 1))) == eval_braid(BraidWord(3, (2, 1, 2)))


def test_eval_braid_strand_limit():
    with pytest.raises(TooManyStrands):
        eval_braid(BraidWord(6, (1,)))
    with pytest.raises(TooManyStrands):
        lg_invariant(BraidWord(6, (1,)))


@given(braids(max_strands=4, max_len=8))
def test_network_closure_matches_dense_closure(w):
    assert lg_invariant(w) == close_to_tangle(eval_braid(w)).scalar


def test_untouched_strands_close_to_zero():
    assert lg_invariant(BraidWord(3, (1, 1))) == ZERO
    assert lg_invariant(BraidWord(3, (2, 2))) == ZERO
    assert lg_invariant(BraidWord(1)) == ONE
    assert len(braid_network(BraidWord(3, (1, -2))).nodes) == 4


def test_closure_examples(hopf):
    assert close_to_tangle(eval_braid(BraidWord(1)), 1).scalar == ONE
    assert close_to_tangle(eval_braid(BraidWord(2, (1, 1))), 2).scalar == hopf
    assert lg_invariant(BraidWord(2)) == ZERO
    value = close_to_tangle(eval_braid(BraidWord(2, (1, 1))))
    assert value.raw == Tensor.identity(1).scale(value.scalar)


def test_lg_examples(trefoil, figure_eight):
    assert lg_invariant(BraidWord.parse("n=2; 1 1 1")) == trefoil
    assert lg_invariant(BraidWord.parse("n=3; 1 -2 1 -2")) == figure_eight


def test_whitehead_braid_is_mirror_of_table_row():
    table = catalog.get("5^2_1").expected
    got = lg_invariant(BraidWord.parse("n=3; 1 -2 1 -2 -2"))
    assert got == substitute(table, Substitution.MIRROR)
    assert lg_invariant(BraidWord.parse("n=3; -1 2 -1 2 2")) == table


def test_network_path_matches_braid_path(trefoil):
    assert lg_of_network(catalog.get("3_1").network()) == trefoil


def test_network_needs_one_open_strand():
    net = ContractionNetwork(upper="ya", lower="xb").add(Tensor.identity(2), "ya", "xb")
    with pytest.raises(ValueError):
        lg_of_network(net)


def test_non_scalar_tangle_is_rejected():
    raw = Tensor.diagonal([ONE, ONE, ONE, mono(1, 0)])
    with pytest.raises(NotScalarMultiple):
        close_to_tangle(raw, 1)
    with pytest.raises(NotYFree):
        close_to_tangle(Tensor.diagonal([Y] * 4), 1)


def test_reflect():
    w = BraidWord(2, (1, 1, 1))
    assert reflect(w) == BraidWord(2, (-1, -1, -1))
    assert reflect(reflect(w)) == w


@given(braids())
def test_reflection_law(w):
    assert lg_invariant(reflect(w)) == substitute(lg_invariant(w), Substitution.MIRROR)


@given(braids())
def test_inversion_symmetry(w):
    v = lg_invariant(w)
    assert substitute(v, Substitution.INVERSE) == v


@given(braids(), st.data())
def test_conjugation_invariance(w, data):
    g = data.draw(st.integers(1, w.strands - 1)) * data.draw(st.sampled_from([1, -1]))
    conj = BraidWord(w.strands, (g,)) * w * BraidWord(w.strands, (-g,))
    assert lg_invariant(conj) == lg_invariant(w)


@given(braids(), st.sampled_from([1, -1]))
def test_stabilization_invariance(w, sign):
    n = w.strands
    assert lg_invariant(BraidWord(n + 1, w.letters + (sign * n,))) == lg_invariant(w)


def test_word_algebra():
    w = BraidWord(3, (1, -2))
    assert w * w.inverse() == BraidWord(3, (1, -2, 2, -1))
    assert eval_braid(w * w.inverse()) == Tensor.identity(3)


def test_chirality(trefoil, figure_eight):
    assert detect_chirality(trefoil) is Chirality.CHIRAL
    assert detect_chirality(figure_eight) is Chirality.INCONCLUSIVE
    assert detect_chirality(lg_of_network(catalog.get("8_17").network())) is Chirality.INCONCLUSIVE
    assert detect_chirality(lg_of_network(catalog.get("9_42").network())) is Chirality.CHIRAL
    with pytest.raises(NotYFree):
        detect_chirality(Y)


def test_oriented_hopf_link_is_told_from_its_mirror(hopf):
    # linking number +1 versus -1: the oriented Hopf link is not its own mirror image
    assert lg_invariant(BraidWord(2, (1, 1))) == hopf
    assert lg_invariant(BraidWord(2, (-1, -1))) == substitute(hopf, Substitution.MIRROR) != hopf
    assert detect_chirality(hopf) is Chirality.CHIRAL
