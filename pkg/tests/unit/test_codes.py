"""
Code tests: admissibility, decoding, the S_n action and orbits.
"""
from collections import Counter
from itertools import permutations
from math import perm

import pytest
from pydantic import ValidationError

from preperm.models.code import Code
from preperm.services.betti_service import BettiService
from preperm.services.code_service import CodeService
from preperm.utils.sampling import trial_rng


def compose(w, v):
    """(wv)(j) = w(v(j)) in one-line notation."""
    return tuple(w[x - 1] for x in v)


class TestCodeModel:
    """Test code validation and statistics."""

    def test_statistics(self):
        """Test n, max, μ, index and multiplicities."""
        code = Code(a=(1, 2, 1, 0, 1, 2), marks=(1, 1))
        assert code.n == 6
        assert code.max_value == 2
        assert code.mu == 2
        assert code.index == 2
        assert code.f == {1: 1, 2: 1}
        assert code.multiplicities() == (1, 3, 2)

    def test_zero_code(self):
        """Test the all-zero code."""
        code = Code(a=(0, 0, 0))
        assert code.mu == 3
        assert code.index == 0

    @pytest.mark.parametrize(
        "a,marks",
        [
            ((1, 1), ()),
            ((1, 1), (2,)),
            ((0, 2, 2), (1,)),
            ((0, 1), (1,)),
            ((-1, 0), ()),
        ],
    )
    def test_invalid_codes(self, a, marks):
        """Test rejection of inadmissible sequences and markings."""
        with pytest.raises(ValidationError):
            Code(a=a, marks=marks)

    def test_admissibility(self):
        """Test the admissibility predicate."""
        assert CodeService.is_admissible((0, 1, 1, 2))
        assert CodeService.is_admissible((0, 0))
        assert not CodeService.is_admissible((0, 2, 2))


class TestMarkedNotation:
    """Test the marked-sequence text format."""

    def test_parse_spaced(self):
        """Test parsing a space-separated code."""
        code = CodeService.parse_marked("1 1^ 1 1")
        assert code.a == (1, 1, 1, 1)
        assert code.marks == (1,)

    def test_parse_compact(self):
        """Test parsing a code without separators."""
        code = CodeService.parse_marked("011^")
        assert code.a == (0, 1, 1)
        assert code.marks == (1,)

    def test_parse_combining_hat(self):
        """Test that a combining hat equals a caret."""
        assert CodeService.parse_marked("1 1̂ 1 1") == CodeService.parse_marked("1 1^ 1 1")

    def test_format(self):
        """Test ASCII and unicode rendering."""
        code = Code(a=(0, 1, 1), marks=(1,))
        assert CodeService.format_marked(code) == "0 1 1^"
        assert CodeService.format_marked(code, unicode=True) == "0 1 1̂"

    @pytest.mark.parametrize("text", ["1^ 1 1", "1 1 2", "0 2^ 2", "0^ 1 1^", "", "a b"])
    def test_malformed(self, text):
        """Test rejection of malformed marked sequences."""
        with pytest.raises(ValueError):
            CodeService.parse_marked(text)


class TestEnumeration:
    """Test code enumeration against Euler characteristics."""

    @pytest.mark.parametrize("n,k", [(3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (6, 3)])
    def test_counts(self, n, k):
        """Codes with μ >= n-k number n!/(n-k-1)!."""
        assert len(CodeService.enumerate_codes(n, n - k)) == perm(n, k + 1)

    def test_all_codes(self):
        """Every code has μ >= 2 or is the zero code, so min_mu 1 and 2 agree."""
        assert len(CodeService.enumerate_codes(4, 1)) == 24
        assert CodeService.enumerate_codes(4, 1) == CodeService.enumerate_codes(4, 2)

    def test_invalid_min_mu(self):
        """Test the range of min_mu."""
        with pytest.raises(ValueError):
            CodeService.enumerate_codes(3, 0)
        with pytest.raises(ValueError):
            CodeService.enumerate_codes(3, 4)


class TestDecoding:
    """Test reduction and the geometric descriptor."""

    def test_decode(self):
        """Test the components of a worked code."""
        code = CodeService.parse_marked("1 2 1^ 0 1 2^")
        component = CodeService.decode(code)
        assert component.degree == 4
        assert component.j == 4
        assert component.alpha == frozenset({1, 3, 4, 5})
        assert component.shift == 1
        inner = component.inner
        assert inner.j == 1
        assert inner.alpha == frozenset({3})
        assert inner.inner.is_base

    def test_reduce(self):
        """Test deleting the maximal value."""
        code = CodeService.parse_marked("1 2 1^ 0 1 2^")
        reduced = CodeService.reduce(code)
        assert reduced.a == (1, 1, 0, 1)
        assert reduced.marks == (1,)
        assert CodeService.reduce(Code(a=(1, 1), marks=(1,))) is None

    def test_base_component(self):
        """Test a code with a single value level."""
        component = CodeService.decode(Code(a=(1, 1, 1), marks=(2,)))
        assert component.is_base
        assert component.degree == 4

    @pytest.mark.parametrize("n", range(2, 8))
    def test_decode_is_injective_and_graded(self, n):
        """Distinct codes decode to distinct components; degrees give the Betti numbers of X^{n-2}."""
        codes = CodeService.enumerate_codes(n, 1)
        components = [CodeService.decode(code) for code in codes]
        assert len(set(components)) == len(codes)

        counts = Counter(component.degree // 2 for component in components)
        betti = BettiService.betti_via_recursion(n, n - 2).betti
        assert [counts.get(i, 0) for i in range(len(betti))] == betti


class TestAction:
    """Test the permutation action and orbits."""

    def test_act(self):
        """Test moving entries by a transposition."""
        code = CodeService.parse_marked("1 2 1^ 0 1 2^")
        moved = CodeService.act((2, 1, 3, 4, 5, 6), code)
        assert moved.a == (2, 1, 1, 0, 1, 2)
        assert moved.marks == code.marks

    def test_equivariance(self):
        """decode(w·c).α = w(decode(c).α)."""
        code = CodeService.parse_marked("1 2 1^ 0 1 2^")
        w = (3, 1, 2, 6, 4, 5)
        alpha = CodeService.decode(code).alpha
        moved = CodeService.decode(CodeService.act(w, code)).alpha
        assert moved == frozenset(w[i - 1] for i in alpha)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_equivariance_over_the_group(self, n):
        """decode(w·c).α = w(decode(c).α) for every code and every w in S_n."""
        for code in CodeService.enumerate_codes(n, 1):
            component = CodeService.decode(code)
            for w in permutations(range(1, n + 1)):
                moved = CodeService.decode(CodeService.act(w, code))
                assert moved.degree == component.degree
                if component.is_base:
                    assert moved.is_base
                else:
                    assert moved.alpha == frozenset(w[i - 1] for i in component.alpha)

    def test_action_law(self):
        """act(w, act(v, c)) = act(wv, c) on seeded random triples."""
        for index in range(100):
            rng = trial_rng(1, index)
            n = rng.randint(2, 6)
            codes = CodeService.enumerate_codes(n, 1)
            code = codes[rng.randrange(len(codes))]
            w = tuple(rng.sample(range(1, n + 1), n))
            v = tuple(rng.sample(range(1, n + 1), n))
            assert CodeService.act(w, CodeService.act(v, code)) == CodeService.act(compose(w, v), code)

    def test_act_needs_permutation(self):
        """Test rejection of a non-permutation."""
        with pytest.raises(ValueError):
            CodeService.act((1, 1, 2), Code(a=(0, 1, 1), marks=(1,)))

    def test_orbits_of_length_three(self):
        """Test orbit representatives, sizes and stabilizers for n=3."""
        orbits = CodeService.orbits(3, 2)
        assert [CodeService.format_marked(o.representative) for o in orbits] == [
            "0 0 0",
            "0 1 1^",
            "1 1^ 1",
            "1 1 1^",
        ]
        assert [o.orbit_size for o in orbits] == [1, 3, 1, 1]
        assert [o.stabilizer_type for o in orbits] == [[3], [2, 1], [3], [3]]

    def test_orbit_sizes_cover_codes(self):
        """Orbit sizes add up to the number of codes."""
        assert sum(o.orbit_size for o in CodeService.orbits(5, 2)) == 120

    def test_stage_table(self):
        """Test the degree and stage arrangement for n=4."""
        table = CodeService.stage_table(4)
        assert sum(len(row.representatives) for row in table.rows) == len(CodeService.orbits(4, 1))
        rows = {(row.degree, row.stage): row.representatives for row in table.rows}
        assert rows[(0, 0)] == ["0 0 0 0"]
        assert "1 1^ 1 1" in rows[(2, 0)]
        assert all(0 <= row.stage <= 2 for row in table.rows)
