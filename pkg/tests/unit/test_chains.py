"""
Chain tests: list notation, cones, intersections, ordering and τ_C.
"""
import pytest
from pydantic import ValidationError

from preperm.models.chain import Chain, ray_of
from preperm.services.chain_service import ChainService, check_range


def maximal_for_all_k(n):
    return [chain for k in range(n - 1) for chain in ChainService.maximal_chains(n, k)]


class TestListNotation:
    """Test parsing and rendering of chains."""

    def test_parse_chain(self):
        """Test the sets of a parsed chain."""
        chain = ChainService.parse_chain("⟦1,4|2,3|5⟧", 5)
        assert chain.alpha0 == frozenset({1, 4})
        assert chain.blocks == (frozenset({2, 3}), frozenset({5}))
        assert chain.upper_sets == (frozenset({1, 2, 3, 4}),)
        assert chain.dimension == 3
        assert not chain.is_maximal

    def test_ascii_brackets(self):
        """Test both bracket styles."""
        chain = ChainService.parse_chain("[[4,1|3,2|5]]", 5)
        assert ChainService.format_chain(chain) == "⟦1,4|2,3|5⟧"
        assert ChainService.format_chain(chain, ascii=True) == "[[1,4|2,3|5]]"

    def test_empty_alpha0(self):
        """An empty α_0 renders as a leading empty block."""
        chain = ChainService.parse_chain("⟦|1,2|3⟧", 3)
        assert chain.alpha0 == frozenset()
        assert ChainService.format_chain(chain) == "⟦|1,2|3⟧"

    @pytest.mark.parametrize(
        "text",
        [
            "⟦1,2|2,3⟧",
            "⟦1|2⟧",
            "1,2|3",
            "⟦1,2,3⟧",
            "⟦1||2,3⟧",
            "⟦1,x|2,3⟧",
            "⟦1,2|3,4⟧",
        ],
    )
    def test_malformed_chains(self, text):
        """Test rejection of malformed list notation."""
        with pytest.raises(ValueError):
            ChainService.parse_chain(text, 3)

    def test_model_rejects_overlap(self):
        """Test that blocks must be disjoint."""
        with pytest.raises(ValidationError):
            Chain(n=3, alpha0=frozenset({1}), blocks=(frozenset({1, 2}), frozenset({3})))


class TestMaximalChains:
    """Test maximal chains and their sequences."""

    def test_chain_from_sequence(self):
        """Test building a maximal chain from its trailing numbers."""
        chain = ChainService.chain_from_sequence(4, (3, 1))
        assert chain.alpha0 == frozenset({2, 4})
        assert chain.is_maximal
        assert chain.order == 1
        assert chain.sequence == (3, 1)

    def test_sequence_requires_maximal(self):
        """Test that only maximal chains have a sequence."""
        chain = ChainService.parse_chain("⟦1,4|2,3|5⟧", 5)
        with pytest.raises(ValueError):
            chain.sequence

    def test_validity_for_k(self):
        """Test the (n, k) validity condition."""
        chain = ChainService.parse_chain("⟦3|2|1⟧", 3)
        assert chain.is_valid_for(1)
        assert not chain.is_valid_for(0)

    @pytest.mark.parametrize(
        "n,k,expected",
        [(3, 0, 3), (3, 1, 6), (4, 1, 12), (4, 2, 24), (5, 2, 60), (5, 3, 120)],
    )
    def test_maximal_chain_counts(self, n, k, expected):
        """The number of maximal cones is n!/(n-k-1)!."""
        assert len(ChainService.maximal_chains(n, k)) == expected

    def test_enumeration_has_no_repeats(self):
        """Test that enumeration lists each valid chain once."""
        chains = ChainService.enumerate_chains(4, 2)
        assert len(chains) == len(set(chains))
        assert all(chain.is_valid_for(2) for chain in chains)

    def test_reverse_lexicographic_order(self):
        """Test the order of the maximal chains for (3, 1)."""
        chains = ChainService.maximal_chains(3, 1)
        assert [ChainService.format_chain(c, ascii=True) for c in chains] == [
            "[[3|2|1]]",
            "[[2|3|1]]",
            "[[3|1|2]]",
            "[[1|3|2]]",
            "[[2|1|3]]",
            "[[1|2|3]]",
        ]

    def test_compare_chains(self):
        """Test the three-way comparison."""
        first = ChainService.parse_chain("⟦3|2|1⟧", 3)
        second = ChainService.parse_chain("⟦2|3|1⟧", 3)
        assert ChainService.compare_chains(first, second) == -1
        assert ChainService.compare_chains(second, first) == 1
        assert ChainService.compare_chains(first, first) == 0

    def test_compare_requires_same_order(self):
        """Test that compared chains share (n, k)."""
        first = ChainService.parse_chain("⟦3|2|1⟧", 3)
        other = ChainService.parse_chain("⟦2,3|1⟧", 3)
        with pytest.raises(ValueError):
            ChainService.compare_chains(first, other)

    def test_complement(self):
        """Test the entrywise complement of one chain."""
        chain = ChainService.parse_chain("⟦1,4|2,3|5⟧", 5)
        assert ChainService.format_chain(ChainService.complement_chain(chain)) == "⟦2,5|3,4|1⟧"


class TestDescentStatistics:
    """Test descents, ascents and the complement involution on every maximal chain."""

    @pytest.mark.parametrize("n", range(2, 7))
    def test_descents_and_ascents_sum(self, n):
        """descents + ascents = n-1."""
        for chain in maximal_for_all_k(n):
            total = ChainService.count_descents(chain) + ChainService.count_ascents(chain)
            assert total == n - 1

    @pytest.mark.parametrize("n", range(2, 7))
    def test_complement_is_an_involution(self, n):
        """a -> n+1-a is an involution exchanging descents and ascents."""
        for chain in maximal_for_all_k(n):
            flipped = ChainService.complement_chain(chain)
            assert flipped.is_maximal
            assert flipped.order == chain.order
            assert ChainService.complement_chain(flipped) == chain
            assert ChainService.count_descents(flipped) == ChainService.count_ascents(chain)
            assert ChainService.count_ascents(flipped) == ChainService.count_descents(chain)


class TestCones:
    """Test cone generators and exact membership."""

    def test_ray_of(self):
        """Test e_α in the quotient lattice."""
        assert ray_of(3, {1}) == (1, 0)
        assert ray_of(3, {3}) == (-1, -1)
        assert ray_of(3, {1, 3}) == (0, -1)

    def test_cone_of_chain(self):
        """Test the generators of a maximal cone."""
        chain = ChainService.parse_chain("⟦1|2|3⟧", 3)
        cone = ChainService.cone_of_chain(chain)
        assert cone.generators == ((1, 0), (1, 1))
        assert cone.dimension == 2

    def test_membership(self):
        """Test exact membership with rational points."""
        chain = ChainService.parse_chain("⟦1|2|3⟧", 3)
        assert ChainService.cone_membership((1, 1), chain)
        assert ChainService.cone_membership(("3/2", "1/2"), chain)
        assert not ChainService.cone_membership((-1, -1), chain)
        assert not ChainService.cone_membership((0, 1), chain)

    def test_membership_length_mismatch(self):
        """Test rejection of a point of the wrong length."""
        chain = ChainService.parse_chain("⟦1|2|3⟧", 3)
        with pytest.raises(ValueError):
            ChainService.cone_membership((1, 1, 1), chain)

    def test_face_relation(self):
        """Test the subchain face relation."""
        chain = ChainService.parse_chain("⟦1|2|3⟧", 3)
        face = ChainService.parse_chain("⟦|1,2|3⟧", 3)
        assert ChainService.cone_is_face(face, chain)
        assert not ChainService.cone_is_face(chain, face)

    def test_fan_rays(self):
        """Test ray counts of small fans."""
        assert len(ChainService.fan_rays(3, 0)) == 3
        assert len(ChainService.fan_rays(3, 1)) == 6
        assert len(ChainService.fan_rays(4, 1)) == 8


class TestIntersectionAndTau:
    """Test the meet of two chains and the τ_C map."""

    def test_intersection(self):
        """Test the worked intersection on [9]."""
        chain = ChainService.parse_chain("⟦1,4|2,3|6,7|9|5,8⟧", 9)
        other = ChainService.parse_chain("⟦1,4,6|7,2,3|5,9|8⟧", 9)
        meet = ChainService.intersect_chains(chain, other)
        assert ChainService.format_chain(meet) == "⟦1,4|2,3,6,7|5,8,9⟧"

    def test_intersection_needs_same_n(self):
        """Test rejection of chains on different sets."""
        with pytest.raises(ValueError):
            ChainService.intersect_chains(
                ChainService.parse_chain("⟦1|2|3⟧", 3),
                ChainService.parse_chain("⟦1|2|3,4⟧", 4),
            )

    @pytest.mark.parametrize("n", range(3, 6))
    def test_intersection_generators_are_common_generators(self, n):
        """The cone of C ∩ C' is spanned by the generators σ_C and σ_C' share."""
        for k in range(n - 1):
            chains = ChainService.maximal_chains(n, k)
            rays = {chain: ChainService.cone_of_chain(chain).rays for chain in chains}
            for i, chain in enumerate(chains):
                for other in chains[i:]:
                    meet = ChainService.intersect_chains(chain, other)
                    assert ChainService.cone_of_chain(meet).rays == rays[chain] & rays[other]

    @pytest.mark.parametrize("n", range(3, 6))
    def test_adjacent_swap_meets_in_a_facet(self, n):
        """Swapping a_j and a_{j+1} gives a chain meeting C in dimension n-2."""
        for chain in maximal_for_all_k(n):
            sequence = chain.sequence
            for j in range(len(sequence) - 1):
                swapped = list(sequence)
                swapped[j], swapped[j + 1] = swapped[j + 1], swapped[j]
                other = ChainService.chain_from_sequence(n, swapped)
                assert ChainService.intersect_chains(chain, other).dimension == n - 2

    def test_tau_example(self):
        """Test τ_C of the worked chain on [9]."""
        chain = ChainService.parse_chain("⟦1,2,5,8|4|3|6|9|7⟧", 9)
        assert ChainService.count_descents(chain) == 4
        assert ChainService.count_ascents(chain) == 4
        tau = ChainService.tau_chain(chain)
        assert ChainService.format_chain(tau) == "⟦1,2|3,4,5,8|6|7,9⟧"
        assert tau.dimension == 4

    def test_tau_of_first_cone_is_zero(self):
        """Test that τ_C of the first cone is the origin."""
        chain = ChainService.parse_chain("⟦3|2|1⟧", 3)
        assert ChainService.count_descents(chain) == 2
        assert ChainService.tau_chain(chain).dimension == 0

    def test_tau_of_last_cone_is_itself(self):
        """Test that a fully ascending chain is its own τ_C."""
        chain = ChainService.parse_chain("⟦1|2|3⟧", 3)
        assert ChainService.tau_chain(chain) == chain

    def test_later_neighbours(self):
        """Test neighbours across facets that come later in the order."""
        chains = ChainService.maximal_chains(3, 1)
        first = chains[0]
        neighbours = ChainService.later_neighbours(first, chains)
        assert neighbours
        assert all(ChainService.compare_chains(other, first) > 0 for other in neighbours)


class TestRanges:
    """Test (n, k) validation."""

    @pytest.mark.parametrize("n,k", [(1, 0), (3, 2), (4, -1)])
    def test_invalid_ranges(self, n, k):
        """Test rejection of out-of-range (n, k)."""
        with pytest.raises(ValueError):
            check_range(n, k)
