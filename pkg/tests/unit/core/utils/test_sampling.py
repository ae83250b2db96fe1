"""
Unit tests for the seeded rational sampler.
"""

from fractions import Fraction

from poisson_pencils.core.utils import RationalSampler


# Test RationalSampler
def test_sampler_is_reproducible():
    """Two samplers with one seed draw the same points."""
    first = RationalSampler(7).points(4, 3)
    second = RationalSampler(7).points(4, 3)

    assert first == second


def test_sampler_respects_bounds():
    """Draws stay within the numerator and denominator bounds."""
    sampler = RationalSampler(1, numerator_bound=3, denominator_bound=2)

    for _ in range(50):
        value = sampler.draw()
        assert isinstance(value, Fraction)
        assert abs(value) <= 3


def test_draw_nonzero_never_returns_zero():
    """draw_nonzero skips zero draws."""
    sampler = RationalSampler(3, numerator_bound=1, denominator_bound=1)

    assert all(sampler.draw_nonzero() != 0 for _ in range(30))
