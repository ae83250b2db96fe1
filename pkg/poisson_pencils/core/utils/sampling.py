import random
from fractions import Fraction
from typing import List, Tuple

from ..constants import Constants


class RationalSampler:
    """
    Seeded generator of small rationals p/q used for sample points.

    Draws are a pure function of the seed and the call sequence.
    """

    def __init__(
        self,
        seed: int,
        numerator_bound: int = Constants.SAMPLE_NUMERATOR_BOUND,
        denominator_bound: int = Constants.SAMPLE_DENOMINATOR_BOUND,
    ):
        self.seed = seed
        self.numerator_bound = numerator_bound
        self.denominator_bound = denominator_bound
        self._random = random.Random(seed)  # nosec B311 - reproducible sampling

    def draw(self) -> Fraction:
        numerator = self._random.randint(-self.numerator_bound, self.numerator_bound)
        denominator = self._random.randint(1, self.denominator_bound)
        return Fraction(numerator, denominator)

    def draw_nonzero(self) -> Fraction:
        value = self.draw()
        while value == 0:
            value = self.draw()
        return value

    def point(self, size: int) -> Tuple[Fraction, ...]:
        return tuple(self.draw() for _ in range(size))

    def points(self, count: int, size: int) -> List[Tuple[Fraction, ...]]:
        return [self.point(size) for _ in range(count)]
