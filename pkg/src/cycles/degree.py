"""Push-forward degrees and flat-pullback multiplicities of zero-dimensional cycles."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.affine import Presentation, RingMap, kernel
from src.exception import FiberNotFinite, WitnessInvalid
from src.exactalg import GREVLEX, Ideal, MonomialOrder
from src.logger import logger


@dataclass
class CyclePoint:
    ideal: Ideal
    multiplicity: int

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        return f"{self.multiplicity} * {self.ideal.to_str(order)}"


def image_point(z: Ideal, ring_map: RingMap) -> Ideal:
    """f(z): the kernel of source -> target / z."""
    target = ring_map.target
    quotient = Presentation(target.variables, target.ideal.sum(z))
    return kernel(RingMap(ring_map.source, quotient, ring_map.images))


def pushforward_degree(z: Ideal, ring_map: RingMap, over: Optional[Ideal] = None) -> int:
    """[k(z) : k(f(z))]; 0 when k(z) is not finite over Q."""
    top = ring_map.target.ideal.sum(z).vspace_dim()
    if not top:
        return 0
    image = image_point(z, ring_map)
    if over is not None and not image.equal(ring_map.source.ideal.sum(over)):
        raise WitnessInvalid(f"{z} lies over {image}, not over {over}")
    bottom = image.vspace_dim()
    if not bottom or top % bottom:
        raise WitnessInvalid(f"{z} is not a point: dimensions {top} over {bottom}")
    return top // bottom


def pushforward_cycle(components: Sequence[Tuple[Ideal, int]], ring_map: RingMap) -> List[CyclePoint]:
    """Σ n_i [k(z_i) : k(f(z_i))] f(z_i), with equal image points merged."""
    points: List[CyclePoint] = []
    for z, n in components:
        degree = pushforward_degree(z, ring_map)
        if degree == 0:
            continue
        image = image_point(z, ring_map)
        for point in points:
            if point.ideal.equal(image):
                point.multiplicity += n * degree
                break
        else:
            points.append(CyclePoint(image, n * degree))
    return [point for point in points if point.multiplicity]


def _fiber(ring_map: RingMap, point: Ideal) -> Tuple[Ideal, int]:
    source, target = ring_map.source, ring_map.target
    if source.ideal.sum(point).vspace_dim() != 1:
        raise WitnessInvalid(f"{point} is not a rational point of {source}")
    fiber = target.ideal.with_generators([ring_map.apply(g) for g in point.generators])
    total = fiber.vspace_dim()
    if total is None:
        raise FiberNotFinite(f"the fiber over {point} is not finite over Q")
    return fiber, total


def _local_length(fiber: Ideal, total: int, component: Ideal, target: Presentation) -> Tuple[int, int]:
    residue = target.ideal.sum(component)
    if not residue.contains_ideal(fiber):
        raise WitnessInvalid(f"{component} is not a point of the fiber")
    degree = residue.vspace_dim()
    if not degree:
        raise WitnessInvalid(f"{component} is not a closed point")
    # in an Artinian ring p^N kills every other local factor once N >= the length
    local = fiber.sum(component.power(max(total, 1))).vspace_dim()
    if local % degree:
        raise WitnessInvalid(f"{component} is not prime: local dimension {local}, residue degree {degree}")
    return local // degree, degree


def flat_fiber_multiplicity(ring_map: RingMap, component: Ideal, point: Ideal) -> int:
    """Length of the fiber over a rational point, localized at `component`."""
    fiber, total = _fiber(ring_map, point)
    length, _ = _local_length(fiber, total, component, ring_map.target)
    logger.debug(f"length at {component} over {point}: {length}")
    return length


def pullback_cycle(ring_map: RingMap, point: Ideal, split: Sequence[Ideal]) -> List[CyclePoint]:
    """
    Flat pullback of a rational point, split into the caller's fiber points.

    Raises WitnessInvalid when the points do not account for the whole fiber.
    """
    fiber, total = _fiber(ring_map, point)
    points, accounted = [], 0
    for index, component in enumerate(split):
        if any(component.equal(other.ideal) for other in points):
            raise WitnessInvalid(f"fiber point {index} is listed twice")
        length, degree = _local_length(fiber, total, component, ring_map.target)
        points.append(CyclePoint(component, length))
        accounted += length * degree
    if accounted != total:
        raise WitnessInvalid(f"the split accounts for {accounted} of the fiber dimension {total}")
    return points
