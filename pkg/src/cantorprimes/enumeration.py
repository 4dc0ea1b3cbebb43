# Copyright (c) 2026 The CantorPrimes developers
#
# This file is part of CantorPrimes.
#
# CantorPrimes is free software: you can redistribute it and/or modify it under the
# terms of the GNU General Public License as published by the Free Software
# Foundation, either version 3 of the License, or (at your option) any later
# version.
#
# CantorPrimes is distributed in the hope that it will be useful, but WITHOUT ANY
# WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR
# A PARTICULAR PURPOSE. See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with
# CantorPrimes. If not, see <https://www.gnu.org/licenses/>.
#

"""
Runs the three characterizations side by side over ranges of primes.

Every certificate carries the verdicts of the digit oracle, the exponential equation and
the cyclotomic form. The three are equivalent, so a mismatch is raised as
:class:`Disagreement` instead of being resolved.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any

from tqdm import tqdm

from cantorprimes.cyclotomic import find_cantor_form, is_cantor_by_cyclotomic_form, phi_prime_at, repunit3
from cantorprimes.errors import InvariantViolation
from cantorprimes.exp_char import (
    ExponentialWitness,
    extract_K,
    is_cantor_by_exponential_equation,
    multiplicative_order_of_3,
    repetend_from_K,
)
from cantorprimes.primality import iter_primes, primes_up_to, require_prime
from cantorprimes.ternary_oracle import (
    ExclusionVerdict,
    Stage,
    exclusion_stage,
    is_reciprocal_in_cantor_set,
    ternary_digits_of_reciprocal,
)

logger = logging.getLogger(__name__)

# Number of chunks handed to each worker process.
_CHUNKS_PER_WORKER = 8


class Disagreement(InvariantViolation):
    """The characterizations returned different verdicts for one prime."""

    def __init__(self, p: int, dump: dict[str, Any]):
        super().__init__(p, dump)
        self.p = p
        self.dump = dump

    def __str__(self) -> str:
        verdicts = ", ".join(f"{name}={value}" for name, value in self.dump["verdicts"].items())
        return f"characterizations disagree for p = {self.p}: {verdicts}"


@dataclass(frozen=True)
class CantorCertificate:
    """
    Verdicts and witnesses for one prime.

    q and the exclusion verdict are present for every p > 3; K, offsets and form only
    for Cantor primes. p = 3 is flagged ``small_special`` and carries no witnesses.
    """

    p: int
    is_cantor: bool
    small_special: bool = False
    q: int | None = None
    K: int | None = None
    offsets: tuple[int, ...] | None = None
    form: tuple[int, int] | None = None
    exclusion: ExclusionVerdict | None = None
    agreement: bool = True

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready view; arbitrary-precision values become decimal strings."""
        exclusion = self.exclusion
        return {
            "p": str(self.p),
            "is_cantor": self.is_cantor,
            "small_special": self.small_special,
            "q": self.q,
            "K": None if self.K is None else str(self.K),
            "offsets": None if self.offsets is None else list(self.offsets),
            "form": None if self.form is None else list(self.form),
            "exclusion": None
            if exclusion is None
            else {
                "stage": exclusion.stage.value,
                "failing_digit": exclusion.failing_digit,
                "witness_exponents": list(exclusion.witness_exponents),
            },
            "agreement": self.agreement,
        }


def _diagnostic_dump(p: int, verdicts: dict[str, bool], q: int, form: tuple[int, int] | None) -> dict[str, Any]:
    dump: dict[str, Any] = {"p": p, "verdicts": verdicts, "q": q, "form": form}
    try:
        dump["digits"] = "".join(map(str, ternary_digits_of_reciprocal(p).digits))
        dump["K"] = extract_K(p).K
    except Exception as ex:
        dump["dump_error"] = repr(ex)
    return dump


def _check_witnesses(p: int, witness: ExponentialWitness, form: tuple[int, int] | None, exclusion: ExclusionVerdict):
    """Cross-checks the witnesses of a Cantor prime against each other."""
    problems = []
    if 2 * p * witness.K + 1 != 3**witness.q:
        problems.append("2pK + 1 != 3^q")
    if form is None:
        problems.append("no cyclotomic form")
    else:
        s, j = form
        r = s**j
        if phi_prime_at(s, 3**r) != p:
            problems.append(f"Phi_{s}(3^{r}) != p")
        if witness.K != repunit3(r):
            problems.append(f"K is not the repunit R_{r}")
        if witness.q != r * s:
            problems.append(f"q != {s}^{j + 1}")
    if not witness.offsets or witness.offsets[-1] != 0:
        problems.append("offsets do not end at 0")
    if sum(exclusion.witness_exponents) != witness.q:
        problems.append("interval chain does not close after q digits")
    digits = ternary_digits_of_reciprocal(p).digits
    if digits != repetend_from_K(witness.K, witness.q):
        problems.append("repetend is not 2K")
    if digits.count(2) != len(witness.offsets):
        problems.append("number of 2-digits differs from number of offsets")
    if problems:
        logger.error("Witnesses of %d are inconsistent: %s", p, "; ".join(problems))
        raise InvariantViolation(f"inconsistent witnesses for {p}: {'; '.join(problems)}")


def certify(p: int) -> CantorCertificate:
    """
    Decides p with all three characterizations and collects the witnesses.

    Raises:
        NotPrime: if p is composite.
        Disagreement: if the characterizations do not agree.
    """
    require_prime(p)
    if p == 3:
        return CantorCertificate(3, is_cantor=True, small_special=True)
    if p == 2:
        return CantorCertificate(2, is_cantor=is_reciprocal_in_cantor_set(2))

    q = multiplicative_order_of_3(p)
    form = find_cantor_form(p)
    exclusion = exclusion_stage(p)
    verdicts = {
        "digits": is_reciprocal_in_cantor_set(p),
        "equation": is_cantor_by_exponential_equation(p),
        "form": is_cantor_by_cyclotomic_form(p),
        "intervals": exclusion.passes,
    }
    if len(set(verdicts.values())) != 1:
        dump = _diagnostic_dump(p, verdicts, q, form)
        logger.error("Disagreement: %s", dump)
        raise Disagreement(p, dump)

    if not verdicts["digits"]:
        return CantorCertificate(p, is_cantor=False, q=q, exclusion=exclusion)
    witness = extract_K(p)
    _check_witnesses(p, witness, form, exclusion)
    logger.debug("%d is a Cantor prime with q = %d, K = %d, form %s", p, witness.q, witness.K, form)
    return CantorCertificate(
        p,
        is_cantor=True,
        q=witness.q,
        K=witness.K,
        offsets=witness.offsets,
        form=form,
        exclusion=exclusion,
    )


def _certify_chunk(primes: Iterable[int]) -> list[CantorCertificate]:
    return [certificate for certificate in map(certify, primes) if certificate.is_cantor]


def enumerate_cantor_primes(limit: int, workers: int = 1, progress: bool = False) -> list[CantorCertificate]:
    """
    Certificates of all Cantor primes <= limit, ascending.

    Every prime in range is certified, so each one passes the three-way agreement
    check. With ``workers`` > 1 the range is split over a process pool; results are
    sorted by p, so the output does not depend on scheduling.
    """
    primes = primes_up_to(limit)
    logger.info("Certifying %d primes up to %d with %d worker(s)", len(primes), limit, workers)
    if workers <= 1:
        certificates = _certify_chunk(tqdm(primes, desc="certify", unit="p", disable=not progress))
    else:
        size = max(1, len(primes) // (workers * _CHUNKS_PER_WORKER))
        chunks = [primes[i : i + size] for i in range(0, len(primes), size)]
        certificates = []
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for part in tqdm(
                executor.map(_certify_chunk, chunks), total=len(chunks), desc="certify", disable=not progress
            ):
                certificates.extend(part)
    return sorted(certificates, key=lambda certificate: certificate.p)


def exclusion_report(limit: int, stage: Stage) -> list[int]:
    """Primes 3 < p <= limit whose interval chain ends in ``stage``."""
    return [p for p in iter_primes(5, limit + 1) if exclusion_stage(p).stage is stage]
