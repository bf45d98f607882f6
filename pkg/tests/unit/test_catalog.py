import pytest
import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from chowmaps.algebra.poly_core import ZZ_CHERN
from chowmaps.core.exceptions import EnvelopeIndexError, EvenDegreeError
from chowmaps.relations.catalog import (
    all_keys, compute_relation_set, conjecture_keys, oracle_alpha, production_alpha,
    reduced_keys, validate_indices
)
from chowmaps.relations.localization import Provenance

c1, c2 = ZZ_CHERN.gens


class TestKeys:
    def test_all_keys(self):
        """Every (i, k) with 1 <= i <= d, 0 <= k <= i"""
        assert all_keys(3) == [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2), (3, 3)]

    def test_reduced_keys(self):
        """Prime powers up to 9 and the first envelope pair"""
        assert reduced_keys(9) == [(1, 0), (1, 1), (2, 0), (3, 0), (4, 0), (5, 0), (7, 0), (8, 0), (9, 0)]
        assert reduced_keys(1) == [(1, 0), (1, 1)]

    def test_conjecture_keys(self):
        """Primes dividing d"""
        assert conjecture_keys(15) == [(1, 0), (1, 1), (3, 0), (5, 0)]
        assert conjecture_keys(9) == [(1, 0), (1, 1), (3, 0)]
        assert conjecture_keys(1) == [(1, 0), (1, 1)]


class TestValidation:
    def test_valid(self):
        """Indices inside the range pass"""
        validate_indices(3, 3, 3)

    def test_envelope_index(self):
        """i above d"""
        with pytest.raises(EnvelopeIndexError):
            validate_indices(4, 0, 3)
        with pytest.raises(EnvelopeIndexError):
            validate_indices(0, 0, 3)

    def test_k_above_i(self):
        """k above i"""
        with pytest.raises(EnvelopeIndexError):
            validate_indices(2, 3, 3)

    def test_even_degree(self):
        """d must be odd"""
        with pytest.raises(EvenDegreeError):
            validate_indices(1, 0, 2)


class TestPaths:
    def test_provenance(self):
        """Generating functions for i = 1, localization otherwise"""
        assert production_alpha(1, 0, 2, 3) == (9 * c1 ** 2 - 27 * c2, Provenance.GENFUN)
        assert production_alpha(2, 0, 0, 3)[1] is Provenance.LOCALIZATION

    def test_oracles(self):
        """Recursion for i = 1, Hadamard for k = 0, nothing else"""
        assert oracle_alpha(1, 1, 2, 3) == (8 * c1 ** 3 - 27 * c1 * c2, Provenance.RECURSION)
        poly, provenance = oracle_alpha(3, 0, 2, 3)
        assert provenance is Provenance.HADAMARD
        assert poly == production_alpha(3, 0, 2, 3)[0]
        assert oracle_alpha(2, 1, 2, 3) is None

    def test_relation_set_threads(self):
        """Thread count does not change the family"""
        serial = compute_relation_set(1, 5)
        parallel = compute_relation_set(1, 5, threads=3)
        assert serial.keys() == parallel.keys() == all_keys(5)
        assert all(serial[key] == parallel[key] for key in serial.keys())

    def test_relation_set_subset(self):
        """Only the requested keys are computed"""
        relations = compute_relation_set(2, 3, reduced_keys(3))
        assert relations.keys() == [(1, 0), (1, 1), (2, 0), (3, 0)]
        assert relations[(2, 0)] == 12 * c1 ** 4 - 90 * c1 ** 2 * c2 + 189 * c2 ** 2
