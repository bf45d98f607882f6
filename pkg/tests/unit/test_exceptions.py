import pytest
import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from chowmaps.core.exceptions import (
    ChowMapsError, ConfigurationError, DemotionError, DomainError, EnvelopeIndexError,
    EvenDegreeError, IdentityViolatedError, NotDivisibleError, NotHomogeneousError,
    NotInvertibleError, NotSymmetricError, ValidationError
)


class TestExceptions:
    def test_base_formatting(self):
        """Codes render in brackets"""
        assert str(ChowMapsError("plain")) == "plain"
        assert str(ChowMapsError("coded", "X")) == "[X] coded"
        assert ChowMapsError("plain").details == {}

    @pytest.mark.parametrize("cls,code", [
        (NotDivisibleError, "NOT_DIVISIBLE"),
        (NotInvertibleError, "NOT_INVERTIBLE"),
        (NotSymmetricError, "NOT_SYMMETRIC"),
        (IdentityViolatedError, "IDENTITY_VIOLATED"),
        (NotHomogeneousError, "NOT_HOMOGENEOUS"),
        (DemotionError, "DEMOTION"),
        (DomainError, "DOMAIN_ERROR"),
        (EnvelopeIndexError, "ENVELOPE_INDEX"),
        (ConfigurationError, "CONFIG_ERROR"),
        (ValidationError, "VALIDATION_ERROR"),
    ])
    def test_codes(self, cls, code):
        """Each subclass carries its code and a default message"""
        error = cls()
        assert isinstance(error, ChowMapsError)
        assert error.code == code
        assert str(error).startswith(f"[{code}] ")

    def test_details_kept(self):
        """details travel with the exception"""
        error = NotDivisibleError("remainder", {"divisor": "c1"})
        assert error.details == {"divisor": "c1"}

    def test_even_degree_message(self):
        """The offending degree is shown"""
        assert str(EvenDegreeError(degree=4)) == "[EVEN_DEGREE] Degree must be odd (got d=4)"
        assert str(EvenDegreeError()) == "[EVEN_DEGREE] Degree must be odd"

    def test_envelope_index_is_index_error(self):
        """Callers catching IndexError see envelope errors"""
        with pytest.raises(IndexError):
            raise EnvelopeIndexError("i=4 > d=3")
