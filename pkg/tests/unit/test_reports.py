import pytest
import sys
import os
import json
sys.path.append(os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from pydantic import ValidationError as PydanticValidationError

from chowmaps.models.reports import (
    CellResult, OutputFormat, PresentationReport, RunConfig, VerifyKind, VerifyReport
)

SCHEMA_DIR = os.path.join(os.path.dirname(__file__), '..', '..', 'schemas')


def load_schema(name):
    with open(os.path.join(SCHEMA_DIR, name), encoding="utf-8") as f:
        return json.load(f)


class TestRunConfig:
    def test_defaults(self):
        """Text output on one thread"""
        config = RunConfig(command="present", r=[2], d=[3])
        assert config.format is OutputFormat.TEXT
        assert config.threads == 1
        assert config.check is True

    def test_even_degree(self):
        """d must be odd"""
        with pytest.raises(PydanticValidationError):
            RunConfig(command="present", r=[1], d=[4])

    def test_negative_r(self):
        """r must be non-negative"""
        with pytest.raises(PydanticValidationError):
            RunConfig(command="present", r=[-1], d=[3])

    def test_alpha_ranges(self):
        """1 <= i <= d and 0 <= k <= i"""
        RunConfig(command="alpha", i=[3], k=[3], r=[0], d=[3])
        with pytest.raises(PydanticValidationError):
            RunConfig(command="alpha", i=[4], k=[0], r=[0], d=[3])
        with pytest.raises(PydanticValidationError):
            RunConfig(command="alpha", i=[2], k=[3], r=[0], d=[3])

    def test_gcd_range(self):
        """gcd-binomials starts at i = 2"""
        with pytest.raises(PydanticValidationError):
            RunConfig(command="gcd-binomials", i=[1, 2])

    def test_verify_needs_kind(self):
        """verify without a kind is invalid"""
        with pytest.raises(PydanticValidationError):
            RunConfig(command="verify", r=[1], d=[3])
        assert RunConfig(command="verify", kind="reduction", r=[1], d=[3]).kind is VerifyKind.REDUCTION

    def test_threads(self):
        """At least one thread"""
        with pytest.raises(PydanticValidationError):
            RunConfig(command="present", r=[1], d=[3], threads=0)

    def test_verbosity(self):
        """Log levels are normalized and checked"""
        assert RunConfig(command="present", r=[1], d=[3]).verbosity == "WARNING"
        assert RunConfig(command="present", r=[1], d=[3], verbosity="debug").verbosity == "DEBUG"
        with pytest.raises(PydanticValidationError):
            RunConfig(command="present", r=[1], d=[3], verbosity="chatty")


class TestVerifyReport:
    def test_exploratory_cells_never_fail(self):
        """Recorded findings do not change the verdict"""
        report = VerifyReport(kind=VerifyKind.CONJECTURE)
        report.extend([
            CellResult(check="conjecture-generated", r=1, d=3, passed=True),
            CellResult(check="conjecture-minimal", r=0, d=9, passed=False, exploratory=True),
        ])
        assert report.passed
        assert report.failing == []

    def test_failure(self):
        """A failed check is listed"""
        report = VerifyReport(kind=VerifyKind.CROSS)
        report.extend([CellResult(check="genfun-vs-recursion", r=1, d=3, i=1, k=0, passed=False)])
        assert not report.passed
        assert [cell.check for cell in report.failing] == ["genfun-vs-recursion"]

    def test_dump_includes_verdict(self):
        """Computed fields are serialized"""
        payload = VerifyReport(kind=VerifyKind.RATIONAL).model_dump(mode="json")
        assert payload["passed"] is True
        assert payload["failing"] == []
        assert payload["kind"] == "rational"


class TestSchemas:
    def test_verify_schema_properties(self):
        """The published schema lists the serialized fields"""
        schema = load_schema("verify_report.schema.json")
        generated = VerifyReport.model_json_schema(mode="serialization")
        assert set(schema["properties"]) == set(generated["properties"])
        assert set(schema["required"]) == set(schema["properties"])

    def test_presentation_schema_properties(self):
        """The presentation schema matches the model"""
        schema = load_schema("presentation.schema.json")
        assert set(schema["properties"]) == set(PresentationReport.model_fields)
