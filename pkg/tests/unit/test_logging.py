import pytest
import sys
import os
import json
import logging
sys.path.append(os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from chowmaps.core.logging import (
    ROOT_LOGGER, ColoredFormatter, StructuredFormatter, get_logger, log_execution_time, setup_logging
)


@pytest.fixture
def restore_package_logger():
    package_logger = logging.getLogger(ROOT_LOGGER)
    handlers, level, propagate = list(package_logger.handlers), package_logger.level, package_logger.propagate
    yield package_logger
    for handler in package_logger.handlers:
        handler.close()
    package_logger.handlers[:] = handlers
    package_logger.setLevel(level)
    package_logger.propagate = propagate


def make_record(message, levelname="INFO"):
    return logging.LogRecord(
        name="chowmaps.test", level=getattr(logging, levelname), pathname=__file__,
        lineno=1, msg=message, args=(), exc_info=None,
    )


class TestLoggers:
    def test_namespace(self):
        """Loggers live under the package namespace"""
        assert get_logger("verification").name == "chowmaps.verification"
        assert get_logger("chowmaps.cli").name == "chowmaps.cli"
        assert get_logger("chowmaps").name == "chowmaps"

    def test_setup_levels(self, restore_package_logger):
        """setup_logging configures only the package logger"""
        setup_logging(log_level="info")
        assert restore_package_logger.level == logging.INFO
        assert restore_package_logger.propagate is False
        assert len(restore_package_logger.handlers) == 1

    def test_unknown_level_defaults_to_warning(self, restore_package_logger):
        """Unknown level names fall back to WARNING"""
        setup_logging(log_level="chatty", enable_console_logging=False)
        assert restore_package_logger.level == logging.WARNING

    def test_file_logging(self, tmp_path, restore_package_logger):
        """Errors reach both the main and the error log"""
        setup_logging(log_level="INFO", log_dir=str(tmp_path), enable_file_logging=True,
                      enable_console_logging=False, structured=True)
        logger = get_logger("file-test")
        logger.info("slice built")
        logger.error("identity failed")
        for handler in restore_package_logger.handlers:
            handler.flush()

        main_log = (tmp_path / "chowmaps.log").read_text()
        error_log = (tmp_path / "chowmaps-error.log").read_text()
        assert "slice built" in main_log and "identity failed" in main_log
        assert "identity failed" in error_log
        assert "slice built" not in error_log


class TestFormatters:
    def test_colored_restores_levelname(self):
        """Colors are applied only to the formatted text"""
        record = make_record("hello", "ERROR")
        text = ColoredFormatter("%(levelname)s %(message)s").format(record)
        assert "\033[31m" in text
        assert record.levelname == "ERROR"

    def test_structured_extra_fields(self):
        """extra_fields are merged into the JSON entry"""
        record = make_record("cell done")
        record.extra_fields = {"r": 2, "d": 3}
        entry = json.loads(StructuredFormatter().format(record))
        assert entry["message"] == "cell done"
        assert entry["level"] == "INFO"
        assert (entry["r"], entry["d"]) == (2, 3)


class TestExecutionTime:
    def test_success_logged(self, caplog):
        """Completed calls log their duration"""
        timed_logger = logging.getLogger("timing-check")

        @log_execution_time(timed_logger, level=logging.INFO)
        def square(x):
            return x * x

        with caplog.at_level(logging.INFO, logger="timing-check"):
            assert square(4) == 16
        assert any("square completed in" in message for message in caplog.messages)

    def test_failure_logged(self, caplog):
        """Failures log and re-raise"""
        timed_logger = logging.getLogger("timing-check")

        @log_execution_time(timed_logger)
        def broken():
            raise RuntimeError("boom")

        with caplog.at_level(logging.ERROR, logger="timing-check"):
            with pytest.raises(RuntimeError):
                broken()
        assert any("broken failed after" in message for message in caplog.messages)
