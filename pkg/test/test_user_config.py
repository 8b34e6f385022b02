import json
import logging

from core import user_config
from core.logger import configure_logging, log, logger


def test_settings_layering(monkeypatch):
    assert user_config.effective_settings()["context"] == "daha"
    user_config.set_seed(99)
    assert user_config.get_seed() == 99
    assert json.loads(user_config.get_config_file().read_text())["seed"] == 99
    monkeypatch.setenv("SKEWALG_SEED", "123")
    assert user_config.get_seed() == 123
    assert user_config.clear_config()
    assert not user_config.clear_config()


def test_strict_schema_flag(monkeypatch):
    assert not user_config.strict_schema_enabled()
    monkeypatch.setenv("SKEWALG_STRICT_SCHEMA", "yes")
    assert user_config.strict_schema_enabled()


def test_log_file_receives_records(tmp_path):
    log_file = tmp_path / "logs" / "skewalg.log"
    configure_logging("INFO", log_file, echo=False)
    log("info", "reduced", detail="depth 2")
    log("debug", "hidden")
    for handler in logger.handlers:
        handler.flush()
    text = log_file.read_text()
    assert "INFO - reduced\ndepth 2" in text
    assert "hidden" not in text
    assert logger.level == logging.INFO
    configure_logging("WARNING", None, echo=False)
