import os
import json
import platform
from pathlib import Path

BASE = Path(__file__).parent.parent

DEFAULTS_FILE = BASE / "user" / "config.json"

FALLBACK_DEFAULTS = {
    "seed": 20240917,
    "output_format": "text",
    "context": "daha",
    "saturation_extra_depth": 4,
    "selftest_cases": None,
    "log_level": "WARNING",
}


def get_config_dir():

    if platform.system() == "Windows":
        base_dir = os.getenv("APPDATA") or str(Path.home())
        return Path(base_dir) / "skewalg"
    else:  # Unix-like (Linux, macOS)
        return Path.home() / ".skewalg"

def get_config_file():

    return get_config_dir() / "UserConfig.json"

def get_log_file():

    return get_config_dir() / "skewalg.log"

def read_defaults():

    defaults = dict(FALLBACK_DEFAULTS)
    try:
        with open(DEFAULTS_FILE, 'r') as f:
            defaults.update(json.load(f))
    except (json.JSONDecodeError, IOError):
        pass
    return defaults

def read_config():

    config_file = get_config_file()
    if not config_file.exists():
        return {}

    try:
        with open(config_file, 'r') as f:
            return json.load(f)
    except (json.JSONDecodeError, IOError):
        return {}

def write_config(config):

    config_dir = get_config_dir()
    config_file = get_config_file()

    # Ensure the directory exists
    config_dir.mkdir(parents=True, exist_ok=True)

    with open(config_file, 'w') as f:
        json.dump(config, f, indent=2)

def clear_config():

    config_file = get_config_file()
    if config_file.exists():
        config_file.unlink()
        return True
    return False

def effective_settings():
    """Repository defaults, overlaid by the user file, overlaid by the environment."""
    settings = read_defaults()
    settings.update(read_config())
    env_seed = os.environ.get("SKEWALG_SEED")
    if env_seed:
        try:
            settings["seed"] = int(env_seed)
        except ValueError:
            pass
    return settings

def get_seed():

    return int(effective_settings()["seed"])

def set_seed(seed):

    config = read_config()
    config['seed'] = int(seed)
    write_config(config)

def strict_schema_enabled():
    flag = str(os.environ.get('SKEWALG_STRICT_SCHEMA', '')).lower()
    return flag in ('1', 'true', 'yes', 'on')
