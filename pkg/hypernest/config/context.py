import configparser
import logging
import os
from functools import cached_property
from typing import Dict, Mapping, Optional

from hypernest.lib import helpers, names

COLOR_OPTION = 'color'
CHECK_ACYCLICITY_OPTION = 'check_acyclicity'
LOG_LEVEL_OPTION = 'log_level'
DEFAULT_LOG_LEVEL = 'WARNING'


class ConfigError(Exception):
    pass


def _read_section(parser: configparser.ConfigParser, path: str) -> Optional[Dict[str, str]]:
    try:
        read = parser.read(path)
    except configparser.Error as exc:
        raise ConfigError(f'{path}: {exc}') from exc
    if not read or not parser.has_section(names.CONFIG_SECTION):
        return None
    return {key: value.strip().strip('\'"') for key, value in parser.items(names.CONFIG_SECTION)}


def extract_hypernest_settings(config_file_path: Optional[str],
                               search_dir: str = os.curdir) -> Dict[str, str]:
    """
    Options of the ``[hypernest]`` section. An explicit ``config_file_path`` must exist and
    contain the section; otherwise the first default file with the section wins, and no
    such file means defaults.
    """
    if config_file_path is not None:
        if not os.path.isfile(config_file_path):
            raise ConfigError(f'{config_file_path}: config file does not exist')
        settings = _read_section(configparser.ConfigParser(), config_file_path)
        if settings is None:
            raise ConfigError(f'{config_file_path}: no section [{names.CONFIG_SECTION}]')
        return settings

    for file_name in names.CONFIG_FILES:
        path = os.path.join(search_dir, file_name)
        if not os.path.isfile(path):
            continue
        settings = _read_section(configparser.ConfigParser(), path)
        if settings is not None:
            return settings
    return {}


class HypernestContext:
    def __init__(self,
                 config_file_path: Optional[str] = None,
                 environ: Optional[Mapping[str, str]] = None,
                 search_dir: str = os.curdir) -> None:
        self.config_file_path = config_file_path
        self.settings = extract_hypernest_settings(config_file_path, search_dir)
        self.environ = dict(os.environ if environ is None else environ)

    def _source(self) -> str:
        return self.config_file_path or f'[{names.CONFIG_SECTION}]'

    def _bool_setting(self, option: str, default: bool) -> bool:
        if option not in self.settings:
            return default
        value = helpers.parse_bool(self.settings[option])
        if value is None:
            raise ConfigError(f'{self._source()}: {option} must be a boolean, got {self.settings[option]!r}')
        return value

    @cached_property
    def color(self) -> bool:
        """Colored diagnostics; the environment variable overrides the config file."""
        if names.COLOR_ENV_VAR in self.environ:
            raw = self.environ[names.COLOR_ENV_VAR]
            if raw not in ('0', '1'):
                raise ConfigError(f'{names.COLOR_ENV_VAR} must be 0 or 1, got {raw!r}')
            return raw == '1'
        return self._bool_setting(COLOR_OPTION, False)

    @cached_property
    def check_acyclicity(self) -> bool:
        return self._bool_setting(CHECK_ACYCLICITY_OPTION, False)

    @cached_property
    def log_level(self) -> int:
        name = self.settings.get(LOG_LEVEL_OPTION, DEFAULT_LOG_LEVEL).upper()
        level = logging.getLevelName(name)
        if not isinstance(level, int):
            raise ConfigError(f'{self._source()}: unknown {LOG_LEVEL_OPTION} {name!r}')
        return level
