"""
Validation of the JSON documents the command line emits.

Schema validation runs when jsonschema is installed; the envelope checks below run always.
"""

import importlib.util
import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

_jsonschema_spec = importlib.util.find_spec('jsonschema')
if _jsonschema_spec is not None:  # Optional dependency
    from jsonschema import Draft7Validator  # type: ignore
else:
    Draft7Validator = None  # type: ignore

from core.logger import log

SCHEMA_FILE = Path(__file__).parent.parent / "skewalg_output_schema.json"
ENVELOPE_KEYS = ("command", "context", "inputs", "outputs", "verdict")
VERDICTS = ("pass", "fail", "error")


class OutputValidator:

    def __init__(self, schema_path: Optional[str] = None, enable_schema: Optional[bool] = None):
        """
        Args:
            schema_path: schema file; defaults to the one shipped at the repository root
            enable_schema: force schema validation on or off; by default it is on whenever
                           the schema and jsonschema are both available
        """
        self.validator = None
        env_flag = str(os.environ.get('SKEWALG_STRICT_SCHEMA', '')).lower()
        if enable_schema is not None:
            self.schema_enabled = bool(enable_schema)
        else:
            self.schema_enabled = env_flag not in ('0', 'false', 'no', 'off')

        schema_file = Path(schema_path) if schema_path else SCHEMA_FILE
        try:
            if self.schema_enabled and Draft7Validator is not None and schema_file.exists():
                with open(schema_file, 'r', encoding='utf-8') as f:
                    self.schema = json.load(f)
                self.validator = Draft7Validator(self.schema)
        except (OSError, json.JSONDecodeError) as e:
            log("warn", f"output schema could not be loaded: {e}")
            self.validator = None
            self.schema_enabled = False

    def validate(self, document: Dict[str, Any]) -> Dict[str, Any]:
        """Returns {'valid', 'errors', 'message', 'schema_errors', 'custom_errors'}."""
        schema_errors: List[Dict[str, Any]] = []
        if self.validator is not None:
            for error in self.validator.iter_errors(document):
                schema_errors.append({
                    'path': list(error.path),
                    'message': error.message,
                    'validator': error.validator,
                })
        custom_errors = self.validate_envelope(document)
        errors = schema_errors + custom_errors
        return {
            'valid': not errors,
            'errors': errors,
            'message': 'Output is valid' if not errors else f'Found {len(errors)} validation errors',
            'schema_errors': len(schema_errors),
            'custom_errors': len(custom_errors),
        }

    def validate_envelope(self, document: Any) -> List[Dict[str, Any]]:
        if not isinstance(document, dict):
            return [{'path': [], 'message': 'output must be a JSON object', 'validator': 'type'}]
        errors = []
        for key in ENVELOPE_KEYS:
            if key not in document:
                errors.append({'path': [key], 'message': f"'{key}' is a required property",
                               'validator': 'required'})
        verdict = document.get('verdict')
        if verdict is not None and verdict not in VERDICTS:
            errors.append({'path': ['verdict'], 'message': f"verdict must be one of {', '.join(VERDICTS)}",
                           'validator': 'enum'})
        outputs = document.get('outputs')
        if document.get('command') == 'ideal-reduce' and verdict == 'pass' and isinstance(outputs, dict):
            generators = outputs.get('generators', [])
            if not 1 <= len(generators) <= 2:
                errors.append({'path': ['outputs', 'generators'],
                               'message': f'an ideal reduction returns 1 or 2 generators, found {len(generators)}',
                               'validator': 'generator_count'})
            if not outputs.get('verified', False):
                errors.append({'path': ['outputs', 'verified'],
                               'message': 'a passing reduction must carry a verified certificate',
                               'validator': 'certificate'})
        return errors

    def generate_report(self, result: Dict[str, Any]) -> str:
        if result['valid']:
            return "Output validation: OK"
        lines = [f"Output validation: {result['message']}"]
        for i, error in enumerate(result['errors'], 1):
            path = "/".join(str(p) for p in error.get('path', [])) or "<root>"
            lines.append(f"  {i}. {path}: {error['message']}")
        return "\n".join(lines)


def validate_output(document: Dict[str, Any], schema_path: Optional[str] = None) -> Dict[str, Any]:
    return OutputValidator(schema_path).validate(document)
