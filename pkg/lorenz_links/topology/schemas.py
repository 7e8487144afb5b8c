# CHECKPOINT_8_DOCUMENT_SCHEMAS
"""
JSON Schemas for Emitted Documents
==================================
Schemas of the JSON written by the CLI and returned by the API, so that
consumers (and the test suite) can validate output with jsonschema.
"""

from typing import Any, Dict

from jsonschema import Draft202012Validator

# ============================================
# Building Blocks
# ============================================

POLYNOMIAL_SCHEMA = {
    "type": "object",
    "description": "Laurent polynomial: coeffs[i] is the coefficient of x^(min_deg + i)",
    "properties": {
        "min_deg": {"type": "integer"},
        "coeffs": {"type": "array", "items": {"type": "integer"}},
    },
    "required": ["min_deg", "coeffs"],
    "additionalProperties": False,
}

NULLABLE_POLYNOMIAL = {"anyOf": [POLYNOMIAL_SCHEMA, {"type": "null"}]}
NULLABLE_INTEGER = {"type": ["integer", "null"]}

BRAID_SCHEMA = {
    "type": "object",
    "properties": {
        "strands": {"type": "integer", "minimum": 1},
        "letters": {"type": "array", "items": {"type": "integer", "not": {"const": 0}}},
        "text": {"type": "string"},
    },
    "required": ["strands", "letters"],
}

TLINK_SCHEMA = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "array",
        "items": {"type": "integer", "minimum": 1},
        "minItems": 2,
        "maxItems": 2,
    },
}

VECTOR_SCHEMA = {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}}

# ============================================
# Invariant Report
# ============================================

INVARIANT_REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "source": {"type": "string", "enum": ["lorenz-braid", "t-braid", "grid", "braid"]},
        "components": {"type": "integer", "minimum": 1},
        "crossings": {"type": "integer", "minimum": 0},
        "writhe": {"type": "integer"},
        "euler_characteristic": NULLABLE_INTEGER,
        "surface_components": NULLABLE_INTEGER,
        "genus": {"type": ["integer", "null"], "minimum": 0},
        "alexander": NULLABLE_POLYNOMIAL,
        "kauffman_f": NULLABLE_POLYNOMIAL,
        "kauffman_status": {"type": "string", "pattern": "^(computed|disabled|skipped: .+)$"},
        "jones": NULLABLE_POLYNOMIAL,
    },
    "required": ["source", "components", "crossings", "writhe", "kauffman_status"],
}

# ============================================
# Verification Results
# ============================================

CHECK_SCHEMA = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "passed": {"type": "boolean"},
        "detail": {"type": "string"},
    },
    "required": ["name", "passed"],
}

INSTANCE_RESULT_SCHEMA = {
    "type": "object",
    "properties": {
        "vector": VECTOR_SCHEMA,
        "tlink": TLINK_SCHEMA,
        "braids": {
            "type": "object",
            "properties": {"lorenz": BRAID_SCHEMA, "tlink": BRAID_SCHEMA},
            "required": ["lorenz", "tlink"],
        },
        "invariants": {
            "type": "object",
            "properties": {
                "lorenz-braid": INVARIANT_REPORT_SCHEMA,
                "t-braid": INVARIANT_REPORT_SCHEMA,
                "grid": INVARIANT_REPORT_SCHEMA,
            },
            "required": ["lorenz-braid", "t-braid", "grid"],
        },
        "checks": {"type": "array", "items": CHECK_SCHEMA},
        "verified": {"type": "boolean"},
        "mismatch_detail": {"type": ["string", "null"]},
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["vector", "tlink", "braids", "invariants", "verified"],
}

BATTERY_RESULT_SCHEMA = {
    "type": "object",
    "properties": {
        "max_sum": {"type": "integer", "minimum": 1},
        "instances": {"type": "array", "items": INSTANCE_RESULT_SCHEMA},
        "passed": {"type": "integer", "minimum": 0},
        "failed": {"type": "integer", "minimum": 0},
        "first_mismatch": {"type": ["string", "null"]},
    },
    "required": ["max_sum", "instances", "passed", "failed"],
}

SHOW_SCHEMA = {
    "type": "object",
    "properties": {
        "vector": VECTOR_SCHEMA,
        "vector_text": {"type": "string"},
        "tlink": TLINK_SCHEMA,
        "tlink_text": {"type": "string"},
        "shuffle": {"type": "array", "items": {"type": "integer"}},
        "braids": {
            "type": "object",
            "properties": {"lorenz": BRAID_SCHEMA, "tlink": BRAID_SCHEMA},
            "required": ["lorenz", "tlink"],
        },
        "grid": {"type": "string"},
        "svg": {"type": ["string", "null"]},
    },
    "required": ["vector", "tlink", "braids", "grid"],
}

# ============================================
# Schema Registry
# ============================================

SCHEMAS: Dict[str, Dict[str, Any]] = {
    "polynomial": POLYNOMIAL_SCHEMA,
    "report": INVARIANT_REPORT_SCHEMA,
    "instance": INSTANCE_RESULT_SCHEMA,
    "battery": BATTERY_RESULT_SCHEMA,
    "show": SHOW_SCHEMA,
}


def get_schema(name: str) -> Dict[str, Any]:
    """Get a schema by name"""
    if name not in SCHEMAS:
        raise ValueError(f"Schema '{name}' not found. Available: {list(SCHEMAS.keys())}")
    return SCHEMAS[name]


def validate_document(name: str, document: Any) -> None:
    """Raise jsonschema.ValidationError if the document does not match"""
    Draft202012Validator(get_schema(name)).validate(document)
