"""JSON Schemas for everything ``frl --json`` prints."""

_BOUNDS = {
    "type": "object",
    "properties": {
        "word_length": {"type": "integer", "minimum": 0},
        "support_size": {"type": "integer", "minimum": 0},
        "coeff_bound": {"type": "integer", "minimum": 0},
    },
    "required": ["word_length", "support_size", "coeff_bound"],
    "additionalProperties": False,
}

_ONE_LINE = {"type": "array", "items": {"type": "integer", "minimum": 1}}

VERDICT = {
    "type": "object",
    "properties": {
        "verdict": {"enum": ["holds-at-bound", "refuted", "witness", "no-witness-at-bound"]},
        "bounds": _BOUNDS,
        "assignment": {"type": "object", "additionalProperties": {"type": "string"}},
    },
    "required": ["verdict", "bounds", "assignment"],
    "additionalProperties": False,
}

CERTIFICATE = {
    "type": "object",
    "properties": {
        "degree": {"type": "integer", "minimum": 1},
        "images": {
            "type": "object",
            "patternProperties": {"^[a-z]$": _ONE_LINE},
            "additionalProperties": False,
        },
        "prime": {"type": "integer", "minimum": 2},
        "image_terms": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [{"type": "integer", "minimum": 1}, _ONE_LINE],
                "minItems": 2,
                "maxItems": 2,
            },
            "minItems": 1,
        },
    },
    "required": ["degree", "images", "prime", "image_terms"],
    "additionalProperties": False,
}

_SENTENCES = {
    "type": "object",
    "properties": {"sentences": {"type": "array", "items": {"type": "string"}}},
    "required": ["sentences"],
    "additionalProperties": False,
}

CLASSIFICATION = {
    "type": "object",
    "properties": {
        "sentence": {"type": "string"},
        "language": {"enum": ["L0", "L2"]},
        "flags": {"type": "object", "additionalProperties": {"type": "boolean"}},
    },
    "required": ["sentence", "language", "flags"],
    "additionalProperties": False,
}

EVALUATION = {
    "type": "object",
    "properties": {"formula": {"type": "string"}, "value": {"type": "boolean"}},
    "required": ["formula", "value"],
    "additionalProperties": False,
}

ZERO_DIVISOR = {
    "type": "object",
    "properties": {
        "element": {"type": "string"},
        "radius": {"type": ["integer", "null"]},
        "witness": {"type": ["string", "null"]},
    },
    "required": ["element", "radius", "witness"],
    "additionalProperties": False,
}

AUTOMATON = {
    "type": "object",
    "properties": {
        "vertices": {"type": "integer", "minimum": 1},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [{"type": "integer"}, {"type": "string"}, {"type": "integer"}],
                "minItems": 3,
                "maxItems": 3,
            },
        },
        "rank": {"type": "integer", "minimum": 0},
        "basis": {"type": "array", "items": {"type": "string"}},
        "membership": {"type": "object", "additionalProperties": {"type": "boolean"}},
    },
    "required": ["vertices", "edges", "rank", "basis"],
    "additionalProperties": False,
}

BY_COMMAND = {
    "eval": EVALUATION,
    "check": VERDICT,
    "translate": _SENTENCES,
    "classify": CLASSIFICATION,
    "axioms": _SENTENCES,
    "diagram": _SENTENCES,
    "separate": CERTIFICATE,
    "zerodivisor": ZERO_DIVISOR,
    "stallings": AUTOMATON,
    "intersect": AUTOMATON,
}
