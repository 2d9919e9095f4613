"""Selection-game engine: simulate plays, validate transcripts, run the
property suites. Thin dict-friendly wrappers over the native module."""

import json as _json

try:
    from . import _core as _backend  # packaged extension
except ImportError:  # in-tree build directory on sys.path
    import _selgames_core as _backend

ConfigError = _backend.ConfigError
LegalityError = _backend.LegalityError
ContractError = _backend.ContractError
MalformedElement = _backend.MalformedElement
ResourceError = _backend.ResourceError

pair = _backend.pair
unpair = _backend.unpair
bound = _backend.bound
suites = _backend.suites

__all__ = [
    "ConfigError", "LegalityError", "ContractError", "MalformedElement",
    "ResourceError", "pair", "unpair", "bound", "suites", "simulate",
    "simulate_jsonl", "parse_transcript", "dump_transcript", "validate",
    "verify", "default_probes",
]


def _config_text(config):
    return config if isinstance(config, str) else _json.dumps(config)


def parse_transcript(text):
    """JSONL transcript text -> {'header', 'innings', 'summary'}."""
    records = [_json.loads(line) for line in text.splitlines() if line.strip()]
    if len(records) < 2:
        raise ValueError("transcript needs a header and a summary")
    return {"header": records[0], "innings": records[1:-1],
            "summary": records[-1]}


def dump_transcript(transcript):
    """Inverse of parse_transcript; byte-compatible with the engine."""
    records = [transcript["header"], *transcript["innings"],
               transcript["summary"]]
    return "".join(
        _json.dumps(r, separators=(",", ":"), sort_keys=True) + "\n"
        for r in records)


def simulate_jsonl(config, capture_faults=True):
    """Run one configured play; returns the raw JSONL transcript."""
    return _backend.simulate(_config_text(config), capture_faults)


def simulate(config, capture_faults=True):
    """Run one configured play; returns the transcript as a dict."""
    return parse_transcript(simulate_jsonl(config, capture_faults))


def validate(transcript, rebuild=True):
    """Re-check a transcript (dict or JSONL text); returns the report."""
    if isinstance(transcript, dict):
        transcript = dump_transcript(transcript)
    return _json.loads(_backend.validate(transcript, rebuild))


def verify(suite, seed=0, scale=1):
    """Run one named property suite; returns the report as a dict."""
    return _json.loads(_backend.verify(suite, seed, scale))


def default_probes(config):
    """Probe sample the given config resolves to."""
    return _json.loads(_backend.default_probes(_config_text(config)))
