"""Text and JSON renderings of a run. The text form is canonical up to the timing footer."""

import json
from typing import Any, List

from src.cli.runner import Report

TIMING_RULE = "-- timing --"


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def _render(key: str, value: Any, depth: int, lines: List[str]) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        if not value:
            lines.append(f"{pad}{key}: {{}}")
            return
        lines.append(f"{pad}{key}:")
        for name in sorted(value, key=str):
            _render(str(name), value[name], depth + 1, lines)
    elif isinstance(value, (list, tuple)):
        if not value:
            lines.append(f"{pad}{key}: []")
            return
        lines.append(f"{pad}{key}:")
        for item in value:
            _item(item, depth + 1, lines)
    else:
        lines.append(f"{pad}{key}: {_scalar(value)}")


def _item(item: Any, depth: int, lines: List[str]) -> None:
    pad = "  " * depth
    if isinstance(item, dict):
        lines.append(f"{pad}-")
        for name in sorted(item, key=str):
            _render(str(name), item[name], depth + 1, lines)
    elif isinstance(item, (list, tuple)):
        lines.append(f"{pad}-")
        for inner in item:
            _item(inner, depth + 1, lines)
    else:
        lines.append(f"{pad}- {_scalar(item)}")


def render_text(report: Report, timing: bool = True) -> str:
    blocks = []
    for outcome in report.outcomes:
        lines = [f"[{outcome.index}] {outcome.text}", f"verdict: {outcome.result.verdict_text}"]
        if outcome.result.error is not None:
            _render("error", outcome.result.error, 0, lines)
        for key in sorted(outcome.result.witnesses):
            _render(key, outcome.result.witnesses[key], 0, lines)
        blocks.append("\n".join(lines))
    if report.failure is not None:
        blocks.append("\n".join([f"aborted: {report.failure.command}"] +
                                [f"  {line}" for line in _cause_lines(report)]))
    text = "\n\n".join(blocks) + ("\n" if blocks else "")
    if timing and report.monitor is not None:
        footer = [TIMING_RULE]
        footer += [f"{label}: {seconds:.3f}s" for label, seconds in report.monitor.step_durations]
        totals = report.monitor.totals()
        footer.append(f"total: {totals['seconds']:.3f}s over {int(totals['commands'])} commands")
        text += "\n" + "\n".join(footer) + "\n"
    return text


def _cause_lines(report: Report) -> List[str]:
    cause = report.failure.cause.dict()
    return [f"{key}: {_scalar(cause[key])}" for key in sorted(cause)]


def render_json(report: Report) -> str:
    """Sorted-key JSON mirror of the canonical text; timings are left out."""
    payload = {
        "commands": [
            {
                "index": outcome.index,
                "command": outcome.text,
                "verify": outcome.verify,
                "verdict": outcome.result.verdict_text,
                "witnesses": outcome.result.witnesses,
                "error": outcome.result.error,
            }
            for outcome in report.outcomes
        ],
        "failure": report.failure.dict() if report.failure is not None else None,
        "exit_code": report.exit_code,
    }
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def canonical(text: str) -> str:
    """The part of a text report that is byte-stable across runs."""
    head, _, _ = text.partition("\n" + TIMING_RULE + "\n")
    return head
