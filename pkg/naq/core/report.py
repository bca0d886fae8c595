"""
Session reports

A report is assembled section by section in a fixed order, so the same
configuration always serializes to the same JSON apart from the timing block.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field

from naq import __version__
from naq.identities.verdict import FAILS, HOLDS, INCONCLUSIVE

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def engine_info():
    return {"name": "naq", "version": __version__}


@dataclass
class Report:
    config: dict
    bivector: dict
    product: dict
    diagnostics: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    lemma2: dict | None = None
    timing: dict = field(default_factory=dict)

    @property
    def failed_checks(self):
        failed = [c["identity"] for c in self.checks if c["status"] == FAILS]
        failed += [c["identity"] for c in self.checks
                   if c.get("backstop") and c["backstop"]["contradictions"]]
        if self.lemma2 is not None and self.lemma2["status"] != "pass":
            failed.append("lemma2")
        return list(dict.fromkeys(failed))

    @property
    def inconclusive_checks(self):
        return [c["identity"] for c in self.checks if c["status"] == INCONCLUSIVE]

    @property
    def exit_code(self):
        """Inconclusive checks never count as holding"""
        return EXIT_FAILED if self.failed_checks or self.inconclusive_checks else EXIT_OK

    def summary(self):
        return {
            "checks_run": len(self.checks),
            "checks_holding": sum(1 for c in self.checks if c["status"] == HOLDS),
            "failed": self.failed_checks,
            "inconclusive": self.inconclusive_checks,
            "jacobi": self.diagnostics.get("jacobi", {}).get("status"),
            "exit_code": self.exit_code,
        }

    def to_dict(self, include_timing=True):
        result = {
            "engine": engine_info(),
            "config": self.config,
            "bivector": self.bivector,
            "product": self.product,
            "diagnostics": self.diagnostics,
            "checks": self.checks,
        }
        if self.lemma2 is not None:
            result["lemma2"] = self.lemma2
        result["summary"] = self.summary()
        if include_timing:
            result["timing"] = self.timing
        return result

    def to_json(self, include_timing=True):
        return json.dumps(self.to_dict(include_timing), indent=2) + "\n"


def write_document(document, out=None):
    """Write a JSON document to ``out`` or return it for standard output"""
    text = json.dumps(document, indent=2) + "\n" if not isinstance(document, str) else document
    if out is not None:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Report written to {out}")
    return text
