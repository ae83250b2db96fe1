from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from ..core.base import AppObject
from ..core.exceptions import ValidationError
from ..diffring import MatDiffOp, format_matrix

TEMPLATES = {"latex": "report.tex.j2", "text": "report.txt.j2"}


class ReportRenderer(AppObject):
    """Renders reduce and invariants reports through the Jinja2 templates."""

    def __init__(self, template_path: Optional[Path] = None):
        template_path = template_path or Path(__file__).parent.parent.parent / "templates"
        self.env = Environment(
            loader=FileSystemLoader(str(template_path)),
            autoescape=False,
            undefined=StrictUndefined,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )

    def render_template(self, template_name: str, context: Dict) -> str:
        self.logger.debug("rendering %s", template_name)
        template = self.env.get_template(template_name)
        return template.render(context)

    def render(
        self,
        emit: str,
        title: str,
        operators: Sequence[Tuple[str, MatDiffOp]],
        names: Sequence[str],
        facts: Sequence[Tuple[str, str]] = (),
    ) -> str:
        if emit not in TEMPLATES:
            raise ValidationError(f"no template for --emit {emit}")
        latex = emit == "latex"
        blocks: List[Dict[str, str]] = [
            {"label": label, "body": format_matrix(operator, names, latex=latex)}
            for label, operator in operators
        ]
        return self.render_template(
            TEMPLATES[emit],
            {"title": title, "fields": list(names), "operators": blocks, "facts": list(facts)},
        )
