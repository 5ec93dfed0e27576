"""
Helpers for driving management commands in tests.
"""

import json
from io import StringIO

from django.core.management import CommandError, call_command

from apps.simplicial.complexes import SimplicialMap, check_simplicial_iso


def run_command(name, *args):
    """Run a command and return ``(exit code, stdout, stderr)``."""
    out, err = StringIO(), StringIO()
    try:
        call_command(name, *args, stdout=out, stderr=err)
        code = 0
    except CommandError as exc:
        code = exc.returncode
    return code, out.getvalue(), err.getvalue()


def run_json(name, *args):
    code, out, err = run_command(name, *args)
    return code, (json.loads(out) if out else None), (json.loads(err) if err else None)


def swapped_vertex_check(X, Y, m):
    """Check a cone witness after exchanging the images of its first two vertices."""
    images = list(m.images)
    vertices = list(images[0])
    if len(vertices) >= 2:
        vertices[0], vertices[1] = vertices[1], vertices[0]
        images[0] = tuple(vertices)
    return check_simplicial_iso(X, Y, SimplicialMap(source=m.source, target=m.target, images=tuple(images)))
