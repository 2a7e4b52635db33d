# Copyright 2026 The digifix Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Digital metric spaces, map classes and fixed-point checks."""

import json

from . import _core
from ._core import (
    BudgetExceeded,
    WindowEscape,
    adjacency_degree,
    class_names,
    cu_adjacent,
    gallery_cases,
    run_cli,
)

__all__ = [
    "BudgetExceeded",
    "WindowEscape",
    "adjacency_degree",
    "class_names",
    "classify",
    "cu_adjacent",
    "demo_reciprocal",
    "distance",
    "enumerate_maps",
    "gallery",
    "gallery_cases",
    "run_cli",
    "solve",
    "verify",
]


def _call(fn, request):
    ok, body = fn(json.dumps(request))
    result = json.loads(body)
    return ok, result


def classify(cls, map, image=None, **params):
    """Classify a map (or a pair, via second=...). Returns (holds, report)."""
    return _call(_core.classify, {"class": cls, "map": map, "image": image, **params})


def solve(scheme, image, map, **params):
    """Run picard, inverse, jungck or alphapsiphi. Returns (found, trace)."""
    return _call(_core.solve, {"scheme": scheme, "image": image, "map": map, **params})


def verify(suite, **params):
    """Run a verification suite. Returns (confirmed, report)."""
    return _call(_core.verify, {"suite": suite, **params})


def gallery(case=None, window=None, all=False):
    """Reproduce a worked example, or every one with all=True."""
    req = {"all": True} if all else {"case": case}
    if window is not None:
        req["window"] = list(window)
    return _call(_core.gallery, req)


def enumerate_maps(size=None, image=None, count_only=False):
    return _call(_core.enumerate, {"size": size, "image": image, "count_only": count_only})[1]


def demo_reciprocal(n=100, epsilon="1/10"):
    return _call(_core.demo_reciprocal, {"n": n, "epsilon": epsilon})


def distance(metric, p, q):
    return _call(_core.distance, {"metric": metric, "p": p, "q": q})[1]
