"""JSON formats.

Every rational is written as a ``"num/den"`` or ``"n"`` string and reports
are dumped with sorted keys, so output is canonical and re-parses to the same
value.
"""

import json
from pathlib import Path

from .errors import MalformedInput
from .pfunctions import PFunctionClassification, PKind, Witness
from .rational import format_rational, parse_integer, parse_rational
from .tools import TestOrder, TestPyramid, TestStatistic
from .trial import AggregatedTrial, Trial
from .worked_examples import LotterySpec, Participant, SnoopingReport


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def load_json(path):
    try:
        with open(Path(path), encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: invalid JSON ({exc})") from None


def _field(obj, key, kind=dict):
    if not isinstance(obj, dict) or key not in obj:
        raise MalformedInput(f"expected an object with a {key!r} field")
    value = obj[key]
    if not isinstance(value, kind):
        raise MalformedInput(f"{key!r} must be a JSON {kind.__name__}")
    return value


# trials


def trial_from_json(obj):
    """Either ``{"outcomes": [...]}`` or ``{"classes": [...]}``."""
    if isinstance(obj, dict) and "classes" in obj:
        rows = []
        for c in _field(obj, "classes", list):
            if not isinstance(c, dict) or not {"id", "size", "p"} <= c.keys():
                raise MalformedInput("each class needs 'id', 'size' and 'p'")
            rows.append((c["id"], parse_integer(c["size"]), parse_rational(c["p"])))
        return AggregatedTrial(tuple(rows))
    pairs = []
    for o in _field(obj, "outcomes", list):
        if not isinstance(o, dict) or not {"id", "p"} <= o.keys():
            raise MalformedInput("each outcome needs 'id' and 'p'")
        pairs.append((o["id"], parse_rational(o["p"])))
    return Trial(tuple(pairs))


def trial_to_json(space) -> dict:
    if isinstance(space, AggregatedTrial):
        return {
            "classes": [
                {"id": c, "size": str(n), "p": format_rational(p)} for c, n, p in space.classes
            ]
        }
    return {"outcomes": [{"id": x, "p": format_rational(p)} for x, p in space.outcomes]}


def event_from_json(obj) -> frozenset:
    if not isinstance(obj, list) or not all(isinstance(x, str) for x in obj):
        raise MalformedInput("an event is a JSON list of ids")
    return frozenset(obj)


def event_to_json(event) -> list:
    return sorted(event)


# test tools


def order_from_json(obj) -> TestOrder:
    classes = _field(obj, "classes", list)
    return TestOrder([event_from_json(c) for c in classes])


def order_to_json(order: TestOrder) -> dict:
    return {"classes": [event_to_json(c) for c in order.classes]}


def pyramid_from_json(obj) -> TestPyramid:
    events = [event_from_json(e) for e in _field(obj, "events", list)]
    return TestPyramid.from_unordered(events)


def pyramid_to_json(pyramid: TestPyramid) -> dict:
    return {"events": [event_to_json(e) for e in pyramid.events]}


def statistic_from_json(obj) -> TestStatistic:
    values = _field(obj, "values", dict)
    return TestStatistic({x: parse_rational(v) for x, v in values.items()})


def statistic_to_json(f: TestStatistic) -> dict:
    return {"values": {x: format_rational(v) for x, v in f.items()}}


# reports


def classification_to_json(c: PFunctionClassification) -> dict:
    out = {"kind": c.kind.value}
    if c.witness is not None:
        out["witness"] = {
            "epsilon": format_rational(c.witness.epsilon),
            "tail": format_rational(c.witness.tail),
        }
    return out


def classification_from_json(obj) -> PFunctionClassification:
    kind = PKind(_field(obj, "kind", str))
    w = obj.get("witness")
    if w is None:
        return PFunctionClassification(kind)
    return PFunctionClassification(
        kind, Witness(parse_rational(w["epsilon"]), parse_rational(w["tail"]))
    )


def snooping_report_to_json(r: SnoopingReport) -> dict:
    return {
        "repetitions_run": r.repetitions_run,
        "triggered": r.triggered,
        "naive_p": format_rational(r.naive_p),
        "corrected_p": format_rational(r.corrected_p),
        "seed": r.seed,
    }


def snooping_report_from_json(obj) -> SnoopingReport:
    return SnoopingReport(
        obj["repetitions_run"],
        obj["triggered"],
        parse_rational(obj["naive_p"]),
        parse_rational(obj["corrected_p"]),
        obj["seed"],
    )


def lottery_spec_from_json(obj) -> LotterySpec:
    organizer = _field(obj, "organizer", str)
    people = []
    for p in _field(obj, "participants", list):
        if not isinstance(p, dict) or not {"id", "tickets"} <= p.keys():
            raise MalformedInput("each participant needs 'id' and 'tickets'")
        people.append(
            Participant(p["id"], parse_integer(p["tickets"]), parse_integer(p.get("count", 1)))
        )
    edges = obj.get("edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise MalformedInput("'edges' must be a list of [id, id] pairs")
    return LotterySpec(organizer, tuple(people), tuple(tuple(e) for e in edges))


def lottery_spec_to_json(spec: LotterySpec) -> dict:
    people = []
    for p in spec.participants:
        entry = {"id": p.id, "tickets": p.tickets}
        if p.count != 1:
            entry["count"] = p.count
        people.append(entry)
    return {
        "organizer": spec.organizer,
        "participants": people,
        "edges": [list(e) for e in spec.edges],
    }
