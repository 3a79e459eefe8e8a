from pathlib import Path

from hf_workbench.resources.kripke.model import (
    Frame,
    KripkeModel,
    NodeStructure,
)
from hf_workbench.resources.kripke.schemas import (
    KripkeModelFile,
    TransitionFile,
)


def to_model(data: KripkeModelFile) -> KripkeModel:
    """Builds the model exactly as described; nothing is closed off."""
    structures = {
        p: NodeStructure(
            domain=tuple(domain),
            classes=tuple(
                frozenset(cls) for cls in data.eq_classes.get(p, [])
            ),
            membership=frozenset(
                tuple(pair) for pair in data.membership.get(p, [])
            ),
        )
        for p, domain in data.domains.items()
    }
    return KripkeModel(
        frame=Frame(
            tuple(data.nodes), frozenset(tuple(e) for e in data.edges)
        ),
        structures=structures,
        transitions={
            (t.source, t.target): dict(t.map) for t in data.transitions
        },
    )


def to_file(m: KripkeModel) -> KripkeModelFile:
    return KripkeModelFile(
        nodes=list(m.frame.nodes),
        edges=sorted(m.frame.rel),
        domains={p: list(s.domain) for p, s in m.structures.items()},
        eq_classes={
            p: [sorted(cls) for cls in s.classes]
            for p, s in m.structures.items()
            if s.classes
        },
        membership={
            p: sorted(s.membership)
            for p, s in m.structures.items()
            if s.membership
        },
        transitions=[
            TransitionFile(source=p, target=q, map=dict(iota))
            for (p, q), iota in sorted(m.transitions.items())
        ],
    )


def load_model(path: Path) -> KripkeModel:
    return to_model(KripkeModelFile.model_validate_json(path.read_text()))


def dump_model(m: KripkeModel, path: Path) -> None:
    path.write_text(to_file(m).model_dump_json(indent=2))
