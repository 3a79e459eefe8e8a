from hf_workbench.resources.hfset.model import HFSet
from hf_workbench.resources.shared.repository import MemoRepository


class StageRepository(MemoRepository[tuple, HFSet]):
    """Memo table for closure steps and 𝕃 stages, keyed by kind."""

    def get_stage(self, alpha: HFSet, with_aux: bool) -> HFSet | None:
        return self.get(('ll', alpha, with_aux))

    def put_stage(self, alpha: HFSet, with_aux: bool, stage: HFSet) -> HFSet:
        return self.put(('ll', alpha, with_aux), stage)

    def get_closure(self, b: HFSet, with_aux: bool) -> HFSet | None:
        return self.get(('d', b, with_aux))

    def put_closure(self, b: HFSet, with_aux: bool, value: HFSet) -> HFSet:
        return self.put(('d', b, with_aux), value)


_repository = StageRepository()


def get_stage_repository() -> StageRepository:
    return _repository
