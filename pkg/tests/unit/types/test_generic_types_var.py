import numpy as np
import pytest

from trendcast.types.generic_types_var import BoolArray, FloatArray, IndexLike, IntArray


@pytest.mark.describe("🧪  GenericTypesVar")
class TestGenericTypesVar:
    @pytest.mark.it("✅  Should accept a scalar index or an index array as IndexLike")
    def test_index_like(self) -> None:
        def identity(index: IndexLike) -> IndexLike:
            return index

        assert identity(3) == 3
        assert identity(np.arange(3)).tolist() == [0, 1, 2]

    @pytest.mark.it("✅  Should constrain IndexLike to int and integer arrays")
    def test_index_like_constraints(self) -> None:
        assert IndexLike.__constraints__ == (int, IntArray)

    @pytest.mark.it("✅  Should describe float, int and bool arrays")
    def test_array_aliases(self) -> None:
        def total(values: FloatArray, mask: BoolArray) -> float:
            return float(values[mask].sum())

        assert total(np.array([1.0, 2.0, 4.0]), np.array([True, False, True])) == 5.0
