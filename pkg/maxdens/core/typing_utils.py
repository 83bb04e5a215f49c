from typing import Union

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]
VectorLike = Union[FloatArray, list[float], tuple[float, ...]]
