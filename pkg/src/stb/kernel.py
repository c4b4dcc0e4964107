"""Kernel selection: compiled extension if available, pure Python otherwise.

Set STB_KERNEL=py or STB_KERNEL=c to force a choice; forcing c raises if the
extension is missing.
"""

import os

_choice = os.environ.get("STB_KERNEL", "").lower()

if _choice in ("py", "python"):
    from . import _pykernel as impl
elif _choice in ("c", "cython"):
    from . import _speedups as impl
else:
    try:
        from . import _speedups as impl
    except ImportError:
        from . import _pykernel as impl

name = impl.name
check_shape = impl.check_shape
pack = impl.pack
unpack = impl.unpack
PackedSet = impl.PackedSet
contains = impl.contains
insert = impl.insert
closure = impl.closure
conj_classes = impl.conj_classes
centralizer_count = impl.centralizer_count
export_array = impl.export_array
from_array = impl.from_array
codes_list = impl.codes_list
