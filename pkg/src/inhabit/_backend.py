"""Select the compiled kernel when it is built, else the pure-Python one.

Set ``INHABIT_PURE=1`` to force the pure-Python kernel.
"""

import os

if os.environ.get("INHABIT_PURE"):
    from . import _kernel as kernel
else:
    try:
        from . import _ckernel as kernel
    except ImportError:
        from . import _kernel as kernel

NAME = "compiled" if kernel.__name__.endswith("_ckernel") else "python"
