# cython: language_level=3, annotation_typing=False, binding=False
# cython: boundscheck=False, wraparound=False, infer_types=True, always_allow_keywords=False
# Compiled build of the pure-Python kernel; the source of truth is _kernel.py.
include "_kernel.py"
