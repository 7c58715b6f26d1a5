# Copyright 2026 The rotkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Two-axis rotation sequences: gate decomposition, Bloch-sphere state
transfer and tilted-axis gate errors.

The heavy lifting lives in the compiled ``_rotkit`` extension; this package
re-exports it.  Angles cross the boundary in units of pi.
"""

try:
    from . import _rotkit as _impl  # installed wheel layout
except ImportError:  # build-tree layout: extension on sys.path
    import _rotkit as _impl

__all__ = [
    "FrameError",
    "NumericDomainError",
    "average_tilt_error",
    "cnot_error",
    "cnot_matrix",
    "decompose",
    "gate_fidelity",
    "gate_fidelity4",
    "gate_from_generator",
    "gate_matrix",
    "gate_names",
    "ising_flow",
    "lowenthal_bound",
    "lowenthal_bound_kappa",
    "reconstruct",
    "reconstruct_su2",
    "rotation_about_axis",
    "so3_from_generator",
    "so3_from_su2",
    "standard_euler_angles",
    "standard_gate_error",
    "su2_exp",
    "su2_from_params",
    "table1",
    "threshold_kappa",
    "tilt_model",
    "tilted_z_fidelity",
    "transfer",
]

for _name in __all__:
    globals()[_name] = getattr(_impl, _name)
del _name, _impl

__version__ = "0.1.0"
