# Copyright 2026 the irredpoly authors
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

"""Pseudo-deterministic canonical irreducible polynomials over finite fields.

The heavy lifting lives in the compiled ``_core`` extension; polynomials
cross the boundary in the same text form the CLI uses (space-separated
ascending coefficients over F_p, bracketed coordinate vectors over
extensions).
"""

from ._core import (
    RECORD_FORMAT_VERSION,
    BudgetExceeded,
    InvalidInput,
    VerificationFailure,
    __version__,
    construct,
    construct_record,
    count_irreducibles,
    factor,
    is_irreducible,
    qnr_chain,
    random_irreducible,
)

__all__ = [
    "RECORD_FORMAT_VERSION",
    "BudgetExceeded",
    "InvalidInput",
    "VerificationFailure",
    "__version__",
    "construct",
    "construct_record",
    "count_irreducibles",
    "factor",
    "is_irreducible",
    "qnr_chain",
    "random_irreducible",
]
