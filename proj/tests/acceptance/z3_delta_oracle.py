# Copyright 2026 The Entropic Authors
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

"""Decides an exported entropic-delta SMT-LIB file with z3 (QF_NRA).

Exit status: 0 sat, 1 unsat, 2 unknown, 3 oracle unavailable or bad input.
"""

import sys


def main(argv):
    if len(argv) != 2:
        print("usage: z3_delta_oracle.py FILE.smt2")
        return 3
    try:
        import z3
    except ImportError:
        print("unavailable: z3 python bindings not installed")
        return 3
    try:
        constraints = z3.parse_smt2_file(argv[1])
    except z3.Z3Exception as e:
        print(f"error: {e}")
        return 3
    solver = z3.SolverFor("QF_NRA")
    solver.add(constraints)
    result = solver.check()
    if result == z3.sat:
        model = solver.model()
        atoms = sorted((d for d in model.decls() if d.name().startswith("p_")),
                       key=lambda d: int(d.name()[2:]))
        values = ", ".join(f"{d.name()}={model[d]}" for d in atoms)
        print(f"sat {values}")
        return 0
    if result == z3.unsat:
        print("unsat")
        return 1
    print(f"unknown: {solver.reason_unknown()}")
    return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv))
