#!/usr/bin/env python3
# Copyright 2026 The farsi-std Authors.
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

"""Regenerates data/presentation_forms.txt from the Unicode decomposition data.

Every Arabic presentation form whose compatibility decomposition, after the
base variant table is applied, consists only of standard repertoire letters is
emitted as an entry. Forms that decompose to marks or spaces are skipped.
"""

import pathlib
import sys
import unicodedata

ROOT = pathlib.Path(__file__).resolve().parent.parent
POSITIONAL = ("<isolated>", "<initial>", "<medial>", "<final>")


def read_table(path):
    table = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        src, *repl = line.split()
        table[int(src, 16)] = [int(r, 16) for r in repl]
    return table


def read_repertoire(path):
    members = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            members.add(int(line.split()[0], 16))
    return members


def main():
    base = read_table(ROOT / "data" / "base_mapping.txt")
    letters = {cp for cp in read_repertoire(ROOT / "data" / "repertoire.txt")
               if unicodedata.category(chr(cp)) == "Lo"}
    out = [
        "# Extended table: Arabic presentation forms (glyph-level code points) to",
        "# their logical letter sequences. Generated by",
        "# tools/gen_presentation_forms.py from Unicode %s decomposition data."
        % unicodedata.unidata_version,
        "# version: 1",
    ]
    ranges = list(range(0xFB50, 0xFE00)) + list(range(0xFE70, 0xFF00))
    for cp in ranges:
        decomposition = unicodedata.decomposition(chr(cp)).split()
        if not decomposition or decomposition[0] not in POSITIONAL:
            continue
        seq = []
        for h in decomposition[1:]:
            seq.extend(base.get(int(h, 16), [int(h, 16)]))
        if not all(c in letters for c in seq):
            continue
        out.append("%04X %s" % (cp, " ".join("%04X" % c for c in seq)))
    (ROOT / "data" / "presentation_forms.txt").write_text(
        "\n".join(out) + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
