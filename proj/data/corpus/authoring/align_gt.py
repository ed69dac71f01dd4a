# Copyright 2026 The askframe Authors
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

"""Builds minicorpus_gt.jsonl from the authored clause labels.

Each authored clause is located in the segmenter's output by text prefix,
searching forward within its message. Unlabelled clauses get empty labels.

usage: askframe segment minicorpus.jsonl > seg.jsonl
       python3 align_gt.py minicorpus_labels.json seg.jsonl > minicorpus_gt.jsonl
"""

import json
import sys


def main(labels_path, segments_path):
    labels = json.load(open(labels_path, encoding="utf-8"))
    clauses = {}
    order = []
    for line in open(segments_path, encoding="utf-8"):
        rec = json.loads(line)
        if rec["message_id"] not in clauses:
            clauses[rec["message_id"]] = []
            order.append(rec["message_id"])
        clauses[rec["message_id"]].append(rec)

    unknown = set(labels) - set(clauses)
    if unknown:
        sys.exit("labels for unknown messages: %s" % sorted(unknown))

    out = []
    for mid in order:
        recs = clauses[mid]
        gold = [[] for _ in recs]
        top = [False for _ in recs]
        pos = 0
        for item in labels.get(mid, []):
            prefix = item["clause"]
            while pos < len(recs) and not recs[pos]["text"].startswith(prefix):
                pos += 1
            if pos == len(recs):
                sys.exit("%s: no clause starts with %r" % (mid, prefix))
            gold[pos].extend(item["labels"])
            top[pos] = top[pos] or item.get("top", False)
        for i, rec in enumerate(recs):
            out.append({
                "message_id": mid,
                "clause_ordinal": rec["clause_ordinal"],
                "clause_text": rec["text"],
                "labels": gold[i],
                "top_ask": top[i],
            })
    for rec in out:
        sys.stdout.write(json.dumps(rec, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    main(sys.argv[1], sys.argv[2])
