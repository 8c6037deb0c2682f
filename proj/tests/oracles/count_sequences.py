#!/usr/bin/env python3
# Copyright 2026 The Kinforge Authors
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

# Brute-force count of distinct step sequences on the regular family.
# Shares no code with the C++ library: it tries all 4^k sequences, folds
# them with its own copy of the table and checks each one is walkable as
# a simple path. Output matches `kinforge count-paths`.

import argparse
import itertools

U = None
TABLE = {
    ("parent", "P"): "grandparent", ("parent", "C"): "spouse",
    ("parent", "S"): "parent-in-law", ("parent", "B"): "parent",
    ("child", "P"): "sibling", ("child", "C"): "grandchild",
    ("child", "S"): "child", ("child", "B"): U,
    ("spouse", "P"): "parent", ("spouse", "C"): "child-in-law",
    ("spouse", "S"): U, ("spouse", "B"): U,
    ("sibling", "P"): U, ("sibling", "C"): "child",
    ("sibling", "S"): U, ("sibling", "B"): "sibling",
    ("grandparent", "P"): U, ("grandparent", "C"): U,
    ("grandparent", "S"): U, ("grandparent", "B"): "grandparent",
    ("grandchild", "P"): U, ("grandchild", "C"): U,
    ("grandchild", "S"): "grandchild", ("grandchild", "B"): U,
    ("parent-in-law", "P"): "grandparent", ("parent-in-law", "C"): U,
    ("parent-in-law", "S"): "parent", ("parent-in-law", "B"): U,
    ("child-in-law", "P"): U, ("child-in-law", "C"): U,
    ("child-in-law", "S"): "child-in-law", ("child-in-law", "B"): U,
}
LIFT = {"P": "parent", "C": "child", "S": "spouse", "B": "sibling"}


def family(levels, children):
    """Head couple, every child married, `children` children per couple."""
    parents, spouse = {}, {}
    n = 1
    couples = [0]
    for _ in range(levels):
        nxt = []
        for p in couples:
            q = n
            n += 1
            spouse[p], spouse[q] = q, p
            for _ in range(children):
                parents[n] = {p, q}
                nxt.append(n)
                n += 1
        couples = nxt
    adj = {u: [] for u in range(n)}
    for c, ps in parents.items():
        for p in ps:
            adj[p].append((c, "P"))
            adj[c].append((p, "C"))
    for u, v in spouse.items():
        adj[u].append((v, "S"))
    for a, pa in parents.items():
        for b, pb in parents.items():
            if a != b and pa & pb:
                adj[a].append((b, "B"))
    return n, adj


def compose(seq):
    term = LIFT[seq[0]]
    for s in seq[1:]:
        term = TABLE[(term, s)]
        if term is None:
            return None
    return term


def walkable(n, adj, seq):
    def dfs(path, i):
        if i == len(seq):
            return True
        for v, s in adj[path[-1]]:
            if s == seq[i] and v not in path:
                path.append(v)
                if dfs(path, i + 1):
                    return True
                path.pop()
        return False
    return any(dfs([u], 0) for u in range(n))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmin", type=int, default=2)
    ap.add_argument("--kmax", type=int, default=8)
    ap.add_argument("--lmax", type=int, default=3)
    ap.add_argument("--children", type=int, default=3)
    args = ap.parse_args()
    n, adj = family(args.lmax, args.children)
    print("k,unique_paths,unique_paths_with_gender")
    for k in range(args.kmin, args.kmax + 1):
        plain = gendered = 0
        for seq in itertools.product("PCSB", repeat=k):
            term = compose(seq)
            if term is None or not walkable(n, adj, seq):
                continue
            plain += 1
            # a daughter-in-law has no label of her own
            gendered += 1 if term == "child-in-law" else 2
        print(f"{k},{plain},{gendered}")


if __name__ == "__main__":
    main()
