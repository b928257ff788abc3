#!/usr/bin/env python3
"""Generate a synthetic dataset on disk, ready for the CLI.

Examples:
    python scripts/make_synthetic_dataset.py --out data/synthetic --profile bibliographic
    python scripts/make_synthetic_dataset.py --out /tmp/small --profile random --instants 8 --seed 3
"""

import argparse
import random

from evoskyline.ingest import write_dataset
from evoskyline.synth import bibliographic_graph, random_graph


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", required=True)
    parser.add_argument("--profile", choices=["bibliographic", "random"], default="bibliographic")
    parser.add_argument("--instants", type=int, default=21)
    parser.add_argument("--scale", type=float, default=1.0, help="size multiplier for the bibliographic profile")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if args.profile == "bibliographic":
        g = bibliographic_graph(args.seed, n_instants=args.instants, scale=args.scale)
    else:
        g = random_graph(
            random.Random(args.seed),
            max_instants=args.instants,
            max_nodes=30,
            max_edge_instants=120,
            n_values=3,
        )
    manifest = write_dataset(g, args.out)
    edge_instants = sum(te.length for te in g.edges.values())
    print(f"{len(g.nodes)} nodes, {len(g.edges)} edges, {edge_instants} edge-instants over {g.horizon_length} instants")
    print(f"manifest: {manifest}")


if __name__ == "__main__":
    main()
