# %% [markdown]
# # Command line and catalogue check
#
# The same pipeline is exposed as the `powergraph` command.
# `main` takes an argument list, so it can be driven from Python too.

# %%
import tempfile
from pathlib import Path

from powergraph.cli import main

main(["gen-group", "q", "3"])

# %%
path = Path(tempfile.mkdtemp()) / "d6.graph"
main(["power-graph", "dihedral", "6", "--out", str(path)])
main(["reconstruct", str(path)])

# %% [markdown]
# `verify` runs every consistency check over the catalogue of small groups.

# %%
main(["verify", "--max-order", "16"])
