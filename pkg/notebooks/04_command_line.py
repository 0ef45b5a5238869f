# %% [markdown]
# # Driving the command line from Python
#
# ``main`` takes an argument list and returns the exit code, so the CLI can be
# scripted without a subprocess.

# %%
from springer_k.cli import main

main(["present", "--lambda", "3,1"])

# %%
main(["rank", "--lambda", "2,2,1"])

# %%
code = main(["verify", "--lambda", "2,1", "--suite", "all"])
print("exit code", code)
