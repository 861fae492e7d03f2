"""intentmesh: multi-agent intent-to-network orchestration.

Natural-language intents are interpreted by two redundant junior agents,
cross-checked and validated by a senior agent with bounded retries,
instantiated in an emulated network, routed by a policy-selected SPF/DUAL
engine, and scored by a built-in translation-quality benchmark.
"""

__version__ = "0.1.0"
