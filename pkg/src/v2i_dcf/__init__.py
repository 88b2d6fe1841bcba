"""Performance models for 802.11 DCF uplinks at roadside access points.

The package couples three layers: a macroscopic road-traffic model that
yields the number of vehicles contending under one access point, a
saturation backoff model that solves the per-slot transmission /
collision-probability fixed point, and a finite-buffer packet queue that
turns channel-event probabilities into blocking, throughput and delay.
A slotted discrete-event simulator provides independent ground truth for
the backoff model, and an exhaustive optimizer selects the retry limit
that maximizes throughput under a delay bound.
"""

__version__ = "0.1.0"
