"""Black-box fuzz testing toolkit: random input generation, a pseudo-terminal
driver, a campaign runner with crash/hang detection, and reporting."""

__version__ = "0.1.0"
